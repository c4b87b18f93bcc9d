//! Minimum `v`-apex separators of the blow-up graph, and the largest
//! pebble-shifting path family rooted at `v`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::blowup::{blowup_graph, BlowupGraph, BlowupNode};
use super::partition::zub_partition;
use crate::error::Result;
use crate::graph::flow::{FlowNetwork, INF};
use crate::graph::{max_disjoint_paths, min_vertex_separator, Graph, PathInGraph};
use crate::solver::Distribution;

/// Minimum separator of the blow-up graph for one base vertex, with its
/// Menger certificate and the derived base-graph separator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeparatorReport {
    pub v: usize,
    /// Separator in blow-up node ids.
    pub separator_nodes: Vec<usize>,
    pub separator_labels: Vec<BlowupNode>,
    /// Units of the separator plus every big whose copies all lie in it.
    pub base_separator: Vec<usize>,
    /// Pairwise internally disjoint root-apex paths, in node ids.
    pub paths: Vec<PathInGraph>,
    /// `|paths| == |separator|` and the separator really separates.
    pub menger_certified: bool,
    /// Every root-to-copy path meets the separator.
    pub separates_copies: bool,
    /// A copy class meeting the separator lies inside it.
    pub classes_closed: bool,
    /// The flow cut split a copy class and was replaced by a class-closed one.
    pub repaired: bool,
    #[serde(skip)]
    pub blowup: Option<BlowupGraph>,
}

impl SeparatorReport {
    pub fn size(&self) -> usize {
        self.separator_nodes.len()
    }
}

/// Nodes reachable from `start` without entering `removed`.
fn reachable_avoiding(g: &Graph, start: usize, removed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] && !removed[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn classes_closed(bg: &BlowupGraph, in_cut: &[bool]) -> bool {
    bg.classes.values().all(|class| {
        let hit = class.iter().filter(|&&c| in_cut[c]).count();
        hit == 0 || hit == class.len()
    })
}

/// Minimum root-apex separator that takes each copy class whole or not at
/// all, found on the network where a class is one node of capacity `|A_b|`.
pub(crate) fn class_closed_min_cut(bg: &BlowupGraph) -> Vec<usize> {
    let g = &bg.graph;
    // group id per node: a class shares one group, everyone else their own
    let mut group = vec![usize::MAX; g.n()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for class in bg.classes.values() {
        for &c in class {
            group[c] = members.len();
        }
        members.push(class.clone());
    }
    for (node, slot) in group.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = members.len();
            members.push(vec![node]);
        }
    }
    let groups = members.len();
    let (root, apex) = (group[bg.root()], group[bg.apex()]);
    let mut net = FlowNetwork::new(2 * groups);
    for (gid, nodes) in members.iter().enumerate() {
        let cap = if gid == root || gid == apex {
            INF
        } else {
            nodes.len() as u64
        };
        net.add_edge(2 * gid, 2 * gid + 1, cap);
    }
    let mut seen_pairs = std::collections::HashSet::new();
    for (a, b) in g.edges() {
        let (ga, gb) = (group[a], group[b]);
        if ga != gb && seen_pairs.insert((ga.min(gb), ga.max(gb))) {
            net.add_edge(2 * ga + 1, 2 * gb, INF);
            net.add_edge(2 * gb + 1, 2 * ga, INF);
        }
    }
    net.max_flow(2 * root + 1, 2 * apex);
    let side = net.source_side(2 * root + 1);
    let mut cut: Vec<usize> = (0..groups)
        .filter(|&gid| side[2 * gid] && !side[2 * gid + 1])
        .flat_map(|gid| members[gid].iter().copied())
        .collect();
    cut.sort_unstable();
    cut
}

fn report_from_cut(bg: BlowupGraph, mut cut: Vec<usize>, paths: Vec<PathInGraph>, repaired: bool) -> SeparatorReport {
    cut.sort_unstable();
    let g = &bg.graph;
    let mut in_cut = vec![false; g.n()];
    for &c in &cut {
        in_cut[c] = true;
    }
    let reach = reachable_avoiding(g, bg.root(), &in_cut);
    let separates = !reach[bg.apex()];
    let separates_copies = bg.copies().all(|c| in_cut[c] || !reach[c]);
    let closed = classes_closed(&bg, &in_cut);

    let mut base_separator: Vec<usize> = cut
        .iter()
        .filter_map(|&c| match bg.nodes[c] {
            BlowupNode::Unit(u) => Some(u),
            _ => None,
        })
        .collect();
    for (&b, class) in &bg.classes {
        if !class.is_empty() && class.iter().all(|&c| in_cut[c]) {
            base_separator.push(b);
        }
    }
    base_separator.sort_unstable();

    let disjoint = {
        let mut used = vec![0usize; g.n()];
        for p in &paths {
            for &x in p.interior() {
                used[x] += 1;
            }
        }
        used.iter().all(|&u| u <= 1)
    };
    SeparatorReport {
        v: bg.base,
        separator_labels: cut.iter().map(|&c| bg.nodes[c]).collect(),
        menger_certified: separates && disjoint && paths.len() == cut.len() && paths.iter().all(|p| p.is_valid_in(g)),
        separator_nodes: cut,
        base_separator,
        paths,
        separates_copies,
        classes_closed: closed,
        repaired,
        blowup: Some(bg),
    }
}

/// Minimum separator between `v` and the apex of its blow-up graph.
///
/// The separator is the source-side minimum cut of the vertex-split flow.
/// Should it split a copy class, it is replaced by the cut of the network in
/// which each class is a single node of capacity `|A_b|`; the replacement is
/// re-verified for separation and size.
pub fn min_separator(g: &Graph, d: &Distribution, v: usize) -> Result<SeparatorReport> {
    let bg = blowup_graph(g, d, v)?;
    let (root, apex) = (bg.root(), bg.apex());
    let paths = max_disjoint_paths(&bg.graph, root, apex, &[])?;
    let cut = min_vertex_separator(&bg.graph, root, apex, &[])?;
    let mut in_cut = vec![false; bg.graph.n()];
    for &c in &cut {
        in_cut[c] = true;
    }
    if classes_closed(&bg, &in_cut) {
        Ok(report_from_cut(bg, cut, paths, false))
    } else {
        let closed = class_closed_min_cut(&bg);
        Ok(report_from_cut(bg, closed, paths, true))
    }
}

/// Largest family of paths from `v` to bigs with at most `floor(phi(b)/2)`
/// paths ending at each big `b`, interiors inside units and bigs, and no
/// shared vertex other than `v` and a common endpoint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathFamily {
    pub v: usize,
    pub paths: Vec<PathInGraph>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks the four family conditions against `g` and `d`.
    pub fn is_valid(&self, g: &Graph, d: &Distribution) -> bool {
        let counts = d.counts();
        let mut ends = vec![0u32; g.n()];
        let mut interior_use = vec![0usize; g.n()];
        for p in &self.paths {
            if !p.is_valid_in(g) || p.start() != self.v || p.is_empty() {
                return false;
            }
            let end = p.end();
            if counts[end] < 2 || p.interior().iter().any(|&x| counts[x] == 0) {
                return false;
            }
            ends[end] += 1;
            for &x in p.interior() {
                interior_use[x] += 1;
            }
        }
        (0..g.n()).all(|x| {
            let ending = ends[x] > 0;
            ends[x] <= counts[x] / 2 && interior_use[x] <= 1 && !(ending && interior_use[x] > 0)
        })
    }
}

/// The family behind [`claim1_bound`].
///
/// Flow network: `v` is the source; each unit is a unit-capacity vertex;
/// each big `b` has an entry node of capacity `c = floor(phi(b)/2)` that
/// either passes one unit of flow through `b` or sends up to `c` to the sink.
/// A flow path that passes through `b` while others end there is cut short
/// at `b`, which the entry capacity keeps within `c`.
pub fn claim1_family(g: &Graph, d: &Distribution, v: usize) -> Result<PathFamily> {
    g.check_vertex(v)?;
    let part = zub_partition(g, d)?;
    let counts = d.counts();
    let n = g.n();
    // nodes: in(x) = 3x, mid(x) = 3x + 1, out(x) = 3x + 2, sink = 3n
    let (inn, mid, out) = (|x: usize| 3 * x, |x: usize| 3 * x + 1, |x: usize| 3 * x + 2);
    let sink = 3 * n;
    let source = out(v);
    let allowed = |x: usize| x != v && counts[x] > 0;

    let mut net = FlowNetwork::new(3 * n + 1);
    for x in (0..n).filter(|&x| allowed(x)) {
        if part.is_big(x) {
            let c = u64::from(counts[x] / 2);
            net.add_edge(inn(x), mid(x), c);
            net.add_edge(mid(x), sink, c);
            net.add_edge(mid(x), out(x), 1);
        } else {
            net.add_edge(inn(x), mid(x), 1);
            net.add_edge(mid(x), out(x), 1);
        }
    }
    for x in (0..n).filter(|&x| x == v || allowed(x)) {
        for &y in g.neighbors(x) {
            if allowed(y) {
                net.add_edge(out(x), inn(y), INF);
            }
        }
    }
    let value = net.max_flow(source, sink);

    let mut used = vec![0u64; net.arc_count()];
    let mut paths = Vec::with_capacity(value as usize);
    for _ in 0..value {
        let mut walk = vec![v];
        let mut node = source;
        while node != sink {
            let arc = net
                .arcs_from(node)
                .iter()
                .copied()
                .find(|&a| net.is_forward(a) && net.flow(a) > used[a])
                .expect("flow conservation");
            used[arc] += 1;
            node = net.head(arc);
            if node != sink && node % 3 == 0 {
                let x = node / 3;
                match walk.iter().position(|&w| w == x) {
                    Some(i) => walk.truncate(i + 1),
                    None => walk.push(x),
                }
            }
        }
        paths.push(walk);
    }
    // cut short any path running through a big that other paths end at
    let mut ends = vec![false; n];
    for p in &paths {
        ends[*p.last().expect("non-empty")] = true;
    }
    for p in &mut paths {
        if let Some(i) = p[1..p.len() - 1].iter().position(|&x| ends[x]) {
            p.truncate(i + 2);
        }
    }
    let family = PathFamily {
        v,
        paths: paths.into_iter().map(PathInGraph::new).collect(),
    };
    debug_assert!(family.is_valid(g, d), "{family:?}");
    Ok(family)
}

/// Size of the largest pebble-shifting path family rooted at `v`.
pub fn claim1_bound(g: &Graph, d: &Distribution, v: usize) -> Result<usize> {
    claim1_family(g, d, v).map(|f| f.len())
}
