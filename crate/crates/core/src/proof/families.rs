//! Greedy selection of well-separated bigs and the terminal path families
//! hanging off them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::partition::zub_partition;
use super::separator::min_separator;
use crate::error::{Error, Result};
use crate::graph::{max_disjoint_paths, Graph, PathInGraph};
use crate::solver::Distribution;

/// Base-graph separators `S_b` keyed by vertex.
pub type Separators = BTreeMap<usize, Vec<usize>>;

pub(crate) fn separators_for(g: &Graph, d: &Distribution, vertices: &[usize]) -> Result<Separators> {
    vertices
        .iter()
        .map(|&b| Ok((b, min_separator(g, d, b)?.base_separator)))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct B0Step {
    pub chosen: usize,
    /// Bigs dropped from consideration because they lie in `S_chosen`.
    pub removed: Vec<usize>,
    /// `phi(chosen) + sum of phi over S_chosen`.
    pub step_weight: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct B0Selection {
    pub order: Vec<usize>,
    pub steps: Vec<B0Step>,
    pub diameter: usize,
    /// `m * omega`, the pebbles on all bigs.
    pub big_total: u64,
    /// `2^(D + 2)`.
    pub step_bound: u64,
    /// Every step weight is below `step_bound`.
    pub steps_within_bound: bool,
    /// `q * 2^(D + 2) > m * omega`.
    pub count_bound_holds: bool,
    /// `j > i` implies `b_j` is not in `S_{b_i}`.
    pub pairwise_separated: bool,
}

impl B0Selection {
    pub fn q(&self) -> usize {
        self.order.len()
    }
}

pub(crate) fn pow2(exp: usize) -> Result<u64> {
    if exp >= 63 {
        return Err(Error::TooDeep(exp));
    }
    Ok(1u64 << exp)
}

pub(crate) fn select_b0_with(
    d: &Distribution,
    bigs: &[usize],
    diameter: usize,
    seps: &Separators,
) -> Result<B0Selection> {
    let counts = d.counts();
    let mut remaining: Vec<usize> = bigs.to_vec();
    let mut order = Vec::new();
    let mut steps = Vec::new();
    while let Some(&b) = remaining.first() {
        let s_b = &seps[&b];
        let removed: Vec<usize> = remaining[1..].iter().copied().filter(|x| s_b.contains(x)).collect();
        remaining.retain(|x| *x != b && !removed.contains(x));
        let step_weight = u64::from(counts[b]) + s_b.iter().map(|&x| u64::from(counts[x])).sum::<u64>();
        order.push(b);
        steps.push(B0Step {
            chosen: b,
            removed,
            step_weight,
        });
    }
    let step_bound = pow2(diameter + 2)?;
    let big_total: u64 = bigs.iter().map(|&b| u64::from(counts[b])).sum();
    let pairwise_separated = order
        .iter()
        .enumerate()
        .all(|(i, bi)| order[i + 1..].iter().all(|bj| !seps[bi].contains(bj)));
    Ok(B0Selection {
        steps_within_bound: steps.iter().all(|s| s.step_weight < step_bound),
        count_bound_holds: order.len() as u64 * step_bound > big_total,
        pairwise_separated,
        order,
        steps,
        diameter,
        big_total,
        step_bound,
    })
}

/// Greedy `B0`: take the smallest remaining big, discard the bigs in its
/// separator, repeat.
pub fn select_b0(g: &Graph, d: &Distribution) -> Result<B0Selection> {
    let part = zub_partition(g, d)?;
    if part.bigs.is_empty() {
        return Err(Error::Invalid(
            "distribution has no vertex with two or more pebbles".into(),
        ));
    }
    let diameter = g.diameter()?.ok_or(Error::Disconnected)?;
    let seps = separators_for(g, d, &part.bigs)?;
    select_b0_with(d, &part.bigs, diameter, &seps)
}

/// A path from a root in `B0` to its first vertex in `W ∪ Z`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TerminalPath {
    pub root: usize,
    pub terminal: usize,
    pub path: PathInGraph,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootFamily {
    pub root: usize,
    /// Size of the maximum internally disjoint root-`z0` family.
    pub disjoint_paths: usize,
    /// Paths dropped for meeting `S_root`.
    pub discarded: usize,
    /// `{root, z0}` is an edge, which an unreachable `z0` rules out.
    pub adjacent_to_z0: bool,
    pub paths: Vec<TerminalPath>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TerminalFamilies {
    pub z0: usize,
    /// Union of `S_b` over the roots.
    pub w: Vec<usize>,
    /// `|W ∪ Z|`.
    pub terminal_pool: usize,
    pub roots: Vec<RootFamily>,
}

impl TerminalFamilies {
    pub fn all_paths(&self) -> impl Iterator<Item = &TerminalPath> {
        self.roots.iter().flat_map(|r| r.paths.iter())
    }

    pub fn path_count(&self) -> usize {
        self.roots.iter().map(|r| r.paths.len()).sum()
    }

    /// Pairs of paths with distinct roots and a common terminal that share
    /// another vertex.
    pub fn disjointness_violations(&self) -> Vec<(TerminalPath, TerminalPath)> {
        let all: Vec<&TerminalPath> = self.all_paths().collect();
        let mut bad = Vec::new();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if a.root == b.root || a.terminal != b.terminal {
                    continue;
                }
                let shared = a.path.vertices().iter().any(|&x| x != a.terminal && b.path.contains(x));
                if shared {
                    bad.push(((*a).clone(), (*b).clone()));
                }
            }
        }
        bad
    }

    /// Largest number of distinct roots reaching one terminal.
    pub fn max_terminal_load(&self) -> usize {
        let mut load: BTreeMap<usize, std::collections::BTreeSet<usize>> = BTreeMap::new();
        for p in self.all_paths() {
            load.entry(p.terminal).or_default().insert(p.root);
        }
        load.values().map(|s| s.len()).max().unwrap_or(0)
    }
}

pub(crate) fn terminal_families_with(
    g: &Graph,
    d: &Distribution,
    b0: &[usize],
    z0: usize,
    seps: &Separators,
) -> Result<TerminalFamilies> {
    g.check_vertex(z0)?;
    let part = zub_partition(g, d)?;
    if !part.is_zero(z0) {
        return Err(Error::NotAZero(z0));
    }
    let mut w: Vec<usize> = b0.iter().flat_map(|b| seps[b].iter().copied()).collect();
    w.sort_unstable();
    w.dedup();
    let in_pool = |x: usize| part.is_zero(x) || w.binary_search(&x).is_ok();

    let mut roots = Vec::with_capacity(b0.len());
    for &b in b0 {
        g.check_vertex(b)?;
        let s_b = &seps[&b];
        let family = max_disjoint_paths(g, b, z0, &[])?;
        let disjoint_paths = family.len();
        let kept: Vec<PathInGraph> = family
            .into_iter()
            .filter(|p| !p.vertices().iter().any(|x| s_b.contains(x)))
            .collect();
        let discarded = disjoint_paths - kept.len();
        let paths = kept
            .iter()
            .map(|p| {
                let q = p.truncate_at(in_pool).expect("every path ends in z0");
                TerminalPath {
                    root: b,
                    terminal: q.end(),
                    path: q,
                }
            })
            .collect();
        roots.push(RootFamily {
            root: b,
            disjoint_paths,
            discarded,
            adjacent_to_z0: g.has_edge(b, z0),
            paths,
        });
    }
    Ok(TerminalFamilies {
        z0,
        terminal_pool: part.zeros.len() + w.len(),
        w,
        roots,
    })
}

/// For each root `b` in `b0`: a maximum family of internally disjoint
/// `b`-`z0` paths, minus those meeting `S_b`, each cut at its first vertex
/// (after `b`) in `W ∪ Z`.
pub fn terminal_families(g: &Graph, d: &Distribution, b0: &[usize], z0: usize) -> Result<TerminalFamilies> {
    let seps = separators_for(g, d, b0)?;
    terminal_families_with(g, d, b0, z0, &seps)
}
