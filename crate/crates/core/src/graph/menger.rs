//! Vertex-disjoint paths, minimum vertex separators and vertex connectivity.
//!
//! Everything here goes through the vertex-split digraph: vertex `v` becomes
//! `v_in = 2v` and `v_out = 2v + 1` joined by an arc of capacity 1 (0 for
//! forbidden vertices, unbounded for the terminals). Graph edges become
//! unbounded arcs `u_out -> w_in` in both directions, so finite cuts consist
//! of vertex arcs only.

use super::flow::{FlowNetwork, INF};
use super::{Graph, PathInGraph};
use crate::error::{Error, Result};

fn vin(v: usize) -> usize {
    2 * v
}

fn vout(v: usize) -> usize {
    2 * v + 1
}

struct Split {
    net: FlowNetwork,
    value: u64,
}

fn split_flow(g: &Graph, s: usize, t: usize, forbidden: &[usize]) -> Split {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &f in forbidden {
        blocked[f] = true;
    }
    let mut net = FlowNetwork::new(2 * n);
    for (v, &is_blocked) in blocked.iter().enumerate() {
        let cap = if v == s || v == t {
            INF
        } else if is_blocked {
            0
        } else {
            1
        };
        net.add_edge(vin(v), vout(v), cap);
    }
    for (u, w) in g.edges() {
        if u == s && w == t || u == t && w == s {
            // the direct edge carries exactly one path
            net.add_edge(vout(s), vin(t), 1);
            continue;
        }
        net.add_edge(vout(u), vin(w), INF);
        net.add_edge(vout(w), vin(u), INF);
    }
    let value = net.max_flow(vout(s), vin(t));
    Split { net, value }
}

fn validate_pair(g: &Graph, s: usize, t: usize, forbidden: &[usize]) -> Result<()> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    for &f in forbidden {
        g.check_vertex(f)?;
    }
    if s == t {
        return Err(Error::Invalid(format!("source and sink coincide ({s})")));
    }
    if forbidden.contains(&s) || forbidden.contains(&t) {
        return Err(Error::Invalid("an endpoint is forbidden".into()));
    }
    Ok(())
}

/// A maximum family of internally disjoint `s`-`t` paths avoiding `forbidden`.
///
/// The size equals the minimum `s`-`t` vertex cut of `g - forbidden` (plus one
/// for a direct edge). Each path is checked against `g` before it is returned.
pub fn max_disjoint_paths(g: &Graph, s: usize, t: usize, forbidden: &[usize]) -> Result<Vec<PathInGraph>> {
    validate_pair(g, s, t, forbidden)?;
    let split = split_flow(g, s, t, forbidden);
    let net = split.net;

    // Peel unit paths off the flow, loop-erasing any circulation picked up on the way.
    let mut used = vec![0u64; net.arc_count()];
    let mut paths = Vec::with_capacity(split.value as usize);
    for _ in 0..split.value {
        let mut walk = vec![s];
        let mut node = vout(s);
        while node != vin(t) {
            let arc = net
                .arcs_from(node)
                .iter()
                .copied()
                .find(|&a| net.is_forward(a) && net.flow(a) > used[a])
                .expect("flow conservation");
            used[arc] += 1;
            node = net.head(arc);
            if node.is_multiple_of(2) {
                let v = node / 2;
                match walk.iter().position(|&w| w == v) {
                    Some(i) => walk.truncate(i + 1),
                    None => walk.push(v),
                }
            }
        }
        paths.push(PathInGraph::new(walk));
    }
    for p in &paths {
        assert!(p.is_valid_in(g), "flow decomposition produced an invalid path {p:?}");
        assert!(p.start() == s && p.end() == t);
        assert!(p.vertices().iter().all(|v| !forbidden.contains(v)));
    }
    Ok(paths)
}

/// A minimum set of vertices (excluding `s`, `t` and `forbidden`) whose removal
/// separates non-adjacent `s` and `t` in `g - forbidden`. The source-closest
/// minimum cut is returned.
pub fn min_vertex_separator(g: &Graph, s: usize, t: usize, forbidden: &[usize]) -> Result<Vec<usize>> {
    validate_pair(g, s, t, forbidden)?;
    if g.has_edge(s, t) {
        return Err(Error::Invalid(format!(
            "{s} and {t} are adjacent; no vertex separator exists"
        )));
    }
    let split = split_flow(g, s, t, forbidden);
    let side = split.net.source_side(vout(s));
    let cut: Vec<usize> = (0..g.n()).filter(|&v| side[vin(v)] && !side[vout(v)]).collect();
    debug_assert_eq!(cut.len() as u64, split.value);
    Ok(cut)
}

/// Minimum number of vertices whose removal disconnects `g` (or leaves a
/// single vertex). Complete graphs get `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid("vertex connectivity needs at least 2 vertices".into()));
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let value = split_flow(g, s, t, &[]).value as usize;
            best = best.min(value);
            if best == 0 {
                return Ok(0);
            }
        }
    }
    Ok(best)
}
