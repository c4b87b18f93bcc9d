//! Named graphs, the two six-vertex Class 1 examples, path blow-ups and
//! seeded `G(n, p)` samples.

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedKind {
    Complete,
    Path,
    Cycle,
}

pub fn named_graph(kind: NamedKind, n: usize) -> Result<Graph> {
    let min = match kind {
        NamedKind::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return Err(Error::Invalid(format!(
            "{kind:?} needs at least {min} vertices, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = match kind {
        NamedKind::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        NamedKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        NamedKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    Graph::new(n, edges)
}

pub fn complete(n: usize) -> Graph {
    named_graph(NamedKind::Complete, n).expect("n >= 1")
}

pub fn path(n: usize) -> Graph {
    named_graph(NamedKind::Path, n).expect("n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    named_graph(NamedKind::Cycle, n).expect("n >= 3")
}

/// The two 2-connected diameter-2 Class 1 graphs on six vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exceptional {
    G1,
    G2,
}

/// `G1` is the 6-cycle `x1..x6` plus chords `{x1,x3}` and `{x3,x5}`; `G2` adds
/// `{x1,x5}`. Vertex `x_i` is index `i - 1`.
pub fn exceptional_graph(which: Exceptional) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4)];
    if which == Exceptional::G2 {
        edges.push((0, 4));
    }
    Graph::new(6, edges).expect("fixed edge list")
}

/// Class sizes of a path blow-up: class `i` is an independent set joined
/// completely to classes `i - 1` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec {
    class_sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(class_sizes: Vec<usize>) -> Result<Self> {
        if class_sizes.len() < 2 {
            return Err(Error::Invalid("a blow-up needs at least two classes".into()));
        }
        if class_sizes.contains(&0) {
            return Err(Error::Invalid("blow-up class sizes must be positive".into()));
        }
        Ok(BlowupSpec { class_sizes })
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Vertex ranges of each class, classes laid out consecutively.
    pub fn classes(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.class_sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }
}

pub fn path_blowup(spec: &BlowupSpec) -> Graph {
    let classes = spec.classes();
    let n = classes.last().map_or(0, |r| r.end);
    let edges = classes
        .windows(2)
        .flat_map(|w| {
            let (a, b) = (w[0].clone(), w[1].clone());
            a.flat_map(move |u| b.clone().map(move |v| (u, v)))
        })
        .collect::<Vec<_>>();
    Graph::new(n, edges).expect("classes are disjoint")
}

/// Uniform double in `[0, 1)` from the top 53 bits of the next ChaCha8 word.
fn unit_interval(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A `G(n, p)` sample.
///
/// The generator is ChaCha8 seeded with `seed` through `seed_from_u64`. Pairs
/// `(u, v)`, `u < v`, are visited in lexicographic order and each consumes one
/// 64-bit word; the pair is an edge iff the derived uniform double is `< p`.
/// Consequently two samples with the same seed are nested: raising `p` only
/// adds edges.
pub fn gnp_sample(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_interval(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, vertex_connectivity};

    #[test]
    fn named_examples() {
        let c6 = named_graph(NamedKind::Cycle, 6).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(named_graph(NamedKind::Complete, 4).unwrap().edge_count(), 6);
        assert_eq!(path(3).edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(named_graph(NamedKind::Cycle, 2).is_err());
        assert!(named_graph(NamedKind::Path, 0).is_err());
    }

    #[test]
    fn exceptional_examples() {
        let g1 = exceptional_graph(Exceptional::G1);
        let g2 = exceptional_graph(Exceptional::G2);
        assert_eq!(g1.edge_count(), 8);
        assert_eq!(g1.degree_sequence(), vec![2, 2, 2, 3, 3, 4]);
        assert_eq!(g2.edge_count(), 9);
        assert!(g1.is_subgraph_of(&g2));
        for g in [&g1, &g2] {
            assert_eq!(g.diameter().unwrap(), Some(2));
            assert_eq!(vertex_connectivity(g).unwrap(), 2);
        }
        assert!(!is_isomorphic(&g1, &g2));
    }

    #[test]
    fn blowup_examples() {
        let unit = path_blowup(&BlowupSpec::new(vec![1, 1, 1]).unwrap());
        assert_eq!(unit, path(3));
        let c4 = path_blowup(&BlowupSpec::new(vec![2, 2]).unwrap());
        assert!(is_isomorphic(&c4, &cycle(4)));
        let b = path_blowup(&BlowupSpec::new(vec![1, 3, 1]).unwrap());
        assert_eq!(b.diameter().unwrap(), Some(2));
        assert_eq!(vertex_connectivity(&b).unwrap(), 2);
        assert!(BlowupSpec::new(vec![3]).is_err());
        assert!(BlowupSpec::new(vec![1, 0]).is_err());
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp_sample(5, 0.0, 17).unwrap().edge_count(), 0);
        assert_eq!(gnp_sample(5, 1.0, 17).unwrap(), complete(5));
        assert!(gnp_sample(5, 1.5, 0).is_err());
        assert!(gnp_sample(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn gnp_mean_edge_count() {
        let total: usize = (0..1000).map(|s| gnp_sample(10, 0.5, s).unwrap().edge_count()).sum();
        let mean = total as f64 / 1000.0;
        assert!((mean - 22.5).abs() <= 1.0, "mean {mean}");
    }

    #[test]
    fn gnp_is_reproducible_and_nested() {
        let a = gnp_sample(12, 0.3, 99).unwrap();
        assert_eq!(a, gnp_sample(12, 0.3, 99).unwrap());
        assert!(a.is_subgraph_of(&gnp_sample(12, 0.6, 99).unwrap()));
    }
}
