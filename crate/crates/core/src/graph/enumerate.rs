use super::Graph;
use crate::error::{Error, Result};

/// Largest order [`enumerate_graphs`] accepts without an explicit override.
pub const ENUMERATION_GUARD: usize = 6;

/// Every labelled simple graph on `n` vertices, exactly once.
///
/// Graph number `k` contains the `i`-th vertex pair (pairs in lexicographic
/// order) iff bit `i` of `k` is set.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl GraphEnumerator {
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("pairs are distinct"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumerator {}

pub fn enumerate_graphs(n: usize) -> Result<GraphEnumerator> {
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            what: "graph order",
            value: n,
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(enumerate_graphs_unguarded(n))
}

/// Like [`enumerate_graphs`] without the size guard. Panics past `n = 11`
/// where the count no longer fits the 64-bit mask.
pub fn enumerate_graphs_unguarded(n: usize) -> GraphEnumerator {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertex pairs to enumerate");
    GraphEnumerator {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(6).unwrap().count(), 32768);
        assert!(enumerate_graphs(7).is_err());
        assert_eq!(enumerate_graphs_unguarded(7).total(), 1 << 21);
    }

    #[test]
    fn all_distinct_and_valid() {
        let all: Vec<Graph> = enumerate_graphs(4).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 64);
        for g in &all {
            let degree_sum: usize = (0..4).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count());
            for (u, v) in g.edges() {
                assert!(g.has_edge(v, u));
            }
        }
    }
}
