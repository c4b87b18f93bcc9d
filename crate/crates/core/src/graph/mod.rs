//! Simple undirected graphs and the exact primitives built on them.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n` and every
//! adjacency list is kept sorted, so traversal order (and anything derived
//! from it, such as move certificates or disjoint-path families) is
//! deterministic.

mod enumerate;
pub(crate) mod flow;
mod io;
mod iso;
mod menger;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_graphs, enumerate_graphs_unguarded, GraphEnumerator, ENUMERATION_GUARD};
pub use io::{parse_edge_list, to_edge_list};
pub use iso::{automorphism_orbits, find_isomorphism, is_isomorphic};
pub use menger::{max_disjoint_paths, min_vertex_separator, vertex_connectivity};

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// A copy of this graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// True when every edge of `self` is an edge of `other` and both have the same order.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Whether two vertices are joined by an edge in the complement, i.e. the
    /// graph is complete iff no such pair exists.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Hop distances from `v`; `None` marks vertices in other components.
    pub fn distances(&self, v: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(v)?;
        Ok(self.bfs(v))
    }

    pub(crate) fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest distance between two vertices, `None` when the graph is disconnected.
    pub fn diameter(&self) -> Result<Option<usize>> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(best))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected component label per vertex, labelled in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if label[s] != usize::MAX {
                continue;
            }
            for (v, d) in self.bfs(s).into_iter().enumerate() {
                if d.is_some() {
                    label[v] = next;
                }
            }
            next += 1;
        }
        label
    }

    /// The subgraph induced by `keep`, together with the map from new to old indices.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut edge_count = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    if index[w] > i {
                        edge_count += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        (Graph { adj, edge_count }, keep.to_vec())
    }
}

/// A simple path `v0, ..., vl` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathInGraph(Vec<usize>);

impl PathInGraph {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathInGraph(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// True when consecutive vertices are adjacent in `g` and no vertex repeats.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// The prefix ending at the first vertex (after the start) satisfying `stop`.
    pub fn truncate_at<F: Fn(usize) -> bool>(&self, stop: F) -> Option<PathInGraph> {
        let pos = self.0.iter().skip(1).position(|&v| stop(v))?;
        Some(PathInGraph(self.0[..pos + 2].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn distances_examples() {
        let k4 = complete(4);
        assert_eq!(k4.distances(0).unwrap(), vec![Some(0), Some(1), Some(1), Some(1)]);
        assert_eq!(path(3).distances(0).unwrap(), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(Graph::empty(2).distances(0).unwrap(), vec![Some(0), None]);
        assert!(path(3).distances(3).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete(6).diameter().unwrap(), Some(1));
        assert_eq!(path(3).diameter().unwrap(), Some(2));
        assert_eq!(Graph::empty(2).diameter().unwrap(), None);
        assert_eq!(Graph::empty(0).diameter(), Err(Error::EmptyGraph));
        for n in 2..9 {
            assert_eq!(complete(n).diameter().unwrap(), Some(1));
            assert_eq!(path(n).diameter().unwrap(), Some(n - 1));
        }
    }

    #[test]
    fn path_helpers() {
        let p = PathInGraph::new(vec![0, 1, 2]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.interior(), &[1]);
        assert!(p.is_valid_in(&path(3)));
        assert!(!PathInGraph::new(vec![0, 2]).is_valid_in(&path(3)));
        assert!(!PathInGraph::new(vec![0, 1, 0]).is_valid_in(&path(3)));
        assert_eq!(p.truncate_at(|v| v == 1), Some(PathInGraph::new(vec![0, 1])));
    }

    #[test]
    fn serde_round_trip() {
        let g = path(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
