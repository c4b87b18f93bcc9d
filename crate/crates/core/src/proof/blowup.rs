use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::partition::zub_partition;
use crate::error::Result;
use crate::graph::Graph;
use crate::solver::Distribution;

/// A node of the blow-up graph, labelled by where it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlowupNode {
    /// The base vertex `v`.
    Root(usize),
    /// A unit vertex other than `v`.
    Unit(usize),
    /// Copy `index` of big vertex `big`.
    Copy { big: usize, index: usize },
    /// The extra vertex joined to every copy.
    Apex,
}

impl BlowupNode {
    /// The base-graph vertex this node stands for.
    pub fn base(&self) -> Option<usize> {
        match *self {
            BlowupNode::Root(v) | BlowupNode::Unit(v) => Some(v),
            BlowupNode::Copy { big, .. } => Some(big),
            BlowupNode::Apex => None,
        }
    }
}

/// The graph induced by `{v}`, the units and the bigs, with every big
/// `b != v` replaced by an independent set of `floor(phi(b) / 2)` twins, plus
/// an apex adjacent to exactly the twins.
///
/// Node 0 is the root, the apex is the last node; units come next in vertex
/// order, then the copies of each big in vertex order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlowupGraph {
    pub base: usize,
    pub graph: Graph,
    pub nodes: Vec<BlowupNode>,
    /// Node ids of the copies of each big other than `base`.
    pub classes: BTreeMap<usize, Vec<usize>>,
}

impl BlowupGraph {
    pub fn root(&self) -> usize {
        0
    }

    pub fn apex(&self) -> usize {
        self.nodes.len() - 1
    }

    /// All copy nodes.
    pub fn copies(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.values().flatten().copied()
    }

    pub fn copy_count(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }

    pub fn is_copy(&self, node: usize) -> bool {
        matches!(self.nodes[node], BlowupNode::Copy { .. })
    }
}

pub fn blowup_graph(g: &Graph, d: &Distribution, v: usize) -> Result<BlowupGraph> {
    g.check_vertex(v)?;
    let part = zub_partition(g, d)?;
    let counts = d.counts();

    let mut nodes = vec![BlowupNode::Root(v)];
    nodes.extend(part.units.iter().filter(|&&u| u != v).map(|&u| BlowupNode::Unit(u)));
    let mut classes = BTreeMap::new();
    for &b in part.bigs.iter().filter(|&&b| b != v) {
        let start = nodes.len();
        let size = (counts[b] / 2) as usize;
        nodes.extend((0..size).map(|index| BlowupNode::Copy { big: b, index }));
        classes.insert(b, (start..start + size).collect::<Vec<_>>());
    }
    nodes.push(BlowupNode::Apex);
    let apex = nodes.len() - 1;

    let mut edges = Vec::new();
    for i in 0..apex {
        for j in i + 1..apex {
            let (a, b) = (nodes[i].base().unwrap(), nodes[j].base().unwrap());
            // twins of one big share a base vertex and stay independent
            if a != b && g.has_edge(a, b) {
                edges.push((i, j));
            }
        }
    }
    for copy in classes.values().flatten() {
        edges.push((*copy, apex));
    }
    Ok(BlowupGraph {
        base: v,
        graph: Graph::new(nodes.len(), edges)?,
        nodes,
        classes,
    })
}
