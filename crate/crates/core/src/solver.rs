//! Exact pebbling reachability.
//!
//! A pebbling move removes two pebbles from a vertex and puts one on a
//! neighbour. [`can_pebble`] decides whether some sequence of moves puts a
//! pebble on the target, returning a replayable [`MoveCertificate`] when one
//! exists.
//!
//! The search is a depth-first walk over count vectors with three sound
//! cut-offs:
//!
//! * the dyadic weight `sum_v phi(v) / 2^dist(v, target)` never increases
//!   under a move and is at least 1 whenever the target holds a pebble, so a
//!   state of weight below 1 is dead;
//! * every move lowers the pebble count by one, so the state graph is acyclic
//!   and a state that failed once fails again;
//! * pebbles outside the target's component can never contribute.
//!
//! Moves are tried toward the target first, then sideways, then away.

use std::cmp::Ordering;
use std::fmt;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pebble counts indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Distribution(Vec<u32>);

impl Distribution {
    pub fn new(counts: Vec<u32>) -> Self {
        Distribution(counts)
    }

    pub fn zeros(n: usize) -> Self {
        Distribution(vec![0; n])
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::DistributionLength {
                expected: g.n(),
                got: self.len(),
            })
        }
    }

    /// Parses one line of space-separated counts; `#` lines and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, body) = data.next().ok_or(Error::Parse {
            line: 1,
            message: "missing distribution line".into(),
        })?;
        let counts = body
            .split_whitespace()
            .map(|f| {
                f.parse::<u32>().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{f}` is not a non-negative pebble count"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        if let Some((extra, _)) = data.next() {
            return Err(Error::Parse {
                line: extra,
                message: "distribution must be a single line".into(),
            });
        }
        Ok(Distribution(counts))
    }

    pub fn to_line(&self) -> String {
        let fields: Vec<String> = self.0.iter().map(u32::to_string).collect();
        fields.join(" ")
    }
}

impl From<Vec<u32>> for Distribution {
    fn from(v: Vec<u32>) -> Self {
        Distribution(v)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        )
    }
}

pub fn size(d: &Distribution) -> u64 {
    d.size()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }
}

/// Moves that, replayed in order, pebble the target.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveCertificate {
    pub moves: Vec<Move>,
}

impl MoveCertificate {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

pub fn apply_move(g: &Graph, d: &Distribution, m: Move) -> Result<Distribution> {
    d.check_against(g)?;
    g.check_vertex(m.from)?;
    g.check_vertex(m.to)?;
    if !g.has_edge(m.from, m.to) {
        return Err(Error::NotAnEdge { from: m.from, to: m.to });
    }
    let have = d.0[m.from];
    if have < 2 {
        return Err(Error::InsufficientPebbles { vertex: m.from, have });
    }
    let mut next = d.clone();
    next.0[m.from] -= 2;
    next.0[m.to] += 1;
    Ok(next)
}

/// An exact dyadic rational `numerator / 2^log2_denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub numerator: u128,
    pub log2_denominator: u32,
    /// Some pebbles sit in a component without the target and were counted as 0.
    pub ignored_unreachable: bool,
}

impl Weight {
    pub fn is_at_least_one(&self) -> bool {
        self.numerator >> self.log2_denominator > 0
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / 2f64.powi(self.log2_denominator as i32)
    }

    fn reduced(&self) -> (u128, u32) {
        let (mut num, mut exp) = (self.numerator, self.log2_denominator);
        while exp > 0 && num % 2 == 0 && num > 0 {
            num /= 2;
            exp -= 1;
        }
        (num, exp)
    }

    /// Compares the rational values (ignoring the unreachable flag).
    pub fn cmp_value(&self, other: &Weight) -> Ordering {
        let (a, ea) = self.reduced();
        let (b, eb) = other.reduced();
        // a / 2^ea  vs  b / 2^eb   <=>   a * 2^eb  vs  b * 2^ea
        let scale = |x: u128, by: u32| {
            if x == 0 {
                Some(0)
            } else {
                x.checked_shl(by).filter(|y| y >> by == x)
            }
        };
        match (scale(a, eb), scale(b, ea)) {
            (Some(l), Some(r)) => l.cmp(&r),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, exp) = self.reduced();
        if exp == 0 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{}", 1u128 << exp)
        }
    }
}

const MAX_DEPTH: usize = 126;

/// Per-target tables shared by every search against one (graph, target) pair.
#[derive(Debug, Clone)]
pub struct TargetSolver<'g> {
    graph: &'g Graph,
    target: usize,
    dist: Vec<Option<usize>>,
    /// `2^(depth - dist(v))` for vertices in the target's component, else 0.
    coefficient: Vec<u128>,
    depth: u32,
    moves: Vec<Move>,
}

impl<'g> TargetSolver<'g> {
    pub fn new(graph: &'g Graph, target: usize) -> Result<Self> {
        let dist = graph.distances(target)?;
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        if depth > MAX_DEPTH {
            return Err(Error::TooDeep(depth));
        }
        let coefficient = dist.iter().map(|d| d.map_or(0, |d| 1u128 << (depth - d))).collect();

        let mut moves: Vec<(isize, usize, Move)> = Vec::new();
        for x in 0..graph.n() {
            let Some(dx) = dist[x] else { continue };
            if x == target {
                continue;
            }
            for &y in graph.neighbors(x) {
                let dy = dist[y].expect("neighbour of reachable vertex");
                moves.push((dy as isize - dx as isize, dy, Move::new(x, y)));
            }
        }
        moves.sort_by_key(|&(delta, dy, m)| (delta, dy, m.from, m.to));
        Ok(TargetSolver {
            graph,
            target,
            dist,
            coefficient,
            depth: depth as u32,
            moves: moves.into_iter().map(|(_, _, m)| m).collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }

    pub fn weight(&self, counts: &[u32]) -> Weight {
        let mut numerator = 0u128;
        let mut ignored = false;
        for (v, &c) in counts.iter().enumerate() {
            if self.dist[v].is_none() && c > 0 {
                ignored = true;
            }
            numerator += u128::from(c) * self.coefficient[v];
        }
        Weight {
            numerator,
            log2_denominator: self.depth,
            ignored_unreachable: ignored,
        }
    }

    /// Exact decision for one distribution; the certificate on success.
    pub fn solve(&self, counts: &[u32]) -> Option<MoveCertificate> {
        if counts[self.target] > 0 {
            return Some(MoveCertificate::default());
        }
        let weight = self.weight(counts).numerator;
        let mut search = Search {
            solver: self,
            state: counts.to_vec(),
            failed: FxHashSet::default(),
            trail: Vec::new(),
            one: 1u128 << self.depth,
        };
        search.reach(weight).then_some(MoveCertificate { moves: search.trail })
    }
}

struct Search<'a, 'g> {
    solver: &'a TargetSolver<'g>,
    state: Vec<u32>,
    failed: FxHashSet<Box<[u32]>>,
    trail: Vec<Move>,
    one: u128,
}

impl Search<'_, '_> {
    fn reach(&mut self, weight: u128) -> bool {
        let t = self.solver.target;
        if self.state[t] > 0 {
            return true;
        }
        if weight < self.one || self.failed.contains(&self.state[..]) {
            return false;
        }
        let coeff = &self.solver.coefficient;
        for &m in &self.solver.moves {
            if self.state[m.from] < 2 {
                continue;
            }
            self.state[m.from] -= 2;
            self.state[m.to] += 1;
            self.trail.push(m);
            // dist(to) >= dist(from) - 1, so the loss is non-negative
            let next = weight - (2 * coeff[m.from] - coeff[m.to]);
            if self.reach(next) {
                return true;
            }
            self.trail.pop();
            self.state[m.from] += 2;
            self.state[m.to] -= 1;
        }
        self.failed.insert(self.state.clone().into_boxed_slice());
        false
    }
}

pub fn weight(g: &Graph, d: &Distribution, target: usize) -> Result<Weight> {
    d.check_against(g)?;
    Ok(TargetSolver::new(g, target)?.weight(d.counts()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Reachability {
    Reachable { certificate: MoveCertificate },
    Unreachable,
}

impl Reachability {
    pub fn is_reachable(&self) -> bool {
        matches!(self, Reachability::Reachable { .. })
    }

    pub fn certificate(&self) -> Option<&MoveCertificate> {
        match self {
            Reachability::Reachable { certificate } => Some(certificate),
            Reachability::Unreachable => None,
        }
    }
}

pub fn can_pebble(g: &Graph, d: &Distribution, target: usize) -> Result<Reachability> {
    d.check_against(g)?;
    let solver = TargetSolver::new(g, target)?;
    Ok(match solver.solve(d.counts()) {
        Some(certificate) => Reachability::Reachable { certificate },
        None => Reachability::Unreachable,
    })
}

/// Why a certificate failed to replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    /// Index of the offending move, or the certificate length when every move
    /// was legal but the target ended empty.
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

/// Replays `c` from `d` with full legality checks.
pub fn verify_certificate(
    g: &Graph,
    d: &Distribution,
    target: usize,
    c: &MoveCertificate,
) -> std::result::Result<(), ReplayFailure> {
    let fail = |step, reason: String| Err(ReplayFailure { step, reason });
    if let Err(e) = d.check_against(g).and(g.check_vertex(target)) {
        return fail(0, e.to_string());
    }
    let mut current = d.clone();
    for (i, &m) in c.moves.iter().enumerate() {
        match apply_move(g, &current, m) {
            Ok(next) => current = next,
            Err(e) => return fail(i, e.to_string()),
        }
    }
    if current.counts()[target] == 0 {
        return fail(c.moves.len(), format!("target {target} holds no pebble"));
    }
    Ok(())
}
