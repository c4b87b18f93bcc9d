//! Pebbling numbers, Class 0 decisions and the small-graph classification.
//!
//! Everything here is a quantifier sweep over [`TargetSolver`]: targets
//! outermost (one per automorphism orbit), distributions innermost in
//! lexicographic order. Within a target the distributions are checked in
//! parallel, but the reported witness is always the first failure in
//! enumeration order, so results do not depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{automorphism_orbits, enumerate_graphs, is_isomorphic, vertex_connectivity, Graph};
use crate::solver::{Distribution, TargetSolver};

/// Orbit reduction is skipped above this order.
pub const ORBIT_GUARD: usize = 12;

/// Largest `n_max` accepted by [`classify_small`].
pub const CLASSIFY_GUARD: usize = 6;

/// All vectors of `n` non-negative integers summing to `total`, in
/// lexicographic order, with the entry at `zero_at` pinned to 0.
#[derive(Debug, Clone)]
pub struct Compositions {
    counts: Vec<u32>,
    free: Vec<usize>,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl Iterator for Compositions {
    type Item = Distribution;

    fn next(&mut self) -> Option<Distribution> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                return Some(Distribution::new(self.counts.clone()));
            }
            IterState::Running => {}
        }
        let k = self.free.len();
        if k < 2 {
            self.state = IterState::Done;
            return None;
        }
        let last = self.free[k - 1];
        let mut tail = self.counts[last];
        let mut i = k - 2;
        loop {
            if tail > 0 {
                break;
            }
            if i == 0 {
                self.state = IterState::Done;
                return None;
            }
            tail += self.counts[self.free[i]];
            i -= 1;
        }
        // free[i] is the rightmost slot (before the last) with a positive tail after it
        self.counts[self.free[i]] += 1;
        for &slot in &self.free[i + 1..] {
            self.counts[slot] = 0;
        }
        self.counts[last] = tail - 1;
        Some(Distribution::new(self.counts.clone()))
    }
}

pub fn enumerate_distributions(n: usize, total: u32, zero_at: Option<usize>) -> Result<Compositions> {
    if let Some(z) = zero_at {
        if z >= n {
            return Err(Error::VertexOutOfRange { vertex: z, n });
        }
    }
    let free: Vec<usize> = (0..n).filter(|&v| Some(v) != zero_at).collect();
    let mut counts = vec![0; n];
    let state = match free.last() {
        Some(&last) => {
            counts[last] = total;
            IterState::Fresh
        }
        None if total == 0 => IterState::Fresh,
        None => IterState::Done,
    };
    Ok(Compositions { counts, free, state })
}

/// A size-`|V|` distribution that cannot reach `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Class1Witness {
    pub target: usize,
    pub distribution: Distribution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PebblingClass {
    #[serde(rename = "class0")]
    Class0,
    #[serde(rename = "class1")]
    Class1,
}

struct Sweep {
    failure: Option<Class1Witness>,
    targets_tested: usize,
    distributions_tested: usize,
}

fn target_representatives(g: &Graph) -> Vec<usize> {
    if g.n() > ORBIT_GUARD {
        return (0..g.n()).collect();
    }
    let rep = automorphism_orbits(g);
    (0..g.n()).filter(|&v| rep[v] == v).collect()
}

/// First unreachable (target, distribution) of the given size, if any.
fn sweep(solvers: &[TargetSolver<'_>], total: u32) -> Result<Sweep> {
    let mut out = Sweep {
        failure: None,
        targets_tested: 0,
        distributions_tested: 0,
    };
    for solver in solvers {
        let n = solver.graph().n();
        let t = solver.target();
        let all: Vec<Distribution> = enumerate_distributions(n, total, Some(t))?.collect();
        out.targets_tested += 1;
        let hit = all.par_iter().position_first(|d| solver.solve(d.counts()).is_none());
        match hit {
            Some(i) => {
                out.distributions_tested += i + 1;
                out.failure = Some(Class1Witness {
                    target: t,
                    distribution: all[i].clone(),
                });
                return Ok(out);
            }
            None => out.distributions_tested += all.len(),
        }
    }
    Ok(out)
}

/// `f(G)` together with the bookkeeping of the search that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NumberReport {
    pub graph: Graph,
    pub f: u64,
    pub class: PebblingClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Class1Witness>,
    pub targets_tested: usize,
    pub distributions_tested: usize,
    /// Seconds.
    pub elapsed: f64,
}

/// Exact pebbling number with a full report; see [`pebbling_number`].
pub fn pebbling_number_report(g: &Graph) -> Result<NumberReport> {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let diameter = g.diameter()?.ok_or(Error::Disconnected)?;
    let solvers = target_representatives(g)
        .into_iter()
        .map(|t| TargetSolver::new(g, t))
        .collect::<Result<Vec<_>>>()?;
    // pigeonhole: with this many pebbles some vertex holds 2^D
    let bound = (n as u64) * ((1u64 << diameter) - 1) + 1;

    let mut witness = None;
    let mut targets_tested = 0;
    let mut distributions_tested = 0;
    let mut p = n as u64;
    loop {
        assert!(p <= bound, "search passed the pigeonhole bound {bound}");
        let total = u32::try_from(p).map_err(|_| Error::TooDeep(diameter))?;
        let s = sweep(&solvers, total)?;
        targets_tested += s.targets_tested;
        distributions_tested += s.distributions_tested;
        match s.failure {
            Some(w) => {
                if p == n as u64 {
                    witness = Some(w);
                }
                p += 1;
            }
            None => break,
        }
    }
    Ok(NumberReport {
        graph: g.clone(),
        f: p,
        class: if p == n as u64 {
            PebblingClass::Class0
        } else {
            PebblingClass::Class1
        },
        witness,
        targets_tested,
        distributions_tested,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// The least `p` such that every size-`p` distribution can pebble every vertex.
pub fn pebbling_number(g: &Graph) -> Result<u64> {
    pebbling_number_report(g).map(|r| r.f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum Class0Verdict {
    #[serde(rename = "class0")]
    Class0,
    #[serde(rename = "class1")]
    Class1 {
        witness: Class1Witness,
        /// The graph is disconnected and the witness is the trivial one.
        disconnected: bool,
    },
}

impl Class0Verdict {
    pub fn is_class0(&self) -> bool {
        matches!(self, Class0Verdict::Class0)
    }

    pub fn witness(&self) -> Option<&Class1Witness> {
        match self {
            Class0Verdict::Class1 { witness, .. } => Some(witness),
            Class0Verdict::Class0 => None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Class0Report {
    pub verdict: Class0Verdict,
    pub targets_tested: usize,
    pub distributions_tested: usize,
}

pub fn is_class0_report(g: &Graph) -> Result<Class0Report> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        let comp = g.components();
        let target = (0..n).find(|&v| comp[v] != comp[0]).expect("disconnected");
        let mut counts = vec![0; n];
        counts[0] = n as u32;
        return Ok(Class0Report {
            verdict: Class0Verdict::Class1 {
                witness: Class1Witness {
                    target,
                    distribution: Distribution::new(counts),
                },
                disconnected: true,
            },
            targets_tested: 0,
            distributions_tested: 0,
        });
    }
    let solvers = target_representatives(g)
        .into_iter()
        .map(|t| TargetSolver::new(g, t))
        .collect::<Result<Vec<_>>>()?;
    let s = sweep(&solvers, n as u32)?;
    let verdict = match s.failure {
        Some(witness) => Class0Verdict::Class1 {
            witness,
            disconnected: false,
        },
        None => Class0Verdict::Class0,
    };
    Ok(Class0Report {
        verdict,
        targets_tested: s.targets_tested,
        distributions_tested: s.distributions_tested,
    })
}

/// Whether `f(G) = |V|`, with the first failing distribution otherwise.
pub fn is_class0(g: &Graph) -> Result<Class0Verdict> {
    is_class0_report(g).map(|r| r.verdict)
}

/// One labelled graph found by [`classify_small`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifiedMember {
    pub graph: Graph,
    pub witness: Class1Witness,
}

/// An isomorphism class of 2-connected, diameter-2, Class 1 graphs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SmallClass {
    pub n: usize,
    pub representative: Graph,
    pub edges: usize,
    pub connectivity: usize,
    pub pebbling_number: u64,
    pub labelled_copies: usize,
    #[serde(skip)]
    pub members: Vec<ClassifiedMember>,
}

#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub n: usize,
    pub checked: usize,
    pub total: usize,
}

pub fn classify_small(n_max: usize) -> Result<Vec<SmallClass>> {
    classify_small_with_progress(n_max, &|_| {})
}

/// Every labelled graph on `2..=n_max` vertices that is 2-connected, has
/// diameter 2 and is Class 1, grouped up to isomorphism.
pub fn classify_small_with_progress(n_max: usize, progress: &(dyn Fn(Progress) + Sync)) -> Result<Vec<SmallClass>> {
    if n_max > CLASSIFY_GUARD {
        return Err(Error::GuardExceeded {
            what: "n_max",
            value: n_max,
            limit: CLASSIFY_GUARD,
        });
    }
    let mut classes: Vec<SmallClass> = Vec::new();
    for n in 2..=n_max {
        let graphs: Vec<Graph> = enumerate_graphs(n)?.collect();
        let total = graphs.len();
        let checked = AtomicUsize::new(0);
        let found: Vec<Result<Option<ClassifiedMember>>> = graphs
            .into_par_iter()
            .map(|g| {
                let done = checked.fetch_add(1, Ordering::Relaxed) + 1;
                if done.is_multiple_of(4096) || done == total {
                    progress(Progress {
                        n,
                        checked: done,
                        total,
                    });
                }
                if g.diameter()? != Some(2) || vertex_connectivity(&g)? < 2 {
                    return Ok(None);
                }
                Ok(match is_class0(&g)? {
                    Class0Verdict::Class0 => None,
                    Class0Verdict::Class1 { witness, .. } => Some(ClassifiedMember { graph: g, witness }),
                })
            })
            .collect();
        for member in found {
            let Some(member) = member? else { continue };
            match classes
                .iter_mut()
                .find(|c| is_isomorphic(&c.representative, &member.graph))
            {
                Some(c) => {
                    c.labelled_copies += 1;
                    c.members.push(member);
                }
                None => classes.push(SmallClass {
                    n,
                    edges: member.graph.edge_count(),
                    connectivity: vertex_connectivity(&member.graph)?,
                    pebbling_number: pebbling_number(&member.graph)?,
                    representative: member.graph.clone(),
                    labelled_copies: 1,
                    members: vec![member],
                }),
            }
        }
    }
    Ok(classes)
}
