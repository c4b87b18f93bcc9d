//! End-to-end audit of a (graph, distribution, empty target) triple.
//!
//! Given a distribution that cannot reach `z0`, every separator and path
//! family the contradiction argument builds is computed explicitly and each
//! intermediate inequality is checked with `D` the actual diameter:
//!
//! | stage           | checked                                                        |
//! |-----------------|----------------------------------------------------------------|
//! | `partition`     | `sum_B phi = |B| + |Z|` and `|Z| = m (omega - 1)`              |
//! | `claim1`        | largest pebble-shifting family at each `v` is `< 2^D`          |
//! | `claim2`        | `|S'_v| < 2^D`, separation of the copies, class closure        |
//! | `claim3`        | `phi(v) + sum_{S_v} phi < 2^(D+2)`                             |
//! | `claim4`        | `q 2^(D+2) > m omega` when every greedy step is `< 2^(D+2)`     |
//! | `claim5`        | paths with distinct roots and one terminal share only it       |
//! | `terminal_load` | no terminal collects `2^D` distinct roots                      |
//! | `final_count`   | `|F| / |W ∪ Z|` against `2^D - 1`, needs connectivity `2^(2D+3)`|

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::families::{pow2, select_b0_with, terminal_families_with, B0Selection, Separators, TerminalFamilies};
use super::partition::{zub_partition, ZubPartition};
use super::separator::{claim1_family, min_separator, SeparatorReport};
use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity, Graph};
use crate::solver::{can_pebble, Distribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    #[serde(rename = "PREMISE-NOT-MET")]
    PremiseNotMet,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: String,
    pub premise_met: bool,
    pub verdict: Verdict,
    pub quantities: Map<String, Value>,
    pub witnesses: Vec<Value>,
}

impl ClaimVerdict {
    fn new(claim: &str, premise_met: bool, holds: bool) -> Self {
        ClaimVerdict {
            claim: claim.to_string(),
            premise_met,
            verdict: match (premise_met, holds) {
                (false, _) => Verdict::PremiseNotMet,
                (true, true) => Verdict::Holds,
                (true, false) => Verdict::Fails,
            },
            quantities: Map::new(),
            witnesses: Vec::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.quantities.insert(key.to_string(), value);
        self
    }

    fn witnesses(mut self, w: Vec<Value>) -> Self {
        self.witnesses = w;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum AuditStatus {
    Completed,
    PremiseFails(String),
}

/// Per-vertex quantities gathered before the claim verdicts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexAudit {
    pub v: usize,
    pub claim1_bound: usize,
    pub separator: SeparatorReport,
    /// `phi(v) + sum over S_v of phi`.
    pub claim3_sum: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditReport {
    pub graph: Graph,
    pub distribution: Distribution,
    pub z0: usize,
    pub size: u64,
    pub diameter: Option<usize>,
    pub status: AuditStatus,
    pub claims: Vec<ClaimVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<VertexAudit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b0: Option<B0Selection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<TerminalFamilies>,
}

impl AuditReport {
    pub fn claim(&self, name: &str) -> Option<&ClaimVerdict> {
        self.claims.iter().find(|c| c.claim == name)
    }

    /// No stage whose premise is met fails.
    pub fn all_met_claims_hold(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != Verdict::Fails)
    }
}

fn stop(g: &Graph, d: &Distribution, z0: usize, diameter: Option<usize>, reason: String) -> AuditReport {
    AuditReport {
        graph: g.clone(),
        distribution: d.clone(),
        z0,
        size: d.size(),
        diameter,
        status: AuditStatus::PremiseFails(reason),
        claims: Vec::new(),
        vertices: Vec::new(),
        b0: None,
        families: None,
    }
}

fn partition_stage(part: &ZubPartition) -> ClaimVerdict {
    ClaimVerdict::new("partition", part.size_is_order, part.identities_hold().unwrap_or(false))
        .with("zeros", json!(part.zeros.len()))
        .with("units", json!(part.units.len()))
        .with("bigs", json!(part.m))
        .with("big_total", json!(part.big_total))
        .with("omega", json!(part.omega.map(|o| o.to_string())))
        .with("big_sum_identity", json!(part.big_sum_identity()))
        .with("zero_count_identity", json!(part.zero_count_identity()))
}

/// Runs every stage on `(g, d, z0)`; see the module docs for the list.
pub fn audit_counterexample(g: &Graph, d: &Distribution, z0: usize) -> Result<AuditReport> {
    d.check_against(g)?;
    g.check_vertex(z0)?;
    if d.counts()[z0] != 0 {
        return Err(Error::NotAZero(z0));
    }
    let diameter = g.diameter()?;
    let Some(diam) = diameter else {
        return Ok(stop(g, d, z0, None, "graph disconnected: diameter infinite".into()));
    };
    if can_pebble(g, d, z0)?.is_reachable() {
        return Ok(stop(g, d, z0, diameter, "z0 reachable".into()));
    }

    let n = g.n();
    let counts = d.counts();
    let part = zub_partition(g, d)?;
    let small = pow2(diam)?;
    let big = pow2(diam + 2)?;

    let vertices: Vec<VertexAudit> = (0..n)
        .into_par_iter()
        .map(|v| {
            let family = claim1_family(g, d, v)?;
            let separator = min_separator(g, d, v)?;
            let claim3_sum = u64::from(counts[v])
                + separator
                    .base_separator
                    .iter()
                    .map(|&x| u64::from(counts[x]))
                    .sum::<u64>();
            Ok(VertexAudit {
                v,
                claim1_bound: family.len(),
                separator,
                claim3_sum,
            })
        })
        .collect::<Result<_>>()?;

    let mut claims = vec![partition_stage(&part)];

    let c1_bad: Vec<Value> = vertices
        .iter()
        .filter(|a| a.claim1_bound as u64 >= small)
        .map(|a| json!({"v": a.v, "bound": a.claim1_bound, "family": claim1_family(g, d, a.v).ok()}))
        .collect();
    claims.push(
        ClaimVerdict::new("claim1", true, c1_bad.is_empty())
            .with("limit", json!(small))
            .with("max_bound", json!(vertices.iter().map(|a| a.claim1_bound).max()))
            .with(
                "bounds",
                json!(vertices.iter().map(|a| a.claim1_bound).collect::<Vec<_>>()),
            )
            .witnesses(c1_bad),
    );

    let c2_bad: Vec<Value> = vertices
        .iter()
        .filter(|a| {
            let s = &a.separator;
            s.size() as u64 >= small || !s.separates_copies || !s.classes_closed || !s.menger_certified
        })
        .map(|a| json!({"v": a.v, "separator": a.separator.separator_labels, "size": a.separator.size()}))
        .collect();
    claims.push(
        ClaimVerdict::new("claim2", true, c2_bad.is_empty())
            .with("limit", json!(small))
            .with(
                "separator_sizes",
                json!(vertices.iter().map(|a| a.separator.size()).collect::<Vec<_>>()),
            )
            .with(
                "repaired",
                json!(vertices.iter().filter(|a| a.separator.repaired).count()),
            )
            .witnesses(c2_bad),
    );

    let c3_bad: Vec<Value> = vertices
        .iter()
        .filter(|a| a.claim3_sum >= big)
        .map(|a| json!({"v": a.v, "sum": a.claim3_sum, "separator": a.separator.base_separator}))
        .collect();
    claims.push(
        ClaimVerdict::new("claim3", true, c3_bad.is_empty())
            .with("limit", json!(big))
            .with("sums", json!(vertices.iter().map(|a| a.claim3_sum).collect::<Vec<_>>()))
            .witnesses(c3_bad),
    );

    let seps: Separators = vertices
        .iter()
        .map(|a| (a.v, a.separator.base_separator.clone()))
        .collect();
    let (b0, families) = if part.bigs.is_empty() {
        claims.push(ClaimVerdict::new("claim4", false, false).with("reason", json!("no bigs")));
        claims.push(ClaimVerdict::new("claim5", false, false).with("reason", json!("no bigs")));
        (None, None)
    } else {
        let sel = select_b0_with(d, &part.bigs, diam, &seps)?;
        let mut c4 = ClaimVerdict::new("claim4", sel.steps_within_bound, sel.count_bound_holds)
            .with("q", json!(sel.q()))
            .with("order", json!(sel.order))
            .with("m_omega", json!(sel.big_total))
            .with("step_bound", json!(sel.step_bound))
            .with(
                "step_weights",
                json!(sel.steps.iter().map(|s| s.step_weight).collect::<Vec<_>>()),
            )
            .with("pairwise_separated", json!(sel.pairwise_separated));
        if !sel.pairwise_separated {
            c4.verdict = Verdict::Fails;
        }
        claims.push(c4);

        let fams = terminal_families_with(g, d, &sel.order, z0, &seps)?;
        let violations = fams.disjointness_violations();
        claims.push(
            ClaimVerdict::new("claim5", true, violations.is_empty())
                .with("paths", json!(fams.path_count()))
                .with(
                    "discarded",
                    json!(fams.roots.iter().map(|r| r.discarded).sum::<usize>()),
                )
                .with(
                    "roots_adjacent_to_z0",
                    json!(fams.roots.iter().filter(|r| r.adjacent_to_z0).count()),
                )
                .witnesses(violations.iter().map(|(a, b)| json!([a, b])).collect()),
        );
        (Some(sel), Some(fams))
    };

    if let Some(fams) = &families {
        let load = fams.max_terminal_load();
        claims.push(
            ClaimVerdict::new("terminal_load", true, (load as u64) < small)
                .with("max_distinct_roots_per_terminal", json!(load))
                .with("limit", json!(small)),
        );
        let kappa = if n >= 2 { vertex_connectivity(g)? } else { 0 };
        let required = 2 * diam + 3;
        let premise = required < 63 && kappa as u64 >= 1u64 << required;
        let pool = fams.terminal_pool;
        let paths = fams.path_count();
        // the pigeonhole step would produce 2^D paths into one terminal
        let exceeds = (paths as u64) > (small - 1) * pool as u64;
        claims.push(
            ClaimVerdict::new("final_count", premise, !exceeds)
                .with("paths", json!(paths))
                .with("terminal_pool", json!(pool))
                .with(
                    "ratio",
                    json!(if pool > 0 {
                        Some(paths as f64 / pool as f64)
                    } else {
                        None
                    }),
                )
                .with("threshold", json!(small - 1))
                .with("connectivity", json!(kappa))
                .with("required_connectivity_log2", json!(required)),
        );
    }

    Ok(AuditReport {
        graph: g.clone(),
        distribution: d.clone(),
        z0,
        size: d.size(),
        diameter,
        status: AuditStatus::Completed,
        claims,
        vertices,
        b0,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    fn dist(v: &[u32]) -> Distribution {
        Distribution::new(v.to_vec())
    }

    #[test]
    fn path_instance_holds() {
        let r = audit_counterexample(&path(3), &dist(&[3, 0, 0]), 2).unwrap();
        assert_eq!(r.status, AuditStatus::Completed);
        for name in [
            "partition",
            "claim1",
            "claim2",
            "claim3",
            "claim4",
            "claim5",
            "terminal_load",
        ] {
            assert_eq!(r.claim(name).unwrap().verdict, Verdict::Holds, "{name}");
        }
        assert!(r.vertices.iter().all(|a| a.separator.size() <= 1));
        assert_eq!(r.claim("final_count").unwrap().verdict, Verdict::PremiseNotMet);
    }

    #[test]
    fn reachable_target_stops() {
        let r = audit_counterexample(&complete(4), &dist(&[0, 2, 1, 1]), 0).unwrap();
        assert_eq!(r.status, AuditStatus::PremiseFails("z0 reachable".into()));
        assert!(r.claims.is_empty());
    }

    #[test]
    fn nonzero_target_is_an_error() {
        assert_eq!(
            audit_counterexample(&path(3), &dist(&[3, 0, 0]), 0).unwrap_err(),
            Error::NotAZero(0)
        );
    }

    #[test]
    fn json_shape() {
        let r = audit_counterexample(&path(3), &dist(&[3, 0, 0]), 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let first = &v["claims"][0];
        for key in ["claim", "premise_met", "verdict", "quantities", "witnesses"] {
            assert!(first.get(key).is_some(), "{key}");
        }
        assert_eq!(v["status"]["status"], "completed");
        assert_eq!(v["claims"][1]["verdict"], "HOLDS");
    }
}
