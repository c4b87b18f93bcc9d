//! Monte Carlo estimates of `Pr(G(n, p) has P)` over a grid of `p`.
//!
//! Trial `i` of a sweep with master seed `s` samples `gnp_sample(n, p,
//! trial_seed(s, i))`. The grid index does not enter the seed, so for a fixed
//! trial the sampled graphs are nested as `p` grows and any monotone property
//! gives estimates that are nondecreasing in `p` exactly, not just in
//! expectation.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::gnp_sample;
use crate::graph::{vertex_connectivity, Graph};
use crate::number::is_class0;

/// Largest `n` for which the Class 0 property is evaluated.
pub const CLASS0_GUARD: usize = 10;

/// `z` for a two-sided 95% interval.
const Z95: f64 = 1.959963984540054;

pub const ASYMPTOTIC_NOTE: &str = "Estimates are finite-n Monte Carlo frequencies. The threshold of a property is an \
asymptotic class of functions of n and cannot be identified from finite experiments; the scaling_reference columns \
are asymptotic guides, not desk-scale predictions.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Property {
    Connected,
    DiamLe(usize),
    KappaGe(usize),
    Class0,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Connected => write!(f, "connected"),
            Property::DiamLe(d) => write!(f, "diam_le({d})"),
            Property::KappaGe(k) => write!(f, "kappa_ge({k})"),
            Property::Class0 => write!(f, "class0"),
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_suffix(')')?;
            Some(
                inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad argument in property {s:?}"))),
            )
        };
        match s {
            "connected" => Ok(Property::Connected),
            "class0" => Ok(Property::Class0),
            _ => {
                if let Some(d) = arg("diam_le(") {
                    Ok(Property::DiamLe(d?))
                } else if let Some(k) = arg("kappa_ge(") {
                    Ok(Property::KappaGe(k?))
                } else {
                    Err(Error::Invalid(format!(
                        "unknown property {s:?}; expected connected, diam_le(d), kappa_ge(k) or class0"
                    )))
                }
            }
        }
    }
}

impl From<Property> for String {
    fn from(p: Property) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Property {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses a comma-separated property list such as `connected,diam_le(2)`.
pub fn parse_properties(list: &str) -> Result<Vec<Property>> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(list[start..].parse()?);
    Ok(out)
}

/// Parses `start:stop:step` into an inclusive grid, rounded to 9 decimals so
/// `0.1:0.9:0.1` yields exactly `0.1, 0.2, ..., 0.9`.
pub fn parse_p_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Invalid(format!("p grid must be start:stop:step, got {spec:?}"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|x| x.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if step.is_nan() || step <= 0.0 || stop.is_nan() || stop < start {
        return Err(bad());
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    let grid: Vec<f64> = (0..count)
        .map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9)
        .collect();
    for &p in &grid {
        check_p(p)?;
    }
    Ok(grid)
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("probability {p} outside [0, 1]")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p_grid: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub properties: Vec<Property>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        if self.trials == 0 {
            return Err(Error::Invalid("trials must be at least 1".into()));
        }
        for &p in &self.p_grid {
            check_p(p)?;
        }
        if self.properties.contains(&Property::Class0) {
            class0_guard(self.n)?;
        }
        Ok(())
    }
}

fn class0_guard(n: usize) -> Result<()> {
    if n > CLASS0_GUARD {
        return Err(Error::GuardExceeded {
            what: "vertex count for class0",
            value: n,
            limit: CLASS0_GUARD,
        });
    }
    Ok(())
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `trial` under master seed `master`.
pub fn trial_seed(master: u64, trial: usize) -> u64 {
    splitmix(master ^ splitmix(trial as u64))
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson(successes: usize, trials: usize) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).clamp(0.0, phat), (center + half).clamp(phat, 1.0))
}

/// Everything measured on one sampled graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub connectivity: usize,
    /// Only evaluated when Class 0 is among the requested properties.
    pub class0: Option<bool>,
}

impl SampleRecord {
    fn measure(g: &Graph, trial: usize, seed: u64, with_class0: bool) -> Result<Self> {
        let connected = g.is_connected();
        let connectivity = if connected && g.n() >= 2 {
            vertex_connectivity(g)?
        } else {
            0
        };
        Ok(SampleRecord {
            n: g.n(),
            trial,
            seed,
            edges: g.edge_count(),
            connected,
            diameter: g.diameter()?,
            connectivity,
            class0: if with_class0 {
                Some(is_class0(g)?.is_class0())
            } else {
                None
            },
        })
    }

    pub fn has(&self, prop: Property) -> bool {
        match prop {
            Property::Connected => self.connected,
            Property::DiamLe(d) => self.diameter.is_some_and(|x| x <= d),
            Property::KappaGe(k) => self.connectivity >= k,
            Property::Class0 => self.class0.expect("class0 not evaluated"),
        }
    }

    /// Logical consequences between the measured properties that this sample
    /// breaks. Implications involving Class 0 are skipped when it was not
    /// evaluated.
    pub fn implication_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let Some(class0) = self.class0 else {
            return out;
        };
        let diam = self.diameter;
        if class0 && !self.connected {
            out.push("class0 => connected");
        }
        if self.n >= 2 && diam.is_some_and(|d| d <= 1) && !class0 {
            out.push("diam <= 1 => class0");
        }
        if self.connectivity >= 3 && diam.is_some_and(|d| d <= 2) && !class0 {
            out.push("kappa >= 3 and diam <= 2 => class0");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub p: f64,
    pub property: Property,
    pub trials: usize,
    pub successes: usize,
    pub estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

impl SweepRow {
    fn from_counts(n: usize, p: f64, property: Property, trials: usize, successes: usize, seed: u64) -> Self {
        let (ci_low, ci_high) = wilson(successes, trials);
        SweepRow {
            n,
            p,
            property,
            trials,
            successes,
            estimate: successes as f64 / trials as f64,
            ci_low,
            ci_high,
            seed,
        }
    }
}

/// Samples at one grid point, in trial order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSamples {
    pub p: f64,
    pub samples: Vec<SampleRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub config: ExperimentConfig,
    pub rows: Vec<SweepRow>,
    #[serde(skip)]
    pub samples: Vec<GridSamples>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImplicationViolation {
    pub p: f64,
    pub sample: SampleRecord,
    pub implication: String,
}

impl SweepResult {
    pub fn rows_for(&self, property: Property) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.property == property)
    }

    pub fn implication_violations(&self) -> Vec<ImplicationViolation> {
        let mut out = Vec::new();
        for grid in &self.samples {
            for s in &grid.samples {
                for imp in s.implication_violations() {
                    out.push(ImplicationViolation {
                        p: grid.p,
                        sample: s.clone(),
                        implication: imp.to_string(),
                    });
                }
            }
        }
        out
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Invalid(format!("csv: {e}")))?;
        }
        w.flush().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    /// Rows plus config and a metadata note on what the numbers mean.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "metadata": {
                "note": ASYMPTOTIC_NOTE,
                "interval": "95% Wilson score",
                "trial_seed": "splitmix64(seed ^ splitmix64(trial)); shared across the p grid",
            },
            "config": self.config,
            "rows": self.rows,
        })
    }
}

fn sample_grid_point(n: usize, p: f64, trials: usize, seed: u64, with_class0: bool) -> Result<Vec<SampleRecord>> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = trial_seed(seed, trial);
            SampleRecord::measure(&gnp_sample(n, p, s)?, trial, s, with_class0)
        })
        .collect()
}

pub fn estimate_probability(n: usize, p: f64, trials: usize, seed: u64, property: Property) -> Result<SweepRow> {
    let config = ExperimentConfig {
        n,
        p_grid: vec![p],
        trials,
        seed,
        properties: vec![property],
    };
    config.validate()?;
    let samples = sample_grid_point(n, p, trials, seed, property == Property::Class0)?;
    let successes = samples.iter().filter(|s| s.has(property)).count();
    Ok(SweepRow::from_counts(n, p, property, trials, successes, seed))
}

/// One row per grid point and property, grid-major. Every property at a grid
/// point is evaluated on the same sampled graphs.
pub fn sweep(config: &ExperimentConfig) -> Result<SweepResult> {
    config.validate()?;
    let with_class0 = config.properties.contains(&Property::Class0);
    let mut rows = Vec::new();
    let mut all = Vec::new();
    for &p in &config.p_grid {
        let samples = sample_grid_point(config.n, p, config.trials, config.seed, with_class0)?;
        for &prop in &config.properties {
            let successes = samples.iter().filter(|s| s.has(prop)).count();
            rows.push(SweepRow::from_counts(
                config.n,
                p,
                prop,
                config.trials,
                successes,
                config.seed,
            ));
        }
        all.push(GridSamples { p, samples });
    }
    Ok(SweepResult {
        config: config.clone(),
        rows,
        samples: all,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub n: usize,
    /// `(n lg n)^(1/d) / n`.
    pub root_n_lg_n_over_n: f64,
    /// `lg n / n`.
    pub lg_n_over_n: f64,
}

/// Reference curves to plot next to sweep estimates.
pub fn scaling_reference(d: usize, n_list: &[usize]) -> Result<Vec<ScalingRow>> {
    if d == 0 {
        return Err(Error::Invalid("d must be at least 1".into()));
    }
    n_list
        .iter()
        .map(|&n| {
            if n == 0 {
                return Err(Error::EmptyGraph);
            }
            let nf = n as f64;
            let lg = nf.log2();
            Ok(ScalingRow {
                n,
                root_n_lg_n_over_n: (nf * lg).powf(1.0 / d as f64) / nf,
                lg_n_over_n: lg / nf,
            })
        })
        .collect()
}

pub fn scaling_csv(rows: &[ScalingRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}
