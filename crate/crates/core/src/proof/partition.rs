use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::solver::Distribution;

/// An exact non-negative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_multiple_of(self.den) {
            write!(f, "{}", self.num / self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Vertices split by pebble count: zeros (0), units (1) and bigs (2 or more).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZubPartition {
    pub zeros: Vec<usize>,
    pub units: Vec<usize>,
    pub bigs: Vec<usize>,
    /// `|B|`.
    pub m: usize,
    /// Pebbles on the bigs, `m * omega`.
    pub big_total: u64,
    /// Average pebbles per big; `None` when there are no bigs.
    pub omega: Option<Fraction>,
    /// Whether the distribution has exactly one pebble per vertex on average.
    pub size_is_order: bool,
}

impl ZubPartition {
    /// `sum_B phi(b) = |B| + |Z|`, meaningful only when `size_is_order`.
    pub fn big_sum_identity(&self) -> bool {
        self.big_total == (self.bigs.len() + self.zeros.len()) as u64
    }

    /// `|Z| = m (omega - 1)`, i.e. `|Z| = sum_B phi(b) - m`.
    pub fn zero_count_identity(&self) -> bool {
        self.omega.is_some() && self.zeros.len() as u64 + self.m as u64 == self.big_total
    }

    /// Both identities, or `None` when the size premise is not met.
    pub fn identities_hold(&self) -> Option<bool> {
        self.size_is_order
            .then(|| self.big_sum_identity() && (self.m == 0 || self.zero_count_identity()))
    }

    pub fn is_big(&self, v: usize) -> bool {
        self.bigs.binary_search(&v).is_ok()
    }

    pub fn is_unit(&self, v: usize) -> bool {
        self.units.binary_search(&v).is_ok()
    }

    pub fn is_zero(&self, v: usize) -> bool {
        self.zeros.binary_search(&v).is_ok()
    }
}

pub fn zub_partition(g: &Graph, d: &Distribution) -> Result<ZubPartition> {
    d.check_against(g)?;
    let (mut zeros, mut units, mut bigs) = (Vec::new(), Vec::new(), Vec::new());
    let mut big_total = 0u64;
    for (v, &c) in d.counts().iter().enumerate() {
        match c {
            0 => zeros.push(v),
            1 => units.push(v),
            _ => {
                bigs.push(v);
                big_total += u64::from(c);
            }
        }
    }
    let m = bigs.len();
    Ok(ZubPartition {
        omega: (m > 0).then_some(Fraction {
            num: big_total,
            den: m as u64,
        }),
        size_is_order: d.size() == g.n() as u64,
        zeros,
        units,
        bigs,
        m,
        big_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    #[test]
    fn examples() {
        let p = zub_partition(&path(3), &Distribution::new(vec![0, 1, 2])).unwrap();
        assert_eq!(
            (p.zeros.clone(), p.units.clone(), p.bigs.clone()),
            (vec![0], vec![1], vec![2])
        );
        assert_eq!(p.m, 1);
        assert_eq!(p.omega.unwrap().to_string(), "2");
        assert_eq!(p.identities_hold(), Some(true));

        let q = zub_partition(&complete(4), &Distribution::new(vec![0, 0, 3, 3])).unwrap();
        assert_eq!(q.zeros, vec![0, 1]);
        assert_eq!(q.bigs, vec![2, 3]);
        assert_eq!(q.omega.unwrap().to_string(), "3");
        assert_eq!(q.identities_hold(), None);
    }

    #[test]
    fn no_bigs() {
        let p = zub_partition(&path(3), &Distribution::new(vec![1, 1, 1])).unwrap();
        assert_eq!(p.omega, None);
        assert_eq!(p.identities_hold(), Some(true));
        let q = zub_partition(&path(3), &Distribution::new(vec![0, 0, 0])).unwrap();
        assert_eq!(q.identities_hold(), None);
    }
}
