//! Truncated abacus displays of charged partitions and the runner insertion
//! constructions of the subdivided partition.
//!
//! A bead at position `p` sits on runner `p mod e'` at level `floor(p / e')`.
//! Every position below level `N` is implicitly occupied.

use partition_core::{beta_numbers, split, Multipartition, Partition};
use quiver_core::{Quiver, Residue};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

mod render;

pub use render::{render, rows};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbacusError {
    #[error("truncation level {n} exceeds the maximal level {n0}; use N <= {n0}")]
    TruncationTooHigh { n: i64, n0: i64 },
    #[error("bead at position {p} lies below truncation level {n}")]
    BeadBelowTruncation { p: i64, n: i64 },
    #[error("cannot shift left: position {p} is empty; rebuild with a smaller N")]
    ShiftMargin { p: i64 },
    #[error("shift must be +1 or -1, got {0}")]
    BadShift(i32),
    #[error("runner count must be positive")]
    NoRunners,
    #[error(transparent)]
    Quiver(#[from] quiver_core::QuiverError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusConfig {
    #[serde(rename = "e'")]
    pub runners: u32,
    #[serde(rename = "N")]
    pub truncation: i64,
    pub beads: BTreeSet<i64>,
}

impl AbacusConfig {
    pub fn new(runners: u32, truncation: i64, beads: BTreeSet<i64>) -> Result<Self, AbacusError> {
        if runners == 0 {
            return Err(AbacusError::NoRunners);
        }
        let floor = truncation * runners as i64;
        if let Some(&p) = beads.iter().next() {
            if p < floor {
                return Err(AbacusError::BeadBelowTruncation { p, n: truncation });
            }
        }
        Ok(AbacusConfig { runners, truncation, beads })
    }

    pub fn runner(&self, p: i64) -> i64 {
        split(p, self.runners).1
    }

    pub fn level(&self, p: i64) -> i64 {
        split(p, self.runners).0
    }

    pub fn position(&self, level: i64, runner: i64) -> i64 {
        level * self.runners as i64 + runner
    }

    /// The integer charge, `#beads + N e'`.
    pub fn charge(&self) -> i64 {
        self.beads.len() as i64 + self.truncation * self.runners as i64
    }

    pub fn max_level(&self) -> i64 {
        self.beads.iter().next_back().map(|&p| self.level(p)).unwrap_or(self.truncation).max(self.truncation)
    }

    /// Equality of decoded partition and charge modulo the runner count.
    pub fn equivalent(&self, other: &AbacusConfig) -> bool {
        let (a, c) = from_abacus(self);
        let (b, d) = from_abacus(other);
        self.runners == other.runners && a == b && (c - d).rem_euclid(self.runners as i64) == 0
    }
}

/// Maximal legal truncation level.
pub fn max_truncation_n0(lam: &Partition, rho: i64, e_prime: u32) -> i64 {
    let t = lam.len();
    let b = beta_numbers(lam, rho, t + 1, e_prime);
    let (a, r) = b.decompose(t + 1);
    if r == e_prime as i64 - 1 {
        a + 1
    } else {
        a
    }
}

/// `#{i >= 1 : i = rho mod e', lambda_{i+1} > 0}`.
pub fn k_lambda(lam: &Partition, rho: i64, e_prime: u32) -> i64 {
    let e = e_prime as i64;
    let r = rho.rem_euclid(e);
    (1..lam.len()).filter(|&i| (i as i64).rem_euclid(e) == r).count() as i64
}

pub fn to_abacus(lam: &Partition, rho: i64, e_prime: u32, n: i64) -> Result<AbacusConfig, AbacusError> {
    let n0 = max_truncation_n0(lam, rho, e_prime);
    if n > n0 {
        return Err(AbacusError::TruncationTooHigh { n, n0 });
    }
    let floor = n * e_prime as i64;
    let count = (rho - floor).max(0) as usize;
    let beta = beta_numbers(lam, rho, count, e_prime);
    let beads = beta.beta.into_iter().filter(|&b| b >= floor).collect();
    AbacusConfig::new(e_prime, n, beads)
}

/// Decode to `(partition, integer charge)`.
pub fn from_abacus(a: &AbacusConfig) -> (Partition, i64) {
    let charge = a.charge();
    let parts = a
        .beads
        .iter()
        .rev()
        .enumerate()
        .map(|(j, &b)| (b - charge + j as i64 + 1) as u32)
        .collect();
    (Partition::from_padded(parts).expect("decreasing beta numbers decode to a partition"), charge)
}

/// Move every bead by one position; the decoded partition is unchanged and
/// the charge moves by `delta`.
pub fn shift_beads(a: &AbacusConfig, delta: i32) -> Result<AbacusConfig, AbacusError> {
    let floor = a.truncation * a.runners as i64;
    let beads = match delta {
        1 => {
            let mut b: BTreeSet<i64> = a.beads.iter().map(|p| p + 1).collect();
            b.insert(floor);
            b
        }
        -1 => {
            if !a.beads.contains(&floor) {
                return Err(AbacusError::ShiftMargin { p: floor });
            }
            a.beads.iter().map(|p| p - 1).filter(|&p| p >= floor).collect()
        }
        d => return Err(AbacusError::BadShift(d)),
    };
    AbacusConfig::new(a.runners, a.truncation, beads)
}

/// Insert a new runner at `column` (runners `>= column` move right by one)
/// and fill it at levels `N..top`.
pub fn insert_runner(a: &AbacusConfig, column: u32, top: i64) -> AbacusConfig {
    let r = a.runners as i64;
    let col = column as i64;
    let mut beads: BTreeSet<i64> = a
        .beads
        .iter()
        .map(|&p| {
            let (lv, b) = split(p, a.runners);
            lv * (r + 1) + b + i64::from(b >= col)
        })
        .collect();
    for lv in a.truncation..top {
        beads.insert(lv * (r + 1) + col);
    }
    AbacusConfig { runners: a.runners + 1, truncation: a.truncation, beads }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusPlus {
    pub partition: Partition,
    /// Integer charge of the new abacus, in the labels of the subdivided quiver.
    pub charge: i64,
    pub n0: i64,
    pub k: i64,
    pub before: AbacusConfig,
    pub after: AbacusConfig,
}

/// Default truncation `N0 - 2`.
pub fn default_truncation(lam: &Partition, rho: i64, e_prime: u32) -> i64 {
    max_truncation_n0(lam, rho, e_prime) - 2
}

fn plus_edge0(lam: &Partition, rho: i64, e_prime: u32, side: Side) -> AbacusPlus {
    let n0 = max_truncation_n0(lam, rho, e_prime);
    let k = k_lambda(lam, rho, e_prime);
    let n = n0 - 2;
    let before = to_abacus(lam, rho, e_prime, n).expect("N below N0");
    let after = match side {
        Side::Right => insert_runner(&before, e_prime, n0 + k),
        Side::Left => insert_runner(&before, 0, n0 + k + 1),
    };
    let (partition, charge) = from_abacus(&after);
    AbacusPlus { partition, charge, n0, k, before, after }
}

/// The subdivided partition by runner insertion. For `edge != 0` the quiver
/// is rotated so that `edge` becomes `0`, and the charge is rotated back.
pub fn lambda_plus_abacus(lam: &Partition, rho: i64, q: &Quiver, edge: Residue, side: Side) -> Result<AbacusPlus, AbacusError> {
    let edge = q.check(edge)?;
    let e_prime = q.vertex_count();
    let rho = rho.rem_euclid(e_prime as i64);
    let i = edge.0 as i64;
    let rho_rel = if rho >= i { rho - i } else { rho + e_prime as i64 - i };
    let mut out = plus_edge0(lam, rho_rel, e_prime, side);
    out.charge += i;
    Ok(out)
}

/// Insert a runner directly between runners `i-1` and `i` of the unrotated
/// abacus. The fill height is read off the rotated data.
pub fn insert_runner_direct(lam: &Partition, rho: i64, q: &Quiver, edge: Residue) -> Result<AbacusPlus, AbacusError> {
    let edge = q.check(edge)?;
    let e_prime = q.vertex_count();
    let e = e_prime as i64;
    let rho = rho.rem_euclid(e);
    let i = edge.0 as i64;
    let (rho_rel, wrap) = if rho >= i { (rho - i, 0) } else { (rho + e - i, 1) };
    let n0r = max_truncation_n0(lam, rho_rel, e_prime);
    let kr = k_lambda(lam, rho_rel, e_prime);
    let n0 = max_truncation_n0(lam, rho, e_prime);
    let k = k_lambda(lam, rho, e_prime);
    let top = n0r + kr + 1 - wrap;
    let n = n0.min(top) - 2;
    let before = to_abacus(lam, rho, e_prime, n)?;
    let after = insert_runner(&before, edge.0, top);
    let (partition, charge) = from_abacus(&after);
    Ok(AbacusPlus { partition, charge, n0, k, before, after })
}

/// Componentwise runner insertion.
pub fn lambda_plus_abacus_multi(lam: &Multipartition, rho: &[i64], q: &Quiver, edge: Residue) -> Result<(Multipartition, Vec<i64>), AbacusError> {
    let mut comps = Vec::new();
    let mut charges = Vec::new();
    for (p, &r) in lam.components().iter().zip(rho) {
        let out = lambda_plus_abacus(p, r, q, edge, Side::Left)?;
        comps.push(out.partition);
        charges.push(out.charge);
    }
    Ok((Multipartition::new(comps).expect("same level"), charges))
}
