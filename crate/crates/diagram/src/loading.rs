use crate::affine::{affine_extend, AffineData};
use crate::rat::{self, Q};
use crate::DiagramError;
use partition_core::{Charge, Multipartition, Node};
use quiver_core::{Quiver, Residue};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Solid,
    Ghost,
    Red,
}

/// Where a solid string comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Node(Node),
    /// Added by subdivision next to the ghost of solid `host`.
    Inserted { host: usize },
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solid {
    pub residue: Residue,
    #[serde(with = "rat")]
    pub x: Q,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Red {
    pub residue: Residue,
    #[serde(with = "rat")]
    pub x: Q,
    /// Component index, 1-based.
    pub m: usize,
}

/// One string of a loading. `source` indexes `solids` for solid and ghost
/// strings and `reds` for red strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringDesc {
    pub kind: Kind,
    pub residue: Residue,
    #[serde(with = "rat")]
    pub x: Q,
    pub source: usize,
}

/// Solid strings (each with one ghost) and red strings at exact positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Loading {
    pub quiver: Quiver,
    pub solids: Vec<Solid>,
    pub reds: Vec<Red>,
    /// Ghost shift for the edge leaving each residue.
    #[serde(with = "rat::vec")]
    pub shifts: Vec<Q>,
    #[serde(with = "rat")]
    pub epsilon: Q,
}

/// `true` for the pairs that cannot pass each other: solid/solid and
/// solid/red of equal residue, and ghost `i` with solid `i+1`.
pub fn interacts(q: &Quiver, a: (Kind, Residue), b: (Kind, Residue)) -> bool {
    use Kind::*;
    match (a.0, b.0) {
        (Solid, Solid) | (Solid, Red) | (Red, Solid) => a.1 == b.1,
        (Ghost, Solid) => q.has_edge(a.1, b.1),
        (Solid, Ghost) => q.has_edge(b.1, a.1),
        _ => false,
    }
}

pub fn unit_shifts(q: &Quiver) -> Vec<Q> {
    vec![Q::from_integer(1); q.vertex_count() as usize]
}

impl Loading {
    pub fn new(quiver: Quiver, solids: Vec<Solid>, reds: Vec<Red>, shifts: Vec<Q>, epsilon: Q) -> Result<Self, DiagramError> {
        if quiver.e() < 2 {
            return Err(DiagramError::DoubledEdge);
        }
        if shifts.len() != quiver.vertex_count() as usize || shifts.iter().any(|s| *s <= Q::from_integer(0)) {
            return Err(DiagramError::BadShifts);
        }
        let l = Loading { quiver, solids, reds, shifts, epsilon };
        l.check_distinct()?;
        Ok(l)
    }

    pub fn shift(&self, r: Residue) -> Q {
        self.shifts[r.0 as usize]
    }

    pub fn ghost_x(&self, k: usize) -> Q {
        self.solids[k].x + self.shift(self.solids[k].residue)
    }

    /// All strings sorted left to right.
    pub fn strings(&self) -> Vec<StringDesc> {
        let mut out = Vec::with_capacity(2 * self.solids.len() + self.reds.len());
        for (k, s) in self.solids.iter().enumerate() {
            out.push(StringDesc { kind: Kind::Solid, residue: s.residue, x: s.x, source: k });
            out.push(StringDesc { kind: Kind::Ghost, residue: s.residue, x: self.ghost_x(k), source: k });
        }
        for (k, r) in self.reds.iter().enumerate() {
            out.push(StringDesc { kind: Kind::Red, residue: r.residue, x: r.x, source: k });
        }
        out.sort_by_key(|a| a.x);
        out
    }

    pub fn check_distinct(&self) -> Result<(), DiagramError> {
        let s = self.strings();
        for w in s.windows(2) {
            if w[0].x == w[1].x {
                return Err(DiagramError::Collision { x: w[0].x.to_string() });
            }
        }
        Ok(())
    }

    /// Smallest distance between two strings; 1 when there are fewer than two.
    pub fn min_gap(&self) -> Q {
        let s = self.strings();
        s.windows(2).map(|w| w[1].x - w[0].x).min().unwrap_or_else(|| Q::from_integer(1))
    }

    pub fn signature(&self) -> Signature {
        signature(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(pub Vec<(Kind, Residue)>);

pub fn signature(load: &Loading) -> Signature {
    Signature(load.strings().into_iter().map(|s| (s.kind, s.residue)).collect())
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|(k, r)| match k {
                Kind::Solid => format!("s{r}"),
                Kind::Ghost => format!("g{r}"),
                Kind::Red => format!("| r{r} |"),
            })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

/// Solids at the positioning function, ghosts one unit to the right and
/// reds at `kappa_m`. The loading is in pulled-right form.
pub fn idempotent_loading(lam: &Multipartition, charge: &Charge, q: &Quiver) -> Result<Loading, DiagramError> {
    let aff = affine_extend(charge, lam.size(), q);
    let eps = aff.default_eps();
    loading_at(lam, charge, &aff, eps)
}

/// As [`idempotent_loading`] with explicit ghost shifts and perturbation.
/// Non-unit shifts keep the relative position of every pair of strings
/// that cannot pass each other.
pub fn idempotent_loading_with(lam: &Multipartition, charge: &Charge, q: &Quiver, shifts: &[Q], eps: Q) -> Result<Loading, DiagramError> {
    let aff = affine_extend(charge, lam.size(), q);
    aff.check_eps(eps)?;
    let base = loading_at(lam, charge, &aff, eps)?;
    if shifts.iter().all(|s| *s == Q::from_integer(1)) {
        return Ok(base);
    }
    crate::normalize::reshift(&base, shifts)
}

pub(crate) fn loading_at(lam: &Multipartition, charge: &Charge, aff: &AffineData, eps: Q) -> Result<Loading, DiagramError> {
    aff.check_components(lam)?;
    let solids = lam
        .nodes()
        .into_iter()
        .map(|n| Solid { residue: aff.residue(n), x: aff.position(n, eps), origin: Origin::Node(n) })
        .collect();
    let reds = reds_of(charge, &aff.quiver);
    Loading::new(aff.quiver, solids, reds, unit_shifts(&aff.quiver), eps)
}

pub(crate) fn reds_of(charge: &Charge, q: &Quiver) -> Vec<Red> {
    (0..charge.level())
        .map(|m| Red { residue: q.residue(charge.rho[m]), x: Q::from_integer(charge.kappa[m] as i128), m: m + 1 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typedeg_signature() {
        let q = Quiver::new(3).unwrap();
        let l = idempotent_loading(&"2,2,2".parse().unwrap(), &Charge::level_one(1), &q).unwrap();
        assert_eq!(l.signature().to_string(), "s3 s0 g3 s0 g0 s1 g0 s1 | r1 | g1 s2 g1 g2");
    }

    #[test]
    fn empty_is_reds_only() {
        let q = Quiver::new(3).unwrap();
        let l = idempotent_loading(&Multipartition::empty(2), &Charge::new(vec![0, 1], vec![0, 5]).unwrap(), &q).unwrap();
        assert_eq!(l.signature().to_string(), "| r0 | | r1 |");
    }

    #[test]
    fn e1_rejected() {
        let q = Quiver::new(1).unwrap();
        let r = idempotent_loading(&"1".parse().unwrap(), &Charge::level_one(0), &q);
        assert_eq!(r, Err(DiagramError::DoubledEdge));
    }

    #[test]
    fn interaction_table() {
        let q = Quiver::new(3).unwrap();
        let (s, g, r) = (Kind::Solid, Kind::Ghost, Kind::Red);
        assert!(interacts(&q, (s, Residue(1)), (s, Residue(1))));
        assert!(!interacts(&q, (s, Residue(1)), (s, Residue(2))));
        assert!(interacts(&q, (g, Residue(0)), (s, Residue(1))));
        assert!(interacts(&q, (s, Residue(0)), (g, Residue(3))));
        assert!(!interacts(&q, (g, Residue(1)), (s, Residue(0))));
        assert!(interacts(&q, (r, Residue(2)), (s, Residue(2))));
        assert!(!interacts(&q, (r, Residue(2)), (g, Residue(2))));
    }
}
