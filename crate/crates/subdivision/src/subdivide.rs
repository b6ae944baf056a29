use crate::tuples::close_tuples;
use crate::SubdivisionError;
use diagram::{straight_diagram, Kind, Loading, Origin, Red, Solid, StraightDiagram, Q};
use quiver_core::{subdivide_quiver, RelabelMap, Residue};
use serde::{Deserialize, Serialize};

/// Offsets of the subdivision map: new solids sit `t` from their host
/// ghost and carry ghosts shifted by `eps_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionParams {
    pub edge: Residue,
    #[serde(with = "diagram::rat")]
    pub t: Q,
    #[serde(with = "diagram::rat")]
    pub eps_prime: Q,
}

impl SubdivisionParams {
    /// `t = gap/4`, `eps' = gap/8` for the smallest gap between strings.
    pub fn homogeneous(load: &Loading, edge: Residue) -> Self {
        Self::from_gap(load.min_gap(), edge)
    }

    pub fn from_gap(gap: Q, edge: Residue) -> Self {
        SubdivisionParams { edge, t: gap / Q::from_integer(4), eps_prime: gap / Q::from_integer(8) }
    }

    fn check(&self, load: &Loading) -> Result<(), SubdivisionError> {
        let gap = load.min_gap();
        let zero = Q::from_integer(0);
        if !(zero < self.eps_prime && self.eps_prime < self.t && (self.t + self.eps_prime) * Q::from_integer(2) < gap) {
            return Err(SubdivisionError::Params {
                t: self.t.to_string(),
                eps: self.eps_prime.to_string(),
                gap: gap.to_string(),
            });
        }
        Ok(())
    }
}

/// Side on which new solids are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Insertion {
    /// Left for tuples of type a and b, right for c and d.
    ByType,
    /// Always left. Not an algebra map; kept for comparison.
    UnsafeLeft,
    /// Always right. Not an algebra map; kept for comparison.
    UnsafeRight,
}

fn relabel(load: &Loading, map: &RelabelMap, eps_prime: Q) -> (Vec<Solid>, Vec<Red>, Vec<Q>) {
    let solids = load.solids.iter().map(|s| Solid { residue: map.apply(s.residue), ..s.clone() }).collect();
    let reds = load.reds.iter().map(|r| Red { residue: map.apply(r.residue), ..r.clone() }).collect();
    let mut shifts = vec![eps_prime; map.new.vertex_count() as usize];
    for r in map.old.vertices() {
        shifts[map.apply(r).0 as usize] = load.shift(r);
    }
    (solids, reds, shifts)
}

pub fn subdivide_idempotent(load: &Loading, p: &SubdivisionParams) -> Result<Loading, SubdivisionError> {
    subdivide_idempotent_with(load, p, Insertion::ByType)
}

/// Relabel, then add one solid of the new residue beside every ghost of
/// residue `edge`. Existing solids keep their indices; new solids follow
/// in order of their host ghosts.
pub fn subdivide_idempotent_with(load: &Loading, p: &SubdivisionParams, side: Insertion) -> Result<Loading, SubdivisionError> {
    insert(load, p, &host_sides(load, p.edge, side))
}

/// `(host, left)` for every ghost of residue `edge`, in left to right order.
fn host_sides(load: &Loading, edge: Residue, side: Insertion) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for tuple in close_tuples(load, edge) {
        let left = match side {
            Insertion::ByType => tuple.inserts_left(),
            Insertion::UnsafeLeft => true,
            Insertion::UnsafeRight => false,
        };
        out.extend(tuple.strings.iter().filter(|s| s.kind == Kind::Ghost).map(|s| (s.source, left)));
    }
    out
}

/// Relabel, then add one solid of the new residue `t` to the given side of
/// the ghost of each listed host. Existing solids keep their indices.
fn insert(load: &Loading, p: &SubdivisionParams, hosts: &[(usize, bool)]) -> Result<Loading, SubdivisionError> {
    p.check(load)?;
    let (nq, map) = subdivide_quiver(&load.quiver, p.edge)?;
    let (mut solids, reds, shifts) = relabel(load, &map, p.eps_prime);
    for &(host, left) in hosts {
        let g = load.ghost_x(host);
        let x = if left { g - p.t } else { g + p.t };
        solids.push(Solid { residue: map.inserted, x, origin: Origin::Inserted { host } });
    }
    Ok(Loading::new(nq, solids, reds, shifts, load.epsilon)?)
}

pub fn subdivide_diagram(d: &StraightDiagram, edge: Residue) -> Result<StraightDiagram, SubdivisionError> {
    let gap = d.bottom.min_gap().min(d.top.min_gap());
    subdivide_diagram_with(d, &SubdivisionParams::from_gap(gap, edge))
}

/// Subdivide the bottom boundary and carry each new solid parallel to its
/// host ghost, on the same side, up to the top. Old solids keep their
/// matching.
pub fn subdivide_diagram_with(d: &StraightDiagram, p: &SubdivisionParams) -> Result<StraightDiagram, SubdivisionError> {
    let below = host_sides(&d.bottom, p.edge, Insertion::ByType);
    let above: Vec<(usize, bool)> = below.iter().map(|&(h, left)| (d.matching[h], left)).collect();
    let bottom = insert(&d.bottom, p, &below)?;
    let top = insert(&d.top, p, &above)?;
    let n = d.bottom.solids.len();
    let mut matching = d.matching.clone();
    matching.extend(n..n + below.len());
    Ok(straight_diagram(bottom, top, matching)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagram::idempotent_loading;
    use partition_core::Charge;
    use quiver_core::Quiver;

    fn load(lam: &str, rho: i64, e: u32) -> Loading {
        idempotent_loading(&lam.parse().unwrap(), &Charge::level_one(rho), &Quiver::new(e).unwrap()).unwrap()
    }

    #[test]
    fn one_new_solid_per_ghost() {
        let l = load("2,2,2", 1, 3);
        let s = subdivide_idempotent(&l, &SubdivisionParams::homogeneous(&l, Residue(0))).unwrap();
        assert_eq!(s.quiver.e(), 4);
        assert_eq!(s.solids.len(), 8);
        let new: Vec<_> = s.solids[6..].iter().map(|x| x.residue).collect();
        assert_eq!(new, vec![Residue(1), Residue(1)]);
        assert_eq!(s.shift(Residue(1)), Q::new(1, 8) * l.min_gap());
    }

    #[test]
    fn params_checked() {
        let l = load("2,1", 0, 2);
        let gap = l.min_gap();
        let p = SubdivisionParams { edge: Residue(0), t: gap, eps_prime: gap / Q::from_integer(8) };
        assert!(matches!(subdivide_idempotent(&l, &p), Err(SubdivisionError::Params { .. })));
    }

    #[test]
    fn identity_stays_identity() {
        let l = load("3,1", 2, 2);
        let d = straight_diagram(l.clone(), l, (0..4).collect()).unwrap();
        let s = subdivide_diagram(&d, Residue(2)).unwrap();
        assert_eq!(s.crossings().len(), 0);
        assert_eq!(s.bottom, s.top);
    }
}
