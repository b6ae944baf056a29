use crate::affine::{affine_extend, AffineData};
use crate::loading::{reds_of, unit_shifts, Loading, Origin, Solid};
use crate::rat::Q;
use crate::straight::{straight_diagram, StraightDiagram};
use crate::DiagramError;
use partition_core::{multipartitions, Charge, Multipartition, Node};
use quiver_core::Quiver;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A `lam`-tableau of type `mu`: each node of `lam` goes to a node of `mu`,
/// standing for its coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub lam: Multipartition,
    pub mu: Multipartition,
    pub map: BTreeMap<Node, Node>,
}

struct Ctx {
    aff: AffineData,
    eps: Q,
    l: usize,
    kappa: Vec<i64>,
}

impl Ctx {
    fn new(lam: &Multipartition, mu: &Multipartition, charge: &Charge, q: &Quiver) -> Result<Self, DiagramError> {
        if q.e() < 2 {
            return Err(DiagramError::DoubledEdge);
        }
        if lam.size() != mu.size() {
            return Err(DiagramError::SizeMismatch(lam.size(), mu.size()));
        }
        let aff = affine_extend(charge, lam.size(), q);
        aff.check_components(lam)?;
        aff.check_components(mu)?;
        let eps = aff.default_eps();
        Ok(Ctx { aff, eps, l: charge.level(), kappa: charge.kappa.clone() })
    }

    fn pos(&self, n: Node) -> Q {
        self.aff.position(n, self.eps)
    }

    fn admissible(&self, at: Node, val: Q, get: impl Fn(Node) -> Option<Q>) -> bool {
        let one = Q::from_integer(1);
        if at.r == 1 && at.c == 1 && (at.m as usize) <= self.l && val > Q::from_integer(self.kappa[at.m as usize - 1] as i128) {
            return false;
        }
        if at.r > 1 {
            if let Some(up) = get(Node::new(at.m, at.r - 1, at.c)) {
                if val + one >= up {
                    return false;
                }
            }
        }
        if at.c > 1 {
            if let Some(left) = get(Node::new(at.m, at.r, at.c - 1)) {
                if val >= left + one {
                    return false;
                }
            }
        }
        true
    }
}

impl Tableau {
    pub fn is_bijective(&self) -> bool {
        let keys: BTreeSet<Node> = self.map.keys().copied().collect();
        let vals: BTreeSet<Node> = self.map.values().copied().collect();
        keys == self.lam.nodes().into_iter().collect() && vals == self.mu.nodes().into_iter().collect()
    }
}

pub fn canonical_tableau(lam: &Multipartition) -> Tableau {
    Tableau { lam: lam.clone(), mu: lam.clone(), map: lam.nodes().into_iter().map(|n| (n, n)).collect() }
}

pub fn is_semistandard(t: &Tableau, charge: &Charge, q: &Quiver) -> Result<bool, DiagramError> {
    let ctx = Ctx::new(&t.lam, &t.mu, charge, q)?;
    if !t.is_bijective() {
        return Ok(false);
    }
    let get = |n: Node| t.map.get(&n).map(|&v| ctx.pos(v));
    Ok(t.map.iter().all(|(&a, &b)| ctx.admissible(a, ctx.pos(b), get)))
}

/// All semistandard `lam`-tableaux of type `mu`, by backtracking over the
/// nodes of `lam` in `(m, r, c)` order.
pub fn enumerate_sstd(lam: &Multipartition, mu: &Multipartition, charge: &Charge, q: &Quiver) -> Result<Vec<Tableau>, DiagramError> {
    let ctx = Ctx::new(lam, mu, charge, q)?;
    let nodes = lam.nodes();
    let targets: Vec<(Node, Q)> = mu.nodes().into_iter().map(|n| (n, ctx.pos(n))).collect();
    let mut used = vec![false; targets.len()];
    let mut cur: BTreeMap<Node, usize> = BTreeMap::new();
    let mut out = Vec::new();
    fn go(
        k: usize,
        nodes: &[Node],
        targets: &[(Node, Q)],
        used: &mut [bool],
        cur: &mut BTreeMap<Node, usize>,
        ctx: &Ctx,
        lam: &Multipartition,
        mu: &Multipartition,
        out: &mut Vec<Tableau>,
    ) {
        if k == nodes.len() {
            let map = cur.iter().map(|(&a, &j)| (a, targets[j].0)).collect();
            out.push(Tableau { lam: lam.clone(), mu: mu.clone(), map });
            return;
        }
        let at = nodes[k];
        for j in 0..targets.len() {
            if used[j] {
                continue;
            }
            let ok = ctx.admissible(at, targets[j].1, |n| cur.get(&n).map(|&i| targets[i].1));
            if !ok {
                continue;
            }
            used[j] = true;
            cur.insert(at, j);
            go(k + 1, nodes, targets, used, cur, ctx, lam, mu, out);
            cur.remove(&at);
            used[j] = false;
        }
    }
    go(0, &nodes, &targets, &mut used, &mut cur, &ctx, lam, mu, &mut out);
    out.sort();
    Ok(out)
}

/// Semistandard tableaux of every type `mu` with the level of `lam`.
pub fn enumerate_sstd_all(lam: &Multipartition, charge: &Charge, q: &Quiver) -> Result<Vec<Tableau>, DiagramError> {
    let mut out = Vec::new();
    for mu in multipartitions(lam.size(), lam.level()) {
        out.extend(enumerate_sstd(lam, &mu, charge, q)?);
    }
    Ok(out)
}

/// `w_T` as a 0-based permutation: the `k`-th smallest coordinate of `lam`
/// goes to position `w[k]` among the sorted coordinates of `mu`.
pub fn tableau_permutation(t: &Tableau, charge: &Charge, q: &Quiver) -> Result<Vec<usize>, DiagramError> {
    let ctx = Ctx::new(&t.lam, &t.mu, charge, q)?;
    let mut xl: Vec<(Q, Node)> = t.lam.nodes().into_iter().map(|n| (ctx.pos(n), n)).collect();
    xl.sort();
    let mut xm: Vec<Q> = t.mu.nodes().into_iter().map(|n| ctx.pos(n)).collect();
    xm.sort();
    xl.iter()
        .map(|(_, n)| {
            let target = t.map.get(n).ok_or_else(|| DiagramError::Mismatch(format!("node {n} unassigned")))?;
            let x = ctx.pos(*target);
            Ok(xm.binary_search(&x).expect("coordinate of mu"))
        })
        .collect()
}

/// `D_T`: solids start at the coordinates of `lam` and end at the values of
/// `t`, carrying the residues of `lam`.
pub fn tableau_diagram(t: &Tableau, charge: &Charge, q: &Quiver) -> Result<StraightDiagram, DiagramError> {
    let ctx = Ctx::new(&t.lam, &t.mu, charge, q)?;
    if !t.is_bijective() {
        return Err(DiagramError::Mismatch("tableau is not a bijection".into()));
    }
    let nodes = t.lam.nodes();
    let bottom: Vec<Solid> = nodes
        .iter()
        .map(|&n| Solid { residue: ctx.aff.residue(n), x: ctx.pos(n), origin: Origin::Node(n) })
        .collect();
    let top: Vec<Solid> = nodes
        .iter()
        .map(|&n| {
            let v = t.map[&n];
            Solid { residue: ctx.aff.residue(n), x: ctx.pos(v), origin: Origin::Node(v) }
        })
        .collect();
    let reds = reds_of(charge, q);
    let b = Loading::new(*q, bottom, reds.clone(), unit_shifts(q), ctx.eps)?;
    let tp = Loading::new(*q, top, reds, unit_shifts(q), ctx.eps)?;
    straight_diagram(b, tp, (0..nodes.len()).collect())
}

pub fn tableau_degree(t: &Tableau, charge: &Charge, q: &Quiver) -> Result<i64, DiagramError> {
    Ok(tableau_diagram(t, charge, q)?.degree())
}

/// A Laurent polynomial in `q` with nonnegative coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDim(pub BTreeMap<i64, u64>);

impl GradedDim {
    pub fn add_term(&mut self, deg: i64) {
        *self.0.entry(deg).or_insert(0) += 1;
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(&d, &c)| {
                let mono = match d {
                    0 => String::new(),
                    1 => "q".into(),
                    _ => format!("q^{d}"),
                };
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `sum_T q^deg(T)` over the semistandard tableaux of shape `lam`.
pub fn graded_cell_dim(lam: &Multipartition, charge: &Charge, q: &Quiver) -> Result<GradedDim, DiagramError> {
    let mut g = GradedDim::default();
    for t in enumerate_sstd_all(lam, charge, q)? {
        g.add_term(tableau_degree(&t, charge, q)?);
    }
    Ok(g)
}

/// `lam` is dominated by `mu`: some bijection moves every coordinate of
/// `lam` weakly right. Decided on sorted coordinates.
pub fn dominated_by(lam: &Multipartition, mu: &Multipartition, charge: &Charge, q: &Quiver) -> Result<bool, DiagramError> {
    let ctx = Ctx::new(lam, mu, charge, q)?;
    let sorted = |p: &Multipartition| {
        let mut v: Vec<Q> = p.nodes().into_iter().map(|n| ctx.pos(n)).collect();
        v.sort();
        v
    };
    Ok(sorted(lam).iter().zip(sorted(mu).iter()).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_semistandard() {
        let q = Quiver::new(2).unwrap();
        let ch = Charge::level_one(0);
        for n in 0..6 {
            for lam in multipartitions(n, 1) {
                assert!(is_semistandard(&canonical_tableau(&lam), &ch, &q).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn empty_cell_dim_is_one() {
        let q = Quiver::new(2).unwrap();
        let g = graded_cell_dim(&Multipartition::empty(1), &Charge::level_one(0), &q).unwrap();
        assert_eq!(g.to_string(), "1");
    }

    #[test]
    fn canonical_permutation_is_identity() {
        let q = Quiver::new(3).unwrap();
        let ch = Charge::level_one(1);
        let lam: Multipartition = "3,1".parse().unwrap();
        assert_eq!(tableau_permutation(&canonical_tableau(&lam), &ch, &q).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn size_mismatch() {
        let q = Quiver::new(2).unwrap();
        let r = dominated_by(&"2".parse().unwrap(), &"1".parse().unwrap(), &Charge::level_one(0), &q);
        assert_eq!(r, Err(DiagramError::SizeMismatch(2, 1)));
    }

    #[test]
    fn laurent_display() {
        let mut g = GradedDim::default();
        for d in [-1, 0, 0, 2] {
            g.add_term(d);
        }
        assert_eq!(g.to_string(), "q^-1 + 2 + q^2");
    }
}
