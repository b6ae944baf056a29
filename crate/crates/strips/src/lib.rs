//! Maximal `{i, i+1}` strips in residue diagrams and the box construction
//! of the subdivided partition.
//!
//! From an `i`-node a strip continues to the right, from an `(i+1)`-node it
//! continues downwards. Every node of residue `i` or `i+1` has at most one
//! successor and one predecessor, so the maximal strips partition these
//! nodes.

use abacus::{lambda_plus_abacus, AbacusError, Side};
use partition_core::{residue, Multipartition, Node, Partition, PartitionError};
use quiver_core::{subdivide_quiver, Quiver, QuiverError, RelabelMap, Residue};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

mod render;

pub use render::annotated_grid;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StripError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Abacus(#[from] AbacusError),
    #[error("charge has {charge} components but the multipartition has {lam}")]
    Level { charge: usize, lam: usize },
    #[error("box construction produced a non-partition shape in component {m}")]
    BadShape { m: u32 },
    #[error("box construction gives a wrong residue at {node}")]
    BadResidue { node: Node },
    #[error("constructions disagree on {lam} (rho {rho:?}, edge {edge}): box {boxed}, abacus {abacus}")]
    Disagreement { lam: String, rho: Vec<i64>, edge: u32, boxed: String, abacus: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Right,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripType {
    A,
    B,
    C,
    D,
}

impl StripType {
    /// From the residues at the northwest and southeast ends.
    pub fn from_ends(start_is_i: bool, end_is_i: bool) -> Self {
        match (start_is_i, end_is_i) {
            (true, true) => StripType::A,
            (true, false) => StripType::B,
            (false, false) => StripType::C,
            (false, true) => StripType::D,
        }
    }

    /// Types `a` and `b` start at an `i`-node.
    pub fn starts_low(self) -> bool {
        matches!(self, StripType::A | StripType::B)
    }
}

impl fmt::Display for StripType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StripType::A => "a",
            StripType::B => "b",
            StripType::C => "c",
            StripType::D => "d",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strip {
    pub nodes: Vec<Node>,
    pub steps: Vec<Step>,
    pub start_res: Residue,
    pub end_res: Residue,
    #[serde(rename = "type")]
    pub kind: StripType,
    pub trivial: bool,
}

impl Strip {
    pub fn start(&self) -> Node {
        self.nodes[0]
    }

    pub fn end(&self) -> Node {
        *self.nodes.last().expect("strips are nonempty")
    }
}

fn check_level(lam: &Multipartition, rho: &[i64]) -> Result<(), StripError> {
    if lam.level() != rho.len() {
        return Err(StripError::Level { charge: rho.len(), lam: lam.level() });
    }
    Ok(())
}

/// All maximal strips for the edge `i -> i+1`, ordered by their northwest end.
pub fn maximal_strips(lam: &Multipartition, rho: &[i64], q: &Quiver, edge: Residue) -> Result<Vec<Strip>, StripError> {
    check_level(lam, rho)?;
    let i = q.check(edge)?;
    let j = q.succ(i);
    let res = |n: Node| residue(n, rho[n.m as usize - 1], q);
    let next = |n: Node| -> Option<(Node, Step)> {
        let r = res(n);
        let (cand, step) = if r == i { (Node::new(n.m, n.r, n.c + 1), Step::Right) } else { (Node::new(n.m, n.r + 1, n.c), Step::Down) };
        lam.contains(cand).then_some((cand, step))
    };
    let has_prev = |n: Node| -> bool {
        let r = res(n);
        let cand = if r == i {
            (n.r > 1).then(|| Node::new(n.m, n.r - 1, n.c))
        } else {
            (n.c > 1).then(|| Node::new(n.m, n.r, n.c - 1))
        };
        cand.is_some_and(|c| lam.contains(c))
    };
    let mut out = Vec::new();
    for n in lam.nodes() {
        let r = res(n);
        if (r != i && r != j) || has_prev(n) {
            continue;
        }
        let mut nodes = vec![n];
        let mut steps = Vec::new();
        let mut cur = n;
        while let Some((nx, st)) = next(cur) {
            nodes.push(nx);
            steps.push(st);
            cur = nx;
        }
        let start_res = r;
        let end_res = res(cur);
        out.push(Strip {
            trivial: nodes.len() == 1,
            kind: StripType::from_ends(start_res == i, end_res == i),
            nodes,
            steps,
            start_res,
            end_res,
        });
    }
    Ok(out)
}

/// The box construction for one component together with the image of
/// every old node and the list of inserted nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxMap {
    pub partition: Partition,
    pub image: BTreeMap<Node, Node>,
    pub inserted: Vec<Node>,
}

/// Replace every `i`-node of a type `a`/`b` strip by the pair `i, i+1` in
/// its row, and every `i`-node of a type `c`/`d` strip by the pair `i+1, i`
/// in its column. All replacements happen simultaneously.
pub fn box_map(lam: &Partition, m: u32, rho: i64, q: &Quiver, edge: Residue) -> Result<BoxMap, StripError> {
    let single = Multipartition::new(vec![lam.clone()])?;
    let strips = maximal_strips(&single, &[rho], q, edge)?;
    let i = q.check(edge)?;
    let mut row_low: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut col_high: BTreeSet<(u32, u32)> = BTreeSet::new();
    for s in &strips {
        for n in &s.nodes {
            if residue(*n, rho, q) != i {
                continue;
            }
            if s.kind.starts_low() {
                row_low.insert((n.r, n.c));
            } else {
                col_high.insert((n.r, n.c));
            }
        }
    }
    let mut image = BTreeMap::new();
    let mut inserted = Vec::new();
    for (r, c) in lam.cells() {
        let right = row_low.range((r, 0)..(r, c)).count() as u32;
        let down = col_high.iter().filter(|&&(rr, cc)| cc == c && rr <= r).count() as u32;
        let to = Node::new(m, r + down, c + right);
        image.insert(Node::new(m, r, c), to);
        if row_low.contains(&(r, c)) {
            inserted.push(Node::new(m, to.r, to.c + 1));
        } else if col_high.contains(&(r, c)) {
            inserted.push(Node::new(m, to.r - 1, to.c));
        }
    }
    let mut rows: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for n in image.values().chain(inserted.iter()) {
        rows.entry(n.r).or_default().insert(n.c);
    }
    let len = rows.keys().next_back().copied().unwrap_or(0);
    let mut parts = Vec::new();
    for r in 1..=len {
        let cols = rows.get(&r).ok_or(StripError::BadShape { m })?;
        let w = cols.len() as u32;
        if cols.iter().next_back() != Some(&w) {
            return Err(StripError::BadShape { m });
        }
        parts.push(w);
    }
    let partition = Partition::new(parts).map_err(|_| StripError::BadShape { m })?;
    Ok(BoxMap { partition, image, inserted })
}

/// Charge of the residue fill of the subdivided partition.
pub fn rho_plus(rho: i64, map: &RelabelMap) -> i64 {
    map.apply(map.old.residue(rho)).0 as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxPlus {
    pub partition: Multipartition,
    pub rho_plus: Vec<i64>,
    pub quiver: Quiver,
}

/// The box construction of the subdivided multipartition. Residues are
/// checked in the subdivided quiver: old nodes carry relabelled residues
/// and inserted nodes carry the new vertex.
pub fn lambda_plus_box(lam: &Multipartition, rho: &[i64], q: &Quiver, edge: Residue) -> Result<BoxPlus, StripError> {
    check_level(lam, rho)?;
    let (nq, map) = subdivide_quiver(q, edge)?;
    let mut comps = Vec::new();
    let mut rho_out = Vec::new();
    for (idx, (p, &r)) in lam.components().iter().zip(rho).enumerate() {
        let m = idx as u32 + 1;
        let bm = box_map(p, m, r, q, edge)?;
        let rp = rho_plus(r, &map);
        for (from, to) in &bm.image {
            if residue(*to, rp, &nq) != map.apply(residue(*from, r, q)) {
                return Err(StripError::BadResidue { node: *to });
            }
        }
        for n in &bm.inserted {
            if residue(*n, rp, &nq) != map.inserted {
                return Err(StripError::BadResidue { node: *n });
            }
        }
        comps.push(bm.partition);
        rho_out.push(rp);
    }
    Ok(BoxPlus { partition: Multipartition::new(comps)?, rho_plus: rho_out, quiver: nq })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaPlus {
    pub partition: Multipartition,
    /// Residue fill charge in the subdivided quiver.
    pub rho_plus: Vec<i64>,
    /// Integer charges of the left runner insertion.
    pub abacus_charge: Vec<i64>,
    pub agreement: bool,
}

/// Both constructions; a disagreement is returned as an error.
pub fn lambda_plus(lam: &Multipartition, rho: &[i64], q: &Quiver, edge: Residue) -> Result<LambdaPlus, StripError> {
    let bx = lambda_plus_box(lam, rho, q, edge)?;
    let mut comps = Vec::new();
    let mut charges = Vec::new();
    for (p, &r) in lam.components().iter().zip(rho) {
        let a = lambda_plus_abacus(p, r, q, edge, Side::Left)?;
        comps.push(a.partition);
        charges.push(a.charge);
    }
    let ab = Multipartition::new(comps)?;
    if ab != bx.partition {
        return Err(StripError::Disagreement {
            lam: lam.to_string(),
            rho: rho.to_vec(),
            edge: edge.0,
            boxed: bx.partition.to_string(),
            abacus: ab.to_string(),
        });
    }
    Ok(LambdaPlus { partition: bx.partition, rho_plus: bx.rho_plus, abacus_charge: charges, agreement: true })
}

/// Number of nontrivial strips whose northwest end has residue `i+1`.
pub fn count_high_strips(strips: &[Strip]) -> usize {
    strips.iter().filter(|s| !s.trivial && !s.kind.starts_low()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Quiver {
        Quiver::new(3).unwrap()
    }

    fn one(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn typedeg_strip() {
        let s = maximal_strips(&one("2,2,2"), &[1], &q3(), Residue(0)).unwrap();
        assert_eq!(s.len(), 1);
        let cells: Vec<_> = s[0].nodes.iter().map(|n| (n.r, n.c)).collect();
        assert_eq!(cells, vec![(1, 1), (2, 1), (2, 2), (3, 2)]);
        assert_eq!(s[0].steps, vec![Step::Down, Step::Right, Step::Down]);
        assert_eq!(s[0].kind, StripType::D);
    }

    #[test]
    fn strips_of_432() {
        let s = maximal_strips(&one("4,3,2"), &[3], &q3(), Residue(0)).unwrap();
        assert_eq!(s.len(), 2);
        let cells: Vec<_> = s[0].nodes.iter().map(|n| (n.r, n.c)).collect();
        assert_eq!(cells, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(s[0].kind, StripType::A);
        assert_eq!(s[1].nodes, vec![Node::new(1, 3, 1)]);
        assert!(s[1].trivial);
        assert_eq!(s[1].kind, StripType::C);
    }

    #[test]
    fn empty_has_no_strips() {
        assert!(maximal_strips(&one(""), &[0], &q3(), Residue(0)).unwrap().is_empty());
    }

    #[test]
    fn single_node() {
        let b = lambda_plus_box(&one("1"), &[0], &q3(), Residue(0)).unwrap();
        assert_eq!(b.partition.to_string(), "2");
        assert_eq!(b.rho_plus, vec![0]);
    }

    #[test]
    fn level_mismatch() {
        assert!(matches!(maximal_strips(&one("1"), &[0, 1], &q3(), Residue(0)), Err(StripError::Level { .. })));
    }
}
