//! Partitions, multipartitions, charges and residue-filled Young diagrams.
//!
//! Nodes are 1-based `(m, r, c)` triples: component, row, column.

use quiver_core::{Quiver, Residue};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

mod enumerate;
mod parse;

pub use enumerate::{multipartitions, partitions, partitions_up_to};
pub use parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing: {0} < {1}")]
    NotDecreasing(u32, u32),
    #[error("a multipartition needs at least one component")]
    NoComponents,
    #[error("charge has {rho} residues but {kappa} positions")]
    ChargeShape { rho: usize, kappa: usize },
    #[error("charge positions must be strictly increasing")]
    KappaOrder,
    #[error("charge has level {charge}, multipartition has level {lam}")]
    LevelMismatch { charge: usize, lam: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (i, w) in parts.iter().enumerate() {
            if *w == 0 {
                return Err(PartitionError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < *w {
                return Err(PartitionError::NotDecreasing(parts[i - 1], *w));
            }
        }
        Ok(Partition { parts })
    }

    /// Accepts trailing zeros and drops them.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, r: u32, c: u32) -> bool {
        r >= 1 && c >= 1 && self.part(r as usize) >= c
    }

    /// Nodes `(r, c)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (1..=w).map(move |c| (i as u32 + 1, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=w).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = PartitionError;
    fn try_from(v: Vec<Partition>) -> Result<Self, Self::Error> {
        Multipartition::new(v)
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(m: Multipartition) -> Self {
        m.components
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Multipartition { components: vec![p] }
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, PartitionError> {
        if components.is_empty() {
            return Err(PartitionError::NoComponents);
        }
        Ok(Multipartition { components })
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { components: vec![Partition::empty(); level.max(1)] }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, m: usize) -> &Partition {
        &self.components[m - 1]
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (i, p) in self.components.iter().enumerate() {
            for (r, c) in p.cells() {
                out.push(Node::new(i as u32 + 1, r, c));
            }
        }
        out
    }

    pub fn contains(&self, n: Node) -> bool {
        n.m >= 1 && (n.m as usize) <= self.level() && self.component(n.m as usize).contains(n.r, n.c)
    }

    /// Pad with empty components up to `level`.
    pub fn padded(&self, level: usize) -> Multipartition {
        let mut components = self.components.clone();
        while components.len() < level {
            components.push(Partition::empty());
        }
        Multipartition { components }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub m: u32,
    pub r: u32,
    pub c: u32,
}

impl Node {
    pub fn new(m: u32, r: u32, c: u32) -> Self {
        Node { m, r, c }
    }

    pub fn content(&self) -> i64 {
        self.c as i64 - self.r as i64
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.r, self.c)
    }
}

/// Residues `rho_m` and red positions `kappa_m`, one per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Charge {
    pub rho: Vec<i64>,
    pub kappa: Vec<i64>,
}

impl Charge {
    pub fn new(rho: Vec<i64>, kappa: Vec<i64>) -> Result<Self, PartitionError> {
        if rho.len() != kappa.len() || rho.is_empty() {
            return Err(PartitionError::ChargeShape { rho: rho.len(), kappa: kappa.len() });
        }
        if kappa.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PartitionError::KappaOrder);
        }
        Ok(Charge { rho, kappa })
    }

    /// Level one charge with `kappa = 0`.
    pub fn level_one(rho: i64) -> Self {
        Charge { rho: vec![rho], kappa: vec![0] }
    }

    /// Red positions spaced far enough apart that components of size
    /// at most `n` never overlap.
    pub fn spread(rho: Vec<i64>, n: u32) -> Self {
        let gap = 2 * n as i64 + 2;
        let kappa = (0..rho.len() as i64).map(|m| m * gap).collect();
        Charge { rho, kappa }
    }

    pub fn level(&self) -> usize {
        self.rho.len()
    }

    pub fn check_level(&self, lam: &Multipartition) -> Result<(), PartitionError> {
        if self.level() != lam.level() {
            return Err(PartitionError::LevelMismatch { charge: self.level(), lam: lam.level() });
        }
        Ok(())
    }
}

/// `c - r + rho (mod e')`.
pub fn residue(node: Node, rho: i64, q: &Quiver) -> Residue {
    q.residue(node.content() + rho)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueDiagram {
    pub lam: Multipartition,
    pub fill: BTreeMap<Node, Residue>,
}

impl ResidueDiagram {
    pub fn get(&self, n: Node) -> Option<Residue> {
        self.fill.get(&n).copied()
    }

    /// Rows of residues for component `m` (1-based).
    pub fn rows(&self, m: usize) -> Vec<Vec<u32>> {
        let p = self.lam.component(m);
        (1..=p.len() as u32)
            .map(|r| (1..=p.part(r as usize)).map(|c| self.fill[&Node::new(m as u32, r, c)].0).collect())
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for m in 1..=self.lam.level() {
            if m > 1 {
                out.push_str("--\n");
            }
            let rows = self.rows(m);
            if rows.is_empty() {
                out.push_str("(empty)\n");
            }
            for row in rows {
                let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                out.push_str(&s.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

pub fn residue_diagram(lam: &Multipartition, rho: &[i64], q: &Quiver) -> ResidueDiagram {
    let fill = lam.nodes().into_iter().map(|n| (n, residue(n, rho[n.m as usize - 1], q))).collect();
    ResidueDiagram { lam: lam.clone(), fill }
}

pub fn count_residue_nodes(lam: &Multipartition, rho: &[i64], q: &Quiver, i: Residue) -> usize {
    lam.nodes().into_iter().filter(|&n| residue(n, rho[n.m as usize - 1], q) == i).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaSequence {
    pub e_prime: u32,
    pub beta: Vec<i64>,
}

impl BetaSequence {
    /// `(a_i, b_i)` with `beta_i = a_i e' + b_i`, `0 <= b_i < e'`.
    pub fn decompose(&self, i: usize) -> (i64, i64) {
        split(self.beta[i - 1], self.e_prime)
    }
}

/// `x = a e' + b` with `0 <= b < e'`.
pub fn split(x: i64, e_prime: u32) -> (i64, i64) {
    let e = e_prime as i64;
    (x.div_euclid(e), x.rem_euclid(e))
}

/// The first `count` beta numbers `lambda_i + rho - i`.
pub fn beta_numbers(lam: &Partition, rho: i64, count: usize, e_prime: u32) -> BetaSequence {
    let beta = (1..=count.max(lam.len())).map(|i| lam.part(i) as i64 + rho - i as i64).collect();
    BetaSequence { e_prime, beta }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert_eq!(Partition::new(vec![2, 3]), Err(PartitionError::NotDecreasing(2, 3)));
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart(1)));
        assert_eq!(Partition::from_padded(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn conjugate_small() {
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }

    #[test]
    fn residues_of_single_nodes() {
        let q = Quiver::new(3).unwrap();
        assert_eq!(residue(Node::new(1, 1, 1), 0, &q), Residue(0));
        assert_eq!(residue(Node::new(1, 2, 1), 0, &q), Residue(3));
        assert_eq!(residue(Node::new(1, 3, 1), 0, &q), Residue(2));
        assert_eq!(residue(Node::new(1, 2, 1), 3, &q), Residue(2));
    }

    #[test]
    fn charge_checks() {
        assert!(Charge::new(vec![0, 1], vec![2, 1]).is_err());
        assert!(Charge::new(vec![0], vec![1, 2]).is_err());
        assert!(Charge::new(vec![0, 1], vec![1, 2]).is_ok());
    }

    #[test]
    fn beta_decomposition() {
        let b = beta_numbers(&p(&[4, 3, 2]), 3, 5, 4);
        assert_eq!(b.beta, vec![6, 4, 2, -1, -2]);
        assert_eq!(b.decompose(4), (-1, 3));
    }
}
