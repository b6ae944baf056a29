//! Affine type A quivers with cyclic orientation `i -> i+1 (mod e+1)`.
//!
//! Vertices are labelled `0..=e`. For `e = 1` the quiver has the two
//! parallel edges `0 -> 1` and `1 -> 0`.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("quiver parameter e must be at least 1, got {0}")]
    DegenerateQuiver(u32),
    #[error("residue {r} is not a vertex of a quiver with {vertices} vertices")]
    NotAVertex { r: u32, vertices: u32 },
}

/// A residue, stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(pub u32);

impl Residue {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    e: u32,
}

impl Quiver {
    pub fn new(e: u32) -> Result<Self, QuiverError> {
        if e == 0 {
            return Err(QuiverError::DegenerateQuiver(e));
        }
        Ok(Quiver { e })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `e' = e + 1`, the number of vertices.
    pub fn vertex_count(&self) -> u32 {
        self.e + 1
    }

    pub fn edge_count(&self) -> u32 {
        self.vertex_count()
    }

    /// Reduce an arbitrary integer to a residue.
    pub fn residue(&self, x: i64) -> Residue {
        Residue(x.rem_euclid(self.vertex_count() as i64) as u32)
    }

    pub fn check(&self, r: Residue) -> Result<Residue, QuiverError> {
        if r.0 <= self.e {
            Ok(r)
        } else {
            Err(QuiverError::NotAVertex { r: r.0, vertices: self.vertex_count() })
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Residue> {
        (0..=self.e).map(Residue)
    }

    /// Edges `i -> i+1`, one per vertex.
    pub fn edges(&self) -> Vec<(Residue, Residue)> {
        self.vertices().map(|i| (i, self.succ(i))).collect()
    }

    pub fn succ(&self, i: Residue) -> Residue {
        self.residue(i.0 as i64 + 1)
    }

    pub fn pred(&self, i: Residue) -> Residue {
        self.residue(i.0 as i64 - 1)
    }

    /// True iff there is an edge `i -> j`.
    pub fn has_edge(&self, i: Residue, j: Residue) -> bool {
        self.succ(i) == j
    }

    pub fn cartan_pairing(&self, i: Residue, j: Residue) -> i32 {
        cartan_pairing(self, i, j)
    }
}

/// `<alpha_i, alpha_j>` for the affine type A Cartan matrix.
pub fn cartan_pairing(q: &Quiver, i: Residue, j: Residue) -> i32 {
    let (i, j) = (q.residue(i.0 as i64), q.residue(j.0 as i64));
    if i == j {
        2
    } else if q.e() == 1 {
        -2
    } else if q.succ(i) == j || q.succ(j) == i {
        -1
    } else {
        0
    }
}

/// The vertex relabelling produced by subdividing the edge `edge -> edge+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelabelMap {
    pub old: Quiver,
    pub new: Quiver,
    pub edge: Residue,
    pub inserted: Residue,
}

impl RelabelMap {
    /// `r -> r` for `r <= i`, `r -> r + 1` for `r > i`.
    pub fn apply(&self, r: Residue) -> Residue {
        let r = self.old.residue(r.0 as i64);
        if r.0 <= self.edge.0 {
            r
        } else {
            Residue(r.0 + 1)
        }
    }

    /// Inverse on the image; `None` for the inserted vertex.
    pub fn inverse(&self, r: Residue) -> Option<Residue> {
        let r = self.new.residue(r.0 as i64);
        if r == self.inserted {
            None
        } else if r.0 <= self.edge.0 {
            Some(r)
        } else {
            Some(Residue(r.0 - 1))
        }
    }

    pub fn pairs(&self) -> Vec<(Residue, Residue)> {
        self.old.vertices().map(|r| (r, self.apply(r))).collect()
    }
}

pub fn subdivide_quiver(q: &Quiver, edge: Residue) -> Result<(Quiver, RelabelMap), QuiverError> {
    let edge = q.check(edge)?;
    let new = Quiver { e: q.e + 1 };
    let map = RelabelMap { old: *q, new, edge, inserted: Residue(edge.0 + 1) };
    Ok((new, map))
}

pub fn relabel_residue(m: &RelabelMap, r: Residue) -> Residue {
    m.apply(r)
}

/// The rotation `r -> r - shift`; an orientation preserving automorphism.
pub fn rotate(q: &Quiver, r: Residue, shift: i64) -> Residue {
    q.residue(r.0 as i64 - shift)
}
