use crate::loading::{Kind, Loading};
use crate::rat::Q;
use crate::DiagramError;
use quiver_core::{cartan_pairing, Residue};
use serde::{Deserialize, Serialize};

/// Strings drawn as straight segments between two loadings. Bottom solid
/// `k` ends at top solid `matching[k]`; ghosts follow their solids and reds
/// are matched by index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraightDiagram {
    pub bottom: Loading,
    pub top: Loading,
    pub matching: Vec<usize>,
}

pub fn straight_diagram(bottom: Loading, top: Loading, matching: Vec<usize>) -> Result<StraightDiagram, DiagramError> {
    let mis = |s: &str| Err(DiagramError::Mismatch(s.to_string()));
    if bottom.quiver != top.quiver {
        return mis("quivers differ");
    }
    if bottom.shifts != top.shifts {
        return mis("ghost shifts differ");
    }
    let n = bottom.solids.len();
    if top.solids.len() != n || matching.len() != n {
        return mis("solid counts differ");
    }
    let mut seen = vec![false; n];
    for (k, &j) in matching.iter().enumerate() {
        if j >= n || seen[j] {
            return mis("matching is not a bijection");
        }
        seen[j] = true;
        if bottom.solids[k].residue != top.solids[j].residue {
            return mis("matching changes a residue");
        }
    }
    if bottom.reds.len() != top.reds.len()
        || bottom.reds.iter().zip(&top.reds).any(|(a, b)| a.residue != b.residue || a.x != b.x)
    {
        return mis("red strings differ");
    }
    Ok(StraightDiagram { bottom, top, matching })
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    kind: Kind,
    residue: Residue,
    owner: Option<usize>,
    b: Q,
    t: Q,
}

impl StraightDiagram {
    fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for (k, s) in self.bottom.solids.iter().enumerate() {
            let t = &self.top.solids[self.matching[k]];
            let sh = self.bottom.shift(s.residue);
            out.push(Segment { kind: Kind::Solid, residue: s.residue, owner: Some(k), b: s.x, t: t.x });
            out.push(Segment { kind: Kind::Ghost, residue: s.residue, owner: Some(k), b: s.x + sh, t: t.x + sh });
        }
        for r in &self.bottom.reds {
            out.push(Segment { kind: Kind::Red, residue: r.residue, owner: None, b: r.x, t: r.x });
        }
        out
    }

    /// Pairs of strings whose order differs between bottom and top, as
    /// `((kind, residue), (kind, residue))`.
    pub fn crossings(&self) -> Vec<((Kind, Residue), (Kind, Residue))> {
        let seg = self.segments();
        let mut out = Vec::new();
        for (i, u) in seg.iter().enumerate() {
            for v in &seg[i + 1..] {
                if u.owner.is_some() && u.owner == v.owner {
                    continue;
                }
                if (u.b < v.b) != (u.t < v.t) {
                    out.push(((u.kind, u.residue), (v.kind, v.residue)));
                }
            }
        }
        out
    }

    /// Number of crossings between two solid strings.
    pub fn solid_crossings(&self) -> usize {
        self.crossings().iter().filter(|(a, b)| a.0 == Kind::Solid && b.0 == Kind::Solid).count()
    }

    /// Swap top and bottom.
    pub fn reverse(&self) -> StraightDiagram {
        let mut inv = vec![0; self.matching.len()];
        for (k, &j) in self.matching.iter().enumerate() {
            inv[j] = k;
        }
        StraightDiagram { bottom: self.top.clone(), top: self.bottom.clone(), matching: inv }
    }

    pub fn degree(&self) -> i64 {
        degree(self)
    }
}

fn local_degree(q: &quiver_core::Quiver, a: (Kind, Residue), b: (Kind, Residue)) -> i64 {
    use Kind::*;
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    match (a.0, b.0) {
        (Solid, Solid) if a.1 == b.1 => -(cartan_pairing(q, a.1, a.1) as i64),
        (Solid, Red) if a.1 == b.1 => cartan_pairing(q, a.1, a.1) as i64 / 2,
        (Solid, Ghost) if q.has_edge(b.1, a.1) => -(cartan_pairing(q, b.1, a.1) as i64),
        _ => 0,
    }
}

/// Sum of the local crossing degrees. Dots are not modelled.
pub fn degree(d: &StraightDiagram) -> i64 {
    let q = d.bottom.quiver;
    d.crossings().into_iter().map(|(a, b)| local_degree(&q, a, b)).sum()
}
