use diagram::{Kind, Loading, StringDesc, Q};
use quiver_core::Residue;
use serde::{Deserialize, Serialize};
use strips::StripType;

/// Neighbouring strings of a tuple lie strictly closer than this.
pub const CLOSE: Q = Q::new_raw(1, 2);

/// A maximal run of adjacent strings alternating between ghost `i` and
/// solid `i+1`, listed left to right. Neighbours in a run are less than
/// [`CLOSE`] apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloseTuple {
    pub strings: Vec<StringDesc>,
    #[serde(rename = "type")]
    pub kind: StripType,
}

impl CloseTuple {
    /// A lone solid `i+1`.
    pub fn is_single_solid(&self) -> bool {
        self.strings.len() == 1 && self.strings[0].kind == Kind::Solid
    }

    /// New solids go left of the ghosts for types a and b.
    pub fn inserts_left(&self) -> bool {
        self.kind.starts_low()
    }
}

fn member(s: &StringDesc, i: Residue, j: Residue) -> Option<bool> {
    match s.kind {
        Kind::Ghost if s.residue == i => Some(true),
        Kind::Solid if s.residue == j => Some(false),
        _ => None,
    }
}

pub fn close_tuples(load: &Loading, edge: Residue) -> Vec<CloseTuple> {
    let q = load.quiver;
    let (i, j) = (edge, q.succ(edge));
    let mut out = Vec::new();
    let mut run: Vec<(StringDesc, bool)> = Vec::new();
    let mut flush = |run: &mut Vec<(StringDesc, bool)>| {
        if let (Some(first), Some(last)) = (run.first(), run.last()) {
            let kind = StripType::from_ends(last.1, first.1);
            out.push(CloseTuple { strings: run.iter().map(|p| p.0).collect(), kind });
        }
        run.clear();
    };
    for s in load.strings() {
        match member(&s, i, j) {
            Some(g) if run.last().is_none_or(|p| p.1 != g && s.x - p.0.x < CLOSE) => run.push((s, g)),
            Some(g) => {
                flush(&mut run);
                run.push((s, g));
            }
            None => flush(&mut run),
        }
    }
    flush(&mut run);
    out
}

pub fn tuple_types(load: &Loading, edge: Residue) -> Vec<StripType> {
    let mut v: Vec<StripType> = close_tuples(load, edge).into_iter().map(|t| t.kind).collect();
    v.sort();
    v
}
