//! Pulling strings to the right.
//!
//! Each solid and its ghost form a rigid group. Reds never move. A pair of
//! interacting strings keeps its relative order, so every such pair with
//! the left string in a group bounds that group from above. The pulled
//! loading puts every group at its largest position, with an infinitesimal
//! `delta` separating blocked strings. Ties between strings that do not
//! interact are broken by (solid before ghost, smaller residue first).

use crate::loading::{interacts, Kind, Loading};
use crate::rat::Q;
use crate::DiagramError;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

/// `q - d * delta` for an infinitesimal `delta > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Bound {
    q: Q,
    d: i64,
}

impl Ord for Bound {
    fn cmp(&self, o: &Self) -> Ordering {
        self.q.cmp(&o.q).then(o.d.cmp(&self.d))
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

enum Constraint {
    /// `X_a + off_u <= x - delta`
    Red { a: usize, off_u: Q, x: Q },
    /// `X_a + off_u <= X_b + off_v - delta`
    Group { a: usize, off_u: Q, b: usize, off_v: Q },
}

fn offset(kind: Kind, shift: Q) -> Q {
    if kind == Kind::Ghost {
        shift
    } else {
        Q::from_integer(0)
    }
}

fn constraints(load: &Loading, shifts: &[Q]) -> Vec<Constraint> {
    let s = load.strings();
    let mut out = Vec::new();
    for (i, u) in s.iter().enumerate() {
        if u.kind == Kind::Red {
            continue;
        }
        let off_u = offset(u.kind, shifts[u.residue.0 as usize]);
        for v in &s[i + 1..] {
            if !interacts(&load.quiver, (u.kind, u.residue), (v.kind, v.residue)) {
                continue;
            }
            match v.kind {
                Kind::Red => out.push(Constraint::Red { a: u.source, off_u, x: v.x }),
                _ if v.source != u.source => out.push(Constraint::Group {
                    a: u.source,
                    off_u,
                    b: v.source,
                    off_v: offset(v.kind, shifts[v.residue.0 as usize]),
                }),
                _ => {}
            }
        }
    }
    out
}

fn solve(load: &Loading, shifts: &[Q]) -> Result<Vec<Bound>, DiagramError> {
    let g = load.solids.len();
    let cons = constraints(load, shifts);
    let mut x: Vec<Option<Bound>> = vec![None; g];
    let mut passes = 0;
    loop {
        let mut changed = false;
        for c in &cons {
            let (a, cand) = match *c {
                Constraint::Red { a, off_u, x: xr } => (a, Some(Bound { q: xr - off_u, d: 1 })),
                Constraint::Group { a, off_u, b, off_v } => {
                    (a, x[b].map(|xb| Bound { q: xb.q + off_v - off_u, d: xb.d + 1 }))
                }
            };
            if let Some(cand) = cand {
                if x[a].is_none_or(|cur| cand < cur) {
                    x[a] = Some(cand);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        passes += 1;
        if passes > g + 1 {
            return Err(DiagramError::Infeasible);
        }
    }
    let free: Vec<usize> = (0..g).filter(|&a| x[a].is_none()).collect();
    if !free.is_empty() {
        return Err(DiagramError::Unsteady(free));
    }
    Ok(x.into_iter().map(|b| b.expect("checked")).collect())
}

/// Realize symbolic group positions as exact coordinates.
fn realize(load: &Loading, shifts: &[Q], bounds: &[Bound]) -> Result<Loading, DiagramError> {
    let g = bounds.len();
    // (q, d) level of each string, plus its sort key inside a level
    let mut levels: BTreeMap<(Q, i64), Vec<((Kind, u32), usize)>> = BTreeMap::new();
    let mut qs: BTreeSet<Q> = load.reds.iter().map(|r| r.x).collect();
    for (a, s) in load.solids.iter().enumerate() {
        let b = bounds[a];
        let sh = shifts[s.residue.0 as usize];
        levels.entry((b.q, b.d)).or_default().push(((Kind::Solid, s.residue.0), a));
        levels.entry((b.q + sh, b.d)).or_default().push(((Kind::Ghost, s.residue.0), a));
        qs.insert(b.q);
        qs.insert(b.q + sh);
    }
    let qv: Vec<Q> = qs.into_iter().collect();
    let gap = qv.windows(2).map(|w| w[1] - w[0]).min().unwrap_or_else(|| Q::from_integer(1));
    let max_d = bounds.iter().map(|b| b.d).max().unwrap_or(0);

    // earlier strings in a level need a larger tau
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g];
    for members in levels.values_mut() {
        members.sort();
        for w in members.windows(2) {
            if w[0].1 != w[1].1 {
                succ[w[1].1].insert(w[0].1);
            }
        }
    }
    let mut indeg = vec![0usize; g];
    for s in &succ {
        for &t in s {
            indeg[t] += 1;
        }
    }
    let mut heap: BinaryHeap<std::cmp::Reverse<usize>> =
        (0..g).filter(|&a| indeg[a] == 0).map(std::cmp::Reverse).collect();
    let mut tau = vec![0i128; g];
    let mut next = 0;
    while let Some(std::cmp::Reverse(a)) = heap.pop() {
        tau[a] = next;
        next += 1;
        for &t in &succ[a] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                heap.push(std::cmp::Reverse(t));
            }
        }
    }
    if next as usize != g {
        return Err(DiagramError::Ambiguous);
    }

    let eta = gap / Q::from_integer(2 * (max_d as i128 + 2));
    let mut out = load.clone();
    for (a, s) in out.solids.iter_mut().enumerate() {
        let b = bounds[a];
        s.x = b.q - eta * (Q::from_integer(b.d as i128) + Q::new(tau[a], g as i128 + 1));
    }
    out.shifts = shifts.to_vec();
    out.check_distinct()?;
    Ok(out)
}

/// Pull every solid as far right as the blocking relation allows.
/// Returns [`DiagramError::Unsteady`] if some solid is never blocked.
pub fn normalize_right(load: &Loading) -> Result<Loading, DiagramError> {
    load.check_distinct()?;
    let bounds = solve(load, &load.shifts)?;
    realize(load, &load.shifts, &bounds)
}

/// Change the ghost shifts, keeping the order of every interacting pair,
/// and return the pulled loading.
pub fn reshift(load: &Loading, shifts: &[Q]) -> Result<Loading, DiagramError> {
    if shifts.len() != load.shifts.len() || shifts.iter().any(|s| *s <= Q::from_integer(0)) {
        return Err(DiagramError::BadShifts);
    }
    load.check_distinct()?;
    let bounds = solve(load, shifts)?;
    realize(load, shifts, &bounds)
}
