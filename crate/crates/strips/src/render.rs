use crate::Strip;
use partition_core::{residue, Multipartition, Node};
use quiver_core::Quiver;
use std::collections::BTreeMap;

/// Residue grid with each strip node tagged by its strip type, e.g. `0a`.
/// Untouched nodes are padded with a space.
pub fn annotated_grid(lam: &Multipartition, rho: &[i64], q: &Quiver, strips: &[Strip]) -> String {
    let mut tag: BTreeMap<Node, String> = BTreeMap::new();
    for s in strips {
        for n in &s.nodes {
            tag.insert(*n, s.kind.to_string());
        }
    }
    let mut out = String::new();
    for (idx, p) in lam.components().iter().enumerate() {
        let m = idx as u32 + 1;
        if idx > 0 {
            out.push_str("--\n");
        }
        if p.is_empty() {
            out.push_str("(empty)\n");
        }
        for r in 1..=p.len() as u32 {
            let cells: Vec<String> = (1..=p.part(r as usize))
                .map(|c| {
                    let n = Node::new(m, r, c);
                    let t = tag.get(&n).map(String::as_str).unwrap_or(" ");
                    format!("{}{}", residue(n, rho[idx], q), t)
                })
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
    }
    out
}
