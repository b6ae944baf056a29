//! Standalone TikZ documents for loadings and straight diagrams.

use crate::loading::{Kind, Loading};
use crate::rat::to_f64;
use crate::straight::StraightDiagram;
use std::fmt::Write;

const HEADER: &str = "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[x=1.5cm,y=2cm]\n";
const FOOTER: &str = "\\end{tikzpicture}\n\\end{document}\n";

fn style(k: Kind) -> &'static str {
    match k {
        Kind::Solid => "thick",
        Kind::Ghost => "thick,dashed,gray",
        Kind::Red => "very thick,red",
    }
}

pub fn tikz_loading(l: &Loading) -> String {
    let mut s = String::from(HEADER);
    for st in l.strings() {
        let x = to_f64(&st.x);
        let label = if st.kind == Kind::Ghost { "above" } else { "below" };
        let _ = writeln!(
            s,
            "\\draw[{}] ({x:.4},0) node[{label}] {{\\tiny ${}$}} -- ({x:.4},1);",
            style(st.kind),
            st.residue
        );
    }
    s.push_str(FOOTER);
    s
}

pub fn tikz_diagram(d: &StraightDiagram) -> String {
    let mut s = String::from(HEADER);
    for (k, b) in d.bottom.solids.iter().enumerate() {
        let t = &d.top.solids[d.matching[k]];
        let sh = d.bottom.shift(b.residue);
        let (xb, xt) = (to_f64(&b.x), to_f64(&t.x));
        let (gb, gt) = (to_f64(&(b.x + sh)), to_f64(&(t.x + sh)));
        let _ = writeln!(s, "\\draw[{}] ({xb:.4},0) node[below] {{\\tiny ${}$}} -- ({xt:.4},1);", style(Kind::Solid), b.residue);
        let _ = writeln!(s, "\\draw[{}] ({gb:.4},0) -- ({gt:.4},1);", style(Kind::Ghost));
    }
    for r in &d.bottom.reds {
        let x = to_f64(&r.x);
        let _ = writeln!(s, "\\draw[{}] ({x:.4},0) node[below] {{\\tiny ${}$}} -- ({x:.4},1);", style(Kind::Red), r.residue);
    }
    s.push_str(FOOTER);
    s
}
