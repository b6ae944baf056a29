//! String in, string out wrappers for the browser page in `www/`.
//! Errors come back as `Err(message)`, which JavaScript sees as a thrown
//! string.

use abacus::{default_truncation, lambda_plus_abacus, render, to_abacus, Side};
use diagram::idempotent_loading;
use partition_core::{Charge, Multipartition};
use quiver_core::{Quiver, Residue};
use strips::lambda_plus;
use wasm_bindgen::prelude::*;

fn quiver(e: u32) -> Result<Quiver, String> {
    Quiver::new(e).map_err(|x| x.to_string())
}

fn lam(s: &str) -> Result<Multipartition, String> {
    s.parse().map_err(|x: partition_core::ParseError| format!("partition: {x}"))
}

fn rho(s: &str, level: usize) -> Result<Vec<i64>, String> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("charge: cannot read {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != level {
        return Err(format!("charge: {} entries for {level} components", v.len()));
    }
    Ok(v)
}

/// `lambda+` for the edge `edge -> edge+1`, with its new charge.
#[wasm_bindgen]
pub fn subdivided_partition(e: u32, charge: &str, partition: &str, edge: u32) -> Result<String, String> {
    let q = quiver(e)?;
    let l = lam(partition)?;
    let r = rho(charge, l.level())?;
    let out = lambda_plus(&l, &r, &q, Residue(edge)).map_err(|x| x.to_string())?;
    let rp: Vec<String> = out.rho_plus.iter().map(ToString::to_string).collect();
    Ok(format!("{}\ncharge {}", out.partition, rp.join(",")))
}

/// Abacus of a partition before and after inserting the runner for `edge`.
#[wasm_bindgen]
pub fn abacus_display(e: u32, charge: i64, partition: &str, edge: u32) -> Result<String, String> {
    let q = quiver(e)?;
    let p = partition.parse().map_err(|x: partition_core::ParseError| format!("partition: {x}"))?;
    let ep = q.vertex_count();
    let a = to_abacus(&p, charge, ep, default_truncation(&p, charge, ep)).map_err(|x| x.to_string())?;
    let plus = lambda_plus_abacus(&p, charge, &q, Residue(edge), Side::Left).map_err(|x| x.to_string())?;
    Ok(format!("{}\n{}\n{}\n{}", p, render(&a), plus.partition, render(&plus.after)))
}

/// Signature of the idempotent `1_lam`, e.g. `s0 g0 | r0 |`.
#[wasm_bindgen]
pub fn idempotent_signature(e: u32, charge: &str, partition: &str) -> Result<String, String> {
    let q = quiver(e)?;
    let l = lam(partition)?;
    let r = rho(charge, l.level())?;
    let c = if r.len() == 1 { Charge::level_one(r[0]) } else { Charge::spread(r, l.size()) };
    let load = idempotent_loading(&l, &c, &q).map_err(|x| x.to_string())?;
    Ok(load.signature().to_string())
}
