use abacus::{default_truncation, from_abacus, lambda_plus_abacus, render, to_abacus, AbacusConfig, Side};
use diagram::{
    enumerate_sstd, enumerate_sstd_all, graded_cell_dim, idempotent_loading, tableau_degree, tableau_diagram, tikz_diagram,
    tikz_loading, Loading, Tableau,
};
use partition_core::{residue_diagram, Multipartition, Node, Partition};
use serde::Serialize;
use serde_json::json;
use strips::{annotated_grid, lambda_plus, maximal_strips};
use subdivision::{
    level_one_cases, sampled_level_two, subdivide_diagram, subdivide_idempotent_with,
    verify_degree_preservation, verify_equivalence_batch, verify_idempotent_batch, verify_idempotent_correspondence, verify_tuple_types,
    DegreeSample, EquivalenceGrid, Insertion, SubdivisionParams, VerificationReport,
};

use crate::args::*;
use crate::CliError;

pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn no_tikz(cmd: &str) -> CliError {
    CliError::Usage(format!("--format: tikz is not available for {cmd}"))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Lamplus(a) => cmd_lamplus(a, f),
        Command::Abacus(a) => cmd_abacus(a, f),
        Command::Strips(a) => cmd_strips(a, f),
        Command::Residues(a) => cmd_residues(a, f),
        Command::Idem(a) => cmd_idem(a, f),
        Command::Subdivide(a) => cmd_subdivide(a, f),
        Command::Tableaux(a) => cmd_tableaux(a, f),
        Command::Verify(a) => cmd_verify(a, f),
    }
}

pub fn cmd_lamplus(a: &EdgeArgs, f: Format) -> Result<Output, CliError> {
    let q = a.shape.quiver()?;
    let lam = a.shape.lam()?;
    a.shape.charge(&lam)?;
    let edge = edge(&q, a.edge)?;
    let out = lambda_plus(&lam, &a.shape.rho, &q, edge).map_err(input)?;
    Ok(Output::ok(match f {
        Format::Json => to_json(&out),
        Format::Text => format!(
            "{}\nrho+ {:?}\nabacus charge {:?}\nagreement {}\n",
            out.partition, out.rho_plus, out.abacus_charge, out.agreement
        ),
        Format::Tikz => return Err(no_tikz("lamplus")),
    }))
}

#[derive(Serialize)]
struct AbacusView {
    partition: Partition,
    rho: i64,
    abacus: AbacusConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    plus: Option<PlusView>,
}

#[derive(Serialize)]
struct PlusView {
    edge: u32,
    partition: Partition,
    charge: i64,
    abacus: AbacusConfig,
}

pub fn cmd_abacus(a: &AbacusArgs, f: Format) -> Result<Output, CliError> {
    let q = a.shape.quiver()?;
    let lam = a.shape.lam()?;
    a.shape.charge(&lam)?;
    let ep = q.vertex_count();
    let mut views = Vec::new();
    for (p, &rho) in lam.components().iter().zip(&a.shape.rho) {
        let n = a.n.unwrap_or_else(|| default_truncation(p, rho, ep));
        let abacus = to_abacus(p, rho, ep, n).map_err(|e| CliError::Usage(format!("--n: {e}")))?;
        let plus = match a.plus {
            Some(i) => {
                let out = lambda_plus_abacus(p, rho, &q, edge(&q, i)?, Side::Left).map_err(input)?;
                Some(PlusView { edge: i, partition: out.partition, charge: out.charge, abacus: out.after })
            }
            None => None,
        };
        views.push(AbacusView { partition: p.clone(), rho, abacus, plus });
    }
    Ok(Output::ok(match f {
        Format::Json => to_json(&views),
        Format::Text => {
            let mut s = String::new();
            for v in &views {
                let (p, c) = from_abacus(&v.abacus);
                s += &format!("lam = {p}, rho = {c}, N = {}\n{}", v.abacus.truncation, render(&v.abacus));
                if let Some(pl) = &v.plus {
                    s += &format!("after inserting a runner at edge {}: {}\n{}", pl.edge, pl.partition, render(&pl.abacus));
                }
            }
            s
        }
        Format::Tikz => return Err(no_tikz("abacus")),
    }))
}

pub fn cmd_strips(a: &EdgeArgs, f: Format) -> Result<Output, CliError> {
    let q = a.shape.quiver()?;
    let lam = a.shape.lam()?;
    a.shape.charge(&lam)?;
    let edge = edge(&q, a.edge)?;
    let strips = maximal_strips(&lam, &a.shape.rho, &q, edge).map_err(input)?;
    Ok(Output::ok(match f {
        Format::Json => to_json(&strips),
        Format::Text => {
            let mut s = annotated_grid(&lam, &a.shape.rho, &q, &strips);
            for st in &strips {
                let nodes: Vec<String> = st.nodes.iter().map(Node::to_string).collect();
                s += &format!("{} {}\n", st.kind, nodes.join(" "));
            }
            s
        }
        Format::Tikz => return Err(no_tikz("strips")),
    }))
}

pub fn cmd_residues(a: &Shape, f: Format) -> Result<Output, CliError> {
    let q = a.quiver()?;
    let lam = a.lam()?;
    a.charge(&lam)?;
    let d = residue_diagram(&lam, &a.rho, &q);
    Ok(Output::ok(match f {
        Format::Json => to_json(&(1..=lam.level()).map(|m| d.rows(m)).collect::<Vec<_>>()),
        Format::Text => d.render(),
        Format::Tikz => return Err(no_tikz("residues")),
    }))
}

fn loading(a: &Shape) -> Result<(Multipartition, Loading), CliError> {
    let q = a.quiver()?;
    let lam = a.lam()?;
    let charge = a.charge(&lam)?;
    let l = idempotent_loading(&lam, &charge, &q).map_err(input)?;
    Ok((lam, l))
}

pub fn cmd_idem(a: &Shape, f: Format) -> Result<Output, CliError> {
    let (_, l) = loading(a)?;
    Ok(Output::ok(match f {
        Format::Json => to_json(&l),
        Format::Text => format!("{}\n", l.signature()),
        Format::Tikz => tikz_loading(&l),
    }))
}

pub fn cmd_subdivide(a: &SubdivideArgs, f: Format) -> Result<Output, CliError> {
    let q = a.shape.quiver()?;
    let edge = edge(&q, a.edge)?;
    let (lam, l) = loading(&a.shape)?;
    let charge = a.shape.charge(&lam)?;
    if let Some(mu) = &a.mu {
        let mu = parse_multipartition("mu", mu)?;
        let mut rows = Vec::new();
        for t in enumerate_sstd(&lam, &mu, &charge, &q).map_err(input)? {
            let d = tableau_diagram(&t, &charge, &q).map_err(input)?;
            let s = subdivide_diagram(&d, edge).map_err(input)?;
            rows.push((entries(&t), d.degree(), s.degree(), s));
        }
        let pass = rows.iter().all(|r| r.1 == r.2);
        let text = match f {
            Format::Json => to_json(
                &rows.iter().map(|r| json!({"tableau": r.0, "degree": r.1, "subdivided_degree": r.2})).collect::<Vec<_>>(),
            ),
            Format::Text => rows.iter().map(|r| format!("{}  deg {} -> {}\n", r.0.join(" "), r.1, r.2)).collect(),
            Format::Tikz => match rows.first() {
                Some(r) => tikz_diagram(&r.3),
                None => return Err(CliError::Input(format!("no semistandard tableaux of type {mu}"))),
            },
        };
        return Ok(Output { text, pass });
    }
    let side = match a.side {
        SideArg::ByType => Insertion::ByType,
        SideArg::UnsafeLeft => Insertion::UnsafeLeft,
        SideArg::UnsafeRight => Insertion::UnsafeRight,
    };
    let s = subdivide_idempotent_with(&l, &SubdivisionParams::homogeneous(&l, edge), side).map_err(input)?;
    let report = verify_idempotent_correspondence(&lam, &charge, &q, edge);
    let matches = side == Insertion::ByType && report.pass;
    Ok(Output::ok(match f {
        Format::Json => to_json(&json!({
            "subdivided": s,
            "signature": s.signature().to_string(),
            "normalized": report.actual,
            "target": report.expected,
            "matches_target": matches,
        })),
        Format::Text => format!(
            "subdivided  {}\nnormalized  {}\ntarget      {}\nmatches {matches}\n",
            s.signature(),
            if side == Insertion::ByType { report.actual.as_str() } else { "unsteady or not computed" },
            report.expected
        ),
        Format::Tikz => tikz_loading(&s),
    }))
}

fn entries(t: &Tableau) -> Vec<String> {
    t.map.iter().map(|(a, b)| format!("{a}->{b}")).collect()
}

pub fn cmd_tableaux(a: &TableauxArgs, f: Format) -> Result<Output, CliError> {
    let q = a.shape.quiver()?;
    let lam = a.shape.lam()?;
    let charge = a.shape.affine_charge(&lam)?;
    let list = match &a.mu {
        Some(mu) => enumerate_sstd(&lam, &parse_multipartition("mu", mu)?, &charge, &q),
        None => enumerate_sstd_all(&lam, &charge, &q),
    }
    .map_err(input)?;
    let mut rows = Vec::new();
    for t in &list {
        rows.push((t, tableau_degree(t, &charge, &q).map_err(input)?));
    }
    let dim = match &a.mu {
        None => Some(graded_cell_dim(&lam, &charge, &q).map_err(input)?),
        Some(_) => None,
    };
    Ok(Output::ok(match f {
        Format::Json => to_json(&json!({
            "tableaux": rows.iter().map(|(t, d)| json!({"type": t.mu.to_string(), "map": entries(t), "degree": d})).collect::<Vec<_>>(),
            "graded_dimension": dim.as_ref().map(ToString::to_string),
        })),
        Format::Text => {
            let mut s: String =
                rows.iter().map(|(t, d)| format!("type {}  deg {d}  {}\n", t.mu, entries(t).join(" "))).collect();
            if let Some(d) = dim {
                s += &format!("{} tableaux, graded dimension {d}\n", rows.len());
            }
            s
        }
        Format::Tikz => {
            let t = list.get(a.index).ok_or_else(|| CliError::Usage(format!("--index: only {} tableaux", list.len())))?;
            tikz_diagram(&tableau_diagram(t, &charge, &q).map_err(input)?)
        }
    }))
}

pub fn cmd_verify(a: &VerifyArgs, f: Format) -> Result<Output, CliError> {
    if let Some(&e) = a.e_set.iter().find(|&&e| e == 0) {
        return Err(CliError::Usage(format!("--e-set: e must be at least 1, got {e}")));
    }
    let diagram_e: Vec<u32> = a.e_set.iter().copied().filter(|&e| e >= 2).collect();
    let wants = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut step = |name: &str, run: &dyn Fn() -> Result<VerificationReport, CliError>| -> Result<(), CliError> {
        eprintln!("running {name}");
        let r = run()?;
        eprintln!("{}", r.to_string().lines().next().unwrap_or_default());
        reports.push(r);
        Ok(())
    };
    if wants(Suite::Equiv) {
        step("equiv", &|| {
            Ok(verify_equivalence_batch(&EquivalenceGrid {
                n_max: a.n_max,
                e_set: a.e_set.clone(),
                level: a.level,
                edges: (0..=a.e_set.iter().copied().max().unwrap_or(0)).collect(),
            }))
        })?;
    }
    if wants(Suite::Tuples) {
        step("tuples", &|| Ok(verify_tuple_types(&level_one_cases(a.n_max, &diagram_e))))?;
    }
    if wants(Suite::Idem) {
        step("idem", &|| {
            let mut cases = level_one_cases(a.n_max, &diagram_e);
            if !diagram_e.is_empty() {
                cases.extend(sampled_level_two(a.trials.min(500), a.n_max.min(6), &diagram_e, a.seed));
            }
            Ok(verify_idempotent_batch(&cases))
        })?;
    }
    if wants(Suite::Degree) {
        step("degree", &|| {
            let s = DegreeSample {
                n_max: a.n_max.min(6),
                e_set: diagram_e.clone(),
                random_trials: a.trials,
                random_n_max: a.n_max.min(7),
                seed: a.seed,
            };
            verify_degree_preservation(&s).map_err(input)
        })?;
    }
    let pass = reports.iter().all(VerificationReport::pass);
    let body = to_json(&json!({"pass": pass, "seed": a.seed, "reports": reports}));
    std::fs::write(&a.report, &body).map_err(|e| CliError::Io(format!("{}: {e}", a.report.display())))?;
    let text = match f {
        Format::Json => body,
        Format::Text => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            s += &format!("report written to {}\n", a.report.display());
            s
        }
        Format::Tikz => return Err(no_tikz("verify")),
    };
    Ok(Output { text, pass })
}

