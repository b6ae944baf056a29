use crate::subdivide::{subdivide_diagram, subdivide_idempotent, SubdivisionParams};
use crate::tuples::tuple_types;
use crate::SubdivisionError;
use diagram::{
    enumerate_sstd_all, idempotent_loading, normalize_right, reshift, straight_diagram, tableau_diagram, StraightDiagram,
};
use partition_core::{count_residue_nodes, multipartitions, Charge, Multipartition};
use quiver_core::{subdivide_quiver, Quiver, Residue};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use strips::{lambda_plus, maximal_strips};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CaseReport {
    fn compare(case: String, expected: String, actual: String) -> Self {
        let pass = expected == actual;
        CaseReport { case, expected, actual, pass, detail: None }
    }

    fn error(case: String, e: impl fmt::Display) -> Self {
        CaseReport { case, expected: String::new(), actual: String::new(), pass: false, detail: Some(e.to_string()) }
    }
}

/// Outcome of a batch check. Only failing cases are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub cases: usize,
    pub failures: Vec<CaseReport>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(check: &str, results: Vec<CaseReport>) -> Self {
        let cases = results.len();
        VerificationReport { check: check.to_string(), cases, failures: results.into_iter().filter(|r| !r.pass).collect() }
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} cases, {} failures", self.check, self.cases, self.failures.len())?;
        for c in self.failures.iter().take(5) {
            write!(f, "\n  {}: expected {:?}, got {:?}", c.case, c.expected, c.actual)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
        }
        Ok(())
    }
}

fn describe(lam: &Multipartition, charge: &Charge, q: &Quiver, edge: Residue) -> String {
    format!("lam={lam} rho={:?} kappa={:?} e={} edge={}", charge.rho, charge.kappa, q.e(), edge)
}

fn idempotent_sides(lam: &Multipartition, charge: &Charge, q: &Quiver, edge: Residue) -> Result<(String, String), SubdivisionError> {
    let load = idempotent_loading(lam, charge, q)?;
    let p = SubdivisionParams::homogeneous(&load, edge);
    let image = normalize_right(&subdivide_idempotent(&load, &p)?)?;
    let lp = lambda_plus(lam, &charge.rho, q, edge)?;
    let (nq, map) = subdivide_quiver(q, edge)?;
    let charge_plus = Charge::new(lp.rho_plus.clone(), charge.kappa.clone())?;
    let unit = idempotent_loading(&lp.partition, &charge_plus, &nq)?;
    let mut shifts = unit.shifts.clone();
    shifts[map.inserted.0 as usize] = p.eps_prime;
    let target = reshift(&unit, &shifts)?;
    Ok((target.signature().to_string(), image.signature().to_string()))
}

/// Compare the pulled image of `1_lam` with `1_{lam+}` built in the
/// subdivided quiver with the small ghost shift on the new vertex.
pub fn verify_idempotent_correspondence(lam: &Multipartition, charge: &Charge, q: &Quiver, edge: Residue) -> CaseReport {
    let case = describe(lam, charge, q, edge);
    match idempotent_sides(lam, charge, q, edge) {
        Ok((want, got)) => CaseReport::compare(case, want, got),
        Err(e) => CaseReport::error(case, e),
    }
}

pub type IdempotentCase = (Multipartition, Charge, Quiver, Residue);

pub fn verify_idempotent_batch(cases: &[IdempotentCase]) -> VerificationReport {
    let results = cases.par_iter().map(|(l, c, q, i)| verify_idempotent_correspondence(l, c, q, *i)).collect();
    VerificationReport::collect("idempotent correspondence", results)
}

pub fn check_degree_preserved(d: &StraightDiagram, edge: Residue, case: String) -> CaseReport {
    match subdivide_diagram(d, edge) {
        Ok(s) => CaseReport::compare(case, d.degree().to_string(), s.degree().to_string()),
        Err(e) => CaseReport::error(case, e),
    }
}

/// Tableau diagrams of every level one partition up to `n_max`, plus
/// `random_trials` random residue-preserving permutations of `1_lam`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSample {
    pub n_max: u32,
    pub e_set: Vec<u32>,
    pub random_trials: usize,
    pub random_n_max: u32,
    pub seed: u64,
}

fn all_edges(q: &Quiver) -> Vec<Residue> {
    q.vertices().collect()
}

pub fn verify_degree_preservation(s: &DegreeSample) -> Result<VerificationReport, SubdivisionError> {
    let mut tasks: Vec<(Multipartition, i64, u32)> = Vec::new();
    for &e in &s.e_set {
        for rho in 0..=e as i64 {
            for n in 0..=s.n_max {
                for lam in multipartitions(n, 1) {
                    tasks.push((lam, rho, e));
                }
            }
        }
    }
    let tableau_results: Vec<Vec<CaseReport>> = tasks
        .par_iter()
        .map(|(lam, rho, e)| {
            let q = Quiver::new(*e).expect("e >= 1");
            let ch = Charge::level_one(*rho);
            let ts = match enumerate_sstd_all(lam, &ch, &q) {
                Ok(ts) => ts,
                Err(err) => return vec![CaseReport::error(format!("lam={lam} rho={rho} e={e}"), err)],
            };
            let mut out = Vec::new();
            for t in ts {
                let case = format!("D_T lam={lam} mu={} rho={rho} e={e}", t.mu);
                match tableau_diagram(&t, &ch, &q) {
                    Ok(d) => {
                        for edge in all_edges(&q) {
                            out.push(check_degree_preserved(&d, edge, format!("{case} edge={edge}")));
                        }
                    }
                    Err(err) => out.push(CaseReport::error(case, err)),
                }
            }
            out
        })
        .collect();
    let mut report = VerificationReport::collect("degree preservation (tableaux)", tableau_results.into_iter().flatten().collect());

    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut random = Vec::with_capacity(s.random_trials);
    for trial in 0..s.random_trials {
        let e = *s.e_set.choose(&mut rng).expect("nonempty e_set");
        let q = Quiver::new(e)?;
        let n = rng.gen_range(0..=s.random_n_max);
        let parts = multipartitions(n, 1);
        let lam = parts.choose(&mut rng).expect("some partition").clone();
        let rho = rng.gen_range(0..=e as i64);
        let edge = Residue(rng.gen_range(0..=e));
        let load = idempotent_loading(&lam, &Charge::level_one(rho), &q)?;
        let mut matching: Vec<usize> = (0..load.solids.len()).collect();
        for r in q.vertices() {
            let idx: Vec<usize> = (0..load.solids.len()).filter(|&k| load.solids[k].residue == r).collect();
            let mut perm = idx.clone();
            perm.shuffle(&mut rng);
            for (a, b) in idx.into_iter().zip(perm) {
                matching[a] = b;
            }
        }
        let d = straight_diagram(load.clone(), load, matching)?;
        random.push(check_degree_preserved(&d, edge, format!("trial {trial}: lam={lam} rho={rho} e={e} edge={edge}")));
    }
    report = report.merge(VerificationReport::collect("degree preservation (random)", random));
    report.check = "degree preservation".into();
    Ok(report)
}

/// Grid for the box/abacus comparison. Level one uses every residue;
/// level two uses every pair of residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceGrid {
    pub n_max: u32,
    pub e_set: Vec<u32>,
    pub level: usize,
    pub edges: Vec<u32>,
}

fn residue_tuples(e: u32, level: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..level {
        out = out
            .into_iter()
            .flat_map(|v| (0..=e as i64).map(move |r| {
                let mut w = v.clone();
                w.push(r);
                w
            }))
            .collect();
    }
    out
}

pub fn verify_equivalence_batch(g: &EquivalenceGrid) -> VerificationReport {
    let mut tasks = Vec::new();
    for &e in &g.e_set {
        for &edge in g.edges.iter().filter(|&&i| i <= e) {
            for rho in residue_tuples(e, g.level) {
                for n in 0..=g.n_max {
                    tasks.push((e, edge, rho.clone(), n));
                }
            }
        }
    }
    let results: Vec<Vec<CaseReport>> = tasks
        .par_iter()
        .map(|(e, edge, rho, n)| {
            let q = Quiver::new(*e).expect("e >= 1");
            multipartitions(*n, g.level)
                .into_iter()
                .map(|lam| {
                    let case = format!("lam={lam} rho={rho:?} e={e} edge={edge}");
                    match lambda_plus(&lam, rho, &q, Residue(*edge)) {
                        Ok(lp) => CaseReport::compare(case, "agree".into(), if lp.agreement { "agree" } else { "differ" }.into()),
                        Err(err) => CaseReport::error(case, err),
                    }
                })
                .collect()
        })
        .collect();
    VerificationReport::collect("box/abacus equivalence", results.into_iter().flatten().collect())
}

/// Close tuple types of `1_lam` against strip types of `lam`.
pub fn check_tuple_strip_types(lam: &Multipartition, charge: &Charge, q: &Quiver, edge: Residue) -> CaseReport {
    let case = describe(lam, charge, q, edge);
    let run = || -> Result<(String, String), SubdivisionError> {
        let load = idempotent_loading(lam, charge, q)?;
        let mut st: Vec<_> = maximal_strips(lam, &charge.rho, q, edge)?.into_iter().map(|s| s.kind).collect();
        st.sort();
        Ok((format!("{st:?}"), format!("{:?}", tuple_types(&load, edge))))
    };
    match run() {
        Ok((a, b)) => CaseReport::compare(case, a, b),
        Err(e) => CaseReport::error(case, e),
    }
}

pub fn verify_tuple_types(cases: &[IdempotentCase]) -> VerificationReport {
    let results = cases.par_iter().map(|(l, c, q, i)| check_tuple_strip_types(l, c, q, *i)).collect();
    VerificationReport::collect("tuple/strip types", results)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transport {
    pub lam_plus: Multipartition,
    pub mu_plus: Multipartition,
    pub rho_plus: Vec<i64>,
    /// Both labels have at most one node of the subdivided residue.
    pub hypothesis_ok: bool,
}

/// Images of a pair of labels under subdivision. No decomposition numbers
/// are computed.
pub fn transport_labels(lam: &Multipartition, mu: &Multipartition, charge: &Charge, q: &Quiver, edge: Residue) -> Result<Transport, SubdivisionError> {
    if lam.size() != mu.size() {
        return Err(SubdivisionError::SizeMismatch(lam.size(), mu.size()));
    }
    let a = lambda_plus(lam, &charge.rho, q, edge)?;
    let b = lambda_plus(mu, &charge.rho, q, edge)?;
    let ok = count_residue_nodes(lam, &charge.rho, q, edge) <= 1 && count_residue_nodes(mu, &charge.rho, q, edge) <= 1;
    Ok(Transport { lam_plus: a.partition, mu_plus: b.partition, rho_plus: a.rho_plus, hypothesis_ok: ok })
}

/// Every level one case with `|lam| <= n_max`, all residues and edges.
pub fn level_one_cases(n_max: u32, e_set: &[u32]) -> Vec<IdempotentCase> {
    let mut out = Vec::new();
    for &e in e_set {
        let q = Quiver::new(e).expect("e >= 1");
        for rho in 0..=e as i64 {
            for n in 0..=n_max {
                for lam in multipartitions(n, 1) {
                    for edge in q.vertices() {
                        out.push((lam.clone(), Charge::level_one(rho), q, edge));
                    }
                }
            }
        }
    }
    out
}

/// `count` random level two cases with separated red strings.
pub fn sampled_level_two(count: usize, n_max: u32, e_set: &[u32], seed: u64) -> Vec<IdempotentCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let e = *e_set.choose(&mut rng).expect("nonempty e_set");
            let q = Quiver::new(e).expect("e >= 1");
            let n = rng.gen_range(0..=n_max);
            let lam = multipartitions(n, 2).choose(&mut rng).expect("some bipartition").clone();
            let rho = vec![rng.gen_range(0..=e as i64), rng.gen_range(0..=e as i64)];
            let edge = Residue(rng.gen_range(0..=e));
            (lam, Charge::spread(rho, n), q, edge)
        })
        .collect()
}

