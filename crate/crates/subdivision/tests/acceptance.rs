//! Acceptance checks, one line per criterion. Exits nonzero on failure.

use abacus::{
    default_truncation, from_abacus, insert_runner_direct, k_lambda, lambda_plus_abacus, max_truncation_n0, shift_beads,
    to_abacus, Side,
};
use diagram::{
    enumerate_sstd, idempotent_loading, is_semistandard, normalize_right, DiagramError, Loading, Origin, Red, Solid,
    Tableau, Q,
};
use partition_core::{count_residue_nodes, multipartitions, partitions_up_to, Charge, Multipartition, Node, Partition};
use quiver_core::{Quiver, Residue};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};
use strips::lambda_plus;
use subdivision::*;

type Outcome = Result<String, String>;

const GOLDEN: [(&str, i64, &str); 12] = [
    ("1", 0, "2"),
    ("1,1", 1, "1,1,1"),
    ("2,2", 0, "3,3"),
    ("2,1", 1, "2,1,1"),
    ("2,2", 1, "2,2,1"),
    ("2,2,2", 1, "2,2,2,2"),
    ("4,3,2", 3, "5,4,2"),
    ("4,4,4,4", 1, "5,4,4,4,3"),
    ("5,3,3,2,1", 2, "6,3,3,2,2,1"),
    ("5,3,3,2,1", 3, "6,4,3,2,1,1"),
    ("8,7,5,5,4,3,2,2,1", 0, "10,9,6,6,4,3,2,2,2,1,1"),
    ("1^9", 0, "2,1^10"),
];

fn q(e: u32) -> Quiver {
    Quiver::new(e).unwrap()
}

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(r: VerificationReport) -> Outcome {
    if r.pass() {
        Ok(format!("{} cases", r.cases))
    } else {
        Err(r.to_string())
    }
}

fn golden_table() -> Outcome {
    for (lam, rho, plus) in GOLDEN {
        let out = lambda_plus(&mp(lam), &[rho], &q(3), Residue(0)).map_err(|e| e.to_string())?;
        ensure(out.partition == mp(plus), || format!("{lam} rho={rho}: got {}, want {plus}", out.partition))?;
    }
    Ok("12 of 12 exact".into())
}

fn equivalence_sweep() -> Outcome {
    let one = verify_equivalence_batch(&EquivalenceGrid { n_max: 10, e_set: (1..=5).collect(), level: 1, edges: vec![0] });
    let two = verify_equivalence_batch(&EquivalenceGrid { n_max: 6, e_set: (1..=5).collect(), level: 2, edges: vec![0] });
    report(one.merge(two))
}

fn general_edge() -> Outcome {
    let mut n_cases = 0;
    for e in 2..=4 {
        let qq = q(e);
        for p in partitions_up_to(8) {
            for rho in 0..=e as i64 {
                for edge in qq.vertices() {
                    let conj = lambda_plus_abacus(&p, rho, &qq, edge, Side::Left).map_err(|x| x.to_string())?;
                    let direct = insert_runner_direct(&p, rho, &qq, edge).map_err(|x| x.to_string())?;
                    ensure(conj.partition == direct.partition, || {
                        format!("{p} rho={rho} e={e} edge={edge}: {} vs {}", conj.partition, direct.partition)
                    })?;
                    n_cases += 1;
                }
            }
        }
    }
    Ok(format!("{n_cases} cases"))
}

fn abacus_invariants() -> Outcome {
    let mut n_cases = 0;
    for e in 1..=5u32 {
        let ep = e + 1;
        for p in partitions_up_to(10) {
            for rho in 0..ep as i64 {
                let n0 = max_truncation_n0(&p, rho, ep);
                let k = k_lambda(&p, rho, ep);
                if !p.is_empty() {
                    let want = if rho == 0 { -k - 1 } else { -k };
                    ensure(n0 == want, || format!("N0 {p} rho={rho} e'={ep}: {n0} vs {want}"))?;
                }
                for n in [default_truncation(&p, rho, ep), n0] {
                    let a = to_abacus(&p, rho, ep, n).map_err(|x| x.to_string())?;
                    ensure(a.beads.len() as i64 == rho - n * ep as i64, || format!("bead count {p} rho={rho} N={n}"))?;
                    ensure(from_abacus(&a) == (p.clone(), rho), || format!("round trip {p} rho={rho} N={n}"))?;
                }
                let a = to_abacus(&p, rho, ep, default_truncation(&p, rho, ep)).map_err(|x| x.to_string())?;
                for d in [1, -1] {
                    let s = shift_beads(&a, d).map_err(|x| x.to_string())?;
                    ensure(from_abacus(&s).0 == p, || format!("shift {d} {p} rho={rho}"))?;
                }
                n_cases += 1;
            }
        }
    }
    Ok(format!("{n_cases} cases"))
}

fn structural_laws() -> Outcome {
    let mut n_cases = 0;
    let mut tuple_cases = Vec::new();
    for e in 1..=5u32 {
        let qq = q(e);
        let ep = qq.vertex_count() as i64;
        for p in partitions_up_to(8) {
            let lam = Multipartition::from(p.clone());
            for rho in 0..ep {
                for edge in qq.vertices() {
                    let out = lambda_plus(&lam, &[rho], &qq, edge).map_err(|x| x.to_string())?;
                    let nodes = count_residue_nodes(&lam, &[rho], &qq, edge) as u32;
                    ensure(out.partition.size() == lam.size() + nodes, || format!("size {p} rho={rho} e={e} edge={edge}"))?;
                    let k = k_lambda(&p, (rho - edge.0 as i64).rem_euclid(ep), ep as u32) as usize;
                    let len = out.partition.component(1).len();
                    ensure(len == p.len() + k, || format!("length {p} rho={rho} e={e} edge={edge}: {len} vs {}+{k}", p.len()))?;
                    if e >= 2 {
                        tuple_cases.push((lam.clone(), Charge::level_one(rho), qq, edge));
                    }
                    n_cases += 1;
                }
            }
        }
    }
    for (lam, ch, qq, edge) in &tuple_cases {
        let r = check_tuple_strip_types(lam, ch, qq, *edge);
        ensure(r.pass, || format!("tuple types {}: strips {} tuples {}", r.case, r.expected, r.actual))?;
    }
    Ok(format!("{n_cases} size/length cases, {} tuple/strip cases (e >= 2)", tuple_cases.len()))
}

fn idempotent_correspondence() -> Outcome {
    let mut cases = level_one_cases(8, &[2, 3, 4]);
    cases.extend(sampled_level_two(50, 6, &[2, 3, 4], 2024));
    report(verify_idempotent_batch(&cases))
}

fn degree_preservation() -> Outcome {
    let s = DegreeSample { n_max: 6, e_set: vec![2, 3, 4], random_trials: 1000, random_n_max: 7, seed: 2024 };
    report(verify_degree_preservation(&s).map_err(|e| e.to_string())?)
}

fn coord(n: Node, ch: &Charge, size: u32, e: u32) -> Q {
    let l = ch.level() as i128;
    let lh = l + size as i128 * (e as i128 + 1);
    let m = n.m as i128;
    let kap = if m <= l { ch.kappa[n.m as usize - 1] as i128 } else { ch.kappa[ch.level() - 1] as i128 + 2 * size as i128 * (m - l) };
    let eps = Q::new(1, 4 * size.max(1) as i128 * lh);
    Q::from_integer(kap + n.c as i128 - n.r as i128) - Q::new(m, lh) - eps * Q::from_integer((n.c + n.r) as i128)
}

fn brute_count(lam: &Multipartition, mu: &Multipartition, ch: &Charge, e: u32) -> usize {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut v = p.clone();
                v.insert(i, n - 1);
                out.push(v);
            }
        }
        out
    }
    let a = lam.nodes();
    let b = mu.nodes();
    let one = Q::from_integer(1);
    perms(a.len())
        .into_iter()
        .filter(|p| {
            let val = |n: Node| a.iter().position(|&x| x == n).map(|i| coord(b[p[i]], ch, lam.size(), e));
            a.iter().all(|&n| {
                let v = val(n).unwrap();
                let c1 = !(n.r == 1 && n.c == 1 && (n.m as usize) <= ch.level()) || v <= Q::from_integer(ch.kappa[n.m as usize - 1] as i128);
                let c2 = n.r == 1 || val(Node::new(n.m, n.r - 1, n.c)).map_or(true, |u| v + one < u);
                let c3 = n.c == 1 || val(Node::new(n.m, n.r, n.c - 1)).map_or(true, |u| v < u + one);
                c1 && c2 && c3
            })
        })
        .count()
}

fn semistandard_fixtures() -> Outcome {
    let qq = q(2);
    let ch = Charge::new(vec![1, 2], vec![1, 2]).unwrap();
    let pad = |first: &str, third: &str| {
        let mut v = vec![first.to_string(), String::new(), third.to_string()];
        v.resize(23, String::new());
        mp(&v.join("|"))
    };
    let lam = pad("3,2", "1,1");
    let mu = pad("3,2,1,1", "");
    let tab = |target: &Multipartition, pairs: &[((u32, u32, u32), (u32, u32, u32))]| {
        let mut map: BTreeMap<Node, Node> = lam.nodes().into_iter().map(|n| (n, n)).collect();
        for &((a, b, c), (x, y, z)) in pairs {
            map.insert(Node::new(a, b, c), Node::new(x, y, z));
        }
        Tableau { lam: lam.clone(), mu: target.clone(), map }
    };
    let fixtures = [
        ("T", tab(&lam, &[]), true),
        ("T'", tab(&lam, &[((1, 1, 1), (1, 2, 2)), ((1, 2, 2), (1, 1, 1))]), false),
        ("T''", tab(&lam, &[((1, 2, 1), (1, 1, 3)), ((1, 1, 3), (1, 2, 1))]), false),
        ("S", tab(&mu, &[((3, 1, 1), (1, 3, 1)), ((3, 2, 1), (1, 4, 1))]), true),
        (
            "S'",
            tab(&mu, &[((1, 1, 1), (1, 3, 1)), ((1, 2, 1), (1, 4, 1)), ((3, 2, 1), (1, 2, 1)), ((3, 1, 1), (1, 1, 1))]),
            false,
        ),
        (
            "S''",
            tab(
                &mu,
                &[
                    ((1, 1, 1), (1, 3, 1)),
                    ((1, 2, 1), (1, 4, 1)),
                    ((1, 1, 2), (1, 1, 1)),
                    ((1, 1, 3), (1, 2, 1)),
                    ((3, 2, 1), (1, 1, 2)),
                    ((3, 1, 1), (1, 1, 3)),
                ],
            ),
            false,
        ),
    ];
    for (name, t, want) in &fixtures {
        ensure(t.is_bijective(), || format!("{name} is not a bijection"))?;
        let got = is_semistandard(t, &ch, &qq).map_err(|e| e.to_string())?;
        ensure(got == *want, || format!("{name}: semistandard = {got}"))?;
    }
    let mut pairs = 0;
    for (lvl, kappa) in [(1usize, vec![0i64]), (2, vec![0, 1])] {
        let ch = Charge::new((0..lvl as i64).collect(), kappa).unwrap();
        for e in [2, 3] {
            for n in 0..=5u32 {
                for lam in multipartitions(n, lvl) {
                    for mu in multipartitions(n, lvl) {
                        let fast = enumerate_sstd(&lam, &mu, &ch, &q(e)).map_err(|x| x.to_string())?.len();
                        let slow = brute_count(&lam, &mu, &ch, e);
                        ensure(fast == slow, || format!("{lam} / {mu} e={e}: {fast} vs {slow}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("6 fixtures, {pairs} (lam, mu) counts"))
}

fn normalizer() -> Outcome {
    let mut n_cases = 0;
    let mut check = |l: Loading, what: String| -> Result<(), String> {
        let n = normalize_right(&l).map_err(|e| format!("{what}: {e}"))?;
        ensure(n.signature() == l.signature(), || format!("{what}: 1_lam moved"))?;
        ensure(normalize_right(&n).map_err(|e| e.to_string())? == n, || format!("{what}: not idempotent"))?;
        n_cases += 1;
        Ok(())
    };
    for e in 2..=4 {
        for rho in 0..=e as i64 {
            for p in partitions_up_to(8) {
                let lam = Multipartition::from(p);
                check(idempotent_loading(&lam, &Charge::level_one(rho), &q(e)).unwrap(), format!("{lam} rho={rho} e={e}"))?;
            }
        }
        for n in 0..=5 {
            for lam in multipartitions(n, 2) {
                for r in [[0, 0], [0, 1], [1, 2], [2, 0]] {
                    let ch = Charge::spread(r.to_vec(), n);
                    check(idempotent_loading(&lam, &ch, &q(e)).unwrap(), format!("{lam} rho={r:?} e={e}"))?;
                }
            }
        }
    }
    let qq = q(2);
    let lone = |red: u32| {
        Loading::new(
            qq,
            vec![Solid { residue: Residue(1), x: Q::from_integer(-2), origin: Origin::Free }],
            vec![Red { residue: Residue(red), x: Q::from_integer(0), m: 1 }],
            diagram::unit_shifts(&qq),
            Q::new(1, 8),
        )
        .unwrap()
    };
    ensure(normalize_right(&lone(1)).is_ok(), || "solid i before red i should be steady".into())?;
    ensure(matches!(normalize_right(&lone(0)), Err(DiagramError::Unsteady(_))), || "solid i before red j should be unsteady".into())?;
    Ok(format!("{n_cases} idempotents fixed and idempotent, 2 steadiness verdicts"))
}

fn transport() -> Outcome {
    let qq = q(3);
    let one = Charge::level_one(0);
    let t = transport_labels(&mp("1"), &mp("1"), &one, &qq, Residue(0)).map_err(|e| e.to_string())?;
    ensure(t.lam_plus == mp("2") && t.mu_plus == mp("2") && t.hypothesis_ok, || format!("(1): {t:?}"))?;
    let t = transport_labels(&mp("2,2,2"), &mp("2,2,2"), &Charge::level_one(1), &qq, Residue(0)).map_err(|e| e.to_string())?;
    ensure(!t.hypothesis_ok, || "(2,2,2) has two 0-nodes".into())?;
    let t = transport_labels(&Multipartition::empty(1), &Multipartition::empty(1), &one, &qq, Residue(0)).map_err(|e| e.to_string())?;
    ensure(t.lam_plus == Multipartition::empty(1) && t.hypothesis_ok, || "empty".into())?;
    ensure(transport_labels(&mp("2"), &mp("1"), &one, &qq, Residue(0)).is_err(), || "size mismatch accepted".into())?;
    for (lam, rho, plus) in GOLDEN {
        let ch = Charge::level_one(rho);
        let t = transport_labels(&mp(lam), &mp(lam), &ch, &qq, Residue(0)).map_err(|e| e.to_string())?;
        let nodes = count_residue_nodes(&mp(lam), &[rho], &qq, Residue(0));
        ensure(t.lam_plus == mp(plus) && t.hypothesis_ok == (nodes <= 1), || format!("golden {lam}"))?;
    }
    let mut pairs = 0;
    for n in 0..=5 {
        let parts: Vec<Partition> = partitions_up_to(n).into_iter().filter(|p| p.size() == n).collect();
        for a in &parts {
            for b in &parts {
                let (la, lb) = (Multipartition::from(a.clone()), Multipartition::from(b.clone()));
                let t = transport_labels(&la, &lb, &one, &qq, Residue(0)).map_err(|e| e.to_string())?;
                let ok = count_residue_nodes(&la, &[0], &qq, Residue(0)) <= 1 && count_residue_nodes(&lb, &[0], &qq, Residue(0)) <= 1;
                ensure(t.hypothesis_ok == ok, || format!("flag {a} {b}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("fixtures, 12 golden labels, {pairs} label pairs; no decomposition numbers computed"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 10] = [
        (1, "golden lambda+ table", golden_table, Duration::from_secs(1)),
        (2, "box/abacus equivalence sweep", equivalence_sweep, Duration::from_secs(120)),
        (3, "general-edge conjugation vs direct insertion", general_edge, Duration::MAX),
        (4, "abacus invariants", abacus_invariants, Duration::MAX),
        (5, "size, length and tuple/strip laws", structural_laws, Duration::MAX),
        (6, "idempotent correspondence", idempotent_correspondence, Duration::from_secs(300)),
        (7, "degree preservation", degree_preservation, Duration::MAX),
        (8, "semistandard fixtures and counts", semistandard_fixtures, Duration::MAX),
        (9, "normalizer soundness", normalizer, Duration::MAX),
        (10, "label transport hypothesis", transport, Duration::MAX),
    ];
    let mut failed = 0;
    for (n, title, f, budget) in criteria {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let (ok, detail) = match out {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; took {:.2}s, budget {}s", took.as_secs_f64(), budget.as_secs())),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!("criterion {n:>2} {}: {title} ({detail}) [{:.2}s]", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
