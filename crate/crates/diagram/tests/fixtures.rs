use diagram::*;
use partition_core::{Charge, Multipartition, Node};
use quiver_core::Quiver;
use std::collections::BTreeMap;

fn big_setup() -> (Quiver, Charge, Multipartition, Multipartition) {
    let q = Quiver::new(2).unwrap();
    let ch = Charge::new(vec![1, 2], vec![1, 2]).unwrap();
    let mut lam = vec!["3,2", "", "1,1"];
    lam.resize(23, "");
    let lam: Multipartition = lam.join("|").parse().unwrap();
    let mut mu = vec!["3,2,1,1"];
    mu.resize(23, "");
    let mu: Multipartition = mu.join("|").parse().unwrap();
    (q, ch, lam, mu)
}

fn tab(lam: &Multipartition, mu: &Multipartition, pairs: &[((u32, u32, u32), (u32, u32, u32))]) -> Tableau {
    let mut map: BTreeMap<Node, Node> = lam.nodes().into_iter().map(|n| (n, n)).collect();
    for &((a, b, c), (x, y, z)) in pairs {
        map.insert(Node::new(a, b, c), Node::new(x, y, z));
    }
    Tableau { lam: lam.clone(), mu: mu.clone(), map }
}

#[test]
fn big_affine_data() {
    let (q, ch, _, _) = big_setup();
    let a = affine_extend(&ch, 7, &q);
    assert_eq!(a.l_hat, 23);
    assert_eq!(a.kappa_hat[..4], [1, 2, 16, 30]);
    assert_eq!(*a.kappa_hat.last().unwrap(), 2 + 14 * 21);
    let rho: Vec<u32> = a.rho_hat.iter().map(|r| r.0).collect();
    let mut want = vec![1, 2];
    want.extend([0; 7]);
    want.extend([1; 7]);
    want.extend([2; 7]);
    assert_eq!(rho, want);
}

#[test]
fn first_node_coordinate() {
    let (q, ch, _, _) = big_setup();
    let a = affine_extend(&ch, 7, &q);
    let x = position(Node::new(1, 1, 1), &a, a.default_eps()).unwrap();
    assert_eq!(x, Q::new(307, 322));
    let below = position(Node::new(1, 2, 1), &a, a.default_eps()).unwrap();
    let right = position(Node::new(1, 1, 2), &a, a.default_eps()).unwrap();
    assert!(below + Q::from_integer(1) < x);
    assert!(right < x + Q::from_integer(1));
    assert!(position(Node::new(1, 1, 1), &a, Q::new(1, 10)).is_err());
}

#[test]
fn tableaux_of_type_lambda() {
    let (q, ch, lam, _) = big_setup();
    let t = tab(&lam, &lam, &[]);
    let t1 = tab(&lam, &lam, &[((1, 1, 1), (1, 2, 2)), ((1, 2, 2), (1, 1, 1))]);
    let t2 = tab(&lam, &lam, &[((1, 2, 1), (1, 1, 3)), ((1, 1, 3), (1, 2, 1))]);
    assert!(is_semistandard(&t, &ch, &q).unwrap());
    assert!(!is_semistandard(&t1, &ch, &q).unwrap());
    assert!(!is_semistandard(&t2, &ch, &q).unwrap());
}

fn s_family(lam: &Multipartition, mu: &Multipartition) -> [Tableau; 3] {
    let s = tab(lam, mu, &[((3, 1, 1), (1, 3, 1)), ((3, 2, 1), (1, 4, 1))]);
    let s1 = tab(
        lam,
        mu,
        &[((1, 1, 1), (1, 3, 1)), ((1, 2, 1), (1, 4, 1)), ((3, 2, 1), (1, 2, 1)), ((3, 1, 1), (1, 1, 1))],
    );
    let s2 = tab(
        lam,
        mu,
        &[
            ((1, 1, 1), (1, 3, 1)),
            ((1, 2, 1), (1, 4, 1)),
            ((1, 1, 2), (1, 1, 1)),
            ((1, 1, 3), (1, 2, 1)),
            ((3, 2, 1), (1, 1, 2)),
            ((3, 1, 1), (1, 1, 3)),
        ],
    );
    [s, s1, s2]
}

#[test]
fn tableaux_of_type_mu() {
    let (q, ch, lam, mu) = big_setup();
    let [s, s1, s2] = s_family(&lam, &mu);
    for t in [&s, &s1, &s2] {
        assert!(t.is_bijective());
    }
    assert!(is_semistandard(&s, &ch, &q).unwrap());
    assert!(!is_semistandard(&s1, &ch, &q).unwrap());
    assert!(!is_semistandard(&s2, &ch, &q).unwrap());
    let all = enumerate_sstd(&lam, &mu, &ch, &q).unwrap();
    assert!(all.contains(&s));
    assert!(!all.contains(&s1) && !all.contains(&s2));
}

#[test]
fn long_travelers() {
    let (q, ch, lam, mu) = big_setup();
    let [s, _, _] = s_family(&lam, &mu);
    assert_eq!(tableau_permutation(&s, &ch, &q).unwrap(), vec![2, 3, 4, 5, 6, 0, 1]);
    let d = tableau_diagram(&s, &ch, &q).unwrap();
    assert_eq!(d.solid_crossings(), 10);
}

#[test]
fn two_component_idempotent() {
    // the formula puts the first solid of the second component left of the
    // last ghost of the first row; the drawn figure swaps these two strings
    let q = Quiver::new(3).unwrap();
    let ch = Charge::new(vec![0, 3], vec![0, 3]).unwrap();
    let l = idempotent_loading(&"3,1,1|4".parse().unwrap(), &ch, &q).unwrap();
    assert_eq!(
        l.signature().to_string(),
        "s2 g2 s3 g3 s0 | r0 | s1 g0 s2 g1 s3 g2 | r3 | s0 g3 s1 g0 s2 g1 g2"
    );
}

#[test]
fn loading_json_roundtrip() {
    let q = Quiver::new(3).unwrap();
    let l = idempotent_loading(&"2,1".parse().unwrap(), &Charge::level_one(1), &q).unwrap();
    let s = serde_json::to_string(&l).unwrap();
    let back: Loading = serde_json::from_str(&s).unwrap();
    assert_eq!(back, l);
    assert!(s.contains("\"num\""));
}

#[test]
fn tikz_is_standalone() {
    let q = Quiver::new(3).unwrap();
    let l = idempotent_loading(&"2,1".parse().unwrap(), &Charge::level_one(1), &q).unwrap();
    let t = tikz_loading(&l);
    assert!(t.starts_with("\\documentclass[tikz]{standalone}"));
    assert_eq!(t.matches("\\draw").count(), 7);
}
