use diagram::{idempotent_loading, normalize_right, DiagramError};
use partition_core::{Charge, Multipartition};
use quiver_core::{Quiver, Residue};
use strips::StripType;
use subdivision::*;

fn q(e: u32) -> Quiver {
    Quiver::new(e).unwrap()
}

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

#[test]
fn typedeg_tuple() {
    let l = idempotent_loading(&mp("2,2,2"), &Charge::level_one(1), &q(3)).unwrap();
    let t = close_tuples(&l, Residue(0));
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].kind, StripType::D);
    let sig: Vec<String> = t[0].strings.iter().map(|s| format!("{:?}{}", s.kind, s.residue)).collect();
    assert_eq!(sig, ["Ghost0", "Solid1", "Ghost0", "Solid1"]);
}

#[test]
fn mirror_of_strips() {
    let l = idempotent_loading(&mp("4,3,2"), &Charge::level_one(3), &q(3)).unwrap();
    let t = close_tuples(&l, Residue(0));
    let kinds: Vec<StripType> = t.iter().map(|t| t.kind).collect();
    assert_eq!(tuple_types(&l, Residue(0)), vec![StripType::A, StripType::C]);
    let single = t.iter().find(|t| t.kind == StripType::C).unwrap();
    assert!(single.is_single_solid(), "{kinds:?}");
}

#[test]
fn no_ghosts_no_tuples() {
    let l = idempotent_loading(&Multipartition::empty(1), &Charge::level_one(0), &q(3)).unwrap();
    assert!(close_tuples(&l, Residue(0)).is_empty());
    let s = subdivide_idempotent(&l, &SubdivisionParams::homogeneous(&l, Residue(0))).unwrap();
    assert_eq!(s.solids.len(), 0);
    assert_eq!(s.quiver.e(), 4);
}

#[test]
fn typedeg_image() {
    let l = idempotent_loading(&mp("2,2,2"), &Charge::level_one(1), &q(3)).unwrap();
    let s = subdivide_idempotent(&l, &SubdivisionParams::homogeneous(&l, Residue(0))).unwrap();
    assert_eq!(s.solids.len(), 8);
    // type d: new solids sit right of each ghost 0
    assert_eq!(
        s.signature().to_string(),
        "s4 s0 g4 s0 g0 s1 g1 s2 g0 s1 g1 s2 | r2 | g2 s3 g2 g3"
    );
    let r = verify_idempotent_correspondence(&mp("2,2,2"), &Charge::level_one(1), &q(3), Residue(0));
    assert!(r.pass, "{r:?}");
}

#[test]
fn one_box() {
    let r = verify_idempotent_correspondence(&mp("1"), &Charge::level_one(0), &q(3), Residue(0));
    assert!(r.pass, "{r:?}");
}

#[test]
fn one_sided_insertion_fails() {
    let cases = [("1,1", 1, Insertion::UnsafeLeft), ("2", 0, Insertion::UnsafeRight)];
    for (lam, rho, side) in cases {
        let l = idempotent_loading(&mp(lam), &Charge::level_one(rho), &q(2)).unwrap();
        let p = SubdivisionParams::homogeneous(&l, Residue(0));
        let bad = subdivide_idempotent_with(&l, &p, side).unwrap();
        assert!(matches!(normalize_right(&bad), Err(DiagramError::Unsteady(_))), "{lam} {side:?}");
        let good = subdivide_idempotent(&l, &p).unwrap();
        assert!(normalize_right(&good).is_ok());
    }
}

#[test]
fn small_sweep() {
    let r = verify_idempotent_batch(&level_one_cases(5, &[2, 3]));
    assert!(r.pass(), "{r}");
}

#[test]
fn degree_small() {
    let r = verify_degree_preservation(&DegreeSample { n_max: 3, e_set: vec![2, 3], random_trials: 100, random_n_max: 6, seed: 7 }).unwrap();
    assert!(r.pass(), "{r}");
}
