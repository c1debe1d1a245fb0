mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use tilecohom::complex::Violation;
use tilecohom::{
    cohomology, cohomology_groups, hull_cohomology, primitivity, Complex, IntMatrix,
    SubstitutionComplex,
};
use tilecohom_testkit::{self as oracle, fixtures};

fn complex_of(v: usize, e: usize, f: usize, d1: &oracle::Mat, d2: &oracle::Mat) -> Complex {
    Complex::new(big(v, e, d1), big(e, f, d2)).unwrap()
}

#[test]
fn surface_fixtures() {
    for s in fixtures::surfaces() {
        let c = complex_of(s.vertices, s.edges, s.faces, &s.d1, &s.d2);
        assert!(c.validate().is_empty(), "{}", s.name);
        let r = cohomology_groups(&c).unwrap();
        let got: Vec<String> = r.groups().iter().map(|h| h.group.to_string()).collect();
        assert_eq!(got, s.expected, "{}", s.name);
        let ranks: i64 = r
            .groups()
            .iter()
            .enumerate()
            .map(|(i, h)| if i % 2 == 0 { 1 } else { -1 } * h.group.free_rank() as i64)
            .sum();
        assert_eq!(ranks, c.euler_characteristic(), "{}", s.name);
    }
}

#[test]
fn random_complexes_satisfy_euler_and_component_count() {
    let mut rng = oracle::rng(31);
    for _ in 0..300 {
        let rc = oracle::random_complex(&mut rng, 6, 9, 4);
        let (v, e, f) = (rc.vertices, rc.edge_ends.len(), rc.faces);
        let c = complex_of(v, e, f, &rc.d1, &rc.d2);
        assert!(c.validate().is_empty());
        let r = cohomology_groups(&c).unwrap();
        let (h0, h1, h2) = (&r.h0.group, &r.h1.group, &r.h2.group);
        assert_eq!(
            h0.free_rank() as i64 - h1.free_rank() as i64 + h2.free_rank() as i64,
            v as i64 - e as i64 + f as i64
        );
        assert_eq!(h0.free_rank(), oracle::components(v, &rc.edge_ends));
        assert!(h0.torsion().is_empty() && h1.torsion().is_empty());
    }
}

#[test]
fn identity_substitution_is_functorial() {
    let mut rng = oracle::rng(32);
    for _ in 0..100 {
        let rc = oracle::random_complex(&mut rng, 5, 7, 3);
        let c = complex_of(rc.vertices, rc.edge_ends.len(), rc.faces, &rc.d1, &rc.d2);
        let groups = cohomology_groups(&c).unwrap();
        let r = cohomology(&SubstitutionComplex::identity(c)).unwrap();
        let maps = r.maps.as_ref().unwrap();
        assert!(maps.g0.is_identity() && maps.g1.is_identity() && maps.g2.is_identity());
        // under identity maps the limit is the group itself whenever it is torsion free
        if groups.h2.group.torsion().is_empty() {
            let hull = hull_cohomology(&r).unwrap();
            assert_eq!(hull.h1.to_string(), groups.h1.group.to_string());
            assert_eq!(hull.h2.to_string(), groups.h2.group.to_string());
        }
    }
}

#[test]
fn broken_commutation_is_reported() {
    let mut rng = oracle::rng(33);
    let mut hits = 0;
    while hits < 50 {
        let rc = oracle::random_complex(&mut rng, 4, 6, 3);
        let (v, e, f) = (rc.vertices, rc.edge_ends.len(), rc.faces);
        if e == 0 {
            continue;
        }
        let c = complex_of(v, e, f, &rc.d1, &rc.d2);
        let mut b1 = IntMatrix::identity(e);
        // perturb a column of B1 hitting an edge with distinct endpoints
        let Some(j) = (0..e).find(|&j| rc.edge_ends[j].0 != rc.edge_ends[j].1) else {
            continue;
        };
        let i = rng.gen_range(0..e);
        b1 = b1
            .try_add(&big(
                e,
                e,
                &(0..e)
                    .map(|r| (0..e).map(|s| i64::from(r == i && s == j)).collect())
                    .collect(),
            ))
            .unwrap();
        let sc = SubstitutionComplex::new(c, b1, IntMatrix::identity(f));
        let violations = sc.validate();
        assert!(
            violations
                .iter()
                .any(|x| matches!(x, Violation::VertexCommutation { .. })),
            "{violations:?}"
        );
        assert!(cohomology(&sc).is_err());
        hits += 1;
    }
}

#[test]
fn torus_with_scaling_substitution() {
    // torus, edge map diag(2, 3), face map 6: a degree-6 self-cover
    let c = complex_of(1, 2, 1, &vec![vec![0, 0]], &vec![vec![0], vec![0]]);
    let sc = SubstitutionComplex::new(
        c,
        IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]),
        IntMatrix::from_i64(1, 1, &[6]),
    );
    let hull = hull_cohomology(&cohomology(&sc).unwrap()).unwrap();
    assert_eq!(hull.h0.to_string(), "Z");
    assert_eq!(hull.h1.to_string(), "Z[1/2] ⊕ Z[1/3]");
    assert_eq!(hull.h2.to_string(), "Z[1/6]");
    assert_eq!(hull.k0.to_string(), "Z[1/6] ⊕ Z");
    assert_eq!(hull.k1.to_string(), "Z[1/2] ⊕ Z[1/3]");
}

#[test]
fn projective_plane_torsion_is_killed() {
    // RP2 with edge map 2 and face map 2 commutes: 2 * 2 = 2 * 2
    let c = complex_of(1, 1, 1, &vec![vec![0]], &vec![vec![2]]);
    let sc = SubstitutionComplex::new(
        c.clone(),
        IntMatrix::from_i64(1, 1, &[2]),
        IntMatrix::from_i64(1, 1, &[2]),
    );
    let r = cohomology(&sc).unwrap();
    assert_eq!(r.h2.group.to_string(), "Z/2");
    assert!(r.maps.as_ref().unwrap().g2.is_zero());
    let hull = hull_cohomology(&r).unwrap();
    assert_eq!(
        (
            hull.h0.to_string(),
            hull.h1.to_string(),
            hull.h2.to_string()
        ),
        ("Z".into(), "0".into(), "0".into())
    );
    // identity keeps the torsion alive, which the limit machinery refuses
    let r = cohomology(&SubstitutionComplex::identity(c)).unwrap();
    assert!(matches!(
        hull_cohomology(&r),
        Err(tilecohom::Error::TorsionNotAnnihilated { .. })
    ));
}

fn oracle_primitivity(b: &oracle::Mat) -> Option<usize> {
    let n = b.len();
    let mut p = b.clone();
    for k in 1..=(n - 1) * (n - 1) + 1 {
        if p.iter().flatten().all(|&x| x > 0) {
            return Some(k);
        }
        // keep only the zero pattern to avoid overflow
        p = oracle::mul(&p, b)
            .iter()
            .map(|r| r.iter().map(|&x| i64::from(x > 0)).collect())
            .collect();
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn primitivity_matches_brute_force((n, a) in square_strategy(5, 2)) {
        let b: oracle::Mat = a.iter().map(|r| r.iter().map(|x| x.abs() / 2).collect()).collect();
        let (prim, k) = primitivity(&big(n, n, &b)).unwrap();
        let expected = oracle_primitivity(&b);
        prop_assert_eq!(prim, expected.is_some());
        prop_assert_eq!(k, expected);
    }
}

#[test]
fn primitivity_examples() {
    assert_eq!(primitivity(&IntMatrix::identity(3)).unwrap(), (false, None));
    assert_eq!(
        primitivity(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])).unwrap(),
        (false, None)
    );
    assert_eq!(
        primitivity(&IntMatrix::from_i64(2, 2, &[1, 1, 1, 0])).unwrap(),
        (true, Some(2))
    );
    assert!(matches!(
        primitivity(&IntMatrix::from_i64(1, 1, &[-1])),
        Err(tilecohom::Error::NegativeEntry { row: 0, col: 0 })
    ));
}
