use primcone::detcone::deform::{first_order_triviality_up_to, flatness_check_rows, DEFAULT_SEED};
use primcone::detcone::families::PerturbedRow;
use primcone::detcone::graded_t1::default_window;
use primcone::detcone::groebner::{is_groebner_basis, schreyer_syzygies, is_syzygy};
use primcone::detcone::hilbert::hilbert_function;
use primcone::detcone::*;
use primcone::linalg::{q, Q};
use proptest::prelude::*;

#[test]
fn quadric_cone_has_one_deformation() {
    let ideal = parse_ideal("vars: x y z w\norder: lex\nx*w - y*z\n").unwrap();
    let t1 = graded_t1(&ideal, -3..=2).unwrap();
    assert_eq!(t1.total(), 1);
    assert_eq!(t1.support(), vec![-2]);
    // The same cone as the m = n = 1 block matrix.
    assert_eq!(graded_t1(&segre_veronese_ideal(1, 1).unwrap(), default_window(1)).unwrap().total(), 1);
}

#[test]
fn narrow_window_is_reported() {
    let ideal = parse_ideal("vars: x y z w\norder: lex\nx*w - y*z\n").unwrap();
    assert!(matches!(graded_t1(&ideal, -2..=2), Err(DetconeError::WindowTooSmall { degree: -2, .. })));
    let affine = parse_ideal("vars: x y\norder: lex\nx^2 - y\n").unwrap();
    assert_eq!(graded_t1(&affine, -1..=1), Err(DetconeError::NotHomogeneous));
}

#[test]
fn rational_normal_curves() {
    for m in 2..=7usize {
        let t1 = graded_t1(&hankel_ideal(m).unwrap(), default_window(m)).unwrap();
        let want = if m == 2 { 1 } else { 2 * m as u64 - 4 };
        assert_eq!(t1.total(), want, "m = {m}");
    }
}

#[test]
fn segre_veronese_cones() {
    for (m, n, want) in [(1, 1, 1), (2, 1, 2), (3, 1, 4), (2, 2, 3), (1, 2, 0)] {
        let t1 = graded_t1(&segre_veronese_ideal(m, n).unwrap(), default_window(m)).unwrap();
        assert_eq!(t1.total(), want, "({m}, {n})");
    }
}

#[test]
fn quadric_hilbert_function() {
    let ideal = parse_ideal("vars: x y z w\norder: lex\nx*w - y*z\n").unwrap();
    let gb = ideal.groebner();
    assert_eq!(gb.leading_monomials(), vec![vec![1, 0, 0, 1]]);
    let h = hilbert_function(&gb.leading_monomials(), 4, 0..=6);
    for d in 0..=6i64 {
        assert_eq!(h.get(d), ((d + 1) * (d + 1)) as u64);
    }
}

#[test]
fn hankel_minors_are_a_groebner_basis() {
    for m in 2..=6 {
        let ideal = hankel_ideal(m).unwrap();
        assert!(is_groebner_basis(&ideal.generators, &ideal.order));
        let gb = ideal.groebner();
        for s in schreyer_syzygies(&gb) {
            assert!(is_syzygy(&gb, &s));
        }
    }
}

#[test]
fn perturbed_family_is_flat() {
    for m in 2..=4 {
        for n in 0..=2 {
            let r = flatness_check(m, n, 5, DEFAULT_SEED).unwrap();
            assert!(r.minors_are_groebner && r.flat, "({m}, {n})");
            assert_eq!(r.hilbert.get(0), 1);
            assert_eq!(r.hilbert.get(1), ((m + 1) * (n + 1) + 1) as u64);
        }
    }
}

#[test]
fn control_family_moves_leading_terms() {
    for (m, n) in [(2, 0), (2, 1), (3, 0)] {
        assert!(!flatness_check_rows(m, n, 3, DEFAULT_SEED, PerturbedRow::Top).unwrap().flat);
    }
}

#[test]
fn triviality_examples() {
    let zero = |m: usize, n: usize| vec![vec![q(0); m - 1]; n + 1];
    assert!(first_order_triviality(2, 1, &zero(2, 1)).unwrap());
    assert!(!first_order_triviality(2, 1, &[vec![q(1)], vec![q(0)]]).unwrap());
    let s = ParameterSampler::new(DEFAULT_SEED).nonzero_matrix(3, 2).unwrap();
    assert!(!first_order_triviality(3, 2, &s).unwrap());
    // The conic's deformation lives in degree −2, so degree −1 directions are trivial there.
    assert!(first_order_triviality_up_to(2, 0, &[vec![q(1)]], 0).unwrap());
}

fn rational() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=5).prop_map(|(a, b)| Q::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn triviality_iff_zero(m in 2usize..=3, n in 1usize..=2, entries in proptest::collection::vec(rational(), 6)) {
        let s: Vec<Vec<Q>> = (0..=n).map(|i| (0..m - 1).map(|j| entries[i * (m - 1) + j].clone()).collect()).collect();
        let is_zero = s.iter().flatten().all(|x| *x == q(0));
        prop_assert_eq!(first_order_triviality(m, n, &s).unwrap(), is_zero);
    }

    #[test]
    fn normal_form_detects_membership(a in rational(), b in rational(), c in rational()) {
        let ideal = hankel_ideal(3).unwrap();
        let gb = ideal.groebner();
        let g = &ideal.generators;
        let x = |i: usize| Poly::var(ideal.nvars(), i);
        let p = g[0].mul(&x(1)).scale(&a).add(&g[1].mul(&x(3)).scale(&b)).add(&g[2].scale(&c));
        prop_assert!(normal_form(&p, &gb).is_zero());
        let off = p.add(&x(0).mul(&x(1)));
        prop_assert!(!normal_form(&off, &gb).is_zero());
    }

    #[test]
    fn text_round_trip(coeffs in proptest::collection::vec(rational(), 1..6), exps in proptest::collection::vec(0u32..3, 15)) {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let p = Poly::from_terms(3, coeffs.iter().enumerate().map(|(k, c)| (exps[3 * k..3 * k + 3].to_vec(), c.clone())));
        let ideal = Ideal::new(names, vec![p]);
        prop_assert_eq!(parse_ideal(&format_ideal(&ideal)).unwrap(), ideal);
    }
}
