use num_traits::{One, Zero};
use primcone::jordan::hurwitz::Hurwitz;
use primcone::jordan::sample::{trace_fiber_sample, ElementSampler};
use primcone::jordan::xref;
use primcone::jordan::*;
use primcone::linalg::{q, rank, Mat, Q};
use primcone::sweeps::{jordan_panel_violations, rank_one_matrix_violations};
use proptest::prelude::*;

fn alg(l: JordanLabel) -> JordanAlgebra {
    JordanAlgebra::build(l).unwrap()
}

#[test]
fn identity_and_trace_form_on_the_panel() {
    let (checked, bad) = jordan_panel_violations(200, 7);
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(checked, JordanLabel::panel().len());
    for l in JordanLabel::panel() {
        let a = alg(l);
        let mut s = ElementSampler::new(3);
        for _ in 0..5 {
            let x = s.element(&a);
            let y = s.element(&a);
            assert_eq!(a.mul(&x, &y), a.mul(&y, &x), "{l}");
            assert_eq!(a.mul(&a.unit(), &x), x, "{l}");
        }
    }
}

#[test]
fn minimal_polynomial_annihilates_regular_elements() {
    for l in [JordanLabel::J1(3), JordanLabel::J2(4), JordanLabel::J3(3), JordanLabel::J4(3), JordanLabel::J5] {
        let a = alg(l);
        let mut s = ElementSampler::new(11);
        for _ in 0..3 {
            let x = s.element(&a);
            assert!(a.is_regular(&x));
            let p = a.min_poly_coeffs(&x);
            let r = a.rank();
            let mut acc = a.power(&x, r);
            for (i, c) in p.iter().enumerate() {
                let xp = a.power(&x, r - 1 - i);
                acc = acc.iter().zip(xp).map(|(u, v)| u.clone() + c.clone() * v).collect();
            }
            assert!(acc.iter().all(Zero::is_zero), "{l}");
        }
    }
}

#[test]
fn singular_elements_use_the_generic_coefficients() {
    // E₁₁ in J2(3): eigenvalues 1, 0, 0, so the characteristic polynomial is X³ − X².
    let a = alg(JordanLabel::J2(3));
    let mut e = vec![Cq::zero(); a.dim()];
    e[0] = Cq::one();
    assert!(!a.is_regular(&e));
    assert_eq!(a.min_poly_coeffs(&e), vec![cq(q(-1)), cq(q(0)), cq(q(0))]);
    assert_eq!(a.trace(&e), cq(q(1)));
    assert_eq!(a.det(&e), cq(q(0)));
}

#[test]
fn rank_one_matches_matrix_rank_exhaustively() {
    let (checked, bad) = rank_one_matrix_violations();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(checked, 3 * 729);
    // ±vvᵀ with v ∈ {−1,0,1}³ up to sign: 13 lines, two signs.
    let a = alg(JordanLabel::J2(3));
    let ones = (0..729)
        .filter(|&code| {
            let mut x = vec![Cq::zero(); a.dim()];
            let mut c = code;
            for i in 0..3 {
                for j in i..3 {
                    x[a.matrix_coordinate(i, j, 0).unwrap()] = cq(q((c % 3) as i64 - 1));
                    c /= 3;
                }
            }
            is_rank_one(&a, &x)
        })
        .count();
    assert_eq!(ones, 26);
}

/// Real matrix of `v ↦ Hv` on `K^n`, `K` of dimension `d`; its rank is `d` times the `K`-rank.
fn real_form(h: &Hurwitz, m: &[Vec<Vec<Q>>]) -> Mat<Q> {
    let n = m.len();
    let d = h.dim;
    let mut out = vec![vec![q(0); n * d]; n * d];
    for i in 0..n {
        for j in 0..n {
            for u in 0..d {
                if m[i][j][u].is_zero() {
                    continue;
                }
                for v in 0..d {
                    let (w, s) = h.basis_product(u, v);
                    out[i * d + w][j * d + v] += m[i][j][u].clone() * q(s as i64);
                }
            }
        }
    }
    out
}

#[test]
fn rank_one_matches_division_algebra_rank() {
    let mut s = ElementSampler::new(21);
    for (l, d) in [(JordanLabel::J3(3), 2), (JordanLabel::J4(3), 4)] {
        let a = alg(l);
        let h = Hurwitz::new(d);
        for terms in [1usize, 1, 2, 3] {
            let mut m = vec![vec![vec![q(0); d]; 3]; 3];
            for _ in 0..terms {
                let x: Vec<Vec<Q>> = (0..3).map(|_| (0..d).map(|_| s.rational()).collect()).collect();
                for i in 0..3 {
                    for j in 0..3 {
                        let p = h.mul(&x[i], &h.conj(&x[j]));
                        for u in 0..d {
                            m[i][j][u] += p[u].clone();
                        }
                    }
                }
            }
            let k_rank = rank(&real_form(&h, &m), 3 * d) / d;
            let mut x = vec![Cq::zero(); a.dim()];
            for i in 0..3 {
                for j in i..3 {
                    for u in 0..d {
                        if let Some(c) = a.matrix_coordinate(i, j, u) {
                            x[c] = cq(m[i][j][u].clone());
                        }
                    }
                }
            }
            assert_eq!(is_rank_one(&a, &x), k_rank == 1, "{l} terms {terms}");
        }
    }
}

#[test]
fn spin_factor_rank_one_is_the_quadric() {
    let a = alg(JordanLabel::J1(3));
    for t in -2i64..=2 {
        for w in [[1i64, 0, 0], [0, 2, 0], [1, 1, 0], [2, 0, 0]] {
            let x: Element = std::iter::once(t).chain(w).map(|v| cq(q(v))).collect();
            let on_quadric = t * t == w.iter().map(|v| v * v).sum::<i64>();
            assert_eq!(is_rank_one(&a, &x), on_quadric && t != 0, "t={t} w={w:?}");
        }
    }
}

#[test]
fn trace_fibres() {
    let a = alg(JordanLabel::J2(3));
    let one = trace_fiber_sample(&a, &cq(q(1)), 6, 5).unwrap();
    let mut e11 = vec![Cq::zero(); a.dim()];
    e11[0] = Cq::one();
    assert!(one.contains(&e11));
    let zero = trace_fiber_sample(&a, &Cq::zero(), 6, 5).unwrap();
    assert!(!zero.is_empty());
    assert!(zero.iter().all(|x| x.iter().any(|c| !c.is_zero())));
    for l in JordanLabel::panel() {
        let a = alg(l);
        let mut fibres = Vec::new();
        for t in [q(0), q(1), q(-2)] {
            let f = trace_fiber_sample(&a, &cq(t.clone()), 4, 9).unwrap();
            assert_eq!(f.len(), 4, "{l} t={t}");
            for x in &f {
                assert!(is_rank_one(&a, x));
                assert_eq!(a.trace(x), cq(t.clone()));
            }
            fibres.push(f);
        }
        for i in 0..fibres.len() {
            for j in i + 1..fibres.len() {
                assert!(fibres[i].iter().all(|x| !fibres[j].contains(x)), "{l}");
            }
        }
    }
}

#[test]
fn custom_form_sampling_is_refused() {
    let a = JordanAlgebra::spin_factor(vec![vec![q(1), q(0)], vec![q(0), q(-1)]]).unwrap();
    assert_eq!(trace_fiber_sample(&a, &cq(q(1)), 2, 1), Err(JordanError::UnsupportedForm));
    assert!(trace_form_nondegenerate(&a));
}

#[test]
fn cone_dimension_is_one_more_than_the_closed_orbit() {
    // Off the trace-zero hyperplane x/tr(x) is a primitive idempotent, so the
    // quadratic equations cut out exactly the cone there.
    for l in JordanLabel::panel() {
        let a = alg(l);
        for t in [q(1), q(-3)] {
            let x = &trace_fiber_sample(&a, &cq(t), 2, 2).unwrap()[1];
            assert_eq!(cone_dimension_at(&a, x).unwrap(), l.expected_cone_dimension(), "{l}");
        }
    }
}

#[test]
fn trace_zero_points_of_small_algebras() {
    let mut labels: Vec<JordanLabel> = (2..=9).map(JordanLabel::J1).collect();
    labels.extend([JordanLabel::J2(3), JordanLabel::J3(3), JordanLabel::J4(3), JordanLabel::J5]);
    for l in labels {
        let a = alg(l);
        let x = &trace_fiber_sample(&a, &Cq::zero(), 1, 2).unwrap()[0];
        assert_eq!(cone_dimension_at(&a, x).unwrap(), l.expected_cone_dimension(), "{l}");
    }
}

#[test]
fn square_zero_component_meets_the_cone_for_n_four() {
    // For n ≥ 4 the equations also vanish on square-zero elements of rank 2,
    // a component of dimension larger than the cone through its trace-zero points.
    for l in [JordanLabel::J2(4), JordanLabel::J3(4), JordanLabel::J4(4)] {
        let a = alg(l);
        let x = &trace_fiber_sample(&a, &Cq::zero(), 1, 2).unwrap()[0];
        assert!(cone_dimension_at(&a, x).unwrap() > l.expected_cone_dimension(), "{l}");
    }
}

#[test]
fn trace_zero_decomposition() {
    let a = alg(JordanLabel::J3(3));
    let mut s = ElementSampler::new(4);
    let x = s.element(&a);
    let (c, v) = trace_zero_part(&a, &x);
    assert_eq!(a.trace(&v), Cq::zero());
    let back: Element = v.iter().zip(a.unit()).map(|(p, u)| p.clone() + c.clone() * u).collect();
    assert_eq!(back, x);
}

#[test]
fn descriptors_round_trip() {
    let (d, _) = describe(JordanLabel::J2(3), 5, 1).unwrap();
    assert_eq!((d.dim, d.rank), (6, 3));
    let s = serde_json::to_string(&d).unwrap();
    assert!(s.contains("traceFormNondegenerate"));
    assert_eq!(parse_jordan_descriptor(&s).unwrap(), d);
    assert_eq!(xref::row(&JordanLabel::J2(7)).hilbert_cases(), ["H1", "H3", "H4", "H6", "H8", "H9"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coefficients_are_homogeneous(seed in any::<u64>(), c in -4i64..=4, which in 0usize..4) {
        let l = [JordanLabel::J1(4), JordanLabel::J2(3), JordanLabel::J3(3), JordanLabel::J4(3)][which];
        let a = alg(l);
        let mut s = ElementSampler::new(seed);
        let x = s.element(&a);
        let cx: Element = x.iter().map(|v| v.clone() * cq(q(c))).collect();
        let p = a.min_poly_coeffs(&x);
        let pc = a.min_poly_coeffs(&cx);
        for (i, (u, v)) in p.iter().zip(&pc).enumerate() {
            prop_assert_eq!(v.clone(), u.clone() * cq(q(c.pow(i as u32 + 1))));
        }
    }

    #[test]
    fn trace_is_linear(seed in any::<u64>(), which in 0usize..5) {
        let l = [JordanLabel::J1(5), JordanLabel::J2(4), JordanLabel::J3(3), JordanLabel::J4(3), JordanLabel::J5][which];
        let a = alg(l);
        let mut s = ElementSampler::new(seed);
        let x = s.element(&a);
        let y = s.element(&a);
        let c = s.rational();
        let z: Element = x.iter().zip(&y).map(|(u, v)| u.clone() * cq(c.clone()) + v.clone()).collect();
        prop_assert_eq!(a.trace(&z), a.trace(&x) * cq(c) + a.trace(&y));
        // Trace from the interpolated coefficients agrees with the linear form.
        prop_assert_eq!(-a.min_poly_coeffs(&x)[0].clone(), a.trace(&x));
    }

    #[test]
    fn labels_round_trip(k in 0usize..5, n in 1usize..40) {
        let l = match k { 0 => JordanLabel::J1(n), 1 => JordanLabel::J2(n), 2 => JordanLabel::J3(n), 3 => JordanLabel::J4(n), _ => JordanLabel::J5 };
        prop_assert_eq!(l.to_string().parse::<JordanLabel>().unwrap(), l);
    }
}
