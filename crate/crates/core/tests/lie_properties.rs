use primcone::bwb::{jordan_holder_weights, line_bundle_cohomology, twisted_tangent_h1_candidates, CohomologyResult, ParabolicData};
use primcone::irrep::{multiplicity_table, realize_layers, weyl_dimension, Freudenthal};
use primcone::linalg::{mat_mul, transpose};
use primcone::rootdata::{CartanType, RootSystem, Straightening, Weight, WeylElement};
use primcone::sweeps::{box_weights, bwb_euler_violations, freudenthal_weyl_violations};
use proptest::prelude::*;

fn rs(s: &str) -> RootSystem {
    RootSystem::build(&s.parse::<CartanType>().unwrap())
}

#[test]
fn freudenthal_matches_weyl_dimension() {
    let (checked, bad) = freudenthal_weyl_violations(4, 2);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(checked > 500);
}

#[test]
fn multiplicity_tables_are_weyl_invariant() {
    for ct in CartanType::simple_types_up_to(3) {
        let r = RootSystem::build(&ct);
        for l in box_weights(r.rank(), 0, 2) {
            if weyl_dimension(&r, &l).unwrap() > 3000 {
                continue;
            }
            let t = multiplicity_table(&r, &l).unwrap();
            let total: u64 = t.iter().map(|e| e.mult).sum();
            assert_eq!(total as u128, weyl_dimension(&r, &l).unwrap(), "{ct} {l:?}");
            let lookup: std::collections::HashMap<&Weight, u64> = t.iter().map(|e| (&e.weight, e.mult)).collect();
            for e in &t {
                for i in 0..r.rank() {
                    let s = r.reflect_weight(i, &e.weight);
                    assert_eq!(lookup.get(&s).copied(), Some(e.mult), "{ct} {l:?} {:?}", e.weight);
                }
            }
        }
    }
}

#[test]
fn realized_layers_are_adjoint_and_sized() {
    for (t, l) in [("A2", vec![1, 1]), ("B2", vec![0, 2]), ("G2", vec![1, 0]), ("C3", vec![0, 1, 0]), ("A3", vec![1, 0, 1]), ("D4", vec![0, 1, 0, 0])] {
        let r = rs(t);
        let m = realize_layers(&r, &l, &[vec![0; r.rank()]]).unwrap();
        let mut fr = Freudenthal::new(&r, &l).unwrap();
        let mut pairs = 0;
        for layer in m.layers() {
            assert_eq!(layer.dim() as u64, fr.multiplicity(&layer.weight), "{t}");
            for i in 0..r.rank() {
                let Ok(e) = m.raising_action(i, &layer.weight) else { continue };
                let up: Weight = layer.weight.iter().zip(&r.cartan[i]).map(|(a, b)| a + b).collect();
                let upper = m.layer(&up).unwrap();
                let f = m.lowering_action(i, &up).unwrap();
                // ⟨e v, w⟩ = ⟨v, f w⟩.
                let lhs = mat_mul(&transpose(&e, layer.dim()), &upper.gram, upper.dim());
                let rhs = mat_mul(&layer.gram, &f, upper.dim());
                assert_eq!(lhs, rhs, "{t} {:?} e_{i}", layer.weight);
                pairs += 1;
            }
        }
        assert!(pairs > 0);
    }
}

#[test]
fn bott_agrees_with_euler_characteristic() {
    let (checked, bad) = bwb_euler_violations(4, 6);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(checked > 100_000);
}

#[test]
fn serre_duality_on_full_flags() {
    for t in ["A1", "A2", "B2"] {
        let r = rs(t);
        let p = ParabolicData::full_flag(&r);
        let top = r.num_positive_roots();
        for mu in box_weights(r.rank(), -6, 6) {
            let dual: Weight = mu.iter().map(|x| -x - 2).collect();
            match (line_bundle_cohomology(&p, &mu).unwrap(), line_bundle_cohomology(&p, &dual).unwrap()) {
                (CohomologyResult::AllZero, CohomologyResult::AllZero) => {}
                (
                    CohomologyResult::Concentrated { degree: a, dimension: da, .. },
                    CohomologyResult::Concentrated { degree: b, dimension: db, .. },
                ) => {
                    assert_eq!(a + b, top, "{t} {mu:?}");
                    assert_eq!(da, db, "{t} {mu:?}");
                }
                other => panic!("{t} {mu:?}: {other:?}"),
            }
        }
    }
}

#[test]
fn nonnegative_twists_have_no_h1_pieces() {
    for ct in CartanType::simple_types_up_to(4) {
        let r = RootSystem::build(&ct);
        for l in box_weights(r.rank(), 0, 2).into_iter().skip(1) {
            let p = ParabolicData::from_weight(&r, &l).unwrap();
            for d in 0..=3 {
                assert!(twisted_tangent_h1_candidates(&p, &l, d).is_empty(), "{ct} {l:?} d={d}");
            }
        }
    }
}

#[test]
fn untwisted_line_pieces_can_carry_h1() {
    // On the B2 flag variety the piece β = α₁ alone has H¹ = V(ω₁); the
    // tangent bundle as a whole has none, so emptiness for d ≥ 0 is not a
    // consequence of the piecewise straightening.
    let r = rs("B2");
    let p = ParabolicData::from_weight(&r, &[1, 1]).unwrap();
    let b = r.root_to_weight(&[1, 0]);
    assert!(jordan_holder_weights(&p.opposite()).iter().any(|j| j.beta == vec![1, 0] && j.levi_dominant));
    match r.to_dominant_dot(&b) {
        Straightening::Regular { length, dominant, .. } => assert_eq!((length, dominant), (1, vec![1, 0])),
        Straightening::Singular => panic!("expected a length-one straightening"),
    }
}

#[test]
fn positive_root_counts_match_closed_forms() {
    for ct in CartanType::simple_types_up_to(8) {
        let (f, n) = ct.factors[0];
        assert_eq!(RootSystem::build(&ct).num_positive_roots(), f.positive_root_count(n), "{ct}");
    }
}

fn small_type() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA2"]).prop_map(rs)
}

fn weight_for(r: &RootSystem, coords: &[i64]) -> Weight {
    coords.iter().cycle().take(r.rank()).copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn singular_iff_some_coroot_pairing_vanishes(r in small_type(), c in prop::collection::vec(-7i64..=7, 4)) {
        let mu = weight_for(&r, &c);
        let straight = matches!(r.to_dominant_dot(&mu), Straightening::Singular);
        prop_assert_eq!(straight, r.is_dot_singular(&mu));
    }

    #[test]
    fn straightening_recovers_dot_action(r in small_type(), c in prop::collection::vec(0i64..=4, 4), word in prop::collection::vec(0usize..8, 0..10)) {
        let mu = weight_for(&r, &c);
        let w = WeylElement { word: word.into_iter().map(|i| i % r.rank()).collect() };
        let moved = r.dot_action(&w, &mu);
        match r.to_dominant_dot(&moved) {
            Straightening::Regular { length, dominant, .. } => {
                prop_assert_eq!(dominant, mu);
                prop_assert_eq!(length, r.length(&w));
            }
            Straightening::Singular => prop_assert!(false, "dominant-regular weight became singular"),
        }
    }

    #[test]
    fn duality_is_an_involution(r in small_type(), c in prop::collection::vec(0i64..=5, 4)) {
        let l = weight_for(&r, &c);
        let d = r.dual_highest_weight(&l).unwrap();
        prop_assert!(r.is_dominant(&d));
        prop_assert_eq!(r.dual_highest_weight(&d).unwrap(), l.clone());
        prop_assert_eq!(weyl_dimension(&r, &d).unwrap(), weyl_dimension(&r, &l).unwrap());
    }
}
