//! Property tests for algebraic and structural invariants.

use proptest::prelude::*;

use g2verma::algebra::{adjoint_grade, bracket, commutator, Generator, LinComb};
use g2verma::classify::{candidate_params, target_weight};
use g2verma::singular::{closed_form_sv, type_condition_holds, weight_for_type};
use g2verma::verma::raise_a;
use g2verma::wire::{diagram_from_json, diagram_to_json, vector_from_json, vector_to_json};
use g2verma::{
    act, brute_force_sv, build_diagram, classify, enumerate_grade, sv_grade, BasisKey, LoweringOp,
    ModuleVector, Rational, Rational64, Scalar, SvType, Weight, DEFAULT_MAX_DEPTH,
};

fn rational(denominators: &'static [i64]) -> impl Strategy<Value = Rational> {
    (-24i64..=24, prop::sample::select(denominators)).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

fn weight(denominators: &'static [i64]) -> impl Strategy<Value = Weight<Rational>> {
    (rational(denominators), rational(denominators)).prop_map(|(a, b)| Weight::new(a, b))
}

fn generator() -> impl Strategy<Value = Generator> {
    prop::sample::select(Generator::ALL.to_vec())
}

fn lincomb() -> impl Strategy<Value = LinComb<Rational>> {
    prop::collection::vec((generator(), rational(&[1, 2, 3])), 0..4).prop_map(|terms| {
        let mut out = LinComb::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    })
}

fn op() -> impl Strategy<Value = LoweringOp> {
    prop::sample::select(LoweringOp::ALL.to_vec())
}

/// A random vector supported on one small grade.
fn graded_vector() -> impl Strategy<Value = ModuleVector<Rational>> {
    (weight(&[1, 2, 3, 4]), 0i64..=4, -4i64..=4)
        .prop_filter("nonempty grade", |(_, p1, p2)| {
            !enumerate_grade(*p1, *p2).is_empty()
        })
        .prop_flat_map(|(lw, p1, p2)| {
            let keys = enumerate_grade(p1, p2);
            let n = keys.len();
            prop::collection::vec(rational(&[1, 2, 5]), n).prop_map(move |coeffs| {
                ModuleVector::from_terms(lw.clone(), keys.iter().copied().zip(coeffs))
            })
        })
}

fn small_type() -> impl Strategy<Value = SvType> {
    prop_oneof![
        (1u32..=4).prop_map(|p1| SvType::I { p1 }),
        (1u32..=3).prop_map(|p2| SvType::II { p2 }),
        (1u32..=4, 1u32..=3).prop_map(|(p3, q3)| SvType::III { p3, q3 }),
        (1u32..=3).prop_map(|p4| SvType::IV { p4 }),
        (1u32..=2).prop_map(|p5| SvType::V { p5 }),
    ]
    .prop_filter("valid parameters", |t| t.validate().is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn bracket_is_antisymmetric(u in lincomb(), v in lincomb()) {
        prop_assert!(bracket(&u, &v).plus(&bracket(&v, &u)).is_zero());
    }

    #[test]
    fn bracket_is_bilinear(u in lincomb(), v in lincomb(), w in lincomb(), c in rational(&[1, 2, 7])) {
        let left = bracket(&u.plus(&v.scale(&c)), &w);
        let right = bracket(&u, &w).plus(&bracket(&v, &w).scale(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commutators_respect_the_grading(x in generator(), y in generator()) {
        let expected = adjoint_grade(x) + adjoint_grade(y);
        for (g, _) in commutator::<Rational>(x, y).terms() {
            prop_assert_eq!(adjoint_grade(g), expected);
        }
    }

    #[test]
    fn act_is_linear(u in graded_vector(), op in op(), c in rational(&[1, 3])) {
        let v = ModuleVector::from_terms(
            u.weight.clone(),
            u.terms().map(|(k, x)| (*k, x.clone() * Rational::from_ratio(2, 1) + Rational::from_ratio(1, 1))),
        );
        let left = act(op, &u.plus(&v.scale(&c)));
        let right = act(op, &u).plus(&act(op, &v).scale(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lowering_moves_the_grade(v in graded_vector(), op in op()) {
        let image = act(op, &v);
        if let (Some(g), Some(h)) = (v.grade(), image.grade()) {
            prop_assert_eq!(h, g - op.grade());
        }
        prop_assert!(image.is_grade_homogeneous());
    }

    #[test]
    fn heisenberg_relation(v in graded_vector(), index in 1u8..=2) {
        let op = if index == 1 { LoweringOp::A1M } else { LoweringOp::A2M };
        let other = if index == 1 { LoweringOp::A2M } else { LoweringOp::A1M };
        let commutator = act(op, &raise_a(index, &v)).plus(&raise_a(index, &act(op, &v)).scale(&Rational::from_ratio(-1, 1)));
        prop_assert_eq!(commutator, v.clone());
        let mixed = act(other, &raise_a(index, &v)).plus(&raise_a(index, &act(other, &v)).scale(&Rational::from_ratio(-1, 1)));
        prop_assert!(mixed.is_zero());
    }

    #[test]
    fn vacuum_is_annihilated(lw in weight(&[1, 2, 3, 4, 8]), op in op()) {
        prop_assert!(act(op, &ModuleVector::vacuum(lw)).is_zero());
    }

    #[test]
    fn odd_grades_carry_no_singular_vectors(lw in weight(&[1, 2, 4]), p1 in 0i64..=4, p2 in -4i64..=4) {
        prop_assume!((p1 + p2) % 2 != 0);
        prop_assert!(brute_force_sv(&lw, p1, p2).is_empty());
    }

    #[test]
    fn findings_are_consistent(lw in weight(&[1, 2, 4])) {
        let findings = classify(&lw);
        for f in &findings {
            prop_assert!(type_condition_holds(f.sv_type, &lw));
            prop_assert_eq!(&f.target, &target_weight(&lw, f.sv_type));
            prop_assert_eq!(f.target.grade_relative_to(&lw), Some(sv_grade(f.sv_type)));
        }
        let kinds: Vec<_> = findings.iter().map(|f| f.sv_type.digit()).collect();
        let mut sorted = kinds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(kinds, sorted);
    }

    #[test]
    fn small_findings_are_singular(t in small_type(), free in rational(&[1, 2, 3, 4, 8])) {
        let lw = weight_for_type(t, free).unwrap();
        let v = closed_form_sv(t, &lw).unwrap();
        prop_assert!(g2verma::is_singular(&v).unwrap());
        prop_assert!(classify(&lw).iter().any(|f| f.sv_type == t));
    }

    #[test]
    fn pure_a1_exclusion(p1 in 1u32..=6, r in 1i64..=6) {
        // On the type I line, -4 lambda1 + 5 - p1 in N forces a further type.
        let l1 = Rational::from_ratio(5 - i64::from(p1) - r, 4);
        let t = SvType::I { p1 };
        let lw = weight_for_type(t, l1 - Rational::from_ratio(1 - i64::from(p1), 2)).unwrap();
        prop_assert!(type_condition_holds(t, &lw));
        prop_assert!(classify(&lw).len() > 1);
    }

    #[test]
    fn pure_a5_exclusion(p5 in 1u32..=6, r in 1i64..=6) {
        // On the type V line, lambda2 = 3/4 - r/2 forces a further type.
        let lw = weight_for_type(SvType::V { p5 }, Rational::from_ratio(3 - 2 * r, 4)).unwrap();
        prop_assert!(classify(&lw).len() > 1);
    }

    #[test]
    fn closures_are_well_formed(lw in weight(&[1, 2, 4])) {
        let d = build_diagram(&lw, DEFAULT_MAX_DEPTH).unwrap();
        prop_assert!(d.check_invariants().is_ok());
        prop_assert_eq!(d.root(), &lw);
        for leaf in d.leaves() {
            prop_assert!(classify(&d.nodes()[leaf]).is_empty());
        }
        let text = diagram_to_json(&d);
        prop_assert_eq!(diagram_from_json::<Rational>(&text).unwrap(), d);
    }

    #[test]
    fn vectors_round_trip(v in graded_vector()) {
        prop_assert_eq!(vector_from_json::<Rational>(&vector_to_json(&v)).unwrap(), v);
    }

    #[test]
    fn fraction_text_round_trips(x in rational(&[1, 2, 3, 4, 7, 9])) {
        let text = x.to_fraction_string();
        prop_assert_eq!(Rational::parse_fraction(&text).unwrap(), x);
    }

    #[test]
    fn fixed_width_scalars_agree(lw in weight(&[1, 2, 4])) {
        let small = Weight::<Rational64>::new(
            Rational64::parse_fraction(&lw.lambda1.to_fraction_string()).unwrap(),
            Rational64::parse_fraction(&lw.lambda2.to_fraction_string()).unwrap(),
        );
        let big: Vec<_> = candidate_params(&lw).iter().map(|x| x.to_fraction_string()).collect();
        let fixed: Vec<_> = candidate_params(&small).iter().map(|x| x.to_fraction_string()).collect();
        prop_assert_eq!(big, fixed);
        let a: Vec<_> = classify(&lw).into_iter().map(|f| f.sv_type).collect();
        let b: Vec<_> = classify(&small).into_iter().map(|f| f.sv_type).collect();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn edge_soundness_on_a_small_closure() {
    let d = build_diagram(
        &Weight::<Rational>::from_ratios((3, 4), (1, 4)),
        DEFAULT_MAX_DEPTH,
    )
    .unwrap();
    for e in d.edges() {
        let (u, v) = (&d.nodes()[e.src], &d.nodes()[e.dst]);
        let g = v.grade_relative_to(u).unwrap();
        let basis = brute_force_sv(u, g.p1, g.p2);
        let sv = closed_form_sv(e.sv_type, u).unwrap();
        assert!(g2verma::singular::in_span(&sv, &basis), "{u} -> {v}");
    }
}

#[test]
fn basis_key_arrays_round_trip() {
    for key in enumerate_grade(3, 1) {
        assert_eq!(BasisKey::from_array(key.to_array()), key);
    }
}
