//! Worked values across the public API.

use std::collections::BTreeMap;

use g2verma::catalog::{catalog_diagram, representative_params, CatalogParams};
use g2verma::classify::target_weight;
use g2verma::singular::{closed_form_coeff, closed_form_table, general_table, Recurrence};
use g2verma::{
    act, adjoint_grade, brute_force_sv, build_diagram, case_label, classify, commutator,
    enumerate_grade, general_coeff, grade_of_key, is_singular, jacobiator, reference_diagram,
    rising_factorial, sv_grade, weight_of_key, BasisKey, Error, Generator, GradeVector, LinComb,
    LoweringOp, ModuleVector, Rational, Scalar, SvType, Weight, DEFAULT_MAX_DEPTH,
};

use Generator::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn w(a: (i64, i64), b: (i64, i64)) -> Weight<Rational> {
    Weight::from_ratios(a, b)
}

fn key(a: [u32; 6]) -> BasisKey {
    BasisKey::from_array(a)
}

fn types(lw: &Weight<Rational>) -> Vec<SvType> {
    classify(lw).into_iter().map(|f| f.sv_type).collect()
}

#[test]
fn commutators_and_grades() {
    assert_eq!(commutator::<Rational>(H1, B1P), LinComb::generator(B1P));
    assert!(commutator::<Rational>(CP, CP).is_zero());
    assert_eq!(
        commutator::<Rational>(B1M, B1P),
        LinComb::generator(H1).scale(&r(2, 1))
    );
    assert_eq!(adjoint_grade(B1P), GradeVector::new(2, 0));
    assert_eq!(adjoint_grade(H1), GradeVector::ZERO);
    assert_eq!(adjoint_grade(DM), GradeVector::new(-1, 1));
    assert!(jacobiator::<Rational>(H1, B1P, B1M).is_zero());
    assert!(jacobiator::<Rational>(A1M, A1P, H1).is_zero());
}

#[test]
fn basis_and_weights() {
    assert_eq!(grade_of_key(BasisKey::VACUUM), GradeVector::ZERO);
    assert_eq!(
        grade_of_key(key([1, 0, 0, 0, 0, 0])),
        GradeVector::new(2, 0)
    );
    assert_eq!(
        grade_of_key(key([0, 0, 0, 0, 0, 1])),
        GradeVector::new(1, -1)
    );
    assert_eq!(
        weight_of_key(&w((1, 4), (3, 4)), key([0, 0, 0, 0, 0, 1])),
        w((3, 4), (1, 4))
    );
    assert_eq!(
        weight_of_key(&w((1, 1), (1, 1)), key([1, 0, 0, 0, 0, 0])),
        w((2, 1), (1, 1))
    );
    assert_eq!(enumerate_grade(1, -1), vec![key([0, 0, 0, 0, 0, 1])]);
    assert_eq!(enumerate_grade(0, 0), vec![BasisKey::VACUUM]);
    assert_eq!(enumerate_grade(1, 1).len(), 4);
}

#[test]
fn lowering_actions() {
    let lw = w((3, 5), (2, 7));
    let m1 = ModuleVector::basis(lw.clone(), key([0, 0, 1, 0, 0, 0]));
    assert_eq!(act(LoweringOp::A1M, &m1), ModuleVector::vacuum(lw.clone()));
    assert!(act(LoweringOp::A1M, &ModuleVector::vacuum(lw.clone())).is_zero());
    let b1 = ModuleVector::basis(lw.clone(), key([1, 0, 0, 0, 0, 0]));
    let expected =
        ModuleVector::vacuum(lw.clone()).scale(&(r(2, 1) * lw.lambda1.clone() - r(1, 2)));
    assert_eq!(act(LoweringOp::B1HatM, &b1), expected);
    assert_eq!(
        act(LoweringOp::DHatM, &b1),
        ModuleVector::basis(lw.clone(), key([0, 0, 0, 0, 1, 0]))
    );
    assert!(is_singular(&ModuleVector::vacuum(lw)).unwrap());
    let d = key([0, 0, 0, 0, 0, 1]);
    assert!(is_singular(&ModuleVector::basis(w((2, 3), (2, 3)), d)).unwrap());
    assert!(!is_singular(&ModuleVector::basis(w((0, 1), (1, 1)), d)).unwrap());
}

#[test]
fn coefficients() {
    assert_eq!(rising_factorial(&r(9, 7), 0), r(1, 1));
    assert_eq!(rising_factorial(&r(1, 1), 3), r(6, 1));
    assert_eq!(rising_factorial(&r(-1, 2), 2), r(-1, 4));
    assert_eq!(general_coeff(&w((2, 9), (5, 3)), 4, 0, 0).unwrap(), r(1, 1));
    assert_eq!(general_coeff(&w((1, 1), (1, 1)), 1, 0, 1).unwrap(), r(0, 1));
    let t = SvType::III { p3: 1, q3: 2 };
    let lw = w((7, 4), (-1, 4));
    assert_eq!(closed_form_coeff(t, &lw, 0, 0).unwrap(), r(1, 1));
    assert_eq!(closed_form_coeff(t, &lw, 0, 1).unwrap(), r(2, 1));
    assert_eq!(
        closed_form_coeff(SvType::IV { p4: 1 }, &w((1, 1), (1, 2)), 0, 1).unwrap(),
        r(1, 2)
    );
    let v = g2verma::closed_form_sv(t, &lw).unwrap();
    let terms: BTreeMap<BasisKey, Rational> = v.terms().map(|(k, c)| (*k, c.clone())).collect();
    assert_eq!(
        terms,
        BTreeMap::from([
            (key([0, 2, 0, 0, 0, 1]), r(1, 1)),
            (key([0, 1, 0, 0, 1, 0]), r(2, 1))
        ])
    );
}

#[test]
fn recurrences_at_worked_points() {
    let lw = w((1, 1), (1, 1));
    let table = general_table(&lw, 2).unwrap();
    assert!(g2verma::singular::recurrence_holds(
        &[Recurrence::R1, Recurrence::R4],
        &table,
        &lw,
        2,
        2
    ));
    let t = SvType::III { p3: 1, q3: 2 };
    let lw = w((7, 4), (-1, 4));
    let mut table = closed_form_table(t, &lw).unwrap();
    assert!(g2verma::recurrences_hold(&table, &lw, 1, 2));
    table.set(0, 1, r(3, 1)).unwrap();
    assert!(!g2verma::recurrences_hold(&table, &lw, 1, 2));
    assert!(matches!(
        table.set(5, 5, r(1, 1)),
        Err(Error::OutOfRegion { .. })
    ));
}

#[test]
fn closed_forms_for_simple_types() {
    let v = g2verma::closed_form_sv(SvType::I { p1: 2 }, &w((1, 4), (3, 4))).unwrap();
    assert_eq!(v.terms().count(), 1);
    assert_eq!(v.coeff(&key([0, 0, 0, 0, 0, 2])), r(1, 1));
    let v = g2verma::closed_form_sv(SvType::II { p2: 1 }, &w((5, 3), (1, 4))).unwrap();
    assert_eq!(v.coeff(&key([0, 1, 0, 0, 0, 0])), r(1, 1));
    assert!(matches!(
        g2verma::closed_form_sv(SvType::II { p2: 1 }, &w((5, 3), (1, 3))),
        Err(Error::WeightCondition { .. })
    ));
    assert_eq!(sv_grade(SvType::I { p1: 2 }), GradeVector::new(2, -2));
    assert_eq!(sv_grade(SvType::II { p2: 1 }), GradeVector::new(0, 2));
    assert_eq!(sv_grade(SvType::V { p5: 3 }), GradeVector::new(6, 0));
}

#[test]
fn brute_force_examples() {
    assert!(brute_force_sv(&w((2, 3), (1, 5)), 1, 0).is_empty());
    let basis = brute_force_sv(&w((1, 1), (1, 1)), 1, -1);
    assert_eq!(basis.len(), 1);
    assert_eq!(
        basis[0],
        ModuleVector::basis(w((1, 1), (1, 1)), key([0, 0, 0, 0, 0, 1]))
    );
    assert!(brute_force_sv(&w((0, 1), (1, 3)), 2, 0).is_empty());
}

#[test]
fn classification_examples() {
    use SvType::*;
    assert_eq!(
        types(&w((-1, 4), (-1, 4))),
        vec![
            I { p1: 1 },
            II { p2: 2 },
            III { p3: 5, q3: 2 },
            IV { p4: 5 },
            V { p5: 3 }
        ]
    );
    assert!(types(&w((0, 1), (1, 3))).is_empty());
    assert_eq!(types(&w((1, 1), (1, 1))), vec![I { p1: 1 }]);
    assert_eq!(types(&w((5, 4), (1, 4))), vec![II { p2: 1 }, IV { p4: 1 }]);
    assert_eq!(case_label::<Rational>(&[]).as_str(), "irreducible");
    assert_eq!(case_label(&classify(&w((1, 1), (1, 1)))).as_str(), "A1");
    assert_eq!(case_label(&classify(&w((3, 4), (1, 4)))).as_str(), "A245");
    assert_eq!(
        target_weight(&w((1, 1), (3, 2)), I { p1: 2 }),
        w((2, 1), (1, 2))
    );
    assert_eq!(
        target_weight(&w((2, 7), (1, 4)), II { p2: 1 }),
        w((2, 7), (5, 4))
    );
    assert_eq!(
        target_weight(&w((3, 4), (5, 9)), V { p5: 1 }),
        w((7, 4), (5, 9))
    );
}

#[test]
fn type_three_regimes_give_case_labels() {
    for p3 in 1..=9u32 {
        for q3 in 1..=6u32 {
            let t = SvType::III { p3, q3 };
            if t.validate().is_err() {
                continue;
            }
            let lw = g2verma::singular::weight_for_type(t, r(0, 1)).unwrap();
            let label = case_label(&classify(&lw));
            let expected = if p3 > 2 * q3 {
                "A12345"
            } else if p3 > q3 {
                "A2345"
            } else {
                "A234"
            };
            assert_eq!(label.as_str(), expected, "{t}");
        }
    }
}

#[test]
fn reference_diagram_shapes() {
    let shape = |case: &str, pairs: &[(&str, i64)]| {
        let params: CatalogParams<Rational> = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), r(*v, 1)))
            .collect();
        let d = reference_diagram(case, &params).unwrap();
        (d.nodes().len(), d.edges().len())
    };
    assert_eq!(shape("A234", &[("p3", 1), ("q3", 2)]), (4, 5));
    assert_eq!(shape("A12345", &[("p3", 5), ("q3", 2)]), (8, 19));
    assert_eq!(shape("A245", &[("p2", 1)]), (4, 6));
    assert_eq!(shape("A15", &[("p1", 5), ("p5", 2)]), (4, 4));
    let params = representative_params::<Rational>("A1-4").unwrap();
    let d = catalog_diagram("A1-4", &params).unwrap();
    assert_eq!((d.nodes.len(), d.edges.len()), (3, 2));
}

#[test]
fn closure_examples() {
    let single = build_diagram(&w((0, 1), (1, 3)), DEFAULT_MAX_DEPTH).unwrap();
    assert_eq!((single.nodes().len(), single.edges().len()), (1, 0));
    let a245 = build_diagram(&w((3, 4), (1, 4)), DEFAULT_MAX_DEPTH).unwrap();
    let dot = a245.to_dot();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"(")).count(), 4);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 6);
    let a12345 = build_diagram(&w((-1, 4), (-1, 4)), DEFAULT_MAX_DEPTH).unwrap();
    assert_eq!((a12345.nodes().len(), a12345.edges().len()), (8, 19));
}
