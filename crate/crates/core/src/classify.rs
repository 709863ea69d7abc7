//! Reducibility classification of a lowest weight.

use std::fmt;

use crate::scalar::{int, q, Scalar};
use crate::singular::{sv_grade, SvType};
use crate::verma::Weight;

/// One singular vector of V^lw: its type and the lowest weight it generates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Finding<S: Scalar = crate::Rational> {
    pub sv_type: SvType,
    pub target: Weight<S>,
}

/// `"irreducible"` or `"A"` followed by the ascending type digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseLabel(pub String);

impl CaseLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn target_weight<S: Scalar>(lw: &Weight<S>, t: SvType) -> Weight<S> {
    lw.shifted(sv_grade(t))
}

/// Candidate parameters `(p¹, p², p³, q³, p⁴, p⁵)` solved from the five
/// weight conditions.
pub fn candidate_params<S: Scalar>(lw: &Weight<S>) -> [S; 6] {
    let (l1, l2) = (lw.lambda1.clone(), lw.lambda2.clone());
    let two: S = int(2);
    let p1 = S::one() - two.clone() * (l1.clone() - l2.clone());
    let p2 = q::<S>(3, 2) - two.clone() * l2.clone();
    let q3 = p2.clone();
    let p3 = q3.clone() + q(5, 2) - two.clone() * l1.clone();
    let p4 = int::<S>(4) - two.clone() * (l1.clone() + l2);
    let p5 = q::<S>(5, 2) - two * l1;
    [p1, p2, p3, q3, p4, p5]
}

/// Every reducibility type of V^lw, in type order.
pub fn classify<S: Scalar>(lw: &Weight<S>) -> Vec<Finding<S>> {
    let [p1, p2, p3, q3, p4, p5] = candidate_params(lw).map(|x| x.positive_integer());
    let mut types = Vec::with_capacity(5);
    if let Some(p1) = p1 {
        types.push(SvType::I { p1 });
    }
    if let Some(p2) = p2 {
        types.push(SvType::II { p2 });
    }
    if let (Some(p3), Some(q3)) = (p3, q3) {
        if p3 != q3 && p3 != 2 * q3 {
            types.push(SvType::III { p3, q3 });
        }
    }
    if let Some(p4) = p4 {
        types.push(SvType::IV { p4 });
    }
    if let Some(p5) = p5 {
        types.push(SvType::V { p5 });
    }
    types
        .into_iter()
        .map(|t| Finding {
            sv_type: t,
            target: target_weight(lw, t),
        })
        .collect()
}

pub fn case_label<S: Scalar>(findings: &[Finding<S>]) -> CaseLabel {
    let mut digits: Vec<char> = findings.iter().map(|f| f.sv_type.digit()).collect();
    digits.sort_unstable();
    digits.dedup();
    if digits.is_empty() {
        CaseLabel("irreducible".to_string())
    } else {
        CaseLabel(std::iter::once('A').chain(digits).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn w(a: (i64, i64), b: (i64, i64)) -> Weight<Rational> {
        Weight::from_ratios(a, b)
    }

    fn types(lw: &Weight<Rational>) -> Vec<SvType> {
        classify(lw).into_iter().map(|f| f.sv_type).collect()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            types(&w((-1, 4), (-1, 4))),
            vec![
                SvType::I { p1: 1 },
                SvType::II { p2: 2 },
                SvType::III { p3: 5, q3: 2 },
                SvType::IV { p4: 5 },
                SvType::V { p5: 3 },
            ]
        );
        assert!(types(&w((0, 1), (1, 3))).is_empty());
        assert_eq!(types(&w((1, 1), (1, 1))), vec![SvType::I { p1: 1 }]);
        assert_eq!(
            types(&w((5, 4), (1, 4))),
            vec![SvType::II { p2: 1 }, SvType::IV { p4: 1 }]
        );
    }

    #[test]
    fn labels() {
        assert_eq!(case_label::<Rational>(&[]).as_str(), "irreducible");
        assert_eq!(case_label(&classify(&w((1, 1), (1, 1)))).as_str(), "A1");
        assert_eq!(case_label(&classify(&w((3, 4), (1, 4)))).as_str(), "A245");
        assert_eq!(
            case_label(&classify(&w((-1, 4), (-1, 4)))).as_str(),
            "A12345"
        );
    }

    #[test]
    fn targets() {
        assert_eq!(
            target_weight(&w((1, 1), (3, 2)), SvType::I { p1: 2 }),
            w((2, 1), (1, 2))
        );
        assert_eq!(
            target_weight(&w((2, 9), (1, 4)), SvType::II { p2: 1 }),
            w((2, 9), (5, 4))
        );
        assert_eq!(
            target_weight(&w((3, 4), (5, 7)), SvType::V { p5: 1 }),
            w((7, 4), (5, 7))
        );
    }
}
