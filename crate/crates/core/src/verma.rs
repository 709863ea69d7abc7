//! Lowest-weight Verma module V^Λ on the six-index basis
//! `(b̂₁⁺)^k₁ (b̂₂⁺)^k₂ (a₁⁺)^m₁ (a₂⁺)^m₂ (ĉ⁺)^n₁ (d⁺)^n₂ |0⟩`.
//!
//! Singularity is tested against the hatted lowering set
//! `{a₁⁻, a₂⁻, b̂₁⁻, b̂₂⁻, ĉ⁻, d̂⁻}`. Its joint kernel equals that of the
//! unhatted set: `a_k⁻` acts on a key by `m_k` times a shift of `m_k`, so a
//! vector killed by both `a⁻` has no key with `m₁ + m₂ > 0`; the hatted and
//! unhatted `b⁻, c⁻, d⁻` differ by terms ending in an `a⁻` factor, which
//! vanish on such vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::GradeVector;
use crate::error::{Error, Result};
use crate::scalar::{half, int, q, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight<S: Scalar = crate::Rational> {
    pub lambda1: S,
    pub lambda2: S,
}

impl<S: Scalar> Weight<S> {
    pub fn new(lambda1: S, lambda2: S) -> Self {
        Weight { lambda1, lambda2 }
    }

    pub fn from_ratios(l1: (i64, i64), l2: (i64, i64)) -> Self {
        Weight::new(q(l1.0, l1.1), q(l2.0, l2.1))
    }

    /// `Λ + p₁δ₁ + p₂δ₂`.
    pub fn shifted(&self, grade: GradeVector) -> Self {
        Weight::new(
            self.lambda1.clone() + q(grade.p1, 2),
            self.lambda2.clone() + q(grade.p2, 2),
        )
    }

    /// The grade `g` with `root.shifted(g) == self`, if it is integral.
    pub fn grade_relative_to(&self, root: &Weight<S>) -> Option<GradeVector> {
        let two: S = int(2);
        let p1 = (two.clone() * (self.lambda1.clone() - root.lambda1.clone())).to_i64()?;
        let p2 = (two * (self.lambda2.clone() - root.lambda2.clone())).to_i64()?;
        Some(GradeVector::new(p1, p2))
    }

    pub fn to_strings(&self) -> [String; 2] {
        [
            self.lambda1.to_fraction_string(),
            self.lambda2.to_fraction_string(),
        ]
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.lambda1.to_fraction_string(),
            self.lambda2.to_fraction_string()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisKey {
    pub k1: u32,
    pub k2: u32,
    pub m1: u32,
    pub m2: u32,
    pub n1: u32,
    pub n2: u32,
}

impl BasisKey {
    pub const VACUUM: BasisKey = BasisKey {
        k1: 0,
        k2: 0,
        m1: 0,
        m2: 0,
        n1: 0,
        n2: 0,
    };

    pub const fn new(k1: u32, k2: u32, m1: u32, m2: u32, n1: u32, n2: u32) -> Self {
        BasisKey {
            k1,
            k2,
            m1,
            m2,
            n1,
            n2,
        }
    }

    /// The shorthand `|k, ℓ, n, m⟩` with `m₁ = m₂ = 0`.
    pub const fn reduced(k: u32, l: u32, n: u32, m: u32) -> Self {
        BasisKey::new(k, l, 0, 0, n, m)
    }

    pub fn from_array(a: [u32; 6]) -> Self {
        BasisKey::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> [u32; 6] {
        [self.k1, self.k2, self.m1, self.m2, self.n1, self.n2]
    }

    /// Adds the given offsets; `None` if any index would go negative.
    fn offset(self, d: [i64; 6]) -> Option<BasisKey> {
        let a = self.to_array();
        let mut out = [0u32; 6];
        for i in 0..6 {
            out[i] = u32::try_from(i64::from(a[i]) + d[i]).ok()?;
        }
        Some(BasisKey::from_array(out))
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.to_array();
        write!(f, "({a},{b},{c},{d},{e},{g})")
    }
}

pub fn grade_of_key(key: BasisKey) -> GradeVector {
    let [k1, k2, m1, m2, n1, n2] = key.to_array().map(i64::from);
    GradeVector::new(2 * k1 + m1 + n1 + n2, 2 * k2 + m2 + n1 - n2)
}

pub fn weight_of_key<S: Scalar>(lw: &Weight<S>, key: BasisKey) -> Weight<S> {
    lw.shifted(grade_of_key(key))
}

/// All keys of grade `(p1, p2)` in canonical order.
pub fn enumerate_grade(p1: i64, p2: i64) -> Vec<BasisKey> {
    let mut keys = Vec::new();
    if p1 < 0 || p2 < -p1 {
        return keys;
    }
    for k1 in 0..=p1 / 2 {
        let rest1 = p1 - 2 * k1;
        for n1 in 0..=rest1 {
            for n2 in 0..=rest1 - n1 {
                let m1 = rest1 - n1 - n2;
                let rest2 = p2 - n1 + n2;
                if rest2 < 0 {
                    continue;
                }
                for k2 in 0..=rest2 / 2 {
                    let m2 = rest2 - 2 * k2;
                    keys.push(BasisKey::from_array(
                        [k1, k2, m1, m2, n1, n2].map(|x| x as u32),
                    ));
                }
            }
        }
    }
    keys.sort();
    keys
}

/// Element of V^Λ; `weight` is the lowest weight of the ambient module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector<S: Scalar = crate::Rational> {
    pub weight: Weight<S>,
    terms: BTreeMap<BasisKey, S>,
}

impl<S: Scalar> ModuleVector<S> {
    pub fn zero(weight: Weight<S>) -> Self {
        ModuleVector {
            weight,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(weight: Weight<S>, key: BasisKey) -> Self {
        let mut v = Self::zero(weight);
        v.add_term(key, S::one());
        v
    }

    pub fn vacuum(weight: Weight<S>) -> Self {
        Self::basis(weight, BasisKey::VACUUM)
    }

    pub fn from_terms(weight: Weight<S>, terms: impl IntoIterator<Item = (BasisKey, S)>) -> Self {
        let mut v = Self::zero(weight);
        for (key, c) in terms {
            v.add_term(key, c);
        }
        v
    }

    pub fn add_term(&mut self, key: BasisKey, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(S::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &BasisKey) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &S)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::from_terms(
            self.weight.clone(),
            self.terms
                .iter()
                .map(|(k, c)| (*k, c.clone() * factor.clone())),
        )
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    /// The common grade of all keys; `None` for the zero vector or a mixed one.
    pub fn grade(&self) -> Option<GradeVector> {
        let mut grades = self.terms.keys().map(|k| grade_of_key(*k));
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn is_grade_homogeneous(&self) -> bool {
        self.is_zero() || self.grade().is_some()
    }

    /// Rescales so that the first coefficient in canonical order is 1.
    pub fn normalized(&self) -> Self {
        match self.terms.values().next() {
            Some(lead) => self.scale(&(S::one() / lead.clone())),
            None => self.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoweringOp {
    A1M,
    A2M,
    B1HatM,
    B2HatM,
    CHatM,
    DHatM,
}

impl LoweringOp {
    pub const ALL: [LoweringOp; 6] = [
        LoweringOp::A1M,
        LoweringOp::A2M,
        LoweringOp::B1HatM,
        LoweringOp::B2HatM,
        LoweringOp::CHatM,
        LoweringOp::DHatM,
    ];

    /// Grade of the corresponding raising operator.
    pub fn grade(self) -> GradeVector {
        match self {
            LoweringOp::A1M => GradeVector::new(1, 0),
            LoweringOp::A2M => GradeVector::new(0, 1),
            LoweringOp::B1HatM => GradeVector::new(2, 0),
            LoweringOp::B2HatM => GradeVector::new(0, 2),
            LoweringOp::CHatM => GradeVector::new(1, 1),
            LoweringOp::DHatM => GradeVector::new(1, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LoweringOp::A1M => "a1-",
            LoweringOp::A2M => "a2-",
            LoweringOp::B1HatM => "b1hat-",
            LoweringOp::B2HatM => "b2hat-",
            LoweringOp::CHatM => "chat-",
            LoweringOp::DHatM => "dhat-",
        }
    }
}

impl fmt::Display for LoweringOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Offsets in `(k1, k2, m1, m2, n1, n2)` order.
const K1: [i64; 6] = [1, 0, 0, 0, 0, 0];
const K2: [i64; 6] = [0, 1, 0, 0, 0, 0];
const M1: [i64; 6] = [0, 0, 1, 0, 0, 0];
const M2: [i64; 6] = [0, 0, 0, 1, 0, 0];
const N1: [i64; 6] = [0, 0, 0, 0, 1, 0];
const N2: [i64; 6] = [0, 0, 0, 0, 0, 1];

fn combo(parts: &[(i64, [i64; 6])]) -> [i64; 6] {
    let mut out = [0i64; 6];
    for (s, d) in parts {
        for i in 0..6 {
            out[i] += s * d[i];
        }
    }
    out
}

/// `op` applied to a single basis key, as `(key, coefficient)` pairs.
pub fn act_on_key<S: Scalar>(op: LoweringOp, lw: &Weight<S>, key: BasisKey) -> Vec<(BasisKey, S)> {
    let [k1, k2, m1, m2, n1, n2] = key.to_array().map(i64::from);
    let (l1, l2) = (lw.lambda1.clone(), lw.lambda2.clone());
    let two: S = int(2);
    // Λ₂ − Λ₁ − (n₂ − 1)/2
    let tilde = || l2.clone() - l1.clone() - q::<S>(n2 - 1, 2);
    let mut raw: Vec<([i64; 6], S)> = Vec::with_capacity(4);
    match op {
        LoweringOp::A1M => raw.push((combo(&[(-1, M1)]), int(m1))),
        LoweringOp::A2M => raw.push((combo(&[(-1, M2)]), int(m2))),
        LoweringOp::B1HatM => {
            raw.push((
                combo(&[(-1, K1)]),
                int::<S>(k1) * (two.clone() * l1.clone() + int(k1 + n1 + n2) - q(3, 2)),
            ));
            raw.push((
                combo(&[(-1, N1), (-1, N2)]),
                half::<S>() * int(n1 * n2) * tilde(),
            ));
            raw.push((combo(&[(1, K2), (-2, N1)]), q(n1 * (n1 - 1), 4)));
        }
        LoweringOp::B2HatM => {
            raw.push((
                combo(&[(-1, K2)]),
                int::<S>(k2) * (two.clone() * l2.clone() + int(k2 + n1 - n2) - q(3, 2)),
            ));
            raw.push((combo(&[(-1, N1), (1, N2)]), int(n1)));
            raw.push((combo(&[(1, K1), (-2, N1)]), q(n1 * (n1 - 1), 4)));
        }
        LoweringOp::DHatM => {
            raw.push((combo(&[(-1, N2)]), q::<S>(n2, 2) * tilde()));
            raw.push((combo(&[(-1, K1), (1, N1)]), int(k1)));
            raw.push((combo(&[(1, K2), (-1, N1)]), q(n1, 2)));
        }
        LoweringOp::CHatM => {
            raw.push((
                combo(&[(-1, N1)]),
                q::<S>(n1, 2) * (l1.clone() + l2.clone() + int(k1 + k2) + q(n1 - 2, 2)),
            ));
            raw.push((
                combo(&[(-1, K2), (-1, N2)]),
                half::<S>() * int(k2 * n2) * tilde(),
            ));
            raw.push((combo(&[(-1, K1), (1, N2)]), int(k1)));
            raw.push((combo(&[(-1, K1), (-1, K2), (1, N1)]), int(k1 * k2)));
        }
    }
    raw.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .filter_map(|(d, c)| key.offset(d).map(|k| (k, c)))
        .collect()
}

pub fn act<S: Scalar>(op: LoweringOp, v: &ModuleVector<S>) -> ModuleVector<S> {
    let mut out = ModuleVector::zero(v.weight.clone());
    for (key, c) in v.terms() {
        for (k, a) in act_on_key(op, &v.weight, *key) {
            out.add_term(k, a * c.clone());
        }
    }
    out
}

/// `a_i⁺` on the basis: it commutes with the hatted raising operators, so it
/// only shifts `m_i`.
pub fn raise_a<S: Scalar>(index: u8, v: &ModuleVector<S>) -> ModuleVector<S> {
    let d = if index == 1 { M1 } else { M2 };
    ModuleVector::from_terms(
        v.weight.clone(),
        v.terms()
            .map(|(k, c)| (k.offset(d).expect("raising never underflows"), c.clone())),
    )
}

/// The unhatted `d⁻ = d̂⁻ + ½ a₂⁺ a₁⁻`.
pub fn act_unhatted_d<S: Scalar>(v: &ModuleVector<S>) -> ModuleVector<S> {
    let correction = raise_a(2, &act(LoweringOp::A1M, v)).scale(&half());
    act(LoweringOp::DHatM, v).plus(&correction)
}

pub fn is_singular<S: Scalar>(v: &ModuleVector<S>) -> Result<bool> {
    if !v.is_grade_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if v.is_zero() {
        return Ok(false);
    }
    Ok(LoweringOp::ALL.iter().all(|op| act(*op, v).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn w(a: (i64, i64), b: (i64, i64)) -> Weight<Rational> {
        Weight::from_ratios(a, b)
    }

    #[test]
    fn grades_of_keys() {
        assert_eq!(grade_of_key(BasisKey::VACUUM), GradeVector::ZERO);
        assert_eq!(
            grade_of_key(BasisKey::new(1, 0, 0, 0, 0, 0)),
            GradeVector::new(2, 0)
        );
        assert_eq!(
            grade_of_key(BasisKey::new(0, 0, 0, 0, 0, 1)),
            GradeVector::new(1, -1)
        );
    }

    #[test]
    fn weights_of_keys() {
        let key = BasisKey::new(0, 0, 0, 0, 0, 1);
        assert_eq!(weight_of_key(&w((1, 4), (3, 4)), key), w((3, 4), (1, 4)));
        let key = BasisKey::new(1, 0, 0, 0, 0, 0);
        assert_eq!(weight_of_key(&w((1, 1), (1, 1)), key), w((2, 1), (1, 1)));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_grade(1, -1),
            vec![BasisKey::new(0, 0, 0, 0, 0, 1)]
        );
        assert_eq!(enumerate_grade(0, 0), vec![BasisKey::VACUUM]);
        assert_eq!(
            enumerate_grade(1, 1),
            vec![
                BasisKey::new(0, 0, 0, 0, 1, 0),
                BasisKey::new(0, 0, 0, 2, 0, 1),
                BasisKey::new(0, 0, 1, 1, 0, 0),
                BasisKey::new(0, 1, 0, 0, 0, 1),
            ]
        );
        assert!(enumerate_grade(-1, 3).is_empty());
        assert!(enumerate_grade(2, -3).is_empty());
    }

    #[test]
    fn action_examples() {
        let lw = w((1, 3), (2, 5));
        let v = ModuleVector::basis(lw.clone(), BasisKey::new(0, 0, 1, 0, 0, 0));
        assert_eq!(act(LoweringOp::A1M, &v), ModuleVector::vacuum(lw.clone()));
        assert!(act(LoweringOp::A1M, &ModuleVector::vacuum(lw.clone())).is_zero());

        let v = ModuleVector::basis(lw.clone(), BasisKey::new(1, 0, 0, 0, 0, 0));
        let expected = ModuleVector::vacuum(lw.clone())
            .scale(&(Rational::from_ratio(2, 1) * lw.lambda1.clone() - Rational::from_ratio(1, 2)));
        assert_eq!(act(LoweringOp::B1HatM, &v), expected);
        assert_eq!(
            act(LoweringOp::DHatM, &v),
            ModuleVector::basis(lw, BasisKey::new(0, 0, 0, 0, 1, 0))
        );
    }

    #[test]
    fn singularity_examples() {
        let d1 = BasisKey::new(0, 0, 0, 0, 0, 1);
        assert!(is_singular(&ModuleVector::vacuum(w((3, 7), (-2, 9)))).unwrap());
        assert!(is_singular(&ModuleVector::basis(w((2, 3), (2, 3)), d1)).unwrap());
        assert!(!is_singular(&ModuleVector::basis(w((0, 1), (1, 1)), d1)).unwrap());
        let mixed = ModuleVector::basis(w((0, 1), (1, 1)), d1)
            .plus(&ModuleVector::vacuum(w((0, 1), (1, 1))));
        assert_eq!(is_singular(&mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn unhatted_d_on_type_one_vectors() {
        for p in 1..=4u32 {
            let lw = w((1, 1), (1, 1)).shifted(GradeVector::new(0, i64::from(p) - 1));
            let v = ModuleVector::basis(lw, BasisKey::new(0, 0, 0, 0, 0, p));
            assert!(act_unhatted_d(&v).is_zero());
        }
    }
}
