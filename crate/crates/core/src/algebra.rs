//! The 14-dimensional Jacobi algebra G₂ = H₂ ⋉ sp(2): generators, the
//! commutator table and the adjoint grading.
//!
//! The Heisenberg central element is not a generator; it appears as the
//! scalar part of a [`LinComb`] (it acts as the identity in every module we
//! build).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::scalar::{q, Scalar};

/// Basis element of G₂. `P`/`M` stand for the superscripts `+`/`−`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A1P,
    A2P,
    A1M,
    A2M,
    B1P,
    B2P,
    B1M,
    B2M,
    CP,
    CM,
    DP,
    DM,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 14] = [
        Generator::A1P,
        Generator::A2P,
        Generator::A1M,
        Generator::A2M,
        Generator::B1P,
        Generator::B2P,
        Generator::B1M,
        Generator::B2M,
        Generator::CP,
        Generator::CM,
        Generator::DP,
        Generator::DM,
        Generator::H1,
        Generator::H2,
    ];

    /// The `+ ↔ −` involution; Cartan elements are fixed.
    pub fn conjugate(self) -> Generator {
        use Generator::*;
        match self {
            A1P => A1M,
            A2P => A2M,
            A1M => A1P,
            A2M => A2P,
            B1P => B1M,
            B2P => B2M,
            B1M => B1P,
            B2M => B2P,
            CP => CM,
            CM => CP,
            DP => DM,
            DM => DP,
            H1 => H1,
            H2 => H2,
        }
    }

    pub fn name(self) -> &'static str {
        use Generator::*;
        match self {
            A1P => "a1+",
            A2P => "a2+",
            A1M => "a1-",
            A2M => "a2-",
            B1P => "b1+",
            B2P => "b2+",
            B1M => "b1-",
            B2M => "b2-",
            CP => "c+",
            CM => "c-",
            DP => "d+",
            DM => "d-",
            H1 => "h1",
            H2 => "h2",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates of a weight shift in the basis δ₁ = (½, 0), δ₂ = (0, ½).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GradeVector {
    pub p1: i64,
    pub p2: i64,
}

impl GradeVector {
    pub const ZERO: GradeVector = GradeVector { p1: 0, p2: 0 };

    pub const fn new(p1: i64, p2: i64) -> Self {
        GradeVector { p1, p2 }
    }

    pub fn sum(self) -> i64 {
        self.p1 + self.p2
    }
}

impl Add for GradeVector {
    type Output = GradeVector;
    fn add(self, rhs: GradeVector) -> GradeVector {
        GradeVector::new(self.p1 + rhs.p1, self.p2 + rhs.p2)
    }
}

impl Sub for GradeVector {
    type Output = GradeVector;
    fn sub(self, rhs: GradeVector) -> GradeVector {
        GradeVector::new(self.p1 - rhs.p1, self.p2 - rhs.p2)
    }
}

impl Neg for GradeVector {
    type Output = GradeVector;
    fn neg(self) -> GradeVector {
        GradeVector::new(-self.p1, -self.p2)
    }
}

impl fmt::Display for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p1, self.p2)
    }
}

/// Element of G₂ ⊕ ℂ·1: generator terms plus a central (scalar) part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<S: Scalar = crate::Rational> {
    terms: BTreeMap<Generator, S>,
    central: S,
}

impl<S: Scalar> Default for LinComb<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LinComb<S> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
            central: S::zero(),
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::zero().with_term(g, S::one())
    }

    pub fn central(c: S) -> Self {
        LinComb {
            terms: BTreeMap::new(),
            central: c,
        }
    }

    pub fn with_term(mut self, g: Generator, c: S) -> Self {
        self.add_term(g, c);
        self
    }

    pub fn add_term(&mut self, g: Generator, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(S::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    pub fn coeff(&self, g: Generator) -> S {
        self.terms.get(&g).cloned().unwrap_or_else(S::zero)
    }

    pub fn central_part(&self) -> &S {
        &self.central
    }

    pub fn terms(&self) -> impl Iterator<Item = (Generator, &S)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = Self::central(self.central.clone() * factor.clone());
        for (g, c) in &self.terms {
            out.add_term(*g, c.clone() * factor.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.central = out.central.clone() + other.central.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-S::one()))
    }
}

/// One table entry: `[x, y] = Σ coeff · term`, `None` meaning the central
/// element.
type TableRhs = &'static [(Option<Generator>, i64, i64)];

const TABLE: &[(Generator, Generator, TableRhs)] = {
    use Generator::*;
    &[
        // Heisenberg algebra
        (A1M, A1P, &[(None, 1, 1)]),
        (A2M, A2P, &[(None, 1, 1)]),
        // Cartan action on sp(2)
        (H1, B1P, &[(Some(B1P), 1, 1)]),
        (H1, B1M, &[(Some(B1M), -1, 1)]),
        (H1, CP, &[(Some(CP), 1, 2)]),
        (H1, CM, &[(Some(CM), -1, 2)]),
        (H1, DP, &[(Some(DP), 1, 2)]),
        (H1, DM, &[(Some(DM), -1, 2)]),
        (H2, B2P, &[(Some(B2P), 1, 1)]),
        (H2, B2M, &[(Some(B2M), -1, 1)]),
        (H2, CP, &[(Some(CP), 1, 2)]),
        (H2, CM, &[(Some(CM), -1, 2)]),
        (H2, DP, &[(Some(DP), -1, 2)]),
        (H2, DM, &[(Some(DM), 1, 2)]),
        // Cartan action on H₂
        (H1, A1P, &[(Some(A1P), 1, 2)]),
        (H1, A1M, &[(Some(A1M), -1, 2)]),
        (H2, A2P, &[(Some(A2P), 1, 2)]),
        (H2, A2M, &[(Some(A2M), -1, 2)]),
        // sp(2)
        (B1M, B1P, &[(Some(H1), 2, 1)]),
        (B2M, B2P, &[(Some(H2), 2, 1)]),
        (B1P, CM, &[(Some(DP), -1, 1)]),
        (B1M, CP, &[(Some(DM), 1, 1)]),
        (B2P, CM, &[(Some(DM), -1, 1)]),
        (B2M, CP, &[(Some(DP), 1, 1)]),
        (B1P, DM, &[(Some(CP), -1, 1)]),
        (B1M, DP, &[(Some(CM), 1, 1)]),
        (B2P, DP, &[(Some(CP), -1, 1)]),
        (B2M, DM, &[(Some(CM), 1, 1)]),
        (CP, DM, &[(Some(B2P), -1, 2)]),
        (CM, DP, &[(Some(B2M), 1, 2)]),
        (CM, CP, &[(Some(H1), 1, 2), (Some(H2), 1, 2)]),
        (DM, DP, &[(Some(H2), 1, 2), (Some(H1), -1, 2)]),
        // Not among the printed relations; these are the unique values the
        // Jacobi identity admits (and what the general K-basis relations give).
        (CP, DP, &[(Some(B1P), -1, 2)]),
        (CM, DM, &[(Some(B1M), 1, 2)]),
        // H₂ ⋉ sp(2)
        (A1P, B1M, &[(Some(A1M), -1, 1)]),
        (A1M, B1P, &[(Some(A1P), 1, 1)]),
        (A2P, B2M, &[(Some(A2M), -1, 1)]),
        (A2M, B2P, &[(Some(A2P), 1, 1)]),
        (A1P, CM, &[(Some(A2M), -1, 2)]),
        (A1M, CP, &[(Some(A2P), 1, 2)]),
        (A2P, CM, &[(Some(A1M), -1, 2)]),
        (A2M, CP, &[(Some(A1P), 1, 2)]),
        (A2P, DP, &[(Some(A1P), -1, 2)]),
        (A2M, DM, &[(Some(A1M), 1, 2)]),
        (A1P, DM, &[(Some(A2P), -1, 2)]),
        (A1M, DP, &[(Some(A2M), 1, 2)]),
    ]
};

type Table = BTreeMap<(Generator, Generator), Vec<(Option<Generator>, i64, i64)>>;

/// Canonical form of [`TABLE`]: keyed by `(x, y)` with `x < y`, signs
/// adjusted so that the stored value is `[x, y]`.
fn canonical_table() -> &'static Table {
    static CANON: OnceLock<Table> = OnceLock::new();
    CANON.get_or_init(|| {
        let mut map = BTreeMap::new();
        for &(x, y, rhs) in TABLE {
            assert_ne!(x, y, "diagonal entry in commutator table");
            let (key, sign) = if x < y { ((x, y), 1) } else { ((y, x), -1) };
            let value: Vec<_> = rhs.iter().map(|&(g, n, d)| (g, sign * n, d)).collect();
            let previous = map.insert(key, value);
            assert!(previous.is_none(), "duplicate commutator entry for {key:?}");
        }
        map
    })
}

/// `[x, y]` for two basis elements.
pub fn commutator<S: Scalar>(x: Generator, y: Generator) -> LinComb<S> {
    if x == y {
        return LinComb::zero();
    }
    let (key, flip) = if x < y {
        ((x, y), false)
    } else {
        ((y, x), true)
    };
    let mut out = LinComb::zero();
    if let Some(rhs) = canonical_table().get(&key) {
        for &(g, n, d) in rhs {
            let c: S = q(if flip { -n } else { n }, d);
            match g {
                Some(g) => out.add_term(g, c),
                None => out.central = out.central.clone() + c,
            }
        }
    }
    out
}

/// Bilinear extension of [`commutator`]. The central part brackets to zero.
pub fn bracket<S: Scalar>(u: &LinComb<S>, v: &LinComb<S>) -> LinComb<S> {
    let mut out = LinComb::zero();
    for (gu, cu) in u.terms() {
        for (gv, cv) in v.terms() {
            let coeff = cu.clone() * cv.clone();
            out = out.plus(&commutator::<S>(gu, gv).scale(&coeff));
        }
    }
    out
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn jacobiator<S: Scalar>(x: Generator, y: Generator, z: Generator) -> LinComb<S> {
    let (lx, ly, lz) = (
        LinComb::<S>::generator(x),
        LinComb::generator(y),
        LinComb::generator(z),
    );
    bracket(&lx, &commutator(y, z))
        .plus(&bracket(&ly, &commutator(z, x)))
        .plus(&bracket(&lz, &commutator(x, y)))
}

/// Grade of a generator under ad h₁, ad h₂ in δ-coordinates.
pub fn adjoint_grade(g: Generator) -> GradeVector {
    use Generator::*;
    let positive = |g: Generator| match g {
        B1P => GradeVector::new(2, 0),
        B2P => GradeVector::new(0, 2),
        CP => GradeVector::new(1, 1),
        DP => GradeVector::new(1, -1),
        A1P => GradeVector::new(1, 0),
        A2P => GradeVector::new(0, 1),
        _ => GradeVector::ZERO,
    };
    match g {
        H1 | H2 => GradeVector::ZERO,
        A1P | A2P | B1P | B2P | CP | DP => positive(g),
        _ => -positive(g.conjugate()),
    }
}
