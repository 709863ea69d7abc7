//! Singular vectors: the five closed-form families, the general coefficient
//! solution, the recurrence system, and a brute-force nullspace oracle.
//!
//! Every closed-form vector lives in the reduced ansatz
//! `Σ c(k,n) |k, ρ−k−n, n, p₁−2k−n⟩` at grade `(p₁, 2ρ−p₁)`, normalized by
//! `c(0,0) = 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::GradeVector;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, SparseRow};
use crate::scalar::{int, q, Scalar};
use crate::verma::{act_on_key, enumerate_grade, BasisKey, LoweringOp, ModuleVector, Weight};

/// Reducibility type without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SvKind {
    I,
    II,
    III,
    IV,
    V,
}

impl SvKind {
    pub fn roman(self) -> &'static str {
        match self {
            SvKind::I => "i",
            SvKind::II => "ii",
            SvKind::III => "iii",
            SvKind::IV => "iv",
            SvKind::V => "v",
        }
    }

    /// The type of this kind whose singular vector sits at `grade`, if any.
    pub fn with_grade(self, grade: GradeVector) -> Option<SvType> {
        let pos = |x: i64| u32::try_from(x).ok().filter(|&p| p > 0);
        let GradeVector { p1, p2 } = grade;
        let t = match self {
            SvKind::I if p2 == -p1 => SvType::I { p1: pos(p1)? },
            SvKind::II if p1 == 0 && p2 % 2 == 0 => SvType::II { p2: pos(p2 / 2)? },
            SvKind::III if (p1 + p2) % 2 == 0 => SvType::III {
                p3: pos(p1)?,
                q3: pos((p1 + p2) / 2)?,
            },
            SvKind::IV if p1 == p2 => SvType::IV { p4: pos(p1)? },
            SvKind::V if p2 == 0 && p1 % 2 == 0 => SvType::V { p5: pos(p1 / 2)? },
            _ => return None,
        };
        t.validate().ok().map(|_| t)
    }
}

impl fmt::Display for SvKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

/// Reducibility type with its positive-integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SvType {
    I { p1: u32 },
    II { p2: u32 },
    III { p3: u32, q3: u32 },
    IV { p4: u32 },
    V { p5: u32 },
}

impl SvType {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidType(format!("{self}: {msg}")));
        match *self {
            SvType::I { p1: p }
            | SvType::II { p2: p }
            | SvType::IV { p4: p }
            | SvType::V { p5: p }
                if p == 0 =>
            {
                bad("parameter must be a positive integer")
            }
            SvType::III { p3, q3 } if p3 == 0 || q3 == 0 => bad("p3 and q3 must be positive"),
            SvType::III { p3, q3 } if p3 == q3 => bad("p3 = q3 is excluded"),
            SvType::III { p3, q3 } if p3 == 2 * q3 => bad("p3 = 2 q3 is excluded"),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> SvKind {
        match self {
            SvType::I { .. } => SvKind::I,
            SvType::II { .. } => SvKind::II,
            SvType::III { .. } => SvKind::III,
            SvType::IV { .. } => SvKind::IV,
            SvType::V { .. } => SvKind::V,
        }
    }

    /// Lowercase roman numeral.
    pub fn roman(&self) -> &'static str {
        self.kind().roman()
    }

    pub fn digit(&self) -> char {
        match self {
            SvType::I { .. } => '1',
            SvType::II { .. } => '2',
            SvType::III { .. } => '3',
            SvType::IV { .. } => '4',
            SvType::V { .. } => '5',
        }
    }

    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            SvType::I { p1 } => vec![("p1", p1)],
            SvType::II { p2 } => vec![("p2", p2)],
            SvType::III { p3, q3 } => vec![("p3", p3), ("q3", q3)],
            SvType::IV { p4 } => vec![("p4", p4)],
            SvType::V { p5 } => vec![("p5", p5)],
        }
    }

    /// Inverse of [`SvType::roman`] plus [`SvType::params`].
    pub fn from_parts(roman: &str, params: &BTreeMap<String, u32>) -> Result<SvType> {
        let get = |name: &str| {
            params
                .get(name)
                .copied()
                .ok_or_else(|| Error::MissingParam(name.to_string()))
        };
        let expected: &[&str] = match roman {
            "i" => &["p1"],
            "ii" => &["p2"],
            "iii" => &["p3", "q3"],
            "iv" => &["p4"],
            "v" => &["p5"],
            other => return Err(Error::InvalidType(format!("unknown type `{other}`"))),
        };
        if let Some(extra) = params.keys().find(|k| !expected.contains(&k.as_str())) {
            return Err(Error::InvalidType(format!(
                "unexpected parameter `{extra}` for type {roman}"
            )));
        }
        let t = match roman {
            "i" => SvType::I { p1: get("p1")? },
            "ii" => SvType::II { p2: get("p2")? },
            "iii" => SvType::III {
                p3: get("p3")?,
                q3: get("q3")?,
            },
            "iv" => SvType::IV { p4: get("p4")? },
            _ => SvType::V { p5: get("p5")? },
        };
        t.validate()?;
        Ok(t)
    }

    /// Human-readable weight condition.
    pub fn condition_text(&self) -> String {
        match *self {
            SvType::I { p1 } => format!("lambda1 - lambda2 = (1 - {p1})/2"),
            SvType::II { p2 } => format!("lambda2 = 3/4 - {p2}/2"),
            SvType::III { p3, q3 } => {
                format!("lambda1 = 5/4 - ({p3} - {q3})/2 and lambda2 = 3/4 - {q3}/2")
            }
            SvType::IV { p4 } => format!("lambda1 + lambda2 = 2 - {p4}/2"),
            SvType::V { p5 } => format!("lambda1 = 5/4 - {p5}/2"),
        }
    }
}

impl fmt::Display for SvType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}({})", self.roman(), params.join(","))
    }
}

pub fn sv_grade(t: SvType) -> GradeVector {
    match t {
        SvType::I { p1 } => GradeVector::new(i64::from(p1), -i64::from(p1)),
        SvType::II { p2 } => GradeVector::new(0, 2 * i64::from(p2)),
        SvType::III { p3, q3 } => {
            GradeVector::new(i64::from(p3), 2 * i64::from(q3) - i64::from(p3))
        }
        SvType::IV { p4 } => GradeVector::new(i64::from(p4), i64::from(p4)),
        SvType::V { p5 } => GradeVector::new(2 * i64::from(p5), 0),
    }
}

pub fn type_condition_holds<S: Scalar>(t: SvType, lw: &Weight<S>) -> bool {
    let (l1, l2) = (lw.lambda1.clone(), lw.lambda2.clone());
    match t {
        SvType::I { p1 } => l1 - l2 == q(1 - i64::from(p1), 2),
        SvType::II { p2 } => l2 == q(3 - 2 * i64::from(p2), 4),
        SvType::III { p3, q3 } => {
            l1 == q(5 - 2 * (i64::from(p3) - i64::from(q3)), 4) && l2 == q(3 - 2 * i64::from(q3), 4)
        }
        SvType::IV { p4 } => l1 + l2 == q(4 - i64::from(p4), 2),
        SvType::V { p5 } => l1 == q(5 - 2 * i64::from(p5), 4),
    }
}

fn require_condition<S: Scalar>(t: SvType, lw: &Weight<S>) -> Result<()> {
    t.validate()?;
    if type_condition_holds(t, lw) {
        Ok(())
    } else {
        Err(Error::WeightCondition {
            weight: lw.to_string(),
            sv_type: t.to_string(),
            condition: t.condition_text(),
        })
    }
}

/// `x (x+1) ⋯ (x+m−1)`.
pub fn rising_factorial<S: Scalar>(x: &S, m: u32) -> S {
    (0..m).fold(S::one(), |acc, i| acc * (x.clone() + int(i64::from(i))))
}

fn factorial<S: Scalar>(n: i64) -> S {
    (1..=n).fold(S::one(), |acc, i| acc * int(i))
}

fn pow4<S: Scalar>(k: i64) -> S {
    (0..k).fold(S::one(), |acc, _| acc * int(4))
}

fn sign<S: Scalar>(n: i64) -> S {
    if n % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// The summation region `{k, n ≥ 0, 2k+n ≤ p₁, k+n ≤ ρ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub p1: i64,
    pub rho: i64,
}

impl Region {
    pub fn new(p1: i64, rho: i64) -> Self {
        Region { p1, rho }
    }

    pub fn of_grade(g: GradeVector) -> Self {
        Region::new(g.p1, (g.p1 + g.p2).div_euclid(2))
    }

    pub fn of_type(t: SvType) -> Self {
        Region::of_grade(sv_grade(t))
    }

    pub fn contains(&self, k: i64, n: i64) -> bool {
        k >= 0 && n >= 0 && 2 * k + n <= self.p1 && k + n <= self.rho
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (0..=self.p1.max(0) / 2)
            .flat_map(move |k| (0..=self.p1.max(0)).map(move |n| (k, n)))
            .filter(move |&(k, n)| self.contains(k, n))
    }

    /// The reduced-ansatz key `|k, ρ−k−n, n, p₁−2k−n⟩`.
    pub fn key(&self, k: i64, n: i64) -> BasisKey {
        debug_assert!(self.contains(k, n));
        let u = |x: i64| x as u32;
        BasisKey::reduced(u(k), u(self.rho - k - n), u(n), u(self.p1 - 2 * k - n))
    }

    pub fn grade(&self) -> GradeVector {
        GradeVector::new(self.p1, 2 * self.rho - self.p1)
    }
}

/// Coefficients `c(k, n)` on a region; entries outside read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable<S: Scalar = crate::Rational> {
    pub region: Region,
    entries: BTreeMap<(i64, i64), S>,
}

impl<S: Scalar> CoeffTable<S> {
    pub fn new(region: Region) -> Self {
        CoeffTable {
            region,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, k: i64, n: i64, value: S) -> Result<()> {
        if !self.region.contains(k, n) {
            return Err(Error::OutOfRegion { k, n });
        }
        self.entries.insert((k, n), value);
        Ok(())
    }

    pub fn get(&self, k: i64, n: i64) -> S {
        if !self.region.contains(k, n) {
            return S::zero();
        }
        self.entries.get(&(k, n)).cloned().unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &S)> {
        self.entries.iter()
    }

    pub fn to_vector(&self, lw: &Weight<S>) -> ModuleVector<S> {
        ModuleVector::from_terms(
            lw.clone(),
            self.entries
                .iter()
                .map(|(&(k, n), c)| (self.region.key(k, n), c.clone())),
        )
    }
}

/// The two-parameter solution of the first and fourth recurrences, with
/// `c(0,0) = 1`. The last Γ-ratio is a reciprocal product, so isolated
/// weights hit a pole; those are reported as [`Error::Pole`].
pub fn general_coeff<S: Scalar>(lw: &Weight<S>, p1: i64, k: i64, n: i64) -> Result<S> {
    if k < 0 || n < 0 || p1 - 2 * k - n < 0 {
        return Err(Error::OutOfRegion { k, n });
    }
    let (l1, l2) = (lw.lambda1.clone(), lw.lambda2.clone());
    let two: S = int(2);
    let j1 = (k + n) as u32;
    let j2 = (2 * k + n) as u32;
    let x1 = two.clone() * l1.clone() + int(p1 - k - n) - q(3, 2);
    let x2 = two.clone() * l2 - two.clone() * l1.clone() + int(1 - p1);
    let x3 = int::<S>(4) * l1 + int(2 * p1 - 4 - 2 * k - n);
    let denominator = rising_factorial(&x3, j2);
    if denominator.is_zero() {
        return Err(Error::Pole(format!(
            "lambda = {lw}, p1 = {p1}, (k, n) = ({k}, {n})"
        )));
    }
    let prefactor = sign::<S>(n) * factorial::<S>(p1)
        / (pow4::<S>(k) * factorial::<S>(k) * factorial::<S>(n) * factorial::<S>(p1 - 2 * k - n));
    Ok(prefactor * rising_factorial(&x1, j1) * rising_factorial(&x2, j2) / denominator)
}

/// [`general_coeff`] on the full triangle `2k+n ≤ p₁`.
pub fn general_table<S: Scalar>(lw: &Weight<S>, p1: i64) -> Result<CoeffTable<S>> {
    let mut table = CoeffTable::new(Region::new(p1, p1));
    let points: Vec<_> = table.region.points().collect();
    for (k, n) in points {
        table.set(k, n, general_coeff(lw, p1, k, n)?)?;
    }
    Ok(table)
}

pub fn closed_form_coeff<S: Scalar>(t: SvType, lw: &Weight<S>, k: i64, n: i64) -> Result<S> {
    t.validate()?;
    if !Region::of_type(t).contains(k, n) {
        return Err(Error::OutOfRegion { k, n });
    }
    let value = match t {
        SvType::I { .. } | SvType::II { .. } => S::one(),
        SvType::III { p3, q3 } => {
            let (p, q3) = (i64::from(p3), i64::from(q3));
            factorial::<S>(p) * factorial::<S>(q3)
                / (pow4::<S>(k)
                    * factorial::<S>(k)
                    * factorial::<S>(n)
                    * factorial::<S>(p - 2 * k - n)
                    * factorial::<S>(q3 - k - n))
        }
        SvType::IV { p4 } => {
            let p = i64::from(p4);
            let x: S = int::<S>(2) * lw.lambda1.clone() + int(p - k - n) - q(3, 2);
            factorial::<S>(p)
                / (pow4::<S>(k)
                    * factorial::<S>(k)
                    * factorial::<S>(n)
                    * factorial::<S>(p - 2 * k - n))
                * rising_factorial(&x, (k + n) as u32)
        }
        SvType::V { p5 } => {
            let p = i64::from(p5);
            let x: S = int::<S>(2) * lw.lambda2.clone() - int(p) - q(3, 2);
            sign::<S>(n) * factorial::<S>(p)
                / (pow4::<S>(k) * factorial::<S>(k) * factorial::<S>(n) * factorial::<S>(p - k - n))
                * rising_factorial(&x, (2 * k + n) as u32)
        }
    };
    Ok(value)
}

pub fn closed_form_table<S: Scalar>(t: SvType, lw: &Weight<S>) -> Result<CoeffTable<S>> {
    t.validate()?;
    let mut table = CoeffTable::new(Region::of_type(t));
    let points: Vec<_> = table.region.points().collect();
    for (k, n) in points {
        table.set(k, n, closed_form_coeff(t, lw, k, n)?)?;
    }
    Ok(table)
}

pub fn closed_form_sv<S: Scalar>(t: SvType, lw: &Weight<S>) -> Result<ModuleVector<S>> {
    require_condition(t, lw)?;
    Ok(closed_form_table(t, lw)?.to_vector(lw))
}

/// Canonical basis of the joint kernel of all six lowering operators on the
/// grade `(p1, p2)` subspace of V^lw.
pub fn brute_force_sv<S: Scalar>(lw: &Weight<S>, p1: i64, p2: i64) -> Vec<ModuleVector<S>> {
    let keys = enumerate_grade(p1, p2);
    if keys.is_empty() {
        return Vec::new();
    }
    let mut rows: BTreeMap<(LoweringOp, BasisKey), SparseRow<S>> = BTreeMap::new();
    for (col, key) in keys.iter().enumerate() {
        for op in LoweringOp::ALL {
            for (out, c) in act_on_key(op, lw, *key) {
                let row = rows.entry((op, out)).or_default();
                let slot = row.entry(col).or_insert_with(S::zero);
                *slot = slot.clone() + c;
            }
        }
    }
    nullspace(keys.len(), rows.into_values())
        .into_iter()
        .map(|v| ModuleVector::from_terms(lw.clone(), v.into_iter().map(|(c, x)| (keys[c], x))))
        .collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span<S: Scalar>(v: &ModuleVector<S>, basis: &[ModuleVector<S>]) -> bool {
    let mut index: BTreeMap<BasisKey, usize> = BTreeMap::new();
    for b in basis.iter().chain(std::iter::once(v)) {
        for (k, _) in b.terms() {
            let next = index.len();
            index.entry(*k).or_insert(next);
        }
    }
    let to_row = |m: &ModuleVector<S>| -> SparseRow<S> {
        m.terms().map(|(k, c)| (index[k], c.clone())).collect()
    };
    let mut ech = crate::linalg::Echelon::new(index.len());
    for b in basis {
        ech.push(to_row(b));
    }
    !ech.push(to_row(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Recurrence {
    /// From `b̂₁⁻`.
    R1,
    /// From `b̂₂⁻`.
    R2,
    /// From `ĉ⁻`.
    R3,
    /// From `d̂⁻`.
    R4,
}

impl Recurrence {
    pub const ALL: [Recurrence; 4] = [
        Recurrence::R1,
        Recurrence::R2,
        Recurrence::R3,
        Recurrence::R4,
    ];
}

/// Left-hand side of one recurrence at `(k, n)`.
pub fn recurrence_residual<S: Scalar>(
    which: Recurrence,
    c: &CoeffTable<S>,
    lw: &Weight<S>,
    p1: i64,
    rho: i64,
    k: i64,
    n: i64,
) -> S {
    let (l1, l2) = (lw.lambda1.clone(), lw.lambda2.clone());
    let m = p1 - 2 * k - n;
    let tilde = l2.clone() - l1.clone() - q::<S>(m - 1, 2);
    let i = |x: i64| int::<S>(x);
    match which {
        Recurrence::R1 => {
            i(4 * (k + 1)) * (i(2) * l1 + i(p1 - k) - q(5, 2)) * c.get(k + 1, n - 1)
                + i(2 * n * m) * tilde * c.get(k, n)
                + i(n * (n + 1)) * c.get(k, n + 1)
        }
        Recurrence::R2 => {
            let rho_bar = p1 - rho;
            i(4 * (rho - k - n)) * (i(2) * l2 + i(k + n - rho_bar) - q(3, 2)) * c.get(k, n)
                + i((n + 1) * (n + 2)) * c.get(k - 1, n + 2)
                + i(4 * (n + 1)) * c.get(k, n + 1)
        }
        Recurrence::R3 => {
            i(n + 1) * (l1 + l2 + i(rho) - q(n + 3, 2)) * c.get(k, n + 1)
                + i((rho - k - n) * m) * tilde * c.get(k, n)
                + i(2 * (k + 1)) * c.get(k + 1, n)
                + i(2 * (k + 1) * (rho - k - n)) * c.get(k + 1, n - 1)
        }
        Recurrence::R4 => {
            i(2 * (k + 1)) * c.get(k + 1, n - 1)
                + i(n + 1) * c.get(k, n + 1)
                + i(m) * tilde * c.get(k, n)
        }
    }
}

/// Checks the selected recurrences at every `(k, n)` of the bounding box
/// `0 ≤ k, n ≤ p₁ + 1`.
pub fn recurrence_holds<S: Scalar>(
    which: &[Recurrence],
    c: &CoeffTable<S>,
    lw: &Weight<S>,
    p1: i64,
    rho: i64,
) -> bool {
    let bound = p1.max(0) + 1;
    which.iter().all(|&r| {
        (0..=bound)
            .all(|k| (0..=bound).all(|n| recurrence_residual(r, c, lw, p1, rho, k, n).is_zero()))
    })
}

pub fn recurrences_hold<S: Scalar>(c: &CoeffTable<S>, lw: &Weight<S>, p1: i64, rho: i64) -> bool {
    recurrence_holds(&Recurrence::ALL, c, lw, p1, rho)
}

/// A weight satisfying the condition of `t`, with `free` filling the
/// component the condition leaves open (ignored for type III).
pub fn weight_for_type<S: Scalar>(t: SvType, free: S) -> Result<Weight<S>> {
    t.validate()?;
    Ok(match t {
        SvType::I { p1 } => Weight::new(free.clone() + q(1 - i64::from(p1), 2), free),
        SvType::II { p2 } => Weight::new(free, q(3 - 2 * i64::from(p2), 4)),
        SvType::III { p3, q3 } => Weight::new(
            q(5 - 2 * (i64::from(p3) - i64::from(q3)), 4),
            q(3 - 2 * i64::from(q3), 4),
        ),
        SvType::IV { p4 } => Weight::new(free.clone(), q::<S>(4 - i64::from(p4), 2) - free),
        SvType::V { p5 } => Weight::new(q(5 - 2 * i64::from(p5), 4), free),
    })
}
