//! Reference embedding diagrams for the reducibility cases, instantiated at
//! concrete parameters.
//!
//! A [`CatalogDiagram`] keeps the drawn edges by kind only. [`reference_diagram`]
//! resolves each edge to a typed [`SvType`] from the weight difference and the
//! type condition at the source, and fails on edges no single elementary
//! embedding can realize. [`compare_with_closure`] reports differences edge
//! by edge and works even when resolution fails.

use std::collections::{BTreeMap, BTreeSet};

use crate::embed::{EmbeddingDiagram, LabeledEdge};
use crate::error::{Error, Result};
use crate::scalar::{q, Scalar};
use crate::singular::{type_condition_holds, SvKind, SvType};
use crate::verma::Weight;

pub type CatalogParams<S> = BTreeMap<String, S>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogNode<S: Scalar> {
    pub name: &'static str,
    pub weight: Weight<S>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEdge {
    pub src: usize,
    pub dst: usize,
    pub kind: SvKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogDiagram<S: Scalar = crate::Rational> {
    pub case_id: String,
    pub nodes: Vec<CatalogNode<S>>,
    pub edges: Vec<CatalogEdge>,
}

/// Every case identifier, with `-<n>` selecting a numbered case and `-a/b/c`
/// a regime branch.
pub const CASE_IDS: [&str; 22] = [
    "A234", "A2345", "A12345", "A245", "A145-1", "A145-2", "A14-1", "A14-2", "A15", "A24", "A1-2",
    "A1-3", "A1-4", "A2-2", "A2-3", "A2-4", "A4-a", "A4-b", "A4-c", "A5-a", "A5-b", "A5-c",
];

/// Parameter names each case expects.
pub fn case_param_names(case_id: &str) -> Result<&'static [&'static str]> {
    Ok(match case_id {
        "A234" | "A2345" | "A12345" => &["p3", "q3"],
        "A245" | "A24" => &["p2"],
        "A145-1" | "A145-2" => &["p4", "p5"],
        "A14-1" | "A14-2" => &["p1", "q"],
        "A15" => &["p1", "p5"],
        "A1-2" | "A1-3" | "A1-4" => &["lambda1", "p1"],
        "A2-2" | "A2-3" | "A2-4" => &["lambda1", "p2"],
        "A4-a" | "A4-b" | "A4-c" => &["lambda1", "p4"],
        "A5-a" | "A5-b" | "A5-c" => &["lambda2", "p5"],
        other => return Err(Error::UnknownCase(other.to_string())),
    })
}

/// A parameter choice inside each case's regime. Free weight components are
/// taken on the quarter-odd lattice `4Λ ∈ 2ℤ+1`, the only values for which
/// every drawn sub-embedding of those cases has integral parameters.
pub fn representative_params<S: Scalar>(case_id: &str) -> Result<CatalogParams<S>> {
    let ints = |pairs: &[(&str, i64)]| -> CatalogParams<S> {
        pairs
            .iter()
            .map(|&(k, v)| (k.to_string(), S::from_i64(v)))
            .collect()
    };
    let with_free = |name: &str, (n, d): (i64, i64), pairs: &[(&str, i64)]| {
        let mut p = ints(pairs);
        p.insert(name.to_string(), S::from_ratio(n, d));
        p
    };
    Ok(match case_id {
        "A234" => ints(&[("p3", 1), ("q3", 2)]),
        "A2345" => ints(&[("p3", 3), ("q3", 2)]),
        "A12345" => ints(&[("p3", 5), ("q3", 2)]),
        "A245" => ints(&[("p2", 1)]),
        "A145-1" => ints(&[("p4", 1), ("p5", 2)]),
        "A145-2" => ints(&[("p4", 2), ("p5", 2)]),
        "A14-1" => ints(&[("p1", 1), ("q", 1)]),
        "A14-2" => ints(&[("p1", 2), ("q", 1)]),
        "A15" => ints(&[("p1", 4), ("p5", 2)]),
        "A24" => ints(&[("p2", 1)]),
        "A1-2" => with_free("lambda1", (-3, 4), &[("p1", 3)]),
        "A1-3" => with_free("lambda1", (1, 4), &[("p1", 3)]),
        "A1-4" => with_free("lambda1", (3, 4), &[("p1", 3)]),
        "A2-2" => with_free("lambda1", (-1, 4), &[("p2", 2)]),
        "A2-3" => with_free("lambda1", (3, 4), &[("p2", 2)]),
        "A2-4" => with_free("lambda1", (7, 4), &[("p2", 2)]),
        "A4-a" => with_free("lambda1", (7, 4), &[("p4", 3)]),
        "A4-b" => with_free("lambda1", (1, 4), &[("p4", 3)]),
        "A4-c" => with_free("lambda1", (-3, 4), &[("p4", 3)]),
        "A5-a" => with_free("lambda2", (9, 4), &[("p5", 2)]),
        "A5-b" => with_free("lambda2", (1, 4), &[("p5", 2)]),
        "A5-c" => with_free("lambda2", (-3, 4), &[("p5", 2)]),
        other => return Err(Error::UnknownCase(other.to_string())),
    })
}

struct Params<'a, S: Scalar> {
    case_id: &'a str,
    values: &'a CatalogParams<S>,
}

impl<S: Scalar> Params<'_, S> {
    fn rational(&self, name: &str) -> Result<S> {
        self.values
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingParam(name.to_string()))
    }

    fn positive(&self, name: &str) -> Result<S> {
        let v = self.rational(name)?;
        if v.positive_integer().is_none() {
            return Err(self.regime(format!("{name} must be a positive integer")));
        }
        Ok(v)
    }

    fn regime(&self, reason: String) -> Error {
        Error::Regime {
            case: self.case_id.to_string(),
            reason,
        }
    }

    fn require(&self, ok: bool, reason: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.regime(reason.to_string()))
        }
    }
}

fn half<S: Scalar>(x: S) -> S {
    x * q(1, 2)
}

/// `(5/4 + a/2, 3/4 + b/2)`, the centre used by most families.
fn centred<S: Scalar>(a: S, b: S) -> Weight<S> {
    Weight::new(q::<S>(5, 4) + half(a), q::<S>(3, 4) + half(b))
}

fn build<S: Scalar>(
    case_id: &str,
    nodes: Vec<(&'static str, Weight<S>)>,
    edges: &[(&str, &str, SvKind)],
) -> CatalogDiagram<S> {
    let index: BTreeMap<&str, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, (n, _))| (*n, i))
        .collect();
    CatalogDiagram {
        case_id: case_id.to_string(),
        edges: edges
            .iter()
            .map(|(s, d, k)| CatalogEdge {
                src: index[s],
                dst: index[d],
                kind: *k,
            })
            .collect(),
        nodes: nodes
            .into_iter()
            .map(|(name, weight)| CatalogNode { name, weight })
            .collect(),
    }
}

/// The drawn diagram of `case_id` with weights instantiated at `params`.
pub fn catalog_diagram<S: Scalar>(
    case_id: &str,
    params: &CatalogParams<S>,
) -> Result<CatalogDiagram<S>> {
    use SvKind::*;
    let names = case_param_names(case_id)?;
    if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
        return Err(Error::Malformed(format!(
            "unexpected parameter `{extra}` for case {case_id}"
        )));
    }
    let p = Params {
        case_id,
        values: params,
    };
    let zero = S::zero;
    let d = match case_id {
        "A234" | "A2345" | "A12345" => {
            let (p3, q3) = (p.positive("p3")?, p.positive("q3")?);
            let diff = p3.clone() - q3.clone();
            match case_id {
                "A234" => p.require(p3 < q3, "requires p3 < q3")?,
                "A2345" => p.require(
                    q3 < p3 && p3 < q3.clone() + q3.clone(),
                    "requires q3 < p3 < 2 q3",
                )?,
                _ => p.require(p3 > q3.clone() + q3.clone(), "requires 2 q3 < p3")?,
            }
            let l0 = centred(-diff.clone(), -q3.clone());
            let l1 = centred(-q3.clone(), -diff.clone());
            let l2 = centred(-diff.clone(), q3.clone());
            let l3 = centred(q3.clone(), -diff.clone());
            let l4 = centred(q3.clone(), diff.clone());
            let l5 = centred(diff.clone(), -q3.clone());
            let l12 = centred(-q3.clone(), diff.clone());
            let lt0 = centred(diff, q3);
            match case_id {
                "A234" => build(
                    case_id,
                    vec![("L0", l0), ("L2", l2), ("L3", l3), ("L4", l4)],
                    &[
                        ("L0", "L2", II),
                        ("L0", "L3", III),
                        ("L0", "L4", IV),
                        ("L2", "L3", I),
                        ("L4", "L3", II),
                    ],
                ),
                "A2345" => build(
                    case_id,
                    vec![
                        ("L0", l0),
                        ("L2", l2),
                        ("L3", l3),
                        ("L4", l4),
                        ("L5", l5),
                        ("Lt0", lt0),
                    ],
                    &[
                        ("L0", "L2", II),
                        ("L0", "L3", III),
                        ("L0", "L4", IV),
                        ("L0", "L5", V),
                        ("L2", "Lt0", V),
                        ("L2", "L3", I),
                        ("L3", "L4", II),
                        ("Lt0", "L4", I),
                        ("L5", "L3", IV),
                        ("L5", "Lt0", II),
                        ("L5", "L4", III),
                    ],
                ),
                _ => build(
                    case_id,
                    vec![
                        ("L0", l0),
                        ("L1", l1),
                        ("L2", l2),
                        ("L3", l3),
                        ("L4", l4),
                        ("L5", l5),
                        ("L12", l12),
                        ("Lt0", lt0),
                    ],
                    &[
                        ("L0", "L1", I),
                        ("L0", "L2", II),
                        ("L0", "L3", III),
                        ("L0", "L4", IV),
                        ("L0", "L5", V),
                        ("L1", "L3", V),
                        ("L1", "L12", II),
                        ("L1", "Lt0", IV),
                        ("L1", "L5", III),
                        ("L2", "L3", I),
                        ("L2", "Lt0", V),
                        ("L2", "L12", IV),
                        ("L3", "L4", II),
                        ("L3", "Lt0", III),
                        ("L3", "L5", IV),
                        ("L12", "L4", V),
                        ("L12", "L5", I),
                        ("L4", "Lt0", I),
                        ("L5", "Lt0", II),
                    ],
                ),
            }
        }
        "A245" => {
            let p2 = p.positive("p2")?;
            build(
                case_id,
                vec![
                    ("L0", centred(-p2.clone(), -p2.clone())),
                    ("L1", centred(-p2.clone(), p2.clone())),
                    ("L2", centred(p2.clone(), -p2.clone())),
                    ("L3", centred(p2.clone(), p2)),
                ],
                &[
                    ("L0", "L1", II),
                    ("L0", "L3", IV),
                    ("L0", "L2", V),
                    ("L1", "L2", I),
                    ("L1", "L3", V),
                    ("L2", "L3", II),
                ],
            )
        }
        "A145-1" | "A145-2" => {
            let (p4, p5) = (p.positive("p4")?, p.positive("p5")?);
            if case_id == "A145-1" {
                p.require(p4 < p5, "requires p4 < p5")?;
            } else {
                p.require(p4 == p5, "requires p4 = p5")?;
            }
            let d = p5.clone() - p4.clone();
            if case_id == "A145-2" {
                // At p4 = p5 the drawing folds: L3 lands on L2 and L4 on L5.
                // The L4 -> L5 arrow collapses, and L1 -> L5 is carried by
                // type iv since type iii would need p3 = q3.
                return Ok(build(
                    case_id,
                    vec![
                        ("L0", centred(-p5.clone(), zero())),
                        ("L1", centred(zero(), -p5.clone())),
                        ("L2", centred(zero(), p5.clone())),
                        ("L5", centred(p5, zero())),
                    ],
                    &[
                        ("L0", "L1", I),
                        ("L0", "L2", IV),
                        ("L0", "L5", V),
                        ("L1", "L2", II),
                        ("L2", "L5", I),
                        ("L1", "L5", IV),
                    ],
                ));
            }
            build(
                case_id,
                vec![
                    ("L0", centred(-p5.clone(), -(p4.clone() - p5.clone()))),
                    ("L1", centred(d.clone(), -p5.clone())),
                    ("L2", centred(-d.clone(), p5.clone())),
                    ("L3", centred(d.clone(), p5.clone())),
                    ("L4", centred(p5.clone(), -d)),
                    ("L5", centred(p5.clone(), -(p4 - p5))),
                ],
                &[
                    ("L0", "L1", I),
                    ("L0", "L2", IV),
                    ("L0", "L5", V),
                    ("L1", "L3", II),
                    ("L2", "L4", I),
                    ("L3", "L5", I),
                    ("L4", "L5", II),
                    ("L1", "L5", III),
                    ("L1", "L4", IV),
                    ("L2", "L3", V),
                ],
            )
        }
        "A14-1" | "A14-2" => {
            let (p1, qq) = (p.positive("p1")?, p.positive("q")?);
            let one = S::one();
            p.require(
                p1 < one.clone() + qq.clone() + qq.clone(),
                "requires p1 < 1 + 2q",
            )?;
            let threshold = q::<S>(1, 2) + qq.clone();
            if case_id == "A14-1" {
                p.require(p1 < threshold, "requires p1 < 1/2 + q")?;
            } else {
                p.require(p1 > threshold, "requires p1 > 1/2 + q")?;
            }
            let d = p1.clone() - qq.clone();
            let l0 = Weight::new(
                one.clone() - half(qq.clone()),
                half(one.clone() + d.clone()),
            );
            let l1 = Weight::new(
                one.clone() + half(d.clone()),
                half(one.clone() - qq.clone()),
            );
            let l4 = Weight::new(
                half(q::<S>(3, 1) - d.clone()),
                one.clone() + half(qq.clone()),
            );
            let l2 = Weight::new(
                one.clone() + half(d.clone()),
                one.clone() + half(qq.clone()),
            );
            let l3 = Weight::new(
                q::<S>(3, 2) + half(qq.clone()),
                half(one.clone() + d.clone()),
            );
            let l5 = Weight::new(
                q::<S>(3, 2) + half(qq.clone()),
                one.clone() - half(d.clone()),
            );
            let l6 = Weight::new(q::<S>(3, 2) - half(d), half(one - qq));
            if case_id == "A14-1" {
                build(
                    case_id,
                    vec![
                        ("L0", l0),
                        ("L1", l1),
                        ("L2", l2),
                        ("L3", l3),
                        ("L4", l4),
                        ("L5", l5),
                        ("L6", l6),
                    ],
                    &[
                        ("L0", "L1", I),
                        ("L0", "L4", IV),
                        ("L1", "L2", II),
                        ("L1", "L3", III),
                        ("L1", "L5", IV),
                        ("L1", "L6", V),
                        ("L2", "L3", I),
                        ("L2", "L4", V),
                        ("L3", "L5", IV),
                        ("L6", "L3", IV),
                        ("L6", "L5", III),
                        ("L6", "L4", II),
                        ("L4", "L5", I),
                    ],
                )
            } else {
                build(
                    case_id,
                    vec![
                        ("L0", l0),
                        ("L1", l1),
                        ("L2", l2),
                        ("L3", l3),
                        ("L4", l4),
                        ("L5", l5),
                    ],
                    &[
                        ("L0", "L1", I),
                        ("L0", "L4", IV),
                        ("L1", "L3", III),
                        ("L1", "L5", IV),
                        ("L1", "L2", II),
                        ("L4", "L5", I),
                        ("L4", "L2", V),
                        ("L5", "L3", II),
                        ("L2", "L3", I),
                    ],
                )
            }
        }
        "A15" => {
            let (p1, p5) = (p.positive("p1")?, p.positive("p5")?);
            p.require(p5.clone() + p5.clone() <= p1, "requires 2 p5 <= p1")?;
            let strict = p5.clone() + p5.clone() < p1;
            let d = p1 - p5.clone();
            let mut nodes = vec![
                ("L0", centred(-p5.clone(), d.clone())),
                ("L1", centred(d.clone(), -p5.clone())),
                ("L2", centred(p5.clone(), d.clone())),
            ];
            if strict {
                nodes.push(("L3", centred(d, p5)));
                build(
                    case_id,
                    nodes,
                    &[
                        ("L0", "L1", I),
                        ("L0", "L2", V),
                        ("L1", "L3", II),
                        ("L2", "L3", I),
                    ],
                )
            } else {
                // At 2p5 = p1 the bottom node coincides with L2.
                build(
                    case_id,
                    nodes,
                    &[("L0", "L1", I), ("L0", "L2", V), ("L1", "L2", II)],
                )
            }
        }
        "A24" => {
            let p2 = p.positive("p2")?;
            build(
                case_id,
                vec![
                    ("L0", centred(zero(), -p2.clone())),
                    ("L1", centred(zero(), p2.clone())),
                    ("L2", centred(p2, zero())),
                ],
                &[("L0", "L1", II), ("L0", "L2", IV), ("L1", "L2", I)],
            )
        }
        "A1-2" | "A1-3" | "A1-4" => {
            let (l, p1) = (p.rational("lambda1")?, p.positive("p1")?);
            let four_l = q::<S>(4, 1) * l.clone();
            let five = q::<S>(5, 1);
            match case_id {
                "A1-2" => p.require(
                    four_l < five.clone() - p1.clone() - p1.clone(),
                    "requires 4 lambda1 < 5 - 2 p1",
                )?,
                "A1-3" => p.require(
                    five.clone() - p1.clone() - p1.clone() < four_l
                        && four_l < five.clone() - p1.clone(),
                    "requires 5 - 2 p1 < 4 lambda1 < 5 - p1",
                )?,
                _ => p.require(
                    five.clone() - p1.clone() < four_l && four_l < five,
                    "requires 5 - p1 < 4 lambda1 < 5",
                )?,
            }
            let nodes = vec![
                (
                    "L0",
                    Weight::new(l.clone(), l.clone() + half(p1.clone() - S::one())),
                ),
                (
                    "L1",
                    Weight::new(l.clone() + half(p1.clone()), l.clone() - q(1, 2)),
                ),
                (
                    "L2",
                    Weight::new(l.clone() + half(p1.clone()), q::<S>(2, 1) - l.clone()),
                ),
                (
                    "L4",
                    Weight::new(
                        q::<S>(5, 2) - l.clone(),
                        l.clone() + half(p1.clone() - S::one()),
                    ),
                ),
                (
                    "L3",
                    Weight::new(
                        q::<S>(5, 2) - l.clone(),
                        q::<S>(2, 1) - l.clone() - half(p1.clone()),
                    ),
                ),
                (
                    "L5",
                    Weight::new(-l.clone() - half(p1.clone() - q(5, 1)), l.clone() - q(1, 2)),
                ),
                (
                    "L6",
                    Weight::new(-l.clone() - half(p1 - q(5, 1)), q::<S>(2, 1) - l),
                ),
            ];
            let edges: &[(&str, &str, SvKind)] = match case_id {
                "A1-2" => &[
                    ("L0", "L1", I),
                    ("L1", "L2", II),
                    ("L1", "L4", III),
                    ("L1", "L3", IV),
                    ("L1", "L5", V),
                    ("L2", "L6", V),
                    ("L2", "L4", I),
                    ("L4", "L3", II),
                    ("L5", "L6", II),
                    ("L5", "L4", IV),
                    ("L5", "L3", III),
                    ("L6", "L3", I),
                ],
                "A1-3" => &[
                    ("L0", "L1", I),
                    ("L1", "L2", II),
                    ("L1", "L3", IV),
                    ("L1", "L4", III),
                    ("L2", "L4", I),
                    ("L3", "L4", II),
                ],
                _ => &[("L0", "L1", I), ("L1", "L2", II)],
            };
            prune(build(case_id, nodes, edges))
        }
        "A2-2" | "A2-3" | "A2-4" => {
            let (l, p2) = (p.rational("lambda1")?, p.positive("p2")?);
            let four_l = q::<S>(4, 1) * l.clone();
            let five = q::<S>(5, 1);
            let two_p2 = p2.clone() + p2.clone();
            match case_id {
                "A2-2" => p.require(
                    four_l < five.clone() - two_p2.clone(),
                    "requires 4 lambda1 < 5 - 2 p2",
                )?,
                "A2-3" => p.require(
                    five.clone() - two_p2.clone() < four_l && four_l < five,
                    "requires 5 - 2 p2 < 4 lambda1 < 5",
                )?,
                _ => p.require(
                    five.clone() < four_l && four_l < five + two_p2,
                    "requires 5 < 4 lambda1 < 5 + 2 p2",
                )?,
            }
            let nodes = vec![
                (
                    "L0",
                    Weight::new(l.clone(), q::<S>(3, 4) - half(p2.clone())),
                ),
                (
                    "L1",
                    Weight::new(l.clone(), q::<S>(3, 4) + half(p2.clone())),
                ),
                (
                    "L2",
                    Weight::new(q::<S>(5, 4) + half(p2.clone()), l.clone() - q(1, 2)),
                ),
                (
                    "L3",
                    Weight::new(q::<S>(5, 4) - half(p2.clone()), q::<S>(2, 1) - l.clone()),
                ),
                (
                    "L6",
                    Weight::new(q::<S>(5, 2) - l.clone(), q::<S>(3, 4) + half(p2.clone())),
                ),
                (
                    "L4",
                    Weight::new(q::<S>(5, 4) + half(p2.clone()), q::<S>(2, 1) - l.clone()),
                ),
                ("L5", Weight::new(q::<S>(5, 2) - l, q::<S>(3, 4) - half(p2))),
            ];
            let edges: &[(&str, &str, SvKind)] = match case_id {
                "A2-2" => &[
                    ("L0", "L1", II),
                    ("L1", "L2", I),
                    ("L1", "L3", IV),
                    ("L1", "L6", V),
                    ("L2", "L4", II),
                    ("L2", "L6", III),
                    ("L2", "L5", IV),
                    ("L3", "L4", V),
                    ("L3", "L5", I),
                    ("L4", "L6", I),
                    ("L5", "L6", II),
                ],
                "A2-3" => &[
                    ("L0", "L1", II),
                    ("L1", "L2", I),
                    ("L1", "L6", V),
                    ("L2", "L4", II),
                    ("L6", "L4", I),
                ],
                _ => &[("L0", "L1", II), ("L1", "L2", I)],
            };
            prune(build(case_id, nodes, edges))
        }
        "A4-a" | "A4-b" | "A4-c" => {
            let (l, p4) = (p.rational("lambda1")?, p.positive("p4")?);
            let four_l = q::<S>(4, 1) * l.clone();
            let five = q::<S>(5, 1);
            let branch = case_id.as_bytes()[3];
            match branch {
                b'a' => p.require(five.clone() < four_l, "requires 5 < 4 lambda1")?,
                b'b' => p.require(
                    five.clone() - p4.clone() - p4.clone() < four_l
                        && four_l < five.clone() - p4.clone(),
                    "requires 5 - 2 p4 < 4 lambda1 < 5 - p4",
                )?,
                _ => p.require(
                    four_l < five - p4.clone() - p4.clone(),
                    "requires 4 lambda1 < 5 - 2 p4",
                )?,
            }
            let nodes = vec![
                (
                    "L0",
                    Weight::new(l.clone(), q::<S>(2, 1) - l.clone() - half(p4.clone())),
                ),
                (
                    "L1",
                    Weight::new(l.clone() + half(p4.clone()), q::<S>(2, 1) - l.clone()),
                ),
                (
                    "L2",
                    Weight::new(l.clone() + half(p4.clone()), l.clone() - q(1, 2)),
                ),
                (
                    "L3",
                    Weight::new(
                        q::<S>(5, 2) - l.clone(),
                        l.clone() + half(p4.clone() - S::one()),
                    ),
                ),
                (
                    "L4",
                    Weight::new(
                        -l.clone() - half(p4.clone() - q(5, 1)),
                        q::<S>(2, 1) - l.clone(),
                    ),
                ),
                (
                    "L5",
                    Weight::new(q::<S>(5, 2) - l.clone(), q::<S>(2, 1) - l - half(p4)),
                ),
            ];
            let edges: &[(&str, &str, SvKind)] = match branch {
                b'a' => &[("L0", "L1", IV), ("L1", "L2", II)],
                b'b' => &[("L0", "L1", IV), ("L1", "L3", I)],
                _ => &[
                    ("L0", "L1", IV),
                    ("L1", "L3", I),
                    ("L1", "L4", V),
                    ("L3", "L5", II),
                    ("L4", "L5", I),
                ],
            };
            prune(build(case_id, nodes, edges))
        }
        "A5-a" | "A5-b" | "A5-c" => {
            let (l, p5) = (p.rational("lambda2")?, p.positive("p5")?);
            let four_l = q::<S>(4, 1) * l.clone();
            let three = q::<S>(3, 1);
            let two_p5 = p5.clone() + p5.clone();
            let branch = case_id.as_bytes()[3];
            match branch {
                b'a' => p.require(
                    three.clone() + two_p5.clone() < four_l,
                    "requires 3 + 2 p5 < 4 lambda2",
                )?,
                b'b' => p.require(
                    three.clone() - two_p5.clone() < four_l && four_l < three,
                    "requires 3 - 2 p5 < 4 lambda2 < 3",
                )?,
                _ => p.require(four_l < three - two_p5, "requires 4 lambda2 < 3 - 2 p5")?,
            }
            let nodes = vec![
                (
                    "L0",
                    Weight::new(q::<S>(5, 4) - half(p5.clone()), l.clone()),
                ),
                (
                    "L1",
                    Weight::new(q::<S>(5, 4) + half(p5.clone()), l.clone()),
                ),
                (
                    "L2",
                    Weight::new(l.clone() + q(1, 2), q::<S>(3, 4) + half(p5.clone())),
                ),
                (
                    "L3",
                    Weight::new(q::<S>(5, 4) + half(p5.clone()), q::<S>(3, 2) - l.clone()),
                ),
                (
                    "L5",
                    Weight::new(q::<S>(2, 1) - l.clone(), q::<S>(3, 4) + half(p5.clone())),
                ),
                ("L4", Weight::new(q::<S>(2, 1) - l, q::<S>(3, 4) - half(p5))),
            ];
            let edges: &[(&str, &str, SvKind)] = match branch {
                b'a' => &[("L0", "L1", V), ("L1", "L2", I)],
                b'b' => &[("L0", "L1", V), ("L1", "L3", II)],
                _ => &[
                    ("L0", "L1", V),
                    ("L1", "L3", II),
                    ("L1", "L5", III),
                    ("L1", "L4", IV),
                    ("L4", "L5", II),
                    ("L3", "L5", I),
                ],
            };
            prune(build(case_id, nodes, edges))
        }
        other => return Err(Error::UnknownCase(other.to_string())),
    };
    Ok(d)
}

/// Drops nodes no edge touches, keeping the root.
fn prune<S: Scalar>(d: CatalogDiagram<S>) -> CatalogDiagram<S> {
    let used: BTreeSet<usize> = std::iter::once(0)
        .chain(d.edges.iter().flat_map(|e| [e.src, e.dst]))
        .collect();
    let remap: BTreeMap<usize, usize> = used
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    CatalogDiagram {
        case_id: d.case_id,
        edges: d
            .edges
            .iter()
            .map(|e| CatalogEdge {
                src: remap[&e.src],
                dst: remap[&e.dst],
                kind: e.kind,
            })
            .collect(),
        nodes: d
            .nodes
            .into_iter()
            .enumerate()
            .filter(|(i, _)| used.contains(i))
            .map(|(_, n)| n)
            .collect(),
    }
}

/// The elementary embedding of kind `kind` from `src` to `dst`, if one exists.
pub fn resolve_edge<S: Scalar>(kind: SvKind, src: &Weight<S>, dst: &Weight<S>) -> Result<SvType> {
    let unrealizable = |reason: String| Error::UnrealizableEdge {
        src: src.to_string(),
        dst: dst.to_string(),
        kind: kind.roman().to_string(),
        reason,
    };
    let grade = dst.grade_relative_to(src).ok_or_else(|| {
        unrealizable("weight difference is not on the half-integer lattice".into())
    })?;
    let t = kind
        .with_grade(grade)
        .ok_or_else(|| unrealizable(format!("grade {grade} is not a type-{kind} grade")))?;
    if !type_condition_holds(t, src) {
        return Err(unrealizable(format!(
            "source violates the {t} condition {}",
            t.condition_text()
        )));
    }
    Ok(t)
}

impl<S: Scalar> CatalogDiagram<S> {
    pub fn root(&self) -> &Weight<S> {
        &self.nodes[0].weight
    }

    /// Each edge with its resolution.
    pub fn resolved_edges(&self) -> Vec<(&CatalogEdge, Result<SvType>)> {
        self.edges
            .iter()
            .map(|e| {
                let r = resolve_edge(e.kind, &self.nodes[e.src].weight, &self.nodes[e.dst].weight);
                (e, r)
            })
            .collect()
    }

    pub fn to_diagram(&self) -> Result<EmbeddingDiagram<S>> {
        let mut edges: Vec<LabeledEdge<S>> = Vec::with_capacity(self.edges.len());
        for (e, t) in self.resolved_edges() {
            edges.push((
                self.nodes[e.src].weight.clone(),
                self.nodes[e.dst].weight.clone(),
                t?,
            ));
        }
        EmbeddingDiagram::from_parts(
            self.root().clone(),
            self.nodes.iter().map(|n| n.weight.clone()),
            edges,
        )
    }
}

/// The reference diagram of `case_id` with typed edges.
pub fn reference_diagram<S: Scalar>(
    case_id: &str,
    params: &CatalogParams<S>,
) -> Result<EmbeddingDiagram<S>> {
    catalog_diagram(case_id, params)?.to_diagram()
}

/// Discrepancies between a reference diagram and a closure, one line each.
/// Edges are matched on `(source weight, target weight, kind)`; within a
/// match the parameters agree automatically since the kind and the weight
/// difference fix them.
pub fn compare_with_closure<S: Scalar>(
    reference: &CatalogDiagram<S>,
    closure: &EmbeddingDiagram<S>,
) -> Vec<String> {
    let mut lines = Vec::new();
    let name_of = |w: &Weight<S>| {
        reference
            .nodes
            .iter()
            .find(|n| &n.weight == w)
            .map(|n| format!("{} {w}", n.name))
            .unwrap_or_else(|| w.to_string())
    };
    if reference.root() != closure.root() {
        lines.push(format!(
            "root differs: reference {} vs closure {}",
            reference.root(),
            closure.root()
        ));
    }
    let ref_nodes: BTreeSet<&Weight<S>> = reference.nodes.iter().map(|n| &n.weight).collect();
    let cl_nodes: BTreeSet<&Weight<S>> = closure.nodes().iter().collect();
    for w in ref_nodes.difference(&cl_nodes) {
        lines.push(format!("node {} missing from closure", name_of(w)));
    }
    for w in cl_nodes.difference(&ref_nodes) {
        lines.push(format!("node {w} present only in closure"));
    }
    let mut ref_edges: BTreeSet<(Weight<S>, Weight<S>, SvKind)> = BTreeSet::new();
    for (e, resolved) in reference.resolved_edges() {
        let (u, v) = (
            &reference.nodes[e.src].weight,
            &reference.nodes[e.dst].weight,
        );
        ref_edges.insert((u.clone(), v.clone(), e.kind));
        if let Err(err) = resolved {
            let reason = match err {
                Error::UnrealizableEdge { reason, .. } => reason,
                other => other.to_string(),
            };
            lines.push(format!(
                "edge {} -> {} ({}) unrealizable: {reason}",
                name_of(u),
                name_of(v),
                e.kind
            ));
        }
    }
    let cl_edges: BTreeMap<(Weight<S>, Weight<S>, SvKind), SvType> = closure
        .labeled_edges()
        .into_iter()
        .map(|(u, v, t)| ((u, v, t.kind()), t))
        .collect();
    for (u, v, k) in &ref_edges {
        if !cl_edges.contains_key(&(u.clone(), v.clone(), *k)) {
            lines.push(format!(
                "edge {} -> {} ({k}) missing from closure",
                name_of(u),
                name_of(v)
            ));
        }
    }
    for ((u, v, k), t) in &cl_edges {
        if !ref_edges.contains(&(u.clone(), v.clone(), *k)) {
            lines.push(format!(
                "edge {} -> {} {t} present only in closure",
                name_of(u),
                name_of(v)
            ));
        }
    }
    lines
}
