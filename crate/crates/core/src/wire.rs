//! JSON interchange for vectors, classifications and diagrams.
//!
//! Rationals travel as canonical `"num/den"` strings and weights as
//! two-element string arrays. Every `*_to_json` has a matching parser, and
//! parsing canonical output gives back an equal value.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::GradeVector;
use crate::classify::{case_label, CaseLabel, Finding};
use crate::embed::{EmbeddingDiagram, LabeledEdge};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::singular::SvType;
use crate::verma::{BasisKey, ModuleVector, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    key: [u32; 6],
    coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorJson {
    lambda: [String; 2],
    terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FindingJson {
    #[serde(rename = "type")]
    kind: String,
    params: BTreeMap<String, u32>,
    target: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassificationJson {
    lw: [String; 2],
    case: String,
    findings: Vec<FindingJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    src: usize,
    dst: usize,
    #[serde(rename = "type")]
    kind: String,
    params: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    root: [String; 2],
    nodes: Vec<[String; 2]>,
    edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchJson {
    lw: [String; 2],
    grade: [i64; 2],
    basis: Vec<VectorJson>,
}

/// A classification result: the weight, its findings and case label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification<S: Scalar = crate::Rational> {
    pub lw: Weight<S>,
    pub findings: Vec<Finding<S>>,
    pub case: CaseLabel,
}

impl<S: Scalar> Classification<S> {
    pub fn of(lw: &Weight<S>) -> Self {
        let findings = crate::classify::classify(lw);
        Classification {
            lw: lw.clone(),
            case: case_label(&findings),
            findings,
        }
    }
}

/// A nullspace basis at one grade of V^lw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult<S: Scalar = crate::Rational> {
    pub lw: Weight<S>,
    pub grade: GradeVector,
    pub basis: Vec<ModuleVector<S>>,
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::Malformed(e.to_string())
}

fn encode<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn decode<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(malformed)
}

fn weight_out<S: Scalar>(w: &Weight<S>) -> [String; 2] {
    w.to_strings()
}

fn weight_in<S: Scalar>(w: &[String; 2]) -> Result<Weight<S>> {
    Ok(Weight::new(
        S::parse_fraction(&w[0])?,
        S::parse_fraction(&w[1])?,
    ))
}

fn type_out(t: SvType) -> (String, BTreeMap<String, u32>) {
    let params = t
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    (t.roman().to_string(), params)
}

fn vector_out<S: Scalar>(v: &ModuleVector<S>) -> VectorJson {
    VectorJson {
        lambda: weight_out(&v.weight),
        terms: v
            .terms()
            .map(|(k, c)| TermJson {
                key: k.to_array(),
                coeff: c.to_fraction_string(),
            })
            .collect(),
    }
}

fn vector_in<S: Scalar>(v: &VectorJson) -> Result<ModuleVector<S>> {
    let mut terms = Vec::with_capacity(v.terms.len());
    for t in &v.terms {
        let c = S::parse_fraction(&t.coeff)?;
        if c.is_zero() {
            return Err(malformed("zero coefficients are not stored"));
        }
        terms.push((BasisKey::from_array(t.key), c));
    }
    let n = terms.len();
    let out = ModuleVector::from_terms(weight_in(&v.lambda)?, terms);
    if out.len() != n {
        return Err(malformed("duplicate basis keys"));
    }
    Ok(out)
}

pub fn vector_to_json<S: Scalar>(v: &ModuleVector<S>) -> String {
    encode(&vector_out(v))
}

pub fn vector_from_json<S: Scalar>(text: &str) -> Result<ModuleVector<S>> {
    vector_in(&decode::<VectorJson>(text)?)
}

fn finding_out<S: Scalar>(f: &Finding<S>) -> FindingJson {
    let (kind, params) = type_out(f.sv_type);
    FindingJson {
        kind,
        params,
        target: weight_out(&f.target),
    }
}

fn finding_in<S: Scalar>(f: &FindingJson) -> Result<Finding<S>> {
    Ok(Finding {
        sv_type: SvType::from_parts(&f.kind, &f.params)?,
        target: weight_in(&f.target)?,
    })
}

pub fn finding_to_json<S: Scalar>(f: &Finding<S>) -> String {
    encode(&finding_out(f))
}

pub fn finding_from_json<S: Scalar>(text: &str) -> Result<Finding<S>> {
    finding_in(&decode::<FindingJson>(text)?)
}

pub fn classification_to_json<S: Scalar>(c: &Classification<S>) -> String {
    encode(&ClassificationJson {
        lw: weight_out(&c.lw),
        case: c.case.to_string(),
        findings: c.findings.iter().map(finding_out).collect(),
    })
}

pub fn classification_from_json<S: Scalar>(text: &str) -> Result<Classification<S>> {
    let raw: ClassificationJson = decode(text)?;
    let findings = raw
        .findings
        .iter()
        .map(finding_in)
        .collect::<Result<Vec<Finding<S>>>>()?;
    let case = case_label(&findings);
    if case.as_str() != raw.case {
        return Err(malformed(format!(
            "case `{}` does not match the findings ({case})",
            raw.case
        )));
    }
    Ok(Classification {
        lw: weight_in(&raw.lw)?,
        findings,
        case,
    })
}

pub fn diagram_to_json<S: Scalar>(d: &EmbeddingDiagram<S>) -> String {
    encode(&DiagramJson {
        root: weight_out(d.root()),
        nodes: d.nodes().iter().map(weight_out).collect(),
        edges: d
            .edges()
            .iter()
            .map(|e| {
                let (kind, params) = type_out(e.sv_type);
                EdgeJson {
                    src: e.src,
                    dst: e.dst,
                    kind,
                    params,
                }
            })
            .collect(),
    })
}

pub fn diagram_from_json<S: Scalar>(text: &str) -> Result<EmbeddingDiagram<S>> {
    let raw: DiagramJson = decode(text)?;
    let root = weight_in::<S>(&raw.root)?;
    let nodes = raw
        .nodes
        .iter()
        .map(weight_in)
        .collect::<Result<Vec<Weight<S>>>>()?;
    if nodes.first() != Some(&root) {
        return Err(malformed("the first node must be the root"));
    }
    let mut edges: Vec<LabeledEdge<S>> = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        let (Some(u), Some(v)) = (nodes.get(e.src), nodes.get(e.dst)) else {
            return Err(malformed(format!(
                "edge {} -> {} is out of range",
                e.src, e.dst
            )));
        };
        edges.push((
            u.clone(),
            v.clone(),
            SvType::from_parts(&e.kind, &e.params)?,
        ));
    }
    let d = EmbeddingDiagram::from_parts(root, nodes.iter().cloned(), edges)?;
    if d.nodes() != nodes.as_slice() {
        return Err(malformed("nodes are not in canonical order"));
    }
    Ok(d)
}

pub fn search_to_json<S: Scalar>(r: &SearchResult<S>) -> String {
    encode(&SearchJson {
        lw: weight_out(&r.lw),
        grade: [r.grade.p1, r.grade.p2],
        basis: r.basis.iter().map(vector_out).collect(),
    })
}

pub fn search_from_json<S: Scalar>(text: &str) -> Result<SearchResult<S>> {
    let raw: SearchJson = decode(text)?;
    Ok(SearchResult {
        lw: weight_in(&raw.lw)?,
        grade: GradeVector::new(raw.grade[0], raw.grade[1]),
        basis: raw.basis.iter().map(vector_in).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::build_diagram;
    use crate::singular::closed_form_sv;
    use crate::Rational;

    fn w(a: (i64, i64), b: (i64, i64)) -> Weight<Rational> {
        Weight::from_ratios(a, b)
    }

    #[test]
    fn finding_shape() {
        let f = Finding {
            sv_type: SvType::III { p3: 5, q3: 2 },
            target: w((5, 4), (-1, 4)),
        };
        let text = finding_to_json(&f);
        assert_eq!(
            text,
            r#"{"type":"iii","params":{"p3":5,"q3":2},"target":["5/4","-1/4"]}"#
        );
        assert_eq!(finding_from_json::<Rational>(&text).unwrap(), f);
    }

    #[test]
    fn vector_round_trip() {
        let lw = w((7, 4), (-1, 4));
        let v = closed_form_sv(SvType::III { p3: 1, q3: 2 }, &lw).unwrap();
        let text = vector_to_json(&v);
        assert_eq!(vector_from_json::<Rational>(&text).unwrap(), v);
    }

    #[test]
    fn diagram_round_trip() {
        let d = build_diagram(&w((3, 4), (1, 4)), 16).unwrap();
        let text = diagram_to_json(&d);
        assert!(text.starts_with(r#"{"root":["3/4","1/4"],"nodes":[["3/4","1/4"]"#));
        assert_eq!(diagram_from_json::<Rational>(&text).unwrap(), d);
    }

    #[test]
    fn classification_round_trip() {
        let c = Classification::of(&w((-1, 4), (-1, 4)));
        assert_eq!(c.case.as_str(), "A12345");
        let text = classification_to_json(&c);
        assert_eq!(classification_from_json::<Rational>(&text).unwrap(), c);
        let forged = text.replace("A12345", "A1");
        assert!(matches!(
            classification_from_json::<Rational>(&forged),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(diagram_from_json::<Rational>("{").is_err());
        let bad = r#"{"root":["1/0","0"],"nodes":[],"edges":[]}"#;
        assert!(matches!(
            diagram_from_json::<Rational>(bad),
            Err(Error::Parse(_))
        ));
    }
}
