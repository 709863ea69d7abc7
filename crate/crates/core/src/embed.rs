//! Embedding diagrams by iterated classification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::algebra::GradeVector;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::singular::{sv_grade, SvType};
use crate::verma::Weight;

pub const DEFAULT_MAX_DEPTH: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub sv_type: SvType,
}

/// Nodes are lowest weights, root first; arrows point to the embedded module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingDiagram<S: Scalar = crate::Rational> {
    nodes: Vec<Weight<S>>,
    edges: Vec<Edge>,
}

/// An edge named by its endpoint weights.
pub type LabeledEdge<S> = (Weight<S>, Weight<S>, SvType);

impl<S: Scalar> EmbeddingDiagram<S> {
    /// Builds a diagram in canonical order from a root, further nodes and
    /// weight-labeled edges. Duplicate nodes and edges are merged.
    pub fn from_parts(
        root: Weight<S>,
        nodes: impl IntoIterator<Item = Weight<S>>,
        edges: impl IntoIterator<Item = LabeledEdge<S>>,
    ) -> Result<Self> {
        let mut others: BTreeSet<Weight<S>> = nodes.into_iter().collect();
        let edges: Vec<LabeledEdge<S>> = edges.into_iter().collect();
        for (u, v, _) in &edges {
            others.insert(u.clone());
            others.insert(v.clone());
        }
        others.remove(&root);
        let mut rest: Vec<(i64, Weight<S>)> = Vec::with_capacity(others.len());
        for w in others {
            let g = w.grade_relative_to(&root).ok_or_else(|| {
                Error::Malformed(format!("node {w} is not on the root lattice of {root}"))
            })?;
            rest.push((g.sum(), w));
        }
        rest.sort();
        let nodes: Vec<Weight<S>> = std::iter::once(root)
            .chain(rest.into_iter().map(|(_, w)| w))
            .collect();
        let index: BTreeMap<&Weight<S>, usize> =
            nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let edge_set: BTreeSet<Edge> = edges
            .iter()
            .map(|(u, v, t)| Edge {
                src: index[u],
                dst: index[v],
                sv_type: *t,
            })
            .collect();
        let diagram = EmbeddingDiagram {
            edges: edge_set.into_iter().collect(),
            nodes,
        };
        Ok(diagram)
    }

    pub fn root(&self) -> &Weight<S> {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[Weight<S>] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Grade of node `i` relative to the root.
    pub fn node_grade(&self, i: usize) -> GradeVector {
        self.nodes[i]
            .grade_relative_to(self.root())
            .expect("nodes lie on the root lattice")
    }

    pub fn labeled_edges(&self) -> BTreeSet<LabeledEdge<S>> {
        self.edges
            .iter()
            .map(|e| {
                (
                    self.nodes[e.src].clone(),
                    self.nodes[e.dst].clone(),
                    e.sv_type,
                )
            })
            .collect()
    }

    /// Nodes without outgoing edges.
    pub fn leaves(&self) -> Vec<usize> {
        let sources: BTreeSet<usize> = self.edges.iter().map(|e| e.src).collect();
        (0..self.nodes.len())
            .filter(|i| !sources.contains(i))
            .collect()
    }

    /// Structural invariants: every edge moves by its type's grade, the
    /// potential `2p₁ + p₂` strictly increases, nothing is duplicated.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Malformed(msg));
        let unique: BTreeSet<&Weight<S>> = self.nodes.iter().collect();
        if unique.len() != self.nodes.len() {
            return fail("duplicate nodes".into());
        }
        let edges: BTreeSet<&Edge> = self.edges.iter().collect();
        if edges.len() != self.edges.len() {
            return fail("duplicate edges".into());
        }
        for e in &self.edges {
            let (gs, gd) = (self.node_grade(e.src), self.node_grade(e.dst));
            if gd - gs != sv_grade(e.sv_type) {
                return fail(format!("edge {e:?} does not match its type grade"));
            }
            if 2 * gd.p1 + gd.p2 <= 2 * gs.p1 + gs.p2 {
                return fail(format!("edge {e:?} does not increase the potential"));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph embedding {\n");
        for (i, w) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{w}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, e.sv_type);
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of `lw` under classification.
pub fn build_diagram<S: Scalar>(lw: &Weight<S>, max_depth: u32) -> Result<EmbeddingDiagram<S>> {
    if max_depth < 1 {
        return Err(Error::InvalidDepth);
    }
    let mut seen: BTreeSet<Weight<S>> = BTreeSet::new();
    seen.insert(lw.clone());
    let mut edges: Vec<LabeledEdge<S>> = Vec::new();
    let mut frontier = vec![lw.clone()];
    let mut depth = 0u32;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for node in &frontier {
            for finding in classify(node) {
                edges.push((node.clone(), finding.target.clone(), finding.sv_type));
                if seen.insert(finding.target.clone()) {
                    next.push(finding.target);
                }
            }
        }
        depth += 1;
        if !next.is_empty() && depth > max_depth {
            return Err(Error::DepthExhausted(max_depth));
        }
        frontier = next;
    }
    EmbeddingDiagram::from_parts(lw.clone(), seen, edges)
}

/// Labeled-graph comparison of two diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDiff<S: Scalar = crate::Rational> {
    pub only_left_nodes: Vec<Weight<S>>,
    pub only_right_nodes: Vec<Weight<S>>,
    pub only_left_edges: Vec<LabeledEdge<S>>,
    pub only_right_edges: Vec<LabeledEdge<S>>,
}

impl<S: Scalar> DiagramDiff<S> {
    pub fn is_empty(&self) -> bool {
        self.only_left_nodes.is_empty()
            && self.only_right_nodes.is_empty()
            && self.only_left_edges.is_empty()
            && self.only_right_edges.is_empty()
    }

    /// One line per discrepancy.
    pub fn report(&self, left: &str, right: &str) -> Vec<String> {
        let mut lines = Vec::new();
        for w in &self.only_left_nodes {
            lines.push(format!("node {w} only in {left}"));
        }
        for w in &self.only_right_nodes {
            lines.push(format!("node {w} only in {right}"));
        }
        for (u, v, t) in &self.only_left_edges {
            lines.push(format!("edge {u} -> {v} {t} only in {left}"));
        }
        for (u, v, t) in &self.only_right_edges {
            lines.push(format!("edge {u} -> {v} {t} only in {right}"));
        }
        lines
    }
}

pub fn diff<S: Scalar>(left: &EmbeddingDiagram<S>, right: &EmbeddingDiagram<S>) -> DiagramDiff<S> {
    let ln: BTreeSet<_> = left.nodes.iter().cloned().collect();
    let rn: BTreeSet<_> = right.nodes.iter().cloned().collect();
    let le = left.labeled_edges();
    let re = right.labeled_edges();
    DiagramDiff {
        only_left_nodes: ln.difference(&rn).cloned().collect(),
        only_right_nodes: rn.difference(&ln).cloned().collect(),
        only_left_edges: le.difference(&re).cloned().collect(),
        only_right_edges: re.difference(&le).cloned().collect(),
    }
}
