//! Human-readable analysis of a single tournament.

use std::fmt;

use serde::Serialize;

use crate::criticality::{classify, CriticalityReport, Shape};
use crate::interval::find_nontrivial_interval;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub order: usize,
    pub scores: Vec<usize>,
    /// A nontrivial interval when the tournament is decomposable.
    pub witness: Option<VertexSet>,
    pub criticality: Option<CriticalityReport>,
}

pub fn analyze(t: &Tournament) -> Analysis {
    let witness = find_nontrivial_interval(t).map(|w| w.interval);
    let criticality = match witness {
        None => Some(classify(t).expect("indecomposable")),
        Some(_) => None,
    };
    Analysis { order: t.order(), scores: t.score_sequence(), witness, criticality }
}

impl Analysis {
    /// One-line verdict, e.g. `indecomposable; (-1)-critical; non-critical vertex 3`.
    pub fn verdict(&self) -> String {
        match (&self.witness, &self.criticality) {
            (Some(w), _) => format!("decomposable; witness {w}"),
            (None, Some(r)) if r.below_critical_range => {
                format!("indecomposable; order {} (criticality not defined below 5)", r.order)
            }
            (None, Some(r)) if r.k == 0 => "indecomposable; critical (k=0)".to_string(),
            (None, Some(r)) if r.k == 1 => format!(
                "indecomposable; (-1)-critical; non-critical vertex {}; I(T) = {}",
                r.non_critical.min().unwrap(),
                describe_graph(r)
            ),
            (None, Some(r)) => format!("indecomposable; k={}; non-critical vertices {}", r.k, r.non_critical),
            (None, None) => unreachable!("indecomposable tournaments are always classified"),
        }
    }
}

fn describe_component(vertices: VertexSet, shape: Shape, r: &CriticalityReport) -> String {
    match shape {
        Shape::Isolated => format!("isolated {}", vertices.min().unwrap()),
        Shape::Path => {
            let end = vertices.iter().find(|&v| r.graph.degree(v) == 1).unwrap();
            let mut walk = vec![end];
            let mut prev = None;
            let mut cur = end;
            while let Some(next) = r.graph.neighbours(cur).iter().find(|&v| Some(v) != prev) {
                walk.push(next);
                prev = Some(cur);
                cur = next;
            }
            if walk.first() > walk.last() {
                walk.reverse();
            }
            if walk.windows(2).all(|w| w[1] == w[0] + 1) {
                return format!("path {}..{}", walk[0], walk[walk.len() - 1]);
            }
            let strs: Vec<String> = walk.iter().map(usize::to_string).collect();
            format!("path {}", strs.join("-"))
        }
        other => format!("{other} on {vertices}"),
    }
}

fn describe_graph(r: &CriticalityReport) -> String {
    let parts: Vec<String> = r.components.iter().map(|c| describe_component(c.vertices, c.shape, r)).collect();
    parts.join(" + ")
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "scores: {:?}", self.scores)?;
        writeln!(f, "{}", self.verdict())?;
        if let Some(r) = &self.criticality {
            writeln!(f, "critical: {}", r.critical)?;
            writeln!(f, "non-critical: {}", r.non_critical)?;
            let edges: Vec<String> = r.graph.edges().iter().map(|(x, y)| format!("{{{x},{y}}}")).collect();
            writeln!(f, "I(T) edges: {}", edges.join(" "))?;
            for c in &r.components {
                writeln!(f, "component: {}", describe_component(c.vertices, c.shape, r))?;
            }
        }
        Ok(())
    }
}
