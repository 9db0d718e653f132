//! Critical vertices, (-k)-criticality and the indecomposability graph.
//!
//! A vertex `x` of an indecomposable tournament is critical when `T - x` is
//! decomposable. The indecomposability graph `I(T)` joins `x` and `y`
//! whenever `T - {x, y}` is indecomposable.
//!
//! Below order 5 the notions still compute, but only through the convention
//! that tournaments of order at most 2 are indecomposable. Reports flag such
//! orders with [`CriticalityReport::below_critical_range`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{is_indecomposable, is_indecomposable_in};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Order from which criticality carries its usual meaning.
pub const CRITICAL_MIN_ORDER: usize = 5;

/// Undirected simple graph on `{0, .., n-1}` with bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndecomposabilityGraph {
    n: usize,
    adj: Vec<u64>,
}

impl IndecomposabilityGraph {
    pub fn empty(n: usize) -> Self {
        IndecomposabilityGraph { n, adj: vec![0; n] }
    }

    /// Graph with the given edges. Panics on loops or out-of-range ends.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (x, y) in edges {
            g.add_edge(x, y);
        }
        g
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x != y && x < self.n && y < self.n, "bad edge {{{x},{y}}}");
        self.adj[x] |= 1 << y;
        self.adj[y] |= 1 << x;
    }

    pub fn remove_edge(&mut self, x: usize, y: usize) {
        self.adj[x] &= !(1 << y);
        self.adj[y] &= !(1 << x);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x] >> y & 1 == 1
    }

    pub fn neighbours(&self, x: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[x])
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| VertexSet::from_bits(self.adj[x] & !((2u64 << x) - 1)).iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn isolated(&self) -> VertexSet {
        (0..self.n).filter(|&x| self.adj[x] == 0).collect()
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach: u64 = frontier.iter().fold(0, |acc, v| acc | self.adj[v]);
                frontier = VertexSet::from_bits(reach) - comp;
                comp = comp | frontier;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for IndecomposabilityGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({}) ", self.n)?;
        f.debug_set().entries(self.edges().into_iter().map(|(x, y)| format!("{{{x},{y}}}"))).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Isolated,
    Path,
    Cycle,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Isolated => "isolated",
            Shape::Path => "path",
            Shape::Cycle => "cycle",
            Shape::Other => "other",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: VertexSet,
    pub shape: Shape,
}

/// Connected components of `g` with their shape.
///
/// A component of `c >= 2` vertices is a path when it has `c - 1` edges and
/// maximum degree 2 (being connected, it then has exactly two ends); it is
/// a cycle when every vertex has degree 2.
pub fn component_shapes(g: &IndecomposabilityGraph) -> Vec<Component> {
    g.components()
        .into_iter()
        .map(|c| {
            let size = c.len();
            let degrees: Vec<usize> = c.iter().map(|v| g.degree(v)).collect();
            let edges = degrees.iter().sum::<usize>() / 2;
            let max_deg = degrees.iter().copied().max().unwrap_or(0);
            let shape = if size == 1 {
                Shape::Isolated
            } else if edges == size - 1 && max_deg <= 2 {
                Shape::Path
            } else if size >= 3 && degrees.iter().all(|&d| d == 2) {
                Shape::Cycle
            } else {
                Shape::Other
            };
            Component { vertices: c, shape }
        })
        .collect()
}

/// `I(T)`: `{x, y}` is an edge iff `T - {x, y}` is indecomposable.
pub fn indecomposability_graph(t: &Tournament) -> IndecomposabilityGraph {
    let all = t.vertices();
    let mut g = IndecomposabilityGraph::empty(t.order());
    for x in 0..t.order() {
        for y in x + 1..t.order() {
            if is_indecomposable_in(t, all.without(x).without(y)) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// Critical vertices of `t(scope)`, assuming it is indecomposable.
pub fn critical_in(t: &Tournament, scope: VertexSet) -> VertexSet {
    scope.iter().filter(|&x| !is_indecomposable_in(t, scope.without(x))).collect()
}

/// `{x : T - x decomposable}`. Requires `t` indecomposable.
pub fn critical_vertices(t: &Tournament) -> Result<VertexSet> {
    if !is_indecomposable(t) {
        return Err(Error::NotIndecomposable);
    }
    Ok(critical_in(t, t.vertices()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub order: usize,
    pub critical: VertexSet,
    pub non_critical: VertexSet,
    /// Number of non-critical vertices.
    pub k: usize,
    pub graph: IndecomposabilityGraph,
    pub components: Vec<Component>,
    /// Set when the order is below 5, where the results rest on the
    /// small-order convention only.
    pub below_critical_range: bool,
}

impl CriticalityReport {
    /// Indecomposable, order at least 5, every vertex critical.
    pub fn is_critical(&self) -> bool {
        self.k == 0 && !self.below_critical_range
    }

    pub fn is_minus_k_critical(&self, k: usize) -> bool {
        self.k == k && !self.below_critical_range
    }

    pub fn isolated_count(&self) -> usize {
        self.components.iter().filter(|c| c.shape == Shape::Isolated).count()
    }
}

pub fn classify(t: &Tournament) -> Result<CriticalityReport> {
    let critical = critical_vertices(t)?;
    let non_critical = t.vertices() - critical;
    let graph = indecomposability_graph(t);
    let components = component_shapes(&graph);
    Ok(CriticalityReport {
        order: t.order(),
        critical,
        non_critical,
        k: non_critical.len(),
        graph,
        components,
        below_critical_range: t.order() < CRITICAL_MIN_ORDER,
    })
}

/// Undirected edge set as an ordered set, convenient for comparisons.
pub fn edge_set(g: &IndecomposabilityGraph) -> BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}
