//! Explicit (materialized) graphs backed by bitset adjacency rows.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::GraphFamilySpec;
use crate::set::ElementSet;

/// Default vertex cap for [`materialize`].
pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// Default vertex cap for exact chromatic number search.
pub const DEFAULT_CHROMATIC_CAP: usize = 120;

/// Simple undirected graph on `0..order` with one adjacency bitset per
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self { adj: vec![FixedBitSet::with_capacity(order); order] }
    }

    /// Self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::InvalidParameters(format!("bad edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Proper means no edge joins two equal colors.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.order() && (0..self.order()).all(|u| self.adj[u].ones().all(|v| colors[u] != colors[v]))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }
}

/// A family member laid out explicitly: vertices in lexicographic order and
/// disjointness adjacency.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    pub spec: GraphFamilySpec,
    pub vertices: Vec<ElementSet>,
    pub graph: Graph,
}

impl ExplicitGraph {
    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.vertices.binary_search(s).ok()
    }
}

/// Materializes `spec`, refusing when its vertex count exceeds `vertex_cap`.
pub fn materialize(spec: &GraphFamilySpec, vertex_cap: usize) -> Result<ExplicitGraph> {
    let count = spec.vertex_count();
    if count > BigUint::from(vertex_cap) {
        return Err(Error::CapExceeded { count: count.to_string(), cap: vertex_cap });
    }
    let vertices: Vec<ElementSet> = spec.vertices().collect();
    let mut graph = Graph::empty(vertices.len());
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(ExplicitGraph { spec: *spec, vertices, graph })
}
