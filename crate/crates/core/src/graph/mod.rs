//! Simple undirected graphs over dense vertex ids and the primitives the rest of
//! the crate is built on: complement, induced subgraphs, contraction of edge
//! sets, squares, components, colorings and clique/chromatic numbers.

mod ops;
mod types;

pub use ops::{
    chromatic_number, clique_number, complement, connected_components, contract, greedy_proper_coloring,
    induced_subgraph, is_clique, is_connected, k_colorable, quotient, square,
};
pub use types::{EdgeSet, Partition, ProperColoring};
pub(crate) use ops::component_labels;

use fixedbitset::FixedBitSet;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Set of vertex ids, one bit per vertex.
pub type VertexSet = FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("coloring of vertex {vertex} is {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("edge {{{0}, {1}}} joins two vertices of the same color")]
    ImproperColoring(usize, usize),
    #[error("partition invalid: {0}")]
    InvalidPartition(String),
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency lives in one bitset row per vertex; the sorted edge list is
/// derived on first use and dropped whenever the graph is mutated.
#[derive(Clone, Default)]
pub struct Graph {
    rows: Vec<VertexSet>,
    tags: Vec<Option<String>>,
    edges: OnceLock<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            tags: vec![None; n],
            edges: OnceLock::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::new(n);
        for u in 0..n {
            g.link(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.link(i, (i + 1) % 5);
            g.link(5 + i, 5 + (i + 2) % 5);
            g.link(i, i + 5);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rows.len() && v < self.rows.len() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Sorted list of edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        self.edges.get_or_init(|| {
            let mut out = Vec::new();
            for (u, row) in self.rows.iter().enumerate() {
                out.extend(row.ones().filter(|&v| v > u).map(|v| (u, v)));
            }
            out
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.rows[u].set(v, false);
            self.rows[v].set(u, false);
            self.edges.take();
        }
    }

    /// Appends `count` isolated vertices and returns the id of the first.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.rows.len();
        let n = first + count;
        for row in &mut self.rows {
            row.grow(n);
        }
        self.rows.extend((0..count).map(|_| FixedBitSet::with_capacity(n)));
        self.tags.resize(n, None);
        first
    }

    pub fn set_tag(&mut self, v: usize, tag: impl Into<String>) {
        self.tags[v] = Some(tag.into());
    }

    pub fn clear_tag(&mut self, v: usize) {
        self.tags[v] = None;
    }

    pub fn tag(&self, v: usize) -> Option<&str> {
        self.tags[v].as_deref()
    }

    pub fn has_tags(&self) -> bool {
        self.tags.iter().any(Option::is_some)
    }

    /// Vertices carrying exactly `tag`, ascending.
    pub fn vertices_tagged(&self, tag: &str) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.tag(v) == Some(tag)).collect()
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, vertices: &[usize]) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// Graph with the same adjacency and no tags.
    pub fn untagged(&self) -> Graph {
        Graph { rows: self.rows.clone(), tags: vec![None; self.vertex_count()], edges: OnceLock::new() }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.rows.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.rows.len() })
        }
    }

    /// Unchecked edge insertion for constructions that know their ids are valid.
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.edges.take();
    }

    pub(crate) fn link_all(&mut self, left: &[usize], right: &[usize]) {
        for &u in left {
            for &v in right {
                if u != v {
                    self.rows[u].insert(v);
                    self.rows[v].insert(u);
                }
            }
        }
        self.edges.take();
    }

    pub(crate) fn make_clique(&mut self, vertices: &[usize]) {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.rows[u].insert(v);
                self.rows[v].insert(u);
            }
        }
        self.edges.take();
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let n = rows.len();
        Graph { rows, tags: vec![None; n], edges: OnceLock::new() }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.tags == other.tags
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}
