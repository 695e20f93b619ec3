use super::{Graph, GraphError};

/// Vertex coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    colors: Vec<usize>,
    k: usize,
}

impl ProperColoring {
    /// Builds a coloring and checks the color range; properness is checked
    /// separately against a graph with [`ProperColoring::check`].
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self, GraphError> {
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color > k {
                return Err(GraphError::ColorOutOfRange { vertex, color, k });
            }
        }
        Ok(ProperColoring { colors, k })
    }

    /// Same as [`ProperColoring::new`] but also checks properness on `g`.
    pub fn for_graph(g: &Graph, colors: Vec<usize>, k: usize) -> Result<Self, GraphError> {
        let c = ProperColoring::new(colors, k)?;
        c.check(g)?;
        Ok(c)
    }

    /// The constant coloring with a single color.
    pub fn trivial(n: usize) -> Self {
        ProperColoring { colors: vec![1; n], k: 1 }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if self.colors.len() != g.vertex_count() {
            return Err(GraphError::ColoringLength { expected: g.vertex_count(), got: self.colors.len() });
        }
        match g.edges().iter().find(|&&(u, v)| self.colors[u] == self.colors[v]) {
            Some(&(u, v)) => Err(GraphError::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper_on(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

/// Set of unordered vertex pairs, stored as sorted `(min, max)` tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet {
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut edges: Vec<_> = pairs.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Every pair must be an edge of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<(), GraphError> {
        for &(u, v) in &self.edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
        }
        Ok(())
    }

    /// No two pairs share an endpoint.
    pub fn is_matching(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| seen.insert(u) && seen.insert(v))
    }

    /// Endpoints, ascending and deduplicated.
    pub fn endpoints(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EdgeSet::from_pairs(iter)
    }
}

/// Disjoint non-empty blocks covering a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `blocks` partition `ground` (given as a sorted or
    /// unsorted list of distinct ids).
    pub fn new(mut blocks: Vec<Vec<usize>>, ground: &[usize]) -> Result<Self, GraphError> {
        let mut seen = std::collections::BTreeSet::new();
        for block in &mut blocks {
            if block.is_empty() {
                return Err(GraphError::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if !seen.insert(v) {
                    return Err(GraphError::InvalidPartition(format!("vertex {v} in two blocks")));
                }
            }
        }
        let ground: std::collections::BTreeSet<usize> = ground.iter().copied().collect();
        if seen != ground {
            return Err(GraphError::InvalidPartition("blocks do not cover the ground set exactly".into()));
        }
        Ok(Partition { blocks })
    }

    /// Builds the partition induced by a block label per vertex; block ids
    /// must be `0..k` and every id used.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Block index per vertex for a ground set `0..n`; `None` for uncovered ids.
    pub fn labels(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                if v < n {
                    out[v] = Some(i);
                }
            }
        }
        out
    }
}
