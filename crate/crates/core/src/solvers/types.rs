use crate::classes::ClassId;
use crate::graph::{Graph, GraphError, ProperColoring};
use std::collections::BTreeSet;
use thiserror::Error;

/// Violated instance invariant. Every message names the rule it checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("coloring of {graph} is not proper: {source}")]
    Coloring {
        graph: &'static str,
        #[source]
        source: GraphError,
    },
    #[error("list rule: vertex {u} has color {cu} but list entry {v} has color {cv}")]
    ListColor { u: usize, v: usize, cu: usize, cv: usize },
    #[error("list of vertex {u} names {v}, which is not a vertex of h")]
    ListEntry { u: usize, v: usize },
    #[error("list count: expected one list per vertex of g ({expected}), got {got}")]
    ListCount { expected: usize, got: usize },
    #[error("isomorphism mode needs |V(g)| = |V(h)|, got {g} and {h}")]
    SizeMismatch { g: usize, h: usize },
    #[error("bipartition: {0}")]
    Bipartition(String),
    #[error("balanced sides: |A| = {a} but |B| = {b}")]
    Unbalanced { a: usize, b: usize },
    #[error("part sizes: {0}")]
    PartSizes(String),
    #[error("forbidden adjacency: {u} in {from} is adjacent to {v} in {to}")]
    ForbiddenAdjacency { u: usize, v: usize, from: &'static str, to: &'static str },
    #[error("assignment: {0}")]
    Assignment(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbeddingMode {
    Homomorphism,
    Isomorphism,
}

impl EmbeddingMode {
    pub fn name(self) -> &'static str {
        match self {
            EmbeddingMode::Homomorphism => "hom",
            EmbeddingMode::Isomorphism => "iso",
        }
    }
}

/// Properly colored list homomorphism / isomorphism instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListInstance {
    g: Graph,
    h: Graph,
    c_g: ProperColoring,
    c_h: ProperColoring,
    lists: Vec<Vec<usize>>,
    mode: EmbeddingMode,
}

impl ListInstance {
    /// Validates colorings, list ranges, the color rule for list entries and,
    /// in isomorphism mode, equal vertex counts. Lists are sorted and deduplicated.
    pub fn new(
        g: Graph,
        h: Graph,
        c_g: ProperColoring,
        c_h: ProperColoring,
        mut lists: Vec<Vec<usize>>,
        mode: EmbeddingMode,
    ) -> Result<Self, InstanceError> {
        c_g.check(&g).map_err(|source| InstanceError::Coloring { graph: "g", source })?;
        c_h.check(&h).map_err(|source| InstanceError::Coloring { graph: "h", source })?;
        if lists.len() != g.vertex_count() {
            return Err(InstanceError::ListCount { expected: g.vertex_count(), got: lists.len() });
        }
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                if v >= h.vertex_count() {
                    return Err(InstanceError::ListEntry { u, v });
                }
                if c_g.color(u) != c_h.color(v) {
                    return Err(InstanceError::ListColor { u, v, cu: c_g.color(u), cv: c_h.color(v) });
                }
            }
        }
        if mode == EmbeddingMode::Isomorphism && g.vertex_count() != h.vertex_count() {
            return Err(InstanceError::SizeMismatch { g: g.vertex_count(), h: h.vertex_count() });
        }
        Ok(ListInstance { g, h, c_g, c_h, lists, mode })
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn c_g(&self) -> &ProperColoring {
        &self.c_g
    }

    pub fn c_h(&self) -> &ProperColoring {
        &self.c_h
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn list(&self, u: usize) -> &[usize] {
        &self.lists[u]
    }

    pub fn mode(&self) -> EmbeddingMode {
        self.mode
    }
}

/// Map from the vertices of g to the vertices of h.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    map: Vec<usize>,
    bijective: bool,
}

impl Assignment {
    /// `h_size` is only consulted when `bijective` is set.
    pub fn new(map: Vec<usize>, bijective: bool, h_size: usize) -> Result<Self, InstanceError> {
        if bijective {
            let distinct: BTreeSet<usize> = map.iter().copied().collect();
            if map.len() != h_size || distinct.len() != map.len() || map.iter().any(|&v| v >= h_size) {
                return Err(InstanceError::Assignment("flagged bijective but is not a bijection".into()));
            }
        }
        Ok(Assignment { map, bijective })
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }
}

/// Graph with an equal-size bipartition `(A, B)` of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossMatchingInstance {
    l: Graph,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl CrossMatchingInstance {
    pub fn new(l: Graph, mut a: Vec<usize>, mut b: Vec<usize>) -> Result<Self, InstanceError> {
        a.sort_unstable();
        b.sort_unstable();
        check_cover(l.vertex_count(), &[("A", &a), ("B", &b)]).map_err(InstanceError::Bipartition)?;
        if a.len() != b.len() {
            return Err(InstanceError::Unbalanced { a: a.len(), b: b.len() });
        }
        Ok(CrossMatchingInstance { l, a, b })
    }

    pub fn l(&self) -> &Graph {
        &self.l
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

/// Structured (or, with noise, noisy structured) clique contraction instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredInstance {
    g: Graph,
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
    d: Vec<usize>,
    noise: Vec<usize>,
    n: usize,
}

impl StructuredInstance {
    /// Checks that the five parts cover the vertices exactly, that
    /// `|A| = |B| = n`, `|C| = |D| = 2n`, and that no edge joins A to D or B to C.
    pub fn new(
        g: Graph,
        parts: [Vec<usize>; 5],
        n: usize,
    ) -> Result<Self, InstanceError> {
        let [mut a, mut b, mut c, mut d, mut noise] = parts;
        for p in [&mut a, &mut b, &mut c, &mut d, &mut noise] {
            p.sort_unstable();
        }
        check_cover(g.vertex_count(), &[("A", &a), ("B", &b), ("C", &c), ("D", &d), ("N", &noise)])
            .map_err(InstanceError::PartSizes)?;
        if a.len() != n || b.len() != n || c.len() != 2 * n || d.len() != 2 * n {
            return Err(InstanceError::PartSizes(format!(
                "need |A| = |B| = {n} and |C| = |D| = {}, got {}, {}, {}, {}",
                2 * n,
                a.len(),
                b.len(),
                c.len(),
                d.len()
            )));
        }
        for (from, xs, to, ys) in [("A", &a, "D", &d), ("B", &b, "C", &c)] {
            for &u in xs {
                if let Some(&v) = ys.iter().find(|&&v| g.has_edge(u, v)) {
                    return Err(InstanceError::ForbiddenAdjacency { u, v, from, to });
                }
            }
        }
        Ok(StructuredInstance { g, a, b, c, d, noise, n })
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn noise(&self) -> &[usize] {
        &self.noise
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `A ∪ B ∪ C ∪ D`, ascending.
    pub fn core(&self) -> Vec<usize> {
        let mut core: Vec<usize> = [&self.a, &self.b, &self.c, &self.d].into_iter().flatten().copied().collect();
        core.sort_unstable();
        core
    }

    /// Parts in the order A, B, C, D, N.
    pub fn parts(&self) -> [&[usize]; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.noise]
    }
}

/// Contract at most `t` edges so that the result lies in `class`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FContractionInstance {
    pub g: Graph,
    pub t: usize,
    pub class: ClassId,
}

impl FContractionInstance {
    pub fn new(g: Graph, t: usize, class: ClassId) -> Self {
        FContractionInstance { g, t, class }
    }
}

fn check_cover(n: usize, parts: &[(&str, &[usize])]) -> Result<(), String> {
    let mut owner = vec![None; n];
    for &(name, part) in parts {
        for &v in part {
            if v >= n {
                return Err(format!("{name} names vertex {v}, graph has {n}"));
            }
            if let Some(prev) = owner[v].replace(name) {
                return Err(format!("vertex {v} is in both {prev} and {name}"));
            }
        }
    }
    match owner.iter().position(Option::is_none) {
        Some(v) => Err(format!("vertex {v} is in no part")),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_color_rule_is_enforced() {
        let g = Graph::complete(2);
        let c = ProperColoring::new(vec![1, 2], 2).unwrap();
        let err = ListInstance::new(g.clone(), g.clone(), c.clone(), c.clone(), vec![vec![1], vec![1]], EmbeddingMode::Isomorphism)
            .unwrap_err();
        assert!(matches!(err, InstanceError::ListColor { u: 0, v: 1, .. }));
        assert!(ListInstance::new(g.clone(), g, c.clone(), c, vec![vec![0], vec![1]], EmbeddingMode::Isomorphism).is_ok());
    }

    #[test]
    fn iso_mode_needs_equal_sizes() {
        let err = ListInstance::new(
            Graph::new(1),
            Graph::new(2),
            ProperColoring::trivial(1),
            ProperColoring::trivial(2),
            vec![vec![0, 1]],
            EmbeddingMode::Isomorphism,
        )
        .unwrap_err();
        assert_eq!(err, InstanceError::SizeMismatch { g: 1, h: 2 });
    }

    #[test]
    fn cross_matching_sides() {
        assert!(matches!(
            CrossMatchingInstance::new(Graph::new(3), vec![0], vec![1, 2]),
            Err(InstanceError::Unbalanced { a: 1, b: 2 })
        ));
        assert!(CrossMatchingInstance::new(Graph::new(2), vec![0], vec![0]).is_err());
        assert!(CrossMatchingInstance::new(Graph::new(2), vec![0], vec![1]).is_ok());
    }

    #[test]
    fn structured_forbidden_adjacency() {
        // n = 1: A = {0}, B = {1}, C = {2, 3}, D = {4, 5}.
        let mut g = Graph::new(6);
        g.add_edge(0, 4).unwrap();
        let parts = || [vec![0], vec![1], vec![2, 3], vec![4, 5], vec![]];
        assert!(matches!(
            StructuredInstance::new(g, parts(), 1),
            Err(InstanceError::ForbiddenAdjacency { u: 0, v: 4, from: "A", to: "D" })
        ));
        assert!(StructuredInstance::new(Graph::new(6), parts(), 1).is_ok());
        assert!(matches!(StructuredInstance::new(Graph::new(6), parts(), 2), Err(InstanceError::PartSizes(_))));
    }

    #[test]
    fn bijective_flag_is_checked() {
        assert!(Assignment::new(vec![0, 0], true, 2).is_err());
        assert!(Assignment::new(vec![0, 0], false, 2).is_ok());
        assert!(Assignment::new(vec![1, 0], true, 2).is_ok());
    }
}
