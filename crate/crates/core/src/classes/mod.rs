//! Target graph classes for contraction problems: fast recognizers and the
//! definitional oracles used to validate them.
//!
//! Interval graphs are recognized as chordal and asteroidal-triple-free
//! (Lekkerkerker and Boland), proper interval graphs as claw-free interval
//! graphs (Roberts), and perfect graphs through the strong perfect graph
//! theorem as graphs without odd holes or odd antiholes.

mod chordal;
mod forbidden;
mod oracle;

pub use chordal::{check_peo, find_asteroidal_triple, is_chordal, lex_bfs, perfect_elimination_ordering};
pub use forbidden::{find_2k2, find_c4, find_c5, find_claw, find_odd_hole, find_p4, strip_simplicial};
pub use oracle::{brute_force_oracle, OracleError, ORACLE_MAX_VERTICES, PERFECT_MAX_VERTICES};

use crate::graph::{complement, connected_components, is_clique, Graph};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    Clique,
    TwoCliques,
    Chordal,
    Interval,
    ProperInterval,
    Threshold,
    TriviallyPerfect,
    Split,
    CompleteSplit,
    Perfect,
}

impl ClassId {
    pub const ALL: [ClassId; 10] = [
        ClassId::Clique,
        ClassId::TwoCliques,
        ClassId::Chordal,
        ClassId::Interval,
        ClassId::ProperInterval,
        ClassId::Threshold,
        ClassId::TriviallyPerfect,
        ClassId::Split,
        ClassId::CompleteSplit,
        ClassId::Perfect,
    ];

    /// The eight classes reached through the gadget reductions.
    pub const GADGET_TARGETS: [ClassId; 8] = [
        ClassId::Chordal,
        ClassId::Interval,
        ClassId::ProperInterval,
        ClassId::Threshold,
        ClassId::TriviallyPerfect,
        ClassId::Split,
        ClassId::CompleteSplit,
        ClassId::Perfect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Clique => "clique",
            ClassId::TwoCliques => "two-cliques",
            ClassId::Chordal => "chordal",
            ClassId::Interval => "interval",
            ClassId::ProperInterval => "proper-interval",
            ClassId::Threshold => "threshold",
            ClassId::TriviallyPerfect => "trivially-perfect",
            ClassId::Split => "split",
            ClassId::CompleteSplit => "complete-split",
            ClassId::Perfect => "perfect",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class id `{0}`")]
pub struct UnknownClass(pub String);

impl FromStr for ClassId {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// Decides whether `g` belongs to `class`.
pub fn recognize(class: ClassId, g: &Graph) -> bool {
    match class {
        ClassId::Clique => is_clique(g, &(0..g.vertex_count()).collect::<Vec<_>>()),
        ClassId::TwoCliques => two_cliques_witness(g).is_some(),
        ClassId::Chordal => is_chordal(g),
        ClassId::Interval => is_chordal(g) && find_asteroidal_triple(g).is_none(),
        ClassId::ProperInterval => {
            is_chordal(g) && find_claw(g).is_none() && find_asteroidal_triple(g).is_none()
        }
        ClassId::Threshold => {
            is_chordal(g) && find_p4(g).is_none() && find_2k2(g).is_none()
        }
        ClassId::TriviallyPerfect => is_chordal(g) && find_p4(g).is_none(),
        ClassId::Split => find_c4(g).is_none() && find_2k2(g).is_none() && find_c5(g).is_none(),
        ClassId::CompleteSplit => complete_split_witness(g).is_some(),
        ClassId::Perfect => is_perfect(g),
    }
}

/// Certificate of membership for the classes that have a natural one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two cliques covering the graph, no edges between their private parts.
    TwoCliques { a: Vec<usize>, b: Vec<usize> },
    /// Clique part and independent part.
    Split { clique: Vec<usize>, independent: Vec<usize> },
    /// Perfect elimination ordering.
    EliminationOrder(Vec<usize>),
}

/// A membership certificate when `g` is in `class` and the class has one.
pub fn witness(class: ClassId, g: &Graph) -> Option<Witness> {
    match class {
        ClassId::TwoCliques => two_cliques_witness(g).map(|(a, b)| Witness::TwoCliques { a, b }),
        ClassId::Split if recognize(ClassId::Split, g) => {
            split_witness(g).map(|(clique, independent)| Witness::Split { clique, independent })
        }
        ClassId::CompleteSplit => {
            complete_split_witness(g).map(|(clique, independent)| Witness::Split { clique, independent })
        }
        ClassId::Chordal if recognize(class, g) => perfect_elimination_ordering(g).map(Witness::EliminationOrder),
        _ => None,
    }
}

/// Universal vertices go in both cliques; the rest must be at most two
/// components, each a clique.
fn two_cliques_witness(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let rest: Vec<usize> = (0..n).filter(|v| !universal.contains(v)).collect();
    let (h, ids) = crate::graph::induced_subgraph(g, &rest).expect("ids in range");
    let comps = connected_components(&h);
    if comps.len() > 2 {
        return None;
    }
    let mut sides = [universal.clone(), universal];
    for (side, block) in sides.iter_mut().zip(comps.blocks()) {
        if !is_clique(&h, block) {
            return None;
        }
        side.extend(block.iter().map(|&v| ids[v]));
        side.sort_unstable();
    }
    let [a, b] = sides;
    Some((a, b))
}

/// Degree-based clique/independent split; valid whenever `g` is split.
fn split_witness(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (0..n).take_while(|&i| g.degree(order[i]) >= i).count();
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let ok = is_clique(g, &clique)
        && independent.iter().all(|&u| independent.iter().all(|&v| !g.has_edge(u, v)));
    ok.then_some((clique, independent))
}

/// Sweeps prefixes of the degree-sorted order as the clique part.
fn complete_split_witness(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 0..=n {
        let (clique, independent) = order.split_at(k);
        let joined = clique.iter().all(|&u| g.degree(u) + 1 == n);
        let edgeless = independent.iter().all(|&u| g.degree(u) == k);
        if joined && edgeless {
            let mut c = clique.to_vec();
            let mut i = independent.to_vec();
            c.sort_unstable();
            i.sort_unstable();
            return Some((c, i));
        }
    }
    None
}

fn is_perfect(g: &Graph) -> bool {
    let alive = strip_simplicial(g);
    if alive.is_clear() {
        return true;
    }
    find_odd_hole(g, &alive).is_none() && find_odd_hole(&complement(g), &alive).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in ClassId::ALL {
            assert_eq!(c.name().parse::<ClassId>().unwrap(), c);
        }
        assert!("bipartite".parse::<ClassId>().is_err());
    }

    #[test]
    fn known_members() {
        assert!(!recognize(ClassId::Chordal, &Graph::cycle(4)));
        assert!(!recognize(ClassId::Perfect, &Graph::cycle(5)));
        assert!(recognize(ClassId::Split, &Graph::complete(5)));
        assert!(!recognize(ClassId::Threshold, &Graph::path(4)));
    }

    #[test]
    fn c4_is_not_two_cliques() {
        // Covering C4 by two cliques leaves private parts joined by an edge.
        assert!(!recognize(ClassId::TwoCliques, &Graph::cycle(4)));
        assert!(!brute_force_oracle(ClassId::TwoCliques, &Graph::cycle(4)).unwrap());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(recognize(ClassId::TwoCliques, &two_k2));
        assert!(!recognize(ClassId::Threshold, &two_k2));
    }

    #[test]
    fn witnesses_are_valid() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            witness(ClassId::CompleteSplit, &star),
            Some(Witness::Split { clique: vec![0], independent: vec![1, 2, 3] })
        );
        let mut two = Graph::complete(3);
        let first = two.add_vertices(2);
        two.add_edge(first, first + 1).unwrap();
        assert_eq!(witness(ClassId::TwoCliques, &two), Some(Witness::TwoCliques { a: vec![0, 1, 2], b: vec![3, 4] }));
    }

    #[test]
    fn perfect_examples() {
        assert!(recognize(ClassId::Perfect, &Graph::cycle(6)));
        assert!(!recognize(ClassId::Perfect, &complement(&Graph::cycle(7))));
        assert!(!recognize(ClassId::Perfect, &Graph::petersen()));
        assert!(recognize(ClassId::Perfect, &Graph::complete(6)));
    }
}
