use super::matching::{cross_perfect_matchings, quotient_is_clique};
use super::minor::contract_to_clique;
use super::{FContractionInstance, Limits, SolverError, StructuredInstance};
use crate::classes::recognize;
use crate::graph::component_labels;
use crate::graph::{contract, induced_subgraph, EdgeSet, Graph};

/// Visits every forest of `g` with at most `max_size` edges, smaller forests
/// first and lexicographically within a size. `visit` returns `true` to stop.
pub(crate) fn for_each_forest(
    g: &Graph,
    max_size: usize,
    mut skip_size: impl FnMut(usize) -> bool,
    mut visit: impl FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    let edges = g.edges();
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    let mut chosen = Vec::new();
    for size in 0..=max_size.min(g.vertex_count().saturating_sub(1)) {
        if skip_size(size) {
            continue;
        }
        if grow(edges, 0, size, &mut parent, &mut chosen, &mut visit) {
            return true;
        }
    }
    false
}

fn root(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn grow(
    edges: &[(usize, usize)],
    start: usize,
    size: usize,
    parent: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if chosen.len() == size {
        return visit(chosen);
    }
    let need = size - chosen.len();
    for i in start..edges.len() {
        if edges.len() - i < need {
            break;
        }
        let (u, v) = edges[i];
        let (ru, rv) = (root(parent, u), root(parent, v));
        if ru == rv {
            continue;
        }
        parent[rv] = ru;
        chosen.push((u, v));
        if grow(edges, i + 1, size, parent, chosen, visit) {
            return true;
        }
        chosen.pop();
        parent[rv] = rv;
    }
    false
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn check_candidates(g: &Graph, t: usize, limits: &Limits) -> Result<(), SolverError> {
    let total = (0..=t).fold(0u128, |acc, s| acc.saturating_add(binomial(g.edge_count(), s)));
    if total > limits.forest_candidates {
        return Err(SolverError::GuardExceeded { what: "candidate edge sets", limit: limits.forest_candidates, got: total });
    }
    Ok(())
}

/// Smallest, then lexicographically first, forest `F` with `|F| ≤ t` whose
/// contraction is complete. Any contracting edge set can be replaced by a
/// spanning forest of its components, so only forests are searched.
pub fn solve_clique_contraction(g: &Graph, t: usize) -> Option<EdgeSet> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut found = None;
    // A forest of s edges leaves n - s vertices and at most m - s edges.
    let hopeless = |s: usize| m - s.min(m) < binomial(n - s, 2) as usize;
    for_each_forest(g, t, hopeless, |f| {
        let f = EdgeSet::from_pairs(f.iter().copied());
        if quotient_is_clique(g, &f) {
            found = Some(f);
            return true;
        }
        false
    });
    found
}

/// Exhaustive F-contraction: the first forest (by size, then lexicographic)
/// of at most `t` edges whose contraction belongs to the class.
pub fn solve_f_contraction(inst: &FContractionInstance, limits: &Limits) -> Result<Option<EdgeSet>, SolverError> {
    let mut found = None;
    for_each_f_contraction_solution(inst, limits, |f| {
        found = Some(f.clone());
        true
    })?;
    Ok(found)
}

/// Visits every forest solution of an F-contraction instance in search order.
pub fn for_each_f_contraction_solution(
    inst: &FContractionInstance,
    limits: &Limits,
    mut visit: impl FnMut(&EdgeSet) -> bool,
) -> Result<(), SolverError> {
    check_candidates(&inst.g, inst.t, limits)?;
    for_each_forest(&inst.g, inst.t, |_| false, |f| {
        let f = EdgeSet::from_pairs(f.iter().copied());
        let (q, _) = contract(&inst.g, &f).expect("forest edges come from the graph");
        recognize(inst.class, &q) && visit(&f)
    });
    Ok(())
}

/// F-contraction restricted to perfect matchings between `a` and `b`.
///
/// Only complete on instances built by the gadget reductions, where every
/// solution has this shape; the exhaustive solver is the reference elsewhere.
pub fn solve_f_contraction_restricted(inst: &FContractionInstance, a: &[usize], b: &[usize]) -> Option<EdgeSet> {
    if a.len() > inst.t {
        return None;
    }
    let mut found = None;
    cross_perfect_matchings(&inst.g, a, b, false, |pairs| {
        let f = EdgeSet::from_pairs(pairs.iter().copied());
        let (q, _) = contract(&inst.g, &f).expect("matching edges come from the graph");
        if recognize(inst.class, &q) {
            found = Some(f);
            return true;
        }
        false
    });
    found
}

/// Noise vertices that share a component of `(V, f)` with a core vertex.
pub fn compute_noise_set(inst: &StructuredInstance, f: &EdgeSet) -> Vec<usize> {
    if inst.noise().is_empty() || f.is_empty() {
        return Vec::new();
    }
    let n = inst.g().vertex_count();
    let (labels, k) = component_labels(n, f.iter());
    let mut touches_core = vec![false; k];
    for v in inst.core() {
        touches_core[labels[v]] = true;
    }
    inst.noise().iter().copied().filter(|&v| touches_core[labels[v]]).collect()
}

/// Whether `f` solves the instance: `f` uses edges of the graph, has at most
/// `n` edges, and contracting it inside `G[core ∪ X]` gives a clique.
pub fn is_structured_solution(inst: &StructuredInstance, f: &EdgeSet) -> bool {
    if f.len() > inst.n() || f.check_in(inst.g()).is_err() {
        return false;
    }
    let mut keep = inst.core();
    keep.extend(compute_noise_set(inst, f));
    let (sub, ids) = induced_subgraph(inst.g(), &keep).expect("ids in range");
    let mut new_id = vec![usize::MAX; inst.g().vertex_count()];
    for (i, &v) in ids.iter().enumerate() {
        new_id[v] = i;
    }
    let inner = EdgeSet::from_pairs(
        f.iter().filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX).map(|(u, v)| (new_id[u], new_id[v])),
    );
    quotient_is_clique(&sub, &inner)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructuredStrategy {
    /// Perfect A–B matchings only.
    CrossMatchings,
    /// Every forest of at most `n` edges.
    Exhaustive,
    /// Branch and bound over contractions; needs an empty noise part.
    BranchAndBound,
}

pub fn solve_structured(
    inst: &StructuredInstance,
    strategy: StructuredStrategy,
    limits: &Limits,
) -> Result<Option<EdgeSet>, SolverError> {
    match strategy {
        StructuredStrategy::CrossMatchings => {
            let mut found = None;
            cross_perfect_matchings(inst.g(), inst.a(), inst.b(), true, |pairs| {
                let f = EdgeSet::from_pairs(pairs.iter().copied());
                if is_structured_solution(inst, &f) {
                    found = Some(f);
                    return true;
                }
                false
            });
            Ok(found)
        }
        StructuredStrategy::Exhaustive => {
            let mut found = None;
            for_each_structured_solution(inst, limits, |f| {
                found = Some(f.clone());
                true
            })?;
            Ok(found)
        }
        StructuredStrategy::BranchAndBound => {
            if !inst.noise().is_empty() {
                return Err(SolverError::Unsupported("branch and bound needs an empty noise part".into()));
            }
            Ok(contract_to_clique(inst.g(), inst.n()))
        }
    }
}

/// Visits every forest solution of a structured instance in search order.
pub fn for_each_structured_solution(
    inst: &StructuredInstance,
    limits: &Limits,
    mut visit: impl FnMut(&EdgeSet) -> bool,
) -> Result<(), SolverError> {
    check_candidates(inst.g(), inst.n(), limits)?;
    for_each_forest(inst.g(), inst.n(), |_| false, |f| {
        let f = EdgeSet::from_pairs(f.iter().copied());
        is_structured_solution(inst, &f) && visit(&f)
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassId;

    #[test]
    fn forest_enumeration_counts() {
        // K4 has 16 spanning trees and C(6,2) = 15 two-edge forests.
        let g = Graph::complete(4);
        let mut by_size = [0usize; 4];
        for_each_forest(&g, 3, |_| false, |f| {
            by_size[f.len()] += 1;
            false
        });
        assert_eq!(by_size, [1, 6, 15, 16]);
    }

    #[test]
    fn clique_contraction_examples() {
        assert_eq!(solve_clique_contraction(&Graph::complete(5), 0), Some(EdgeSet::new()));
        assert_eq!(solve_clique_contraction(&Graph::path(3), 1), Some(EdgeSet::from_pairs([(0, 1)])));
        // C5 needs two contractions. Two disjoint edges work, but so does a
        // path of two edges, and {0,1},{0,4} comes first.
        let c5 = Graph::cycle(5);
        assert_eq!(solve_clique_contraction(&c5, 1), None);
        assert!(quotient_is_clique(&c5, &EdgeSet::from_pairs([(0, 1), (2, 3)])));
        assert_eq!(solve_clique_contraction(&c5, 2), Some(EdgeSet::from_pairs([(0, 1), (0, 4)])));
    }

    #[test]
    fn f_contraction_examples() {
        let limits = Limits::default();
        let c4 = Graph::cycle(4);
        let run = |g: &Graph, t, class| solve_f_contraction(&FContractionInstance::new(g.clone(), t, class), &limits).unwrap();
        assert_eq!(run(&c4, 0, ClassId::Chordal), None);
        assert_eq!(run(&c4, 1, ClassId::Chordal), Some(EdgeSet::from_pairs([(0, 1)])));
        // Every single contraction of C5 gives C4, which is not split.
        assert_eq!(run(&Graph::cycle(5), 1, ClassId::Split), None);
    }

    #[test]
    fn guard_trips_on_large_search() {
        let limits = Limits { forest_candidates: 10, ..Limits::default() };
        let inst = FContractionInstance::new(Graph::complete(6), 2, ClassId::Chordal);
        assert!(matches!(solve_f_contraction(&inst, &limits), Err(SolverError::GuardExceeded { .. })));
    }

    fn toy(noise_edge: bool) -> StructuredInstance {
        // n = 1: A = {0}, B = {1}, C = {2, 3}, D = {4, 5}, noise {6}.
        let mut g = Graph::new(7);
        for (u, v) in [(0, 1), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (0, 2), (0, 3), (1, 4), (1, 5)] {
            g.add_edge(u, v).unwrap();
        }
        if noise_edge {
            g.add_edge(6, 0).unwrap();
        }
        StructuredInstance::new(g, [vec![0], vec![1], vec![2, 3], vec![4, 5], vec![6]], 1).unwrap()
    }

    #[test]
    fn noise_set() {
        let inst = toy(true);
        assert!(compute_noise_set(&inst, &EdgeSet::new()).is_empty());
        assert_eq!(compute_noise_set(&inst, &EdgeSet::from_pairs([(0, 6)])), vec![6]);
        assert!(compute_noise_set(&inst, &EdgeSet::from_pairs([(0, 1)])).is_empty());
    }

    #[test]
    fn structured_strategies_agree() {
        let limits = Limits::default();
        let inst = toy(true);
        let f = solve_structured(&inst, StructuredStrategy::CrossMatchings, &limits).unwrap();
        assert_eq!(f, Some(EdgeSet::from_pairs([(0, 1)])));
        assert_eq!(solve_structured(&inst, StructuredStrategy::Exhaustive, &limits).unwrap(), f);
        assert!(solve_structured(&inst, StructuredStrategy::BranchAndBound, &limits).is_err());
    }
}
