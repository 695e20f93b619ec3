use super::CrossMatchingInstance;
use crate::graph::{contract, is_clique, EdgeSet, Graph};

/// Whether contracting `f` in `g` leaves a complete graph.
pub fn quotient_is_clique(g: &Graph, f: &EdgeSet) -> bool {
    match contract(g, f) {
        Ok((q, _)) => is_clique(&q, &(0..q.vertex_count()).collect::<Vec<_>>()),
        Err(_) => false,
    }
}

/// Enumerates perfect matchings between `a` and `b` made of edges of `g`,
/// pairing the vertices of `a` in ascending order with partners in ascending
/// order. With `touching`, a partial matching is abandoned as soon as two of
/// its pairs are not joined by any edge, since their contracted vertices
/// would then be non-adjacent. `visit` returns `true` to stop.
pub fn cross_perfect_matchings(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    touching: bool,
    mut visit: impl FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let mut used = vec![false; b.len()];
    let mut pairs = Vec::with_capacity(a.len());
    go(g, &a, &b, touching, &mut used, &mut pairs, &mut visit)
}

fn go(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    touching: bool,
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    let i = pairs.len();
    if i == a.len() {
        return visit(pairs);
    }
    let x = a[i];
    for (j, &y) in b.iter().enumerate() {
        if used[j] || !g.has_edge(x, y) {
            continue;
        }
        if touching
            && !pairs.iter().all(|&(p, q)| g.has_edge(x, p) || g.has_edge(x, q) || g.has_edge(y, p) || g.has_edge(y, q))
        {
            continue;
        }
        used[j] = true;
        pairs.push((x, y));
        if go(g, a, b, touching, used, pairs, visit) {
            return true;
        }
        pairs.pop();
        used[j] = false;
    }
    false
}

/// The first perfect A–B matching whose contraction is complete.
pub fn solve_cross_matching(inst: &CrossMatchingInstance) -> Option<EdgeSet> {
    let mut found = None;
    cross_perfect_matchings(inst.l(), inst.a(), inst.b(), true, |pairs| {
        let f = EdgeSet::from_pairs(pairs.iter().copied());
        if quotient_is_clique(inst.l(), &f) {
            found = Some(f);
            true
        } else {
            false
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cross_edge() {
        let inst = CrossMatchingInstance::new(Graph::complete(2), vec![0], vec![1]).unwrap();
        assert_eq!(solve_cross_matching(&inst), Some(EdgeSet::from_pairs([(0, 1)])));
        let none = CrossMatchingInstance::new(Graph::new(2), vec![0], vec![1]).unwrap();
        assert_eq!(solve_cross_matching(&none), None);
    }

    #[test]
    fn k4_any_split() {
        // Every cross perfect matching of K4 contracts to K2.
        for (a, b) in [(vec![0, 1], vec![2, 3]), (vec![0, 2], vec![1, 3]), (vec![0, 3], vec![1, 2])] {
            let inst = CrossMatchingInstance::new(Graph::complete(4), a.clone(), b.clone()).unwrap();
            let mut all = Vec::new();
            cross_perfect_matchings(inst.l(), &a, &b, false, |p| {
                all.push(EdgeSet::from_pairs(p.iter().copied()));
                false
            });
            assert_eq!(all.len(), 2);
            assert!(all.iter().all(|f| quotient_is_clique(inst.l(), f)));
            assert_eq!(solve_cross_matching(&inst).as_ref(), all.first());
        }
    }

    #[test]
    fn pruning_does_not_lose_solutions() {
        // C6 split into alternate vertices: matchings exist but pairs do not all touch.
        let g = Graph::cycle(6);
        let inst = CrossMatchingInstance::new(g.clone(), vec![0, 2, 4], vec![1, 3, 5]).unwrap();
        let mut brute = None;
        cross_perfect_matchings(&g, &[0, 2, 4], &[1, 3, 5], false, |p| {
            let f = EdgeSet::from_pairs(p.iter().copied());
            if quotient_is_clique(&g, &f) {
                brute = Some(f);
                return true;
            }
            false
        });
        assert_eq!(solve_cross_matching(&inst), brute);
        assert!(brute.is_some());
    }
}
