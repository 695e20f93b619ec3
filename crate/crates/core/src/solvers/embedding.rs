use super::{Assignment, EmbeddingMode, ListInstance};
use crate::graph::VertexSet;

/// Checks edge preservation, list membership and, in isomorphism mode,
/// bijectivity of `map` against `inst`.
pub fn check_assignment(inst: &ListInstance, map: &[usize]) -> bool {
    let (g, h) = (inst.g(), inst.h());
    if map.len() != g.vertex_count() {
        return false;
    }
    if (0..map.len()).any(|u| inst.list(u).binary_search(&map[u]).is_err()) {
        return false;
    }
    if !g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
        return false;
    }
    if inst.mode() == EmbeddingMode::Isomorphism {
        let mut seen = vec![false; h.vertex_count()];
        return map.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
    }
    true
}

/// The lexicographically first list-respecting edge-preserving map, injective
/// (hence bijective) in isomorphism mode.
pub fn solve_list_embedding(inst: &ListInstance) -> Option<Assignment> {
    let (g, h) = (inst.g(), inst.h());
    let n = g.vertex_count();
    let iso = inst.mode() == EmbeddingMode::Isomorphism;
    let domains: Vec<VertexSet> = (0..n).map(|u| h.set_of(inst.list(u))).collect();
    let mut map = vec![usize::MAX; n];

    fn go(inst: &ListInstance, iso: bool, u: usize, domains: &mut Vec<VertexSet>, map: &mut Vec<usize>) -> bool {
        let (g, h) = (inst.g(), inst.h());
        if u == map.len() {
            return true;
        }
        let candidates: Vec<usize> = domains[u].ones().collect();
        for v in candidates {
            let saved = domains.clone();
            let mut dead = false;
            for w in u + 1..map.len() {
                if g.has_edge(u, w) {
                    domains[w].intersect_with(h.neighbors(v));
                }
                if iso {
                    domains[w].set(v, false);
                }
                dead |= domains[w].is_clear();
            }
            map[u] = v;
            if !dead && go(inst, iso, u + 1, domains, map) {
                return true;
            }
            *domains = saved;
        }
        map[u] = usize::MAX;
        false
    }

    let mut domains = domains;
    if domains.iter().any(VertexSet::is_clear) {
        return None;
    }
    go(inst, iso, 0, &mut domains, &mut map)
        .then(|| Assignment::new(map, iso, h.vertex_count()).expect("injective map between equal-size sets"))
}
