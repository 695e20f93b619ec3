//! Induced-subgraph scans over bitset rows. Each finder returns the vertices
//! of the first occurrence found.

use crate::graph::{Graph, VertexSet};

fn closed(g: &Graph, v: usize) -> VertexSet {
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    s
}

/// Induced path `a - b - c - d`.
pub fn find_p4(g: &Graph) -> Option<[usize; 4]> {
    for &(u, v) in g.edges() {
        for (b, c) in [(u, v), (v, u)] {
            let mut xs = g.neighbors(b).clone();
            xs.difference_with(&closed(g, c));
            let mut ys = g.neighbors(c).clone();
            ys.difference_with(&closed(g, b));
            for a in xs.ones() {
                let mut rest = ys.clone();
                rest.difference_with(g.neighbors(a));
                if let Some(d) = rest.ones().next() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Induced cycle `a - c - b - d - a`.
pub fn find_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let mut common = g.neighbors(a).clone();
            common.intersect_with(g.neighbors(b));
            for c in common.ones() {
                let mut rest = common.clone();
                rest.difference_with(&closed(g, c));
                if let Some(d) = rest.ones().next() {
                    return Some([a, c, b, d]);
                }
            }
        }
    }
    None
}

/// Two edges `{a,b}`, `{c,d}` with no edge between them.
pub fn find_2k2(g: &Graph) -> Option<[usize; 4]> {
    for &(a, b) in g.edges() {
        let mut outside = g.full_set();
        outside.difference_with(&closed(g, a));
        outside.difference_with(&closed(g, b));
        for c in outside.ones() {
            let mut rest = g.neighbors(c).clone();
            rest.intersect_with(&outside);
            if let Some(d) = rest.ones().next() {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Induced 5-cycle, listed in cycle order starting at its smallest vertex.
pub fn find_c5(g: &Graph) -> Option<[usize; 5]> {
    let n = g.vertex_count();
    for v1 in 0..n {
        let mut above = g.full_set();
        above.set_range(..v1 + 1, false);
        let mut n1 = g.neighbors(v1).clone();
        n1.intersect_with(&above);
        for v2 in n1.ones() {
            for v5 in n1.ones().filter(|&v5| v5 > v2 && !g.has_edge(v2, v5)) {
                let mut c3 = g.neighbors(v2).clone();
                c3.intersect_with(&above);
                c3.difference_with(&closed(g, v1));
                c3.difference_with(&closed(g, v5));
                let mut c4 = g.neighbors(v5).clone();
                c4.intersect_with(&above);
                c4.difference_with(&closed(g, v1));
                c4.difference_with(&closed(g, v2));
                for v3 in c3.ones() {
                    let mut hit = g.neighbors(v3).clone();
                    hit.intersect_with(&c4);
                    if let Some(v4) = hit.ones().next() {
                        return Some([v1, v2, v3, v4, v5]);
                    }
                }
            }
        }
    }
    None
}

/// Induced `K_{1,3}` as `[center, leaf, leaf, leaf]`.
pub fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for v in 0..g.vertex_count() {
        let row = g.neighbors(v);
        for a in row.ones() {
            for b in row.ones().filter(|&b| b > a && !g.has_edge(a, b)) {
                let mut rest = row.clone();
                rest.difference_with(&closed(g, a));
                rest.difference_with(&closed(g, b));
                if let Some(c) = rest.ones().next() {
                    return Some([v, a, b, c]);
                }
            }
        }
    }
    None
}

/// Repeatedly drops vertices whose remaining neighborhood is a clique or whose
/// remaining non-neighborhood is independent. Neither kind can lie on an odd
/// hole or odd antihole, so the survivors contain all of them.
pub fn strip_simplicial(g: &Graph) -> VertexSet {
    let mut alive = g.full_set();
    loop {
        let mut changed = false;
        for v in 0..g.vertex_count() {
            if !alive.contains(v) {
                continue;
            }
            let mut nb = g.neighbors(v).clone();
            nb.intersect_with(&alive);
            let mut non = alive.clone();
            non.difference_with(&nb);
            non.set(v, false);
            let simplicial = nb.ones().all(|u| nb.ones().all(|w| u == w || g.has_edge(u, w)));
            let co_simplicial = non.ones().all(|u| g.neighbors(u).is_disjoint(&non));
            if simplicial || co_simplicial {
                alive.set(v, false);
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}

/// Induced cycle of odd length at least 5 inside `within`, in cycle order.
pub fn find_odd_hole(g: &Graph, within: &VertexSet) -> Option<Vec<usize>> {
    for s in within.ones() {
        let mut allowed = within.clone();
        allowed.set_range(..s + 1, false);
        let mut first = g.neighbors(s).clone();
        first.intersect_with(&allowed);
        for p1 in first.ones() {
            let mut path = vec![s, p1];
            let blocked = VertexSet::with_capacity(g.vertex_count());
            if extend_hole(g, &allowed, &mut path, blocked) {
                return Some(path);
            }
        }
    }
    None
}

// `blocked` is the union of closed neighborhoods of path[1..len-1].
fn extend_hole(g: &Graph, allowed: &VertexSet, path: &mut Vec<usize>, blocked: VertexSet) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let k = path.len() - 1;
    let mut cand = g.neighbors(last).clone();
    cand.intersect_with(allowed);
    cand.difference_with(&blocked);
    cand.set(start, false);
    for x in cand.ones() {
        if path.contains(&x) {
            continue;
        }
        if g.has_edge(x, start) {
            let len = k + 2;
            if k >= 2 && len >= 5 && len % 2 == 1 {
                path.push(x);
                return true;
            }
            continue;
        }
        let mut next_blocked = blocked.clone();
        next_blocked.union_with(&closed(g, last));
        path.push(x);
        if extend_hole(g, allowed, path, next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complement;

    #[test]
    fn path_and_cycle_patterns() {
        assert_eq!(find_p4(&Graph::path(4)).map(|p| p.len()), Some(4));
        assert!(find_p4(&Graph::complete(5)).is_none());
        assert!(find_c4(&Graph::cycle(4)).is_some());
        assert!(find_c4(&Graph::cycle(5)).is_none());
        assert!(find_2k2(&complement(&Graph::cycle(4))).is_some());
        assert!(find_2k2(&Graph::cycle(4)).is_none());
        assert_eq!(find_c5(&Graph::cycle(5)), Some([0, 1, 2, 3, 4]));
        assert!(find_c5(&Graph::cycle(6)).is_none());
        assert!(find_claw(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()).is_some());
        assert!(find_claw(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn odd_holes() {
        let all = |g: &Graph| g.full_set();
        assert!(find_odd_hole(&Graph::cycle(5), &all(&Graph::cycle(5))).is_some());
        assert!(find_odd_hole(&Graph::cycle(6), &all(&Graph::cycle(6))).is_none());
        let c7 = Graph::cycle(7);
        assert_eq!(find_odd_hole(&c7, &all(&c7)).unwrap().len(), 7);
        let p = Graph::petersen();
        assert!(find_odd_hole(&p, &all(&p)).is_some());
    }

    #[test]
    fn stripping_keeps_holes() {
        let mut g = Graph::cycle(5);
        let first = g.add_vertices(2);
        g.add_edge(0, first).unwrap();
        g.add_edge(first, first + 1).unwrap();
        let alive = strip_simplicial(&g);
        assert_eq!(alive.ones().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        assert!(strip_simplicial(&Graph::path(6)).is_clear());
    }
}
