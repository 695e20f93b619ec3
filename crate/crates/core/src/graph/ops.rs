use super::{EdgeSet, Graph, GraphError, Partition, ProperColoring, VertexSet};
use fixedbitset::FixedBitSet;

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n);
    for v in 0..n {
        let mut row = g.neighbors(v).clone();
        row.toggle_range(..);
        row.set(v, false);
        rows.push(row);
    }
    let mut out = Graph::from_rows(rows);
    copy_tags(g, &mut out, |v| v);
    out
}

/// Subgraph induced by `s`, re-indexed densely in ascending id order.
/// Returns the graph and, for each new vertex, its old id.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut keep: Vec<usize> = s.to_vec();
    keep.sort_unstable();
    keep.dedup();
    for &v in &keep {
        g.check_vertex(v)?;
    }
    let mut out = Graph::new(keep.len());
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                out.link(i, j);
            }
        }
    }
    copy_tags(g, &mut out, |i| keep[i]);
    Ok((out, keep))
}

/// Contracts every connected component of the subgraph spanned by `f` into a
/// single vertex. New ids follow the order of each component's smallest old
/// vertex; the returned map sends every old vertex to its new id.
pub fn contract(g: &Graph, f: &EdgeSet) -> Result<(Graph, Vec<usize>), GraphError> {
    f.check_in(g)?;
    let (labels, k) = component_labels(g.vertex_count(), f.iter());
    Ok((quotient(g, &labels, k), labels))
}

/// Graph on block ids `0..k` where two blocks are adjacent iff some edge of
/// `g` joins them. Each block keeps the tag of its smallest member.
pub fn quotient(g: &Graph, labels: &[usize], k: usize) -> Graph {
    let mut rows: Vec<VertexSet> = (0..k).map(|_| FixedBitSet::with_capacity(k)).collect();
    for &(u, v) in g.edges() {
        let (a, b) = (labels[u], labels[v]);
        if a != b {
            rows[a].insert(b);
            rows[b].insert(a);
        }
    }
    let mut out = Graph::from_rows(rows);
    if g.has_tags() {
        for v in (0..g.vertex_count()).rev() {
            match g.tag(v) {
                Some(t) => out.set_tag(labels[v], t),
                None => out.clear_tag(labels[v]),
            }
        }
    }
    out
}

/// Union-find over `0..n` joined along `pairs`; labels are dense and ordered
/// by smallest member.
pub(crate) fn component_labels(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in pairs {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut out = vec![0; n];
    let mut k = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = k;
            k += 1;
        }
        out[v] = label[r];
    }
    (out, k)
}

pub fn square(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n);
    for v in 0..n {
        let mut row = g.neighbors(v).clone();
        for w in g.neighbors(v).ones() {
            row.union_with(g.neighbors(w));
        }
        row.set(v, false);
        rows.push(row);
    }
    let mut out = Graph::from_rows(rows);
    copy_tags(g, &mut out, |v| v);
    out
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Partition {
    let (labels, _) = component_labels(g.vertex_count(), g.edges().iter().copied());
    Partition::from_labels(&labels)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// First-fit coloring along `order`; uses at most `max_degree + 1` colors.
pub fn greedy_proper_coloring(g: &Graph, order: &[usize]) -> ProperColoring {
    let n = g.vertex_count();
    assert_eq!(order.len(), n, "order must be a permutation of the vertices");
    let mut colors = vec![0usize; n];
    let mut k = 0;
    for &v in order {
        let mut taken = vec![false; g.degree(v) + 2];
        for w in g.neighbors(v).ones() {
            if colors[w] < taken.len() {
                taken[colors[w]] = true;
            }
        }
        let c = (1..taken.len()).find(|&c| !taken[c]).expect("a free color always exists");
        colors[v] = c;
        k = k.max(c);
    }
    ProperColoring::new(colors, k).expect("first-fit colors are in range")
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while let Some(v) = cand.minimum() {
            if size + cand.count_ones(..) <= *best {
                return;
            }
            cand.set(v, false);
            let mut next = cand.clone();
            next.intersect_with(g.neighbors(v));
            expand(g, size + 1, next, best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.full_set(), &mut best);
    best
}

/// Exact chromatic number by trying `k = ω, ω+1, …` with backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut k = clique_number(g).max(1);
    while k_colorable(g, k).is_none() {
        k += 1;
    }
    k
}

/// A proper coloring with colors `1..=k` if one exists.
///
/// Vertices are colored in saturation order and a new color is only opened
/// once all smaller ones are in use, which removes color-permutation symmetry.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0usize; n];
    fn pick(g: &Graph, colors: &[usize]) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..colors.len() {
            if colors[v] != 0 {
                continue;
            }
            let mut mask = 0u64;
            for w in g.neighbors(v).ones() {
                if colors[w] != 0 {
                    mask |= 1 << (colors[w].min(63));
                }
            }
            let key = (mask.count_ones() as usize, g.degree(v), v);
            if best.map_or(true, |b| (key.0, key.1) > (b.0, b.1)) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }
    fn go(g: &Graph, k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        let Some(v) = pick(g, colors) else { return true };
        for c in 1..=k.min(used + 1) {
            if g.neighbors(v).ones().all(|w| colors[w] != c) {
                colors[v] = c;
                if go(g, k, colors, used.max(c)) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    go(g, k, &mut colors, 0).then_some(colors)
}

fn copy_tags(from: &Graph, to: &mut Graph, old_of: impl Fn(usize) -> usize) {
    if !from.has_tags() {
        return;
    }
    for v in 0..to.vertex_count() {
        if let Some(t) = from.tag(old_of(v)) {
            to.set_tag(v, t);
        }
    }
}
