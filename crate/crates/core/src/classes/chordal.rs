use crate::graph::Graph;

/// Lexicographic breadth-first search order by partition refinement.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut sets: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let mut order = Vec::with_capacity(n);
    while !sets.is_empty() {
        let v = sets[0].remove(0);
        if sets[0].is_empty() {
            sets.remove(0);
        }
        order.push(v);
        let row = g.neighbors(v);
        let mut refined = Vec::with_capacity(sets.len() * 2);
        for set in sets.drain(..) {
            let (inside, outside): (Vec<usize>, Vec<usize>) = set.into_iter().partition(|&w| row.contains(w));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        sets = refined;
    }
    order
}

/// Checks whether `peo` is a perfect elimination ordering: for every vertex,
/// its neighbors appearing later form a clique. Returns the first offending
/// vertex on failure.
pub fn check_peo(g: &Graph, peo: &[usize]) -> Result<(), usize> {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g.neighbors(v).ones().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return Err(v);
        }
    }
    Ok(())
}

/// A perfect elimination ordering if `g` is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    check_peo(g, &peo).ok().map(|_| peo)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Three pairwise non-adjacent vertices such that each pair is joined by a
/// path avoiding the closed neighborhood of the third.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    const NONE: usize = usize::MAX;
    let n = g.vertex_count();
    // comp[z][x]: component of x in G - N[z], NONE when x is in N[z].
    let mut comp = vec![vec![NONE; n]; n];
    for z in 0..n {
        let labels = &mut comp[z];
        let mut next = 0;
        for start in 0..n {
            if start == z || g.has_edge(z, start) || labels[start] != NONE {
                continue;
            }
            labels[start] = next;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in g.neighbors(u).ones() {
                    if w != z && !g.has_edge(z, w) && labels[w] == NONE {
                        labels[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if comp[z][x] == comp[z][y] && comp[x][y] == comp[x][z] && comp[y][x] == comp[y][z] {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}
