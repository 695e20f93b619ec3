use super::HarnessError;
use crate::graph::{Graph, ProperColoring};
use crate::reductions::cross_matching_to_structured;
use crate::solvers::{CrossMatchingInstance, EmbeddingMode, ListInstance, StructuredInstance};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `n` vertices with maximum degree at most
/// `max_degree`: a random spanning tree respecting the bound, then up to `n`
/// extra random edges that keep it. For `n >= 2` no vertex is isolated.
pub fn random_graph(n: usize, max_degree: usize, seed: u64) -> Result<Graph, HarnessError> {
    if n == 0 {
        return Err(HarnessError::InvalidParameters("a random graph needs at least one vertex".into()));
    }
    if (n >= 2 && max_degree == 0) || (n >= 3 && max_degree == 1) {
        return Err(HarnessError::InvalidParameters(format!(
            "no connected graph on {n} vertices has maximum degree {max_degree}"
        )));
    }
    let mut rng = rng(seed);
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for i in 1..n {
        // A tree on i vertices with i >= 2 has a leaf, so some earlier vertex
        // always has room when max_degree >= 2.
        let open: Vec<usize> = order[..i].iter().copied().filter(|&u| g.degree(u) < max_degree).collect();
        let u = *open.choose(&mut rng).expect("a spanning tree within the degree bound exists");
        g.add_edge(u, order[i])?;
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// A graph on `n` vertices with a random proper `k`-coloring: each pair of
/// differently colored vertices is joined with probability `p`.
fn colored_graph(colors: Vec<usize>, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<(Graph, ProperColoring), HarnessError> {
    let n = colors.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] != colors[v] && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok((g, ProperColoring::new(colors, k)?))
}

/// A random properly colored list instance with `k` colors. Half of the
/// instances get a planted solution, so both answers are common.
pub fn random_list_instance(
    n_g: usize,
    n_h: usize,
    k: usize,
    mode: EmbeddingMode,
    seed: u64,
) -> Result<ListInstance, HarnessError> {
    if k == 0 || n_h == 0 || (mode == EmbeddingMode::Isomorphism && n_g != n_h) {
        return Err(HarnessError::InvalidParameters(format!(
            "no {} list instance with |V(g)| = {n_g}, |V(h)| = {n_h}, {k} colors",
            mode.name()
        )));
    }
    let mut rng = rng(seed);
    let colors_h: Vec<usize> = (0..n_h).map(|_| rng.gen_range(1..=k)).collect();
    // The planted map sends u to planted[u], which has the same color.
    let planted: Vec<usize> = match mode {
        EmbeddingMode::Isomorphism => {
            let mut p: Vec<usize> = (0..n_h).collect();
            p.shuffle(&mut rng);
            p
        }
        EmbeddingMode::Homomorphism => (0..n_g).map(|_| rng.gen_range(0..n_h)).collect(),
    };
    let colors_g: Vec<usize> = planted.iter().map(|&v| colors_h[v]).collect();
    let plant = rng.gen_bool(0.5);
    let (g, c_g) = colored_graph(colors_g, k, 0.5, &mut rng)?;
    let (mut h, c_h) = colored_graph(colors_h, k, 0.5, &mut rng)?;
    if plant {
        for &(u, w) in g.edges() {
            let (x, y) = (planted[u], planted[w]);
            if !h.has_edge(x, y) {
                h.add_edge(x, y)?;
            }
        }
    }
    let lists = (0..n_g)
        .map(|u| {
            (0..n_h)
                .filter(|&v| c_h.color(v) == c_g.color(u) && ((plant && v == planted[u]) || rng.gen_bool(0.6)))
                .collect()
        })
        .collect();
    Ok(ListInstance::new(g, h, c_g, c_h, lists, mode)?)
}

/// A random Cross Matching instance with `|A| = |B| = n`: `A = 0..n`,
/// `B = n..2n`. Half of the instances get a planted perfect matching whose
/// contraction is complete.
pub fn random_cross_instance(n: usize, seed: u64) -> Result<CrossMatchingInstance, HarnessError> {
    if n == 0 {
        return Err(HarnessError::InvalidParameters("a cross matching instance needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    let mut l = Graph::new(2 * n);
    let density = rng.gen_range(0.3..0.7);
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            if rng.gen_bool(density) {
                l.add_edge(u, v)?;
            }
        }
    }
    if rng.gen_bool(0.5) {
        let mut partner: Vec<usize> = (n..2 * n).collect();
        partner.shuffle(&mut rng);
        let link = |l: &mut Graph, u: usize, v: usize| -> Result<(), HarnessError> {
            if !l.has_edge(u, v) {
                l.add_edge(u, v)?;
            }
            Ok(())
        };
        for i in 0..n {
            link(&mut l, i, partner[i])?;
            for j in i + 1..n {
                let pair_i = [i, partner[i]];
                let pair_j = [j, partner[j]];
                if !pair_i.iter().any(|&x| pair_j.iter().any(|&y| l.has_edge(x, y))) {
                    link(&mut l, pair_i[rng.gen_range(0..2)], pair_j[rng.gen_range(0..2)])?;
                }
            }
        }
    }
    for v in 0..n {
        l.set_tag(v, "A");
        l.set_tag(n + v, "B");
    }
    Ok(CrossMatchingInstance::new(l, (0..n).collect(), (n..2 * n).collect())?)
}

/// The structured instance built from a random Cross Matching instance.
pub fn random_structured_instance(n: usize, seed: u64) -> Result<StructuredInstance, HarnessError> {
    Ok(cross_matching_to_structured(&random_cross_instance(n, seed)?)?)
}

/// A structured instance drawn directly: parts `A = 0..n`, `B = n..2n`,
/// `C = 2n..4n`, `D = 4n..6n`, and every allowed pair an edge with one
/// density drawn per instance. Unlike the Cross Matching image, this reaches
/// sparse and edgeless cores.
pub fn random_free_structured_instance(n: usize, seed: u64) -> Result<StructuredInstance, HarnessError> {
    if n == 0 {
        return Err(HarnessError::InvalidParameters("a structured instance needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    let density: f64 = rng.gen_range(0.0..=1.0);
    let part = |v: usize| [0, 1, 2, 2, 3, 3][v / n];
    let mut g = Graph::new(6 * n);
    for u in 0..6 * n {
        for v in u + 1..6 * n {
            let forbidden = matches!((part(u), part(v)), (0, 3) | (1, 2));
            if !forbidden && rng.gen_bool(density) {
                g.add_edge(u, v)?;
            }
        }
    }
    let range = |a: usize, b: usize| (a..b).collect::<Vec<_>>();
    for (tag, vs) in [("A", range(0, n)), ("B", range(n, 2 * n)), ("C", range(2 * n, 4 * n)), ("D", range(4 * n, 6 * n))] {
        for v in vs {
            g.set_tag(v, tag);
        }
    }
    Ok(StructuredInstance::new(
        g,
        [range(0, n), range(n, 2 * n), range(2 * n, 4 * n), range(4 * n, 6 * n), Vec::new()],
        n,
    )?)
}
