use super::grouping::{build_grouping_with_degree, Grouping, DEFAULT_MAX_DEGREE};
use super::ReductionError;
use crate::graph::{Graph, ProperColoring};
use crate::solvers::{EmbeddingMode, ListInstance};
use std::collections::BTreeSet;

/// Vertex `(R, l)` of the label graph: `R` has one entry in `0..=3` per
/// quotient color, `l` is a quotient color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledVertex {
    pub l: usize,
    pub r_vec: Vec<u8>,
}

impl LabeledVertex {
    /// Adjacency rule of the label graph: `R[l'] != R'[l]`.
    pub fn adjacent(&self, other: &LabeledVertex) -> bool {
        self.r_vec[other.l - 1] != other.r_vec[self.l - 1]
    }
}

/// A 3-coloring of one block that realizes a label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolorWitness {
    /// `(member, color)` pairs in member order.
    pub f: Vec<(usize, u8)>,
}

/// Homomorphism instance produced from a 3-Coloring instance, together with
/// the grouping it was built from and the label behind each vertex of h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LshReduction {
    pub instance: ListInstance,
    pub grouping: Grouping,
    pub labels: Vec<LabeledVertex>,
}

pub fn reduce_3col_to_lsh(g: &Graph, r: usize) -> Result<LshReduction, ReductionError> {
    reduce_3col_to_lsh_with_degree(g, r, DEFAULT_MAX_DEGREE)
}

/// Builds the label graph only on labels that occur in some list, with the
/// label color `l` as its coloring and the quotient coloring on the g side.
pub fn reduce_3col_to_lsh_with_degree(g: &Graph, r: usize, d: usize) -> Result<LshReduction, ReductionError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(ReductionError::IsolatedVertex(v));
    }
    let grouping = build_grouping_with_degree(g, r, d)?;
    let block_labels: Vec<BTreeSet<LabeledVertex>> =
        (0..grouping.blocks().len()).map(|b| labels_of_block(&grouping, b)).collect();
    let labels: Vec<LabeledVertex> = block_labels.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();

    let mut h = Graph::new(labels.len());
    for (i, x) in labels.iter().enumerate() {
        for (j, y) in labels.iter().enumerate().skip(i + 1) {
            if x.adjacent(y) {
                h.add_edge(i, j)?;
            }
        }
    }
    let lists = block_labels
        .iter()
        .map(|set| set.iter().map(|x| labels.binary_search(x).expect("label is in the union")).collect())
        .collect();
    let c_h = ProperColoring::new(labels.iter().map(|x| x.l).collect(), grouping.l())?;
    let instance = ListInstance::new(
        grouping.quotient().clone(),
        h,
        grouping.coloring().clone(),
        c_h,
        lists,
        EmbeddingMode::Homomorphism,
    )?;
    Ok(LshReduction { instance, grouping, labels })
}

fn labels_of_block(gr: &Grouping, b: usize) -> BTreeSet<LabeledVertex> {
    let members = &gr.blocks().blocks()[b];
    let l = gr.coloring().color(b);
    let mut out = BTreeSet::new();
    for_each_recoloring(members, |f| {
        let r_vec = (1..=gr.l())
            .map(|i| gr.phi(b, i).map_or(0, |u| f[members.binary_search(&u).expect("phi picks a member")]))
            .collect();
        out.insert(LabeledVertex { l, r_vec });
        false
    });
    out
}

/// Runs `visit` on every map from `members` to `{1, 2, 3}`, given as a color
/// per member position; stops when `visit` returns `true`.
fn for_each_recoloring(members: &[usize], mut visit: impl FnMut(&[u8]) -> bool) -> bool {
    let mut f = vec![1u8; members.len()];
    loop {
        if visit(&f) {
            return true;
        }
        let Some(i) = f.iter().position(|&c| c < 3) else { return false };
        f[..i].fill(1);
        f[i] += 1;
    }
}

/// Searches for a recoloring of block `b` that realizes `label`, directly
/// from the label rule.
pub fn recolor_witness(gr: &Grouping, b: usize, label: &LabeledVertex) -> Option<RecolorWitness> {
    let members = &gr.blocks().blocks()[b];
    if gr.coloring().color(b) != label.l || label.r_vec.len() != gr.l() {
        return None;
    }
    let mut found = None;
    for_each_recoloring(members, |f| {
        let color_of = |u: usize| f[members.iter().position(|&m| m == u).expect("member")];
        let ok = (1..=gr.l()).all(|i| match gr.phi(b, i) {
            None => label.r_vec[i - 1] == 0,
            Some(u) => label.r_vec[i - 1] == color_of(u),
        });
        if ok {
            found = Some(RecolorWitness { f: members.iter().copied().zip(f.iter().copied()).collect() });
        }
        ok
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{solve_3coloring, solve_list_embedding};

    #[test]
    fn k2_has_three_labels_per_block() {
        let red = reduce_3col_to_lsh(&Graph::complete(2), 1).unwrap();
        assert_eq!(red.instance.list(0).len(), 3);
        assert_eq!(red.instance.list(1).len(), 3);
        assert!(red.instance.h().vertex_count() <= 6);
        for (b, list) in red.instance.lists().iter().enumerate() {
            for &x in list {
                let label = &red.labels[x];
                // Singleton blocks: every non-zero entry carries the single f value.
                let nonzero: BTreeSet<u8> = label.r_vec.iter().copied().filter(|&c| c != 0).collect();
                assert_eq!(nonzero.len(), 1);
                let w = recolor_witness(&red.grouping, b, label).unwrap();
                assert_eq!(w.f, vec![(b, *nonzero.iter().next().unwrap())]);
            }
        }
    }

    #[test]
    fn label_graph_edges_follow_the_rule() {
        let red = reduce_3col_to_lsh(&Graph::cycle(5), 1).unwrap();
        let h = red.instance.h();
        for i in 0..h.vertex_count() {
            for j in 0..h.vertex_count() {
                if i != j {
                    let (x, y) = (&red.labels[i], &red.labels[j]);
                    assert_eq!(h.has_edge(i, j), x.r_vec[y.l - 1] != y.r_vec[x.l - 1]);
                }
            }
        }
    }

    #[test]
    fn decision_matches_3coloring() {
        for g in [Graph::complete(3), Graph::cycle(5), Graph::complete(4), Graph::petersen()] {
            let red = reduce_3col_to_lsh(&g, 1).unwrap();
            assert_eq!(solve_list_embedding(&red.instance).is_some(), solve_3coloring(&g).is_some());
        }
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let mut g = Graph::complete(2);
        g.add_vertices(1);
        assert_eq!(reduce_3col_to_lsh(&g, 1).unwrap_err(), ReductionError::IsolatedVertex(2));
    }

    #[test]
    fn r1_keeps_the_vertex_count() {
        let red = reduce_3col_to_lsh(&Graph::cycle(6), 1).unwrap();
        assert_eq!(red.instance.g().vertex_count(), 6);
        assert!(red.instance.h().vertex_count() <= 18);
    }
}
