use super::ReductionError;
use crate::graph::{complement, Graph};
use crate::solvers::{CrossMatchingInstance, EmbeddingMode, ListInstance};

/// Builds `L`: the complement of g on `A = 0..n`, h on `B = n..2n`, and an
/// edge `u – (n + v)` for every `v` in the list of `u`.
pub fn lsi_to_cross_matching(inst: &ListInstance) -> Result<CrossMatchingInstance, ReductionError> {
    if inst.mode() != EmbeddingMode::Isomorphism {
        return Err(ReductionError::WrongMode { expected: "isomorphism" });
    }
    let n = inst.g().vertex_count();
    let mut l = Graph::new(2 * n);
    for &(u, v) in complement(inst.g()).edges() {
        l.add_edge(u, v)?;
    }
    for &(u, v) in inst.h().edges() {
        l.add_edge(n + u, n + v)?;
    }
    for (u, list) in inst.lists().iter().enumerate() {
        for &v in list {
            l.add_edge(u, n + v)?;
        }
    }
    for v in 0..n {
        l.set_tag(v, "A");
        l.set_tag(n + v, "B");
    }
    Ok(CrossMatchingInstance::new(l, (0..n).collect(), (n..2 * n).collect())?)
}

/// A violation of the structural claim: `{x, y}` is an edge of g, `y'` is in
/// the list of `y`, and yet `x` is joined to `y'` in L.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimViolation {
    pub x: usize,
    pub y: usize,
    pub y_prime: usize,
}

/// For every edge `{x, y}` of g and list entries `x'` of `x`, `y'` of `y`,
/// checks that L has neither `{x, y'}` nor `{y, x'}`.
pub fn check_cross_claim(source: &ListInstance, target: &CrossMatchingInstance) -> Result<(), ClaimViolation> {
    let n = source.g().vertex_count();
    let l = target.l();
    for &(x, y) in source.g().edges() {
        for (p, q) in [(x, y), (y, x)] {
            if let Some(&v) = source.list(q).iter().find(|&&v| l.has_edge(p, n + v)) {
                return Err(ClaimViolation { x: p, y: q, y_prime: v });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ProperColoring;
    use crate::solvers::{solve_cross_matching, solve_list_embedding};

    fn k2_instance() -> ListInstance {
        let c = ProperColoring::new(vec![1, 2], 2).unwrap();
        let g = Graph::complete(2);
        ListInstance::new(g.clone(), g, c.clone(), c, vec![vec![0], vec![1]], EmbeddingMode::Isomorphism).unwrap()
    }

    #[test]
    fn sides_have_n_vertices() {
        let x = lsi_to_cross_matching(&k2_instance()).unwrap();
        assert_eq!((x.a().len(), x.b().len()), (2, 2));
        assert_eq!(x.l().vertex_count(), 4);
        assert!(check_cross_claim(&k2_instance(), &x).is_ok());
    }

    #[test]
    fn k2_matchings_are_the_color_preserving_bijections() {
        let inst = k2_instance();
        let x = lsi_to_cross_matching(&inst).unwrap();
        let m = solve_cross_matching(&x).unwrap();
        assert_eq!(m.as_slice(), &[(0, 2), (1, 3)]);
        assert_eq!(solve_list_embedding(&inst).unwrap().as_slice(), &[0, 1]);
    }

    #[test]
    fn empty_list_gives_a_no_instance() {
        let g = Graph::complete(2);
        let c = ProperColoring::new(vec![1, 2], 2).unwrap();
        let inst = ListInstance::new(g.clone(), g, c.clone(), c, vec![vec![0], vec![]], EmbeddingMode::Isomorphism).unwrap();
        assert!(solve_cross_matching(&lsi_to_cross_matching(&inst).unwrap()).is_none());
    }

    #[test]
    fn claim_check_detects_a_planted_edge() {
        let inst = k2_instance();
        let x = lsi_to_cross_matching(&inst).unwrap();
        let mut l = x.l().clone();
        l.add_edge(0, 3).unwrap();
        let bad = CrossMatchingInstance::new(l, x.a().to_vec(), x.b().to_vec()).unwrap();
        assert_eq!(check_cross_claim(&inst, &bad), Err(ClaimViolation { x: 0, y: 1, y_prime: 1 }));
    }

    #[test]
    fn hom_input_is_rejected() {
        let g = Graph::complete(2);
        let c = ProperColoring::new(vec![1, 2], 2).unwrap();
        let inst = ListInstance::new(g.clone(), g, c.clone(), c, vec![vec![0], vec![1]], EmbeddingMode::Homomorphism).unwrap();
        assert!(lsi_to_cross_matching(&inst).is_err());
    }
}
