use super::ReductionError;
use crate::graph::{greedy_proper_coloring, quotient, square, Graph, Partition, ProperColoring};

/// Degree bound of the 3-Coloring source graphs.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// Partition of a graph into blocks, the quotient over the blocks, and a
/// coloring of the quotient that is proper on its square.
///
/// Only `r = 1` is built here: every block is a single vertex and the
/// coloring is first-fit on the square in vertex order, with `L = d² + 1`
/// colors available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grouping {
    blocks: Partition,
    quotient: Graph,
    coloring: ProperColoring,
    l: usize,
    r: usize,
    /// `phi[b][i - 1]`: the member of block `b` with a neighbor in a block of color `i`.
    phi: Vec<Vec<Option<usize>>>,
}

pub fn build_grouping(g: &Graph, r: usize) -> Result<Grouping, ReductionError> {
    build_grouping_with_degree(g, r, DEFAULT_MAX_DEGREE)
}

pub fn build_grouping_with_degree(g: &Graph, r: usize, d: usize) -> Result<Grouping, ReductionError> {
    if r != 1 {
        return Err(ReductionError::UnsupportedR(r));
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > d) {
        return Err(ReductionError::DegreeTooHigh { vertex: v, degree: g.degree(v), limit: d });
    }
    let n = g.vertex_count();
    let labels: Vec<usize> = (0..n).collect();
    let blocks = Partition::from_labels(&labels);
    let q = quotient(g, &labels, n);
    let order: Vec<usize> = (0..n).collect();
    let greedy = greedy_proper_coloring(&square(&q), &order);
    let l = d * d + 1;
    let coloring = ProperColoring::new(greedy.colors().to_vec(), l).map_err(|e| ReductionError::Grouping(e.to_string()))?;
    let phi = compute_phi(g, &blocks, &coloring, l);
    let grouping = Grouping { blocks, quotient: q, coloring, l, r, phi };
    grouping.check(g)?;
    Ok(grouping)
}

fn compute_phi(g: &Graph, blocks: &Partition, coloring: &ProperColoring, l: usize) -> Vec<Vec<Option<usize>>> {
    let block_of = block_labels(blocks, g.vertex_count());
    blocks
        .blocks()
        .iter()
        .map(|block| {
            (1..=l)
                .map(|i| {
                    block.iter().copied().find(|&u| g.neighbors(u).ones().any(|w| coloring.color(block_of[w]) == i))
                })
                .collect()
        })
        .collect()
}

fn block_labels(blocks: &Partition, n: usize) -> Vec<usize> {
    blocks.labels(n).into_iter().map(|b| b.expect("blocks cover the graph")).collect()
}

impl Grouping {
    pub fn blocks(&self) -> &Partition {
        &self.blocks
    }

    pub fn quotient(&self) -> &Graph {
        &self.quotient
    }

    pub fn coloring(&self) -> &ProperColoring {
        &self.coloring
    }

    /// Number of colors available to the quotient coloring.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The member of block `b` adjacent to a block of color `i` (1-based), if any.
    pub fn phi(&self, b: usize, i: usize) -> Option<usize> {
        self.phi[b][i - 1]
    }

    /// Re-checks the grouping against `g`: block count, coloring of the
    /// square, independent blocks, one witnessing pair per quotient edge,
    /// and the `phi` table.
    pub fn check(&self, g: &Graph) -> Result<(), ReductionError> {
        let fail = |msg: String| Err(ReductionError::Grouping(msg));
        let n = g.vertex_count();
        let t = self.blocks.len();
        if t * self.r > n {
            return fail(format!("{t} blocks for {n} vertices at r = {}", self.r));
        }
        if self.quotient.vertex_count() != t || self.coloring.len() != t || self.coloring.k() != self.l {
            return fail("quotient, coloring and blocks disagree in size".into());
        }
        if Partition::new(self.blocks.blocks().to_vec(), &(0..n).collect::<Vec<_>>()).is_err() {
            return fail("blocks do not partition the vertices".into());
        }
        if !self.coloring.is_proper_on(&square(&self.quotient)) {
            return fail("coloring is not proper on the square of the quotient".into());
        }
        let block_of = block_labels(&self.blocks, n);
        for (b, block) in self.blocks.blocks().iter().enumerate() {
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| block.contains(&u) && block.contains(&v)) {
                return fail(format!("block {b} contains the edge {{{u}, {v}}}"));
            }
        }
        for i in 0..t {
            for j in i + 1..t {
                let pairs = g.edges().iter().filter(|&&(u, v)| {
                    let (bu, bv) = (block_of[u], block_of[v]);
                    (bu, bv) == (i, j) || (bu, bv) == (j, i)
                });
                let count = pairs.count();
                if self.quotient.has_edge(i, j) != (count > 0) {
                    return fail(format!("quotient adjacency of blocks {i} and {j} does not match the graph"));
                }
                if count > 1 {
                    return fail(format!("blocks {i} and {j} are joined by {count} edges"));
                }
            }
        }
        for (b, block) in self.blocks.blocks().iter().enumerate() {
            for i in 1..=self.l {
                let touching: Vec<usize> = block
                    .iter()
                    .copied()
                    .filter(|&u| g.neighbors(u).ones().any(|w| self.coloring.color(block_of[w]) == i))
                    .collect();
                let expected = match touching.as_slice() {
                    [] => None,
                    [u] => Some(*u),
                    _ => return fail(format!("block {b} has several members next to color {i}")),
                };
                if self.phi(b, i) != expected {
                    return fail(format!("phi of block {b} at color {i} is {:?}, expected {expected:?}", self.phi(b, i)));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_gets_two_colors() {
        let gr = build_grouping(&Graph::complete(2), 1).unwrap();
        assert_eq!(gr.blocks().len(), 2);
        assert_eq!(gr.quotient().edge_count(), 1);
        assert_eq!(gr.coloring().colors(), &[1, 2]);
        assert_eq!(gr.l(), 17);
        assert_eq!(gr.phi(0, 2), Some(0));
        assert_eq!(gr.phi(0, 1), None);
    }

    #[test]
    fn edgeless_needs_one_color() {
        let gr = build_grouping(&Graph::new(3), 1).unwrap();
        assert_eq!(gr.coloring().used(), 1);
        assert_eq!(gr.quotient().edge_count(), 0);
    }

    #[test]
    fn c4_square_is_k4() {
        let gr = build_grouping(&Graph::cycle(4), 1).unwrap();
        assert_eq!(gr.coloring().used(), 4);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(build_grouping(&Graph::complete(2), 2), Err(ReductionError::UnsupportedR(2)));
        assert!(matches!(
            build_grouping(&Graph::complete(6), 1),
            Err(ReductionError::DegreeTooHigh { vertex: 0, degree: 5, limit: 4 })
        ));
    }

    #[test]
    fn check_catches_a_bad_coloring() {
        let g = Graph::path(3);
        let mut gr = build_grouping(&g, 1).unwrap();
        gr.coloring = ProperColoring::new(vec![1, 2, 1], 17).unwrap();
        assert!(gr.check(&g).is_err());
    }
}
