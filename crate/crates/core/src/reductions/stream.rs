use super::ReductionError;
use crate::graph::{Graph, ProperColoring};
use crate::solvers::{EmbeddingMode, InstanceError, ListInstance};

/// How many copies of each vertex of h go into one streamed instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupancyVector {
    p: Vec<usize>,
}

impl OccupancyVector {
    /// Entries must sum to `total`, the vertex count of g.
    pub fn new(p: Vec<usize>, total: usize) -> Result<Self, InstanceError> {
        let sum: usize = p.iter().sum();
        if sum != total {
            return Err(InstanceError::Assignment(format!("occupancy vector sums to {sum}, expected {total}")));
        }
        Ok(OccupancyVector { p })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.p
    }
}

/// Which occupancy vectors the stream skips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StreamPruning {
    /// Every vector summing to `|V(g)|`.
    None,
    /// Skip vectors with more copies of `v` than vertices of g whose list holds `v`.
    Caps,
    /// As `Caps`, and also skip vectors that leave some list with no copies.
    CapsAndCoverage,
}

/// One streamed isomorphism instance. Vertex `i` of the new h is copy
/// `origin[i].1` of vertex `origin[i].0` of the source h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamedInstance {
    pub p: OccupancyVector,
    pub instance: ListInstance,
    pub origin: Vec<(usize, usize)>,
}

/// Lazy sequence of isomorphism instances, one per admissible occupancy
/// vector, in lexicographic order of the vectors.
#[derive(Debug, Clone)]
pub struct LsiStream {
    source: ListInstance,
    caps: Vec<usize>,
    /// `suffix_caps[i]`: total capacity of positions `i..`.
    suffix_caps: Vec<usize>,
    /// Vertices of g whose list ends at position `i` of h.
    closing: Vec<Vec<usize>>,
    coverage: bool,
    p: Vec<usize>,
    prefix: Vec<usize>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

pub fn lsh_to_lsi_stream(inst: &ListInstance, pruning: StreamPruning) -> Result<LsiStream, ReductionError> {
    if inst.mode() != EmbeddingMode::Homomorphism {
        return Err(ReductionError::WrongMode { expected: "homomorphism" });
    }
    let total = inst.g().vertex_count();
    let m = inst.h().vertex_count();
    let caps = match pruning {
        StreamPruning::None => vec![total; m],
        _ => {
            let mut caps = vec![0; m];
            for list in inst.lists() {
                for &v in list {
                    caps[v] += 1;
                }
            }
            caps
        }
    };
    let mut suffix_caps = vec![0; m + 1];
    for i in (0..m).rev() {
        suffix_caps[i] = suffix_caps[i + 1] + caps[i];
    }
    let coverage = pruning == StreamPruning::CapsAndCoverage;
    let mut closing = vec![Vec::new(); m];
    let mut state = State::Fresh;
    for (u, list) in inst.lists().iter().enumerate() {
        match list.last() {
            Some(&v) => closing[v].push(u),
            None if coverage => state = State::Done,
            None => {}
        }
    }
    Ok(LsiStream {
        source: inst.clone(),
        caps,
        suffix_caps,
        closing,
        coverage,
        p: vec![0; m],
        prefix: vec![0; m + 1],
        state,
    })
}

/// Number of instances the stream emits.
pub fn stream_count(inst: &ListInstance, pruning: StreamPruning) -> Result<u128, ReductionError> {
    let mut stream = lsh_to_lsi_stream(inst, pruning)?;
    let mut count = 0;
    while stream.next_vector().is_some() {
        count += 1;
    }
    Ok(count)
}

impl LsiStream {
    pub fn source(&self) -> &ListInstance {
        &self.source
    }

    /// Advances to the next admissible occupancy vector without building its instance.
    pub fn next_vector(&mut self) -> Option<OccupancyVector> {
        let m = self.p.len();
        let total = self.source.g().vertex_count();
        let found = match self.state {
            State::Done => false,
            State::Fresh if m == 0 => total == 0,
            State::Fresh => self.search(0, 0),
            State::Running if m == 0 => false,
            State::Running => self.search(m - 1, self.p[m - 1] + 1),
        };
        if found {
            self.state = State::Running;
            Some(OccupancyVector { p: self.p.clone() })
        } else {
            self.state = State::Done;
            None
        }
    }

    /// Depth-first search for the next vector, resuming at position `i`
    /// with value at least `from`.
    fn search(&mut self, mut i: usize, mut from: usize) -> bool {
        let m = self.p.len();
        let total = self.source.g().vertex_count();
        loop {
            let left = total - self.prefix[i];
            let max = self.caps[i].min(left);
            let mut placed = false;
            for v in from..=max {
                if left - v > self.suffix_caps[i + 1] {
                    continue;
                }
                self.p[i] = v;
                if self.coverage && !self.closing_covered(i) {
                    continue;
                }
                placed = true;
                break;
            }
            if placed {
                if i + 1 == m {
                    return true;
                }
                self.prefix[i + 1] = self.prefix[i] + self.p[i];
                i += 1;
                from = 0;
            } else {
                self.p[i] = 0;
                if i == 0 {
                    return false;
                }
                i -= 1;
                from = self.p[i] + 1;
            }
        }
    }

    fn closing_covered(&self, i: usize) -> bool {
        self.closing[i].iter().all(|&u| self.source.list(u).iter().any(|&v| self.p[v] > 0))
    }
}

impl Iterator for LsiStream {
    type Item = StreamedInstance;

    fn next(&mut self) -> Option<StreamedInstance> {
        let p = self.next_vector()?;
        Some(instance_for(&self.source, p).expect("streamed instances satisfy the list rules"))
    }
}

/// The isomorphism instance of one occupancy vector: `P[v]` copies of each
/// `v`, copies adjacent exactly when their originals are, each copy keeping
/// its original's color, and lists holding every copy of every listed vertex.
pub fn instance_for(source: &ListInstance, p: OccupancyVector) -> Result<StreamedInstance, ReductionError> {
    let h = source.h();
    let m = h.vertex_count();
    if p.p.len() != m {
        return Err(InstanceError::Assignment(format!("occupancy vector has {} entries, h has {m}", p.p.len())).into());
    }
    let mut offset = vec![0; m + 1];
    for v in 0..m {
        offset[v + 1] = offset[v] + p.p[v];
    }
    let origin: Vec<(usize, usize)> = (0..m).flat_map(|v| (0..p.p[v]).map(move |i| (v, i))).collect();
    let mut hp = Graph::new(origin.len());
    for &(u, v) in h.edges() {
        for x in offset[u]..offset[u + 1] {
            for y in offset[v]..offset[v + 1] {
                hp.add_edge(x, y)?;
            }
        }
    }
    let c_hp = ProperColoring::new(origin.iter().map(|&(v, _)| source.c_h().color(v)).collect(), source.c_h().k())?;
    let lists = source.lists().iter().map(|list| list.iter().flat_map(|&v| offset[v]..offset[v + 1]).collect()).collect();
    let instance =
        ListInstance::new(source.g().clone(), hp, source.c_g().clone(), c_hp, lists, EmbeddingMode::Isomorphism)?;
    Ok(StreamedInstance { p, instance, origin })
}
