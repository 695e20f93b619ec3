//! Clique minors. `solve_hadwiger` enumerates vertex partitions and is the
//! reference; `hadwiger_at_least` and `contract_to_clique` are branch and
//! bound searches over deletions and contractions for larger graphs.

use super::{Limits, SolverError};
use crate::graph::{connected_components, induced_subgraph, EdgeSet, Graph, Partition};
use std::collections::HashSet;

/// Hadwiger number by enumerating partitions of each component into
/// connected, pairwise adjacent blocks.
pub fn solve_hadwiger(g: &Graph, limits: &Limits) -> Result<usize, SolverError> {
    hadwiger_model(g, limits).map(|(h, _)| h)
}

/// Hadwiger number with the branch sets of one largest clique minor. The
/// branch sets cover the component they live in.
pub fn hadwiger_model(g: &Graph, limits: &Limits) -> Result<(usize, Partition), SolverError> {
    let comps = connected_components(g);
    if let Some(big) = comps.blocks().iter().map(Vec::len).max().filter(|&s| s > limits.partition_vertices) {
        return Err(SolverError::GuardExceeded {
            what: "component for partition enumeration",
            limit: limits.partition_vertices as u128,
            got: big as u128,
        });
    }
    let mut best: (usize, Vec<Vec<usize>>) = (0, Vec::new());
    for block in comps.blocks() {
        let (sub, ids) = induced_subgraph(g, block).expect("ids in range");
        let k = sub.vertex_count();
        let m = sub.edge_count();
        let upper = (1..=k).take_while(|&h| h * (h - 1) / 2 <= m).last().unwrap_or(0);
        for h in (best.0 + 1..=upper).rev() {
            if let Some(labels) = partition_into(&sub, h) {
                let mut sets = vec![Vec::new(); h];
                for (v, &l) in labels.iter().enumerate() {
                    sets[l].push(ids[v]);
                }
                best = (h, sets);
                break;
            }
        }
    }
    let ground: Vec<usize> = best.1.iter().flatten().copied().collect();
    let model = Partition::new(best.1, &ground).expect("branch sets are disjoint and non-empty");
    Ok((best.0, model))
}

/// First restricted-growth labeling of `g` into exactly `h` connected,
/// pairwise adjacent blocks.
fn partition_into(g: &Graph, h: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut labels = vec![0usize; n];
    fn valid(g: &Graph, labels: &[usize], h: usize) -> bool {
        let mut touching = vec![vec![false; h]; h];
        for &(u, v) in g.edges() {
            touching[labels[u]][labels[v]] = true;
            touching[labels[v]][labels[u]] = true;
        }
        if !(0..h).all(|i| (0..h).all(|j| i == j || touching[i][j])) {
            return false;
        }
        (0..h).all(|b| {
            let members: Vec<usize> = (0..labels.len()).filter(|&v| labels[v] == b).collect();
            let (sub, _) = induced_subgraph(g, &members).expect("ids in range");
            crate::graph::is_connected(&sub)
        })
    }
    fn go(g: &Graph, i: usize, used: usize, h: usize, labels: &mut [usize]) -> bool {
        let n = labels.len();
        if used + (n - i) < h {
            return false;
        }
        if i == n {
            return used == h && valid(g, labels, h);
        }
        for b in 0..(used + 1).min(h) {
            labels[i] = b;
            if go(g, i + 1, used.max(b + 1), h, labels) {
                return true;
            }
        }
        false
    }
    go(g, 0, 0, h, &mut labels).then_some(labels)
}

const MEMO_CAP: usize = 1 << 21;

#[derive(Clone)]
struct State {
    rows: Vec<u128>,
    alive: u128,
    frozen: u128,
    sets: Vec<Vec<usize>>,
}

impl State {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        assert!(n <= 128, "branch and bound handles at most 128 vertices");
        let rows = (0..n).map(|v| g.neighbors(v).ones().fold(0u128, |r, w| r | 1 << w)).collect();
        let alive = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        State { rows, alive, frozen: 0, sets: (0..n).map(|v| vec![v]).collect() }
    }

    fn count(&self) -> usize {
        self.alive.count_ones() as usize
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn members(&self, mask: u128) -> impl Iterator<Item = usize> {
        let mut rest = mask;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                v
            })
        })
    }

    fn is_complete(&self) -> bool {
        let c = self.count();
        self.members(self.alive).all(|v| self.degree(v) + 1 == c)
    }

    fn delete(&mut self, v: usize) {
        for w in self.members(self.rows[v]).collect::<Vec<_>>() {
            self.rows[w] &= !(1 << v);
        }
        self.rows[v] = 0;
        self.alive &= !(1 << v);
    }

    /// Merges the endpoints of an edge into the smaller id.
    fn contract(&mut self, v: usize, w: usize) -> (usize, usize) {
        let (keep, gone) = if v < w { (v, w) } else { (w, v) };
        let merged = (self.rows[keep] | self.rows[gone]) & !(1 << keep | 1 << gone);
        self.delete(gone);
        for x in self.members(merged) {
            self.rows[x] |= 1 << keep;
        }
        self.rows[keep] = merged;
        let moved = std::mem::take(&mut self.sets[gone]);
        self.sets[keep].extend(moved);
        (keep, gone)
    }

    fn key(&self) -> Vec<u128> {
        let mut k = vec![self.alive, self.frozen];
        k.extend(self.members(self.alive).map(|v| self.rows[v]));
        k
    }
}

struct Search<'a> {
    g: &'a Graph,
    allow_delete: bool,
    failed: HashSet<Vec<u128>>,
    contracted: Vec<(usize, usize)>,
}

impl Search<'_> {
    /// `budget` operations remain; the final graph must have at least
    /// `count - budget` vertices and be complete.
    fn run(&mut self, s: &State, budget: usize) -> bool {
        let count = s.count();
        if s.is_complete() && (!self.allow_delete || budget <= count) {
            return true;
        }
        if budget == 0 || count == 0 {
            return false;
        }
        let target = count - budget.min(count);
        let edges: usize = s.members(s.alive).map(|v| s.degree(v)).sum::<usize>() / 2;
        if edges < target * target.saturating_sub(1) / 2 {
            return false;
        }
        let need = target.saturating_sub(1);
        let deficient: Vec<usize> = s.members(s.alive).filter(|&v| s.degree(v) < need).collect();
        if deficient.iter().any(|&v| s.frozen >> v & 1 == 1) || deficient.len() > 2 * budget {
            return false;
        }
        let key = s.key();
        if self.failed.contains(&key) {
            return false;
        }
        let free = s.alive & !s.frozen;
        let pick = match deficient.iter().min_by_key(|&&v| (s.degree(v), v)) {
            Some(&v) => Some(v),
            None => s.members(free).filter(|&v| s.degree(v) + 1 < count).min_by_key(|&v| (s.degree(v), v)),
        };
        let ok = match pick {
            None => false,
            Some(v) => self.branch(s, v, budget, deficient.contains(&v)),
        };
        if !ok && self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        ok
    }

    fn branch(&mut self, s: &State, v: usize, budget: usize, deficient: bool) -> bool {
        let free = s.alive & !s.frozen;
        let mut order: Vec<usize> = s.members(s.rows[v] & free).collect();
        order.sort_by_key(|&w| (std::cmp::Reverse(s.degree(w)), w));
        for w in order {
            let mut next = s.clone();
            let edge = self.witness_edge(&s.sets[v], &s.sets[w]);
            next.contract(v, w);
            self.contracted.push(edge);
            if self.run(&next, budget - 1) {
                return true;
            }
            self.contracted.pop();
        }
        if !deficient && s.rows[v] & s.frozen == s.frozen & !(1 << v) {
            let mut next = s.clone();
            next.frozen |= 1 << v;
            if self.run(&next, budget) {
                return true;
            }
        }
        if self.allow_delete {
            let mut next = s.clone();
            next.delete(v);
            if self.run(&next, budget - 1) {
                return true;
            }
        }
        false
    }

    fn witness_edge(&self, x: &[usize], y: &[usize]) -> (usize, usize) {
        let mut best = None;
        for &u in x {
            for &v in y {
                if self.g.has_edge(u, v) {
                    let e = (u.min(v), u.max(v));
                    best = Some(best.map_or(e, |b: (usize, usize)| b.min(e)));
                }
            }
        }
        best.expect("contracted branch sets are adjacent")
    }
}

/// Whether `g` has `K_h` as a minor.
pub fn hadwiger_at_least(g: &Graph, h: usize) -> bool {
    let n = g.vertex_count();
    if h == 0 {
        return true;
    }
    if h > n {
        return false;
    }
    let mut search = Search { g, allow_delete: true, failed: HashSet::new(), contracted: Vec::new() };
    search.run(&State::new(g), n - h)
}

/// A set of at most `t` edges whose contraction is complete, found by branch
/// and bound over contractions. The witness is not necessarily the
/// lexicographically first one.
pub fn contract_to_clique(g: &Graph, t: usize) -> Option<EdgeSet> {
    let mut search = Search { g, allow_delete: false, failed: HashSet::new(), contracted: Vec::new() };
    search.run(&State::new(g), t.min(g.vertex_count())).then(|| EdgeSet::from_pairs(search.contracted))
}
