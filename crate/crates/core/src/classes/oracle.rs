//! Definition-level membership tests over vertex subsets. Exponential; only
//! used to cross-check the recognizers on small graphs.

use super::ClassId;
use crate::graph::{chromatic_number, clique_number, induced_subgraph, Graph};
use std::collections::HashSet;
use thiserror::Error;

/// Largest graph accepted by the definitional oracles.
pub const ORACLE_MAX_VERTICES: usize = 12;
/// Largest graph accepted by the χ = ω check over every induced subgraph.
pub const PERFECT_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle for {class} accepts at most {limit} vertices, got {got}")]
pub struct OracleError {
    pub class: ClassId,
    pub limit: usize,
    pub got: usize,
}

/// Decides membership straight from the class definition.
pub fn brute_force_oracle(class: ClassId, g: &Graph) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    let limit = if class == ClassId::Perfect { PERFECT_MAX_VERTICES } else { ORACLE_MAX_VERTICES };
    if n > limit {
        return Err(OracleError { class, limit, got: n });
    }
    let m = Masks::new(g);
    Ok(match class {
        ClassId::Clique => m.is_clique(m.all),
        ClassId::TwoCliques => two_cliques(&m),
        ClassId::Chordal => !has_long_induced_cycle(&m),
        ClassId::Interval => interval_model(&m, false),
        ClassId::ProperInterval => interval_model(&m, true),
        ClassId::Threshold => threshold(&m),
        ClassId::TriviallyPerfect => trivially_perfect(&m),
        ClassId::Split => split(&m, false),
        ClassId::CompleteSplit => split(&m, true),
        ClassId::Perfect => perfect(g),
    })
}

struct Masks {
    n: usize,
    adj: Vec<u32>,
    all: u32,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj = (0..n).map(|v| g.neighbors(v).ones().fold(0u32, |m, w| m | 1 << w)).collect();
        Masks { n, adj, all: if n == 0 { 0 } else { (1u32 << n) - 1 } }
    }

    fn members(&self, s: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| s >> v & 1 == 1)
    }

    fn is_clique(&self, s: u32) -> bool {
        self.members(s).all(|v| s & !(1 << v) & !self.adj[v] == 0)
    }

    fn is_independent(&self, s: u32) -> bool {
        self.members(s).all(|v| s & self.adj[v] == 0)
    }

    fn is_connected(&self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        let mut seen = s & s.wrapping_neg();
        loop {
            let grow = self.members(seen).fold(seen, |acc, v| acc | (self.adj[v] & s));
            if grow == seen {
                return seen == s;
            }
            seen = grow;
        }
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.all
    }
}

fn two_cliques(m: &Masks) -> bool {
    // Each vertex is in A only, B only, or both.
    let mut label = vec![0u8; m.n];
    loop {
        let (mut a, mut b) = (0u32, 0u32);
        for (v, &l) in label.iter().enumerate() {
            if l != 1 {
                a |= 1 << v;
            }
            if l != 0 {
                b |= 1 << v;
            }
        }
        let a_only = a & !b;
        let b_only = b & !a;
        if m.is_clique(a) && m.is_clique(b) && m.members(a_only).all(|v| m.adj[v] & b_only == 0) {
            return true;
        }
        let mut i = 0;
        while i < m.n && label[i] == 2 {
            label[i] = 0;
            i += 1;
        }
        if i == m.n {
            return false;
        }
        label[i] += 1;
    }
}

fn has_long_induced_cycle(m: &Masks) -> bool {
    m.subsets().any(|s| {
        s.count_ones() >= 4 && m.members(s).all(|v| (m.adj[v] & s).count_ones() == 2) && m.is_connected(s)
    })
}

/// Searches orders of interval endpoints: each vertex opens once and closes
/// once, adjacency must equal overlap. With `proper`, intervals close in the
/// order they opened, i.e. no interval contains another; by Roberts' theorem
/// such models can be rescaled to equal lengths.
fn interval_model(m: &Masks, proper: bool) -> bool {
    let mut failed = HashSet::new();
    interval_search(m, proper, 0, 0, &mut Vec::new(), &mut failed)
}

fn interval_search(
    m: &Masks,
    proper: bool,
    opened: u32,
    closed: u32,
    queue: &mut Vec<usize>,
    failed: &mut HashSet<(u32, u32, Vec<usize>)>,
) -> bool {
    if closed == m.all {
        return true;
    }
    let key = (opened, closed, if proper { queue.clone() } else { Vec::new() });
    if failed.contains(&key) {
        return false;
    }
    let open = opened & !closed;
    // Close: every neighbor must have opened already.
    let closable: Vec<usize> = if proper { queue.first().copied().into_iter().collect() } else { m.members(open).collect() };
    for v in closable {
        if m.adj[v] & !opened == 0 {
            let popped = if proper { Some(queue.remove(0)) } else { None };
            if interval_search(m, proper, opened, closed | 1 << v, queue, failed) {
                return true;
            }
            if let Some(p) = popped {
                queue.insert(0, p);
            }
        }
    }
    // Open: must overlap exactly the currently open intervals among closed-or-open ones.
    for u in m.members(m.all & !opened).collect::<Vec<_>>() {
        if open & !m.adj[u] == 0 && closed & m.adj[u] == 0 {
            queue.push(u);
            if interval_search(m, proper, opened | 1 << u, closed, queue, failed) {
                return true;
            }
            queue.pop();
        }
    }
    failed.insert(key);
    false
}

fn threshold(m: &Masks) -> bool {
    // Built by repeatedly adding an isolated or dominating vertex; peel in reverse.
    let mut memo = vec![None; 1 << m.n];
    fn peel(m: &Masks, s: u32, memo: &mut Vec<Option<bool>>) -> bool {
        if s.count_ones() <= 1 {
            return true;
        }
        if let Some(r) = memo[s as usize] {
            return r;
        }
        let others = |v: usize| s & !(1u32 << v);
        let r = m
            .members(s)
            .collect::<Vec<_>>()
            .into_iter()
            .any(|v| (m.adj[v] & s == 0 || m.adj[v] & s == others(v)) && peel(m, others(v), memo));
        memo[s as usize] = Some(r);
        r
    }
    peel(m, m.all, &mut memo)
}

fn trivially_perfect(m: &Masks) -> bool {
    let cliques: Vec<u32> = m.subsets().filter(|&c| m.is_clique(c)).collect();
    let independents: Vec<u32> = m.subsets().filter(|&c| m.is_independent(c)).collect();
    m.subsets().filter(|&s| s != 0).all(|s| {
        let alpha = independents.iter().filter(|&&i| i & !s == 0).map(|i| i.count_ones()).max().unwrap_or(0);
        let maximal = cliques
            .iter()
            .filter(|&&c| c != 0 && c & !s == 0)
            .filter(|&&c| m.members(s & !c).all(|v| c & !m.adj[v] != 0))
            .count();
        alpha as usize == maximal
    })
}

fn split(m: &Masks, complete: bool) -> bool {
    m.subsets().any(|k| {
        let i = m.all & !k;
        m.is_clique(k) && m.is_independent(i) && (!complete || m.members(i).all(|v| k & !m.adj[v] == 0))
    })
}

fn perfect(g: &Graph) -> bool {
    let n = g.vertex_count();
    (1u32..1 << n).all(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let (h, _) = induced_subgraph(g, &vs).expect("ids in range");
        chromatic_number(&h) == clique_number(&h)
    })
}
