use crate::graph::{Graph, ProperColoring};

/// The lexicographically first proper 3-coloring, if any.
///
/// Vertices are colored in id order; every assignment removes the color from
/// the domains of uncolored neighbors and backtracks as soon as one empties.
pub fn solve_3coloring(g: &Graph) -> Option<ProperColoring> {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut domains = vec![0b111u8; n];
    fn go(g: &Graph, v: usize, colors: &mut [usize], domains: &mut [u8]) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 0..3 {
            if domains[v] >> c & 1 == 0 {
                continue;
            }
            let saved: Vec<(usize, u8)> = g.neighbors(v).ones().filter(|&w| w > v).map(|w| (w, domains[w])).collect();
            let mut dead = false;
            for &(w, _) in &saved {
                domains[w] &= !(1 << c);
                dead |= domains[w] == 0;
            }
            colors[v] = c + 1;
            if !dead && go(g, v + 1, colors, domains) {
                return true;
            }
            for (w, d) in saved {
                domains[w] = d;
            }
        }
        colors[v] = 0;
        false
    }
    go(g, 0, &mut colors, &mut domains).then(|| ProperColoring::new(colors, 3).expect("colors in 1..=3"))
}
