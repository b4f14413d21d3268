//! Exact chromatic number and independence number of explicit graphs.
//!
//! Both searches are deterministic and single-threaded. They are meant for
//! desk-scale graphs (a few hundred vertices) and may take exponential time.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Largest palette the coloring search handles (one bit per color).
pub const MAX_PALETTE: usize = 128;

/// A greedily grown clique, the best over all start vertices.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut cand = g.neighbors(start).clone();
        while let Some(v) =
            cand.ones().max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v)))
        {
            clique.push(v);
            cand.intersect_with(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Result of an exact chromatic number computation, with a witness
/// coloring using colors `0..chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Vec<usize>,
}

/// Exact chromatic number, starting the ascending search at the size of a
/// greedy clique.
pub fn chromatic_number_exact(g: &Graph) -> ChromaticResult {
    chromatic_number_from(g, 0)
}

/// Exact chromatic number, trying palettes `max(lower, |greedy clique|)`,
/// `+1`, ... until one admits a proper coloring. `lower` must be a valid
/// lower bound for the answer to be exact.
pub fn chromatic_number_from(g: &Graph, lower: usize) -> ChromaticResult {
    if g.order() == 0 {
        return ChromaticResult { chi: 0, coloring: Vec::new() };
    }
    let clique = greedy_clique(g);
    let heuristic = dsatur_greedy(g);
    let upper = heuristic.iter().max().map_or(0, |&c| c + 1);
    let mut target = lower.max(clique.len()).max(1);
    while target < upper {
        if let Some(coloring) = k_coloring(g, target, &clique) {
            return ChromaticResult { chi: target, coloring };
        }
        target += 1;
    }
    ChromaticResult { chi: upper, coloring: heuristic }
}

/// Whether `g` admits a proper coloring with `palette` colors.
pub fn is_colorable(g: &Graph, palette: usize) -> bool {
    k_coloring(g, palette, &greedy_clique(g)).is_some()
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (neighbor_colors[v].count_ones(..), g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..=n).find(|&c| !neighbor_colors[v].contains(c)).expect("n + 1 colors suffice");
        colors[v] = c;
        for u in g.neighbors(v).ones() {
            neighbor_colors[u].insert(c);
        }
    }
    colors
}

/// Backtracking `palette`-coloring with DSATUR vertex selection.
///
/// Symmetry is broken by fixing distinct colors on `clique` and by only
/// ever opening the smallest unused color.
fn k_coloring(g: &Graph, palette: usize, clique: &[usize]) -> Option<Vec<usize>> {
    assert!(palette <= MAX_PALETTE, "palette {palette} exceeds {MAX_PALETTE}");
    if clique.len() > palette {
        return None;
    }
    let mut search = ColoringSearch::new(g, palette);
    for (c, &v) in clique.iter().enumerate() {
        if search.forbidden[v] >> c & 1 == 1 {
            return None;
        }
        search.assign(v, c);
    }
    search.run(clique.len(), clique.len()).then(|| search.colors.iter().map(|&c| c as usize).collect())
}

struct ColoringSearch<'g> {
    g: &'g Graph,
    palette: usize,
    colors: Vec<u8>,
    /// Per vertex and color: number of colored neighbors holding it.
    conflicts: Vec<u16>,
    forbidden: Vec<u128>,
    degree: Vec<usize>,
}

const UNCOLORED: u8 = u8::MAX;

impl<'g> ColoringSearch<'g> {
    fn new(g: &'g Graph, palette: usize) -> Self {
        let n = g.order();
        Self {
            g,
            palette,
            colors: vec![UNCOLORED; n],
            conflicts: vec![0; n * palette],
            forbidden: vec![0; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c as u8;
        for u in self.g.neighbors(v).ones() {
            let slot = &mut self.conflicts[u * self.palette + c];
            *slot += 1;
            if *slot == 1 {
                self.forbidden[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = UNCOLORED;
        for u in self.g.neighbors(v).ones() {
            let slot = &mut self.conflicts[u * self.palette + c];
            *slot -= 1;
            if *slot == 0 {
                self.forbidden[u] &= !(1 << c);
            }
        }
    }

    fn run(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.colors.len() {
            return true;
        }
        let open = (used + 1).min(self.palette);
        let open_mask: u128 = if open == 128 { u128::MAX } else { (1u128 << open) - 1 };
        let mut best: Option<(usize, u32)> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let available = (!self.forbidden[v] & open_mask).count_ones();
            if available == 0 {
                return false;
            }
            let better = match best {
                None => true,
                Some((b, b_avail)) => available < b_avail || (available == b_avail && self.degree[v] > self.degree[b]),
            };
            if better {
                best = Some((v, available));
            }
        }
        let (v, _) = best.expect("an uncolored vertex remains");
        let mut available = !self.forbidden[v] & open_mask;
        while available != 0 {
            let c = available.trailing_zeros() as usize;
            available &= available - 1;
            self.assign(v, c);
            if self.run(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// A maximum independent set, found by branch and bound with a greedy
/// clique-cover upper bound.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    // Vertices with many neighbors go first, so that they land in early
    // cover classes and low-degree vertices are branched on first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<FixedBitSet> = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            row.extend(g.neighbors(v).ones().map(|u| position[u]));
            row
        })
        .collect();

    let mut search = MisSearch { adj, best: Vec::new(), current: Vec::new() };
    search.best = search.greedy();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);

    let mut result: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    result.sort_unstable();
    result
}

/// Exact independence number.
pub fn independence_number_exact(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

struct MisSearch {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch {
    /// Min-degree greedy independent set.
    fn greedy(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        let mut chosen = Vec::new();
        while let Some(v) = alive.ones().min_by_key(|&v| (self.adj[v].intersection_count(&alive), v)) {
            chosen.push(v);
            alive.set(v, false);
            alive.difference_with(&self.adj[v]);
        }
        chosen
    }

    /// Greedy partition of `p` into cliques; returns vertices in cover order
    /// with the (1-based) number of cliques used up to each one.
    fn cover(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncovered = p.clone();
        let mut out = Vec::with_capacity(p.count_ones(..));
        let mut class = 0;
        while !uncovered.is_clear() {
            class += 1;
            let mut q = uncovered.clone();
            while let Some(v) = q.ones().next() {
                uncovered.set(v, false);
                q.set(v, false);
                q.intersect_with(&self.adj[v]);
                out.push((v, class));
            }
        }
        out
    }

    fn expand(&mut self, mut p: FixedBitSet) {
        let covered = self.cover(&p);
        for &(v, bound) in covered.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = p.clone();
            next.difference_with(&self.adj[v]);
            next.set(v, false);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.set(v, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(chromatic_number_exact(&Graph::empty(0)).chi, 0);
        assert_eq!(chromatic_number_exact(&Graph::empty(4)).chi, 1);
        assert_eq!(chromatic_number_exact(&cycle(5)).chi, 3);
        assert_eq!(chromatic_number_exact(&cycle(6)).chi, 2);
        assert_eq!(chromatic_number_exact(&complete(6)).chi, 6);
        assert_eq!(independence_number_exact(&cycle(7)), 3);
        assert_eq!(independence_number_exact(&complete(5)), 1);
        assert_eq!(independence_number_exact(&Graph::empty(5)), 5);
        assert_eq!(independence_number_exact(&Graph::empty(0)), 0);
    }

    #[test]
    fn witnesses_are_valid() {
        let g = cycle(9);
        let r = chromatic_number_exact(&g);
        assert!(g.is_proper_coloring(&r.coloring));
        assert!(r.coloring.iter().all(|&c| c < r.chi));
        let mis = maximum_independent_set(&g);
        assert!(g.is_independent(&mis));
        assert_eq!(mis.len(), 4);
    }

    #[test]
    fn colorability_decisions() {
        assert!(!is_colorable(&cycle(7), 2));
        assert!(is_colorable(&cycle(7), 3));
        assert!(!is_colorable(&complete(4), 3));
    }
}
