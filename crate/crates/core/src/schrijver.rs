//! Solvers for the generalized Schrijver problem: given a coloring of the
//! stable `k`-subsets of `[n]` with few colors, find two disjoint vertices
//! of the same color.
//!
//! * [`brute_force_mono_edge`] queries every vertex.
//! * [`interval_solver`] only queries the stable sets living inside `t`
//!   disjoint runs of `2k + d - 2` consecutive elements, which suffices
//!   when the palette is below `d * t`.
//! * [`extend_coloring_to_kneser`] turns a coloring with
//!   `floor(n/2) - 2k + 1` colors into a Kneser-graph coloring with
//!   `n - 2k + 1` colors whose monochromatic edges are Schrijver solutions.
//! * [`lift_4k_solver`] answers the same palette size using a solver for
//!   `S(4k, k)` on disjoint blocks, aborting simulations that see too many
//!   colors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::family::{Family, GraphFamilySpec};
use crate::oracle::{Color, ColoringOracle};
use crate::set::{count_stable, enumerate_stable, is_stable, ElementSet};

/// Vertex cap for brute-force searches.
pub const BRUTE_FORCE_CAP: usize = 1_000_000;

/// Two disjoint vertices with the same color, `a < b` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonochromaticEdge {
    pub a: ElementSet,
    pub b: ElementSet,
    pub color: Color,
}

impl fmt::Display for MonochromaticEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} color {}", self.a, self.b, self.color)
    }
}

/// A solver result together with the number of oracle queries it made.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeReport {
    pub edge: MonochromaticEdge,
    pub queries: u64,
}

/// Picks the monochromatic disjoint pair that is smallest by
/// `(color, a, b)`, optionally restricted to pairs accepted by `allowed`.
fn select_pair(
    colored: &[(ElementSet, Color)],
    allowed: impl Fn(&ElementSet, &ElementSet) -> bool,
) -> Option<MonochromaticEdge> {
    let mut by_color: Vec<&(ElementSet, Color)> = colored.iter().collect();
    by_color.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    let mut start = 0;
    while start < by_color.len() {
        let color = by_color[start].1;
        let end = start + by_color[start..].iter().take_while(|x| x.1 == color).count();
        let group = &by_color[start..end];
        for (i, (a, _)) in group.iter().map(|x| (&x.0, x.1)).enumerate() {
            if let Some(b) = group[i + 1..].iter().map(|x| &x.0).find(|b| a != *b && a.is_disjoint(b) && allowed(a, b))
            {
                return Some(MonochromaticEdge { a: a.clone(), b: b.clone(), color });
            }
        }
        start = end;
    }
    None
}

/// Queries every vertex of the oracle's graph once and returns the
/// smallest monochromatic edge by `(color, a, b)`.
///
/// Works for any family, so it doubles as the brute-force solver on the
/// Kneser side. An empty result means the coloring had more colors than the
/// graph's chromatic number allows for a counterexample, i.e. a broken
/// input contract.
pub fn brute_force_mono_edge(oracle: &ColoringOracle) -> Result<EdgeReport> {
    brute_force_mono_edge_capped(oracle, BRUTE_FORCE_CAP)
}

pub fn brute_force_mono_edge_capped(oracle: &ColoringOracle, vertex_cap: usize) -> Result<EdgeReport> {
    let spec = *oracle.spec();
    let count = spec.vertex_count();
    if count > BigUint::from(vertex_cap) {
        return Err(Error::CapExceeded { count: count.to_string(), cap: vertex_cap });
    }
    let colored = spec.vertices().map(|v| oracle.color_of(&v).map(|c| (v, c))).collect::<Result<Vec<_>>>()?;
    let queries = colored.len() as u64;
    let edge = select_pair(&colored, |_, _| true).ok_or_else(|| {
        Error::NoSolution(format!("no monochromatic edge in {spec} with palette {}", oracle.palette()))
    })?;
    Ok(EdgeReport { edge, queries })
}

/// Disjoint, both endpoints vertices of the oracle's graph, and both
/// colored `e.color` by the oracle.
pub fn verify_mono_edge(oracle: &ColoringOracle, e: &MonochromaticEdge) -> bool {
    let spec = oracle.spec();
    let is_vertex = |s: &ElementSet| spec.is_vertex(s).unwrap_or(false);
    if !is_vertex(&e.a) || !is_vertex(&e.b) || !e.a.is_disjoint(&e.b) {
        return false;
    }
    matches!(
        (oracle.color_of(&e.a), oracle.color_of(&e.b)),
        (Ok(x), Ok(y)) if x == y && x == e.color
    )
}

fn require_schrijver(oracle: &ColoringOracle) -> Result<GraphFamilySpec> {
    let spec = *oracle.spec();
    if spec.family != Family::Schrijver {
        return Err(Error::Precondition(format!("expected a coloring of S(n,k), got {spec}")));
    }
    Ok(spec)
}

/// Block layout for the interval solver: `t` disjoint runs of
/// `2k + d - 2` consecutive elements starting at 1, and in each run the
/// `k`-subsets that are stable for the run's own cyclic order.
#[derive(Debug, Clone)]
pub struct IntervalPlan {
    pub d: usize,
    pub t: usize,
    pub block_len: usize,
    /// Inclusive element ranges `(first, last)` of the runs.
    pub blocks: Vec<(usize, usize)>,
    pub group_vertices: Vec<Vec<ElementSet>>,
}

impl IntervalPlan {
    pub fn new(n: usize, k: usize, d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Precondition(format!("d must be at least 2, got {d}")));
        }
        GraphFamilySpec::schrijver(n, k)?;
        let block_len = 2 * k + d - 2;
        let t = n / block_len;
        if t == 0 {
            return Err(Error::Precondition(format!("n = {n} is shorter than one block of {block_len}")));
        }
        let local: Vec<ElementSet> = enumerate_stable(block_len, k, true)?.collect();
        let blocks: Vec<(usize, usize)> = (0..t).map(|i| (i * block_len + 1, (i + 1) * block_len)).collect();
        let group_vertices = blocks
            .iter()
            .map(|&(first, _)| local.iter().map(|s| s.shifted(first - 1, n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { d, t, block_len, blocks, group_vertices })
    }

    /// Largest palette the plan is guaranteed to handle: `d * t - 1`.
    pub fn max_palette(&self) -> usize {
        self.d * self.t - 1
    }

    /// `t * |S(2k + d - 2, k)|`, the number of queries the solver makes.
    pub fn query_bound(&self, k: usize) -> u64 {
        let per_block = count_stable(self.block_len, k).expect("block_len >= 2k");
        self.t as u64 * per_block.to_u64().expect("desk-scale block")
    }
}

#[derive(Debug, Clone)]
pub struct IntervalReport {
    pub edge: MonochromaticEdge,
    pub queries: u64,
    pub plan: IntervalPlan,
}

/// Finds a monochromatic edge for palettes up to `d * floor(n / (2k + d - 2)) - 1`
/// by querying only the block-local stable sets.
pub fn interval_solver(oracle: &ColoringOracle, d: usize) -> Result<IntervalReport> {
    let spec = require_schrijver(oracle)?;
    let plan = IntervalPlan::new(spec.n, spec.k, d)?;
    if oracle.palette() > plan.max_palette() {
        return Err(Error::Precondition(format!(
            "palette {} exceeds d * t - 1 = {}",
            oracle.palette(),
            plan.max_palette()
        )));
    }
    let colored = plan
        .group_vertices
        .iter()
        .flatten()
        .map(|v| oracle.color_of(v).map(|c| (v.clone(), c)))
        .collect::<Result<Vec<_>>>()?;
    let queries = colored.len() as u64;
    let edge = select_pair(&colored, |_, _| true)
        .ok_or_else(|| Error::NoSolution("block families admit no monochromatic edge".into()))?;
    Ok(IntervalReport { edge, queries, plan })
}

/// A Kneser-graph coloring built from a Schrijver coloring `c`: unstable
/// `A` gets `i` where `2i - 1` is its smallest odd element, stable `A` gets
/// `c(A) + ceil(n/2)`.
pub struct KneserExtension {
    pub oracle: ColoringOracle,
    offset: usize,
}

impl KneserExtension {
    /// Maps a monochromatic edge of the extended coloring back to the
    /// original one. Colors up to `ceil(n/2)` cannot occur on a disjoint
    /// pair, so such an edge means the Kneser-side solver is broken.
    pub fn back_map(&self, edge: &MonochromaticEdge) -> Result<MonochromaticEdge> {
        if edge.color <= self.offset {
            return Err(Error::UntrustedSubsolver(format!("edge {edge} uses color {} <= {}", edge.color, self.offset)));
        }
        if !edge.a.is_disjoint(&edge.b) || !is_stable(&edge.a, true) || !is_stable(&edge.b, true) {
            return Err(Error::UntrustedSubsolver(format!("edge {edge} is not a Schrijver edge")));
        }
        Ok(MonochromaticEdge { a: edge.a.clone(), b: edge.b.clone(), color: edge.color - self.offset })
    }

    /// `ceil(n/2)`, the number of colors reserved for unstable sets.
    pub fn offset(&self) -> usize {
        self.offset
    }
}

/// Extends a coloring of `S(n, k)` with at most `floor(n/2) - 2k + 1`
/// colors to a coloring of `K(n, k)` with exactly `n - 2k + 1` colors.
pub fn extend_coloring_to_kneser(oracle: Arc<ColoringOracle>) -> Result<KneserExtension> {
    let spec = require_schrijver(&oracle)?;
    let (n, k) = (spec.n, spec.k);
    if n < 4 * k {
        return Err(Error::Precondition(format!("need n >= 4k, got n = {n}, k = {k}")));
    }
    let allowed = n / 2 - 2 * k + 1;
    if oracle.palette() > allowed {
        return Err(Error::Precondition(format!(
            "palette {} exceeds floor(n/2) - 2k + 1 = {allowed}",
            oracle.palette()
        )));
    }
    let offset = n.div_ceil(2);
    let inner = Arc::clone(&oracle);
    let extended = ColoringOracle::from_fn(GraphFamilySpec::kneser(n, k)?, n - 2 * k + 1, move |a| {
        if is_stable(a, true) {
            Ok(inner.color_of(a)? + offset)
        } else {
            let odd = a
                .iter()
                .find(|e| e % 2 == 1)
                .expect("an unstable set contains a consecutive pair, hence an odd element");
            Ok(odd.div_ceil(2))
        }
    })?;
    Ok(KneserExtension { oracle: extended, offset })
}

/// A solver for `S(4k, k)` colorings with at most `2k + 1` colors.
///
/// The solver must propagate oracle errors: the lifting algorithm aborts a
/// simulation by making `color_of` return [`Error::Aborted`].
pub trait SubSolver {
    fn solve(&self, oracle: &ColoringOracle) -> Result<MonochromaticEdge>;
}

impl<F> SubSolver for F
where
    F: Fn(&ColoringOracle) -> Result<MonochromaticEdge>,
{
    fn solve(&self, oracle: &ColoringOracle) -> Result<MonochromaticEdge> {
        self(oracle)
    }
}

/// [`brute_force_mono_edge`] as a sub-solver.
#[derive(Debug, Clone, Copy, Default)]
pub struct BruteForceSubSolver;

impl SubSolver for BruteForceSubSolver {
    fn solve(&self, oracle: &ColoringOracle) -> Result<MonochromaticEdge> {
        brute_force_mono_edge(oracle).map(|r| r.edge)
    }
}

/// Vertices of distinct colors collected from aborted simulations, one
/// family per block, each entry `(vertex, color)` in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistinctColorWitness {
    pub families: Vec<Vec<(ElementSet, Color)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftBranch {
    /// `n <= 8k`: one run of the sub-solver on `{1..4k}`.
    Direct,
    /// A simulation on the given block (0-based) finished with at most
    /// `2k + 1` colors.
    Simulation { block: usize },
    /// Every simulation aborted; the edge joins two collected families.
    CrossBlock,
}

#[derive(Debug, Clone)]
pub struct LiftReport {
    pub edge: MonochromaticEdge,
    pub queries: u64,
    pub branch: LiftBranch,
    pub aborted_blocks: usize,
    pub witness: DistinctColorWitness,
}

/// Monitor shared between a block proxy oracle and the lifting loop.
struct Monitor {
    limit: usize,
    seen: Vec<(ElementSet, Color)>,
    compressed: HashMap<Color, Color>,
    aborted: bool,
}

impl Monitor {
    fn observe(&mut self, global: ElementSet, color: Color) -> Result<Color> {
        if let Some(&c) = self.compressed.get(&color) {
            return Ok(c);
        }
        self.seen.push((global, color));
        if self.seen.len() == self.limit {
            self.aborted = true;
            return Err(Error::Aborted);
        }
        let id = self.seen.len();
        self.compressed.insert(color, id);
        Ok(id)
    }
}

enum Simulation {
    Finished(MonochromaticEdge),
    Aborted(Vec<(ElementSet, Color)>),
}

/// Runs `sub` on the restriction of `oracle` to the block starting after
/// `offset`, seen through a proxy that renames colors in first-seen order
/// and aborts once `2k + 2` distinct colors have appeared.
fn simulate_block(oracle: &Arc<ColoringOracle>, sub: &dyn SubSolver, offset: usize) -> Result<Simulation> {
    let spec = *oracle.spec();
    let (n, k) = (spec.n, spec.k);
    let monitor = Arc::new(Mutex::new(Monitor {
        limit: 2 * k + 2,
        seen: Vec::new(),
        compressed: HashMap::new(),
        aborted: false,
    }));
    let proxy = {
        let monitor = Arc::clone(&monitor);
        let global = Arc::clone(oracle);
        ColoringOracle::from_fn(GraphFamilySpec::schrijver(4 * k, k)?, 2 * k + 1, move |local| {
            if monitor.lock().expect("monitor lock").aborted {
                return Err(Error::Aborted);
            }
            let lifted = local.shifted(offset, n)?;
            let color = global.color_of(&lifted)?;
            monitor.lock().expect("monitor lock").observe(lifted, color)
        })?
    };

    let outcome = sub.solve(&proxy).and_then(|e| {
        // Re-query the endpoints so their colors are part of the record.
        let ca = proxy.color_of(&e.a)?;
        let cb = proxy.color_of(&e.b)?;
        Ok((e, ca, cb))
    });
    let state = monitor.lock().expect("monitor lock");
    if state.aborted {
        return Ok(Simulation::Aborted(state.seen.clone()));
    }
    let (e, ca, cb) = outcome.map_err(|err| match err {
        Error::NotAVertex(_) | Error::SizeMismatch { .. } | Error::NoSolution(_) => {
            Error::UntrustedSubsolver(err.to_string())
        }
        other => other,
    })?;
    if ca != cb || !e.a.is_disjoint(&e.b) {
        return Err(Error::UntrustedSubsolver(format!("{} | {} is not monochromatic", e.a, e.b)));
    }
    let global_color = state.seen[ca - 1].1;
    let (a, b) = (e.a.shifted(offset, n)?, e.b.shifted(offset, n)?);
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    Ok(Simulation::Finished(MonochromaticEdge { a, b, color: global_color }))
}

/// Solves colorings of `S(n, k)` with at most `floor(n/2) - 2k + 1` colors,
/// `n >= 4k`, given a solver for `S(4k, k)`.
pub fn lift_4k_solver(oracle: Arc<ColoringOracle>, sub: &dyn SubSolver) -> Result<LiftReport> {
    let spec = require_schrijver(&oracle)?;
    let (n, k) = (spec.n, spec.k);
    if n < 4 * k {
        return Err(Error::Precondition(format!("need n >= 4k, got n = {n}, k = {k}")));
    }
    let allowed = n / 2 - 2 * k + 1;
    if oracle.palette() > allowed {
        return Err(Error::Precondition(format!(
            "palette {} exceeds floor(n/2) - 2k + 1 = {allowed}",
            oracle.palette()
        )));
    }
    let start = oracle.queries();
    let report = |edge, branch, aborted_blocks, witness| LiftReport {
        edge,
        queries: oracle.queries() - start,
        branch,
        aborted_blocks,
        witness,
    };

    if n <= 8 * k {
        return match simulate_block(&oracle, sub, 0)? {
            Simulation::Finished(edge) => Ok(report(edge, LiftBranch::Direct, 0, DistinctColorWitness::default())),
            Simulation::Aborted(_) => {
                Err(Error::Precondition(format!("block {{1..{}}} shows more than {} colors", 4 * k, 2 * k + 1)))
            }
        };
    }

    let t = n / (4 * k);
    let mut witness = DistinctColorWitness::default();
    for block in 0..t {
        match simulate_block(&oracle, sub, block * 4 * k)? {
            Simulation::Finished(edge) => {
                return Ok(report(edge, LiftBranch::Simulation { block }, block, witness));
            }
            Simulation::Aborted(family) => witness.families.push(family),
        }
    }

    let block_of = |s: &ElementSet| (s.first().expect("k >= 1") - 1) / (4 * k);
    let pool: Vec<(ElementSet, Color)> = witness.families.iter().flatten().cloned().collect();
    let edge = select_pair(&pool, |a, b| block_of(a) != block_of(b))
        .ok_or_else(|| Error::NoSolution(format!("{t} blocks of {} colors left no shared color", 2 * k + 2)))?;
    Ok(report(edge, LiftBranch::CrossBlock, t, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::make_rule_coloring;

    fn set(n: usize, els: &[usize]) -> ElementSet {
        ElementSet::new(n, els.iter().copied()).unwrap()
    }

    fn table(spec: GraphFamilySpec, m: usize, entries: &[(&[usize], Color)]) -> ColoringOracle {
        let map = entries.iter().map(|(s, c)| (set(spec.n, s), *c)).collect();
        ColoringOracle::from_table(spec, m, map).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let s62 = GraphFamilySpec::schrijver(6, 2).unwrap();
        let o = make_rule_coloring(s62, 3, "constant", 0).unwrap();
        let r = brute_force_mono_edge(&o).unwrap();
        assert_eq!(r.queries, 9);
        assert_eq!(o.queries(), 9);
        assert_eq!((r.edge.a.to_string(), r.edge.b.to_string()), ("1,3".into(), "2,4".into()));
        assert!(verify_mono_edge(&o, &r.edge));

        let s52 = GraphFamilySpec::schrijver(5, 2).unwrap();
        let o = make_rule_coloring(s52, 1, "constant", 0).unwrap();
        assert!(verify_mono_edge(&o, &brute_force_mono_edge(&o).unwrap().edge));

        // A proper 4-coloring of S(6,2) has no monochromatic edge.
        let o = make_rule_coloring(s62, 4, "proper-lovasz", 0).unwrap();
        assert!(matches!(brute_force_mono_edge(&o), Err(Error::NoSolution(_))));
    }

    #[test]
    fn verifier_rejects_bad_edges() {
        let s62 = GraphFamilySpec::schrijver(6, 2).unwrap();
        let o = make_rule_coloring(s62, 3, "min-element-capped", 0).unwrap();
        let e = |a: &[usize], b: &[usize], c| MonochromaticEdge { a: set(6, a), b: set(6, b), color: c };
        assert!(verify_mono_edge(&o, &e(&[3, 5], &[4, 6], 3)));
        assert!(!verify_mono_edge(&o, &e(&[1, 3], &[3, 5], 1)));
        assert!(!verify_mono_edge(&o, &e(&[1, 3], &[2, 4], 1)));
        assert!(!verify_mono_edge(&o, &e(&[1, 2], &[3, 5], 1)));
        assert!(!verify_mono_edge(&o, &e(&[3, 5], &[4, 6], 2)));
    }

    #[test]
    fn interval_constant_coloring() {
        let s82 = GraphFamilySpec::schrijver(8, 2).unwrap();
        let o = make_rule_coloring(s82, 3, "constant", 0).unwrap();
        let r = interval_solver(&o, 2).unwrap();
        assert_eq!(r.plan.t, 2);
        let groups: Vec<Vec<String>> =
            r.plan.group_vertices.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect();
        assert_eq!(groups, vec![vec!["1,3", "2,4"], vec!["5,7", "6,8"]]);
        assert_eq!(r.edge.a.to_string(), "1,3");
        assert_eq!(r.edge.b.to_string(), "2,4");
        assert_eq!(r.queries, 4);
    }

    #[test]
    fn interval_cross_block_pair() {
        let s82 = GraphFamilySpec::schrijver(8, 2).unwrap();
        let o = table(s82, 3, &[(&[1, 3], 1), (&[2, 4], 2), (&[5, 7], 1), (&[6, 8], 2)]);
        let r = interval_solver(&o, 2).unwrap();
        assert_eq!((r.edge.a.to_string(), r.edge.b.to_string(), r.edge.color), ("1,3".into(), "5,7".into(), 1));
    }

    #[test]
    fn interval_query_bound() {
        let s = GraphFamilySpec::schrijver(12, 2).unwrap();
        for seed in 0..20 {
            let o = make_rule_coloring(s, 5, "random", seed).unwrap();
            let r = interval_solver(&o, 2).unwrap();
            assert!(r.queries <= 6);
            assert_eq!(r.plan.query_bound(2), 6);
            assert!(verify_mono_edge(&o, &r.edge));
        }
    }

    #[test]
    fn interval_preconditions() {
        let s = GraphFamilySpec::schrijver(12, 2).unwrap();
        let o = make_rule_coloring(s, 6, "constant", 0).unwrap();
        assert!(matches!(interval_solver(&o, 2), Err(Error::Precondition(_))));
        assert!(matches!(interval_solver(&o, 1), Err(Error::Precondition(_))));
        let k = GraphFamilySpec::kneser(12, 2).unwrap();
        let o = make_rule_coloring(k, 2, "constant", 0).unwrap();
        assert!(interval_solver(&o, 2).is_err());
    }

    #[test]
    fn kneser_extension_trace() {
        let s82 = GraphFamilySpec::schrijver(8, 2).unwrap();
        let inner = Arc::new(make_rule_coloring(s82, 1, "constant", 0).unwrap());
        let ext = extend_coloring_to_kneser(Arc::clone(&inner)).unwrap();
        assert_eq!(ext.oracle.palette(), 5);
        let c = |els: &[usize]| ext.oracle.color_of(&set(8, els)).unwrap();
        assert_eq!(c(&[1, 2]), 1);
        assert_eq!(c(&[2, 3]), 2);
        assert_eq!(c(&[4, 5]), 3);
        assert_eq!(c(&[1, 3]), 5);

        let edge = MonochromaticEdge { a: set(8, &[1, 3]), b: set(8, &[2, 5]), color: 5 };
        let back = ext.back_map(&edge).unwrap();
        assert!(verify_mono_edge(&inner, &back));
        let bad = MonochromaticEdge { color: 3, ..edge };
        assert!(matches!(ext.back_map(&bad), Err(Error::UntrustedSubsolver(_))));
    }

    #[test]
    fn kneser_extension_preconditions() {
        let s = GraphFamilySpec::schrijver(8, 2).unwrap();
        let o = Arc::new(make_rule_coloring(s, 2, "constant", 0).unwrap());
        assert!(extend_coloring_to_kneser(o).is_err());
        let s = GraphFamilySpec::schrijver(7, 2).unwrap();
        let o = Arc::new(make_rule_coloring(s, 1, "constant", 0).unwrap());
        assert!(extend_coloring_to_kneser(o).is_err());
    }

    #[test]
    fn lift_constant_first_simulation_finishes() {
        let s = GraphFamilySpec::schrijver(12, 1).unwrap();
        let o = Arc::new(make_rule_coloring(s, 5, "constant", 0).unwrap());
        let r = lift_4k_solver(Arc::clone(&o), &BruteForceSubSolver).unwrap();
        assert_eq!(r.branch, LiftBranch::Simulation { block: 0 });
        assert_eq!((r.edge.a.to_string(), r.edge.b.to_string()), ("1".into(), "2".into()));
        assert!(verify_mono_edge(&o, &r.edge));
        // 4 block vertices plus the two re-queried endpoints.
        assert_eq!(r.queries, 6);
    }

    #[test]
    fn lift_rainbow_blocks_cross_pair() {
        let s = GraphFamilySpec::schrijver(12, 1).unwrap();
        let o = Arc::new(ColoringOracle::from_fn(s, 5, |a| Ok((a.first().unwrap() - 1) % 4 + 1)).unwrap());
        let r = lift_4k_solver(Arc::clone(&o), &BruteForceSubSolver).unwrap();
        assert_eq!(r.branch, LiftBranch::CrossBlock);
        assert_eq!(r.aborted_blocks, 3);
        assert!(r.witness.families.iter().all(|f| f.len() == 4));
        assert_eq!((r.edge.a.to_string(), r.edge.b.to_string(), r.edge.color), ("1".into(), "5".into(), 1));
        assert!(verify_mono_edge(&o, &r.edge));
    }

    #[test]
    fn lift_direct_branch() {
        let s = GraphFamilySpec::schrijver(8, 1).unwrap();
        let o = Arc::new(make_rule_coloring(s, 3, "random", 3).unwrap());
        let r = lift_4k_solver(Arc::clone(&o), &BruteForceSubSolver).unwrap();
        assert_eq!(r.branch, LiftBranch::Direct);
        assert!(r.edge.b.last().unwrap() <= 4);
        assert!(verify_mono_edge(&o, &r.edge));
    }

    #[test]
    fn lift_rejects_lying_subsolver() {
        let s = GraphFamilySpec::schrijver(8, 1).unwrap();
        let o = Arc::new(make_rule_coloring(s, 3, "min-element-capped", 0).unwrap());
        let liar = |_: &ColoringOracle| {
            Ok(MonochromaticEdge { a: ElementSet::new(4, [1]).unwrap(), b: ElementSet::new(4, [2]).unwrap(), color: 1 })
        };
        let err = lift_4k_solver(o, &liar).unwrap_err();
        assert!(matches!(err, Error::UntrustedSubsolver(_)), "{err}");
    }

    #[test]
    fn lift_preconditions() {
        let s = GraphFamilySpec::schrijver(7, 2).unwrap();
        let o = Arc::new(make_rule_coloring(s, 1, "constant", 0).unwrap());
        assert!(lift_4k_solver(o, &BruteForceSubSolver).is_err());
        let s = GraphFamilySpec::schrijver(12, 1).unwrap();
        let o = Arc::new(make_rule_coloring(s, 6, "constant", 0).unwrap());
        assert!(lift_4k_solver(o, &BruteForceSubSolver).is_err());
    }
}
