//! Instance transformations between the unfair-independent-set problem,
//! monochromatic edges in Schrijver graphs, fair independent sets in the
//! cycle, and cycle-plus-triangles graphs. Each comes with a back map for
//! solutions and a verifier on the source side.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::GraphFamilySpec;
use crate::oracle::ColoringOracle;
use crate::schrijver::MonochromaticEdge;
use crate::set::{is_stable, ElementSet};
use crate::uncovered::{verify_uncovered_solution, UncoveredInstance};

/// A coloring of `S(n, k)` whose monochromatic edges yield solutions of an
/// unfair-independent-set instance.
#[derive(Debug)]
pub struct SchrijverReduction {
    pub oracle: ColoringOracle,
    instance: UncoveredInstance,
}

impl SchrijverReduction {
    pub fn instance(&self) -> &UncoveredInstance {
        &self.instance
    }

    /// Returns the first endpoint (in lexicographic order) that solves the
    /// instance.
    pub fn back_map(&self, edge: &MonochromaticEdge) -> Result<ElementSet> {
        let (lo, hi) = if edge.a <= edge.b { (&edge.a, &edge.b) } else { (&edge.b, &edge.a) };
        [lo, hi]
            .into_iter()
            .find(|s| verify_uncovered_solution(&self.instance, s))
            .cloned()
            .ok_or_else(|| Error::UntrustedSubsolver(format!("neither {{{lo}}} nor {{{hi}}} solves the instance")))
    }
}

/// Colors a stable `k`-set `A` by the smallest `i` with `|A ∩ V_i| >
/// |V_i| / 2`, or by `l` when there is none. With no sets the palette is
/// `{1}`.
pub fn uncovered_to_schrijver(inst: &UncoveredInstance) -> Result<SchrijverReduction> {
    let spec = GraphFamilySpec::schrijver(inst.n(), inst.k())?;
    let sets = inst.sets().to_vec();
    let palette = sets.len().max(1);
    let oracle = ColoringOracle::from_fn(spec, palette, move |a| {
        Ok(sets.iter().position(|v| 2 * a.intersection_len(v) > v.len()).map_or(palette, |i| i + 1))
    })?;
    Ok(SchrijverReduction { oracle, instance: inst.clone() })
}

/// A partition of `[n]` into parts of odd size at least three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiscInstance {
    n: usize,
    parts: Vec<ElementSet>,
}

/// File form: `{"n": .., "parts": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFisc {
    pub n: usize,
    pub parts: Vec<Vec<usize>>,
}

fn check_partition(n: usize, parts: &[ElementSet]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for p in parts {
        if p.ground() != n {
            return Err(Error::InvalidSet(format!("{{{p}}} is not over [{n}]")));
        }
        for j in p.iter() {
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidSet(format!("element {j} lies in two parts")));
            }
        }
    }
    if let Some(j) = (1..=n).find(|&j| !seen[j]) {
        return Err(Error::InvalidSet(format!("element {j} is in no part")));
    }
    Ok(())
}

impl FiscInstance {
    pub fn new(n: usize, parts: Vec<ElementSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("empty ground set".into()));
        }
        check_partition(n, &parts)?;
        if let Some(p) = parts.iter().find(|p| p.len() < 3 || p.len() % 2 == 0) {
            return Err(Error::InvalidSet(format!("part {{{p}}} does not have odd size >= 3")));
        }
        Ok(Self { n, parts })
    }

    pub fn from_raw(raw: &RawFisc) -> Result<Self> {
        let parts = raw.parts.iter().map(|p| ElementSet::new(raw.n, p.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::new(raw.n, parts)
    }

    pub fn to_raw(&self) -> RawFisc {
        RawFisc { n: self.n, parts: self.parts.iter().map(|p| p.elements().to_vec()).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[ElementSet] {
        &self.parts
    }
}

/// Stable, and `|S ∩ V_i| >= |V_i| / 2 - 1` for every part. The size of `S`
/// is not constrained.
pub fn verify_fisc_solution(f: &FiscInstance, s: &ElementSet) -> bool {
    s.ground() == f.n && is_stable(s, true) && f.parts.iter().all(|v| 2 * s.intersection_len(v) + 2 >= v.len())
}

/// Maps unfair solutions of the reduced instance back to fair ones.
#[derive(Debug, Clone)]
pub struct FiscBackMap {
    source: FiscInstance,
}

impl FiscBackMap {
    /// Identity on sets, after checking that every part is hit exactly
    /// `(|V_i| - 1) / 2` times, as counting forces for any solution.
    pub fn map(&self, s: &ElementSet) -> Result<ElementSet> {
        for v in &self.source.parts {
            let hit = s.intersection_len(v);
            if hit != (v.len() - 1) / 2 {
                return Err(Error::UntrustedSubsolver(format!(
                    "{{{s}}} meets {{{v}}} {hit} times, expected {}",
                    (v.len() - 1) / 2
                )));
            }
        }
        if !verify_fisc_solution(&self.source, s) {
            return Err(Error::UntrustedSubsolver(format!("{{{s}}} is not a fair set")));
        }
        Ok(s.clone())
    }
}

/// Same ground set and parts, `k = (n - m) / 2`.
pub fn fisc_to_uncovered(f: &FiscInstance) -> Result<(UncoveredInstance, FiscBackMap)> {
    let k = (f.n - f.m()) / 2;
    let inst = UncoveredInstance::new(f.n, k, f.parts.clone())?;
    Ok((inst, FiscBackMap { source: f.clone() }))
}

/// A Hamilton cycle on `[3k]`, listed in cycle order, together with `k`
/// vertex-disjoint triangles. For `k = 1` cycle and triangle coincide;
/// otherwise no triangle edge may be a cycle edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtInstance {
    k: usize,
    cycle: Vec<usize>,
    triangles: Vec<ElementSet>,
}

/// File form: `{"k": .., "cycle": [..], "triangles": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCt {
    pub k: usize,
    pub cycle: Vec<usize>,
    pub triangles: Vec<Vec<usize>>,
}

impl CtInstance {
    pub fn new(k: usize, cycle: Vec<usize>, triangles: Vec<ElementSet>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        let n = 3 * k;
        if cycle.len() != n {
            return Err(Error::InvalidParameters(format!("cycle has {} vertices, expected {n}", cycle.len())));
        }
        let mut seen = vec![false; n + 1];
        for &v in &cycle {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameters(format!("cycle is not a permutation of [{n}]")));
            }
        }
        if triangles.len() != k || triangles.iter().any(|t| t.len() != 3) {
            return Err(Error::InvalidParameters(format!("expected {k} triangles of three vertices")));
        }
        check_partition(n, &triangles)?;
        let c = Self { k, cycle, triangles };
        if k >= 2 {
            for (a, b) in c.cycle_edges() {
                if c.triangles.iter().any(|t| t.contains(a) && t.contains(b)) {
                    return Err(Error::InvalidParameters(format!("edge {a}-{b} is on the cycle and a triangle")));
                }
            }
        }
        Ok(c)
    }

    pub fn from_raw(raw: &RawCt) -> Result<Self> {
        let n = 3 * raw.k;
        let triangles =
            raw.triangles.iter().map(|t| ElementSet::new(n, t.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::new(raw.k, raw.cycle.clone(), triangles)
    }

    pub fn to_raw(&self) -> RawCt {
        RawCt {
            k: self.k,
            cycle: self.cycle.clone(),
            triangles: self.triangles.iter().map(|t| t.elements().to_vec()).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn triangles(&self) -> &[ElementSet] {
        &self.triangles
    }

    pub fn cycle_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |i| (self.cycle[i], self.cycle[(i + 1) % n]))
    }
}

/// `|S| = k` and no cycle or triangle edge inside `S`.
pub fn verify_ct_solution(c: &CtInstance, s: &ElementSet) -> bool {
    s.ground() == 3 * c.k
        && s.len() == c.k
        && c.cycle_edges().all(|(a, b)| !(s.contains(a) && s.contains(b)))
        && c.triangles.iter().all(|t| s.intersection_len(t) <= 1)
}

/// Undoes the relabeling of [`ct_to_uncovered`].
#[derive(Debug, Clone)]
pub struct CtBackMap {
    source: CtInstance,
}

impl CtBackMap {
    pub fn map(&self, s: &ElementSet) -> Result<ElementSet> {
        let n = 3 * self.source.k;
        if s.ground() != n {
            return Err(Error::InvalidSet(format!("{{{s}}} is not over [{n}]")));
        }
        let mapped = ElementSet::new(n, s.iter().map(|i| self.source.cycle[i - 1]))?;
        if !verify_ct_solution(&self.source, &mapped) {
            return Err(Error::UntrustedSubsolver(format!("{{{mapped}}} is not independent in the source graph")));
        }
        Ok(mapped)
    }
}

/// Renames vertices so the cycle reads `1, 2, ..., 3k`; the triangles
/// become the sets of an instance with `n = 3k`.
pub fn ct_to_uncovered(c: &CtInstance) -> Result<(UncoveredInstance, CtBackMap)> {
    let n = 3 * c.k;
    let mut position = vec![0; n + 1];
    for (i, &v) in c.cycle.iter().enumerate() {
        position[v] = i + 1;
    }
    let sets =
        c.triangles.iter().map(|t| ElementSet::new(n, t.iter().map(|v| position[v]))).collect::<Result<Vec<_>>>()?;
    let inst = UncoveredInstance::new(n, c.k, sets)?;
    Ok((inst, CtBackMap { source: c.clone() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schrijver::brute_force_mono_edge;
    use crate::uncovered::brute_force_solve;

    fn set(n: usize, e: &[usize]) -> ElementSet {
        ElementSet::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn schrijver_coloring_examples() {
        let inst = UncoveredInstance::from_lists(6, 2, &[&[1, 2], &[3, 4]]).unwrap();
        let red = uncovered_to_schrijver(&inst).unwrap();
        for v in red.oracle.spec().vertices() {
            assert_eq!(red.oracle.color_of(&v).unwrap(), 2);
        }
        let edge = MonochromaticEdge { a: set(6, &[2, 5]), b: set(6, &[1, 3]), color: 2 };
        // {1,3} comes first and verifies.
        assert_eq!(red.back_map(&edge).unwrap(), set(6, &[1, 3]));

        let single = UncoveredInstance::from_lists(7, 2, &[&[1, 3, 5]]).unwrap();
        let red = uncovered_to_schrijver(&single).unwrap();
        assert_eq!(red.oracle.color_of(&set(7, &[1, 3])).unwrap(), 1);
        assert_eq!(red.oracle.color_of(&set(7, &[2, 6])).unwrap(), 1);
    }

    #[test]
    fn schrijver_round_trip() {
        let inst = UncoveredInstance::from_lists(9, 3, &[&[1, 2, 3], &[4, 5, 6], &[2, 5, 8]]).unwrap();
        let red = uncovered_to_schrijver(&inst).unwrap();
        let edge = brute_force_mono_edge(&red.oracle).unwrap().edge;
        let s = red.back_map(&edge).unwrap();
        assert!(verify_uncovered_solution(&inst, &s));
    }

    #[test]
    fn fisc_examples() {
        let f = FiscInstance::new(6, vec![set(6, &[1, 2, 3]), set(6, &[4, 5, 6])]).unwrap();
        let (inst, back) = fisc_to_uncovered(&f).unwrap();
        assert_eq!((inst.n(), inst.k()), (6, 2));
        assert_eq!(inst.sets(), f.parts());
        let s = set(6, &[2, 5]);
        assert!(verify_uncovered_solution(&inst, &s));
        assert_eq!(back.map(&s).unwrap(), s);
        assert!(verify_fisc_solution(&f, &s));
        assert!(!verify_fisc_solution(&f, &ElementSet::empty(6)));

        let tiny = FiscInstance::new(3, vec![set(3, &[1, 2, 3])]).unwrap();
        let (inst, back) = fisc_to_uncovered(&tiny).unwrap();
        assert_eq!(inst.k(), 1);
        let s = brute_force_solve(&inst, 100).unwrap();
        assert!(verify_fisc_solution(&tiny, &back.map(&s).unwrap()));

        assert!(FiscInstance::new(4, vec![set(4, &[1, 2, 3, 4])]).is_err());
        assert!(FiscInstance::new(4, vec![set(4, &[1, 2, 3])]).is_err());
    }

    #[test]
    fn ct_examples() {
        let c = CtInstance::new(2, (1..=6).collect(), vec![set(6, &[1, 3, 5]), set(6, &[2, 4, 6])]).unwrap();
        let (inst, back) = ct_to_uncovered(&c).unwrap();
        let s = set(6, &[1, 4]);
        assert!(verify_uncovered_solution(&inst, &s));
        assert_eq!(back.map(&s).unwrap(), s);
        assert!(!verify_ct_solution(&c, &set(6, &[1, 3])));

        let c = CtInstance::new(1, vec![1, 2, 3], vec![set(3, &[1, 2, 3])]).unwrap();
        let (inst, back) = ct_to_uncovered(&c).unwrap();
        let s = brute_force_solve(&inst, 10).unwrap();
        assert_eq!(back.map(&s).unwrap().len(), 1);

        let c = CtInstance::new(2, vec![2, 4, 6, 1, 3, 5], vec![set(6, &[1, 2, 4]), set(6, &[3, 5, 6])]);
        // 2-4 is a cycle edge and a triangle edge.
        assert!(c.is_err());

        let c = CtInstance::new(2, vec![2, 4, 6, 1, 3, 5], vec![set(6, &[2, 3, 6]), set(6, &[1, 4, 5])]).unwrap();
        let (inst, back) = ct_to_uncovered(&c).unwrap();
        let s = back.map(&brute_force_solve(&inst, 100).unwrap()).unwrap();
        assert!(verify_ct_solution(&c, &s));
    }
}
