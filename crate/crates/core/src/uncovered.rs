//! Unfair independent sets in the cycle.
//!
//! An instance is `(n, k, V_1..V_l)`; a solution is a stable `k`-subset `S`
//! of `[n]` with `|S ∩ V_i| <= |V_i| / 2` for every `i`. This module has the
//! instance model and normalization, the alteration algorithm (random and
//! derandomized through an exact potential), a brute-force solver, and the
//! four-way split of `[4k]` along a partition into 4-sets.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{binomial, count_stable, cyclic_successor, enumerate_stable, is_stable, ElementSet};

/// A validated instance: `n >= 2k >= 2`, `l <= n - 2k + 1`, every set has at
/// least two elements. Sets may overlap and need not cover `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncoveredInstance {
    n: usize,
    k: usize,
    sets: Vec<ElementSet>,
}

impl UncoveredInstance {
    pub fn new(n: usize, k: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if k == 0 || n < 2 * k {
            return Err(Error::InvalidParameters(format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
        }
        if sets.len() > n - 2 * k + 1 {
            return Err(Error::InvalidParameters(format!(
                "{} sets exceed the limit n - 2k + 1 = {}",
                sets.len(),
                n - 2 * k + 1
            )));
        }
        for s in &sets {
            if s.ground() != n {
                return Err(Error::InvalidSet(format!("{s} is not over [{n}]")));
            }
            if s.len() < 2 {
                return Err(Error::InvalidSet(format!("set {{{s}}} has fewer than two elements")));
            }
        }
        Ok(Self { n, k, sets })
    }

    /// Convenience constructor from element lists.
    pub fn from_lists(n: usize, k: usize, sets: &[&[usize]]) -> Result<Self> {
        let sets = sets.iter().map(|s| ElementSet::new(n, s.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::new(n, k, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn ell(&self) -> usize {
        self.sets.len()
    }

    /// `|S ∩ V_i|` may not exceed this.
    pub fn cap(&self, i: usize) -> usize {
        self.sets[i].len() / 2
    }

    /// `p = 2k / n`.
    pub fn p(&self) -> BigRational {
        BigRational::new(BigInt::from(2 * self.k), BigInt::from(self.n))
    }

    pub fn to_raw(&self) -> RawInstance {
        RawInstance { n: self.n, k: self.k, sets: self.sets.iter().map(|s| s.elements().to_vec()).collect() }
    }
}

/// Instance file contents before validation: `{"n": .., "k": .., "sets": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawInstance {
    pub n: usize,
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
}

impl RawInstance {
    /// Checks `s` against the constraints as written, singletons included.
    pub fn accepts(&self, s: &ElementSet) -> bool {
        s.ground() == self.n
            && s.len() == self.k
            && is_stable(s, true)
            && self.sets.iter().all(|v| 2 * v.iter().filter(|&&e| s.contains(e)).count() <= v.len())
    }
}

/// Map from the labels of a normalized instance back to the original ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    original_n: usize,
    kept: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Self { original_n: n, kept: (1..=n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.kept.len() == self.original_n
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// Original labels that survived, in order; new label `i` is `kept[i - 1]`.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn map_back(&self, s: &ElementSet) -> Result<ElementSet> {
        if s.ground() != self.kept.len() {
            return Err(Error::InvalidSet(format!("{s} is over [{}], expected [{}]", s.ground(), self.kept.len())));
        }
        Ok(ElementSet::from_sorted(self.original_n, s.iter().map(|e| self.kept[e - 1]).collect()))
    }
}

/// Validates a raw instance, first eliminating singleton sets.
///
/// A singleton `{j}` forbids `j`, so `j` is deleted from the ground set and
/// from every set, and the remaining elements are renumbered in cyclic
/// order. Stable sets of the shorter cycle stay stable once mapped back.
/// Sets emptied this way are dropped; the process repeats until no
/// singleton remains.
pub fn validate_and_normalize(raw: &RawInstance) -> Result<(UncoveredInstance, Relabeling)> {
    let (n, k) = (raw.n, raw.k);
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
    }
    if raw.sets.len() > n - 2 * k + 1 {
        return Err(Error::InvalidParameters(format!(
            "{} sets exceed the limit n - 2k + 1 = {}",
            raw.sets.len(),
            n - 2 * k + 1
        )));
    }
    let mut sets = Vec::with_capacity(raw.sets.len());
    for s in &raw.sets {
        if s.is_empty() {
            return Err(Error::InvalidSet("empty set in instance".into()));
        }
        sets.push(ElementSet::new(n, s.iter().copied())?);
    }

    let mut removed = vec![false; n + 1];
    let mut lists: Vec<Vec<usize>> = sets.iter().map(|s| s.elements().to_vec()).collect();
    while let Some(j) = lists.iter().find(|s| s.len() == 1).map(|s| s[0]) {
        removed[j] = true;
        for s in &mut lists {
            s.retain(|&e| e != j);
        }
        lists.retain(|s| !s.is_empty());
    }

    let kept: Vec<usize> = (1..=n).filter(|&e| !removed[e]).collect();
    let mut new_label = vec![0; n + 1];
    for (i, &e) in kept.iter().enumerate() {
        new_label[e] = i + 1;
    }
    let n2 = kept.len();
    let sets = lists
        .into_iter()
        .map(|s| ElementSet::new(n2, s.into_iter().map(|e| new_label[e])))
        .collect::<Result<Vec<_>>>()?;
    let inst = UncoveredInstance::new(n2, k, sets)?;
    Ok((inst, Relabeling { original_n: n, kept }))
}

/// `|S ∩ V_i| <= |V_i| / 2` for all `i`, `S` stable, `|S| = k`.
pub fn verify_uncovered_solution(inst: &UncoveredInstance, s: &ElementSet) -> bool {
    s.ground() == inst.n
        && s.len() == inst.k
        && is_stable(s, true)
        && inst.sets.iter().all(|v| 2 * s.intersection_len(v) <= v.len())
}

/// `f(S) = |S| - #{j : j, j+1 in S} - sum_i C(|S ∩ V_i|, floor(r_i/2) + 1)`.
pub fn f_value(s: &ElementSet, inst: &UncoveredInstance) -> BigInt {
    let n = inst.n;
    let pairs = s.iter().filter(|&j| s.contains(cyclic_successor(j, n))).count();
    let mut f = BigInt::from(s.len()) - BigInt::from(pairs);
    for (i, v) in inst.sets.iter().enumerate() {
        f -= BigInt::from(binomial(s.intersection_len(v) as i64, inst.cap(i) as i64 + 1));
    }
    f
}

/// One coordinate of a partial choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    One,
    Star,
}

/// A vector over `{0, 1, *}`; starred coordinates are included
/// independently with probability `p = 2k / n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialChoice {
    entries: Vec<Entry>,
    p: BigRational,
}

impl PartialChoice {
    pub fn all_star(inst: &UncoveredInstance) -> Self {
        Self { entries: vec![Entry::Star; inst.n], p: inst.p() }
    }

    pub fn from_entries(inst: &UncoveredInstance, entries: Vec<Entry>) -> Result<Self> {
        if entries.len() != inst.n {
            return Err(Error::InvalidParameters(format!(
                "partial choice has length {}, expected {}",
                entries.len(),
                inst.n
            )));
        }
        Ok(Self { entries, p: inst.p() })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    /// Entry of element `j` (1-based).
    pub fn get(&self, j: usize) -> Entry {
        self.entries[j - 1]
    }

    pub fn set(&mut self, j: usize, e: Entry) {
        self.entries[j - 1] = e;
    }

    pub fn with(&self, j: usize, e: Entry) -> Self {
        let mut x = self.clone();
        x.set(j, e);
        x
    }

    pub fn stars(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.entries.len()).filter(|&j| self.get(j) == Entry::Star)
    }

    /// The elements fixed to one.
    pub fn ones(&self) -> ElementSet {
        ElementSet::from_sorted(
            self.entries.len(),
            (1..=self.entries.len()).filter(|&j| self.get(j) == Entry::One).collect(),
        )
    }

    pub fn is_complete(&self) -> bool {
        !self.entries.contains(&Entry::Star)
    }
}

/// Stars and ones of a partial choice inside one set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarCounts {
    pub s: usize,
    pub t: usize,
}

pub fn star_counts(x: &PartialChoice, inst: &UncoveredInstance) -> Vec<StarCounts> {
    inst.sets
        .iter()
        .map(|v| {
            let (mut s, mut t) = (0, 0);
            for j in v.iter() {
                match x.get(j) {
                    Entry::Star => s += 1,
                    Entry::One => t += 1,
                    Entry::Zero => {}
                }
            }
            StarCounts { s, t }
        })
        .collect()
}

/// Expectations are evaluated as integers scaled by `n^D`, where `D` bounds
/// the degree in `p` of every term: `p^m = (2k)^m n^(D-m) / n^D`.
struct Scale {
    weights: Vec<BigInt>,
    denominator: BigInt,
}

impl Scale {
    fn new(inst: &UncoveredInstance) -> Self {
        let degree = (0..inst.ell()).map(|i| inst.cap(i) + 1).max().unwrap_or(0).max(2);
        let (num, den) = (BigInt::from(2 * inst.k), BigInt::from(inst.n));
        let weights = (0..=degree).map(|m| num.pow(m as u32) * den.pow((degree - m) as u32)).collect();
        Self { weights, denominator: den.pow(degree as u32) }
    }

    fn linear(&self, ones: usize, stars: usize) -> BigInt {
        BigInt::from(ones) * &self.weights[0] + BigInt::from(stars) * &self.weights[1]
    }

    fn pair(&self, a: Entry, b: Entry) -> BigInt {
        match (a, b) {
            (Entry::Zero, _) | (_, Entry::Zero) => BigInt::zero(),
            (Entry::One, Entry::One) => self.weights[0].clone(),
            (Entry::Star, Entry::Star) => self.weights[2].clone(),
            _ => self.weights[1].clone(),
        }
    }

    /// `E[C(|S ∩ V|, h)] = sum_m C(s, m) C(t, h - m) p^m`.
    fn set_term(&self, c: StarCounts, h: usize) -> BigInt {
        let lo = h.saturating_sub(c.t);
        let hi = h.min(c.s);
        let mut acc = BigInt::zero();
        for m in lo..=hi {
            let ways: BigUint = binomial(c.s as i64, m as i64) * binomial(c.t as i64, (h - m) as i64);
            acc += BigInt::from(ways) * &self.weights[m];
        }
        acc
    }

    fn to_rational(&self, scaled: BigInt) -> BigRational {
        BigRational::new(scaled, self.denominator.clone())
    }
}

/// `phi(x) = E[f(S_x)]`, exactly.
pub fn phi(x: &PartialChoice, inst: &UncoveredInstance) -> BigRational {
    let scale = Scale::new(inst);
    let n = inst.n;
    let ones = x.entries.iter().filter(|&&e| e == Entry::One).count();
    let stars = x.entries.iter().filter(|&&e| e == Entry::Star).count();
    let mut total = scale.linear(ones, stars);
    for j in 1..=n {
        total -= scale.pair(x.get(j), x.get(cyclic_successor(j, n)));
    }
    for (i, c) in star_counts(x, inst).into_iter().enumerate() {
        total -= scale.set_term(c, inst.cap(i) + 1);
    }
    scale.to_rational(total)
}

/// Incremental evaluation of `phi` while entries are fixed one by one.
struct PhiTracker<'a> {
    inst: &'a UncoveredInstance,
    scale: Scale,
    x: PartialChoice,
    counts: Vec<StarCounts>,
    set_terms: Vec<BigInt>,
    member_of: Vec<Vec<usize>>,
    total: BigInt,
}

impl<'a> PhiTracker<'a> {
    fn new(inst: &'a UncoveredInstance) -> Self {
        let scale = Scale::new(inst);
        let x = PartialChoice::all_star(inst);
        let counts = star_counts(&x, inst);
        let set_terms: Vec<BigInt> =
            counts.iter().enumerate().map(|(i, &c)| scale.set_term(c, inst.cap(i) + 1)).collect();
        let mut member_of = vec![Vec::new(); inst.n + 1];
        for (i, v) in inst.sets.iter().enumerate() {
            for j in v.iter() {
                member_of[j].push(i);
            }
        }
        let mut total = scale.linear(0, inst.n);
        for j in 1..=inst.n {
            total -= scale.pair(x.get(j), x.get(cyclic_successor(j, inst.n)));
        }
        for t in &set_terms {
            total -= t;
        }
        Self { inst, scale, x, counts, set_terms, member_of, total }
    }

    /// Scaled `phi` after changing the star at `j` to `e`, plus the new
    /// per-set terms of the affected sets.
    fn evaluate(&self, j: usize, e: Entry) -> (BigInt, Vec<(usize, StarCounts, BigInt)>) {
        debug_assert_eq!(self.x.get(j), Entry::Star);
        let (n, s) = (self.inst.n, &self.scale);
        let mut total = self.total.clone();

        total -= s.linear(0, 1);
        total += s.linear((e == Entry::One) as usize, 0);

        let prev = if j == 1 { n } else { j - 1 };
        let next = cyclic_successor(j, n);
        let (xp, xn) = (self.x.get(prev), self.x.get(next));
        total += s.pair(xp, Entry::Star) + s.pair(Entry::Star, xn);
        total -= s.pair(xp, e) + s.pair(e, xn);

        let mut updates = Vec::new();
        for &i in &self.member_of[j] {
            let mut c = self.counts[i];
            c.s -= 1;
            if e == Entry::One {
                c.t += 1;
            }
            let term = s.set_term(c, self.inst.cap(i) + 1);
            total += &self.set_terms[i];
            total -= &term;
            updates.push((i, c, term));
        }
        (total, updates)
    }

    fn commit(&mut self, j: usize, e: Entry, total: BigInt, updates: Vec<(usize, StarCounts, BigInt)>) {
        self.x.set(j, e);
        for (i, c, term) in updates {
            self.counts[i] = c;
            self.set_terms[i] = term;
        }
        self.total = total;
    }

    fn value(&self) -> BigRational {
        self.scale.to_rational(self.total.clone())
    }
}

/// What the alteration steps did to a drawn set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlterationTrace {
    pub a: ElementSet,
    pub a_prime: ElementSet,
    pub a_double_prime: ElementSet,
    /// The `k` smallest elements of `a_double_prime`, if there are `k`.
    pub outcome: Option<ElementSet>,
}

/// Repairs `a` into a solution candidate.
///
/// First every `j` whose cyclic successor is also in `a` is dropped (all
/// at once, judged against `a`). Then, set by set in index order, the
/// largest elements are dropped until `|· ∩ V_i| <= floor(r_i / 2)`.
pub fn alteration(a: &ElementSet, inst: &UncoveredInstance) -> AlterationTrace {
    let n = inst.n;
    let prime: Vec<usize> = a.iter().filter(|&j| !a.contains(cyclic_successor(j, n))).collect();
    let a_prime = ElementSet::from_sorted(n, prime.clone());

    let mut keep = vec![false; n + 1];
    for &j in &prime {
        keep[j] = true;
    }
    for (i, v) in inst.sets.iter().enumerate() {
        let inside: Vec<usize> = v.iter().filter(|&j| keep[j]).collect();
        let cap = inst.cap(i);
        if inside.len() > cap {
            for &j in &inside[cap..] {
                keep[j] = false;
            }
        }
    }
    let a_double_prime = ElementSet::from_sorted(n, prime.into_iter().filter(|&j| keep[j]).collect());
    let outcome = (a_double_prime.len() >= inst.k)
        .then(|| ElementSet::from_sorted(n, a_double_prime.elements()[..inst.k].to_vec()));
    AlterationTrace { a: a.clone(), a_prime, a_double_prime, outcome }
}

/// The random draw used by [`randomized_solve`]: element `j` is included
/// when the `j`-th draw from a ChaCha8 stream seeded with `seed` falls below
/// `2k` in `[0, n)`, so inclusion has probability exactly `2k / n`.
pub fn random_draw(inst: &UncoveredInstance, seed: u64) -> ElementSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, k) = (inst.n, inst.k);
    ElementSet::from_sorted(n, (1..=n).filter(|_| rng.random_range(0..n) < 2 * k).collect())
}

/// One Monte Carlo trial; `outcome` is `None` on failure.
pub fn randomized_solve(inst: &UncoveredInstance, seed: u64) -> AlterationTrace {
    alteration(&random_draw(inst, seed), inst)
}

/// Record of a derandomized run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerandomizedTrace {
    /// `phi` of the all-star vector, then after each fixed entry.
    pub phis: Vec<BigRational>,
    pub alteration: AlterationTrace,
    pub solution: ElementSet,
}

/// Deterministic solver by conditional expectations on `phi`.
///
/// Requires `phi(*, ..., *) >= k`, which holds whenever `n >= 68k`.
pub fn derandomized_solve(inst: &UncoveredInstance) -> Result<ElementSet> {
    derandomized_solve_traced(inst).map(|t| t.solution)
}

pub fn derandomized_solve_traced(inst: &UncoveredInstance) -> Result<DerandomizedTrace> {
    let mut tracker = PhiTracker::new(inst);
    let k_scaled = BigInt::from(inst.k) * &tracker.scale.denominator;
    if tracker.total < k_scaled {
        return Err(Error::InsufficientSlack { phi: tracker.value().to_string(), k: inst.k });
    }
    let mut phis = vec![tracker.value()];
    for j in 1..=inst.n {
        let (one, one_updates) = tracker.evaluate(j, Entry::One);
        let (zero, zero_updates) = tracker.evaluate(j, Entry::Zero);
        if one > zero {
            tracker.commit(j, Entry::One, one, one_updates);
        } else {
            tracker.commit(j, Entry::Zero, zero, zero_updates);
        }
        if tracker.total < k_scaled {
            return Err(Error::NoSolution(format!("potential fell below k after fixing {j}")));
        }
        phis.push(tracker.value());
    }
    let s = tracker.x.ones();
    let trace = alteration(&s, inst);
    let solution =
        trace.outcome.clone().ok_or_else(|| Error::NoSolution("alteration left fewer than k elements".into()))?;
    if !verify_uncovered_solution(inst, &solution) {
        return Err(Error::NoSolution(format!("{solution} does not verify")));
    }
    Ok(DerandomizedTrace { phis, alteration: trace, solution })
}

/// The first stable `k`-subset in lexicographic order meeting all
/// constraints. Refuses when the number of stable sets exceeds `cap`.
pub fn brute_force_solve(inst: &UncoveredInstance, cap: usize) -> Result<ElementSet> {
    let count = count_stable(inst.n, inst.k)?;
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count: count.to_string(), cap });
    }
    enumerate_stable(inst.n, inst.k, true)?
        .find(|s| verify_uncovered_solution(inst, s))
        .ok_or_else(|| Error::NoSolution(format!("no stable {}-subset of [{}] is feasible", inst.k, inst.n)))
}

fn check_split_partition(k: usize, partition: &[ElementSet]) -> Result<()> {
    if k == 0 || partition.len() != k {
        return Err(Error::InvalidParameters(format!("expected {k} parts for k = {k}, got {}", partition.len())));
    }
    let n = 4 * k;
    let mut seen = vec![false; n + 1];
    for part in partition {
        if part.ground() != n || part.len() != 4 {
            return Err(Error::InvalidSet(format!("part {{{part}}} is not a 4-subset of [{n}]")));
        }
        for j in part.iter() {
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidSet(format!("element {j} lies in two parts")));
            }
        }
    }
    Ok(())
}

/// Two-colors a graph of maximum degree two whose cycles are even. Each
/// component is traversed from its smallest vertex, which gets color 0.
fn two_color(n: usize, adj: &[Vec<usize>]) -> Result<Vec<u8>> {
    let mut color = vec![u8::MAX; n + 1];
    let mut queue = VecDeque::new();
    for root in 1..=n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Err(Error::NoSolution("odd cycle in matching union".into()));
                }
            }
        }
    }
    Ok(color)
}

/// Splits `[4k]` into four stable `k`-sets, each meeting every part of
/// `partition` exactly once. Classes are returned sorted by smallest
/// element.
pub fn four_split(k: usize, partition: &[ElementSet]) -> Result<[ElementSet; 4]> {
    check_split_partition(k, partition)?;
    let n = 4 * k;

    // M1 = {1,2},{3,4},... and M3 = consecutive pairs of each sorted part.
    let mut g1 = vec![Vec::with_capacity(2); n + 1];
    for j in (1..n).step_by(2) {
        g1[j].push(j + 1);
        g1[j + 1].push(j);
    }
    for part in partition {
        let e = part.elements();
        for (a, b) in [(e[0], e[1]), (e[2], e[3])] {
            g1[a].push(b);
            g1[b].push(a);
        }
    }
    let c1 = two_color(n, &g1)?;

    // M2 = {2,3},...,{4k,1} and M4 = same-c1 pairs inside each part.
    let mut g2 = vec![Vec::with_capacity(2); n + 1];
    for j in (2..=n).step_by(2) {
        let s = cyclic_successor(j, n);
        g2[j].push(s);
        g2[s].push(j);
    }
    for part in partition {
        for c in 0..2 {
            let same: Vec<usize> = part.iter().filter(|&j| c1[j] == c).collect();
            let [a, b] = same[..] else {
                return Err(Error::NoSolution(format!("part {{{part}}} is not balanced by the first coloring")));
            };
            g2[a].push(b);
            g2[b].push(a);
        }
    }
    let c2 = two_color(n, &g2)?;

    let mut classes: [Vec<usize>; 4] = Default::default();
    for j in 1..=n {
        classes[(2 * c1[j] + c2[j]) as usize].push(j);
    }
    let mut out = classes.map(|c| ElementSet::from_sorted(n, c));
    out.sort_by_key(|c| c.first());
    Ok(out)
}

/// The classes partition `[4k]`, each is stable, and each meets every part
/// exactly once.
pub fn verify_four_split(k: usize, partition: &[ElementSet], classes: &[ElementSet]) -> bool {
    if check_split_partition(k, partition).is_err() || classes.len() != 4 {
        return false;
    }
    let n = 4 * k;
    let mut seen = vec![false; n + 1];
    for c in classes {
        if c.ground() != n || !is_stable(c, true) {
            return false;
        }
        if !partition.iter().all(|v| c.intersection_len(v) == 1) {
            return false;
        }
        for j in c.iter() {
            if std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
    }
    seen[1..].iter().all(|&b| b)
}

/// `phi` as a float, for display only.
pub fn approx(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    let v = r.to_f64();
    v.unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn set(n: usize, e: &[usize]) -> ElementSet {
        ElementSet::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn potential_examples() {
        let inst = UncoveredInstance::from_lists(4, 1, &[&[1, 2]]).unwrap();
        assert_eq!(phi(&PartialChoice::all_star(&inst), &inst), q(3, 4));
        let x = PartialChoice::from_entries(&inst, vec![Entry::One, Entry::Zero, Entry::Star, Entry::Star]).unwrap();
        assert_eq!(phi(&x, &inst), q(5, 4));
        let zero = PartialChoice::from_entries(&inst, vec![Entry::Zero; 4]).unwrap();
        assert!(phi(&zero, &inst).is_zero());
    }

    #[test]
    fn f_examples() {
        let empty = UncoveredInstance::new(4, 1, vec![]).unwrap();
        assert_eq!(f_value(&ElementSet::empty(4), &empty), BigInt::zero());
        assert_eq!(f_value(&set(4, &[1, 2, 3, 4]), &empty), BigInt::zero());
        let inst = UncoveredInstance::from_lists(4, 1, &[&[1, 2]]).unwrap();
        assert_eq!(f_value(&set(4, &[1, 3, 4]), &inst), BigInt::one());
    }

    #[test]
    fn alteration_examples() {
        let inst = UncoveredInstance::new(5, 2, vec![]).unwrap();
        assert_eq!(alteration(&set(5, &[1, 2, 4]), &inst).a_prime, set(5, &[2, 4]));
        assert!(alteration(&set(5, &[1, 2, 3, 4, 5]), &inst).a_prime.is_empty());

        let inst = UncoveredInstance::from_lists(8, 2, &[&[1, 3, 5, 7]]).unwrap();
        let t = alteration(&set(8, &[1, 3, 5]), &inst);
        assert_eq!(t.a_prime, set(8, &[1, 3, 5]));
        assert_eq!(t.a_double_prime, set(8, &[1, 3]));
        assert_eq!(t.outcome, Some(set(8, &[1, 3])));
    }

    #[test]
    fn normalization() {
        let raw = RawInstance { n: 7, k: 2, sets: vec![vec![3], vec![1, 5]] };
        let (inst, relabel) = validate_and_normalize(&raw).unwrap();
        assert_eq!(inst.n(), 6);
        assert_eq!(inst.sets(), &[set(6, &[1, 4])]);
        assert_eq!(relabel.map_back(&set(6, &[3, 6])).unwrap(), set(7, &[4, 7]));

        let raw = RawInstance { n: 6, k: 2, sets: vec![vec![1, 2]] };
        let (inst, relabel) = validate_and_normalize(&raw).unwrap();
        assert!(relabel.is_identity());
        assert_eq!(inst.to_raw(), raw);

        let too_many = RawInstance { n: 6, k: 2, sets: vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![1, 4]] };
        assert!(validate_and_normalize(&too_many).is_err());
        let empty = RawInstance { n: 6, k: 2, sets: vec![vec![]] };
        assert!(validate_and_normalize(&empty).is_err());
    }

    #[test]
    fn cascading_singletons() {
        // {3} removes 3, which turns {3,5} into {5}; both go.
        let raw = RawInstance { n: 9, k: 2, sets: vec![vec![3, 5], vec![3], vec![1, 9]] };
        let (inst, relabel) = validate_and_normalize(&raw).unwrap();
        assert_eq!(inst.n(), 7);
        assert_eq!(relabel.kept(), &[1, 2, 4, 6, 7, 8, 9]);
        assert_eq!(inst.sets(), &[set(7, &[1, 7])]);
    }

    #[test]
    fn derandomized_examples() {
        let inst = UncoveredInstance::from_lists(68, 1, &[&[1, 2], &[3, 4]]).unwrap();
        let s = derandomized_solve(&inst).unwrap();
        assert!(verify_uncovered_solution(&inst, &s));

        let tight = UncoveredInstance::from_lists(4, 1, &[&[1, 2]]).unwrap();
        match derandomized_solve(&tight) {
            Err(Error::InsufficientSlack { phi, k }) => {
                assert_eq!(phi, "3/4");
                assert_eq!(k, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn brute_force_examples() {
        let inst = UncoveredInstance::from_lists(6, 2, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(brute_force_solve(&inst, 1000).unwrap(), set(6, &[1, 3]));
        let free = UncoveredInstance::new(9, 3, vec![]).unwrap();
        assert_eq!(brute_force_solve(&free, 1000).unwrap(), set(9, &[1, 3, 5]));
        let tri = UncoveredInstance::from_lists(3, 1, &[&[1, 2, 3]]).unwrap();
        assert_eq!(brute_force_solve(&tri, 10).unwrap(), set(3, &[1]));
    }

    #[test]
    fn verifier_examples() {
        let inst = UncoveredInstance::from_lists(7, 2, &[&[1, 3, 5]]).unwrap();
        assert!(verify_uncovered_solution(&inst, &set(7, &[2, 5])));
        assert!(!verify_uncovered_solution(&inst, &set(7, &[1, 3])));
        assert!(!verify_uncovered_solution(&inst, &set(7, &[2, 3])));
        assert!(!verify_uncovered_solution(&inst, &set(7, &[2])));
    }

    #[test]
    fn split_examples() {
        let one = [set(4, &[1, 2, 3, 4])];
        let out = four_split(1, &one).unwrap();
        assert_eq!(out, [set(4, &[1]), set(4, &[2]), set(4, &[3]), set(4, &[4])]);
        assert!(verify_four_split(1, &one, &out));

        let two = [set(8, &[1, 2, 3, 4]), set(8, &[5, 6, 7, 8])];
        let out = four_split(2, &two).unwrap();
        assert!(verify_four_split(2, &two, &out));

        let bad = [set(8, &[1, 2, 3, 4]), set(8, &[4, 5, 6, 7])];
        assert!(four_split(2, &bad).is_err());
    }
}
