//! Subsets of the ground set `[n]`, stability predicates, enumeration and
//! the counting formulas for stable subsets.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A subset of `[n] = {1, ..., n}` stored as a strictly increasing list.
///
/// Elements are 1-based. For `n <= 64` a bitmask is kept alongside the list
/// so that disjointness and intersection tests are single word operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    elements: Vec<usize>,
    mask: Option<u64>,
}

impl ElementSet {
    /// Builds a set from elements in any order. Rejects duplicates and
    /// elements outside `[1, n]`.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSet(format!("duplicate element {}", w[0])));
        }
        if let Some(&e) = elements.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSet(format!("element {e} outside [1, {n}]")));
        }
        Ok(Self::from_sorted(n, elements))
    }

    /// Caller guarantees `elements` is strictly increasing within `[1, n]`.
    pub(crate) fn from_sorted(n: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|&e| e >= 1 && e <= n));
        let mask = (n <= 64).then(|| elements.iter().fold(0u64, |m, &e| m | 1 << (e - 1)));
        Self { n, elements, mask }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// Parses the canonical comma form, e.g. `"1,3,5"`. The empty string is
    /// the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty(n));
        }
        let elements = text
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| Error::InvalidSet(format!("bad element {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, elements)
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The bitmask form, available when `n <= 64`. Bit `e - 1` is element `e`.
    pub fn mask(&self) -> Option<u64> {
        self.mask
    }

    pub fn contains(&self, e: usize) -> bool {
        match self.mask {
            Some(m) => e >= 1 && e <= self.n && m >> (e - 1) & 1 == 1,
            None => self.elements.binary_search(&e).is_ok(),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.elements.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.elements.last().copied()
    }

    pub fn intersection_len(&self, other: &ElementSet) -> usize {
        if let (Some(a), Some(b)) = (self.mask, other.mask) {
            return (a & b).count_ones() as usize;
        }
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        if let (Some(a), Some(b)) = (self.mask, other.mask) {
            return a & b == 0;
        }
        self.intersection_len(other) == 0
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    /// Same elements viewed over a different ground set.
    pub fn with_ground(&self, n: usize) -> Result<Self> {
        Self::new(n, self.elements.iter().copied())
    }

    /// Adds `offset` to every element and moves the set to ground `n`.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<Self> {
        Self::new(n, self.elements.iter().map(|&e| e + offset))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}/{}", self.n)
    }
}

/// Successor of `j` on the cycle `1 -> 2 -> ... -> n -> 1`.
pub fn cyclic_successor(j: usize, n: usize) -> usize {
    if j == n {
        1
    } else {
        j + 1
    }
}

/// No two elements differ by one, and with `wraparound` not both `1` and
/// `n`. The wraparound pair only exists for `n >= 3`; for `n <= 2` the only
/// consecutive pair is `{1, 2}` itself.
pub fn is_stable(s: &ElementSet, wraparound: bool) -> bool {
    let els = s.elements();
    if els.windows(2).any(|w| w[1] == w[0] + 1) {
        return false;
    }
    !(wraparound && s.ground() >= 3 && els.first() == Some(&1) && els.last() == Some(&s.ground()))
}

fn check_stable_params(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// Streams the stable `k`-subsets of `[n]` in lexicographic order.
pub fn enumerate_stable(n: usize, k: usize, wraparound: bool) -> Result<StableSets> {
    check_stable_params(n, k)?;
    Ok(StableSets::new(n, k, wraparound))
}

/// Lexicographic generator of linearly stable `k`-subsets (gaps of at
/// least two), optionally dropping the sets containing both `1` and `n`.
#[derive(Debug, Clone)]
pub struct StableSets {
    n: usize,
    k: usize,
    wraparound: bool,
    current: Option<Vec<usize>>,
}

impl StableSets {
    fn new(n: usize, k: usize, wraparound: bool) -> Self {
        // Linear feasibility: 1, 3, ..., 2k - 1 must fit.
        let current = (2 * k - 1 <= n).then(|| (0..k).map(|i| 2 * i + 1).collect());
        Self { n, k, wraparound, current }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let (n, k) = (self.n, self.k);
        // Position i may hold at most n - 2(k - 1 - i).
        let pos = (0..k).rev().find(|&i| cur[i] < n - 2 * (k - 1 - i));
        match pos {
            None => self.current = None,
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 2;
                }
            }
        }
    }
}

impl Iterator for StableSets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        loop {
            let cur = self.current.clone()?;
            self.advance();
            let wraps = self.n >= 3 && cur[0] == 1 && cur[self.k - 1] == self.n;
            if self.wraparound && wraps {
                continue;
            }
            return Some(ElementSet::from_sorted(self.n, cur));
        }
    }
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    use itertools::Itertools;
    (1..=n).combinations(k).map(move |c| ElementSet::from_sorted(n, c))
}

/// `C(a, b)`, zero when `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Number of stable `k`-subsets of `[n]`: `(n / k) * C(n - k - 1, k - 1)`.
pub fn count_stable(n: usize, k: usize) -> Result<BigUint> {
    check_stable_params(n, k)?;
    let numer = BigUint::from(n) * binomial((n - k - 1) as i64, (k - 1) as i64);
    debug_assert!((&numer % BigUint::from(k)).is_zero());
    Ok(numer / BigUint::from(k))
}

/// Number of stable `k`-subsets of `[n]` containing a fixed element `i`:
/// `C(n - k - 1, k - 1)`, the same for every `i`.
pub fn count_stable_containing(n: usize, k: usize, i: usize) -> Result<BigUint> {
    check_stable_params(n, k)?;
    if i == 0 || i > n {
        return Err(Error::InvalidParameters(format!("element {i} outside [1, {n}]")));
    }
    Ok(binomial((n - k - 1) as i64, (k - 1) as i64))
}

/// Number of linearly stable `k`-subsets of `[n]`: `C(n - k + 1, k)`.
pub fn count_linear_stable(n: usize, k: usize) -> BigUint {
    binomial(n as i64 - k as i64 + 1, k as i64)
}
