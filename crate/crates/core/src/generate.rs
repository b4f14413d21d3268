//! Seeded random instances for tests and benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::reductions::{CtInstance, FiscInstance};
use crate::set::ElementSet;
use crate::uncovered::UncoveredInstance;

/// The generator used throughout for reproducible instances.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(rng: &mut impl Rng, n: usize, size: usize) -> ElementSet {
    let picked = rand::seq::index::sample(rng, n, size);
    ElementSet::new(n, picked.into_iter().map(|i| i + 1)).expect("distinct indices in range")
}

/// `ell` random sets with sizes drawn from `sizes` (clamped to `[2, n]`).
/// Panics if the parameters do not make a valid instance.
pub fn random_uncovered(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    ell: usize,
    sizes: RangeInclusive<usize>,
) -> UncoveredInstance {
    let (lo, hi) = (*sizes.start().max(&2), (*sizes.end()).min(n));
    let sets = (0..ell)
        .map(|_| {
            let size = rng.random_range(lo..=hi.max(lo));
            random_subset(rng, n, size)
        })
        .collect();
    UncoveredInstance::new(n, k, sets).expect("random instance parameters are valid")
}

/// A uniformly shuffled partition of `[4k]` into 4-sets.
pub fn random_split_partition(rng: &mut impl Rng, k: usize) -> Vec<ElementSet> {
    let n = 4 * k;
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm.chunks(4).map(|c| ElementSet::new(n, c.iter().copied()).expect("chunk of a permutation")).collect()
}

/// A random partition of `[n]` into parts of odd size `>= 3`. Such a
/// partition exists for `n = 3` and every `n >= 5`.
pub fn random_fisc(rng: &mut impl Rng, n: usize) -> FiscInstance {
    // m parts need n >= 3m and n = m (mod 2).
    let options: Vec<usize> = (1..=n / 3).filter(|m| (n - m).is_multiple_of(2)).collect();
    assert!(!options.is_empty(), "[{n}] has no partition into odd parts of size >= 3");
    let m = options[rng.random_range(0..options.len())];
    let mut sizes = vec![3; m];
    for _ in 0..(n - 3 * m) / 2 {
        sizes[rng.random_range(0..m)] += 2;
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut parts = Vec::with_capacity(m);
    let mut rest = &perm[..];
    for s in sizes {
        let (head, tail) = rest.split_at(s);
        parts.push(ElementSet::new(n, head.iter().copied()).expect("slice of a permutation"));
        rest = tail;
    }
    FiscInstance::new(n, parts).expect("odd parts partition [n]")
}

/// A random Hamilton cycle on `[3k]`, then random triangles avoiding its
/// edges, found by rejection.
pub fn random_ct(rng: &mut impl Rng, k: usize) -> CtInstance {
    let n = 3 * k;
    let mut cycle: Vec<usize> = (1..=n).collect();
    cycle.shuffle(rng);
    loop {
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(rng);
        let triangles =
            perm.chunks(3).map(|c| ElementSet::new(n, c.iter().copied()).expect("chunk of a permutation")).collect();
        if let Ok(c) = CtInstance::new(k, cycle.clone(), triangles) {
            return c;
        }
    }
}
