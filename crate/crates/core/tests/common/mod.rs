//! Brute-force reference implementations, written independently of the
//! library so that library results can be checked against them.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use stabkit_core::uncovered::Entry;
use stabkit_core::ElementSet;

pub fn binom(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

pub fn mask(s: &ElementSet) -> u64 {
    s.iter().fold(0, |m, e| m | 1 << (e - 1))
}

pub fn elements(m: u64) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect()
}

/// No element `j` with `j + 1` (cyclically, for `n >= 3`) also present.
pub fn stable(m: u64, n: usize) -> bool {
    for j in 1..=n {
        let next = if j == n { 1 } else { j + 1 };
        if next == j || (n <= 2 && j == n) {
            continue;
        }
        if m >> (j - 1) & 1 == 1 && m >> (next - 1) & 1 == 1 {
            return false;
        }
    }
    true
}

/// Stable `k`-subsets of `[n]` by scanning all `2^n` masks; returns the
/// total and the number containing each element.
pub fn stable_counts(n: usize, k: usize) -> (u64, Vec<u64>) {
    let mut total = 0;
    let mut per = vec![0; n + 1];
    for m in 0u64..1 << n {
        if m.count_ones() as usize == k && stable(m, n) {
            total += 1;
            for e in elements(m) {
                per[e] += 1;
            }
        }
    }
    (total, per)
}

/// `f(S)` written out from its definition.
pub fn f_naive(s: u64, n: usize, sets: &[u64]) -> i128 {
    let mut f = s.count_ones() as i128;
    for j in 1..=n {
        let next = if j == n { 1 } else { j + 1 };
        if s >> (j - 1) & 1 == 1 && s >> (next - 1) & 1 == 1 {
            f -= 1;
        }
    }
    for &v in sets {
        let r = v.count_ones() as i64;
        f -= binom((s & v).count_ones() as i64, r / 2 + 1) as i128;
    }
    f
}

/// Average of `f` over all completions of `x`, each star included with
/// probability `2k / n`.
pub fn expected_f(x: &[Entry], n: usize, k: usize, sets: &[u64]) -> BigRational {
    let p = BigRational::new(BigInt::from(2 * k), BigInt::from(n));
    let q = BigRational::one() - &p;
    let ones: u64 = (0..n).filter(|&i| x[i] == Entry::One).fold(0, |m, i| m | 1 << i);
    let stars: Vec<usize> = (0..n).filter(|&i| x[i] == Entry::Star).collect();
    let mut total = BigRational::zero();
    for pick in 0u64..1 << stars.len() {
        let mut s = ones;
        let mut weight = BigRational::one();
        for (b, &i) in stars.iter().enumerate() {
            if pick >> b & 1 == 1 {
                s |= 1 << i;
                weight *= &p;
            } else {
                weight *= &q;
            }
        }
        total += weight * BigRational::from_integer(BigInt::from(f_naive(s, n, sets)));
    }
    total
}

pub fn uncovered_ok(n: usize, k: usize, sets: &[u64], s: &ElementSet) -> bool {
    let m = mask(s);
    s.ground() == n
        && m.count_ones() as usize == k
        && stable(m, n)
        && sets.iter().all(|&v| 2 * (m & v).count_ones() <= v.count_ones())
}

pub fn fisc_ok(n: usize, parts: &[u64], s: &ElementSet) -> bool {
    let m = mask(s);
    s.ground() == n && stable(m, n) && parts.iter().all(|&v| 2 * (m & v).count_ones() + 2 >= v.count_ones())
}

/// Independent set of size `k` in the union of the cycle (given in order)
/// and the triangles.
pub fn ct_ok(k: usize, cycle: &[usize], triangles: &[Vec<usize>], s: &ElementSet) -> bool {
    let n = 3 * k;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((cycle[i], cycle[(i + 1) % n]));
    }
    for t in triangles {
        edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    }
    s.ground() == n && s.len() == k && edges.iter().all(|&(a, b)| !(s.contains(a) && s.contains(b)))
}

/// Classes partition `[4k]`, each stable, each meeting every part once.
pub fn split_ok(k: usize, parts: &[ElementSet], classes: &[ElementSet]) -> bool {
    let n = 4 * k;
    if n > 64 {
        // Fall back to a list-based check for large k.
        let mut seen = vec![0u8; n + 1];
        for c in classes {
            let els = c.elements();
            let cyc = els.windows(2).any(|w| w[1] == w[0] + 1) || (els.first() == Some(&1) && els.last() == Some(&n));
            if cyc || parts.iter().any(|v| v.iter().filter(|&e| c.contains(e)).count() != 1) {
                return false;
            }
            for &e in els {
                seen[e] += 1;
            }
        }
        return classes.len() == 4 && seen[1..].iter().all(|&x| x == 1);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut union = 0u64;
    for c in classes {
        let m = mask(c);
        if union & m != 0 || !stable(m, n) {
            return false;
        }
        union |= m;
        if parts.iter().any(|v| (m & mask(v)).count_ones() != 1) {
            return false;
        }
    }
    classes.len() == 4 && union == full
}

/// Chromatic number of a graph given by adjacency masks (at most 64
/// vertices), by trying palettes in increasing order.
pub fn chromatic(adj: &[u64]) -> usize {
    fn extend(adj: &[u64], colors: &mut Vec<usize>, palette: usize) -> bool {
        let v = colors.len();
        if v == adj.len() {
            return true;
        }
        for c in 0..palette {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || colors[u] != c) {
                colors.push(c);
                if extend(adj, colors, palette) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..=adj.len()).find(|&p| extend(adj, &mut Vec::new(), p)).unwrap()
}

/// Independence number by scanning all vertex subsets.
pub fn alpha(adj: &[u64]) -> usize {
    let n = adj.len();
    assert!(n <= 24);
    (0u64..1 << n)
        .filter(|&m| elements(m).iter().all(|&v| adj[v - 1] & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Disjointness adjacency on the given sets.
pub fn disjointness(vertices: &[ElementSet]) -> Vec<u64> {
    vertices
        .iter()
        .map(|a| vertices.iter().enumerate().filter(|(_, b)| mask(a) & mask(b) == 0).fold(0, |m, (j, _)| m | 1 << j))
        .collect()
}
