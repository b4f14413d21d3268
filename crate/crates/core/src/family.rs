//! Symbolic handles for the Kneser graph and the subgraphs induced by
//! stable and unstable `k`-subsets, together with the closed forms for
//! their chromatic and independence numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{self, binomial, count_linear_stable, count_stable, is_stable, ElementSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `K(n, k)`: all `k`-subsets.
    Kneser,
    /// `S(n, k)`: cyclically stable `k`-subsets.
    Schrijver,
    /// `U(n, k)`: `k`-subsets with a consecutive pair modulo `n`.
    UnstableCyclic,
    /// `Ũ(n, k)`: `k`-subsets with a consecutive pair, `n` and `1` not
    /// consecutive.
    UnstableLinear,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kneser => "kneser",
            Family::Schrijver => "schrijver",
            Family::UnstableCyclic => "u",
            Family::UnstableLinear => "utilde",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kneser" => Ok(Family::Kneser),
            "schrijver" => Ok(Family::Schrijver),
            "u" => Ok(Family::UnstableCyclic),
            "utilde" => Ok(Family::UnstableLinear),
            other => Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
        }
    }
}

/// A graph family member `(family, n, k)` with `n >= 2k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphFamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl GraphFamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        if k == 0 || n < 2 * k {
            return Err(Error::InvalidParameters(format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
        }
        Ok(Self { family, n, k })
    }

    pub fn kneser(n: usize, k: usize) -> Result<Self> {
        Self::new(Family::Kneser, n, k)
    }

    pub fn schrijver(n: usize, k: usize) -> Result<Self> {
        Self::new(Family::Schrijver, n, k)
    }

    fn check_shape(&self, s: &ElementSet) -> Result<()> {
        if s.ground() != self.n || s.len() != self.k {
            return Err(Error::SizeMismatch {
                set: s.to_string(),
                got: s.len(),
                ground: s.ground(),
                expected: self.k,
                expected_ground: self.n,
            });
        }
        Ok(())
    }

    /// Membership predicate of the family. Errors on a size or ground-set
    /// mismatch.
    pub fn is_vertex(&self, s: &ElementSet) -> Result<bool> {
        self.check_shape(s)?;
        Ok(self.contains_unchecked(s))
    }

    fn contains_unchecked(&self, s: &ElementSet) -> bool {
        match self.family {
            Family::Kneser => true,
            Family::Schrijver => is_stable(s, true),
            Family::UnstableCyclic => !is_stable(s, true),
            Family::UnstableLinear => !is_stable(s, false),
        }
    }

    /// Disjointness, after checking both arguments are vertices.
    pub fn adjacent(&self, a: &ElementSet, b: &ElementSet) -> Result<bool> {
        for s in [a, b] {
            if !self.is_vertex(s)? {
                return Err(Error::NotAVertex(s.clone()));
            }
        }
        Ok(a.is_disjoint(b))
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> Box<dyn Iterator<Item = ElementSet> + Send> {
        let (n, k) = (self.n, self.k);
        match self.family {
            Family::Kneser => Box::new(set::k_subsets(n, k)),
            Family::Schrijver => Box::new(set::enumerate_stable(n, k, true).expect("validated at construction")),
            Family::UnstableCyclic => Box::new(set::k_subsets(n, k).filter(|s| !is_stable(s, true))),
            Family::UnstableLinear => Box::new(set::k_subsets(n, k).filter(|s| !is_stable(s, false))),
        }
    }

    pub fn vertex_count(&self) -> BigUint {
        let (n, k) = (self.n, self.k);
        let all = binomial(n as i64, k as i64);
        let stable = count_stable(n, k).expect("validated at construction");
        match self.family {
            Family::Kneser => all,
            Family::Schrijver => stable,
            Family::UnstableCyclic => all - stable,
            Family::UnstableLinear => all - count_linear_stable(n, k),
        }
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.n, self.k)
    }
}

/// Known bounds `(lower, upper)` on the chromatic number of a family member.
///
/// For `U(n, k)` with `n ≡ 3 (mod 4)` and `n >= 4k - 1` the two bounds
/// differ by one and the true value is not known in general.
pub fn chi_bounds(spec: &GraphFamilySpec) -> (usize, usize) {
    let (n, k) = (spec.n, spec.k);
    let kneser = n - 2 * k + 2;
    match spec.family {
        Family::Kneser | Family::Schrijver => (kneser, kneser),
        Family::UnstableLinear => {
            let v = kneser.min(n / 2);
            (v, v)
        }
        Family::UnstableCyclic => {
            let lower = kneser.min(n / 2);
            let upper = kneser.min(n.div_ceil(2));
            if n % 4 == 1 {
                (upper, upper)
            } else {
                (lower, upper)
            }
        }
    }
}

/// Independence number of `U(n, k)`: `C(n-1, k-1) - C(n-k-1, k-1)`.
pub fn alpha_u_formula(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 || n < 2 * k {
        return Err(Error::InvalidParameters(format!("need k >= 2 and n >= 2k, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1))
}

/// Largest size of a non-trivial intersecting family of `k`-subsets of
/// `[n]`: `C(n-1, k-1) - C(n-k-1, k-1) + 1`.
pub fn hilton_milner_bound(n: usize, k: usize) -> Result<BigUint> {
    if k < 3 || n < 2 * k {
        return Err(Error::InvalidParameters(format!("need k >= 3 and n >= 2k, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1u32)
}

/// The extremal family `{F : i ∈ F, F ∩ a ≠ ∅} ∪ {a}` in lexicographic
/// order.
pub fn hilton_milner_family(n: usize, k: usize, i: usize, a: &ElementSet) -> Result<Vec<ElementSet>> {
    hilton_milner_bound(n, k)?;
    if a.ground() != n || a.len() != k {
        return Err(Error::InvalidParameters(format!("{a:?} is not a {k}-subset of [{n}]")));
    }
    if i == 0 || i > n {
        return Err(Error::InvalidParameters(format!("element {i} outside [1, {n}]")));
    }
    if a.contains(i) {
        return Err(Error::InvalidParameters(format!("{i} belongs to {a}")));
    }
    let mut family: Vec<ElementSet> = set::k_subsets(n, k).filter(|f| f.contains(i) && !f.is_disjoint(a)).collect();
    family.push(a.clone());
    family.sort();
    Ok(family)
}

/// Every two members meet.
pub fn is_intersecting(family: &[ElementSet]) -> bool {
    family.iter().enumerate().all(|(x, a)| family[x + 1..].iter().all(|b| !a.is_disjoint(b)))
}

/// Some element lies in every member.
pub fn is_trivial(family: &[ElementSet]) -> bool {
    let Some(first) = family.first() else {
        return true;
    };
    first.iter().any(|e| family.iter().all(|f| f.contains(e)))
}
