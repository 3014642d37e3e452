//! Partitions into distinct parts and the elementary data derived from them.
//!
//! A [`DistinctPartition`] stores its parts in increasing order
//! `λ_1 < λ_2 < … < λ_t`. Missing parts are the integers in `1..=λ_t` that do
//! not occur; the smallest of them is the minimal excludant (mex), which is 0
//! for a complete staircase `(1, 2, …, n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition into distinct parts, stored in strictly increasing order.
///
/// Single-part partitions are representable; operations that need `t ≥ 2`
/// check it themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DistinctPartition {
    parts: Vec<u32>,
}

impl DistinctPartition {
    /// Validates `parts` as a strictly increasing sequence of positive integers.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts[0] == 0 {
            return Err(Error::NonPositivePart(0));
        }
        for w in parts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicatePart(w[0]));
            }
            if w[0] > w[1] {
                return Err(Error::NotIncreasing { prev: w[0], next: w[1] });
            }
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts that are already known to be valid.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && parts[0] > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] < w[1]));
        Self { parts }
    }

    /// The complete staircase `π_n = (1, …, n)`.
    pub fn complete(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        Ok(Self { parts: (1..=n).collect() })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest part `λ_t`.
    pub fn largest(&self) -> u32 {
        *self.parts.last().expect("partitions are nonempty")
    }

    pub fn smallest(&self) -> u32 {
        self.parts[0]
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.parts.binary_search(&x).is_ok()
    }

    pub fn missing_parts(&self) -> MissingParts {
        let mut missing = Vec::with_capacity(self.largest() as usize - self.len());
        let mut next = 1;
        for &p in &self.parts {
            missing.extend(next..p);
            next = p + 1;
        }
        MissingParts { missing }
    }

    /// Minimal excludant: the smallest missing part, or 0 when nothing is missing.
    pub fn mex(&self) -> u32 {
        // parts are strictly increasing from at least 1, so the first index
        // where parts[i] != i + 1 locates the mex
        match self.parts.iter().enumerate().find(|&(i, &p)| p != i as u32 + 1) {
            Some((i, _)) => i as u32 + 1,
            None => 0,
        }
    }

    /// Number of missing parts `m = λ_t − t`.
    pub fn missing_count(&self) -> usize {
        self.largest() as usize - self.len()
    }

    /// Returns the partition with `x` added, or `None` if `x` is zero or
    /// already a part.
    pub fn with_part(&self, x: u32) -> Option<Self> {
        if x == 0 {
            return None;
        }
        match self.parts.binary_search(&x) {
            Ok(_) => None,
            Err(pos) => {
                let mut parts = self.parts.clone();
                parts.insert(pos, x);
                Some(Self { parts })
            }
        }
    }

    pub(crate) fn require_at_least_two(&self) -> Result<()> {
        if self.len() < 2 {
            return Err(Error::TooFewParts { needed: 2, got: self.len() });
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for DistinctPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<DistinctPartition> for Vec<u32> {
    fn from(p: DistinctPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Validates raw (possibly signed) input as a partition into distinct parts.
pub fn validate(parts: &[i64]) -> Result<DistinctPartition> {
    let mut out = Vec::with_capacity(parts.len());
    for &p in parts {
        if p <= 0 {
            return Err(Error::NonPositivePart(p));
        }
        let p = u32::try_from(p).map_err(|_| Error::CapExceeded {
            what: "part",
            value: p as u64,
            cap: u64::from(u32::MAX),
        })?;
        out.push(p);
    }
    DistinctPartition::new(out)
}

/// The missing parts `{1, …, λ_t} \ λ`, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MissingParts {
    missing: Vec<u32>,
}

impl MissingParts {
    /// Wraps an arbitrary increasing list of positive integers. Used to feed
    /// the forbidden-vector construction with hypothetical missing sets.
    pub fn from_values(missing: Vec<u32>) -> Result<Self> {
        if let Some(&first) = missing.first() {
            if first == 0 {
                return Err(Error::NonPositivePart(0));
            }
        }
        for w in missing.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicatePart(w[0]));
            }
            if w[0] > w[1] {
                return Err(Error::NotIncreasing { prev: w[0], next: w[1] });
            }
        }
        Ok(Self { missing })
    }

    pub fn values(&self) -> &[u32] {
        &self.missing
    }

    pub fn len(&self) -> usize {
        self.missing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn mex(&self) -> u32 {
        self.missing.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, x: u32) -> bool {
        self.missing.binary_search(&x).is_ok()
    }
}

/// `T_n = n(n+1)/2`.
pub fn triangular(n: u32) -> u64 {
    let n = u64::from(n);
    n * (n + 1) / 2
}

/// The staircase families `π_n` and `π_{n,d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CanonicalFamily {
    /// `π_n = (1, …, n)`, a partition of `T_n`.
    Complete { n: u32 },
    /// `π_{n,d}`: the staircase `π_n` with the part `d` removed, a partition
    /// of `T_n − d`. Requires `n ≥ 3` and `1 ≤ d ≤ n − 1`.
    NearComplete { n: u32, d: u32 },
}

impl CanonicalFamily {
    pub fn near_complete(n: u32, d: u32) -> Result<Self> {
        if n < 3 || d == 0 || d >= n {
            return Err(Error::InvalidQuery(format!(
                "near-complete staircase needs n >= 3 and 1 <= d <= n-1 (got n={n}, d={d})"
            )));
        }
        Ok(Self::NearComplete { n, d })
    }

    pub fn weight(&self) -> u64 {
        match *self {
            Self::Complete { n } => triangular(n),
            Self::NearComplete { n, d } => triangular(n) - u64::from(d),
        }
    }

    pub fn realize(&self) -> DistinctPartition {
        match *self {
            Self::Complete { n } => DistinctPartition::from_sorted_unchecked((1..=n).collect()),
            Self::NearComplete { n, d } => {
                DistinctPartition::from_sorted_unchecked((1..=n).filter(|&x| x != d).collect())
            }
        }
    }

    /// The staircase family member of weight `n`: `π_n` when `n` is
    /// triangular, otherwise `π_{n,d}` with `T_{n−1} < N < T_n`.
    pub fn for_weight(weight: u64) -> Result<Self> {
        if weight <= 2 {
            return Err(Error::WeightTooSmall(weight));
        }
        let mut n = 1u32;
        while triangular(n) < weight {
            n += 1;
        }
        let t = triangular(n);
        if t == weight {
            Ok(Self::Complete { n })
        } else {
            // T_{n-1} < weight < T_n, so 1 <= d <= n-1
            Self::near_complete(n, (t - weight) as u32)
        }
    }
}

/// An unrefinable partition of `weight`, taken from the staircase families.
pub fn canonical_unrefinable(weight: u64) -> Result<DistinctPartition> {
    CanonicalFamily::for_weight(weight).map(|f| f.realize())
}

/// Whether `m ≤ ⌊λ_t / 2⌋`. The bound holds for every unrefinable partition;
/// callers use it as a consistency check.
pub fn missing_bound_holds(partition: &DistinctPartition) -> bool {
    partition.missing_count() <= (partition.largest() / 2) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> DistinctPartition {
        DistinctPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(validate(&[1, 2, 3, 5, 6, 8, 9, 13]).is_ok());
        assert_eq!(validate(&[3, 3]), Err(Error::DuplicatePart(3)));
        assert_eq!(validate(&[2, 1]), Err(Error::NotIncreasing { prev: 2, next: 1 }));
        assert_eq!(validate(&[0, 1]), Err(Error::NonPositivePart(0)));
        assert_eq!(validate(&[-4]), Err(Error::NonPositivePart(-4)));
        assert_eq!(validate(&[]), Err(Error::EmptyPartition));
    }

    #[test]
    fn missing_parts_and_mex() {
        let m = p(&[1, 2, 3, 5, 6, 9, 13]).missing_parts();
        assert_eq!(m.values(), &[4, 7, 8, 10, 11, 12]);
        assert_eq!(m.mex(), 4);

        let c = DistinctPartition::complete(7).unwrap();
        assert!(c.missing_parts().is_empty());
        assert_eq!(c.mex(), 0);

        let q = p(&[1, 2, 3, 5, 6, 8, 9, 13]);
        assert_eq!(q.missing_parts().len(), 5);
        assert_eq!(q.missing_count(), 5);
        assert_eq!(p(&[2, 5]).mex(), 1);
    }

    #[test]
    fn weights_of_staircases() {
        assert_eq!(p(&[1, 2, 3]).weight(), 6);
        for n in 1..20 {
            assert_eq!(DistinctPartition::complete(n).unwrap().weight(), triangular(n));
        }
        for n in 3..15 {
            for d in 1..n {
                let fam = CanonicalFamily::near_complete(n, d).unwrap();
                assert_eq!(fam.realize().weight(), triangular(n) - u64::from(d));
                assert_eq!(fam.weight(), triangular(n) - u64::from(d));
                assert!(triangular(n - 1) < fam.weight() && fam.weight() < triangular(n));
            }
        }
        assert!(CanonicalFamily::near_complete(2, 1).is_err());
        assert!(CanonicalFamily::near_complete(5, 5).is_err());
    }

    #[test]
    fn canonical_unrefinable_examples() {
        assert_eq!(canonical_unrefinable(6).unwrap(), p(&[1, 2, 3]));
        assert_eq!(canonical_unrefinable(8).unwrap(), p(&[1, 3, 4]));
        assert_eq!(canonical_unrefinable(3).unwrap(), p(&[1, 2]));
        assert_eq!(canonical_unrefinable(2), Err(Error::WeightTooSmall(2)));
        for n in 3..=200 {
            assert_eq!(canonical_unrefinable(n).unwrap().weight(), n);
        }
    }

    #[test]
    fn missing_bound_examples() {
        let base = p(&[1, 2, 4, 5, 7, 10, 13]);
        assert_eq!(base.missing_count(), 6);
        assert!(missing_bound_holds(&base));
        assert!(missing_bound_holds(&p(&[1, 2, 3])));
        assert!(missing_bound_holds(&p(&[1, 2, 3, 5, 6, 8, 9, 13])));
        assert!(!missing_bound_holds(&p(&[1, 13])));
    }

    #[test]
    fn with_part_inserts_in_order() {
        let base = p(&[1, 2, 4]);
        assert_eq!(base.with_part(3).unwrap(), p(&[1, 2, 3, 4]));
        assert_eq!(base.with_part(9).unwrap(), p(&[1, 2, 4, 9]));
        assert!(base.with_part(2).is_none());
        assert!(base.with_part(0).is_none());
    }
}
