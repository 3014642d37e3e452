//! The vector of forbidden elements.
//!
//! For a partition with minimal excludant `μ₁ ≥ 1`, the vector holds one
//! threshold per residue class modulo `μ₁`. Entry `r` is the smallest integer
//! `≡ r (mod μ₁)` already known to be expressible from the missing parts, so
//! any part in class `r` at or above it gives a refinement.
//!
//! The construction processes the missing parts `μ₂ < μ₃ < …` in order. For
//! each `μ_i` with residue `r`:
//!
//! * if the current entry `p_r` is already below `μ_i`, nothing happens;
//! * otherwise `p_r := μ_i`, then
//!   1. the progression `μ₁ + k·μ_i`, `1 ≤ k ≤ μ₁ / gcd(μ₁, μ_i)`, lowers the
//!      entries of the classes it visits;
//!   2. every finite `p_j` with `j ≠ r` lowers the entry of class `j + r`
//!      through `p_j + μ_i`;
//!   3. each entry lowered in steps 1–2 is combined with the finite entries of
//!      the other classes, `p_s + p_j`, and anything lowered again is queued,
//!      until no entry changes.
//!
//! Every update keeps the minimum per class. Entries that were never reached
//! stay [`Threshold::Unbounded`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{DistinctPartition, MissingParts};

/// A single entry of the forbidden vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Threshold {
    Finite(u32),
    /// Compares greater than every finite value.
    Unbounded,
}

impl Threshold {
    pub fn finite(self) -> Option<u32> {
        match self {
            Threshold::Finite(v) => Some(v),
            Threshold::Unbounded => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Threshold::Finite(_))
    }

    /// `x` lies strictly below the threshold.
    pub fn admits(self, x: u32) -> bool {
        match self {
            Threshold::Finite(v) => x < v,
            Threshold::Unbounded => true,
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(v) => write!(f, "{v}"),
            Threshold::Unbounded => f.write_str("∞"),
        }
    }
}

/// Serialized as a JSON number, or the string `"inf"` for the sentinel.
impl Serialize for Threshold {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Threshold::Finite(v) => serializer.serialize_u32(*v),
            Threshold::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Threshold {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(u32),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Number(v) => Ok(Threshold::Finite(v)),
            Repr::Text(s) if s == "inf" => Ok(Threshold::Unbounded),
            Repr::Text(s) => Err(serde::de::Error::custom(format!("invalid threshold {s:?}"))),
        }
    }
}

/// Per-residue thresholds modulo the minimal excludant. Index `r` holds the
/// entry for residue class `r`, so the class of multiples of `μ₁` comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenVector {
    mex: u32,
    entries: Vec<Threshold>,
}

impl ForbiddenVector {
    pub fn mex(&self) -> u32 {
        self.mex
    }

    pub fn entries(&self) -> &[Threshold] {
        &self.entries
    }

    pub fn entry(&self, residue: u32) -> Threshold {
        self.entries[residue as usize]
    }

    /// Threshold governing `x`, i.e. the entry of its residue class.
    pub fn threshold_for(&self, x: u32) -> Threshold {
        self.entries[(x % self.mex) as usize]
    }

    /// `x` sits strictly below the threshold of its residue class.
    pub fn admits(&self, x: u32) -> bool {
        self.threshold_for(x).admits(x)
    }

    /// Finite entries as plain integers; `None` marks the sentinel.
    pub fn to_options(&self) -> Vec<Option<u32>> {
        self.entries.iter().map(|t| t.finite()).collect()
    }
}

impl fmt::Display for ForbiddenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// What happened while one missing part was processed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTrace {
    pub missing: u32,
    pub residue: u32,
    /// The entry of the residue class was already below the missing part.
    pub skipped: bool,
    pub after_progression: Vec<Threshold>,
    pub after_mixed_sums: Vec<Threshold>,
    pub after_closure: Vec<Threshold>,
}

/// Incremental construction state. Missing parts must be fed in increasing
/// order, starting with the ones above the mex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorBuilder {
    mex: u32,
    entries: Vec<Threshold>,
    last: u32,
}

impl VectorBuilder {
    pub fn new(mex: u32) -> Result<Self> {
        if mex == 0 {
            return Err(Error::MexUndefined);
        }
        Ok(Self { mex, entries: vec![Threshold::Unbounded; mex as usize], last: mex })
    }

    pub fn mex(&self) -> u32 {
        self.mex
    }

    pub fn entries(&self) -> &[Threshold] {
        &self.entries
    }

    pub fn admits(&self, x: u32) -> bool {
        self.entries[(x % self.mex) as usize].admits(x)
    }

    pub fn finish(self) -> ForbiddenVector {
        ForbiddenVector { mex: self.mex, entries: self.entries }
    }

    pub fn snapshot(&self) -> ForbiddenVector {
        ForbiddenVector { mex: self.mex, entries: self.entries.clone() }
    }

    /// Processes the next missing part without recording intermediate states.
    pub fn push(&mut self, missing: u32) {
        self.process(missing, None);
    }

    /// Processes the next missing part and returns the intermediate states.
    pub fn push_traced(&mut self, missing: u32) -> StepTrace {
        let mut trace = StepTrace {
            missing,
            residue: missing % self.mex,
            skipped: false,
            after_progression: Vec::new(),
            after_mixed_sums: Vec::new(),
            after_closure: Vec::new(),
        };
        self.process(missing, Some(&mut trace));
        trace
    }

    fn lower(&mut self, value: u32, queue: &mut Vec<usize>) {
        let class = (value % self.mex) as usize;
        if Threshold::Finite(value) < self.entries[class] {
            self.entries[class] = Threshold::Finite(value);
            if !queue.contains(&class) {
                queue.push(class);
            }
        }
    }

    fn process(&mut self, missing: u32, mut trace: Option<&mut StepTrace>) {
        assert!(
            missing > self.last,
            "missing parts must be pushed in increasing order above the mex"
        );
        self.last = missing;
        let m = self.mex;
        let r = (missing % m) as usize;
        if self.entries[r] < Threshold::Finite(missing) {
            if let Some(t) = trace.as_deref_mut() {
                t.skipped = true;
                t.after_progression = self.entries.clone();
                t.after_mixed_sums = self.entries.clone();
                t.after_closure = self.entries.clone();
            }
            return;
        }

        let mut queue = Vec::with_capacity(m as usize);
        self.entries[r] = Threshold::Finite(missing);
        queue.push(r);

        // progression μ₁ + kμ_i; its terms repeat classes after μ₁/gcd steps
        let steps = m / gcd(m, missing);
        for k in 1..=steps {
            self.lower(m + k * missing, &mut queue);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.after_progression = self.entries.clone();
        }

        // mixed sums against the entries as they stood before this step
        let before = self.entries.clone();
        for (j, e) in before.iter().enumerate() {
            if j == r {
                continue;
            }
            if let Threshold::Finite(v) = *e {
                self.lower(v + missing, &mut queue);
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.after_mixed_sums = self.entries.clone();
        }

        // closure: every lowered entry is summed with the other classes
        while let Some(s) = queue.pop() {
            let Threshold::Finite(ps) = self.entries[s] else { continue };
            for j in 0..m as usize {
                if j == s {
                    continue;
                }
                if let Threshold::Finite(pj) = self.entries[j] {
                    self.lower(ps + pj, &mut queue);
                }
            }
        }
        if let Some(t) = trace {
            t.after_closure = self.entries.clone();
        }
    }
}

/// Builds the forbidden vector of a missing-part set.
pub fn build_forbidden_vector(missing: &MissingParts) -> Result<ForbiddenVector> {
    let mut b = VectorBuilder::new(missing.mex())?;
    for &mu in &missing.values()[1..] {
        b.push(mu);
    }
    Ok(b.finish())
}

/// Same as [`build_forbidden_vector`], also returning one trace per missing
/// part after the mex.
pub fn build_forbidden_vector_traced(missing: &MissingParts) -> Result<(ForbiddenVector, Vec<StepTrace>)> {
    let mut b = VectorBuilder::new(missing.mex())?;
    let traces = missing.values()[1..].iter().map(|&mu| b.push_traced(mu)).collect();
    Ok((b.finish(), traces))
}

/// Unrefinability through the forbidden vector: every part must sit strictly
/// below the entry of its residue class. Partitions with no missing parts are
/// unrefinable.
pub fn check_unrefinable_fast(partition: &DistinctPartition) -> Result<bool> {
    partition.require_at_least_two()?;
    let missing = partition.missing_parts();
    if missing.is_empty() {
        return Ok(true);
    }
    let v = build_forbidden_vector(&missing)?;
    Ok(partition.parts().iter().all(|&x| v.admits(x)))
}

/// All entries finite.
pub fn is_saturated(vector: &ForbiddenVector) -> bool {
    vector.entries.iter().all(|t| t.is_finite())
}

/// Whether an unrefinable sequence with the given missing parts must stop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Finiteness {
    Finite,
    PossiblyInfinite,
}

/// `Finite` iff some missing part after the mex is coprime to it.
pub fn classify_extension_finiteness(missing: &MissingParts) -> Result<Finiteness> {
    if missing.len() < 2 {
        return Err(Error::TooFewMissing { needed: 2, got: missing.len() });
    }
    let mu1 = missing.mex();
    if missing.values()[1..].iter().any(|&mu| gcd(mu1, mu) == 1) {
        Ok(Finiteness::Finite)
    } else {
        Ok(Finiteness::PossiblyInfinite)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
