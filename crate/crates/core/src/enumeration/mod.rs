//! Exhaustive enumeration of the partition and semigroup families, and the
//! verifiers built on them.
//!
//! Partitions are searched depth-first over the integers `1, 2, …`, deciding
//! for each whether it is a part. Missing integers are fed, in increasing
//! order, into an incremental forbidden vector, and an integer may only be
//! taken as a part while it sits below the threshold of its residue class.
//! Because a part can only be a sum of smaller missing parts, a rejected
//! prefix can never be completed, so the pruning is exact.

mod search;
mod verify;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use search::{
    filter_partitions_exhaustive, numerical_semigroups_with_frobenius, unrefinable_with_max_part,
    unrefinable_with_weight, PartitionFilter,
};
pub use verify::{
    check_mirror_properties, is_prime, maximal_unrefinable, verify_maximal_subset_proposition,
    verify_prime_identity, MaximalPropositionReport, MaximalPropositionRow, MirrorProperty,
    MirrorReport, MirrorViolation, PrimeIdentityReport, PrimeIdentityRow,
};

/// Environment variable overriding the default caps: `<max_part>` or
/// `<max_part>,<max_weight>`.
pub const CAP_ENV_VAR: &str = "UNREF_MAX_CAP";

/// Hard caps keeping enumeration runs bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest admissible maximal part / Frobenius number.
    pub max_part: u32,
    /// Largest admissible weight.
    pub max_weight: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_part: 30, max_weight: 120 }
    }
}

impl Limits {
    /// Semigroup searches keep element sets in a 128-bit mask.
    pub const ABSOLUTE_MAX_PART: u32 = 127;

    /// Defaults, overridden by [`CAP_ENV_VAR`] when it is set and parses.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV_VAR) {
            Ok(raw) => Self::parse(&raw),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(raw: &str) -> Result<Self> {
        let bad = || Error::InvalidQuery(format!("{CAP_ENV_VAR} must be <max_part>[,<max_weight>], got {raw:?}"));
        let mut it = raw.split(',').map(|s| s.trim().parse::<u32>());
        let max_part = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
        let max_weight = match it.next() {
            Some(v) => v.map_err(|_| bad())?,
            None => Self::default().max_weight,
        };
        if it.next().is_some() || max_part == 0 || max_weight == 0 {
            return Err(bad());
        }
        Ok(Self { max_part, max_weight })
    }

    pub(crate) fn check_part(&self, value: u32) -> Result<()> {
        if value > self.max_part {
            return Err(Error::CapExceeded { what: "max part", value: value.into(), cap: self.max_part.into() });
        }
        Ok(())
    }

    pub(crate) fn check_frobenius(&self, value: u32) -> Result<()> {
        let cap = self.max_part.min(Self::ABSOLUTE_MAX_PART);
        if value > cap {
            return Err(Error::CapExceeded { what: "Frobenius number", value: value.into(), cap: cap.into() });
        }
        Ok(())
    }

    pub(crate) fn check_weight(&self, value: u64) -> Result<()> {
        if value > u64::from(self.max_weight) {
            return Err(Error::CapExceeded { what: "weight", value, cap: self.max_weight.into() });
        }
        Ok(())
    }
}

/// The enumerable families. Partition families contain partitions with at
/// least two parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Unrefinable partitions of a given weight.
    UWeight { weight: u32 },
    /// Unrefinable partitions with a given largest part.
    UMaxPart { max_part: u32 },
    /// … with the maximal number `⌊λ_t/2⌋` of missing parts.
    UBar { max_part: u32 },
    /// Unrefinable partitions with given largest part and mex (mex 0 selects
    /// the complete staircase).
    UMex { max_part: u32, mex: u32 },
    UBarMex { max_part: u32, mex: u32 },
    /// Numerical semigroups with a given Frobenius number.
    NsFrobenius { frobenius: u32 },
    /// Symmetric numerical semigroups with a given Frobenius number.
    SnsFrobenius { frobenius: u32 },
    /// Unrefinable partitions of a weight attaining the largest possible
    /// maximal part.
    Maximal { weight: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyQuery {
    pub family: Family,
    pub limits: Limits,
    /// Keep the members, not just the count.
    pub list: bool,
    /// Worker threads; results do not depend on it.
    pub workers: usize,
}

impl FamilyQuery {
    pub fn new(family: Family) -> Self {
        Self { family, limits: Limits::default(), list: false, workers: 1 }
    }

    pub fn with_listing(mut self) -> Self {
        self.list = true;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountsRecord {
    pub query: FamilyQuery,
    pub count: u64,
    /// Members in lexicographic order: partitions by their parts, semigroups
    /// by their gaps.
    pub listing: Option<Vec<Vec<u32>>>,
    pub wall_time_ms: f64,
}

/// Runs a family query.
pub fn enumerate(query: &FamilyQuery) -> Result<CountsRecord> {
    let start = Instant::now();
    let members = members_of(query)?;
    let count = members.len() as u64;
    Ok(CountsRecord {
        query: *query,
        count,
        listing: query.list.then_some(members),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Sorted members of a family (partitions as parts, semigroups as gaps).
pub fn members_of(query: &FamilyQuery) -> Result<Vec<Vec<u32>>> {
    let limits = &query.limits;
    let workers = query.workers.max(1);
    match query.family {
        Family::UWeight { weight } => {
            limits.check_weight(weight.into())?;
            unrefinable_with_weight(weight, workers)
        }
        Family::UMaxPart { max_part } => {
            limits.check_part(max_part)?;
            unrefinable_with_max_part(&PartitionFilter::max_part(max_part), workers)
        }
        Family::UBar { max_part } => {
            limits.check_part(max_part)?;
            unrefinable_with_max_part(&PartitionFilter::max_part(max_part).maximal_missing(), workers)
        }
        Family::UMex { max_part, mex } => {
            limits.check_part(max_part)?;
            check_mex(max_part, mex)?;
            unrefinable_with_max_part(&PartitionFilter::max_part(max_part).with_mex(mex), workers)
        }
        Family::UBarMex { max_part, mex } => {
            limits.check_part(max_part)?;
            check_mex(max_part, mex)?;
            unrefinable_with_max_part(
                &PartitionFilter::max_part(max_part).with_mex(mex).maximal_missing(),
                workers,
            )
        }
        Family::NsFrobenius { frobenius } => {
            limits.check_frobenius(frobenius)?;
            numerical_semigroups_with_frobenius(frobenius, false)
        }
        Family::SnsFrobenius { frobenius } => {
            limits.check_frobenius(frobenius)?;
            numerical_semigroups_with_frobenius(frobenius, true)
        }
        Family::Maximal { weight } => {
            limits.check_weight(weight.into())?;
            if weight <= 2 {
                return Err(Error::WeightTooSmall(weight.into()));
            }
            let all = unrefinable_with_weight(weight, workers)?;
            let top = all.iter().map(|p| *p.last().expect("nonempty")).max().unwrap_or(0);
            Ok(all.into_iter().filter(|p| *p.last().expect("nonempty") == top).collect())
        }
    }
}

fn check_mex(max_part: u32, mex: u32) -> Result<()> {
    if mex >= max_part {
        return Err(Error::InvalidQuery(format!("mex {mex} must be below the largest part {max_part}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_parse() {
        assert_eq!(Limits::parse("40").unwrap(), Limits { max_part: 40, max_weight: 120 });
        assert_eq!(Limits::parse("40,200").unwrap(), Limits { max_part: 40, max_weight: 200 });
        assert!(Limits::parse("x").is_err());
        assert!(Limits::parse("1,2,3").is_err());
        assert!(Limits::parse("0").is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let q = FamilyQuery::new(Family::UMaxPart { max_part: 31 });
        assert!(matches!(enumerate(&q), Err(Error::CapExceeded { .. })));
        let q = FamilyQuery::new(Family::UWeight { weight: 121 });
        assert!(matches!(enumerate(&q), Err(Error::CapExceeded { .. })));
        let q = FamilyQuery::new(Family::NsFrobenius { frobenius: 31 });
        assert!(matches!(enumerate(&q), Err(Error::CapExceeded { .. })));
        let q = FamilyQuery::new(Family::Maximal { weight: 2 });
        assert_eq!(enumerate(&q), Err(Error::WeightTooSmall(2)));
    }

    #[test]
    fn small_families() {
        let r = enumerate(&FamilyQuery::new(Family::UMaxPart { max_part: 2 }).with_listing()).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.listing.unwrap(), vec![vec![1, 2]]);

        let r = enumerate(&FamilyQuery::new(Family::UMex { max_part: 13, mex: 3 })).unwrap();
        assert_eq!(r.count, 12);
        assert!(r.listing.is_none());

        let r = enumerate(&FamilyQuery::new(Family::UBarMex { max_part: 13, mex: 3 }).with_listing()).unwrap();
        assert_eq!(r.listing.unwrap(), vec![vec![1, 2, 4, 5, 7, 10, 13]]);

        let ubar = enumerate(&FamilyQuery::new(Family::UBar { max_part: 13 })).unwrap().count;
        let sns = enumerate(&FamilyQuery::new(Family::SnsFrobenius { frobenius: 13 })).unwrap().count;
        assert_eq!((ubar, sns), (8, 8));

        let r = enumerate(&FamilyQuery::new(Family::Maximal { weight: 6 }).with_listing()).unwrap();
        assert_eq!(r.listing.unwrap(), vec![vec![1, 2, 3]]);
        let r = enumerate(&FamilyQuery::new(Family::Maximal { weight: 21 }).with_listing()).unwrap();
        assert_eq!(r.listing.unwrap(), vec![vec![1, 2, 3, 7, 8]]);
    }

    #[test]
    fn mex_must_be_below_max_part() {
        let q = FamilyQuery::new(Family::UMex { max_part: 5, mex: 5 });
        assert!(matches!(enumerate(&q), Err(Error::InvalidQuery(_))));
    }
}
