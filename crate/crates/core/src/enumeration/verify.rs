use serde::{Deserialize, Serialize};

use super::search::{numerical_semigroups_with_frobenius, unrefinable_with_max_part, PartitionFilter};
use super::{enumerate, CountsRecord, Family, FamilyQuery, Limits};
use crate::error::{Error, Result};
use crate::partition::{triangular, DistinctPartition};
use crate::semigroup::NumericalSet;

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdentityRow {
    pub prime: u32,
    /// Partitions with largest part `p` and `⌊p/2⌋` missing parts.
    pub ubar: u64,
    /// Symmetric numerical semigroups with Frobenius number `p`.
    pub sns: u64,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdentityReport {
    pub rows: Vec<PrimeIdentityRow>,
    pub all_equal: bool,
}

/// Counts both sides of the prime identity. The partition side runs the
/// pruned partition search, the semigroup side the closure search over gap
/// sets; the two share no code beyond the integer types.
pub fn verify_prime_identity(primes: &[u32], limits: &Limits, workers: usize) -> Result<PrimeIdentityReport> {
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        limits.check_part(p)?;
        limits.check_frobenius(p)?;
    }
    let rows: Vec<PrimeIdentityRow> = primes
        .iter()
        .map(|&p| {
            let ubar = unrefinable_with_max_part(&PartitionFilter::max_part(p).maximal_missing(), workers)?.len() as u64;
            let sns = numerical_semigroups_with_frobenius(p, true)?.len() as u64;
            Ok(PrimeIdentityRow { prime: p, ubar, sns, equal: ubar == sns })
        })
        .collect::<Result<_>>()?;
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(PrimeIdentityReport { rows, all_equal })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MirrorProperty {
    /// `x ∈ λ ⇔ λ_t − x ∉ λ` for `x ≠ λ_t/2`.
    Mirror,
    /// `λ_t/2` is not a part.
    HalfExcluded,
    /// Odd `λ_t` that is not three times a missing part gives a semigroup.
    NotTripleGivesSemigroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorViolation {
    pub partition: Vec<u32>,
    pub property: MirrorProperty,
    /// The integer the property failed at, when there is one.
    pub at: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorReport {
    pub max_part: u32,
    pub members: u64,
    /// Members whose parts form the gap set of a numerical semigroup.
    pub semigroups: u64,
    /// Members for which the triple condition applies.
    pub triple_condition_applies: u64,
    pub violations: Vec<MirrorViolation>,
}

/// Checks the mirror, half-exclusion and triple properties over every
/// partition with largest part `max_part` and the maximal number of missing
/// parts.
pub fn check_mirror_properties(max_part: u32, limits: &Limits, workers: usize) -> Result<MirrorReport> {
    limits.check_part(max_part)?;
    let members = unrefinable_with_max_part(&PartitionFilter::max_part(max_part).maximal_missing(), workers)?;
    let n = max_part;
    let mut report = MirrorReport {
        max_part,
        members: members.len() as u64,
        semigroups: 0,
        triple_condition_applies: 0,
        violations: Vec::new(),
    };
    for parts in members {
        let p = DistinctPartition::from_sorted_unchecked(parts);
        let set = NumericalSet::from_partition(&p);
        let is_semigroup = set.is_semigroup();
        if is_semigroup {
            report.semigroups += 1;
        }
        let mut violate = |property, at| {
            report.violations.push(MirrorViolation { partition: p.parts().to_vec(), property, at })
        };
        if let Some(x) = (1..n).find(|&x| 2 * x != n && p.contains(x) == p.contains(n - x)) {
            violate(MirrorProperty::Mirror, Some(x));
        }
        if n.is_multiple_of(2) && p.contains(n / 2) {
            violate(MirrorProperty::HalfExcluded, Some(n / 2));
        }
        let applies = n % 2 == 1 && p.missing_parts().values().iter().all(|&mu| 3 * mu != n);
        if applies {
            report.triple_condition_applies += 1;
            if !is_semigroup {
                violate(MirrorProperty::NotTripleGivesSemigroup, None);
            }
        }
    }
    Ok(report)
}

/// Unrefinable partitions of `weight` whose largest part is as large as
/// possible.
pub fn maximal_unrefinable(weight: u32, limits: &Limits, workers: usize) -> Result<CountsRecord> {
    let query = FamilyQuery::new(Family::Maximal { weight }).with_limits(*limits).with_workers(workers).with_listing();
    enumerate(&query)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalPropositionRow {
    pub n: u32,
    /// `T_n`, `T_n − 3` or `T_n − 4`.
    pub weight: u32,
    pub label: String,
    pub max_part: u32,
    pub maximal: Vec<Vec<u32>>,
    /// Members recognized as one of the explicit exceptional families.
    pub exceptional: Vec<Vec<u32>>,
    /// Remaining members without the maximal number of missing parts.
    pub violations: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalPropositionReport {
    pub n_max: u32,
    pub rows: Vec<MaximalPropositionRow>,
    pub holds: bool,
}

/// Staircase `(1,…,m)` followed by one larger part.
fn staircase_plus_one(parts: &[u32]) -> Option<(u32, u32)> {
    let (&last, body) = parts.split_last()?;
    let m = body.len() as u32;
    body.iter().zip(1..).all(|(&a, b)| a == b).then_some((m, last))
}

/// The explicit exceptional shapes: `(1,…,2k−3, 4k−6)`, `(1,…,2k−2, 4k−5)`
/// for `k ≥ 4`, and `(1,…,n−3, n+1, 2n−4)` for `n ≥ 6`.
pub(crate) fn is_exceptional(parts: &[u32]) -> bool {
    if let Some((m, last)) = staircase_plus_one(parts) {
        if m >= 5 && m % 2 == 1 && last == 2 * m {
            return true;
        }
        if m >= 6 && m % 2 == 0 && last == 2 * m - 1 {
            return true;
        }
    }
    if parts.len() >= 2 {
        let (body, tail) = parts.split_at(parts.len() - 2);
        let n = body.len() as u32 + 3;
        return n >= 6
            && body.iter().zip(1..).all(|(&a, b)| a == b)
            && tail == [n + 1, 2 * n - 4];
    }
    false
}

/// For every `n` from 6 to `n_max` and every weight `T_n`, `T_n − 3`,
/// `T_n − 4`, enumerates the maximal unrefinable partitions of that weight,
/// sets aside the exceptional families and checks that every other member
/// has `⌊λ_t/2⌋` missing parts.
pub fn verify_maximal_subset_proposition(n_max: u32, limits: &Limits, workers: usize) -> Result<MaximalPropositionReport> {
    if n_max >= 6 {
        let top = triangular(n_max);
        limits.check_weight(top)?;
    }
    let mut rows = Vec::new();
    for n in 6..=n_max {
        let t = triangular(n) as u32;
        for (weight, label) in [(t, format!("T_{n}")), (t - 3, format!("T_{n},3")), (t - 4, format!("T_{n},4"))] {
            let record = maximal_unrefinable(weight, limits, workers)?;
            let maximal = record.listing.unwrap_or_default();
            let max_part = maximal.first().and_then(|p| p.last().copied()).unwrap_or(0);
            let (exceptional, rest): (Vec<_>, Vec<_>) = maximal.iter().cloned().partition(|p| is_exceptional(p));
            let violations = rest
                .into_iter()
                .filter(|p| {
                    let lt = *p.last().expect("nonempty");
                    lt as usize - p.len() != (lt / 2) as usize
                })
                .collect();
            rows.push(MaximalPropositionRow { n, weight, label, max_part, maximal, exceptional, violations });
        }
    }
    let holds = rows.iter().all(|r| r.violations.is_empty());
    Ok(MaximalPropositionReport { n_max, rows, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn prime_identity_small() {
        let r = verify_prime_identity(&[5, 7, 11, 13], &Limits::default(), 1).unwrap();
        assert!(r.all_equal);
        let counts: Vec<u64> = r.rows.iter().map(|row| row.ubar).collect();
        assert_eq!(counts, vec![2, 3, 6, 8]);
    }

    #[test]
    fn prime_identity_rejects_bad_input() {
        let l = Limits::default();
        assert_eq!(verify_prime_identity(&[3], &l, 1), Err(Error::PrimeTooSmall(3)));
        assert_eq!(verify_prime_identity(&[4], &l, 1), Err(Error::NotPrime(4)));
        assert_eq!(verify_prime_identity(&[2], &l, 1), Err(Error::PrimeTooSmall(2)));
        assert!(matches!(verify_prime_identity(&[31], &l, 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn mirror_examples() {
        let l = Limits::default();
        let r = check_mirror_properties(15, &l, 1).unwrap();
        assert!(r.violations.is_empty());
        let p = DistinctPartition::new(vec![1, 2, 3, 4, 7, 9, 10, 15]).unwrap();
        assert!(!NumericalSet::from_partition(&p).is_semigroup());

        let r = check_mirror_properties(13, &l, 1).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.semigroups, r.members);

        let r = check_mirror_properties(4, &l, 1).unwrap();
        assert!(r.violations.is_empty());
    }

    #[test]
    fn exceptional_shapes() {
        assert!(is_exceptional(&[1, 2, 3, 4, 5, 10]));
        assert!(is_exceptional(&[1, 2, 3, 4, 5, 6, 11]));
        assert!(is_exceptional(&[1, 2, 3, 7, 8]));
        assert!(!is_exceptional(&[1, 2, 3]));
        assert!(!is_exceptional(&[1, 2, 4, 5, 8, 11, 14]));
    }

    #[test]
    fn exceptional_missing_counts() {
        for n in 6..20u32 {
            let mut tilde: Vec<u32> = (1..=n - 3).collect();
            tilde.extend([n + 1, 2 * n - 4]);
            let p = DistinctPartition::new(tilde).unwrap();
            assert_eq!(p.missing_count() as u32, n - 3);
            assert!(p.missing_count() < (p.largest() / 2) as usize);

            let mut stair: Vec<u32> = (1..=n - 2).collect();
            stair.push(2 * n - 5);
            let p = DistinctPartition::new(stair).unwrap();
            assert_eq!(p.missing_count() as u32, n - 4);
        }
    }

    #[test]
    fn maximal_proposition_small() {
        let r = verify_maximal_subset_proposition(9, &Limits::default(), 1).unwrap();
        assert_eq!(r.rows.len(), 12);
        let t6 = &r.rows[0];
        assert_eq!((t6.weight, t6.max_part), (21, 8));
        assert!(t6.maximal.contains(&vec![1, 2, 3, 7, 8]));
        assert_eq!(t6.exceptional, vec![vec![1, 2, 3, 7, 8]]);

        // staircases with one extra part that fall outside the exceptional
        // families (k ≥ 4 and the parity of n restrict them)
        let violations: Vec<(u32, Vec<u32>)> =
            r.rows.iter().flat_map(|row| row.violations.iter().map(|v| (row.weight, v.clone()))).collect();
        assert_eq!(
            violations,
            vec![(18, vec![1, 2, 3, 4, 8]), (17, vec![1, 2, 3, 4, 7]), (33, vec![1, 2, 3, 4, 5, 6, 12])]
        );
        assert!(!r.holds);
    }
}
