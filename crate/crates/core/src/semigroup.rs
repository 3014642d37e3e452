//! Numerical sets and numerical semigroups, represented by their gap sets.
//!
//! A numerical set `S ⊆ ℕ₀` contains 0 and has finite complement; it is
//! stored as the sorted list of its gaps, and everything above the largest
//! gap (the Frobenius number) belongs to `S`.
//!
//! Minimal generators and Apéry sets follow the definitions strictly: the
//! minimal generating set of `⟨3, 8⟩` is `{3, 8}` (16 = 8 + 8 is not
//! minimal), and its Apéry set with respect to 5 is `{0, 6, 12, 3, 9}`
//! (3 is the least element in its class).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::DistinctPartition;
use crate::refinability::{build_forbidden_vector, gcd, Threshold};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NumericalSet {
    gaps: Vec<u32>,
}

impl NumericalSet {
    /// `ℕ₀ \ gaps`. Gaps must be positive and strictly increasing.
    pub fn from_gaps(gaps: Vec<u32>) -> Result<Self> {
        if let Some(&0) = gaps.first() {
            return Err(Error::NonPositiveGap(0));
        }
        for w in gaps.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateGap(w[0]));
            }
            if w[0] > w[1] {
                return Err(Error::GapsNotIncreasing { prev: w[0], next: w[1] });
            }
        }
        Ok(Self { gaps })
    }

    /// Signed input, as read from the command line.
    pub fn from_signed_gaps(gaps: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(gaps.len());
        for &g in gaps {
            if g <= 0 {
                return Err(Error::NonPositiveGap(g));
            }
            out.push(u32::try_from(g).map_err(|_| Error::CapExceeded {
                what: "gap",
                value: g as u64,
                cap: u64::from(u32::MAX),
            })?);
        }
        Self::from_gaps(out)
    }

    /// `ℕ₀` itself.
    pub fn naturals() -> Self {
        Self { gaps: Vec::new() }
    }

    /// The numerical set whose gaps are the parts of `partition`.
    pub fn from_partition(partition: &DistinctPartition) -> Self {
        Self { gaps: partition.parts().to_vec() }
    }

    /// Gaps read back as a partition into distinct parts (`None` for `ℕ₀`).
    pub fn to_partition(&self) -> Option<DistinctPartition> {
        (!self.gaps.is_empty()).then(|| DistinctPartition::from_sorted_unchecked(self.gaps.clone()))
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn contains(&self, x: u32) -> bool {
        self.gaps.binary_search(&x).is_err()
    }

    pub fn is_gap(&self, x: u32) -> bool {
        !self.contains(x)
    }

    /// Largest gap.
    pub fn frobenius(&self) -> Result<u32> {
        self.gaps.last().copied().ok_or(Error::NoGaps)
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        // gaps are increasing from at least 1: the first i with gaps[i] != i+1
        // is the first hole in the run 1, 2, 3, …
        self.gaps
            .iter()
            .enumerate()
            .find(|&(i, &g)| g != i as u32 + 1)
            .map_or(self.gaps.len() as u32 + 1, |(i, _)| i as u32 + 1)
    }

    /// Elements of the set that are at most `bound`, in increasing order.
    pub fn elements_up_to(&self, bound: u32) -> Vec<u32> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }

    /// Elements below the Frobenius number (just `[0]` for `ℕ₀`).
    pub fn small_elements(&self) -> Vec<u32> {
        match self.gaps.last() {
            Some(&f) => self.elements_up_to(f - 1),
            None => vec![0],
        }
    }

    /// First pair of non-gaps whose sum is a gap, if any.
    pub fn closure_violation(&self) -> Option<(u32, u32, u32)> {
        let f = *self.gaps.last()?;
        let elems: Vec<u32> = self.elements_up_to(f).into_iter().filter(|&x| x > 0).collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                let s = a + b;
                if s > f {
                    break;
                }
                if self.is_gap(s) {
                    return Some((a, b, s));
                }
            }
        }
        None
    }

    /// Closed under addition (sums above the Frobenius number are always in
    /// the set, so only smaller sums are inspected).
    pub fn is_semigroup(&self) -> bool {
        self.closure_violation().is_none()
    }
}

impl fmt::Display for NumericalSet {
    /// `{0,3,6,8,9,11,12,14,→}` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.gaps.last().map_or(0, |&g| g + 1);
        let mut items: Vec<String> = self.elements_up_to(top).iter().map(|x| x.to_string()).collect();
        items.push("→".to_string());
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A numerical set verified to be closed under addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "NumericalSet", into = "NumericalSet")]
pub struct NumericalSemigroup {
    set: NumericalSet,
}

impl TryFrom<NumericalSet> for NumericalSemigroup {
    type Error = Error;

    fn try_from(set: NumericalSet) -> Result<Self> {
        match set.closure_violation() {
            Some((left, right, sum)) => Err(Error::NotSemigroup { left, right, sum }),
            None => Ok(Self { set }),
        }
    }
}

impl From<NumericalSemigroup> for NumericalSet {
    fn from(s: NumericalSemigroup) -> Self {
        s.set
    }
}

impl std::ops::Deref for NumericalSemigroup {
    type Target = NumericalSet;

    fn deref(&self) -> &NumericalSet {
        &self.set
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

/// A minimal system of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    generators: Vec<u32>,
}

impl GeneratorSet {
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }
}

/// Least elements of a semigroup in each residue class modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySet {
    pub modulus: u32,
    /// `elements[i]` is the least element `≡ i (mod modulus)`; `elements[0] = 0`.
    pub elements: Vec<u32>,
    /// The definition asks for a nonzero element of the semigroup; other
    /// moduli are computed by the same rule and flagged here.
    pub modulus_in_semigroup: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    PseudoSymmetric,
    Neither,
}

impl NumericalSemigroup {
    pub fn from_gaps(gaps: Vec<u32>) -> Result<Self> {
        NumericalSet::from_gaps(gaps)?.try_into()
    }

    pub fn naturals() -> Self {
        Self { set: NumericalSet::naturals() }
    }

    pub fn as_set(&self) -> &NumericalSet {
        &self.set
    }

    /// The submonoid `⟨A⟩`. Elements are generated in increasing order until
    /// `min(A)` consecutive members appear; everything after that run is in
    /// the monoid.
    pub fn from_generators(generators: &[u32]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        let g = generators.iter().fold(0, |acc, &a| gcd(acc, a));
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let smallest = *generators.iter().min().expect("nonempty");
        let mut member = vec![true];
        let mut run = 1u32;
        let mut gaps = Vec::new();
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let is_member =
                generators.iter().any(|&a| (a as usize) <= n && member[n - a as usize]);
            member.push(is_member);
            if is_member {
                run += 1;
            } else {
                run = 0;
                gaps.push(n as u32);
            }
        }
        Ok(Self { set: NumericalSet { gaps } })
    }

    pub fn from_signed_generators(generators: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(generators.len());
        for &a in generators {
            if a <= 0 {
                return Err(Error::NonPositiveGenerator(a));
            }
            out.push(u32::try_from(a).map_err(|_| Error::CapExceeded {
                what: "generator",
                value: a as u64,
                cap: u64::from(u32::MAX),
            })?);
        }
        Self::from_generators(&out)
    }

    pub fn apery_set(&self, modulus: u32) -> Result<AperySet> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let elements = (0..modulus)
            .map(|i| {
                let mut w = i;
                while !self.contains(w) {
                    w += modulus;
                }
                w
            })
            .collect();
        Ok(AperySet { modulus, elements, modulus_in_semigroup: self.contains(modulus) })
    }

    /// Nonzero elements that are not sums of two nonzero elements. Minimal
    /// generators never exceed `F + M`.
    pub fn minimal_generators(&self) -> GeneratorSet {
        let m = self.multiplicity();
        let bound = self.gaps.last().map_or(m, |&f| f + m);
        let elems: Vec<u32> = self.elements_up_to(bound).into_iter().filter(|&x| x > 0).collect();
        let lookup: BTreeSet<u32> = elems.iter().copied().collect();
        let generators = elems
            .iter()
            .copied()
            .filter(|&x| !elems.iter().take_while(|&&a| 2 * a <= x).any(|&a| lookup.contains(&(x - a))))
            .collect();
        GeneratorSet { generators }
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().embedding_dimension()
    }

    /// `F` odd and `F − x ∈ S` for every gap `x`.
    pub fn is_symmetric(&self) -> bool {
        let Some(&f) = self.gaps.last() else { return false };
        f % 2 == 1 && self.gaps.iter().all(|&x| self.contains(f - x))
    }

    /// `F` even and `F − x ∈ S` for every gap `x ≠ F/2`.
    pub fn is_pseudo_symmetric(&self) -> bool {
        let Some(&f) = self.gaps.last() else { return false };
        f % 2 == 0 && self.gaps.iter().all(|&x| 2 * x == f || self.contains(f - x))
    }

    /// `G = (F + 1) / 2`, equivalent to symmetry for semigroups.
    pub fn is_symmetric_by_genus(&self) -> bool {
        let Some(&f) = self.gaps.last() else { return false };
        f % 2 == 1 && 2 * self.genus() == f as usize + 1
    }

    /// `G = (F + 2) / 2`, equivalent to pseudo-symmetry for semigroups.
    pub fn is_pseudo_symmetric_by_genus(&self) -> bool {
        let Some(&f) = self.gaps.last() else { return false };
        f % 2 == 0 && 2 * self.genus() == f as usize + 2
    }

    pub fn symmetry(&self) -> Symmetry {
        if self.is_symmetric() {
            Symmetry::Symmetric
        } else if self.is_pseudo_symmetric() {
            Symmetry::PseudoSymmetric
        } else {
            Symmetry::Neither
        }
    }
}

/// Numerical set whose gaps are the parts of the partition.
pub fn set_from_partition(partition: &DistinctPartition) -> NumericalSet {
    NumericalSet::from_partition(partition)
}

/// One residue position of an Apéry set / forbidden vector comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionComparison {
    pub residue: u32,
    pub apery: u32,
    pub forbidden: Threshold,
    /// The Apéry element lies below the Frobenius number, i.e. it is a
    /// missing part of the gap partition.
    pub binding: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyComparison {
    pub multiplicity: u32,
    pub apery: AperySet,
    pub forbidden: Vec<Threshold>,
    pub positions: Vec<PositionComparison>,
    /// Every position except the first agrees.
    pub agrees_except_first: bool,
    /// Every binding position except the first agrees.
    pub agrees_on_binding_positions: bool,
    /// The first vector entry equals `2·M(S)`.
    pub first_is_double_multiplicity: bool,
}

/// Compares `Ap(S, M(S))` with the forbidden vector of the gap partition.
pub fn apery_vs_forbidden(semigroup: &NumericalSemigroup) -> Result<AperyComparison> {
    let partition = semigroup.to_partition().ok_or(Error::NoGaps)?;
    let missing = partition.missing_parts();
    let f = partition.largest();
    let m = semigroup.multiplicity();
    // with M(S) > F the gap partition is complete and has no vector
    let vector = build_forbidden_vector(&missing)?;
    debug_assert_eq!(vector.mex(), m);
    let apery = semigroup.apery_set(m)?;
    let positions: Vec<PositionComparison> = (0..m)
        .map(|r| {
            let a = apery.elements[r as usize];
            let v = vector.entry(r);
            PositionComparison {
                residue: r,
                apery: a,
                forbidden: v,
                binding: a < f,
                agrees: v == Threshold::Finite(a),
            }
        })
        .collect();
    let agrees_except_first = positions.iter().skip(1).all(|p| p.agrees);
    let agrees_on_binding_positions = positions.iter().skip(1).filter(|p| p.binding).all(|p| p.agrees);
    Ok(AperyComparison {
        multiplicity: m,
        forbidden: vector.entries().to_vec(),
        first_is_double_multiplicity: vector.entry(0) == Threshold::Finite(2 * m),
        apery,
        positions,
        agrees_except_first,
        agrees_on_binding_positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gaps: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(gaps.to_vec()).unwrap()
    }

    #[test]
    fn from_gaps_and_display() {
        let s = NumericalSet::from_gaps(vec![1, 2, 4, 5, 7, 10, 13]).unwrap();
        assert_eq!(s.to_string(), "{0,3,6,8,9,11,12,14,→}");
        assert_eq!(NumericalSet::naturals().to_string(), "{0,→}");
        let t = NumericalSet::from_gaps(vec![1, 2, 3, 5, 6, 9, 13]).unwrap();
        assert_eq!(t.to_string(), "{0,4,7,8,10,11,12,14,→}");
        assert_eq!(NumericalSet::from_gaps(vec![0, 1]), Err(Error::NonPositiveGap(0)));
        assert_eq!(NumericalSet::from_gaps(vec![2, 2]), Err(Error::DuplicateGap(2)));
        assert!(NumericalSet::from_gaps(vec![3, 2]).is_err());
    }

    #[test]
    fn closure_checks() {
        assert!(NumericalSet::from_gaps(vec![1, 2, 4, 5, 7, 10, 13]).unwrap().is_semigroup());
        let s = NumericalSet::from_gaps(vec![1, 2, 5, 6, 8]).unwrap();
        assert_eq!(s.closure_violation(), Some((3, 3, 6)));
        assert!(NumericalSet::naturals().is_semigroup());
    }

    #[test]
    fn invariants_of_examples() {
        let s = sg(&[1, 2, 4, 5, 7, 10, 13]);
        assert_eq!((s.frobenius().unwrap(), s.genus(), s.multiplicity()), (13, 7, 3));
        let n = NumericalSemigroup::naturals();
        assert_eq!((n.genus(), n.multiplicity()), (0, 1));
        assert_eq!(n.frobenius(), Err(Error::NoGaps));
        let t = sg(&[1, 2, 3, 5, 6, 9, 13]);
        assert_eq!((t.frobenius().unwrap(), t.genus(), t.multiplicity()), (13, 7, 4));
    }

    #[test]
    fn generators() {
        assert_eq!(NumericalSemigroup::from_generators(&[3, 8]).unwrap().gaps(), &[1, 2, 4, 5, 7, 10, 13]);
        assert_eq!(NumericalSemigroup::from_generators(&[1]).unwrap(), NumericalSemigroup::naturals());
        assert_eq!(NumericalSemigroup::from_generators(&[2, 4]), Err(Error::NotCofinite(2)));
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyGenerators));
        assert_eq!(NumericalSemigroup::from_generators(&[3, 0]), Err(Error::NonPositiveGenerator(0)));

        assert_eq!(sg(&[1, 2, 4, 5, 7, 10, 13]).minimal_generators().generators(), &[3, 8]);
        assert_eq!(NumericalSemigroup::naturals().minimal_generators().generators(), &[1]);
        let s57 = NumericalSemigroup::from_generators(&[5, 7]).unwrap();
        assert_eq!(s57.minimal_generators().generators(), &[5, 7]);
        assert_eq!(NumericalSemigroup::from_generators(&[5, 7]).unwrap(), s57);
    }

    #[test]
    fn apery_sets() {
        let s = sg(&[1, 2, 4, 5, 7, 10, 13]);
        let a = s.apery_set(3).unwrap();
        assert_eq!(a.elements, vec![0, 16, 8]);
        assert!(a.modulus_in_semigroup);
        let b = s.apery_set(5).unwrap();
        assert_eq!(b.elements, vec![0, 6, 12, 3, 9]);
        assert!(!b.modulus_in_semigroup);
        assert_eq!(sg(&[1, 2, 3, 5, 6, 9, 13]).apery_set(4).unwrap().elements, vec![0, 17, 10, 7]);
        assert_eq!(s.apery_set(1).unwrap().elements, vec![0]);
        assert_eq!(s.apery_set(0), Err(Error::ZeroModulus));
    }

    #[test]
    fn symmetry_classes() {
        let s23 = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s23.gaps(), &[1]);
        assert!(s23.is_symmetric() && s23.is_symmetric_by_genus());

        let s = sg(&[1, 2, 3, 5, 7, 9, 11, 15]);
        assert_eq!(s.to_string(), "{0,4,6,8,10,12,13,14,16,→}");
        assert!(s.is_symmetric());
        assert_eq!(s.genus(), 8);

        let s34 = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        assert_eq!(s34.gaps(), &[1, 2, 5]);
        assert!(!s34.is_pseudo_symmetric());
        assert_eq!(s34.symmetry(), Symmetry::Symmetric);

        let s345 = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s345.gaps(), &[1, 2]);
        assert_eq!(s345.symmetry(), Symmetry::PseudoSymmetric);
        assert!(s345.is_pseudo_symmetric_by_genus());
    }

    #[test]
    fn partition_correspondence() {
        let lam = DistinctPartition::new(vec![1, 2, 3, 5, 6, 9, 13]).unwrap();
        let s = set_from_partition(&lam);
        assert_eq!(s.to_string(), "{0,4,7,8,10,11,12,14,→}");
        assert_eq!(s.genus(), lam.len());
        assert_eq!(s.frobenius().unwrap(), lam.largest());
        assert_eq!(s.multiplicity(), lam.mex());

        let non = set_from_partition(&DistinctPartition::new(vec![1, 2, 5, 6, 8]).unwrap());
        assert_eq!(non.to_string(), "{0,3,4,7,9,→}");
        assert!(!non.is_semigroup());

        let one = set_from_partition(&DistinctPartition::new(vec![1]).unwrap());
        assert_eq!(one.to_string(), "{0,2,→}");
    }

    #[test]
    fn apery_against_vector() {
        let c = apery_vs_forbidden(&sg(&[1, 2, 3, 5, 6, 9, 13])).unwrap();
        assert_eq!(c.apery.elements, vec![0, 17, 10, 7]);
        assert_eq!(c.forbidden, vec![Threshold::Finite(8), Threshold::Finite(17), Threshold::Finite(10), Threshold::Finite(7)]);
        assert!(c.agrees_except_first && c.first_is_double_multiplicity);
        assert!(!c.positions[0].agrees);

        // ⟨3,4⟩: the classes without missing parts get thresholds above F
        let c = apery_vs_forbidden(&NumericalSemigroup::from_generators(&[3, 4]).unwrap()).unwrap();
        assert_eq!(c.apery.elements, vec![0, 4, 8]);
        assert_eq!(c.forbidden, vec![Threshold::Finite(15), Threshold::Finite(4), Threshold::Finite(11)]);
        assert!(c.agrees_on_binding_positions);
        assert!(!c.agrees_except_first);

        // ⟨2,3⟩: the gap partition (1) has no missing parts
        assert_eq!(
            apery_vs_forbidden(&NumericalSemigroup::from_generators(&[2, 3]).unwrap()),
            Err(Error::MexUndefined)
        );
        let s25 = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
        assert_eq!(apery_vs_forbidden(&s25).unwrap().positions.len(), 2);
    }
}
