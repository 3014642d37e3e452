use std::collections::BTreeSet;

use proptest::prelude::*;

use unref_core::enumeration::{enumerate, Family, FamilyQuery};
use unref_core::partition::validate;
use unref_core::refinability::{
    brute_force_refinement, build_forbidden_vector, check_unrefinable_fast, extension_lattice, Threshold,
};
use unref_core::semigroup::{NumericalSemigroup, NumericalSet};
use unref_core::young::{diagram_from_set, hook_grid, semigroup_by_hooks, unrefinable_by_hooks, YoungDiagram};
use unref_core::DistinctPartition;

fn gap_set(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(1..=max, 1..=max as usize).prop_map(|s| s.into_iter().collect())
}

fn partition(max: u32) -> impl Strategy<Value = DistinctPartition> {
    prop::collection::btree_set(1..=max, 2..=max as usize)
        .prop_map(|s| DistinctPartition::new(s.into_iter().collect()).unwrap())
}

fn unrefinable(p: &DistinctPartition) -> bool {
    brute_force_refinement(p).unwrap().is_none()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn diagram_round_trip(gaps in gap_set(24)) {
        let set = NumericalSet::from_gaps(gaps).unwrap();
        let y = diagram_from_set(&set).unwrap();
        prop_assert_eq!(YoungDiagram::reconstruct_set(y.rows()).unwrap(), set.clone());
        prop_assert_eq!(y.row_count(), set.genus());
        prop_assert!(y.rows().windows(2).all(|w| w[0] >= w[1]));
        // first-column hooks are the gaps, largest first
        let mut first = hook_grid(&y).first_column();
        first.reverse();
        prop_assert_eq!(first.as_slice(), set.gaps());
    }

    #[test]
    fn hook_criteria_match_definitions(gaps in gap_set(22)) {
        let set = NumericalSet::from_gaps(gaps.clone()).unwrap();
        let y = diagram_from_set(&set).unwrap();
        prop_assert_eq!(semigroup_by_hooks(&y), set.is_semigroup());
        if gaps.len() >= 2 {
            let p = DistinctPartition::new(gaps).unwrap();
            prop_assert_eq!(unrefinable_by_hooks(&y), unrefinable(&p));
        }
    }

    #[test]
    fn fast_check_matches_oracle_beyond_sweep(p in partition(36)) {
        prop_assert_eq!(check_unrefinable_fast(&p).unwrap(), unrefinable(&p));
    }

    #[test]
    fn validate_accepts_exactly_increasing_positive(v in prop::collection::vec(-3i64..30, 0..10)) {
        let ok = !v.is_empty() && v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] < w[1]);
        prop_assert_eq!(validate(&v).is_ok(), ok);
    }

    #[test]
    fn missing_parts_complement_parts(p in partition(30)) {
        let missing = p.missing_parts();
        let mut all: Vec<u32> = p.parts().iter().chain(missing.values()).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=p.largest()).collect::<Vec<_>>());
        prop_assert_eq!(p.mex(), missing.values().first().copied().unwrap_or(0));
    }

    #[test]
    fn generators_regenerate(gens in prop::collection::vec(2u32..25, 1..5)) {
        prop_assume!(gens.iter().fold(0, |a, &b| gcd(a, b)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert!(s.is_semigroup());
        let msg = s.minimal_generators();
        let again = NumericalSemigroup::from_generators(msg.generators()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert!(msg.generators().iter().all(|g| gens.contains(g)));
        prop_assert!(msg.embedding_dimension() as u32 <= s.multiplicity());
    }

    #[test]
    fn apery_set_is_coherent(gens in prop::collection::vec(2u32..20, 2..4), n in 1u32..12) {
        prop_assume!(gens.iter().fold(0, |a, &b| gcd(a, b)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let ap = s.apery_set(n).unwrap();
        prop_assert_eq!(ap.elements.len(), n as usize);
        for (r, &w) in ap.elements.iter().enumerate() {
            prop_assert_eq!(w % n, r as u32);
            prop_assert!(s.contains(w));
            prop_assert!(w < n || !s.contains(w - n));
        }
    }

    #[test]
    fn semigroup_vector_starts_at_twice_the_mex(gens in prop::collection::vec(2u32..20, 2..4)) {
        prop_assume!(gens.iter().fold(0, |a, &b| gcd(a, b)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let p = s.to_partition().unwrap();
        let m = p.mex();
        prop_assume!(m > 0 && 2 * m <= p.largest());
        let v = build_forbidden_vector(&p.missing_parts()).unwrap();
        prop_assert_eq!(v.entry(0), Threshold::Finite(2 * m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lattice_is_sound_and_complete(n in 4u32..=15, pick in any::<prop::sample::Index>()) {
        let members = enumerate(&FamilyQuery::new(Family::UMaxPart { max_part: n }).with_listing()).unwrap();
        let members: Vec<Vec<u32>> = members.listing.unwrap().into_iter().filter(|q| q.len() < n as usize).collect();
        let p = DistinctPartition::new(pick.get(&members).clone()).unwrap();
        let l = extension_lattice(&p);
        let nodes: BTreeSet<Vec<u32>> = (0..l.node_count()).map(|i| l.realize(i).parts().to_vec()).collect();
        for parts in &nodes {
            let q = DistinctPartition::new(parts.clone()).unwrap();
            prop_assert!(unrefinable(&q));
            prop_assert_eq!((q.mex(), q.largest()), (p.mex(), p.largest()));
        }
        // every unrefinable superset with the same largest part and mex
        let free: Vec<u32> = p.missing_parts().values().iter().copied().filter(|&x| x > p.mex()).collect();
        let mut expected = BTreeSet::new();
        for mask in 0u32..(1 << free.len()) {
            let mut parts: Vec<u32> = p.parts().to_vec();
            parts.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
            parts.sort_unstable();
            let q = DistinctPartition::new(parts.clone()).unwrap();
            if unrefinable(&q) {
                expected.insert(parts);
            }
        }
        prop_assert_eq!(nodes, expected);
    }
}
