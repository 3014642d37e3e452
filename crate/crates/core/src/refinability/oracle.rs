//! Exhaustive subset-sum search for refinements.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::DistinctPartition;

/// A part together with at least two distinct missing parts summing to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementWitness {
    pub part: u32,
    pub summands: Vec<u32>,
}

/// Searches for the smallest refinable part of `partition`.
///
/// Parts are scanned in increasing order. For each one the search first looks
/// for a pair of distinct missing parts and only falls back to a general
/// subset-sum search (with at least two summands) when no pair exists, so a
/// two-summand witness is returned whenever the minimal refinable part has
/// one.
pub fn brute_force_refinement(partition: &DistinctPartition) -> Result<Option<RefinementWitness>> {
    partition.require_at_least_two()?;
    let missing = partition.missing_parts();
    Ok(find_refinement(partition.parts(), missing.values()))
}

/// Core search over explicit part and missing lists.
fn find_refinement(parts: &[u32], missing: &[u32]) -> Option<RefinementWitness> {
    for &part in parts {
        let below: Vec<u32> = missing.iter().copied().take_while(|&m| m < part).collect();
        if below.len() < 2 {
            continue;
        }
        if let Some(pair) = pair_summing_to(&below, part) {
            return Some(RefinementWitness { part, summands: pair.to_vec() });
        }
        if let Some(summands) = subset_summing_to(&below, part) {
            return Some(RefinementWitness { part, summands });
        }
    }
    None
}

fn pair_summing_to(sorted: &[u32], target: u32) -> Option<[u32; 2]> {
    let (mut lo, mut hi) = (0usize, sorted.len().checked_sub(1)?);
    while lo < hi {
        let s = sorted[lo] + sorted[hi];
        match s.cmp(&target) {
            std::cmp::Ordering::Equal => return Some([sorted[lo], sorted[hi]]),
            std::cmp::Ordering::Less => lo += 1,
            std::cmp::Ordering::Greater => hi -= 1,
        }
    }
    None
}

/// 0/1 knapsack over `items` tracking how many items were used (capped at 2),
/// reconstructing one subset of size ≥ 2 that sums to `target`.
fn subset_summing_to(items: &[u32], target: u32) -> Option<Vec<u32>> {
    let t = target as usize;
    // reach[i][s][c]: using the first i items, sum s is reachable with
    // min(count, 2) == c
    let mut reach = vec![vec![[false; 3]; t + 1]; items.len() + 1];
    reach[0][0][0] = true;
    for (i, &item) in items.iter().enumerate() {
        let w = item as usize;
        for s in 0..=t {
            for c in 0..3 {
                if !reach[i][s][c] {
                    continue;
                }
                reach[i + 1][s][c] = true;
                if s + w <= t {
                    reach[i + 1][s + w][(c + 1).min(2)] = true;
                }
            }
        }
    }
    if !reach[items.len()][t][2] {
        return None;
    }
    let mut out = Vec::new();
    let (mut s, mut c) = (t, 2usize);
    for i in (0..items.len()).rev() {
        if reach[i][s][c] {
            continue;
        }
        let w = items[i] as usize;
        // item i must be taken; find the predecessor count class
        let prev_c = if c == 2 {
            if reach[i][s - w][2] {
                2
            } else {
                1
            }
        } else {
            c - 1
        };
        out.push(items[i]);
        s -= w;
        c = prev_c;
    }
    debug_assert_eq!(s, 0);
    out.reverse();
    Some(out)
}
