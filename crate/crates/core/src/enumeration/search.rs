use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::DistinctPartition;
use crate::refinability::VectorBuilder;

/// Constraints for partitions with a fixed largest part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionFilter {
    pub max_part: u32,
    /// Required mex; `Some(0)` means no missing parts at all.
    pub mex: Option<u32>,
    /// Only partitions with exactly `⌊max_part/2⌋` missing parts.
    pub maximal_missing: bool,
}

impl PartitionFilter {
    pub fn max_part(max_part: u32) -> Self {
        Self { max_part, mex: None, maximal_missing: false }
    }

    pub fn with_mex(mut self, mex: u32) -> Self {
        self.mex = Some(mex);
        self
    }

    pub fn maximal_missing(mut self) -> Self {
        self.maximal_missing = true;
        self
    }

    fn missing_target(&self) -> Option<u32> {
        self.maximal_missing.then_some(self.max_part / 2)
    }
}

#[derive(Debug, Clone)]
struct Node {
    next: u32,
    parts: Vec<u32>,
    missing: u32,
    remaining: u32,
    vector: Option<VectorBuilder>,
}

impl Node {
    fn root(remaining: u32) -> Self {
        Self { next: 1, parts: Vec::new(), missing: 0, remaining, vector: None }
    }

    fn admits(&self, v: u32) -> bool {
        self.vector.as_ref().is_none_or(|b| b.admits(v))
    }

    fn include(&self, v: u32) -> Self {
        let mut parts = self.parts.clone();
        parts.push(v);
        Self {
            next: v + 1,
            parts,
            missing: self.missing,
            remaining: self.remaining.saturating_sub(v),
            vector: self.vector.clone(),
        }
    }

    fn exclude(self, v: u32) -> Self {
        let vector = match self.vector {
            None => VectorBuilder::new(v).expect("v ≥ 1"),
            Some(mut b) => {
                b.push(v);
                b
            }
        };
        Self { next: v + 1, missing: self.missing + 1, vector: Some(vector), ..self }
    }
}

trait Strategy: Sync {
    /// Decides `node.next`, pushing finished partitions and open children.
    fn expand(&self, node: Node, emit: &mut Vec<Vec<u32>>, children: &mut Vec<Node>);
}

struct ByMaxPart(PartitionFilter);

impl Strategy for ByMaxPart {
    fn expand(&self, node: Node, emit: &mut Vec<Vec<u32>>, children: &mut Vec<Node>) {
        let f = &self.0;
        let n = f.max_part;
        let v = node.next;
        if v == n {
            let count_ok = f.missing_target().is_none_or(|t| node.missing == t);
            if count_ok && !node.parts.is_empty() && node.admits(n) {
                let mut parts = node.parts;
                parts.push(n);
                emit.push(parts);
            }
            return;
        }
        let later = n - 1 - v;
        let may_include = node.admits(v)
            && f.mex != Some(v)
            && f.missing_target().is_none_or(|t| node.missing + later >= t);
        let may_exclude = match f.mex {
            Some(m) => m != 0 && v >= m,
            None => true,
        } && f.missing_target().is_none_or(|t| node.missing < t);
        if may_include {
            children.push(node.include(v));
        }
        if may_exclude {
            children.push(node.exclude(v));
        }
    }
}

struct ByWeight;

impl Strategy for ByWeight {
    fn expand(&self, node: Node, emit: &mut Vec<Vec<u32>>, children: &mut Vec<Node>) {
        let v = node.next;
        let r = node.remaining;
        if v <= r && node.admits(v) {
            if v == r {
                if !node.parts.is_empty() {
                    let mut parts = node.parts.clone();
                    parts.push(v);
                    emit.push(parts);
                }
            } else {
                children.push(node.include(v));
            }
        }
        // leaving v out needs room for a larger part
        if r > v {
            children.push(node.exclude(v));
        }
    }
}

fn dfs<S: Strategy>(strategy: &S, root: Node) -> Vec<Vec<u32>> {
    let mut emit = Vec::new();
    let mut stack = vec![root];
    let mut children = Vec::new();
    while let Some(node) = stack.pop() {
        strategy.expand(node, &mut emit, &mut children);
        stack.append(&mut children);
    }
    emit
}

/// Splits the search tree into a frontier of subtrees, explores them on a
/// pool of `workers` threads and merges the results in sorted order, so the
/// output does not depend on the worker count.
fn run<S: Strategy>(strategy: &S, root: Node, workers: usize) -> Vec<Vec<u32>> {
    let pool = (workers > 1)
        .then(|| rayon::ThreadPoolBuilder::new().num_threads(workers).build().ok())
        .flatten();
    let mut out = match pool {
        None => dfs(strategy, root),
        Some(pool) => {
            let mut emit = Vec::new();
            let mut frontier = vec![root];
            let target = workers * 16;
            while !frontier.is_empty() && frontier.len() < target {
                let mut next = Vec::new();
                for node in frontier {
                    strategy.expand(node, &mut emit, &mut next);
                }
                frontier = next;
            }
            let parts: Vec<Vec<Vec<u32>>> =
                pool.install(|| frontier.into_par_iter().map(|n| dfs(strategy, n)).collect());
            emit.extend(parts.into_iter().flatten());
            emit
        }
    };
    out.sort_unstable();
    out
}

/// Unrefinable partitions (at least two parts) with the given largest part.
pub fn unrefinable_with_max_part(filter: &PartitionFilter, workers: usize) -> Result<Vec<Vec<u32>>> {
    if filter.max_part < 2 {
        return Ok(Vec::new());
    }
    Ok(run(&ByMaxPart(*filter), Node::root(0), workers))
}

/// Unrefinable partitions (at least two parts) of the given weight.
pub fn unrefinable_with_weight(weight: u32, workers: usize) -> Result<Vec<Vec<u32>>> {
    Ok(run(&ByWeight, Node::root(weight), workers))
}

/// Every partition with largest part `max_part` and at least two parts that
/// satisfies `keep`, found by walking all `2^(max_part-1)` subsets. Meant as
/// an independent reference for small sizes.
pub fn filter_partitions_exhaustive(
    max_part: u32,
    mut keep: impl FnMut(&DistinctPartition) -> bool,
) -> Vec<Vec<u32>> {
    assert!(max_part <= 26, "exhaustive walk limited to max_part ≤ 26");
    if max_part < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << (max_part - 1)) {
        let mut parts: Vec<u32> = (0..max_part - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        parts.push(max_part);
        let p = DistinctPartition::from_sorted_unchecked(parts);
        if keep(&p) {
            out.push(p.parts().to_vec());
        }
    }
    out.sort_unstable();
    out
}

/// Gap sets of the numerical semigroups with Frobenius number `frobenius`,
/// optionally only the symmetric ones, sorted lexicographically.
///
/// Integers below `F` are decided in increasing order; a sum of two chosen
/// nonzero elements is forced into the semigroup, anything else branches.
pub fn numerical_semigroups_with_frobenius(frobenius: u32, symmetric_only: bool) -> Result<Vec<Vec<u32>>> {
    if frobenius == 0 {
        return Err(Error::InvalidQuery("the Frobenius number must be positive".into()));
    }
    if frobenius > 127 {
        return Err(Error::CapExceeded { what: "Frobenius number", value: frobenius.into(), cap: 127 });
    }
    let f = frobenius;
    if symmetric_only && f.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let is_sum = |elements: u128, x: u32| (1..=x / 2).any(|a| elements >> a & 1 == 1 && elements >> (x - a) & 1 == 1);

    let mut out = Vec::new();
    let mut stack: Vec<(u32, u128)> = vec![(1, 0)];
    while let Some((x, elements)) = stack.pop() {
        if x == f {
            if is_sum(elements, f) {
                continue;
            }
            let gaps: Vec<u32> = (1..=f).filter(|&g| elements >> g & 1 == 0).collect();
            if !symmetric_only || gaps.len() as u32 == f.div_ceil(2) {
                out.push(gaps);
            }
            continue;
        }
        let with = elements | 1u128 << x;
        if is_sum(elements, x) {
            stack.push((x + 1, with));
        } else {
            stack.push((x + 1, with));
            stack.push((x + 1, elements));
        }
    }
    out.sort_unstable();
    Ok(out)
}
