//! The lattice of unrefinability-preserving insertions above a base
//! partition, with largest part and mex held fixed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::vector::check_unrefinable_fast;
use crate::partition::DistinctPartition;

/// Missing parts `x` with `mex < x < λ_t` whose insertion keeps the partition
/// unrefinable. Largest part and mex are unchanged by construction.
pub fn extension_candidates(partition: &DistinctPartition) -> BTreeSet<u32> {
    let mex = partition.mex();
    if mex == 0 {
        return BTreeSet::new();
    }
    partition
        .missing_parts()
        .values()
        .iter()
        .copied()
        .filter(|&x| x > mex && x < partition.largest())
        .filter(|&x| {
            let extended = partition.with_part(x).expect("x is missing");
            check_unrefinable_fast(&extended).unwrap_or(false)
        })
        .collect()
}

/// One edge of the lattice: `to = from ∪ {inserted}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeEdge {
    pub from: usize,
    pub to: usize,
    pub inserted: u32,
}

/// Nodes are the inserted sets (the empty set is the base itself), sorted by
/// cardinality and then lexicographically, so node 0 is always `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionLattice {
    base: DistinctPartition,
    nodes: Vec<BTreeSet<u32>>,
    edges: Vec<LatticeEdge>,
}

impl ExtensionLattice {
    pub fn base(&self) -> &DistinctPartition {
        &self.base
    }

    pub fn nodes(&self) -> &[BTreeSet<u32>] {
        &self.nodes
    }

    pub fn edges(&self) -> &[LatticeEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, set: &BTreeSet<u32>) -> Option<usize> {
        self.nodes.iter().position(|n| n == set)
    }

    pub fn has_edge(&self, from: &[u32], to: &[u32]) -> bool {
        let (Some(f), Some(t)) = (
            self.index_of(&from.iter().copied().collect()),
            self.index_of(&to.iter().copied().collect()),
        ) else {
            return false;
        };
        self.edges.iter().any(|e| e.from == f && e.to == t)
    }

    /// Nodes without outgoing edges.
    pub fn maximal_nodes(&self) -> Vec<&BTreeSet<u32>> {
        (0..self.nodes.len())
            .filter(|&i| !self.edges.iter().any(|e| e.from == i))
            .map(|i| &self.nodes[i])
            .collect()
    }

    /// The partition obtained by inserting the node's set into the base.
    pub fn realize(&self, node: usize) -> DistinctPartition {
        let mut parts: Vec<u32> = self.base.parts().to_vec();
        parts.extend(self.nodes[node].iter().copied());
        parts.sort_unstable();
        DistinctPartition::from_sorted_unchecked(parts)
    }

    /// Graphviz digraph; nodes are labeled by their inserted set and edges by
    /// the inserted integer.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph extension_lattice {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  label=\"base {}\";", self.base);
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", set_label(n));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.inserted);
        }
        out.push_str("}\n");
        out
    }
}

fn set_label(set: &BTreeSet<u32>) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Breadth-first closure of [`extension_candidates`] from the base.
pub fn extension_lattice(base: &DistinctPartition) -> ExtensionLattice {
    let mut seen: BTreeMap<BTreeSet<u32>, Vec<(u32, BTreeSet<u32>)>> = BTreeMap::new();
    let mut queue = VecDeque::from([BTreeSet::new()]);
    while let Some(node) = queue.pop_front() {
        if seen.contains_key(&node) {
            continue;
        }
        let mut parts: Vec<u32> = base.parts().iter().chain(node.iter()).copied().collect();
        parts.sort_unstable();
        let current = DistinctPartition::from_sorted_unchecked(parts);
        let mut out = Vec::new();
        for x in extension_candidates(&current) {
            let mut next = node.clone();
            next.insert(x);
            if !seen.contains_key(&next) {
                queue.push_back(next.clone());
            }
            out.push((x, next));
        }
        seen.insert(node, out);
    }

    let mut nodes: Vec<BTreeSet<u32>> = seen.keys().cloned().collect();
    nodes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: BTreeMap<&BTreeSet<u32>, usize> = nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let mut edges = Vec::new();
    for (from, outs) in &seen {
        for (x, to) in outs {
            edges.push(LatticeEdge { from: index[from], to: index[to], inserted: *x });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    ExtensionLattice { base: base.clone(), nodes: nodes.clone(), edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> DistinctPartition {
        DistinctPartition::new(parts.to_vec()).unwrap()
    }

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn candidates() {
        assert_eq!(extension_candidates(&p(&[1, 2, 4, 5, 7, 10, 13])), set(&[6, 8]));
        assert!(extension_candidates(&DistinctPartition::complete(6).unwrap()).is_empty());
        assert!(extension_candidates(&p(&[1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13])).is_empty());
    }

    #[test]
    fn example_lattice() {
        let l = extension_lattice(&p(&[1, 2, 4, 5, 7, 10, 13]));
        assert_eq!(l.node_count(), 12);
        assert_eq!(l.maximal_nodes(), vec![&set(&[6, 8, 9, 11, 12])]);
        assert!(l.nodes()[0].is_empty());
        assert!(l.has_edge(&[6], &[6, 9]));
        assert!(l.has_edge(&[8], &[8, 11]));
        assert!(l.has_edge(&[], &[8]));
        assert!(!l.has_edge(&[], &[9]));
        for e in l.edges() {
            assert_eq!(l.nodes()[e.to].len(), l.nodes()[e.from].len() + 1);
        }
    }

    #[test]
    fn complete_partition_lattice_is_a_point() {
        let l = extension_lattice(&DistinctPartition::complete(5).unwrap());
        assert_eq!(l.node_count(), 1);
        assert!(l.edges().is_empty());
    }

    #[test]
    fn dot_output_shape() {
        let dot = extension_lattice(&p(&[1, 2, 4, 5, 7, 10, 13])).to_dot();
        assert!(dot.starts_with("digraph extension_lattice {"));
        assert!(dot.contains("[label=\"{6,8,9,11,12}\"]"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches("->").count(), 17);
    }
}
