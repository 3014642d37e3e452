//! Young diagrams of numerical sets and hook lengths.
//!
//! Walking `k = 0, 1, …, F(S)` and stepping east for `k ∈ S`, north for a gap,
//! traces the boundary of a Young diagram with one row per gap. The row of the
//! gap `g` has as many cells as there are elements of `S` below `g`.
//!
//! Storage uses English notation: row 0 is the top (longest) row, the one of
//! the Frobenius number, and cells are addressed `(row, column)` from the top
//! left. The lattice path starts at the bottom, so the "i-th row" counted from
//! the path origin is storage row `G − i` (rows counted from 1).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::semigroup::NumericalSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungDiagram {
    rows: Vec<u32>,
    source: NumericalSet,
}

impl YoungDiagram {
    /// Row lengths, top row first (weakly decreasing).
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// The profile partition `λ_S`, same as [`rows`](Self::rows).
    pub fn profile(&self) -> &[u32] {
        &self.rows
    }

    pub fn source(&self) -> &NumericalSet {
        &self.source
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn cell_count(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Storage row of the `i`-th row counted from the path origin (1-based).
    pub fn storage_row_of_path_row(&self, path_row: usize) -> usize {
        self.rows.len() - path_row
    }

    /// Length of column `c` (number of rows reaching it).
    pub fn column_length(&self, c: u32) -> u32 {
        self.rows.iter().take_while(|&&r| r > c).count() as u32
    }

    /// Re-walks the boundary to recover the numerical set from the row
    /// lengths alone: the row `b` positions above the bottom with `len` cells
    /// belongs to the gap `len + b`.
    pub fn reconstruct_set(rows: &[u32]) -> Result<NumericalSet> {
        let gaps = rows.iter().rev().enumerate().map(|(b, &len)| len + b as u32).collect();
        NumericalSet::from_gaps(gaps)
    }
}

/// Builds the diagram by the east/north walk over `0..=F(S)`.
pub fn diagram_from_set(set: &NumericalSet) -> Result<YoungDiagram> {
    let f = set.frobenius()?;
    let mut east = 0u32;
    let mut bottom_up = Vec::with_capacity(set.genus());
    for k in 0..=f {
        if set.contains(k) {
            east += 1;
        } else {
            bottom_up.push(east);
        }
    }
    bottom_up.reverse();
    Ok(YoungDiagram { rows: bottom_up, source: set.clone() })
}

/// Hook length of every cell, with arms and legs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookGrid {
    rows: Vec<u32>,
    hooks: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn hook(&self, row: usize, col: usize) -> u32 {
        self.hooks[row][col]
    }

    pub fn arm(&self, row: usize, col: usize) -> u32 {
        self.rows[row] - col as u32 - 1
    }

    pub fn leg(&self, row: usize, col: usize) -> u32 {
        self.rows[row + 1..].iter().take_while(|&&r| r as usize > col).count() as u32
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.hooks
    }

    /// First-column hooks, top to bottom.
    pub fn first_column(&self) -> Vec<u32> {
        self.hooks.iter().map(|r| r[0]).collect()
    }

    /// Top-row hooks, left to right.
    pub fn top_row(&self) -> &[u32] {
        self.hooks.first().map_or(&[], |r| r.as_slice())
    }

    pub fn hookset(&self) -> BTreeSet<u32> {
        self.hooks.iter().flatten().copied().collect()
    }
}

pub fn hook_grid(diagram: &YoungDiagram) -> HookGrid {
    let rows = diagram.rows.clone();
    let col_len: Vec<u32> = (0..diagram.column_count()).map(|c| diagram.column_length(c)).collect();
    let hooks = rows
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| {
                    let arm = len - j - 1;
                    let leg = col_len[j as usize] - i as u32 - 1;
                    arm + leg + 1
                })
                .collect()
        })
        .collect();
    HookGrid { rows, hooks }
}

/// Every hook length occurs in the first column. For the diagram of a
/// numerical set this holds exactly when the set is a semigroup.
pub fn semigroup_by_hooks(diagram: &YoungDiagram) -> bool {
    let grid = hook_grid(diagram);
    let first: BTreeSet<u32> = grid.first_column().into_iter().collect();
    grid.hooks.iter().flatten().all(|h| first.contains(h))
}

/// Every hook length either occurs in the first column or is exactly half of
/// the first-column hook of its own row. For the diagram of the numerical set
/// of a partition (gaps = parts) this holds exactly when the partition is
/// unrefinable.
pub fn unrefinable_by_hooks(diagram: &YoungDiagram) -> bool {
    let grid = hook_grid(diagram);
    let first: BTreeSet<u32> = grid.first_column().into_iter().collect();
    grid.hooks.iter().all(|row| {
        let lead = row[0];
        row.iter().all(|&h| first.contains(&h) || lead == 2 * h)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenderMode {
    /// One `#` per cell.
    Outline,
    /// Hook lengths, right-aligned per column.
    Hooks,
}

/// Monospace rendering, top row first, no trailing newline.
pub fn render(diagram: &YoungDiagram, mode: RenderMode) -> String {
    let grid = hook_grid(diagram);
    let widths: Vec<usize> = (0..diagram.column_count() as usize)
        .map(|c| {
            grid.hooks
                .iter()
                .filter_map(|r| r.get(c))
                .map(|h| h.to_string().len())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let lines: Vec<String> = grid
        .hooks
        .iter()
        .map(|row| match mode {
            RenderMode::Outline => vec!["#"; row.len()].join(" "),
            RenderMode::Hooks => row
                .iter()
                .enumerate()
                .map(|(c, h)| format!("{h:>w$}", w = widths[c]))
                .collect::<Vec<_>>()
                .join(" "),
        })
        .collect();
    lines.join("\n")
}

/// [`render`] followed by notes on orientation and the first column.
pub fn render_annotated(diagram: &YoungDiagram, mode: RenderMode) -> String {
    let mut out = render(diagram, mode);
    let grid = hook_grid(diagram);
    let fc: Vec<String> = grid.first_column().iter().map(|h| h.to_string()).collect();
    let _ = write!(
        out,
        "\n-- top row = Frobenius number; the lattice path starts at the bottom row\n-- first column (top to bottom): {}",
        fc.join(" ")
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn set(gaps: &[u32]) -> NumericalSet {
        NumericalSet::from_gaps(gaps.to_vec()).unwrap()
    }

    #[test]
    fn profile_of_example() {
        let y = diagram_from_set(&set(&[1, 2, 4, 5, 7, 10, 13])).unwrap();
        assert_eq!(y.profile(), &[7, 5, 3, 2, 2, 1, 1]);
        assert_eq!(y.row_count(), 7);
        assert_eq!(y.column_count(), 7);
        assert_eq!(y.storage_row_of_path_row(1), 6);
        assert_eq!(YoungDiagram::reconstruct_set(y.rows()).unwrap(), *y.source());
    }

    #[test]
    fn single_cell() {
        let y = diagram_from_set(&set(&[1])).unwrap();
        assert_eq!(y.profile(), &[1]);
        let g = hook_grid(&y);
        assert_eq!(g.hook(0, 0), 1);
        assert!(semigroup_by_hooks(&y));
        assert!(unrefinable_by_hooks(&y));
        assert_eq!(render(&y, RenderMode::Hooks), "1");
    }

    #[test]
    fn empty_set_has_no_diagram() {
        assert_eq!(diagram_from_set(&NumericalSet::naturals()), Err(Error::NoGaps));
    }

    #[test]
    fn hooks_of_semigroup_example() {
        let y = diagram_from_set(&set(&[1, 2, 4, 5, 7, 10, 13])).unwrap();
        let g = hook_grid(&y);
        assert_eq!(g.first_column(), vec![13, 10, 7, 5, 4, 2, 1]);
        assert_eq!(g.rows()[1], vec![10, 7, 4, 2, 1]);
        assert_eq!(g.rows()[2], vec![7, 4, 1]);
        assert_eq!(g.rows()[3], vec![5, 2]);
        assert_eq!(g.arm(0, 0), 6);
        assert_eq!(g.leg(0, 0), 6);
        assert!(semigroup_by_hooks(&y));
        let text = render(&y, RenderMode::Hooks);
        assert!(text.lines().any(|l| l == "13 10 7 5 4 2 1"));
        assert_eq!(render(&y, RenderMode::Outline).lines().count(), 7);
        let annotated = render_annotated(&y, RenderMode::Hooks);
        assert!(annotated.contains("first column (top to bottom): 13 10 7 5 4 2 1"));
    }

    #[test]
    fn hooks_of_non_semigroup_example() {
        let y = diagram_from_set(&set(&[1, 2, 5, 6, 8])).unwrap();
        let g = hook_grid(&y);
        assert_eq!(g.rows()[0], vec![8, 5, 4, 1]);
        assert_eq!(g.rows()[1], vec![6, 3, 2]);
        assert_eq!(g.rows()[2], vec![5, 2, 1]);
        assert!(!semigroup_by_hooks(&y));
        assert!(unrefinable_by_hooks(&y));
    }

    #[test]
    fn refinable_partition_fails_hook_criterion() {
        let y = diagram_from_set(&set(&[1, 2, 3, 5, 6, 8, 9, 11, 13])).unwrap();
        assert!(!unrefinable_by_hooks(&y));
        let y = diagram_from_set(&set(&[1, 2, 3, 5, 6, 9, 13])).unwrap();
        assert!(semigroup_by_hooks(&y) && unrefinable_by_hooks(&y));
    }
}
