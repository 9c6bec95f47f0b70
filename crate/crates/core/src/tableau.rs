//! Partial tableaux and standard Young tableaux.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;

/// A 1-based (row, column) box position, matching the usual `T_{i,j}`
/// matrix indexing of Young diagrams in English notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A Young diagram filled with distinct positive integers that increase
/// along rows and down columns.
///
/// JSON encoding: an array of rows, each an array of entries; `[]` is the
/// empty tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PartialTableau {
    rows: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for PartialTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        PartialTableau::new(rows).map_err(serde::de::Error::custom)
    }
}

impl PartialTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let t = PartialTableau { rows };
        t.check()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        PartialTableau { rows: Vec::new() }
    }

    /// The unique one-row tableau filled with `1..=n`.
    pub fn first_row(n: usize) -> Self {
        PartialTableau {
            rows: if n == 0 {
                Vec::new()
            } else {
                vec![(1..=n as u32).collect()]
            },
        }
    }

    fn check(&self) -> Result<(), Error> {
        for w in self.rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(Error::InvalidTableau(
                    "row lengths must weakly decrease".into(),
                ));
            }
        }
        if self.rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let mut seen = BTreeSet::new();
        for row in &self.rows {
            for &e in row {
                if e == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if !seen.insert(e) {
                    return Err(Error::DuplicateEntry(e));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(
                    "entries must strictly increase along rows".into(),
                ));
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] >= self.rows[r][c] {
                    return Err(Error::InvalidTableau(
                        "entries must strictly increase down columns".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau row lengths form a partition")
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn content(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains_entry(&self, x: u32) -> bool {
        self.rows.iter().any(|r| r.contains(&x))
    }

    /// The cell holding `x`, if present.
    pub fn position_of(&self, x: u32) -> Option<Cell> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == x) {
                return Some(Cell::new(r + 1, c + 1));
            }
        }
        None
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
    }


    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(PartialTableau { rows: rows.clone() }.check().is_ok());
        PartialTableau { rows }
    }
}

/// A partial tableau with `n` boxes whose content is exactly `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardYoungTableau(PartialTableau);

impl<'de> Deserialize<'de> for StandardYoungTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let t = PartialTableau::deserialize(deserializer)?;
        StandardYoungTableau::new(t).map_err(serde::de::Error::custom)
    }
}

impl StandardYoungTableau {
    pub fn new(t: PartialTableau) -> Result<Self, Error> {
        let n = t.num_boxes() as u32;
        if t.content() != (1..=n).collect() {
            return Err(Error::InvalidTableau(format!(
                "content must be exactly 1..={n}"
            )));
        }
        Ok(StandardYoungTableau(t))
    }

    pub fn as_partial(&self) -> &PartialTableau {
        &self.0
    }

    pub fn into_partial(self) -> PartialTableau {
        self.0
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }
}

/// Default box bound for the exhaustive tableau enumerators.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

/// All standard Young tableaux of shape `shape`, in a deterministic order.
///
/// Lexicographic backtracking: entries `1..=n` are placed in increasing
/// order, each at every addable corner of the region filled so far. This
/// is the independent oracle for [`Partition::syt_count`].
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardYoungTableau>, Error> {
    enumerate_syt_with_bound(shape, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_syt_with_bound(
    shape: &Partition,
    bound: usize,
) -> Result<Vec<StandardYoungTableau>, Error> {
    if shape.size() > bound {
        return Err(Error::BoundExceeded(format!(
            "shape has {} boxes, bound is {bound}",
            shape.size()
        )));
    }
    Ok(enumerate_fillings(shape, &(1..=shape.size() as u32).collect::<Vec<_>>())
        .into_iter()
        .map(|t| StandardYoungTableau(t))
        .collect())
}

/// All partial tableaux of shape `shape` whose content is exactly the
/// given (strictly increasing) entry set.
pub fn enumerate_fillings(shape: &Partition, entries: &[u32]) -> Vec<PartialTableau> {
    assert_eq!(shape.size(), entries.len());
    assert!(entries.windows(2).all(|w| w[0] < w[1]));
    let mut out = Vec::new();
    let mut filled: Vec<Vec<u32>> = Vec::new();
    fn rec(
        shape: &Partition,
        entries: &[u32],
        next: usize,
        filled: &mut Vec<Vec<u32>>,
        out: &mut Vec<PartialTableau>,
    ) {
        if next == entries.len() {
            out.push(PartialTableau::from_rows_unchecked(filled.clone()));
            return;
        }
        for row in 0..=filled.len() {
            let len = filled.get(row).map_or(0, Vec::len);
            let above = if row == 0 {
                usize::MAX
            } else {
                filled[row - 1].len()
            };
            // grow row `row` by one box if that stays inside `shape`
            if len < above && len < shape.row_len(row + 1) {
                if row == filled.len() {
                    filled.push(vec![entries[next]]);
                } else {
                    filled[row].push(entries[next]);
                }
                rec(shape, entries, next + 1, filled, out);
                if filled[row].len() == 1 {
                    filled.pop();
                } else {
                    filled[row].pop();
                }
            }
        }
    }
    rec(shape, entries, 0, &mut filled, &mut out);
    out
}

/// All partial tableaux with at most `max_boxes` boxes and entries drawn
/// from `1..=alphabet`. Oracle fodder for the roundtrip sweeps.
pub fn enumerate_partial_tableaux(max_boxes: usize, alphabet: u32) -> Vec<PartialTableau> {
    let mut out = vec![PartialTableau::empty()];
    for b in 1..=max_boxes {
        for shape in crate::partition::partitions_of(b) {
            for content in subsets_of_size(alphabet, b) {
                out.extend(enumerate_fillings(&shape, &content));
            }
        }
    }
    out
}

fn subsets_of_size(alphabet: u32, size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(alphabet: u32, size: usize, start: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..=alphabet {
            if (alphabet - v + 1) as usize + current.len() < size {
                break;
            }
            current.push(v);
            rec(alphabet, size, v + 1, current, out);
            current.pop();
        }
    }
    rec(alphabet, size, 1, &mut current, &mut out);
    out
}
