//! Integer partitions.
//!
//! A partition is a weakly decreasing list of positive row lengths; the
//! empty partition is the empty list. Trailing zeros are never stored, so
//! structural equality is canonical equality.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::count::Count;
use crate::error::Error;

/// An integer partition, stored as its weakly decreasing parts.
///
/// In JSON a partition is a plain array of integers; `[]` is the empty
/// partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Builds a partition, rejecting zero parts and out-of-order lists.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must weakly decrease, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; `n = 0` gives the empty partition.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); 0 if the row does not exist.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 || row > self.parts.len() {
            0
        } else {
            self.parts[row - 1]
        }
    }

    /// Drops the first row: `(λ_1, λ_2, …, λ_t) → (λ_2, …, λ_t)`.
    pub fn strip_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Containment of Young diagrams: `self ⊆ other`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&i, &o)| i <= o)
    }

    /// Removable corners, as 1-based `(row, col)` pairs in row order.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (idx, &len) in self.parts.iter().enumerate() {
            let below = self.parts.get(idx + 1).copied().unwrap_or(0);
            if len > below {
                out.push((idx + 1, len));
            }
        }
        out
    }

    /// Addable corners: 1-based positions where one box yields a partition.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for idx in 0..=self.parts.len() {
            let here = self.parts.get(idx).copied().unwrap_or(0);
            let above = if idx == 0 {
                usize::MAX
            } else {
                self.parts[idx - 1]
            };
            if here < above {
                out.push((idx + 1, here + 1));
            }
        }
        out
    }

    /// Adds one box at a given addable corner.
    pub fn with_box_added(&self, row: usize, col: usize) -> Result<Partition, Error> {
        if !self.addable_corners().contains(&(row, col)) {
            return Err(Error::InvalidCorner(row, col));
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Removes the box at a given removable corner.
    pub fn with_box_removed(&self, row: usize, col: usize) -> Result<Partition, Error> {
        if !self.corners().contains(&(row, col)) {
            return Err(Error::NotACorner(row, col));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// If `other` is `self` plus exactly one box, returns that box.
    pub fn added_box(&self, other: &Partition) -> Option<(usize, usize)> {
        if other.size() != self.size() + 1 || !other.contains(self) {
            return None;
        }
        for row in 1..=other.num_rows() {
            if other.row_len(row) == self.row_len(row) + 1 {
                return Some((row, other.row_len(row)));
            }
        }
        None
    }

    /// The number of standard Young tableaux of this shape, by the hook
    /// length formula `f^λ = n! / ∏ h(c)`.
    pub fn syt_count(&self) -> Count {
        let n = self.size();
        let mut numerator = BigUint::one();
        for i in 2..=n {
            numerator *= BigUint::from(i);
        }
        let conj = self.conjugate();
        let mut denominator = BigUint::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (conj.parts[c] - r) - 1;
                denominator *= BigUint::from(hook);
            }
        }
        Count::from(numerator / denominator)
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn strip_first_row_examples() {
        assert_eq!(p(&[4, 1]).strip_first_row(), p(&[1]));
        assert_eq!(p(&[4]).strip_first_row(), Partition::empty());
        assert_eq!(p(&[2, 2]).strip_first_row(), p(&[2]));
        assert_eq!(Partition::empty().strip_first_row(), Partition::empty());
    }

    #[test]
    fn strip_first_row_size() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                let first = lam.parts().first().copied().unwrap_or(0);
                assert_eq!(lam.strip_first_row().size(), lam.size() - first);
            }
        }
    }

    #[test]
    fn corners_and_addable() {
        assert_eq!(p(&[4, 1]).corners(), vec![(1, 4), (2, 1)]);
        assert_eq!(p(&[4, 1]).addable_corners(), vec![(1, 5), (2, 2), (3, 1)]);
        assert_eq!(Partition::empty().addable_corners(), vec![(1, 1)]);
        assert!(Partition::empty().corners().is_empty());
    }

    #[test]
    fn add_remove_roundtrip() {
        let lam = p(&[3, 2, 2]);
        for (r, c) in lam.addable_corners() {
            let bigger = lam.with_box_added(r, c).unwrap();
            assert_eq!(bigger.with_box_removed(r, c).unwrap(), lam);
            assert_eq!(lam.added_box(&bigger), Some((r, c)));
        }
    }

    #[test]
    fn syt_count_small_shapes() {
        assert_eq!(p(&[5]).syt_count(), Count::from(1u64));
        assert_eq!(p(&[2, 1]).syt_count(), Count::from(2u64));
        assert_eq!(p(&[2, 2]).syt_count(), Count::from(2u64));
        assert_eq!(Partition::empty().syt_count(), Count::from(1u64));
    }

    #[test]
    fn partitions_of_counts() {
        // p(n) for n = 0..=10
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), e, "p({n})");
        }
    }

    #[test]
    fn json_roundtrip() {
        let lam = p(&[4, 2, 1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[4,2,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
