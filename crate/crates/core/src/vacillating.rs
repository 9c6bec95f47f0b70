//! Vacillating tableau sequences.
//!
//! A vacillating tableau of length `2k` is stored as a flat array of
//! `2k + 1` partitions; even indices are the integer steps `λ^(j)`, odd
//! indices the half steps `λ^(j+½)`. Two flavors exist:
//!
//! - *n-vacillating*: starts at the one-row shape `(n)`, half steps have
//!   `n − 1` boxes and full steps `n`, consecutive shapes differ by one
//!   box;
//! - *simplified*: starts at `∅`, each half step deletes a box or does
//!   nothing, each full step adds a box or does nothing.
//!
//! A simplified sequence in which every full step adds a box is called
//! *limiting*; those are exactly the sequences arising as the stable
//! (large-`n`) simplified vacillating tableau of an integer sequence.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::count::Count;
use crate::error::Error;
use crate::partition::Partition;

/// Which family of validity conditions a sequence satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    NVacillating(usize),
    Simplified,
}

/// A validated vacillating tableau.
///
/// JSON encoding: the bare array of partitions. On deserialization the
/// flavor is inferred from the first step (`∅` means simplified, `(n)`
/// means n-vacillating) and the sequence is re-validated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VacillatingTableau {
    steps: Vec<Partition>,
    #[serde(skip)]
    flavor: Flavor,
}

impl<'de> Deserialize<'de> for VacillatingTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let steps = Vec::<Partition>::deserialize(deserializer)?;
        let flavor = match steps.first() {
            Some(p) if !p.is_empty() => Flavor::NVacillating(p.size()),
            _ => Flavor::Simplified,
        };
        VacillatingTableau::new(steps, flavor).map_err(serde::de::Error::custom)
    }
}

impl VacillatingTableau {
    pub fn new(steps: Vec<Partition>, flavor: Flavor) -> Result<Self, Error> {
        match flavor {
            Flavor::NVacillating(n) => validate_n_vacillating(&steps, n),
            Flavor::Simplified => validate_simplified(&steps),
        }
        .map_err(Error::InvalidVacillating)?;
        Ok(VacillatingTableau { steps, flavor })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Partition>, flavor: Flavor) -> Self {
        VacillatingTableau { steps, flavor }
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Sequence length parameter: the tableau has `2k + 1` steps.
    pub fn k(&self) -> usize {
        (self.steps.len() - 1) / 2
    }

    pub fn final_shape(&self) -> &Partition {
        self.steps.last().expect("nonempty step list")
    }

    /// True iff the sequence is simplified and every full step adds a box.
    pub fn is_limiting(&self) -> bool {
        validate_limiting(&self.steps).is_ok()
    }

    /// Strips the first row from every step, turning an n-vacillating
    /// sequence into its simplified version. The result satisfies the
    /// simplified conditions whenever `n ≥ 2k`.
    pub fn simplify(&self) -> Result<VacillatingTableau, Error> {
        let Flavor::NVacillating(_) = self.flavor else {
            return Err(Error::InvalidVacillating(
                "simplify expects an n-vacillating tableau".into(),
            ));
        };
        let steps: Vec<Partition> = self.steps.iter().map(Partition::strip_first_row).collect();
        Ok(VacillatingTableau {
            steps,
            flavor: Flavor::Simplified,
        })
    }

    /// Pads every step with a first row so sizes are `n` at integer steps
    /// and `n − 1` at half steps; inverse of [`Self::simplify`].
    pub fn unsimplify(&self, n: usize) -> Result<VacillatingTableau, Error> {
        let Flavor::Simplified = self.flavor else {
            return Err(Error::InvalidVacillating(
                "unsimplify expects a simplified tableau".into(),
            ));
        };
        let k = self.k();
        if n < 2 * k {
            return Err(Error::SizeMismatch(format!(
                "need n >= 2k = {} to unsimplify, got n = {n}",
                2 * k
            )));
        }
        let mut steps = Vec::with_capacity(self.steps.len());
        for (idx, mu) in self.steps.iter().enumerate() {
            let target = if idx % 2 == 0 { n } else { n - 1 };
            let first = target - mu.size();
            if first < mu.parts().first().copied().unwrap_or(0) {
                return Err(Error::SizeMismatch(format!(
                    "n = {n} too small: step {idx} needs first row {first} above {mu:?}"
                )));
            }
            let mut parts = Vec::with_capacity(mu.num_rows() + 1);
            if first > 0 {
                parts.push(first);
            }
            parts.extend_from_slice(mu.parts());
            steps.push(Partition::new(parts).expect("padded shape is a partition"));
        }
        VacillatingTableau::new(steps, Flavor::NVacillating(n))
    }
}

fn check_odd_length(steps: &[Partition]) -> Result<usize, String> {
    if steps.is_empty() || steps.len() % 2 == 0 {
        return Err(format!(
            "step count must be odd (2k + 1), got {}",
            steps.len()
        ));
    }
    Ok((steps.len() - 1) / 2)
}

fn removes_one_box(from: &Partition, to: &Partition) -> bool {
    from.contains(to) && to.size() + 1 == from.size()
}

fn adds_one_box(from: &Partition, to: &Partition) -> bool {
    to.contains(from) && from.size() + 1 == to.size()
}

/// Checks the n-vacillating conditions, reporting the first violation.
pub fn validate_n_vacillating(steps: &[Partition], n: usize) -> Result<(), String> {
    check_odd_length(steps)?;
    if steps[0] != Partition::single_row(n) {
        return Err(format!("step 0 must be ({n}), got {:?}", steps[0]));
    }
    for (idx, p) in steps.iter().enumerate() {
        let want = if idx % 2 == 0 {
            n
        } else if n == 0 {
            return Err("half steps need n >= 1".into());
        } else {
            n - 1
        };
        if p.size() != want {
            return Err(format!("step {idx} must have {want} boxes, got {:?}", p));
        }
    }
    for idx in 1..steps.len() {
        let (prev, cur) = (&steps[idx - 1], &steps[idx]);
        if idx % 2 == 1 {
            if !removes_one_box(prev, cur) {
                return Err(format!(
                    "half step {idx} must remove exactly one box ({prev:?} -> {cur:?})"
                ));
            }
        } else if !adds_one_box(prev, cur) {
            return Err(format!(
                "full step {idx} must add exactly one box ({prev:?} -> {cur:?})"
            ));
        }
    }
    Ok(())
}

/// Checks the simplified conditions, reporting the first violation.
pub fn validate_simplified(steps: &[Partition]) -> Result<(), String> {
    check_odd_length(steps)?;
    if !steps[0].is_empty() {
        return Err(format!("step 0 must be empty, got {:?}", steps[0]));
    }
    for idx in 1..steps.len() {
        let (prev, cur) = (&steps[idx - 1], &steps[idx]);
        if idx % 2 == 1 {
            if cur != prev && !removes_one_box(prev, cur) {
                return Err(format!(
                    "half step {idx} must do nothing or delete a box ({prev:?} -> {cur:?})"
                ));
            }
        } else if cur != prev && !adds_one_box(prev, cur) {
            return Err(format!(
                "full step {idx} must do nothing or add a box ({prev:?} -> {cur:?})"
            ));
        }
    }
    Ok(())
}

/// Checks the limiting conditions: simplified, and every full step adds.
pub fn validate_limiting(steps: &[Partition]) -> Result<(), String> {
    validate_simplified(steps)?;
    for idx in (2..steps.len()).step_by(2) {
        if !adds_one_box(&steps[idx - 1], &steps[idx]) {
            return Err(format!(
                "full step {idx} of a limiting tableau must add a box ({:?} -> {:?})",
                steps[idx - 1],
                steps[idx]
            ));
        }
    }
    Ok(())
}

/// Exact per-shape counts, keyed by end shape in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable(BTreeMap<Partition, Count>);

#[derive(Serialize, Deserialize)]
struct CountRow {
    shape: Partition,
    count: Count,
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|(shape, count)| CountRow {
            shape: shape.clone(),
            count: count.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for CountTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<CountRow>::deserialize(deserializer)?;
        Ok(CountTable(
            rows.into_iter().map(|r| (r.shape, r.count)).collect(),
        ))
    }
}

impl CountTable {
    pub fn get(&self, shape: &Partition) -> Count {
        self.0.get(shape).cloned().unwrap_or_else(Count::zero)
    }

    pub fn total(&self) -> Count {
        self.0.values().cloned().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Count)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Partition, Count)> for CountTable {
    fn from_iter<I: IntoIterator<Item = (Partition, Count)>>(iter: I) -> Self {
        CountTable(iter.into_iter().collect())
    }
}

/// Default `k` bound for counting enumeration.
pub const DEFAULT_COUNT_BOUND: usize = 10;
/// Default `k` bound for explicit listings.
pub const DEFAULT_LIST_BOUND: usize = 6;

/// Counts simplified (or, with `limiting`, limiting) vacillating tableaux
/// of length `2k` per end shape.
///
/// Dynamic program over steps with the partition reached as state: half
/// steps allow identity or removing one corner; full steps allow adding
/// one corner, plus identity unless `limiting`.
pub fn enumerate_counts(k: usize, limiting: bool, bound: usize) -> Result<CountTable, Error> {
    if k > bound {
        return Err(Error::BoundExceeded(format!("k = {k} exceeds bound {bound}")));
    }
    let mut state: BTreeMap<Partition, Count> = BTreeMap::new();
    state.insert(Partition::empty(), Count::one());
    for idx in 1..=2 * k {
        let mut next: BTreeMap<Partition, Count> = BTreeMap::new();
        for (shape, count) in &state {
            if idx % 2 == 1 {
                *next.entry(shape.clone()).or_default() += count;
                for (r, c) in shape.corners() {
                    let smaller = shape.with_box_removed(r, c).expect("removable corner");
                    *next.entry(smaller).or_default() += count;
                }
            } else {
                if !limiting {
                    *next.entry(shape.clone()).or_default() += count;
                }
                for (r, c) in shape.addable_corners() {
                    let bigger = shape.with_box_added(r, c).expect("addable corner");
                    *next.entry(bigger).or_default() += count;
                }
            }
        }
        state = next;
    }
    Ok(CountTable(state))
}

/// Lists simplified (or limiting) vacillating tableaux of length `2k`,
/// optionally restricted to a given end shape, in a deterministic order.
pub fn enumerate_listing(
    k: usize,
    limiting: bool,
    end: Option<&Partition>,
    bound: usize,
) -> Result<Vec<VacillatingTableau>, Error> {
    if k > bound {
        return Err(Error::BoundExceeded(format!("k = {k} exceeds bound {bound}")));
    }
    let mut out = Vec::new();
    let mut steps = vec![Partition::empty()];
    fn rec(
        k: usize,
        limiting: bool,
        end: Option<&Partition>,
        steps: &mut Vec<Partition>,
        out: &mut Vec<VacillatingTableau>,
    ) {
        if steps.len() == 2 * k + 1 {
            if end.is_none_or(|e| e == steps.last().unwrap()) {
                out.push(VacillatingTableau::from_steps_unchecked(
                    steps.clone(),
                    Flavor::Simplified,
                ));
            }
            return;
        }
        let idx = steps.len();
        let shape = steps.last().unwrap().clone();
        let mut successors = Vec::new();
        if idx % 2 == 1 {
            successors.push(shape.clone());
            for (r, c) in shape.corners() {
                successors.push(shape.with_box_removed(r, c).expect("removable corner"));
            }
        } else {
            if !limiting {
                successors.push(shape.clone());
            }
            for (r, c) in shape.addable_corners() {
                successors.push(shape.with_box_added(r, c).expect("addable corner"));
            }
        }
        successors.sort();
        for s in successors {
            steps.push(s);
            rec(k, limiting, end, steps, out);
            steps.pop();
        }
    }
    rec(k, limiting, end, &mut steps, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn seq(steps: &[&[usize]]) -> Vec<Partition> {
        steps.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn n_vacillating_examples() {
        assert!(validate_n_vacillating(&seq(&[&[4], &[3], &[4], &[3], &[4]]), 4).is_ok());
        assert!(validate_n_vacillating(&seq(&[&[4], &[4], &[4], &[4], &[4]]), 4).is_err());
        assert!(
            validate_n_vacillating(&seq(&[&[5], &[4], &[4, 1], &[3, 1], &[4, 1]]), 5).is_ok()
        );
        // valid as a sequence even though it is not the delete-insert image of (4,4)
        assert!(validate_n_vacillating(&seq(&[&[5], &[4], &[4, 1], &[4], &[4, 1]]), 5).is_ok());
        assert!(validate_n_vacillating(&seq(&[&[4], &[3], &[4]]), 5).is_err());
    }

    #[test]
    fn simplified_examples() {
        assert!(validate_simplified(&seq(&[&[], &[], &[], &[], &[]])).is_ok());
        assert!(validate_simplified(&seq(&[&[], &[], &[1], &[1], &[2]])).is_ok());
        assert!(validate_simplified(&seq(&[&[], &[1], &[1]])).is_err());
        assert!(validate_simplified(&seq(&[&[], &[]])).is_err());
    }

    #[test]
    fn limiting_examples() {
        assert!(validate_limiting(&seq(&[&[], &[], &[1], &[], &[1]])).is_ok());
        assert!(validate_limiting(&seq(&[&[], &[], &[], &[], &[]])).is_err());
        assert!(validate_limiting(&seq(&[&[], &[], &[1], &[1], &[1, 1]])).is_ok());
    }

    #[test]
    fn simplify_unsimplify_examples() {
        let v = VacillatingTableau::new(
            seq(&[&[4], &[3], &[4], &[3], &[4]]),
            Flavor::NVacillating(4),
        )
        .unwrap();
        assert_eq!(v.simplify().unwrap().steps(), seq(&[&[], &[], &[], &[], &[]]));

        let v = VacillatingTableau::new(
            seq(&[&[6], &[5], &[5, 1], &[4, 1], &[4, 2]]),
            Flavor::NVacillating(6),
        )
        .unwrap();
        let s = v.simplify().unwrap();
        assert_eq!(s.steps(), seq(&[&[], &[], &[1], &[1], &[2]]));
        assert_eq!(s.unsimplify(6).unwrap(), v);

        let s = VacillatingTableau::new(seq(&[&[], &[], &[], &[], &[]]), Flavor::Simplified)
            .unwrap();
        assert_eq!(
            s.unsimplify(4).unwrap().steps(),
            seq(&[&[4], &[3], &[4], &[3], &[4]])
        );
        assert!(s.unsimplify(3).is_err());
    }

    #[test]
    fn unsimplify_simplify_roundtrip_exhaustive() {
        for k in 0..=3 {
            let n = 2 * k;
            for v in enumerate_listing(k, false, None, DEFAULT_LIST_BOUND).unwrap() {
                let big = v.unsimplify(n).unwrap();
                assert!(validate_n_vacillating(big.steps(), n).is_ok());
                assert_eq!(big.simplify().unwrap(), v);
            }
        }
    }

    #[test]
    fn enumerate_simplified_small() {
        let table = enumerate_counts(2, false, DEFAULT_COUNT_BOUND).unwrap();
        assert_eq!(table.get(&Partition::empty()), Count::from(2u64));
        assert_eq!(table.get(&p(&[1])), Count::from(3u64));
        let table = enumerate_counts(1, false, DEFAULT_COUNT_BOUND).unwrap();
        assert_eq!(table.get(&p(&[1])), Count::from(1u64));
    }

    #[test]
    fn enumerate_limiting_figure_counts() {
        let table = enumerate_counts(3, true, DEFAULT_COUNT_BOUND).unwrap();
        assert_eq!(table.get(&p(&[1])), Count::from(1u64));
        assert_eq!(table.get(&p(&[2])), Count::from(3u64));
        assert_eq!(table.get(&p(&[1, 1])), Count::from(3u64));
        assert_eq!(table.get(&p(&[3])), Count::from(1u64));
        assert_eq!(table.get(&p(&[2, 1])), Count::from(2u64));
        assert_eq!(table.get(&p(&[1, 1, 1])), Count::from(1u64));
        assert_eq!(table.total(), Count::from(11u64));

        let table = enumerate_counts(2, true, DEFAULT_COUNT_BOUND).unwrap();
        assert_eq!(table.get(&p(&[1])), Count::from(1u64));
        assert_eq!(table.get(&p(&[2])), Count::from(1u64));
        assert_eq!(table.get(&p(&[1, 1])), Count::from(1u64));
        assert_eq!(table.total(), Count::from(3u64));

        let table = enumerate_counts(0, true, DEFAULT_COUNT_BOUND).unwrap();
        assert_eq!(table.get(&Partition::empty()), Count::one());
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn listings_match_counts_and_validate() {
        for k in 0..=5 {
            for limiting in [false, true] {
                let table = enumerate_counts(k, limiting, DEFAULT_COUNT_BOUND).unwrap();
                let listing = enumerate_listing(k, limiting, None, DEFAULT_LIST_BOUND).unwrap();
                assert_eq!(Count::from(listing.len()), table.total());
                for v in &listing {
                    assert!(validate_simplified(v.steps()).is_ok());
                    if limiting {
                        assert!(validate_limiting(v.steps()).is_ok());
                    }
                    assert!(v.steps().iter().all(|s| s.size() <= k));
                }
            }
        }
    }

    #[test]
    fn bound_enforced() {
        assert!(enumerate_counts(11, false, DEFAULT_COUNT_BOUND).is_err());
        assert!(enumerate_listing(7, false, None, DEFAULT_LIST_BOUND).is_err());
    }

    #[test]
    fn json_is_bare_step_array() {
        let v = VacillatingTableau::new(seq(&[&[], &[], &[1], &[1], &[2]]), Flavor::Simplified)
            .unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[[],[],[1],[1],[2]]");
        let back: VacillatingTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.flavor(), Flavor::Simplified);
    }
}
