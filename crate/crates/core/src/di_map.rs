//! The delete-insert map on integer sequences and its limit behavior.
//!
//! For `i = (i_1, …, i_k) ∈ [n]^k` the map starts from the one-row
//! tableau `1..n` and alternates jeu de taquin deletion of `i_j` with RSK
//! insertion of `i_j`, recording the shape after every half step. The
//! result is a pair (standard Young tableau, n-vacillating tableau) and
//! the map is a bijection onto such pairs.
//!
//! For fixed `i` the simplified version of the recorded shape sequence
//! stabilizes once `n` is large enough; that stable sequence is the
//! limiting vacillating tableau of `i`, and the limiting sequences are
//! exactly the simplified sequences whose full steps all add a box.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::tableau::{PartialTableau, StandardYoungTableau};
use crate::tableau_ops::{jdt_delete, jdt_undelete, rsk_insert, rsk_uninsert};
use crate::vacillating::{Flavor, VacillatingTableau};

/// A sequence of positive integers, the input alphabet of the
/// delete-insert map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntegerSequence {
    values: Vec<u32>,
}

impl<'de> Deserialize<'de> for IntegerSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        IntegerSequence::new(values).map_err(serde::de::Error::custom)
    }
}

impl IntegerSequence {
    pub fn new(values: Vec<u32>) -> Result<Self, Error> {
        if let Some(&v) = values.iter().find(|&&v| v == 0) {
            return Err(Error::EntryOutOfRange(v, u32::MAX));
        }
        Ok(IntegerSequence { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// The image of an integer sequence: final tableau, recorded shape
/// sequence and the common final shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiImage {
    pub tableau: StandardYoungTableau,
    pub vt: VacillatingTableau,
    pub shape: Partition,
}

/// Applies the delete-insert map to `seq` over the alphabet `[n]`.
pub fn di_forward(seq: &IntegerSequence, n: usize) -> Result<DiImage, Error> {
    Ok(di_forward_traced(seq, n)?.0)
}

/// Like [`di_forward`] but also returns every intermediate tableau
/// `T^(0), T^(½), …, T^(k)` in step order.
pub fn di_forward_traced(
    seq: &IntegerSequence,
    n: usize,
) -> Result<(DiImage, Vec<PartialTableau>), Error> {
    for &v in seq.values() {
        if v as usize > n {
            return Err(Error::EntryOutOfRange(v, n as u32));
        }
    }
    let mut t = PartialTableau::first_row(n);
    let mut steps = vec![t.shape()];
    let mut trace = vec![t.clone()];
    for &x in seq.values() {
        let (after_delete, _) = jdt_delete(&t, x)?;
        steps.push(after_delete.shape());
        trace.push(after_delete.clone());
        let (after_insert, _) = rsk_insert(&after_delete, x)?;
        steps.push(after_insert.shape());
        trace.push(after_insert.clone());
        t = after_insert;
    }
    let shape = t.shape();
    let image = DiImage {
        tableau: StandardYoungTableau::new(t)?,
        vt: VacillatingTableau::from_steps_unchecked(steps, Flavor::NVacillating(n)),
        shape,
    };
    Ok((image, trace))
}

/// Recovers the unique sequence with `di_forward(seq, n) = img`.
///
/// Walks the shape sequence backwards: the box added at each full step
/// is reverse-bumped out (yielding `i_j`), then the box removed at the
/// preceding half step is restored by reverse jeu de taquin. Any
/// mismatch means the pair is not in the image of the map.
pub fn di_inverse(img: &DiImage, n: usize) -> Result<IntegerSequence, Error> {
    crate::vacillating::validate_n_vacillating(img.vt.steps(), n)
        .map_err(Error::InvalidVacillating)?;
    let steps = img.vt.steps();
    let k = img.vt.k();
    if img.tableau.shape() != steps[2 * k] || img.shape != steps[2 * k] {
        return Err(Error::InconsistentPair(
            "tableau shape disagrees with the vacillating tableau".into(),
        ));
    }
    let mut t = img.tableau.as_partial().clone();
    let mut values = vec![0u32; k];
    for j in (1..=k).rev() {
        let added = steps[2 * j - 1]
            .added_box(&steps[2 * j])
            .expect("validated full step adds one box");
        let (after, m) = rsk_uninsert(&t, crate::tableau::Cell::new(added.0, added.1))?;
        if m as usize > n || m == 0 {
            return Err(Error::InconsistentPair(format!(
                "recovered entry {m} outside [1, {n}]"
            )));
        }
        let removed = steps[2 * j - 1]
            .added_box(&steps[2 * j - 2])
            .expect("validated half step removes one box");
        t = jdt_undelete(&after, m, crate::tableau::Cell::new(removed.0, removed.1)).map_err(
            |e| Error::InconsistentPair(format!("reverse deletion failed at step {j}: {e}")),
        )?;
        values[j - 1] = m;
    }
    if t != PartialTableau::first_row(n) {
        return Err(Error::InconsistentPair(
            "reverse process does not end at the row tableau 1..n".into(),
        ));
    }
    IntegerSequence::new(values)
}

/// The limiting vacillating tableau of `seq`: the simplified shape
/// sequence of the delete-insert map over a certified-stable alphabet
/// size (`max(seq) + 2k + 1`, the smallest size the stabilization
/// theorem guarantees).
pub fn limiting_vt(seq: &IntegerSequence) -> VacillatingTableau {
    let m = seq.max().max(1) as usize + 2 * seq.len() + 1;
    di_forward(seq, m)
        .expect("entries bounded by m")
        .vt
        .simplify()
        .expect("forward image is n-vacillating")
}

/// Executable form of the stabilization theorem: checks that the
/// simplified shape sequence is identical for every alphabet size in
/// `(n + 2k, n + 2k + margin]`, where `n = max(seq)`.
pub fn check_stabilization(seq: &IntegerSequence, margin: usize) -> bool {
    assert!(margin >= 1);
    let base = seq.max() as usize + 2 * seq.len();
    let mut reference = None;
    for m in base + 1..=base + margin {
        let simplified = di_forward(seq, m)
            .expect("entries bounded by m")
            .vt
            .simplify()
            .expect("forward image is n-vacillating");
        match &reference {
            None => reference = Some(simplified),
            Some(r) => {
                if *r != simplified {
                    return false;
                }
            }
        }
    }
    true
}

/// Builds an integer sequence whose limiting vacillating tableau is `v`.
///
/// Uses the alphabet `[2k + 1]`: the input is unsimplified to that size,
/// paired with a canonical standard tableau of the final shape (first
/// row `1..2k−ℓ` and `2k+1`, remaining entries filled top to bottom),
/// and pushed through the inverse delete-insert map.
pub fn realize_sequence(v: &VacillatingTableau) -> Result<IntegerSequence, Error> {
    crate::vacillating::validate_limiting(v.steps()).map_err(Error::InvalidVacillating)?;
    let k = v.k();
    let n = 2 * k + 1;
    let padded = v.unsimplify(n)?;
    let shape = padded.final_shape().clone();
    let ell = v.final_shape().size();

    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(shape.num_rows());
    let first_row: Vec<u32> = (1..=(2 * k - ell) as u32)
        .chain([(2 * k + 1) as u32])
        .collect();
    debug_assert_eq!(first_row.len(), shape.row_len(1));
    rows.push(first_row);
    let mut next = (2 * k - ell + 1) as u32;
    for row in 2..=shape.num_rows() {
        let len = shape.row_len(row);
        rows.push((0..len).map(|c| next + c as u32).collect());
        next += len as u32;
    }
    let canonical = StandardYoungTableau::new(PartialTableau::new(rows)?)?;

    di_inverse(
        &DiImage {
            tableau: canonical,
            vt: padded,
            shape,
        },
        n,
    )
}
