//! Counting formulas and exact cross-checked identities.
//!
//! The headline identity is `n^k = Σ_{λ⊢n} f^λ · m_k^λ` for `n ≥ 2k`,
//! where `f^λ` counts standard Young tableaux and `m_k^λ` counts
//! vacillating tableaux of shape `λ` and length `2k`. The number of
//! limiting vacillating tableaux of length `2k` is
//! `a_k = Σ_j S(k,j) · I(j)`, which equals the bi-colored set partition
//! count `c_k = Σ_m 2^(k−m) S(k,m)` — OEIS A004211.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bijections::{all_involutions, all_set_partitions, phi};
use crate::count::Count;
use crate::di_map::{di_forward, IntegerSequence};
use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::vacillating::{enumerate_counts, DEFAULT_COUNT_BOUND};

/// Stirling number of the second kind `S(k, m)`: set partitions of `[k]`
/// into `m` blocks, by the recurrence `S(k,m) = m·S(k−1,m) + S(k−1,m−1)`.
pub fn stirling2(k: usize, m: usize) -> Count {
    if m > k {
        return Count::zero();
    }
    if k == 0 {
        return Count::one();
    }
    if m == 0 {
        return Count::zero();
    }
    // row-by-row table, exact
    let mut row: Vec<Count> = vec![Count::one()]; // S(0, 0)
    for i in 1..=k {
        let mut next = vec![Count::zero(); i + 1];
        for j in 1..=i {
            let keep = row.get(j).cloned().unwrap_or_else(Count::zero);
            let split = row[j - 1].clone();
            next[j] = keep * Count::from(j) + split;
        }
        row = next;
    }
    row[m].clone()
}

/// Number of involutions `I(j)` in the symmetric group on `j` letters:
/// `I(j) = I(j−1) + (j−1)·I(j−2)`, `I(0) = I(1) = 1`.
pub fn involution_count(j: usize) -> Count {
    let mut prev2 = Count::one();
    let mut prev1 = Count::one();
    if j == 0 {
        return prev2;
    }
    for i in 2..=j {
        let next = prev1.clone() + &(prev2 * Count::from(i - 1));
        prev2 = prev1;
        prev1 = next;
    }
    prev1
}

/// The number of limiting vacillating tableaux of length `2k`:
/// `a_k = Σ_{j=1}^k S(k,j) · Σ_{λ⊢j} f^λ`, with `a_0 = 1`.
pub fn a_k_formula(k: usize) -> Count {
    if k == 0 {
        return Count::one();
    }
    (1..=k)
        .map(|j| stirling2(k, j) * involution_count(j))
        .sum()
}

/// The `k`-th term of OEIS A004211 via the bi-colored set partition
/// formula `c_k = Σ_{m=1}^k 2^(k−m) S(k,m)`; `c_0 = 1`.
pub fn c_k_formula(k: usize) -> Count {
    if k == 0 {
        return Count::one();
    }
    (1..=k)
        .map(|m| Count::pow(2, (k - m) as u32) * stirling2(k, m))
        .sum()
}

/// `m_k^λ`: the number of vacillating tableaux of shape `lam ⊢ n` and
/// length `2k`, computed as the number of simplified sequences ending at
/// `λ*`. Zero when `λ*` has more than `k` boxes.
pub fn m_k_lambda(lam: &Partition, n: usize, k: usize) -> Result<Count, Error> {
    if lam.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam:?} is not a partition of {n}"
        )));
    }
    let end = lam.strip_first_row();
    if end.size() > k {
        return Ok(Count::zero());
    }
    Ok(enumerate_counts(k, false, DEFAULT_COUNT_BOUND.max(k))?.get(&end))
}

/// One per-shape row of an identity report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub shape: Partition,
    pub f: Count,
    pub m: Count,
    pub product: Count,
}

/// The two sides of `n^k = Σ f^λ m_k^λ`, computed exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: usize,
    pub k: usize,
    pub lhs: Count,
    pub rows: Vec<IdentityRow>,
    pub rhs: Count,
    pub holds: bool,
    pub method: String,
    /// False when `n < 2k`, outside the identity's hypothesis; the
    /// report is still computed but makes no claim.
    pub in_hypothesis: bool,
}

/// Evaluates the identity by formula. With `sweep`, additionally runs
/// the delete-insert map over all `n^k` sequences and checks that the
/// number of sequences landing on each final shape `λ` equals
/// `f^λ · m_k^λ` — strictly stronger than the scalar equality.
pub fn verify_identity(n: usize, k: usize, sweep: bool) -> Result<IdentityReport, Error> {
    let lhs = Count::pow(n as u64, k as u32);
    let mut rows = Vec::new();
    let mut rhs = Count::zero();
    for lam in partitions_of(n) {
        let f = lam.syt_count();
        let m = m_k_lambda(&lam, n, k)?;
        let product = &f * &m;
        rhs += &product;
        rows.push(IdentityRow {
            shape: lam,
            f,
            m,
            product,
        });
    }
    if sweep {
        let mut bins: BTreeMap<Partition, Count> = BTreeMap::new();
        for seq in all_sequences(n, k) {
            let img = di_forward(&seq, n)?;
            *bins.entry(img.shape).or_default() += Count::one();
        }
        for row in &rows {
            let observed = bins.get(&row.shape).cloned().unwrap_or_else(Count::zero);
            if observed != row.product {
                return Err(Error::SizeMismatch(format!(
                    "sweep bin for shape {:?} holds {observed}, formula gives {}",
                    row.shape, row.product
                )));
            }
        }
    }
    let holds = lhs == rhs;
    Ok(IdentityReport {
        n,
        k,
        lhs,
        rows,
        rhs,
        holds,
        method: if sweep { "sweep" } else { "formula" }.into(),
        in_hypothesis: n >= 2 * k,
    })
}

/// All sequences in `[n]^k`, lexicographic.
pub fn all_sequences(n: usize, k: usize) -> Vec<IntegerSequence> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, current: &mut Vec<u32>, out: &mut Vec<IntegerSequence>) {
        if current.len() == k {
            out.push(IntegerSequence::new(current.clone()).expect("positive entries"));
            return;
        }
        for v in 1..=n as u32 {
            current.push(v);
            rec(n, k, current, out);
            current.pop();
        }
    }
    rec(n, k, &mut current, &mut out);
    out
}

/// Checks `Σ_j S(k,j)·I(j) = Σ_t S(k,t)·2^(k−t)` exactly, and that the
/// block-merging bijection maps the `(B, σ)` pairs onto distinct
/// bi-colored partitions of matching cardinality.
pub fn theorem4_check(k: usize) -> bool {
    if a_k_formula(k) != c_k_formula(k) {
        return false;
    }
    let mut images = std::collections::BTreeSet::new();
    let mut pairs = 0usize;
    for b in all_set_partitions(k) {
        for sigma in all_involutions(b.num_blocks()) {
            let bc = phi(&b, &sigma).expect("sizes match by construction");
            images.insert(format!("{bc:?}"));
            pairs += 1;
        }
    }
    Count::from(images.len()) == c_k_formula(k) && images.len() == pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::all_bicolored_set_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(4, 2), Count::from(7u64));
        for k in 1..=6 {
            assert_eq!(stirling2(k, k), Count::one());
            assert_eq!(stirling2(k, 1), Count::one());
        }
        assert_eq!(stirling2(3, 5), Count::zero());
    }

    #[test]
    fn stirling_brute_force_oracle() {
        // bin set partitions of [k] by block count
        for k in 1..=6 {
            let mut by_blocks = BTreeMap::new();
            for sp in all_set_partitions(k) {
                *by_blocks.entry(sp.num_blocks()).or_insert(0u64) += 1;
            }
            for m in 1..=k {
                assert_eq!(
                    stirling2(k, m),
                    Count::from(by_blocks.get(&m).copied().unwrap_or(0)),
                    "S({k},{m})"
                );
            }
        }
    }

    #[test]
    fn stirling_rows_sum_to_bell() {
        for k in 1..=8 {
            let bell: Count = (1..=k).map(|m| stirling2(k, m)).sum();
            assert_eq!(bell, Count::from(all_set_partitions(k).len()));
        }
    }

    #[test]
    fn involution_count_examples() {
        assert_eq!(involution_count(0), Count::one());
        assert_eq!(involution_count(4), Count::from(10u64));
        for j in 0..=8 {
            assert_eq!(involution_count(j), Count::from(all_involutions(j).len()));
        }
    }

    #[test]
    fn involution_count_equals_syt_sum() {
        for j in 0..=10 {
            let total: Count = partitions_of(j).iter().map(Partition::syt_count).sum();
            assert_eq!(total, involution_count(j), "j = {j}");
        }
    }

    #[test]
    fn a_k_initial_values() {
        let expected = [1u64, 1, 3, 11, 49, 257];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(a_k_formula(k), Count::from(e), "a_{k}");
        }
    }

    #[test]
    fn c_k_values_and_oracle() {
        assert_eq!(c_k_formula(2), Count::from(3u64));
        assert_eq!(c_k_formula(3), Count::from(11u64));
        for k in 0..=8 {
            assert_eq!(
                c_k_formula(k),
                Count::from(all_bicolored_set_partitions(k).len()),
                "c_{k}"
            );
        }
    }

    #[test]
    fn a_equals_limiting_enumeration() {
        for k in 0..=6 {
            let table = enumerate_counts(k, true, DEFAULT_COUNT_BOUND).unwrap();
            assert_eq!(a_k_formula(k), table.total(), "k = {k}");
        }
    }

    #[test]
    fn m_k_lambda_examples() {
        assert_eq!(m_k_lambda(&p(&[4]), 4, 2).unwrap(), Count::from(2u64));
        assert_eq!(m_k_lambda(&p(&[3, 1]), 4, 2).unwrap(), Count::from(3u64));
        assert_eq!(
            m_k_lambda(&p(&[1, 1, 1, 1]), 4, 2).unwrap(),
            Count::zero()
        );
        assert!(m_k_lambda(&p(&[3]), 4, 2).is_err());
    }

    #[test]
    fn m_k_lambda_independent_of_n() {
        for k in 0..=3 {
            for n in (2 * k).max(1)..=6 {
                for lam in partitions_of(n) {
                    let mut padded = vec![lam.row_len(1) + 1];
                    padded.extend_from_slice(&lam.parts()[1..]);
                    let bigger = Partition::new(padded).unwrap();
                    assert_eq!(
                        m_k_lambda(&lam, n, k).unwrap(),
                        m_k_lambda(&bigger, n + 1, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn identity_example_4_2() {
        let report = verify_identity(4, 2, true).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, Count::from(16u64));
        assert_eq!(report.rhs, Count::from(16u64));
        let expect: Vec<(&[usize], u64, u64)> = vec![
            (&[4], 1, 2),
            (&[3, 1], 3, 3),
            (&[2, 2], 2, 1),
            (&[2, 1, 1], 3, 1),
            (&[1, 1, 1, 1], 1, 0),
        ];
        for (shape, f, m) in expect {
            let row = report
                .rows
                .iter()
                .find(|r| r.shape == p(shape))
                .unwrap();
            assert_eq!(row.f, Count::from(f));
            assert_eq!(row.m, Count::from(m));
        }
    }

    #[test]
    fn identity_edges() {
        let report = verify_identity(2, 1, true).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, Count::from(2u64));

        let report = verify_identity(5, 0, true).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, Count::one());

        // below the hypothesis the report is flagged, not asserted
        let report = verify_identity(1, 1, false).unwrap();
        assert!(!report.in_hypothesis);
    }

    #[test]
    fn theorem4_small_k() {
        for k in 1..=6 {
            assert!(theorem4_check(k), "k = {k}");
        }
        assert_eq!(a_k_formula(4), Count::from(49u64));
    }
}
