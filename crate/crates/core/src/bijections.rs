//! Bijections between vacillating tableaux and enriched set partitions.
//!
//! [`psi`] maps a simplified vacillating tableau of length `2k` to a pair
//! `(B, T)`: a set partition of `[k]` read off as connected components of
//! the edges created by the half-step deletions, together with the final
//! partial tableau. On limiting tableaux the content of `T` is exactly
//! the set of block maxima of `B`.
//!
//! [`phi`] merges the blocks of a set partition along the 2-cycles of an
//! involution and records the merge in a red/blue coloring, giving a
//! bi-colored set partition with every block minimum red.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::tableau::{Cell, PartialTableau};
use crate::tableau_ops::{rsk_insert, rsk_uninsert};
use crate::vacillating::{validate_simplified, Flavor, VacillatingTableau};

/// A set partition of `[k]`, blocks sorted by minimal element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let blocks = Vec::<Vec<u32>>::deserialize(deserializer)?;
        SetPartition::new(blocks).map_err(serde::de::Error::custom)
    }
}

impl SetPartition {
    /// Builds a set partition from blocks; blocks are sorted internally
    /// and ordered by minimum, and must partition `[k]` for some `k`.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self, Error> {
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidSetPartition("empty block".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        let all: Vec<u32> = blocks.iter().flatten().copied().collect();
        let k = all.len() as u32;
        let set: BTreeSet<u32> = all.iter().copied().collect();
        if set.len() != all.len() || set != (1..=k).collect() {
            return Err(Error::InvalidSetPartition(format!(
                "blocks must partition 1..={k}"
            )));
        }
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Size of the ground set `[k]`.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The set of maximal elements of the blocks.
    pub fn maxima(&self) -> BTreeSet<u32> {
        self.blocks
            .iter()
            .map(|b| *b.last().expect("nonempty block"))
            .collect()
    }
}

/// An involution of `[j]`, stored as disjoint 1- and 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Involution {
    cycles: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Involution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let cycles = Vec::<Vec<u32>>::deserialize(deserializer)?;
        Involution::new(cycles).map_err(serde::de::Error::custom)
    }
}

impl Involution {
    pub fn new(cycles: Vec<Vec<u32>>) -> Result<Self, Error> {
        let mut cycles: Vec<Vec<u32>> = cycles
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if cycles.iter().any(|c| c.is_empty() || c.len() > 2) {
            return Err(Error::InvalidInvolution(
                "cycles must have length 1 or 2".into(),
            ));
        }
        cycles.sort_by_key(|c| c[0]);
        let all: Vec<u32> = cycles.iter().flatten().copied().collect();
        let j = all.len() as u32;
        let set: BTreeSet<u32> = all.iter().copied().collect();
        if set.len() != all.len() || set != (1..=j).collect() {
            return Err(Error::InvalidInvolution(format!(
                "cycles must partition 1..={j}"
            )));
        }
        Ok(Involution { cycles })
    }

    pub fn identity(j: usize) -> Self {
        Involution {
            cycles: (1..=j as u32).map(|i| vec![i]).collect(),
        }
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn two_cycles(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cycles
            .iter()
            .filter(|c| c.len() == 2)
            .map(|c| (c[0], c[1]))
    }
}

/// Element color in a bi-colored set partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "r")]
    Red,
    #[serde(rename = "b")]
    Blue,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
struct ColoredElement {
    value: u32,
    color: Color,
}

/// A set partition of `[k]` with red/blue colored elements where every
/// block minimum is red.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BiColoredSetPartition {
    blocks: Vec<Vec<ColoredElement>>,
}

impl<'de> Deserialize<'de> for BiColoredSetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let blocks = Vec::<Vec<ColoredElement>>::deserialize(deserializer)?;
        let pairs = blocks
            .into_iter()
            .map(|b| b.into_iter().map(|e| (e.value, e.color)).collect())
            .collect();
        BiColoredSetPartition::new(pairs).map_err(serde::de::Error::custom)
    }
}

impl BiColoredSetPartition {
    pub fn new(blocks: Vec<Vec<(u32, Color)>>) -> Result<Self, Error> {
        let plain = SetPartition::new(
            blocks
                .iter()
                .map(|b| b.iter().map(|&(v, _)| v).collect())
                .collect(),
        )?;
        let colors: BTreeMap<u32, Color> = blocks
            .iter()
            .flatten()
            .map(|&(v, c)| (v, c))
            .collect();
        let mut out = Vec::new();
        for block in plain.blocks() {
            let colored: Vec<ColoredElement> = block
                .iter()
                .map(|&v| ColoredElement {
                    value: v,
                    color: colors[&v],
                })
                .collect();
            if colored[0].color != Color::Red {
                return Err(Error::InvalidColoring(format!(
                    "block minimum {} must be red",
                    colored[0].value
                )));
            }
            out.push(colored);
        }
        Ok(BiColoredSetPartition { blocks: out })
    }

    pub fn blocks(&self) -> Vec<Vec<(u32, Color)>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|e| (e.value, e.color)).collect())
            .collect()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Per-step state recorded while running [`psi`]: the edge set and the
/// partial tableau after each of the `2k + 1` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTrace {
    pub edges: Vec<BTreeSet<(u32, u32)>>,
    pub tableaux: Vec<PartialTableau>,
}

/// Maps a simplified vacillating tableau to `(B, T)`.
///
/// Half steps that delete a box reverse an RSK insertion, creating the
/// edge `(m, j)`; full steps that add a box place the entry `j` there.
/// `B` collects the connected components of the resulting edge set.
pub fn psi(v: &VacillatingTableau) -> Result<(SetPartition, PartialTableau), Error> {
    psi_traced(v).map(|(b, t, _)| (b, t))
}

pub fn psi_traced(
    v: &VacillatingTableau,
) -> Result<(SetPartition, PartialTableau, PsiTrace), Error> {
    validate_simplified(v.steps()).map_err(Error::InvalidVacillating)?;
    let steps = v.steps();
    let k = v.k();
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut tableau = PartialTableau::empty();
    let mut trace = PsiTrace {
        edges: vec![edges.clone()],
        tableaux: vec![tableau.clone()],
    };
    for idx in 1..=2 * k {
        let (prev, cur) = (&steps[idx - 1], &steps[idx]);
        if idx % 2 == 1 {
            let j = ((idx + 1) / 2) as u32;
            if cur != prev {
                let (r, c) = cur.added_box(prev).expect("half step removes one box");
                let (smaller, m) = rsk_uninsert(&tableau, Cell::new(r, c))?;
                debug_assert!(m < j);
                edges.insert((m, j));
                tableau = smaller;
            }
        } else {
            let j = (idx / 2) as u32;
            if cur != prev {
                let (r, c) = prev.added_box(cur).expect("full step adds one box");
                let mut rows = tableau.rows().to_vec();
                if r - 1 == rows.len() {
                    rows.push(vec![j]);
                } else {
                    rows[r - 1].push(j);
                }
                debug_assert_eq!(rows[r - 1].len(), c);
                tableau = PartialTableau::new(rows)?;
            }
        }
        trace.edges.push(edges.clone());
        trace.tableaux.push(tableau.clone());
    }
    let blocks = components(k, &edges);
    Ok((SetPartition::new(blocks)?, tableau, trace))
}

fn components(k: usize, edges: &BTreeSet<(u32, u32)>) -> Vec<Vec<u32>> {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (
            find(&mut parent, a as usize - 1),
            find(&mut parent, b as usize - 1),
        );
        parent[ra] = rb;
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for x in 0..k {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x as u32 + 1);
    }
    groups.into_values().collect()
}

/// Inverse of [`psi`]: rebuilds the simplified vacillating tableau from
/// a pair `(B, T)` with `content(T) ⊆ max(B)`.
///
/// Within each block `{b_1 < b_2 < …}` the edges are the consecutive
/// pairs `(b_1, b_2), (b_2, b_3), …`; the recursion is unwound from step
/// `k` down, removing the entry `j` where it was placed and re-inserting
/// the edge partner to restore the half-step deletions.
pub fn psi_inverse(
    b: &SetPartition,
    t: &PartialTableau,
    k: usize,
) -> Result<VacillatingTableau, Error> {
    if b.ground_size() != k {
        return Err(Error::SizeMismatch(format!(
            "set partition covers [{}], expected [{k}]",
            b.ground_size()
        )));
    }
    let maxima = b.maxima();
    if !t.content().is_subset(&maxima) {
        return Err(Error::SizeMismatch(
            "tableau content must be a subset of the block maxima".into(),
        ));
    }
    let mut pred: BTreeMap<u32, u32> = BTreeMap::new();
    for block in b.blocks() {
        for pair in block.windows(2) {
            pred.insert(pair[1], pair[0]);
        }
    }
    let mut tableau = t.clone();
    let mut shapes = vec![tableau.shape()];
    for j in (1..=k as u32).rev() {
        if let Some(cell) = tableau.position_of(j) {
            // entry j was placed at the full step j; its box must be a corner
            let mut rows = tableau.rows().to_vec();
            if rows[cell.row - 1].last() != Some(&j)
                || rows.get(cell.row).map_or(0, Vec::len) >= cell.col
            {
                return Err(Error::InconsistentPair(format!(
                    "entry {j} is not at a removable corner"
                )));
            }
            rows[cell.row - 1].pop();
            if rows[cell.row - 1].is_empty() {
                rows.pop();
            }
            tableau = PartialTableau::new(rows)?;
        }
        shapes.push(tableau.shape());
        if let Some(&m) = pred.get(&j) {
            let (bigger, _) = rsk_insert(&tableau, m)?;
            tableau = bigger;
        }
        shapes.push(tableau.shape());
    }
    if tableau != PartialTableau::empty() {
        return Err(Error::InconsistentPair(
            "reverse recursion does not empty the tableau".into(),
        ));
    }
    shapes.reverse();
    VacillatingTableau::new(shapes, Flavor::Simplified)
}

/// Merges the blocks of `b` along the 2-cycles of `sigma` and encodes
/// the merge in colors: a non-minimal element is red exactly when it
/// shares its original block with the merged block's minimum.
pub fn phi(b: &SetPartition, sigma: &Involution) -> Result<BiColoredSetPartition, Error> {
    if sigma.size() != b.num_blocks() {
        return Err(Error::SizeMismatch(format!(
            "involution acts on [{}] but the partition has {} blocks",
            sigma.size(),
            b.num_blocks()
        )));
    }
    let mut out = Vec::new();
    for cycle in sigma.cycles() {
        match cycle.as_slice() {
            &[r] => {
                let block = &b.blocks()[r as usize - 1];
                out.push(block.iter().map(|&v| (v, Color::Red)).collect());
            }
            &[a, c] => {
                // blocks are ordered by minimum, so block a holds the
                // merged minimum (a < c)
                let mut merged: Vec<(u32, Color)> = b.blocks()[a as usize - 1]
                    .iter()
                    .map(|&v| (v, Color::Red))
                    .chain(
                        b.blocks()[c as usize - 1]
                            .iter()
                            .map(|&v| (v, Color::Blue)),
                    )
                    .collect();
                merged.sort_by_key(|&(v, _)| v);
                out.push(merged);
            }
            _ => unreachable!("validated cycle lengths"),
        }
    }
    BiColoredSetPartition::new(out)
}

/// Inverse of [`phi`]: splits each block by color, orders the resulting
/// blocks by minima and reads the 2-cycles off the merged pairs.
pub fn phi_inverse(bc: &BiColoredSetPartition) -> Result<(SetPartition, Involution), Error> {
    let mut split_blocks: Vec<Vec<u32>> = Vec::new();
    // remember which split blocks came from the same bi-colored block
    let mut merged_pairs: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for block in bc.blocks() {
        let red: Vec<u32> = block
            .iter()
            .filter(|&&(_, c)| c == Color::Red)
            .map(|&(v, _)| v)
            .collect();
        let blue: Vec<u32> = block
            .iter()
            .filter(|&&(_, c)| c == Color::Blue)
            .map(|&(v, _)| v)
            .collect();
        if blue.is_empty() {
            split_blocks.push(red);
        } else {
            merged_pairs.push((red.clone(), blue.clone()));
            split_blocks.push(red);
            split_blocks.push(blue);
        }
    }
    let partition = SetPartition::new(split_blocks)?;
    let index_of = |block: &[u32]| -> u32 {
        partition
            .blocks()
            .iter()
            .position(|b| b == block)
            .expect("split block present") as u32
            + 1
    };
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut paired: BTreeSet<u32> = BTreeSet::new();
    for (red, blue) in &merged_pairs {
        let (i, l) = (index_of(red), index_of(blue));
        paired.insert(i);
        paired.insert(l);
        cycles.push(vec![i, l]);
    }
    for i in 1..=partition.num_blocks() as u32 {
        if !paired.contains(&i) {
            cycles.push(vec![i]);
        }
    }
    Ok((partition, Involution::new(cycles)?))
}

/// All set partitions of `[k]`, deterministically ordered.
pub fn all_set_partitions(k: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    fn rec(k: usize, next: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<SetPartition>) {
        if next > k as u32 {
            out.push(SetPartition::new(blocks.clone()).expect("constructed partition"));
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            rec(k, next + 1, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        rec(k, next + 1, blocks, out);
        blocks.pop();
    }
    rec(k, 1, &mut blocks, &mut out);
    out
}

/// All involutions of `[j]`, deterministically ordered.
pub fn all_involutions(j: usize) -> Vec<Involution> {
    let mut out = Vec::new();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    fn rec(
        remaining: &[u32],
        cycles: &mut Vec<Vec<u32>>,
        out: &mut Vec<Involution>,
    ) {
        match remaining.first() {
            None => out.push(Involution::new(cycles.clone()).expect("constructed involution")),
            Some(&first) => {
                let rest: Vec<u32> = remaining[1..].to_vec();
                cycles.push(vec![first]);
                rec(&rest, cycles, out);
                cycles.pop();
                for (pos, &partner) in rest.iter().enumerate() {
                    let mut smaller = rest.clone();
                    smaller.remove(pos);
                    cycles.push(vec![first, partner]);
                    rec(&smaller, cycles, out);
                    cycles.pop();
                }
            }
        }
    }
    let all: Vec<u32> = (1..=j as u32).collect();
    rec(&all, &mut cycles, &mut out);
    out
}

/// All bi-colored set partitions of `[k]`: every set partition with every
/// admissible coloring of the non-minimal elements.
pub fn all_bicolored_set_partitions(k: usize) -> Vec<BiColoredSetPartition> {
    let mut out = Vec::new();
    for sp in all_set_partitions(k) {
        let free: Vec<u32> = sp
            .blocks()
            .iter()
            .flat_map(|b| b.iter().skip(1).copied())
            .collect();
        for mask in 0..(1u32 << free.len()) {
            let blocks = sp
                .blocks()
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&v| {
                            let color = match free.iter().position(|&f| f == v) {
                                Some(bit) if mask & (1 << bit) != 0 => Color::Blue,
                                _ => Color::Red,
                            };
                            (v, color)
                        })
                        .collect()
                })
                .collect();
            out.push(BiColoredSetPartition::new(blocks).expect("minima stay red"));
        }
    }
    out
}
