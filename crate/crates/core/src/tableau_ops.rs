//! RSK row insertion and jeu de taquin deletion, with exact inverses.
//!
//! Both primitives move exactly one box: insertion grows the shape by one
//! addable corner, deletion removes one removable corner. Each returns
//! the box it touched so callers can record shape sequences.

use crate::error::Error;
use crate::tableau::{Cell, PartialTableau};

/// Row-inserts `x` into `t` (`x → T`), bumping larger entries downward.
///
/// Returns the new tableau and the position of the added box.
pub fn rsk_insert(t: &PartialTableau, x: u32) -> Result<(PartialTableau, Cell), Error> {
    if t.contains_entry(x) {
        return Err(Error::DuplicateEntry(x));
    }
    let mut rows = t.rows().to_vec();
    let mut value = x;
    let mut row = 0;
    loop {
        if row == rows.len() {
            rows.push(vec![value]);
            break;
        }
        // smallest entry greater than value, if any
        match rows[row].iter().position(|&y| y > value) {
            Some(pos) => {
                std::mem::swap(&mut rows[row][pos], &mut value);
                row += 1;
            }
            None => {
                rows[row].push(value);
                break;
            }
        }
    }
    let cell = Cell::new(row + 1, rows[row].len());
    Ok((PartialTableau::from_rows_unchecked(rows), cell))
}

/// Reverse row insertion starting from a corner box of `t`.
///
/// Returns `(t', m)` with `rsk_insert(t', m) = (t, corner)`.
pub fn rsk_uninsert(t: &PartialTableau, corner: Cell) -> Result<(PartialTableau, u32), Error> {
    if !t.shape().corners().contains(&(corner.row, corner.col)) {
        return Err(Error::NotACorner(corner.row, corner.col));
    }
    let mut rows = t.rows().to_vec();
    let mut value = rows[corner.row - 1].pop().expect("corner row nonempty");
    if rows[corner.row - 1].is_empty() {
        rows.pop();
    }
    for row in (0..corner.row - 1).rev() {
        // largest entry smaller than the travelling value; one exists
        // because the entry directly above the bumped box is smaller
        let pos = rows[row]
            .iter()
            .rposition(|&y| y < value)
            .expect("reverse bump target exists in valid tableau");
        std::mem::swap(&mut rows[row][pos], &mut value);
    }
    Ok((PartialTableau::from_rows_unchecked(rows), value))
}

/// Jeu de taquin deletion of the entry `x` from `t` (`x ← T`).
///
/// The box holding `x` slides toward a corner, exchanging with the
/// smaller of its right and below neighbors; the corner is then removed.
/// Returns the new tableau and the removed corner.
pub fn jdt_delete(t: &PartialTableau, x: u32) -> Result<(PartialTableau, Cell), Error> {
    let start = t.position_of(x).ok_or(Error::EntryNotFound(x))?;
    let mut rows = t.rows().to_vec();
    let (mut r, mut c) = (start.row - 1, start.col - 1);
    loop {
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = rows[r].get(c + 1).copied();
        match (below, right) {
            (None, None) => break,
            (Some(b), None) => {
                rows[r][c] = b;
                r += 1;
            }
            (None, Some(rt)) => {
                rows[r][c] = rt;
                c += 1;
            }
            (Some(b), Some(rt)) => {
                if b < rt {
                    rows[r][c] = b;
                    r += 1;
                } else {
                    rows[r][c] = rt;
                    c += 1;
                }
            }
        }
        rows[r][c] = x;
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    Ok((
        PartialTableau::from_rows_unchecked(rows),
        Cell::new(r + 1, c + 1),
    ))
}

/// Reverse jeu de taquin: opens a hole at `corner`, slides it backwards
/// (exchanging with the larger of the left/up neighbors while that
/// neighbor exceeds `x`), then deposits `x` in the hole.
///
/// Inverse of [`jdt_delete`]: `jdt_delete(result, x) = (t, corner)`.
pub fn jdt_undelete(t: &PartialTableau, x: u32, corner: Cell) -> Result<PartialTableau, Error> {
    if t.contains_entry(x) {
        return Err(Error::DuplicateEntry(x));
    }
    if !t
        .shape()
        .addable_corners()
        .contains(&(corner.row, corner.col))
    {
        return Err(Error::InvalidCorner(corner.row, corner.col));
    }
    let mut rows = t.rows().to_vec();
    if corner.row - 1 == rows.len() {
        rows.push(Vec::new());
    }
    rows[corner.row - 1].push(0); // hole placeholder
    let (mut r, mut c) = (corner.row - 1, corner.col - 1);
    loop {
        let up = if r > 0 { Some(rows[r - 1][c]) } else { None };
        let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
        let candidate = match (up, left) {
            (None, None) => break,
            (Some(u), None) => Some((u, r - 1, c)),
            (None, Some(l)) => Some((l, r, c - 1)),
            (Some(u), Some(l)) => {
                if u > l {
                    Some((u, r - 1, c))
                } else {
                    Some((l, r, c - 1))
                }
            }
        };
        match candidate {
            Some((v, nr, nc)) if v > x => {
                rows[r][c] = v;
                r = nr;
                c = nc;
            }
            _ => break,
        }
    }
    rows[r][c] = x;
    Ok(PartialTableau::from_rows_unchecked(rows))
}
