use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a diagram, 1-based `(row, column)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellPosition {
    pub row: usize,
    pub col: usize,
}

impl CellPosition {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cell positions are 1-based");
        CellPosition { row, col }
    }

    pub fn transpose(self) -> Self {
        CellPosition {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for CellPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition: weakly decreasing positive row lengths.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Trailing zeros are stripped; rows must be weakly decreasing.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Diagram(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `λ_i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let cols = (1..=self.num_cols())
            .map(|j| self.rows.iter().take_while(|&&r| r >= j).count())
            .collect();
        YoungDiagram { rows: cols }
    }

    /// Column lengths `λ'_j`.
    pub fn col_lengths(&self) -> Vec<usize> {
        self.conjugate().rows
    }

    pub fn contains_cell(&self, c: CellPosition) -> bool {
        self.row(c.row) >= c.col
    }

    pub fn is_corner(&self, c: CellPosition) -> bool {
        self.row(c.row) == c.col && self.row(c.row + 1) < c.col
    }

    /// Removable cells, top to bottom.
    pub fn corners(&self) -> Vec<CellPosition> {
        (1..=self.num_rows())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| CellPosition::new(i, self.row(i)))
            .collect()
    }

    /// Cells that can be added, top to bottom.
    pub fn addable(&self) -> Vec<CellPosition> {
        (1..=self.num_rows() + 1)
            .filter(|&i| i == 1 || self.row(i) < self.row(i - 1))
            .map(|i| CellPosition::new(i, self.row(i) + 1))
            .collect()
    }

    pub fn remove_corner(&self, c: CellPosition) -> Result<YoungDiagram> {
        if !self.is_corner(c) {
            return Err(Error::InvalidCorner { row: c.row, col: c.col });
        }
        let mut rows = self.rows.clone();
        rows[c.row - 1] -= 1;
        YoungDiagram::new(rows)
    }

    /// Adds a cell at the end of row `i` (1-based), if the result is a diagram.
    pub fn add_to_row(&self, i: usize) -> Option<YoungDiagram> {
        if i == 0 || i > self.num_rows() + 1 {
            return None;
        }
        if i > 1 && self.row(i) + 1 > self.row(i - 1) {
            return None;
        }
        let mut rows = self.rows.clone();
        if i > rows.len() {
            rows.push(0);
        }
        rows[i - 1] += 1;
        Some(YoungDiagram { rows })
    }

    /// Removes the last cell of row `i`, if the result is a diagram.
    pub fn remove_from_row(&self, i: usize) -> Option<YoungDiagram> {
        let c = CellPosition::new(i, self.row(i).max(1));
        if self.row(i) == 0 || !self.is_corner(c) {
            return None;
        }
        self.remove_corner(c).ok()
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.num_rows() <= self.num_rows() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// `λ ↗ μ`: `other` is `self` plus one cell.
    pub fn is_covered_by(&self, other: &YoungDiagram) -> bool {
        other.size() == self.size() + 1 && other.contains(self)
    }

    pub fn cells(&self) -> impl Iterator<Item = CellPosition> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| CellPosition::new(i + 1, j)))
    }

    /// Hook length of a cell.
    pub fn hook(&self, c: CellPosition) -> usize {
        let arm = self.row(c.row) - c.col;
        let leg = (c.row + 1..=self.num_rows())
            .take_while(|&i| self.row(i) >= c.col)
            .count();
        arm + leg + 1
    }

    /// Durfee rank: the number of diagonal cells.
    pub fn durfee(&self) -> usize {
        self.rows.iter().enumerate().take_while(|(i, &r)| r > *i).count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.durfee();
        let conj = self.conjugate();
        FrobeniusCoords {
            arms: (1..=d).map(|i| self.row(i) - i).collect(),
            legs: (1..=d).map(|i| conj.row(i) - i).collect(),
        }
    }

    /// Fits the `(k, l)`-hook: `λ_{k+1} <= l`.
    pub fn fits_hook(&self, k: usize, l: usize) -> bool {
        self.row(k + 1) <= l
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(YoungDiagram::empty());
        }
        let rows = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("row length {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

/// Frobenius coordinates `(α_1,…,α_d | β_1,…,β_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::Diagram("arm and leg counts differ".into()));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&arms) || !strict(&legs) {
            return Err(Error::Diagram("Frobenius coordinates must strictly decrease".into()));
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> usize {
        self.arms.iter().zip(&self.legs).map(|(a, b)| a + b + 1).sum()
    }

    pub fn to_diagram(&self) -> YoungDiagram {
        let d = self.rank();
        let mut rows: Vec<usize> = (0..d).map(|i| self.arms[i] + i + 1).collect();
        // Below the Durfee square, row i has as many cells as legs reaching it.
        let depth = self.legs.first().map_or(0, |b| b + 1);
        for i in d + 1..=depth {
            rows.push(self.legs.iter().enumerate().filter(|(j, &b)| b + j + 1 >= i).count());
        }
        YoungDiagram::new(rows).expect("Frobenius coordinates describe a diagram")
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

/// Partitions of `n` with at most `max_rows` rows, in decreasing lexicographic order.
pub fn partitions(n: usize, max_rows: usize) -> Vec<YoungDiagram> {
    fn go(n: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if n == 0 {
            out.push(YoungDiagram { rows: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for part in (1..=max_part.min(n)).rev() {
            cur.push(part);
            go(n - part, part, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` fitting the `(k, l)`-hook.
pub fn hook_partitions(n: usize, k: usize, l: usize) -> Vec<YoungDiagram> {
    partitions(n, n).into_iter().filter(|d| d.fits_hook(k, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(d(&[1]).frobenius().to_string(), "(0|0)");
        assert_eq!(d(&[2, 1]).frobenius().to_string(), "(1|1)");
        assert_eq!(d(&[3, 2]).frobenius().to_string(), "(2,0|1,0)");
        assert_eq!(YoungDiagram::empty().frobenius().rank(), 0);
    }

    #[test]
    fn frobenius_round_trip_up_to_12() {
        for n in 0..=12 {
            for lambda in partitions(n, n) {
                let f = lambda.frobenius();
                assert_eq!(f.size(), n);
                assert_eq!(f.to_diagram(), lambda, "{f}");
            }
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=10 {
            for lambda in partitions(n, n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
                assert_eq!(lambda.conjugate().size(), n);
            }
        }
        assert_eq!(d(&[3, 1]).col_lengths(), vec![2, 1, 1]);
    }

    #[test]
    fn corners_and_addable() {
        let l = d(&[3, 1, 1]);
        assert_eq!(l.corners(), vec![CellPosition::new(1, 3), CellPosition::new(3, 1)]);
        assert_eq!(l.addable().len(), 3);
        assert!(l.remove_corner(CellPosition::new(2, 1)).is_err());
        assert_eq!(l.add_to_row(2), Some(d(&[3, 2, 1])));
        assert_eq!(l.add_to_row(3), None);
        assert_eq!(l.remove_from_row(2), None);
        assert_eq!(l.remove_from_row(3), Some(d(&[3, 1])));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(6, 2).len(), 4);
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert_eq!(YoungDiagram::new(vec![2, 0, 0]).unwrap(), d(&[2]));
    }

    #[test]
    fn hooks() {
        let l = d(&[3, 2]);
        let hooks: Vec<usize> = l.cells().map(|c| l.hook(c)).collect();
        assert_eq!(hooks, [4, 3, 1, 2, 1]);
    }
}
