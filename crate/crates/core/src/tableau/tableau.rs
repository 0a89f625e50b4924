use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diagram::{CellPosition, YoungDiagram};
use super::symbol::Symbol;
use crate::error::{Error, Result};

/// Which row/column monotonicity a tableau satisfies.
///
/// `Hook` is the `(k, l)`-semistandard kind; `DualHook` is its transpose,
/// the kind produced by the mixed dual insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableauKind {
    Standard,
    Semistandard,
    DualSemistandard,
    Hook,
    DualHook,
}

impl TableauKind {
    pub fn name(self) -> &'static str {
        match self {
            TableauKind::Standard => "standard",
            TableauKind::Semistandard => "semistandard",
            TableauKind::DualSemistandard => "dual-semistandard",
            TableauKind::Hook => "hook-semistandard",
            TableauKind::DualHook => "dual-hook-semistandard",
        }
    }

    pub fn transpose(self) -> Self {
        match self {
            TableauKind::Standard => TableauKind::Standard,
            TableauKind::Semistandard => TableauKind::DualSemistandard,
            TableauKind::DualSemistandard => TableauKind::Semistandard,
            TableauKind::Hook => TableauKind::DualHook,
            TableauKind::DualHook => TableauKind::Hook,
        }
    }

    /// The insertion that keeps tableaux of this kind closed.
    pub fn insertion_rule(self) -> InsertionRule {
        match self {
            TableauKind::Standard | TableauKind::Semistandard => InsertionRule::Row,
            TableauKind::DualSemistandard => InsertionRule::Dual,
            TableauKind::Hook => InsertionRule::Mixed,
            TableauKind::DualHook => InsertionRule::MixedDual,
        }
    }
}

/// Bumping rule of a row insertion.
///
/// A letter inserted into a row bumps either the leftmost entry strictly
/// greater than it (ordinary insertion) or the leftmost entry greater than or
/// equal to it (dual insertion). The mixed rules choose per letter: `Mixed`
/// is ordinary on unstarred and dual on starred letters, `MixedDual` the
/// other way round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InsertionRule {
    Row,
    Dual,
    Mixed,
    MixedDual,
}

impl InsertionRule {
    /// Whether `s` bumps an equal entry.
    #[inline]
    pub fn bumps_equal(self, s: Symbol) -> bool {
        match self {
            InsertionRule::Row => false,
            InsertionRule::Dual => true,
            InsertionRule::Mixed => s.is_starred(),
            InsertionRule::MixedDual => !s.is_starred(),
        }
    }

    pub fn output_kind(self) -> TableauKind {
        match self {
            InsertionRule::Row => TableauKind::Semistandard,
            InsertionRule::Dual => TableauKind::DualSemistandard,
            InsertionRule::Mixed => TableauKind::Hook,
            InsertionRule::MixedDual => TableauKind::DualHook,
        }
    }

    /// Position in a sorted row of the entry `s` bumps (`row.len()` if none).
    #[inline]
    pub fn bump_position(self, row: &[Symbol], s: Symbol) -> usize {
        if self.bumps_equal(s) {
            row.partition_point(|&x| x < s)
        } else {
            row.partition_point(|&x| x <= s)
        }
    }

    /// Position of the entry that must have bumped `z` out of a sorted row.
    #[inline]
    pub fn unbump_position(self, row: &[Symbol], z: Symbol) -> Option<usize> {
        let end = if self.bumps_equal(z) {
            row.partition_point(|&y| y <= z)
        } else {
            row.partition_point(|&y| y < z)
        };
        end.checked_sub(1)
    }
}

/// Row insertion on raw rows, returning the new cell.
pub(crate) fn insert_into_rows(rows: &mut Vec<Vec<Symbol>>, s: Symbol, rule: InsertionRule) -> CellPosition {
    let mut cur = s;
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = rule.bump_position(row, cur);
        if pos == row.len() {
            row.push(cur);
            return CellPosition::new(i + 1, pos + 1);
        }
        cur = std::mem::replace(&mut row[pos], cur);
    }
    rows.push(vec![cur]);
    CellPosition::new(rows.len(), 1)
}

/// Reverse row insertion from corner `c` on raw rows; the caller checks `c`.
pub(crate) fn reverse_from_rows(rows: &mut Vec<Vec<Symbol>>, c: CellPosition, rule: InsertionRule) -> Symbol {
    let mut cur = rows[c.row - 1].pop().expect("corner row is non-empty");
    if rows[c.row - 1].is_empty() {
        rows.pop();
    }
    for i in (0..c.row - 1).rev() {
        let row = &mut rows[i];
        let pos = rule
            .unbump_position(row, cur)
            .expect("reverse insertion found no entry to unbump; tableau kind mismatch");
        cur = std::mem::replace(&mut row[pos], cur);
    }
    cur
}

/// A Young tableau stored as ragged rows, tagged with the kind it was validated as.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<Symbol>>,
    kind: TableauKind,
}

impl Tableau {
    pub fn empty(kind: TableauKind) -> Self {
        Tableau { rows: Vec::new(), kind }
    }

    /// Builds and validates a tableau of the given kind.
    pub fn new(rows: Vec<Vec<Symbol>>, kind: TableauKind) -> Result<Self> {
        let t = Tableau { rows, kind };
        t.validate()?;
        Ok(t)
    }

    /// Convenience constructor from unstarred integer rows.
    pub fn from_indices(rows: &[&[u32]], kind: TableauKind) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&i| Symbol::row(i)).collect())
            .collect();
        Tableau::new(rows, kind)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Symbol>>, kind: TableauKind) -> Self {
        debug_assert!(rows.iter().all(|r| !r.is_empty()));
        Tableau { rows, kind }
    }

    /// Parses the canonical text form and validates it as `kind`.
    pub fn parse(text: &str, kind: TableauKind) -> Result<Self> {
        Tableau::new(parse_rows(text)?, kind)
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows form a diagram")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, c: CellPosition) -> Option<Symbol> {
        self.rows.get(c.row - 1)?.get(c.col - 1).copied()
    }

    /// Entries in row-reading order, top row first.
    pub fn entries(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Multiset of entries as a sorted vector.
    pub fn content(&self) -> Vec<Symbol> {
        let mut c: Vec<Symbol> = self.entries().collect();
        c.sort_unstable();
        c
    }

    /// Re-tags the tableau after validating it as `kind`.
    pub fn with_kind(self, kind: TableauKind) -> Result<Self> {
        Tableau::new(self.rows, kind)
    }

    pub fn validate(&self) -> Result<()> {
        let kind = self.kind;
        let fail = |reason: String| Error::Kind {
            expected: kind.name(),
            reason,
        };
        if self.rows.iter().any(Vec::is_empty) {
            return Err(fail("empty row".into()));
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(fail("row lengths are not weakly decreasing".into()));
        }
        // Each kind is a pair of predicates on horizontally and vertically adjacent entries.
        type Pred = fn(Symbol, Symbol) -> bool;
        let weak: Pred = |a, b| a <= b;
        let strict: Pred = |a, b| a < b;
        let hook_row: Pred = |a, b| a < b || (a == b && !a.is_starred());
        let hook_col: Pred = |a, b| a < b || (a == b && a.is_starred());
        let (along_row, down_col, unstarred_only) = match kind {
            TableauKind::Standard => (strict, strict, true),
            TableauKind::Semistandard => (weak, strict, true),
            TableauKind::DualSemistandard => (strict, weak, true),
            TableauKind::Hook => (hook_row, hook_col, false),
            TableauKind::DualHook => (hook_col, hook_row, false),
        };
        if unstarred_only {
            if let Some(s) = self.entries().find(|s| s.is_starred()) {
                return Err(fail(format!("starred entry {s}")));
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, w) in row.windows(2).enumerate() {
                if !along_row(w[0], w[1]) {
                    return Err(fail(format!(
                        "row {} at columns {},{}: {} then {}",
                        i + 1,
                        j + 1,
                        j + 2,
                        w[0],
                        w[1]
                    )));
                }
            }
            if i > 0 {
                for (j, (&above, &below)) in self.rows[i - 1].iter().zip(row).enumerate() {
                    if !down_col(above, below) {
                        return Err(fail(format!(
                            "column {} at rows {},{}: {} above {}",
                            j + 1,
                            i,
                            i + 1,
                            above,
                            below
                        )));
                    }
                }
            }
        }
        if kind == TableauKind::Standard {
            let n = self.size();
            let mut seen = vec![false; n + 1];
            for s in self.entries() {
                let v = s.index() as usize;
                if v > n || seen[v] {
                    return Err(fail(format!("entries are not a permutation of 1..{n}")));
                }
                seen[v] = true;
            }
        }
        Ok(())
    }

    /// Whether the tableau also satisfies the rules of `kind`.
    pub fn is_valid_as(&self, kind: TableauKind) -> bool {
        Tableau {
            rows: self.rows.clone(),
            kind,
        }
        .validate()
        .is_ok()
    }

    fn insert_with(&self, s: Symbol, rule: InsertionRule) -> (Tableau, CellPosition) {
        let mut rows = self.rows.clone();
        let cell = insert_into_rows(&mut rows, s, rule);
        (Tableau::from_rows_unchecked(rows, rule.output_kind()), cell)
    }

    /// In-place insertion with the rule matching this tableau's kind.
    pub fn insert_mut(&mut self, s: Symbol) -> CellPosition {
        insert_into_rows(&mut self.rows, s, self.kind.insertion_rule())
    }

    /// Ordinary Schensted row insertion: `s` bumps the leftmost entry `> s`.
    pub fn insert_row(&self, s: Symbol) -> Result<(Tableau, CellPosition)> {
        self.require_unstarred(s)?;
        Ok(self.insert_with(s, InsertionRule::Row))
    }

    /// Dual row insertion: `s` bumps the leftmost entry `>= s`.
    pub fn insert_dual(&self, s: Symbol) -> Result<(Tableau, CellPosition)> {
        self.require_unstarred(s)?;
        Ok(self.insert_with(s, InsertionRule::Dual))
    }

    /// Mixed insertion: ordinary for unstarred letters, dual for starred ones.
    pub fn insert_mixed(&self, s: Symbol) -> (Tableau, CellPosition) {
        self.insert_with(s, InsertionRule::Mixed)
    }

    /// The mixed dual insertion: dual for unstarred letters, ordinary for starred ones.
    pub fn insert_mixed_dual(&self, s: Symbol) -> (Tableau, CellPosition) {
        self.insert_with(s, InsertionRule::MixedDual)
    }

    /// Inverse of an insertion under `rule`, starting from corner `c`.
    pub fn reverse_insert(&self, c: CellPosition, rule: InsertionRule) -> Result<(Tableau, Symbol)> {
        if !self.shape().is_corner(c) {
            return Err(Error::InvalidCorner { row: c.row, col: c.col });
        }
        let mut rows = self.rows.clone();
        let s = reverse_from_rows(&mut rows, c, rule);
        Ok((Tableau::from_rows_unchecked(rows, self.kind), s))
    }

    /// `(τ, ε)`: undoes [`Tableau::insert_row`].
    pub fn reverse_insert_row(&self, c: CellPosition) -> Result<(Tableau, Symbol)> {
        self.reverse_insert(c, InsertionRule::Row)
    }

    /// `(τ*, ε*)`: undoes [`Tableau::insert_dual`].
    pub fn reverse_insert_dual(&self, c: CellPosition) -> Result<(Tableau, Symbol)> {
        self.reverse_insert(c, InsertionRule::Dual)
    }

    pub fn reverse_insert_mixed(&self, c: CellPosition) -> Result<(Tableau, Symbol)> {
        self.reverse_insert(c, InsertionRule::Mixed)
    }

    fn require_unstarred(&self, s: Symbol) -> Result<()> {
        if s.is_starred() {
            Err(Error::InvalidSymbol {
                symbol: s.to_string(),
                reason: "starred letters need the mixed insertion".into(),
            })
        } else {
            Ok(())
        }
    }

    /// Cell `(r, c)` goes to `(c, r)`; the kind is transposed accordingly.
    pub fn transpose(&self) -> Tableau {
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        Tableau::from_rows_unchecked(rows, self.kind.transpose())
    }

    /// Schützenberger evacuation of a standard tableau, by repeated jeu de taquin.
    ///
    /// Each round deletes the smallest remaining entry from `(1,1)`, slides the
    /// hole outward (always pulling in the smaller of the right and lower
    /// neighbours) and labels the vacated outer cell with `n`, `n-1`, ….
    pub fn evacuation(&self) -> Result<Tableau> {
        if self.kind != TableauKind::Standard {
            return Err(Error::Kind {
                expected: TableauKind::Standard.name(),
                reason: format!("evacuation needs a standard tableau, got {}", self.kind.name()),
            });
        }
        let n = self.size();
        let mut work: Vec<Vec<Option<u32>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| Some(s.index())).collect())
            .collect();
        let mut out: Vec<Vec<u32>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for label in (1..=n as u32).rev() {
            let (mut i, mut j) = (0usize, 0usize);
            work[0][0] = None;
            loop {
                let right = work[i].get(j + 1).copied().flatten();
                let below = work.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
                match (right, below) {
                    (None, None) => break,
                    (Some(r), Some(b)) if b < r => {
                        work[i][j] = Some(b);
                        i += 1;
                    }
                    (Some(r), _) => {
                        work[i][j] = Some(r);
                        j += 1;
                    }
                    (None, Some(b)) => {
                        work[i][j] = Some(b);
                        i += 1;
                    }
                }
                work[i][j] = None;
            }
            out[i][j] = label;
            work[i].truncate(j);
            if work[i].is_empty() {
                work.truncate(i);
            }
        }
        let rows = out
            .into_iter()
            .map(|r| r.into_iter().map(Symbol::row).collect())
            .collect();
        Tableau::new(rows, TableauKind::Standard)
    }
}

fn parse_rows(text: &str) -> Result<Vec<Vec<Symbol>>> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Vec::new());
    }
    text.split('/')
        .map(|row| row.split(',').map(str::parse).collect::<Result<Vec<Symbol>>>())
        .collect()
}

/// Canonical text form: rows separated by `/`, entries by `,`; `∅` when empty.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind.name(), self)
    }
}

/// Parses and validates, trying the kinds from the most to the least specific.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        let kinds = [
            TableauKind::Standard,
            TableauKind::Semistandard,
            TableauKind::Hook,
            TableauKind::DualSemistandard,
            TableauKind::DualHook,
        ];
        let mut last = None;
        for kind in kinds {
            match Tableau::new(rows.clone(), kind) {
                Ok(t) => return Ok(t),
                Err(e) => last = Some(e),
            }
        }
        Err(last.expect("at least one kind tried"))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    kind: TableauKind,
    rows: String,
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            rows: t.to_string(),
            kind: t.kind,
        }
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::parse(&r.rows, r.kind)
    }
}

/// Enumerates tableaux of `kind` and shape `shape` with entries from `alphabet`
/// (sorted ascending), by backtracking in row-reading order.
pub fn enumerate_fillings(shape: &YoungDiagram, alphabet: &[Symbol], kind: TableauKind) -> Vec<Tableau> {
    fn ok_cell(kind: TableauKind, left: Option<Symbol>, up: Option<Symbol>, s: Symbol) -> bool {
        let row_ok = |a: Symbol| match kind {
            TableauKind::Standard | TableauKind::DualSemistandard => a < s,
            TableauKind::Semistandard => a <= s,
            TableauKind::Hook => a < s || (a == s && !s.is_starred()),
            TableauKind::DualHook => a < s || (a == s && s.is_starred()),
        };
        let col_ok = |a: Symbol| match kind {
            TableauKind::Standard | TableauKind::Semistandard => a < s,
            TableauKind::DualSemistandard => a <= s,
            TableauKind::Hook => a < s || (a == s && s.is_starred()),
            TableauKind::DualHook => a < s || (a == s && !s.is_starred()),
        };
        left.is_none_or(row_ok) && up.is_none_or(col_ok)
    }
    fn go(
        cells: &[CellPosition],
        idx: usize,
        rows: &mut Vec<Vec<Symbol>>,
        alphabet: &[Symbol],
        kind: TableauKind,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            let t = Tableau::from_rows_unchecked(rows.clone(), kind);
            if kind != TableauKind::Standard || t.validate().is_ok() {
                out.push(t);
            }
            return;
        }
        let c = cells[idx];
        let left = (c.col > 1).then(|| rows[c.row - 1][c.col - 2]);
        let up = (c.row > 1).then(|| rows[c.row - 2][c.col - 1]);
        for &s in alphabet {
            if ok_cell(kind, left, up, s) {
                if c.col == 1 {
                    rows.push(vec![s]);
                } else {
                    rows[c.row - 1].push(s);
                }
                go(cells, idx + 1, rows, alphabet, kind, out);
                if c.col == 1 {
                    rows.pop();
                } else {
                    rows[c.row - 1].pop();
                }
            }
        }
    }
    let cells: Vec<CellPosition> = shape.cells().collect();
    let mut out = Vec::new();
    go(&cells, 0, &mut Vec::new(), alphabet, kind, &mut out);
    out
}

/// All standard Young tableaux of a shape.
pub fn standard_tableaux(shape: &YoungDiagram) -> Vec<Tableau> {
    let alphabet: Vec<Symbol> = (1..=shape.size() as u32).map(Symbol::row).collect();
    enumerate_fillings(shape, &alphabet, TableauKind::Standard)
}

#[cfg(test)]
mod tests {
    use super::super::diagram::partitions;
    use super::super::symbol::alphabet;
    use super::*;

    fn ss(text: &str) -> Tableau {
        Tableau::parse(text, TableauKind::Semistandard).unwrap()
    }

    fn ds(text: &str) -> Tableau {
        Tableau::parse(text, TableauKind::DualSemistandard).unwrap()
    }

    fn cell(r: usize, c: usize) -> CellPosition {
        CellPosition::new(r, c)
    }

    #[test]
    fn row_insertion_examples() {
        let empty = Tableau::empty(TableauKind::Semistandard);
        let (t, c) = empty.insert_row(Symbol::row(1)).unwrap();
        assert_eq!((t.to_string(), c), ("1".into(), cell(1, 1)));

        let (t, c) = ss("1,2").insert_row(Symbol::row(1)).unwrap();
        assert_eq!((t.to_string(), c), ("1,1/2".into(), cell(2, 1)));

        let (t, c) = ss("1,2/2").insert_row(Symbol::row(2)).unwrap();
        assert_eq!((t.to_string(), c), ("1,2,2/2".into(), cell(1, 3)));

        assert!(matches!(
            ss("1").insert_row(Symbol::col(1)),
            Err(Error::InvalidSymbol { .. })
        ));
    }

    #[test]
    fn dual_insertion_examples() {
        let empty = Tableau::empty(TableauKind::DualSemistandard);
        let (t, c) = empty.insert_dual(Symbol::row(2)).unwrap();
        assert_eq!((t.to_string(), c), ("2".into(), cell(1, 1)));

        let (t, c) = ds("2").insert_dual(Symbol::row(2)).unwrap();
        assert_eq!((t.to_string(), c), ("2/2".into(), cell(2, 1)));

        let (t, c) = ds("2").insert_dual(Symbol::row(1)).unwrap();
        assert_eq!((t.to_string(), c), ("1/2".into(), cell(2, 1)));
        assert!(ds("2").insert_dual(Symbol::col(2)).is_err());
    }

    #[test]
    fn mixed_insertion_single_starred() {
        let (t, c) = Tableau::empty(TableauKind::Hook).insert_mixed(Symbol::col(1));
        assert_eq!((t.to_string(), c), ("1*".into(), cell(1, 1)));
        // Equal starred letters stack in a column.
        let (t, _) = t.insert_mixed(Symbol::col(1));
        assert_eq!(t.to_string(), "1*/1*");
        t.validate().unwrap();
    }

    #[test]
    fn reverse_examples() {
        let (t, s) = ss("1").reverse_insert_row(cell(1, 1)).unwrap();
        assert!(t.is_empty());
        assert_eq!(s, Symbol::row(1));

        let start = ds("1/2");
        let (t, s) = start.reverse_insert_dual(cell(2, 1)).unwrap();
        assert_eq!((t.to_string(), s), ("2".into(), Symbol::row(1)));
        let (replayed, c) = t.insert_dual(s).unwrap();
        assert_eq!((replayed, c), (start, cell(2, 1)));

        assert!(matches!(
            ss("1,2/2").reverse_insert_row(cell(1, 1)),
            Err(Error::InvalidCorner { .. })
        ));
    }

    /// All tableaux of a kind with at most `max_size` cells over the given alphabet.
    fn all_tableaux(max_size: usize, letters: &[Symbol], kind: TableauKind) -> Vec<Tableau> {
        (0..=max_size)
            .flat_map(|n| partitions(n, n))
            .flat_map(|shape| enumerate_fillings(&shape, letters, kind))
            .collect()
    }

    #[test]
    fn insertion_round_trips_exhaustive() {
        let cases = [
            (TableauKind::Semistandard, InsertionRule::Row, alphabet(3, 0)),
            (TableauKind::DualSemistandard, InsertionRule::Dual, alphabet(3, 0)),
            (TableauKind::Hook, InsertionRule::Mixed, alphabet(3, 2)),
            (TableauKind::DualHook, InsertionRule::MixedDual, alphabet(3, 2)),
        ];
        for (kind, rule, letters) in cases {
            let max = if letters.len() > 3 { 4 } else { 5 };
            for t in all_tableaux(max, &letters, kind) {
                for &s in &letters {
                    let (u, c) = t.insert_with(s, rule);
                    u.validate().unwrap_or_else(|e| panic!("{t:?} <- {s}: {e}"));
                    assert_eq!(u.size(), t.size() + 1);
                    assert!(u.shape().is_corner(c));
                    let (back, s2) = u.reverse_insert(c, rule).unwrap();
                    assert_eq!((&back, s2), (&t, s));
                }
                for c in t.shape().corners() {
                    let (smaller, s) = t.reverse_insert(c, rule).unwrap();
                    smaller.validate().unwrap();
                    assert_eq!(smaller.insert_with(s, rule), (t.clone(), c));
                }
            }
        }
    }

    #[test]
    fn mixed_agrees_with_ordinary_on_unstarred() {
        for t in all_tableaux(4, &alphabet(3, 0), TableauKind::Semistandard) {
            let hook = t.clone().with_kind(TableauKind::Hook).unwrap();
            for s in alphabet(3, 0) {
                let (a, ca) = t.insert_row(s).unwrap();
                let (b, cb) = hook.insert_mixed(s);
                assert_eq!((a.rows(), ca), (b.rows(), cb));
            }
        }
    }

    #[test]
    fn transpose_examples() {
        assert!(Tableau::empty(TableauKind::Semistandard).transpose().is_empty());
        let t = ss("1,2/2");
        let tt = t.transpose();
        assert_eq!(tt.to_string(), "1,2/2");
        assert_eq!(tt.kind(), TableauKind::DualSemistandard);
        tt.validate().unwrap();
        for t in all_tableaux(6, &alphabet(2, 0), TableauKind::Semistandard) {
            t.transpose().validate().unwrap();
            assert_eq!(t.transpose().transpose(), t);
        }
        for t in all_tableaux(4, &alphabet(2, 2), TableauKind::Hook) {
            t.transpose().validate().unwrap();
        }
    }

    #[test]
    fn evacuation_properties() {
        let row = Tableau::from_indices(&[&[1, 2, 3, 4, 5]], TableauKind::Standard).unwrap();
        assert_eq!(row.evacuation().unwrap(), row);
        for n in 0..=6 {
            for shape in partitions(n, n) {
                for t in standard_tableaux(&shape) {
                    let e = t.evacuation().unwrap();
                    assert_eq!(e.shape(), shape);
                    assert_eq!(e.evacuation().unwrap(), t);
                }
            }
        }
        assert!(ss("1,1").evacuation().is_err());
    }

    #[test]
    fn evacuation_small_case() {
        let t = Tableau::from_indices(&[&[1, 2], &[3]], TableauKind::Standard).unwrap();
        assert_eq!(t.evacuation().unwrap().to_string(), "1,3/2");
    }

    #[test]
    fn validators_reject() {
        assert!(Tableau::parse("2,1", TableauKind::Semistandard).is_err());
        assert!(Tableau::parse("1/1", TableauKind::Semistandard).is_err());
        assert!(Tableau::parse("1,1", TableauKind::DualSemistandard).is_err());
        assert!(Tableau::parse("1/1", TableauKind::DualSemistandard).is_ok());
        assert!(Tableau::parse("1*,1*", TableauKind::Hook).is_err());
        assert!(Tableau::parse("1,1,1*/1*", TableauKind::Hook).is_ok());
        assert!(Tableau::parse("1/2/1*", TableauKind::Semistandard).is_err());
        assert!(Tableau::parse("1,3/2,2", TableauKind::Standard).is_err());
        assert!(Tableau::parse("1/2,3", TableauKind::Semistandard).is_err());
    }

    #[test]
    fn text_round_trip() {
        let t: Tableau = "1,2*/2".parse().unwrap();
        assert_eq!(t.kind(), TableauKind::Hook);
        assert_eq!(t.to_string(), "1,2*/2");
        let e: Tableau = "∅".parse().unwrap();
        assert_eq!(e.to_string(), "∅");
    }

    #[test]
    fn fillings_counts() {
        let shape = YoungDiagram::new(vec![2, 1]).unwrap();
        assert_eq!(standard_tableaux(&shape).len(), 2);
        assert_eq!(
            enumerate_fillings(&shape, &alphabet(2, 0), TableauKind::Semistandard).len(),
            2
        );
        assert_eq!(
            enumerate_fillings(&shape, &alphabet(3, 0), TableauKind::Semistandard).len(),
            8
        );
    }
}
