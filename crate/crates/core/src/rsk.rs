//! Whole-word RSK variants, the prefix-recovery maps `Φ_T` and `Ψ`,
//! prefix counts `c_a(T)` with their brute-force twins, plactic and coplactic
//! classes, and Greene invariants.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{
    all_words, insert_into_rows, reverse_from_rows, CellPosition, InsertionRule, Symbol, Tableau, TableauKind, Word,
    YoungDiagram,
};
use crate::young::{dim_hook, factorial};

/// Enumeration guard shared by the brute-force oracles.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// Largest word handled by the subset-based Greene invariants.
pub const GREENE_MAX_LEN: usize = 12;

/// Insertion tableau `p` and recording tableau `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl RskPair {
    pub fn shape(&self) -> YoungDiagram {
        self.p.shape()
    }
}

/// Folds `rule` over the word, returning the pair and the cell added at each step.
pub fn rsk_with_cells(w: &Word, rule: InsertionRule) -> (RskPair, Vec<CellPosition>) {
    let mut p: Vec<Vec<Symbol>> = Vec::new();
    let mut q: Vec<Vec<Symbol>> = Vec::new();
    let mut cells = Vec::with_capacity(w.len());
    for (i, &s) in w.symbols().iter().enumerate() {
        let c = insert_into_rows(&mut p, s, rule);
        if c.row > q.len() {
            q.push(Vec::new());
        }
        q[c.row - 1].push(Symbol::row(i as u32 + 1));
        cells.push(c);
    }
    let pair = RskPair {
        p: Tableau::from_rows_unchecked(p, rule.output_kind()),
        q: Tableau::from_rows_unchecked(q, TableauKind::Standard),
    };
    (pair, cells)
}

fn require_unstarred(w: &Word) -> Result<()> {
    match w.symbols().iter().find(|s| s.is_starred()) {
        Some(s) => Err(Error::Alphabet {
            symbol: s.to_string(),
            k: w.k(),
            l: 0,
        }),
        None => Ok(()),
    }
}

/// Ordinary RSK on an unstarred word.
pub fn rsk(w: &Word) -> Result<RskPair> {
    require_unstarred(w)?;
    Ok(rsk_with_cells(w, InsertionRule::Row).0)
}

/// Dual RSK on an unstarred word; `p` is dual-semistandard.
pub fn rsk_star(w: &Word) -> Result<RskPair> {
    require_unstarred(w)?;
    Ok(rsk_with_cells(w, InsertionRule::Dual).0)
}

/// Mixed RSK: ordinary insertion for unstarred letters, dual for starred ones.
pub fn rsk_mixed(w: &Word) -> RskPair {
    rsk_with_cells(w, InsertionRule::Mixed).0
}

/// Dual mixed RSK: dual insertion for unstarred letters, ordinary for starred ones.
pub fn rsk_mixed_star(w: &Word) -> RskPair {
    rsk_with_cells(w, InsertionRule::MixedDual).0
}

/// Word of column numbers of the cells added by dual RSK.
pub fn psi(u: &Word) -> Result<Word> {
    require_unstarred(u)?;
    let (_, cells) = rsk_with_cells(u, InsertionRule::Dual);
    let symbols: Vec<Symbol> = cells.iter().map(|c| Symbol::row(c.col as u32)).collect();
    let k = symbols.iter().map(|s| s.index()).max().unwrap_or(0);
    Word::new(k, 0, symbols)
}

/// Mixed `Ψ`: under dual mixed RSK, the column of the new cell for an
/// unstarred letter and the starred row number for a starred letter.
pub fn psi_mixed(u: &Word) -> Word {
    let (_, cells) = rsk_with_cells(u, InsertionRule::MixedDual);
    let symbols: Vec<Symbol> = u
        .symbols()
        .iter()
        .zip(&cells)
        .map(|(s, c)| {
            if s.is_starred() {
                Symbol::col(c.row as u32)
            } else {
                Symbol::row(c.col as u32)
            }
        })
        .collect();
    Word::new(max_index(&symbols, false), max_index(&symbols, true), symbols).expect("bounds cover every letter")
}

fn max_index(symbols: &[Symbol], starred: bool) -> u32 {
    symbols
        .iter()
        .filter(|s| s.is_starred() == starred)
        .map(|s| s.index())
        .max()
        .unwrap_or(0)
}

fn word_from(symbols: Vec<Symbol>) -> Word {
    Word::new(max_index(&symbols, false), max_index(&symbols, true), symbols).expect("bounds cover every letter")
}

/// A filling of `ν / μ` by `1..=m` decreasing along rows and columns, stored as
/// the deletion schedule `□_1, …, □_m`: removing the cells in that order
/// leaves a diagram at every step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewDecreasingFilling {
    outer: YoungDiagram,
    cells: Vec<CellPosition>,
}

impl SkewDecreasingFilling {
    pub fn new(outer: YoungDiagram, cells: Vec<CellPosition>) -> Result<Self> {
        let mut shape = outer.clone();
        for (j, &c) in cells.iter().enumerate() {
            if !shape.is_corner(c) {
                return Err(Error::Schedule(format!(
                    "cell ({},{}) labelled {} is not removable from {shape}",
                    c.row,
                    c.col,
                    j + 1
                )));
            }
            shape = shape.remove_corner(c)?;
        }
        Ok(SkewDecreasingFilling { outer, cells })
    }

    /// Builds a filling from a cell → label map with labels `1..=m`.
    pub fn from_labels(outer: YoungDiagram, labels: &BTreeMap<CellPosition, usize>) -> Result<Self> {
        let m = labels.len();
        let mut cells = vec![None; m];
        for (&c, &j) in labels {
            if j == 0 || j > m || cells[j - 1].is_some() {
                return Err(Error::Schedule(format!("labels must be 1..={m}, each once")));
            }
            cells[j - 1] = Some(c);
        }
        SkewDecreasingFilling::new(outer, cells.into_iter().map(Option::unwrap).collect())
    }

    pub fn empty(outer: YoungDiagram) -> Self {
        SkewDecreasingFilling {
            outer,
            cells: Vec::new(),
        }
    }

    pub fn outer(&self) -> &YoungDiagram {
        &self.outer
    }

    /// `□_1, …, □_m`.
    pub fn cells(&self) -> &[CellPosition] {
        &self.cells
    }

    pub fn m(&self) -> usize {
        self.cells.len()
    }

    pub fn label(&self, c: CellPosition) -> Option<usize> {
        self.cells.iter().position(|&x| x == c).map(|j| j + 1)
    }

    /// `μ = ν` minus the cells of the filling.
    pub fn inner(&self) -> YoungDiagram {
        let mut rows = self.outer.rows().to_vec();
        for c in &self.cells {
            rows[c.row - 1] -= 1;
        }
        YoungDiagram::new(rows).expect("a valid schedule leaves a diagram")
    }

    /// All of `S_m(ν)`, in lexicographic order of the schedule.
    pub fn all(outer: &YoungDiagram, m: usize) -> Vec<SkewDecreasingFilling> {
        fn go(
            shape: &YoungDiagram,
            m: usize,
            cur: &mut Vec<CellPosition>,
            outer: &YoungDiagram,
            out: &mut Vec<SkewDecreasingFilling>,
        ) {
            if cur.len() == m {
                out.push(SkewDecreasingFilling {
                    outer: outer.clone(),
                    cells: cur.clone(),
                });
                return;
            }
            for c in shape.corners() {
                let smaller = shape.remove_corner(c).expect("corner");
                cur.push(c);
                go(&smaller, m, cur, outer, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m <= outer.size() {
            go(outer, m, &mut Vec::new(), outer, &mut out);
        }
        out
    }
}

/// Rule used to undo insertions on `T^t`.
fn transposed_rule(t: &Tableau) -> Result<InsertionRule> {
    match t.kind() {
        TableauKind::Semistandard | TableauKind::Hook => Ok(t.kind().transpose().insertion_rule()),
        other => Err(Error::Kind {
            expected: "semistandard or (k,l)-semistandard",
            reason: format!("got {}", other.name()),
        }),
    }
}

/// `Φ_T(S)`: the letters recovered by undoing dual insertions on `T^t` at the
/// transposed cells `□_1^t, …, □_m^t`. For a `(k,ℓ)`-semistandard `T` the
/// dual rule applies to unstarred letters and the ordinary rule to starred ones.
pub fn phi(t: &Tableau, s: &SkewDecreasingFilling) -> Result<Word> {
    let rule = transposed_rule(t)?;
    if t.shape() != *s.outer() {
        return Err(Error::Schedule(format!(
            "filling of {} does not match tableau shape {}",
            s.outer(),
            t.shape()
        )));
    }
    let mut rows = t.transpose().rows().to_vec();
    let letters = s
        .cells()
        .iter()
        .map(|c| reverse_from_rows(&mut rows, c.transpose(), rule))
        .collect();
    Ok(word_from(letters))
}

type ScheduleVisitor<'a> = dyn FnMut(&[Symbol], &[CellPosition], &YoungDiagram) + 'a;

/// Visits every schedule of length `m` on `T` together with its `Φ` letters,
/// skipping branches whose letters leave `prefix`.
fn walk_schedules(t: &Tableau, m: usize, prefix: Option<&[Symbol]>, visit: &mut ScheduleVisitor<'_>) -> Result<()> {
    let rule = transposed_rule(t)?;
    if m > t.size() {
        return Err(Error::Schedule(format!(
            "cannot remove {m} cells from a tableau of size {}",
            t.size()
        )));
    }
    struct State<'a> {
        rule: InsertionRule,
        m: usize,
        prefix: Option<&'a [Symbol]>,
        letters: Vec<Symbol>,
        cells: Vec<CellPosition>,
    }
    fn go(st: &mut State<'_>, rows_t: &[Vec<Symbol>], shape: &YoungDiagram, visit: &mut ScheduleVisitor<'_>) {
        let j = st.letters.len();
        if j == st.m {
            visit(&st.letters, &st.cells, shape);
            return;
        }
        for c in shape.corners() {
            let mut next = rows_t.to_vec();
            let letter = reverse_from_rows(&mut next, c.transpose(), st.rule);
            if st.prefix.is_some_and(|p| p[j] != letter) {
                continue;
            }
            let smaller = shape.remove_corner(c).expect("corner");
            st.letters.push(letter);
            st.cells.push(c);
            go(st, &next, &smaller, visit);
            st.letters.pop();
            st.cells.pop();
        }
    }
    let mut st = State {
        rule,
        m,
        prefix,
        letters: Vec::with_capacity(m),
        cells: Vec::with_capacity(m),
    };
    go(&mut st, t.transpose().rows(), &t.shape(), visit);
    Ok(())
}

/// Every `S ∈ S_m(ν)` paired with `Φ_T(S)`.
pub fn phi_all(t: &Tableau, m: usize) -> Result<Vec<(Word, SkewDecreasingFilling)>> {
    let outer = t.shape();
    let mut out = Vec::new();
    walk_schedules(t, m, None, &mut |letters, cells, _| {
        out.push((
            word_from(letters.to_vec()),
            SkewDecreasingFilling {
                outer: outer.clone(),
                cells: cells.to_vec(),
            },
        ));
    })?;
    Ok(out)
}

/// `w_S`: the row containing each label `1..=m`.
pub fn word_of_filling(s: &SkewDecreasingFilling) -> Word {
    word_from(s.cells().iter().map(|c| Symbol::row(c.row as u32)).collect())
}

/// Mixed `w_S` relative to `a`: the row of `□_i` when `a_i` is unstarred, the
/// starred column of `□_i` when `a_i` is starred.
pub fn word_of_filling_mixed(s: &SkewDecreasingFilling, a: &Word) -> Word {
    let symbols = s
        .cells()
        .iter()
        .zip(a.symbols())
        .map(|(c, x)| {
            if x.is_starred() {
                Symbol::col(c.col as u32)
            } else {
                Symbol::row(c.row as u32)
            }
        })
        .collect();
    word_from(symbols)
}

/// `d(S) = dim μ` for the inner shape `μ`.
pub fn d_of_filling(s: &SkewDecreasingFilling) -> BigUint {
    dim_hook(&s.inner())
}

/// `c_a(T) = Σ_{S : Φ_T(S) = a} d(S)`.
pub fn c_a_formula(t: &Tableau, a: &Word) -> Result<BigUint> {
    let mut total = BigUint::zero();
    walk_schedules(t, a.len(), Some(a.symbols()), &mut |_, _, inner| {
        total += dim_hook(inner);
    })?;
    Ok(total)
}

fn insertion_for(t: &Tableau) -> Result<InsertionRule> {
    match t.kind() {
        TableauKind::Semistandard => Ok(InsertionRule::Row),
        TableauKind::Hook => Ok(InsertionRule::Mixed),
        other => Err(Error::Kind {
            expected: "semistandard or (k,l)-semistandard",
            reason: format!("got {}", other.name()),
        }),
    }
}

fn alphabet_bounds(t: &Tableau, extra: &[&Word]) -> (u32, u32) {
    let content = t.content();
    let k = extra
        .iter()
        .map(|w| w.k())
        .chain([max_index(&content, false)])
        .max()
        .unwrap_or(0);
    let l = extra
        .iter()
        .map(|w| w.l())
        .chain([max_index(&content, true)])
        .max()
        .unwrap_or(0);
    (k, l)
}

fn guard_power(base: u64, exp: usize) -> Result<()> {
    let total = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if total > BRUTE_FORCE_LIMIT as u128 {
        return Err(Error::Guard(format!(
            "{base}^{exp} words exceeds the enumeration limit {BRUTE_FORCE_LIMIT}"
        )));
    }
    Ok(())
}

/// Counts `y` with `P(y) = T` and prefix `a` by enumerating all completions.
pub fn c_a_bruteforce(t: &Tableau, a: &Word) -> Result<BigUint> {
    let rule = insertion_for(t)?;
    let n = t.size();
    if a.len() > n {
        return Err(Error::Schedule(format!(
            "prefix of length {} exceeds |T| = {n}",
            a.len()
        )));
    }
    let (k, l) = alphabet_bounds(t, &[a]);
    guard_power(u64::from(k + l), n)?;
    let count = all_words(k, l, n - a.len())
        .filter(|tail| {
            let y = a.concat(tail);
            rsk_with_cells(&y, rule).0.p.rows() == t.rows()
        })
        .count();
    Ok(BigUint::from(count))
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|x| *x > v[i])
        .expect("a larger element exists right of i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `{u : P(u) = T}` in lexicographic order.
pub fn plactic_class(t: &Tableau) -> Result<Vec<Word>> {
    let rule = insertion_for(t)?;
    let mut letters = t.content();
    letters.sort_unstable();
    let mut counts: BTreeMap<Symbol, usize> = BTreeMap::new();
    for &s in &letters {
        *counts.entry(s).or_default() += 1;
    }
    let arrangements = counts
        .values()
        .fold(factorial(letters.len()), |acc, &c| acc / factorial(c));
    if arrangements > BigUint::from(BRUTE_FORCE_LIMIT) {
        return Err(Error::Guard(format!(
            "{arrangements} rearrangements exceeds the enumeration limit {BRUTE_FORCE_LIMIT}"
        )));
    }
    let (k, l) = alphabet_bounds(t, &[]);
    let mut out = Vec::new();
    loop {
        let u = Word::new(k, l, letters.clone())?;
        if rsk_with_cells(&u, rule).0.p.rows() == t.rows() {
            out.push(u);
        }
        if !next_permutation(&mut letters) {
            break;
        }
    }
    Ok(out)
}

/// `{u ∈ (A_k ∪ A*_ℓ)^n : Q(u) = Q}` in lexicographic order, under mixed RSK.
pub fn coplactic_class(q: &Tableau, k: u32, l: u32) -> Result<Vec<Word>> {
    if q.kind() != TableauKind::Standard {
        return Err(Error::Kind {
            expected: "standard",
            reason: format!("got {}", q.kind().name()),
        });
    }
    let n = q.size();
    guard_power(u64::from(k + l), n)?;
    Ok(all_words(k, l, n)
        .filter(|u| rsk_mixed(u).q.rows() == q.rows())
        .collect())
}

/// `a ↗ b`: `a < b`, or `a = b` unstarred.
pub fn weakly_up(a: Symbol, b: Symbol) -> bool {
    a < b || (a == b && !a.is_starred())
}

/// `a ↘ b`: `a > b`, or `a = b` starred.
pub fn weakly_down(a: Symbol, b: Symbol) -> bool {
    a > b || (a == b && a.is_starred())
}

fn greene(
    w: &Word,
    depth: usize,
    chain: fn(Symbol, Symbol) -> bool,
    antichain: fn(Symbol, Symbol) -> bool,
) -> Result<Vec<usize>> {
    let n = w.len();
    if n > GREENE_MAX_LEN {
        return Err(Error::Guard(format!(
            "subset enumeration needs n <= {GREENE_MAX_LEN}, got {n}"
        )));
    }
    debug_assert!((0..n).all(|i| (0..n).all(|j| {
        let (a, b) = (w.symbols()[i], w.symbols()[j]);
        chain(a, b) != antichain(a, b)
    })));
    let s = w.symbols();
    let mut best = vec![0usize; depth];
    let mut longest = vec![0usize; n];
    for mask in 0u32..(1 << n) {
        // A subset splits into j chains iff its longest antichain run has length ≤ j.
        let mut width = 0;
        for i in (0..n).filter(|i| mask >> i & 1 == 1) {
            longest[i] = 1
                + (0..i)
                    .filter(|&h| mask >> h & 1 == 1 && antichain(s[h], s[i]))
                    .map(|h| longest[h])
                    .max()
                    .unwrap_or(0);
            width = width.max(longest[i]);
        }
        let size = mask.count_ones() as usize;
        for (j, b) in best.iter_mut().enumerate() {
            if width <= j + 1 {
                *b = (*b).max(size);
            }
        }
    }
    Ok(best)
}

/// Largest total size of `j` disjoint `↗`-subsequences, `j = 1..=depth`.
pub fn greene_invariants(w: &Word, depth: usize) -> Result<Vec<usize>> {
    greene(w, depth, weakly_up, weakly_down)
}

/// Largest total size of `j` disjoint `↘`-subsequences, `j = 1..=depth`.
pub fn greene_invariants_decreasing(w: &Word, depth: usize) -> Result<Vec<usize>> {
    greene(w, depth, weakly_down, weakly_up)
}
