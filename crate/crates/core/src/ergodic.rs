//! Bernoulli words, incremental youngization, the 21-bracketing of binary
//! words, exact tail estimates `μ_x^(n)(C_a)` and the experiments comparing
//! them with Bernoulli and Thoma cylinder masses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{children, maximal_tableau};
use crate::rsk::{phi_all, rsk, rsk_mixed};
use crate::tableau::{
    all_words, alphabet, CellPosition, InsertionRule, Symbol, Tableau, TableauKind, Word, YoungDiagram,
};
use crate::young::{
    count_ssyt, dim_hook, dim_ratio, dim_ratio_asymp, dim_ratio_shapes, rational_to_f64, skew_dim, thoma_cylinder,
    ThomaParams,
};

/// Generator identity recorded in every report.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng::seed_from_u64 + WeightedIndex<f64>";

/// Upper bound on the deletion schedules visited by one tail estimate.
pub const MAX_SCHEDULES: u64 = 1_000_000;

/// An exact rational that reads from JSON numbers (by their decimal text) or
/// strings such as `"7/10"`, and writes as a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prob(pub BigRational);

/// Parses `"a/b"`, `"0.25"`, `"3"` or `"1e-3"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int.starts_with('-');
    let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut q = BigRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exp - frac.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    q *= num_traits::pow(if shift < 0 { ten.recip() } else { ten }, shift.unsigned_abs() as usize);
    Ok(if negative { -q } else { q })
}

impl FromStr for Prob {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Prob)
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Prob {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Prob {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        let text = match Raw::deserialize(deserializer)? {
            Raw::Number(x) => x.to_string(),
            Raw::Text(s) => s,
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// I.i.d. letters: `i` with probability `p_i`, `j*` with probability `q_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernoulliSpec {
    k: u32,
    l: u32,
    p: Vec<Prob>,
    q: Vec<Prob>,
    seed: u64,
}

impl BernoulliSpec {
    pub fn new(p: Vec<BigRational>, q: Vec<BigRational>, seed: u64) -> Result<Self> {
        if p.iter().chain(&q).any(|x| x.is_negative()) {
            return Err(Error::config("p/q", "probabilities must be nonnegative"));
        }
        let total: BigRational = p.iter().chain(&q).sum();
        if !total.is_one() {
            return Err(Error::config("p/q", format!("probabilities sum to {total}, not 1")));
        }
        Ok(BernoulliSpec {
            k: p.len() as u32,
            l: q.len() as u32,
            p: p.into_iter().map(Prob).collect(),
            q: q.into_iter().map(Prob).collect(),
            seed,
        })
    }

    pub fn uniform(k: u32, seed: u64) -> Result<Self> {
        let share = BigRational::new(BigInt::one(), BigInt::from(k));
        BernoulliSpec::new(vec![share; k as usize], vec![], seed)
    }

    pub fn from_floats(p: &[f64], q: &[f64], seed: u64) -> Result<Self> {
        let conv = |v: &[f64]| {
            v.iter()
                .map(|x| parse_rational(&x.to_string()))
                .collect::<Result<Vec<_>>>()
        };
        BernoulliSpec::new(conv(p)?, conv(q)?, seed)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        BernoulliSpec { seed, ..self.clone() }
    }

    pub fn p(&self) -> Vec<BigRational> {
        self.p.iter().map(|x| x.0.clone()).collect()
    }

    pub fn q(&self) -> Vec<BigRational> {
        self.q.iter().map(|x| x.0.clone()).collect()
    }

    pub fn is_mixed(&self) -> bool {
        self.l > 0
    }

    /// Probabilities in alphabet order `1, …, k, ℓ*, …, 1*`.
    fn weights(&self) -> Vec<f64> {
        let mut w: Vec<f64> = self.p.iter().map(|x| rational_to_f64(&x.0)).collect();
        w.extend(self.q.iter().rev().map(|x| rational_to_f64(&x.0)));
        w
    }

    /// Thoma parameters: the frequencies sorted into nonincreasing order.
    pub fn thoma_params(&self) -> ThomaParams {
        ThomaParams::from_frequencies(self.p(), self.q()).expect("validated frequencies")
    }

    /// `m_p(C_a) = Π p_i^{m_i} Π q_j^{m_{j*}}`.
    pub fn cylinder_mass(&self, a: &Word) -> BigRational {
        a.symbols()
            .iter()
            .map(|s| {
                let i = s.index() as usize - 1;
                if s.is_starred() {
                    self.q[i].0.clone()
                } else {
                    self.p[i].0.clone()
                }
            })
            .fold(BigRational::one(), |acc, x| acc * x)
    }
}

/// Draws `n` i.i.d. letters; the same spec always yields the same word.
pub fn sample_word(spec: &BernoulliSpec, n: usize) -> Word {
    let letters = alphabet(spec.k, spec.l);
    let dist = WeightedIndex::new(spec.weights()).expect("weights are nonnegative with positive total");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let symbols = (0..n).map(|_| letters[dist.sample(&mut rng)]).collect();
    Word::new(spec.k, spec.l, symbols).expect("sampled letters lie in the alphabet")
}

/// Incremental insertion tableau with runs of identical rows stored once.
///
/// A letter that meets an entry equal to itself leaves that row unchanged and
/// continues with the same letter, so it crosses a whole run in one step.
#[derive(Clone, Debug)]
pub struct Youngizer {
    rule: InsertionRule,
    kind: TableauKind,
    blocks: Vec<(Vec<Symbol>, usize)>,
    rows: Vec<usize>,
    n: usize,
}

impl Youngizer {
    pub fn new(mixed: bool) -> Self {
        let (rule, kind) = if mixed {
            (InsertionRule::Mixed, TableauKind::Hook)
        } else {
            (InsertionRule::Row, TableauKind::Semistandard)
        };
        Youngizer {
            rule,
            kind,
            blocks: Vec::new(),
            rows: Vec::new(),
            n: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Inserts `s`, returning the new cell.
    pub fn push(&mut self, s: Symbol) -> CellPosition {
        self.n += 1;
        let cell = self.insert(s);
        if cell.row > self.rows.len() {
            self.rows.push(0);
        }
        self.rows[cell.row - 1] += 1;
        cell
    }

    fn merge_with_previous(&mut self, b: usize) -> usize {
        if b > 0 && self.blocks[b - 1].0 == self.blocks[b].0 {
            let (_, c) = self.blocks.remove(b);
            self.blocks[b - 1].1 += c;
            b - 1
        } else {
            b
        }
    }

    fn insert(&mut self, s: Symbol) -> CellPosition {
        let mut letter = s;
        let mut first_row = 1;
        let mut b = 0;
        while b < self.blocks.len() {
            let (row, count) = &mut self.blocks[b];
            let pos = self.rule.bump_position(row, letter);
            if pos == row.len() {
                let col = pos + 1;
                if *count == 1 {
                    row.push(letter);
                } else {
                    *count -= 1;
                    let mut grown = row.clone();
                    grown.push(letter);
                    self.blocks.insert(b, (grown, 1));
                }
                self.merge_with_previous(b);
                return CellPosition::new(first_row, col);
            }
            if row[pos] == letter {
                first_row += *count;
                b += 1;
                continue;
            }
            if *count == 1 {
                letter = std::mem::replace(&mut row[pos], letter);
                b = self.merge_with_previous(b) + 1;
            } else {
                *count -= 1;
                let mut changed = row.clone();
                letter = std::mem::replace(&mut changed[pos], letter);
                self.blocks.insert(b, (changed, 1));
                b = self.merge_with_previous(b) + 1;
            }
            first_row += 1;
        }
        match self.blocks.last_mut() {
            Some((row, count)) if row.len() == 1 && row[0] == letter => *count += 1,
            _ => self.blocks.push((vec![letter], 1)),
        }
        CellPosition::new(first_row, 1)
    }

    /// Row lengths `λ_1 ≥ λ_2 ≥ …`.
    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.clone()).expect("insertion keeps a diagram")
    }

    /// Number of stored row runs.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The insertion tableau `P`.
    pub fn tableau(&self) -> Tableau {
        let rows = self
            .blocks
            .iter()
            .flat_map(|(row, c)| std::iter::repeat_n(row.clone(), *c))
            .collect();
        Tableau::from_rows_unchecked(rows, self.kind)
    }
}

/// Row lengths at a logged step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub n: usize,
    pub rows: Vec<usize>,
}

/// Letter counts, final row and column lengths, the row of the cell added at
/// each step (which determines `Q`) and periodic shape snapshots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectoryStats {
    pub n: usize,
    pub counts: Vec<(Symbol, usize)>,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub growth: Vec<u32>,
    pub snapshots: Vec<Snapshot>,
}

impl TrajectoryStats {
    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.clone()).expect("row lengths form a diagram")
    }

    pub fn normalized_rows(&self) -> Vec<f64> {
        self.rows.iter().map(|&r| r as f64 / self.n as f64).collect()
    }

    pub fn normalized_cols(&self) -> Vec<f64> {
        self.cols.iter().map(|&c| c as f64 / self.n as f64).collect()
    }

    /// `Q`: step `i` sits at the end of row `growth[i-1]`.
    pub fn recording_tableau(&self) -> Tableau {
        let mut rows: Vec<Vec<Symbol>> = Vec::new();
        for (i, &r) in self.growth.iter().enumerate() {
            let r = r as usize;
            if r > rows.len() {
                rows.push(Vec::new());
            }
            rows[r - 1].push(Symbol::row(i as u32 + 1));
        }
        Tableau::from_rows_unchecked(rows, TableauKind::Standard)
    }
}

/// Runs the insertion fold over `w`, one insertion per letter.
pub fn youngize(w: &Word, log_every: Option<usize>) -> TrajectoryStats {
    youngize_with_tableau(w, log_every).0
}

/// As [`youngize`], also returning the final insertion tableau.
pub fn youngize_with_tableau(w: &Word, log_every: Option<usize>) -> (TrajectoryStats, Tableau) {
    let mut y = Youngizer::new(w.l() > 0);
    let letters = alphabet(w.k(), w.l());
    let mut counts = vec![0usize; letters.len()];
    let mut growth = Vec::with_capacity(w.len());
    let mut snapshots = Vec::new();
    for (i, &s) in w.symbols().iter().enumerate() {
        let cell = y.push(s);
        growth.push(cell.row as u32);
        counts[letters.binary_search(&s).expect("letter in alphabet")] += 1;
        if log_every.is_some_and(|every| every > 0 && (i + 1) % every == 0) {
            snapshots.push(Snapshot {
                n: i + 1,
                rows: y.row_lengths().to_vec(),
            });
        }
    }
    let shape = y.shape();
    let stats = TrajectoryStats {
        n: w.len(),
        counts: letters.into_iter().zip(counts).collect(),
        rows: shape.rows().to_vec(),
        cols: shape.col_lengths(),
        growth,
        snapshots,
    };
    (stats, y.tableau())
}

/// Coordinates of a word over `{1, 2}` after repeatedly bracketing `21`
/// factors; positions are 1-based and pairs are `(position of 2, position of 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreePaired {
    pub free: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

pub fn free_paired(w: &Word) -> Result<FreePaired> {
    let mut open: Vec<usize> = Vec::new();
    let mut free = Vec::new();
    let mut pairs = Vec::new();
    for (i, s) in w.symbols().iter().enumerate() {
        match (s.is_starred(), s.index()) {
            (false, 2) => open.push(i + 1),
            (false, 1) => match open.pop() {
                Some(j) => pairs.push((j, i + 1)),
                None => free.push(i + 1),
            },
            _ => {
                return Err(Error::Alphabet {
                    symbol: s.to_string(),
                    k: 2,
                    l: 0,
                })
            }
        }
    }
    free.extend(open);
    free.sort_unstable();
    pairs.sort_unstable();
    Ok(FreePaired { free, pairs })
}

/// Exact `μ_x^(n)(C_a) = c_a(T_n) / dim Λ_n` for every `a` of length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailEstimate {
    pub n: usize,
    pub m: usize,
    pub shape: YoungDiagram,
    /// Every word of length `m` over the alphabet, lexicographically.
    pub estimates: Vec<(Word, BigRational)>,
}

impl TailEstimate {
    pub fn get(&self, a: &Word) -> BigRational {
        self.estimates
            .iter()
            .find(|(w, _)| w.symbols() == a.symbols())
            .map(|(_, x)| x.clone())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigRational {
        self.estimates.iter().map(|(_, x)| x).sum()
    }

    /// `Σ_{a : sh(a) = λ} μ_x^(n)(C_a)` for each `λ ⊢ m` that occurs.
    pub fn shape_sums(&self) -> BTreeMap<YoungDiagram, BigRational> {
        let mut sums: BTreeMap<YoungDiagram, BigRational> = BTreeMap::new();
        for (a, x) in self.estimates.iter().filter(|(_, x)| !x.is_zero()) {
            *sums.entry(rsk_mixed(a).shape()).or_default() += x;
        }
        sums
    }
}

/// `Σ_{a : sh(a) = λ} μ_x^(n)(C_a)`.
pub fn shape_cylinder_sum(estimate: &TailEstimate, lambda: &YoungDiagram) -> BigRational {
    estimate.shape_sums().remove(lambda).unwrap_or_default()
}

/// Tail estimate on the insertion tableau `t` over `A_k ∪ A*_ℓ`.
pub fn tail_estimate_tableau(t: &Tableau, k: u32, l: u32, m: usize) -> Result<TailEstimate> {
    let shape = t.shape();
    let corners = (shape.corners().len() as u64).max(1);
    if corners.checked_pow(m as u32).is_none_or(|c| c > MAX_SCHEDULES) {
        return Err(Error::Guard(format!(
            "{corners}^{m} deletion schedules exceeds the limit {MAX_SCHEDULES}"
        )));
    }
    let mut by_word: BTreeMap<Vec<Symbol>, BigRational> = BTreeMap::new();
    for (a, s) in phi_all(t, m)? {
        *by_word.entry(a.symbols().to_vec()).or_default() += dim_ratio_shapes(&shape, &s.inner())?;
    }
    let estimates = all_words(k, l, m)
        .map(|a| {
            let x = by_word.remove(a.symbols()).unwrap_or_default();
            (a, x)
        })
        .collect();
    if let Some(stray) = by_word.keys().next() {
        return Err(Error::Alphabet {
            symbol: format!("{stray:?}"),
            k,
            l,
        });
    }
    Ok(TailEstimate {
        n: t.size(),
        m,
        shape,
        estimates,
    })
}

/// Tail estimate for the prefix of length `n` of `w`.
pub fn tail_estimate(w: &Word, n: usize, m: usize) -> Result<TailEstimate> {
    if m > n || n > w.len() {
        return Err(Error::config(
            "n/m",
            format!("need m <= n <= |w|, got m={m}, n={n}, |w|={}", w.len()),
        ));
    }
    let (_, t) = youngize_with_tableau(&w.prefix(n), None);
    tail_estimate_tableau(&t, w.k(), w.l(), m)
}

/// `Σ_{w : sh(w) = λ} dim Λ^w / dim Λ`, where `Λ^w` deletes one cell from rows
/// `w_1, w_2, …` in turn and words that run out of corners are dropped.
pub fn successive_deletion_masses(lambda: &YoungDiagram, m: usize) -> Result<BTreeMap<YoungDiagram, BigRational>> {
    let rows = lambda.num_rows() as u32;
    let mut out: BTreeMap<YoungDiagram, BigRational> = BTreeMap::new();
    for w in all_words(rows, 0, m) {
        let mut shape = lambda.clone();
        let mut valid = true;
        for s in w.symbols() {
            match shape.remove_from_row(s.index() as usize) {
                Some(smaller) => shape = smaller,
                None => {
                    valid = false;
                    break;
                }
            }
        }
        if valid {
            *out.entry(rsk(&w)?.shape()).or_default() += dim_ratio_shapes(lambda, &shape)?;
        }
    }
    Ok(out)
}

/// Measured against expected densities for one seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensitySeed {
    pub seed: u64,
    pub row_norm: Vec<f64>,
    pub col_norm: Vec<f64>,
    pub row_deviation: f64,
    pub col_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub n: usize,
    pub expected_rows: Vec<f64>,
    pub expected_cols: Vec<f64>,
    pub seeds: Vec<DensitySeed>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn sorted_desc(v: Vec<BigRational>) -> Vec<f64> {
    let mut v: Vec<f64> = v.iter().map(rational_to_f64).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn max_abs_deviation(measured: &[f64], expected: &[f64]) -> f64 {
    expected
        .iter()
        .enumerate()
        .map(|(j, e)| (measured.get(j).copied().unwrap_or(0.0) - e).abs())
        .fold(0.0, f64::max)
}

/// `max_j |λ_j/n - p̂_j|` and, for mixed specs, `max_j |λ'_j/n - q̂_j|` per seed.
pub fn check_density_theorem(
    spec: &BernoulliSpec,
    n: usize,
    seeds: &[u64],
    tolerance: f64,
    words: &dyn WordSource,
) -> DensityReport {
    let expected_rows = sorted_desc(spec.p());
    let expected_cols = sorted_desc(spec.q());
    let per_seed: Vec<DensitySeed> = seeds
        .par_iter()
        .map(|&seed| {
            let w = words.word(&spec.with_seed(seed), n);
            let stats = youngize(&w, None);
            let row_norm: Vec<f64> = stats.normalized_rows().into_iter().take(expected_rows.len()).collect();
            let col_norm: Vec<f64> = stats.normalized_cols().into_iter().take(expected_cols.len()).collect();
            DensitySeed {
                seed,
                row_deviation: max_abs_deviation(&row_norm, &expected_rows),
                col_deviation: max_abs_deviation(&col_norm, &expected_cols),
                row_norm,
                col_norm,
            }
        })
        .collect();
    let max_deviation = per_seed
        .iter()
        .map(|s| s.row_deviation.max(s.col_deviation))
        .fold(0.0, f64::max);
    DensityReport {
        n,
        expected_rows,
        expected_cols,
        seeds: per_seed,
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
    }
}

/// One cylinder estimate with its Bernoulli reference.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordEstimate {
    pub word: String,
    pub exact: String,
    pub estimate: f64,
    pub bernoulli: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapeSum {
    pub lambda: YoungDiagram,
    pub exact: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedEstimate {
    pub seed: u64,
    pub shape: YoungDiagram,
    pub words: Vec<WordEstimate>,
    pub shape_sums: Vec<ShapeSum>,
}

/// Seed-averaged shape sum against `dim λ · s̃_λ(α, β)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapeComparison {
    pub lambda: YoungDiagram,
    pub mean_estimate: f64,
    pub target: f64,
    pub target_exact: String,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThomaReport {
    pub n: usize,
    pub m: usize,
    pub seeds: Vec<SeedEstimate>,
    pub shapes: Vec<ShapeComparison>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn seed_estimate(spec: &BernoulliSpec, seed: u64, w: &Word, m: usize) -> Result<(SeedEstimate, TailEstimate)> {
    let (_, t) = youngize_with_tableau(w, None);
    let est = tail_estimate_tableau(&t, spec.k(), spec.l(), m)?;
    let words = est
        .estimates
        .iter()
        .map(|(a, x)| WordEstimate {
            word: a.to_string(),
            exact: x.to_string(),
            estimate: rational_to_f64(x),
            bernoulli: rational_to_f64(&spec.cylinder_mass(a)),
        })
        .collect();
    let shape_sums = est
        .shape_sums()
        .into_iter()
        .map(|(lambda, x)| ShapeSum {
            lambda,
            exact: x.to_string(),
            value: rational_to_f64(&x),
        })
        .collect();
    Ok((
        SeedEstimate {
            seed,
            shape: est.shape.clone(),
            words,
            shape_sums,
        },
        est,
    ))
}

/// Thoma cylinder masses `dim λ · s̃_λ(α, β)` for every `λ ⊢ m` in the hook.
pub fn thoma_targets(params: &ThomaParams, m: usize) -> BTreeMap<YoungDiagram, BigRational> {
    let (k, l) = (params.alpha().len(), params.beta().len());
    crate::tableau::hook_partitions(m, k, l)
        .into_iter()
        .map(|lambda| {
            let target = thoma_cylinder(&lambda, params);
            (lambda, target)
        })
        .collect()
}

fn compare_shapes(
    seeds: &[SeedEstimate],
    targets: &BTreeMap<YoungDiagram, BigRational>,
) -> (Vec<ShapeComparison>, f64) {
    let mut shapes = Vec::new();
    let mut max_deviation: f64 = 0.0;
    for (lambda, target) in targets {
        let mean = seeds
            .iter()
            .map(|s| {
                s.shape_sums
                    .iter()
                    .find(|x| x.lambda == *lambda)
                    .map_or(0.0, |x| x.value)
            })
            .sum::<f64>()
            / seeds.len().max(1) as f64;
        let t = rational_to_f64(target);
        let deviation = (mean - t).abs();
        max_deviation = max_deviation.max(deviation);
        shapes.push(ShapeComparison {
            lambda: lambda.clone(),
            mean_estimate: mean,
            target: t,
            target_exact: target.to_string(),
            deviation,
        });
    }
    (shapes, max_deviation)
}

/// Seed-averaged `Σ_{sh(a)=λ} μ_x^(n)(C_a)` against the Thoma cylinder masses.
pub fn check_thoma(
    spec: &BernoulliSpec,
    n: usize,
    m: usize,
    seeds: &[u64],
    tolerance: f64,
    words: &dyn WordSource,
) -> Result<ThomaReport> {
    let targets = thoma_targets(&spec.thoma_params(), m);
    check_against(spec, n, m, seeds, tolerance, words, &targets)
}

fn check_against(
    spec: &BernoulliSpec,
    n: usize,
    m: usize,
    seeds: &[u64],
    tolerance: f64,
    words: &dyn WordSource,
    targets: &BTreeMap<YoungDiagram, BigRational>,
) -> Result<ThomaReport> {
    let per_seed = seeds
        .par_iter()
        .map(|&seed| {
            let w = words.word(&spec.with_seed(seed), n);
            seed_estimate(spec, seed, &w, m).map(|(s, _)| s)
        })
        .collect::<Result<Vec<_>>>()?;
    let (shapes, max_deviation) = compare_shapes(&per_seed, targets);
    Ok(ThomaReport {
        n,
        m,
        seeds: per_seed,
        shapes,
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
    })
}

/// Uniform densities: targets `dim λ · d_λ(k) / k^m`, after checking they equal
/// `dim λ · s_λ(1/k, …, 1/k)` exactly.
pub fn check_equal_density_case(
    k: u32,
    n: usize,
    m: usize,
    seeds: &[u64],
    tolerance: f64,
    words: &dyn WordSource,
) -> Result<(ThomaReport, bool)> {
    let spec = BernoulliSpec::uniform(k, 0)?;
    let km = BigInt::from(k).pow(m as u32);
    let targets: BTreeMap<YoungDiagram, BigRational> = crate::tableau::partitions(m, k as usize)
        .into_iter()
        .map(|lambda| {
            let num = BigInt::from(dim_hook(&lambda) * count_ssyt(&lambda, k as usize));
            (lambda, BigRational::new(num, km.clone()))
        })
        .collect();
    let identity = targets == thoma_targets(&spec.thoma_params(), m);
    let report = check_against(&spec, n, m, seeds, tolerance, words, &targets)?;
    Ok((report, identity))
}

/// Exact `dim Λ^a / dim Λ` against the asymptotic product.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRow {
    pub seed: u64,
    pub word: String,
    pub exact: f64,
    /// Product with `p̂_i = λ_i / n`.
    pub asymp_empirical: f64,
    /// Product with the sampling probabilities.
    pub asymp_true: f64,
    pub rel_err_empirical: f64,
    pub rel_err_true: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticsReport {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<AsymptoticRow>,
    pub max_rel_err_empirical: f64,
    pub max_rel_err_true: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn rel_err(exact: f64, approx: f64) -> f64 {
    if exact == 0.0 {
        if approx == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (approx / exact - 1.0).abs()
    }
}

/// Sweeps every `a` with `|a| ≤ m` at the final shape of each seed's word.
pub fn check_asymptotics(
    spec: &BernoulliSpec,
    n: usize,
    m: usize,
    seeds: &[u64],
    tolerance: f64,
    words: &dyn WordSource,
) -> Result<AsymptoticsReport> {
    if spec.is_mixed() {
        return Err(Error::config(
            "mode",
            "the row-deletion asymptotics need an unstarred alphabet",
        ));
    }
    let p_true: Vec<f64> = spec.p().iter().map(rational_to_f64).collect();
    let per_seed = seeds
        .par_iter()
        .map(|&seed| {
            let w = words.word(&spec.with_seed(seed), n);
            let lambda = youngize(&w, None).shape();
            let p_hat: Vec<f64> = (1..=spec.k() as usize)
                .map(|i| lambda.row(i) as f64 / n as f64)
                .collect();
            let mut sorted_true = p_true.clone();
            sorted_true.sort_by(|a, b| b.total_cmp(a));
            let mut rows = Vec::new();
            for len in 1..=m {
                for a in all_words(spec.k(), 0, len) {
                    let exact = rational_to_f64(&dim_ratio(&lambda, &a)?);
                    let asymp_empirical = dim_ratio_asymp(&lambda, &a, &p_hat)?;
                    let asymp_true = dim_ratio_asymp(&lambda, &a, &sorted_true)?;
                    rows.push(AsymptoticRow {
                        seed,
                        word: a.to_string(),
                        exact,
                        asymp_empirical,
                        asymp_true,
                        rel_err_empirical: rel_err(exact, asymp_empirical),
                        rel_err_true: rel_err(exact, asymp_true),
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<AsymptoticRow> = per_seed.into_iter().flatten().collect();
    let max_rel_err_empirical = rows.iter().map(|r| r.rel_err_empirical).fold(0.0, f64::max);
    let max_rel_err_true = rows.iter().map(|r| r.rel_err_true).fold(0.0, f64::max);
    Ok(AsymptoticsReport {
        n,
        m,
        rows,
        max_rel_err_empirical,
        max_rel_err_true,
        tolerance,
        pass: max_rel_err_empirical <= tolerance,
    })
}

/// Tail estimates along a path of maximal tableaux.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegenerateReport {
    pub k: u32,
    pub n: usize,
    pub m: usize,
    pub shape: YoungDiagram,
    pub maximal_word_prefix: String,
    /// `μ^(n)(C_a)` for the cylinders that some path through maximal tableaux starts with.
    pub supported: Vec<WordEstimate>,
    pub zero_outside_support: bool,
    pub matches_uniform_paths: bool,
    pub first_letter_one_mass: String,
    pub bernoulli_all_positive: bool,
    pub pass: bool,
}

/// Whether every prefix of `a` inserts to the maximal tableau of its shape.
pub fn is_maximal_path_word(a: &Word, k: u32) -> bool {
    let mut t = Tableau::empty(TableauKind::Semistandard);
    for &s in a.symbols() {
        let Some((_, next)) = children(&t, k, 0).into_iter().find(|(x, _)| *x == s) else {
            return false;
        };
        t = next;
        match maximal_tableau(&t.shape(), k, 0) {
            Ok(maxi) if maxi.rows() == t.rows() => {}
            _ => return false,
        }
    }
    true
}

/// Lifts the shape path of a Bernoulli word to maximal tableaux and compares
/// the tail estimate with the uniform path measure `dim(sh(a), Λ) / dim Λ`.
pub fn degenerate_measure_demo(spec: &BernoulliSpec, n: usize, m: usize) -> Result<DegenerateReport> {
    if spec.is_mixed() {
        return Err(Error::config(
            "mode",
            "maximal-tableau paths are defined for unstarred alphabets",
        ));
    }
    let k = spec.k();
    let source = sample_word(spec, n);
    let stats = youngize(&source, None);
    let mut t = Tableau::empty(TableauKind::Semistandard);
    let mut labels = Vec::with_capacity(n);
    let mut rows: Vec<usize> = Vec::new();
    for &r in &stats.growth {
        let r = r as usize;
        if r > rows.len() {
            rows.push(0);
        }
        rows[r - 1] += 1;
        let target = maximal_tableau(&YoungDiagram::new(rows.clone())?, k, 0)?;
        let (label, next) = children(&t, k, 0)
            .into_iter()
            .find(|(_, c)| c.rows() == target.rows())
            .ok_or_else(|| Error::Path(format!("no edge into {target}")))?;
        labels.push(label);
        t = next;
    }
    let x = Word::new(k, 0, labels)?;
    let shape = t.shape();
    let est = tail_estimate_tableau(&t, k, 0, m)?;
    let dim_total = dim_hook(&shape);
    let mut zero_outside_support = true;
    let mut matches_uniform_paths = true;
    let mut supported = Vec::new();
    for (a, value) in &est.estimates {
        if is_maximal_path_word(a, k) {
            let inner = rsk(a)?.shape();
            let uniform = BigRational::new(BigInt::from(skew_dim(&inner, &shape)?), BigInt::from(dim_total.clone()));
            matches_uniform_paths &= *value == uniform;
            supported.push(WordEstimate {
                word: a.to_string(),
                exact: value.to_string(),
                estimate: rational_to_f64(value),
                bernoulli: rational_to_f64(&uniform),
            });
        } else {
            zero_outside_support &= value.is_zero();
        }
    }
    let first_one: BigRational = est
        .estimates
        .iter()
        .filter(|(a, _)| a.symbols().first() == Some(&Symbol::row(1)))
        .map(|(_, x)| x)
        .sum();
    let bernoulli = tail_estimate(&source, n, m.min(2))?;
    let bernoulli_all_positive = bernoulli.estimates.iter().all(|(_, x)| x.is_positive());
    let pass =
        zero_outside_support && matches_uniform_paths && (k < 2 || first_one.is_zero()) && bernoulli_all_positive;
    Ok(DegenerateReport {
        k,
        n,
        m,
        shape,
        maximal_word_prefix: x.prefix(x.len().min(40)).to_string(),
        supported,
        zero_outside_support,
        matches_uniform_paths,
        first_letter_one_mass: first_one.to_string(),
        bernoulli_all_positive,
        pass,
    })
}

/// Normalized first-row length along a word whose letter frequencies
/// alternate between `p` and its reversal on blocks of doubling length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillationReport {
    pub n: usize,
    pub snapshots: Vec<(usize, Vec<f64>)>,
    pub spread: f64,
}

pub fn oscillation_demo(spec: &BernoulliSpec, n: usize, log_every: usize) -> Result<OscillationReport> {
    if spec.is_mixed() {
        return Err(Error::config("mode", "oscillation demo uses an unstarred alphabet"));
    }
    let mut reversed = spec.p();
    reversed.reverse();
    let flipped = BernoulliSpec::new(reversed, vec![], spec.seed().wrapping_add(1))?;
    let forward = sample_word(spec, n);
    let backward = sample_word(&flipped, n);
    let mut symbols = Vec::with_capacity(n);
    let mut block = 1usize;
    let mut use_forward = true;
    while symbols.len() < n {
        let end = (symbols.len() + block).min(n);
        let src = if use_forward { &forward } else { &backward };
        symbols.extend_from_slice(&src.symbols()[symbols.len()..end]);
        block *= 2;
        use_forward = !use_forward;
    }
    let w = Word::new(spec.k(), 0, symbols)?;
    let stats = youngize(&w, Some(log_every.max(1)));
    let snapshots: Vec<(usize, Vec<f64>)> = stats
        .snapshots
        .iter()
        .map(|s| (s.n, s.rows.iter().map(|&r| r as f64 / s.n as f64).collect()))
        .collect();
    let tail: Vec<f64> = snapshots
        .iter()
        .skip(snapshots.len() / 2)
        .map(|(_, r)| r.first().copied().unwrap_or(0.0))
        .collect();
    let spread = tail.iter().copied().fold(f64::MIN, f64::max) - tail.iter().copied().fold(f64::MAX, f64::min);
    Ok(OscillationReport {
        n,
        snapshots,
        spread: if tail.is_empty() { 0.0 } else { spread },
    })
}

/// Where experiment words come from: fresh samples or a stored log.
pub trait WordSource: Sync {
    fn word(&self, spec: &BernoulliSpec, n: usize) -> Word;
}

/// Samples with [`sample_word`].
pub struct Sampler;

impl WordSource for Sampler {
    fn word(&self, spec: &BernoulliSpec, n: usize) -> Word {
        sample_word(spec, n)
    }
}

/// One stored word per seed, replayed by `--resume`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordLogEntry {
    pub seed: u64,
    pub n: usize,
    pub algorithm: String,
    pub word: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordLog {
    entries: BTreeMap<u64, WordLogEntry>,
}

impl WordLog {
    pub fn record(spec: &BernoulliSpec, seeds: &[u64], n: usize) -> Self {
        let entries = seeds
            .par_iter()
            .map(|&seed| {
                let w = sample_word(&spec.with_seed(seed), n);
                (
                    seed,
                    WordLogEntry {
                        seed,
                        n,
                        algorithm: RNG_ALGORITHM.to_string(),
                        word: w.to_string(),
                    },
                )
            })
            .collect();
        WordLog { entries }
    }

    /// JSON lines, one entry per seed in seed order.
    pub fn to_jsonl(&self) -> String {
        self.entries
            .values()
            .map(|e| serde_json::to_string(e).expect("entry serializes") + "\n")
            .collect()
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let e: WordLogEntry =
                serde_json::from_str(line).map_err(|err| Error::Parse(format!("word log line {}: {err}", i + 1)))?;
            entries.insert(e.seed, e);
        }
        Ok(WordLog { entries })
    }

    pub fn seeds(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    /// Checks the log covers `seeds` with words of length `n`.
    pub fn check(&self, seeds: &[u64], n: usize) -> Result<()> {
        for seed in seeds {
            match self.entries.get(seed) {
                None => return Err(Error::config("seeds", format!("word log has no entry for seed {seed}"))),
                Some(e) if e.n != n => {
                    return Err(Error::config(
                        "n",
                        format!("word log has n = {} for seed {seed}, config asks {n}", e.n),
                    ))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

impl WordSource for WordLog {
    fn word(&self, spec: &BernoulliSpec, n: usize) -> Word {
        let entry = &self.entries[&spec.seed()];
        let w = Word::parse_with_bounds(&entry.word, spec.k(), spec.l()).expect("logged word parses");
        assert_eq!(w.len(), n, "logged word for seed {} has the wrong length", spec.seed());
        w
    }
}

/// Which experiment a config runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    #[default]
    Thoma,
    Density,
    Asymptotics,
    Degenerate,
    Oscillation,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Pure,
    Mixed,
    Uniform,
}

/// Experiment configuration as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub experiment: ExperimentKind,
    pub k: u32,
    #[serde(default)]
    pub l: u32,
    #[serde(default)]
    pub p: Vec<Prob>,
    #[serde(default)]
    pub q: Vec<Prob>,
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub log_every: Option<usize>,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| Error::config("config", e.to_string()))?;
        config.spec()?;
        Ok(config)
    }

    pub fn default_tolerance(&self) -> f64 {
        match self.experiment {
            ExperimentKind::Thoma | ExperimentKind::Degenerate | ExperimentKind::Oscillation => 0.02,
            ExperimentKind::Density => 0.015,
            ExperimentKind::Asymptotics => 0.05,
        }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or_else(|| self.default_tolerance())
    }

    /// Validates the fields and builds the sampling spec for the first seed.
    pub fn spec(&self) -> Result<BernoulliSpec> {
        let seed = *self
            .seeds
            .first()
            .ok_or_else(|| Error::config("seeds", "at least one seed is required"))?;
        if self.k == 0 && self.l == 0 {
            return Err(Error::config("k", "alphabet is empty"));
        }
        if self.n == 0 {
            return Err(Error::config("n", "must be positive"));
        }
        if self.m > self.n {
            return Err(Error::config("m", format!("m = {} exceeds n = {}", self.m, self.n)));
        }
        let p: Vec<BigRational> = match (self.mode, self.p.is_empty()) {
            (Mode::Uniform, true) => vec![BigRational::new(BigInt::one(), BigInt::from(self.k)); self.k as usize],
            _ => self.p.iter().map(|x| x.0.clone()).collect(),
        };
        if p.len() != self.k as usize {
            return Err(Error::config(
                "p",
                format!("expected {} entries, got {}", self.k, p.len()),
            ));
        }
        if self.q.len() != self.l as usize {
            return Err(Error::config(
                "q",
                format!("expected {} entries, got {}", self.l, self.q.len()),
            ));
        }
        match self.mode {
            Mode::Uniform if p.windows(2).any(|w| w[0] != w[1]) || self.l > 0 => {
                return Err(Error::config("mode", "uniform mode needs equal p and l = 0"));
            }
            Mode::Mixed if self.l == 0 => return Err(Error::config("l", "mixed mode needs l > 0")),
            Mode::Pure if self.l > 0 => return Err(Error::config("mode", "l > 0 requires mode \"mixed\"")),
            _ => {}
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::config("tolerance", "must be a positive number"));
            }
        }
        BernoulliSpec::new(p, self.q.iter().map(|x| x.0.clone()).collect(), seed).map_err(|e| match e {
            Error::Config { reason, .. } => Error::config("p", reason),
            other => other,
        })
    }
}

/// Result of [`run_experiment`], tagged by experiment kind.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "experiment", rename_all = "kebab-case")]
pub enum ExperimentOutcome {
    Thoma {
        identity_exact: Option<bool>,
        report: ThomaReport,
    },
    Density(DensityReport),
    Asymptotics(AsymptoticsReport),
    Degenerate {
        runs: Vec<DegenerateReport>,
    },
    Oscillation {
        runs: Vec<OscillationReport>,
    },
}

/// Config echo, generator identity and outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rng: String,
    pub outcome: ExperimentOutcome,
    pub pass: bool,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    seed: String,
    item: &'a str,
    key: String,
    estimate: f64,
    reference: f64,
    deviation: f64,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One row per (seed, word or shape) with estimate, reference and deviation.
    pub fn to_csv(&self) -> String {
        let mut out = csv::Writer::from_writer(Vec::new());
        let mut row = |seed: String, item: &str, key: String, estimate: f64, reference: f64| {
            out.serialize(CsvRow {
                seed,
                item,
                key,
                estimate,
                reference,
                deviation: (estimate - reference).abs(),
            })
            .expect("in-memory csv write");
        };
        match &self.outcome {
            ExperimentOutcome::Thoma { report, .. } => {
                for s in &report.seeds {
                    for w in &s.words {
                        row(s.seed.to_string(), "word", w.word.clone(), w.estimate, w.bernoulli);
                    }
                }
                for c in &report.shapes {
                    row("mean".into(), "shape", c.lambda.to_string(), c.mean_estimate, c.target);
                }
            }
            ExperimentOutcome::Density(r) => {
                for s in &r.seeds {
                    for (j, (x, e)) in s.row_norm.iter().zip(&r.expected_rows).enumerate() {
                        row(s.seed.to_string(), "row", (j + 1).to_string(), *x, *e);
                    }
                    for (j, (x, e)) in s.col_norm.iter().zip(&r.expected_cols).enumerate() {
                        row(s.seed.to_string(), "column", (j + 1).to_string(), *x, *e);
                    }
                }
            }
            ExperimentOutcome::Asymptotics(r) => {
                for a in &r.rows {
                    row(a.seed.to_string(), "word", a.word.clone(), a.asymp_empirical, a.exact);
                }
            }
            ExperimentOutcome::Degenerate { runs: reports } => {
                for (r, seed) in reports.iter().zip(&self.config.seeds) {
                    for w in &r.supported {
                        row(seed.to_string(), "word", w.word.clone(), w.estimate, w.bernoulli);
                    }
                }
            }
            ExperimentOutcome::Oscillation { runs: reports } => {
                for (r, seed) in reports.iter().zip(&self.config.seeds) {
                    for (n, rows) in &r.snapshots {
                        let first = rows.first().copied().unwrap_or(0.0);
                        row(seed.to_string(), "row1", n.to_string(), first, first);
                    }
                }
            }
        }
        String::from_utf8(out.into_inner().expect("flush in-memory csv")).expect("csv is utf-8")
    }
}

/// Runs the configured experiment over all seeds, replaying `words` when given.
pub fn run_experiment(config: &ExperimentConfig, words: Option<&WordLog>) -> Result<ExperimentReport> {
    let spec = config.spec()?;
    if let Some(log) = words {
        log.check(&config.seeds, config.n)?;
    }
    let source: &dyn WordSource = match words {
        Some(log) => log,
        None => &Sampler,
    };
    let tol = config.tolerance();
    let (outcome, pass) = match config.experiment {
        ExperimentKind::Thoma => {
            if config.mode == Mode::Uniform {
                let (report, identity) =
                    check_equal_density_case(config.k, config.n, config.m, &config.seeds, tol, source)?;
                let pass = report.pass && identity;
                (
                    ExperimentOutcome::Thoma {
                        identity_exact: Some(identity),
                        report,
                    },
                    pass,
                )
            } else {
                let report = check_thoma(&spec, config.n, config.m, &config.seeds, tol, source)?;
                let pass = report.pass;
                (
                    ExperimentOutcome::Thoma {
                        identity_exact: None,
                        report,
                    },
                    pass,
                )
            }
        }
        ExperimentKind::Density => {
            let r = check_density_theorem(&spec, config.n, &config.seeds, tol, source);
            let pass = r.pass;
            (ExperimentOutcome::Density(r), pass)
        }
        ExperimentKind::Asymptotics => {
            let r = check_asymptotics(&spec, config.n, config.m, &config.seeds, tol, source)?;
            let pass = r.pass;
            (ExperimentOutcome::Asymptotics(r), pass)
        }
        ExperimentKind::Degenerate => {
            let reports = config
                .seeds
                .par_iter()
                .map(|&seed| degenerate_measure_demo(&spec.with_seed(seed), config.n, config.m))
                .collect::<Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.pass);
            (ExperimentOutcome::Degenerate { runs: reports }, pass)
        }
        ExperimentKind::Oscillation => {
            let every = config.log_every.unwrap_or((config.n / 64).max(1));
            let reports = config
                .seeds
                .par_iter()
                .map(|&seed| oscillation_demo(&spec.with_seed(seed), config.n, every))
                .collect::<Result<Vec<_>>>()?;
            (ExperimentOutcome::Oscillation { runs: reports }, true)
        }
    };
    Ok(ExperimentReport {
        config: config.clone(),
        rng: RNG_ALGORITHM.to_string(),
        outcome,
        pass,
    })
}

/// Standard error of a binomial frequency, the unit for statistical bands.
pub fn binomial_std_error(p: f64, n: usize) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}

/// Counts `(letter, occurrences)` as integers, for callers wanting exact frequencies.
pub fn empirical_frequencies(stats: &TrajectoryStats) -> Vec<(Symbol, BigRational)> {
    stats
        .counts
        .iter()
        .map(|&(s, c)| (s, BigRational::new(BigInt::from(c), BigInt::from(stats.n.max(1)))))
        .collect()
}

/// Float value of an exact estimate, for summaries.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| rational_to_f64(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::rsk_with_cells;
    use crate::young::rat;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("7/10").unwrap(), rat(7, 10));
        assert_eq!(parse_rational("0.7").unwrap(), rat(7, 10));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        let p: Vec<Prob> = serde_json::from_str(r#"[0.7, "3/10"]"#).unwrap();
        assert_eq!(&p[0].0 + &p[1].0, rat(1, 1));
    }

    #[test]
    fn spec_validation() {
        assert!(BernoulliSpec::new(vec![rat(1, 2), rat(1, 3)], vec![], 0).is_err());
        assert!(BernoulliSpec::new(vec![rat(3, 2), rat(-1, 2)], vec![], 0).is_err());
        let s = BernoulliSpec::from_floats(&[0.4, 0.2], &[0.3, 0.1], 1).unwrap();
        assert_eq!(s.k(), 2);
        assert_eq!(s.l(), 2);
        assert_eq!(s.cylinder_mass(&w("1,1*,2*")), rat(4, 10) * rat(3, 10) * rat(1, 10));
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = BernoulliSpec::from_floats(&[0.7, 0.3], &[], 42).unwrap();
        assert_eq!(sample_word(&s, 500), sample_word(&s, 500));
        assert_ne!(sample_word(&s, 500), sample_word(&s.with_seed(43), 500));
        let ones = BernoulliSpec::new(vec![rat(1, 1), rat(0, 1)], vec![], 5).unwrap();
        assert!(sample_word(&ones, 100).symbols().iter().all(|&x| x == Symbol::row(1)));
    }

    #[test]
    fn sampled_frequency_within_three_standard_errors() {
        let n = 100_000;
        for seed in [1u64, 2, 3] {
            let s = BernoulliSpec::from_floats(&[0.7, 0.3], &[], seed).unwrap();
            let ones = sample_word(&s, n)
                .symbols()
                .iter()
                .filter(|x| **x == Symbol::row(1))
                .count();
            let freq = ones as f64 / n as f64;
            assert!(
                (freq - 0.7).abs() <= 3.0 * binomial_std_error(0.7, n),
                "seed {seed}: {freq}"
            );
        }
    }

    #[test]
    fn youngizer_matches_plain_insertion() {
        let s = BernoulliSpec::from_floats(&[0.3, 0.2], &[0.3, 0.2], 9).unwrap();
        for len in [0, 1, 7, 300] {
            let u = sample_word(&s.with_seed(len as u64), len);
            let (stats, t) = youngize_with_tableau(&u, Some(50));
            let (pair, _) = rsk_with_cells(&u, InsertionRule::Mixed);
            assert_eq!(t, pair.p);
            assert_eq!(stats.recording_tableau(), pair.q);
            assert_eq!(stats.shape(), pair.p.shape());
            assert_eq!(stats.counts.iter().map(|c| c.1).sum::<usize>(), len);
            assert_eq!(stats.snapshots.len(), len / 50);
        }
        let s = BernoulliSpec::from_floats(&[0.5, 0.3, 0.2], &[], 3).unwrap();
        let u = sample_word(&s, 500);
        let (_, t) = youngize_with_tableau(&u, None);
        assert_eq!(t, crate::rsk::rsk(&u).unwrap().p);
    }

    #[test]
    fn youngizer_compresses_starred_columns() {
        let s = BernoulliSpec::from_floats(&[0.4, 0.2], &[0.3, 0.1], 1).unwrap();
        let u = sample_word(&s, 20_000);
        let mut y = Youngizer::new(true);
        for &x in u.symbols() {
            y.push(x);
        }
        assert!(y.row_lengths().len() > 1000);
        assert!(y.block_count() < 50, "{} blocks", y.block_count());
    }

    #[test]
    fn youngize_examples() {
        let stats = youngize(&w("2,1,2"), None);
        assert_eq!(stats.rows, vec![2, 1]);
        assert_eq!(stats.cols, vec![2, 1]);
        let ones = youngize(&Word::from_indices(1, &[1; 10]).unwrap(), None);
        assert_eq!(ones.rows, vec![10]);
    }

    #[test]
    fn bracketing() {
        let fp = free_paired(&w("1,1,2")).unwrap();
        assert!(fp.pairs.is_empty());
        assert_eq!(fp.free, vec![1, 2, 3]);
        let fp = free_paired(&w("2,1,2,1")).unwrap();
        assert_eq!(fp.pairs, vec![(1, 2), (3, 4)]);
        assert!(free_paired(&w("1,3")).is_err());
        for n in 0..=10 {
            for u in all_words(2, 0, n) {
                let fp = free_paired(&u).unwrap();
                assert_eq!(fp.pairs.len(), rsk(&u).unwrap().shape().row(2), "{u}");
                let residue: Vec<u32> = fp.free.iter().map(|&i| u.symbols()[i - 1].index()).collect();
                assert!(residue.windows(2).all(|p| p[0] <= p[1]), "{u}");
            }
        }
    }

    #[test]
    fn tail_estimate_examples() {
        let u = Word::from_indices(2, &[1, 1, 1, 1, 1]).unwrap();
        let e0 = tail_estimate(&u, 5, 0).unwrap();
        assert_eq!(e0.total(), rat(1, 1));
        let e = tail_estimate(&u, 5, 2).unwrap();
        assert_eq!(e.get(&Word::from_indices(2, &[1, 1]).unwrap()), rat(1, 1));
        assert_eq!(e.get(&Word::from_indices(2, &[1, 2]).unwrap()), rat(0, 1));
        assert!(tail_estimate(&u, 5, 6).is_err());
    }

    #[test]
    fn tail_estimate_matches_plactic_enumeration() {
        for u in all_words(2, 0, 6).step_by(7) {
            let t = crate::rsk::rsk(&u).unwrap().p;
            let class = crate::rsk::plactic_class(&t).unwrap();
            for m in 0..=3 {
                let e = tail_estimate(&u, 6, m).unwrap();
                assert_eq!(e.total(), rat(1, 1));
                for (a, x) in &e.estimates {
                    let hits = class.iter().filter(|y| y.symbols()[..m] == *a.symbols()).count();
                    assert_eq!(*x, rat(hits as i64, class.len() as i64), "{u} {a}");
                }
            }
        }
        for u in all_words(1, 1, 5).step_by(3) {
            let e = tail_estimate(&u, 5, 2).unwrap();
            assert_eq!(e.total(), rat(1, 1));
        }
    }

    #[test]
    fn two_routes_to_shape_sums_agree() {
        for u in all_words(3, 0, 6).step_by(17) {
            for m in 1..=3 {
                let e = tail_estimate(&u, 6, m).unwrap();
                let direct = successive_deletion_masses(&e.shape, m).unwrap();
                assert_eq!(e.shape_sums(), direct, "{u} m={m}");
            }
        }
    }

    #[test]
    fn shape_sums_exhaust_level() {
        let s = BernoulliSpec::from_floats(&[0.7, 0.3], &[], 3).unwrap();
        let u = sample_word(&s, 400);
        let e = tail_estimate(&u, 400, 3).unwrap();
        let total: BigRational = e.shape_sums().values().sum();
        assert_eq!(total, rat(1, 1));
        let lambda = YoungDiagram::new(vec![3]).unwrap();
        assert_eq!(shape_cylinder_sum(&e, &lambda), e.shape_sums()[&lambda]);
    }

    #[test]
    fn uniform_targets() {
        let (report, identity) = check_equal_density_case(2, 2000, 2, &[1, 2], 0.2, &Sampler).unwrap();
        assert!(identity);
        let targets: Vec<f64> = report.shapes.iter().map(|s| s.target).collect();
        assert_eq!(targets, vec![0.25, 0.75]);
    }

    #[test]
    fn small_thoma_run() {
        let s = BernoulliSpec::from_floats(&[0.7, 0.3], &[], 0).unwrap();
        let r = check_thoma(&s, 3000, 2, &[1, 2, 3], 0.05, &Sampler).unwrap();
        assert!(r.pass, "{:?}", r.shapes);
        let mixed = BernoulliSpec::from_floats(&[0.4, 0.2], &[0.3, 0.1], 0).unwrap();
        let r = check_thoma(&mixed, 3000, 2, &[1, 2], 0.05, &Sampler).unwrap();
        assert!(r.pass, "{:?}", r.shapes);
    }

    #[test]
    fn degenerate_demo() {
        let s = BernoulliSpec::from_floats(&[0.6, 0.4], &[], 4).unwrap();
        let r = degenerate_measure_demo(&s, 120, 3).unwrap();
        assert!(r.zero_outside_support && r.matches_uniform_paths && r.bernoulli_all_positive);
        assert_eq!(r.first_letter_one_mass, "0");
        assert!(r.pass);
        assert!(is_maximal_path_word(&w("2,2,1"), 2));
        assert!(!is_maximal_path_word(&w("1"), 2));
    }

    #[test]
    fn config_validation() {
        let ok = r#"{"k":2,"p":[0.7,0.3],"n":100,"m":2,"seeds":[1]}"#;
        assert!(ExperimentConfig::from_json(ok).is_ok());
        let uniform = r#"{"k":3,"n":100,"m":2,"seeds":[1],"mode":"uniform"}"#;
        assert!(ExperimentConfig::from_json(uniform).is_ok());
        for (bad, field) in [
            (r#"{"k":2,"p":[0.7,0.2],"n":100,"seeds":[1]}"#, "p"),
            (r#"{"k":2,"p":[0.7,0.3],"n":100,"seeds":[]}"#, "seeds"),
            (r#"{"k":2,"p":[0.7,0.3],"n":10,"m":11,"seeds":[1]}"#, "m"),
            (r#"{"k":2,"p":[0.7],"n":10,"seeds":[1]}"#, "p"),
            (r#"{"k":1,"l":1,"p":[0.5],"q":[0.5],"n":10,"seeds":[1]}"#, "mode"),
            (r#"{"k":2,"p":[0.7,0.3],"n":10,"seeds":[1],"bogus":1}"#, "config"),
        ] {
            match ExperimentConfig::from_json(bad) {
                Err(Error::Config { field: f, .. }) => assert_eq!(f, field, "{bad}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn reports_are_deterministic_and_resumable() {
        let config = ExperimentConfig::from_json(r#"{"k":2,"p":[0.7,0.3],"n":500,"m":2,"seeds":[1,2]}"#).unwrap();
        let a = run_experiment(&config, None).unwrap();
        let b = run_experiment(&config, None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
        let log = WordLog::record(&config.spec().unwrap(), &config.seeds, config.n);
        let replay = WordLog::from_jsonl(&log.to_jsonl()).unwrap();
        let c = run_experiment(&config, Some(&replay)).unwrap();
        assert_eq!(a.to_json(), c.to_json());
        assert!(a.to_csv().starts_with("seed,item,key,estimate,reference,deviation\n"));
        let short = ExperimentConfig { n: 400, ..config };
        assert!(run_experiment(&short, Some(&replay)).is_err());
    }

    #[test]
    fn other_experiment_kinds_run() {
        for text in [
            r#"{"experiment":"density","k":3,"p":[0.5,0.3,0.2],"n":2000,"seeds":[1]}"#,
            r#"{"experiment":"asymptotics","k":2,"p":[0.7,0.3],"n":2000,"m":2,"seeds":[1]}"#,
            r#"{"experiment":"degenerate","k":2,"p":[0.6,0.4],"n":60,"m":2,"seeds":[1]}"#,
            r#"{"experiment":"oscillation","k":2,"p":[0.9,0.1],"n":4000,"seeds":[1],"log_every":100}"#,
        ] {
            let config = ExperimentConfig::from_json(text).unwrap();
            let r = run_experiment(&config, None).unwrap();
            assert!(!r.to_csv().is_empty());
            let back: ExperimentReport = serde_json::from_str(&r.to_json()).unwrap();
            assert_eq!(back.to_json(), r.to_json());
            assert!(r.pass, "{text}");
        }
    }

    #[test]
    fn oscillating_densities_do_not_settle() {
        let s = BernoulliSpec::from_floats(&[0.9, 0.1], &[], 7).unwrap();
        let r = oscillation_demo(&s, 1 << 14, 256).unwrap();
        assert!(r.spread > 0.1, "spread {}", r.spread);
    }
}
