//! Exact Young-diagram arithmetic: dimensions by three routes, skew
//! dimensions, semistandard counts, Schur and hook Schur functions, Thoma
//! cylinder masses, dimension ratios and the Vandermonde convolution.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tableau::{partitions, Word, YoungDiagram};

/// A scalar that is either exact or an explicitly approximate float.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactScalar {
    Exact(BigRational),
    Float(f64),
}

impl ExactScalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Exact(q) => rational_to_f64(q),
            ExactScalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Exact(q) => Some(q),
            ExactScalar::Float(_) => None,
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Exact(q) => write!(f, "{q}"),
            ExactScalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        ExactScalar::Exact(q)
    }
}

/// Converts a rational with huge numerator and denominator without overflow.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Shift both sides down to 60 significant bits before dividing.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n - shift_d) as i32)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Number of standard fillings of `outer / inner`, counted as growth paths.
pub fn skew_dim(inner: &YoungDiagram, outer: &YoungDiagram) -> Result<BigUint> {
    if !outer.contains(inner) {
        return Err(Error::Containment {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    // Level-by-level path counting from `inner` up to `outer`.
    let mut level: HashMap<YoungDiagram, BigUint> = HashMap::from([(inner.clone(), BigUint::one())]);
    for _ in inner.size()..outer.size() {
        let mut next: HashMap<YoungDiagram, BigUint> = HashMap::new();
        for (shape, count) in level {
            for i in 1..=shape.num_rows() + 1 {
                if let Some(bigger) = shape.add_to_row(i) {
                    if outer.contains(&bigger) {
                        *next.entry(bigger).or_default() += &count;
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.remove(outer).unwrap_or_default())
}

/// `dim λ` as the number of paths from `∅` in the Young graph.
pub fn dim_paths(lambda: &YoungDiagram) -> BigUint {
    skew_dim(&YoungDiagram::empty(), lambda).expect("∅ is contained in every diagram")
}

/// `dim λ = n! / Π hooks`.
pub fn dim_hook(lambda: &YoungDiagram) -> BigUint {
    let hooks = lambda
        .cells()
        .fold(BigUint::one(), |acc, c| acc * lambda.hook(c) as u64);
    factorial(lambda.size()) / hooks
}

/// `dim λ` from Frobenius coordinates:
/// `n! Π_{i<j}(α_i-α_j)(β_i-β_j) / (Π α_i! β_i! Π_{i,j}(α_i+β_j+1))`.
pub fn dim_frobenius(lambda: &YoungDiagram) -> BigUint {
    let f = lambda.frobenius();
    let d = f.rank();
    let mut num = factorial(lambda.size());
    let mut den = BigUint::one();
    for i in 0..d {
        den *= factorial(f.arms[i]) * factorial(f.legs[i]);
        for j in 0..d {
            den *= (f.arms[i] + f.legs[j] + 1) as u64;
            if i < j {
                num *= ((f.arms[i] - f.arms[j]) * (f.legs[i] - f.legs[j])) as u64;
            }
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Frobenius dimension formula is integral");
    q
}

/// Product formula `Π_{cells} (k + c(u)) / h(u)` for the number of semistandard
/// tableaux of shape `λ` with entries `1..=k`.
pub fn count_ssyt(lambda: &YoungDiagram, k: usize) -> BigUint {
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    for c in lambda.cells() {
        num *= k as i64 + c.col as i64 - c.row as i64;
        den *= lambda.hook(c) as u64;
    }
    if num.is_negative() || num.is_zero() {
        return BigUint::zero();
    }
    num.magnitude() / den
}

/// `dim μ / dim ν` for `μ ⊆ ν`, from the Frobenius formula written as a ratio.
///
/// Only falling products of consecutive integers appear, so the cost is
/// `O(|ν| - |μ| + d²)` for Durfee rank `d`; no factorial of `|ν|` is formed.
pub fn dim_ratio_shapes(outer: &YoungDiagram, inner: &YoungDiagram) -> Result<BigRational> {
    if !outer.contains(inner) {
        return Err(Error::Containment {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    let (fo, fi) = (outer.frobenius(), inner.frobenius());
    let mut num: Vec<i64> = Vec::new();
    let mut den: Vec<i64> = Vec::new();

    // |μ|! / |ν|!
    den.extend((inner.size() + 1..=outer.size()).map(|x| x as i64));

    // Π α_i! β_i! over ν divided by the same over μ; μ has the smaller rank.
    let factorial_ratio = |big: &[usize], small: &[usize], num: &mut Vec<i64>, den: &mut Vec<i64>| {
        for (i, &b) in big.iter().enumerate() {
            let s = small.get(i).copied().unwrap_or(0);
            if b >= s {
                num.extend((s + 1..=b).map(|x| x as i64));
            } else {
                den.extend((b + 1..=s).map(|x| x as i64));
            }
        }
    };
    factorial_ratio(&fo.arms, &fi.arms, &mut num, &mut den);
    factorial_ratio(&fo.legs, &fi.legs, &mut num, &mut den);

    let vandermonde_terms = |v: &[usize], out: &mut Vec<i64>| {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                out.push(v[i] as i64 - v[j] as i64);
            }
        }
    };
    vandermonde_terms(&fi.arms, &mut num);
    vandermonde_terms(&fi.legs, &mut num);
    vandermonde_terms(&fo.arms, &mut den);
    vandermonde_terms(&fo.legs, &mut den);

    let cross_terms = |f: &crate::tableau::FrobeniusCoords, out: &mut Vec<i64>| {
        for a in &f.arms {
            for b in &f.legs {
                out.push((a + b + 1) as i64);
            }
        }
    };
    cross_terms(&fo, &mut num);
    cross_terms(&fi, &mut den);

    Ok(cancel_product(num, den))
}

/// `Π num / Π den` after cancelling equal factors.
fn cancel_product(mut num: Vec<i64>, mut den: Vec<i64>) -> BigRational {
    num.sort_unstable();
    den.sort_unstable();
    let (mut i, mut j) = (0, 0);
    let (mut n_left, mut d_left) = (Vec::new(), Vec::new());
    while i < num.len() && j < den.len() {
        match num[i].cmp(&den[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                n_left.push(num[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                d_left.push(den[j]);
                j += 1;
            }
        }
    }
    n_left.extend_from_slice(&num[i..]);
    d_left.extend_from_slice(&den[j..]);
    let n = n_left.iter().fold(BigInt::one(), |acc, &x| acc * x);
    let d = d_left.iter().fold(BigInt::one(), |acc, &x| acc * x);
    BigRational::new(n, d)
}

/// Per-row letter multiplicities `m_i` of an unstarred word, 1-based.
fn row_multiplicities(a: &Word, rows: usize) -> Result<Vec<usize>> {
    if !a.is_unstarred() {
        return Err(Error::Alphabet {
            symbol: a.to_string(),
            k: a.k(),
            l: 0,
        });
    }
    let mut m = vec![0usize; rows];
    for s in a.symbols() {
        let i = s.index() as usize;
        if i > m.len() {
            m.resize(i, 0);
        }
        m[i - 1] += 1;
    }
    Ok(m)
}

/// `Λ^a`: `Λ` with `m_i` cells removed from row `i`, if that is a diagram.
pub fn remove_by_multiplicity(lambda: &YoungDiagram, a: &Word) -> Result<Option<YoungDiagram>> {
    let m = row_multiplicities(a, lambda.num_rows())?;
    let mut rows = Vec::with_capacity(m.len());
    for (i, &mi) in m.iter().enumerate() {
        match lambda.row(i + 1).checked_sub(mi) {
            Some(r) => rows.push(r),
            None => return Ok(None),
        }
    }
    Ok(YoungDiagram::new(rows).ok())
}

/// Exact `dim Λ^a / dim Λ`; zero when `Λ^a` is not a diagram.
pub fn dim_ratio(lambda: &YoungDiagram, a: &Word) -> Result<BigRational> {
    match remove_by_multiplicity(lambda, a)? {
        Some(inner) => dim_ratio_shapes(lambda, &inner),
        None => Ok(BigRational::zero()),
    }
}

/// The asymptotic form `m_p̂(C_a) · Π_{i<j} (α_i-α_j-(m_i-m_j)) / (α_i-α_j)`.
///
/// Uses the shifted row coordinates `α_i = λ_i - i` for `i = 1..=p_hat.len()`,
/// which agree with the Frobenius arms inside the Durfee square and extend
/// them below it.
pub fn dim_ratio_asymp(lambda: &YoungDiagram, a: &Word, p_hat: &[f64]) -> Result<f64> {
    let k = p_hat.len();
    let m = row_multiplicities(a, k)?;
    if m.len() > k {
        return Ok(0.0);
    }
    let bernoulli: f64 = p_hat.iter().zip(&m).map(|(p, &mi)| p.powi(mi as i32)).product();
    let alpha: Vec<f64> = (1..=k).map(|i| lambda.row(i) as f64 - i as f64).collect();
    let mut correction = 1.0;
    for i in 0..k {
        for j in i + 1..k {
            let gap = alpha[i] - alpha[j];
            correction *= (gap - (m[i] as f64 - m[j] as f64)) / gap;
        }
    }
    Ok(bernoulli * correction)
}

fn horizontal_strips(lambda: &YoungDiagram) -> Vec<(YoungDiagram, usize)> {
    fn go(lambda: &YoungDiagram, i: usize, cur: &mut Vec<usize>, out: &mut Vec<(YoungDiagram, usize)>) {
        if i > lambda.num_rows() {
            let mu = YoungDiagram::new(cur.clone()).expect("interlacing rows are a diagram");
            let removed = lambda.size() - mu.size();
            out.push((mu, removed));
            return;
        }
        for r in lambda.row(i + 1)..=lambda.row(i) {
            cur.push(r);
            go(lambda, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 1, &mut Vec::new(), &mut out);
    out
}

fn vertical_strips(lambda: &YoungDiagram) -> Vec<(YoungDiagram, usize)> {
    horizontal_strips(&lambda.conjugate())
        .into_iter()
        .map(|(mu, r)| (mu.conjugate(), r))
        .collect()
}

/// `s_λ(x_1,…,x_k)`, the sum over semistandard tableaux of `Π x_i^{m_i}`,
/// organised by peeling off the horizontal strip of the largest letter.
pub fn schur(lambda: &YoungDiagram, x: &[BigRational]) -> BigRational {
    hook_schur(lambda, x, &[])
}

/// `s̃_λ(α; β)`, the sum over `(k, ℓ)`-semistandard tableaux of
/// `Π α_i^{m_i} β_j^{m_{j*}}`.
///
/// The largest letter `1*` occupies a vertical strip, then `2*`, …, `ℓ*`,
/// then `k`, …, `1` occupy horizontal strips.
pub fn hook_schur(lambda: &YoungDiagram, alpha: &[BigRational], beta: &[BigRational]) -> BigRational {
    let mut memo = HashMap::new();
    hook_schur_memo(lambda, alpha, beta, &mut memo)
}

fn hook_schur_memo(
    lambda: &YoungDiagram,
    alpha: &[BigRational],
    beta: &[BigRational],
    memo: &mut HashMap<(YoungDiagram, usize, usize), BigRational>,
) -> BigRational {
    if lambda.is_empty() {
        return BigRational::one();
    }
    if alpha.is_empty() && beta.is_empty() {
        return BigRational::zero();
    }
    if !lambda.fits_hook(alpha.len(), beta.len()) {
        return BigRational::zero();
    }
    let key = (lambda.clone(), alpha.len(), beta.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigRational::zero();
    if let Some((b, rest)) = beta.split_first() {
        for (mu, removed) in vertical_strips(lambda) {
            let sub = hook_schur_memo(&mu, alpha, rest, memo);
            if !sub.is_zero() {
                total += sub * num_traits::pow(b.clone(), removed);
            }
        }
    } else {
        let (last, rest) = alpha.split_last().expect("alpha is non-empty here");
        for (mu, removed) in horizontal_strips(lambda) {
            let sub = hook_schur_memo(&mu, rest, beta, memo);
            if !sub.is_zero() {
                total += sub * num_traits::pow(last.clone(), removed);
            }
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Thoma parameters `(α, β, 0)` with finitely many nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomaParams {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl ThomaParams {
    /// Requires nonincreasing nonnegative `α`, `β` with `Σα + Σβ = 1` exactly.
    pub fn new(alpha: Vec<BigRational>, beta: Vec<BigRational>) -> Result<Self> {
        for (name, v) in [("alpha", &alpha), ("beta", &beta)] {
            if v.iter().any(|x| x.is_negative()) {
                return Err(Error::config(name, "entries must be nonnegative"));
            }
            if v.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::config(name, "entries must be nonincreasing"));
            }
        }
        let total: BigRational = alpha.iter().chain(&beta).sum();
        if !total.is_one() {
            return Err(Error::config("alpha+beta", format!("parameters sum to {total}, not 1")));
        }
        Ok(ThomaParams { alpha, beta })
    }

    /// Sorts arbitrary frequencies into Thoma order.
    pub fn from_frequencies(mut alpha: Vec<BigRational>, mut beta: Vec<BigRational>) -> Result<Self> {
        alpha.sort_by(|a, b| b.cmp(a));
        beta.sort_by(|a, b| b.cmp(a));
        ThomaParams::new(alpha, beta)
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }
}

/// `M_{(α,β,0)}(C_λ) = dim λ · s̃_λ(α; β)`.
pub fn thoma_cylinder(lambda: &YoungDiagram, params: &ThomaParams) -> BigRational {
    let s = hook_schur(lambda, &params.alpha, &params.beta);
    BigRational::from_integer(BigInt::from(dim_hook(lambda))) * s
}

/// `Σ_{λ ⊢ n} dim λ · count_ssyt(λ, k)`, which must equal `k^n`.
pub fn schur_weyl_count(n: usize, k: usize) -> BigUint {
    partitions(n, k).iter().map(|l| dim_hook(l) * count_ssyt(l, k)).sum()
}

/// `Δ(x) = Π_{i<j} (x_i - x_j)`.
pub fn vandermonde(x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= &x[i] - &x[j];
        }
    }
    acc
}

fn padded(mu: &YoungDiagram, n: usize) -> Result<Vec<usize>> {
    if mu.num_rows() > n {
        return Err(Error::Diagram(format!("{mu} has more than {n} rows")));
    }
    let mut v = mu.rows().to_vec();
    v.resize(n, 0);
    Ok(v)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("a larger element exists right of i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `Δ_μ(x) = Σ_ζ Δ(x - ζ)` over the distinct permutations `ζ` of `μ` padded to `|x|`.
pub fn vandermonde_mu(x: &[BigRational], mu: &YoungDiagram) -> Result<BigRational> {
    let mut zeta = padded(mu, x.len())?;
    zeta.sort_unstable();
    let mut total = BigRational::zero();
    loop {
        let shifted: Vec<BigRational> = x
            .iter()
            .zip(&zeta)
            .map(|(xi, &z)| xi - BigRational::from_integer(BigInt::from(z)))
            .collect();
        total += vandermonde(&shifted);
        if !next_permutation(&mut zeta) {
            break;
        }
    }
    Ok(total)
}

/// Number of distinct permutations of `μ` padded with zeros to length `n`.
pub fn perm_count(mu: &YoungDiagram, n: usize) -> Result<BigUint> {
    let v = padded(mu, n)?;
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for x in v {
        *counts.entry(x).or_default() += 1;
    }
    let den = counts.values().fold(BigUint::one(), |acc, &c| acc * factorial(c));
    Ok(factorial(n) / den)
}
