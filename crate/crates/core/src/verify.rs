//! Named verification suites over small exhaustive ranges and fixed-seed
//! Monte Carlo runs.
//!
//! Cases run in increasing size and lexicographic order, so the first
//! recorded failure of a suite is a minimal counterexample.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Display;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ergodic::{
    check_asymptotics, check_density_theorem, check_equal_density_case, check_thoma, BernoulliSpec, Sampler,
};
use crate::error::{Error, Result};
use crate::graph::{
    build, encode_sw2, maximal_embedding_defects, maximal_tableau, sw2_codes, sw2_literal_successors, sw2_successors,
    Sw2Code,
};
use crate::rsk::{
    c_a_bruteforce, c_a_formula, greene_invariants, greene_invariants_decreasing, phi_all, psi, psi_mixed, rsk,
    rsk_mixed, rsk_mixed_star, rsk_star, word_of_filling, word_of_filling_mixed,
};
use crate::tableau::{
    all_words, alphabet, enumerate_fillings, partitions, Symbol, Tableau, TableauKind, Word, YoungDiagram,
};
use crate::young::{
    count_ssyt, dim_frobenius, dim_hook, dim_paths, perm_count, schur, schur_weyl_count, vandermonde, vandermonde_mu,
};

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "bijection",
    "duality",
    "focus",
    "shape",
    "vandermonde",
    "dims",
    "densities",
    "thoma",
    "asymptotics",
    "mixed-duality",
    "graph",
];

/// Failures kept per suite; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 20;

const SUITE_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Measured quantities worth reporting alongside pass/fail.
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

struct Checker {
    result: SuiteResult,
    start: Instant,
}

impl Checker {
    fn new(name: &str) -> Self {
        Checker {
            result: SuiteResult {
                name: name.to_string(),
                cases: 0,
                failure_count: 0,
                failures: Vec::new(),
                notes: Vec::new(),
                wall_time_ms: 0,
            },
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> String, expected: impl Display, actual: impl Display) {
        self.result.cases += 1;
        if !ok {
            self.result.failure_count += 1;
            if self.result.failures.len() < MAX_RECORDED_FAILURES {
                self.result.failures.push(Failure {
                    input: input(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, input: impl FnOnce() -> String, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(ok, input, expected, actual);
    }

    fn ok(&mut self, input: impl FnOnce() -> String, what: &str, holds: bool) {
        self.check(holds, input, what, if holds { "holds" } else { "violated" });
    }

    fn error(&mut self, input: impl FnOnce() -> String, err: Error) {
        self.check(false, input, "no error", err);
    }

    fn note(&mut self, text: String) {
        self.result.notes.push(text);
    }

    fn finish(mut self) -> SuiteResult {
        self.result.wall_time_ms = self.start.elapsed().as_millis() as u64;
        self.result
    }
}

fn show<T: Display>(r: Result<T>) -> String {
    match r {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<SuiteResult>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s)).collect();
    }
    Ok(vec![run_one(name)?])
}

fn run_one(name: &str) -> Result<SuiteResult> {
    Ok(match name {
        "bijection" => bijection(&[2, 3], 7),
        "duality" => duality(3, 6),
        "focus" => focus(5, 500),
        "shape" => shape(6),
        "vandermonde" => vandermonde_suite(100, 5),
        "dims" => dims(12),
        "densities" => densities(100_000, &[1, 2, 3], 0.015),
        "thoma" => thoma(10_000, 3, &[1, 2, 3, 4, 5], 0.02),
        "asymptotics" => asymptotics(10_000, 3, &[1, 2, 3], 0.05),
        "mixed-duality" => mixed_duality(6, 10, 200),
        "graph" => graph(8),
        _ => {
            return Err(Error::config(
                "suite",
                format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", ")),
            ))
        }
    })
}

/// Inverse of row insertion driven by the recording tableau.
fn inverse_rsk(p: &Tableau, q: &Tableau, k: u32) -> Result<Word> {
    let mut p = p.clone();
    let mut q_rows = q.rows().to_vec();
    let mut out = Vec::with_capacity(p.size());
    while let Some((r, _)) = q_rows
        .iter()
        .enumerate()
        .filter_map(|(r, row)| row.last().map(|&x| (r, x)))
        .max_by_key(|&(_, x)| x)
    {
        q_rows[r].pop();
        let c = crate::tableau::CellPosition::new(r + 1, q_rows[r].len() + 1);
        if q_rows[r].is_empty() {
            q_rows.pop();
        }
        let (smaller, s) = p.reverse_insert_row(c)?;
        p = smaller;
        out.push(s);
    }
    out.reverse();
    Word::new(k, 0, out)
}

/// RSK is a bijection from words onto pairs `(P, Q)` of equal shape, and
/// `Σ_λ dim λ · d_λ(k) = k^n`.
pub fn bijection(ks: &[u32], max_n: usize) -> SuiteResult {
    let mut c = Checker::new("bijection");
    for n in 0..=max_n {
        for &k in ks {
            let mut seen = HashSet::new();
            for u in all_words(k, 0, n) {
                let pair = match rsk(&u) {
                    Ok(pair) => pair,
                    Err(e) => {
                        c.error(|| u.to_string(), e);
                        continue;
                    }
                };
                let valid = pair.p.is_valid_as(TableauKind::Semistandard)
                    && pair.q.is_valid_as(TableauKind::Standard)
                    && pair.p.shape() == pair.q.shape();
                c.ok(|| u.to_string(), "P semistandard, Q standard, same shape", valid);
                c.eq(
                    || format!("inverse of RSK({u})"),
                    u.to_string(),
                    show(inverse_rsk(&pair.p, &pair.q, k)),
                );
                let key = format!("{} {}", pair.p, pair.q);
                c.ok(
                    || u.to_string(),
                    "pair not produced by an earlier word",
                    seen.insert(key),
                );
            }
            let pairs: BigUint = partitions(n, k as usize)
                .iter()
                .map(|l| count_ssyt(l, k as usize) * dim_hook(l))
                .sum();
            let words = BigUint::from(k).pow(n as u32);
            c.eq(|| format!("k={k} n={n}: pairs of equal shape"), words.clone(), pairs);
            c.eq(
                || format!("k={k} n={n}: distinct images"),
                words.clone(),
                BigUint::from(seen.len()),
            );
            c.eq(
                || format!("k={k} n={n}: Σ dim λ · d_λ(k)"),
                words,
                schur_weyl_count(n, k as usize),
            );
        }
    }
    c.finish()
}

/// `RSK*(rev w) = (P^t, evac(Q^t))` for all words over `{1..k}` of length ≤ `max_n`.
pub fn duality(k: u32, max_n: usize) -> SuiteResult {
    let mut c = Checker::new("duality");
    for n in 0..=max_n {
        for u in all_words(k, 0, n) {
            let (r, d) = match (rsk(&u), rsk_star(&u.rev())) {
                (Ok(r), Ok(d)) => (r, d),
                (Err(e), _) | (_, Err(e)) => {
                    c.error(|| u.to_string(), e);
                    continue;
                }
            };
            c.eq(
                || format!("P of reverse of {u}"),
                r.p.transpose().to_string(),
                d.p.to_string(),
            );
            c.eq(
                || format!("Q of reverse of {u}"),
                show(r.q.transpose().evacuation()),
                d.q.to_string(),
            );
        }
    }
    c.finish()
}

fn semistandard_up_to(max_n: usize, k: u32) -> Vec<Tableau> {
    (0..=max_n)
        .flat_map(|n| partitions(n, k as usize))
        .flat_map(|lambda| enumerate_fillings(&lambda, &alphabet(k, 0), TableauKind::Semistandard))
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, k: u32, l: u32, n: usize) -> Word {
    let letters = alphabet(k, l);
    let symbols = (0..n).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
    Word::new(k, l, symbols).expect("letters drawn from the alphabet")
}

/// `c_a(T)` from deletion schedules against counting words in the plactic class.
pub fn focus(max_n: usize, random_cases: usize) -> SuiteResult {
    let mut c = Checker::new("focus");
    for t in semistandard_up_to(max_n, 2) {
        for m in 0..=t.size() {
            for a in all_words(2, 0, m) {
                c.eq(
                    || format!("T={t} a={a}"),
                    show(c_a_bruteforce(&t, &a)),
                    show(c_a_formula(&t, &a)),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let mut cases: Vec<(Tableau, Word)> = (0..random_cases)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let t = rsk(&random_word(&mut rng, 3, 0, n)).expect("unstarred word").p;
            let m = rng.gen_range(0..=n);
            (t, random_word(&mut rng, 3, 0, m))
        })
        .collect();
    cases.sort_by(|x, y| (x.0.size(), x.1.symbols()).cmp(&(y.0.size(), y.1.symbols())));
    for (t, a) in cases {
        c.eq(
            || format!("T={t} a={a}"),
            show(c_a_bruteforce(&t, &a)),
            show(c_a_formula(&t, &a)),
        );
    }
    c.finish()
}

fn is_lattice(w: &Word) -> bool {
    let mut counts = vec![0usize; w.len() + 2];
    w.symbols().iter().all(|s| {
        let j = s.index() as usize;
        counts[j] += 1;
        j == 1 || counts[j] <= counts[j - 1]
    })
}

/// `Q(rev Ψ(u)) = Q(rev u)`, `Ψ(u)` is a lattice word, and `sh(w_S) = sh(a)`
/// for every schedule `S` with `Φ_T(S) = a`; pure over `{1,2,3}` and mixed
/// over `{1,2,1*}`.
pub fn shape(max_n: usize) -> SuiteResult {
    let mut c = Checker::new("shape");
    for n in 0..=max_n {
        for u in all_words(3, 0, n) {
            match psi(&u) {
                Ok(p) => {
                    c.ok(|| format!("Ψ({u}) = {p}"), "lattice word", is_lattice(&p));
                    c.eq(
                        || format!("Q(rev Ψ({u}))"),
                        show(rsk(&u.rev()).map(|x| x.q)),
                        show(rsk(&p.rev()).map(|x| x.q)),
                    );
                }
                Err(e) => c.error(|| u.to_string(), e),
            }
        }
        for u in all_words(2, 1, n.min(5)) {
            let p = psi_mixed(&u);
            c.eq(
                || format!("Q(rev Ψ({u}))"),
                rsk_mixed(&u.rev()).q,
                rsk_mixed(&p.rev()).q,
            );
        }
    }
    for t in semistandard_up_to(max_n, 3) {
        for m in 0..=t.size() {
            match phi_all(&t, m) {
                Ok(list) => {
                    for (a, s) in list {
                        c.eq(
                            || format!("T={t} a={a} schedule {:?}", s.cells()),
                            show(rsk(&a).map(|x| x.shape())),
                            show(rsk(&word_of_filling(&s)).map(|x| x.shape())),
                        );
                    }
                }
                Err(e) => c.error(|| format!("T={t} m={m}"), e),
            }
        }
    }
    for n in 0..=max_n.min(4) {
        for lambda in partitions(n, n) {
            for t in enumerate_fillings(&lambda, &alphabet(2, 1), TableauKind::Hook) {
                for m in 0..=n {
                    for (a, s) in phi_all(&t, m).unwrap_or_default() {
                        c.eq(
                            || format!("T={t} a={a} schedule {:?}", s.cells()),
                            rsk_mixed(&a).shape(),
                            rsk_mixed(&word_of_filling_mixed(&s, &a)).shape(),
                        );
                    }
                }
            }
        }
    }
    c.finish()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-30i64..=30)),
        BigInt::from(rng.gen_range(1i64..=9)),
    )
}

/// `Δ_μ(x) = n_μ Δ(x)` on random rational points.
pub fn vandermonde_suite(cases: usize, max_n: usize) -> SuiteResult {
    let mut c = Checker::new("vandermonde");
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let mut instances: Vec<(Vec<BigRational>, YoungDiagram)> = (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let x: Vec<BigRational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let mut rows: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            rows.sort_unstable_by(|a, b| b.cmp(a));
            (x, YoungDiagram::new(rows).expect("sorted rows"))
        })
        .collect();
    instances.sort_by_key(|(x, mu)| (x.len(), mu.size()));
    for (x, mu) in instances {
        let input = || {
            let xs: Vec<String> = x.iter().map(|v| v.to_string()).collect();
            format!("x=({}) μ={mu}", xs.join(","))
        };
        let expected = perm_count(&mu, x.len()).map(|n| BigRational::from_integer(BigInt::from(n)) * vandermonde(&x));
        c.eq(input, show(expected), show(vandermonde_mu(&x, &mu)));
    }
    c.finish()
}

/// Hook length, Frobenius and path-count dimensions agree for `|λ| ≤ max_n`.
pub fn dims(max_n: usize) -> SuiteResult {
    let mut c = Checker::new("dims");
    for n in 0..=max_n {
        let mut total = BigUint::from(0u32);
        for lambda in partitions(n, n) {
            let hook = dim_hook(&lambda);
            c.eq(|| format!("{lambda}: Frobenius"), hook.clone(), dim_frobenius(&lambda));
            c.eq(|| format!("{lambda}: paths"), hook.clone(), dim_paths(&lambda));
            total += &hook * &hook;
        }
        let n_fact: BigUint = (1..=n as u32).map(BigUint::from).product();
        c.eq(|| format!("Σ_(λ ⊢ {n}) (dim λ)²"), n_fact, total);
    }
    c.finish()
}

/// Normalized row and column lengths approach the sorted letter frequencies.
pub fn densities(n: usize, seeds: &[u64], tolerance: f64) -> SuiteResult {
    let mut c = Checker::new("densities");
    let specs = [
        BernoulliSpec::from_floats(&[0.5, 0.3, 0.2], &[], 0),
        BernoulliSpec::from_floats(&[0.4, 0.2], &[0.3, 0.1], 0),
    ];
    for spec in specs {
        let spec = spec.expect("probabilities sum to 1");
        let report = check_density_theorem(&spec, n, seeds, tolerance, &Sampler);
        let label = format!("p={:?} q={:?}", report.expected_rows, report.expected_cols);
        for s in &report.seeds {
            let dev = s.row_deviation.max(s.col_deviation);
            c.check(
                dev <= tolerance,
                || format!("{label} n={n} seed={}", s.seed),
                format!("max deviation <= {tolerance}"),
                format!("{dev:.5} (rows {:?}, columns {:?})", s.row_norm, s.col_norm),
            );
        }
        c.note(format!("{label}: max deviation {:.5}", report.max_deviation));
    }
    c.finish()
}

/// Seed-averaged shape sums of tail estimates against `dim λ · s_λ(p)`, the
/// uniform case against `dim λ · d_λ(k)/k^m`, and the exact identity
/// `d_λ(k)/k^m = s_λ(1/k, …, 1/k)`.
pub fn thoma(n: usize, max_m: usize, seeds: &[u64], tolerance: f64) -> SuiteResult {
    let mut c = Checker::new("thoma");
    for k in 1..=4u32 {
        let x = vec![BigRational::new(BigInt::one(), BigInt::from(k)); k as usize];
        for m in 0..=6 {
            for lambda in partitions(m, k as usize) {
                let lhs = BigRational::new(
                    BigInt::from(count_ssyt(&lambda, k as usize)),
                    BigInt::from(k).pow(m as u32),
                );
                c.eq(|| format!("k={k} λ={lambda}: d_λ(k)/k^m"), lhs, schur(&lambda, &x));
            }
        }
    }
    let spec = BernoulliSpec::from_floats(&[0.7, 0.3], &[], 0).expect("probabilities sum to 1");
    for m in 1..=max_m {
        match check_thoma(&spec, n, m, seeds, tolerance, &Sampler) {
            Ok(report) => {
                for s in &report.shapes {
                    c.check(
                        s.deviation <= tolerance,
                        || format!("p=(0.7,0.3) n={n} m={m} λ={}", s.lambda),
                        format!("{:.5} ± {tolerance}", s.target),
                        format!("{:.5}", s.mean_estimate),
                    );
                }
                c.note(format!("p=(0.7,0.3) m={m}: max deviation {:.5}", report.max_deviation));
            }
            Err(e) => c.error(|| format!("p=(0.7,0.3) m={m}"), e),
        }
        match check_equal_density_case(2, n, m, seeds, tolerance, &Sampler) {
            Ok((report, identity)) => {
                c.ok(
                    || format!("uniform k=2 m={m}"),
                    "targets equal dim λ · s_λ(1/2,1/2)",
                    identity,
                );
                for s in &report.shapes {
                    c.check(
                        s.deviation <= tolerance,
                        || format!("p=(1/2,1/2) n={n} m={m} λ={}", s.lambda),
                        format!("{:.5} ± {tolerance}", s.target),
                        format!("{:.5}", s.mean_estimate),
                    );
                }
                c.note(format!("p=(1/2,1/2) m={m}: max deviation {:.5}", report.max_deviation));
            }
            Err(e) => c.error(|| format!("uniform m={m}"), e),
        }
    }
    c.finish()
}

/// Exact `dim Λ^a / dim Λ` against the product formula with `p̂ = λ/n`.
pub fn asymptotics(n: usize, max_m: usize, seeds: &[u64], tolerance: f64) -> SuiteResult {
    let mut c = Checker::new("asymptotics");
    for p in [&[0.7, 0.3][..], &[0.5, 0.3, 0.2][..]] {
        let spec = BernoulliSpec::from_floats(p, &[], 0).expect("probabilities sum to 1");
        match check_asymptotics(&spec, n, max_m, seeds, tolerance, &Sampler) {
            Ok(report) => {
                for r in &report.rows {
                    c.check(
                        r.rel_err_empirical <= tolerance,
                        || format!("p={p:?} n={n} seed={} a={}", r.seed, r.word),
                        format!("{:.6} within {tolerance} relative", r.exact),
                        format!("{:.6}", r.asymp_empirical),
                    );
                }
                c.note(format!(
                    "p={p:?}: max relative error {:.5} with p̂ = λ/n, {:.5} with the sampling p",
                    report.max_rel_err_empirical, report.max_rel_err_true
                ));
            }
            Err(e) => c.error(|| format!("p={p:?}"), e),
        }
    }
    c.finish()
}

/// For mixed words: `Q(w†) = Q(w)^t`, the duality with evacuation, and row and
/// column lengths against brute-force Greene invariants.
pub fn mixed_duality(max_n: usize, greene_n: usize, greene_cases: usize) -> SuiteResult {
    let mut c = Checker::new("mixed-duality");
    for n in 0..=max_n {
        for u in all_words(2, 2, n) {
            let r = rsk_mixed(&u);
            c.eq(|| format!("Q({u}†)"), r.q.transpose(), rsk_mixed(&u.dagger()).q);
            let d = rsk_mixed_star(&u.rev());
            c.eq(|| format!("P of reverse of {u}"), r.p.transpose(), d.p);
            c.eq(
                || format!("Q of reverse of {u}"),
                show(r.q.transpose().evacuation()),
                d.q.to_string(),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let mut words: Vec<Word> = (0..greene_cases)
        .map(|_| {
            let n = rng.gen_range(1..=greene_n);
            random_word(&mut rng, 2, 2, n)
        })
        .collect();
    words.sort_by(|a, b| (a.len(), a.symbols()).cmp(&(b.len(), b.symbols())));
    for u in words {
        let sh = rsk_mixed(&u).shape();
        let rows = sh.num_rows().max(1);
        let cols = sh.num_cols().max(1);
        let partial = |v: Vec<usize>| {
            v.iter()
                .scan(0, |acc, x| {
                    *acc += x;
                    Some(*acc)
                })
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        c.eq(
            || format!("{u}: row sums"),
            partial(sh.rows().to_vec()),
            show(greene_invariants(&u, rows).map(join)),
        );
        c.eq(
            || format!("{u}: column sums"),
            partial(sh.col_lengths()),
            show(greene_invariants_decreasing(&u, cols).map(join)),
        );
    }
    c.finish()
}

/// Structure of the Schur–Weyl graphs: `SW_2` against its `(λ, r)` coding,
/// out-degrees, path counts and the maximal-tableau copy of the Young graph.
pub fn graph(depth: usize) -> SuiteResult {
    let mut c = Checker::new("graph");
    match build(2, 0, depth) {
        Ok(g) => {
            let mut surplus = 0usize;
            for n in 0..=depth {
                let codes: std::result::Result<BTreeSet<Sw2Code>, _> = g.level(n).iter().map(encode_sw2).collect();
                let codes: Vec<String> = match codes {
                    Ok(set) => {
                        c.eq(
                            || format!("SW_2 level {n}: injective coding"),
                            g.level(n).len(),
                            set.len(),
                        );
                        set.iter().map(|x| x.to_string()).collect()
                    }
                    Err(e) => {
                        c.error(|| format!("SW_2 level {n}"), e);
                        continue;
                    }
                };
                let all: Vec<String> = sw2_codes(n).iter().map(|x| x.to_string()).collect();
                c.eq(|| format!("SW_2 level {n}: codes"), all.join(" "), codes.join(" "));
                if n == depth {
                    continue;
                }
                for (i, t) in g.level(n).iter().enumerate() {
                    let Ok(code) = encode_sw2(t) else { continue };
                    let mut actual: Vec<Sw2Code> = g
                        .edges(n)
                        .iter()
                        .filter(|e| e.source == i)
                        .filter_map(|e| encode_sw2(&g.level(n + 1)[e.target]).ok())
                        .collect();
                    actual.sort();
                    let fmt = |v: &[Sw2Code]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                    c.eq(
                        || format!("SW_2 successors of {code}"),
                        fmt(&sw2_successors(&code)),
                        fmt(&actual),
                    );
                    let literal = sw2_literal_successors(&code);
                    c.ok(
                        || format!("SW_2 successors of {code} under the two-clause rule"),
                        "insertion edges are among the two-clause successors",
                        actual.iter().all(|x| literal.contains(x)),
                    );
                    surplus += literal.len() - literal.iter().filter(|x| actual.contains(x)).count();
                }
            }
            c.note(format!(
                "two-clause (λ,r) rule admits {surplus} successors up to level {depth} that no insertion realises"
            ));
        }
        Err(e) => c.error(|| format!("SW_2 to depth {depth}"), e),
    }
    for (k, l, d) in [(2, 0, depth), (3, 0, 6), (1, 1, 6), (2, 1, 5), (0, 2, 6)] {
        let g = match build(k, l, d) {
            Ok(g) => g,
            Err(e) => {
                c.error(|| format!("k={k} l={l} depth={d}"), e);
                continue;
            }
        };
        for n in 0..d {
            for (i, deg) in g.out_degrees(n).into_iter().enumerate() {
                c.eq(
                    || format!("k={k} l={l}: out-degree of {}", g.level(n)[i]),
                    (k + l) as usize,
                    deg,
                );
            }
        }
        for (n, counts) in g.path_counts().iter().enumerate() {
            for (t, count) in g.level(n).iter().zip(counts) {
                c.eq(
                    || format!("k={k} l={l}: paths to {t}"),
                    dim_hook(&t.shape()),
                    count.clone(),
                );
            }
        }
    }
    for (k, d) in [(2u32, depth), (3, 6)] {
        for n in 0..=d {
            for lambda in partitions(n, k as usize) {
                let s = maximal_tableau(&lambda, k, 0);
                let t = s.as_ref().ok();
                let mut is_max = false;
                if let Some(t) = t {
                    let fiber = enumerate_fillings(&lambda, &alphabet(k, 0), TableauKind::Semistandard);
                    is_max = fiber.iter().all(|f| {
                        f.entries().map(Symbol::code).sum::<u32>() <= t.entries().map(Symbol::code).sum::<u32>()
                    });
                }
                c.ok(
                    || format!("k={k}: S_{lambda} = {}", show(s)),
                    "largest entry sum in its fiber",
                    is_max,
                );
            }
        }
        c.eq(
            || format!("k={k}: Young edges missing between maximal tableaux up to {d}"),
            "none".to_string(),
            match maximal_embedding_defects(k, 0, d) {
                Ok(v) if v.is_empty() => "none".to_string(),
                Ok(v) => v.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(" "),
                Err(e) => format!("error: {e}"),
            },
        );
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exact_suites_pass() {
        for r in [
            bijection(&[2, 3], 4),
            duality(3, 4),
            focus(3, 50),
            shape(4),
            vandermonde_suite(20, 4),
            dims(8),
            mixed_duality(4, 8, 30),
            graph(5),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.first_failure());
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn failures_are_recorded_in_order() {
        let mut c = Checker::new("x");
        for i in 0..30 {
            c.eq(|| i.to_string(), 0, i % 2);
        }
        let r = c.finish();
        assert_eq!(r.cases, 30);
        assert_eq!(r.failure_count, 15);
        assert_eq!(r.failures.len(), MAX_RECORDED_FAILURES.min(15));
        assert_eq!(r.first_failure().unwrap().input, "1");
        assert!(!r.passed());
    }

    #[test]
    fn inverse_rsk_round_trip() {
        let w: Word = "2,1,2".parse().unwrap();
        let pair = rsk(&w).unwrap();
        assert_eq!(inverse_rsk(&pair.p, &pair.q, 2).unwrap(), w);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope"), Err(Error::Config { .. })));
    }
}
