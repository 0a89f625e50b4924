//! The Schur–Weyl graded graph built level by level by row insertion, its
//! covering of the Young graph, the two-letter `(λ, r)` coding, the
//! maximal-tableau embedding and the word ↔ path identification.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rsk::rsk_with_cells;
use crate::tableau::{
    alphabet, enumerate_fillings, hook_partitions, insert_into_rows, InsertionRule, Symbol, Tableau, TableauKind, Word,
    YoungDiagram,
};
use crate::young::hook_schur;

/// Upper bound on the total number of vertices `build` will materialize.
pub const MAX_GRAPH_VERTICES: usize = 2_000_000;

/// An edge from level `n` to level `n + 1`, labelled by the inserted letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub label: Symbol,
    pub target: usize,
}

/// Levels `0..=depth` of the Schur–Weyl graph over `A_k ∪ A*_ℓ`.
///
/// Vertices of each level are sorted; `edges[n]` joins level `n` to `n + 1`
/// and is ordered by source, then label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedGraph {
    k: u32,
    l: u32,
    levels: Vec<Vec<Tableau>>,
    edges: Vec<Vec<Edge>>,
}

fn kind_and_rule(l: u32) -> (TableauKind, InsertionRule) {
    if l == 0 {
        (TableauKind::Semistandard, InsertionRule::Row)
    } else {
        (TableauKind::Hook, InsertionRule::Mixed)
    }
}

/// Children of `t`, one per letter of the alphabet, in letter order.
pub fn children(t: &Tableau, k: u32, l: u32) -> Vec<(Symbol, Tableau)> {
    let (kind, rule) = kind_and_rule(l);
    alphabet(k, l)
        .into_iter()
        .map(|s| {
            let mut rows = t.rows().to_vec();
            insert_into_rows(&mut rows, s, rule);
            (s, Tableau::from_rows_unchecked(rows, kind))
        })
        .collect()
}

/// Number of vertices at level `n`: tableaux with `n` cells over `A_k ∪ A*_ℓ`.
pub fn level_size(k: u32, l: u32, n: usize) -> BigUint {
    let ones_a = vec![BigRational::one(); k as usize];
    let ones_b = vec![BigRational::one(); l as usize];
    hook_partitions(n, k as usize, l as usize)
        .iter()
        .map(|lambda| hook_schur(lambda, &ones_a, &ones_b).to_integer().magnitude().clone())
        .sum()
}

/// Builds levels `0..=depth` of `SW_k` (or the mixed graph when `l > 0`).
pub fn build(k: u32, l: u32, depth: usize) -> Result<GradedGraph> {
    let mut predicted = BigUint::zero();
    for n in 0..=depth {
        predicted += level_size(k, l, n);
        if predicted > BigUint::from(MAX_GRAPH_VERTICES) {
            return Err(Error::Guard(format!(
                "levels 0..={n} hold more than {MAX_GRAPH_VERTICES} vertices"
            )));
        }
    }
    let (kind, _) = kind_and_rule(l);
    let mut levels = vec![vec![Tableau::empty(kind)]];
    let mut edges = Vec::with_capacity(depth);
    for _ in 0..depth {
        let current = levels.last().expect("level 0 exists");
        let raw: Vec<(usize, Symbol, Tableau)> = current
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, t)| children(t, k, l).into_iter().map(move |(s, c)| (i, s, c)))
            .collect();
        let mut next: Vec<Tableau> = raw.iter().map(|(_, _, c)| c.clone()).collect();
        next.par_sort_unstable();
        next.dedup();
        let level_edges = raw
            .into_iter()
            .map(|(source, label, c)| Edge {
                source,
                label,
                target: next.binary_search(&c).expect("child was collected"),
            })
            .collect();
        edges.push(level_edges);
        levels.push(next);
    }
    Ok(GradedGraph { k, l, levels, edges })
}

impl GradedGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[Tableau] {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Vec<Tableau>] {
        &self.levels
    }

    /// Edges from level `n` to level `n + 1`.
    pub fn edges(&self, n: usize) -> &[Edge] {
        &self.edges[n]
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn find(&self, t: &Tableau) -> Option<(usize, usize)> {
        let n = t.size();
        self.levels.get(n)?.binary_search(t).ok().map(|i| (n, i))
    }

    /// Out-degree of every vertex below the top level.
    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; self.levels[n].len()];
        for e in &self.edges[n] {
            deg[e.source] += 1;
        }
        deg
    }

    /// Number of paths from `∅` to each vertex, level by level.
    pub fn path_counts(&self) -> Vec<Vec<BigUint>> {
        let mut counts = vec![vec![BigUint::one()]];
        for (n, level_edges) in self.edges.iter().enumerate() {
            let mut next = vec![BigUint::default(); self.levels[n + 1].len()];
            for e in level_edges {
                next[e.target] += &counts[n][e.source];
            }
            counts.push(next);
        }
        counts
    }

    /// Line-oriented export: `v <level> <index> <tableau>` and
    /// `e <level> <source> <label> <target>`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# schur-weyl graph k={} l={} depth={}\n", self.k, self.l, self.depth());
        for (n, level) in self.levels.iter().enumerate() {
            for (i, t) in level.iter().enumerate() {
                writeln!(out, "v {n} {i} {t}").expect("writing to a String");
            }
        }
        for (n, level_edges) in self.edges.iter().enumerate() {
            for e in level_edges {
                writeln!(out, "e {n} {} {} {}", e.source, e.label, e.target).expect("writing to a String");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }
}

/// `sh(t)`.
pub fn project(t: &Tableau) -> YoungDiagram {
    t.shape()
}

/// All tableaux of shape `λ` over `A_k ∪ A*_ℓ`.
pub fn fiber(lambda: &YoungDiagram, k: u32, l: u32) -> Vec<Tableau> {
    let (kind, _) = kind_and_rule(l);
    enumerate_fillings(lambda, &alphabet(k, l), kind)
}

/// Diagrams by level, and edges `(i, j)` from level `n` index `i` to level `n + 1` index `j`.
pub type YoungLevels = (Vec<Vec<YoungDiagram>>, Vec<Vec<(usize, usize)>>);

/// Levels of the Young graph restricted to the `(k, ℓ)` hook, with cover edges.
pub fn young_levels(k: usize, l: usize, depth: usize) -> YoungLevels {
    let levels: Vec<Vec<YoungDiagram>> = (0..=depth)
        .map(|n| {
            let mut v = hook_partitions(n, k, l);
            v.sort();
            v
        })
        .collect();
    let edges = (0..depth)
        .map(|n| {
            let mut out = Vec::new();
            for (i, a) in levels[n].iter().enumerate() {
                for (j, b) in levels[n + 1].iter().enumerate() {
                    if a.is_covered_by(b) {
                        out.push((i, j));
                    }
                }
            }
            out
        })
        .collect();
    (levels, edges)
}

/// A vertex of `SW_2` as a diagram with at most two rows and `0 ≤ r ≤ λ_1 - λ_2`.
///
/// `r` counts the `1`s in the first row beyond column `λ_2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sw2Code {
    pub lambda: YoungDiagram,
    pub r: usize,
}

impl Sw2Code {
    pub fn new(lambda: YoungDiagram, r: usize) -> Result<Self> {
        if lambda.num_rows() > 2 {
            return Err(Error::Diagram(format!("{lambda} has more than two rows")));
        }
        if r > excess(&lambda) {
            return Err(Error::Diagram(format!("r = {r} exceeds λ1 - λ2 for {lambda}")));
        }
        Ok(Sw2Code { lambda, r })
    }

    /// `k(λ) = λ_1 - λ_2`.
    pub fn excess(&self) -> usize {
        excess(&self.lambda)
    }
}

fn excess(lambda: &YoungDiagram) -> usize {
    lambda.row(1) - lambda.row(2)
}

impl fmt::Display for Sw2Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.r)
    }
}

/// All codes of level `n`.
pub fn sw2_codes(n: usize) -> Vec<Sw2Code> {
    let mut out: Vec<Sw2Code> = crate::tableau::partitions(n, 2)
        .into_iter()
        .flat_map(|lambda| {
            (0..=excess(&lambda)).map(move |r| Sw2Code {
                lambda: lambda.clone(),
                r,
            })
        })
        .collect();
    out.sort();
    out
}

pub fn encode_sw2(t: &Tableau) -> Result<Sw2Code> {
    let two_letter = t.entries().all(|s| !s.is_starred() && s.index() <= 2);
    if t.kind() != TableauKind::Semistandard || !two_letter || t.num_rows() > 2 {
        return Err(Error::Kind {
            expected: "semistandard over {1,2}",
            reason: format!("got {t}"),
        });
    }
    let lambda = t.shape();
    let r = t
        .rows()
        .first()
        .map_or(0, |row| row[lambda.row(2)..].iter().filter(|s| s.index() == 1).count());
    Sw2Code::new(lambda, r)
}

pub fn decode_sw2(code: &Sw2Code) -> Tableau {
    let (l1, l2) = (code.lambda.row(1), code.lambda.row(2));
    let mut rows = Vec::new();
    if l1 > 0 {
        let ones = l2 + code.r;
        let mut row = vec![Symbol::row(1); ones];
        row.resize(l1, Symbol::row(2));
        rows.push(row);
    }
    if l2 > 0 {
        rows.push(vec![Symbol::row(2); l2]);
    }
    Tableau::new(rows, TableauKind::Semistandard).expect("decoded rows are semistandard")
}

/// Successors allowed by the two-clause rule: `s ∈ {r, r+1}` when `k` grows,
/// `s = r` when `k` shrinks.
pub fn sw2_literal_successors(code: &Sw2Code) -> Vec<Sw2Code> {
    let mut out = Vec::new();
    for mu in code.lambda.addable().into_iter().filter(|c| c.row <= 2) {
        let Some(shape) = code.lambda.add_to_row(mu.row) else {
            continue;
        };
        let candidates: &[usize] = if excess(&shape) > code.excess() {
            &[code.r, code.r + 1]
        } else {
            &[code.r]
        };
        for &s in candidates {
            if let Ok(c) = Sw2Code::new(shape.clone(), s) {
                out.push(c);
            }
        }
    }
    out.sort();
    out
}

/// Successors realised by insertion: inserting `2` grows `k` keeping `r`;
/// inserting `1` grows `k` with `s = r + 1` when no `2` is free in row 1, and
/// otherwise shrinks `k` keeping `r`.
pub fn sw2_successors(code: &Sw2Code) -> Vec<Sw2Code> {
    let (l1, l2) = (code.lambda.row(1), code.lambda.row(2));
    let grow = |r| Sw2Code {
        lambda: YoungDiagram::new(vec![l1 + 1, l2]).expect("adding to row 1"),
        r,
    };
    let mut out = vec![grow(code.r)];
    if code.r == code.excess() {
        out.push(grow(code.r + 1));
    } else {
        out.push(Sw2Code {
            lambda: YoungDiagram::new(vec![l1, l2 + 1]).expect("row 2 shorter than row 1"),
            r: code.r,
        });
    }
    out.sort();
    out
}

/// `S_λ`: in the top `k` rows each column of height `i` reads `k-i+1, …, k`;
/// a row `k + j` of length `ρ` below them reads `ℓ*, (ℓ-1)*, …, (ℓ-ρ+1)*`.
pub fn maximal_tableau(lambda: &YoungDiagram, k: u32, l: u32) -> Result<Tableau> {
    if !lambda.fits_hook(k as usize, l as usize) {
        return Err(Error::Diagram(format!("{lambda} does not fit the ({k},{l}) hook")));
    }
    let k_us = k as usize;
    let top_cols = YoungDiagram::new(lambda.rows().iter().take(k_us).copied().collect())?.col_lengths();
    let mut rows = Vec::with_capacity(lambda.num_rows());
    for (i, &len) in lambda.rows().iter().enumerate() {
        let row: Vec<Symbol> = if i < k_us {
            (0..len)
                .map(|j| Symbol::row(k - top_cols[j] as u32 + i as u32 + 1))
                .collect()
        } else {
            (0..len).map(|j| Symbol::col(l - j as u32)).collect()
        };
        rows.push(row);
    }
    let (kind, _) = kind_and_rule(l);
    Tableau::new(rows, kind)
}

/// Young-graph edges `λ → μ` up to `depth` for which `S_μ` is not a child of `S_λ`.
///
/// Empty exactly when `λ ↦ S_λ` embeds the hook Young graph as a subgraph.
pub fn maximal_embedding_defects(k: u32, l: u32, depth: usize) -> Result<Vec<(YoungDiagram, YoungDiagram)>> {
    let (levels, edges) = young_levels(k as usize, l as usize, depth);
    let mut defects = Vec::new();
    for (n, level_edges) in edges.iter().enumerate() {
        for &(i, j) in level_edges {
            let (lambda, mu) = (&levels[n][i], &levels[n + 1][j]);
            let s_lambda = maximal_tableau(lambda, k, l)?;
            let s_mu = maximal_tableau(mu, k, l)?;
            if !children(&s_lambda, k, l).iter().any(|(_, c)| c.rows() == s_mu.rows()) {
                defects.push((lambda.clone(), mu.clone()));
            }
        }
    }
    Ok(defects)
}

/// The path `P([w]_0), P([w]_1), …, P(w)`.
pub fn word_to_path(w: &Word) -> Vec<Tableau> {
    let (kind, rule) = kind_and_rule(w.l());
    let mut rows: Vec<Vec<Symbol>> = Vec::new();
    let mut path = vec![Tableau::empty(kind)];
    for &s in w.symbols() {
        insert_into_rows(&mut rows, s, rule);
        path.push(Tableau::from_rows_unchecked(rows.clone(), kind));
    }
    path
}

/// Recovers the edge labels of a path, checking every step is an edge.
pub fn path_to_word(path: &[Tableau], k: u32, l: u32) -> Result<Word> {
    let first = path.first().ok_or_else(|| Error::Path("a path starts at ∅".into()))?;
    if !first.is_empty() {
        return Err(Error::Path(format!("path starts at {first}, not ∅")));
    }
    let mut symbols = Vec::with_capacity(path.len() - 1);
    for (n, pair) in path.windows(2).enumerate() {
        let mut after = pair[1].content();
        for s in pair[0].content() {
            match after.iter().position(|&x| x == s) {
                Some(i) => {
                    after.swap_remove(i);
                }
                None => return Err(Error::Path(format!("step {n}: {} is not below {}", pair[0], pair[1]))),
            }
        }
        let [label] = after[..] else {
            return Err(Error::Path(format!("step {n}: levels differ by {} cells", after.len())));
        };
        if !children(&pair[0], k, l)
            .iter()
            .any(|(s, c)| *s == label && c.rows() == pair[1].rows())
        {
            return Err(Error::Path(format!(
                "step {n}: {} -{label}-> {} is not an edge",
                pair[0], pair[1]
            )));
        }
        symbols.push(label);
    }
    Word::new(k, l, symbols)
}

/// Vertex at step `n` of the path of `w`, without materializing the path.
pub fn path_vertex(w: &Word, n: usize) -> Tableau {
    let (_, rule) = kind_and_rule(w.l());
    let (pair, _) = rsk_with_cells(&w.prefix(n), rule);
    let (kind, _) = kind_and_rule(w.l());
    Tableau::from_rows_unchecked(pair.p.rows().to_vec(), kind)
}
