//! Pentagonal and heptagonal inequalities, and searches for their violations.
//!
//! For integers `b_1, ..., b_n` summing to 1 (or -1, which gives the same
//! inequality) the hypermetric inequality reads `sum_{i<j} b_i b_j d_ij <= 0`. Grouping pairs by sign, it says that the
//! distances inside the positive and negative groups (`lhs`) do not exceed the
//! distances across them (`rhs`). Every l1-embeddable metric satisfies it.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::metrics::{distances_from, DistanceMatrix, INF};
use crate::skeletons::Skeleton;

#[derive(Debug, thiserror::Error)]
pub enum HypermetricError {
    #[error("unsupported gonality {0}; use 5 or 7")]
    Gonality(usize),
    #[error("tuple has {got} vertices, b-vector has {expected}")]
    Length { expected: usize, got: usize },
    #[error("vertex {0} repeated in tuple")]
    Repeated(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("b-vector sums to {0}, not 1 or -1")]
    Sum(i64),
    #[error("vertices {0} and {1} are disconnected")]
    Disconnected(usize, usize),
    #[error("tuple budget of {0} exceeded")]
    Budget(u64),
}

/// Integer coefficients of a hypermetric inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BVector(pub Vec<i64>);

impl BVector {
    /// `(1,1,-1,-1,-1)` for k = 5 and `(1,1,1,-1,-1,-1,-1)` for k = 7.
    pub fn gonal(k: usize) -> Result<Self, HypermetricError> {
        if k != 5 && k != 7 {
            return Err(HypermetricError::Gonality(k));
        }
        let pos = (k - 1) / 2;
        Ok(BVector((0..k).map(|i| if i < pos { 1 } else { -1 }).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A tuple violating a hypermetric inequality, with the distances among its
/// vertices so it can be rechecked without the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationCertificate {
    pub tuple: Vec<usize>,
    pub b: BVector,
    pub lhs: i64,
    pub rhs: i64,
    pub distances: Vec<Vec<u16>>,
}

impl ViolationCertificate {
    /// Rechecks the inequality from the embedded distances.
    pub fn is_consistent(&self) -> bool {
        let k = self.tuple.len();
        if self.b.len() != k || self.distances.len() != k || self.distances.iter().any(|r| r.len() != k) {
            return false;
        }
        if self.b.0.iter().sum::<i64>().abs() != 1 {
            return false;
        }
        let (lhs, rhs) = sides(&self.b.0, |i, j| self.distances[i][j]);
        lhs == self.lhs && rhs == self.rhs && lhs > rhs
    }

    /// Rechecks against a distance matrix of the whole graph.
    pub fn recheck(&self, d: &DistanceMatrix) -> bool {
        self.tuple.iter().all(|&v| v < d.n())
            && self.is_consistent()
            && d.submatrix(&self.tuple) == self.distances
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Same-sign and opposite-sign sums of `|b_i b_j| d_ij`.
fn sides(b: &[i64], d: impl Fn(usize, usize) -> u16) -> (i64, i64) {
    let (mut lhs, mut rhs) = (0, 0);
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let w = b[i] * b[j] * d(i, j) as i64;
            if w > 0 {
                lhs += w;
            } else {
                rhs -= w;
            }
        }
    }
    (lhs, rhs)
}

/// Evaluates the inequality for `tuple` weighted by `b`; returns a certificate
/// if it fails.
pub fn kgonal_check(
    d: &DistanceMatrix,
    tuple: &[usize],
    b: &BVector,
) -> Result<Option<ViolationCertificate>, HypermetricError> {
    if tuple.len() != b.len() {
        return Err(HypermetricError::Length { expected: b.len(), got: tuple.len() });
    }
    let sum: i64 = b.0.iter().sum();
    if sum.abs() != 1 {
        return Err(HypermetricError::Sum(sum));
    }
    for (i, &u) in tuple.iter().enumerate() {
        if u >= d.n() {
            return Err(HypermetricError::OutOfRange(u));
        }
        if tuple[..i].contains(&u) {
            return Err(HypermetricError::Repeated(u));
        }
        for &v in &tuple[..i] {
            if d.get(u, v) == INF {
                return Err(HypermetricError::Disconnected(v, u));
            }
        }
    }
    let distances = d.submatrix(tuple);
    let (lhs, rhs) = sides(&b.0, |i, j| distances[i][j]);
    Ok((lhs > rhs).then(|| ViolationCertificate { tuple: tuple.to_vec(), b: b.clone(), lhs, rhs, distances }))
}

/// Splits of `0..k` into a positive group of size `(k-1)/2` and the rest, in
/// lexicographic order of the positive group.
fn splits(k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let pos = (k - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u32..1 << k {
        if mask.count_ones() as usize == pos {
            let p: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let n: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
            out.push((p, n));
        }
    }
    out.sort();
    out
}

/// Distances among a list of candidate vertices.
#[derive(Debug, Clone)]
pub struct LocalMetric {
    pub vertices: Vec<usize>,
    d: Vec<Vec<u16>>,
}

impl LocalMetric {
    pub fn new(g: &Skeleton, vertices: Vec<usize>) -> Self {
        let rows = distances_from(g, &vertices);
        let d = rows.iter().map(|r| vertices.iter().map(|&v| r[v]).collect()).collect();
        LocalMetric { vertices, d }
    }

    pub fn from_matrix(d: &DistanceMatrix) -> Self {
        let vertices: Vec<usize> = (0..d.n()).collect();
        LocalMetric { d: d.submatrix(&vertices), vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.d[i][j]
    }
}

/// Lexicographic enumeration of k-subsets of `0..n` (local indices), optionally
/// only those whose pairwise distances are at most 2.
pub struct Subsets<'a> {
    metric: &'a LocalMetric,
    k: usize,
    close_only: bool,
    stack: Vec<usize>,
    /// Number of leading elements that stay fixed.
    floor: usize,
    started: bool,
    done: bool,
}

impl<'a> Subsets<'a> {
    pub fn new(metric: &'a LocalMetric, k: usize, close_only: bool) -> Self {
        let done = k == 0 || k > metric.len();
        Subsets { metric, k, close_only, stack: Vec::with_capacity(k), floor: 0, started: false, done }
    }

    /// Subsets whose smallest element is `first`.
    pub fn starting_at(metric: &'a LocalMetric, k: usize, close_only: bool, first: usize) -> Self {
        let mut s = Subsets::new(metric, k, close_only);
        s.done |= first >= metric.len();
        s.stack.push(first);
        s.floor = 1;
        s
    }

    fn fits(&self, c: usize) -> bool {
        !self.close_only || self.stack.iter().all(|&u| self.metric.get(u, c) <= 2)
    }

    /// Extends the stack to the next admissible full subset, trying elements
    /// from `from` upwards and backtracking as needed.
    fn advance(&mut self, mut from: usize) -> bool {
        let n = self.metric.len();
        while self.stack.len() < self.k {
            let need = self.k - self.stack.len();
            match (from..n).take_while(|&c| n - c >= need).find(|&c| self.fits(c)) {
                Some(c) => {
                    self.stack.push(c);
                    from = c + 1;
                }
                None => {
                    if self.stack.len() <= self.floor {
                        return false;
                    }
                    from = self.stack.pop().unwrap() + 1;
                }
            }
        }
        true
    }
}

impl Iterator for Subsets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let from = if !self.started {
            self.started = true;
            self.stack.last().map_or(0, |&x| x + 1)
        } else if self.stack.len() > self.floor {
            self.stack.pop().unwrap() + 1
        } else {
            self.done = true;
            return None;
        };
        if self.advance(from) {
            Some(self.stack.clone())
        } else {
            self.done = true;
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the first violation.
    First,
    /// Every violation, exhaustively.
    All,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub k: usize,
    pub mode: SearchMode,
    /// Candidate vertices; `None` means the core (all vertices if no core).
    pub restrict_to: Option<Vec<usize>>,
    /// Maximum number of vertex subsets examined.
    pub budget: u64,
}

pub const DEFAULT_TUPLE_BUDGET: u64 = 2_000_000_000;

impl SearchOptions {
    pub fn first(k: usize) -> Self {
        SearchOptions { k, mode: SearchMode::First, restrict_to: None, budget: DEFAULT_TUPLE_BUDGET }
    }

    pub fn all(k: usize) -> Self {
        SearchOptions { k, mode: SearchMode::All, restrict_to: None, budget: DEFAULT_TUPLE_BUDGET }
    }
}

/// Violations in one subset, as certificates over local indices mapped back to
/// vertices; positives first, each group ascending.
fn subset_violations(metric: &LocalMetric, subset: &[usize], splits: &[(Vec<usize>, Vec<usize>)]) -> Vec<ViolationCertificate> {
    let k = subset.len();
    let b = BVector::gonal(k).expect("k is 5 or 7");
    let mut out = Vec::new();
    for (pos, neg) in splits {
        let order: Vec<usize> = pos.iter().chain(neg).map(|&i| subset[i]).collect();
        if order.iter().enumerate().any(|(i, &u)| order[..i].iter().any(|&v| metric.get(u, v) == INF)) {
            continue;
        }
        let (lhs, rhs) = sides(&b.0, |i, j| metric.get(order[i], order[j]));
        if lhs > rhs {
            let distances = order.iter().map(|&u| order.iter().map(|&v| metric.get(u, v)).collect()).collect();
            let tuple = order.iter().map(|&i| metric.vertices[i]).collect();
            out.push(ViolationCertificate { tuple, b: b.clone(), lhs, rhs, distances });
        }
    }
    out
}

/// All violations in lexicographic order of (subset, positive group). With
/// `close_only` only subsets of pairwise distance at most 2 are visited.
pub fn violations<'a>(metric: &'a LocalMetric, k: usize, close_only: bool) -> impl Iterator<Item = ViolationCertificate> + 'a {
    let sp = splits(k);
    Subsets::new(metric, k, close_only).flat_map(move |s| subset_violations(metric, &s, &sp))
}

/// Searches the graph for violated k-gonal inequalities.
///
/// `First` mode visits subsets of pairwise distance at most 2 before all
/// others and returns the earliest violation in that order; `All` mode is an
/// unpruned exhaustive enumeration.
pub fn find_violation(g: &Skeleton, opts: &SearchOptions) -> Result<Vec<ViolationCertificate>, HypermetricError> {
    if opts.k != 5 && opts.k != 7 {
        return Err(HypermetricError::Gonality(opts.k));
    }
    let candidates = opts.restrict_to.clone().unwrap_or_else(|| g.core_vertices());
    if let Some(&v) = candidates.iter().find(|&&v| v >= g.n) {
        return Err(HypermetricError::OutOfRange(v));
    }
    let metric = LocalMetric::new(g, candidates);
    search(&metric, opts)
}

pub fn search(metric: &LocalMetric, opts: &SearchOptions) -> Result<Vec<ViolationCertificate>, HypermetricError> {
    let k = opts.k;
    let sp = splits(k);
    match opts.mode {
        SearchMode::First => {
            let mut examined = 0u64;
            for close_only in [true, false] {
                for s in Subsets::new(metric, k, close_only) {
                    examined += 1;
                    if examined > opts.budget {
                        return Err(HypermetricError::Budget(opts.budget));
                    }
                    if let Some(c) = subset_violations(metric, &s, &sp).into_iter().next() {
                        return Ok(vec![c]);
                    }
                }
            }
            Ok(Vec::new())
        }
        SearchMode::All => {
            let examined = AtomicU64::new(0);
            let per_first: Vec<Option<Vec<ViolationCertificate>>> = (0..metric.len())
                .into_par_iter()
                .map(|first| {
                    let mut found = Vec::new();
                    for s in Subsets::starting_at(metric, k, false, first) {
                        if examined.fetch_add(1, Ordering::Relaxed) >= opts.budget {
                            return None;
                        }
                        found.extend(subset_violations(metric, &s, &sp));
                    }
                    Some(found)
                })
                .collect();
            let mut out = Vec::new();
            for part in per_first {
                out.extend(part.ok_or(HypermetricError::Budget(opts.budget))?);
            }
            Ok(out)
        }
    }
}

/// An induced `K5 - K3`: an edge `ab` with three pairwise non-adjacent common
/// neighbours `x, y, z`, giving `lhs = 1 + 2 + 2 + 2 = 7` against `rhs = 6`.
/// Edges are tried in lexicographic order.
pub fn induced_k5_minus_k3(g: &Skeleton) -> Option<ViolationCertificate> {
    let b5 = BVector::gonal(5).expect("5 is supported");
    for (a, b) in g.edges() {
        let common: Vec<usize> = g.adj[a].iter().copied().filter(|&w| g.has_edge(w, b)).collect();
        for (i, &x) in common.iter().enumerate() {
            for (j, &y) in common.iter().enumerate().skip(i + 1) {
                if g.has_edge(x, y) {
                    continue;
                }
                if let Some(&z) = common[j + 1..].iter().find(|&&z| !g.has_edge(x, z) && !g.has_edge(y, z)) {
                    let tuple = [a, b, x, y, z];
                    let distances: Vec<Vec<u16>> = tuple
                        .iter()
                        .map(|&u| tuple.iter().map(|&v| if u == v { 0 } else if g.has_edge(u, v) { 1 } else { 2 }).collect())
                        .collect();
                    let (lhs, rhs) = sides(&b5.0, |i, j| distances[i][j]);
                    return Some(ViolationCertificate { tuple: tuple.to_vec(), b: b5, lhs, rhs, distances });
                }
            }
        }
    }
    None
}

/// A 5-gonal violation `(a, b, x, y, z)` with `a`, `b` non-adjacent, `x`, `y`,
/// `z` common neighbours of both, `x ~ y`, and `z` adjacent to neither `x`
/// nor `y`. Then `lhs = 2 + 1 + 2 + 2 = 7` against `rhs = 6`. Partners `b` and
/// the triple are tried in increasing order.
pub fn apex_pair_violation(g: &Skeleton, a: usize) -> Option<ViolationCertificate> {
    let da = distances_from(g, &[a]).pop()?;
    let b5 = BVector::gonal(5).expect("5 is supported");
    for b in (0..g.n).filter(|&b| da[b] == 2) {
        let common: Vec<usize> = g.adj[a].iter().copied().filter(|&w| g.has_edge(w, b)).collect();
        for (i, &x) in common.iter().enumerate() {
            for &y in common[i + 1..].iter().filter(|&&y| g.has_edge(x, y)) {
                let z = common.iter().copied().find(|&z| z != x && z != y && !g.has_edge(x, z) && !g.has_edge(y, z));
                if let Some(z) = z {
                    let tuple = [a, b, x, y, z];
                    let rows = distances_from(g, &tuple);
                    let distances: Vec<Vec<u16>> = rows.iter().map(|r| tuple.iter().map(|&v| r[v]).collect()).collect();
                    let (lhs, rhs) = sides(&b5.0, |i, j| distances[i][j]);
                    return Some(ViolationCertificate { tuple: tuple.to_vec(), b: b5, lhs, rhs, distances });
                }
            }
        }
    }
    None
}
