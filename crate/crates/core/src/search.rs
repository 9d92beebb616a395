//! Exact search for good colorings, Ramsey-Turán and Ramsey values, and the
//! color-sum oracle, all returning checkable certificates.
//!
//! The decision search colors the host edges depth-first in lexicographic
//! order. Each edge takes one of the colors already in use or a single fresh
//! color, which removes the color-renaming symmetry exactly. Branches are cut
//! when
//!
//! * the new edge completes a monochromatic copy of the pattern,
//! * the constraint can no longer hold: color degrees only grow, and every
//!   non-isolated vertex ends with at least one color, so
//!   `Σ_v max(c(v), [deg v > 0])` is an admissible lower bound on the final
//!   color sum,
//! * at shallow depth, the partially colored host is isomorphic to one seen
//!   before (uncolored edges carry a fixed marker, so an isomorphism maps
//!   completions to completions).

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::canon::{self, LabelMatrix, UNCOLORED};
use crate::choose2;
use crate::coloring::{mean_within, ColoredGraph, ColoringConstraint, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{find_subgraph_within, Graph, VertexSet};

pub const ENGINE_VERSION: &str = concat!("meanrt-", env!("CARGO_PKG_VERSION"));

/// Hard ceiling for the decision search: every color id must fit one word.
const HARD_MAX_HOST_VERTICES: usize = 11;

/// Budgets and parallelism for the exact searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest host graph accepted by [`exists_good_coloring`].
    pub max_host_vertices: usize,
    /// Largest `n` accepted by [`rt_exact`].
    pub rt_max_vertices: usize,
    /// Node limit for a single decision search.
    pub max_nodes: u64,
    /// Partial colorings with at most this many colored edges are deduplicated
    /// up to isomorphism.
    pub iso_depth: usize,
    /// Worker threads for [`rt_exact`]; results do not depend on it.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_host_vertices: 10, rt_max_vertices: 8, max_nodes: 20_000_000_000, iso_depth: 12, threads: 1 }
    }
}

/// Counters reported by a search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned_pattern: u64,
    pub pruned_constraint: u64,
    pub pruned_isomorph: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.pruned_pattern += other.pruned_pattern;
        self.pruned_constraint += other.pruned_constraint;
        self.pruned_isomorph += other.pruned_isomorph;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// `value` is the edge count of a good witness coloring.
    LowerBoundWitness,
    /// Exhaustive search refuted every graph with more than `value` edges;
    /// the witness attains `value`.
    ExhaustiveUpperBound,
    /// Least `n` with no good coloring of `K_n`; the witness colors `K_{n-1}`.
    RamseyValue,
    /// Exact minimum of an exhaustive oracle; the witness attains it.
    OracleValue,
}

impl CertificateKind {
    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::LowerBoundWitness => "LowerBoundWitness",
            CertificateKind::ExhaustiveUpperBound => "ExhaustiveUpperBound",
            CertificateKind::RamseyValue => "RamseyValue",
            CertificateKind::OracleValue => "OracleValue",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            CertificateKind::LowerBoundWitness,
            CertificateKind::ExhaustiveUpperBound,
            CertificateKind::RamseyValue,
            CertificateKind::OracleValue,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

/// Search parameters and statistics behind a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attestation {
    pub n: usize,
    pub pattern: Graph,
    /// `None` for oracle runs, which range over all colorings.
    pub constraint: Option<ColoringConstraint>,
    pub stats: SearchStats,
    pub graphs_examined: u64,
    pub search_space: String,
    pub engine_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub value: u64,
    pub witness: Option<ColoredGraph>,
    pub attestation: Attestation,
}

/// A good coloring of `g`: satisfies `constraint` and has no monochromatic `h`.
pub fn exists_good_coloring(g: &Graph, h: &Graph, constraint: &ColoringConstraint) -> Result<Option<EdgeColoring>> {
    exists_good_coloring_with(g, h, constraint, &SearchConfig::default()).map(|r| r.0)
}

pub fn exists_good_coloring_with(
    g: &Graph,
    h: &Graph,
    constraint: &ColoringConstraint,
    config: &SearchConfig,
) -> Result<(Option<EdgeColoring>, SearchStats)> {
    let limit = config.max_host_vertices.min(HARD_MAX_HOST_VERTICES);
    if g.n() > limit {
        return Err(Error::budget(format!("host graph has {} vertices, search budget is {limit}", g.n())));
    }
    if h.edge_count() == 0 {
        return Err(Error::invalid("pattern graph must have at least one edge"));
    }
    let mut d = Decider::new(g, h, *constraint, config);
    let found = d.dfs(0)?;
    let coloring = found.then(|| EdgeColoring::new(g.clone(), d.colors.clone()).expect("complete assignment"));
    Ok((coloring, d.stats))
}

struct Decider<'a> {
    n: usize,
    edges: Vec<(usize, usize)>,
    pattern: &'a Graph,
    /// `Some(s)` when the pattern is `K_s`.
    clique: Option<usize>,
    constraint: ColoringConstraint,
    max_colors: usize,
    nonisolated: Vec<bool>,
    class_adj: Vec<Vec<u64>>,
    vcolors: Vec<u64>,
    colors: Vec<u32>,
    q: usize,
    sum_lower: i64,
    seen: HashSet<Vec<u8>>,
    iso_depth: usize,
    max_nodes: u64,
    stats: SearchStats,
}

impl<'a> Decider<'a> {
    fn new(g: &Graph, pattern: &'a Graph, constraint: ColoringConstraint, config: &SearchConfig) -> Self {
        let edges: Vec<_> = g.edges().collect();
        let n = g.n();
        let nonisolated: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
        let is_clique = pattern.edge_count() == choose2(pattern.n());
        let max_colors = match constraint {
            ColoringConstraint::ExactlyKColors(k) => k.min(64),
            _ => 64,
        };
        Decider {
            n,
            pattern,
            clique: is_clique.then_some(pattern.n()),
            constraint,
            max_colors,
            sum_lower: nonisolated.iter().filter(|&&b| b).count() as i64,
            nonisolated,
            class_adj: Vec::new(),
            vcolors: vec![0; n],
            colors: vec![0; edges.len()],
            edges,
            q: 0,
            seen: HashSet::new(),
            iso_depth: config.iso_depth,
            max_nodes: config.max_nodes,
            stats: SearchStats::default(),
        }
    }

    fn dfs(&mut self, depth: usize) -> Result<bool> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.max_nodes {
            return Err(Error::budget(format!("search exceeded {} nodes", self.max_nodes)));
        }
        if depth == self.edges.len() {
            return Ok(true);
        }
        if depth > 0 && depth <= self.iso_depth && !self.seen.insert(self.partial_code(depth)) {
            self.stats.pruned_isomorph += 1;
            return Ok(false);
        }
        let (u, v) = self.edges[depth];
        let fresh_allowed = self.q < self.max_colors;
        let top = if fresh_allowed { self.q + 1 } else { self.q };
        for c in 0..top {
            let bit = 1u64 << c;
            let cu = self.vcolors[u].count_ones() as i64;
            let cv = self.vcolors[v].count_ones() as i64;
            let nu = cu + i64::from(self.vcolors[u] & bit == 0);
            let nv = cv + i64::from(self.vcolors[v] & bit == 0);
            if !self.constraint_ok(u, v, cu, cv, nu, nv) {
                self.stats.pruned_constraint += 1;
                continue;
            }
            if self.completes_pattern(c, u, v) {
                self.stats.pruned_pattern += 1;
                continue;
            }
            let delta = self.lower_delta(u, cu, nu) + self.lower_delta(v, cv, nv);
            let (old_u, old_v) = (self.vcolors[u], self.vcolors[v]);
            if c == self.q {
                self.class_adj.push(vec![0; self.n]);
                self.q += 1;
            }
            self.class_adj[c][u] |= 1u64 << v;
            self.class_adj[c][v] |= 1u64 << u;
            self.vcolors[u] |= bit;
            self.vcolors[v] |= bit;
            self.sum_lower += delta;
            self.colors[depth] = c as u32;

            let found = self.dfs(depth + 1)?;

            self.sum_lower -= delta;
            self.vcolors[u] = old_u;
            self.vcolors[v] = old_v;
            self.class_adj[c][u] &= !(1u64 << v);
            self.class_adj[c][v] &= !(1u64 << u);
            if c + 1 == self.q && self.class_adj[c].iter().all(|&r| r == 0) {
                self.class_adj.pop();
                self.q -= 1;
            }
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn lower_delta(&self, v: usize, old: i64, new: i64) -> i64 {
        let base = i64::from(self.nonisolated[v]);
        new.max(base) - old.max(base)
    }

    fn constraint_ok(&self, u: usize, v: usize, cu: i64, cv: i64, nu: i64, nv: i64) -> bool {
        match self.constraint {
            ColoringConstraint::ExactlyKColors(_) => true,
            ColoringConstraint::KLocal(k) => nu <= k as i64 && nv <= k as i64,
            ColoringConstraint::RhoMean(rho) => {
                let sum = self.sum_lower + self.lower_delta(u, cu, nu) + self.lower_delta(v, cv, nv);
                mean_within(sum, self.n as i64, rho)
            }
        }
    }

    /// Whether coloring `uv` with color `c` (possibly the fresh one) closes a
    /// copy of the pattern.
    fn completes_pattern(&self, c: usize, u: usize, v: usize) -> bool {
        let blank;
        let rows = if c < self.q {
            &self.class_adj[c]
        } else {
            blank = vec![0u64; self.n];
            &blank
        };
        match self.clique {
            Some(s) => {
                let common = rows[u] & rows[v];
                has_clique(rows, VertexSet(common), s.saturating_sub(2))
            }
            None => {
                let mut with_edge = rows.clone();
                with_edge[u] |= 1u64 << v;
                with_edge[v] |= 1u64 << u;
                let class = Graph::from_rows(&with_edge);
                find_subgraph_within(&class, self.pattern, class.vertices()).is_some()
            }
        }
    }

    fn partial_code(&self, depth: usize) -> Vec<u8> {
        let mut m = LabelMatrix::new(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i < depth {
                m.set_color(u, v, self.colors[i]);
            } else {
                m.set(u, v, UNCOLORED);
            }
        }
        canon::code_of(&m)
    }
}

fn has_clique(rows: &[u64], cand: VertexSet, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need {
        return false;
    }
    let mut rest = cand;
    while let Some(x) = rest.first() {
        rest.remove(x);
        if rest.len() + 1 < need {
            return false;
        }
        if has_clique(rows, VertexSet(rest.0 & rows[x]), need - 1) {
            return true;
        }
    }
    false
}

/// Non-isomorphic graphs on `n` vertices with exactly `missing` non-edges,
/// keyed by canonical code.
fn graphs_missing(n: usize, missing: usize, prev: &BTreeMap<Vec<u8>, Graph>) -> Result<BTreeMap<Vec<u8>, Graph>> {
    // complements with `missing` edges grow from those with one fewer
    let mut out = BTreeMap::new();
    for comp in prev.values() {
        for u in 0..n {
            for v in u + 1..n {
                if comp.has_edge(u, v) {
                    continue;
                }
                let mut next = comp.clone();
                next.add_edge(u, v)?;
                out.entry(canon::graph_code(&next)?).or_insert(next);
            }
        }
    }
    debug_assert!(out.values().all(|c: &Graph| c.edge_count() == missing));
    Ok(out)
}

fn run_pool<T, F>(threads: usize, f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    if threads <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Exact `RT(n, h, constraint)`: the largest edge count of an `n`-vertex
/// graph with a good coloring.
///
/// Graphs are enumerated up to isomorphism from `K_n` downwards, one edge
/// count at a time; every graph of a level is decided, so the result and
/// the statistics do not depend on the thread count. The witness is the
/// good coloring with the least canonical code among the winning level.
pub fn rt_exact(n: usize, h: &Graph, constraint: &ColoringConstraint, config: &SearchConfig) -> Result<Certificate> {
    let limit = config.rt_max_vertices.min(config.max_host_vertices).min(HARD_MAX_HOST_VERTICES);
    if n > limit {
        return Err(Error::budget(format!("rt_exact budget is n <= {limit}, got {n}")));
    }
    if h.edge_count() == 0 {
        return Err(Error::invalid("pattern graph must have at least one edge"));
    }
    let total = choose2(n);
    let mut stats = SearchStats::default();
    let mut graphs_examined = 0u64;
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let empty = Graph::empty(n)?;
    level.insert(canon::graph_code(&empty)?, empty);
    for missing in 0..=total {
        if missing > 0 {
            level = graphs_missing(n, missing, &level)?;
        }
        let hosts: Vec<Graph> = level.values().map(Graph::complement).collect();
        let results: Vec<Result<(Option<EdgeColoring>, SearchStats)>> = run_pool(config.threads, || {
            hosts.par_iter().map(|g| exists_good_coloring_with(g, h, constraint, config)).collect()
        });
        let mut best: Option<(Vec<u8>, EdgeColoring)> = None;
        for r in results {
            let (found, s) = r?;
            stats.absorb(&s);
            graphs_examined += 1;
            if let Some(c) = found {
                let code = c.canonical_code()?;
                if best.as_ref().is_none_or(|b| code < b.0) {
                    best = Some((code, c));
                }
            }
        }
        if let Some((_, witness)) = best {
            let value = (total - missing) as u64;
            let kind =
                if missing == 0 { CertificateKind::LowerBoundWitness } else { CertificateKind::ExhaustiveUpperBound };
            let search_space = format!(
                "all graphs on {n} vertices with {} to {} edges up to isomorphism, all colorings per graph",
                value, total
            );
            return Ok(Certificate {
                kind,
                value,
                witness: Some(witness),
                attestation: Attestation {
                    n,
                    pattern: h.clone(),
                    constraint: Some(*constraint),
                    stats,
                    graphs_examined,
                    search_space,
                    engine_version: ENGINE_VERSION.to_string(),
                },
            });
        }
    }
    unreachable!("the edgeless graph always has a good coloring")
}

/// Least `n <= n_max` such that every `constraint`-coloring of `K_n` has a
/// monochromatic `h`. Fails with a budget error when there is none.
pub fn ramsey_exact(
    h: &Graph,
    constraint: &ColoringConstraint,
    n_max: usize,
    config: &SearchConfig,
) -> Result<Certificate> {
    if h.edge_count() == 0 {
        return Err(Error::invalid("pattern graph must have at least one edge"));
    }
    let mut stats = SearchStats::default();
    let mut witness: Option<EdgeColoring> = None;
    for n in 1..=n_max {
        let (found, s) = exists_good_coloring_with(&Graph::complete(n)?, h, constraint, config)?;
        stats.absorb(&s);
        match found {
            Some(c) => witness = Some(c),
            None => {
                return Ok(Certificate {
                    kind: CertificateKind::RamseyValue,
                    value: n as u64,
                    witness,
                    attestation: Attestation {
                        n,
                        pattern: h.clone(),
                        constraint: Some(*constraint),
                        stats: s,
                        graphs_examined: n as u64,
                        search_space: format!("all {constraint} colorings of K_{n} up to color renaming"),
                        engine_version: ENGINE_VERSION.to_string(),
                    },
                });
            }
        }
    }
    Err(Error::budget(format!("every K_n with n <= {n_max} has a good {constraint} coloring ({} nodes)", stats.nodes)))
}

/// Minimum of `Σ_v c(v)` over colorings of `K_m` without a monochromatic
/// triangle, `3 <= m <= 5`. Enumerates every color-normalized coloring.
pub fn min_color_sum(m: usize) -> Result<Certificate> {
    if !(3..=5).contains(&m) {
        return Err(Error::invalid(format!("color-sum oracle is defined for 3 <= m <= 5, got {m}")));
    }
    let km = Graph::complete(m)?;
    let edges: Vec<(usize, usize)> = km.edges().collect();
    let mut colors = vec![0u32; edges.len()];
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut stats = SearchStats::default();
    enumerate_normalized(&edges, 0, 0, &mut colors, &mut stats, &mut |cols| {
        let c = EdgeColoring::new(km.clone(), cols.to_vec()).expect("complete assignment");
        let sum = c.total_color_incidence();
        if best.as_ref().is_none_or(|b| sum < b.0) {
            best = Some((sum, cols.to_vec()));
        }
    });
    let (value, cols) = best.expect("K_m with m <= 5 has a triangle-free-per-color coloring");
    Ok(Certificate {
        kind: CertificateKind::OracleValue,
        value: value as u64,
        witness: Some(EdgeColoring::new(km, cols)?),
        attestation: Attestation {
            n: m,
            pattern: Graph::complete(3)?,
            constraint: None,
            stats,
            graphs_examined: 1,
            search_space: format!("all color-normalized colorings of K_{m} without a monochromatic triangle"),
            engine_version: ENGINE_VERSION.to_string(),
        },
    })
}

fn enumerate_normalized(
    edges: &[(usize, usize)],
    depth: usize,
    q: u32,
    colors: &mut Vec<u32>,
    stats: &mut SearchStats,
    visit: &mut dyn FnMut(&[u32]),
) {
    stats.nodes += 1;
    if depth == edges.len() {
        visit(colors);
        return;
    }
    let (u, v) = edges[depth];
    for c in 0..=q {
        // a triangle u, v, w is closed when uw and vw are colored already
        let closes = (0..v).filter(|&w| w != u).any(|w| {
            let e1 = edge_index(edges, u.min(w), u.max(w));
            let e2 = edge_index(edges, v.min(w), v.max(w));
            e1 < depth && e2 < depth && colors[e1] == c && colors[e2] == c
        });
        if closes {
            stats.pruned_pattern += 1;
            continue;
        }
        colors[depth] = c;
        enumerate_normalized(edges, depth + 1, q.max(c + 1), colors, stats, visit);
    }
}

fn edge_index(edges: &[(usize, usize)], u: usize, v: usize) -> usize {
    edges.binary_search(&(u, v)).expect("edge of K_m")
}

/// Re-checks a certificate without trusting the search that produced it.
///
/// Witnesses are checked in full (constraint, edge count, absence of a
/// monochromatic `h`); for exhaustive kinds only the attestation's internal
/// consistency can be validated.
pub fn verify_certificate(cert: &Certificate, h: &Graph, constraint: &ColoringConstraint) -> bool {
    let att = &cert.attestation;
    if att.pattern != *h {
        return false;
    }
    let good = |w: &EdgeColoring| w.satisfies(constraint) && w.find_monochromatic(h).is_none();
    match cert.kind {
        CertificateKind::LowerBoundWitness | CertificateKind::ExhaustiveUpperBound => {
            if att.constraint != Some(*constraint) {
                return false;
            }
            let Some(w) = &cert.witness else { return false };
            let witness_ok = w.n() == att.n && w.edge_count() as u64 == cert.value && good(w);
            let space_ok = match cert.kind {
                CertificateKind::ExhaustiveUpperBound => {
                    att.stats.nodes > 0 && !att.search_space.is_empty() && cert.value < choose2(att.n) as u64
                }
                _ => true,
            };
            witness_ok && space_ok
        }
        CertificateKind::RamseyValue => {
            if att.constraint != Some(*constraint) || att.stats.nodes == 0 || cert.value != att.n as u64 {
                return false;
            }
            match &cert.witness {
                Some(w) => w.n() + 1 == att.n && w.edge_count() == choose2(w.n()) && good(w),
                None => att.n == 1,
            }
        }
        CertificateKind::OracleValue => {
            let Some(w) = &cert.witness else { return false };
            w.n() == att.n
                && w.edge_count() == choose2(w.n())
                && w.find_monochromatic(h).is_none()
                && w.total_color_incidence() as u64 == cert.value
                && att.stats.nodes > 0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{k5_no_mono_triangle, turan5_witness};

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    fn mean(r: i64) -> ColoringConstraint {
        ColoringConstraint::mean_int(r).unwrap()
    }

    #[test]
    fn decision_examples() {
        let k5 = Graph::complete(5).unwrap();
        let c = exists_good_coloring(&k5, &k3(), &mean(2)).unwrap().unwrap();
        assert!(c.satisfies(&mean(2)) && c.find_monochromatic(&k3()).is_none());
        assert_eq!(exists_good_coloring(&Graph::complete(6).unwrap(), &k3(), &mean(2)).unwrap(), None);
        let c = exists_good_coloring(&k3(), &k3(), &ColoringConstraint::ExactlyKColors(2)).unwrap().unwrap();
        assert_eq!(c.q(), 2);
    }

    #[test]
    fn decision_budget_and_pattern_errors() {
        let big = Graph::complete(11).unwrap();
        assert!(matches!(exists_good_coloring(&big, &k3(), &mean(2)), Err(Error::BudgetExceeded(_))));
        let tiny = SearchConfig { max_nodes: 3, ..SearchConfig::default() };
        assert!(matches!(
            exists_good_coloring_with(&Graph::complete(6).unwrap(), &k3(), &mean(2), &tiny),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(exists_good_coloring(&k3(), &Graph::empty(2).unwrap(), &mean(2)).is_err());
    }

    #[test]
    fn k2_pattern_forbids_every_edge() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(exists_good_coloring(&Graph::path(2).unwrap(), &k2, &mean(5)).unwrap(), None);
        assert!(exists_good_coloring(&Graph::empty(4).unwrap(), &k2, &mean(1)).unwrap().is_some());
    }

    #[test]
    fn non_clique_pattern() {
        // every 2-coloring of K_6 has a monochromatic path on 3 vertices... and C_5 patterns work too
        let p3 = Graph::path(3).unwrap();
        let found = exists_good_coloring(&Graph::complete(4).unwrap(), &p3, &ColoringConstraint::ExactlyKColors(3))
            .unwrap()
            .unwrap();
        assert!(found.find_monochromatic(&p3).is_none());
        assert_eq!(
            exists_good_coloring(&Graph::complete(4).unwrap(), &p3, &ColoringConstraint::ExactlyKColors(2)).unwrap(),
            None
        );
    }

    #[test]
    fn rt_examples() {
        let cfg = SearchConfig::default();
        let c5 = rt_exact(5, &k3(), &mean(2), &cfg).unwrap();
        assert_eq!(c5.value, 10);
        assert_eq!(c5.kind, CertificateKind::LowerBoundWitness);
        let c6 = rt_exact(6, &k3(), &mean(2), &cfg).unwrap();
        assert_eq!(c6.value, 14);
        assert_eq!(c6.kind, CertificateKind::ExhaustiveUpperBound);
        assert!(verify_certificate(&c6, &k3(), &mean(2)));
        assert_eq!(rt_exact(4, &k3(), &mean(1), &cfg).unwrap().value, 4);
        assert!(matches!(rt_exact(9, &k3(), &mean(2), &cfg), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn rt_is_independent_of_threads() {
        let one = rt_exact(6, &k3(), &ColoringConstraint::KLocal(2), &SearchConfig::default()).unwrap();
        let four =
            rt_exact(6, &k3(), &ColoringConstraint::KLocal(2), &SearchConfig { threads: 4, ..Default::default() })
                .unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn ramsey_examples() {
        let cfg = SearchConfig::default();
        let r = ramsey_exact(&k3(), &ColoringConstraint::ExactlyKColors(2), 8, &cfg).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.as_ref().unwrap().n(), 5);
        assert!(verify_certificate(&r, &k3(), &ColoringConstraint::ExactlyKColors(2)));
        assert_eq!(ramsey_exact(&k3(), &mean(1), 8, &cfg).unwrap().value, 3);
        assert!(matches!(
            ramsey_exact(&k3(), &ColoringConstraint::ExactlyKColors(3), 5, &cfg),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(min_color_sum(3).unwrap().value, 5);
        assert_eq!(min_color_sum(4).unwrap().value, 8);
        let five = min_color_sum(5).unwrap();
        assert_eq!(five.value, 10);
        assert!(verify_certificate(&five, &k3(), &mean(2)));
        assert!(min_color_sum(2).is_err());
        assert!(min_color_sum(6).is_err());
    }

    fn witness_certificate(w: EdgeColoring, value: u64) -> Certificate {
        Certificate {
            kind: CertificateKind::LowerBoundWitness,
            value,
            attestation: Attestation {
                n: w.n(),
                pattern: k3(),
                constraint: Some(mean(2)),
                stats: SearchStats::default(),
                graphs_examined: 0,
                search_space: "construction".into(),
                engine_version: ENGINE_VERSION.into(),
            },
            witness: Some(w),
        }
    }

    #[test]
    fn verify_examples() {
        let w = turan5_witness(6).unwrap();
        assert!(verify_certificate(&witness_certificate(w.clone(), 14), &k3(), &mean(2)));
        assert!(!verify_certificate(&witness_certificate(w.clone(), 15), &k3(), &mean(2)));
        // vertices 0,1,2 lie in different parts; force the triangle on them into one color
        let bad = w.recolor(|c| c);
        let tri = [(0, 1), (0, 2), (1, 2)];
        let target = bad.color(0, 1).unwrap();
        let mutated = EdgeColoring::from_colored_edges(
            6,
            bad.colored_edges().map(|(u, v, c)| if tri.contains(&(u, v)) { (u, v, target) } else { (u, v, c) }),
        )
        .unwrap();
        assert!(mutated.find_monochromatic(&k3()).is_some());
        assert!(!verify_certificate(&witness_certificate(mutated, 14), &k3(), &mean(2)));
        // wrong pattern or constraint
        assert!(!verify_certificate(&witness_certificate(w.clone(), 14), &Graph::complete(4).unwrap(), &mean(2)));
        assert!(!verify_certificate(&witness_certificate(w, 14), &k3(), &mean(3)));
        let _ = k5_no_mono_triangle();
    }
}
