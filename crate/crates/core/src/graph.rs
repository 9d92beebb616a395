//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` row per vertex, so neighbourhood intersections and
//! degree counts are single word operations. Every operation here is a pure
//! function of its inputs.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_VERTICES: usize = 16;

/// A set of vertex ids stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!("graph on {n} vertices exceeds the {MAX_VERTICES}-vertex cap")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges)
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen graph is valid")
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows; rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: &[u64]) -> Graph {
        debug_assert!(rows.iter().enumerate().all(|(v, r)| r >> v & 1 == 0));
        Graph { n: rows.len(), adj: rows.to_vec() }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let higher = self.adj[u] & !((2u64 << u).wrapping_sub(1));
            VertexSet(if u == 63 { 0 } else { higher }).iter().map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vs`, relabelled to `0..|vs|` in increasing order.
    pub fn induced(&self, vs: VertexSet) -> Graph {
        let order = vs.intersection(self.vertices()).to_vec();
        let mut g = Graph { n: order.len(), adj: vec![0; order.len()] };
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                }
            }
        }
        g
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1u64 << perm[v];
            g.adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(g)
    }

    /// Whether `vs` is pairwise adjacent.
    pub fn is_clique(&self, vs: VertexSet) -> bool {
        vs.iter().all(|v| vs.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// Whether every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & !other.adj[v] == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::invalid(format!("permutation has length {}, expected {n}", perm.len())));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= n || seen >> p & 1 == 1 {
            return Err(Error::invalid("not a permutation"));
        }
        seen |= 1u64 << p;
    }
    Ok(())
}

/// Balanced complete `k`-partite graph `T(n, k)`. Vertex `i` lies in part `i mod k`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("Turán graph needs k >= 1"));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u % k != v % k {
                g.adj[u] |= 1u64 << v;
                g.adj[v] |= 1u64 << u;
            }
        }
    }
    Ok(g)
}

/// Part sizes of `T(n, k)`: the first `n mod k` parts have `ceil(n/k)` vertices.
pub fn turan_part_sizes(n: usize, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::invalid("Turán graph needs k >= 1"));
    }
    Ok((0..k).map(|p| n / k + usize::from(p < n % k)).collect())
}

/// Edge count `t(n, k)` of the Turán graph.
pub fn turan_edge_count(n: usize, k: usize) -> Result<u64> {
    let parts = turan_part_sizes(n, k)?;
    let c2 = |x: u64| x * x.saturating_sub(1) / 2;
    Ok(c2(n as u64) - parts.iter().map(|&p| c2(p as u64)).sum::<u64>())
}

/// Number of classes in a greedy independent-set cover of `cand`; an upper
/// bound on the clique number of the induced subgraph.
fn greedy_color_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut rest = cand;
    let mut classes = 0;
    while !rest.is_empty() {
        classes += 1;
        let mut avail = rest;
        while let Some(v) = avail.first() {
            avail = avail.difference(g.neighbors(v));
            avail.remove(v);
            rest.remove(v);
        }
    }
    classes
}

/// Lexicographically least `s`-clique, if any.
pub fn find_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, cand: VertexSet, need: usize, acc: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need || greedy_color_bound(g, cand) < need {
            return false;
        }
        for v in cand.iter() {
            // only later vertices keep the tuple increasing
            let later = VertexSet(cand.0 & !((2u64 << v).wrapping_sub(1)));
            let next = if v == 63 { VertexSet::EMPTY } else { later.intersection(g.neighbors(v)) };
            acc.push(v);
            if extend(g, next, need - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(s);
    extend(g, g.vertices(), s, &mut acc).then_some(acc)
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while !cand.is_empty() {
            if size + cand.len() <= *best || size + greedy_color_bound(g, cand) <= *best {
                return;
            }
            let v = cand.first().unwrap();
            cand.remove(v);
            grow(g, size + 1, cand.intersection(g.neighbors(v)), best);
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    grow(g, 0, g.vertices(), &mut best);
    best
}

/// Exact chromatic number for graphs with at most 16 vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_MAX_VERTICES {
        return Err(Error::budget(format!(
            "chromatic number limited to {CHROMATIC_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = clique_number(g);
    Ok((lower..=g.n()).find(|&k| is_k_colorable(g, k)).expect("n colors always suffice"))
}

/// Backtracking vertex `k`-coloring test.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    fn assign(g: &Graph, v: usize, k: usize, used: usize, color: &mut [usize]) -> bool {
        if v == g.n() {
            return true;
        }
        let forbidden: u64 = g.neighbors(v).iter().filter(|&u| u < v).fold(0, |acc, u| acc | 1u64 << color[u]);
        // a vertex never needs a color index beyond the first unused one
        for c in 0..k.min(used + 1) {
            if forbidden >> c & 1 == 0 {
                color[v] = c;
                if assign(g, v + 1, k, used.max(c + 1), color) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut color = vec![0; g.n()];
    assign(g, 0, k, 0, &mut color)
}

/// First subgraph embedding of `h` into `g`: `phi[u]` is the image of `u`.
///
/// Copies are not required to be induced. Vertices of `h` are placed in
/// index order and candidates are tried in increasing order, so the result
/// is deterministic.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_subgraph_within(g, h, g.vertices())
}

pub(crate) fn find_subgraph_within(g: &Graph, h: &Graph, allowed: VertexSet) -> Option<Vec<usize>> {
    if h.n() > allowed.len() {
        return None;
    }
    let mut phi = vec![usize::MAX; h.n()];
    fn place(g: &Graph, h: &Graph, u: usize, used: VertexSet, allowed: VertexSet, phi: &mut [usize]) -> bool {
        if u == h.n() {
            return true;
        }
        let mut cand = allowed.difference(used);
        for w in h.neighbors(u).iter().filter(|&w| w < u) {
            cand = cand.intersection(g.neighbors(phi[w]));
        }
        let need = h.degree(u);
        for x in cand.iter() {
            if g.degree(x) < need {
                continue;
            }
            phi[u] = x;
            let mut next = used;
            next.insert(x);
            if place(g, h, u + 1, next, allowed, phi) {
                return true;
            }
        }
        false
    }
    place(g, h, 0, VertexSet::EMPTY, allowed, &mut phi).then_some(phi)
}
