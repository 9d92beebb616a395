//! Edge colorings, coloring classes and monochromatic-copy detection.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{self, find_subgraph, Graph};
use crate::Rational;

/// A colored graph is an edge coloring together with its host graph.
pub type ColoredGraph = EdgeColoring;

/// Total coloring of a host graph's edges with ids `0..q`.
///
/// Colors are always normalized to first-use order along the lexicographic
/// edge order, so two colorings that differ only by renaming colors compare
/// equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    host: Graph,
    edges: Vec<(usize, usize)>,
    colors: Vec<u32>,
    q: usize,
}

impl EdgeColoring {
    /// `colors[i]` is the color of the `i`-th edge of `host` in lexicographic order.
    pub fn new(host: Graph, colors: Vec<u32>) -> Result<Self> {
        let edges: Vec<_> = host.edges().collect();
        if edges.len() != colors.len() {
            return Err(Error::invalid(format!("{} colors supplied for {} edges", colors.len(), edges.len())));
        }
        let (colors, q) = normalize(&colors);
        Ok(EdgeColoring { host, edges, colors, q })
    }

    pub fn from_fn(host: Graph, mut color: impl FnMut(usize, usize) -> u32) -> Self {
        let colors = host.edges().map(|(u, v)| color(u, v)).collect();
        EdgeColoring::new(host, colors).expect("one color per edge")
    }

    /// Every edge gets color 0.
    pub fn monochromatic(host: Graph) -> Self {
        EdgeColoring::from_fn(host, |_, _| 0)
    }

    /// Builds a coloring on `n` vertices from `(u, v, color)` triples.
    pub fn from_colored_edges<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut list: Vec<(usize, usize, u32)> =
            triples.into_iter().map(|(u, v, c)| if u < v { (u, v, c) } else { (v, u, c) }).collect();
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            return Err(Error::invalid(format!("edge ({}, {}) listed twice", w[0].0, w[0].1)));
        }
        let host = Graph::from_edges(n, list.iter().map(|&(u, v, _)| (u, v)))?;
        EdgeColoring::new(host, list.into_iter().map(|t| t.2).collect())
    }

    #[inline]
    pub fn host(&self) -> &Graph {
        &self.host
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.host
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.host.n()
    }

    /// Number of colors in use.
    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().zip(&self.colors).map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn color(&self, u: usize, v: usize) -> Option<u32> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    /// Spanning subgraph formed by the edges of color `c`.
    pub fn color_class(&self, c: u32) -> Graph {
        let edges = self.colored_edges().filter(|e| e.2 == c).map(|(u, v, _)| (u, v));
        Graph::from_edges(self.n(), edges).expect("subgraph of a valid host")
    }

    /// Number of distinct colors at `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize> {
        self.host.check_vertex(v)?;
        let mut seen: Vec<u32> = self.colored_edges().filter(|&(a, b, _)| a == v || b == v).map(|e| e.2).collect();
        seen.sort_unstable();
        seen.dedup();
        Ok(seen.len())
    }

    /// `c(v)` for every vertex, in one pass over the edges.
    pub fn color_degrees(&self) -> Vec<usize> {
        let mut at: Vec<Vec<u32>> = vec![Vec::new(); self.n()];
        for (u, v, c) in self.colored_edges() {
            at[u].push(c);
            at[v].push(c);
        }
        at.into_iter()
            .map(|mut cs| {
                cs.sort_unstable();
                cs.dedup();
                cs.len()
            })
            .collect()
    }

    /// `Σ_v c(v)`.
    pub fn total_color_incidence(&self) -> usize {
        self.color_degrees().iter().sum()
    }

    /// Average color degree `Σ_v c(v) / n` as an exact rational; isolated
    /// vertices count in the denominator. `None` on the null graph.
    pub fn mean_color_degree(&self) -> Option<Rational> {
        (self.n() > 0).then(|| Rational::new(self.total_color_incidence() as i64, self.n() as i64))
    }

    pub fn satisfies(&self, constraint: &ColoringConstraint) -> bool {
        match *constraint {
            ColoringConstraint::ExactlyKColors(k) => self.q <= k,
            ColoringConstraint::KLocal(k) => self.color_degrees().iter().all(|&c| c <= k),
            ColoringConstraint::RhoMean(rho) => mean_within(self.total_color_incidence() as i64, self.n() as i64, rho),
        }
    }

    /// Lowest color whose class contains a copy of `h`, with the embedding.
    pub fn find_monochromatic(&self, h: &Graph) -> Option<Monochromatic> {
        (0..self.q as u32)
            .find_map(|c| find_subgraph(&self.color_class(c), h).map(|embedding| Monochromatic { color: c, embedding }))
    }

    /// Code that is equal for two colorings exactly when they are isomorphic
    /// under vertex relabelling combined with color relabelling.
    pub fn canonical_code(&self) -> Result<Vec<u8>> {
        canon::canonical_code(self)
    }

    /// Vertex `v` becomes `perm[v]`; colors are carried along and renormalized.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        graph::check_permutation(perm, self.n())?;
        EdgeColoring::from_colored_edges(self.n(), self.colored_edges().map(|(u, v, c)| (perm[u], perm[v], c)))
    }

    /// Applies a color renaming; the result is renormalized.
    pub fn recolor(&self, mut map: impl FnMut(u32) -> u32) -> Self {
        let colors = self.colors.iter().map(|&c| map(c)).collect();
        EdgeColoring::new(self.host.clone(), colors).expect("same edge set")
    }

    /// Coloring restricted to the edges kept by `keep`, on the same vertex set.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize, usize, u32) -> bool) -> Self {
        EdgeColoring::from_colored_edges(self.n(), self.colored_edges().filter(|&(u, v, c)| keep(u, v, c)))
            .expect("subset of a valid coloring")
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("n", &self.n())
            .field("q", &self.q)
            .field("edges", &self.colored_edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Renames colors to first-use order; returns the new colors and their count.
fn normalize(colors: &[u32]) -> (Vec<u32>, usize) {
    let mut map: Vec<(u32, u32)> = Vec::new();
    let out = colors
        .iter()
        .map(|&c| match map.iter().find(|m| m.0 == c) {
            Some(m) => m.1,
            None => {
                let id = map.len() as u32;
                map.push((c, id));
                id
            }
        })
        .collect();
    (out, map.len())
}

/// Exact test `sum / n <= rho`, i.e. `sum * den <= num * n`.
pub(crate) fn mean_within(sum: i64, n: i64, rho: Rational) -> bool {
    (sum as i128) * (*rho.denom() as i128) <= (*rho.numer() as i128) * (n as i128)
}

/// A monochromatic copy: its color and the embedding of the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monochromatic {
    pub color: u32,
    pub embedding: Vec<usize>,
}

/// The three coloring classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColoringConstraint {
    /// At most `k` colors overall.
    ExactlyKColors(usize),
    /// Every vertex meets at most `k` colors.
    KLocal(usize),
    /// Average color degree at most `ρ`.
    RhoMean(Rational),
}

impl ColoringConstraint {
    pub fn colors(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("color bound must be at least 1"));
        }
        Ok(ColoringConstraint::ExactlyKColors(k))
    }

    pub fn local(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("local bound must be at least 1"));
        }
        Ok(ColoringConstraint::KLocal(k))
    }

    pub fn mean(rho: Rational) -> Result<Self> {
        if rho < Rational::one() || rho.is_negative() {
            return Err(Error::invalid(format!("mean bound must be at least 1, got {rho}")));
        }
        Ok(ColoringConstraint::RhoMean(rho))
    }

    pub fn mean_int(rho: i64) -> Result<Self> {
        ColoringConstraint::mean(Rational::from_integer(rho))
    }
}

impl fmt::Display for ColoringConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringConstraint::ExactlyKColors(k) => write!(f, "colors:{k}"),
            ColoringConstraint::KLocal(k) => write!(f, "local:{k}"),
            ColoringConstraint::RhoMean(r) if r.is_integer() => write!(f, "mean:{}", r.numer()),
            ColoringConstraint::RhoMean(r) => write!(f, "mean:{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for ColoringConstraint {
    type Err = Error;

    /// Parses `colors:K`, `local:K`, `mean:NUM` or `mean:NUM/DEN`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("constraint '{s}' is not of the form kind:value")))?;
        let int = |a: &str| {
            a.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad integer '{a}' in constraint '{s}'")))
        };
        match kind.trim() {
            "colors" => ColoringConstraint::colors(int(arg)?),
            "local" => ColoringConstraint::local(int(arg)?),
            "mean" => ColoringConstraint::mean(parse_rational(arg)?),
            other => Err(Error::invalid(format!("unknown constraint kind '{other}'"))),
        }
    }
}

/// Parses `a` or `a/b` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("bad rational '{s}'"));
    let (num, den) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().map_err(|_| bad())?, b.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::k5_no_mono_triangle;

    fn rainbow_k3() -> EdgeColoring {
        EdgeColoring::from_colored_edges(3, [(0, 1, 0), (0, 2, 1), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn color_degree_examples() {
        let star = EdgeColoring::monochromatic(Graph::star(4).unwrap());
        assert_eq!(star.color_degree(0).unwrap(), 1);
        let iso = EdgeColoring::monochromatic(Graph::from_edges(3, [(0, 1)]).unwrap());
        assert_eq!(iso.color_degree(2).unwrap(), 0);
        assert!(matches!(iso.color_degree(3), Err(Error::VertexOutOfRange { .. })));
        let k5 = k5_no_mono_triangle();
        assert!((0..5).all(|v| k5.color_degree(v).unwrap() == 2));
    }

    #[test]
    fn total_incidence_examples() {
        assert_eq!(k5_no_mono_triangle().total_color_incidence(), 10);
        assert_eq!(EdgeColoring::monochromatic(Graph::empty(4).unwrap()).total_color_incidence(), 0);
        assert_eq!(rainbow_k3().total_color_incidence(), 6);
    }

    #[test]
    fn satisfies_examples() {
        assert!(rainbow_k3().satisfies(&ColoringConstraint::mean_int(2).unwrap()));
        assert!(!rainbow_k3().satisfies(&ColoringConstraint::mean(Rational::new(19, 10)).unwrap()));
        assert!(k5_no_mono_triangle().satisfies(&ColoringConstraint::KLocal(2)));
        let star = EdgeColoring::new(Graph::star(4).unwrap(), vec![0, 1, 2, 3]).unwrap();
        assert!(!star.satisfies(&ColoringConstraint::mean(Rational::new(3, 2)).unwrap()));
        assert!(star.satisfies(&ColoringConstraint::ExactlyKColors(4)));
        assert!(!star.satisfies(&ColoringConstraint::ExactlyKColors(3)));
    }

    #[test]
    fn isolated_vertices_count_in_the_mean() {
        // one edge in two colors is impossible; one red edge on 3 vertices: Σ = 2, n = 3
        let g = EdgeColoring::monochromatic(Graph::from_edges(3, [(0, 1)]).unwrap());
        assert_eq!(g.mean_color_degree(), Some(Rational::new(2, 3)));
        let tight = EdgeColoring::from_colored_edges(4, [(0, 1, 0), (1, 2, 1)]).unwrap();
        // Σ = 1 + 2 + 1 + 0 = 4 = 1 * 4
        assert!(tight.satisfies(&ColoringConstraint::mean_int(1).unwrap()));
    }

    #[test]
    fn monochromatic_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k5_no_mono_triangle().find_monochromatic(&k3), None);
        let mono = EdgeColoring::monochromatic(Graph::complete(6).unwrap());
        let hit = mono.find_monochromatic(&k3).unwrap();
        assert_eq!(hit.color, 0);
        assert_eq!(hit.embedding, vec![0, 1, 2]);
    }

    #[test]
    fn lowest_color_hit_is_reported() {
        // color 0 is a path, color 1 contains a triangle
        let c = EdgeColoring::from_colored_edges(5, [(0, 1, 0), (1, 2, 0), (2, 3, 1), (3, 4, 1), (2, 4, 1)]).unwrap();
        assert_eq!(c.find_monochromatic(&Graph::path(3).unwrap()).unwrap().color, 0);
        assert_eq!(c.find_monochromatic(&Graph::complete(3).unwrap()).unwrap().color, 1);
    }

    #[test]
    fn colors_are_normalized_to_first_use() {
        let c = EdgeColoring::from_colored_edges(3, [(1, 2, 7), (0, 1, 9), (0, 2, 7)]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 1]);
        assert_eq!(c.q(), 2);
        let again = EdgeColoring::new(c.host().clone(), c.colors().to_vec()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn constraint_parsing() {
        assert_eq!("colors:2".parse::<ColoringConstraint>().unwrap(), ColoringConstraint::ExactlyKColors(2));
        assert_eq!("local:3".parse::<ColoringConstraint>().unwrap(), ColoringConstraint::KLocal(3));
        assert_eq!("mean:6/4".parse::<ColoringConstraint>().unwrap(), ColoringConstraint::RhoMean(Rational::new(3, 2)));
        assert_eq!("mean:6/4".parse::<ColoringConstraint>().unwrap().to_string(), "mean:3/2");
        assert_eq!("mean:2".parse::<ColoringConstraint>().unwrap().to_string(), "mean:2");
        for bad in ["mean:1/2", "colors:0", "local:x", "mean:1/0", "foo:1", "mean"] {
            assert!(bad.parse::<ColoringConstraint>().is_err(), "{bad}");
        }
    }

    #[test]
    fn local_implies_mean() {
        let k5 = k5_no_mono_triangle();
        for k in 1..4 {
            if k5.satisfies(&ColoringConstraint::KLocal(k)) {
                assert!(k5.satisfies(&ColoringConstraint::mean_int(k as i64).unwrap()));
            }
        }
    }
}
