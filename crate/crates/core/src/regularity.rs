//! Edge densities, exact `γ`-regularity of small pairs, equitable partitions
//! and cluster graphs, with all comparisons in exact rational arithmetic.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::coloring::{ColoredGraph, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Rational;

/// Largest class size for which regularity is decided by full enumeration.
pub const REGULARITY_MAX_CLASS: usize = 12;

/// Disjoint non-empty vertex classes covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        let mut covered = VertexSet::EMPTY;
        for (i, &c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::invalid(format!("class {i} is empty")));
            }
            if !c.is_disjoint(covered) {
                return Err(Error::invalid(format!("class {i} overlaps an earlier class")));
            }
            covered = covered.union(c);
        }
        if covered != VertexSet::full(n) {
            return Err(Error::invalid(format!("classes do not cover exactly the vertices 0..{n}")));
        }
        Ok(Partition { n, classes })
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        for &v in lists.iter().flatten() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let classes = lists
            .iter()
            .map(|l| {
                let set: VertexSet = l.iter().copied().collect();
                if set.len() == l.len() {
                    Ok(set)
                } else {
                    Err(Error::invalid("vertex repeated within a class"))
                }
            })
            .collect::<Result<_>>()?;
        Partition::new(n, classes)
    }

    /// Consecutive blocks of `sizes[i]` vertices.
    pub fn blocks(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let lists: Vec<Vec<usize>> = sizes
            .iter()
            .map(|&s| {
                let l = (start..start + s).collect();
                start += s;
                l
            })
            .collect();
        Partition::from_lists(start, &lists)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// Class sizes differ by at most one.
pub fn is_equitable(p: &Partition) -> bool {
    let sizes = p.sizes();
    match (sizes.iter().min(), sizes.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    }
}

fn check_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("density needs two non-empty sets"));
    }
    if !a.is_disjoint(b) {
        return Err(Error::invalid("density needs disjoint sets"));
    }
    if !a.union(b).is_subset(g.vertices()) {
        return Err(Error::invalid("vertex set exceeds the graph's vertex range"));
    }
    Ok(())
}

/// Number of edges between `a` and `b`.
pub fn cross_edges(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    a.iter().map(|v| g.neighbors(v).intersection(b).len()).sum()
}

/// `e(A, B) / (|A| |B|)`.
pub fn density(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Rational> {
    check_pair(g, a, b)?;
    Ok(Rational::new(cross_edges(g, a, b) as i64, (a.len() * b.len()) as i64))
}

fn check_positive(name: &str, r: Rational) -> Result<()> {
    if r.is_positive() {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} must be positive, got {r}")))
    }
}

/// First sub-pair `(X, Y)` with `|X| > γ|A|`, `|Y| > γ|B|` and
/// `|d(X,Y) - d(A,B)| >= γ`, in order of the subset masks; `None` when the
/// pair is `γ`-regular.
pub fn irregular_witness(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    gamma: Rational,
) -> Result<Option<(VertexSet, VertexSet)>> {
    check_pair(g, a, b)?;
    check_positive("gamma", gamma)?;
    if a.len() > REGULARITY_MAX_CLASS || b.len() > REGULARITY_MAX_CLASS {
        return Err(Error::budget(format!(
            "exact regularity limited to classes of {REGULARITY_MAX_CLASS} vertices, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let av = a.to_vec();
    let bv = b.to_vec();
    let (gn, gd) = (*gamma.numer() as i128, *gamma.denom() as i128);
    let e_ab = cross_edges(g, a, b) as i128;
    let ab = (av.len() * bv.len()) as i128;
    let big_enough = |size: usize, of: usize| (size as i128) * gd > gn * (of as i128);
    let ys: Vec<u32> = (1u32..1 << bv.len()).filter(|y| big_enough(y.count_ones() as usize, bv.len())).collect();
    let to_set = |mask: u32, list: &[usize]| -> VertexSet {
        list.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
    };
    let witness = (1u32..1 << av.len())
        .into_par_iter()
        .filter(|x| big_enough(x.count_ones() as usize, av.len()))
        .find_map_first(|x| {
            let xs = to_set(x, &av);
            let deg: Vec<i128> = bv.iter().map(|&w| g.neighbors(w).intersection(xs).len() as i128).collect();
            let mut sums = vec![0i128; 1 << bv.len()];
            for y in 1usize..sums.len() {
                sums[y] = sums[y & (y - 1)] + deg[y.trailing_zeros() as usize];
            }
            let xsz = x.count_ones() as i128;
            ys.iter().find_map(|&y| {
                let xy = xsz * y.count_ones() as i128;
                // |e/xy - e_ab/ab| >= gn/gd  <=>  |e*ab - e_ab*xy| * gd >= gn * ab * xy
                let diff = (sums[y as usize] * ab - e_ab * xy).abs();
                (diff * gd >= gn * ab * xy).then(|| (xs, to_set(y, &bv)))
            })
        });
    Ok(witness)
}

/// Exact `γ`-regularity by enumerating every qualifying sub-pair.
pub fn is_regular_pair(g: &Graph, a: VertexSet, b: VertexSet, gamma: Rational) -> Result<bool> {
    irregular_witness(g, a, b, gamma).map(|w| w.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInfo {
    pub i: usize,
    pub j: usize,
    pub density: Rational,
    pub regular: bool,
}

/// Graph on the classes of a partition; `ij` is an edge when `(V_i, V_j)` is
/// `γ`-regular with density at least `η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterGraph {
    pub m: usize,
    /// Every pair `i < j` in lexicographic order.
    pub pairs: Vec<PairInfo>,
    /// Cluster edges in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    /// Majority host color per cluster edge, aligned with `edges`.
    pub cluster_coloring: Option<Vec<u32>>,
}

impl ClusterGraph {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.m, self.edges.iter().copied()).expect("cluster edges are in range")
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairInfo> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }

    /// The cluster coloring as a normalized colored graph.
    pub fn colored(&self) -> Option<ColoredGraph> {
        let colors = self.cluster_coloring.as_ref()?;
        let triples = self.edges.iter().zip(colors).map(|(&(i, j), &c)| (i, j, c));
        Some(EdgeColoring::from_colored_edges(self.m, triples).expect("cluster edges are in range"))
    }

    /// Average number of colors per cluster vertex, `ρ* = Σ_j c(j) / m`.
    pub fn rho_star(&self) -> Option<Rational> {
        self.colored()?.mean_color_degree()
    }
}

pub fn cluster_graph(g: &Graph, p: &Partition, gamma: Rational, eta: Rational) -> Result<ClusterGraph> {
    if p.n() != g.n() {
        return Err(Error::invalid(format!("partition covers {} vertices, graph has {}", p.n(), g.n())));
    }
    check_positive("gamma", gamma)?;
    check_positive("eta", eta)?;
    let classes = p.classes();
    let mut pairs = Vec::new();
    let mut edges = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let d = density(g, classes[i], classes[j])?;
            let regular = is_regular_pair(g, classes[i], classes[j], gamma)?;
            if regular && d >= eta {
                edges.push((i, j));
            }
            pairs.push(PairInfo { i, j, density: d, regular });
        }
    }
    Ok(ClusterGraph { m: classes.len(), pairs, edges, cluster_coloring: None })
}

/// Cluster graph of the host, each edge colored by the most frequent color
/// among the host edges between the two classes (smallest id on ties).
pub fn majority_color_clusters(
    cg: &ColoredGraph,
    p: &Partition,
    gamma: Rational,
    eta: Rational,
) -> Result<ClusterGraph> {
    let mut cluster = cluster_graph(cg.host(), p, gamma, eta)?;
    let classes = p.classes();
    let colors = cluster
        .edges
        .iter()
        .map(|&(i, j)| {
            let mut count = vec![0usize; cg.q()];
            for (u, v, c) in cg.colored_edges() {
                let crosses = (classes[i].contains(u) && classes[j].contains(v))
                    || (classes[i].contains(v) && classes[j].contains(u));
                if crosses {
                    count[c as usize] += 1;
                }
            }
            let best = count.iter().copied().max().unwrap_or(0);
            debug_assert!(!best.is_zero(), "cluster edges have positive density");
            count.iter().position(|&k| k == best).unwrap_or(0) as u32
        })
        .collect();
    cluster.cluster_coloring = Some(colors);
    Ok(cluster)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, k5_no_mono_triangle};
    use crate::graph::turan_graph;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    /// `|A| = |B| = 4`; vertices 0 and 1 of A see all of B, 2 and 3 see nothing.
    fn half_degenerate() -> (Graph, VertexSet, VertexSet) {
        let g = Graph::from_edges(8, (0..2).flat_map(|u| (4..8).map(move |v| (u, v)))).unwrap();
        (g, set(&[0, 1, 2, 3]), set(&[4, 5, 6, 7]))
    }

    #[test]
    fn density_examples() {
        let kb = Graph::complete_bipartite(3, 2).unwrap();
        assert_eq!(density(&kb, set(&[0, 1, 2]), set(&[3, 4])).unwrap(), r(1, 1));
        let e = Graph::empty(4).unwrap();
        assert_eq!(density(&e, set(&[0, 1]), set(&[2, 3])).unwrap(), r(0, 1));
        let (g, a, b) = half_degenerate();
        assert_eq!(density(&g, a, b).unwrap(), r(1, 2));
        assert_eq!(density(&g, b, a).unwrap(), r(1, 2));
        assert!(density(&g, a, VertexSet::EMPTY).is_err());
        assert!(density(&g, a, set(&[3, 4])).is_err());
    }

    #[test]
    fn regular_pair_examples() {
        let kb = Graph::complete_bipartite(4, 4).unwrap();
        let e = Graph::empty(8).unwrap();
        let (a, b) = (set(&[0, 1, 2, 3]), set(&[4, 5, 6, 7]));
        for gamma in [r(1, 10), r(1, 4), r(2, 5)] {
            assert!(is_regular_pair(&kb, a, b, gamma).unwrap());
            assert!(is_regular_pair(&e, a, b, gamma).unwrap());
        }
        let (g, a, b) = half_degenerate();
        assert!(!is_regular_pair(&g, a, b, r(2, 5)).unwrap());
        let (x, y) = irregular_witness(&g, a, b, r(2, 5)).unwrap().unwrap();
        assert!(x.len() * 5 > 8 && y.len() * 5 > 8);
        // γ = 1 admits only X = A, Y = B, whose densities coincide
        assert!(is_regular_pair(&g, a, b, r(1, 1)).unwrap());
        assert!(is_regular_pair(&g, a, b, r(0, 1)).is_err());
    }

    #[test]
    fn regularity_budget() {
        let g = Graph::empty(26).unwrap();
        let a: VertexSet = (0..13).collect();
        let b: VertexSet = (13..26).collect();
        assert!(matches!(is_regular_pair(&g, a, b, r(1, 4)), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn equitable_examples() {
        assert!(is_equitable(&Partition::blocks(&[3, 3, 3]).unwrap()));
        assert!(is_equitable(&Partition::blocks(&[4, 3, 3]).unwrap()));
        assert!(!is_equitable(&Partition::blocks(&[5, 3]).unwrap()));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::from_lists(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_lists(3, &[vec![0, 1]]).is_err());
        assert!(Partition::from_lists(3, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::from_lists(3, &[vec![0, 1, 3]]).is_err());
        assert!(Partition::from_lists(3, &[vec![0, 0, 1, 2]]).is_err());
    }

    #[test]
    fn cluster_graph_examples() {
        let tri = EdgeColoring::monochromatic(Graph::complete(3).unwrap());
        let b = blow_up(&tri, &[3, 3, 3]).unwrap();
        let p = Partition::blocks(&[3, 3, 3]).unwrap();
        let c = cluster_graph(b.host(), &p, r(1, 4), r(1, 2)).unwrap();
        assert_eq!(c.graph(), Graph::complete(3).unwrap());

        let e = Graph::empty(6).unwrap();
        let c = cluster_graph(&e, &Partition::blocks(&[2, 2, 2]).unwrap(), r(1, 4), r(1, 10)).unwrap();
        assert!(c.edges.is_empty());

        let t = turan_graph(6, 5).unwrap();
        let c = cluster_graph(&t, &Partition::blocks(&[2, 2, 2]).unwrap(), r(1, 4), r(1, 1)).unwrap();
        // 0 and 5 share a part, so only the pair ({0,1},{4,5}) misses a cross edge
        assert_eq!(c.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(c.pair(0, 2).unwrap().density, r(3, 4));
    }

    #[test]
    fn majority_coloring_examples() {
        let k5 = k5_no_mono_triangle();
        let b = blow_up(&k5, &[2; 5]).unwrap();
        let p = Partition::blocks(&[2; 5]).unwrap();
        let c = majority_color_clusters(&b, &p, r(1, 4), r(1, 2)).unwrap();
        let colored = c.colored().unwrap();
        assert_eq!(colored.canonical_code().unwrap(), k5.canonical_code().unwrap());
        assert_eq!(c.rho_star(), Some(r(2, 1)));

        let mono = EdgeColoring::monochromatic(Graph::complete(6).unwrap());
        let c = majority_color_clusters(&mono, &Partition::blocks(&[2, 2, 2]).unwrap(), r(1, 4), r(1, 2)).unwrap();
        assert!(c.cluster_coloring.as_ref().unwrap().iter().all(|&x| x == 0));
        assert!(c.rho_star().unwrap() <= r(1, 1));

        // one pair with 3 edges of color 0 and 2 of color 1
        let pair = EdgeColoring::from_colored_edges(4, [(0, 2, 1), (0, 3, 0), (1, 2, 0), (1, 3, 0)]).unwrap();
        let pair = EdgeColoring::from_colored_edges(5, pair.colored_edges().chain([(1, 4, 1)])).unwrap();
        let p = Partition::from_lists(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        let c = majority_color_clusters(&pair, &p, r(1, 1), r(1, 10)).unwrap();
        assert_eq!(c.edges, vec![(0, 1)]);
        let host_color_of_majority = pair.color(0, 3).unwrap();
        assert_eq!(c.cluster_coloring.unwrap(), vec![host_color_of_majority]);
    }

    #[test]
    fn majority_tie_goes_to_smallest_color() {
        let c2 = EdgeColoring::from_colored_edges(4, [(0, 2, 0), (1, 3, 1)]).unwrap();
        let p = Partition::from_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let c = majority_color_clusters(&c2, &p, r(1, 1), r(1, 10)).unwrap();
        assert_eq!(c.cluster_coloring.unwrap(), vec![0]);
    }
}
