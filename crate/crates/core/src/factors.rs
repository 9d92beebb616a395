//! Clique factors: partitions of the vertex set into cliques of prescribed sizes.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Disjoint cliques covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFactor {
    pub blocks: Vec<Vec<usize>>,
}

impl CliqueFactor {
    /// Blocks are disjoint, cover `0..g.n()` and each induces a clique.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::EMPTY;
        for block in &self.blocks {
            let set: VertexSet = block.iter().copied().collect();
            if set.len() != block.len() || !set.is_disjoint(covered) || !g.is_clique(set) {
                return false;
            }
            covered = covered.union(set);
        }
        covered == g.vertices() && self.blocks.iter().all(|b| b.iter().all(|&v| v < g.n()))
    }

    /// Block sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }
}

/// A partition of `V(g)` into cliques whose sizes form exactly the multiset
/// `sizes`. Each block is grown from the lowest uncovered vertex.
pub fn clique_factor(g: &Graph, sizes: &[usize]) -> Result<Option<CliqueFactor>> {
    if sizes.contains(&0) {
        return Err(Error::invalid("clique sizes must be at least 1"));
    }
    let total: usize = sizes.iter().sum();
    if total != g.n() {
        return Err(Error::invalid(format!("block sizes sum to {total}, graph has {} vertices", g.n())));
    }
    // remaining[s] = how many blocks of size s are still to place
    let max = sizes.iter().copied().max().unwrap_or(0);
    let mut remaining = vec![0usize; max + 1];
    for &s in sizes {
        remaining[s] += 1;
    }
    let mut blocks = Vec::new();
    Ok(place(g, g.vertices(), &mut remaining, &mut blocks).then_some(CliqueFactor { blocks }))
}

fn place(g: &Graph, uncovered: VertexSet, remaining: &mut [usize], blocks: &mut Vec<Vec<usize>>) -> bool {
    let Some(v) = uncovered.first() else {
        return true;
    };
    let pool = uncovered.intersection(g.neighbors(v));
    for size in 1..remaining.len() {
        if remaining[size] == 0 || pool.len() + 1 < size {
            continue;
        }
        remaining[size] -= 1;
        let mut block = vec![v];
        if grow(g, pool, size - 1, &mut block, &mut |block| {
            let set: VertexSet = block.iter().copied().collect();
            blocks.push(block.to_vec());
            if place(g, uncovered.difference(set), remaining, blocks) {
                return true;
            }
            blocks.pop();
            false
        }) {
            return true;
        }
        remaining[size] += 1;
    }
    false
}

/// Extends `block` by `need` vertices from `cand` in increasing order and
/// calls `done` on each completed clique until it returns true.
fn grow(
    g: &Graph,
    cand: VertexSet,
    need: usize,
    block: &mut Vec<usize>,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if need == 0 {
        return done(block);
    }
    let mut rest = cand;
    while let Some(x) = rest.first() {
        rest.remove(x);
        if rest.len() + 1 < need {
            return false;
        }
        block.push(x);
        if grow(g, rest.intersection(g.neighbors(x)), need - 1, block, done) {
            return true;
        }
        block.pop();
    }
    false
}

/// The size multisets tried for a graph on `n` vertices, in order:
/// all triangles; triangles and one `K_4`; triangles and two `K_4`, then
/// triangles and one `K_5`.
pub fn factor_shapes(n: usize) -> Vec<Vec<usize>> {
    let with = |extra: &[usize]| {
        let used: usize = extra.iter().sum();
        let mut s = vec![3; (n - used) / 3];
        s.extend_from_slice(extra);
        s
    };
    match n % 3 {
        0 => vec![with(&[])],
        1 if n >= 4 => vec![with(&[4])],
        2 => {
            let mut shapes = Vec::new();
            if n >= 8 {
                shapes.push(with(&[4, 4]));
            }
            if n >= 5 {
                shapes.push(with(&[5]));
            }
            shapes
        }
        _ => Vec::new(),
    }
}

/// First factor found among [`factor_shapes`]. No degree hypothesis is
/// required; graphs that violate it simply fail more often.
pub fn theorem3_factor(g: &Graph) -> Result<Option<CliqueFactor>> {
    if g.n() < 3 {
        return Err(Error::invalid(format!("factor search needs at least 3 vertices, got {}", g.n())));
    }
    for shape in factor_shapes(g.n()) {
        if let Some(f) = clique_factor(g, &shape)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_factor_examples() {
        let k6 = Graph::complete(6).unwrap();
        let f = clique_factor(&k6, &[3, 3]).unwrap().unwrap();
        assert!(f.is_valid_for(&k6));
        assert_eq!(f.blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(clique_factor(&Graph::complete_bipartite(3, 3).unwrap(), &[3, 3]).unwrap(), None);
        assert!(clique_factor(&k6, &[3, 2]).is_err());
        assert!(clique_factor(&k6, &[3, 3, 0]).is_err());
    }

    #[test]
    fn dense_nine_vertex_graph_has_triangle_factor() {
        // K_8 minus a perfect matching plus a vertex joined to all: δ = 7 > 6
        let mut g = Graph::complete(9).unwrap();
        for i in 0..4 {
            g.remove_edge(2 * i, 2 * i + 1).unwrap();
        }
        assert_eq!(g.min_degree(), 7);
        let f = clique_factor(&g, &[3, 3, 3]).unwrap().unwrap();
        assert!(f.is_valid_for(&g));
        assert_eq!(f.sizes(), vec![3, 3, 3]);
    }

    #[test]
    fn theorem3_factor_examples() {
        let k7 = Graph::complete(7).unwrap();
        assert_eq!(theorem3_factor(&k7).unwrap().unwrap().sizes(), vec![3, 4]);
        let k8 = Graph::complete(8).unwrap();
        let f8 = theorem3_factor(&k8).unwrap().unwrap();
        assert_eq!(f8.sizes(), vec![4, 4]);
        assert_eq!(theorem3_factor(&Graph::cycle(9).unwrap()).unwrap(), None);
        assert!(theorem3_factor(&Graph::complete(2).unwrap()).is_err());
    }

    #[test]
    fn k5_shape_used_when_two_k4_fail() {
        // K_5 plus a disjoint triangle: no two K_4s, but K_5 + K_3 works
        let mut g = Graph::empty(8).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, v).unwrap();
            }
        }
        for (u, v) in [(5, 6), (6, 7), (5, 7)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(theorem3_factor(&g).unwrap().unwrap().sizes(), vec![3, 5]);
    }

    #[test]
    fn shapes() {
        assert_eq!(factor_shapes(9), vec![vec![3, 3, 3]]);
        assert_eq!(factor_shapes(10), vec![vec![3, 3, 4]]);
        assert_eq!(factor_shapes(11), vec![vec![3, 4, 4], vec![3, 3, 5]]);
        assert_eq!(factor_shapes(5), vec![vec![5]]);
        assert_eq!(factor_shapes(4), vec![vec![4]]);
    }
}
