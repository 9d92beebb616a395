//! Extremal constructions: the pentagon 2-coloring of `K_5`, blow-ups, the
//! balanced 5-partite witness, and greedy mean-sparsification.

use crate::coloring::{ColoredGraph, ColoringConstraint, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{turan_part_sizes, Graph, MAX_VERTICES};
use crate::Rational;

/// `K_5` with color 0 on the cycle 0-1-2-3-4-0 and color 1 on the pentagram.
/// Both classes are 5-cycles, so there is no monochromatic triangle.
pub fn k5_no_mono_triangle() -> ColoredGraph {
    let k5 = Graph::complete(5).expect("K_5");
    EdgeColoring::from_fn(k5, |u, v| {
        let d = (v + 5 - u) % 5;
        u32::from(d != 1 && d != 4)
    })
}

/// Replaces vertex `v` by an independent set of `sizes[v]` clones. Clones of
/// `u` and `v` are joined exactly when `uv` is an edge, in the color of `uv`.
///
/// Clones are numbered in blocks: vertex `v` owns ids
/// `sizes[..v].sum() .. sizes[..=v].sum()`.
pub fn blow_up(cg: &ColoredGraph, sizes: &[usize]) -> Result<ColoredGraph> {
    if sizes.len() != cg.n() {
        return Err(Error::invalid(format!("{} blow-up sizes given for {} vertices", sizes.len(), cg.n())));
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_VERTICES {
        return Err(Error::invalid(format!("blow-up has {total} vertices, cap is {MAX_VERTICES}")));
    }
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    let clones = |v: usize| offsets[v]..offsets[v] + sizes[v];
    let mut triples = Vec::new();
    for (u, v, c) in cg.colored_edges() {
        for x in clones(u) {
            for y in clones(v) {
                triples.push((x, y, c));
            }
        }
    }
    EdgeColoring::from_colored_edges(total, triples)
}

/// Blow-up of [`k5_no_mono_triangle`] onto `T(n, 5)`, labelled so that its
/// underlying graph equals `turan_graph(n, 5)` (vertex `i` in part `i mod 5`).
pub fn turan5_witness(n: usize) -> Result<ColoredGraph> {
    if n < 5 {
        return Err(Error::invalid(format!("the T(n,5) witness needs n >= 5, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!("n = {n} exceeds the {MAX_VERTICES}-vertex cap")));
    }
    let sizes = turan_part_sizes(n, 5)?;
    let blown = blow_up(&k5_no_mono_triangle(), &sizes)?;
    // clone j of part p sits at block offset + j and moves to p + 5j
    let mut perm = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        perm.extend((0..s).map(|j| p + 5 * j));
    }
    blown.relabel(&perm)
}

/// Result of [`sparsify_to_mean`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sparsified {
    pub colored: ColoredGraph,
    /// Vertices whose incident edges were deleted, in deletion order.
    pub cleared: Vec<usize>,
    pub edges_removed: usize,
}

/// Deletes all edges at a non-isolated vertex of largest color degree
/// (lowest id on ties) until the coloring is `ρ`-mean. The vertex set is kept.
pub fn sparsify_to_mean(cg: &ColoredGraph, rho: Rational) -> Result<Sparsified> {
    let constraint = ColoringConstraint::mean(rho)?;
    let mut current = cg.clone();
    let mut cleared = Vec::new();
    while !current.satisfies(&constraint) {
        let degrees = current.color_degrees();
        let v = (0..current.n())
            .filter(|&v| degrees[v] > 0)
            .max_by_key(|&v| (degrees[v], std::cmp::Reverse(v)))
            .expect("a coloring with positive color sum has a non-isolated vertex");
        current = current.retain_edges(|a, b, _| a != v && b != v);
        cleared.push(v);
    }
    let edges_removed = cg.edge_count() - current.edge_count();
    Ok(Sparsified { colored: current, cleared, edges_removed })
}
