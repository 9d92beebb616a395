//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search engine; only plain `Graph`/`EdgeColoring` accessors.

#![allow(dead_code)]

use meanrt::{ColoringConstraint, EdgeColoring, Graph};
use rand::Rng;

/// Every permutation of `0..n` (Heap's algorithm order is irrelevant here).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every injective map from `0..k` into `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(k, n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::new(), &mut out);
    out
}

/// Whether some injective map sends every edge of `h` onto an edge accepted by `has_edge`.
pub fn brute_contains(n: usize, has_edge: impl Fn(usize, usize) -> bool, h: &Graph) -> bool {
    if h.n() > n {
        return false;
    }
    let h_edges: Vec<_> = h.edges().collect();
    injections(h.n(), n).iter().any(|phi| h_edges.iter().all(|&(a, b)| has_edge(phi[a], phi[b])))
}

/// Restricted growth strings of length `m`: all color-normalized colorings.
pub fn normalized_colorings(m: usize, mut visit: impl FnMut(&[u32])) {
    fn go(m: usize, q: u32, acc: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if acc.len() == m {
            visit(acc);
            return;
        }
        for c in 0..=q {
            acc.push(c);
            go(m, q.max(c + 1), acc, visit);
            acc.pop();
        }
    }
    go(m, 0, &mut Vec::new(), &mut visit);
}

/// Per-vertex color counts of an edge list with colors.
pub fn color_degrees(n: usize, edges: &[(usize, usize)], colors: &[u32]) -> Vec<usize> {
    (0..n)
        .map(|v| {
            let mut cs: Vec<u32> =
                edges.iter().zip(colors).filter(|(&(a, b), _)| a == v || b == v).map(|(_, &c)| c).collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        })
        .collect()
}

pub fn brute_satisfies(n: usize, edges: &[(usize, usize)], colors: &[u32], k: &ColoringConstraint) -> bool {
    let deg = color_degrees(n, edges, colors);
    match *k {
        ColoringConstraint::ExactlyKColors(b) => {
            let mut cs = colors.to_vec();
            cs.sort_unstable();
            cs.dedup();
            cs.len() <= b
        }
        ColoringConstraint::KLocal(b) => deg.iter().all(|&d| d <= b),
        ColoringConstraint::RhoMean(r) => {
            let sum: usize = deg.iter().sum();
            (sum as i64) * r.denom() <= r.numer() * n as i64
        }
    }
}

pub fn brute_mono(n: usize, edges: &[(usize, usize)], colors: &[u32], h: &Graph) -> bool {
    let q = colors.iter().copied().max().map_or(0, |c| c + 1);
    (0..q).any(|c| {
        brute_contains(
            n,
            |u, v| edges.iter().zip(colors).any(|(&(a, b), &col)| col == c && ((a, b) == (u, v) || (a, b) == (v, u))),
            h,
        )
    })
}

/// Minimum over vertex permutations of the adjacency bit string.
pub fn brute_graph_code(g: &Graph) -> Vec<bool> {
    permutations(g.n())
        .into_iter()
        .map(|p| {
            let mut bits = Vec::new();
            for i in 0..g.n() {
                for j in i + 1..g.n() {
                    bits.push(g.has_edge(p[i], p[j]));
                }
            }
            bits
        })
        .min()
        .unwrap_or_default()
}

/// All graphs on `n` vertices up to isomorphism, by brute-force codes.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .unwrap();
        seen.entry(brute_graph_code(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_coloring(rng: &mut impl Rng, n: usize, p: f64, q: u32) -> EdgeColoring {
    let g = random_graph(rng, n, p);
    EdgeColoring::from_fn(g, |_, _| rng.gen_range(0..q.max(1)))
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Number of monochromatic triangles.
pub fn mono_triangles(c: &EdgeColoring) -> usize {
    let n = c.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                if let (Some(x), Some(y), Some(z)) = (c.color(a, b), c.color(a, d), c.color(b, d)) {
                    if x == y && y == z {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}
