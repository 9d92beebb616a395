//! Canonical codes for colored graphs under vertex and color relabelling.
//!
//! A colored graph is viewed as a symmetric label matrix. Labels are either
//! absent, one of a few fixed markers (never permuted), or a color (freely
//! permutable). The code is the lexicographically least upper-triangle
//! reading over all leaves of an individualize-and-refine tree, with colors
//! renamed to first-use order along each reading. Refinement only uses
//! color-permutation invariant information (color class sizes), so the set
//! of leaves is an isomorphism invariant and the minimum is canonical.
//!
//! Transposing two vertices that see identical labels everywhere else is an
//! automorphism that fixes the current partition, so only one vertex of every
//! such twin class is individualized.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the canonical form.
pub const CANON_MAX_VERTICES: usize = 16;

pub(crate) const ABSENT: u32 = 0;
/// Marker for a host edge that has not been colored yet.
pub(crate) const UNCOLORED: u32 = 1;
const FIRST_COLOR: u32 = 2;

/// Symmetric label matrix; diagonal entries are `ABSENT`.
#[derive(Clone, Debug)]
pub(crate) struct LabelMatrix {
    n: usize,
    cells: Vec<u32>,
}

impl LabelMatrix {
    pub(crate) fn new(n: usize) -> Self {
        LabelMatrix { n, cells: vec![ABSENT; n * n] }
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, label: u32) {
        self.cells[u * self.n + v] = label;
        self.cells[v * self.n + u] = label;
    }

    #[inline]
    pub(crate) fn set_color(&mut self, u: usize, v: usize, color: u32) {
        self.set(u, v, FIRST_COLOR + color);
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> u32 {
        self.cells[u * self.n + v]
    }
}

pub fn canonical_code(c: &EdgeColoring) -> Result<Vec<u8>> {
    if c.n() > CANON_MAX_VERTICES {
        return Err(Error::budget(format!("canonical code limited to {CANON_MAX_VERTICES} vertices, got {}", c.n())));
    }
    let mut m = LabelMatrix::new(c.n());
    for (u, v, col) in c.colored_edges() {
        m.set_color(u, v, col);
    }
    Ok(code_of(&m))
}

/// Canonical code of an uncolored graph (all edges share one color).
pub fn graph_code(g: &crate::Graph) -> Result<Vec<u8>> {
    canonical_code(&EdgeColoring::monochromatic(g.clone()))
}

pub(crate) fn code_of(m: &LabelMatrix) -> Vec<u8> {
    let n = m.n;
    debug_assert!(n <= CANON_MAX_VERTICES);
    // refinement label: fixed markers stay, colors become their class size
    let mut class_size = std::collections::HashMap::new();
    for u in 0..n {
        for v in u + 1..n {
            let l = m.get(u, v);
            if l >= FIRST_COLOR {
                *class_size.entry(l).or_insert(0u32) += 1;
            }
        }
    }
    let inv: Vec<u32> =
        m.cells.iter().map(|&l| if l >= FIRST_COLOR { FIRST_COLOR + class_size[&l] } else { l }).collect();
    let mut search = Search { m, inv: &inv, best: None };
    search.descend(vec![(0..n).collect()]);
    let mut code = vec![n as u8];
    code.extend(search.best.unwrap_or_default());
    code
}

struct Search<'a> {
    m: &'a LabelMatrix,
    inv: &'a [u32],
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, mut partition: Vec<Vec<usize>>) {
        self.refine(&mut partition);
        let Some(target) = partition.iter().position(|cell| cell.len() > 1) else {
            let order: Vec<usize> = partition.iter().map(|cell| cell[0]).collect();
            let code = self.reading(&order);
            if self.best.as_ref().is_none_or(|b| code < *b) {
                self.best = Some(code);
            }
            return;
        };
        let cell = partition[target].clone();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            if reps.iter().any(|&r| self.twins(r, v)) {
                continue;
            }
            reps.push(v);
            let mut child = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            self.descend(child);
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        (0..self.m.n).all(|x| x == a || x == b || self.m.get(a, x) == self.m.get(b, x))
    }

    /// Splits cells by the multiset of (cell index, label) over neighbours
    /// until the partition is stable.
    fn refine(&self, partition: &mut Vec<Vec<usize>>) {
        let n = self.m.n;
        loop {
            let mut cell_of = vec![0usize; n];
            for (i, cell) in partition.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let signature = |v: usize| {
                let mut s: Vec<(usize, u32)> = (0..n)
                    .filter(|&u| u != v && self.inv[v * n + u] != ABSENT)
                    .map(|u| (cell_of[u], self.inv[v * n + u]))
                    .collect();
                s.sort_unstable();
                s
            };
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
            for cell in partition.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|k| k.1).collect());
                        start = i;
                    }
                }
            }
            let split = next.len() > partition.len();
            *partition = next;
            if !split {
                return;
            }
        }
    }

    /// Upper triangle in the given vertex order with colors renamed to first use.
    fn reading(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let mut rename: Vec<(u32, u8)> = Vec::new();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let l = self.m.get(order[i], order[j]);
                let b = if l < FIRST_COLOR {
                    l as u8
                } else if let Some(&(_, id)) = rename.iter().find(|r| r.0 == l) {
                    id
                } else {
                    let id = (FIRST_COLOR as usize + rename.len()) as u8;
                    rename.push((l, id));
                    id
                };
                out.push(b);
            }
        }
        out
    }
}
