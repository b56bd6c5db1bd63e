use crate::hecke::KLTable;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

/// The partitions of `W` into left, right and two-sided cells.
///
/// Cells are indexed by their smallest element id, so the labels do not
/// depend on traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellPartition {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    two_sided: Vec<Vec<usize>>,
    left_of: Vec<usize>,
    right_of: Vec<usize>,
    two_sided_of: Vec<usize>,
}

fn components(n: usize, edges: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut graph = DiGraph::<(), ()>::with_capacity(n, edges.len());
    for _ in 0..n {
        graph.add_node(());
    }
    for &(a, b) in edges {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
    }
    let mut cells: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|i| i.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    cells.sort_by_key(|c| c[0]);
    let mut of = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &w in c {
            of[w] = i;
        }
    }
    (cells, of)
}

impl CellPartition {
    /// Cells from the generator products `c_s c_w` and `c_w c_s`: an edge
    /// `w → y` whenever `c_y` occurs in one of them.
    pub fn compute(kl: &KLTable) -> Self {
        let g = kl.group();
        let n = g.order();
        let mut left_edges = Vec::new();
        let mut right_edges = Vec::new();
        for w in 0..n {
            for s in 0..g.rank() {
                for (y, _) in kl.left_mul(s, w) {
                    if *y as usize != w {
                        left_edges.push((w, *y as usize));
                    }
                }
                for (y, _) in kl.right_mul(w, s) {
                    if y as usize != w {
                        right_edges.push((w, y as usize));
                    }
                }
            }
        }
        Self::from_edges(n, left_edges, right_edges)
    }

    /// Same partition from all products `c_x c_w` and `c_w c_x`; used as an
    /// oracle for [`CellPartition::compute`].
    pub fn compute_full_sweep(kl: &KLTable) -> Self {
        let g = kl.group();
        let n = g.order();
        let mut left_edges = Vec::new();
        let mut right_edges = Vec::new();
        for w in 0..n {
            for x in 0..n {
                for (y, _) in kl.structure_constants(x, w) {
                    left_edges.push((w, y as usize));
                }
                for (y, _) in kl.structure_constants(w, x) {
                    right_edges.push((w, y as usize));
                }
            }
        }
        Self::from_edges(n, left_edges, right_edges)
    }

    fn from_edges(n: usize, left_edges: Vec<(usize, usize)>, right_edges: Vec<(usize, usize)>) -> Self {
        let (left, left_of) = components(n, &left_edges);
        let (right, right_of) = components(n, &right_edges);
        let mut both = left_edges;
        both.extend(right_edges);
        let (two_sided, two_sided_of) = components(n, &both);
        CellPartition { left, right, two_sided, left_of, right_of, two_sided_of }
    }

    pub fn left_cells(&self) -> &[Vec<usize>] {
        &self.left
    }

    pub fn right_cells(&self) -> &[Vec<usize>] {
        &self.right
    }

    pub fn two_sided_cells(&self) -> &[Vec<usize>] {
        &self.two_sided
    }

    pub fn left_cell_of(&self, w: usize) -> usize {
        self.left_of[w]
    }

    pub fn right_cell_of(&self, w: usize) -> usize {
        self.right_of[w]
    }

    pub fn two_sided_cell_of(&self, w: usize) -> usize {
        self.two_sided_of[w]
    }

    /// Left cells contained in the two-sided cell `t`.
    pub fn left_cells_in(&self, t: usize) -> Vec<usize> {
        (0..self.left.len()).filter(|&c| self.two_sided_of[self.left[c][0]] == t).collect()
    }

    /// The two-sided cell containing the left cell `c`.
    pub fn two_sided_of_left(&self, c: usize) -> usize {
        self.two_sided_of[self.left[c][0]]
    }
}
