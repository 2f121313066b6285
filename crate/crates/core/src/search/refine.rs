use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::digraph::ColoredDigraph;

/// An ordered partition of the vertices together with the individualized
/// vertices that produced it.
///
/// Cells are kept sorted by vertex index. Refinement splits each cell by the
/// multiset of `(cell of neighbor, arc color, direction)` over all incident
/// arcs and orders the pieces by that multiset, so the whole procedure
/// commutes with relabelling of the vertices.
#[derive(Clone, Debug)]
pub struct RefinementState {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
    stack: Vec<usize>,
}

type Signature = Vec<u64>;

impl RefinementState {
    /// Initial partition: vertices grouped by vertex color, cells in
    /// ascending color order.
    pub fn initial(g: &ColoredDigraph) -> Self {
        let mut colors: Vec<u32> = (0..g.order()).map(|v| g.vertex_color(v)).collect();
        colors.sort_unstable();
        colors.dedup();
        let cells: Vec<Vec<usize>> = colors
            .iter()
            .map(|&c| (0..g.order()).filter(|&v| g.vertex_color(v) == c).collect())
            .collect();
        let mut state = RefinementState {
            cell_of: vec![0; g.order()],
            cells,
            stack: Vec::new(),
        };
        state.reindex();
        state
    }

    fn reindex(&mut self) {
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                self.cell_of[v] = i;
            }
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn depth(&self) -> usize {
        self.stack.len()
    }

    pub fn individualized(&self) -> &[usize] {
        &self.stack
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// Index of the first smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Splits `v` off its cell into a singleton placed just before the rest.
    pub fn individualize(&self, v: usize) -> Self {
        let mut next = self.clone();
        let i = self.cell_of[v];
        let rest: Vec<usize> = self.cells[i].iter().copied().filter(|&w| w != v).collect();
        next.cells[i] = vec![v];
        next.cells.insert(i + 1, rest);
        next.reindex();
        next.stack.push(v);
        next
    }

    /// Vertex in position `j` of a discrete partition.
    pub fn labeling(&self) -> Vec<usize> {
        debug_assert!(self.is_discrete());
        self.cells.iter().map(|c| c[0]).collect()
    }

    fn signature(&self, g: &ColoredDigraph, v: usize) -> Signature {
        let mut sig: Signature = g
            .out_arcs(v)
            .iter()
            .map(|&(w, c)| (self.cell_of[w] as u64) << 34 | (c as u64) << 1)
            .chain(
                g.in_arcs(v)
                    .iter()
                    .map(|&(w, c)| (self.cell_of[w] as u64) << 34 | (c as u64) << 1 | 1),
            )
            .collect();
        sig.sort_unstable();
        sig
    }

    /// Refines to the coarsest equitable partition below the current one and
    /// returns a hash of its quotient structure.
    pub fn refine(&mut self, g: &ColoredDigraph) -> u64 {
        loop {
            let sigs: Vec<Signature> = (0..g.order()).map(|v| self.signature(g, v)).collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(self.cells.len());
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut members = cell.clone();
                members.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
                let mut start = 0;
                for k in 1..=members.len() {
                    if k == members.len() || sigs[members[k]] != sigs[members[start]] {
                        let mut piece = members[start..k].to_vec();
                        piece.sort_unstable();
                        next.push(piece);
                        start = k;
                    }
                }
            }
            if next.len() == self.cells.len() {
                let mut h = DefaultHasher::new();
                for cell in &self.cells {
                    cell.len().hash(&mut h);
                    sigs[cell[0]].hash(&mut h);
                }
                return h.finish();
            }
            self.cells = next;
            self.reindex();
        }
    }

    /// True iff every vertex of each cell has the same signature.
    pub fn is_equitable(&self, g: &ColoredDigraph) -> bool {
        self.cells.iter().all(|cell| {
            let s0 = self.signature(g, cell[0]);
            cell.iter().all(|&v| self.signature(g, v) == s0)
        })
    }
}
