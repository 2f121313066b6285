//! Individualization–refinement backtracking.
//!
//! The automorphism search fixes a first path of individualizations down to
//! a discrete partition. For each level, deepest first, it tries to map the
//! chosen vertex to every other vertex of the target cell by searching the
//! corresponding subtree for a leaf whose labelling, compared with the first
//! leaf, is an automorphism. Vertices already in the orbit of the chosen one
//! under the automorphisms found so far are skipped, and so are orbit-mates
//! of vertices for which the subtree search failed.

use log::{log_enabled, trace, Level};

use super::digraph::ColoredDigraph;
use super::refine::RefinementState;
use crate::perm::Perm;
use crate::permgroup::UnionFind;

/// The first path: one node per depth, the node's invariant and the vertex
/// individualized to reach the next depth.
struct FirstPath {
    nodes: Vec<RefinementState>,
    invariants: Vec<u64>,
    chosen: Vec<usize>,
    leaf: Vec<usize>,
}

impl FirstPath {
    fn build(g: &ColoredDigraph) -> Self {
        let mut node = RefinementState::initial(g);
        let mut invariants = vec![node.refine(g)];
        let mut nodes = Vec::new();
        let mut chosen = Vec::new();
        while let Some(t) = node.target_cell() {
            let v = node.cells()[t][0];
            let mut child = node.individualize(v);
            invariants.push(child.refine(g));
            chosen.push(v);
            nodes.push(node);
            node = child;
        }
        let leaf = node.labeling();
        nodes.push(node);
        FirstPath {
            nodes,
            invariants,
            chosen,
            leaf,
        }
    }

    fn depth(&self) -> usize {
        self.chosen.len()
    }

    fn leaf_map(&self, labeling: &[usize]) -> Perm {
        let mut images = vec![0; self.leaf.len()];
        for (j, &v) in self.leaf.iter().enumerate() {
            images[v] = labeling[j];
        }
        Perm::from_images_unchecked(images)
    }
}

/// Result of an automorphism search.
pub(crate) struct SearchOutcome {
    pub generators: Vec<Perm>,
    pub base: Vec<usize>,
    /// Orbit length of each base point under the stabilizer of the earlier
    /// base points; their product is the group order.
    pub basic_orbits: Vec<usize>,
    pub nodes: usize,
}

struct Dfs<'a, F: Fn(&Perm) -> bool> {
    g: &'a ColoredDigraph,
    path: &'a FirstPath,
    accept: F,
    nodes: usize,
}

impl<F: Fn(&Perm) -> bool> Dfs<'_, F> {
    /// Searches below `state` (at `depth`, invariant already matched) for a
    /// leaf accepted by `accept`.
    fn search(&mut self, state: &RefinementState, depth: usize) -> Option<Perm> {
        self.nodes += 1;
        if log_enabled!(Level::Trace) {
            trace!("depth={} cells={:?}", depth, state.cell_sizes());
        }
        let Some(t) = state.target_cell() else {
            let p = self.path.leaf_map(&state.labeling());
            return (self.accept)(&p).then_some(p);
        };
        if depth >= self.path.depth() {
            return None;
        }
        for &w in &state.cells()[t] {
            let mut child = state.individualize(w);
            if child.refine(self.g) != self.path.invariants[depth + 1] {
                continue;
            }
            if let Some(p) = self.search(&child, depth + 1) {
                return Some(p);
            }
        }
        None
    }
}

/// Generators of the automorphism group of `g` (colors fixed).
pub(crate) fn automorphisms(g: &ColoredDigraph) -> SearchOutcome {
    let n = g.order();
    let path = FirstPath::build(g);
    let mut gens: Vec<Perm> = Vec::new();
    let mut orbits = UnionFind::new(n);
    let mut basic_orbits = vec![1; path.depth()];
    let mut nodes = path.nodes.len();
    for level in (0..path.depth()).rev() {
        let node = &path.nodes[level];
        let v = path.chosen[level];
        let cell = node.cells()[node.target_cell().expect("non-discrete on the first path")].clone();
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell {
            if w == v || orbits.find(w) == orbits.find(v) {
                continue;
            }
            if failed.iter().any(|&f| orbits.find(f) == orbits.find(w)) {
                continue;
            }
            let mut child = node.individualize(w);
            let found = if child.refine(g) == path.invariants[level + 1] {
                let mut dfs = Dfs {
                    g,
                    path: &path,
                    accept: |p: &Perm| g.is_automorphism(p),
                    nodes: 0,
                };
                let found = dfs.search(&child, level + 1);
                nodes += dfs.nodes;
                found
            } else {
                None
            };
            match found {
                Some(p) => {
                    trace!("level {level}: {v} -> {w} by automorphism");
                    for x in 0..n {
                        orbits.union(x, p.apply(x));
                    }
                    gens.push(p);
                }
                None => failed.push(w),
            }
        }
        let root = orbits.find(v);
        basic_orbits[level] = cell.iter().filter(|&&w| orbits.find(w) == root).count();
    }
    SearchOutcome {
        generators: gens,
        base: path.chosen.clone(),
        basic_orbits,
        nodes,
    }
}

/// How colors must correspond in an isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ColorMatch {
    /// Arc colors must be equal.
    Exact,
    /// Arc colors must correspond under some bijection.
    Renamed,
}

/// Finds `p` with `p(a) = b`, or `None`.
pub(crate) fn isomorphism(a: &ColoredDigraph, b: &ColoredDigraph, colors: ColorMatch) -> Option<Perm> {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return None;
    }
    // Under renamed colors, refinement runs on the uncolored digraphs and
    // the color bijection is checked at the leaves.
    let (ra, rb) = match colors {
        ColorMatch::Exact => (a.clone(), b.clone()),
        ColorMatch::Renamed => (a.uncolored(), b.uncolored()),
    };
    let path = FirstPath::build(&ra);
    let mut root = RefinementState::initial(&rb);
    if root.refine(&rb) != path.invariants[0] {
        return None;
    }
    let mut dfs = Dfs {
        g: &rb,
        path: &path,
        accept: |p: &Perm| match colors {
            ColorMatch::Exact => a.is_isomorphism_to(b, p),
            ColorMatch::Renamed => a.is_isomorphism_up_to_colors(b, p),
        },
        nodes: 0,
    };
    dfs.search(&root, 0)
}
