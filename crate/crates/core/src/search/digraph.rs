use std::collections::HashMap;

use crate::perm::Perm;

/// Arc-colored digraph with vertex colors, the common input of the search
/// engine. Arc colors are positive; `0` in the matrix means "no arc".
#[derive(Clone, Debug)]
pub struct ColoredDigraph {
    n: usize,
    out: Vec<Vec<(usize, u32)>>,
    inn: Vec<Vec<(usize, u32)>>,
    matrix: Vec<u32>,
    vertex_color: Vec<u32>,
}

impl ColoredDigraph {
    /// Builds from an arc list. A repeated arc keeps its last color.
    pub fn new(n: usize, vertex_color: Vec<u32>, arcs: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        assert_eq!(vertex_color.len(), n);
        let mut matrix = vec![0u32; n * n];
        for (u, v, c) in arcs {
            assert!(c > 0, "arc colors must be positive");
            matrix[u * n + v] = c;
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                let c = matrix[u * n + v];
                if c != 0 {
                    out[u].push((v, c));
                    inn[v].push((u, c));
                }
            }
        }
        ColoredDigraph {
            n,
            out,
            inn,
            matrix,
            vertex_color,
        }
    }

    /// Complete colored digraph from an `n × n` label matrix: arc `(u, v)`
    /// for `u ≠ v` gets color `label + 1`, vertex `u` gets `label(u, u)`.
    pub fn from_label_matrix(n: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), n * n);
        let vertex_color = (0..n).map(|u| labels[u * n + u] as u32).collect();
        let arcs = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u, v, labels[u * n + v] as u32 + 1));
        Self::new(n, vertex_color, arcs)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn out_arcs(&self, u: usize) -> &[(usize, u32)] {
        &self.out[u]
    }

    pub fn in_arcs(&self, u: usize) -> &[(usize, u32)] {
        &self.inn[u]
    }

    pub fn arc_color(&self, u: usize, v: usize) -> Option<u32> {
        match self.matrix[u * self.n + v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn vertex_color(&self, u: usize) -> u32 {
        self.vertex_color[u]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Same digraph with every arc color set to `1`.
    pub fn uncolored(&self) -> ColoredDigraph {
        let arcs = (0..self.n).flat_map(|u| self.out[u].iter().map(move |&(v, _)| (u, v, 1)));
        ColoredDigraph::new(self.n, self.vertex_color.clone(), arcs)
    }

    /// True iff `p` preserves vertex colors and maps every arc to an arc of
    /// the same color.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        self.is_isomorphism_to(self, p)
    }

    /// True iff `p` maps `self` onto `other` with identical colors.
    pub fn is_isomorphism_to(&self, other: &ColoredDigraph, p: &Perm) -> bool {
        if p.degree() != self.n || other.n != self.n || self.arc_count() != other.arc_count() {
            return false;
        }
        (0..self.n).all(|u| {
            let pu = p.apply(u);
            self.vertex_color[u] == other.vertex_color[pu]
                && self.out[u]
                    .iter()
                    .all(|&(v, c)| other.matrix[pu * self.n + p.apply(v)] == c)
        })
    }

    /// True iff `p` maps `self` onto `other` after some bijective renaming of
    /// arc colors (vertex colors must match exactly).
    pub fn is_isomorphism_up_to_colors(&self, other: &ColoredDigraph, p: &Perm) -> bool {
        if p.degree() != self.n || other.n != self.n || self.arc_count() != other.arc_count() {
            return false;
        }
        let mut forward: HashMap<u32, u32> = HashMap::new();
        let mut backward: HashMap<u32, u32> = HashMap::new();
        for u in 0..self.n {
            let pu = p.apply(u);
            if self.vertex_color[u] != other.vertex_color[pu] {
                return false;
            }
            for &(v, c) in &self.out[u] {
                let d = other.matrix[pu * self.n + p.apply(v)];
                if d == 0 {
                    return false;
                }
                if *forward.entry(c).or_insert(d) != d || *backward.entry(d).or_insert(c) != c {
                    return false;
                }
            }
        }
        true
    }
}
