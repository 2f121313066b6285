//! Naturally edge-colored Cayley graphs and digraphs.
//!
//! In graph mode the edge `{g, gs}` is colored by the inverse pair
//! `{s, s⁻¹}`; the color id is `min(s, s⁻¹)` as an element index. In digraph
//! mode the arc `(g, gs)` is colored by `s` itself, so `s` and `s⁻¹` get
//! different colors.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};
use crate::perm::Perm;

/// A connection set: identity excluded, and inverse-closed in graph mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    members: ElementSet,
    inverse_closed: bool,
}

impl ConnectionSet {
    /// Inverse-closed connection set for an undirected Cayley graph.
    pub fn new(group: &GroupTable, members: ElementSet) -> Result<Self> {
        Self::check_range(group, &members)?;
        if members.contains(group.identity()) {
            return Err(Error::IdentityInConnectionSet);
        }
        if let Some(s) = members.iter().find(|&s| !members.contains(group.inv(s))) {
            return Err(Error::NotInverseClosed(s));
        }
        Ok(ConnectionSet {
            members,
            inverse_closed: true,
        })
    }

    /// Connection set for a Cayley digraph; only the identity is excluded.
    pub fn arcs(group: &GroupTable, members: ElementSet) -> Result<Self> {
        Self::check_range(group, &members)?;
        if members.contains(group.identity()) {
            return Err(Error::IdentityInConnectionSet);
        }
        let inverse_closed = members.iter().all(|s| members.contains(group.inv(s)));
        Ok(ConnectionSet {
            members,
            inverse_closed,
        })
    }

    /// `S ∪ S⁻¹` for any identity-free set of elements.
    pub fn symmetric_closure(group: &GroupTable, elements: &[usize]) -> Result<Self> {
        let members = ElementSet::new(group.order(), elements.iter().flat_map(|&s| [s, group.inv(s)]))?;
        Self::new(group, members)
    }

    /// `G ∖ {1}`.
    pub fn complete(group: &GroupTable) -> Self {
        let members = ElementSet::new(group.order(), (0..group.order()).filter(|&x| x != group.identity()))
            .expect("indices in range");
        ConnectionSet {
            members,
            inverse_closed: true,
        }
    }

    fn check_range(group: &GroupTable, members: &ElementSet) -> Result<()> {
        match members.iter().find(|&s| s >= group.order()) {
            Some(s) => Err(Error::ElementOutOfRange(s)),
            None => Ok(()),
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.contains(s)
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_closed
    }

    pub fn labels(&self, group: &GroupTable) -> Vec<String> {
        self.members.iter().map(|s| group.label(s).to_string()).collect()
    }
}

/// A Cayley graph `Cay(G, S)` with the natural edge coloring, or a Cayley
/// digraph with arcs colored by their connection element.
#[derive(Clone, Debug)]
pub struct ColoredCayleyGraph {
    group: Arc<GroupTable>,
    connection: ConnectionSet,
    /// `color_of[s]` for `s ∈ S`.
    color_of: Vec<Option<usize>>,
    /// `adjacency[g]` lists `(g·s, color(s))` for `s ∈ S` ascending.
    adjacency: Vec<Vec<(usize, usize)>>,
    digraph: bool,
}

/// Serialized form: `{group_ref, connection_set, edges: [(u, v, color)]}`.
#[derive(Serialize)]
pub struct GraphJson {
    pub group_ref: String,
    pub connection_set: Vec<usize>,
    pub edges: Vec<(usize, usize, usize)>,
}

impl ColoredCayleyGraph {
    /// `Cay(G, S)` with the natural coloring `c(s) = c(s⁻¹)`.
    pub fn new(group: Arc<GroupTable>, connection: ConnectionSet) -> Result<Self> {
        if !connection.inverse_closed {
            let s = connection
                .members
                .iter()
                .find(|&s| !connection.contains(group.inv(s)))
                .unwrap();
            return Err(Error::NotInverseClosed(s));
        }
        Ok(Self::build(group, connection, false))
    }

    /// Cayley digraph with arc `(g, gs)` colored by `s`.
    pub fn digraph(group: Arc<GroupTable>, connection: ConnectionSet) -> Self {
        Self::build(group, connection, true)
    }

    fn build(group: Arc<GroupTable>, connection: ConnectionSet, digraph: bool) -> Self {
        let n = group.order();
        let mut color_of = vec![None; n];
        for s in connection.members.iter() {
            color_of[s] = Some(if digraph { s } else { s.min(group.inv(s)) });
        }
        let adjacency = (0..n)
            .map(|g| {
                connection
                    .members
                    .iter()
                    .map(|s| (group.mul(g, s), color_of[s].unwrap()))
                    .collect()
            })
            .collect();
        ColoredCayleyGraph {
            group,
            connection,
            color_of,
            adjacency,
            digraph,
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn is_digraph(&self) -> bool {
        self.digraph
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn valency(&self) -> usize {
        self.connection.len()
    }

    pub fn neighbors(&self, g: usize) -> &[(usize, usize)] {
        &self.adjacency[g]
    }

    pub fn color_of(&self, s: usize) -> Option<usize> {
        self.color_of[s]
    }

    /// Distinct colors, ascending.
    pub fn colors(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.color_of.iter().flatten().copied().collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Color of the edge/arc from `u` to `v`, if present.
    pub fn edge_color(&self, u: usize, v: usize) -> Option<usize> {
        self.color_of[self.group.mul(self.group.inv(u), v)]
    }

    /// Edges (graph mode: `u ≤ v`, each once) or arcs with their colors.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &(v, c) in nbrs {
                if self.digraph || u <= v {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// The edge set of one color class.
    pub fn color_class(&self, color: usize) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(_, _, c)| c == color)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    /// Connected (weakly, in digraph mode) iff `S` generates `G`.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for s in self.connection.members.iter() {
                    for v in [self.group.mul(u, s), self.group.mul(u, self.group.inv(s))] {
                        if comp[v] == usize::MAX {
                            comp[v] = id;
                            members.push(v);
                            queue.push_back(v);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True iff `alpha` maps every color class onto itself.
    pub fn is_color_preserving(&self, alpha: &Perm) -> bool {
        alpha.degree() == self.order()
            && self.adjacency.iter().enumerate().all(|(u, nbrs)| {
                nbrs.iter()
                    .all(|&(v, c)| self.edge_color(alpha.apply(u), alpha.apply(v)) == Some(c))
            })
    }

    /// True iff `alpha` is an automorphism of the underlying uncolored
    /// (di)graph.
    pub fn is_automorphism(&self, alpha: &Perm) -> bool {
        alpha.degree() == self.order()
            && self.adjacency.iter().enumerate().all(|(u, nbrs)| {
                nbrs.iter()
                    .all(|&(v, _)| self.edge_color(alpha.apply(u), alpha.apply(v)).is_some())
            })
    }

    pub fn to_json(&self, group_ref: &str) -> GraphJson {
        GraphJson {
            group_ref: group_ref.to_string(),
            connection_set: self.connection.members.as_slice().to_vec(),
            edges: self.edges(),
        }
    }
}

/// `Cay(G, S)` with the natural coloring.
pub fn build_cayley(group: Arc<GroupTable>, connection: ConnectionSet) -> Result<ColoredCayleyGraph> {
    ColoredCayleyGraph::new(group, connection)
}

/// `Cay(G/N, S/N)` with `S/N = {sN : sN ≠ N}` and its natural coloring,
/// together with the map from elements of `G` to cosets.
pub fn quotient_graph(graph: &ColoredCayleyGraph, normal: &ElementSet) -> Result<(ColoredCayleyGraph, Vec<usize>)> {
    let g = graph.group();
    let (q, coset) = g.quotient(normal)?;
    let qid = q.identity();
    let members = ElementSet::new(
        q.order(),
        graph.connection.members.iter().map(|s| coset[s]).filter(|&c| c != qid),
    )?;
    let q = Arc::new(q);
    let conn = if graph.digraph {
        ConnectionSet::arcs(&q, members)?
    } else {
        ConnectionSet::new(&q, members)?
    };
    let out = if graph.digraph {
        ColoredCayleyGraph::digraph(q, conn)
    } else {
        ColoredCayleyGraph::new(q, conn)?
    };
    Ok((out, coset))
}

/// `Γ1 □ Γ2` as the Cayley graph of `G1 × G2` on `S1 × {1} ∪ {1} × S2`.
pub fn cartesian_product(a: &ColoredCayleyGraph, b: &ColoredCayleyGraph) -> Result<ColoredCayleyGraph> {
    let (ga, gb) = (a.group(), b.group());
    let prod = GroupTable::direct_product(ga, gb);
    let n2 = gb.order();
    let members = ElementSet::new(
        prod.order(),
        a.connection
            .members
            .iter()
            .map(|s| s * n2 + gb.identity())
            .chain(b.connection.members.iter().map(|t| ga.identity() * n2 + t)),
    )?;
    let prod = Arc::new(prod);
    if a.digraph || b.digraph {
        let conn = ConnectionSet::arcs(&prod, members)?;
        Ok(ColoredCayleyGraph::digraph(prod, conn))
    } else {
        let conn = ConnectionSet::new(&prod, members)?;
        ColoredCayleyGraph::new(prod, conn)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f21_gamma() -> ColoredCayleyGraph {
        let g = Arc::new(GroupTable::f21());
        let s = g.parse_set("a,a^2,ax,(ax)^-1").unwrap();
        ColoredCayleyGraph::new(g.clone(), ConnectionSet::new(&g, s).unwrap()).unwrap()
    }

    #[test]
    fn f21_graph_is_4_valent_and_connected() {
        let gamma = f21_gamma();
        assert_eq!(gamma.valency(), 4);
        assert_eq!(gamma.colors().len(), 2);
        assert!(gamma.is_connected());
        assert_eq!(gamma.edges().len(), 42);
    }

    #[test]
    fn complete_q8_has_four_colors() {
        let q = Arc::new(GroupTable::q8());
        let k8 = ColoredCayleyGraph::new(q.clone(), ConnectionSet::complete(&q)).unwrap();
        assert_eq!(k8.valency(), 7);
        assert_eq!(k8.colors().len(), 4);
        // -1 is self-inverse: its class is a perfect matching.
        let minus_one = q.parse_element("-1").unwrap();
        assert_eq!(k8.color_class(k8.color_of(minus_one).unwrap()).len(), 4);
        let i = q.parse_element("i").unwrap();
        assert_eq!(k8.color_class(k8.color_of(i).unwrap()).len(), 8);
    }

    #[test]
    fn triangle() {
        let z3 = Arc::new(GroupTable::cyclic(3));
        let s = ConnectionSet::new(&z3, ElementSet::new(3, [1, 2]).unwrap()).unwrap();
        let k3 = ColoredCayleyGraph::new(z3, s).unwrap();
        assert_eq!(k3.colors(), vec![1]);
        assert_eq!(k3.edges().len(), 3);
    }

    #[test]
    fn connection_set_validation() {
        let g = GroupTable::f21();
        let a = g.parse_element("a").unwrap();
        assert!(matches!(
            ConnectionSet::new(&g, ElementSet::new(21, [a]).unwrap()),
            Err(Error::NotInverseClosed(_))
        ));
        assert!(matches!(
            ConnectionSet::new(&g, ElementSet::new(21, [0]).unwrap()),
            Err(Error::IdentityInConnectionSet)
        ));
        let arcs = ConnectionSet::arcs(&g, ElementSet::new(21, [a]).unwrap()).unwrap();
        let g = Arc::new(g);
        assert!(ColoredCayleyGraph::new(g.clone(), arcs.clone()).is_err());
        assert!(ColoredCayleyGraph::digraph(g, arcs).is_digraph());
    }

    #[test]
    fn sylow7_graph_has_three_components() {
        let g = Arc::new(GroupTable::f21());
        let x = g.parse_element("x").unwrap();
        let s = ConnectionSet::symmetric_closure(&g, &[x]).unwrap();
        let gamma = ColoredCayleyGraph::new(g, s).unwrap();
        assert!(!gamma.is_connected());
        let comps = gamma.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 7));
    }

    #[test]
    fn left_translations_preserve_colors() {
        let gamma = f21_gamma();
        for k in 0..21 {
            assert!(gamma.is_color_preserving(&gamma.group().left_translation(k)));
        }
    }

    #[test]
    fn quotient_by_sylow7_is_triangle() {
        let gamma = f21_gamma();
        let x = gamma.group().parse_element("x").unwrap();
        let n = gamma.group().subgroup_generated(&[x]);
        let (q, coset) = quotient_graph(&gamma, &n).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.valency(), 2);
        assert_eq!(q.colors().len(), 1);
        // projection of every edge is an edge
        for (u, v, _) in gamma.edges() {
            assert!(q.edge_color(coset[u], coset[v]).is_some());
        }
        let trivial = gamma.group().subgroup_generated(&[]);
        let (same, _) = quotient_graph(&gamma, &trivial).unwrap();
        assert_eq!(same.edges(), gamma.edges());
        let a = gamma.group().parse_element("a").unwrap();
        let not_normal = gamma.group().subgroup_generated(&[a]);
        assert!(quotient_graph(&gamma, &not_normal).is_err());
    }

    #[test]
    fn product_counts() {
        let z2 = Arc::new(GroupTable::cyclic(2));
        let k2 = ColoredCayleyGraph::new(z2.clone(), ConnectionSet::complete(&z2)).unwrap();
        let sq = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(sq.order(), 4);
        assert_eq!(sq.edges().len(), 4);
        assert!(sq.components().len() == 1 && sq.valency() == 2);

        let z5 = Arc::new(GroupTable::cyclic(5));
        let c5 = ColoredCayleyGraph::new(z5.clone(), ConnectionSet::symmetric_closure(&z5, &[1]).unwrap()).unwrap();
        let gamma = f21_gamma();
        let p = cartesian_product(&c5, &gamma).unwrap();
        assert_eq!(p.order(), 105);
        assert_eq!(p.valency(), 6);
        assert_eq!(p.edges().len(), 5 * 42 + 21 * 5);
        assert_eq!(p.colors().len(), 3);
    }
}
