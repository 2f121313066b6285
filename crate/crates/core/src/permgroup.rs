//! Permutation groups backed by a deterministic stabilizer chain.
//!
//! The chain is a Sims table: for a fixed ordering `β_0, β_1, ...` of all
//! points, level `k` holds the subgroup `G_k` fixing `β_0..β_{k-1}`
//! pointwise, a transversal of the orbit of `β_k` under `G_k`, and the
//! generators added at that level. Levels whose orbit is trivial are skipped
//! when reporting the base, so with the default ordering the base consists of
//! the smallest moved points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `reps[j] = Some((u, u⁻¹))` with `u(point) = j`, for `j` in the orbit.
    reps: Vec<Option<(Perm, Perm)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut reps = vec![None; degree];
        let id = Perm::identity(degree);
        reps[point] = Some((id.clone(), id));
        Level {
            point,
            gens: Vec::new(),
            reps,
            orbit: vec![point],
        }
    }
}

enum Task {
    /// Add an element of `G_k` to the generators of level `k` unless it is
    /// already represented.
    Add(usize, Perm),
    /// Record an element of `G_k` in the level-`k` transversal, or pass the
    /// resulting Schreier generator down to level `k + 1`.
    Close(usize, Perm),
}

/// Stabilizer chain over a fixed point ordering.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, point_order: &[usize]) -> Self {
        debug_assert_eq!(point_order.len(), degree);
        StabChain {
            degree,
            levels: point_order.iter().map(|&p| Level::new(p, degree)).collect(),
        }
    }

    /// Sifts `g` starting at level `k`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` when it went all the way).
    fn sift_from(&self, k: usize, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(k) {
            let j = h.apply(level.point);
            if j == level.point {
                continue;
            }
            match &level.reps[j] {
                Some((_, uinv)) => h = uinv.compose(&h),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(0, g).0.is_identity()
    }

    /// Adds `g` to the group and restores the chain invariants.
    pub fn extend(&mut self, g: Perm) {
        let mut work = vec![Task::Add(0, g)];
        while let Some(task) = work.pop() {
            match task {
                Task::Add(k, g) => {
                    if k >= self.levels.len() || self.sift_from(k, &g).0.is_identity() {
                        continue;
                    }
                    let level = &mut self.levels[k];
                    level.gens.push(g.clone());
                    for &j in &level.orbit {
                        let u = &level.reps[j].as_ref().unwrap().0;
                        work.push(Task::Close(k, g.compose(u)));
                    }
                }
                Task::Close(k, t) => {
                    let level = &mut self.levels[k];
                    let j = t.apply(level.point);
                    match &level.reps[j] {
                        None => {
                            for s in &level.gens {
                                work.push(Task::Close(k, s.compose(&t)));
                            }
                            let tinv = t.inverse();
                            level.reps[j] = Some((t, tinv));
                            level.orbit.push(j);
                        }
                        Some((_, uinv)) => {
                            let schreier = uinv.compose(&t);
                            if !schreier.is_identity() {
                                work.push(Task::Add(k + 1, schreier));
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, |acc, x| acc.checked_mul(x))
            .expect("group order overflows u128")
    }

    /// Base points (levels with nontrivial orbit), in chain order.
    pub fn base(&self) -> Vec<usize> {
        self.levels
            .iter()
            .filter(|l| l.orbit.len() > 1)
            .map(|l| l.point)
            .collect()
    }

    /// Transversal sizes along the base.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .filter(|l| l.orbit.len() > 1)
            .map(|l| l.orbit.len())
            .collect()
    }

    /// Generators of the pointwise stabilizer of the first `k` points of the
    /// ordering.
    pub fn stabilizer_generators(&self, k: usize) -> Vec<Perm> {
        self.levels[k.min(self.levels.len())..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.stabilizer_generators(0)
    }

    /// Strong generators grouped by the level that introduced them.
    fn levels_with_gens(&self) -> impl Iterator<Item = (usize, &[Perm])> {
        self.levels.iter().map(|l| (l.point, l.gens.as_slice()))
    }

    /// Every element, by expanding the transversals. Only for small groups.
    fn elements(&self) -> Vec<Perm> {
        let mut acc = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for &j in &level.orbit {
                let u = &level.reps[j].as_ref().unwrap().0;
                next.extend(acc.iter().map(|h| u.compose(h)));
            }
            acc = next;
        }
        acc
    }
}

/// A permutation group on `0..degree`, held as generators plus a stabilizer
/// chain. Immutable once built.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
}

/// Serialized form; the chain is rebuilt on load.
#[derive(Serialize, Deserialize)]
struct PermGroupJson {
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    /// Builds the chain with the default base ordering `0, 1, ..., n-1`.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        let order: Vec<usize> = (0..degree).collect();
        Self::with_point_order(degree, generators, &order)
    }

    /// Builds the chain with a custom ordering of candidate base points.
    pub fn with_point_order(degree: usize, generators: Vec<Perm>, point_order: &[usize]) -> Self {
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generator degree mismatch"
        );
        let mut chain = StabChain::new(degree, point_order);
        for g in &generators {
            chain.extend(g.clone());
        }
        PermGroup {
            degree,
            generators,
            chain,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new())
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[&[0, 1]]).unwrap());
            let c: Vec<usize> = (0..degree).collect();
            gens.push(Perm::from_cycles(degree, &[&c]).unwrap());
        }
        Self::new(degree, gens)
    }

    /// The group generated by `elements`, keeping only those that enlarge the
    /// group as generators.
    pub fn closure_of(degree: usize, elements: impl IntoIterator<Item = Perm>) -> Self {
        let order: Vec<usize> = (0..degree).collect();
        let mut chain = StabChain::new(degree, &order);
        let mut generators = Vec::new();
        for g in elements {
            if !chain.contains(&g) {
                chain.extend(g.clone());
                generators.push(g);
            }
        }
        PermGroup {
            degree,
            generators,
            chain,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.transversal_sizes()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.chain.strong_generators()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    /// Checks every strong generator fixes all base points of earlier levels.
    pub fn chain_is_consistent(&self) -> bool {
        let mut earlier = Vec::new();
        for (point, gens) in self.chain.levels_with_gens() {
            if !gens.iter().all(|g| earlier.iter().all(|&b| g.fixes(b))) {
                return false;
            }
            earlier.push(point);
        }
        self.generators.iter().all(|g| self.contains(g))
    }

    /// All elements; intended for small groups only.
    pub fn elements(&self) -> Vec<Perm> {
        self.chain.elements()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Subgroup and equality test by order plus generator membership.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// Orbit partition; each orbit ascending, orbits ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn orbit(&self, p: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[p] = true;
        let mut out = vec![p];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Every point stabilizer is trivial, i.e. each orbit has length |G|.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    /// Orbit lengths of the stabilizer of `p`, ascending.
    pub fn suborbit_lengths(&self, p: usize) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.point_stabilizer(p).orbits().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }

    /// Pointwise stabilizer of `points`, computed by rebuilding the chain
    /// with those points first in the base ordering.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let mut order: Vec<usize> = points.to_vec();
        let mut used = vec![false; self.degree];
        for &p in points {
            used[p] = true;
        }
        order.extend((0..self.degree).filter(|&p| !used[p]));
        let rebased = PermGroup::with_point_order(self.degree, self.generators.clone(), &order);
        let gens = rebased.chain.stabilizer_generators(points.len());
        PermGroup::new(self.degree, gens)
    }

    pub fn point_stabilizer(&self, p: usize) -> PermGroup {
        self.pointwise_stabilizer(&[p])
    }

    /// `Stab(p) = Stab(q)`, decided by order plus mutual generator membership.
    pub fn stabilizers_equal(&self, p: usize, q: usize) -> bool {
        self.point_stabilizer(p).same_group(&self.point_stabilizer(q))
    }

    /// True iff `self ◁ other`. Fails if `self` is not a subgroup of `other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: other.degree,
                found: self.degree,
            });
        }
        if let Some(i) = self.generators.iter().position(|g| !other.contains(g)) {
            return Err(Error::NotContained { generator: i });
        }
        Ok(other
            .generators
            .iter()
            .all(|k| self.generators.iter().all(|h| self.contains(&k.conjugate(h)))))
    }

    /// Orbits on the point set after the action is lifted to ordered pairs;
    /// entry `u·n + v` holds the index of the orbital containing `(u, v)`.
    /// Orbitals are numbered by least pair.
    pub fn orbital_matrix(&self) -> (Vec<usize>, usize) {
        let n = self.degree;
        let mut label = vec![usize::MAX; n * n];
        let mut count = 0;
        for start in 0..n * n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut stack = vec![start];
            while let Some(pq) = stack.pop() {
                let (u, v) = (pq / n, pq % n);
                for g in &self.generators {
                    let img = g.apply(u) * n + g.apply(v);
                    if label[img] == usize::MAX {
                        label[img] = count;
                        stack.push(img);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PermGroupJson {
            degree: self.degree,
            generators: self.generators.clone(),
        })
        .expect("group serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: PermGroupJson = serde_json::from_value(value.clone())?;
        if let Some(g) = raw.generators.iter().find(|g| g.degree() != raw.degree) {
            return Err(Error::DegreeMismatch {
                expected: raw.degree,
                found: g.degree(),
            });
        }
        Ok(PermGroup::new(raw.degree, raw.generators))
    }
}

/// Orbits of the group generated by `gens`.
pub fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    for g in gens {
        for x in 0..degree {
            uf.union(x, g.apply(x));
        }
    }
    uf.classes()
}

/// Disjoint-set forest with path halving; roots are class minima.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    #[test]
    fn trivial_and_symmetric() {
        assert_eq!(PermGroup::new(5, vec![]).order(), 1);
        assert_eq!(PermGroup::symmetric(5).order(), 120);
        assert_eq!(PermGroup::symmetric(8).order(), 40320);
        assert_eq!(PermGroup::symmetric(21).order(), 51_090_942_171_709_440_000);
    }

    #[test]
    fn left_regular_f21() {
        let g = GroupTable::f21();
        let gl = g.left_regular_group();
        assert_eq!(gl.order(), 21);
        assert!(gl.is_regular());
        for k in 0..21 {
            assert!(gl.contains(&g.left_translation(k)));
        }
        assert!(!gl.contains(&g.right_translation(g.parse_element("a").unwrap())));
        assert!(gl.chain_is_consistent());
    }

    #[test]
    fn orbits_of_sylow7_translations() {
        let g = GroupTable::f21();
        let x = g.parse_element("x").unwrap();
        let h = PermGroup::new(21, vec![g.left_translation(x)]);
        let orbits = h.orbits();
        assert_eq!(orbits.len(), 3);
        // ⟨x⟩ is normal, so left and right cosets agree.
        for o in &orbits {
            assert_eq!(o.len(), 7);
            let coset: Vec<usize> = {
                let mut c: Vec<usize> = (0..7).map(|i| g.mul(o[0], g.pow(x, i))).collect();
                c.sort();
                c
            };
            assert_eq!(*o, coset);
        }
    }

    #[test]
    fn normality() {
        let g = GroupTable::f21();
        let gl = g.left_regular_group();
        assert!(gl.is_normal_in(&gl).unwrap());
        let x = g.parse_element("x").unwrap();
        let xl = PermGroup::new(21, vec![g.left_translation(x)]);
        assert!(xl.is_normal_in(&gl).unwrap());
        let a = g.parse_element("a").unwrap();
        let al = PermGroup::new(21, vec![g.left_translation(a)]);
        assert!(!al.is_normal_in(&gl).unwrap());
        assert!(matches!(gl.is_normal_in(&xl), Err(Error::NotContained { .. })));
    }

    #[test]
    fn stabilizers() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.point_stabilizer(2);
        assert_eq!(st.order(), 24);
        assert!(st.generators().iter().all(|g| g.fixes(2)));
        assert_eq!(s5.pointwise_stabilizer(&[0, 4]).order(), 6);
        let g = GroupTable::f21().left_regular_group();
        assert!(g.point_stabilizer(7).is_trivial());
        assert!(g.stabilizers_equal(0, 5));
        assert!(!s5.stabilizers_equal(0, 1));
    }

    #[test]
    fn orbital_matrix_of_cycle() {
        let c = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let g = PermGroup::new(5, vec![c]);
        let (m, count) = g.orbital_matrix();
        assert_eq!(count, 5);
        assert_eq!(m[0], m[6]); // (0,0) ~ (1,1)
        assert_eq!(m[1], m[7]); // (0,1) ~ (1,2)
        assert_ne!(m[1], m[5]); // (0,1) vs (1,0)
    }

    #[test]
    fn json_rebuilds_chain() {
        let g = PermGroup::symmetric(4);
        let back = PermGroup::from_json(&g.to_json()).unwrap();
        assert_eq!(back.order(), 24);
        assert!(back.same_group(&g));
    }

    #[test]
    fn deterministic_chain() {
        let g = GroupTable::q8();
        let gens: Vec<Perm> = (0..8).map(|k| g.left_translation(k)).collect();
        let a = PermGroup::new(8, gens.clone());
        let b = PermGroup::new(8, gens);
        assert_eq!(a.base(), b.base());
        assert_eq!(a.strong_generators(), b.strong_generators());
        assert_eq!(a.order(), 8);
    }
}
