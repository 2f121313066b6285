//! Finite groups as explicit multiplication tables.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::PermGroup;

/// Largest order for which associativity is verified exhaustively.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;
/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 512;

/// A finite group given by its multiplication table over indices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
    /// Named generators used when parsing words such as `(ax)^-1`.
    gen_names: Vec<(String, usize)>,
}

/// A subset of a group, kept as a sorted list of distinct indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new(order: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange(x));
        }
        Ok(ElementSet(set.into_iter().collect()))
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn from_flags(flags: &[bool]) -> Self {
        ElementSet(flags.iter().enumerate().filter_map(|(i, &f)| f.then_some(i)).collect())
    }

    pub fn flags(&self, order: usize) -> Vec<bool> {
        let mut f = vec![false; order];
        for &x in &self.0 {
            f[x] = true;
        }
        f
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Serialized form: `{order, mult (row-major), labels}`.
#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    mult: Vec<usize>,
    labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    generators: Vec<(String, usize)>,
}

impl GroupTable {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms (associativity exhaustively up to order 256).
    pub fn from_table(order: usize, mult: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroupTable(format!("unsupported order {order}")));
        }
        if mult.len() != order * order {
            return Err(Error::InvalidGroupTable(format!(
                "table has {} entries, expected {}",
                mult.len(),
                order * order
            )));
        }
        if let Some(&x) = mult.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange(x));
        }
        // Latin square.
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                let r = mult[a * order + b];
                let c = mult[b * order + a];
                if row[r] || col[c] {
                    return Err(Error::InvalidGroupTable(format!("row or column {a} repeats an entry")));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mult[e * order + x] == x && mult[x * order + e] == x))
            .ok_or_else(|| Error::InvalidGroupTable("no two-sided identity".into()))?;
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mult[x * order + y] == identity)
                .expect("latin square has an identity in every row");
            if mult[y * order + x] != identity {
                return Err(Error::InvalidGroupTable(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
            inv[x] = y;
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = mult[a * order + b];
                    for c in 0..order {
                        if mult[ab * order + c] != mult[a * order + mult[b * order + c]] {
                            return Err(Error::InvalidGroupTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            Some(_) => return Err(Error::InvalidGroupTable("label count mismatch".into())),
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(GroupTable {
            order,
            mult,
            identity,
            inv,
            labels,
            gen_names: Vec::new(),
        })
    }

    fn with_generators(mut self, gens: Vec<(String, usize)>) -> Self {
        self.gen_names = gens;
        self
    }

    /// The cyclic group ℤ_n; element `i` is labeled `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let mult = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let g = GroupTable::from_table(n, mult, None).expect("cyclic table is a group");
        let gens = if n > 1 { vec![("g".to_string(), 1)] } else { vec![] };
        g.with_generators(gens)
    }

    /// The nonabelian group of order 21, `⟨a, x | a³ = x⁷ = e, a⁻¹xa = x²⟩`.
    ///
    /// Element `x^i a^j` has index `3i + j`, so the Sylow 7-subgroup is
    /// `{0, 3, 6, ..., 18}`.
    pub fn f21() -> Self {
        // a x a⁻¹ = x⁴, so a^j x^k = x^(k·4^j) a^j.
        let pow4 = [1usize, 4, 2];
        let mut mult = vec![0; 21 * 21];
        for p in 0..21 {
            let (i, j) = (p / 3, p % 3);
            for q in 0..21 {
                let (k, l) = (q / 3, q % 3);
                let xi = (i + k * pow4[j]) % 7;
                let aj = (j + l) % 3;
                mult[p * 21 + q] = 3 * xi + aj;
            }
        }
        let labels = (0..21)
            .map(|p| {
                let (i, j) = (p / 3, p % 3);
                let xs = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                let as_ = match j {
                    0 => String::new(),
                    1 => "a".to_string(),
                    _ => "a^2".to_string(),
                };
                let s = xs + &as_;
                if s.is_empty() {
                    "e".to_string()
                } else {
                    s
                }
            })
            .collect();
        GroupTable::from_table(21, mult, Some(labels))
            .expect("F21 table is a group")
            .with_generators(vec![("a".into(), 1), ("x".into(), 3)])
    }

    /// The quaternion group with elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn q8() -> Self {
        // Unit basis 0=1, 1=i, 2=j, 3=k; product table (sign, unit).
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let idx = |neg: bool, u: usize| 2 * u + neg as usize;
        let mut mult = vec![0; 64];
        for p in 0..8 {
            for q in 0..8 {
                let (np, up) = (p % 2 == 1, p / 2);
                let (nq, uq) = (q % 2 == 1, q / 2);
                let (ns, us) = UNIT[up][uq];
                mult[p * 8 + q] = idx(np ^ nq ^ ns, us);
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::from_table(8, mult, Some(labels))
            .expect("Q8 table is a group")
            .with_generators(vec![("i".into(), 2), ("j".into(), 4), ("k".into(), 6)])
    }

    /// `Q8 × ℤ2^k`, of order `2^(3+k)`.
    pub fn hamiltonian_2group(k: usize) -> Self {
        (0..k).fold(GroupTable::q8(), |g, _| {
            GroupTable::direct_product(&g, &GroupTable::cyclic(2))
        })
    }

    /// `ℤ_p^k` as an iterated direct product.
    pub fn elementary_abelian(p: usize, k: usize) -> Self {
        (0..k).fold(GroupTable::cyclic(1), |g, _| {
            GroupTable::direct_product(&g, &GroupTable::cyclic(p))
        })
    }

    /// The dihedral group of order `2n`; `r^i s^j` has index `i + n·j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let order = 2 * n;
        let mut mult = vec![0; order * order];
        for p in 0..order {
            let (i, a) = (p % n, p / n);
            for q in 0..order {
                let (j, b) = (q % n, q / n);
                let rot = if a == 0 { (i + j) % n } else { (i + n - j) % n };
                mult[p * order + q] = rot + n * ((a + b) % 2);
            }
        }
        let labels = (0..order)
            .map(|p| {
                let (i, a) = (p % n, p / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{i}"),
                };
                let s = r + if a == 1 { "s" } else { "" };
                if s.is_empty() {
                    "e".into()
                } else {
                    s
                }
            })
            .collect();
        let mut gens = vec![];
        if n > 1 {
            gens.push(("r".to_string(), 1));
        }
        gens.push(("s".to_string(), n));
        GroupTable::from_table(order, mult, Some(labels))
            .expect("dihedral table is a group")
            .with_generators(gens)
    }

    /// The symmetric group on `k ≤ 5` letters, elements in lexicographic
    /// order of their image arrays.
    pub fn symmetric(k: usize) -> Self {
        assert!((1..=5).contains(&k), "symmetric group supported for k <= 5");
        let mut elems: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut done = false;
        while !done {
            // next lexicographic permutation
            let mut p = elems.last().unwrap().clone();
            match (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) {
                None => done = true,
                Some(i) => {
                    let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).unwrap();
                    p.swap(i, j);
                    p[i + 1..].reverse();
                    elems.push(p);
                }
            }
        }
        let perms: Vec<Perm> = elems.into_iter().map(Perm::from_images_unchecked).collect();
        let index = |p: &Perm| perms.iter().position(|q| q == p).unwrap();
        let order = perms.len();
        let mut mult = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = index(&perms[a].compose(&perms[b]));
            }
        }
        let labels = perms.iter().map(|p| format!("{p:?}")).collect();
        let mut gens = Vec::new();
        if k >= 2 {
            let t = Perm::from_cycles(k, &[&[0, 1]]).unwrap();
            let c: Vec<usize> = (0..k).collect();
            let c = Perm::from_cycles(k, &[&c]).unwrap();
            gens.push(("t".to_string(), index(&t)));
            if k >= 3 {
                gens.push(("c".to_string(), index(&c)));
            }
        }
        GroupTable::from_table(order, mult, Some(labels))
            .expect("symmetric table is a group")
            .with_generators(gens)
    }

    /// Direct product with pairs `(i, j)` encoded as `i·|H| + j`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let (m, n) = (g.order, h.order);
        let order = m * n;
        assert!(order <= MAX_GROUP_ORDER, "product order {order} too large");
        let mut mult = vec![0; order * order];
        for p in 0..order {
            let (a, b) = (p / n, p % n);
            for q in 0..order {
                let (c, d) = (q / n, q % n);
                mult[p * order + q] = g.mul(a, c) * n + h.mul(b, d);
            }
        }
        // Trivial factors keep the other factor's labels.
        let labels = (0..order)
            .map(|p| {
                let (a, b) = (p / n, p % n);
                match (m, n) {
                    (1, _) => h.labels[b].clone(),
                    (_, 1) => g.labels[a].clone(),
                    _ => format!("({},{})", g.labels[a], h.labels[b]),
                }
            })
            .collect();
        let mut gens: Vec<(String, usize)> = g
            .gen_names
            .iter()
            .map(|(s, x)| (s.clone(), x * n + h.identity))
            .collect();
        for (s, y) in &h.gen_names {
            let mut name = s.clone();
            while gens.iter().any(|(t, _)| *t == name) {
                name.push('\'');
            }
            gens.push((name, g.identity * n + y));
        }
        GroupTable::from_table(order, mult, Some(labels))
            .expect("direct product is a group")
            .with_generators(gens)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generator_names(&self) -> &[(String, usize)] {
        &self.gen_names
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet(
            (0..self.order)
                .filter(|&z| (0..self.order).all(|g| self.commute(z, g)))
                .collect(),
        )
    }

    /// Left translation `x ↦ g·x` as a permutation of element indices.
    pub fn left_translation(&self, g: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order).map(|x| self.mul(g, x)).collect())
    }

    /// Right translation `x ↦ x·g`.
    pub fn right_translation(&self, g: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order).map(|x| self.mul(x, g)).collect())
    }

    /// The left regular representation `G_L`, generated by translations
    /// along a generating set.
    pub fn left_regular_group(&self) -> PermGroup {
        let gens = self
            .minimal_generating_set()
            .into_iter()
            .map(|g| self.left_translation(g))
            .collect();
        PermGroup::new(self.order, gens)
    }

    /// Closure of `gens` under multiplication; always contains the identity.
    pub fn subgroup_generated(&self, gens: &[usize]) -> ElementSet {
        ElementSet::from_flags(&self.closure_flags(gens))
    }

    fn closure_flags(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(u) = queue.pop_front() {
            for &g in gens {
                let v = self.mul(u, g);
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        h.contains(self.identity) && h.iter().all(|a| h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// Checks `g H g⁻¹ = H` for every `g`.
    pub fn is_normal(&self, h: &ElementSet) -> bool {
        self.normality_witness(h).is_none()
    }

    fn normality_witness(&self, h: &ElementSet) -> Option<(usize, usize)> {
        (0..self.order).find_map(|g| h.iter().find(|&x| !h.contains(self.conjugate(g, x))).map(|x| (g, x)))
    }

    /// The quotient `G/N` and the map sending each element to its coset.
    /// Cosets are numbered by their smallest element.
    pub fn quotient(&self, n: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_subgroup(n) {
            return Err(Error::NotASubgroup);
        }
        if let Some((g, h)) = self.normality_witness(n) {
            return Err(Error::NotNormal { g, h });
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] == usize::MAX {
                let c = reps.len();
                reps.push(g);
                for x in n.iter() {
                    coset_of[self.mul(g, x)] = c;
                }
            }
        }
        let q = reps.len();
        let mut mult = vec![0; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mult[i * q + j] = coset_of[self.mul(a, b)];
            }
        }
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let gens = self
            .gen_names
            .iter()
            .filter(|(_, g)| coset_of[*g] != coset_of[self.identity])
            .map(|(s, g)| (s.clone(), coset_of[*g]))
            .collect();
        let table = GroupTable::from_table(q, mult, Some(labels))?.with_generators(gens);
        Ok((table, coset_of))
    }

    /// The subgroup `H` as a group in its own right, with the embedding of
    /// its indices into `G` (ascending).
    pub fn subgroup_table(&self, h: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        let elems = h.as_slice().to_vec();
        let k = elems.len();
        let pos = |x: usize| elems.binary_search(&x).expect("closed under product");
        let mut mult = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                mult[i * k + j] = pos(self.mul(elems[i], elems[j]));
            }
        }
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let gens = self
            .gen_names
            .iter()
            .filter(|(_, g)| h.contains(*g) && *g != self.identity)
            .map(|(s, g)| (s.clone(), pos(*g)))
            .collect();
        let table = GroupTable::from_table(k, mult, Some(labels))?.with_generators(gens);
        Ok((table, elems))
    }

    /// A generating set found greedily by scanning elements in order of
    /// decreasing element order (ties by index), then dropping redundant
    /// members.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order).filter(|&x| x != self.identity).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.closure_flags(&gens);
        for x in by_order {
            if span.iter().all(|&f| f) {
                break;
            }
            if !span[x] {
                gens.push(x);
                span = self.closure_flags(&gens);
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let mut trial = gens.clone();
            trial.remove(i);
            if self.closure_flags(&trial).iter().all(|&f| f) {
                gens = trial;
            } else {
                i += 1;
            }
        }
        gens
    }

    /// Every automorphism of the group, as permutations of element indices,
    /// sorted with the identity first.
    ///
    /// Backtracks over images of a minimal generating set; each candidate
    /// image has the same element order as its generator, and each partial
    /// assignment is checked by extending it over the subgroup generated so
    /// far.
    pub fn all_automorphisms(&self) -> Vec<Perm> {
        let gens = self.minimal_generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..self.order).filter(|&y| self.element_order(y) == o).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(gens.len());
        self.aut_backtrack(&gens, &candidates, &mut images, &mut out);
        out.sort();
        out
    }

    fn aut_backtrack(&self, gens: &[usize], candidates: &[Vec<usize>], images: &mut Vec<usize>, out: &mut Vec<Perm>) {
        let depth = images.len();
        let Some(map) = self.extend_homomorphism(&gens[..depth], images) else {
            return;
        };
        if depth == gens.len() {
            // gens generate G, so the map is total and injective.
            out.push(Perm::from_images_unchecked(map));
            return;
        }
        for &y in &candidates[depth] {
            images.push(y);
            self.aut_backtrack(gens, candidates, images, out);
            images.pop();
        }
    }

    /// Extends `gens[t] ↦ images[t]` multiplicatively over `⟨gens⟩`.
    /// Returns `None` if the assignment is inconsistent or not injective;
    /// entries outside `⟨gens⟩` are left as `usize::MAX`.
    fn extend_homomorphism(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        let mut used = vec![false; self.order];
        map[self.identity] = self.identity;
        used[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(u) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let v = self.mul(u, g);
                let img = self.mul(map[u], h);
                if map[v] == usize::MAX {
                    if used[img] {
                        return None;
                    }
                    used[img] = true;
                    map[v] = img;
                    queue.push_back(v);
                } else if map[v] != img {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// `Aut(G)` as a permutation group on element indices.
    pub fn automorphism_group(&self) -> PermGroup {
        PermGroup::closure_of(self.order, self.all_automorphisms())
    }

    /// True iff `map` (on element indices) is a group automorphism.
    pub fn is_automorphism(&self, map: &Perm) -> bool {
        map.degree() == self.order
            && (0..self.order)
                .all(|x| (0..self.order).all(|y| map.apply(self.mul(x, y)) == self.mul(map.apply(x), map.apply(y))))
    }

    /// Resolves an element written either as its label or as a word in the
    /// named generators, e.g. `a^2`, `ax`, `(ax)^-1`, `x^4a`.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        if let Some(i) = self.labels.iter().position(|l| l == t) {
            return Ok(i);
        }
        if matches!(t, "e" | "1" | "id") {
            return Ok(self.identity);
        }
        let mut parser = WordParser {
            group: self,
            chars: t.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let v = parser
            .product()
            .ok_or_else(|| Error::UnknownElement(text.to_string()))?;
        if parser.pos != parser.chars.len() {
            return Err(Error::UnknownElement(text.to_string()));
        }
        Ok(v)
    }

    /// Parses a comma-separated element list; commas inside parentheses
    /// belong to the element (product-group labels look like `(1,x)`).
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let mut items = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for c in text.chars() {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c)
                }
                ')' => {
                    depth -= 1;
                    cur.push(c)
                }
                ',' if depth == 0 => items.push(std::mem::take(&mut cur)),
                _ => cur.push(c),
            }
        }
        items.push(cur);
        let elems = items
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| self.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        ElementSet::new(self.order, elems)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupJson {
            order: self.order,
            mult: self.mult.clone(),
            labels: self.labels.clone(),
            generators: self.gen_names.clone(),
        })
        .expect("group serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GroupJson = serde_json::from_value(value.clone())?;
        let g = GroupTable::from_table(raw.order, raw.mult, Some(raw.labels))?;
        if let Some((_, x)) = raw.generators.iter().find(|(_, x)| *x >= g.order) {
            return Err(Error::ElementOutOfRange(*x));
        }
        Ok(g.with_generators(raw.generators))
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

struct WordParser<'a> {
    group: &'a GroupTable,
    chars: Vec<char>,
    pos: usize,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn product(&mut self) -> Option<usize> {
        let g = self.group;
        let mut acc = g.identity;
        let mut any = false;
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            if c == '*' || c == '.' {
                self.pos += 1;
                continue;
            }
            let base = self.atom()?;
            let e = self.exponent()?;
            acc = g.mul(acc, g.pow(base, e));
            any = true;
        }
        any.then_some(acc)
    }

    fn atom(&mut self) -> Option<usize> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let v = self.product()?;
            if self.peek() != Some(')') {
                return None;
            }
            self.pos += 1;
            return Some(v);
        }
        let rest: String = self.chars[self.pos..].iter().collect();
        // Longest generator name first.
        let mut best: Option<(usize, usize)> = None;
        for (name, idx) in &self.group.gen_names {
            if rest.starts_with(name.as_str()) && best.is_none_or(|(l, _)| name.chars().count() > l) {
                best = Some((name.chars().count(), *idx));
            }
        }
        if let Some((len, idx)) = best {
            self.pos += len;
            return Some(idx);
        }
        match self.peek() {
            Some('e') => {
                self.pos += 1;
                Some(self.group.identity)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                self.group.labels.iter().position(|l| *l == s)
            }
            _ => None,
        }
    }

    fn exponent(&mut self) -> Option<i64> {
        if self.peek() != Some('^') {
            return Some(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v: i64 = s.parse().ok()?;
        Some(if neg { -v } else { v })
    }
}
