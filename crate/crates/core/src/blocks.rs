//! Invariant partitions (block systems) of permutation groups, the induced
//! action on blocks, and its kernel.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::{PermGroup, UnionFind};

/// A partition of `0..n` into blocks of equal size.
///
/// Blocks are numbered by their least point and each block is ascending, so
/// two equal partitions always compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockSystem {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Canonicalizes an arbitrary labelling `point → block label`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut renumber = std::collections::HashMap::new();
        let mut block_of = vec![0; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (p, &l) in labels.iter().enumerate() {
            let b = *renumber.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[p] = b;
            blocks[b].push(p);
        }
        if let Some(first) = blocks.first() {
            let size = first.len();
            if blocks.iter().any(|b| b.len() != size) {
                return Err(Error::InvalidBlockSystem("blocks have unequal sizes".into()));
            }
        }
        Ok(BlockSystem { block_of, blocks })
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &p in b {
                if p >= n || labels[p] != usize::MAX {
                    return Err(Error::InvalidBlockSystem(format!("point {p} repeated or out of range")));
                }
                labels[p] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidBlockSystem("blocks do not cover every point".into()));
        }
        Self::from_labels(&labels)
    }

    /// Every point in its own block.
    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>()).unwrap()
    }

    /// One block containing everything.
    pub fn whole(n: usize) -> Self {
        Self::from_labels(&vec![0; n]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, p: usize) -> usize {
        self.block_of[p]
    }

    pub fn block_index(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() <= 1 || self.block_size() == 1
    }

    /// Finest partition coarser than both.
    pub fn join(&self, other: &BlockSystem) -> Result<BlockSystem> {
        let n = self.degree();
        let mut uf = UnionFind::new(n);
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let labels: Vec<usize> = (0..n).map(|p| uf.find(p)).collect();
        BlockSystem::from_labels(&labels)
    }

    /// Image of block `b` under `g`, if `g` maps it onto a single block.
    fn image_block(&self, g: &Perm, b: usize) -> Option<usize> {
        let block = &self.blocks[b];
        let target = self.block_of[g.apply(block[0])];
        block
            .iter()
            .all(|&p| self.block_of[g.apply(p)] == target)
            .then_some(target)
    }

    /// The permutation `g` induces on blocks, if `g` preserves the partition.
    pub fn induced(&self, g: &Perm) -> Option<Perm> {
        let images: Option<Vec<usize>> = (0..self.num_blocks()).map(|b| self.image_block(g, b)).collect();
        Perm::from_images(images?).ok()
    }

    pub fn is_invariant_under(&self, gens: &[Perm]) -> bool {
        gens.iter().all(|g| self.induced(g).is_some())
    }
}

/// Finest `G`-invariant partition in which `seed.0` and `seed.1` share a
/// block, by union-find congruence closure.
pub fn minimal_block_system(group: &PermGroup, seed: (usize, usize)) -> Result<BlockSystem> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(congruence_closure(group.degree(), group.generators(), &[seed]))
}

fn congruence_closure(n: usize, gens: &[Perm], seeds: &[(usize, usize)]) -> BlockSystem {
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in seeds {
        if uf.union(a, b) {
            queue.push((a, b));
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (ga, gb) = (g.apply(a), g.apply(b));
            if uf.union(ga, gb) {
                queue.push((ga, gb));
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|p| uf.find(p)).collect();
    BlockSystem::from_labels(&labels).expect("congruence of a transitive group has equal blocks")
}

/// Every block system of a transitive group, sorted by `block_of` array.
///
/// Minimal systems from seeds `(0, p)` are closed under joins; since any
/// block system is the join of the minimal systems of the points in the
/// block of `0`, this yields the whole lattice, trivial systems included.
pub fn all_block_systems(group: &PermGroup) -> Result<Vec<BlockSystem>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    let mut found: BTreeSet<BlockSystem> = BTreeSet::new();
    found.insert(BlockSystem::singletons(n));
    for p in 1..n {
        found.insert(congruence_closure(n, group.generators(), &[(0, p)]));
    }
    loop {
        let current: Vec<BlockSystem> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if found.insert(a.join(b)?) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// True iff the only invariant partitions are the trivial ones.
pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    Ok((1..n).all(|p| congruence_closure(n, group.generators(), &[(0, p)]).num_blocks() == 1))
}

/// The action induced on blocks: the group on `0..num_blocks` and the image
/// of each generator.
pub fn block_action(group: &PermGroup, blocks: &BlockSystem) -> Result<(PermGroup, Vec<Perm>)> {
    check_degree(group, blocks)?;
    let images = group
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| blocks.induced(g).ok_or(Error::BlockNotInvariant { generator: i }))
        .collect::<Result<Vec<_>>>()?;
    Ok((PermGroup::new(blocks.num_blocks(), images.clone()), images))
}

/// The kernel of the action on blocks.
///
/// Each generator is lifted to the disjoint union `blocks ⊔ points`, acting
/// by its block image on the first part. A chain whose base lists the block
/// points first then has the kernel as the pointwise stabilizer of those
/// levels: its generators are the sifted Schreier generators that act
/// trivially on blocks.
pub fn fixer(group: &PermGroup, blocks: &BlockSystem) -> Result<PermGroup> {
    let (_, images) = block_action(group, blocks)?;
    let m = blocks.num_blocks();
    let n = group.degree();
    let lifted: Vec<Perm> = group
        .generators()
        .iter()
        .zip(&images)
        .map(|(g, b)| {
            let mut img: Vec<usize> = b.images().to_vec();
            img.extend(g.images().iter().map(|&x| x + m));
            Perm::from_images(img).expect("disjoint union of bijections")
        })
        .collect();
    let order: Vec<usize> = (0..m + n).collect();
    let chain = PermGroup::with_point_order(m + n, lifted, &order);
    let kernel_gens: Vec<Perm> = chain
        .pointwise_stabilizer(&(0..m).collect::<Vec<_>>())
        .generators()
        .iter()
        .map(|k| {
            Perm::from_images(k.images()[m..].iter().map(|&x| x - m).collect())
                .expect("kernel element restricts to the points")
        })
        .filter(|k| !k.is_identity())
        .collect();
    Ok(PermGroup::new(n, kernel_gens))
}

fn check_degree(group: &PermGroup, blocks: &BlockSystem) -> Result<()> {
    if group.degree() != blocks.degree() {
        return Err(Error::DegreeMismatch {
            expected: group.degree(),
            found: blocks.degree(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    fn left_cosets(g: &GroupTable, h: &[usize]) -> BlockSystem {
        let sub = g.subgroup_generated(h);
        let labels: Vec<usize> = (0..g.order())
            .map(|x| sub.iter().map(|k| g.mul(x, k)).min().unwrap())
            .collect();
        BlockSystem::from_labels(&labels).unwrap()
    }

    #[test]
    fn minimal_block_of_regular_group_is_coset_partition() {
        let g = GroupTable::f21();
        let gl = g.left_regular_group();
        for s in 1..21 {
            let b = minimal_block_system(&gl, (g.identity(), s)).unwrap();
            assert_eq!(b, left_cosets(&g, &[s]), "seed element {s}");
        }
    }

    #[test]
    fn symmetric_group_is_primitive() {
        let s5 = PermGroup::symmetric(5);
        assert!(is_primitive(&s5).unwrap());
        let all = all_block_systems(&s5).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&BlockSystem::whole(5)));
        assert!(all.contains(&BlockSystem::singletons(5)));
    }

    #[test]
    fn lattice_of_cyclic_12() {
        // Block systems of the regular ℤ12 are the coset partitions of its
        // six subgroups.
        let z = GroupTable::cyclic(12);
        let systems = all_block_systems(&z.left_regular_group()).unwrap();
        let mut sizes: Vec<usize> = systems.iter().map(|b| b.block_size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        for b in &systems {
            assert!(b.is_invariant_under(z.left_regular_group().generators()));
        }
    }

    #[test]
    fn rejects_intransitive() {
        let p = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let g = PermGroup::new(4, vec![p]);
        assert!(matches!(minimal_block_system(&g, (0, 1)), Err(Error::NotTransitive)));
    }

    #[test]
    fn fixer_of_sylow7_cosets() {
        let g = GroupTable::f21();
        let gl = g.left_regular_group();
        let x = g.parse_element("x").unwrap();
        let b = left_cosets(&g, &[x]);
        let f = fixer(&gl, &b).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.orbits(), b.blocks().to_vec());
        let (act, _) = block_action(&gl, &b).unwrap();
        assert_eq!(act.degree(), 3);
        assert_eq!(act.order() * f.order(), gl.order());
        assert!(f.is_normal_in(&gl).unwrap());
    }

    #[test]
    fn fixer_trivial_partitions() {
        let s4 = PermGroup::symmetric(4);
        assert!(fixer(&s4, &BlockSystem::whole(4)).unwrap().same_group(&s4));
        assert!(fixer(&s4, &BlockSystem::singletons(4)).unwrap().is_trivial());
    }

    #[test]
    fn non_invariant_partition_rejected() {
        let s4 = PermGroup::symmetric(4);
        let b = BlockSystem::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(matches!(fixer(&s4, &b), Err(Error::BlockNotInvariant { .. })));
    }

    #[test]
    fn unequal_blocks_rejected() {
        assert!(BlockSystem::from_blocks(3, &[vec![0, 1], vec![2]]).is_err());
    }
}
