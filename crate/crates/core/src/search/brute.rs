use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::PermGroup;

/// Largest degree accepted by the exhaustive filter.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Filters all `n!` permutations of `0..n` by `keep` (Heap's algorithm) and
/// returns the group they generate together with the number that passed.
pub fn brute_force_group(n: usize, keep: impl Fn(&Perm) -> bool) -> Result<(PermGroup, usize)> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force degree",
            size: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut passed = Vec::new();
    let mut visit = |images: &[usize]| {
        let p = Perm::from_images_unchecked(images.to_vec());
        if keep(&p) {
            passed.push(p);
        }
    };
    visit(&images);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            visit(&images);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let count = passed.len();
    Ok((PermGroup::closure_of(n, passed), count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_all_permutations() {
        for n in 0..=6 {
            let (g, count) = brute_force_group(n, |_| true).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(count, fact);
            assert_eq!(g.order(), fact as u128);
        }
    }

    #[test]
    fn rejects_large_degree() {
        assert!(brute_force_group(11, |_| true).is_err());
    }
}
