//! Group descriptors such as `F21`, `Z2^3`, `D4` or `Q8xZ2^2`.

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Parses a descriptor: factors `Z<n>`, `Z<n>^<k>`, `D<n>` (order `2n`),
/// `Q8`, `S<k>` (`k ≤ 5`) and `F21`, joined by `x` into direct products.
pub fn parse_group(descriptor: &str) -> Result<GroupTable> {
    let text = descriptor.trim();
    if text.is_empty() {
        return Err(Error::UnknownGroup(descriptor.to_string()));
    }
    let mut factors = text.split('x').map(|f| parse_factor(f.trim(), descriptor));
    let first = factors.next().expect("split yields one piece")?;
    factors.try_fold(first, |acc, f| Ok(GroupTable::direct_product(&acc, &f?)))
}

fn parse_factor(factor: &str, whole: &str) -> Result<GroupTable> {
    let bad = || Error::UnknownGroup(whole.to_string());
    let (base, power) = match factor.split_once('^') {
        Some((b, p)) => (b, p.parse::<u32>().map_err(|_| bad())?),
        None => (factor, 1),
    };
    if power == 0 {
        return Ok(GroupTable::cyclic(1));
    }
    let number = |prefix: &str| -> Result<usize> {
        base.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(bad)
    };
    let single = match base {
        "Q8" => GroupTable::q8(),
        "F21" => GroupTable::f21(),
        _ if base.starts_with('Z') => GroupTable::cyclic(number("Z")?),
        _ if base.starts_with('D') => {
            let n = number("D")?;
            if n < 2 {
                return Err(bad());
            }
            GroupTable::dihedral(n)
        }
        _ if base.starts_with('S') => {
            let k = number("S")?;
            if k > 5 {
                return Err(bad());
            }
            GroupTable::symmetric(k)
        }
        _ => return Err(bad()),
    };
    let mut out = single.clone();
    for _ in 1..power {
        out = GroupTable::direct_product(&out, &single);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (d, n) in [
            ("Z5", 5),
            ("Z2^3", 8),
            ("D4", 8),
            ("Q8", 8),
            ("Q8xZ2", 16),
            ("Q8xZ2^2", 32),
            ("S3", 6),
            ("F21", 21),
            ("Z5xF21", 105),
            ("Z1", 1),
        ] {
            assert_eq!(parse_group(d).unwrap().order(), n, "{d}");
        }
    }

    #[test]
    fn shapes() {
        assert!(parse_group("Z2^3").unwrap().is_abelian());
        assert!(!parse_group("D4").unwrap().is_abelian());
        assert_eq!(parse_group("Z5xF21").unwrap().center().len(), 5);
    }

    #[test]
    fn rejects_garbage() {
        for d in ["", "Y3", "Z", "Z0", "S9", "D1", "Z2^x", "Q8xx"] {
            assert!(parse_group(d).is_err(), "{d}");
        }
    }
}
