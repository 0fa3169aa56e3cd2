//! Injection from pairs with `a ≡ 0 (mod 2r)`, `b` odd into pairs with
//! `a ≡ 1 (mod 2r)`, `b` even, trading a block of the rectangle for growth
//! of the largest part of `λ`.

use crate::partition::{mu_partition, PairSpec, PartitionPair};
use crate::{Error, Result};

const NAME: &str = "thm62";

fn outside(p: &PartitionPair) -> Error {
    Error::OutsideDomain { map: NAME, pair: p.to_string() }
}

/// The amount moved into the largest part when the rectangle `(x^y)` came
/// from `((y+z)^{x+z})`, `z = (−y) mod 2r`.
fn moved(x: u32, y: u32, r: u32) -> u32 {
    let m = 2 * r;
    let z = (m - y % m) % m;
    (y + z) * (x + z) - x * y
}

pub fn map_t_thm62(p: &PartitionPair, r: u32) -> Result<PartitionPair> {
    if !(PairSpec::Thm62Domain { r }).admits(p.size(), p)? {
        return Err(outside(p));
    }
    let (lam, a, b) = (&p.lambda, p.a, p.b);
    let c = (b - 1) % (2 * r);
    let d = a * b - (a - c) * (b - c);
    let mu = if lam.is_empty() {
        mu_partition(d)?
    } else {
        let top = lam.largest();
        lam.without_part(top).expect("nonempty").with_part(top + d)?
    };
    PartitionPair::new(mu, b - c, a - c)
}

/// 1 for `μ₁−μ₂ > D`, 2 for `μ = μ(D)`, where `D = (y+z)(x+z)−xy`.
pub fn image_case(p: &PartitionPair, r: u32) -> Option<u8> {
    if !(PairSpec::Thm62Codomain { r }).admits(p.size(), p).unwrap_or(false) {
        return None;
    }
    let d = moved(p.a, p.b, r);
    if p.lambda.first_gap() > d {
        Some(1)
    } else if mu_partition(d).is_ok_and(|mu| mu == p.lambda) {
        Some(2)
    } else {
        None
    }
}

pub fn map_l_thm62(p: &PartitionPair, r: u32) -> Result<PartitionPair> {
    let case = image_case(p, r).ok_or_else(|| outside(p))?;
    let (mu, x, y) = (&p.lambda, p.a, p.b);
    let m = 2 * r;
    let z = (m - y % m) % m;
    let lam = if case == 1 {
        let top = mu.largest();
        mu.without_part(top).expect("nonempty").with_part(top - moved(x, y, r))?
    } else {
        crate::partition::Partition::empty()
    };
    PartitionPair::new(lam, y + z, x + z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::make_partition;

    fn pair(parts: &[i64], a: u32, b: u32) -> PartitionPair {
        PartitionPair::new(make_partition(parts).unwrap(), a, b).unwrap()
    }

    #[test]
    fn worked_cases() {
        let cases = [(pair(&[5], 4, 3), pair(&[15], 1, 2)), (pair(&[], 4, 1), pair(&[], 1, 4))];
        for (x, y) in cases {
            assert_eq!(map_t_thm62(&x, 2).unwrap(), y);
            assert_eq!(map_l_thm62(&y, 2).unwrap(), x);
        }
    }

    #[test]
    fn r1_conjugates_the_rectangle() {
        for (parts, a, b) in [(&[3, 1][..], 2, 3), (&[][..], 4, 1), (&[7][..], 6, 5)] {
            let x = pair(parts, a, b);
            assert_eq!(map_t_thm62(&x, 1).unwrap(), pair(parts, b, a));
        }
    }

    #[test]
    fn rejects_outside_domain() {
        assert!(map_t_thm62(&pair(&[3], 4, 2), 2).is_err());
        assert!(map_t_thm62(&pair(&[3], 2, 1), 2).is_err());
        assert!(map_l_thm62(&pair(&[3], 1, 2), 2).is_err());
    }
}
