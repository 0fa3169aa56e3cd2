//! Injection from pairs with `a, b` even into pairs with `a, b` odd (both
//! with `λ` into distinct odd parts), pivoting on the part `a+b−1`.

use crate::partition::{PairSpec, Partition, PartitionPair};
use crate::{Error, Result};

const NAME: &str = "sec2";

fn outside(p: &PartitionPair) -> Error {
    Error::OutsideDomain { map: NAME, pair: p.to_string() }
}

/// Which of the three cases produced `p`, judged from the image
/// descriptions alone: 1 if `c+d+1 ∈ μ`; 2 if `c+d+1 ∉ μ`, `μ₁ ≠ 3(c+d+1)`
/// and `μ₁−μ₂ > 2(c+d+1)`; 3 if `μ = (c, c−2)`.
pub fn image_case(p: &PartitionPair) -> Option<u8> {
    if !PairSpec::Sec2Codomain.admits(p.size(), p).unwrap_or(false) {
        return None;
    }
    let (mu, c, d) = (&p.lambda, p.a, p.b);
    let t = c + d + 1;
    if mu.contains(t) {
        Some(1)
    } else if mu.largest() != 3 * t && mu.first_gap() > 2 * t {
        Some(2)
    } else if c >= 3 && mu.parts() == [c, c - 2] {
        Some(3)
    } else {
        None
    }
}

pub fn map_t_sec2(p: &PartitionPair) -> Result<PartitionPair> {
    if !PairSpec::Sec2Domain.admits(p.size(), p)? {
        return Err(outside(p));
    }
    let (lam, a, b) = (&p.lambda, p.a, p.b);
    let s = a + b - 1;
    let (new_lam, c, d) = if !lam.contains(s) {
        (lam.with_part(s)?, a - 1, b - 1)
    } else if lam.len() >= 2 {
        let m = lam.parts().iter().copied().find(|&x| x != s).expect("two distinct parts");
        let rest = lam.without_part(s).and_then(|l| l.without_part(m)).expect("parts present");
        (rest.with_part(2 * s + m)?, a - 1, b - 1)
    } else {
        (Partition::new(vec![a + 1, a - 1])?, a + 1, b - 1)
    };
    PartitionPair::new(new_lam, c, d)
}

pub fn map_l_sec2(p: &PartitionPair) -> Result<PartitionPair> {
    let (mu, c, d) = (&p.lambda, p.a, p.b);
    let t = c + d + 1;
    let lam = match image_case(p).ok_or_else(|| outside(p))? {
        1 => mu.without_part(t).expect("t is a part"),
        2 => {
            let top = mu.largest();
            let rest = mu.without_part(top).expect("nonempty");
            rest.with_part(t)?.with_part(top - 2 * t)?
        }
        _ => return PartitionPair::new(Partition::new(vec![c + d - 1])?, c - 1, d + 1),
    };
    PartitionPair::new(lam, c + 1, d + 1)
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
        let cases = [
            (pair(&[5], 2, 2), pair(&[5, 3], 1, 1)),
            (pair(&[5, 3], 2, 2), pair(&[11], 1, 1)),
            (pair(&[3], 2, 2), pair(&[3, 1], 3, 1)),
        ];
        for (x, y) in cases {
            assert_eq!(map_t_sec2(&x).unwrap(), y);
            assert_eq!(map_l_sec2(&y).unwrap(), x);
        }
    }

    #[test]
    fn rejects_outside_domain() {
        assert!(map_t_sec2(&pair(&[5], 1, 2)).is_err());
        assert!(map_t_sec2(&pair(&[2], 2, 2)).is_err());
        // ((9),(1)) is in the codomain but is not an image
        assert!(map_l_sec2(&pair(&[9], 1, 1)).is_err());
    }
}
