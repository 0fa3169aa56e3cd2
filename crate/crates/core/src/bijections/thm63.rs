//! Injection from pairs with `a ≡ 0 (mod 2r)`, `b` even into pairs with
//! `a ≡ 1 (mod 2r)`, `b` odd, pivoting on the part `a+(2r−1)(b−1)`. At
//! `r = 1` it coincides with the `sec2` map.

use crate::partition::{PairSpec, Partition, PartitionPair};
use crate::{Error, Result};

const NAME: &str = "thm63";

fn outside(p: &PartitionPair) -> Error {
    Error::OutsideDomain { map: NAME, pair: p.to_string() }
}

pub fn map_t_thm63(p: &PartitionPair, r: u32) -> Result<PartitionPair> {
    if !(PairSpec::Thm63Domain { r }).admits(p.size(), p)? {
        return Err(outside(p));
    }
    let (lam, a, b) = (&p.lambda, p.a, p.b);
    let s = a + (2 * r - 1) * (b - 1);
    let narrow = a + 1 - 2 * r;
    if !lam.contains(s) {
        PartitionPair::new(lam.with_part(s)?, narrow, b - 1)
    } else if lam.len() >= 2 {
        let m = lam.parts().iter().copied().find(|&x| x != s).expect("two distinct parts");
        let rest = lam.without_part(s).and_then(|l| l.without_part(m)).expect("parts present");
        PartitionPair::new(rest.with_part(2 * s + m)?, narrow, b - 1)
    } else {
        // (2r−2)b ≥ 2r−1 here, so the second part is positive; it need not
        // differ from a+1
        let mu = Partition::new(vec![a + 1, a + (2 * r - 2) * b + 1 - 2 * r])?;
        PartitionPair::new(mu, a + 1, b - 1)
    }
}

/// The second part of the third image set, `c+(2r−2)d−2`, if positive.
fn third_case_partition(c: u32, d: u32, r: u32) -> Option<Partition> {
    let second = (c + (2 * r - 2) * d).checked_sub(2).filter(|&v| v > 0)?;
    Partition::new(vec![c, second]).ok()
}

/// Which of the three stated image sets contains `p`, with `t =
/// c+(2r−1)(d+1)`: 1 if `t ∈ μ`; 2 if `t ∉ μ` and `μ₁−μ₂ > 2t`; 3 if
/// `μ = (c, c+(2r−2)d−2)`.
pub fn image_case(p: &PartitionPair, r: u32) -> Option<u8> {
    if !(PairSpec::Thm63Codomain { r }).admits(p.size(), p).unwrap_or(false) {
        return None;
    }
    let (mu, c, d) = (&p.lambda, p.a, p.b);
    let t = c + (2 * r - 1) * (d + 1);
    if mu.contains(t) {
        Some(1)
    } else if mu.first_gap() > 2 * t {
        Some(2)
    } else if third_case_partition(c, d, r).is_some_and(|q| q == *mu) {
        Some(3)
    } else {
        None
    }
}

pub fn map_l_thm63(p: &PartitionPair, r: u32) -> Result<PartitionPair> {
    let case = image_case(p, r).ok_or_else(|| outside(p))?;
    let (mu, c, d) = (&p.lambda, p.a, p.b);
    let t = c + (2 * r - 1) * (d + 1);
    let lam = match case {
        1 => mu.without_part(t).expect("t is a part"),
        2 => {
            let top = mu.largest();
            let rest = mu.without_part(top).expect("nonempty");
            Partition::new(rest.parts().iter().copied().chain([t, top - 2 * t]).collect())?
        }
        _ => {
            return PartitionPair::new(Partition::new(vec![c - 1 + (2 * r - 1) * d])?, c - 1, d + 1);
        }
    };
    PartitionPair::new(lam, c + 2 * r - 1, d + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::sec2::map_t_sec2;
    use crate::partition::make_partition;

    fn pair(parts: &[i64], a: u32, b: u32) -> PartitionPair {
        PartitionPair::new(make_partition(parts).unwrap(), a, b).unwrap()
    }

    #[test]
    fn worked_cases() {
        assert_eq!(map_t_thm63(&pair(&[], 4, 2), 2).unwrap(), pair(&[7], 1, 1));
        assert_eq!(map_l_thm63(&pair(&[7], 1, 1), 2).unwrap(), pair(&[], 4, 2));
        // the third case can repeat a part, leaving the codomain
        let out = map_t_thm63(&pair(&[7], 4, 2), 2).unwrap();
        assert_eq!(out, pair(&[5, 5], 5, 1));
        assert!(!out.lambda.is_distinct());
    }

    #[test]
    fn r1_matches_sec2() {
        for x in [pair(&[5], 2, 2), pair(&[5, 3], 2, 2), pair(&[3], 2, 2), pair(&[], 4, 2)] {
            assert_eq!(map_t_thm63(&x, 1).unwrap(), map_t_sec2(&x).unwrap());
        }
    }

    #[test]
    fn rejects_outside_domain() {
        assert!(map_t_thm63(&pair(&[], 4, 1), 2).is_err());
        assert!(map_l_thm63(&pair(&[], 1, 2), 2).is_err());
    }
}
