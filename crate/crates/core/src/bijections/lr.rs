//! Injection from pairs with `b` even into pairs with `b` odd, where `λ` has
//! distinct odd parts and `a` lies in a fixed residue class `ℓ` modulo `2r`.

use crate::partition::{mu_partition, PairSpec, Partition, PartitionPair};
use crate::{Error, Result};

const NAME: &str = "lr";

/// The image of `(∅, (2^{n/2}))` for `n ≡ 0 (mod 4)`, `n ≥ 24`.
pub fn exceptional_partition() -> Partition {
    Partition::new(vec![9, 7, 5, 1]).expect("valid parts")
}

fn outside(p: &PartitionPair) -> Error {
    Error::OutsideDomain { map: NAME, pair: p.to_string() }
}

fn check_domain(p: &PartitionPair, r: u32, ell: u32, n: u32) -> Result<()> {
    if p.size() != n || !(PairSpec::LrDomain { r, ell }).admits(n, p)? {
        return Err(outside(p));
    }
    Ok(())
}

/// `T_{ℓ,r}`. Returns `None` only for `(∅, (2^{n/2}))` with `n ≤ 20`.
pub fn map_t_lr(p: &PartitionPair, r: u32, ell: u32, n: u32) -> Result<Option<PartitionPair>> {
    apply(p, r, ell, n, false)
}

/// `T_{ℓ,r}` with `(∅, (2^{n/2})) ↦ (∅, (n))` for every `n ≡ 0 (mod 4)`.
/// Only injective when every even class is in play, since `(∅, (n))` lies in
/// the class of `n`.
pub fn map_t_lr_extended(p: &PartitionPair, r: u32, ell: u32, n: u32) -> Result<Option<PartitionPair>> {
    apply(p, r, ell, n, true)
}

fn apply(p: &PartitionPair, r: u32, ell: u32, n: u32, extended: bool) -> Result<Option<PartitionPair>> {
    check_domain(p, r, ell, n)?;
    let (lam, a, b) = (&p.lambda, p.a, p.b);
    let image = if a % 2 == 1 {
        if lam.contains(a) {
            PartitionPair::new(lam.without_part(a).expect("a is a part"), a, b + 1)?
        } else {
            PartitionPair::new(lam.with_part(a)?, a, b - 1)?
        }
    } else if !lam.is_empty() {
        let top = lam.largest();
        let raised = lam.without_part(top).expect("nonempty").with_part(top + a)?;
        PartitionPair::new(raised, a, b - 1)?
    } else if a != 2 {
        PartitionPair::new(mu_partition(a)?, a, b - 1)?
    } else if extended {
        PartitionPair::new(Partition::empty(), n, 1)?
    } else if n >= 24 {
        PartitionPair::new(exceptional_partition(), 2, (n - 22) / 2)?
    } else {
        return Ok(None);
    };
    Ok(Some(image))
}

/// Whether `p` is an image of `T_{ℓ,r}`, from the image descriptions:
/// odd `a`: `a ∈ μ` or `d ≥ 3`; even `a`: `μ₁−μ₂ > a`, or `μ = μ(a)`, or
/// the image of `(∅, (2^{n/2}))`. In the extended form that image is
/// `(∅, (n))`, whose class is that of `n` rather than `ℓ`.
pub fn is_image(p: &PartitionPair, r: u32, ell: u32, n: u32, extended: bool) -> bool {
    let in_codomain = PairSpec::LrCodomain { r, ell }.admits(n, p).unwrap_or(false);
    if !in_codomain {
        return false;
    }
    let (mu, a, d) = (&p.lambda, p.a, p.b);
    if a % 2 == 1 {
        return mu.contains(a) || d >= 3;
    }
    if mu.first_gap() > a {
        return true;
    }
    if a >= 4 && *mu == mu_partition(a).expect("even a >= 4") {
        return true;
    }
    if n % 4 != 0 {
        return false;
    }
    if extended {
        mu.is_empty() && d == 1 && a == n
    } else {
        n >= 24 && a == 2 && *mu == exceptional_partition()
    }
}

/// Inverse of `T_{ℓ,r}` on its image.
pub fn map_l_lr(p: &PartitionPair, r: u32, ell: u32, n: u32, extended: bool) -> Result<PartitionPair> {
    if !is_image(p, r, ell, n, extended) {
        return Err(outside(p));
    }
    let (mu, a, d) = (&p.lambda, p.a, p.b);
    if a % 2 == 1 {
        return if mu.contains(a) {
            PartitionPair::new(mu.without_part(a).expect("a is a part"), a, d + 1)
        } else {
            PartitionPair::new(mu.with_part(a)?, a, d - 1)
        };
    }
    if mu.first_gap() > a {
        let top = mu.largest();
        let lowered = mu.without_part(top).expect("nonempty").with_part(top - a)?;
        return PartitionPair::new(lowered, a, d + 1);
    }
    if a >= 4 && *mu == mu_partition(a)? {
        return PartitionPair::new(Partition::empty(), a, d + 1);
    }
    PartitionPair::new(Partition::empty(), 2, n / 2)
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
        assert_eq!(map_t_lr(&pair(&[3], 1, 2), 1, 1, 5).unwrap(), Some(pair(&[3, 1], 1, 1)));
        assert_eq!(map_t_lr(&pair(&[5, 3], 2, 2), 1, 2, 12).unwrap(), Some(pair(&[7, 3], 2, 1)));
        assert_eq!(map_t_lr(&pair(&[], 2, 12), 1, 2, 24).unwrap(), Some(pair(&[9, 7, 5, 1], 2, 1)));
        assert_eq!(map_t_lr(&pair(&[], 2, 2), 3, 2, 4).unwrap(), None);
        assert_eq!(map_t_lr_extended(&pair(&[], 2, 2), 1, 2, 4).unwrap(), Some(pair(&[], 4, 1)));
        assert_eq!(map_t_lr(&pair(&[], 4, 2), 2, 4, 8).unwrap(), Some(pair(&[3, 1], 4, 1)));
    }

    #[test]
    fn inverse_on_examples() {
        assert_eq!(map_l_lr(&pair(&[9, 7, 5, 1], 2, 1), 1, 2, 24, false).unwrap(), pair(&[], 2, 12));
        assert_eq!(map_l_lr(&pair(&[7, 3], 2, 1), 1, 2, 12, false).unwrap(), pair(&[5, 3], 2, 2));
        assert_eq!(map_l_lr(&pair(&[], 4, 1), 1, 2, 4, true).unwrap(), pair(&[], 2, 2));
        assert!(map_l_lr(&pair(&[5], 1, 1), 1, 1, 6, false).is_err());
    }

    #[test]
    fn rejects_wrong_class() {
        assert!(map_t_lr(&pair(&[3], 1, 2), 2, 3, 5).is_err());
        assert!(map_t_lr(&pair(&[3], 2, 1), 1, 2, 5).is_err());
    }
}
