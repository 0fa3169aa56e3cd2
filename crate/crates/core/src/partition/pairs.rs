//! Families of pairs `(λ, (a^b))`.

use std::collections::HashMap;

use super::{for_each_partition, in_b_with, ConstraintSpec, GapRule, Partition, PartitionPair, ResidueSpec};
use crate::{Error, Result};

/// A family of pairs, given by conditions on the rectangle `(a^b)`, the
/// family `λ` is drawn from, and side conditions tying `λ` to `a` and `b`.
///
/// `a` is always the actual part size of the rectangle; for `T1_8` it is
/// `r` times an odd number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PairSpec {
    /// `a` even, `λ` into odd parts.
    BeckPairs,
    /// `a, b` odd, `λ ∈ Q_o ∩ B(n,a,b)`.
    T1_4 { rule: GapRule },
    /// `2r | a`, `λ ∈ Q_o(n−ab, r)`.
    T1_7 { r: u32 },
    /// Rectangle `((ra')^b)` with `a', b` odd, `λ ∈ Q_o(n−ra'b, r)` and
    /// `λ^div ∈ B_r(n−|λ^ndiv|, a', b)`.
    T1_8 { r: u32, rule: GapRule },
    /// `a` even, `λ ∈ Q(n−ab, L, r)`.
    T1_10 { spec: ResidueSpec },
    /// `a, b` odd, `λ ∈ Q(n−ab, L, r)` and `λ^o ∈ B(n−|λ^e|, a, b)`.
    T1_11 { spec: ResidueSpec, rule: GapRule },
    /// `a` in a class of `L ∪ O`, `b` odd, `λ ∈ Q_o`; odd `a` forces `b = 1`
    /// and `a ∉ λ`; even `a` forces `λ₁−λ₂ ≤ a` and `λ ≠ μ(a)`.
    T1_12 { spec: ResidueSpec },
    /// `T1_12` plus: if `a ≡ 0 (mod 4)` and `b = 1` then `λ ≠ ∅`.
    Ex1 { spec: ResidueSpec },
    /// `λ ∈ Q_o`, `a, b` even.
    Sec2Domain,
    /// `λ ∈ Q_o`, `a, b` odd.
    Sec2Codomain,
    /// `λ ∈ Q_o`, `a ≡ ell (mod 2r)`, `b` even.
    LrDomain { r: u32, ell: u32 },
    /// `λ ∈ Q_o`, `a ≡ ell (mod 2r)`, `b` odd.
    LrCodomain { r: u32, ell: u32 },
    /// `λ ∈ Q_o`, `a ≡ 0 (mod 2r)`, `b` odd.
    Thm62Domain { r: u32 },
    /// `λ ∈ Q_o`, `a ≡ 1 (mod 2r)`, `b` even.
    Thm62Codomain { r: u32 },
    /// `λ ∈ Q_o`, `a ≡ 0 (mod 2r)`, `b` even.
    Thm63Domain { r: u32 },
    /// `λ ∈ Q_o`, `a ≡ 1 (mod 2r)`, `b` odd.
    Thm63Codomain { r: u32 },
}

fn congruent(a: u32, ell: u32, modulus: u32) -> bool {
    a % modulus == ell % modulus
}

impl PairSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            PairSpec::T1_7 { r }
            | PairSpec::T1_8 { r, .. }
            | PairSpec::Thm62Domain { r }
            | PairSpec::Thm62Codomain { r }
            | PairSpec::Thm63Domain { r }
            | PairSpec::Thm63Codomain { r }
                if *r == 0 =>
            {
                Err(Error::InvalidResidue("r must be positive".into()))
            }
            PairSpec::LrDomain { r, ell } | PairSpec::LrCodomain { r, ell } => {
                ResidueSpec::singleton(*r, *ell).map(|_| ())
            }
            PairSpec::T1_10 { spec } | PairSpec::T1_11 { spec, .. } => spec.require_nonempty_l(),
            PairSpec::T1_12 { spec } | PairSpec::Ex1 { spec } => spec.require_nonempty(),
            _ => Ok(()),
        }
    }

    /// The family `λ` is drawn from.
    pub fn lambda_family(&self) -> ConstraintSpec {
        match self {
            PairSpec::BeckPairs => ConstraintSpec::OddParts,
            PairSpec::T1_7 { r } | PairSpec::T1_8 { r, .. } => {
                ConstraintSpec::DistinctOddMultiplesOfR { r: *r }
            }
            PairSpec::T1_10 { spec } | PairSpec::T1_11 { spec, .. } => ConstraintSpec::QLr(spec.clone()),
            _ => ConstraintSpec::DistinctOdd,
        }
    }

    /// Conditions on the rectangle alone.
    pub fn rectangle_ok(&self, a: u32, b: u32) -> bool {
        let odd = |x: u32| x % 2 == 1;
        match self {
            PairSpec::BeckPairs | PairSpec::T1_10 { .. } => a % 2 == 0,
            PairSpec::T1_4 { .. } | PairSpec::T1_11 { .. } | PairSpec::Sec2Codomain => odd(a) && odd(b),
            PairSpec::T1_7 { r } => a % (2 * r) == 0,
            PairSpec::T1_8 { r, .. } => a % r == 0 && odd(a / r) && odd(b),
            PairSpec::T1_12 { spec } | PairSpec::Ex1 { spec } => {
                spec.marks(a) && odd(b) && (a % 2 == 0 || b == 1)
            }
            PairSpec::Sec2Domain => !odd(a) && !odd(b),
            PairSpec::LrDomain { r, ell } => congruent(a, *ell, 2 * r) && !odd(b),
            PairSpec::LrCodomain { r, ell } => congruent(a, *ell, 2 * r) && odd(b),
            PairSpec::Thm62Domain { r } => a % (2 * r) == 0 && odd(b),
            PairSpec::Thm62Codomain { r } => congruent(a, 1, 2 * r) && !odd(b),
            PairSpec::Thm63Domain { r } => a % (2 * r) == 0 && !odd(b),
            PairSpec::Thm63Codomain { r } => congruent(a, 1, 2 * r) && odd(b),
        }
    }

    /// Side conditions relating `λ` to the rectangle, for a pair of size `n`.
    fn side_ok(&self, n: u32, lam: &Partition, a: u32, b: u32) -> Result<bool> {
        Ok(match self {
            PairSpec::T1_4 { rule } => in_b_with(lam, n, a, b, 1, *rule)?,
            PairSpec::T1_8 { r, rule } => {
                let (ndiv, div) = lam.split_div(*r);
                in_b_with(&div, n - ndiv.size(), a / r, b, *r, *rule)?
            }
            PairSpec::T1_11 { rule, .. } => {
                let (odd, even) = lam.split_div(2);
                in_b_with(&odd, n - even.size(), a, b, 1, *rule)?
            }
            PairSpec::T1_12 { .. } => residue_side(lam, a),
            PairSpec::Ex1 { .. } => residue_side(lam, a) && !(a % 4 == 0 && b == 1 && lam.is_empty()),
            _ => true,
        })
    }

    /// Full membership test for a pair of size `n`.
    pub fn admits(&self, n: u32, pair: &PartitionPair) -> Result<bool> {
        self.validate()?;
        if pair.size() != n || !self.rectangle_ok(pair.a, pair.b) {
            return Ok(false);
        }
        if !self.lambda_family().admits(pair.lambda.parts()) {
            return Ok(false);
        }
        self.side_ok(n, &pair.lambda, pair.a, pair.b)
    }
}

fn residue_side(lam: &Partition, a: u32) -> bool {
    if a % 2 == 1 {
        return !lam.contains(a);
    }
    let h = a / 2;
    let excluded = |big: u32, small: u32| small > 0 && lam.parts() == [big, small];
    lam.first_gap() <= a && !excluded(h + 1, h - 1) && !(h >= 2 && excluded(h + 2, h - 2))
}

/// All pairs of size `n` in the family, ordered by `a`, then `b`, then `λ`
/// in lexicographically descending order.
pub fn enumerate_pairs(n: u32, spec: &PairSpec) -> Result<Vec<PartitionPair>> {
    spec.validate()?;
    let family = spec.lambda_family();
    let mut cache: HashMap<u32, Vec<Partition>> = HashMap::new();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n / a {
            if !spec.rectangle_ok(a, b) {
                continue;
            }
            let rest = n - a * b;
            if let std::collections::hash_map::Entry::Vacant(slot) = cache.entry(rest) {
                let mut lams = Vec::new();
                for_each_partition(rest, &family, |p| lams.push(Partition::from_sorted(p.to_vec())))?;
                slot.insert(lams);
            }
            for lam in &cache[&rest] {
                if spec.side_ok(n, lam, a, b)? {
                    out.push(PartitionPair { lambda: lam.clone(), a, b });
                }
            }
        }
    }
    Ok(out)
}

pub fn count_pairs(n: u32, spec: &PairSpec) -> Result<u64> {
    Ok(enumerate_pairs(n, spec)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::make_partition;

    fn pair(parts: &[i64], a: u32, b: u32) -> PartitionPair {
        PartitionPair::new(make_partition(parts).unwrap(), a, b).unwrap()
    }

    #[test]
    fn theorem_1_4_pairs_at_four() {
        let pairs = enumerate_pairs(4, &PairSpec::T1_4 { rule: GapRule::Stated }).unwrap();
        assert_eq!(pairs, vec![pair(&[1], 1, 3), pair(&[1], 3, 1)]);
    }

    #[test]
    fn theorem_1_7_pairs_at_three() {
        let pairs = enumerate_pairs(3, &PairSpec::T1_7 { r: 1 }).unwrap();
        assert_eq!(pairs, vec![pair(&[1], 2, 1)]);
    }

    #[test]
    fn size_zero_has_no_pairs() {
        for spec in [PairSpec::BeckPairs, PairSpec::Sec2Domain, PairSpec::T1_7 { r: 2 }] {
            assert!(enumerate_pairs(0, &spec).unwrap().is_empty());
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let spec3 = ResidueSpec::from_set(3, &[2, 3]).unwrap();
        let specs = [
            PairSpec::BeckPairs,
            PairSpec::T1_4 { rule: GapRule::Stated },
            PairSpec::T1_4 { rule: GapRule::Amended },
            PairSpec::T1_7 { r: 2 },
            PairSpec::T1_8 { r: 2, rule: GapRule::Stated },
            PairSpec::T1_10 { spec: ResidueSpec::new(2, [4], []).unwrap() },
            PairSpec::T1_11 { spec: ResidueSpec::new(2, [2], []).unwrap(), rule: GapRule::Stated },
            PairSpec::T1_12 { spec: spec3.clone() },
            PairSpec::Ex1 { spec: ResidueSpec::full(1).unwrap() },
            PairSpec::LrDomain { r: 2, ell: 2 },
            PairSpec::Thm63Codomain { r: 2 },
        ];
        for n in 0..=16 {
            for spec in &specs {
                let mut brute = Vec::new();
                for a in 1..=n {
                    for b in 1..=n / a {
                        for lam in
                            super::super::enumerate_partitions(n - a * b, &ConstraintSpec::All).unwrap()
                        {
                            let p = PartitionPair { lambda: lam, a, b };
                            if spec.admits(n, &p).unwrap() {
                                brute.push(p);
                            }
                        }
                    }
                }
                assert_eq!(enumerate_pairs(n, spec).unwrap(), brute, "{spec:?} n={n}");
            }
        }
    }

    #[test]
    fn residue_pairs_respect_side_conditions() {
        let spec = PairSpec::T1_12 { spec: ResidueSpec::singleton(1, 2).unwrap() };
        // μ(4) = (3,1) is excluded with a = 4
        assert!(!spec.admits(8, &pair(&[3, 1], 4, 1)).unwrap());
        assert!(spec.admits(6, &pair(&[], 2, 3)).unwrap());
        assert!(!spec.admits(8, &pair(&[5, 1], 2, 1)).unwrap());
        let odd = PairSpec::T1_12 { spec: ResidueSpec::singleton(1, 1).unwrap() };
        assert!(!odd.admits(6, &pair(&[3], 3, 1)).unwrap());
        assert!(odd.admits(6, &pair(&[5], 1, 1)).unwrap());
        assert!(!odd.admits(6, &pair(&[3], 1, 3)).unwrap());
    }
}
