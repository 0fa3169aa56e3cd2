//! The negative-coefficient table for the class `{2}`, the positivity
//! thresholds for single classes, and the correspondence between the two
//! corollary witness sets.

use std::collections::BTreeSet;

use serde::Serialize;

use super::predicates::{
    even_to_repeated_odd, one_even_part_witness, repeated_odd_part_witness, repeated_odd_to_even,
};
use crate::bijections::lr::exceptional_partition;
use crate::partition::{enumerate_filtered, ConstraintSpec, PairSpec, Partition, PartitionPair, ResidueSpec};
use crate::series::derivative_difference;
use crate::{Error, Result, TheoremId, MAX_ENUMERATION_N};

/// Negative coefficients of the residue excess series for `L ∪ O = {2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeRow {
    pub r: u32,
    /// `(n, coefficient)` for every negative coefficient up to the order.
    pub entries: Vec<(u32, i64)>,
}

impl NegativeRow {
    pub fn positions(&self) -> Vec<u32> {
        self.entries.iter().map(|&(n, _)| n).collect()
    }
}

pub fn negative_coefficient_table(r_max: u32, n_max: u32) -> Result<Vec<NegativeRow>> {
    if r_max == 0 {
        return Err(Error::InvalidParameter("r_max must be positive".into()));
    }
    if n_max < 20 {
        return Err(Error::InvalidParameter("the table needs n_max >= 20".into()));
    }
    (1..=r_max)
        .map(|r| {
            let spec = ResidueSpec::singleton(r, 2)?;
            let s = derivative_difference(TheoremId::T1_12, &spec, n_max as usize)?;
            let entries = s
                .negative_positions()
                .into_iter()
                .map(|n| Ok((n as u32, s.coefficient_i64(n)?)))
                .collect::<Result<_>>()?;
            Ok(NegativeRow { r, entries })
        })
        .collect()
}

/// The published positions of the negative coefficients for class `{2}`.
pub fn published_negative_set(r: u32) -> Vec<u32> {
    let upto = |k: u32| (1..=k).map(|j| 4 * j).collect();
    match r {
        1 => Vec::new(),
        3 => upto(1),
        5 => upto(2),
        2 | 4 | 7 => upto(3),
        6 | 9 => upto(4),
        _ => upto(5),
    }
}

/// Mismatches between a computed table and the published one: differing
/// positions, or a negative value other than −1.
pub fn compare_negative_table(rows: &[NegativeRow]) -> Vec<String> {
    let mut out = Vec::new();
    for row in rows {
        let expected = published_negative_set(row.r);
        if row.positions() != expected {
            out.push(format!("r={}: computed {:?}, published {:?}", row.r, row.positions(), expected));
        }
        for &(n, c) in &row.entries {
            if c != -1 {
                out.push(format!("r={} n={n}: coefficient {c}, expected -1", row.r));
            }
        }
    }
    out
}

/// The `n` from which single-class coefficients are claimed positive:
/// `ℓ + 8` for odd `ℓ`, `ℓ + 19` for even `ℓ`.
pub fn positivity_threshold(ell: u32) -> u32 {
    if ell % 2 == 1 {
        ell + 8
    } else {
        ell + 19
    }
}

/// Whether positivity is claimed at `n`: from the threshold on, except that
/// for `ℓ = 2` and `n ≡ 0 (mod 4)` the explicit witness is the dropped pair
/// until `n = 28`.
pub fn positivity_claimed(ell: u32, n: u32) -> bool {
    n >= positivity_threshold(ell) && !(ell == 2 && n % 4 == 0 && n < 28)
}

/// The explicit `λ` candidates for `(λ, (ℓ))` with `d = n − ℓ`.
fn remark_candidates(ell: u32, d: u32) -> Vec<Vec<u32>> {
    if ell % 2 == 1 {
        return if d % 2 == 0 {
            vec![vec![d - 1, 1], vec![d - 3, 3]]
        } else {
            vec![vec![d], vec![d - 4, 3, 1]]
        };
    }
    match d % 4 {
        0 => vec![vec![d / 2 - 1, d / 2 - 3, 3, 1]],
        1 => vec![vec![d.div_ceil(2), (d - 3) / 2, 1]],
        2 => vec![vec![d / 2 - 2, d / 2 - 4, 5, 1]],
        _ => vec![vec![(d - 1) / 2, (d - 5) / 2, 3]],
    }
}

/// Whether the explicit construction gives a counted pair `(λ, (ℓ))` at `n`
/// (for odd `ℓ`, at least one of its two candidates). With `ℓ = 2` and
/// `n ≥ 28` the pair must also differ from `((9,7,5,1),(2))`.
pub fn remark_witness_ok(ell: u32, r: u32, n: u32) -> Result<bool> {
    if n < positivity_threshold(ell) {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is below the threshold {} for class {ell}",
            positivity_threshold(ell)
        )));
    }
    let spec = PairSpec::T1_12 { spec: ResidueSpec::singleton(r, ell)? };
    for parts in remark_candidates(ell, n - ell) {
        let Ok(lam) = Partition::new(parts) else { continue };
        let pair = PartitionPair::new(lam, ell, 1)?;
        let dropped = ell == 2 && n >= 28 && pair.lambda == exceptional_partition();
        if spec.admits(n, &pair)? && !dropped {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub ell: u32,
    pub r: u32,
    pub threshold: u32,
    pub n_max: u32,
    /// `(n, c)` with positivity claimed at `n` and `c ≤ 0`.
    pub nonpositive: Vec<(u32, i64)>,
    /// `n ≥ threshold` where positivity is not claimed.
    pub unclaimed: Vec<u32>,
    /// `n ≥ threshold` where the explicit witness is not a counted pair.
    pub witness_failures: Vec<u32>,
}

impl PositivityReport {
    pub fn ok(&self) -> bool {
        self.nonpositive.is_empty() && self.witness_failures.is_empty()
    }
}

pub fn positivity_threshold_check(ell: u32, r: u32, n_max: u32) -> Result<PositivityReport> {
    let spec = ResidueSpec::singleton(r, ell)?;
    let threshold = positivity_threshold(ell);
    let series = derivative_difference(TheoremId::T1_12, &spec, n_max as usize)?;
    let mut nonpositive = Vec::new();
    let mut witness_failures = Vec::new();
    let mut unclaimed = Vec::new();
    for n in threshold..=n_max {
        let c = series.coefficient_i64(n as usize)?;
        if !positivity_claimed(ell, n) {
            unclaimed.push(n);
        } else if c <= 0 {
            nonpositive.push((n, c));
        }
        if !remark_witness_ok(ell, r, n)? {
            witness_failures.push(n);
        }
    }
    Ok(PositivityReport { ell, r, threshold, n_max, nonpositive, unclaimed, witness_failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorBijectionReport {
    pub n: u32,
    /// Witnesses with one even part `2k` repeated an odd number of times.
    pub even_side: usize,
    /// Witnesses with all parts odd and one value repeated.
    pub odd_side: usize,
    pub bijective: bool,
    pub violations: Vec<String>,
}

/// Checks that `μ^o ∪ ((2k)^b) ↦ μ^o ∪ (b^{2k})` is a bijection between the
/// two witness sets at `n`.
pub fn cor_witness_bijection(n: u32) -> Result<CorBijectionReport> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::BudgetExceeded { n, max: MAX_ENUMERATION_N });
    }
    let evens = enumerate_filtered(n, &ConstraintSpec::All, one_even_part_witness)?;
    let odds: BTreeSet<Partition> =
        enumerate_filtered(n, &ConstraintSpec::All, repeated_odd_part_witness)?.into_iter().collect();
    let mut violations = Vec::new();
    let mut image = BTreeSet::new();
    for mu in &evens {
        match even_to_repeated_odd(mu) {
            Some(lam) if odds.contains(&lam) => {
                if repeated_odd_to_even(&lam).as_ref() != Some(mu) {
                    violations.push(format!("{mu} ↦ {lam} does not invert"));
                }
                if !image.insert(lam.clone()) {
                    violations.push(format!("{lam} has two preimages"));
                }
            }
            Some(lam) => violations.push(format!("{mu} ↦ {lam}, not a witness")),
            None => violations.push(format!("{mu} has no image")),
        }
    }
    for lam in odds.difference(&image) {
        violations.push(format!("{lam} is not hit"));
    }
    Ok(CorBijectionReport {
        n,
        even_side: evens.len(),
        odd_side: odds.len(),
        bijective: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = negative_coefficient_table(5, 60).unwrap();
        assert!(compare_negative_table(&rows).is_empty());
        assert_eq!(rows[4].positions(), [4, 8]);
        assert!(negative_coefficient_table(0, 60).is_err());
        assert!(negative_coefficient_table(2, 19).is_err());
    }

    #[test]
    fn published_sets() {
        assert_eq!(published_negative_set(10), [4, 8, 12, 16, 20]);
        assert_eq!(published_negative_set(8), [4, 8, 12, 16, 20]);
        assert_eq!(published_negative_set(3), [4]);
    }

    #[test]
    fn thresholds() {
        let odd = positivity_threshold_check(1, 1, 60).unwrap();
        assert_eq!(odd.threshold, 9);
        assert!(odd.ok(), "{odd:?}");
        let even = positivity_threshold_check(4, 2, 60).unwrap();
        assert_eq!(even.threshold, 23);
        assert!(even.ok(), "{even:?}");
    }

    #[test]
    fn unclaimed_cell() {
        // the only a = 2 pair at n = 24 is the dropped one, and 22 ≡ 2 (mod 20)
        // leaves no other rectangle
        let rep = positivity_threshold_check(2, 10, 40).unwrap();
        assert_eq!(rep.unclaimed, [24]);
        assert!(rep.ok(), "{rep:?}");
        assert!(!positivity_claimed(2, 24) && positivity_claimed(2, 28) && positivity_claimed(4, 24));
    }

    #[test]
    fn corollary_correspondence() {
        for n in 0..=20 {
            let rep = cor_witness_bijection(n).unwrap();
            assert!(rep.bijective, "{rep:?}");
            assert_eq!(rep.even_side, rep.odd_side);
        }
    }
}
