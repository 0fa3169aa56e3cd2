//! Partition-level descriptions of the right-hand sides, written directly
//! from their definitions.

use crate::partition::{mu_partition, Partition};

/// The distinct part values with their multiplicities, largest first.
fn runs(lam: &Partition) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in lam.parts() {
        match out.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Exactly one even part value (any multiplicity); the odd parts distinct.
pub fn one_even_value_odd_distinct(lam: &Partition) -> bool {
    let runs = runs(lam);
    runs.iter().filter(|(v, _)| v % 2 == 0).count() == 1 && runs.iter().all(|&(v, m)| v % 2 == 0 || m == 1)
}

/// The shared side condition on `λ^o` given `2k`: `λ^o₁ − λ^o₂ ≤ 2k`,
/// `λ^o ≠ μ(2k)`, and `λ^o ≠ ∅` when `k` is even and the multiplicity
/// parameter is 1.
fn leftover_ok(rest: &Partition, two_k: u32, single: bool) -> bool {
    let k = two_k / 2;
    rest.first_gap() <= two_k
        && mu_partition(two_k).map_or(true, |mu| mu != *rest)
        && !(k % 2 == 0 && single && rest.is_empty())
}

/// One even part `2k` repeated an odd number `b` of times, the other parts
/// odd and distinct forming `λ^o` with the leftover conditions.
pub fn one_even_part_witness(lam: &Partition) -> bool {
    if !one_even_value_odd_distinct(lam) {
        return false;
    }
    let (two_k, b) = runs(lam).into_iter().find(|(v, _)| v % 2 == 0).expect("one even value");
    if b % 2 == 0 {
        return false;
    }
    let rest = Partition::new(lam.parts().iter().copied().filter(|&p| p != two_k).collect())
        .expect("positive parts");
    leftover_ok(&rest, two_k, b == 1)
}

/// All parts odd, exactly one value `b` repeated; removing the largest even
/// number `2k` of copies of `b` leaves `λ^o` with the leftover conditions.
pub fn repeated_odd_part_witness(lam: &Partition) -> bool {
    let runs = runs(lam);
    if !lam.all_odd() || runs.iter().filter(|&&(_, m)| m >= 2).count() != 1 {
        return false;
    }
    let (b, m) = runs.into_iter().find(|&(_, m)| m >= 2).expect("one repeated value");
    let two_k = m - m % 2;
    let mut rest: Vec<u32> = lam.parts().iter().copied().filter(|&p| p != b).collect();
    if m % 2 == 1 {
        rest.push(b);
    }
    let rest = Partition::new(rest).expect("positive parts");
    leftover_ok(&rest, two_k, b == 1)
}

/// `μ^o ∪ ((2k)^b) ↦ μ^o ∪ (b^{2k})`.
pub fn even_to_repeated_odd(mu: &Partition) -> Option<Partition> {
    let (two_k, b) = runs(mu).into_iter().find(|(v, _)| v % 2 == 0)?;
    let mut parts: Vec<u32> = mu.parts().iter().copied().filter(|&p| p != two_k).collect();
    parts.extend(std::iter::repeat(b).take(two_k as usize));
    Partition::new(parts).ok()
}

/// Inverse of [`even_to_repeated_odd`].
pub fn repeated_odd_to_even(lam: &Partition) -> Option<Partition> {
    let (b, m) = runs(lam).into_iter().find(|&(_, m)| m >= 2)?;
    let two_k = m - m % 2;
    let mut parts: Vec<u32> = lam.parts().iter().copied().filter(|&p| p != b).collect();
    if m % 2 == 1 {
        parts.push(b);
    }
    parts.extend(std::iter::repeat(two_k).take(b as usize));
    Partition::new(parts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::make_partition;

    fn p(parts: &[i64]) -> Partition {
        make_partition(parts).unwrap()
    }

    #[test]
    fn one_even_value() {
        assert!(one_even_value_odd_distinct(&p(&[4])));
        assert!(one_even_value_odd_distinct(&p(&[2, 2])));
        assert!(one_even_value_odd_distinct(&p(&[5, 2, 2, 1])));
        assert!(!one_even_value_odd_distinct(&p(&[4, 2])));
        assert!(!one_even_value_odd_distinct(&p(&[2, 1, 1])));
        assert!(!one_even_value_odd_distinct(&p(&[3, 1])));
    }

    #[test]
    fn witness_conditions() {
        // k = 2, b = 1, λ^o = ∅ is excluded
        assert!(!one_even_part_witness(&p(&[4])));
        assert!(one_even_part_witness(&p(&[2])));
        // λ^o = μ(4) = (3,1)
        assert!(!one_even_part_witness(&p(&[4, 3, 1])));
        // even multiplicity
        assert!(!one_even_part_witness(&p(&[2, 2])));
        // gap 5−1 = 4 > 2
        assert!(!one_even_part_witness(&p(&[5, 2, 1])));
        assert!(one_even_part_witness(&p(&[3, 2, 1])));
    }

    #[test]
    fn correspondence_round_trips() {
        for mu in [p(&[2]), p(&[3, 2, 1]), p(&[6, 6, 6, 5, 3]), p(&[2, 2, 2, 3, 1])] {
            let lam = even_to_repeated_odd(&mu).unwrap();
            assert!(lam.all_odd());
            assert_eq!(repeated_odd_to_even(&lam).unwrap(), mu);
            assert_eq!(one_even_part_witness(&mu), repeated_odd_part_witness(&lam), "{mu}");
        }
        assert_eq!(even_to_repeated_odd(&p(&[3, 2, 1])).unwrap(), p(&[3, 1, 1, 1]));
    }
}
