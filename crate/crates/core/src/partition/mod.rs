//! Integer partitions, the pair objects `(λ, (a^b))`, and the predicates used
//! to state the identities: `B_r(n,a,b)`, `μ(a)` and the divisibility split.

mod constraint;
mod pairs;
mod residue;

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

pub use constraint::{
    count_partitions, enumerate_filtered, enumerate_partitions, for_each_partition, ConstraintSpec, Parity,
};
pub use pairs::{count_pairs, enumerate_pairs, PairSpec};
pub use residue::ResidueSpec;

/// A partition stored as its non-increasing sequence of parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
    #[serde(skip)]
    size: u32,
}

impl Partition {
    /// Sorts `parts` into non-increasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self::from_sorted(parts))
    }

    /// `parts` must already be positive and non-increasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(a^b)`: `b` copies of the part `a`.
    pub fn rectangle(a: u32, b: u32) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![a; b as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th largest part (0-based), or 0 past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// `λ₁ − λ₂`, with missing parts read as 0.
    pub fn first_gap(&self) -> u32 {
        self.part(0) - self.part(1)
    }

    pub fn contains(&self, v: u32) -> bool {
        self.multiplicity(v) > 0
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Membership in `Q_o`: distinct odd parts.
    pub fn is_distinct_odd(&self) -> bool {
        self.all_odd() && self.is_distinct()
    }

    /// `λ ∪ {v}`.
    pub fn with_part(&self, v: u32) -> Result<Self> {
        if v == 0 {
            return Err(Error::NonPositivePart(0));
        }
        let mut parts = self.parts.clone();
        let at = parts.iter().position(|&p| p < v).unwrap_or(parts.len());
        parts.insert(at, v);
        Ok(Self::from_sorted(parts))
    }

    /// `λ \ {v}` (one copy), or `None` if `v` is not a part.
    pub fn without_part(&self, v: u32) -> Option<Self> {
        let at = self.parts.iter().position(|&p| p == v)?;
        let mut parts = self.parts.clone();
        parts.remove(at);
        Some(Self::from_sorted(parts))
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self::from_sorted(parts)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.largest() as usize;
        let parts =
            (1..=width as u32).map(|k| self.parts.iter().take_while(|&&p| p >= k).count() as u32).collect();
        Self::from_sorted(parts)
    }

    pub fn statistic(&self, kind: StatisticKind) -> u32 {
        self.parts.iter().filter(|&&p| kind.counts(p)).count() as u32
    }

    /// Splits into (parts not divisible by `r`, parts divisible by `r`).
    pub fn split_div(&self, r: u32) -> (Partition, Partition) {
        let (div, ndiv): (Vec<u32>, Vec<u32>) = self.parts.iter().partition(|&&p| p % r == 0);
        (Self::from_sorted(ndiv), Self::from_sorted(div))
    }

    /// Exponential notation, e.g. `(5, 3^2, 1)`.
    pub fn exponential(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if run == 1 {
                out.push(v.to_string());
            } else {
                out.push(format!("{v}^{run}"));
            }
            i += run;
        }
        format!("({})", out.join(", "))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a partition from arbitrary integers, rejecting zero or negative
/// entries.
pub fn make_partition(parts: &[i64]) -> Result<Partition> {
    let parts = parts
        .iter()
        .map(|&p| u32::try_from(p).ok().filter(|&p| p > 0).ok_or(Error::NonPositivePart(p)))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Part-counting statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatisticKind {
    NumParts,
    NumEvenParts,
    NumOddParts,
    NumPartsDivisibleBy(u32),
    /// Parts `≡ ell (mod modulus)`; `ell == modulus` means residue 0.
    NumPartsInResidue {
        ell: u32,
        modulus: u32,
    },
}

impl StatisticKind {
    pub fn counts(self, part: u32) -> bool {
        match self {
            StatisticKind::NumParts => true,
            StatisticKind::NumEvenParts => part % 2 == 0,
            StatisticKind::NumOddParts => part % 2 == 1,
            StatisticKind::NumPartsDivisibleBy(m) => part % m == 0,
            StatisticKind::NumPartsInResidue { ell, modulus } => part % modulus == ell % modulus,
        }
    }
}

/// A pair `(λ, (a^b))` with a nonempty rectangle; `λ` may be empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionPair {
    pub lambda: Partition,
    pub a: u32,
    pub b: u32,
}

impl PartitionPair {
    pub fn new(lambda: Partition, a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(format!("rectangle ({a}^{b}) must be nonempty")));
        }
        Ok(Self { lambda, a, b })
    }

    pub fn size(&self) -> u32 {
        self.lambda.size() + self.a * self.b
    }

    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.a, self.b)
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x ({}^{})", self.lambda, self.a, self.b)
    }
}

impl fmt::Debug for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `μ(a)` for even `a ≥ 4`: `(a/2+1, a/2−1)` if `a/2` is even, otherwise
/// `(a/2+2, a/2−2)`. `μ(0)` is the empty partition.
pub fn mu_partition(a: u32) -> Result<Partition> {
    if a == 0 {
        return Ok(Partition::empty());
    }
    if a % 2 == 1 || a == 2 {
        return Err(Error::InvalidParameter(format!("mu(a) needs a = 0 or even a >= 4, got {a}")));
    }
    let h = a / 2;
    let parts = if h % 2 == 0 { vec![h + 1, h - 1] } else { vec![h + 2, h - 2] };
    Ok(Partition::from_sorted(parts))
}

/// How the first-gap bound of `B_r(n,a,b)` is applied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum GapRule {
    /// `λ₁ − λ₂ ≤ 2r(a+b+1)`, exactly as defined.
    #[default]
    Stated,
    /// Also admits `λ₁ = 3r(a+b+1)` with a larger gap. These pairs lie in
    /// the complement of the `sec2` injection but fail the stated bound.
    Amended,
}

/// Membership of `λ` in `B_r(n,a,b)`:
/// `|λ| = n − rab`, `λ ≠ (ra, r(a−2))`, `λ₁ − λ₂ ≤ 2r(a+b+1)` and
/// `r(a+b+1) ∉ λ`. Requires `1 ≤ ab ≤ n`.
pub fn in_b(lam: &Partition, n: u32, a: u32, b: u32, r: u32) -> Result<bool> {
    in_b_with(lam, n, a, b, r, GapRule::Stated)
}

pub fn in_b_with(lam: &Partition, n: u32, a: u32, b: u32, r: u32, rule: GapRule) -> Result<bool> {
    let ab = a.checked_mul(b).filter(|&ab| ab >= 1 && ab <= n);
    if ab.is_none() || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "B_r(n,a,b) needs 1 <= ab <= n and r >= 1, got n={n} a={a} b={b} r={r}"
        )));
    }
    let rab = r as u64 * a as u64 * b as u64;
    if lam.size() as u64 + rab != n as u64 {
        return Ok(false);
    }
    // (ra, r(a-2)) read with the λ_k = 0 convention
    if a >= 2 {
        let excluded: Vec<u32> = [r * a, r * (a - 2)].into_iter().filter(|&p| p > 0).collect();
        if lam.parts() == excluded.as_slice() {
            return Ok(false);
        }
    }
    let s = r * (a + b + 1);
    if lam.contains(s) {
        return Ok(false);
    }
    let within = lam.first_gap() <= 2 * s;
    Ok(match rule {
        GapRule::Stated => within,
        GapRule::Amended => within || lam.largest() == 3 * s,
    })
}
