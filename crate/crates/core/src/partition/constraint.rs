//! Constrained partition enumeration.
//!
//! Every family is compiled to per-value lookup tables (is the value allowed,
//! may it repeat, does it count toward a parity condition) and walked by a
//! first-part-bounded recursion. A feasibility table prunes branches that
//! cannot be completed, so the walk visits only prefixes of real outputs.

use serde::Serialize;

use super::{Partition, ResidueSpec};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The partition families that appear in the identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintSpec {
    All,
    OddParts,
    DistinctParts,
    DistinctOdd,
    /// `Q_o(n,r)`: no part divisible by `2r`, parts divisible by `r` distinct.
    DistinctOddMultiplesOfR {
        r: u32,
    },
    /// `Q(n,L,r)`: distinct parts, no even part in a class of `L`.
    QLr(ResidueSpec),
    /// `P(n,L,2r)`: every even part lies in a class of `L`.
    PLr(ResidueSpec),
    /// All partitions whose number of even parts has the given parity.
    EvenCountParity(Parity),
    /// All partitions whose number of parts divisible by `2r` has the given parity.
    DivisibleBy2rCountParity {
        r: u32,
        parity: Parity,
    },
    /// `P(n,L,2r)` restricted to the given parity of the number of even parts.
    EvenCountParityRestricted {
        spec: ResidueSpec,
        parity: Parity,
    },
}

impl ConstraintSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            ConstraintSpec::DistinctOddMultiplesOfR { r }
            | ConstraintSpec::DivisibleBy2rCountParity { r, .. }
                if *r == 0 =>
            {
                Err(Error::InvalidResidue("r must be positive".into()))
            }
            ConstraintSpec::QLr(spec)
            | ConstraintSpec::PLr(spec)
            | ConstraintSpec::EvenCountParityRestricted { spec, .. } => spec.require_nonempty_l(),
            _ => Ok(()),
        }
    }

    /// Independent membership test, written from the family definitions.
    pub fn admits(&self, parts: &[u32]) -> bool {
        let distinct = parts.windows(2).all(|w| w[0] != w[1]);
        let evens = parts.iter().filter(|&&p| p % 2 == 0).count();
        match self {
            ConstraintSpec::All => true,
            ConstraintSpec::OddParts => parts.iter().all(|p| p % 2 == 1),
            ConstraintSpec::DistinctParts => distinct,
            ConstraintSpec::DistinctOdd => distinct && evens == 0,
            ConstraintSpec::DistinctOddMultiplesOfR { r } => {
                let div: Vec<u32> = parts.iter().copied().filter(|p| p % r == 0).collect();
                let first = div.iter().all(|p| p % (2 * r) != 0)
                    && parts.iter().all(|p| p % (2 * r) != 0)
                    && div.windows(2).all(|w| w[0] != w[1]);
                // "all parts divisible by r are distinct, odd multiples of r"
                let second = div.iter().all(|p| (p / r) % 2 == 1) && div.windows(2).all(|w| w[0] != w[1]);
                assert_eq!(first, second, "the two descriptions of Q_o(n,r) disagree on {parts:?}");
                first
            }
            ConstraintSpec::QLr(spec) => distinct && parts.iter().all(|&p| !spec.in_l(p)),
            ConstraintSpec::PLr(spec) => parts.iter().all(|&p| p % 2 == 1 || spec.in_l(p)),
            ConstraintSpec::EvenCountParity(parity) => Parity::of(evens) == *parity,
            ConstraintSpec::DivisibleBy2rCountParity { r, parity } => {
                Parity::of(parts.iter().filter(|&&p| p % (2 * r) == 0).count()) == *parity
            }
            ConstraintSpec::EvenCountParityRestricted { spec, parity } => {
                ConstraintSpec::PLr(spec.clone()).admits(parts) && Parity::of(evens) == *parity
            }
        }
    }

    fn compile(&self, n: u32) -> Rule {
        let size = n as usize + 1;
        let mut rule = Rule {
            allow: vec![true; size],
            single: vec![false; size],
            mark: vec![false; size],
            parity: match self {
                ConstraintSpec::EvenCountParity(parity)
                | ConstraintSpec::DivisibleBy2rCountParity { parity, .. }
                | ConstraintSpec::EvenCountParityRestricted { parity, .. } => Some(*parity),
                _ => None,
            },
        };
        for v in 1..=n {
            let i = v as usize;
            match self {
                ConstraintSpec::All => {}
                ConstraintSpec::OddParts => rule.allow[i] = v % 2 == 1,
                ConstraintSpec::DistinctParts => rule.single[i] = true,
                ConstraintSpec::DistinctOdd => {
                    rule.allow[i] = v % 2 == 1;
                    rule.single[i] = true;
                }
                ConstraintSpec::DistinctOddMultiplesOfR { r } => {
                    rule.allow[i] = v % (2 * r) != 0;
                    rule.single[i] = v % r == 0;
                }
                ConstraintSpec::QLr(spec) => {
                    rule.allow[i] = !spec.in_l(v);
                    rule.single[i] = true;
                }
                ConstraintSpec::PLr(spec) => rule.allow[i] = v % 2 == 1 || spec.in_l(v),
                ConstraintSpec::EvenCountParity(_) => {
                    rule.mark[i] = v % 2 == 0;
                }
                ConstraintSpec::DivisibleBy2rCountParity { r, .. } => {
                    rule.mark[i] = v % (2 * r) == 0;
                }
                ConstraintSpec::EvenCountParityRestricted { spec, .. } => {
                    rule.allow[i] = v % 2 == 1 || spec.in_l(v);
                    rule.mark[i] = v % 2 == 0;
                }
            }
        }
        rule
    }
}

struct Rule {
    allow: Vec<bool>,
    single: Vec<bool>,
    mark: Vec<bool>,
    parity: Option<Parity>,
}

struct Walk<'a, F> {
    rule: &'a Rule,
    // feasible[m][k]: k is reachable using allowed values ≤ m
    feasible: Vec<Vec<bool>>,
    stack: Vec<u32>,
    visit: F,
}

impl Rule {
    fn feasibility(&self, n: usize) -> Vec<Vec<bool>> {
        let mut table = vec![vec![false; n + 1]; n + 1];
        table[0][0] = true;
        for m in 1..=n {
            for k in 0..=n {
                let mut ok = table[m - 1][k];
                if !ok && self.allow[m] && k >= m {
                    ok = if self.single[m] { table[m - 1][k - m] } else { table[m][k - m] };
                }
                table[m][k] = ok;
            }
        }
        table
    }
}

impl<F: FnMut(&[u32])> Walk<'_, F> {
    fn run(&mut self, rem: usize, max: usize, marked: usize) {
        if rem == 0 {
            if self.rule.parity.map_or(true, |p| Parity::of(marked) == p) {
                (self.visit)(&self.stack);
            }
            return;
        }
        for v in (1..=max.min(rem)).rev() {
            if !self.rule.allow[v] {
                continue;
            }
            let next_max = if self.rule.single[v] { v - 1 } else { v };
            if !self.feasible[next_max][rem - v] {
                continue;
            }
            self.stack.push(v as u32);
            self.run(rem - v, next_max, marked + usize::from(self.rule.mark[v]));
            self.stack.pop();
        }
    }
}

/// Calls `visit` on every partition of `n` in the family, as a part slice,
/// in lexicographically descending order.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, c: &ConstraintSpec, visit: F) -> Result<()> {
    c.validate()?;
    let rule = c.compile(n);
    let feasible = rule.feasibility(n as usize);
    let mut walk = Walk { rule: &rule, feasible, stack: Vec::new(), visit };
    if walk.feasible[n as usize][n as usize] {
        walk.run(n as usize, n as usize, 0);
    }
    Ok(())
}

pub fn enumerate_partitions(n: u32, c: &ConstraintSpec) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_partition(n, c, |parts| out.push(Partition::from_sorted(parts.to_vec())))?;
    Ok(out)
}

pub fn count_partitions(n: u32, c: &ConstraintSpec) -> Result<u64> {
    let mut count = 0u64;
    for_each_partition(n, c, |_| count += 1)?;
    Ok(count)
}

/// Partitions of `n` in the family that also satisfy `extra`.
pub fn enumerate_filtered(
    n: u32,
    c: &ConstraintSpec,
    mut extra: impl FnMut(&Partition) -> bool,
) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_partition(n, c, |parts| {
        let lam = Partition::from_sorted(parts.to_vec());
        if extra(&lam) {
            out.push(lam);
        }
    })?;
    Ok(out)
}
