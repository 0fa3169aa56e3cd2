//! Per-family part statistics, gathered in one enumeration pass.

use std::collections::HashMap;
use std::rc::Rc;

use crate::partition::{for_each_partition, ConstraintSpec};
use crate::Result;

/// Statistics of every partition of `n` in one family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub count: u64,
    /// Members with an even / odd number of parts.
    pub even_length: u64,
    pub odd_length: u64,
    /// `mult[v]`: total multiplicity of the part `v` over the family.
    pub mult: Vec<u64>,
}

impl Tally {
    pub fn compute(n: u32, c: &ConstraintSpec) -> Result<Tally> {
        let mut t = Tally { mult: vec![0; n as usize + 1], ..Tally::default() };
        for_each_partition(n, c, |parts| {
            t.count += 1;
            if parts.len() % 2 == 0 {
                t.even_length += 1;
            } else {
                t.odd_length += 1;
            }
            for &p in parts {
                t.mult[p as usize] += 1;
            }
        })?;
        Ok(t)
    }

    /// Total number of parts satisfying `pred` over the family.
    pub fn parts(&self, pred: impl Fn(u32) -> bool) -> i64 {
        self.mult.iter().enumerate().filter(|&(v, _)| pred(v as u32)).map(|(_, &m)| m as i64).sum()
    }

    pub fn all_parts(&self) -> i64 {
        self.parts(|_| true)
    }
}

/// Memoized tallies, shared across the checks of one run.
#[derive(Default)]
pub struct TallyCache {
    map: HashMap<(ConstraintSpec, u32), Rc<Tally>>,
}

impl TallyCache {
    pub fn get(&mut self, n: u32, c: ConstraintSpec) -> Result<Rc<Tally>> {
        if let Some(t) = self.map.get(&(c.clone(), n)) {
            return Ok(Rc::clone(t));
        }
        let t = Rc::new(Tally::compute(n, &c)?);
        self.map.insert((c, n), Rc::clone(&t));
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_partitions_of_four() {
        // (4) (3,1) (2,2) (2,1,1) (1,1,1,1)
        let t = Tally::compute(4, &ConstraintSpec::All).unwrap();
        assert_eq!(t.count, 5);
        assert_eq!(t.mult, vec![0, 7, 3, 1, 1]);
        assert_eq!((t.even_length, t.odd_length), (3, 2));
        assert_eq!(t.all_parts(), 12);
    }

    #[test]
    fn cache_reuses() {
        let mut cache = TallyCache::default();
        let a = cache.get(10, ConstraintSpec::DistinctOdd).unwrap();
        let b = cache.get(10, ConstraintSpec::DistinctOdd).unwrap();
        assert!(Rc::ptr_eq(&a, &b));
        assert_eq!(a.count, 2);
    }
}
