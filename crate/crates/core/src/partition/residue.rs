use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A residue configuration `(r, L, O)` with `L ⊆ {2,4,…,2r}` and
/// `O ⊆ {1,3,…,2r−1}`. Residue classes are written `1..=2r`, so `2r` stands
/// for the class of multiples of `2r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueSpec {
    pub r: u32,
    #[serde(rename = "L")]
    pub l: BTreeSet<u32>,
    #[serde(rename = "O")]
    pub o: BTreeSet<u32>,
}

impl ResidueSpec {
    pub fn new(r: u32, l: impl IntoIterator<Item = u32>, o: impl IntoIterator<Item = u32>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidResidue("r must be positive".into()));
        }
        let l: BTreeSet<u32> = l.into_iter().collect();
        let o: BTreeSet<u32> = o.into_iter().collect();
        if let Some(&bad) = l.iter().find(|&&x| x == 0 || x % 2 == 1 || x > 2 * r) {
            return Err(Error::InvalidResidue(format!("{bad} is not an even residue in 2..={}", 2 * r)));
        }
        if let Some(&bad) = o.iter().find(|&&x| x % 2 == 0 || x >= 2 * r) {
            return Err(Error::InvalidResidue(format!("{bad} is not an odd residue in 1..={}", 2 * r - 1)));
        }
        Ok(Self { r, l, o })
    }

    /// Just `r`, with both residue sets empty.
    pub fn plain(r: u32) -> Result<Self> {
        Self::new(r, [], [])
    }

    /// Splits a mixed list of residues into its even part `L` and odd part `O`.
    pub fn from_set(r: u32, set: &[u32]) -> Result<Self> {
        let l = set.iter().copied().filter(|x| x % 2 == 0);
        let o = set.iter().copied().filter(|x| x % 2 == 1);
        Self::new(r, l, o)
    }

    /// The configuration with `L ∪ O = {ell}`.
    pub fn singleton(r: u32, ell: u32) -> Result<Self> {
        Self::from_set(r, &[ell])
    }

    /// `L = {2,…,2r}` and `O = {1,…,2r−1}`.
    pub fn full(r: u32) -> Result<Self> {
        Self::from_set(r, &(1..=2 * r).collect::<Vec<_>>())
    }

    pub fn modulus(&self) -> u32 {
        2 * self.r
    }

    pub fn l_complement(&self) -> BTreeSet<u32> {
        (1..=self.r).map(|k| 2 * k).filter(|x| !self.l.contains(x)).collect()
    }

    pub fn o_complement(&self) -> BTreeSet<u32> {
        (0..self.r).map(|k| 2 * k + 1).filter(|x| !self.o.contains(x)).collect()
    }

    /// `L ∪ O` in increasing order.
    pub fn residues(&self) -> Vec<u32> {
        self.l.union(&self.o).copied().collect()
    }

    /// The class of `part` modulo `2r`, in `1..=2r`.
    pub fn class_of(&self, part: u32) -> u32 {
        let m = self.modulus();
        match part % m {
            0 => m,
            c => c,
        }
    }

    /// True for even parts whose class lies in `L`.
    pub fn in_l(&self, part: u32) -> bool {
        part % 2 == 0 && self.l.contains(&self.class_of(part))
    }

    /// True for odd parts whose class lies in `O`.
    pub fn in_o(&self, part: u32) -> bool {
        part % 2 == 1 && self.o.contains(&self.class_of(part))
    }

    /// True for parts whose class lies in `L ∪ O`.
    pub fn marks(&self, part: u32) -> bool {
        self.in_l(part) || self.in_o(part)
    }

    pub fn covers_all_evens(&self) -> bool {
        self.l.len() == self.r as usize
    }

    pub fn require_nonempty_l(&self) -> Result<()> {
        if self.l.is_empty() {
            return Err(Error::InvalidResidue("L must be nonempty".into()));
        }
        Ok(())
    }

    pub fn require_nonempty(&self) -> Result<()> {
        if self.l.is_empty() && self.o.is_empty() {
            return Err(Error::InvalidResidue("L ∪ O must be nonempty".into()));
        }
        Ok(())
    }

    /// All nonempty subsets of `{2,…,2r}`, as configurations with `O = ∅`.
    pub fn all_nonempty_l(r: u32) -> Vec<ResidueSpec> {
        let evens: Vec<u32> = (1..=r).map(|k| 2 * k).collect();
        (1u32..(1 << r))
            .map(|mask| {
                let l = evens.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
                Self::new(r, l, []).expect("subset of valid residues")
            })
            .collect()
    }
}

impl fmt::Display for ResidueSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<u32>| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "r={} L={{{}}} O={{{}}}", self.r, join(&self.l), join(&self.o))
    }
}
