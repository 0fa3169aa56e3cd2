use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::Error;

/// The identities this crate can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `p_e(n,2) = p_o(n,2) + q_o(n)`.
    Lehmer,
    /// `p_e(n) − p_o(n) = (−1)^n q_o(n)` (parity of the number of parts).
    Glaisher,
    /// Beck's excess (odd parts over distinct parts) as a count of pairs.
    BeckPairs,
    /// Excess of parts over `P_e(n,2)` versus `P_o(n,2) ∪ Q_o(n)`.
    T1_2,
    /// Restricted excess counted by pairs with `a, b` odd and `λ ∈ Q_o ∩ B(n,a,b)`.
    T1_4,
    /// `p_e(n,2r) = p_o(n,2r) + q_o(n,r)`.
    T1_6,
    /// Excess of parts over `P_e(n,2r)` versus `P_o(n,2r) ∪ Q_o(n,r)`.
    T1_7,
    /// Restricted excess over parts divisible by `r` and `2r`.
    T1_8,
    /// `p_e(n,L,2r) = p_o(n,L,2r) + q(n,L,r)`.
    T1_9,
    /// Excess of parts over `P_e(n,L,2r)` versus `P_o(n,L,2r) ∪ Q(n,L,r)`.
    T1_10,
    /// Restricted excess over even parts with residues in `L`.
    T1_11,
    /// Excess of parts in residue classes `L ∪ O` modulo `2r`.
    T1_12,
    /// Excess of even parts over `P_o(n,2)` versus `P_e(n,2)`.
    Cor5_2,
    /// Excess of odd parts over `P_e(n,2)` versus `P_o(n,2) ∪ Q_o(n)`.
    Cor5_3,
    /// Residue excess with every class marked.
    Ex1,
    /// Residue excess with classes `{r, 2r}`.
    Ex2,
    /// Residue excess with classes `{1, 2r}`.
    Ex3,
    /// Pairs with `a ≡ 1 (mod 2r)`, `b` even outnumber `a ≡ 0`, `b` odd.
    T6_2,
    /// Pairs with `a ≡ 1 (mod 2r)`, `b` odd outnumber `a ≡ 0`, `b` even.
    T6_3,
    /// Strict positivity of single-residue coefficients past a threshold.
    PositivityRemark,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::Lehmer,
        TheoremId::Glaisher,
        TheoremId::BeckPairs,
        TheoremId::T1_2,
        TheoremId::T1_4,
        TheoremId::T1_6,
        TheoremId::T1_7,
        TheoremId::T1_8,
        TheoremId::T1_9,
        TheoremId::T1_10,
        TheoremId::T1_11,
        TheoremId::T1_12,
        TheoremId::Cor5_2,
        TheoremId::Cor5_3,
        TheoremId::Ex1,
        TheoremId::Ex2,
        TheoremId::Ex3,
        TheoremId::T6_2,
        TheoremId::T6_3,
        TheoremId::PositivityRemark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lehmer => "lehmer",
            TheoremId::Glaisher => "glaisher",
            TheoremId::BeckPairs => "beck_pairs",
            TheoremId::T1_2 => "t1_2",
            TheoremId::T1_4 => "t1_4",
            TheoremId::T1_6 => "t1_6",
            TheoremId::T1_7 => "t1_7",
            TheoremId::T1_8 => "t1_8",
            TheoremId::T1_9 => "t1_9",
            TheoremId::T1_10 => "t1_10",
            TheoremId::T1_11 => "t1_11",
            TheoremId::T1_12 => "t1_12",
            TheoremId::Cor5_2 => "cor5_2",
            TheoremId::Cor5_3 => "cor5_3",
            TheoremId::Ex1 => "ex1",
            TheoremId::Ex2 => "ex2",
            TheoremId::Ex3 => "ex3",
            TheoremId::T6_2 => "t6_2",
            TheoremId::T6_3 => "t6_3",
            TheoremId::PositivityRemark => "positivity",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '.'], "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity `{s}`")))
    }
}
