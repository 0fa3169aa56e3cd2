//! Executable injections between sets of pairs `(λ, (a^b))`, with inverses
//! and independent image-set predicates, plus an exhaustive checker.

pub mod lr;
pub mod sec2;
pub mod thm62;
pub mod thm63;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use lr::{map_l_lr, map_t_lr, map_t_lr_extended};
pub use sec2::{map_l_sec2, map_t_sec2};
pub use thm62::{map_l_thm62, map_t_thm62};
pub use thm63::{map_l_thm63, map_t_thm63};

use crate::partition::{enumerate_pairs, GapRule, PairSpec, PartitionPair, ResidueSpec};
use crate::series::derivative_difference;
use crate::{Error, Result, TheoremId};

/// Violations kept per report; the counts stay exact.
const MAX_VIOLATIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapId {
    Sec2,
    /// `T_{ℓ,r}` over every class in `L ∪ O`. `extended` sends
    /// `(∅, (2^{n/2}))` to `(∅, (n))` and needs every even class present.
    Lr {
        extended: bool,
    },
    Thm62,
    Thm63,
}

impl MapId {
    pub const ALL: [MapId; 5] = [
        MapId::Sec2,
        MapId::Lr { extended: false },
        MapId::Lr { extended: true },
        MapId::Thm62,
        MapId::Thm63,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Sec2 => "sec2",
            MapId::Lr { extended: false } => "lr",
            MapId::Lr { extended: true } => "lr-extended",
            MapId::Thm62 => "thm62",
            MapId::Thm63 => "thm63",
        }
    }

    /// The identity whose excess `|B(n)| − |A(n)|` this map explains.
    pub fn theorem(self) -> TheoremId {
        match self {
            MapId::Sec2 => TheoremId::T1_4,
            MapId::Lr { .. } => TheoremId::T1_12,
            MapId::Thm62 => TheoremId::T6_2,
            MapId::Thm63 => TheoremId::T6_3,
        }
    }

    fn validate(self, params: &ResidueSpec) -> Result<()> {
        match self {
            MapId::Lr { extended } => {
                params.require_nonempty()?;
                if extended && !params.covers_all_evens() {
                    return Err(Error::InvalidParameter(
                        "the extended map needs every even class in L ∪ O".into(),
                    ));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn domain(self, n: u32, params: &ResidueSpec) -> Result<Vec<PartitionPair>> {
        let r = params.r;
        match self {
            MapId::Sec2 => enumerate_pairs(n, &PairSpec::Sec2Domain),
            MapId::Lr { .. } => per_class(n, params, |ell| PairSpec::LrDomain { r, ell }),
            MapId::Thm62 => enumerate_pairs(n, &PairSpec::Thm62Domain { r }),
            MapId::Thm63 => enumerate_pairs(n, &PairSpec::Thm63Domain { r }),
        }
    }

    fn codomain(self, n: u32, params: &ResidueSpec) -> Result<Vec<PartitionPair>> {
        let r = params.r;
        match self {
            MapId::Sec2 => enumerate_pairs(n, &PairSpec::Sec2Codomain),
            MapId::Lr { .. } => per_class(n, params, |ell| PairSpec::LrCodomain { r, ell }),
            MapId::Thm62 => enumerate_pairs(n, &PairSpec::Thm62Codomain { r }),
            MapId::Thm63 => enumerate_pairs(n, &PairSpec::Thm63Codomain { r }),
        }
    }

    /// `T(p)`; `None` only for the unmapped `(∅, (2^{n/2}))`.
    pub fn forward(self, p: &PartitionPair, params: &ResidueSpec) -> Result<Option<PartitionPair>> {
        let r = params.r;
        match self {
            MapId::Sec2 => map_t_sec2(p).map(Some),
            MapId::Lr { extended } => {
                let ell = params.class_of(p.a);
                if extended {
                    map_t_lr_extended(p, r, ell, p.size())
                } else {
                    map_t_lr(p, r, ell, p.size())
                }
            }
            MapId::Thm62 => map_t_thm62(p, r).map(Some),
            MapId::Thm63 => map_t_thm63(p, r).map(Some),
        }
    }

    /// `L(p)` for `p` in the stated image sets.
    pub fn backward(self, p: &PartitionPair, params: &ResidueSpec) -> Result<PartitionPair> {
        let r = params.r;
        match self {
            MapId::Sec2 => map_l_sec2(p),
            MapId::Lr { extended } => map_l_lr(p, r, params.class_of(p.a), p.size(), extended),
            MapId::Thm62 => map_l_thm62(p, r),
            MapId::Thm63 => map_l_thm63(p, r),
        }
    }

    /// Membership in the stated image sets, decided without applying `T`.
    pub fn in_stated_image(self, p: &PartitionPair, params: &ResidueSpec) -> bool {
        let r = params.r;
        match self {
            MapId::Sec2 => sec2::image_case(p).is_some(),
            MapId::Lr { extended } => {
                params.marks(p.a) && lr::is_image(p, r, params.class_of(p.a), p.size(), extended)
            }
            MapId::Thm62 => thm62::image_case(p, r).is_some(),
            MapId::Thm63 => thm63::image_case(p, r).is_some(),
        }
    }

    /// The combinatorial description of `B(n) ∖ T(A(n))`, where one is given.
    fn complement_description(self, n: u32, p: &PartitionPair, params: &ResidueSpec) -> Option<bool> {
        match self {
            MapId::Sec2 => PairSpec::T1_4 { rule: GapRule::Stated }.admits(n, p).ok(),
            MapId::Lr { extended: false } => {
                let counted = PairSpec::T1_12 { spec: params.clone() }.admits(n, p).ok()?;
                let exceptional = params.marks(2)
                    && n % 4 == 0
                    && n >= 24
                    && p.a == 2
                    && p.lambda == lr::exceptional_partition();
                Some(counted && !exceptional)
            }
            MapId::Lr { extended: true } => PairSpec::Ex1 { spec: params.clone() }.admits(n, p).ok(),
            MapId::Thm62 | MapId::Thm63 => None,
        }
    }
}

fn per_class(n: u32, params: &ResidueSpec, spec: impl Fn(u32) -> PairSpec) -> Result<Vec<PartitionPair>> {
    let mut out = Vec::new();
    for ell in params.residues() {
        out.extend(enumerate_pairs(n, &spec(ell))?);
    }
    Ok(out)
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for MapId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        MapId::ALL
            .into_iter()
            .find(|m| m.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown map `{s}`")))
    }
}

/// Outcome of checking one map exhaustively at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub map: MapId,
    pub n: u32,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub image_size: usize,
    /// Domain elements with no image (the exceptional `(∅, (2^{n/2}))`).
    pub unmapped: Vec<PartitionPair>,
    /// `B(n) ∖ T(A(n))`.
    pub complement: Vec<PartitionPair>,
    pub size_ok: bool,
    pub codomain_ok: bool,
    pub injective: bool,
    /// `L(T(x)) = x` on the domain and `T(L(y)) = y` on the image.
    pub roundtrip_ok: bool,
    /// `L` is defined on every element of the stated image sets and lands in
    /// the domain.
    pub inverse_ok: bool,
    /// The computed image equals the stated image sets exactly.
    pub image_char_ok: bool,
    /// The complement equals its combinatorial description, where one exists.
    pub complement_char_ok: Option<bool>,
    /// `|B(n)| − |A(n)|`.
    pub excess: i64,
    /// The matching coefficient of the excess series.
    pub series_excess: i64,
    /// `|complement| − |unmapped| = series_excess`.
    pub excess_ok: bool,
    pub violations: Vec<String>,
}

impl MapReport {
    /// Every structural check passed. The complement description is
    /// reported separately.
    pub fn passed(&self) -> bool {
        self.size_ok
            && self.codomain_ok
            && self.injective
            && self.roundtrip_ok
            && self.inverse_ok
            && self.image_char_ok
            && self.excess_ok
    }
}

struct Violations(Vec<String>);

impl Violations {
    fn push(&mut self, msg: impl FnOnce() -> String) {
        if self.0.len() < MAX_VIOLATIONS {
            self.0.push(msg());
        }
    }
}

/// Applies `map` to all of `A(n)` and checks it against `B(n)`.
pub fn verify_map(map: MapId, n: u32, params: &ResidueSpec) -> Result<MapReport> {
    map.validate(params)?;
    let domain = map.domain(n, params)?;
    let codomain = map.codomain(n, params)?;
    let codomain_set: BTreeSet<&PartitionPair> = codomain.iter().collect();
    let domain_set: BTreeSet<&PartitionPair> = domain.iter().collect();

    let mut v = Violations(Vec::new());
    let (mut size_ok, mut codomain_ok, mut injective, mut roundtrip_ok, mut inverse_ok) =
        (true, true, true, true, true);
    let mut unmapped = Vec::new();
    let mut image: BTreeSet<PartitionPair> = BTreeSet::new();

    for x in &domain {
        let y = match map.forward(x, params) {
            Ok(Some(y)) => y,
            Ok(None) => {
                unmapped.push(x.clone());
                continue;
            }
            Err(e) => {
                codomain_ok = false;
                v.push(|| format!("T({x}) failed: {e}"));
                continue;
            }
        };
        if y.size() != n {
            size_ok = false;
            v.push(|| format!("T({x}) = {y} has size {}", y.size()));
        }
        if !codomain_set.contains(&y) {
            codomain_ok = false;
            v.push(|| format!("T({x}) = {y} is outside the codomain"));
        }
        match map.backward(&y, params) {
            Ok(back) if back == *x => {}
            Ok(back) => {
                roundtrip_ok = false;
                v.push(|| format!("L(T({x})) = {back}"));
            }
            Err(e) => {
                roundtrip_ok = false;
                v.push(|| format!("L(T({x})) failed: {e}"));
            }
        }
        if !image.insert(y.clone()) {
            injective = false;
            v.push(|| format!("{y} has two preimages"));
        }
    }

    let mut image_char_ok = true;
    let mut complement = Vec::new();
    let mut complement_char_ok = Some(true);
    for y in &codomain {
        let stated = map.in_stated_image(y, params);
        let actual = image.contains(y);
        if stated != actual {
            image_char_ok = false;
            v.push(|| format!("{y}: stated image {stated}, computed image {actual}"));
        }
        if stated {
            match map.backward(y, params) {
                Ok(x) if domain_set.contains(&x) => {
                    if actual && map.forward(&x, params).ok().flatten().as_ref() != Some(y) {
                        roundtrip_ok = false;
                        v.push(|| format!("T(L({y})) = T({x}) differs"));
                    }
                }
                Ok(x) => {
                    inverse_ok = false;
                    v.push(|| format!("L({y}) = {x} is outside the domain"));
                }
                Err(e) => {
                    inverse_ok = false;
                    v.push(|| format!("L({y}) failed: {e}"));
                }
            }
        }
        if !actual {
            let described = map.complement_description(n, y, params);
            if let (Some(ok), Some(false)) = (complement_char_ok, described) {
                complement_char_ok = Some(ok && false);
                v.push(|| format!("{y} is in the complement but not in its description"));
            }
            if described.is_none() {
                complement_char_ok = None;
            }
            complement.push(y.clone());
        }
    }
    if complement_char_ok.is_some() {
        for y in &image {
            if map.complement_description(n, y, params) == Some(true) {
                complement_char_ok = Some(false);
                v.push(|| format!("{y} is an image but matches the complement description"));
            }
        }
    }

    let series_excess =
        derivative_difference(map.theorem(), params, n as usize)?.coefficient_i64(n as usize)?;
    let excess = codomain.len() as i64 - domain.len() as i64;
    let excess_ok =
        complement.len() as i64 - unmapped.len() as i64 == series_excess && excess == series_excess;
    if !excess_ok {
        v.push(|| {
            format!(
                "excess {excess}, complement {} with {} unmapped, series {series_excess}",
                complement.len(),
                unmapped.len()
            )
        });
    }

    Ok(MapReport {
        map,
        n,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        image_size: image.len(),
        unmapped,
        complement,
        size_ok,
        codomain_ok,
        injective,
        roundtrip_ok,
        inverse_ok,
        image_char_ok,
        complement_char_ok,
        excess,
        series_excess,
        excess_ok,
        violations: v.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(r: u32) -> ResidueSpec {
        ResidueSpec::plain(r).unwrap()
    }

    #[test]
    fn sec2_twelve() {
        let rep = verify_map(MapId::Sec2, 12, &plain(1)).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.image_size, rep.domain_size);
    }

    #[test]
    fn thm62_r2_seventeen() {
        let rep = verify_map(MapId::Thm62, 17, &plain(2)).unwrap();
        assert!(rep.image_char_ok && rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn lr_unmapped_small_case() {
        let spec = ResidueSpec::singleton(3, 2).unwrap();
        let rep = verify_map(MapId::Lr { extended: false }, 4, &spec).unwrap();
        assert_eq!(rep.unmapped.len(), 1);
        assert_eq!(rep.unmapped[0].to_string(), "[] x (2^2)");
        assert_eq!(rep.complement.len() as i64 - 1, -1);
        assert_eq!(rep.series_excess, -1);
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn extended_needs_all_evens() {
        let spec = ResidueSpec::singleton(2, 2).unwrap();
        assert!(verify_map(MapId::Lr { extended: true }, 8, &spec).is_err());
        let full = ResidueSpec::full(2).unwrap();
        let rep = verify_map(MapId::Lr { extended: true }, 8, &full).unwrap();
        assert!(rep.unmapped.is_empty());
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn names_round_trip() {
        for m in MapId::ALL {
            assert_eq!(m.name().parse::<MapId>().unwrap(), m);
        }
        assert!("nope".parse::<MapId>().is_err());
    }
}
