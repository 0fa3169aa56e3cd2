//! The `z`-marked generating functions, each a finite product of
//! q-Pochhammer factors `(±z^{[marked]} q^offset; q^step)_∞^{±1}`.

use super::{Binomial, ZJet};
use crate::partition::ResidueSpec;
use crate::{Error, Result};

/// `(±z q^offset; q^step)_∞`, or its reciprocal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochFactor {
    /// `(−z q^o; q^s)` when true, `(z q^o; q^s)` when false.
    pub negate: bool,
    pub offset: usize,
    pub step: usize,
    /// Whether `z` appears in the factor.
    pub marked: bool,
    /// Whether the factor sits in the denominator.
    pub inverse: bool,
}

impl PochFactor {
    fn new(negate: bool, offset: u32, step: u32, marked: bool, inverse: bool) -> Self {
        Self { negate, offset: offset as usize, step: step as usize, marked, inverse }
    }
}

/// Named generating functions. In each, `z` marks the parts being counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenSpec {
    /// `1/((zq;q²)(−zq²;q²))`: signed by the number of even parts, `z` marks all parts.
    F,
    /// `1/((q;q²)(−zq²;q²))`: `z` marks even parts, signed by their number.
    E,
    /// `(−zq;q²)`: distinct odd parts, all marked.
    Qo,
    /// `1/(zq;q²)`: odd parts, all marked.
    OddMarked,
    /// `(−zq;q)`: distinct parts, all marked.
    DistinctMarked,
    /// `1/((zq;q²)(−q²;q²))`: like `F` but only odd parts are marked.
    FOddMarked,
    /// `1/(∏_{j<2r}(zq^j;q^{2r})·(−zq^{2r};q^{2r}))`.
    Fr { r: u32 },
    /// `(−zq^r;q^{2r}) / ∏_{j<r}(zq^j;q^r)`.
    Rr { r: u32 },
    /// `1/(∏_{j<2r}(q^j;q^{2r})·(−zq^{2r};q^{2r}))`.
    Er { r: u32 },
    /// `(−zq^r;q^{2r}) / ∏_{j<r}(q^j;q^r)`.
    Qr { r: u32 },
    /// `1/((q;q²)·∏_{ℓ∈L}(−zq^ℓ;q^{2r}))`.
    ErL(ResidueSpec),
    /// `1/((zq;q²)·∏_{ℓ∈L}(−zq^ℓ;q^{2r}))`.
    FrL(ResidueSpec),
    /// `∏_{j≤2r, j∉L}(−zq^j;q^{2r})`.
    QrL(ResidueSpec),
    /// `1/((q;q²)·∏_{j∈L^c}(−q^j;q^{2r})·∏_{ℓ∈L}(−zq^ℓ;q^{2r}))`.
    EtildeRL(ResidueSpec),
    /// `∏_{j∈O^c}(−q^j;q^{2r})·∏_{ℓ∈O}(−zq^ℓ;q^{2r})`.
    QtildeRO(ResidueSpec),
}

impl GenSpec {
    pub const NAMES: [&'static str; 15] = [
        "F",
        "E",
        "Qo",
        "OddMarked",
        "DistinctMarked",
        "FOddMarked",
        "Fr",
        "Rr",
        "Er",
        "Qr",
        "ErL",
        "FrL",
        "QrL",
        "EtildeRL",
        "QtildeRO",
    ];

    /// Looks up a series by name; `params` supplies `r`, `L` and `O` where needed.
    pub fn from_name(name: &str, params: &ResidueSpec) -> Result<GenSpec> {
        let r = params.r;
        let spec = match name.to_ascii_lowercase().as_str() {
            "f" => GenSpec::F,
            "e" => GenSpec::E,
            "qo" => GenSpec::Qo,
            "oddmarked" => GenSpec::OddMarked,
            "distinctmarked" => GenSpec::DistinctMarked,
            "foddmarked" => GenSpec::FOddMarked,
            "fr" => GenSpec::Fr { r },
            "rr" => GenSpec::Rr { r },
            "er" => GenSpec::Er { r },
            "qr" => GenSpec::Qr { r },
            "erl" => GenSpec::ErL(params.clone()),
            "frl" => GenSpec::FrL(params.clone()),
            "qrl" => GenSpec::QrL(params.clone()),
            "etilderl" => GenSpec::EtildeRL(params.clone()),
            "qtildero" => GenSpec::QtildeRO(params.clone()),
            _ => return Err(Error::InvalidParameter(format!("unknown series `{name}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GenSpec::Fr { r } | GenSpec::Rr { r } | GenSpec::Er { r } | GenSpec::Qr { r } if *r == 0 => {
                Err(Error::InvalidResidue("r must be positive".into()))
            }
            GenSpec::ErL(spec) | GenSpec::FrL(spec) | GenSpec::QrL(spec) => spec.require_nonempty_l(),
            _ => Ok(()),
        }
    }

    pub fn factors(&self) -> Result<Vec<PochFactor>> {
        self.validate()?;
        let f = PochFactor::new;
        Ok(match self {
            GenSpec::F => vec![f(false, 1, 2, true, true), f(true, 2, 2, true, true)],
            GenSpec::E => vec![f(false, 1, 2, false, true), f(true, 2, 2, true, true)],
            GenSpec::Qo => vec![f(true, 1, 2, true, false)],
            GenSpec::OddMarked => vec![f(false, 1, 2, true, true)],
            GenSpec::DistinctMarked => vec![f(true, 1, 1, true, false)],
            GenSpec::FOddMarked => vec![f(false, 1, 2, true, true), f(true, 2, 2, false, true)],
            GenSpec::Fr { r } | GenSpec::Er { r } => {
                let marked = matches!(self, GenSpec::Fr { .. });
                let mut v: Vec<PochFactor> = (1..2 * r).map(|j| f(false, j, 2 * r, marked, true)).collect();
                v.push(f(true, 2 * r, 2 * r, true, true));
                v
            }
            GenSpec::Rr { r } | GenSpec::Qr { r } => {
                let marked = matches!(self, GenSpec::Rr { .. });
                let mut v = vec![f(true, *r, 2 * r, true, false)];
                v.extend((1..*r).map(|j| f(false, j, *r, marked, true)));
                v
            }
            GenSpec::ErL(spec) | GenSpec::FrL(spec) => {
                let marked = matches!(self, GenSpec::FrL(_));
                let mut v = vec![f(false, 1, 2, marked, true)];
                v.extend(spec.l.iter().map(|&l| f(true, l, spec.modulus(), true, true)));
                v
            }
            GenSpec::QrL(spec) => (1..=spec.modulus())
                .filter(|j| !spec.l.contains(j))
                .map(|j| f(true, j, spec.modulus(), true, false))
                .collect(),
            GenSpec::EtildeRL(spec) => {
                let m = spec.modulus();
                let mut v = vec![f(false, 1, 2, false, true)];
                v.extend(spec.l_complement().into_iter().map(|j| f(true, j, m, false, true)));
                v.extend(spec.l.iter().map(|&l| f(true, l, m, true, true)));
                v
            }
            GenSpec::QtildeRO(spec) => {
                let m = spec.modulus();
                let mut v: Vec<PochFactor> =
                    spec.o_complement().into_iter().map(|j| f(true, j, m, false, false)).collect();
                v.extend(spec.o.iter().map(|&l| f(true, l, m, true, false)));
                v
            }
        })
    }
}

/// Expands the product defining `spec` as a jet truncated at `q^order`.
pub fn build_generating_jet(spec: &GenSpec, order: usize) -> Result<ZJet> {
    let mut jet = ZJet::one(order);
    for factor in spec.factors()? {
        // (a z q^e; q^s) = ∏ (1 − a z q^{e+ks}), a = −1 when negated
        let coeff = if factor.negate { 1 } else { -1 };
        let mut e = factor.offset;
        while e <= order {
            let g = Binomial { coeff, exp: e, marked: factor.marked };
            if factor.inverse {
                jet.div_binomial(g);
            } else {
                jet.mul_binomial(g);
            }
            e += factor.step;
        }
    }
    Ok(jet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::pochhammer_inf;

    #[test]
    fn qo_jet() {
        let j = build_generating_jet(&GenSpec::Qo, 10).unwrap();
        assert_eq!(j.value, pochhammer_inf(-1, 1, 2, 10));
        // parts over Q_o(4) = {(3,1)}
        assert_eq!(j.deriv.coefficient_i64(4).unwrap(), 2);
    }

    #[test]
    fn constant_terms() {
        for r in 1..=4 {
            let j = build_generating_jet(&GenSpec::Er { r }, 20).unwrap();
            assert_eq!(j.value.coefficient_i64(0).unwrap(), 1);
            assert_eq!(j.deriv.coefficient_i64(0).unwrap(), 0);
        }
    }

    #[test]
    fn names_resolve() {
        let params = ResidueSpec::from_set(2, &[2, 3]).unwrap();
        for name in GenSpec::NAMES {
            assert!(GenSpec::from_name(name, &params).is_ok(), "{name}");
        }
        assert!(GenSpec::from_name("nope", &params).is_err());
        let no_l = ResidueSpec::plain(2).unwrap();
        assert!(GenSpec::from_name("ErL", &no_l).is_err());
    }
}
