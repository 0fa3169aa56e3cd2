//! Each identity's generating series, computed twice: once from the jets of
//! the defining products, once from a simplified closed form.

use num_bigint::BigInt;

use super::{build_generating_jet, lambert_sum, pochhammer_inf, GenSpec, TruncatedSeries};
use crate::partition::ResidueSpec;
use crate::{Error, Result, TheoremId};

/// The two independently computed forms of one series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRoutes {
    /// From jet arithmetic on the defining products (or, for the sign
    /// results, from a direct double sum over rectangles).
    pub primary: TruncatedSeries,
    /// From the simplified product-times-Lambert-sum form.
    pub closed: TruncatedSeries,
}

impl SeriesRoutes {
    fn agreed(self, thm: TheoremId) -> Result<TruncatedSeries> {
        let n = (0..=self.primary.order().min(self.closed.order()))
            .find(|&n| self.primary.coeffs()[n] != self.closed.coeffs()[n]);
        match n {
            None => Ok(self.primary),
            Some(index) => Err(Error::RouteMismatch {
                what: thm.name().to_string(),
                index,
                primary: self.primary.coeffs()[index].to_string(),
                closed: self.closed.coeffs()[index].to_string(),
            }),
        }
    }
}

/// The residue configuration an identity uses, derived from `params` where
/// the identity fixes the classes itself.
pub fn residues_for(thm: TheoremId, params: &ResidueSpec) -> Result<ResidueSpec> {
    let r = params.r;
    match thm {
        TheoremId::Ex1 => ResidueSpec::full(r),
        TheoremId::Ex2 => ResidueSpec::from_set(r, &[r, 2 * r]),
        TheoremId::Ex3 => ResidueSpec::from_set(r, &[1, 2 * r]),
        TheoremId::T1_9 | TheoremId::T1_10 | TheoremId::T1_11 => {
            params.require_nonempty_l()?;
            Ok(params.clone())
        }
        TheoremId::T1_12 | TheoremId::PositivityRemark => {
            params.require_nonempty()?;
            Ok(params.clone())
        }
        _ => Ok(params.clone()),
    }
}

fn halve(s: &TruncatedSeries, thm: TheoremId) -> Result<TruncatedSeries> {
    let two = BigInt::from(2);
    let mut out = Vec::with_capacity(s.order() + 1);
    for (n, c) in s.coeffs().iter().enumerate() {
        let (q, rem) = (c / &two, c % &two);
        if rem != BigInt::from(0) {
            return Err(Error::RouteMismatch {
                what: format!("{} (odd coefficient before halving)", thm.name()),
                index: n,
                primary: c.to_string(),
                closed: "even".into(),
            });
        }
        out.push(q);
    }
    Ok(TruncatedSeries::from_coeffs(out, s.order()))
}

/// `Σ q^{ab}` over rectangles with `pred(a, b)`.
fn rectangle_sum(order: usize, pred: impl Fn(usize, usize) -> bool) -> TruncatedSeries {
    let mut coeffs = vec![0i64; order + 1];
    for a in 1..=order {
        for b in 1..=order / a {
            if pred(a, b) {
                coeffs[a * b] += 1;
            }
        }
    }
    TruncatedSeries::from_i64(&coeffs, order)
}

/// Computes both routes for `thm`.
///
/// For the equinumerosity identities (`Lehmer`, `T1_6`, `T1_9`) the series is
/// the generating function of the left-hand count; for `Glaisher` it is
/// `Σ (p_e(n) − p_o(n)) q^n`; for every excess identity it is the
/// generating function of the excess.
pub fn series_routes(thm: TheoremId, params: &ResidueSpec, order: usize) -> Result<SeriesRoutes> {
    let jet = |spec: GenSpec| build_generating_jet(&spec, order);
    let dq = || pochhammer_inf(-1, 1, 2, order);
    let partitions = || pochhammer_inf(1, 1, 1, order).inverse();
    let lambert = |offset: u32, modulus: u32, sign: i64, scale: usize| {
        lambert_sum(offset as usize, modulus as usize, sign, scale, order)
    };
    let r = params.r;
    let m = 2 * r;
    let (primary, closed) = match thm {
        TheoremId::Lehmer => {
            let p = partitions()?;
            let f = jet(GenSpec::F)?.value;
            (halve(&(&p + &f), thm)?, halve(&(&p + &dq()), thm)?)
        }
        TheoremId::Glaisher => (pochhammer_inf(-1, 1, 1, order).inverse()?, pochhammer_inf(1, 1, 2, order)),
        TheoremId::BeckPairs => {
            let odd = jet(GenSpec::OddMarked)?;
            let distinct = jet(GenSpec::DistinctMarked)?;
            (&odd.deriv - &distinct.deriv, &pochhammer_inf(1, 1, 2, order).inverse()? * &lambert(2, 2, 1, 1))
        }
        TheoremId::T1_2 => (&jet(GenSpec::F)?.deriv - &jet(GenSpec::Qo)?.deriv, &dq() * &lambert(2, 2, 1, 1)),
        TheoremId::T1_4 => {
            (&jet(GenSpec::Qo)?.deriv - &jet(GenSpec::E)?.deriv, &dq() * &lambert(1, 1, -1, 1))
        }
        TheoremId::T1_6 => {
            let p = partitions()?;
            let fr = jet(GenSpec::Fr { r })?.value;
            let rr = &(&pochhammer_inf(1, r as usize, r as usize, order) * &p)
                * &pochhammer_inf(-1, r as usize, m as usize, order);
            (halve(&(&p + &fr), thm)?, halve(&(&p + &rr), thm)?)
        }
        TheoremId::T1_7 => {
            let rr_closed = &(&pochhammer_inf(1, r as usize, r as usize, order) * &partitions()?)
                * &pochhammer_inf(-1, r as usize, m as usize, order);
            (
                &jet(GenSpec::Fr { r })?.deriv - &jet(GenSpec::Rr { r })?.deriv,
                &rr_closed * &lambert(m, m, 1, 1),
            )
        }
        TheoremId::T1_8 => {
            let mut prefactor = pochhammer_inf(-1, r as usize, m as usize, order);
            for j in 1..r {
                prefactor = &prefactor * &pochhammer_inf(1, j as usize, r as usize, order).inverse()?;
            }
            (
                &jet(GenSpec::Qr { r })?.deriv - &jet(GenSpec::Er { r })?.deriv,
                &prefactor * &lambert(r, r, -1, 1),
            )
        }
        TheoremId::T1_9 => {
            let spec = residues_for(thm, params)?;
            let mut pl = pochhammer_inf(1, 1, 2, order);
            for &l in &spec.l {
                pl = &pl * &pochhammer_inf(1, l as usize, m as usize, order);
            }
            let pl = pl.inverse()?;
            let e = jet(GenSpec::ErL(spec.clone()))?.value;
            let q = qrl_product(&spec, order);
            (halve(&(&pl + &e), thm)?, halve(&(&pl + &q), thm)?)
        }
        TheoremId::T1_10 => {
            let spec = residues_for(thm, params)?;
            (
                &jet(GenSpec::FrL(spec.clone()))?.deriv - &jet(GenSpec::QrL(spec.clone()))?.deriv,
                &qrl_product(&spec, order) * &lambert(2, 2, 1, 1),
            )
        }
        TheoremId::T1_11 => {
            let spec = residues_for(thm, params)?;
            let mut prefactor = dq();
            for j in spec.l_complement() {
                prefactor = &prefactor * &pochhammer_inf(-1, j as usize, m as usize, order);
            }
            (
                &jet(GenSpec::QrL(spec.clone()))?.deriv - &jet(GenSpec::ErL(spec))?.deriv,
                &prefactor * &lambert(1, 1, -1, 1),
            )
        }
        TheoremId::T1_12 | TheoremId::Ex1 | TheoremId::Ex2 | TheoremId::Ex3 | TheoremId::PositivityRemark => {
            let spec = residues_for(thm, params)?;
            let primary =
                &jet(GenSpec::QtildeRO(spec.clone()))?.deriv - &jet(GenSpec::EtildeRL(spec.clone()))?.deriv;
            let sum = match thm {
                TheoremId::Ex2 => lambert(r, r, -1, 1),
                TheoremId::Ex3 => &lambert(1, m, -1, 1) + &lambert(m, m, -1, 1),
                _ => spec
                    .residues()
                    .into_iter()
                    .fold(TruncatedSeries::zero(order), |acc, l| &acc + &lambert(l, m, -1, 1)),
            };
            (primary, &dq() * &sum)
        }
        TheoremId::Cor5_2 => (-&jet(GenSpec::E)?.deriv, &dq() * &lambert(2, 2, -1, 1)),
        TheoremId::Cor5_3 => (
            &jet(GenSpec::FOddMarked)?.deriv - &jet(GenSpec::Qo)?.deriv,
            &dq() * &(&lambert(2, 2, 1, 1) + &lambert(2, 2, -1, 1)),
        ),
        TheoremId::T6_2 => {
            let m = m as usize;
            let rect = &rectangle_sum(order, |a, b| a % m == 1 % m && b % 2 == 0)
                - &rectangle_sum(order, |a, b| a % m == 0 && b % 2 == 1);
            (&dq() * &rect, &dq() * &(&lambert(2, 2 * m as u32, 1, 1) - &lambert(m as u32, m as u32, 1, 2)))
        }
        TheoremId::T6_3 => {
            let m = m as usize;
            let rect = &rectangle_sum(order, |a, b| a % m == 1 % m && b % 2 == 1)
                - &rectangle_sum(order, |a, b| a % m == 0 && b % 2 == 0);
            (
                &dq() * &rect,
                &dq() * &(&lambert(1, m as u32, 1, 2) - &lambert(2 * m as u32, 2 * m as u32, 1, 1)),
            )
        }
    };
    Ok(SeriesRoutes { primary, closed })
}

/// `∏_{j≤2r, j∉L} (−q^j; q^{2r})` expanded directly.
fn qrl_product(spec: &ResidueSpec, order: usize) -> TruncatedSeries {
    let m = spec.modulus();
    (1..=m)
        .filter(|j| !spec.l.contains(j))
        .fold(TruncatedSeries::one(order), |acc, j| &acc * &pochhammer_inf(-1, j as usize, m as usize, order))
}

/// The series of `thm`, after checking that both routes agree exactly.
pub fn derivative_difference(thm: TheoremId, params: &ResidueSpec, order: usize) -> Result<TruncatedSeries> {
    series_routes(thm, params, order)?.agreed(thm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(r: u32) -> ResidueSpec {
        ResidueSpec::plain(r).unwrap()
    }

    #[test]
    fn all_routes_agree() {
        let order = 60;
        for thm in TheoremId::ALL {
            for r in 1..=3 {
                let params = match thm {
                    TheoremId::T1_9 | TheoremId::T1_10 | TheoremId::T1_11 => {
                        ResidueSpec::new(r, [2 * r], []).unwrap()
                    }
                    TheoremId::T1_12 | TheoremId::PositivityRemark => ResidueSpec::singleton(r, 2).unwrap(),
                    _ => plain(r),
                };
                derivative_difference(thm, &params, order).unwrap_or_else(|e| panic!("{thm} r={r}: {e}"));
            }
        }
    }

    #[test]
    fn small_values() {
        let t12 = derivative_difference(TheoremId::T1_2, &plain(1), 10).unwrap();
        assert_eq!(t12.coefficient_i64(4).unwrap(), 2);
        let spec = ResidueSpec::singleton(3, 2).unwrap();
        let c = derivative_difference(TheoremId::T1_12, &spec, 10).unwrap();
        assert_eq!(c.coefficient_i64(4).unwrap(), -1);
        let lehmer = derivative_difference(TheoremId::Lehmer, &plain(1), 4).unwrap();
        assert_eq!(lehmer.coefficient_i64(4).unwrap(), 3);
    }

    #[test]
    fn residue_sets_are_validated() {
        assert!(derivative_difference(TheoremId::T1_12, &plain(2), 10).is_err());
        assert!(derivative_difference(TheoremId::T1_10, &plain(2), 10).is_err());
    }
}
