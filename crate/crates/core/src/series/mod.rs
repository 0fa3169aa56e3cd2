//! Exact truncated power series in `q` with integer coefficients, first-order
//! jets in `z` at `z = 1`, and the generating functions built from them.

mod derivative;
mod genfn;
mod jet;
mod named;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use derivative::{derivative_difference, residues_for, series_routes, SeriesRoutes};
pub use genfn::{build_generating_jet, GenSpec, PochFactor};
pub use jet::{Binomial, ZJet};
pub use named::{j2exp, j2exp2, j2exp3, named_series, EXTRA_NAMES};

/// `c_0 + c_1 q + … + c_N q^N`, with everything above `q^N` discarded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c q^exp`, or zero if `exp > order`.
    pub fn monomial(c: i64, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::from(c);
        }
        s
    }

    /// Pads with zeros (or truncates) to exactly `order + 1` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> i64) -> Self {
        Self::from_coeffs((0..=order).map(f).map(BigInt::from).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange { index: n, order: self.order() })
    }

    pub fn coefficient_i64(&self, n: usize) -> Result<i64> {
        self.coefficient(n)?.to_i64().ok_or(Error::Overflow(n))
    }

    pub fn to_i64_vec(&self) -> Result<Vec<i64>> {
        (0..=self.order()).map(|n| self.coefficient_i64(n)).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn negative_positions(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&n| self.coeffs[n].is_negative()).collect()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in k..=self.order() {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self { coeffs: self.coeffs.iter().map(|x| x * &c).collect() }
    }

    /// In place: multiplies by `1 + c q^m`.
    pub fn mul_binomial(&mut self, c: i64, m: usize) {
        if m == 0 {
            let factor = BigInt::from(1 + c);
            self.coeffs.iter_mut().for_each(|x| *x *= &factor);
            return;
        }
        for k in (m..self.coeffs.len()).rev() {
            if !self.coeffs[k - m].is_zero() {
                let add = &self.coeffs[k - m] * c;
                self.coeffs[k] += add;
            }
        }
    }

    /// In place: divides by `1 + c q^m` for `m ≥ 1`.
    pub fn div_binomial(&mut self, c: i64, m: usize) {
        assert!(m >= 1, "1 + c is not a series unit in general");
        for k in m..self.coeffs.len() {
            if !self.coeffs[k - m].is_zero() {
                let sub = &self.coeffs[k - m] * c;
                self.coeffs[k] -= sub;
            }
        }
    }

    /// Multiplicative inverse; requires constant term `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            // b_k = -c0^{-1} Σ c_j b_{k-j}, and c0^{-1} = c0
            out[k] = -(acc * c0);
        }
        Ok(Self { coeffs: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect() }
    }

    fn product(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                let f: fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries = $body;
                f(self, rhs)
            }
        }
        impl $trait<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$method(rhs)
            }
        }
    };
}

binary_op!(Add, add, |a, b| a.zip_with(b, |x, y| x + y));
binary_op!(Sub, sub, |a, b| a.zip_with(b, |x, y| x - y));
binary_op!(Mul, mul, |a, b| a.product(b));

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag.is_one() && n > 0 { String::new() } else { mag.to_string() };
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}q")?,
                _ => write!(f, "{coeff}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `∏_{k≥0} (1 − sign·q^{offset + k·step})` truncated at `q^order`.
/// `sign = −1` gives `(−q^offset; q^step)_∞`.
pub fn pochhammer_inf(sign: i64, offset: usize, step: usize, order: usize) -> TruncatedSeries {
    assert!(offset >= 1 && step >= 1, "offset and step must be positive");
    let mut s = TruncatedSeries::one(order);
    let mut e = offset;
    while e <= order {
        s.mul_binomial(-sign, e);
        e += step;
    }
    s
}

/// `∏_{k<count} (1 − sign·q^{offset + k·step})`.
pub fn pochhammer_finite(
    sign: i64,
    offset: usize,
    step: usize,
    count: usize,
    order: usize,
) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 0..count {
        let e = offset + k * step;
        if e > order {
            break;
        }
        s.mul_binomial(-sign, e);
    }
    s
}

/// `Σ_{k≥0} q^{m_k} / (1 − denom_sign·q^{denom_scale·m_k})` with
/// `m_k = offset + k·modulus`, truncated at `q^order`.
pub fn lambert_sum(
    offset: usize,
    modulus: usize,
    denom_sign: i64,
    denom_scale: usize,
    order: usize,
) -> TruncatedSeries {
    assert!(offset >= 1 && modulus >= 1 && denom_scale >= 1, "parameters must be positive");
    let mut coeffs = vec![0i64; order + 1];
    let mut m = offset;
    while m <= order {
        let mut e = m;
        let mut weight = 1i64;
        while e <= order {
            coeffs[e] += weight;
            weight *= denom_sign;
            e += denom_scale * m;
        }
        m += modulus;
    }
    TruncatedSeries::from_i64(&coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64(c, order)
    }

    #[test]
    fn basic_arithmetic() {
        let a = s(&[1, 1], 6);
        let b = s(&[1, 0, 0, 1], 6);
        assert_eq!(&a * &b, s(&[1, 1, 0, 1, 1], 6));
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(&a - &b, s(&[0, 1, 0, -1], 6));
    }

    #[test]
    fn mismatched_orders_truncate_to_the_smaller() {
        let a = s(&[1, 2, 3, 4, 5], 4);
        let b = s(&[1, 1], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn inverses() {
        assert_eq!(s(&[1, -1], 5).inverse().unwrap(), s(&[1, 1, 1, 1, 1, 1], 5));
        assert_eq!(s(&[1, 0, 1], 6).inverse().unwrap(), s(&[1, 0, -1, 0, 1, 0, -1], 6));
        assert_eq!(s(&[-1, 1], 3).inverse().unwrap(), s(&[-1, -1, -1, -1], 3));
        assert!(matches!(s(&[2, 1], 3).inverse(), Err(Error::NotInvertible(_))));
        assert!(s(&[0, 1], 3).inverse().is_err());
    }

    #[test]
    fn odd_part_counts_from_inverse_product() {
        let inv = pochhammer_inf(1, 1, 2, 8).inverse().unwrap();
        assert_eq!(inv.to_i64_vec().unwrap(), vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn pochhammer_examples() {
        let qo = pochhammer_inf(-1, 1, 2, 10);
        assert_eq!(qo.to_i64_vec().unwrap(), vec![1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2]);
        assert_eq!(pochhammer_inf(1, 1, 1, 3).to_i64_vec().unwrap(), vec![1, -1, -1, 0]);
        assert_eq!(pochhammer_inf(1, 6, 1, 5), TruncatedSeries::one(5));
        assert_eq!(pochhammer_finite(1, 1, 1, 2, 4), s(&[1, -1, -1, 1], 4));
    }

    #[test]
    fn binomial_division_undoes_multiplication() {
        let mut x = s(&[3, -1, 4, 1, -5, 9, 2, -6], 7);
        let orig = x.clone();
        x.mul_binomial(-2, 3);
        x.div_binomial(-2, 3);
        assert_eq!(x, orig);
    }

    #[test]
    fn lambert_examples() {
        // Σ_{k≥1} q^{2k}/(1−q^{2k}) counts even divisors
        assert_eq!(lambert_sum(2, 2, 1, 1, 6).to_i64_vec().unwrap(), vec![0, 0, 1, 0, 2, 0, 2]);
        // a single term q²/(1−q⁴): modulus beyond the order
        let single = lambert_sum(2, 27, 1, 2, 26);
        let expected: Vec<usize> = vec![2, 6, 10, 14, 18, 22, 26];
        for n in 0..=26 {
            let want = i64::from(expected.contains(&n));
            assert_eq!(single.coefficient_i64(n).unwrap(), want);
        }
        assert!(lambert_sum(7, 1, 1, 1, 6).is_zero());
        // Σ q^k/(1+q^k)
        assert_eq!(lambert_sum(1, 1, -1, 1, 4).to_i64_vec().unwrap(), vec![0, 1, 0, 2, -1]);
    }

    #[test]
    fn coefficient_access() {
        let a = s(&[1, 1], 1);
        assert_eq!(a.coefficient_i64(1).unwrap(), 1);
        assert_eq!(a.coefficient(2), Err(Error::IndexOutOfRange { index: 2, order: 1 }));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2], 3).to_string(), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0 + O(q^3)");
    }
}
