use std::ops::{Add, Mul, Neg, Sub};

use super::TruncatedSeries;
use crate::Result;

/// `F(z;q) = value + (z−1)·deriv + O((z−1)²)`: the value and the
/// `z`-derivative of a generating function at `z = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZJet {
    pub value: TruncatedSeries,
    pub deriv: TruncatedSeries,
}

/// The elementary factor `1 + coeff·z^{[marked]}·q^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub coeff: i64,
    pub exp: usize,
    pub marked: bool,
}

impl ZJet {
    pub fn one(order: usize) -> Self {
        Self::constant(TruncatedSeries::one(order))
    }

    /// A series that does not depend on `z`.
    pub fn constant(value: TruncatedSeries) -> Self {
        let deriv = TruncatedSeries::zero(value.order());
        Self { value, deriv }
    }

    pub fn order(&self) -> usize {
        self.value.order().min(self.deriv.order())
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.value.inverse()?;
        let deriv = -(&(&self.deriv * &inv) * &inv);
        Ok(Self { value: inv, deriv })
    }

    /// In place: multiplies by `1 + c z q^m` (or `1 + c q^m` if unmarked).
    pub fn mul_binomial(&mut self, g: Binomial) {
        if g.exp > self.order() {
            return;
        }
        // (V, D) -> (V g0, D g0 + V g1), g0 = 1 + c q^m, g1 = c q^m
        self.deriv.mul_binomial(g.coeff, g.exp);
        if g.marked {
            self.deriv = &self.deriv + &self.value.shift(g.exp).scale(g.coeff);
        }
        self.value.mul_binomial(g.coeff, g.exp);
    }

    /// In place: divides by `1 + c z q^m` (or `1 + c q^m` if unmarked).
    pub fn div_binomial(&mut self, g: Binomial) {
        if g.exp > self.order() {
            return;
        }
        // new V = V / g0, new D = (D - newV g1) / g0
        self.value.div_binomial(g.coeff, g.exp);
        if g.marked {
            self.deriv = &self.deriv - &self.value.shift(g.exp).scale(g.coeff);
        }
        self.deriv.div_binomial(g.coeff, g.exp);
    }
}

impl Add<&ZJet> for &ZJet {
    type Output = ZJet;
    fn add(self, rhs: &ZJet) -> ZJet {
        ZJet { value: &self.value + &rhs.value, deriv: &self.deriv + &rhs.deriv }
    }
}

impl Sub<&ZJet> for &ZJet {
    type Output = ZJet;
    fn sub(self, rhs: &ZJet) -> ZJet {
        ZJet { value: &self.value - &rhs.value, deriv: &self.deriv - &rhs.deriv }
    }
}

impl Mul<&ZJet> for &ZJet {
    type Output = ZJet;
    fn mul(self, rhs: &ZJet) -> ZJet {
        ZJet {
            value: &self.value * &rhs.value,
            deriv: &(&self.value * &rhs.deriv) + &(&self.deriv * &rhs.value),
        }
    }
}

impl Neg for &ZJet {
    type Output = ZJet;
    fn neg(self) -> ZJet {
        ZJet { value: -&self.value, deriv: -&self.deriv }
    }
}
