//! Dense univariate power series `Σ_{t=0}^{prec} c_t x^t` over the rationals.
//!
//! Used by the `n = 0` fast path and by the identity checks that live in a
//! single variable (Möbius–log, polygamma asymptotics).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::NilRing;
use super::Q;

/// Truncated power series; coefficients above `prec` are unknown and not
/// stored. Invariant: `coeffs.len() == prec + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Q>,
}

impl Series1 {
    pub fn zero(prec: usize) -> Self {
        Series1 {
            coeffs: vec![Q::zero(); prec + 1],
        }
    }

    pub fn one(prec: usize) -> Self {
        Self::monomial(0, Q::one(), prec)
    }

    /// The variable `x`.
    pub fn x(prec: usize) -> Self {
        Self::monomial(1, Q::one(), prec)
    }

    pub fn monomial(t: usize, c: Q, prec: usize) -> Self {
        let mut out = Self::zero(prec);
        if t <= prec {
            out.coeffs[t] = c;
        }
        out
    }

    /// Builds from leading coefficients; missing ones are zero, extra ones
    /// beyond `prec` are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Q>, prec: usize) -> Self {
        coeffs.resize(prec + 1, Q::zero());
        Series1 { coeffs }
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t: usize) -> Q {
        self.coeffs.get(t).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn with_prec(&self, prec: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), prec)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated product; precision is the smaller of the two.
    pub fn mul(&self, rhs: &Series1) -> Series1 {
        let prec = self.prec().min(rhs.prec());
        let mut out = vec![Q::zero(); prec + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(prec + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series1 { coeffs: out }
    }

    /// Multiplies by `x^t`.
    pub fn shift(&self, t: usize) -> Series1 {
        let prec = self.prec();
        let mut out = Self::zero(prec);
        for i in 0..=prec.saturating_sub(t) {
            if i + t <= prec {
                out.coeffs[i + t] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Substitutes `x ↦ x^k`.
    pub fn dilate(&self, k: usize) -> Series1 {
        assert!(k >= 1);
        let prec = self.prec();
        let mut out = Self::zero(prec);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > prec {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Formal derivative; precision drops by one.
    pub fn derivative(&self) -> Series1 {
        let prec = self.prec().saturating_sub(1);
        let coeffs = (0..=prec)
            .map(|i| self.coeff(i + 1) * Q::from_integer(((i + 1) as i64).into()))
            .collect();
        Series1 { coeffs }
    }

    /// Inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Option<Series1> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let prec = self.prec();
        let mut out: Vec<Q> = Vec::with_capacity(prec + 1);
        out.push(inv0.clone());
        for t in 1..=prec {
            let mut s = Q::zero();
            for i in 1..=t {
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * &out[t - i];
                }
            }
            out.push(-s * &inv0);
        }
        Some(Series1 { coeffs: out })
    }
}

impl NilRing for Series1 {
    fn ring_one(&self) -> Self {
        Series1::one(self.prec())
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_add_scaled(&mut self, rhs: &Self, c: &Q) {
        let prec = self.prec().min(rhs.prec());
        self.coeffs.truncate(prec + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_scale(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let mut out = self.clone();
        out.ring_add_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let mut out = self.clone();
        out.ring_add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        self.scale(&-Q::one())
    }
}

impl fmt::Debug for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})x^{i}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.prec() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q;

    #[test]
    fn geometric_inverse() {
        let one_minus_x = &Series1::one(8) - &Series1::x(8);
        let inv = one_minus_x.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == q(1)));
    }

    #[test]
    fn derivative_and_dilate() {
        let s = Series1::from_coeffs(vec![q(1), q(1), q(1), q(1)], 3);
        assert_eq!(s.derivative().coeffs(), &[q(1), q(2), q(3)]);
        assert_eq!(s.dilate(2).coeffs(), &[q(1), q(0), q(1), q(0)]);
        assert_eq!(s.shift(2).coeffs(), &[q(0), q(0), q(1), q(1)]);
    }

    #[test]
    fn product_precision_is_minimum() {
        let a = Series1::one(5);
        let b = Series1::one(3);
        assert_eq!(a.mul(&b).prec(), 3);
    }
}
