//! Sparse polynomials in the power sums, truncated by weight.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::pexp::PExp;
use super::Q;

/// A polynomial `Σ c_m p^m` with exact rational coefficients.
///
/// Invariants:
/// - no stored monomial has weight above `max_weight`;
/// - no stored coefficient is zero (the zero polynomial has an empty map).
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<PExp, Q>,
    max_weight: u32,
}

impl SymPoly {
    pub fn zero(max_weight: u32) -> Self {
        SymPoly {
            terms: BTreeMap::new(),
            max_weight,
        }
    }

    pub fn one(max_weight: u32) -> Self {
        Self::constant(Q::one(), max_weight)
    }

    pub fn constant(c: Q, max_weight: u32) -> Self {
        Self::monomial(PExp::one(), c, max_weight)
    }

    /// `c·p^m`, or zero if `m` is too heavy.
    pub fn monomial(m: PExp, c: Q, max_weight: u32) -> Self {
        let mut out = Self::zero(max_weight);
        out.add_term(m, c);
        out
    }

    /// The power sum `p_d`.
    pub fn p(d: usize, max_weight: u32) -> Self {
        Self::monomial(PExp::var(d), Q::one(), max_weight)
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PExp, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PExp) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&PExp::one())
    }

    /// Adds `c·p^m` in place, respecting truncation and dropping zeros.
    pub fn add_term(&mut self, m: PExp, c: Q) {
        if c.is_zero() || m.weight() > self.max_weight {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &SymPoly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    /// `self += a·b` without materializing the product.
    pub fn add_product(&mut self, a: &SymPoly, b: &SymPoly) {
        let n = self.max_weight;
        let bw: Vec<(u32, &PExp, &Q)> = b.terms.iter().map(|(m, c)| (m.weight(), m, c)).collect();
        for (ma, ca) in &a.terms {
            let wa = ma.weight();
            if wa > n {
                continue;
            }
            for (wb, mb, cb) in &bw {
                if wa + wb <= n {
                    self.add_term(ma.mul(mb), ca * *cb);
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> SymPoly {
        if c.is_zero() {
            return Self::zero(self.max_weight);
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            max_weight: self.max_weight,
        }
    }

    /// Re-truncates at a (possibly smaller) weight bound.
    pub fn truncate(&self, max_weight: u32) -> SymPoly {
        let mut out = Self::zero(max_weight.min(self.max_weight));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// The homogeneous part of weight `n`.
    pub fn weight_part(&self, n: u32) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            max_weight: self.max_weight,
        }
    }

    /// Smallest weight of a stored monomial, if any.
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(PExp::weight).min()
    }

    /// Applies `p_d ↦ -p_d` to every power sum.
    pub fn sign_twist(&self) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.length() % 2 == 1 { -c } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
            max_weight: self.max_weight,
        }
    }

    /// Replaces every `p_d` by `p_{n d}`; the weight bound is kept.
    pub fn dilate(&self, n: usize) -> SymPoly {
        let mut out = Self::zero(self.max_weight);
        for (m, c) in &self.terms {
            out.add_term(m.dilate(n), c.clone());
        }
        out
    }

    /// Evaluates at `p_d = 0` for all `d`, i.e. the constant term.
    pub fn at_zero(&self) -> Q {
        self.constant_term()
    }

    /// Sum of all coefficients (evaluation at `p_d = 1`).
    pub fn at_one(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.truncate(rhs.max_weight);
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.truncate(rhs.max_weight);
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero(self.max_weight.min(rhs.max_weight));
        out.add_product(self, rhs);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q;

    #[test]
    fn truncation_on_write() {
        let p1 = SymPoly::p(1, 2);
        let p3 = SymPoly::p(3, 2);
        assert!(p3.is_zero());
        let cube = &(&p1 * &p1) * &p1;
        assert!(cube.is_zero());
        assert_eq!((&p1 * &p1).coeff(&PExp::from_parts(&[1, 1])), q(1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p1 = SymPoly::p(1, 4);
        assert!((&p1 - &p1).is_zero());
        assert_eq!((&p1 - &p1).len(), 0);
    }

    #[test]
    fn sign_twist_uses_cycle_count() {
        let m = SymPoly::monomial(PExp::from_parts(&[2, 1]), q(3), 5);
        assert_eq!(m.sign_twist().coeff(&PExp::from_parts(&[2, 1])), q(3));
        let m = SymPoly::monomial(PExp::from_parts(&[2]), q(3), 5);
        assert_eq!(m.sign_twist().coeff(&PExp::from_parts(&[2])), q(-3));
    }

    #[test]
    fn weight_parts() {
        let f = &(&SymPoly::p(1, 4) + &SymPoly::p(2, 4)) + &SymPoly::one(4);
        let sq = &f * &f;
        assert_eq!(sq.weight_part(2).len(), 2);
        assert_eq!(sq.min_weight(), Some(0));
    }
}

impl super::ring::NilRing for SymPoly {
    fn ring_one(&self) -> Self {
        SymPoly::one(self.max_weight)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_add_scaled(&mut self, rhs: &Self, c: &Q) {
        if rhs.max_weight < self.max_weight {
            *self = self.truncate(rhs.max_weight);
        }
        self.add_scaled(rhs, c);
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_scale(&self, c: &Q) -> Self {
        self.scale(c)
    }
}
