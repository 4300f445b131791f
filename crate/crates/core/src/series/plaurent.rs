//! Laurent polynomials in the inhomogeneous power sums `P_d = 1 + p_d`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::pexp::PExp;
use super::ring::NilRing;
use super::sympoly::SymPoly;
use super::Q;
use crate::symfunc::arith::binomial;

/// Exponent vector of a Laurent monomial `∏ P_d^{e_d}`, entries of either
/// sign; slot `i` belongs to `P_{i+1}`, trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LExp(SmallVec<[i16; 8]>);

impl LExp {
    pub fn one() -> Self {
        Self::default()
    }

    /// `P_d^e`.
    pub fn var_pow(d: usize, e: i16) -> Self {
        assert!(d >= 1);
        let mut v = SmallVec::from_elem(0, d);
        v[d - 1] = e;
        let mut out = LExp(v);
        out.trim();
        out
    }

    pub fn from_exponents(exps: &[i16]) -> Self {
        let mut out = LExp(exps.iter().copied().collect());
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn get(&self, d: usize) -> i16 {
        self.0.get(d.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i16] {
        &self.0
    }

    /// Iterates over `(d, e_d)` with `e_d ≠ 0`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn mul(&self, other: &LExp) -> LExp {
        let n = self.0.len().max(other.0.len());
        let mut v: SmallVec<[i16; 8]> = SmallVec::from_elem(0, n);
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0);
        }
        let mut out = LExp(v);
        out.trim();
        out
    }

    /// Degree `Σ d·e_d` (`P_d` has degree `d`).
    pub fn degree(&self) -> i64 {
        self.iter().map(|(d, e)| d as i64 * e as i64).sum()
    }

    /// Indices `d` with negative exponent, paired with `-e_d`.
    pub fn denominator(&self) -> Vec<(usize, u16)> {
        self.iter()
            .filter(|&(_, e)| e < 0)
            .map(|(d, e)| (d, (-e) as u16))
            .collect()
    }

    /// Indices `d` with positive exponent.
    pub fn numerator(&self) -> Vec<(usize, u16)> {
        self.iter()
            .filter(|&(_, e)| e > 0)
            .map(|(d, e)| (d, e as u16))
            .collect()
    }

    fn signed_part(&self, negative: bool) -> Vec<i16> {
        self.0
            .iter()
            .map(|&e| if (e < 0) == negative { e } else { 0 })
            .collect()
    }
}

/// Canonical print order: denominator signature first (the vector of
/// negative exponents, compared lexicographically), then numerator.
fn canonical_cmp(a: &LExp, b: &LExp) -> Ordering {
    fn lex(x: &[i16], y: &[i16]) -> Ordering {
        let n = x.len().max(y.len());
        for i in 0..n {
            let (a, b) = (x.get(i).copied().unwrap_or(0), y.get(i).copied().unwrap_or(0));
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
    lex(&a.signed_part(true), &b.signed_part(true))
        .then_with(|| lex(&a.signed_part(false), &b.signed_part(false)))
}

impl fmt::Debug for LExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (d, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "P{d}")?;
            } else {
                write!(f, "P{d}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Finite rational combination of Laurent monomials in the `P_d`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PLaurent {
    terms: BTreeMap<LExp, Q>,
}

impl PLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(LExp::one(), c)
    }

    pub fn monomial(m: LExp, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// `P_d^e`.
    pub fn p_pow(d: usize, e: i16) -> Self {
        Self::monomial(LExp::var_pow(d, e), Q::one())
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

    pub fn iter(&self) -> impl Iterator<Item = (&LExp, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &LExp) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: LExp, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &PLaurent, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> PLaurent {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Evaluation at `P_d = 1` for every `d` (that is, all `p_d = 0`).
    pub fn at_one(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// Terms in canonical order.
    pub fn canonical_terms(&self) -> Vec<(&LExp, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    /// Expands every `P_d^e = (1+p_d)^e` binomially, truncated at weight
    /// `max_weight`.
    pub fn expand(&self, max_weight: u32) -> SymPoly {
        let mut cache: BTreeMap<(usize, i16), SymPoly> = BTreeMap::new();
        let mut out = SymPoly::zero(max_weight);
        for (m, c) in &self.terms {
            let mut acc = SymPoly::one(max_weight);
            for (d, e) in m.iter() {
                let f = cache
                    .entry((d, e))
                    .or_insert_with(|| binomial_power(d, e as i64, max_weight));
                acc = &acc * f;
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

/// `(1 + p_d)^e = Σ_j binom(e, j) p_d^j` for any integer `e`.
pub fn binomial_power(d: usize, e: i64, max_weight: u32) -> SymPoly {
    let mut out = SymPoly::zero(max_weight);
    let mut j = 0u32;
    while j as usize * d <= max_weight as usize {
        let b = binomial(e, j as u64);
        if e >= 0 && j as i64 > e {
            break;
        }
        out.add_term(PExp::var_pow(d, j as u16), Q::from_integer(b));
        j += 1;
    }
    out
}

impl fmt::Debug for PLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders e.g. `-1/2*P1^2*P2^-1 + 1/2`.
impl fmt::Display for PLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.canonical_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.exponents().is_empty();
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &PLaurent {
    type Output = PLaurent;
    fn add(self, rhs: &PLaurent) -> PLaurent {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &PLaurent {
    type Output = PLaurent;
    fn sub(self, rhs: &PLaurent) -> PLaurent {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &PLaurent {
    type Output = PLaurent;
    fn neg(self) -> PLaurent {
        self.scale(&-Q::one())
    }
}

impl Mul for &PLaurent {
    type Output = PLaurent;
    fn mul(self, rhs: &PLaurent) -> PLaurent {
        let mut out = PLaurent::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Truncated power series in `ħ` with [`PLaurent`] coefficients:
/// `Σ_{t=0}^{prec} c_t ħ^t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLaurentSeries {
    coeffs: Vec<PLaurent>,
}

impl PLaurentSeries {
    pub fn zero(prec: usize) -> Self {
        PLaurentSeries {
            coeffs: vec![PLaurent::zero(); prec + 1],
        }
    }

    /// `c · ħ^t`.
    pub fn monomial(t: usize, c: PLaurent, prec: usize) -> Self {
        let mut out = Self::zero(prec);
        if t <= prec {
            out.coeffs[t] = c;
        }
        out
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t: usize) -> &PLaurent {
        &self.coeffs[t]
    }

    pub fn add_at(&mut self, t: usize, c: &PLaurent, s: &Q) {
        if t <= self.prec() {
            self.coeffs[t].add_scaled(c, s);
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec().min(rhs.prec());
        let mut out = Self::zero(prec);
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(prec + 1 - i) {
                if !b.is_zero() {
                    let prod = a * b;
                    out.coeffs[i + j].add_scaled(&prod, &Q::one());
                }
            }
        }
        out
    }

    /// Multiplies every coefficient by a `ħ`-free Laurent polynomial.
    pub fn mul_coeff(&self, c: &PLaurent) -> Self {
        PLaurentSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        PLaurentSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }
}

impl NilRing for PLaurentSeries {
    fn ring_one(&self) -> Self {
        Self::monomial(0, PLaurent::one(), self.prec())
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_add_scaled(&mut self, rhs: &Self, c: &Q) {
        let prec = self.prec().min(rhs.prec());
        self.coeffs.truncate(prec + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_scaled(b, c);
        }
    }
    fn ring_is_zero(&self) -> bool {
        self.coeffs.iter().all(PLaurent::is_zero)
    }
    fn ring_scale(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, qr};

    fn a1() -> PLaurent {
        let mut a = PLaurent::monomial(LExp::from_exponents(&[2, -1]), qr(-1, 2));
        a.add_term(LExp::one(), qr(1, 2));
        a
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(a1().to_string(), "-1/2*P1^2*P2^-1 + 1/2");
        let c = PLaurent::monomial(LExp::from_exponents(&[-1]), q(1));
        assert_eq!(c.to_string(), "P1^-1");
    }

    #[test]
    fn expansion_of_inverse() {
        let inv = PLaurent::p_pow(1, -1).expand(2);
        assert_eq!(inv.coeff(&PExp::one()), q(1));
        assert_eq!(inv.coeff(&PExp::var(1)), q(-1));
        assert_eq!(inv.coeff(&PExp::var_pow(1, 2)), q(1));
    }

    #[test]
    fn expansion_of_a1() {
        let e = a1().expand(2);
        assert_eq!(e.coeff(&PExp::one()), q(0));
        assert_eq!(e.coeff(&PExp::var(1)), q(-1));
        assert_eq!(e.coeff(&PExp::var_pow(1, 2)), qr(-1, 2));
        assert_eq!(e.coeff(&PExp::var(2)), qr(1, 2));
    }

    #[test]
    fn zero_exponent_expands_to_one() {
        assert_eq!(PLaurent::p_pow(2, 0).expand(4), SymPoly::one(4));
    }

    #[test]
    fn degree_and_parts() {
        let m = LExp::from_exponents(&[2, -1, 0, 0, 0, -3]);
        assert_eq!(m.degree(), 2 - 2 - 18);
        assert_eq!(m.denominator(), vec![(2, 1), (6, 3)]);
        assert_eq!(m.numerator(), vec![(1, 2)]);
    }
}
