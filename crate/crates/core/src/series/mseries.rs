//! Multigraded truncated series: `Σ c_{t,k}(p) · x^t w^k` with `x` the genus
//! (`ħ`) or complexity (`u`) variable and `w` a nilpotent marker, `w³ = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::pexp::PExp;
use super::ring::{self, NilRing};
use super::sympoly::SymPoly;
use super::Q;
use crate::error::{usage, Error, Result};

/// Highest stored power of the nilpotent marker `w`.
pub const W_ORDER: u8 = 2;

/// Which grading variable an [`MSeries`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    /// Genus variable `ħ`.
    Hbar,
    /// Complexity variable `u`.
    U,
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grading::Hbar => "h",
            Grading::U => "u",
        })
    }
}

/// Truncated series with [`SymPoly`] coefficients.
///
/// Invariants:
/// - every stored key `(t, k)` has `t_min ≤ t ≤ t_max` and `k ≤ 2`;
/// - every coefficient is nonzero and truncated at `max_weight`;
/// - coefficients with `t ≤ t_max` are exact: `t_max` is the precision, not
///   just a storage cap. Products involving negative powers lower it
///   accordingly.
#[derive(Clone, PartialEq, Eq)]
pub struct MSeries {
    var: Grading,
    t_min: i32,
    t_max: i32,
    max_weight: u32,
    terms: BTreeMap<(i32, u8), SymPoly>,
}

impl MSeries {
    /// The zero series with the given bounds.
    pub fn zero(var: Grading, t_min: i32, t_max: i32, max_weight: u32) -> Self {
        MSeries {
            var,
            t_min,
            t_max,
            max_weight,
            terms: BTreeMap::new(),
        }
    }

    /// The zero power series (`t_min = 0`).
    pub fn zero_power(var: Grading, t_max: i32, max_weight: u32) -> Self {
        Self::zero(var, 0, t_max, max_weight)
    }

    /// A zero series sharing all bounds with `self`.
    pub fn zero_like(&self) -> Self {
        Self::zero(self.var, self.t_min, self.t_max, self.max_weight)
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(Q::one())
    }

    pub fn constant_like(&self, c: Q) -> Self {
        let mut out = self.zero_like();
        out.add_term(0, 0, PExp::one(), c);
        out
    }

    /// `c · x^t w^k p^m` with the bounds of `self`.
    pub fn monomial_like(&self, t: i32, k: u8, m: PExp, c: Q) -> Self {
        let mut out = self.zero_like();
        out.add_term(t, k, m, c);
        out
    }

    /// `x^t · poly` with the bounds of `self`.
    pub fn from_sympoly_like(&self, t: i32, k: u8, poly: &SymPoly) -> Self {
        let mut out = self.zero_like();
        out.add_poly(t, k, poly, &Q::one());
        out
    }

    pub fn var(&self) -> Grading {
        self.var
    }

    pub fn t_min(&self) -> i32 {
        self.t_min
    }

    pub fn t_max(&self) -> i32 {
        self.t_max
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `((t, k), coefficient)` in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (&(i32, u8), &SymPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `x^t w^k`.
    pub fn coeff(&self, t: i32, k: u8) -> SymPoly {
        self.terms
            .get(&(t, k))
            .cloned()
            .unwrap_or_else(|| SymPoly::zero(self.max_weight))
    }

    /// Coefficient of `x^t w^k p^m`.
    pub fn coeff_of(&self, t: i32, k: u8, m: &PExp) -> Q {
        self.terms
            .get(&(t, k))
            .map(|p| p.coeff(m))
            .unwrap_or_else(Q::zero)
    }

    /// Smallest stored `t`, if any.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().map(|&(t, _)| t).min()
    }

    /// True if no negative power of the grading variable is stored.
    pub fn is_power_series(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// Adds `c · x^t w^k p^m`, silently dropping anything outside the bounds.
    pub fn add_term(&mut self, t: i32, k: u8, m: PExp, c: Q) {
        if t > self.t_max || k > W_ORDER || c.is_zero() {
            return;
        }
        assert!(
            t >= self.t_min,
            "term x^{t} below floor {} (bounds must be widened)",
            self.t_min
        );
        let slot = self
            .terms
            .entry((t, k))
            .or_insert_with(|| SymPoly::zero(self.max_weight));
        slot.add_term(m, c);
        if slot.is_zero() {
            self.terms.remove(&(t, k));
        }
    }

    /// `self += c · x^t w^k · poly`.
    pub fn add_poly(&mut self, t: i32, k: u8, poly: &SymPoly, c: &Q) {
        if t > self.t_max || k > W_ORDER || c.is_zero() || poly.is_zero() {
            return;
        }
        assert!(
            t >= self.t_min,
            "term x^{t} below floor {} (bounds must be widened)",
            self.t_min
        );
        let slot = self
            .terms
            .entry((t, k))
            .or_insert_with(|| SymPoly::zero(self.max_weight));
        slot.add_scaled(poly, c);
        if slot.is_zero() {
            self.terms.remove(&(t, k));
        }
    }

    fn check_tag(&self, other: &MSeries) -> Result<()> {
        if self.var != other.var {
            return Err(usage!(
                "mismatched grading variables {} and {}",
                self.var,
                other.var
            ));
        }
        Ok(())
    }

    /// Sum; the result carries the tighter precision and weight bounds.
    pub fn checked_add(&self, other: &MSeries) -> Result<MSeries> {
        self.checked_add_scaled(other, &Q::one())
    }

    /// `self + c·other`.
    pub fn checked_add_scaled(&self, other: &MSeries, c: &Q) -> Result<MSeries> {
        self.check_tag(other)?;
        let mut out = MSeries::zero(
            self.var,
            self.t_min.min(other.t_min),
            self.t_max.min(other.t_max),
            self.max_weight.min(other.max_weight),
        );
        for (&(t, k), p) in &self.terms {
            out.add_poly(t, k, p, &Q::one());
        }
        for (&(t, k), p) in &other.terms {
            out.add_poly(t, k, p, c);
        }
        Ok(out)
    }

    /// Cauchy product with `w³ = 0`. Errors if a product term falls below
    /// the common floor `min(t_min)`.
    pub fn checked_mul(&self, other: &MSeries) -> Result<MSeries> {
        self.check_tag(other)?;
        let floor = self.t_min.min(other.t_min);
        let prec = match (self.valuation(), other.valuation()) {
            (Some(va), Some(vb)) => (self.t_max + vb.min(0)).min(other.t_max + va.min(0)),
            _ => self.t_max.min(other.t_max),
        };
        let mut out = MSeries::zero(
            self.var,
            floor,
            prec.max(floor),
            self.max_weight.min(other.max_weight),
        );
        out.t_max = prec;
        for (&(ta, ka), pa) in &self.terms {
            for (&(tb, kb), pb) in &other.terms {
                let (t, k) = (ta + tb, ka + kb);
                if k > W_ORDER || t > prec {
                    continue;
                }
                if t < floor {
                    return Err(usage!(
                        "product term x^{t} lies below the floor x^{floor}"
                    ));
                }
                let slot = out
                    .terms
                    .entry((t, k))
                    .or_insert_with(|| SymPoly::zero(out.max_weight));
                slot.add_product(pa, pb);
            }
        }
        out.terms.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> MSeries {
        let mut out = self.zero_like();
        if c.is_zero() {
            return out;
        }
        for (&(t, k), p) in &self.terms {
            out.terms.insert((t, k), p.scale(c));
        }
        out
    }

    /// Multiplies by `x^s`; bounds shift along.
    pub fn shift(&self, s: i32) -> MSeries {
        MSeries {
            var: self.var,
            t_min: self.t_min + s.min(0),
            t_max: self.t_max + s,
            max_weight: self.max_weight,
            terms: self
                .terms
                .iter()
                .map(|(&(t, k), p)| ((t + s, k), p.clone()))
                .collect(),
        }
    }

    /// Multiplies by `w^k`.
    pub fn times_w(&self, k: u8) -> MSeries {
        let mut out = self.zero_like();
        for (&(t, kk), p) in &self.terms {
            if kk + k <= W_ORDER {
                out.terms.insert((t, kk + k), p.clone());
            }
        }
        out
    }

    /// Coefficient of `w^k`, as a `w`-free series.
    pub fn w_part(&self, k: u8) -> MSeries {
        let mut out = self.zero_like();
        for (&(t, kk), p) in &self.terms {
            if kk == k {
                out.terms.insert((t, 0), p.clone());
            }
        }
        out
    }

    /// Sets `w = 0`.
    pub fn drop_w(&self) -> MSeries {
        self.w_part(0)
    }

    /// Re-truncates at tighter bounds.
    pub fn truncate(&self, t_max: i32, max_weight: u32) -> MSeries {
        let mut out = MSeries::zero(
            self.var,
            self.t_min,
            t_max.min(self.t_max),
            max_weight.min(self.max_weight),
        );
        for (&(t, k), p) in &self.terms {
            out.add_poly(t, k, p, &Q::one());
        }
        out
    }

    /// Lowers the floor (never raises it).
    pub fn with_floor(mut self, t_min: i32) -> MSeries {
        self.t_min = self.t_min.min(t_min);
        self
    }

    /// Renames the grading variable (e.g. `u → ħ`).
    pub fn rename(mut self, var: Grading) -> MSeries {
        self.var = var;
        self
    }

    /// Homogeneous part of p-weight `n`.
    pub fn weight_part(&self, n: u32) -> MSeries {
        let mut out = self.zero_like();
        for (&(t, k), p) in &self.terms {
            let part = p.weight_part(n);
            if !part.is_zero() {
                out.terms.insert((t, k), part);
            }
        }
        out
    }

    /// Applies `p_d ↦ -p_d` everywhere.
    pub fn sign_twist(&self) -> MSeries {
        let mut out = self.zero_like();
        for (&(t, k), p) in &self.terms {
            out.terms.insert((t, k), p.sign_twist());
        }
        out
    }

    /// Applies `p_d ↦ x^{-d} p_d`: a term of p-weight `n` moves from `x^t`
    /// to `x^{t-n}`. The precision drops by the weight bound; terms landing
    /// below `floor` are an error.
    pub fn regrade(&self, floor: i32) -> Result<MSeries> {
        let mut out = MSeries::zero(
            self.var,
            floor.min(self.t_min),
            self.t_max - self.max_weight as i32,
            self.max_weight,
        );
        for (&(t, k), p) in &self.terms {
            for (m, c) in p.iter() {
                let tt = t - m.weight() as i32;
                if tt < floor {
                    return Err(usage!("regraded term x^{tt} lies below the floor x^{floor}"));
                }
                out.add_term(tt, k, m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Plethystic dilation `p_d ↦ p_{nd}`, `x ↦ x^n`, `w ↦ w^n`.
    pub fn dilate(&self, n: usize) -> MSeries {
        assert!(n >= 1);
        let nn = n as i32;
        let mut out = MSeries::zero(
            self.var,
            self.t_min.min(self.t_min * nn),
            if self.t_max >= 0 {
                self.t_max * nn + (nn - 1)
            } else {
                self.t_max * nn
            },
            self.max_weight,
        );
        for (&(t, k), p) in &self.terms {
            let kk = k as usize * n;
            if kk > W_ORDER as usize {
                continue;
            }
            out.add_poly(t * nn, kk as u8, &p.dilate(n), &Q::one());
        }
        out
    }

    /// Simultaneous substitution `p_d ↦ rule(d)`, multiplicative over
    /// monomials. The result keeps the floor and grading of `self`.
    pub fn substitute_p(&self, rule: &dyn Fn(usize) -> MSeries) -> Result<MSeries> {
        let mut powers: BTreeMap<(usize, u16), MSeries> = BTreeMap::new();
        let mut out = self.zero_like();
        let mut first = true;
        for (&(t, k), p) in &self.terms {
            for (m, c) in p.iter() {
                let mut term = self.one_like();
                for (d, e) in m.iter() {
                    if !powers.contains_key(&(d, e)) {
                        let base = rule(d);
                        self.check_tag(&base)?;
                        let mut acc = self.one_like();
                        for _ in 0..e {
                            acc = acc.checked_mul(&base)?;
                        }
                        powers.insert((d, e), acc);
                    }
                    term = term.checked_mul(&powers[&(d, e)])?;
                }
                let mut base = self.zero_like();
                base.t_min = base.t_min.min(t);
                base.add_term(t, k, PExp::one(), c.clone());
                let piece = base.checked_mul(&term)?;
                if first {
                    out = MSeries::zero(self.var, self.t_min, piece.t_max, piece.max_weight);
                    first = false;
                }
                out = out.checked_add(&piece)?;
            }
        }
        Ok(out)
    }

    /// Checks that a series can be fed to `exp`/`log1p`: no constant term and
    /// every term carries positive p-weight, a `w`, or a positive power.
    fn check_nilpotent(&self) -> Result<()> {
        for (&(t, k), p) in &self.terms {
            if k > 0 {
                continue;
            }
            if let Some(w) = p.min_weight() {
                if w == 0 && t <= 0 {
                    return Err(usage!(
                        "series argument has a non-nilpotent term at x^{t} (weight 0)"
                    ));
                }
            }
        }
        Ok(())
    }

    /// `exp(self)`; requires zero constant term.
    pub fn exp1(&self) -> Result<MSeries> {
        self.check_nilpotent()?;
        Ok(ring::exp(self))
    }

    /// `log(1 + self)`; requires zero constant term.
    pub fn log1p(&self) -> Result<MSeries> {
        self.check_nilpotent()?;
        Ok(ring::log1p(self))
    }

    /// `(1 + self)^a` for rational `a`; requires zero constant term.
    pub fn pow1p(&self, a: &Q) -> Result<MSeries> {
        self.check_nilpotent()?;
        Ok(ring::pow1p(self, a))
    }

    /// Multiplicative inverse of a unit (nonzero constant, nilpotent rest).
    pub fn inverse(&self) -> Result<MSeries> {
        let c0 = self.coeff_of(0, 0, &PExp::one());
        if c0.is_zero() {
            return Err(usage!("series is not a unit: zero constant term"));
        }
        let inv0 = c0.recip();
        let rest = self
            .checked_add_scaled(&self.one_like(), &-c0)?
            .scale(&inv0);
        rest.check_nilpotent()?;
        Ok(ring::inv1p(&rest).scale(&inv0))
    }

    /// `log` of a unit with constant term 1.
    pub fn log_unit(&self) -> Result<MSeries> {
        let c0 = self.coeff_of(0, 0, &PExp::one());
        if !c0.is_one() {
            return Err(usage!("log requires constant term 1, found {c0}"));
        }
        self.checked_add_scaled(&self.one_like(), &-Q::one())?
            .log1p()
    }

    /// First `(t, k, monomial)` where the two series differ within their
    /// common precision, if any.
    pub fn first_difference(&self, other: &MSeries) -> Option<(i32, u8, PExp, Q, Q)> {
        let prec = self.t_max.min(other.t_max);
        let n = self.max_weight.min(other.max_weight);
        let a = self.truncate(prec, n);
        let b = other.truncate(prec, n);
        let keys: std::collections::BTreeSet<(i32, u8)> =
            a.terms.keys().chain(b.terms.keys()).copied().collect();
        for (t, k) in keys {
            let pa = a.coeff(t, k);
            let pb = b.coeff(t, k);
            if pa != pb {
                let monos: std::collections::BTreeSet<PExp> =
                    pa.iter().chain(pb.iter()).map(|(m, _)| m.clone()).collect();
                for m in monos {
                    let (ca, cb) = (pa.coeff(&m), pb.coeff(&m));
                    if ca != cb {
                        return Some((t, k, m, ca, cb));
                    }
                }
            }
        }
        None
    }
}

impl NilRing for MSeries {
    fn ring_one(&self) -> Self {
        self.one_like()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("product within bounds")
    }
    fn ring_add_scaled(&mut self, rhs: &Self, c: &Q) {
        *self = self.checked_add_scaled(rhs, c).expect("same grading");
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_scale(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

fn unwrap_op(r: Result<MSeries>) -> MSeries {
    match r {
        Ok(v) => v,
        Err(Error::Usage(msg)) | Err(Error::Consistency(msg)) => panic!("{msg}"),
    }
}

/// Operator forms panic on mismatched grading tags or floor violations; use
/// the `checked_*` methods to handle those as errors.
impl Add for &MSeries {
    type Output = MSeries;
    fn add(self, rhs: &MSeries) -> MSeries {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub for &MSeries {
    type Output = MSeries;
    fn sub(self, rhs: &MSeries) -> MSeries {
        unwrap_op(self.checked_add_scaled(rhs, &-Q::one()))
    }
}

impl Neg for &MSeries {
    type Output = MSeries;
    fn neg(self) -> MSeries {
        self.scale(&-Q::one())
    }
}

impl Mul for &MSeries {
    type Output = MSeries;
    fn mul(self, rhs: &MSeries) -> MSeries {
        unwrap_op(self.checked_mul(rhs))
    }
}

impl fmt::Debug for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(t, k), p) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{}^{t}", self.var)?;
            if k > 0 {
                write!(f, " w^{k}")?;
            }
            write!(f, "]({p})")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.t_max + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q;

    fn h(tmax: i32, n: u32) -> MSeries {
        MSeries::zero_power(Grading::Hbar, tmax, n)
    }

    #[test]
    fn nilpotent_marker() {
        let z = h(4, 3);
        let w = z.monomial_like(0, 1, PExp::one(), q(1));
        let w3 = &(&w * &w) * &w;
        assert!(w3.is_zero());
        assert!(!(&w * &w).is_zero());
    }

    #[test]
    fn mismatched_tags_rejected() {
        let a = h(3, 3).one_like();
        let b = MSeries::zero_power(Grading::U, 3, 3).one_like();
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn floor_violation_rejected() {
        let z = MSeries::zero(Grading::U, -1, 4, 2);
        let inv_u = z.monomial_like(-1, 0, PExp::one(), q(1));
        assert!(matches!(inv_u.checked_mul(&inv_u), Err(Error::Usage(_))));
    }

    #[test]
    fn negative_powers_lower_precision() {
        let z = MSeries::zero(Grading::U, -2, 6, 2);
        let inv_u = z.monomial_like(-1, 0, PExp::one(), q(1));
        let one = z.one_like();
        assert_eq!(inv_u.checked_mul(&one).unwrap().t_max(), 5);
    }

    #[test]
    fn exp_truncated_taylor() {
        let p1 = h(0, 2).monomial_like(0, 0, PExp::var(1), q(1));
        let e = p1.exp1().unwrap();
        assert_eq!(e.coeff_of(0, 0, &PExp::one()), q(1));
        assert_eq!(e.coeff_of(0, 0, &PExp::var(1)), q(1));
        assert_eq!(e.coeff_of(0, 0, &PExp::from_parts(&[1, 1])), Q::new(1.into(), 2.into()));
    }

    #[test]
    fn exp_rejects_constant() {
        let one = h(3, 3).one_like();
        assert!(matches!(one.exp1(), Err(Error::Usage(_))));
        assert!(matches!(one.log1p(), Err(Error::Usage(_))));
    }

    #[test]
    fn regrade_moves_by_weight() {
        let z = h(5, 3);
        let x = z.monomial_like(3, 0, PExp::var(2), q(1));
        let r = x.regrade(0).unwrap();
        assert_eq!(r.coeff_of(1, 0, &PExp::var(2)), q(1));
    }

    #[test]
    fn substitution_by_dilation() {
        let z = h(2, 6);
        let f = &z.monomial_like(0, 0, PExp::var(1), q(1)) + &z.monomial_like(0, 0, PExp::var(3), q(1));
        let g = f
            .substitute_p(&|d| z.monomial_like(0, 0, PExp::var(2 * d), q(1)))
            .unwrap();
        assert_eq!(g, f.dilate(2).truncate(2, 6));
    }

    #[test]
    fn inverse_of_unit() {
        let z = h(6, 3);
        let f = &z.one_like() + &z.monomial_like(1, 0, PExp::var(1), q(2));
        let inv = f.inverse().unwrap();
        assert_eq!(&f * &inv, z.one_like());
    }
}
