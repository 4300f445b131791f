//! Equivariant Euler characteristics of the operads behind the graph
//! complexes, and the decorated-graph pairing.
//!
//! Conventions: `E_ℓ = (1/ℓ) Σ_{d|ℓ} μ(ℓ/d) u^{-d}`. The infinite products
//! over `ℓ` are cut at `ℓ ≤ N` (the p-weight bound): the variable part of the
//! `ℓ`-th factor has p-weight at least `ℓ`, so later factors are `1` within
//! the truncation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{consistency, usage, Result};
use crate::series::ring;
use crate::series::{Grading, MSeries, PExp, SymPoly, Q};
use crate::symfunc::arith::{divisors, mu};
use crate::symfunc::inner::hall_inner;
use crate::symfunc::partition::z_factor;
use crate::symfunc::plethysm::plethysm_sym;

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `Σ_{ℓ≤N} p_ℓ/ℓ`.
fn sum_p_over_l(n: u32) -> SymPoly {
    let mut s = SymPoly::zero(n);
    for l in 1..=n as usize {
        s.add_term(PExp::var(l), Q::new(1.into(), (l as i64).into()));
    }
    s
}

/// `χ(Com₁) = exp(Σ p_ℓ/ℓ)`.
pub fn chi_com1(n: u32) -> SymPoly {
    ring::exp(&sum_p_over_l(n))
}

/// `χ(Com) = exp(Σ p_ℓ/ℓ) - 1`.
pub fn chi_com(n: u32) -> SymPoly {
    &chi_com1(n) - &SymPoly::one(n)
}

/// `χ(Lie₀) = Σ μ(ℓ)/ℓ · log(1 + p_ℓ)`.
pub fn chi_lie0(n: u32) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for l in 1..=n as usize {
        let m = mu(l as u64);
        if m != 0 {
            let lg = ring::log1p(&SymPoly::p(l, n));
            out.add_scaled(&lg, &Q::new((m as i64).into(), (l as i64).into()));
        }
    }
    out
}

/// `χ(Lie) = -Σ μ(ℓ)/ℓ · log(1 - p_ℓ)`.
pub fn chi_lie(n: u32) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for l in 1..=n as usize {
        let m = mu(l as u64);
        if m != 0 {
            let lg = ring::log1p(&SymPoly::p(l, n).scale(&-Q::one()));
            out.add_scaled(&lg, &Q::new((-(m as i64)).into(), (l as i64).into()));
        }
    }
    out
}

/// `E_ℓ` as a Laurent series in `u` inside the window `[floor, t_max]`.
fn e_ell(l: usize, floor: i32, t_max: i32, n: u32) -> MSeries {
    let mut e = MSeries::zero(Grading::U, floor, t_max, n);
    for d in divisors(l as u64) {
        let m = mu(l as u64 / d);
        if m != 0 {
            e.add_term(-(d as i32), 0, PExp::one(), Q::new((m as i64).into(), (l as i64).into()));
        }
    }
    e
}

/// `(1 + c(u)·p_ℓ)^{E_ℓ} = Σ_j binom(E_ℓ, j) c(u)^j p_ℓ^j`, with
/// `binom(E, j) = E(E-1)⋯(E-j+1)/j!` evaluated on the Laurent value of `E_ℓ`.
///
/// `coef` lists the `(power, coefficient)` pairs of a polynomial `c(u)`; it
/// must have u-valuation `ℓ` so that every negative power cancels, which is
/// asserted.
fn binomial_factor(l: usize, coef: &[(i32, i64)], t_max: i32, n: u32) -> Result<MSeries> {
    let jmax = (n as usize / l) as i32;
    let floor = -(l as i32) * jmax.max(1);
    let window = t_max + l as i32 * jmax.max(1);
    let e = e_ell(l, floor, window, n);
    let mut c = e.zero_like();
    for &(t, v) in coef {
        c.add_term(t, 0, PExp::one(), qi(v));
    }
    let coef = c;
    let one = e.one_like();
    let mut out = one.clone();
    let mut falling = one.clone(); // E(E-1)⋯(E-j+1)/j!
    let mut cpow = one.clone();
    for j in 1..=jmax {
        let shifted = &e - &one.scale(&qi(j as i64 - 1));
        falling = (&falling * &shifted).scale(&Q::new(1.into(), (j as i64).into()));
        cpow = &cpow * &coef;
        let term = (&falling * &cpow).truncate(t_max, n);
        let pj = one.monomial_like(0, 0, PExp::var_pow(l, j as u16), Q::one());
        out = &out + &(&term * &pj);
    }
    let out = out.truncate(t_max, n);
    if !out.is_power_series() {
        return Err(consistency!(
            "negative powers of u survive in the ℓ = {l} binomial factor"
        ));
    }
    if out.t_max() < t_max {
        return Err(consistency!("Laurent window too narrow for ℓ = {l}"));
    }
    Ok(MSeries::zero_power(Grading::U, t_max, n)
        .checked_add(&out.truncate(t_max, n))?
        .with_floor(0))
}

fn product_of_factors(
    t_max: i32,
    n: u32,
    coef: impl Fn(usize) -> Vec<(i32, i64)> + Sync,
    extra: impl Fn(usize) -> Result<Option<MSeries>> + Sync,
) -> Result<MSeries> {
    let factors = crate::par::try_map((1..=n as usize).collect(), |l| {
        let mut f = binomial_factor(l, &coef(l), t_max, n)?;
        if let Some(x) = extra(l)? {
            f = f.checked_mul(&x)?;
        }
        Ok::<_, crate::Error>(f)
    })?;
    let mut acc = MSeries::zero_power(Grading::U, t_max, n).one_like();
    for f in factors {
        acc = acc.checked_mul(&f)?;
    }
    Ok(acc)
}

/// `χ^u(Pois₀) = ∏_ℓ (1 + u^ℓ p_ℓ)^{E_ℓ} - 1`.
pub fn chi_pois0(t_max: i32, n: u32) -> Result<MSeries> {
    let prod = product_of_factors(
        t_max,
        n,
        |l| vec![(l as i32, 1)],
        |_| Ok(None),
    )?;
    Ok(&prod - &prod.one_like())
}

/// `χ^u(BV₀) = ∏_ℓ (1 + u^ℓ(1-u^ℓ) p_ℓ)^{E_ℓ} - 1`.
pub fn chi_bv0(t_max: i32, n: u32) -> Result<MSeries> {
    let prod = product_of_factors(
        t_max,
        n,
        |l| vec![(l as i32, 1), (2 * l as i32, -1)],
        |_| Ok(None),
    )?;
    Ok(&prod - &prod.one_like())
}

/// `χ^u(BV₀^red) = ∏_ℓ e^{-p_ℓ/ℓ}(1 + u^ℓ(1-u^ℓ) p_ℓ)^{E_ℓ} - 1`, evaluated
/// factor by factor.
pub fn chi_bv0_red(t_max: i32, n: u32) -> Result<MSeries> {
    let prod = product_of_factors(
        t_max,
        n,
        |l| vec![(l as i32, 1), (2 * l as i32, -1)],
        |l| {
            let z = MSeries::zero_power(Grading::U, t_max, n);
            let x = z.monomial_like(0, 0, PExp::var(l), Q::new((-1).into(), (l as i64).into()));
            Ok(Some(x.exp1()?))
        },
    )?;
    Ok(&prod - &prod.one_like())
}

/// `χ^u(BV₀^red)` through the splitting `BV₀ = (BV₀^red ⊠ Com₁) ⊕ Com`:
/// `(χ^u(BV₀) + 1)·χ(Com₁)^{-1} - 1`, with the inverse taken as a series
/// inverse.
pub fn chi_bv0_red_via_com(t_max: i32, n: u32) -> Result<MSeries> {
    let bv = chi_bv0(t_max, n)?;
    let com1 = bv.zero_like().from_sympoly_like(0, 0, &chi_com1(n));
    let inv = com1.inverse()?;
    let one = bv.one_like();
    Ok(&(&(&bv + &one) * &inv) - &one)
}

/// A polynomial in two alphabets `q_k` (outer) and `p_k` (inner), stored as
/// `q`-monomial ↦ `p`-polynomial, each alphabet with its own weight bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSymFunction {
    terms: BTreeMap<PExp, SymPoly>,
    q_weight: u32,
    p_weight: u32,
}

impl BiSymFunction {
    pub fn zero(q_weight: u32, p_weight: u32) -> Self {
        BiSymFunction {
            terms: BTreeMap::new(),
            q_weight,
            p_weight,
        }
    }

    /// Embeds a `q`-free polynomial in the `p` alphabet.
    pub fn from_p(f: &SymPoly) -> Self {
        let mut out = Self::zero(0, f.max_weight());
        out.add(PExp::one(), f);
        out
    }

    pub fn q_weight(&self) -> u32 {
        self.q_weight
    }

    pub fn p_weight(&self) -> u32 {
        self.p_weight
    }

    pub fn add(&mut self, qm: PExp, f: &SymPoly) {
        if qm.weight() > self.q_weight || f.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(qm.clone())
            .or_insert_with(|| SymPoly::zero(self.p_weight));
        slot.add_scaled(f, &Q::one());
        if slot.is_zero() {
            self.terms.remove(&qm);
        }
    }

    /// The `p`-polynomial multiplying `q^m`.
    pub fn coeff(&self, qm: &PExp) -> SymPoly {
        self.terms
            .get(qm)
            .cloned()
            .unwrap_or_else(|| SymPoly::zero(self.p_weight))
    }

    /// Coefficient of `q^a p^b`.
    pub fn coeff_of(&self, qm: &PExp, pm: &PExp) -> Q {
        self.terms.get(qm).map(|f| f.coeff(pm)).unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PExp, &SymPoly)> {
        self.terms.iter()
    }
}

/// `χ(Δ₀) = exp(Σ_n p_n q_n / n) = Σ_λ p_λ q_λ / z_λ`, truncated at weight
/// `q_weight` in `q` (and hence in `p`).
pub fn chi_delta0(q_weight: u32, p_weight: u32) -> BiSymFunction {
    let mut out = BiSymFunction::zero(q_weight, p_weight);
    for w in 0..=q_weight.min(p_weight) {
        for lam in crate::symfunc::partition::partitions(w) {
            let m = lam.to_pexp();
            let z = z_factor(&m);
            out.add(m.clone(), &SymPoly::monomial(m, Q::new(1.into(), z), p_weight));
        }
    }
    out
}

/// `⟨χ(A) ∘ χ(Lie₀), χ^u(BV₀^red)⟩`, pairing in the `p` alphabet and keeping
/// `q` (renamed to `p` in the output). `u` is a passive coefficient.
///
/// Weight-`r` parts of `χ^u(BV₀^red)` have u-valuation at least `r/2`, so a
/// faithful result up to `u^{t_max}` needs `p`-weight at least `2·t_max`.
pub fn decorated_graph_euler(chi_a: &BiSymFunction, t_max: i32) -> Result<MSeries> {
    let need = 2 * t_max.max(0) as u32;
    if chi_a.p_weight() < need {
        return Err(usage!(
            "pairing up to u^{t_max} needs p-weight ≥ {need}, got {}",
            chi_a.p_weight()
        ));
    }
    let pw = chi_a.p_weight();
    let bv = chi_bv0_red(t_max, pw)?;
    let lie0 = chi_lie0(pw);
    let slices: Vec<(i32, SymPoly)> = bv.iter().map(|(&(t, _), p)| (t, p.clone())).collect();
    let q_terms: Vec<(PExp, SymPoly)> = chi_a.iter().map(|(m, f)| (m.clone(), f.clone())).collect();
    let composed = crate::par::try_map(q_terms, |(qm, f)| {
        Ok::<_, crate::Error>((qm, plethysm_sym(&f, &lie0)?))
    })?;
    let mut out = MSeries::zero_power(Grading::U, t_max, chi_a.q_weight());
    for (qm, g) in composed {
        for (t, h) in &slices {
            let c = hall_inner(&g, h);
            out.add_term(*t, 0, qm.clone(), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, qr};

    #[test]
    fn com1_low_weight() {
        let c = chi_com1(2);
        assert_eq!(c.constant_term(), q(1));
        assert_eq!(c.coeff(&PExp::var(1)), q(1));
        assert_eq!(c.coeff(&PExp::var_pow(1, 2)), qr(1, 2));
        assert_eq!(c.coeff(&PExp::var(2)), qr(1, 2));
        assert_eq!(chi_com(2).constant_term(), q(0));
    }

    #[test]
    fn lie_low_weight() {
        let l0 = chi_lie0(2);
        assert_eq!(l0.weight_part(1), SymPoly::p(1, 2));
        assert_eq!(l0.coeff(&PExp::var_pow(1, 2)), qr(-1, 2));
        assert_eq!(l0.coeff(&PExp::var(2)), qr(-1, 2));
        let l = chi_lie(2);
        assert_eq!(l.coeff(&PExp::var_pow(1, 2)), qr(1, 2));
        assert_eq!(l.coeff(&PExp::var(2)), qr(-1, 2));
    }

    #[test]
    fn koszul_lie0_com() {
        let n = 8;
        let r = plethysm_sym(&chi_lie0(n), &chi_com(n)).unwrap();
        assert_eq!(r, SymPoly::p(1, n));
    }

    #[test]
    fn bv0_at_u_zero_is_com() {
        let bv = chi_bv0(4, 4).unwrap();
        assert_eq!(bv.coeff(0, 0), chi_com(4));
    }

    #[test]
    fn reduced_bv_two_routes() {
        let a = chi_bv0_red(5, 4).unwrap();
        let b = chi_bv0_red_via_com(5, 4).unwrap();
        assert_eq!(a.first_difference(&b), None);
        assert!(a.coeff(0, 0).is_zero());
    }

    #[test]
    fn delta0_terms() {
        let d = chi_delta0(4, 4);
        assert_eq!(d.coeff_of(&PExp::one(), &PExp::one()), q(1));
        assert_eq!(d.coeff_of(&PExp::var(1), &PExp::var(1)), q(1));
        assert_eq!(d.coeff_of(&PExp::var(2), &PExp::var(2)), qr(1, 2));
        assert_eq!(d.coeff_of(&PExp::var_pow(1, 2), &PExp::var_pow(1, 2)), qr(1, 2));
    }

    #[test]
    fn pairing_needs_weight() {
        let a = BiSymFunction::from_p(&SymPoly::p(1, 3));
        assert!(decorated_graph_euler(&a, 2).is_err());
        let a = BiSymFunction::from_p(&SymPoly::p(1, 4));
        let r = decorated_graph_euler(&a, 2).unwrap();
        assert!(r.coeff(0, 0).is_zero());
    }
}
