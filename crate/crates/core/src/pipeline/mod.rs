//! Independent recomputation of `ω₂` from Gamma-ratio series.
//!
//! Route: the product `Π_ℓ U_ℓ(A_ℓ)` over the legged graph complex, its
//! connected parts with `j = 0, 1, 2` marked legs, the edge corrections,
//! the sign twist, and the final change of grading from complexity `u` to
//! genus `ħ`. Nothing here shares code with [`crate::weight2`] beyond the
//! series arithmetic.

pub mod ufunc;

pub use ufunc::{ladder_by_differentiation, ladder_closed, Ladder, UBlock};

use num_traits::One;

use crate::error::{consistency, Result};
use crate::series::{Grading, MSeries, PExp, SymPoly, Q};
use crate::symfunc::arith::{divisors, mu};
use crate::weight2::Weight2Config;

/// Truncation of the complexity-graded computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UTrunc {
    /// Largest power of `u` kept.
    pub t_max: i32,
    /// p-weight bound.
    pub n: u32,
}

impl UTrunc {
    pub fn new(t_max: i32, n: u32) -> Self {
        UTrunc { t_max, n }
    }

    /// `u^t` times `D_ℓ - 1` has valuation at least `ℓ/2`, and `E_ℓ^{-1}` has
    /// valuation `ℓ`, so factors with `ℓ > 2 t_max` are 1.
    pub fn block_cut(&self) -> usize {
        (2 * self.t_max.max(0) as usize).max(1)
    }

    fn base(&self) -> MSeries {
        MSeries::zero_power(Grading::U, self.t_max, self.n)
    }

    fn blocks(&self) -> Result<Vec<UBlock>> {
        crate::par::try_map((1..=self.block_cut()).collect(), |l| {
            UBlock::new(l, self.t_max, self.n)
        })
    }
}

/// `(1/ℓ) Σ_{d|ℓ} μ(ℓ/d) p_d`, optionally with `w^d` added to each `p_d`.
fn leg_argument(l: usize, tr: &UTrunc, with_w: bool) -> MSeries {
    let mut out = tr.base();
    for d in divisors(l as u64) {
        let d = d as usize;
        let m = mu((l / d) as u64);
        if m == 0 {
            continue;
        }
        let c = Q::new((m as i64).into(), (l as i64).into());
        out.add_poly(0, 0, &SymPoly::p(d, tr.n), &c);
        if with_w && d <= 2 {
            out.add_term(0, d as u8, PExp::one(), c);
        }
    }
    out
}

/// `Π_ℓ U_ℓ((1/ℓ) Σ_{d|ℓ} μ(ℓ/d) p_d)`: graphs without legs.
pub fn chi_fg(tr: &UTrunc) -> Result<MSeries> {
    let blocks = tr.blocks()?;
    let factors = crate::par::try_map(blocks, |b| b.eval(&leg_argument(b.index(), tr, false)))?;
    Ok(product(tr, factors))
}

/// `Π_ℓ U_ℓ(δ_{ℓ,1} + (1/ℓ) Σ_{d|ℓ} μ(ℓ/d)(p_d + w^d))`: graphs with any
/// number of `ε`-legs (counted with weight 1) and up to two `ω`-legs
/// (marked by `w`).
pub fn chi_fx(tr: &UTrunc) -> Result<MSeries> {
    let blocks = tr.blocks()?;
    let factors = crate::par::try_map(blocks, |b| {
        let mut arg = leg_argument(b.index(), tr, true);
        if b.index() == 1 {
            arg = &arg + &arg.one_like();
        }
        b.eval(&arg)
    })?;
    Ok(product(tr, factors))
}

fn product(tr: &UTrunc, factors: Vec<MSeries>) -> MSeries {
    factors.iter().fold(tr.base().one_like(), |acc, f| &acc * f)
}

/// Euler characteristics of the connected parts with `j = 0, 1, 2`
/// `ω`-legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedParts {
    pub zero: MSeries,
    pub one: MSeries,
    pub two: MSeries,
}

/// Connected parts as `w^j`-coefficients of `chi_fx / chi_fg`.
pub fn connected_parts(tr: &UTrunc) -> Result<ConnectedParts> {
    let num = chi_fx(tr)?;
    let den = chi_fg(tr)?;
    let ratio = num.checked_mul(&den.inverse()?)?;
    Ok(ConnectedParts {
        zero: ratio.w_part(0),
        one: ratio.w_part(1),
        two: ratio.w_part(2),
    })
}

/// Connected parts from the closed digamma/trigamma forms:
/// with `c₀ = λ_1(E_1 - p_1)`, `L_ℓ = log(λ_ℓ(E_ℓ - A_ℓ)) + ψ₀(-E_ℓ + A_ℓ)`
/// and `S = 1/(-E_1 + p_1) + Σ μ(ℓ)/ℓ L_ℓ`:
/// `conn₁ = c₀ S` and
/// `conn₂ = c₀/2 [S² + Σ μ(ℓ)/ℓ L_{2ℓ} - (-E_1 + p_1)^{-2} + Σ (μ(ℓ)/ℓ)² ψ₁(-E_ℓ + A_ℓ)]`.
pub fn connected_parts_closed(tr: &UTrunc) -> Result<ConnectedParts> {
    let blocks = tr.blocks()?;
    let cut = blocks.len();
    let per_block = crate::par::try_map((0..cut).collect(), |i| {
        let b = &blocks[i];
        let arg = leg_argument(b.index(), tr, false);
        Ok::<_, crate::Error>((b.log_psi0(&arg)?, b.psi1(&arg)?))
    })?;
    let b1 = &blocks[0];
    let arg1 = leg_argument(1, tr, false);
    let c0 = b1.step_factor(&arg1);
    let rec = b1.reciprocal(&arg1)?;
    let mut s = rec.clone();
    let mut rest = -&(&rec * &rec);
    for l in 1..=cut {
        let m = mu(l as u64) as i64;
        if m == 0 {
            continue;
        }
        let c = Q::new(m.into(), (l as i64).into());
        s = s.checked_add_scaled(&per_block[l - 1].0, &c)?;
        if 2 * l <= cut {
            rest = rest.checked_add_scaled(&per_block[2 * l - 1].0, &c)?;
        }
        rest = rest.checked_add_scaled(&per_block[l - 1].1, &(&c * &c))?;
    }
    let one = &c0 * &s;
    let two = (&c0 * &(&(&s * &s) + &rest)).scale(&Q::new(1.into(), 2.into()));
    Ok(ConnectedParts {
        zero: c0,
        one,
        two,
    })
}

/// `χ(X̌) = conn₂ + u conn₁ + (u + u²) conn₀`.
pub fn chi_xcheck(parts: &ConnectedParts) -> MSeries {
    let u = parts.zero.monomial_like(1, 0, PExp::one(), Q::one());
    let u2 = parts.zero.monomial_like(2, 0, PExp::one(), Q::one());
    let mut out = &parts.two + &(&u * &parts.one);
    out = &out + &(&(&u + &u2) * &parts.zero);
    out
}

/// `ω₂` through the pipeline, to `ħ^{g_max}` and p-weight `n_max`.
///
/// `χ(X) = -χ(X̌)|_{p_d ↦ -p_d}`; then `u ↦ ħ`, `p_ℓ ↦ ħ^{-ℓ} p_ℓ`, and the
/// corrections `+ħp_1` (the `(1,1)` cell) and `+(p_1² + p_2)/2` (removing
/// the unstable `(0,2)` piece).
pub fn omega2_pipeline(cfg: &Weight2Config) -> Result<MSeries> {
    let tr = UTrunc::new((cfg.g_max + cfg.n_max) as i32, cfg.n_max);
    let parts = connected_parts(&tr)?;
    omega2_from_parts(cfg, &parts)
}

/// Final twist, regrading and corrections applied to given connected parts.
pub fn omega2_from_parts(cfg: &Weight2Config, parts: &ConnectedParts) -> Result<MSeries> {
    let chi_x = -&chi_xcheck(parts).sign_twist();
    let floor = -(cfg.n_max as i32);
    let mut om = chi_x.regrade(floor)?.rename(Grading::Hbar);
    om.add_term(1, 0, PExp::var(1), Q::one());
    let half = Q::new(1.into(), 2.into());
    om.add_term(0, 0, PExp::var_pow(1, 2), half.clone());
    om.add_term(0, 0, PExp::var(2), half);
    if !om.is_power_series() {
        let v = om.valuation().unwrap_or(0);
        return Err(consistency!("pipeline ω₂ has a term at ħ^{v}"));
    }
    Ok(om.truncate(cfg.g_max as i32, cfg.n_max))
}

/// Cell-by-cell comparison with the closed form. Returns a description of
/// the first differing `(g, monomial)` if any.
pub fn compare_with_closed(cfg: &Weight2Config) -> Result<Option<String>> {
    let pipe = omega2_pipeline(cfg)?;
    let closed = crate::weight2::omega2_closed(cfg)?.series;
    for (name, s) in [("pipeline", &pipe), ("closed form", &closed)] {
        if s.t_max() != cfg.g_max as i32 || s.max_weight() != cfg.n_max {
            return Err(consistency!(
                "{name} series lost precision: ħ^{} / weight {}",
                s.t_max(),
                s.max_weight()
            ));
        }
    }
    Ok(pipe
        .first_difference(&closed)
        .map(|(g, _, m, a, b)| format!("ħ^{g} {m}: pipeline {a}, closed form {b}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_zero_legs() {
        // c₀ = (1 - u)(1 - u p_1)
        let tr = UTrunc::new(6, 3);
        let parts = connected_parts(&tr).unwrap();
        let base = tr.base();
        let mut expected = base.one_like();
        expected.add_term(1, 0, PExp::one(), -Q::one());
        expected.add_term(1, 0, PExp::var(1), -Q::one());
        expected.add_term(2, 0, PExp::var(1), Q::one());
        assert_eq!(parts.zero, expected);
    }

    #[test]
    fn connected_parts_two_routes() {
        let tr = UTrunc::new(7, 3);
        assert_eq!(connected_parts(&tr).unwrap(), connected_parts_closed(&tr).unwrap());
    }

    #[test]
    fn xcheck_has_positive_valuation() {
        let tr = UTrunc::new(6, 3);
        let x = chi_xcheck(&connected_parts(&tr).unwrap());
        assert!(x.valuation().unwrap() >= 1);
    }

    #[test]
    fn agrees_with_closed_form_small() {
        let cfg = Weight2Config::new(4, 3);
        assert_eq!(compare_with_closed(&cfg).unwrap(), None);
    }

    #[test]
    fn zero_point_slice_at_genus_eight() {
        let om = omega2_pipeline(&Weight2Config::new(8, 0)).unwrap();
        assert_eq!(om.coeff_of(8, 0, &PExp::one()), -Q::one());
        for g in 0..8 {
            assert_eq!(om.coeff_of(g, 0, &PExp::one()), Q::from_integer(0.into()));
        }
    }
}
