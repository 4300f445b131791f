//! The Gamma-ratio series `U_ℓ(X, u) = (-λ_ℓ)^X Γ(-E_ℓ+X) / Γ(-E_ℓ)`.
//!
//! `E_ℓ` has a pole of order `ℓ` in `u`, but everything here is expressed
//! through power series only:
//!
//! - `D_ℓ = ℓu^ℓ E_ℓ = Σ_{d|ℓ} μ(ℓ/d) u^{ℓ-d}`, a polynomial with constant
//!   term 1;
//! - `E_ℓ^{-1} = ℓu^ℓ / D_ℓ`, of u-valuation `ℓ`;
//! - `λ_ℓ E_ℓ = (1 - u^ℓ) D_ℓ`, with constant term 1;
//! - `λ_ℓ(E_ℓ - Z) = (1 - u^ℓ)(D_ℓ - ℓu^ℓ Z)`.
//!
//! With `Y = X E_ℓ^{-1}` the Stirling expansion gives
//! `log U = X log(λE) + X Σ_{m≥1} Y^m/(m+1) + (X - 1/2) log(1-Y)
//!        + Σ_{r≥2} B_r/(r(r-1)) (-E^{-1})^{r-1} ((1-Y)^{1-r} - 1)`.

use num_traits::{One, Zero};

use crate::error::{usage, Result};
use crate::series::ring;
use crate::series::{Grading, MSeries, PExp, Q};
use crate::symfunc::arith::{bernoulli_table, divisors, factorial, mu};

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Per-`ℓ` building blocks of `U_ℓ` at fixed truncation.
#[derive(Clone, Debug)]
pub struct UBlock {
    l: usize,
    base: MSeries,
    d_poly: MSeries,
    einv: MSeries,
    log_lambda_e: MSeries,
}

impl UBlock {
    /// Blocks for index `ℓ`, truncated at `u^{t_max}` and p-weight `n`.
    pub fn new(l: usize, t_max: i32, n: u32) -> Result<Self> {
        if l == 0 {
            return Err(usage!("block index must be positive"));
        }
        let base = MSeries::zero_power(Grading::U, t_max, n);
        let mut d_poly = base.zero_like();
        for d in divisors(l as u64) {
            let d = d as usize;
            d_poly.add_term((l - d) as i32, 0, PExp::one(), qi(mu((l / d) as u64) as i64));
        }
        let einv = &base.monomial_like(l as i32, 0, PExp::one(), qi(l as i64)) * &d_poly.inverse()?;
        let one_minus = &base.one_like() - &base.monomial_like(l as i32, 0, PExp::one(), Q::one());
        let log_lambda_e = (&one_minus * &d_poly).log_unit()?;
        Ok(UBlock {
            l,
            base,
            d_poly,
            einv,
            log_lambda_e,
        })
    }

    pub fn index(&self) -> usize {
        self.l
    }

    fn t_max(&self) -> i32 {
        self.base.t_max()
    }

    /// `u^t` with the working bounds.
    fn u_pow(&self, t: i32) -> MSeries {
        self.base.monomial_like(t, 0, PExp::one(), Q::one())
    }

    /// `E_ℓ^{-1}`.
    pub fn e_inverse(&self) -> &MSeries {
        &self.einv
    }

    /// `λ_ℓ (E_ℓ - Z) = (-λ_ℓ)(-E_ℓ + Z)`, the factor in the recurrence.
    pub fn step_factor(&self, z: &MSeries) -> MSeries {
        let one_minus = &self.base.one_like() - &self.u_pow(self.l as i32);
        let inner = &self.d_poly - &(&self.u_pow(self.l as i32) * z).scale(&qi(self.l as i64));
        &one_minus * &inner
    }

    fn check_argument(&self, x: &MSeries) -> Result<MSeries> {
        if x.valuation().is_some_and(|v| v < 0) {
            return Err(usage!("U_ℓ argument must have nonnegative u-valuation"));
        }
        Ok(x.truncate(self.t_max(), self.base.max_weight()))
    }

    /// `Y = X E_ℓ^{-1}`.
    fn y(&self, x: &MSeries) -> MSeries {
        x * &self.einv
    }

    /// `U_ℓ(X, u)` from the Stirling form.
    pub fn eval(&self, x: &MSeries) -> Result<MSeries> {
        let x = self.check_argument(x)?;
        let y = self.y(&x);
        let one = self.base.one_like();
        let mut log_u = &x * &self.log_lambda_e;
        let geom = ring::power_sum_series(&y, |m| {
            if m == 0 {
                Q::zero()
            } else {
                Q::new(1.into(), ((m + 1) as i64).into())
            }
        });
        log_u = &log_u + &(&x * &geom);
        let log1my = (-&y).log1p()?;
        let x_half = &x - &one.scale(&Q::new(1.into(), 2.into()));
        log_u = &log_u + &(&x_half * &log1my);
        let rmax = (self.t_max() as usize) / self.l + 1;
        let bern = bernoulli_table(rmax);
        let mut einv_pow = self.einv.clone(); // (E^{-1})^{r-1}
        for r in 2..=rmax {
            if bern[r].is_zero() {
                einv_pow = &einv_pow * &self.einv;
                continue;
            }
            let sign = if r % 2 == 0 { -1 } else { 1 }; // (-1)^{r-1}
            let c = &bern[r] / qi((r * (r - 1)) as i64) * qi(sign);
            let bracket = &(-&y).pow1p(&qi(1 - r as i64))? - &one;
            log_u = log_u.checked_add_scaled(&(&einv_pow * &bracket), &c)?;
            einv_pow = &einv_pow * &self.einv;
        }
        log_u.exp1()
    }

    /// `U_ℓ(p, u) = Π_{i<p} λ_ℓ(E_ℓ - i)` for an integer `p ≥ 0`.
    pub fn eval_integer(&self, p: u32) -> MSeries {
        let mut out = self.base.one_like();
        for i in 0..p {
            out = &out * &self.step_factor(&self.base.constant_like(qi(i as i64)));
        }
        out
    }

    /// The operator side at an integer `p ≥ 0`:
    /// `(1+∂_a)^p e^{-a} (1+λa)^E |_{a=0} = Σ_m binom(p,m) m! [a^m] e^{-a}(1+λa)^E`,
    /// with `binom(E, j) λ^j = Π_{i<j} λ(E - i) / j!`.
    pub fn eval_operator_side(&self, p: u32) -> MSeries {
        let p = p as usize;
        // falling[j] = Π_{i<j} λ(E - i)
        let mut falling = vec![self.base.one_like()];
        for i in 0..p {
            let next = &falling[i] * &self.step_factor(&self.base.constant_like(qi(i as i64)));
            falling.push(next);
        }
        let mut out = self.base.zero_like();
        for m in 0..=p {
            // c_m = Σ_{j≤m} (-1)^{m-j}/(m-j)! · falling[j]/j!
            let mut c_m = self.base.zero_like();
            for (j, f) in falling.iter().enumerate().take(m + 1) {
                let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                let denom = factorial((m - j) as u64) * factorial(j as u64);
                c_m = c_m
                    .checked_add_scaled(f, &Q::new(sign.into(), denom))
                    .expect("same bounds");
            }
            let coef = crate::symfunc::arith::binomial(p as i64, m as u64) * factorial(m as u64);
            out = out
                .checked_add_scaled(&c_m, &Q::from_integer(coef))
                .expect("same bounds");
        }
        out
    }

    /// `log(λ_ℓ(E_ℓ - X)) + ψ₀(-E_ℓ + X)`
    /// `= log(λE) + log(1-Y) - Σ_{j≥1} (B_j/j) E^{-j} (1-Y)^{-j}`.
    pub fn log_psi0(&self, x: &MSeries) -> Result<MSeries> {
        let x = self.check_argument(x)?;
        let y = self.y(&x);
        let mut out = &self.log_lambda_e + &(-&y).log1p()?;
        let jmax = self.t_max() as usize / self.l;
        let bern = bernoulli_table(jmax);
        let mut einv_pow = self.einv.clone();
        for j in 1..=jmax {
            if !bern[j].is_zero() {
                let term = &einv_pow * &(-&y).pow1p(&qi(-(j as i64)))?;
                out = out.checked_add_scaled(&term, &(-&bern[j] / qi(j as i64)))?;
            }
            einv_pow = &einv_pow * &self.einv;
        }
        Ok(out)
    }

    /// `ψ₁(-E_ℓ + X) = -Σ_{j≥0} B_j E^{-(j+1)} (1-Y)^{-(j+1)}`.
    pub fn psi1(&self, x: &MSeries) -> Result<MSeries> {
        let x = self.check_argument(x)?;
        let y = self.y(&x);
        let jmax = self.t_max() as usize / self.l;
        let bern = bernoulli_table(jmax);
        let mut out = self.base.zero_like();
        let mut einv_pow = self.einv.clone(); // E^{-(j+1)}
        for j in 0..jmax {
            if !bern[j].is_zero() {
                let term = &einv_pow * &(-&y).pow1p(&qi(-(j as i64) - 1))?;
                out = out.checked_add_scaled(&term, &-&bern[j])?;
            }
            einv_pow = &einv_pow * &self.einv;
        }
        Ok(out)
    }

    /// `1/(-E_ℓ + X) = -E^{-1} (1-Y)^{-1}`.
    pub fn reciprocal(&self, x: &MSeries) -> Result<MSeries> {
        let x = self.check_argument(x)?;
        let y = self.y(&x);
        Ok(-&(&self.einv * &(-&y).pow1p(&qi(-1))?))
    }
}

/// Derivative ladder: `(∂_X U, ∂_X² U)` at `X` and at `X + 1`, each
/// expressed through `U_ℓ(X)` and the closed digamma/trigamma forms.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub d1_at_x: MSeries,
    pub d1_at_x1: MSeries,
    pub d2_at_x: MSeries,
    pub d2_at_x1: MSeries,
}

/// Right-hand sides of the four derivative identities.
pub fn ladder_closed(block: &UBlock, x: &MSeries) -> Result<Ladder> {
    let u = block.eval(x)?;
    let lp = block.log_psi0(x)?;
    let p1 = block.psi1(x)?;
    let rec = block.reciprocal(x)?;
    let step = &block.step_factor(x) * &u;
    let lp1 = &lp + &rec;
    Ok(Ladder {
        d1_at_x: &lp * &u,
        d1_at_x1: &lp1 * &step,
        d2_at_x: &(&(&lp * &lp) + &p1) * &u,
        d2_at_x1: &(&(&(&lp1 * &lp1) + &p1) - &(&rec * &rec)) * &step,
    })
}

/// The same four quantities by formal differentiation: evaluate `U_ℓ` at
/// `X + w` with `w² ≠ 0 = w³` and read off `∂U = [w¹]`, `∂²U = 2[w²]`.
pub fn ladder_by_differentiation(block: &UBlock, x: &MSeries) -> Result<Ladder> {
    if x.iter().any(|(&(_, k), _)| k > 0) {
        return Err(usage!("ladder argument must not involve w"));
    }
    let w = x.monomial_like(0, 1, PExp::one(), Q::one());
    let shifted = &(x + &w);
    let at_x = block.eval(shifted)?;
    let at_x1 = block.eval(&(shifted + &x.one_like()))?;
    let two = qi(2);
    Ok(Ladder {
        d1_at_x: at_x.w_part(1),
        d1_at_x1: at_x1.w_part(1),
        d2_at_x: at_x.w_part(2).scale(&two),
        d2_at_x1: at_x1.w_part(2).scale(&two),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SymPoly;

    fn sample_arg(block: &UBlock) -> MSeries {
        let n = 3;
        let mut poly = SymPoly::zero(n);
        poly.add_term(PExp::var(1), qi(2));
        poly.add_term(PExp::var(2), Q::new((-1).into(), 3.into()));
        poly.add_term(PExp::var_pow(1, 3), qi(5));
        let mut x = block.base.from_sympoly_like(0, 0, &poly);
        x.add_term(1, 0, PExp::var(1), Q::new(1.into(), 2.into()));
        x.add_term(2, 0, PExp::one(), qi(3));
        x
    }

    #[test]
    fn at_zero_is_one() {
        for l in 1..=4 {
            let b = UBlock::new(l, 8, 2).unwrap();
            assert_eq!(b.eval(&b.base.zero_like()).unwrap(), b.base.one_like());
        }
    }

    #[test]
    fn at_one_for_l_one() {
        let b = UBlock::new(1, 8, 0).unwrap();
        let got = b.eval(&b.base.one_like()).unwrap();
        let expected = &b.base.one_like() - &b.u_pow(1);
        assert_eq!(got, expected);
    }

    #[test]
    fn integer_arguments_three_ways() {
        for l in 1..=4 {
            let b = UBlock::new(l, 10, 0).unwrap();
            for p in 0..=4 {
                let stirling = b.eval(&b.base.constant_like(qi(p as i64))).unwrap();
                assert_eq!(stirling, b.eval_integer(p), "ℓ={l}, p={p}");
                assert_eq!(b.eval_operator_side(p), b.eval_integer(p), "ℓ={l}, p={p}");
            }
        }
    }

    #[test]
    fn recurrence() {
        for l in 1..=3 {
            let b = UBlock::new(l, 8, 3).unwrap();
            let x = sample_arg(&b);
            let ux = b.eval(&x).unwrap();
            let mut rhs = ux.clone();
            for p in 1..=3 {
                rhs = &rhs * &b.step_factor(&(&x + &b.base.constant_like(qi(p - 1))));
                let lhs = b.eval(&(&x + &b.base.constant_like(qi(p)))).unwrap();
                assert_eq!(lhs, rhs, "ℓ={l}, p={p}");
            }
        }
    }

    #[test]
    fn ladder_identities() {
        for l in 1..=3 {
            let b = UBlock::new(l, 7, 3).unwrap();
            let x = sample_arg(&b);
            let closed = ladder_closed(&b, &x).unwrap();
            let diff = ladder_by_differentiation(&b, &x).unwrap();
            assert_eq!(closed.d1_at_x, diff.d1_at_x, "ℓ={l}");
            assert_eq!(closed.d1_at_x1, diff.d1_at_x1, "ℓ={l}");
            assert_eq!(closed.d2_at_x, diff.d2_at_x, "ℓ={l}");
            assert_eq!(closed.d2_at_x1, diff.d2_at_x1, "ℓ={l}");
        }
    }

    #[test]
    fn negative_valuation_rejected() {
        let b = UBlock::new(1, 4, 0).unwrap();
        let bad = MSeries::zero(Grading::U, -1, 4, 0).monomial_like(-1, 0, PExp::one(), qi(1));
        assert!(b.eval(&bad).is_err());
    }
}
