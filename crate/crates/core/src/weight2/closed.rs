use num_traits::One;

use super::{is_unstable, Weight2Config};
use crate::error::{consistency, Result};
use crate::series::plaurent::binomial_power;
use crate::series::ring;
use crate::series::{Grading, MSeries, PExp, SymPoly, Q};
use crate::symfunc::arith::{bernoulli_table, divisors, mu};

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn base(cfg: &Weight2Config) -> MSeries {
    MSeries::zero_power(Grading::Hbar, cfg.g_max as i32, cfg.n_max)
}

/// `P_d^e` expanded in power sums, as a constant series.
fn p_power(cfg: &Weight2Config, d: usize, e: i64) -> MSeries {
    base(cfg).from_sympoly_like(0, 0, &binomial_power(d, e, cfg.n_max))
}

/// `X_ℓ = Σ_{d|ℓ, d≠ℓ} μ(ℓ/d) ħ^{ℓ-d} P_d / P_ℓ`, expanded.
pub fn x_ell(l: usize, cfg: &Weight2Config) -> MSeries {
    let z = base(cfg);
    let mut num = z.zero_like();
    for d in divisors(l as u64) {
        let d = d as usize;
        let m = mu((l / d) as u64);
        if d == l || m == 0 {
            continue;
        }
        let pd = binomial_power(d, 1, cfg.n_max);
        num.add_poly((l - d) as i32, 0, &pd, &qi(m as i64));
    }
    &num * &p_power(cfg, l, -1)
}

/// `W_ℓ = 1/Z_ℓ = T_ℓ (1+X_ℓ)^{-1}`.
fn w_ell(l: usize, cfg: &Weight2Config) -> MSeries {
    let t = base(cfg)
        .from_sympoly_like(l as i32, 0, &binomial_power(l, -1, cfg.n_max))
        .scale(&qi(l as i64));
    let x = x_ell(l, cfg);
    &t * &ring::inv1p(&x)
}

/// Powers `W_ℓ^k` for `k = 1 ..= g_max/ℓ`.
fn w_powers(l: usize, cfg: &Weight2Config) -> Vec<MSeries> {
    let kmax = cfg.g_max as usize / l;
    let w = w_ell(l, cfg);
    let mut out = Vec::with_capacity(kmax);
    let mut acc = w.clone();
    for _ in 0..kmax {
        out.push(acc.clone());
        acc = &acc * &w;
    }
    out
}

/// The `ħ`-dependent part of `log(ℓħ^ℓ Z_ℓ) + ψ₀(-Z_ℓ)`:
/// `log(1+X_ℓ) - Σ_k (B_k/k) W_ℓ^k`.
fn psi0_nonlog(l: usize, cfg: &Weight2Config) -> MSeries {
    let b = bernoulli_table(cfg.g_max as usize + 1);
    let mut out = x_ell(l, cfg).log1p().expect("X_ℓ has positive valuation");
    for (i, wk) in w_powers(l, cfg).iter().enumerate() {
        let k = i + 1;
        out = out
            .checked_add_scaled(wk, &(-&b[k] / qi(k as i64)))
            .expect("same grading");
    }
    out
}

/// `log(ℓħ^ℓ Z_ℓ) + ψ₀(-Z_ℓ)` expanded:
/// `log P_ℓ + log(1+X_ℓ) - Σ_{k,j} (B_k/k) binom(-k,j) T_ℓ^k X_ℓ^j`.
pub fn psi0_block(l: usize, cfg: &Weight2Config) -> MSeries {
    let log_p = ring::log1p(&SymPoly::p(l, cfg.n_max));
    &psi0_nonlog(l, cfg) + &base(cfg).from_sympoly_like(0, 0, &log_p)
}

/// `ψ₁(-Z_ℓ) = -Σ_{k,j} B_{k-1} binom(-k,j) T_ℓ^k X_ℓ^j = -Σ_k B_{k-1} W_ℓ^k`.
pub fn psi1_block(l: usize, cfg: &Weight2Config) -> MSeries {
    let b = bernoulli_table(cfg.g_max as usize + 1);
    let mut out = base(cfg);
    for (i, wk) in w_powers(l, cfg).iter().enumerate() {
        out = out
            .checked_add_scaled(wk, &-&b[i])
            .expect("same grading");
    }
    out
}

/// Result of [`omega2_closed`]: the series and its bounds.
#[derive(Clone, Debug)]
pub struct Omega2 {
    pub config: Weight2Config,
    pub series: MSeries,
}

impl Omega2 {
    /// `χ₂^S(M_{g,n})` as a homogeneous weight-`n` polynomial in the `p_d`.
    pub fn cell(&self, g: u32, n: u32) -> SymPoly {
        self.series.coeff(g as i32, 0).weight_part(n)
    }
}

/// Evaluates the closed-form generating function to `ħ^{g_max}` and p-weight
/// `n_max`:
///
/// `ω₂ = (ħ-1)P_1/2 · [ (-ħ/P_1 + Σ μ(ℓ)/ℓ Ψ₀(ℓ))² + Σ μ(ℓ)/ℓ Ψ₀(2ℓ)
///        + Σ (μ(ℓ)/ℓ)² Ψ₁(ℓ) - ħ²/P_1² ] - ħ + (ħ²-1)P_1 + (P_1²+P_2)/2`
///
/// with `Ψ₀ = psi0_block`, `Ψ₁ = psi1_block`. Asserts that no negative
/// power of `ħ` appears and that the unstable cells vanish.
pub fn omega2_closed(cfg: &Weight2Config) -> Result<Omega2> {
    let cut = cfg.block_cut();
    let blocks = crate::par::map((1..=cut).collect(), |l| (psi0_block(l, cfg), psi1_block(l, cfg)));
    let z = base(cfg);
    let inv_p1 = p_power(cfg, 1, -1);
    let hbar = z.monomial_like(1, 0, PExp::one(), Q::one());

    let mut s = -&(&hbar * &inv_p1);
    let mut rest = -&(&(&hbar * &hbar) * &(&inv_p1 * &inv_p1));
    for l in 1..=cut {
        let m = mu(l as u64) as i64;
        if m == 0 {
            continue;
        }
        let c = frac(m, l as i64);
        s = s.checked_add_scaled(&blocks[l - 1].0, &c)?;
        if 2 * l <= cut {
            rest = rest.checked_add_scaled(&blocks[2 * l - 1].0, &c)?;
        }
        rest = rest.checked_add_scaled(&blocks[l - 1].1, &(&c * &c))?;
    }
    let bracket = &(&s * &s) + &rest;
    let p1 = p_power(cfg, 1, 1);
    let pref = (&(&hbar - &z.one_like()) * &p1).scale(&frac(1, 2));
    let mut omega = &pref * &bracket;
    omega = &omega - &hbar;
    omega = &omega + &(&(&(&hbar * &hbar) - &z.one_like()) * &p1);
    let tail = (&(&p1 * &p1) + &p_power(cfg, 2, 1)).scale(&frac(1, 2));
    omega = &omega + &tail;

    if !omega.is_power_series() {
        return Err(consistency!("negative power of ħ in ω₂"));
    }
    for g in 0..=cfg.g_max.min(1) {
        for n in 0..=cfg.n_max.min(2) {
            if is_unstable(g, n) {
                let cell = omega.coeff(g as i32, 0).weight_part(n);
                if !cell.is_zero() {
                    return Err(consistency!("unstable cell ({g},{n}) is nonzero: {cell}"));
                }
            }
        }
    }
    Ok(Omega2 {
        config: *cfg,
        series: omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q;

    #[test]
    fn x_values() {
        let cfg = Weight2Config::new(6, 3);
        assert!(x_ell(1, &cfg).is_zero());
        // X_2 = -ħ P_1 / P_2
        let x2 = x_ell(2, &cfg);
        assert_eq!(x2.valuation(), Some(1));
        assert_eq!(x2.coeff_of(1, 0, &PExp::one()), q(-1));
        assert_eq!(x2.coeff_of(1, 0, &PExp::var(1)), q(-1));
        assert_eq!(x2.coeff_of(1, 0, &PExp::var(2)), q(1));
        assert_eq!(x2.t_max(), 6);
    }

    #[test]
    fn x_valuations() {
        let cfg = Weight2Config::new(12, 2);
        for l in 2..=12 {
            let v = x_ell(l, &cfg).valuation().unwrap();
            assert!(2 * v >= l as i32, "ℓ = {l}, valuation {v}");
        }
    }

    #[test]
    fn psi1_leading_term() {
        let cfg = Weight2Config::new(3, 2);
        let b = psi1_block(1, &cfg);
        // -ħ/P_1 - B_1 ħ²/P_1² - ...; the ħ¹ p-constant term is -1
        assert_eq!(b.coeff_of(1, 0, &PExp::one()), q(-1));
        assert_eq!(b.valuation(), Some(1));
        let b3 = psi1_block(3, &Weight2Config::new(8, 2));
        assert!(b3.valuation().unwrap() >= 3);
    }

    #[test]
    fn psi0_weight_zero_part_for_l_one() {
        let cfg = Weight2Config::new(6, 0);
        let b = psi0_block(1, &cfg);
        let bern = bernoulli_table(6);
        for k in 1..=6 {
            assert_eq!(b.coeff_of(k, 0, &PExp::one()), -&bern[k as usize] / q(k as i64));
        }
    }

    #[test]
    fn large_block_is_only_the_logarithm() {
        let cfg = Weight2Config::new(3, 5);
        let b = psi0_block(5, &cfg);
        assert_eq!(b.valuation(), Some(0));
        assert_eq!(b.iter().count(), 1);
    }

    #[test]
    fn low_cells() {
        let om = omega2_closed(&Weight2Config::new(2, 4)).unwrap();
        assert_eq!(om.cell(1, 1), SymPoly::p(1, 4));
        for n in 0..=3 {
            assert!(om.cell(0, n).is_zero(), "(0,{n})");
        }
    }
}
