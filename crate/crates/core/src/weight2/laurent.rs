//! Per-genus decomposition of `ω₂` into Laurent polynomials in the `P_d`.
//!
//! Writing `L = Σ μ(ℓ)/ℓ log P_ℓ`, the genus-`g` slice of `ω₂` is
//! `L·(A_g - A_{g-1}) + C_g - C_{g-1}` plus explicit corrections in genus
//! `0, 1, 2`, where `A_g`, `C_g` are Laurent polynomials. They are computed
//! here from the literal double sum over `k` and `j` in
//! `Σ_{k,j} c_k binom(-k,j) T_ℓ^k X_ℓ^j`, never expanding `P_d^{-1}`, which
//! makes this route independent of [`super::omega2_closed`].

use num_traits::One;

use crate::error::{consistency, Result};
use crate::series::ring::{self, NilRing};
use crate::series::{LExp, PLaurent, PLaurentSeries, SymPoly, Q};
use crate::symfunc::arith::{bernoulli_table, binomial, divisors, largest_moebius_divisor, mu};

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `X_ℓ` as a series in `ħ` with Laurent coefficients.
fn x_laurent(l: usize, prec: usize) -> PLaurentSeries {
    let mut out = PLaurentSeries::zero(prec);
    for d in divisors(l as u64) {
        let d = d as usize;
        let m = mu((l / d) as u64);
        if d == l || m == 0 {
            continue;
        }
        let mono = PLaurent::monomial(
            LExp::var_pow(d, 1).mul(&LExp::var_pow(l, -1)),
            Q::one(),
        );
        out.add_at(l - d, &mono, &qi(m as i64));
    }
    out
}

/// The two `ħ`-dependent block sums for index `ℓ`:
/// `log(1+X) - Σ_{k,j} (B_k/k) binom(-k,j) T^k X^j` and
/// `-Σ_{k,j} B_{k-1} binom(-k,j) T^k X^j`.
fn blocks(l: usize, prec: usize) -> (PLaurentSeries, PLaurentSeries) {
    let b = bernoulli_table(prec + 1);
    let x = x_laurent(l, prec);
    let mut psi0 = ring::log1p(&x);
    let mut psi1 = PLaurentSeries::zero(prec);
    // exact ħ-valuation of X_ℓ; X_1 = 0
    let v = largest_moebius_divisor(l as u64).map(|d| l - d as usize);
    let kmax = prec / l;
    let jmax_overall = match v {
        Some(v) => (prec.saturating_sub(l)) / v,
        None => 0,
    };
    let mut xpow = vec![PLaurentSeries::monomial(0, PLaurent::one(), prec)];
    for j in 1..=jmax_overall {
        let next = xpow[j - 1].mul(&x);
        xpow.push(next);
    }
    for k in 1..=kmax {
        // T^k = ℓ^k ħ^{ℓk} P_ℓ^{-k}
        let tk = PLaurentSeries::monomial(
            l * k,
            PLaurent::p_pow(l, -(k as i16)).scale(&qi((l as i64).pow(k as u32))),
            prec,
        );
        let rem = prec - l * k;
        let jmax = v.map_or(0, |v| rem / v);
        let c0 = -&b[k] / qi(k as i64);
        let c1 = -&b[k - 1];
        for j in 0..=jmax {
            let bin = Q::from_integer(binomial(-(k as i64), j as u64));
            let term = tk.mul(&xpow[j]);
            psi0.ring_add_scaled(&term, &(&c0 * &bin));
            psi1.ring_add_scaled(&term, &(&c1 * &bin));
        }
    }
    (psi0, psi1)
}

/// The series `Σ_g A_g ħ^g` and `Σ_g C_g ħ^g` up to a common genus bound.
#[derive(Clone, Debug)]
pub struct LaurentSeriesAC {
    pub a: PLaurentSeries,
    pub c: PLaurentSeries,
}

impl LaurentSeriesAC {
    pub fn g_max(&self) -> u32 {
        self.a.prec() as u32
    }

    pub fn a(&self, g: u32) -> &PLaurent {
        self.a.coeff(g as usize)
    }

    pub fn c(&self, g: u32) -> &PLaurent {
        self.c.coeff(g as usize)
    }
}

/// Computes `A_g` and `C_g` for all `g ≤ g_max`.
///
/// `A = -P_1 S` and
/// `C = -P_1/2 [S² + Σ μ(ℓ)/ℓ Φ₀(2ℓ) + Σ (μ(ℓ)/ℓ)² Φ₁(ℓ) − ħ²/P_1²]` with `S = -ħ/P_1 + Σ μ(ℓ)/ℓ Φ₀(ℓ)`, where `Φ₀`, `Φ₁` are the
/// logarithm-free block sums.
pub fn laurent_series(g_max: u32) -> LaurentSeriesAC {
    let prec = g_max as usize;
    let cut = (2 * prec).max(1);
    let all = crate::par::map((1..=cut).collect(), |l| blocks(l, prec));
    let inv_p1 = PLaurent::p_pow(1, -1);
    let mut s = PLaurentSeries::monomial(1, inv_p1.scale(&qi(-1)), prec);
    let mut rest = PLaurentSeries::monomial(2, PLaurent::p_pow(1, -2).scale(&qi(-1)), prec);
    for l in 1..=cut {
        let m = mu(l as u64) as i64;
        if m == 0 {
            continue;
        }
        let c = Q::new(m.into(), (l as i64).into());
        s.ring_add_scaled(&all[l - 1].0, &c);
        if 2 * l <= cut {
            rest.ring_add_scaled(&all[2 * l - 1].0, &c);
        }
        rest.ring_add_scaled(&all[l - 1].1, &(&c * &c));
    }
    let p1 = PLaurent::p_pow(1, 1);
    let a = s.mul_coeff(&p1).scale(&qi(-1));
    let mut bracket = s.mul(&s);
    bracket.ring_add_scaled(&rest, &Q::one());
    let c = bracket.mul_coeff(&p1).scale(&Q::new((-1).into(), 2.into()));
    LaurentSeriesAC { a, c }
}

/// `A_g` alone.
pub fn laurent_a(g: u32) -> PLaurent {
    laurent_series(g).a(g).clone()
}

/// `C_g` alone.
pub fn laurent_c(g: u32) -> PLaurent {
    laurent_series(g).c(g).clone()
}

/// Reassembles `Σ_n χ₂^S(M_{g,n})` for `n ≤ max_weight` from the Laurent
/// decomposition, expanding each `P_d^{-1}` only at the end.
pub fn genus_slice(ac: &LaurentSeriesAC, g: u32, max_weight: u32) -> SymPoly {
    assert!(g <= ac.g_max(), "genus {g} beyond the computed range");
    let n = max_weight;
    let mut log_sum = SymPoly::zero(n);
    let mut log_sum2 = SymPoly::zero(n);
    for l in 1..=n.max(1) as usize {
        let m = mu(l as u64) as i64;
        if m == 0 {
            continue;
        }
        let c = Q::new(m.into(), (l as i64).into());
        log_sum.add_scaled(&ring::log1p(&SymPoly::p(l, n)), &c);
        log_sum2.add_scaled(&ring::log1p(&SymPoly::p(2 * l, n)), &c);
    }
    let diff = |s: &PLaurentSeries| {
        let mut d = s.coeff(g as usize).expand(n);
        if g > 0 {
            d = &d - &s.coeff(g as usize - 1).expand(n);
        }
        d
    };
    let mut out = &(&log_sum * &diff(&ac.a)) + &diff(&ac.c);
    let one = SymPoly::one(n);
    let big_p1 = &SymPoly::p(1, n) + &one;
    let half = Q::new(1.into(), 2.into());
    let logs = &big_p1 * &(&(&log_sum * &log_sum) + &log_sum2).scale(&half);
    match g {
        0 => {
            let big_p2 = &SymPoly::p(2, n) + &one;
            let sq = &(&big_p1 * &big_p1) + &big_p2;
            out = &(&out - &logs) - &big_p1;
            out = &out + &sq.scale(&half);
        }
        1 => out = &(&out + &logs) - &one,
        2 => out = &out + &big_p1,
        _ => {}
    }
    out
}

fn shape_error(what: &str, g: u32, m: &LExp, why: &str) -> crate::Error {
    consistency!("{what}_{g}: term {} violates {why}", PLaurent::monomial(m.clone(), Q::one()))
}

fn check_degree(what: &str, g: u32, m: &LExp) -> Result<()> {
    if m.degree() != 1 - g as i64 {
        return Err(shape_error(what, g, m, "the degree constraint"));
    }
    Ok(())
}

/// Checks the admissible monomial shapes of `A_g`: at most one
/// denominator `P_ℓ^c`, numerator indices dividing `ℓ`, at most `c+1`
/// numerator factors, and degree `1 - g`.
pub fn check_shape_a(g: u32, a: &PLaurent) -> Result<()> {
    for (m, _) in a.iter() {
        check_degree("A", g, m)?;
        let den = m.denominator();
        let num = m.numerator();
        let nb: u32 = num.iter().map(|&(_, b)| b as u32).sum();
        match den.as_slice() {
            [] => {
                if nb > 1 {
                    return Err(shape_error("A", g, m, "the numerator count"));
                }
            }
            [(l, c)] => {
                if num.iter().any(|&(d, _)| l % d != 0) {
                    return Err(shape_error("A", g, m, "divisibility"));
                }
                if nb > *c as u32 + 1 {
                    return Err(shape_error("A", g, m, "the numerator count"));
                }
            }
            _ => return Err(shape_error("A", g, m, "the single-denominator rule")),
        }
    }
    Ok(())
}

/// Checks the admissible monomial shapes of `C_g`: at most two
/// denominators `P_{ℓ1}^{c1} P_{ℓ2}^{c2}`, numerator indices dividing `ℓ1`
/// or `ℓ2`, at most `c1+c2+1` numerator factors, and degree `1 - g`.
pub fn check_shape_c(g: u32, c: &PLaurent) -> Result<()> {
    for (m, _) in c.iter() {
        check_degree("C", g, m)?;
        let den = m.denominator();
        let num = m.numerator();
        let nb: u32 = num.iter().map(|&(_, b)| b as u32).sum();
        let total: u32 = den.iter().map(|&(_, c)| c as u32).sum();
        if den.len() > 2 {
            return Err(shape_error("C", g, m, "the two-denominator rule"));
        }
        if nb > total + 1 {
            return Err(shape_error("C", g, m, "the numerator count"));
        }
        if den.len() == 2 && num.iter().any(|&(d, _)| den.iter().all(|&(l, _)| l % d != 0)) {
            return Err(shape_error("C", g, m, "divisibility"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight2::{omega2_closed, Weight2Config};

    fn lp(terms: &[(&[i16], i64, i64)]) -> PLaurent {
        let mut out = PLaurent::zero();
        for (e, n, d) in terms {
            out.add_term(LExp::from_exponents(e), Q::new((*n).into(), (*d).into()));
        }
        out
    }

    #[test]
    fn genus_one() {
        let ac = laurent_series(1);
        // A_1 = 1/2 - P_1²/(2P_2)
        assert_eq!(ac.a(1), &lp(&[(&[], 1, 2), (&[2, -1], -1, 2)]));
        // C_1 = 1/2 + P_1²/(2P_2)
        assert_eq!(ac.c(1), &lp(&[(&[], 1, 2), (&[2, -1], 1, 2)]));
        assert!(ac.a(0).is_zero() && ac.c(0).is_zero());
    }

    #[test]
    fn slices_match_closed_form() {
        let (g_max, n_max) = (6, 4);
        let ac = laurent_series(g_max);
        let om = omega2_closed(&Weight2Config::new(g_max, n_max)).unwrap();
        for g in 0..=g_max {
            let slice = genus_slice(&ac, g, n_max);
            let closed = om.series.coeff(g as i32, 0);
            assert_eq!(slice, closed, "genus {g}");
        }
    }

    #[test]
    fn shapes_hold() {
        let ac = laurent_series(8);
        for g in 1..=8 {
            check_shape_a(g, ac.a(g)).unwrap();
            check_shape_c(g, ac.c(g)).unwrap();
        }
    }

    #[test]
    fn shape_violation_detected() {
        let bad = lp(&[(&[3, -1], 1, 1)]);
        assert!(check_shape_a(1, &bad).is_err());
    }
}
