//! The `n = 0` specialization: `Σ_g χ₂(M_g) ħ^g`.
//!
//! With no marked points every `P_d` equals 1, so all block series have
//! integer coefficients except for the Bernoulli weights. Powers of
//! `W_m = m ħ^m / (1 + X_m)` are kept as dense integer series and the
//! Bernoulli-weighted sums are accumulated in rationals.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{consistency, Result};
use crate::series::{Series1, Q, Z};
use crate::symfunc::arith::{bernoulli_table, divisors, mu};

/// Truncated product of dense integer series.
fn zmul(a: &[Z], b: &[Z], prec: usize) -> Vec<Z> {
    let mut out = vec![Z::zero(); prec + 1];
    for (i, x) in a.iter().enumerate().take(prec + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(prec + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `(1 + x)^{-1}` for an integer series `x` with zero constant term.
fn zinv1p(x: &[Z], prec: usize) -> Vec<Z> {
    let mut out = vec![Z::zero(); prec + 1];
    out[0] = Z::one();
    for t in 1..=prec {
        let mut s = Z::zero();
        for i in 1..=t.min(x.len() - 1) {
            if !x[i].is_zero() {
                s += &x[i] * &out[t - i];
            }
        }
        out[t] = -s;
    }
    out
}

/// `X_m` at `P_d = 1`: `Σ_{d|m, d≠m} μ(m/d) ħ^{m-d}`.
fn x_block(m: usize, prec: usize) -> Vec<Z> {
    let mut x = vec![Z::zero(); prec + 1];
    for d in divisors(m as u64) {
        let d = d as usize;
        if d != m && m - d <= prec {
            x[m - d] += mu((m / d) as u64);
        }
    }
    x
}

/// Logarithm-free block sums at `P_d = 1`:
/// `log(1+X_m) - Σ_k (B_k/k) W_m^k` and `-Σ_k B_{k-1} W_m^k`.
fn blocks(m: usize, prec: usize, bern: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let x = x_block(m, prec);
    let inv = zinv1p(&x, prec);
    // log(1+X) = ∫ X' / (1+X)
    let dx: Vec<Z> = (1..=prec).map(|t| &x[t] * Z::from(t)).collect();
    let ratio = zmul(&dx, &inv, prec.saturating_sub(1));
    let mut psi0 = vec![Q::zero(); prec + 1];
    let mut psi1 = vec![Q::zero(); prec + 1];
    for t in 1..=prec {
        psi0[t] = Q::new(ratio[t - 1].clone(), Z::from(t));
    }
    let mut w = vec![Z::zero(); prec + 1];
    for t in m..=prec {
        w[t] = &inv[t - m] * Z::from(m);
    }
    let mut wk = w.clone();
    for k in 1..=prec / m {
        let c0 = -&bern[k] / Q::from_integer(Z::from(k));
        let c1 = -&bern[k - 1];
        for t in m * k..=prec {
            if wk[t].is_zero() {
                continue;
            }
            let v = Q::from_integer(wk[t].clone());
            if !c0.is_zero() {
                psi0[t] += &c0 * &v;
            }
            if !c1.is_zero() {
                psi1[t] += &c1 * &v;
            }
        }
        if m * (k + 1) <= prec {
            wk = zmul(&wk, &w, prec);
        }
    }
    (psi0, psi1)
}

/// `χ₂(M_g)` for `0 ≤ g ≤ g_max`, as exact integers.
///
/// Fails with a consistency error if any coefficient is non-integral or
/// the unstable genera `0, 1` do not vanish.
pub fn chi2_mg_series(g_max: u32) -> Result<Vec<Z>> {
    let prec = g_max as usize;
    let cut = (2 * prec).max(1);
    let bern = bernoulli_table(prec + 1);
    let all = crate::par::map((1..=cut).collect(), |m| blocks(m, prec, &bern));

    let mut s = vec![Q::zero(); prec + 1];
    let mut rest = vec![Q::zero(); prec + 1];
    if prec >= 1 {
        s[1] = -Q::one();
    }
    if prec >= 2 {
        rest[2] = -Q::one();
    }
    for l in 1..=cut {
        let m = mu(l as u64) as i64;
        if m == 0 {
            continue;
        }
        let c = Q::new(m.into(), (l as i64).into());
        let c2 = &c * &c;
        for t in 0..=prec {
            s[t] += &c * &all[l - 1].0[t];
            rest[t] += &c2 * &all[l - 1].1[t];
            if 2 * l <= cut {
                rest[t] += &c * &all[2 * l - 1].0[t];
            }
        }
    }
    let s = Series1::from_coeffs(s, prec);
    let rest = Series1::from_coeffs(rest, prec);
    let bracket = &s.mul(&s) + &rest;
    // (ħ - 1)/2 · bracket - ħ + ħ²
    let half = Q::new(1.into(), 2.into());
    let mut omega = &bracket.shift(1).scale(&half) - &bracket.scale(&half);
    omega = &omega - &Series1::monomial(1, Q::one(), prec);
    omega = &omega + &Series1::monomial(2, Q::one(), prec);

    let mut out = Vec::with_capacity(prec + 1);
    for (g, c) in omega.coeffs().iter().enumerate() {
        if !c.is_integer() {
            return Err(consistency!("χ₂(M_{g}) = {c} is not an integer"));
        }
        if g < 2 && !c.is_zero() {
            return Err(consistency!("unstable genus {g} has χ₂ = {c}"));
        }
        out.push(c.to_integer());
    }
    Ok(out)
}

/// Signs of a sequence of integers: `-1`, `0` or `1`.
pub fn sign_sequence(values: &[Z]) -> Vec<i8> {
    values
        .iter()
        .map(|v| match v.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        })
        .collect()
}

/// Genera `g` in `lo ..= hi` where `χ₂(M_g)` does not have the sign
/// `-, -, +, +` according to `g ≡ 0, 1, 2, 3 (mod 4)`.
pub fn sign_pattern_violations(values: &[Z], lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi)
        .filter(|&g| {
            let expected_positive = g.mod_floor(&4) >= 2;
            let v = &values[g as usize];
            v.is_zero() || (v.is_positive() != expected_positive)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::PExp;
    use crate::weight2::{omega2_closed, Weight2Config};

    #[test]
    fn small_genus() {
        let v = chi2_mg_series(12).unwrap();
        let expected = [0, 0, 0, 0, 0, 0, 0, 0, -1, 4, -4, 4, -7];
        for (g, e) in expected.iter().enumerate() {
            assert_eq!(v[g], Z::from(*e), "genus {g}");
        }
    }

    #[test]
    fn agrees_with_full_series_at_zero_points() {
        let g_max = 10;
        let v = chi2_mg_series(g_max).unwrap();
        let om = omega2_closed(&Weight2Config::new(g_max, 0)).unwrap();
        for g in 0..=g_max {
            let c = om.series.coeff_of(g as i32, 0, &PExp::one());
            assert_eq!(Q::from_integer(v[g as usize].clone()), c, "genus {g}");
        }
    }

    #[test]
    fn integer_inverse() {
        let x = vec![Z::zero(), Z::from(-1), Z::zero()];
        let inv = zinv1p(&x, 4);
        assert!(inv.iter().all(|c| c == &Z::one()));
    }

    #[test]
    fn pattern_checker() {
        let vals: Vec<Z> = [-1, -1, 1, 1, -1, 2, 1, 1].iter().map(|&v| Z::from(v)).collect();
        assert_eq!(sign_pattern_violations(&vals, 0, 7), vec![5]);
        assert_eq!(sign_sequence(&vals)[5], 1);
    }
}
