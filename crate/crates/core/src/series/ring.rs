//! Power-series functions shared by every truncated ring in the crate.
//!
//! Each ring implements [`NilRing`]; the functions here evaluate `exp`,
//! `log(1+x)`, `(1+x)^a` and `(1+x)^{-1}` by summing powers of `x` until
//! truncation kills them. Callers are responsible for checking that `x` is
//! topologically nilpotent (no unit constant term); the iteration cap only
//! guards against bugs.

use num_traits::{One, Zero};

use super::Q;

const MAX_ITERATIONS: usize = 1 << 16;

/// A commutative ring whose elements are truncated so that high enough
/// powers of a non-unit vanish.
pub trait NilRing: Clone {
    fn ring_one(&self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_add_scaled(&mut self, rhs: &Self, c: &Q);
    fn ring_is_zero(&self) -> bool;

    fn ring_scale(&self, c: &Q) -> Self {
        let mut out = self.ring_one();
        out.ring_add_scaled(&self.ring_one(), &-Q::one());
        out.ring_add_scaled(self, c);
        out
    }
}

/// `Σ_{j≥0} c_j x^j` for a coefficient sequence generated on demand.
pub fn power_sum_series<R: NilRing>(x: &R, mut coeff: impl FnMut(usize) -> Q) -> R {
    let mut acc = x.ring_one().ring_scale(&coeff(0));
    let mut power = x.clone();
    for j in 1..MAX_ITERATIONS {
        if power.ring_is_zero() {
            return acc;
        }
        let c = coeff(j);
        if !c.is_zero() {
            acc.ring_add_scaled(&power, &c);
        }
        power = power.ring_mul(x);
    }
    panic!("series argument is not nilpotent under truncation");
}

/// `exp(x)`.
pub fn exp<R: NilRing>(x: &R) -> R {
    let mut fact = Q::one();
    power_sum_series(x, |j| {
        if j > 0 {
            fact /= Q::from_integer(j.into());
        }
        fact.clone()
    })
}

/// `log(1+x) = -Σ_{j≥1} (-x)^j / j`.
pub fn log1p<R: NilRing>(x: &R) -> R {
    power_sum_series(x, |j| {
        if j == 0 {
            Q::zero()
        } else {
            let c = Q::new(1.into(), (j as i64).into());
            if j % 2 == 1 {
                c
            } else {
                -c
            }
        }
    })
}

/// `(1+x)^a = Σ binom(a, j) x^j` for rational `a`.
pub fn pow1p<R: NilRing>(x: &R, a: &Q) -> R {
    let mut c = Q::one();
    power_sum_series(x, |j| {
        if j > 0 {
            let jm1 = Q::from_integer(((j - 1) as i64).into());
            c = &c * (a - jm1) / Q::from_integer((j as i64).into());
        }
        c.clone()
    })
}

/// `(1+x)^{-1} = Σ (-x)^j`.
pub fn inv1p<R: NilRing>(x: &R) -> R {
    power_sum_series(x, |j| if j % 2 == 0 { Q::one() } else { -Q::one() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::univariate::Series1;
    use crate::series::q;

    #[test]
    fn exp_of_x() {
        let x = Series1::x(6);
        let e = exp(&x);
        assert_eq!(e.coeff(0), q(1));
        assert_eq!(e.coeff(3), Q::new(1.into(), 6.into()));
        assert_eq!(e.coeff(6), Q::new(1.into(), 720.into()));
    }

    #[test]
    fn pow1p_matches_inverse() {
        let x = &Series1::x(10) + &Series1::x(10).mul(&Series1::x(10));
        assert_eq!(pow1p(&x, &q(-1)), inv1p(&x));
    }

    #[test]
    fn log_exp_roundtrip() {
        let x = Series1::from_coeffs(vec![q(0), q(2), Q::new(1.into(), 3.into()), q(-5)], 12);
        let e = exp(&x);
        let back = log1p(&(&e - &Series1::one(12)));
        assert_eq!(back, x);
    }
}
