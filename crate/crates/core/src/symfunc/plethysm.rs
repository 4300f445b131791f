//! Plethysm of (graded) symmetric functions.
//!
//! `(f₁+f₂)∘g = f₁∘g + f₂∘g`, `(f₁f₂)∘g = (f₁∘g)(f₂∘g)` and
//! `p_n∘g = g(u^n, p_n, p_{2n}, …)`: inside `g` the grading variable and the
//! marker `w` are raised to the `n`-th power. Gradings of the outer `f` are
//! passive scalars.

use std::collections::HashMap;

use crate::error::{usage, Result};
use crate::series::{MSeries, PExp, SymPoly, Q};

/// `f ∘ g`. Requires `g` to have no weight-0 part, which makes the
/// composition of a weight-truncated `f` well defined.
pub fn plethysm(f: &MSeries, g: &MSeries) -> Result<MSeries> {
    if g.iter().any(|(_, p)| p.min_weight() == Some(0)) {
        return Err(usage!(
            "plethysm f∘g needs g without weight-0 terms (constant part makes the composition infinite)"
        ));
    }
    let n = f.max_weight().min(g.max_weight());
    let mut dilated: HashMap<usize, MSeries> = HashMap::new();
    let mut powers: HashMap<(usize, u16), MSeries> = HashMap::new();
    let mut out = f.zero_like().truncate(f.t_max().min(g.t_max()), n);
    for (&(t, k), poly) in f.iter() {
        for (m, c) in poly.iter() {
            let mut term = f.monomial_like(t, k, PExp::one(), c.clone());
            for (d, e) in m.iter() {
                if !powers.contains_key(&(d, e)) {
                    let base = dilated.entry(d).or_insert_with(|| g.dilate(d)).clone();
                    let mut acc = g.one_like();
                    for _ in 0..e {
                        acc = acc.checked_mul(&base)?;
                    }
                    powers.insert((d, e), acc);
                }
                term = term.checked_mul(&powers[&(d, e)])?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.checked_add(&term)?;
        }
    }
    Ok(out)
}

/// Ungraded plethysm of plain polynomials.
pub fn plethysm_sym(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    use crate::series::Grading;
    let n = f.max_weight().min(g.max_weight());
    let z = MSeries::zero_power(Grading::U, 0, n);
    let fs = z.from_sympoly_like(0, 0, f);
    let gs = z.from_sympoly_like(0, 0, g);
    Ok(plethysm(&fs, &gs)?.coeff(0, 0))
}

/// `p_n ∘ g` for a polynomial `g`: `p_d ↦ p_{nd}`.
pub fn pn_plethysm(n: usize, g: &SymPoly) -> SymPoly {
    g.dilate(n)
}

/// `h_2 ∘ g = (g² + p_2∘g) / 2`.
pub fn h2_plethysm(g: &SymPoly) -> SymPoly {
    let sq = g * g;
    let d = g.dilate(2);
    (&sq + &d).scale(&Q::new(1.into(), 2.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, Grading};

    #[test]
    fn p2_of_sum() {
        let g = &SymPoly::p(1, 6) + &SymPoly::p(3, 6);
        let p2 = SymPoly::p(2, 6);
        let r = plethysm_sym(&p2, &g).unwrap();
        assert_eq!(r, &SymPoly::p(2, 6) + &SymPoly::p(6, 6));
    }

    #[test]
    fn constant_inner_rejected() {
        let g = &SymPoly::one(4) + &SymPoly::p(1, 4);
        assert!(plethysm_sym(&SymPoly::p(1, 4), &g).is_err());
    }

    #[test]
    fn graded_dilation_of_u() {
        let z = MSeries::zero_power(Grading::U, 6, 4);
        let g = z.monomial_like(1, 0, PExp::var(1), q(1)); // u·p_1
        let f = z.monomial_like(0, 0, PExp::var(2), q(1)); // p_2
        let r = plethysm(&f, &g).unwrap();
        assert_eq!(r, z.monomial_like(2, 0, PExp::var(2), q(1)));
    }

    #[test]
    fn h2_matches_general_plethysm() {
        let g = &SymPoly::p(1, 6) + &SymPoly::monomial(PExp::from_parts(&[2, 1]), q(3), 6);
        let h2 = &(&SymPoly::monomial(PExp::from_parts(&[1, 1]), q(1), 6)
            + &SymPoly::p(2, 6))
            .scale(&Q::new(1.into(), 2.into()));
        assert_eq!(plethysm_sym(h2, &g).unwrap(), h2_plethysm(&g));
    }
}
