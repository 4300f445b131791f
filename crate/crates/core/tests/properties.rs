//! Property-based invariants of the series and symmetric-function layers.

use proptest::prelude::*;
use w2chi_core::series::{ring, PExp, SymPoly, Q};
use w2chi_core::symfunc::arith::{mu, divisors};
use w2chi_core::symfunc::{hall_inner, partitions, plethysm_sym, to_schur};

const W: u32 = 5;

/// Random polynomial of weight ≤ `W`; `min_weight` 1 forces a zero
/// constant term.
fn sympoly(min_weight: u32) -> impl Strategy<Value = SymPoly> {
    let monomials: Vec<PExp> = (min_weight..=W)
        .flat_map(|n| partitions(n).into_iter().map(|p| p.to_pexp()))
        .collect();
    let k = monomials.len();
    prop::collection::vec((0..k, -4i64..=4, 1i64..=3), 0..6).prop_map(move |terms| {
        let mut f = SymPoly::zero(W);
        for (i, num, den) in terms {
            f.add_term(monomials[i].clone(), Q::new(num.into(), den.into()));
        }
        f
    })
}

fn homogeneous(n: u32) -> impl Strategy<Value = SymPoly> {
    let monomials: Vec<PExp> = partitions(n).into_iter().map(|p| p.to_pexp()).collect();
    let k = monomials.len();
    prop::collection::vec((0..k, -5i64..=5), 0..5).prop_map(move |terms| {
        let mut f = SymPoly::zero(n);
        for (i, c) in terms {
            f.add_term(monomials[i].clone(), Q::from_integer(c.into()));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_a_commutative_ring(a in sympoly(0), b in sympoly(0), c in sympoly(0)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn truncation_commutes_with_products(a in sympoly(0), b in sympoly(0), k in 0u32..=W) {
        prop_assert_eq!((&a * &b).truncate(k), &a.truncate(k) * &b.truncate(k));
    }

    #[test]
    fn exp_and_log_are_inverse(x in sympoly(1)) {
        let e = &ring::exp(&x) - &SymPoly::one(W);
        prop_assert_eq!(ring::log1p(&e), x);
    }

    #[test]
    fn plethysm_is_associative(f in sympoly(1), g in sympoly(1), h in sympoly(1)) {
        let left = plethysm_sym(&plethysm_sym(&f, &g).unwrap(), &h).unwrap();
        let right = plethysm_sym(&f, &plethysm_sym(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hall_inner_product_is_symmetric(f in sympoly(0), g in sympoly(0)) {
        prop_assert_eq!(hall_inner(&f, &g), hall_inner(&g, &f));
    }

    #[test]
    fn regular_character_round_trips(n in 1u32..=6) {
        let pn = SymPoly::monomial(PExp::var_pow(1, n as u16), Q::from_integer(1.into()), n);
        let s = to_schur(&pn, n).unwrap();
        prop_assert_eq!(s.to_power_sums(n), pn);
    }

    #[test]
    fn schur_round_trip_on_homogeneous_integer_combinations(f in homogeneous(4)) {
        // multiply by 4! so every Schur coefficient is an integer
        let g = f.scale(&Q::from_integer(24.into()));
        if let Ok(s) = to_schur(&g, 4) {
            prop_assert_eq!(s.to_power_sums(4), g);
        }
    }

    #[test]
    fn moebius_is_multiplicative(a in 1u64..200, b in 1u64..200) {
        if num_integer::gcd(a, b) == 1 {
            prop_assert_eq!(mu(a * b) as i32, mu(a) as i32 * mu(b) as i32);
        }
        let s: i64 = divisors(a).into_iter().map(|d| mu(d) as i64).sum();
        prop_assert_eq!(s, i64::from(a == 1));
    }
}
