//! The Hall-type inner product on power-sum polynomials.

use num_traits::Zero;

use super::partition::z_factor;
use crate::series::{SymPoly, Q};

/// `⟨p^i, p^j⟩ = δ_ij ∏_k k^{i_k} i_k!`, extended bilinearly.
pub fn hall_inner(f: &SymPoly, g: &SymPoly) -> Q {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = Q::zero();
    for (m, c) in small.iter() {
        let d = large.coeff(m);
        if !d.is_zero() {
            acc += c * d * Q::from_integer(z_factor(m));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, PExp};

    fn mono(parts: &[u32]) -> SymPoly {
        SymPoly::monomial(PExp::from_parts(parts), q(1), 8)
    }

    #[test]
    fn normalizations() {
        assert_eq!(hall_inner(&mono(&[1, 1]), &mono(&[1, 1])), q(2));
        assert_eq!(hall_inner(&mono(&[2]), &mono(&[1, 1])), q(0));
        assert_eq!(hall_inner(&mono(&[2]), &mono(&[2])), q(2));
        assert_eq!(hall_inner(&mono(&[3, 2, 2]), &mono(&[3, 2, 2])), q(24));
    }
}
