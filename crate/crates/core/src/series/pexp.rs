//! Exponent vectors for power-sum monomials `p_1^{e_1} p_2^{e_2} ...`.

use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a power-sum monomial; slot `i` holds the exponent of
/// `p_{i+1}`. Trailing zeros are always trimmed, so equal monomials compare
/// equal structurally.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PExp(SmallVec<[u16; 8]>);

impl PExp {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// The monomial `p_d`.
    pub fn var(d: usize) -> Self {
        Self::var_pow(d, 1)
    }

    /// The monomial `p_d^e`.
    pub fn var_pow(d: usize, e: u16) -> Self {
        assert!(d >= 1, "power sums are indexed from 1");
        let mut v = SmallVec::from_elem(0, d);
        v[d - 1] = e;
        let mut out = PExp(v);
        out.trim();
        out
    }

    /// Builds from a dense exponent list `[e_1, e_2, ...]`.
    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut out = PExp(exps.iter().copied().collect());
        out.trim();
        out
    }

    /// Builds the cycle-type monomial of a partition (`[2,1,1]` ↦ `p_2 p_1^2`).
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut v: SmallVec<[u16; 8]> = SmallVec::new();
        for &p in parts {
            assert!(p >= 1, "partition parts must be positive");
            let i = p as usize - 1;
            if v.len() <= i {
                v.resize(i + 1, 0);
            }
            v[i] += 1;
        }
        PExp(v)
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    /// Exponent of `p_d`.
    pub fn get(&self, d: usize) -> u16 {
        self.0.get(d.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Dense exponent slice, slot `i` for `p_{i+1}`.
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Symmetric-function degree `Σ d·e_d`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e as u32)
            .sum()
    }

    /// Total number of factors `Σ e_d` (the length of the cycle type).
    pub fn length(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Iterates over `(d, e_d)` with `e_d > 0`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    /// Product of monomials (exponent addition).
    pub fn mul(&self, other: &PExp) -> PExp {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += *b;
        }
        PExp(v)
    }

    /// The monomial with every `p_d` replaced by `p_{n d}`.
    pub fn dilate(&self, n: usize) -> PExp {
        assert!(n >= 1);
        if n == 1 || self.is_one() {
            return self.clone();
        }
        let mut v = SmallVec::from_elem(0, self.0.len() * n);
        for (d, e) in self.iter() {
            v[d * n - 1] = e;
        }
        PExp(v)
    }

    /// Parts of the associated partition, in decreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.length() as usize);
        for (i, &e) in self.0.iter().enumerate().rev() {
            for _ in 0..e {
                out.push(i as u32 + 1);
            }
        }
        out
    }
}

impl fmt::Debug for PExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (d, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "p{d}")?;
            } else {
                write!(f, "p{d}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimmed_equality() {
        assert_eq!(PExp::from_exponents(&[1, 0, 0]), PExp::var(1));
        assert_eq!(PExp::from_exponents(&[0, 0]), PExp::one());
    }

    #[test]
    fn weight_and_length() {
        let m = PExp::from_parts(&[3, 2, 2, 1]);
        assert_eq!(m.weight(), 8);
        assert_eq!(m.length(), 4);
        assert_eq!(m.parts(), vec![3, 2, 2, 1]);
        assert_eq!(m.get(2), 2);
        assert_eq!(m.get(5), 0);
    }

    #[test]
    fn product_adds_exponents() {
        let a = PExp::from_parts(&[1, 1]);
        let b = PExp::from_parts(&[3]);
        assert_eq!(a.mul(&b), PExp::from_parts(&[3, 1, 1]));
        assert_eq!(b.mul(&a), PExp::from_parts(&[3, 1, 1]));
    }

    #[test]
    fn dilation_scales_indices() {
        let m = PExp::from_parts(&[3, 1]);
        assert_eq!(m.dilate(2), PExp::from_parts(&[6, 2]));
        assert_eq!(m.dilate(2).weight(), 2 * m.weight());
    }

    #[test]
    fn display() {
        assert_eq!(PExp::from_parts(&[2, 1, 1]).to_string(), "p1^2*p2");
        assert_eq!(PExp::one().to_string(), "1");
    }
}
