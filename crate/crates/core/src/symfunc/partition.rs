//! Integer partitions and cycle types.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::series::{PExp, Z};

/// Weakly decreasing list of positive parts; the empty partition has size 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the given parts into decreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The power-sum monomial `p_λ = ∏ p_{λ_i}`.
    pub fn to_pexp(&self) -> PExp {
        PExp::from_parts(&self.0)
    }

    pub fn from_pexp(m: &PExp) -> Self {
        Partition(m.parts())
    }

    /// Cycle type `(i_1, i_2, …)` with `i_k` the number of parts equal to `k`.
    pub fn cycle_type(&self) -> Vec<u32> {
        self.to_pexp().exponents().iter().map(|&e| e as u32).collect()
    }
}

/// Centralizer order `z_i = ∏_k k^{i_k} i_k!` of a permutation with cycle
/// type `m`; also the Hall norm `⟨p^i, p^i⟩`.
pub fn z_factor(m: &PExp) -> Z {
    let mut z = Z::one();
    for (k, e) in m.iter() {
        for j in 1..=e as u64 {
            z *= Z::from(k as u64) * Z::from(j);
        }
    }
    z
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Renders the parts as in `s_{32}`: concatenated digits, or comma-separated
/// once a part reaches 10.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&p| p >= 10) { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(sep))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Parses the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, String> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| e.to_string()))
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| format!("unexpected character {c:?}")))
                .collect()
        };
        let parts = parts.map_err(|e| format!("invalid partition {s:?}: {e}"))?;
        let p = Partition::new(parts.clone());
        if p.0 != parts {
            return Err(format!("partition {s:?} is not in decreasing order"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn z_factors() {
        assert_eq!(z_factor(&PExp::from_parts(&[1, 1])), Z::from(2));
        assert_eq!(z_factor(&PExp::from_parts(&[2])), Z::from(2));
        assert_eq!(z_factor(&PExp::from_parts(&[2, 2, 1])), Z::from(8));
        assert_eq!(z_factor(&PExp::one()), Z::from(1));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v = vec![
            Partition::new(vec![4, 1]),
            Partition::new(vec![2, 1, 1, 1]),
            Partition::new(vec![2, 2, 1]),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["2111", "221", "41"]);
    }

    #[test]
    fn display_roundtrip() {
        for p in partitions(6) {
            assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
        let big = Partition::new(vec![12, 3]);
        assert_eq!(big.to_string(), "12,3");
        assert_eq!("12,3".parse::<Partition>().unwrap(), big);
        assert!("13".parse::<Partition>().is_err());
    }
}
