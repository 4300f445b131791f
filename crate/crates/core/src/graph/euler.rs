//! Equivariant Euler characteristics of enumerated complexes by character
//! traces: `χ = Σ_λ tr(σ_λ)·p^λ / z_λ`, one representative per cycle type.

use num_bigint::BigInt;

use super::canon::{induced_edge_sign, map_edges, relabelings};
use super::enumerate::{enumerate_fg, enumerate_x_generators, Family, GraphClass};
use crate::error::Result;
use crate::series::{PExp, SymPoly, Q};
use crate::symfunc::partition::{partitions, z_factor};

/// Vertex map permuting numbered legs by `sigma` (`sigma[j]` is the image
/// of leg index `j` among the numbered legs) and fixing everything else.
fn leg_permutation(class: &GraphClass, sigma: &[usize]) -> Vec<usize> {
    let g = &class.graph;
    let mut map: Vec<usize> = (0..g.vertex_count()).collect();
    for (j, &s) in sigma.iter().enumerate() {
        map[g.internal + j] = g.internal + s;
    }
    map
}

/// A permutation of `0..n` with the given cycle lengths.
fn representative(parts: &[u32]) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut start = 0;
    for &len in parts {
        let len = len as usize;
        for k in 0..len {
            sigma.push(start + (k + 1) % len);
        }
        start += len;
    }
    sigma
}

/// Trace of `sigma` on the span of one class: zero unless `sigma` maps the
/// class to itself, otherwise the orientation sign times `(−1)^degree`.
pub fn class_trace(family: Family, class: &GraphClass, sigma: &[usize]) -> i32 {
    let g = &class.graph;
    let s = leg_permutation(class, sigma);
    let moved = map_edges(&g.edges, &s);
    let group = relabelings(g);
    for h in &group {
        if map_edges(&moved, h) == g.edges {
            let m: Vec<usize> = s.iter().map(|&v| h[v]).collect();
            let sign = induced_edge_sign(g, &m, &g.edges, &|e| family.oriented(g, e));
            let parity = if family.degree(g) % 2 == 0 { 1 } else { -1 };
            return sign * parity;
        }
    }
    0
}

/// Character of the complex spanned by `classes` (all with `n` numbered
/// legs) as a power-sum polynomial of weight `n`.
pub fn equivariant_euler(family: Family, classes: &[GraphClass], n: u32) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for lambda in partitions(n) {
        let sigma = representative(lambda.parts());
        let trace: i64 = classes
            .iter()
            .map(|c| class_trace(family, c, &sigma) as i64)
            .sum();
        if trace != 0 {
            let m = PExp::from_parts(lambda.parts());
            let z = z_factor(&m);
            out.add_term(m, Q::new(BigInt::from(trace), z));
        }
    }
    out
}

/// Brute-force equivariant Euler characteristic of `X_{g,n}`. With the
/// `+ħ p_1`-type corrections handled by the caller, this is the `(g, n)`
/// cell of `ω₂`.
pub fn equivariant_euler_x(g: u32, n: u32) -> Result<SymPoly> {
    let classes = enumerate_x_generators(g, n)?;
    Ok(equivariant_euler(Family::X, &classes, n))
}

/// The `(g, n)` cell of `ω₂` by enumeration: the characteristic of
/// `X_{g,n}`, plus the explicit `p_1` term in genus one with one point.
pub fn omega2_cell_by_enumeration(g: u32, n: u32) -> Result<SymPoly> {
    let mut x = equivariant_euler_x(g, n)?;
    if (g, n) == (1, 1) {
        x = &x + &SymPoly::p(1, 1);
    }
    Ok(x)
}

/// Brute-force equivariant Euler characteristic of the complexity-`c`,
/// `r`-leg part of `fǦ`.
pub fn equivariant_euler_fg(c: u32, r: u32) -> Result<SymPoly> {
    let classes = enumerate_fg(c, r)?;
    Ok(equivariant_euler(Family::Fg, &classes, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_have_requested_cycles() {
        assert_eq!(representative(&[3, 1]), vec![1, 2, 0, 3]);
        assert_eq!(representative(&[2, 2]), vec![1, 0, 3, 2]);
    }
}
