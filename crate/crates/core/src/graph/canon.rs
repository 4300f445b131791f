//! Canonical forms and automorphisms by exhaustive relabeling.
//!
//! The relabeling group permutes internal vertices, `ε`-legs among
//! themselves and `ω`-legs among themselves; numbered legs are fixed.
//! Graphs here are tiny, so the group is enumerated outright.

use super::decorated::{DecoratedGraph, Decoration};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Sign of a permutation given as an image vector.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// The relabeling group of a graph layout, as vertex maps.
pub fn relabelings(g: &DecoratedGraph) -> Vec<Vec<usize>> {
    let vi = g.internal;
    let block = |d: Decoration| -> Vec<usize> {
        (0..g.legs.len())
            .filter(|&i| g.legs[i] == d)
            .map(|i| vi + i)
            .collect()
    };
    let omegas = block(Decoration::Omega);
    let eps = block(Decoration::Eps);
    let mut out = Vec::new();
    for pi in permutations(vi) {
        for po in permutations(omegas.len()) {
            for pe in permutations(eps.len()) {
                let mut map: Vec<usize> = (0..g.vertex_count()).collect();
                map[..vi].copy_from_slice(&pi);
                for (k, &v) in omegas.iter().enumerate() {
                    map[v] = omegas[po[k]];
                }
                for (k, &v) in eps.iter().enumerate() {
                    map[v] = eps[pe[k]];
                }
                out.push(map);
            }
        }
    }
    out
}

/// Image of the edge list under a vertex map, sorted.
pub fn map_edges(edges: &[(u8, u8)], map: &[usize]) -> Vec<(u8, u8)> {
    let mut out: Vec<(u8, u8)> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (map[a as usize] as u8, map[b as usize] as u8);
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// Lexicographically smallest relabeled edge list.
pub fn canonical_edges(g: &DecoratedGraph, group: &[Vec<usize>]) -> Vec<(u8, u8)> {
    group
        .iter()
        .map(|m| map_edges(&g.edges, m))
        .min()
        .expect("group contains the identity")
}

/// Sign of the permutation that a vertex map `map` (an isomorphism from
/// `g` onto a graph with edge list `target`) induces on the edges selected
/// by `counted`. `target` must equal `map_edges(&g.edges, map)` as a set.
pub fn induced_edge_sign(
    g: &DecoratedGraph,
    map: &[usize],
    target: &[(u8, u8)],
    counted: &dyn Fn((u8, u8)) -> bool,
) -> i32 {
    let selected: Vec<usize> = (0..g.edges.len()).filter(|&i| counted(g.edges[i])).collect();
    let pos = |e: (u8, u8)| target.binary_search(&e).expect("edge maps to an edge");
    let images: Vec<usize> = selected
        .iter()
        .map(|&i| {
            let (a, b) = g.edges[i];
            let (x, y) = (map[a as usize] as u8, map[b as usize] as u8);
            pos(if x < y { (x, y) } else { (y, x) })
        })
        .collect();
    // rank images among themselves
    let mut order: Vec<usize> = (0..images.len()).collect();
    order.sort_by_key(|&k| images[k]);
    let mut perm = vec![0; images.len()];
    for (rank, &k) in order.iter().enumerate() {
        perm[k] = rank;
    }
    perm_sign(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts_and_signs() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        let total: i32 = permutations(4).iter().map(|p| perm_sign(p)).sum();
        assert_eq!(total, 0);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
    }
}
