//! Graphs with decorated external vertices.

use std::fmt;

/// Decoration of an external (univalent) vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    /// A numbered marking `1..=n`.
    Num(u8),
    /// An `ω`-leg.
    Omega,
    /// An `ε`-leg.
    Eps,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoration::Num(j) => write!(f, "{j}"),
            Decoration::Omega => f.write_str("w"),
            Decoration::Eps => f.write_str("e"),
        }
    }
}

/// A simple graph with `internal` unlabeled internal vertices (ids
/// `0..internal`) followed by one external vertex per leg (id
/// `internal + i` for `legs[i]`). Legs are stored in the order numbered
/// (ascending), then `ω`, then `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    pub internal: usize,
    pub legs: Vec<Decoration>,
    /// Edges `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(u8, u8)>,
}

impl DecoratedGraph {
    pub fn new(internal: usize, legs: Vec<Decoration>, mut edges: Vec<(u8, u8)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        DecoratedGraph {
            internal,
            legs,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.internal + self.legs.len()
    }

    /// Decoration of vertex `v`, or `None` if it is internal.
    pub fn decoration(&self, v: usize) -> Option<Decoration> {
        v.checked_sub(self.internal).map(|i| self.legs[i])
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertex_count()];
        for &(a, b) in &self.edges {
            val[a as usize] += 1;
            val[b as usize] += 1;
        }
        val
    }

    /// True if the edge does not touch a numbered external vertex.
    pub fn is_structural(&self, e: (u8, u8)) -> bool {
        ![e.0, e.1]
            .iter()
            .any(|&v| matches!(self.decoration(v as usize), Some(Decoration::Num(_))))
    }

    pub fn structural_edge_count(&self) -> usize {
        self.edges.iter().filter(|&&e| self.is_structural(e)).count()
    }

    pub fn count(&self, d: Decoration) -> usize {
        self.legs.iter().filter(|&&l| l == d).count()
    }

    /// Number of numbered legs.
    pub fn points(&self) -> usize {
        self.legs
            .iter()
            .filter(|l| matches!(l, Decoration::Num(_)))
            .count()
    }

    /// Connected components as a vertex → component-id map, after
    /// identifying all vertices for which `merge` returns true.
    pub fn components(&self, merge: impl Fn(usize) -> bool) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let merged: Vec<usize> = (0..n).filter(|&v| merge(v)).collect();
        for w in merged.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
        for &(a, b) in &self.edges {
            union(&mut parent, a as usize, b as usize);
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let mut comp = vec![0; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            comp[v] = ids[r];
        }
        (next, comp)
    }

    /// True if `ε`/`ω` vertices identified into one make a connected graph.
    pub fn joined_connected(&self) -> bool {
        let (k, _) = self.components(|v| {
            matches!(
                self.decoration(v),
                Some(Decoration::Eps) | Some(Decoration::Omega)
            )
        });
        k == 1
    }
}
