//! Exhaustive enumeration of generators up to isomorphism.
//!
//! Generators are built from a leg layout by attaching every leg either to
//! an internal vertex or to another leg, then adding a simple graph on the
//! internal vertices. Isomorphic copies are merged through
//! [`canonical_edges`]; classes with an orientation-reversing automorphism
//! are dropped, since they vanish in the oriented span.

use std::collections::BTreeMap;

use super::canon::{canonical_edges, induced_edge_sign, map_edges, relabelings};
use super::decorated::{DecoratedGraph, Decoration};
use crate::error::{usage, Result};

/// Which complex is being enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Generators of `X_{g,n}`: connected after joining `ε`/`ω`, two
    /// `ω`-legs, degree = structural edges + 1.
    X,
    /// Generators of `fǦ`: possibly disconnected, every component has a
    /// numbered leg, degree = all edges, complexity = edges − internal.
    Fg,
}

impl Family {
    /// Whether an edge contributes to the orientation.
    pub fn oriented(&self, g: &DecoratedGraph, e: (u8, u8)) -> bool {
        match self {
            Family::X => g.is_structural(e),
            Family::Fg => true,
        }
    }

    pub fn degree(&self, g: &DecoratedGraph) -> usize {
        match self {
            Family::X => g.structural_edge_count() + 1,
            Family::Fg => g.edges.len(),
        }
    }
}

/// One isomorphism class of generators.
#[derive(Clone, Debug)]
pub struct GraphClass {
    pub graph: DecoratedGraph,
    /// Order of the automorphism group (relabelings fixing the graph).
    pub automorphisms: usize,
}

/// Largest internal-vertex count the enumerator accepts.
pub const MAX_INTERNAL: usize = 7;
/// Largest leg count the enumerator accepts.
pub const MAX_LEGS: usize = 12;

fn legs_layout(points: usize, omegas: usize, eps: usize) -> Vec<Decoration> {
    let mut legs: Vec<Decoration> = (1..=points).map(|j| Decoration::Num(j as u8)).collect();
    legs.extend(std::iter::repeat_n(Decoration::Omega, omegas));
    legs.extend(std::iter::repeat_n(Decoration::Eps, eps));
    legs
}

fn leg_pair_allowed(family: Family, a: Decoration, b: Decoration) -> bool {
    use Decoration::*;
    match family {
        Family::X => !matches!(
            (a, b),
            (Num(_), Num(_)) | (Omega, Omega) | (Omega, Eps) | (Eps, Omega)
        ),
        Family::Fg => true,
    }
}

/// Every way to give each leg its unique edge: to an internal vertex or to
/// another leg. Returns edge lists.
fn leg_attachments(family: Family, internal: usize, legs: &[Decoration]) -> Vec<Vec<(u8, u8)>> {
    fn rec(
        family: Family,
        internal: usize,
        legs: &[Decoration],
        i: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(u8, u8)>,
        out: &mut Vec<Vec<(u8, u8)>>,
    ) {
        if i == legs.len() {
            out.push(cur.clone());
            return;
        }
        if used[i] {
            rec(family, internal, legs, i + 1, used, cur, out);
            return;
        }
        let vi = (internal + i) as u8;
        for v in 0..internal {
            cur.push((v as u8, vi));
            rec(family, internal, legs, i + 1, used, cur, out);
            cur.pop();
        }
        for j in i + 1..legs.len() {
            if used[j] || !leg_pair_allowed(family, legs[i], legs[j]) {
                continue;
            }
            used[j] = true;
            cur.push((vi, (internal + j) as u8));
            rec(family, internal, legs, i + 1, used, cur, out);
            cur.pop();
            used[j] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; legs.len()];
    rec(family, internal, legs, 0, &mut used, &mut Vec::new(), &mut out);
    out
}

fn valid(family: Family, g: &DecoratedGraph) -> bool {
    let val = g.valences();
    if val[..g.internal].iter().any(|&v| v < 3) {
        return false;
    }
    match family {
        Family::X => g.joined_connected(),
        Family::Fg => {
            let (k, comp) = g.components(|_| false);
            let mut has_leg = vec![false; k];
            for v in g.internal..g.vertex_count() {
                has_leg[comp[v]] = true;
            }
            has_leg.into_iter().all(|b| b)
        }
    }
}

/// Enumerates classes for one leg layout and internal-vertex count with a
/// fixed number of edges.
fn enumerate_layout(
    family: Family,
    internal: usize,
    legs: &[Decoration],
    edges: usize,
) -> Vec<GraphClass> {
    let pairs: Vec<(u8, u8)> = (0..internal)
        .flat_map(|a| (a + 1..internal).map(move |b| (a as u8, b as u8)))
        .collect();
    let template = DecoratedGraph::new(internal, legs.to_vec(), Vec::new());
    let group = relabelings(&template);
    let mut seen: BTreeMap<Vec<(u8, u8)>, DecoratedGraph> = BTreeMap::new();
    for attach in leg_attachments(family, internal, legs) {
        if attach.len() > edges || edges - attach.len() > pairs.len() {
            continue;
        }
        let need = edges - attach.len();
        for mask in 0u32..(1 << pairs.len()) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let mut all = attach.clone();
            all.extend((0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]));
            let g = DecoratedGraph::new(internal, legs.to_vec(), all);
            if !valid(family, &g) {
                continue;
            }
            let key = canonical_edges(&g, &group);
            seen.entry(key.clone())
                .or_insert_with(|| DecoratedGraph::new(internal, legs.to_vec(), key));
        }
    }
    let mut out = Vec::new();
    for g in seen.into_values() {
        let mut auts = 0;
        let mut odd = false;
        for m in &group {
            if map_edges(&g.edges, m) == g.edges {
                auts += 1;
                if induced_edge_sign(&g, m, &g.edges, &|e| family.oriented(&g, e)) < 0 {
                    odd = true;
                }
            }
        }
        if !odd {
            out.push(GraphClass {
                graph: g,
                automorphisms: auts,
            });
        }
    }
    out
}

fn check_bounds(internal: usize, legs: usize) -> Result<()> {
    if internal > MAX_INTERNAL {
        return Err(usage!(
            "enumeration needs {internal} internal vertices (limit {MAX_INTERNAL})"
        ));
    }
    if legs > MAX_LEGS {
        return Err(usage!("enumeration needs {legs} legs (limit {MAX_LEGS})"));
    }
    Ok(())
}

/// Orientable isomorphism classes of generators of `X_{g,n}`.
///
/// With `k = #ε + 2` legs joined to one vertex, the genus is
/// `E − V − n`, and valence ≥ 3 at internal vertices gives
/// `V ≤ n + 2g − k`, which bounds the search.
pub fn enumerate_x_generators(g: u32, n: u32) -> Result<Vec<GraphClass>> {
    let (g, n) = (g as usize, n as usize);
    let family = Family::X;
    let mut out = Vec::new();
    let kmax = n + 2 * g;
    for k in 2..=kmax {
        let eps = k - 2;
        let vmax = n + 2 * g - k;
        check_bounds(vmax, n + k)?;
        let legs = legs_layout(n, 2, eps);
        for internal in 0..=vmax {
            let edges = internal + n + g;
            out.extend(enumerate_layout(family, internal, &legs, edges));
        }
    }
    Ok(out)
}

/// Orientable isomorphism classes of generators of `fǦ` with `r` numbered
/// legs and complexity `c = E − V`; valence ≥ 3 gives `V ≤ 2c − r`.
pub fn enumerate_fg(c: u32, r: u32) -> Result<Vec<GraphClass>> {
    let (c, r) = (c as usize, r as usize);
    let family = Family::Fg;
    if r > 2 * c {
        // valence ≥ 3 leaves no room for legs beyond 2c
        return Ok(Vec::new());
    }
    let vmax = 2 * c - r;
    check_bounds(vmax, r)?;
    let legs = legs_layout(r, 0, 0);
    let mut out = Vec::new();
    for internal in 0..=vmax {
        out.extend(enumerate_layout(family, internal, &legs, internal + c));
    }
    Ok(out)
}

/// Independent generate-and-filter count: all edge subsets of the right
/// size on the full vertex set, filtered by the generator conditions and
/// merged up to isomorphism. Only usable for very small cases.
pub fn brute_force_x_class_count(g: u32, n: u32) -> usize {
    let (g, n) = (g as usize, n as usize);
    let family = Family::X;
    let mut total = 0;
    for k in 2..=n + 2 * g {
        let legs = legs_layout(n, 2, k - 2);
        for internal in 0..=(n + 2 * g - k) {
            let edges = internal + n + g;
            let template = DecoratedGraph::new(internal, legs.clone(), Vec::new());
            let nv = template.vertex_count();
            let pairs: Vec<(u8, u8)> = (0..nv)
                .flat_map(|a| (a + 1..nv).map(move |b| (a as u8, b as u8)))
                .collect();
            let group = relabelings(&template);
            let mut classes: BTreeMap<Vec<(u8, u8)>, DecoratedGraph> = BTreeMap::new();
            let mut choose = Vec::new();
            subsets(pairs.len(), edges, 0, &mut choose, &mut |sel| {
                let e: Vec<(u8, u8)> = sel.iter().map(|&i| pairs[i]).collect();
                let gr = DecoratedGraph::new(internal, legs.clone(), e);
                let val = gr.valences();
                if val[internal..].iter().any(|&v| v != 1) {
                    return;
                }
                // leg-leg edges obey the same component rules
                for &(a, b) in &gr.edges {
                    if let (Some(x), Some(y)) = (gr.decoration(a as usize), gr.decoration(b as usize)) {
                        if !leg_pair_allowed(family, x, y) {
                            return;
                        }
                    }
                }
                if !valid(family, &gr) {
                    return;
                }
                let key = canonical_edges(&gr, &group);
                classes.entry(key).or_insert(gr);
            });
            for gr in classes.values() {
                let odd = group.iter().any(|m| {
                    map_edges(&gr.edges, m) == gr.edges
                        && induced_edge_sign(gr, m, &gr.edges, &|e| family.oriented(gr, e)) < 0
                });
                if !odd {
                    total += 1;
                }
            }
        }
    }
    total
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators_agree_on_class_counts() {
        for (g, n) in [(0, 3), (1, 2), (0, 2)] {
            let a = enumerate_x_generators(g, n).unwrap().len();
            let b = brute_force_x_class_count(g, n);
            assert_eq!(a, b, "({g},{n})");
        }
    }

    #[test]
    fn automorphism_orders_divide_group_order() {
        for c in enumerate_x_generators(1, 2).unwrap() {
            let gr = &c.graph;
            let group = relabelings(gr).len();
            assert_eq!(group % c.automorphisms, 0);
        }
    }

    #[test]
    fn fg_low_complexity() {
        // complexity 0, one leg: nothing
        assert!(enumerate_fg(0, 1).unwrap().is_empty());
        // complexity 0, no legs: the empty graph only
        let empty = enumerate_fg(0, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].graph.edges.is_empty());
    }
}
