//! Brute-force graph enumeration against the generating functions.

use w2chi_core::graph::{
    dump_classes, enumerate_x_generators, equivariant_euler_fg, equivariant_euler_x,
};
use w2chi_core::pipeline::{chi_fg, UTrunc};
use w2chi_core::symfunc::{to_schur, SchurExpansion};
use w2chi_core::weight2::{omega2_closed, Weight2Config};

fn schur(s: &str) -> SchurExpansion {
    s.parse().unwrap()
}

#[test]
fn brute_force_matches_closed_form_on_small_cells() {
    let om = omega2_closed(&Weight2Config::new(3, 5)).unwrap();
    for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 2), (3, 1)] {
        let brute = equivariant_euler_x(g, n).unwrap();
        assert!((&brute - &om.cell(g, n)).is_zero(), "cell ({g},{n}): {brute:?}");
    }
}

#[test]
fn brute_force_named_cells() {
    let s4 = to_schur(&equivariant_euler_x(0, 4).unwrap(), 4).unwrap();
    assert_eq!(s4, schur("s_{4}"));
    let s5 = to_schur(&equivariant_euler_x(0, 5).unwrap(), 5).unwrap();
    assert_eq!(s5, schur("-s_{32}"));
}

#[test]
fn legless_graph_complex_matches_product_formula() {
    let f = chi_fg(&UTrunc::new(3, 5)).unwrap();
    for c in 0..=3u32 {
        for r in 0..=(2 * c).min(5) {
            let brute = equivariant_euler_fg(c, r).unwrap();
            let gf = f.coeff(c as i32, 0).weight_part(r);
            assert!((&brute - &gf).is_zero(), "complexity {c}, {r} legs");
        }
    }
}

#[test]
fn dump_of_three_point_genus_zero_generators_is_stable() {
    let text = dump_classes(&enumerate_x_generators(0, 3).unwrap());
    let golden = include_str!("data/graphs_0_3.txt");
    assert_eq!(text, golden);
}

#[test]
fn enumeration_bounds_are_enforced() {
    assert!(enumerate_x_generators(4, 4).is_err());
}
