//! The Gamma-ratio pipeline against the closed form and the operad pairing.

use std::time::Instant;

use w2chi_core::operad::{chi_delta0, decorated_graph_euler};
use w2chi_core::pipeline::{chi_fg, compare_with_closed, UTrunc};
use w2chi_core::weight2::Weight2Config;

#[test]
fn pipeline_matches_closed_form_genus_eight_four_points() {
    let start = Instant::now();
    let diff = compare_with_closed(&Weight2Config::new(8, 4)).unwrap();
    assert_eq!(diff, None);
    eprintln!("pipeline cross-check: {:?}", start.elapsed());
}

#[test]
fn legless_graphs_match_decorated_pairing() {
    // Π U_ℓ(A_ℓ) = ⟨χ(Δ₀)∘χ(Lie₀), χ^u(BV₀^red)⟩ + 1
    let t_max = 4;
    let q_weight = 3;
    let paired = decorated_graph_euler(&chi_delta0(q_weight, 2 * t_max as u32), t_max).unwrap();
    let product = chi_fg(&UTrunc::new(t_max, q_weight)).unwrap();
    let lhs = &paired + &paired.one_like();
    assert_eq!(lhs.first_difference(&product), None);
}
