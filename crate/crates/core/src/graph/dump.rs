//! Plain-text dump of enumerated generators.
//!
//! One line per class after a fixed header:
//! `V <internal> L <decorations> E <a-b ...> A <automorphisms>`, where
//! decorations are `1..n`, `w` (ω) and `e` (ε) in vertex order.

use std::fmt::Write;

use super::enumerate::GraphClass;

pub const DUMP_HEADER: &str = "# w2chi graph dump v1";

/// Renders classes in the dump format, sorted for reproducibility.
pub fn dump_classes(classes: &[GraphClass]) -> String {
    let mut lines: Vec<String> = classes
        .iter()
        .map(|c| {
            let g = &c.graph;
            let mut s = String::new();
            let legs: Vec<String> = g.legs.iter().map(|l| l.to_string()).collect();
            let edges: Vec<String> = g.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            write!(
                s,
                "V {} L {} E {} A {}",
                g.internal,
                legs.join(","),
                edges.join(" "),
                c.automorphisms
            )
            .expect("write to string");
            s
        })
        .collect();
    lines.sort();
    let mut out = String::from(DUMP_HEADER);
    out.push('\n');
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_x_generators;

    #[test]
    fn dump_starts_with_header_and_lists_every_class() {
        let classes = enumerate_x_generators(0, 3).unwrap();
        let text = dump_classes(&classes);
        assert!(text.starts_with(DUMP_HEADER));
        assert_eq!(text.lines().count(), classes.len() + 1);
    }
}
