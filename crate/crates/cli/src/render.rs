//! Human-readable renderings of records.

use std::fmt::Write;

use w2chi_core::series::Q;

use crate::records::{Basis, OutputRecord, Term};

/// Partition label as in `s_{32}`: concatenated digits, comma-separated
/// once a part reaches 10.
pub fn partition_label(p: &[u32]) -> String {
    let sep = if p.iter().any(|&x| x >= 10) { "," } else { "" };
    p.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Renders a cell, e.g. `-s_{2111} - s_{221} + 2s_{41}` (Schur) or
/// `1/2*p_{11} - 1/2*p_{2}` (power sums); zero renders as `0`.
pub fn render_terms(basis: Basis, terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = &t.coeff.0;
        let neg = c < &Q::from_integer(0.into());
        let abs = if neg { -c.clone() } else { c.clone() };
        s.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let unit = abs == Q::from_integer(1.into());
        match basis {
            Basis::Schur => {
                if !unit {
                    write!(s, "{abs}").expect("write to string");
                }
                write!(s, "s_{{{}}}", partition_label(&t.partition)).expect("write to string");
            }
            Basis::Power => {
                if t.partition.is_empty() {
                    write!(s, "{abs}").expect("write to string");
                } else {
                    if !unit {
                        write!(s, "{abs}*").expect("write to string");
                    }
                    write!(s, "p_{{{}}}", partition_label(&t.partition))
                        .expect("write to string");
                }
            }
        }
    }
    s
}

/// Table with one row per genus and one column per number of points:
/// `| g\n | 0 | 1 | ... |`, each cell rendered with [`render_terms`].
pub fn render_table(records: &[OutputRecord]) -> String {
    let max_points = records.iter().map(|r| r.points).max().unwrap_or(0);
    let mut out = String::from("| g\\n |");
    for n in 0..=max_points {
        write!(out, " {n} |").expect("write to string");
    }
    out.push('\n');
    let mut genus = None;
    for r in records {
        if genus != Some(r.genus) {
            if genus.is_some() {
                out.push('\n');
            }
            write!(out, "| {} |", r.genus).expect("write to string");
            genus = Some(r.genus);
        }
        write!(out, " {} |", render_terms(r.basis, &r.terms)).expect("write to string");
    }
    if genus.is_some() {
        out.push('\n');
    }
    out
}

/// Parses a table produced by [`render_table`] back into `(g, n, cell)`
/// strings.
pub fn parse_table(text: &str) -> Vec<(u32, u32, String)> {
    let mut cells = Vec::new();
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line
            .trim()
            .trim_matches('|')
            .split('|')
            .map(str::trim)
            .collect();
        let Some((g, rest)) = fields.split_first() else {
            continue;
        };
        let Ok(g) = g.parse::<u32>() else { continue };
        for (n, c) in rest.iter().enumerate() {
            cells.push((g, n as u32, c.to_string()));
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::Coeff;

    fn term(p: &[u32], c: i64) -> Term {
        Term {
            partition: p.to_vec(),
            coeff: Coeff(Q::from_integer(c.into())),
        }
    }

    #[test]
    fn schur_cells() {
        let t = [term(&[2, 1, 1, 1], -1), term(&[2, 2, 1], -1), term(&[4, 1], 2)];
        assert_eq!(render_terms(Basis::Schur, &t), "-s_{2111} - s_{221} + 2s_{41}");
        assert_eq!(render_terms(Basis::Schur, &[]), "0");
    }

    #[test]
    fn power_cells() {
        let t = [term(&[], 3), term(&[1, 1], -1), term(&[2], 2)];
        assert_eq!(render_terms(Basis::Power, &t), "3 - p_{11} + 2*p_{2}");
    }
}
