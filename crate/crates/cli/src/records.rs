//! Output records and their JSON/CSV encodings.
//!
//! Coefficients are exact: integers that fit in `i64` are written as JSON
//! numbers, everything else as a `"num/den"` (or `"num"`) string.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use w2chi_core::series::{SymPoly, Q};
use w2chi_core::symfunc::to_schur;

use crate::error::CliResult;

/// Basis in which a cell is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Schur functions `s_λ`.
    Schur,
    /// Power-sum monomials `p_λ`.
    Power,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Schur => "schur",
            Basis::Power => "power",
        })
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "schur" => Ok(Basis::Schur),
            "power" => Ok(Basis::Power),
            _ => Err(format!("unknown basis {s:?}")),
        }
    }
}

/// An exact rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub Q);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Ok(i) = i64::try_from(self.0.numer()) {
                return s.serialize_i64(i);
            }
        }
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;
        impl Visitor<'_> for CoeffVisitor {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"num/den\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coeff, E> {
                Ok(Coeff(Q::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coeff, E> {
                Ok(Coeff(Q::from_integer(v.into())))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coeff, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(CoeffVisitor)
    }
}

impl FromStr for Coeff {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Q::from_str(s.trim())
            .map(Coeff)
            .map_err(|e| format!("invalid rational {s:?}: {e}"))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One basis element with its coefficient; `partition` is decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Vec<u32>,
    pub coeff: Coeff,
}

/// The `(genus, points)` cell of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub genus: u32,
    pub points: u32,
    pub basis: Basis,
    pub terms: Vec<Term>,
}

impl OutputRecord {
    /// Expands a weight-`points` cell in the requested basis; terms are
    /// sorted by partition.
    pub fn from_cell(genus: u32, points: u32, cell: &SymPoly, basis: Basis) -> CliResult<Self> {
        let mut terms: Vec<Term> = match basis {
            Basis::Schur => to_schur(cell, points)?
                .iter()
                .map(|(lam, c)| Term {
                    partition: lam.parts().to_vec(),
                    coeff: Coeff(Q::from_integer(c.clone())),
                })
                .collect(),
            Basis::Power => cell
                .weight_part(points)
                .iter()
                .map(|(m, c)| Term {
                    partition: m.parts(),
                    coeff: Coeff(c.clone()),
                })
                .collect(),
        };
        terms.sort_by(|a, b| a.partition.cmp(&b.partition));
        Ok(OutputRecord {
            genus,
            points,
            basis,
            terms,
        })
    }
}

/// Writes records as one JSON array.
pub fn write_json<W: Write>(records: &[OutputRecord], mut w: W) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut w, records)?;
    writeln!(w)?;
    Ok(())
}

pub fn read_json<R: Read>(r: R) -> CliResult<Vec<OutputRecord>> {
    Ok(serde_json::from_reader(r)?)
}

/// Flat CSV row: one per term, or one with empty `partition` and `coeff`
/// for a zero cell.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    genus: u32,
    points: u32,
    basis: Basis,
    partition: String,
    coeff: String,
}

fn partition_key(p: &[u32]) -> String {
    p.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Writes records as CSV with header `genus,points,basis,partition,coeff`.
/// The empty partition (constant term) is written as `-`.
pub fn write_csv<W: Write>(records: &[OutputRecord], w: W) -> CliResult<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in records {
        let row = |partition: String, coeff: String| CsvRow {
            genus: r.genus,
            points: r.points,
            basis: r.basis,
            partition,
            coeff,
        };
        if r.terms.is_empty() {
            out.serialize(row(String::new(), String::new()))?;
        }
        for t in &r.terms {
            let key = if t.partition.is_empty() {
                "-".to_string()
            } else {
                partition_key(&t.partition)
            };
            out.serialize(row(key, t.coeff.to_string()))?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> CliResult<Vec<OutputRecord>> {
    let mut reader = csv::Reader::from_reader(r);
    let mut records: Vec<OutputRecord> = Vec::new();
    for row in reader.deserialize() {
        let row: CsvRow = row?;
        let same = records
            .last()
            .is_some_and(|l| (l.genus, l.points, l.basis) == (row.genus, row.points, row.basis));
        if !same {
            records.push(OutputRecord {
                genus: row.genus,
                points: row.points,
                basis: row.basis,
                terms: Vec::new(),
            });
        }
        if row.coeff.is_empty() {
            continue;
        }
        let partition = match row.partition.trim() {
            "-" => Vec::new(),
            p => p
                .split_whitespace()
                .map(|x| x.parse::<u32>().map_err(|e| crate::error::CliError::Parse(e.to_string())))
                .collect::<CliResult<Vec<u32>>>()?,
        };
        let coeff = row.coeff.parse().map_err(crate::error::CliError::Parse)?;
        records.last_mut().expect("pushed above").terms.push(Term { partition, coeff });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_matches_documented_shape() {
        let r = OutputRecord::from_cell(1, 1, &SymPoly::p(1, 1), Basis::Schur).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"genus":1,"points":1,"basis":"schur","terms":[{"partition":[1],"coeff":1}]}"#
        );
    }

    #[test]
    fn rational_coefficients_are_strings() {
        let c = Coeff(Q::new((-3).into(), 4.into()));
        assert_eq!(serde_json::to_string(&c).unwrap(), r#""-3/4""#);
        let back: Coeff = serde_json::from_str(r#""-3/4""#).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn huge_integers_are_strings() {
        let big: Q = "60477318015911247931156".parse().unwrap();
        let s = serde_json::to_string(&Coeff(big.clone())).unwrap();
        assert_eq!(s, r#""60477318015911247931156""#);
        assert_eq!(serde_json::from_str::<Coeff>(&s).unwrap().0, big);
    }
}
