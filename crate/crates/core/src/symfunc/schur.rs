//! Power-sum → Schur conversion through symmetric-group characters.
//!
//! Characters `χ^λ(μ)` come from the Murnaghan–Nakayama rule on beta-sets
//! (abacus form): removing a rim hook of length `r` moves a bead from `b` to
//! `b - r`, with sign `(-1)^{#beads strictly between}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::partition::{partitions, Partition};
use crate::error::{consistency, usage, Result};
use crate::series::{PExp, SymPoly, Q, Z};

/// Character table of `S_n`, indexed by partitions.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][μ] = χ^λ(μ)`.
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: u32) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| mn_character(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            partitions: parts,
            index,
            values,
        }
    }

    /// `χ^λ(μ)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }
}

/// Shared, lazily built character table of `S_n`.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().expect("character cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(CharacterTable::build(n));
    let mut guard = tables.lock().expect("character cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

fn mn_character(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return lambda.is_empty() as i64;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let k = lambda.len() as u32;
    // beta-set: λ_i + (k - i), i = 1..k, strictly decreasing
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + k - 1 - i as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let len = nb.len() as u32;
        let mut shape: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j as u32))
            .collect();
        shape.retain(|&p| p > 0);
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&shape, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Integer combination `Σ c_λ s_λ` of Schur functions.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Z>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Z) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Z::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Z {
        self.terms.get(lambda).cloned().unwrap_or_else(Z::zero)
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Z)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Back to the power-sum basis: `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
    pub fn to_power_sums(&self, max_weight: u32) -> SymPoly {
        let mut out = SymPoly::zero(max_weight);
        for (lam, c) in &self.terms {
            let n = lam.size();
            let table = character_table(n);
            for mu in &table.partitions {
                let m = mu.to_pexp();
                let chi = table.value(lam, mu);
                if chi != 0 {
                    let z = super::partition::z_factor(&m);
                    out.add_term(m, Q::new(c * Z::from(chi), z));
                }
            }
        }
        out
    }
}

/// Renders as `-s_{2111} - s_{221} + 2s_{41}`; zero renders as `0`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "s_{{{lam}}}")?;
        }
        Ok(())
    }
}

impl FromStr for SchurExpansion {
    type Err = String;

    /// Parses the [`Display`](fmt::Display) form (whitespace-insensitive).
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = SchurExpansion::zero();
        if compact == "0" {
            return Ok(out);
        }
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, after) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let s_pos = after
                .find("s_{")
                .ok_or_else(|| format!("expected s_{{...}} in {rest:?}"))?;
            let coeff = if s_pos == 0 {
                Z::one()
            } else {
                after[..s_pos]
                    .parse::<Z>()
                    .map_err(|e| format!("bad coefficient {:?}: {e}", &after[..s_pos]))?
            };
            let body = &after[s_pos + 3..];
            let close = body.find('}').ok_or("unterminated s_{")?;
            let lam: Partition = body[..close].parse()?;
            out.add_term(lam, coeff * Z::from(sign));
            rest = &body[close + 1..];
        }
        Ok(out)
    }
}

/// Expands a homogeneous weight-`n` symmetric function in the Schur basis:
/// `c_λ = ⟨f, s_λ⟩ = Σ_μ f_μ χ^λ(μ)`. Non-integral coefficients are an
/// internal-consistency failure.
pub fn to_schur(f: &SymPoly, n: u32) -> Result<SchurExpansion> {
    if let Some((m, _)) = f.iter().find(|(m, _)| m.weight() != n) {
        return Err(usage!("to_schur expects weight {n}, found monomial {m}"));
    }
    let table = character_table(n);
    let mut out = SchurExpansion::zero();
    let coeffs: Vec<(Partition, Q)> = f
        .iter()
        .map(|(m, c)| (Partition::from_pexp(m), c.clone()))
        .collect();
    for lam in &table.partitions {
        let mut c = Q::zero();
        for (mu, fm) in &coeffs {
            let chi = table.value(lam, mu);
            if chi != 0 {
                c += fm * Q::from_integer(Z::from(chi));
            }
        }
        if !c.denom().is_one() {
            return Err(consistency!(
                "non-integral Schur coefficient {c} for s_{{{lam}}}"
            ));
        }
        out.add_term(lam.clone(), c.numer().clone());
    }
    Ok(out)
}

/// Dimension of the irreducible representation `λ`, i.e. `χ^λ(1^n)`.
pub fn dimension(lambda: &Partition) -> i64 {
    let n = lambda.size();
    let table = character_table(n);
    table.value(lambda, &Partition::new(vec![1; n as usize]))
}

/// `n!` times the `p_1^n` coefficient, the quantity matched by
/// `Σ_λ c_λ dim λ` under character orthogonality.
pub fn p1_coefficient_times_factorial(f: &SymPoly, n: u32) -> Q {
    let c = f.coeff(&PExp::var_pow(1, n as u16));
    c * Q::from_integer(super::arith::factorial(n as u64))
}
