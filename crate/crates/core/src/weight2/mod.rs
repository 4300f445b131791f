//! The closed-form generating function `ω₂ = Σ χ₂^S(M_{g,n}) ħ^g`.
//!
//! Three evaluations are provided:
//!
//! - [`omega2_closed`]: the full series in `(ħ, p)`, with every `P_ℓ`-power
//!   expanded into power sums;
//! - [`laurent_a`]/[`laurent_c`] and [`genus_slice`]: the per-genus
//!   decomposition into a logarithmic part and Laurent polynomials in the
//!   `P_d`, computed without ever expanding `P_d^{-1}`;
//! - [`chi2_mg_series`]: the `n = 0` specialization as univariate series.
//!
//! Throughout, `X_ℓ = Σ_{d|ℓ, d≠ℓ} μ(ℓ/d) ħ^{ℓ-d} P_d / P_ℓ` and
//! `T_ℓ = ℓħ^ℓ / P_ℓ`, so that `1/Z_ℓ = T_ℓ (1+X_ℓ)^{-1}`.

mod closed;
mod fast;
mod laurent;

pub use closed::{omega2_closed, psi0_block, psi1_block, x_ell, Omega2};
pub use fast::{chi2_mg_series, sign_sequence, sign_pattern_violations};
pub use laurent::{
    check_shape_a, check_shape_c, genus_slice, laurent_a, laurent_c, laurent_series, LaurentSeriesAC,
};

/// Bounds for an `ω₂` computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weight2Config {
    /// Largest genus `g` retained (`ħ`-degree).
    pub g_max: u32,
    /// Largest number of marked points `n` retained (p-weight bound).
    pub n_max: u32,
}

impl Weight2Config {
    pub fn new(g_max: u32, n_max: u32) -> Self {
        Weight2Config { g_max, n_max }
    }

    /// Largest block index `ℓ` that can influence the truncation window:
    /// `log P_ℓ` needs `ℓ ≤ n_max`, and `X_ℓ` has `ħ`-valuation at least
    /// `ℓ/2`, so the `ħ`-dependent part needs `ℓ ≤ 2 g_max`.
    pub fn block_cut(&self) -> usize {
        (2 * self.g_max).max(self.n_max).max(1) as usize
    }
}

/// Whether `(g, n)` lies in the unstable range `2g + n < 3`.
pub fn is_unstable(g: u32, n: u32) -> bool {
    2 * g + n < 3
}
