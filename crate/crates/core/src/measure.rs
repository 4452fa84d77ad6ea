//! Integrity uncertainty `UI(X)` of a basic probability assignment.
//!
//! `UI(X)` is the approximate entropy of the BPA's slide sequence with
//! embedding dimension 2 and tolerance `0.2 · std(slide)`. A large value
//! says the logical network still looks likely to have undiscovered nodes,
//! i.e. that mass may belong to elements the frame has not identified.
//!
//! Policies:
//!
//! * the reported `ui` is `|Φ_2 − Φ_3|`; the signed difference is kept in
//!   [`UiResult::signed_apen`];
//! * a constant slide sequence is perfectly regular and gets `ui = 0` with
//!   [`UiResult::degenerate`] set;
//! * fewer than three nodes cannot be measured and yields
//!   [`Error::TooFewNodes`].

use crate::apen::{self, population_std};
use crate::error::{Error, Result};
use crate::evidence::{MassFunction, DEFAULT_EPSILON_SUM};
use crate::graph::{slide, SlideSequence};

pub const DEFAULT_M: usize = 2;
pub const DEFAULT_R_FACTOR: f64 = 0.2;
/// Smallest network the measure is defined for.
pub const MIN_NODES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UiParams {
    pub m: usize,
    pub r_factor: f64,
    pub epsilon_sum: f64,
}

impl Default for UiParams {
    fn default() -> Self {
        Self {
            m: DEFAULT_M,
            r_factor: DEFAULT_R_FACTOR,
            epsilon_sum: DEFAULT_EPSILON_SUM,
        }
    }
}

impl UiParams {
    /// True when `m` and `r_factor` are the standard 2 and 0.2.
    pub fn is_normative(&self) -> bool {
        self.m == DEFAULT_M && self.r_factor == DEFAULT_R_FACTOR
    }

    pub fn min_nodes(&self) -> usize {
        MIN_NODES.max(self.m + 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UiResult {
    pub ui: f64,
    pub signed_apen: f64,
    pub phi_m: f64,
    pub phi_m_plus_1: f64,
    pub r: f64,
    pub std: f64,
    pub n_nodes: usize,
    pub slide: SlideSequence,
    /// Set when the slide sequence is constant and `ui` is 0 by policy.
    pub degenerate: bool,
}

/// `UI(X)` with the standard parameters.
pub fn ui(bpa: &MassFunction) -> Result<UiResult> {
    ui_with(bpa, &UiParams::default())
}

pub fn ui_with(bpa: &MassFunction, params: &UiParams) -> Result<UiResult> {
    if params.m == 0 || !params.r_factor.is_finite() || params.r_factor <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "need m >= 1 and a finite r-factor > 0, got m = {}, r-factor = {}",
            params.m, params.r_factor
        )));
    }
    let report = bpa.validate(params.epsilon_sum);
    if !report.is_ok() {
        return Err(Error::InvalidBpa(report));
    }
    let seq = slide(bpa);
    let n_nodes = seq.len();
    if n_nodes < params.min_nodes() {
        return Err(Error::TooFewNodes {
            nodes: n_nodes,
            required: params.min_nodes(),
        });
    }

    let std = population_std(seq.values())?;
    let r = params.r_factor * std;
    if std == 0.0 {
        return Ok(UiResult {
            ui: 0.0,
            signed_apen: 0.0,
            phi_m: 0.0,
            phi_m_plus_1: 0.0,
            r,
            std,
            n_nodes,
            slide: seq,
            degenerate: true,
        });
    }

    let a = apen::apen_detailed(seq.values(), params.m, r)?;
    Ok(UiResult {
        ui: a.value.abs(),
        signed_apen: a.value,
        phi_m: a.phi_m,
        phi_m_plus_1: a.phi_m_plus_1,
        r,
        std,
        n_nodes,
        slide: seq,
        degenerate: false,
    })
}
