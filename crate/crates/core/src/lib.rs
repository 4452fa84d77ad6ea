//! Integrity uncertainty of basic probability assignments.
//!
//! A BPA is turned into a star-shaped logical network whose node degrees
//! are its masses (the empty set is the centre node). The descending degree
//! sequence is then scored with approximate entropy at `m = 2`,
//! `r = 0.2 · std`; the result `UI(X)` indicates how likely the BPA is to
//! be missing elements its frame has not identified yet.
//!
//! ```
//! use bpa_integrity::{ui, MassFunction};
//!
//! let x = MassFunction::from_labels(
//!     &["A", "B", "C"],
//!     &[(&["A"], 0.2), (&["B"], 0.25), (&["C"], 0.55)],
//! )?;
//! let res = ui(&x)?;
//! assert!((res.ui - 0.405465).abs() < 1e-6);
//! # Ok::<(), bpa_integrity::Error>(())
//! ```
//!
//! Runnable walkthroughs live in this crate's `examples/` directory.

pub mod apen;
pub mod cli;
pub mod error;
pub mod evidence;
pub mod graph;
pub mod measure;
pub mod numfmt;
pub mod sweep;

pub use apen::{apen, apen_detailed, population_std, ApEn, ApEnParams};
pub use error::{Error, Result};
pub use evidence::{
    parse_bpa, FocalElement, FrameOfDiscernment, MassFunction, ValidationReport, Violation,
    DEFAULT_EPSILON_SUM,
};
pub use graph::{logical_degrees, slide, slide_apen, LogicalDegreeMap, SlideSequence};
pub use measure::{ui, ui_with, UiParams, UiResult};
pub use sweep::{
    read_sweep, sweep_family, sweep_simplex, write_sweep, GridPoint, MassExpr, SimplexFamily,
    SimplexGrid, SweepFlag, SweepRecord,
};
