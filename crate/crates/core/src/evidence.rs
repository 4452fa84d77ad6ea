//! Frames of discernment, focal elements and mass functions.
//!
//! A [`MassFunction`] (basic probability assignment) maps focal elements,
//! i.e. subsets of a [`FrameOfDiscernment`], to masses in `[0, 1]` that sum
//! to one. The empty set is a legal focal element here and may carry mass:
//! it stands for the portion of belief that has not been distributed yet.
//!
//! Focal elements are stored as explicit member lists in frame order, so a
//! frame of any size can be used without enumerating its power set.
//!
//! # File format
//!
//! BPAs are exchanged as JSON documents:
//!
//! ```json
//! {
//!   "frame": ["A", "B", "C"],
//!   "masses": [
//!     { "focal": ["A"], "mass": 0.2 },
//!     { "focal": ["A", "B"], "mass": 0.3 },
//!     { "focal": [], "mass": 0.5 }
//!   ]
//! }
//! ```
//!
//! An empty `focal` list is the empty set. Omitting it is the same as giving
//! it mass 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance on `|Σ m − 1|` used by [`MassFunction::validate`].
pub const DEFAULT_EPSILON_SUM: f64 = 1e-9;

/// Ordered set of mutually exclusive hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrameOfDiscernment {
    hypotheses: Vec<String>,
}

impl FrameOfDiscernment {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut hypotheses: Vec<String> = Vec::new();
        for label in labels {
            let label = label.into();
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if hypotheses.contains(&label) {
                return Err(Error::DuplicateHypothesis(label));
            }
            hypotheses.push(label);
        }
        if hypotheses.is_empty() {
            return Err(Error::EmptyFrame);
        }
        Ok(Self { hypotheses })
    }

    pub fn hypotheses(&self) -> &[String] {
        &self.hypotheses
    }

    pub fn len(&self) -> usize {
        self.hypotheses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hypotheses.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.hypotheses.iter().position(|h| h == label)
    }

    /// Checks that every member of `element` belongs to this frame and
    /// returns a copy with members reordered to frame order.
    pub fn canonicalize(&self, element: &FocalElement) -> Result<FocalElement> {
        let mut indexed = Vec::with_capacity(element.members.len());
        for member in &element.members {
            let pos = self
                .position(member)
                .ok_or_else(|| Error::UnknownHypothesis(member.clone()))?;
            if indexed.iter().any(|&(p, _)| p == pos) {
                return Err(Error::DuplicateMember(member.clone()));
            }
            indexed.push((pos, member.clone()));
        }
        indexed.sort_by_key(|&(p, _)| p);
        Ok(FocalElement {
            members: indexed.into_iter().map(|(_, m)| m).collect(),
        })
    }
}

/// A subset of the frame. The empty subset denotes the uncertainty node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FocalElement {
    members: Vec<String>,
}

impl FocalElement {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an element from labels as given. Membership in a frame is
    /// checked when the element is used with one.
    pub fn new<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            members: labels.into_iter().map(Into::into).collect(),
        }
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Display for FocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "{{{}}}", self.members.join(","))
        }
    }
}

/// One broken BPA axiom.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    MassOutOfRange { focal: FocalElement, mass: f64 },
    SumMismatch { sum: f64, epsilon: f64 },
    DuplicateFocal { focal: FocalElement },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MassOutOfRange { focal, mass } => {
                write!(f, "range axiom: mass of {focal} is {mass}, outside [0, 1]")
            }
            Violation::SumMismatch { sum, epsilon } => {
                write!(
                    f,
                    "sum axiom: masses sum to {sum}, not 1 (tolerance {epsilon:e})"
                )
            }
            Violation::DuplicateFocal { focal } => {
                write!(f, "focal element {focal} is assigned more than once")
            }
        }
    }
}

/// Outcome of [`MassFunction::validate`]; empty means valid.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Basic probability assignment over a frame of discernment.
///
/// Construction only checks that focal elements are subsets of the frame;
/// the mass axioms are checked by [`validate`](Self::validate).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BpaDocument", into = "BpaDocument")]
pub struct MassFunction {
    frame: FrameOfDiscernment,
    assignments: Vec<(FocalElement, f64)>,
}

impl MassFunction {
    pub fn new<I>(frame: FrameOfDiscernment, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalElement, f64)>,
    {
        let assignments = assignments
            .into_iter()
            .map(|(e, m)| Ok((frame.canonicalize(&e)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { frame, assignments })
    }

    /// Shorthand for building a BPA from string slices.
    ///
    /// ```
    /// use bpa_integrity::MassFunction;
    ///
    /// let x = MassFunction::from_labels(
    ///     &["A", "B", "C"],
    ///     &[(&["A"], 0.2), (&["B"], 0.25), (&["C"], 0.55)],
    /// )
    /// .unwrap();
    /// assert!(x.validate(1e-9).is_ok());
    /// ```
    pub fn from_labels(frame: &[&str], entries: &[(&[&str], f64)]) -> Result<Self> {
        let frame = FrameOfDiscernment::new(frame.iter().copied())?;
        Self::new(
            frame,
            entries
                .iter()
                .map(|(labels, mass)| (FocalElement::new(labels.iter().copied()), *mass)),
        )
    }

    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    /// Declared `(focal element, mass)` pairs in declaration order.
    pub fn assignments(&self) -> &[(FocalElement, f64)] {
        &self.assignments
    }

    pub fn total_mass(&self) -> f64 {
        self.assignments.iter().map(|(_, m)| m).sum()
    }

    /// Declared mass of `element`, or 0 when it is not declared.
    pub fn mass_of(&self, element: &FocalElement) -> Result<f64> {
        let element = self.frame.canonicalize(element)?;
        Ok(self
            .assignments
            .iter()
            .find(|(e, _)| *e == element)
            .map_or(0.0, |&(_, m)| m))
    }

    pub fn declares_empty_set(&self) -> bool {
        self.assignments.iter().any(|(e, _)| e.is_empty())
    }

    /// Checks the range and sum axioms and uniqueness of focal elements.
    pub fn validate(&self, epsilon_sum: f64) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, (focal, mass)) in self.assignments.iter().enumerate() {
            if !(0.0..=1.0).contains(mass) {
                violations.push(Violation::MassOutOfRange {
                    focal: focal.clone(),
                    mass: *mass,
                });
            }
            // report each duplicated element once, at its second occurrence
            let seen_before = self.assignments[..i]
                .iter()
                .filter(|(e, _)| e == focal)
                .count();
            if seen_before == 1 {
                violations.push(Violation::DuplicateFocal {
                    focal: focal.clone(),
                });
            }
        }
        let sum = self.total_mass();
        if sum.is_nan() || (sum - 1.0).abs() > epsilon_sum {
            violations.push(Violation::SumMismatch {
                sum,
                epsilon: epsilon_sum,
            });
        }
        ValidationReport { violations }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("BPA document serializes")
    }
}

/// Parses a BPA document. The result is not validated.
pub fn parse_bpa(text: &str) -> Result<MassFunction> {
    let doc: BpaDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    MassFunction::try_from(doc)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BpaDocument {
    frame: Vec<String>,
    masses: Vec<MassEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MassEntry {
    focal: Vec<String>,
    mass: f64,
}

impl TryFrom<BpaDocument> for MassFunction {
    type Error = Error;

    fn try_from(doc: BpaDocument) -> Result<Self> {
        let frame = FrameOfDiscernment::new(doc.frame)?;
        MassFunction::new(
            frame,
            doc.masses
                .into_iter()
                .map(|e| (FocalElement::new(e.focal), e.mass)),
        )
    }
}

impl From<MassFunction> for BpaDocument {
    fn from(bpa: MassFunction) -> Self {
        BpaDocument {
            frame: bpa.frame.hypotheses,
            masses: bpa
                .assignments
                .into_iter()
                .map(|(e, mass)| MassEntry {
                    focal: e.members,
                    mass,
                })
                .collect(),
        }
    }
}
