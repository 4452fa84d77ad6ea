//! Logical network of a BPA.
//!
//! The network is a star: the empty set sits at the centre as the
//! uncertainty node and every declared focal element hangs off it. Each
//! node's logical degree is its mass, so the network is fully described by
//! the degree list and no edges are stored. Nodes are the declared focal
//! elements (zero-mass ones included) plus the empty set, which is added with
//! degree 0 when the BPA does not declare it. Undeclared subsets of the frame
//! are not nodes.

use crate::apen::{self, ApEn};
use crate::error::{Error, Result};
use crate::evidence::{FocalElement, MassFunction};

/// One `(focal element, logical degree)` entry per network node.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicalDegreeMap {
    entries: Vec<(FocalElement, f64)>,
}

impl LogicalDegreeMap {
    pub fn entries(&self) -> &[(FocalElement, f64)] {
        &self.entries
    }

    pub fn node_count(&self) -> usize {
        self.entries.len()
    }

    pub fn degree_of(&self, element: &FocalElement) -> Option<f64> {
        self.entries
            .iter()
            .find(|(e, _)| e == element)
            .map(|&(_, d)| d)
    }
}

/// Node degrees in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct SlideSequence(Vec<f64>);

impl SlideSequence {
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for SlideSequence {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

pub fn logical_degrees(bpa: &MassFunction) -> LogicalDegreeMap {
    let mut entries: Vec<(FocalElement, f64)> = bpa.assignments().to_vec();
    if !bpa.declares_empty_set() {
        entries.push((FocalElement::empty(), 0.0));
    }
    LogicalDegreeMap { entries }
}

pub fn slide(bpa: &MassFunction) -> SlideSequence {
    let mut values: Vec<f64> = logical_degrees(bpa)
        .entries
        .into_iter()
        .map(|(_, d)| d)
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    SlideSequence(values)
}

/// Approximate entropy of the slide sequence.
pub fn slide_apen(bpa: &MassFunction, m: usize, r: f64) -> Result<ApEn> {
    let seq = slide(bpa);
    if seq.len() < m + 1 {
        return Err(Error::TooFewNodes {
            nodes: seq.len(),
            required: m + 1,
        });
    }
    apen::apen_detailed(seq.values(), m, r)
}
