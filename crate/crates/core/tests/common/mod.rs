#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use bpa_integrity::MassFunction;
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join("data")
        .join(name)
}

pub fn load(name: &str) -> MassFunction {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    bpa_integrity::parse_bpa(&text).unwrap()
}

pub fn x() -> MassFunction {
    MassFunction::from_labels(
        &["A", "B", "C"],
        &[(&["A"], 0.2), (&["B"], 0.25), (&["C"], 0.55)],
    )
    .unwrap()
}

pub fn x1() -> MassFunction {
    MassFunction::from_labels(
        &["A", "B", "C"],
        &[(&["A"], 0.33), (&["B"], 0.33), (&["C"], 0.34)],
    )
    .unwrap()
}

pub fn x2() -> MassFunction {
    MassFunction::from_labels(
        &["A", "B", "C"],
        &[(&["A"], 0.1), (&["B"], 0.1), (&["C"], 0.1), (&[], 0.7)],
    )
    .unwrap()
}

pub fn x_actual() -> MassFunction {
    MassFunction::from_labels(
        &["A", "B", "C"],
        &[
            (&["A"], 0.1),
            (&["B"], 0.1),
            (&["C"], 0.1),
            (&["A", "B"], 0.1),
            (&["A", "C"], 0.1),
            (&["B", "C"], 0.1),
            (&["A", "B", "C"], 0.4),
        ],
    )
    .unwrap()
}

/// Hypothesis labels `H0, H1, ...`.
pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("H{i}")).collect()
}

/// Random valid BPA whose logical network has exactly `nodes` nodes.
///
/// Masses are drawn uniformly, normalised, and occasionally snapped to a
/// coarse grid so that ties and zero masses show up.
pub fn random_bpa<R: Rng>(rng: &mut R, nodes: usize) -> MassFunction {
    assert!(nodes >= 2);
    // frame large enough to supply `nodes` distinct non-empty subsets
    let n_hyp = (usize::BITS - nodes.leading_zeros()) as usize;
    let frame = labels(n_hyp.max(1));
    let with_empty = rng.gen_bool(0.5);
    let declared = if with_empty { nodes } else { nodes - 1 };
    let non_empty = if with_empty { declared - 1 } else { declared };

    let mut raw: Vec<f64> = (0..declared).map(|_| rng.gen::<f64>()).collect();
    if rng.gen_bool(0.3) {
        for v in &mut raw {
            *v = (*v * 4.0).floor();
        }
        if raw.iter().all(|v| *v == 0.0) {
            raw[0] = 1.0;
        }
    }
    let total: f64 = raw.iter().sum();
    let masses: Vec<f64> = raw.iter().map(|v| v / total).collect();

    let mut entries: Vec<(bpa_integrity::FocalElement, f64)> = Vec::new();
    for (k, mass) in masses.iter().take(non_empty).enumerate() {
        let bits = k + 1;
        let members: Vec<String> = (0..frame.len())
            .filter(|b| bits & (1 << b) != 0)
            .map(|b| frame[b].clone())
            .collect();
        entries.push((bpa_integrity::FocalElement::new(members), *mass));
    }
    if with_empty {
        entries.push((bpa_integrity::FocalElement::empty(), masses[declared - 1]));
    }
    let frame = bpa_integrity::FrameOfDiscernment::new(frame).unwrap();
    MassFunction::new(frame, entries).unwrap()
}
