//! Approximate entropy of short real sequences.
//!
//! Conventions used throughout:
//!
//! * windows of length `m` are compared with the Chebyshev distance;
//! * a pair matches when its distance is *strictly* below `r`;
//! * every window is compared with itself, so `C_i ≥ 1/(N−m+1)` whenever
//!   `r > 0`;
//! * `Φ_m(r) = −(1/(N−m+1)) Σ ln C_i^m(r)`, which is non-negative, and
//!   `ApEn = Φ_m − Φ_{m+1}`.
//!
//! With this sign convention ApEn can come out negative for very short
//! sequences; the integrity measure in [`crate::measure`] takes its
//! magnitude.

use crate::error::{Error, Result};

/// Embedding dimension and match tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApEnParams {
    pub m: usize,
    pub r: f64,
}

impl ApEnParams {
    pub fn new(m: usize, r: f64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "embedding dimension m must be >= 1".into(),
            ));
        }
        if !r.is_finite() || r < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tolerance r must be finite and >= 0, got {r}"
            )));
        }
        Ok(Self { m, r })
    }
}

/// Both Φ values alongside their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApEn {
    pub value: f64,
    pub phi_m: f64,
    pub phi_m_plus_1: f64,
}

fn check_finite(u: &[f64]) -> Result<()> {
    match u.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(Error::NonFinite(i)),
        None => Ok(()),
    }
}

/// Overlapping windows `u[i..i+m]`, `N − m + 1` of them.
pub fn embed(u: &[f64], m: usize) -> Result<Vec<&[f64]>> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "embedding dimension m must be >= 1".into(),
        ));
    }
    if u.len() < m {
        return Err(Error::SequenceTooShort {
            len: u.len(),
            required: m,
        });
    }
    Ok(u.windows(m).collect())
}

/// Largest absolute componentwise difference.
pub fn chebyshev(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(chebyshev_unchecked(x, y))
}

#[inline]
fn chebyshev_unchecked(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Fraction of windows within distance `< r` of `windows[i]`, the window
/// itself included. `i` is zero-based.
///
/// # Panics
///
/// If `i` is out of bounds or the windows differ in length.
pub fn correlation_count(windows: &[&[f64]], i: usize, r: f64) -> f64 {
    let target = windows[i];
    let hits = windows
        .iter()
        .filter(|w| {
            assert_eq!(w.len(), target.len(), "windows must share one length");
            chebyshev_unchecked(target, w) < r
        })
        .count();
    hits as f64 / windows.len() as f64
}

/// Negative mean log of the correlation counts, in index order.
fn phi_from_counts(counts: &[usize], r: f64) -> Result<f64> {
    let n = counts.len() as f64;
    let mut acc = 0.0;
    for &c in counts {
        if c == 0 {
            return Err(Error::DegenerateTolerance(r));
        }
        acc += (c as f64 / n).ln();
    }
    Ok(-acc / n)
}

/// `Φ_m(r)` for the sequence `u`.
pub fn phi(u: &[f64], m: usize, r: f64) -> Result<f64> {
    check_finite(u)?;
    let windows = embed(u, m)?;
    let n = windows.len();
    let mut counts = vec![0usize; n];
    for i in 0..n {
        if 0.0 < r {
            counts[i] += 1;
        }
        for j in (i + 1)..n {
            if chebyshev_unchecked(windows[i], windows[j]) < r {
                counts[i] += 1;
                counts[j] += 1;
            }
        }
    }
    phi_from_counts(&counts, r)
}

/// `Φ_m(r) − Φ_{m+1}(r)`.
pub fn apen(u: &[f64], m: usize, r: f64) -> Result<f64> {
    apen_detailed(u, m, r).map(|a| a.value)
}

/// Approximate entropy with both Φ terms.
///
/// Each unordered window pair is visited once. The `m+1` distance is the
/// `m` distance extended by one trailing component, so both dimensions are
/// counted in the same sweep.
pub fn apen_detailed(u: &[f64], m: usize, r: f64) -> Result<ApEn> {
    ApEnParams::new(m, r)?;
    check_finite(u)?;
    let len = u.len();
    if len < m + 1 {
        return Err(Error::SequenceTooShort {
            len,
            required: m + 1,
        });
    }
    let n_m = len - m + 1;
    let n_m1 = len - m;
    let self_match = usize::from(0.0 < r);
    let mut counts_m = vec![self_match; n_m];
    let mut counts_m1 = vec![self_match; n_m1];

    for i in 0..n_m {
        for j in (i + 1)..n_m {
            let d = chebyshev_unchecked(&u[i..i + m], &u[j..j + m]);
            if d < r {
                counts_m[i] += 1;
                counts_m[j] += 1;
            }
            if j < n_m1 {
                let d1 = d.max((u[i + m] - u[j + m]).abs());
                if d1 < r {
                    counts_m1[i] += 1;
                    counts_m1[j] += 1;
                }
            }
        }
    }

    let phi_m = phi_from_counts(&counts_m, r)?;
    let phi_m_plus_1 = phi_from_counts(&counts_m1, r)?;
    Ok(ApEn {
        value: phi_m - phi_m_plus_1,
        phi_m,
        phi_m_plus_1,
    })
}

/// Standard deviation with divisor `N`.
pub fn population_std(u: &[f64]) -> Result<f64> {
    if u.is_empty() {
        return Err(Error::EmptySequence);
    }
    check_finite(u)?;
    if u.iter().all(|&v| v == u[0]) {
        return Ok(0.0);
    }
    let n = u.len() as f64;
    let mean = u.iter().sum::<f64>() / n;
    let ss: f64 = u.iter().map(|v| (v - mean) * (v - mean)).sum();
    Ok((ss / n).sqrt())
}
