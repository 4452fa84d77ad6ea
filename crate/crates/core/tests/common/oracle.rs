//! Brute-force reference for approximate entropy and the integrity measure.
//!
//! Written from the defining formulas only: every window is compared with
//! every window component by component, no pair symmetry, no fused
//! dimensions, no calls into the library's numeric code. Single-threaded.

use bpa_integrity::MassFunction;

/// `−(1/n) Σ_i ln(#{j : max_k |u[i+k] − u[j+k]| < r} / n)`, `n = N − m + 1`.
pub fn oracle_phi(u: &[f64], m: usize, r: f64) -> Result<f64, String> {
    if u.len() < m {
        return Err(format!("N = {} < m = {m}", u.len()));
    }
    let n = u.len() - m + 1;
    let mut total = 0.0;
    for i in 0..n {
        let mut count = 0usize;
        for j in 0..n {
            let mut dist = 0.0f64;
            for k in 0..m {
                let diff = (u[i + k] - u[j + k]).abs();
                if diff > dist {
                    dist = diff;
                }
            }
            if dist < r {
                count += 1;
            }
        }
        if count == 0 {
            return Err("log of zero".into());
        }
        total += (count as f64 / n as f64).ln();
    }
    Ok(-total / n as f64)
}

pub fn oracle_apen(u: &[f64], m: usize, r: f64) -> Result<f64, String> {
    if u.len() < m + 1 {
        return Err(format!("N = {} < m + 1 = {}", u.len(), m + 1));
    }
    if r.is_nan() || r <= 0.0 {
        return Err("r must be positive".into());
    }
    Ok(oracle_phi(u, m, r)? - oracle_phi(u, m + 1, r)?)
}

pub fn mean(u: &[f64]) -> f64 {
    let mut s = 0.0;
    for v in u {
        s += v;
    }
    s / u.len() as f64
}

pub fn pop_std(u: &[f64]) -> f64 {
    let mu = mean(u);
    let mut s = 0.0;
    for v in u {
        s += (v - mu) * (v - mu);
    }
    (s / u.len() as f64).sqrt()
}

pub fn sample_std(u: &[f64]) -> f64 {
    let mu = mean(u);
    let mut s = 0.0;
    for v in u {
        s += (v - mu) * (v - mu);
    }
    (s / (u.len() - 1) as f64).sqrt()
}

/// Masses of the declared elements plus a zero for the empty set when it
/// is not declared, sorted descending by selection sort.
pub fn oracle_slide(bpa: &MassFunction) -> Vec<f64> {
    let mut v: Vec<f64> = bpa.assignments().iter().map(|(_, m)| *m).collect();
    if !bpa
        .assignments()
        .iter()
        .any(|(e, _)| e.members().is_empty())
    {
        v.push(0.0);
    }
    for i in 0..v.len() {
        let mut best = i;
        for j in (i + 1)..v.len() {
            if v[j] > v[best] {
                best = j;
            }
        }
        v.swap(i, best);
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StdConvention {
    Population,
    Sample,
}

/// `|ApEn(slide, 2, 0.2·std)|`, 0 for a constant slide, error below three
/// nodes or when the mass axioms fail.
pub fn oracle_ui_with(bpa: &MassFunction, std: StdConvention) -> Result<f64, String> {
    let mut sum = 0.0;
    for (_, m) in bpa.assignments() {
        if !(*m >= 0.0 && *m <= 1.0) {
            return Err(format!("mass {m} out of range"));
        }
        sum += m;
    }
    if (sum - 1.0).abs() > 1e-9 {
        return Err(format!("masses sum to {sum}"));
    }
    let s = oracle_slide(bpa);
    if s.len() < 3 {
        return Err("fewer than 3 nodes".into());
    }
    if s.iter().all(|v| *v == s[0]) {
        return Ok(0.0);
    }
    let sd = match std {
        StdConvention::Population => pop_std(&s),
        StdConvention::Sample => sample_std(&s),
    };
    Ok(oracle_apen(&s, 2, 0.2 * sd)?.abs())
}

pub fn oracle_ui(bpa: &MassFunction) -> Result<f64, String> {
    oracle_ui_with(bpa, StdConvention::Population)
}
