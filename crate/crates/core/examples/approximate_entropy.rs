//! Approximate entropy step by step on a raw sequence.
//!
//! ```text
//! cargo run -p bpa-integrity --example approximate_entropy
//! cargo run -p bpa-integrity --example approximate_entropy -- 0.7 0.1 0.1 0.1
//! ```

use bpa_integrity::apen::{apen_detailed, chebyshev, correlation_count, embed, population_std};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut u: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    if u.is_empty() {
        u = vec![0.55, 0.25, 0.2, 0.0];
    }
    let m = 2;
    let std = population_std(&u)?;
    let r = 0.2 * std;
    println!("u = {u:?}, m = {m}, std = {std:.6}, r = {r:.6}");

    for dim in [m, m + 1] {
        let windows = embed(&u, dim)?;
        println!("\nwindows of length {dim}:");
        for (i, w) in windows.iter().enumerate() {
            let dists: Vec<String> = windows
                .iter()
                .map(|v| format!("{:.3}", chebyshev(w, v).unwrap()))
                .collect();
            println!(
                "  x({}) = {:?}  distances [{}]  C = {:.4}",
                i + 1,
                w,
                dists.join(", "),
                correlation_count(&windows, i, r)
            );
        }
    }

    let a = apen_detailed(&u, m, r)?;
    println!(
        "\nphi_{m} = {:.6}, phi_{} = {:.6}",
        a.phi_m,
        m + 1,
        a.phi_m_plus_1
    );
    println!("ApEn = {:+.10}", a.value);
    Ok(())
}
