//! Integrity uncertainty of three small BPAs, with the intermediate values.
//!
//! ```text
//! cargo run -p bpa-integrity --example worked_examples
//! ```

use bpa_integrity::{ui, MassFunction};

fn main() -> Result<(), bpa_integrity::Error> {
    let cases = [
        (
            "X",
            MassFunction::from_labels(
                &["A", "B", "C"],
                &[(&["A"], 0.2), (&["B"], 0.25), (&["C"], 0.55)],
            )?,
        ),
        (
            "X1",
            MassFunction::from_labels(
                &["A", "B", "C"],
                &[(&["A"], 0.33), (&["B"], 0.33), (&["C"], 0.34)],
            )?,
        ),
        (
            "X2",
            MassFunction::from_labels(
                &["A", "B", "C"],
                &[(&["A"], 0.1), (&["B"], 0.1), (&["C"], 0.1), (&[], 0.7)],
            )?,
        ),
    ];

    for (name, bpa) in &cases {
        let res = ui(bpa)?;
        println!("{name}");
        println!("  slide        {:?}", res.slide.values());
        println!("  std          {:.6}", res.std);
        println!("  r            {:.6}", res.r);
        println!("  phi_2        {:.6}", res.phi_m);
        println!("  phi_3        {:.6}", res.phi_m_plus_1);
        println!("  signed apen  {:+.17}", res.signed_apen);
        println!("  UI           {:.17}", res.ui);
    }
    Ok(())
}
