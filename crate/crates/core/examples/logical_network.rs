//! The logical network behind a BPA: one node per declared focal element plus
//! the empty-set hub, each with degree equal to its mass.
//!
//! ```text
//! cargo run -p bpa-integrity --example logical_network
//! ```

use bpa_integrity::{logical_degrees, slide, MassFunction};

fn main() -> Result<(), bpa_integrity::Error> {
    let full = MassFunction::from_labels(
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
    )?;
    let minimal = MassFunction::from_labels(&["A"], &[(&["A"], 1.0)])?;

    for (name, bpa) in [("full power set", &full), ("single element", &minimal)] {
        let map = logical_degrees(bpa);
        println!("{name}: {} nodes", map.node_count());
        for (element, degree) in map.entries() {
            println!("  {:<10} degree {degree}", element.to_string());
        }
        println!("  slide {:?}\n", slide(bpa).values());
    }
    println!("networks with fewer than 3 nodes have no integrity uncertainty to measure");
    Ok(())
}
