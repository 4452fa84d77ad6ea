//! Ranking BPAs by integrity uncertainty.
//!
//! A BPA over {A, B} that leaves 0.7 unassigned, the same belief after a third
//! hypothesis C has been identified and every subset of {A, B, C} received
//! mass, and a fully assigned BPA over three singletons.
//!
//! ```text
//! cargo run -p bpa-integrity --example incomplete_frame
//! ```

use bpa_integrity::{parse_bpa, ui};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut rows = Vec::new();
    for file in ["x.json", "x_unassigned.json", "x_actual.json"] {
        let bpa = parse_bpa(&std::fs::read_to_string(data.join(file))?)?;
        let res = ui(&bpa)?;
        rows.push((file, res.n_nodes, res.ui));
    }
    rows.sort_by(|a, b| a.2.total_cmp(&b.2));
    println!("{:<20} {:>5}  ui", "file", "nodes");
    for (file, nodes, v) in rows {
        println!("{file:<20} {nodes:>5}  {v:.6}");
    }
    Ok(())
}
