//! Load BPA documents and check the mass axioms.
//!
//! ```text
//! cargo run -p bpa-integrity --example validate_bpa
//! cargo run -p bpa-integrity --example validate_bpa -- path/to/bpa.json
//! ```

use std::path::PathBuf;

use bpa_integrity::{parse_bpa, DEFAULT_EPSILON_SUM};

fn main() {
    let mut paths: Vec<PathBuf> = std::env::args_os().skip(1).map(PathBuf::from).collect();
    if paths.is_empty() {
        let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
        paths = ["x.json", "x2.json", "half_mass.json", "malformed.json"]
            .iter()
            .map(|f| data.join(f))
            .collect();
    }

    for path in paths {
        let name = path
            .file_name()
            .unwrap_or_default()
            .to_string_lossy()
            .into_owned();
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                println!("{name}: cannot read: {e}");
                continue;
            }
        };
        match parse_bpa(&text) {
            Err(e) => println!("{name}: {e}"),
            Ok(bpa) => {
                let report = bpa.validate(DEFAULT_EPSILON_SUM);
                println!(
                    "{name}: {} focal element(s) over {} hypotheses, total mass {}: {report}",
                    bpa.assignments().len(),
                    bpa.frame().len(),
                    bpa.total_mass(),
                );
            }
        }
    }
}
