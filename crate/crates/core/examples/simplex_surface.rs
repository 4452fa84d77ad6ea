//! Sweep {(A,x),(B,y),(AB,1-x-y),(∅,0)} over the probability simplex and write
//! the surface as CSV for an external plotting tool.
//!
//! ```text
//! cargo run -p bpa-integrity --example simplex_surface -- 200 surface.csv
//! ```

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufWriter;

use bpa_integrity::{sweep_simplex, write_sweep};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let resolution: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);
    let out = args
        .next()
        .unwrap_or_else(|| "simplex_surface.csv".to_string());

    let records = sweep_simplex(resolution)?;
    write_sweep(&records, BufWriter::new(File::create(&out)?))?;
    println!("{} grid points written to {out}", records.len());

    // the surface is a few flat layers
    let mut layers: BTreeMap<String, usize> = BTreeMap::new();
    for rec in &records {
        let key = rec.ui.map_or("-".to_string(), |v| format!("{v:.12}"));
        *layers.entry(key).or_default() += 1;
    }
    for (ui, count) in layers {
        println!("  ui = {ui}: {count} points");
    }
    Ok(())
}
