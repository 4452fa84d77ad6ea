//! Sweep a user-defined BPA family. A third singleton C keeps a fixed 0.1 and
//! the remaining 0.9 is spread as (A, 0.9x), (B, 0.9y), (AB, 0.9(1-x-y)).
//! The unscaled part comes from a [`SimplexFamily`] template; the scaling is
//! applied in the closure handed to [`sweep_family`].
//!
//! ```text
//! cargo run -p bpa-integrity --example custom_family
//! ```

use bpa_integrity::{
    sweep_family, FocalElement, FrameOfDiscernment, MassExpr, MassFunction, SimplexFamily,
    SimplexGrid, UiParams,
};

fn main() -> Result<(), bpa_integrity::Error> {
    let grid = SimplexGrid::new(20)?;
    let frame = FrameOfDiscernment::new(["A", "B", "C"])?;

    // template form: unscaled masses, C fixed at 0
    let template = SimplexFamily::new(
        frame.clone(),
        [
            (FocalElement::new(["A"]), MassExpr::X),
            (FocalElement::new(["B"]), MassExpr::Y),
            (FocalElement::new(["A", "B"]), MassExpr::Rest),
            (FocalElement::new(["C"]), MassExpr::Const(0.0)),
        ],
    )?;

    let scaled = |p: &bpa_integrity::GridPoint| {
        let base = template.instantiate(p);
        let mut entries: Vec<(FocalElement, f64)> = base
            .assignments()
            .iter()
            .map(|(e, m)| (e.clone(), 0.9 * m))
            .collect();
        entries.retain(|(e, _)| e.members() != ["C"]);
        entries.push((FocalElement::new(["C"]), 0.1));
        MassFunction::new(frame.clone(), entries).expect("members come from the frame")
    };

    let records = sweep_family(&grid, &UiParams::default(), scaled);
    let flagged = records.iter().filter(|r| r.flag.is_some()).count();
    let (lo, hi) = records
        .iter()
        .filter_map(|r| r.ui)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    println!(
        "{} points, {flagged} flagged, ui in [{lo:.6}, {hi:.6}]",
        records.len()
    );
    for rec in records.iter().filter(|r| r.x == 0.5) {
        println!("  x = {:.2}, y = {:.2}: ui = {:?}", rec.x, rec.y, rec.ui);
    }
    Ok(())
}
