//! UI over two-parameter BPA families on the probability simplex.
//!
//! The standard family is `{(A, x), (B, y), (AB, 1−x−y), (∅, 0)}` over
//! `x, y ≥ 0`, `x + y ≤ 1`. Grid coordinates are `i/k`, `j/k` with the
//! remainder `(k−i−j)/k` computed from integers, so swapping `x` and `y`
//! produces bit-identical mass multisets.
//!
//! Because the slide sequence of a 4-node network only enters `UI` through
//! which window pairs fall under the tolerance, the resulting surface is
//! piecewise constant: a handful of plateaus separated by jumps.
//!
//! Output is CSV with header `x,y,ui,signed_apen,flag`, numbers printed with
//! 17 significant digits, rows sorted by `(x, y)`. Missing values are empty
//! fields.

use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evidence::{FocalElement, FrameOfDiscernment, MassFunction};
use crate::measure::{ui_with, UiParams};
use crate::numfmt::format_sig;

pub const SWEEP_HEADER: [&str; 5] = ["x", "y", "ui", "signed_apen", "flag"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplexGrid {
    resolution: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub i: usize,
    pub j: usize,
    pub x: f64,
    pub y: f64,
    /// `1 − x − y`, from integer indices.
    pub rest: f64,
}

impl SimplexGrid {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::InvalidParameter(
                "sweep resolution must be >= 1".into(),
            ));
        }
        Ok(Self { resolution })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// `(k+1)(k+2)/2`
    pub fn len(&self) -> usize {
        (self.resolution + 1) * (self.resolution + 2) / 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All points, `x` major, `y` minor, both ascending.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let k = self.resolution;
        let kf = k as f64;
        (0..=k).flat_map(move |i| {
            (0..=k - i).map(move |j| GridPoint {
                i,
                j,
                x: i as f64 / kf,
                y: j as f64 / kf,
                rest: (k - i - j) as f64 / kf,
            })
        })
    }
}

/// Mass of one focal element as a function of the grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MassExpr {
    Const(f64),
    X,
    Y,
    /// `1 − x − y`
    Rest,
}

impl MassExpr {
    fn eval(self, p: &GridPoint) -> f64 {
        match self {
            MassExpr::Const(c) => c,
            MassExpr::X => p.x,
            MassExpr::Y => p.y,
            MassExpr::Rest => p.rest,
        }
    }
}

/// BPA template whose masses depend on `(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexFamily {
    frame: FrameOfDiscernment,
    entries: Vec<(FocalElement, MassExpr)>,
}

impl SimplexFamily {
    pub fn new(
        frame: FrameOfDiscernment,
        entries: impl IntoIterator<Item = (FocalElement, MassExpr)>,
    ) -> Result<Self> {
        let entries = entries
            .into_iter()
            .map(|(e, expr)| Ok((frame.canonicalize(&e)?, expr)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { frame, entries })
    }

    /// `{(A, x), (B, y), (AB, 1−x−y), (∅, 0)}`
    pub fn two_hypotheses() -> Self {
        let frame = FrameOfDiscernment::new(["A", "B"]).expect("static frame");
        Self::new(
            frame,
            [
                (FocalElement::new(["A"]), MassExpr::X),
                (FocalElement::new(["B"]), MassExpr::Y),
                (FocalElement::new(["A", "B"]), MassExpr::Rest),
                (FocalElement::empty(), MassExpr::Const(0.0)),
            ],
        )
        .expect("static family")
    }

    pub fn instantiate(&self, p: &GridPoint) -> MassFunction {
        MassFunction::new(
            self.frame.clone(),
            self.entries
                .iter()
                .map(|(e, expr)| (e.clone(), expr.eval(p))),
        )
        .expect("members were checked against the frame")
    }
}

/// Why a grid point carries no regular UI value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFlag {
    /// Constant slide sequence; `ui` is 0 by policy.
    Degenerate,
    TooFewNodes,
    InvalidBpa,
    Failed,
}

impl SweepFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepFlag::Degenerate => "degenerate",
            SweepFlag::TooFewNodes => "too_few_nodes",
            SweepFlag::InvalidBpa => "invalid_bpa",
            SweepFlag::Failed => "failed",
        }
    }
}

impl fmt::Display for SweepFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepFlag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "degenerate" => Ok(SweepFlag::Degenerate),
            "too_few_nodes" => Ok(SweepFlag::TooFewNodes),
            "invalid_bpa" => Ok(SweepFlag::InvalidBpa),
            "failed" => Ok(SweepFlag::Failed),
            other => Err(format!("unknown flag `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub x: f64,
    pub y: f64,
    pub ui: Option<f64>,
    pub signed_apen: Option<f64>,
    pub flag: Option<SweepFlag>,
}

/// Evaluates `family` at every grid point. Failures become flags; the
/// output has exactly one record per point in grid order.
pub fn sweep_family(
    grid: &SimplexGrid,
    params: &UiParams,
    family: impl Fn(&GridPoint) -> MassFunction + Sync,
) -> Vec<SweepRecord> {
    let points: Vec<GridPoint> = grid.points().collect();
    points
        .par_iter()
        .map(|p| {
            let bpa = family(p);
            match ui_with(&bpa, params) {
                Ok(res) => SweepRecord {
                    x: p.x,
                    y: p.y,
                    ui: Some(res.ui),
                    signed_apen: Some(res.signed_apen),
                    flag: res.degenerate.then_some(SweepFlag::Degenerate),
                },
                Err(e) => SweepRecord {
                    x: p.x,
                    y: p.y,
                    ui: None,
                    signed_apen: None,
                    flag: Some(match e {
                        Error::TooFewNodes { .. } => SweepFlag::TooFewNodes,
                        Error::InvalidBpa(_) => SweepFlag::InvalidBpa,
                        _ => SweepFlag::Failed,
                    }),
                },
            }
        })
        .collect()
}

/// Standard two-hypothesis family at the standard parameters.
pub fn sweep_simplex(resolution: usize) -> Result<Vec<SweepRecord>> {
    sweep_simplex_with(resolution, &UiParams::default())
}

pub fn sweep_simplex_with(resolution: usize, params: &UiParams) -> Result<Vec<SweepRecord>> {
    let grid = SimplexGrid::new(resolution)?;
    let family = SimplexFamily::two_hypotheses();
    Ok(sweep_family(&grid, params, |p| family.instantiate(p)))
}

fn opt_num(v: Option<f64>) -> String {
    v.map(|v| format_sig(v, 17)).unwrap_or_default()
}

pub fn write_sweep<W: Write>(records: &[SweepRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for rec in records {
        w.write_record([
            format_sig(rec.x, 17),
            format_sig(rec.y, 17),
            opt_num(rec.ui),
            opt_num(rec.signed_apen),
            rec.flag.map(|f| f.as_str().to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()
}

/// Reads a file produced by [`write_sweep`].
pub fn read_sweep<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let parse_err = |line: u64, message: String| Error::Parse {
        line: line as usize,
        column: 0,
        message,
    };
    let header = rdr
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if header.iter().ne(SWEEP_HEADER) {
        return Err(parse_err(
            1,
            format!("expected header {}", SWEEP_HEADER.join(",")),
        ));
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let num = |idx: usize| -> Result<Option<f64>> {
            let field = &row[idx];
            if field.is_empty() {
                return Ok(None);
            }
            field
                .parse::<f64>()
                .map(Some)
                .map_err(|e| parse_err(line, format!("{}: {e}", SWEEP_HEADER[idx])))
        };
        let required = |idx: usize| -> Result<f64> {
            num(idx)?.ok_or_else(|| parse_err(line, format!("missing {}", SWEEP_HEADER[idx])))
        };
        let flag = match &row[4] {
            "" => None,
            s => Some(s.parse().map_err(|e| parse_err(line, e))?),
        };
        out.push(SweepRecord {
            x: required(0)?,
            y: required(1)?,
            ui: num(2)?,
            signed_apen: num(3)?,
            flag,
        });
    }
    Ok(out)
}
