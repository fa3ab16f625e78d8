//! Parameter grids evaluated into CSV verdict tables.

use std::io::Write;

use perfect_arrays_core::association::associate;
use perfect_arrays_core::checkers::gaop_check;
use perfect_arrays_core::{Construction, ExponentArray, Perfection};
use serde::Serialize;

use crate::{parallel, Error, Result};

pub const PRESETS: [&str; 4] = ["acceptance", "negative", "blake", "chu"];

/// The perfection grid of the acceptance suite.
pub fn acceptance_grid() -> Vec<Construction> {
    let mut grid: Vec<Construction> = (2..=8).map(Construction::frank).collect();
    for m in [2, 3] {
        for k in [1, 2] {
            grid.push(Construction::milewski(m, k));
        }
    }
    for d in 2..=5 {
        for m in [1, 2] {
            grid.push(Construction::gfrank(d, m));
        }
    }
    grid.extend([
        Construction::floor2d(2),
        Construction::floor2d(4),
        Construction::floor_nd(2, 2),
    ]);
    grid.extend([
        Construction::gmilewski(2, 1, 1),
        Construction::gmilewski(2, 1, 2),
    ]);
    grid
}

pub fn preset(name: &str) -> Result<Vec<Construction>> {
    Ok(match name {
        "acceptance" => acceptance_grid(),
        "negative" => vec![
            Construction::floor2d(3).allowing_odd(),
            Construction::floor_nd(3, 1).allowing_odd(),
            Construction::blake_floor(1, 2, 0),
            Construction::gmilewski(3, 1, 1).allowing_odd(),
        ],
        "blake" => {
            let mut v = Vec::new();
            for m in 1..=2 {
                for n in 1..=3 {
                    for k in 0..=1 {
                        v.push(Construction::blake_floor(m, n, k));
                    }
                }
            }
            v
        }
        "chu" => (2..=16).map(Construction::chu).collect(),
        other => return Err(Error::UnknownPreset(other.to_string())),
    })
}

/// One CSV row. Empty cells mean "not applicable".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: String,
    pub shape: String,
    pub modulus: u32,
    pub volume: usize,
    pub guaranteed: bool,
    pub perfect: bool,
    pub witness: String,
    pub divisor: Option<usize>,
    pub gaop: Option<bool>,
    pub associated_perfect: Option<bool>,
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn evaluate(c: &Construction) -> Result<SweepRow> {
    let a: ExponentArray = c.generate()?;
    let perfection = parallel::is_perfect(&a);
    let witness = match &perfection {
        Perfection::Perfect => String::new(),
        Perfection::Imperfect { witness } => join(&witness.0, " "),
    };
    let divisor = c.divisor();
    let gaop = divisor
        .and_then(|d| gaop_check(&a, d).ok())
        .map(|r| r.holds);
    let associated_perfect = match (divisor, gaop) {
        (Some(d), Some(_)) => Some(parallel::is_perfect(associate(&a, d)?.base()).is_perfect()),
        _ => None,
    };
    Ok(SweepRow {
        family: c.family().name().to_string(),
        params: c.to_string(),
        shape: join(a.shape(), "x"),
        modulus: a.modulus(),
        volume: a.volume(),
        guaranteed: c.guaranteed_perfect(),
        perfect: perfection.is_perfect(),
        witness,
        divisor,
        gaop,
        associated_perfect,
    })
}

pub fn run(grid: &[Construction]) -> Result<Vec<SweepRow>> {
    grid.iter().map(evaluate).collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn to_csv(rows: &[SweepRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv is utf-8"))
}
