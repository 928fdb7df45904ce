//! Sweep engine and JSON-lines persistence: one row per parameter tuple,
//! carrying the derived region, braid, invariants and consistency checks.

pub mod svg;
pub mod verify;

use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::berge::{delta_choice, record_for, BergeError, BergeRecord, BergeType};
use crate::braid::cp_braid;
use crate::invar::{alexander, bennequin_genus, AlexanderCaps, InvarError};
use crate::laurent::LaurentError;
use crate::lshape::{region_for_record, LRegion, LShapeError};
use crate::sign::Sign;
use crate::trace::{is_immersed_arc, place, trace, TraceError};

#[derive(Error, Debug)]
pub enum AtlasError {
    #[error(transparent)]
    Params(#[from] BergeError),
    #[error(transparent)]
    Region(#[from] LShapeError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Invar(#[from] InvarError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("bad sweep grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Per-row consistency checks. `area_coef_gap` is the integer
/// `area − |coef|`; the rest are booleans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub area_coef_gap: i64,
    pub gap_matches_selector: bool,
    pub immersed_arc: bool,
    pub genus_triple_match: bool,
    pub coef_positive: bool,
    pub gt_conjecture_window: bool,
}

/// One sweep row: the record, its region and derived data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasRow {
    pub record: BergeRecord,
    pub region: LRegion,
    pub area: i64,
    pub double_points: i64,
    pub genus: i64,
    pub braid: String,
    pub alexander: Option<Vec<i64>>,
    pub alexander_capped: bool,
    pub checks: Checks,
}

/// The parameter grid walked by [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub types: Vec<BergeType>,
    pub eps: Vec<Sign>,
    pub a_range: RangeInclusive<i64>,
    pub k_range: RangeInclusive<i64>,
    pub t_range: RangeInclusive<i64>,
    pub caps: AlexanderCaps,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            types: BergeType::ALL.to_vec(),
            eps: vec![Sign::Plus, Sign::Minus],
            a_range: 2..=15,
            k_range: 0..=3,
            t_range: -3..=3,
            caps: AlexanderCaps::default(),
        }
    }
}

impl SweepSpec {
    /// Parse a grid string like `"A=2..10,k=0..3,t=-2..2"`; omitted keys
    /// keep their defaults.
    pub fn parse_grid(grid: &str) -> Result<Self, AtlasError> {
        let mut spec = SweepSpec::default();
        for part in grid.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, range) = part
                .split_once('=')
                .ok_or_else(|| AtlasError::Grid(format!("expected key=lo..hi, got {part:?}")))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| AtlasError::Grid(format!("expected lo..hi in {part:?}")))?;
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| AtlasError::Grid(format!("bad bound in {part:?}")))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| AtlasError::Grid(format!("bad bound in {part:?}")))?;
            if lo > hi {
                return Err(AtlasError::Grid(format!("empty range in {part:?}")));
            }
            match key.trim() {
                "A" | "a" => spec.a_range = lo..=hi,
                "k" => spec.k_range = lo..=hi,
                "t" => spec.t_range = lo..=hi,
                other => {
                    return Err(AtlasError::Grid(format!("unknown grid key {other:?}")));
                }
            }
        }
        Ok(spec)
    }

    /// Parse a type list like `"III,IV,V,VI"` into the spec.
    pub fn parse_types(list: &str) -> Result<Vec<BergeType>, AtlasError> {
        list.split(',')
            .map(|s| match s.trim().to_ascii_uppercase().as_str() {
                "III" => Ok(BergeType::III),
                "IV" => Ok(BergeType::IV),
                "V" => Ok(BergeType::V),
                "VI" => Ok(BergeType::VI),
                other => Err(AtlasError::Grid(format!("unknown type {other:?}"))),
            })
            .collect()
    }
}

fn selector_expected_gap(record: &BergeRecord) -> i64 {
    let parity = if record.small_a % 2 == 0 { 1 } else { -1 };
    let sgn_t = if record.params.t < 0 { -1 } else { 1 };
    if parity * record.params.epsilon.val() * sgn_t == 1 {
        0
    } else {
        1
    }
}

/// Build the atlas row for one validated record.
pub fn row_for(record: &BergeRecord, caps: AlexanderCaps) -> Result<AtlasRow, AtlasError> {
    let region = region_for_record(record)?;
    let area = region.area();
    let traced = trace(&place(&region))?;
    let traced_dp = traced.double_point_count as i64;
    let formula_dp = region.double_points().ok();
    let word = cp_braid(&region);
    let word_genus = bennequin_genus(&word).ok();
    let genus = word_genus.or(formula_dp).unwrap_or(traced_dp);
    let coef_abs = record.coef.abs();
    let gap = area - coef_abs;
    let checks = Checks {
        area_coef_gap: gap,
        gap_matches_selector: gap == selector_expected_gap(record),
        immersed_arc: is_immersed_arc(&traced),
        genus_triple_match: formula_dp == Some(traced_dp) && word_genus == Some(traced_dp),
        coef_positive: coef_abs > 0,
        gt_conjecture_window: 2 * genus + 8 <= coef_abs && coef_abs < 4 * genus,
    };
    let (alexander, alexander_capped) = if caps.allows(&word) {
        let (_, coeffs) = alexander(&word)?.to_i64_parts()?;
        (Some(coeffs), false)
    } else {
        (None, true)
    };
    Ok(AtlasRow {
        record: *record,
        region,
        area,
        double_points: formula_dp.unwrap_or(traced_dp),
        genus,
        braid: word.to_macro_string(),
        alexander,
        alexander_capped,
        checks,
    })
}

/// All validated records of the grid, in lexicographic order over
/// `(type, ε, A, k, t)` with `ε = +1` first. Tuples rejected by the
/// parameter rules are skipped; Type VI tuples that would normalize to an
/// already-visited canonical form are skipped too.
pub fn sweep_records(spec: &SweepSpec) -> Vec<BergeRecord> {
    let mut out = Vec::new();
    for &knot_type in BergeType::ALL.iter().filter(|t| spec.types.contains(t)) {
        for &eps in [Sign::Plus, Sign::Minus]
            .iter()
            .filter(|e| spec.eps.contains(e))
        {
            for a in spec.a_range.clone() {
                for k in spec.k_range.clone() {
                    for t in spec.t_range.clone() {
                        let delta = delta_choice(eps, t);
                        let Ok(record) = record_for(knot_type, delta, eps, a, k, t) else {
                            continue;
                        };
                        if record.params.vi_normalized {
                            continue;
                        }
                        out.push(record);
                    }
                }
            }
        }
    }
    out
}

/// Run the sweep, producing one row per valid tuple.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<AtlasRow>, AtlasError> {
    sweep_records(spec)
        .iter()
        .map(|r| row_for(r, spec.caps))
        .collect()
}

/// Serialize rows as JSON lines, one row per line, keys in declaration
/// order.
pub fn to_jsonl(rows: &[AtlasRow]) -> Result<String, AtlasError> {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(row)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn write_jsonl(path: &Path, rows: &[AtlasRow]) -> Result<(), AtlasError> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(to_jsonl(rows)?.as_bytes())?;
    Ok(())
}

pub fn read_jsonl(path: &Path) -> Result<Vec<AtlasRow>, AtlasError> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    let mut rows = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        rows.push(serde_json::from_str(&line)?);
    }
    Ok(rows)
}
