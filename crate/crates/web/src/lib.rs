//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function takes plain strings or numbers and returns JSON.
//! The `*_report` functions hold the logic and are usable natively.

use serde::Serialize;
use sts_core::classify::classify;
use sts_core::constructions::{build_h2, H2Params};
use sts_core::formulas::{linear_fit, unit_saddle_stats, UnitSaddleRow};
use sts_core::holonomy::{hol_ball_counts, HolonomyVector};
use sts_core::origami::Origami;
use sts_core::topology::Stratum;
use wasm_bindgen::prelude::*;

/// Larger surfaces make the orbit walk too slow for an interactive page.
pub const MAX_SQUARES: usize = 40;
pub const MAX_RADIUS: f64 = 24.0;
pub const MAX_STATS_N: usize = 40;

#[derive(Debug, Serialize)]
pub struct SurfaceReport {
    pub surface: String,
    pub n: usize,
    pub stratum: String,
    pub genus: usize,
    pub flags: Vec<&'static str>,
    pub orbit_size: Option<usize>,
    /// Horizontal cylinders read left to right as `(square, square above)`,
    /// 1-based.
    pub rows: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Serialize)]
pub struct HolonomyReport {
    pub radius: f64,
    /// `(a, b, saddle connections)`.
    pub vectors: Vec<(i64, i64, usize)>,
    /// Primitive vectors in the disc that are not holonomy vectors.
    pub missing: Vec<(i64, i64)>,
}

#[derive(Debug, Serialize)]
pub struct CurveReport {
    pub rows: Vec<CurveRow>,
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub r_squared: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct CurveRow {
    pub n: usize,
    pub reduced: usize,
    pub reduced_unit_saddle: usize,
    pub proportion: f64,
}

const FLAG_NAMES: [&str; 8] = [
    "reduced",
    "primitive",
    "normal",
    "holonomy",
    "visibility",
    "symmetry",
    "characteristic",
    "unit saddle",
];

fn parse_small(input: &str) -> Result<Origami, String> {
    let o = Origami::parse(input.trim()).map_err(|e| e.to_string())?;
    if o.n() > MAX_SQUARES {
        return Err(format!("{} squares; the demo accepts at most {MAX_SQUARES}", o.n()));
    }
    Ok(o)
}

pub fn surface_report(input: &str) -> Result<SurfaceReport, String> {
    let o = parse_small(input)?;
    let c = classify(&o).map_err(|e| e.to_string())?;
    let flags = c
        .flags
        .bits()
        .into_iter()
        .zip(FLAG_NAMES)
        .filter_map(|(b, name)| b.then_some(name))
        .collect();
    let rows = o
        .sigma()
        .cycles()
        .into_iter()
        .map(|cyc| cyc.into_iter().map(|i| (i + 1, o.tau().apply(i) + 1)).collect())
        .collect();
    Ok(SurfaceReport {
        surface: o.to_string(),
        n: o.n(),
        stratum: c.stratum.to_string(),
        genus: c.genus(),
        flags,
        orbit_size: c.orbit_size,
        rows,
    })
}

/// Parameters from the demo form: `a` is `k, l, m, p` for one cylinder and
/// `k, l, p, q` for two; `shears` is `alpha, beta`.
pub fn h2_params(one_cylinder: bool, a: [usize; 4], shears: [usize; 2]) -> H2Params {
    if one_cylinder {
        H2Params::OneCylinder {
            k: a[0],
            l: a[1],
            m: a[2],
            p: a[3],
            alpha: shears[0],
        }
    } else {
        H2Params::TwoCylinder {
            k: a[0],
            l: a[1],
            p: a[2],
            q: a[3],
            alpha: shears[0],
            beta: shears[1],
        }
    }
}

pub fn holonomy_report(input: &str, radius: f64) -> Result<HolonomyReport, String> {
    if !(radius > 0.0 && radius <= MAX_RADIUS) {
        return Err(format!("radius must be in (0, {MAX_RADIUS}]"));
    }
    let o = parse_small(input)?;
    let counts = hol_ball_counts(&o, radius).map_err(|e| e.to_string())?;
    let bound = radius.floor() as i64;
    let mut missing = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let v = HolonomyVector { a, b };
            if v.is_primitive() && v.norm() <= radius && !counts.contains_key(&v) {
                missing.push((a, b));
            }
        }
    }
    Ok(HolonomyReport {
        radius,
        vectors: counts.into_iter().map(|(v, c)| (v.a, v.b, c)).collect(),
        missing,
    })
}

pub fn curve_report(n_min: usize, n_max: usize) -> Result<CurveReport, String> {
    if n_min < 3 || n_min > n_max || n_max > MAX_STATS_N {
        return Err(format!("need 3 <= n_min <= n_max <= {MAX_STATS_N}"));
    }
    let alpha: Stratum = "2".parse().map_err(|e: sts_core::error::Error| e.to_string())?;
    let stats = unit_saddle_stats(&alpha, n_min..=n_max).map_err(|e| e.to_string())?;
    let pts: Vec<(f64, f64)> = stats.iter().map(|r| (r.n as f64, r.reciprocal())).collect();
    let fit = linear_fit(&pts);
    Ok(CurveReport {
        rows: stats.iter().map(curve_row).collect(),
        slope: fit.map(|f| f.slope),
        intercept: fit.map(|f| f.intercept),
        r_squared: fit.map(|f| f.r_squared),
    })
}

fn curve_row(r: &UnitSaddleRow) -> CurveRow {
    CurveRow {
        n: r.n,
        reduced: r.reduced,
        reduced_unit_saddle: r.reduced_unit_saddle,
        proportion: r.proportion(),
    }
}

fn to_json<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn classify_surface(input: &str) -> Result<String, JsError> {
    to_json(surface_report(input))
}

/// Builds an H(2) surface from cylinder parameters and returns its
/// `sigma|tau` string.
#[wasm_bindgen]
pub fn build_h2_surface(
    one_cylinder: bool,
    a0: usize,
    a1: usize,
    a2: usize,
    a3: usize,
    s0: usize,
    s1: usize,
) -> Result<String, JsError> {
    let params = h2_params(one_cylinder, [a0, a1, a2, a3], [s0, s1]);
    if params.squares() > MAX_SQUARES {
        return Err(JsError::new(&format!("at most {MAX_SQUARES} squares")));
    }
    build_h2(params)
        .map(|o| o.to_string())
        .map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn holonomy(input: &str, radius: f64) -> Result<String, JsError> {
    to_json(holonomy_report(input, radius))
}

#[wasm_bindgen]
pub fn unit_saddle_curve(n_min: usize, n_max: usize) -> Result<String, JsError> {
    to_json(curve_report(n_min, n_max))
}
