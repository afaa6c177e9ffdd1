//! Divisor sums, closed-form counts for `H(2)`, and empirical tallies.
//!
//! Closed forms are evaluated in exact rational arithmetic; a value that
//! should be an integer but is not is reported as [`Error::NonIntegral`].

use num_rational::Ratio;
use rayon::prelude::*;

use crate::canonical::CanonicalKey;
use crate::classify::classify_keys;
use crate::constructions::{h11_surfaces, h2_surfaces};
use crate::enumerate::{census_keys, CensusOptions};
use crate::error::{Error, Result};
use crate::holonomy::{has_horizontal_unit_saddle, singular_corners};
use crate::sl2z::{act_s, DEFAULT_ORBIT_CAP};
use crate::topology::{is_reduced, stratum, Stratum};

/// `ζ(3)`, Apéry's constant.
pub const ZETA_3: f64 = 1.202_056_903_159_594;

/// `ζ(x)` for the exponents the divisor bounds are checked at.
pub fn zeta(x: u32) -> Option<f64> {
    match x {
        2 => Some(std::f64::consts::PI * std::f64::consts::PI / 6.0),
        3 => Some(ZETA_3),
        _ => None,
    }
}

/// `σ_x(n) = Σ_{d | n} d^x`.
pub fn sigma(x: u32, n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::BadParameters("sigma needs n >= 1".into()));
    }
    let mut total = 0u128;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += (d as u128).pow(x);
            let e = n / d;
            if e != d {
                total += (e as u128).pow(x);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// `σ_x(1), …, σ_x(n_max)` computed with a divisor sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    pub x: u32,
    values: Vec<u128>,
}

impl SigmaTable {
    pub fn new(x: u32, n_max: usize) -> Self {
        let mut values = vec![0u128; n_max + 1];
        for d in 1..=n_max {
            let dx = (d as u128).pow(x);
            for m in (d..=n_max).step_by(d) {
                values[m] += dx;
            }
        }
        SigmaTable { x, values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `σ_x(n)` for `1 ≤ n ≤ n_max`.
    pub fn get(&self, n: usize) -> u128 {
        assert!(n >= 1 && n <= self.n_max(), "n = {n} outside the table");
        self.values[n]
    }

    /// `n^x ≤ σ_x(n) ≤ ζ(x)·n^x`; `None` when `ζ(x)` is not tabulated.
    pub fn bounds_hold(&self, n: usize) -> Option<bool> {
        let z = zeta(self.x)?;
        let s = self.get(n);
        let nx = (n as u128).pow(self.x);
        Some(s >= nx && (s as f64) <= z * nx as f64)
    }
}

fn to_integer(r: Ratio<i128>, what: &str) -> Result<i128> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} evaluated to {r}")))
    }
}

/// Number of two-cylinder surfaces in `H(2)` with `n` squares:
/// `5/24 σ₃(n) + 1/2 σ₂(n) − 3/4 n σ₁(n) + 1/24 σ₁(n)`.
pub fn two_cyl_count_h2(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::TooFewSquares { n: n as usize, min: 3 });
    }
    let s = |x| sigma(x, n).map(|v| Ratio::from_integer(v as i128));
    let r = |a, b| Ratio::new(a, b);
    let nn = Ratio::from_integer(n as i128);
    let value = r(5, 24) * s(3)? + r(1, 2) * s(2)? - r(3, 4) * nn * s(1)? + r(1, 24) * s(1)?;
    let v = to_integer(value, "two-cylinder count")?;
    u64::try_from(v).map_err(|_| Error::NonIntegral(format!("two-cylinder count {v} is negative")))
}

/// `Σ kl` over `p, q ≥ 1`, `k > l ≥ 1` with `pk + ql = n`: the number of
/// two-cylinder parameter choices counted directly.
pub fn two_cyl_count_brute(n: u64) -> u64 {
    let mut total = 0;
    for k in 2..=n {
        for l in 1..k {
            for p in 1..=n / k {
                let rest = n - p * k;
                if rest > 0 && rest.is_multiple_of(l) {
                    total += k * l;
                }
            }
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamanujanReport {
    pub n: u64,
    /// `Σ_{P=1}^{n−1} σ₁(P) σ₁(n−P)`
    pub lhs: i128,
    /// `5/12 σ₃(n) + 1/12 σ₁(n) − 1/2 n σ₁(n)`
    pub rhs: Ratio<i128>,
}

impl RamanujanReport {
    pub fn holds(&self) -> bool {
        self.rhs == Ratio::from_integer(self.lhs)
    }
}

/// Both sides of the convolution identity for `σ₁`.
pub fn ramanujan_convolution(n: u64) -> Result<RamanujanReport> {
    if n < 2 {
        return Err(Error::TooFewSquares { n: n as usize, min: 2 });
    }
    let table = SigmaTable::new(1, n as usize);
    Ok(ramanujan_with_table(&table, n as usize))
}

/// Reports for every `2 ≤ n ≤ n_max`, sharing one sieve.
pub fn ramanujan_range(n_max: u64) -> Vec<RamanujanReport> {
    let s1 = SigmaTable::new(1, n_max as usize);
    (2..=n_max as usize)
        .into_par_iter()
        .map(|n| ramanujan_with_table(&s1, n))
        .collect()
}

fn ramanujan_with_table(s1: &SigmaTable, n: usize) -> RamanujanReport {
    let lhs: i128 = (1..n).map(|p| (s1.get(p) * s1.get(n - p)) as i128).sum();
    let s1n = Ratio::from_integer(s1.get(n) as i128);
    let s3n = Ratio::from_integer(sigma(3, n as u64).unwrap() as i128);
    let nn = Ratio::from_integer(n as i128);
    let rhs = Ratio::new(5, 12) * s3n + Ratio::new(1, 12) * s1n - Ratio::new(1, 2) * nn * s1n;
    RamanujanReport { n: n as u64, lhs, rhs }
}

/// `n² ∏_{p | n} (1 − p⁻²)`, Jordan's totient `J₂(n)`.
fn jordan2(n: u64) -> u64 {
    let mut out = n * n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out = out / (p * p) * (p * p - 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out = out / (m * m) * (m * m - 1);
    }
    out
}

/// Sizes of the SL(2,Z) orbits of reduced `H(2)` surfaces with `n`
/// squares. Odd `n` has orbits of sizes `3/16 (n−1) J₂(n)` and
/// `3/16 (n−3) J₂(n)` (the second is empty at `n = 3`); even `n` has one
/// orbit of size `3/8 (n−2) J₂(n)`.
pub fn lr_orbit_sizes(n: u64) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(Error::TooFewSquares { n: n as usize, min: 3 });
    }
    let j = Ratio::from_integer(jordan2(n) as i128);
    let nn = Ratio::from_integer(n as i128);
    let sizes = if n % 2 == 1 {
        vec![
            Ratio::new(3, 16) * (nn - 1) * j,
            Ratio::new(3, 16) * (nn - 3) * j,
        ]
    } else {
        vec![Ratio::new(3, 8) * (nn - 2) * j]
    };
    let mut out = Vec::new();
    for s in sizes {
        let v = to_integer(s, "orbit size")?;
        if v > 0 {
            out.push(v as u64);
        }
    }
    Ok(out)
}

/// `(2g−2+s, 4g+2s−5, 4g−4+2s)`: the fewest squares in `H(α)`, the most
/// squares for which every reduced surface is a visibility torus, and the
/// square count of the split-square non-visibility construction.
pub fn thresholds(alpha: &Stratum) -> (usize, usize, usize) {
    let (g, s) = (alpha.genus(), alpha.s());
    (2 * g - 2 + s, 4 * g + 2 * s - 5, 4 * g - 4 + 2 * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VisibilityCount {
    pub n: usize,
    pub reduced: usize,
    pub visibility: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVisReport {
    pub alpha: Stratum,
    pub rows: Vec<VisibilityCount>,
}

impl NonVisReport {
    /// Largest square count with a visibility torus.
    pub fn largest_visibility(&self) -> Option<usize> {
        self.rows.iter().rev().find(|r| r.visibility > 0).map(|r| r.n)
    }
}

/// Surfaces of `H(α)` with `n` squares. Genus two uses the cylinder
/// parametrizations; other strata go through the census and are limited by
/// its cap.
pub fn stratum_keys(alpha: &Stratum, n: usize, opts: &CensusOptions) -> Result<Vec<CanonicalKey>> {
    if n < alpha.min_squares() {
        return Ok(Vec::new());
    }
    match alpha.alpha() {
        [2] => Ok(h2_surfaces(n)),
        [1, 1] => Ok(h11_surfaces(n)),
        _ => Ok(census_keys(n, opts)?
            .into_par_iter()
            .filter(|k| stratum(&k.origami()) == *alpha)
            .collect()),
    }
}

/// Counts the visibility tori of `H(α)` for each `n` from the minimum up to
/// `n_max`.
pub fn empirical_nonvis_bound(alpha: &Stratum, n_max: usize, opts: &CensusOptions) -> Result<NonVisReport> {
    if alpha.genus() < 2 {
        return Err(Error::UnsupportedStratum(format!("{alpha} has no cone point")));
    }
    let mut rows = Vec::new();
    for n in alpha.min_squares()..=n_max {
        let keys: Vec<CanonicalKey> = stratum_keys(alpha, n, opts)?
            .into_par_iter()
            .filter(|k| is_reduced(&k.origami()))
            .collect();
        let classes = classify_keys(&keys, DEFAULT_ORBIT_CAP)?;
        rows.push(VisibilityCount {
            n,
            reduced: keys.len(),
            visibility: classes.iter().filter(|c| c.flags.visibility).count(),
        });
    }
    Ok(NonVisReport {
        alpha: alpha.clone(),
        rows,
    })
}

/// Unit-saddle tallies of `H(2)` with `n` squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitSaddleRow {
    pub n: usize,
    pub total: usize,
    pub reduced: usize,
    pub unit_saddle: usize,
    pub reduced_unit_saddle: usize,
}

impl UnitSaddleRow {
    /// Share of reduced surfaces with a unit saddle.
    pub fn proportion(&self) -> f64 {
        self.reduced_unit_saddle as f64 / self.reduced as f64
    }

    pub fn reciprocal(&self) -> f64 {
        1.0 / self.proportion()
    }

    pub fn total_over_n3(&self) -> f64 {
        self.total as f64 / (self.n as f64).powi(3)
    }

    pub fn unit_over_n2(&self) -> f64 {
        self.unit_saddle as f64 / (self.n as f64).powi(2)
    }

    pub const CSV_HEADER: &'static str =
        "n,total,reduced,unit_saddle,reduced_unit_saddle,proportion,reciprocal,total_over_n3,unit_over_n2";

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
            self.n,
            self.total,
            self.reduced,
            self.unit_saddle,
            self.reduced_unit_saddle,
            self.proportion(),
            self.reciprocal(),
            self.total_over_n3(),
            self.unit_over_n2()
        )
    }
}

fn has_unit(o: &crate::origami::Origami) -> bool {
    singular_corners(o).iter().any(|&x| x)
        && (has_horizontal_unit_saddle(o) || has_horizontal_unit_saddle(&act_s(o)))
}

/// Per-`n` unit-saddle counts for `H(2)`, from the cylinder parametrization.
pub fn unit_saddle_stats(alpha: &Stratum, ns: impl IntoIterator<Item = usize>) -> Result<Vec<UnitSaddleRow>> {
    if alpha.alpha() != [2] {
        return Err(Error::UnsupportedStratum(format!(
            "unit-saddle statistics are only available for H(2), not {alpha}"
        )));
    }
    let mut rows = Vec::new();
    for n in ns {
        if n < 3 {
            return Err(Error::TooFewSquares { n, min: 3 });
        }
        let flags: Vec<(bool, bool)> = h2_surfaces(n)
            .par_iter()
            .map(|k| {
                let o = k.origami();
                (is_reduced(&o), has_unit(&o))
            })
            .collect();
        rows.push(UnitSaddleRow {
            n,
            total: flags.len(),
            reduced: flags.iter().filter(|f| f.0).count(),
            unit_saddle: flags.iter().filter(|f| f.1).count(),
            reduced_unit_saddle: flags.iter().filter(|f| f.0 && f.1).count(),
        });
    }
    Ok(rows)
}

/// Least-squares line `y = slope·x + intercept` with its `R²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn linear_fit(points: &[(f64, f64)]) -> Option<LinearFit> {
    let m = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Some(LinearFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
    })
}
