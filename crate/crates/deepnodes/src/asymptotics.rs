//! Exact ratio tables converging to 5/3 and a floating-point confirmation
//! of the local expansion at `v = 1`.
//!
//! The exact table (total deepest nodes over tree count, per size) is the
//! primary evidence for the limit; the numeric fit of the `(1 - v)`
//! coefficient is corroborating only.

use num::{BigInt, Signed, Zero};
use thiserror::Error;

use crate::genfun::{gf_a, gf_dg, DGRoute};
use crate::series::Rat;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticsError {
    #[error("table computed to n = {available}, need n = {requested}")]
    InsufficientOrder { requested: usize, available: usize },
    #[error("v = {0} outside the domain (0, 1)")]
    DomainError(f64),
    #[error("interpolation system is singular (coinciding points?)")]
    SingularSystem,
    #[error("need at least 3 sample points, got {0}")]
    TooFewPoints(usize),
}

/// One row of the convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub n: usize,
    /// Total number of deepest nodes over all trees with `n` nodes.
    pub deepest_total: BigInt,
    /// Number of trees with `n` nodes.
    pub trees: BigInt,
    /// `deepest_total / trees` rendered to 6 decimal digits.
    pub ratio: String,
}

impl RatioRow {
    /// The exact average as a fraction.
    pub fn exact_ratio(&self) -> Rat {
        Rat::new(self.deepest_total.clone(), self.trees.clone())
    }
}

/// Render an exact fraction as a fixed-precision decimal string, rounding
/// half away from zero.
pub fn decimal_string(value: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let num = value.numer() * &scale;
    let den = value.denom();
    let neg = num.is_negative();
    let abs = num.abs();
    let scaled = (&abs * 2u32 + den) / (den * 2u32);
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part.to_string(),
        width = digits as usize
    )
}

/// Exact convergence table for `n = 1 .. max_n`, computed from the closed
/// kernel sum (the cheapest exact route) and the closed form of `A(z)`.
pub fn ratio_table(max_n: usize) -> Vec<RatioRow> {
    assert!(max_n >= 1);
    let dg = gf_dg(max_n, DGRoute::ClosedSum);
    let a = gf_a(max_n);
    (1..=max_n)
        .map(|n| {
            let deepest_total = dg.coeff(n).expect("within order").to_integer();
            let trees = a.coeff(n).expect("within order").to_integer();
            let ratio = decimal_string(&Rat::new(deepest_total.clone(), trees.clone()), 6);
            RatioRow {
                n,
                deepest_total,
                trees,
                ratio,
            }
        })
        .collect()
}

/// Result of [`limit_gap_check`]: exact gaps `|ratio(n) - 5/3|` at two
/// indices, and whether the gap shrank.
#[derive(Debug, Clone)]
pub struct GapReport {
    pub n_small: usize,
    pub n_large: usize,
    pub gap_small: Rat,
    pub gap_large: Rat,
    pub shrinks: bool,
}

/// Compare the distance to the limit 5/3 at two rows of the table.
pub fn limit_gap_check(
    table: &[RatioRow],
    n_small: usize,
    n_large: usize,
) -> Result<GapReport, AsymptoticsError> {
    assert!(n_small >= 1 && n_small < n_large);
    if n_large > table.len() {
        return Err(AsymptoticsError::InsufficientOrder {
            requested: n_large,
            available: table.len(),
        });
    }
    let limit = Rat::new(BigInt::from(5), BigInt::from(3));
    let gap = |n: usize| (table[n - 1].exact_ratio() - &limit).abs();
    let gap_small = gap(n_small);
    let gap_large = gap(n_large);
    let shrinks = gap_large < gap_small;
    Ok(GapReport {
        n_small,
        n_large,
        gap_small,
        gap_large,
        shrinks,
    })
}

/// A point of the kernel substitution evaluated numerically; for
/// `v` in `(0, 1)` both `q` in `(0, 1)` and `w > 0` hold, so the `k`-sums
/// converge geometrically.
#[derive(Debug, Clone, Copy)]
pub struct NumericPoint {
    pub v: f64,
    pub q: f64,
    pub delta: f64,
    /// `-ln q`.
    pub w: f64,
}

impl NumericPoint {
    pub fn new(v: f64) -> Result<Self, AsymptoticsError> {
        if !(0.0..=1.0).contains(&v) || v == 0.0 || v == 1.0 {
            return Err(AsymptoticsError::DomainError(v));
        }
        let q = v * (2.0 + v) / (1.0 + 2.0 * v);
        let delta = v * (2.0 * v + 1.0) / (v + 2.0);
        Ok(NumericPoint {
            v,
            q,
            delta,
            w: -q.ln(),
        })
    }
}

/// `F(v) = (1-v^2)^2 / ((v+2) v (2v+1)) * sum_{k>=1} k v^{2k} q^k / (1-q^k)`,
/// summed until the next (positive, geometrically decaying) term falls
/// below `eps` times the partial sum.
pub fn eval_sum_f(v: f64, eps: f64) -> Result<f64, AsymptoticsError> {
    let p = NumericPoint::new(v)?;
    assert!(eps > 0.0);
    let prefactor = {
        let one_minus_v2 = 1.0 - v * v;
        one_minus_v2 * one_minus_v2 / ((v + 2.0) * v * (2.0 * v + 1.0))
    };
    let mut sum = 0.0f64;
    let mut v2k = 1.0f64;
    let mut qk = 1.0f64;
    let mut k = 0u64;
    loop {
        k += 1;
        v2k *= v * v;
        qk *= p.q;
        let term = k as f64 * v2k * qk / (1.0 - qk);
        sum += term;
        if term < eps * sum {
            break;
        }
    }
    Ok(prefactor * sum)
}

/// Fit `c0 + c1 (1-v) + c2 (1-v)^2` to given values by least squares
/// (exact interpolation when three points are supplied).
pub fn fit_quadratic(
    points: &[f64],
    values: &[f64],
) -> Result<(f64, f64, f64), AsymptoticsError> {
    assert_eq!(points.len(), values.len());
    if points.len() < 3 {
        return Err(AsymptoticsError::TooFewPoints(points.len()));
    }
    for (i, a) in points.iter().enumerate() {
        if points[i + 1..].contains(a) {
            return Err(AsymptoticsError::SingularSystem);
        }
    }
    // normal equations for the basis {1, (1-v), (1-v)^2}
    let mut ata = [[0.0f64; 3]; 3];
    let mut atb = [0.0f64; 3];
    for (&v, &y) in points.iter().zip(values) {
        let x = 1.0 - v;
        let row = [1.0, x, x * x];
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * y;
        }
    }
    solve3(ata, atb).ok_or(AsymptoticsError::SingularSystem)
}

/// Evaluate `F` at the given points near `v = 1` and fit the local
/// expansion `c0 + c1 (1-v) + c2 (1-v)^2`. The coefficient that matters is
/// `c1`, which should approach `-1/3`; `c0` and `c2` are reported for
/// inspection only.
pub fn singular_coefficient_fit(points: &[f64]) -> Result<(f64, f64, f64), AsymptoticsError> {
    let values: Result<Vec<f64>, _> = points.iter().map(|&v| eval_sum_f(v, 1e-14)).collect();
    fit_quadratic(points, &values?)
}

/// Gaussian elimination with partial pivoting on a 3x3 system.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<(f64, f64, f64)> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let f = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0f64; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in (row + 1)..3 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some((x[0], x[1], x[2]))
}
