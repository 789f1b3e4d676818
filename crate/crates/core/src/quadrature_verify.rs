//! Floating-point verification of the weighted orthogonality, independent of
//! the exact path.
//!
//! After `x = cos θ` the inner products become averages of smooth
//! `2π`-periodic functions, `(1/2π) ∫ P_i^* P_j^* / K_n (cos θ) dθ`, which the
//! trapezoid rule integrates with geometric convergence. The integrand is
//! rational in `cos θ` with poles at the zeros of `F_n` and `G_n`, so no
//! fixed Gauss rule is exact; the grid is doubled until successive values
//! settle.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::fn_closed_coeffs;
use crate::legendre::{legendre_eval_generic, legendre_normalized_values};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Points on the first grid.
    pub base_points: usize,
    /// Refinement stops with a non-convergence report past this many points.
    pub max_points: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            base_points: 64,
            max_points: 1 << 20,
        }
    }
}

/// One grid level of a refinement run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementStep {
    pub points: usize,
    /// Largest entrywise change from the previous level (`None` on the first).
    pub max_change: Option<f64>,
    /// Largest entrywise distance from the identity.
    pub max_deviation: f64,
}

/// Numerically computed Gram matrix of `P_0^*, …, P_n^*` under
/// `dx / (K_n(x) π sqrt(1 - x²))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthoReport {
    pub n: usize,
    pub gram: Vec<Vec<f64>>,
    pub max_offdiag: f64,
    pub max_diag_dev: f64,
    pub points_used: usize,
    /// Entries `(i, j)` that had not settled when the point cap was hit.
    pub unconverged: Vec<(usize, usize)>,
    pub history: Vec<RefinementStep>,
}

impl OrthoReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_offdiag.max(self.max_diag_dev)
    }

    pub fn converged(&self) -> bool {
        self.unconverged.is_empty()
    }

    /// Gram matrix as CSV, one row per line.
    pub fn gram_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<String> = (0..=self.n).map(|j| format!("j{j}")).collect();
        w.write_record(std::iter::once("i".to_string()).chain(header))?;
        for (i, row) in self.gram.iter().enumerate() {
            w.write_record(std::iter::once(i.to_string()).chain(row.iter().map(|v| format!("{v:e}"))))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Adds `Q_i(cos θ) Q_j(cos θ)` for the upper triangle into `acc`.
fn accumulate(n: usize, theta: f64, acc: &mut [f64]) {
    let p = legendre_normalized_values(n, theta.cos());
    let kn: f64 = p.iter().map(|v| v * v).sum::<f64>() / (n + 1) as f64;
    let inv = kn.recip();
    let mut idx = 0;
    for i in 0..=n {
        for j in i..=n {
            acc[idx] += p[i] * p[j] * inv;
            idx += 1;
        }
    }
}

/// Gram matrix by the periodic trapezoid rule with grid doubling, default
/// grid configuration.
pub fn orthogonality_numeric(n: usize, tol: f64) -> Result<OrthoReport> {
    orthogonality_numeric_with(n, tol, &QuadConfig::default())
}

/// Gram matrix by the periodic trapezoid rule. Doubles the grid until every
/// entry changes by less than `tol / 10`.
pub fn orthogonality_numeric_with(n: usize, tol: f64, cfg: &QuadConfig) -> Result<OrthoReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    if cfg.base_points == 0 || cfg.max_points < cfg.base_points {
        return Err(Error::InvalidArgument("invalid grid configuration".into()));
    }
    let tri = (n + 1) * (n + 2) / 2;
    let mut sum = vec![0.0; tri];
    let mut points = cfg.base_points;
    for m in 0..points {
        accumulate(n, TAU * m as f64 / points as f64, &mut sum);
    }
    let mut values: Vec<f64> = sum.iter().map(|s| s / points as f64).collect();
    let mut history = vec![RefinementStep {
        points,
        max_change: None,
        max_deviation: deviation(n, &values),
    }];
    let mut changes = vec![f64::INFINITY; tri];
    while changes.iter().any(|&c| !(c < tol / 10.0)) && 2 * points <= cfg.max_points {
        // new points are the midpoints of the current grid
        for m in 0..points {
            accumulate(n, TAU * (2 * m + 1) as f64 / (2 * points) as f64, &mut sum);
        }
        points *= 2;
        let next: Vec<f64> = sum.iter().map(|s| s / points as f64).collect();
        for (c, (a, b)) in changes.iter_mut().zip(next.iter().zip(&values)) {
            *c = (a - b).abs();
        }
        values = next;
        history.push(RefinementStep {
            points,
            max_change: Some(changes.iter().cloned().fold(0.0, f64::max)),
            max_deviation: deviation(n, &values),
        });
    }

    let mut gram = vec![vec![0.0; n + 1]; n + 1];
    let mut unconverged = Vec::new();
    let mut idx = 0;
    for i in 0..=n {
        for j in i..=n {
            gram[i][j] = values[idx];
            gram[j][i] = values[idx];
            if !(changes[idx] < tol / 10.0) {
                unconverged.push((i, j));
            }
            idx += 1;
        }
    }
    let (max_offdiag, max_diag_dev) = offdiag_and_diag(&gram);
    Ok(OrthoReport {
        n,
        gram,
        max_offdiag,
        max_diag_dev,
        points_used: points,
        unconverged,
        history,
    })
}

fn deviation(n: usize, upper: &[f64]) -> f64 {
    let mut idx = 0;
    let mut worst: f64 = 0.0;
    for i in 0..=n {
        for j in i..=n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((upper[idx] - target).abs());
            idx += 1;
        }
    }
    worst
}

fn offdiag_and_diag(gram: &[Vec<f64>]) -> (f64, f64) {
    let mut off: f64 = 0.0;
    let mut diag: f64 = 0.0;
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i == j {
                diag = diag.max((v - 1.0).abs());
            } else {
                off = off.max(v.abs());
            }
        }
    }
    (off, diag)
}

/// `(1/2πi) ∮ h(z) dz` over the unit circle by the `points`-point trapezoid
/// rule, `(1/M) Σ_m z_m h(z_m)`.
pub fn contour_mean<H: Fn(Complex64) -> Complex64>(h: H, points: usize) -> Complex64 {
    let total: Complex64 = (0..points)
        .map(|m| {
            let z = Complex64::from_polar(1.0, TAU * m as f64 / points as f64);
            z * h(z)
        })
        .sum();
    total / points as f64
}

/// Doubles the grid of [`contour_mean`] until successive values differ by
/// less than `tol`.
pub fn contour_integral<H: Fn(Complex64) -> Complex64>(h: H, tol: f64, cfg: &QuadConfig) -> Result<Complex64> {
    let mut points = cfg.base_points;
    let mut prev = contour_mean(&h, points);
    while 2 * points <= cfg.max_points {
        points *= 2;
        let next = contour_mean(&h, points);
        if (next - prev).norm() < tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NonConvergence(format!("contour integral unsettled at {points} points")))
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `(1/2πi) ∮ 2(n+1) z^{2n-1} P_k(J(z)) / (F_n(z) G_n(z)) dz` by trapezoid
/// sampling of the unit circle.
pub fn contour_moment_numeric(n: usize, k: usize) -> Result<Complex64> {
    contour_moment_numeric_with(n, k, &QuadConfig::default())
}

pub fn contour_moment_numeric_with(n: usize, k: usize, cfg: &QuadConfig) -> Result<Complex64> {
    if n == 0 || k > 2 * n {
        return Err(Error::InvalidArgument(format!("need n >= 1 and k <= 2n, got n = {n}, k = {k}")));
    }
    let f = fn_closed_coeffs(n).coeffs_f64();
    let g: Vec<f64> = f.iter().rev().cloned().collect();
    let scale = 2.0 * (n + 1) as f64;
    let h = |z: Complex64| {
        let j = (z + z.inv()) * 0.5;
        let (pk, _) = legendre_eval_generic(k, j);
        z.powi(2 * n as i32 - 1) * pk * scale / (horner(&f, z) * horner(&g, z))
    };
    contour_integral(h, 1e-15, cfg)
}

/// `∫_{-1}^{1} P_i^* P_j^* / K_n · dx / (π sqrt(1 - x²))` evaluated on the
/// interval itself with Chebyshev–Lobatto nodes `x_m = cos(π m / N)` (the
/// trapezoid rule on `[0, π]` after the substitution), refined until
/// successive values differ by less than `1e-15`.
pub fn interval_form_numeric(n: usize, i: usize, j: usize) -> Result<f64> {
    if i > n || j > n {
        return Err(Error::InvalidArgument(format!("indices ({i}, {j}) exceed n = {n}")));
    }
    let integrand = |x: f64| {
        let p = legendre_normalized_values(n, x);
        let kn: f64 = p.iter().map(|v| v * v).sum::<f64>() / (n + 1) as f64;
        p[i] * p[j] / kn
    };
    let lobatto = |intervals: usize| {
        let inner: f64 = (1..intervals)
            .map(|m| integrand((PI * m as f64 / intervals as f64).cos()))
            .sum();
        (inner + 0.5 * (integrand(1.0) + integrand(-1.0))) / intervals as f64
    };
    let mut intervals = 32;
    let mut prev = lobatto(intervals);
    while intervals < (1 << 20) {
        intervals *= 2;
        let next = lobatto(intervals);
        if (next - prev).abs() < 1e-15 {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NonConvergence(format!("interval form unsettled for ({i}, {j})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n0_is_exactly_one() {
        let r = orthogonality_numeric(0, 1e-12).unwrap();
        assert_eq!(r.gram.len(), 1);
        assert!((r.gram[0][0] - 1.0).abs() < 1e-15);
        assert!(r.converged());
    }

    #[test]
    fn n2_report() {
        let r = orthogonality_numeric(2, 1e-10).unwrap();
        assert!(r.max_deviation() < 1e-10, "{r:?}");
        assert!(r.converged());
        assert_eq!(r.points_used % 64, 0);
        assert!((r.points_used / 64).is_power_of_two());
    }

    #[test]
    fn gram_symmetric_and_close_to_identity() {
        for n in [5, 12, 20] {
            let r = orthogonality_numeric(n, 1e-10).unwrap();
            for i in 0..=n {
                for j in 0..=n {
                    assert!((r.gram[i][j] - r.gram[j][i]).abs() <= 1e-13);
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((r.gram[i][j] - target).abs() < 1e-10, "n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn refinement_is_geometric() {
        for n in 1..=10 {
            let cfg = QuadConfig { base_points: 4, max_points: 1 << 14 };
            let r = orthogonality_numeric_with(n, 1e-13, &cfg).unwrap();
            let errs: Vec<f64> = r.history.iter().map(|s| s.max_deviation).collect();
            let mut checked = 0;
            for w in errs.windows(2) {
                // past the resolution threshold and above round-off
                if w[0] < 1e-2 && w[1] > 1e-13 {
                    assert!(w[1] / w[0] < 0.5, "n={n} errors {errs:?}");
                    checked += 1;
                }
            }
            assert!(checked >= 1 || errs.last().unwrap() < &1e-13, "n={n} errors {errs:?}");
        }
    }

    #[test]
    fn point_cap_reports_unconverged_entries() {
        let cfg = QuadConfig { base_points: 4, max_points: 8 };
        let r = orthogonality_numeric_with(15, 1e-12, &cfg).unwrap();
        assert!(!r.converged());
        assert!(r.points_used <= 8);
        assert!(orthogonality_numeric(3, 0.0).is_err());
    }

    #[test]
    fn contour_moment_examples() {
        let m0 = contour_moment_numeric(1, 0).unwrap();
        assert!((m0.re - 2.0).abs() < 1e-12 && m0.im.abs() < 1e-12);
        let m2 = contour_moment_numeric(1, 2).unwrap();
        assert!(m2.norm() < 1e-12);
        assert!(contour_moment_numeric(1, 3).is_err());
        assert!(contour_moment_numeric(0, 0).is_err());
    }

    #[test]
    fn interval_form_examples() {
        for n in 0..=4 {
            assert!((interval_form_numeric(n, 0, 0).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((interval_form_numeric(2, 1, 1).unwrap() - 1.0).abs() < 1e-10);
        assert!(interval_form_numeric(2, 0, 2).unwrap().abs() < 1e-10);
        for n in [3, 8] {
            let r = orthogonality_numeric(n, 1e-12).unwrap();
            for i in 0..=n {
                for j in 0..=n {
                    let v = interval_form_numeric(n, i, j).unwrap();
                    assert!((v - r.gram[i][j]).abs() < 1e-12, "n={n} ({i},{j})");
                }
            }
        }
        assert!(interval_form_numeric(2, 3, 0).is_err());
    }

    #[test]
    fn csv_dump() {
        let r = orthogonality_numeric(1, 1e-10).unwrap();
        let csv = r.gram_csv().unwrap();
        assert!(csv.starts_with("i,j0,j1\n"));
        assert_eq!(csv.lines().count(), 3);
    }
}
