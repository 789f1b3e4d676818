//! Least squares from arcsine-distributed samples in the basis
//! `Q_j = P_j^* / sqrt(K_n)`.
//!
//! The `Q_j` are orthonormal under the arcsine density `1/(π sqrt(1-x²))`,
//! so the empirical Gram matrix of a sample has expectation `I`, and
//! `Σ_j Q_j(x)² = n + 1` at every point: the stability factor of the
//! regression is `n + 1`, the smallest possible for `n + 1` basis functions.
//!
//! Fitting in the `Q` basis without weights is the same as polynomial
//! regression with weight `1 / ((n+1) K_n(x))`, up to a constant factor.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::christoffel::q_basis_row;
use crate::error::{Error, Result};

/// Name recorded with every batch; identifies the uniform stream.
pub const GENERATOR_NAME: &str = "chacha8-u64seed";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub points: Vec<f64>,
    pub seed: u64,
    pub generator_name: String,
}

impl SampleBatch {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Maps a uniform variate `u ∈ [0, 1]` to `cos(π u)`, which has the arcsine
/// law on `[-1, 1]`.
pub fn arcsine_from_uniform(u: f64) -> f64 {
    (PI * u).cos()
}

/// `count` arcsine-distributed points from a seeded ChaCha8 stream.
pub fn sample_arcsine(count: usize, seed: u64) -> Result<SampleBatch> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..count).map(|_| arcsine_from_uniform(rng.gen::<f64>())).collect();
    Ok(SampleBatch {
        points,
        seed,
        generator_name: GENERATOR_NAME.to_string(),
    })
}

/// Matrix with entries `Q_j(x_m)`, one row per sample.
pub fn design_matrix(n: usize, batch: &SampleBatch) -> Result<DMatrix<f64>> {
    let mut d = DMatrix::zeros(batch.len(), n + 1);
    for (m, &x) in batch.points.iter().enumerate() {
        for (j, q) in q_basis_row(n, x)?.into_iter().enumerate() {
            d[(m, j)] = q;
        }
    }
    Ok(d)
}

/// `(1/M) Dᵀ D`; its expectation under the arcsine law is the identity.
pub fn empirical_gram(n: usize, batch: &SampleBatch) -> Result<DMatrix<f64>> {
    if batch.is_empty() {
        return Err(Error::InvalidArgument("empty sample batch".into()));
    }
    let d = design_matrix(n, batch)?;
    Ok(d.transpose() * &d / batch.len() as f64)
}

/// Spectral-norm distance of a symmetric matrix from the identity.
pub fn gram_deviation(gram: &DMatrix<f64>) -> f64 {
    let dim = gram.nrows();
    let diff = gram - DMatrix::<f64>::identity(dim, dim);
    diff.symmetric_eigenvalues().iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub n: usize,
    /// Coefficients in the `Q` basis.
    pub coefficients: Vec<f64>,
    pub residual_rms: f64,
    /// `‖G - I‖₂` for the empirical Gram matrix `G`.
    pub gram_deviation: f64,
    /// Ratio of extreme singular values of the design matrix.
    pub condition_estimate: f64,
    pub sample_count: usize,
    pub seed: u64,
}

/// Least-squares fit of `values` in `Q_0, …, Q_n` by Householder QR of the
/// design matrix.
pub fn fit_least_squares(n: usize, batch: &SampleBatch, values: &[f64]) -> Result<FitReport> {
    let count = batch.len();
    if values.len() != count {
        return Err(Error::InvalidArgument(format!(
            "{} values for {count} samples",
            values.len()
        )));
    }
    if count < n + 1 {
        return Err(Error::RankDeficient(format!(
            "{count} samples cannot determine {} coefficients",
            n + 1
        )));
    }
    let d = design_matrix(n, batch)?;
    let y = DVector::from_column_slice(values);

    let singular = d.clone().singular_values();
    let smax = singular.max();
    let smin = singular.min();
    if !(smin > f64::EPSILON * smax * count as f64) {
        return Err(Error::RankDeficient(format!(
            "design matrix singular to working precision (σ_min = {smin:e}, σ_max = {smax:e})"
        )));
    }

    let qr = d.clone().qr();
    let rhs = qr.q().transpose() * &y;
    let coeffs = qr
        .r()
        .solve_upper_triangular(&rhs)
        .ok_or_else(|| Error::RankDeficient("triangular factor is singular".into()))?;

    let residual = &d * &coeffs - &y;
    let residual_rms = (residual.norm_squared() / count as f64).sqrt();
    let gram = d.transpose() * &d / count as f64;

    Ok(FitReport {
        n,
        coefficients: coeffs.iter().copied().collect(),
        residual_rms,
        gram_deviation: gram_deviation(&gram),
        condition_estimate: smax / smin,
        sample_count: count,
        seed: batch.seed,
    })
}

/// `Σ_j c_j Q_j(x)`.
pub fn predict(report: &FitReport, x: f64) -> Result<f64> {
    let row = q_basis_row(report.n, x)?;
    Ok(row.iter().zip(&report.coefficients).map(|(q, c)| q * c).sum())
}

/// CSV with header `x,value`.
pub fn samples_csv(batch: &SampleBatch, values: &[f64]) -> Result<String> {
    two_column_csv(("x", "value"), batch.points.iter().copied().zip(values.iter().copied()))
}

/// CSV with header `x,prediction` at the given points.
pub fn predictions_csv(report: &FitReport, xs: &[f64]) -> Result<String> {
    let preds = xs.iter().map(|&x| predict(report, x)).collect::<Result<Vec<_>>>()?;
    two_column_csv(("x", "prediction"), xs.iter().copied().zip(preds))
}

fn two_column_csv(header: (&str, &str), rows: impl Iterator<Item = (f64, f64)>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([header.0, header.1])?;
    for (a, b) in rows {
        w.write_record([format!("{a:e}"), format!("{b:e}")])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
