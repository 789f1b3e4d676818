//! The normalized reciprocal Christoffel function
//! `K_n(x) = (1/(n+1)) Σ_{k<=n} P_k^*(x)²` and the weighted basis
//! `Q_j = P_j^* / sqrt(K_n)`.
//!
//! Three evaluation routes are provided and cross-checked: the defining sum
//! of squares, the Christoffel–Darboux form
//! `(P_{n+1}' P_n - P_{n+1} P_n') / 2`, and the closed form
//! `((n+1)² P_n² - (x²-1) P_n'²) / (2(n+1))`. The last two hold for complex
//! arguments as polynomial identities.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::legendre::{legendre_eval_generic, legendre_exact_table, legendre_normalized_values};
use crate::ratpoly::{int, rat, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChristoffelMode {
    Sum,
    ChristoffelDarboux,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChristoffelEvaluator {
    pub n: usize,
    pub mode: ChristoffelMode,
}

impl ChristoffelEvaluator {
    pub fn new(n: usize, mode: ChristoffelMode) -> Self {
        ChristoffelEvaluator { n, mode }
    }

    /// Sum-of-squares evaluator, the default on the real interval.
    pub fn real(n: usize) -> Self {
        Self::new(n, ChristoffelMode::Sum)
    }

    /// Closed-form evaluator, the default for complex arguments.
    pub fn complex(n: usize) -> Self {
        Self::new(n, ChristoffelMode::ClosedForm)
    }

    /// `K_n(x)` for real `x`.
    pub fn eval(&self, x: f64) -> f64 {
        match self.mode {
            ChristoffelMode::Sum => {
                let s: f64 = legendre_normalized_values(self.n, x).iter().map(|v| v * v).sum();
                s / (self.n + 1) as f64
            }
            _ => self.eval_complex(Complex64::new(x, 0.0)).re,
        }
    }

    /// `K_n(z)` as the analytic polynomial. The sum mode squares `P_k^*(z)`
    /// (not its modulus) so all three modes agree off the real axis.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let n = self.n;
        let np1 = (n + 1) as f64;
        match self.mode {
            ChristoffelMode::Sum => {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..=n {
                    let (p, _) = legendre_eval_generic(k, z);
                    acc += p * p * ((2 * k + 1) as f64 / 2.0);
                }
                acc / np1
            }
            ChristoffelMode::ChristoffelDarboux => {
                let (p, dp) = legendre_eval_generic(n, z);
                let (q, dq) = legendre_eval_generic(n + 1, z);
                (dq * p - q * dp) * 0.5
            }
            ChristoffelMode::ClosedForm => {
                let (p, dp) = legendre_eval_generic(n, z);
                (p * p * (np1 * np1) - (z * z - 1.0) * dp * dp) / (2.0 * np1)
            }
        }
    }
}

/// `K_n(x)` by the sum of squares.
pub fn kn_eval(n: usize, x: f64) -> f64 {
    ChristoffelEvaluator::real(n).eval(x)
}

/// Exact `K_n` from the defining sum of squares.
pub fn kn_exact(n: usize) -> LaurentPoly {
    let p = legendre_exact_table(n);
    let sum = p.iter().enumerate().fold(LaurentPoly::zero(), |acc, (k, pk)| {
        &acc + &(pk * pk).scale(&rat(2 * k as i64 + 1, 2))
    });
    sum.scale(&rat(1, n as i64 + 1))
}

/// Exact `K_n` from the closed form in `P_n` and `P_n'`.
pub fn kn_exact_closed(n: usize) -> LaurentPoly {
    let p = legendre_exact_table(n).pop().unwrap();
    let dp = p.diff();
    let np1 = n as i64 + 1;
    let x2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1], 1);
    let v = &(&p * &p).scale(&int(np1 * np1)) - &(&x2m1 * &(&dp * &dp));
    v.scale(&rat(1, 2 * np1))
}

/// Exact `K_n` from the Christoffel–Darboux form.
pub fn kn_exact_christoffel_darboux(n: usize) -> LaurentPoly {
    let table = legendre_exact_table(n + 1);
    let (p, q) = (&table[n], &table[n + 1]);
    (&(&q.diff() * p) - &(q * &p.diff())).scale(&rat(1, 2))
}

/// Exact agreement of the sum and closed forms of `K_n`.
pub fn check_kn_identity(n: usize) -> Certificate {
    Certificate::from_residual("kn_closed_form", n, None, &(&kn_exact(n) - &kn_exact_closed(n)))
}

/// Exact agreement of all three forms of `K_n`.
pub fn check_kn_three_way(n: usize) -> Certificate {
    let sum = kn_exact(n);
    Certificate::from_residuals(
        "kn_three_way",
        n,
        None,
        &[&sum - &kn_exact_closed(n), &sum - &kn_exact_christoffel_darboux(n)],
    )
}

fn check_interval(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("x = {x} lies outside [-1, 1]")))
    }
}

/// `Q_j(x) = P_j^*(x) / sqrt(K_n(x))` for `0 <= j <= n`, `x ∈ [-1, 1]`.
pub fn q_basis_eval(n: usize, j: usize, x: f64) -> Result<f64> {
    if j > n {
        return Err(Error::InvalidArgument(format!("index j = {j} exceeds n = {n}")));
    }
    Ok(q_basis_row(n, x)?[j])
}

/// The row `(Q_0(x), …, Q_n(x))`.
pub fn q_basis_row(n: usize, x: f64) -> Result<Vec<f64>> {
    check_interval(x)?;
    let p = legendre_normalized_values(n, x);
    let k: f64 = p.iter().map(|v| v * v).sum::<f64>() / (n + 1) as f64;
    let inv = k.sqrt().recip();
    Ok(p.into_iter().map(|v| v * inv).collect())
}
