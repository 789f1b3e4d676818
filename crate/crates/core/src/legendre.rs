//! Classical Legendre polynomials `P_n`, normalized so that `P_n(1) = 1`.
//!
//! Floating evaluation uses the forward three-term recurrence together with
//! its differentiated form. Exact coefficients come from the explicit
//! binomial sum, so the recurrence itself is something the identity ledger
//! can check rather than assume.

use std::ops::{Add, Div, Mul, Sub};

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::ratpoly::{binomial, int, inv_pow2, rat, LaurentPoly, Rational, Surd};

/// `(P_n(x), P_n'(x))` by forward recurrence.
///
/// Generic so that the same code runs on `f64` and on complex arguments.
pub fn legendre_eval_generic<T>(n: usize, x: T) -> (T, T)
where
    T: Copy + From<f64> + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let one = T::from(1.0);
    let zero = T::from(0.0);
    if n == 0 {
        return (one, zero);
    }
    let (mut p_prev, mut p) = (one, x);
    let (mut d_prev, mut d) = (zero, one);
    for k in 1..n {
        let kf = k as f64;
        let a = T::from(2.0 * kf + 1.0);
        let b = T::from(kf);
        let c = T::from(kf + 1.0);
        let p_next = (a * x * p - b * p_prev) / c;
        let d_next = (a * (p + x * d) - b * d_prev) / c;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d)
}

/// `(P_n(x), P_n'(x))` for real `x`.
pub fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    legendre_eval_generic(n, x)
}

/// Values `P_0(x), …, P_n(x)`.
pub fn legendre_values(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n >= 1 {
        out.push(x);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * out[k] - kf * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
    out
}

/// `sqrt((2n+1)/2)`, the factor making `P_n` unit-norm on `[-1, 1]`.
pub fn normalization(n: usize) -> f64 {
    ((2 * n + 1) as f64 / 2.0).sqrt()
}

/// Orthonormal `P_n^*(x) = sqrt((2n+1)/2) P_n(x)`.
pub fn legendre_normalized_eval(n: usize, x: f64) -> f64 {
    normalization(n) * legendre_eval(n, x).0
}

/// Orthonormal values `P_0^*(x), …, P_n^*(x)`.
pub fn legendre_normalized_values(n: usize, x: f64) -> Vec<f64> {
    legendre_values(n, x)
        .into_iter()
        .enumerate()
        .map(|(k, v)| normalization(k) * v)
        .collect()
}

/// Exact monomial coefficients of `P_n`:
/// `P_n(x) = 2^{-n} sum_k (-1)^k C(n,k) C(2n-2k, n) x^{n-2k}`.
pub fn legendre_exact(n: usize) -> LaurentPoly {
    let n64 = n as u64;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let k64 = k as u64;
        let mut c = binomial(n64, k64) * binomial(2 * n64 - 2 * k64, n64);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[n - 2 * k] = Rational::from_integer(c) * inv_pow2(n as u32);
    }
    LaurentPoly::from_coeffs(coeffs)
}

/// Exact `P_0, …, P_n` built by the three-term recurrence in rational
/// arithmetic.
pub fn legendre_exact_table(n: usize) -> Vec<LaurentPoly> {
    let x = LaurentPoly::monomial(Rational::one(), 1);
    let mut table = vec![LaurentPoly::one()];
    if n >= 1 {
        table.push(x.clone());
    }
    for k in 1..n {
        let k64 = k as i64;
        let next = &(&x * &table[k]).scale(&int(2 * k64 + 1)) - &table[k - 1].scale(&int(k64));
        table.push(next.scale(&rat(1, k64 + 1)));
    }
    table
}

/// Exact Laurent polynomials `P_0(J(z)), …, P_n(J(z))`, `J(z) = (z + 1/z)/2`.
pub fn legendre_on_circle_table(n: usize) -> Vec<LaurentPoly> {
    let mut table = vec![LaurentPoly::one()];
    if n >= 1 {
        table.push(LaurentPoly::joukowski());
    }
    for k in 1..n {
        let k64 = k as i64;
        let next = &table[k].mul_joukowski().scale(&int(2 * k64 + 1)) - &table[k - 1].scale(&int(k64));
        table.push(next.scale(&rat(1, k64 + 1)));
    }
    table
}

/// `P_n(J(z))` as an exact Laurent polynomial.
pub fn legendre_on_circle(n: usize) -> LaurentPoly {
    legendre_on_circle_table(n).pop().unwrap()
}

/// Exact check of the five classical identities used by the orthogonality
/// proof, for every `1 <= n <= n_max`. Returns one certificate per
/// (identity, n).
pub fn check_legendre_identities(n_max: usize) -> Vec<Certificate> {
    let p = legendre_exact_table(n_max + 1);
    let dp: Vec<LaurentPoly> = p.iter().map(LaurentPoly::diff).collect();
    let x = LaurentPoly::monomial(Rational::one(), 1);
    let x2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1], 1);
    let mut certs = Vec::new();
    // sum of P_k^*(x)^2 = (2k+1)/2 P_k(x)^2
    let mut sum_sq = p[0].scale(&rat(1, 2));
    for n in 1..=n_max {
        sum_sq = &sum_sq + &(&p[n] * &p[n]).scale(&rat(2 * n as i64 + 1, 2));
        let ni = n as i64;
        let half_np1 = rat(ni + 1, 2);

        let cd = &sum_sq - &(&(&dp[n + 1] * &p[n]) - &(&p[n + 1] * &dp[n])).scale(&half_np1);
        certs.push(Certificate::from_residual("legendre_christoffel_darboux", n, None, &cd));

        let rec = &(&p[n + 1].scale(&int(ni + 1)) - &(&x * &p[n]).scale(&int(2 * ni + 1)))
            + &p[n - 1].scale(&int(ni));
        certs.push(Certificate::from_residual("legendre_three_term_recurrence", n, None, &rec));

        let drec = &(&dp[n + 1].scale(&int(ni + 1)) - &(&p[n] + &(&x * &dp[n])).scale(&int(2 * ni + 1)))
            + &dp[n - 1].scale(&int(ni));
        certs.push(Certificate::from_residual("legendre_differentiated_recurrence", n, None, &drec));

        let christ = &(&x2m1 * &dp[n]) - &(&(&x * &p[n]) - &p[n - 1]).scale(&int(ni));
        certs.push(Certificate::from_residual("legendre_derivative_relation", n, None, &christ));

        let ichrist = &p[n].scale(&int(2 * ni + 1)) - &(&dp[n + 1] - &dp[n - 1]);
        certs.push(Certificate::from_residual("legendre_derivative_difference", n, None, &ichrist));
    }
    certs
}

/// Finite expansion `sum_k coefficients[k] P_k` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreExpansion {
    coefficients: Vec<Rational>,
}

impl LegendreExpansion {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        LegendreExpansion { coefficients }
    }

    /// `P_k` itself.
    pub fn unit(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        LegendreExpansion::new(c)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest index with a nonzero coefficient; 0 for the zero expansion.
    pub fn max_degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Multiplication by `x`, using
    /// `x P_k = ((k+1) P_{k+1} + k P_{k-1}) / (2k+1)`.
    pub fn mul_x(&self) -> Self {
        let mut out = vec![Rational::zero(); self.coefficients.len() + 1];
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k64 = k as i64;
            let denom = 2 * k64 + 1;
            out[k + 1] += c * rat(k64 + 1, denom);
            if k > 0 {
                out[k - 1] += c * rat(k64, denom);
            }
        }
        LegendreExpansion::new(out)
    }

    fn combine(&self, a: &Rational, other: &Self, b: &Rational) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let c = (0..len)
            .map(|k| a * self.coefficient(k) + b * other.coefficient(k))
            .collect();
        LegendreExpansion::new(c)
    }

    /// The expansion converted to monomial coefficients.
    pub fn to_monomial(&self) -> LaurentPoly {
        let table = legendre_exact_table(self.max_degree());
        self.coefficients
            .iter()
            .zip(&table)
            .fold(LaurentPoly::zero(), |acc, (c, p)| &acc + &p.scale(c))
    }
}

/// `P_i^* P_j^* = scale * sum_k expansion[k] P_k` where
/// `scale = sqrt((2i+1)(2j+1)) / 2` is carried symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedProduct {
    pub scale: Surd,
    pub expansion: LegendreExpansion,
}

impl NormalizedProduct {
    /// The exact coefficient `a_k` of `P_k`.
    pub fn coefficient(&self, k: usize) -> Surd {
        self.scale.scale(&self.expansion.coefficient(k))
    }
}

/// Legendre expansion of `P_i P_j`, built by applying `P_j(x)` to `P_i`
/// through the recurrence and the multiplication-by-`x` rule.
pub fn legendre_product_raw(i: usize, j: usize) -> LegendreExpansion {
    let base = LegendreExpansion::unit(i);
    if j == 0 {
        return base;
    }
    let mut prev = base.clone();
    let mut cur = base.mul_x();
    for m in 1..j {
        let m64 = m as i64;
        // (m+1) V_{m+1} = (2m+1) x V_m - m V_{m-1}
        cur = {
            let next = cur.mul_x().combine(&rat(2 * m64 + 1, m64 + 1), &prev, &rat(-m64, m64 + 1));
            prev = cur;
            next
        };
    }
    cur
}

/// Exact coefficients `a_k` of `P_i^*(x) P_j^*(x) = sum_k a_k P_k(x)`.
pub fn legendre_product_expand(i: usize, j: usize) -> NormalizedProduct {
    let radicand = ((2 * i + 1) * (2 * j + 1)) as u64;
    NormalizedProduct {
        scale: Surd::new(rat(1, 2), radicand),
        expansion: legendre_product_raw(i, j),
    }
}

/// Exact value `P_n(x)` at a rational point.
pub fn legendre_exact_at(n: usize, x: &Rational) -> Rational {
    let p = legendre_exact(n);
    p.terms().fold(Rational::zero(), |acc, (e, c)| {
        acc + c * num_traits::pow(x.clone(), e as usize)
    })
}
