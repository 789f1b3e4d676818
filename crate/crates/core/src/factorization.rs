//! The explicit spectral factor of `K_n(J(z))`.
//!
//! `F_n(z) = d/dz (z^{n+1} P_n(J(z)))` is an even polynomial of degree `2n`
//! with positive dyadic coefficients, and `G_n(z) = z^{2n} F_n(1/z)` is its
//! reversal. They satisfy `K_n(J(z)) = F_n(z) F_n(1/z) / (2(n+1))`, all
//! zeros of `F_n` are simple and lie strictly inside the unit disk, and
//! `F_n(z) = 2^{-2n} C(2n,n) ₂F₁(-n, 3/2; 1/2 - n; z²)`.
//!
//! `F_n` is built here four ways (definition, binomial closed form,
//! terminating hypergeometric series, and through `G_n`'s coefficient
//! rule) and every route is compared exactly.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::christoffel::kn_exact;
use crate::error::{Error, Result};
use crate::legendre::legendre_on_circle_table;
use crate::ratpoly::{binomial, factorial, int, inv_pow2, rat, LaurentPoly, Rational};

/// `F_n` and `G_n` for one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorPair {
    pub n: usize,
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl FactorPair {
    pub fn new(n: usize) -> Self {
        let f = fn_closed_coeffs(n);
        let g = gn_from_reversal(&f, n);
        FactorPair { n, f, g }
    }

    /// Structural invariants: even support, positive coefficients, degree
    /// `2n`, `g = z^{2n} f(1/z)`, `f(0) = 2^{-2n} C(2n,n)`,
    /// `g(0) = (2n+1) f(0)`.
    pub fn check_invariants(&self) -> Certificate {
        let n = self.n;
        let deg = 2 * n as i64;
        let f0 = self.f.coeff(0);
        let g0 = self.g.coeff(0);
        let central = Rational::from_integer(binomial(2 * n as u64, n as u64)) * inv_pow2(2 * n as u32);
        let mut f_sorted: Vec<Rational> = self.f.terms().map(|(_, c)| c.clone()).collect();
        let mut g_sorted: Vec<Rational> = self.g.terms().map(|(_, c)| c.clone()).collect();
        f_sorted.sort();
        g_sorted.sort();
        let checks = [
            ("f even", self.f.is_even()),
            ("g even", self.g.is_even()),
            ("f degree 2n", self.f.support() == Some((0, deg))),
            ("g degree 2n", self.g.support() == Some((0, deg))),
            ("f positive", self.f.terms().count() == n + 1 && self.f.terms().all(|(_, c)| c.is_positive())),
            ("f dyadic", self.f.terms().all(|(_, c)| is_power_of_two(c.denom()))),
            ("g reversal", self.g == self.f.recip_sub().shift(deg)),
            ("f(0) central binomial", f0 == central),
            ("g(0) = (2n+1) f(0)", g0 == &f0 * int(2 * n as i64 + 1)),
            ("same coefficient multiset", f_sorted == g_sorted),
        ];
        let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        Certificate::from_check(
            "factor_pair_invariants",
            n,
            None,
            failed.is_empty(),
            if failed.is_empty() { "all invariants hold".to_string() } else { format!("failed: {}", failed.join(", ")) },
        )
    }
}

fn is_power_of_two(d: &BigInt) -> bool {
    d.is_positive() && (d & (d - BigInt::one())).is_zero()
}

/// `F_n` straight from its definition as a derivative.
pub fn fn_from_definition(n: usize) -> LaurentPoly {
    let on_circle = legendre_on_circle_table(n).pop().unwrap();
    on_circle.shift(n as i64 + 1).diff()
}

/// `F_n = 2^{-2n} Σ_k (2k+1) C(2k,k) C(2n-2k,n-k) z^{2k}`.
pub fn fn_closed_coeffs(n: usize) -> LaurentPoly {
    let n64 = n as u64;
    let scale = inv_pow2(2 * n as u32);
    let mut coeffs = vec![Rational::zero(); 2 * n + 1];
    for k in 0..=n64 {
        let c = BigInt::from(2 * k + 1) * binomial(2 * k, k) * binomial(2 * n64 - 2 * k, n64 - k);
        coeffs[2 * k as usize] = Rational::from_integer(c) * &scale;
    }
    LaurentPoly::from_coeffs(coeffs)
}

/// Exact rising factorial `(x)_k = x (x+1) ⋯ (x+k-1)`.
pub fn rising_factorial(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
}

/// Parameters of the hypergeometric representation: `a = -n`, `b = 3/2`,
/// `c = 1/2 - n`.
pub fn hypergeometric_params(n: usize) -> (Rational, Rational, Rational) {
    (int(-(n as i64)), rat(3, 2), rat(1, 2) - int(n as i64))
}

/// The terminating series `₂F₁(-n, 3/2; 1/2-n; w)` as a polynomial in `w`.
///
/// Fails if `(c)_k` vanishes for some `k <= n`.
pub fn hypergeometric_series(n: usize) -> Result<LaurentPoly> {
    let (a, b, c) = hypergeometric_params(n);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let ck = rising_factorial(&c, k);
        if ck.is_zero() {
            return Err(Error::Domain(format!("(c)_{k} vanishes; series is degenerate")));
        }
        let term = rising_factorial(&a, k) * rising_factorial(&b, k)
            / (ck * Rational::from_integer(factorial(k as u64)));
        coeffs.push(term);
    }
    Ok(LaurentPoly::from_coeffs(coeffs))
}

/// Substitutes `w = z²` in a polynomial.
fn substitute_square(p: &LaurentPoly) -> LaurentPoly {
    let Some(d) = p.degree() else {
        return LaurentPoly::zero();
    };
    let mut coeffs = vec![Rational::zero(); 2 * d as usize + 1];
    for (e, c) in p.terms() {
        coeffs[2 * e as usize] = c.clone();
    }
    LaurentPoly::new(2 * p.min_exponent(), coeffs)
}

/// `F_n(z) = 2^{-2n} C(2n,n) ₂F₁(-n, 3/2; 1/2-n; z²)`.
pub fn fn_hypergeometric(n: usize) -> Result<LaurentPoly> {
    let scale = Rational::from_integer(binomial(2 * n as u64, n as u64)) * inv_pow2(2 * n as u32);
    Ok(substitute_square(&hypergeometric_series(n)?.scale(&scale)))
}

/// `G_n = z^{2n} F_n(1/z)`.
pub fn gn_from_reversal(f: &LaurentPoly, n: usize) -> LaurentPoly {
    f.recip_sub().shift(2 * n as i64)
}

/// `G_n = Σ_k ((2(n-k)+1)/(2k+1)) c_k z^{2k}` where `F_n = Σ_k c_k z^{2k}`.
pub fn gn_from_coefficient_rule(n: usize) -> LaurentPoly {
    let f = fn_closed_coeffs(n);
    let n64 = n as i64;
    let mut coeffs = vec![Rational::zero(); 2 * n + 1];
    for k in 0..=n64 {
        coeffs[2 * k as usize] = f.coeff(2 * k) * rat(2 * (n64 - k) + 1, 2 * k + 1);
    }
    LaurentPoly::from_coeffs(coeffs)
}

/// `G_n` by reversal of `F_n`.
pub fn gn_build(n: usize) -> LaurentPoly {
    gn_from_reversal(&fn_closed_coeffs(n), n)
}

/// The reversal and coefficient-rule constructions of `G_n` agree, and
/// `G_n` is the reversed coefficient list `c_{n-k}` of `F_n`.
pub fn check_gn_build(n: usize) -> Certificate {
    let f = fn_closed_coeffs(n);
    let g = gn_from_reversal(&f, n);
    let n64 = n as i64;
    let reindexed = LaurentPoly::from_coeffs(
        (0..=2 * n64)
            .map(|e| if e % 2 == 0 { f.coeff(2 * n64 - e) } else { Rational::zero() })
            .collect(),
    );
    Certificate::from_residuals(
        "gn_coefficient_reversal",
        n,
        None,
        &[&g - &gn_from_coefficient_rule(n), &g - &reindexed],
    )
}

/// Definition and binomial closed form of `F_n` agree exactly.
pub fn check_fn_constructions(n: usize) -> Certificate {
    Certificate::from_residual("fn_closed_coefficients", n, None, &(&fn_from_definition(n) - &fn_closed_coeffs(n)))
}

/// `K_n(J(z)) - F_n(z) F_n(1/z) / (2(n+1))` is the zero Laurent polynomial.
pub fn check_fejer_riesz(n: usize) -> Certificate {
    let kj = kn_exact(n).compose_joukowski().expect("K_n is a polynomial");
    let f = fn_from_definition(n);
    let prod = (&f * &f.recip_sub()).scale(&rat(1, 2 * (n as i64 + 1)));
    Certificate::from_residual("fejer_riesz_factorization", n, None, &(&kj - &prod))
}

/// The `P_n`, `P_{n-1}` forms of `F_n` and `G_n`, multiplied through by
/// `z² - 1`:
///
/// ```text
/// (z²-1) F_n = z^n [((2n+1)z² - 1) P_n(J) - 2n z P_{n-1}(J)]
/// (z²-1) G_n = z^n [(z² - (2n+1)) P_n(J) + 2n z P_{n-1}(J)]
/// ```
pub fn check_fn_gn_alt(n: usize) -> Certificate {
    assert!(n >= 1, "alternate forms need n >= 1");
    let (fr, gr) = fn_gn_alt_residuals(n);
    Certificate::from_residuals("fn_gn_alternate_forms", n, None, &[fr, gr])
}

/// The two residual polynomials checked by [`check_fn_gn_alt`].
pub fn fn_gn_alt_residuals(n: usize) -> (LaurentPoly, LaurentPoly) {
    let n64 = n as i64;
    let table = legendre_on_circle_table(n);
    let (pn, pn1) = (&table[n], &table[n - 1]);
    let z2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1], 1);
    let f = fn_from_definition(n);
    let g = gn_from_reversal(&f, n);
    let two_n_z_pn1 = pn1.shift(1).scale(&int(2 * n64));
    let f_rhs = (&(&LaurentPoly::from_ints(0, &[-1, 0, 2 * n64 + 1], 1) * pn) - &two_n_z_pn1).shift(n64);
    let g_rhs = (&(&LaurentPoly::from_ints(0, &[-(2 * n64 + 1), 0, 1], 1) * pn) + &two_n_z_pn1).shift(n64);
    (&(&z2m1 * &f) - &f_rhs, &(&z2m1 * &g) - &g_rhs)
}

/// `z(1-z²) F'' + 2((n-2)z² - n) F' + 6nz F = 0`, the second-order ODE
/// satisfied by `F_n`, cleared of its `1/z` coefficient.
pub fn check_ode(n: usize) -> Certificate {
    let n64 = n as i64;
    let f = fn_from_definition(n);
    let d1 = f.diff();
    let d2 = d1.diff();
    let t2 = &LaurentPoly::from_ints(1, &[1, 0, -1], 1) * &d2;
    let t1 = &LaurentPoly::from_ints(0, &[-2 * n64, 0, 2 * (n64 - 2)], 1) * &d1;
    let t0 = f.shift(1).scale(&int(6 * n64));
    Certificate::from_residual("fn_ode", n, None, &(&(&t2 + &t1) + &t0))
}

/// Exact check of the hypergeometric form of `F_n`: rising factorials
/// against their closed forms, the term ratio
/// `(2k+1) C(n,k)² / C(2n,2k)`, the leading coefficient `2n+1`, and the
/// scaled series against the binomial closed form.
pub fn hypergeometric_check(n: usize) -> Certificate {
    let series = match hypergeometric_series(n) {
        Ok(s) => s,
        Err(e) => return Certificate::from_check("fn_hypergeometric", n, None, false, e.to_string()),
    };
    let (a, b, c) = hypergeometric_params(n);
    let n64 = n as u64;
    let fact = |m: u64| Rational::from_integer(factorial(m));
    let sign = |k: u64| if k % 2 == 0 { int(1) } else { int(-1) };
    let mut failures = Vec::new();
    for k in 0..=n64 {
        let ku = k as usize;
        let a_closed = sign(k) * fact(n64) / fact(n64 - k);
        let b_closed = inv_pow2(2 * k as u32) * fact(2 * k + 1) / fact(k);
        let c_closed = sign(k) * inv_pow2(2 * k as u32) * fact(2 * n64) * fact(n64 - k) / (fact(2 * n64 - 2 * k) * fact(n64));
        if rising_factorial(&a, ku) != a_closed {
            failures.push(format!("(a)_{k}"));
        }
        if rising_factorial(&b, ku) != b_closed {
            failures.push(format!("(b)_{k}"));
        }
        if rising_factorial(&c, ku) != c_closed {
            failures.push(format!("(c)_{k}"));
        }
        let ratio = Rational::from_integer(BigInt::from(2 * k + 1) * binomial(n64, k) * binomial(n64, k))
            / Rational::from_integer(binomial(2 * n64, 2 * k));
        if series.coeff(k as i64) != ratio {
            failures.push(format!("term ratio k={k}"));
        }
    }
    if series.leading_coeff() != int(2 * n as i64 + 1) {
        failures.push("leading coefficient".into());
    }
    let residual = match fn_hypergeometric(n) {
        Ok(h) => &h - &fn_closed_coeffs(n),
        Err(e) => {
            failures.push(e.to_string());
            LaurentPoly::zero()
        }
    };
    if !residual.is_zero() {
        failures.push(format!("residual {residual}"));
    }
    Certificate::from_check(
        "fn_hypergeometric",
        n,
        None,
        failures.is_empty(),
        if failures.is_empty() { "zero residual".to_string() } else { failures.join("; ") },
    )
}

/// One certified zero of `F_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    /// `|F_n(z)| / Σ_k |c_k| |z|^k`, the relative backward residual.
    pub residual: f64,
}

impl RootEntry {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// The `2n` zeros of `F_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub n: usize,
    pub roots: Vec<RootEntry>,
}

impl RootReport {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|r| r.modulus).fold(0.0, f64::max)
    }

    /// Distance from the outermost root to the unit circle.
    pub fn margin(&self) -> f64 {
        1.0 - self.max_modulus()
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                best = best.min((a.value() - b.value()).norm());
            }
        }
        best
    }

    /// All roots strictly inside the unit disk, pairwise separated by more
    /// than `separation`, with residual at most `residual`.
    pub fn certified(&self, separation: f64, residual: f64) -> bool {
        self.roots.len() == 2 * self.n
            && self.max_modulus() < 1.0
            && (self.roots.len() < 2 || self.min_separation() > separation)
            && self.max_residual() <= residual
    }
}

/// Default pairwise-separation threshold for simplicity.
pub const SIMPLE_ROOT_SEPARATION: f64 = 1e-8;
/// Default residual threshold for a certified root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

fn horner(coeffs: &[f64], w: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * w + p;
        p = p * w + c;
    }
    (p, dp)
}

fn relative_residual(coeffs: &[f64], w: Complex64) -> f64 {
    let (p, _) = horner(coeffs, w);
    let scale: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * w.norm() + c.abs());
    p.norm() / scale
}

/// Roots of `Σ coeffs[k] w^k`: companion-matrix eigenvalues polished by
/// Aberth iteration.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[deg];
    if lead == 0.0 {
        return Err(Error::InvalidArgument("leading coefficient is zero".into()));
    }
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -coeffs[i] / lead;
    }
    let mut roots: Vec<Complex64> = companion.complex_eigenvalues().iter().copied().collect();

    for _ in 0..100 {
        let mut max_step: f64 = 0.0;
        let snapshot = roots.clone();
        for (i, w) in roots.iter_mut().enumerate() {
            let (p, dp) = horner(coeffs, *w);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = snapshot
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &v)| (*w - v).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                *w -= step;
                max_step = max_step.max(step.norm() / w.norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    Ok(roots)
}

/// Zeros of `F_n`, found as the `n` zeros of the even part in `w = z²` and
/// their two square roots, each certified by its residual.
pub fn fn_roots(n: usize) -> Result<RootReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("F_0 = 1 has no zeros".into()));
    }
    let f = fn_closed_coeffs(n);
    let even: Vec<f64> = (0..=n as i64).map(|k| f.coeff(2 * k).to_f64().unwrap()).collect();
    let full = f.coeffs_f64();
    let w_roots = polynomial_roots(&even)?;
    let mut roots = Vec::with_capacity(2 * n);
    let mut bad = Vec::new();
    for (i, w) in w_roots.iter().enumerate() {
        let s = w.sqrt();
        for z in [s, -s] {
            let residual = relative_residual(&full, z);
            if !(residual <= ROOT_RESIDUAL_TOL) {
                bad.push(format!("root {i} ({z}) residual {residual:e}"));
            }
            roots.push(RootEntry {
                re: z.re,
                im: z.im,
                modulus: z.norm(),
                residual,
            });
        }
    }
    if !bad.is_empty() {
        return Err(Error::NonConvergence(bad.join("; ")));
    }
    roots.sort_by(|a, b| {
        a.modulus
            .total_cmp(&b.modulus)
            .then(a.im.total_cmp(&b.im))
            .then(a.re.total_cmp(&b.re))
    });
    Ok(RootReport { n, roots })
}

/// Minimum of `K_n(cos θ)` over a uniform grid of `points` angles; positive
/// values confirm that `F_n(z) F_n(1/z)` does not vanish on the circle.
pub fn min_kn_on_circle(n: usize, points: usize) -> f64 {
    let ev = crate::christoffel::ChristoffelEvaluator::real(n);
    (0..points)
        .map(|m| ev.eval((std::f64::consts::TAU * m as f64 / points as f64).cos()))
        .fold(f64::INFINITY, f64::min)
}

/// Certificate for root localization: every zero strictly inside the unit
/// disk, simple, and with small residual.
pub fn check_roots(n: usize) -> Certificate {
    match fn_roots(n) {
        Ok(rep) => Certificate::from_check(
            "fn_roots_inside_disk",
            n,
            None,
            rep.certified(SIMPLE_ROOT_SEPARATION, ROOT_RESIDUAL_TOL),
            format!(
                "max modulus {:.12}, min separation {:.3e}, max residual {:.3e}",
                rep.max_modulus(),
                rep.min_separation(),
                rep.max_residual()
            ),
        ),
        Err(e) => Certificate::from_check("fn_roots_inside_disk", n, None, false, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definition_examples() {
        assert_eq!(fn_from_definition(0), LaurentPoly::one());
        assert_eq!(fn_from_definition(1), LaurentPoly::from_ints(0, &[1, 0, 3], 2));
        assert_eq!(fn_from_definition(2), LaurentPoly::from_ints(0, &[3, 0, 6, 0, 15], 8));
    }

    #[test]
    fn closed_coefficients_examples() {
        assert_eq!(fn_closed_coeffs(1), LaurentPoly::from_ints(0, &[2, 0, 6], 4));
        assert_eq!(fn_closed_coeffs(2), LaurentPoly::from_ints(0, &[6, 0, 12, 0, 30], 16));
        for n in 0..=40 {
            assert!(check_fn_constructions(n).passed(), "n = {n}");
        }
    }

    #[test]
    fn gn_examples() {
        assert_eq!(gn_build(1), LaurentPoly::from_ints(0, &[3, 0, 1], 2));
        assert_eq!(gn_build(2), LaurentPoly::from_ints(0, &[15, 0, 6, 0, 3], 8));
        assert_eq!(gn_build(2).coeff(0), rat(15, 8));
        assert_eq!(gn_build(2).coeff(0), fn_closed_coeffs(2).coeff(0) * int(5));
        for n in 0..=40 {
            assert!(check_gn_build(n).passed(), "n = {n}");
            assert!(FactorPair::new(n).check_invariants().passed(), "n = {n}");
        }
    }

    #[test]
    fn fejer_riesz_examples() {
        // n = 1: K_1(J(z)) = (10 + 3z² + 3z^{-2})/16
        let k1 = kn_exact(1).compose_joukowski().unwrap();
        assert_eq!(k1, LaurentPoly::from_ints(-2, &[3, 0, 10, 0, 3], 16));
        for n in 0..=40 {
            assert!(check_fejer_riesz(n).passed(), "n = {n}");
        }
    }

    #[test]
    fn alternate_forms() {
        for n in 1..=40 {
            assert!(check_fn_gn_alt(n).passed(), "n = {n}");
        }
        // floating spot check of the unmultiplied forms at z = 0.7 + 0.2i
        let z = Complex64::new(0.7, 0.2);
        let n = 5;
        let table = legendre_on_circle_table(n);
        let pn = table[n].eval_complex(z).unwrap();
        let pn1 = table[n - 1].eval_complex(z).unwrap();
        let pre = z.powi(n as i32) / (z * z - 1.0);
        let nf = n as f64;
        let f_alt = pre * (((2.0 * nf + 1.0) * z * z - 1.0) * pn - 2.0 * nf * z * pn1);
        let g_alt = pre * ((z * z - (2.0 * nf + 1.0)) * pn + 2.0 * nf * z * pn1);
        let f = fn_closed_coeffs(n).eval_complex(z).unwrap();
        let g = gn_build(n).eval_complex(z).unwrap();
        assert!((f - f_alt).norm() < 1e-12 * f.norm().max(1.0));
        assert!((g - g_alt).norm() < 1e-12 * g.norm().max(1.0));
    }

    #[test]
    fn ode_holds() {
        for n in 1..=40 {
            assert!(check_ode(n).passed(), "n = {n}");
        }
    }

    #[test]
    fn hypergeometric_examples() {
        assert_eq!(hypergeometric_series(1).unwrap(), LaurentPoly::from_ints(0, &[1, 3], 1));
        assert_eq!(fn_hypergeometric(1).unwrap(), fn_closed_coeffs(1));
        assert_eq!(fn_hypergeometric(2).unwrap(), fn_closed_coeffs(2));
        for n in 1..=40 {
            assert_eq!(hypergeometric_series(n).unwrap().leading_coeff(), int(2 * n as i64 + 1));
            assert!(hypergeometric_check(n).passed(), "n = {n}");
        }
        assert!(rising_factorial(&rat(-1, 2), 0) == int(1));
        assert_eq!(rising_factorial(&int(3), 2), int(12));
    }

    #[test]
    fn roots_n1_and_n2() {
        let r1 = fn_roots(1).unwrap();
        let inv_sqrt3 = 1.0 / 3f64.sqrt();
        assert_eq!(r1.roots.len(), 2);
        for r in &r1.roots {
            assert!(r.re.abs() < 1e-12);
            assert!((r.im.abs() - inv_sqrt3).abs() < 1e-12);
            assert!((r.modulus - 0.577_350_269_189_625_8).abs() < 1e-12);
        }
        let r2 = fn_roots(2).unwrap();
        let target = 5f64.powf(-0.25);
        assert_eq!(r2.roots.len(), 4);
        for r in &r2.roots {
            assert!((r.modulus - target).abs() < 1e-12, "{}", r.modulus);
            // z² = (-1 ± 2i)/5
            let w = r.value() * r.value();
            assert!((w.re + 0.2).abs() < 1e-12 && (w.im.abs() - 0.4).abs() < 1e-12);
        }
        assert!(fn_roots(0).is_err());
    }

    #[test]
    fn roots_certified_to_twenty() {
        let mut last_margin = 1.0;
        for n in 1..=20 {
            let rep = fn_roots(n).unwrap();
            assert!(rep.certified(SIMPLE_ROOT_SEPARATION, ROOT_RESIDUAL_TOL), "n = {n}");
            assert!(rep.margin() > 0.0);
            // roots approach the circle as n grows
            assert!(rep.margin() < last_margin + 1e-12);
            last_margin = rep.margin();
            assert!(check_roots(n).passed());
            assert!(min_kn_on_circle(n, 4096) > 0.0);
        }
    }

    #[test]
    fn root_json_schema() {
        let rep = fn_roots(1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["n"], 1);
        let keys: Vec<&String> = v["roots"][0].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 4);
        for k in ["re", "im", "modulus", "residual"] {
            assert!(v["roots"][0].get(k).is_some());
        }
    }
}
