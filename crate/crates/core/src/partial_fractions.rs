//! Partial-fraction families and exact contour moments.
//!
//! For `n >= 1` the Laurent families `A_k, B_k` (k >= 0) and `C_k, D_k`
//! (0 <= k <= n) split the numerators of the contour moments over the two
//! spectral factors:
//!
//! ```text
//! 2(n+1) z^{2n-1} P_{n+k}(J(z)) = A_k G_n + B_k F_n
//! 2(n+1) z^{2n-1} P_{n-k}(J(z)) = C_k G_n + D_k F_n
//! ```
//!
//! Because every zero of `F_n` is inside the unit disk and every zero of
//! `G_n` outside, the moment
//! `(1/2πi) ∮ 2(n+1) z^{2n-1} P_k(J(z)) / (F_n G_n) dz`
//! reduces to coefficient extraction. No residue at an individual
//! (irrational) pole is ever formed, so the whole computation is exact.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::factorization::FactorPair;
use crate::legendre::{legendre_on_circle_table, legendre_product_expand};
use crate::ratpoly::{int, rat, LaurentPoly, Rational, Surd};

/// The four partial-fraction families for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcdFamily {
    pub n: usize,
    pub a: Vec<LaurentPoly>,
    pub b: Vec<LaurentPoly>,
    pub c: Vec<LaurentPoly>,
    pub d: Vec<LaurentPoly>,
}

/// Builds `A_k, B_k` for `k <= k_max` and `C_k, D_k` for `k <= n`.
pub fn build_abcd(n: usize, k_max: usize) -> Result<AbcdFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("partial-fraction families need n >= 1".into()));
    }
    let k_max = k_max.max(1);
    let n64 = n as i64;
    let base = LaurentPoly::monomial(Rational::one(), n64 - 1);

    // (n+k+1) X_{k+1} = (2(n+k)+1) J X_k - (n+k) X_{k-1}
    let ascend = |x0: LaurentPoly, x1: LaurentPoly| {
        let mut out = vec![x0, x1];
        for k in 1..k_max {
            let m = n64 + k as i64;
            let next = &out[k].mul_joukowski().scale(&int(2 * m + 1)) - &out[k - 1].scale(&int(m));
            out.push(next.scale(&rat(1, m + 1)));
        }
        out
    };
    let a = ascend(base.clone(), LaurentPoly::monomial(Rational::one(), n64 - 2));
    let b = ascend(base.clone(), LaurentPoly::monomial(Rational::one(), n64));

    // (n-k) X_{k+1} = (2(n-k)+1) J X_k - (n-k+1) X_{k-1},  1 <= k <= n-1
    let descend = |x1: LaurentPoly| {
        let mut out = vec![base.clone(), x1];
        for k in 1..n {
            let m = n64 - k as i64;
            let next = &out[k].mul_joukowski().scale(&int(2 * m + 1)) - &out[k - 1].scale(&int(m + 1));
            out.push(next.scale(&rat(1, m)));
        }
        out
    };
    let c1 = LaurentPoly::new(n64 - 2, vec![rat(-1, 2 * n64), Rational::zero(), rat(2 * n64 + 1, 2 * n64)]);
    let d1 = LaurentPoly::new(n64 - 2, vec![rat(2 * n64 + 1, 2 * n64), Rational::zero(), rat(-1, 2 * n64)]);
    let c = descend(c1);
    let d = descend(d1);
    Ok(AbcdFamily { n, a, b, c, d })
}

/// Shared exact data for all checks at one `n`: the families, the factor
/// pair, and `P_m(J(z))` for `m <= 2n`.
#[derive(Clone, Debug)]
pub struct PartialFractionContext {
    pub n: usize,
    pub family: AbcdFamily,
    pub factors: FactorPair,
    pub on_circle: Vec<LaurentPoly>,
}

impl PartialFractionContext {
    pub fn new(n: usize) -> Result<Self> {
        Ok(PartialFractionContext {
            n,
            family: build_abcd(n, n)?,
            factors: FactorPair::new(n),
            on_circle: legendre_on_circle_table(2 * n),
        })
    }

    /// `2(n+1) z^{2n-1} P_m(J(z))`.
    pub fn numerator(&self, m: usize) -> LaurentPoly {
        let n64 = self.n as i64;
        self.on_circle[m].shift(2 * n64 - 1).scale(&int(2 * (n64 + 1)))
    }

    fn split_residual(&self, m: usize, over_f: &LaurentPoly, over_g: &LaurentPoly) -> LaurentPoly {
        let rhs = &(over_f * &self.factors.g) + &(over_g * &self.factors.f);
        &self.numerator(m) - &rhs
    }

    /// Residual of `2(n+1) z^{2n-1} P_{n+k}(J) - (A_k G_n + B_k F_n)`.
    pub fn pfd_plus_residual(&self, k: usize) -> LaurentPoly {
        self.split_residual(self.n + k, &self.family.a[k], &self.family.b[k])
    }

    /// Residual of `2(n+1) z^{2n-1} P_{n-k}(J) - (C_k G_n + D_k F_n)`.
    pub fn pfd_minus_residual(&self, k: usize) -> LaurentPoly {
        self.split_residual(self.n - k, &self.family.c[k], &self.family.d[k])
    }

    /// The split `(X, Y)` of moment `k`'s numerator as `X G_n + Y F_n`,
    /// so that the integrand is `X / F_n + Y / G_n`.
    pub fn split(&self, k: usize) -> Result<(MomentCase, &LaurentPoly, &LaurentPoly)> {
        let n = self.n;
        if k > 2 * n {
            return Err(Error::InvalidArgument(format!("moment index k = {k} exceeds 2n = {}", 2 * n)));
        }
        let case = MomentCase::of(n, k);
        Ok(if k >= n {
            (case, &self.family.a[k - n], &self.family.b[k - n])
        } else {
            (case, &self.family.c[n - k], &self.family.d[n - k])
        })
    }

    /// Exact contour moment
    /// `(1/2πi) ∮ 2(n+1) z^{2n-1} P_k(J(z)) / (F_n(z) G_n(z)) dz`.
    ///
    /// The split is verified exactly before it is used.
    pub fn moment(&self, k: usize) -> Result<Rational> {
        let (_, x, y) = self.split(k)?;
        let residual = self.split_residual(k, x, y);
        if !residual.is_zero() {
            return Err(Error::Domain(format!("partial-fraction split for k = {k} does not hold")));
        }
        let f = &self.factors.f;
        let g = &self.factors.g;
        let (p, c) = split_simple_pole(x)?;
        let (_q, d) = split_simple_pole(y)?;
        // ∮ q / G_n = 0: every zero of G_n lies outside the closed disk.
        Ok(contour_poly_over(&p, f)? + contour_const_over_z_times(&c, f)? + contour_const_over_z_outside(&d, g)?)
    }

    /// All moments `k = 0, …, 2n`.
    pub fn moments(&self) -> Result<Vec<Rational>> {
        (0..=2 * self.n).map(|k| self.moment(k)).collect()
    }
}

/// Which of the three reductions a moment index falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentCase {
    /// `k = 0`: the `C_n / D_n` split, both parts carrying a `z^{-1}` term.
    Constant,
    /// `1 <= k <= 2n-1`: both parts are polynomials.
    Interior,
    /// `k = 2n`: `A_n` carries a `z^{-1}` term.
    Top,
}

impl MomentCase {
    pub fn of(n: usize, k: usize) -> Self {
        if k == 0 {
            MomentCase::Constant
        } else if k == 2 * n {
            MomentCase::Top
        } else {
            MomentCase::Interior
        }
    }
}

/// Splits `x = p(z) + c/z` with `p` a polynomial. Fails on poles of order
/// two or more.
fn split_simple_pole(x: &LaurentPoly) -> Result<(LaurentPoly, Rational)> {
    if x.min_exponent() < -1 {
        return Err(Error::Domain(format!("split part {x} has a pole of order > 1")));
    }
    let c = x.coeff(-1);
    let p = x - &LaurentPoly::monomial(c.clone(), -1);
    Ok((p, c))
}

/// `(1/2πi) ∮ p / f` for a polynomial `p` and a polynomial `f` whose zeros
/// all lie inside the contour: the coefficient of `z^{deg f - 1}` in
/// `p mod f`, divided by the leading coefficient of `f`.
pub fn contour_poly_over(p: &LaurentPoly, f: &LaurentPoly) -> Result<Rational> {
    let deg = f
        .degree()
        .ok_or_else(|| Error::InvalidArgument("zero denominator".into()))?;
    let (_, r) = p.div_rem(f)?;
    Ok(r.coeff(deg - 1) / f.leading_coeff())
}

/// `(1/2πi) ∮ c / (z f)` with all zeros of `f` inside the contour and
/// `f(0) != 0`, via
/// `1/(z f) = (1/f(0)) (1/z - ((f - f(0))/z) / f)`.
pub fn contour_const_over_z_times(c: &Rational, f: &LaurentPoly) -> Result<Rational> {
    if c.is_zero() {
        return Ok(Rational::zero());
    }
    let f0 = f.coeff(0);
    if f0.is_zero() {
        return Err(Error::Domain("f(0) = 0".into()));
    }
    let tail = (f - &LaurentPoly::constant(f0.clone())).shift(-1);
    Ok(c / &f0 * (Rational::one() - contour_poly_over(&tail, f)?))
}

/// `(1/2πi) ∮ d / (z g)` with all zeros of `g` outside the closed disk:
/// only the pole at 0 contributes, giving `d / g(0)`.
pub fn contour_const_over_z_outside(d: &Rational, g: &LaurentPoly) -> Result<Rational> {
    let g0 = g.coeff(0);
    if g0.is_zero() {
        return Err(Error::Domain("g(0) = 0".into()));
    }
    Ok(d / g0)
}

/// Exact moment for one `(n, k)`. Builds a fresh context; use
/// [`PartialFractionContext`] directly for many moments at the same `n`.
pub fn moment_exact(n: usize, k: usize) -> Result<Rational> {
    PartialFractionContext::new(n)?.moment(k)
}

/// `Σ_k a_k m_k` where `P_i^* P_j^* = Σ_k a_k P_k` and `m_k` are the exact
/// moments. The contour integral of `P_i^* P_j^*` against the weighted
/// measure, exactly; equals `δ_ij`.
pub fn orthogonality_exact_with(moments: &[Rational], i: usize, j: usize) -> Result<Surd> {
    if i + j >= moments.len() {
        return Err(Error::InvalidArgument(format!(
            "indices ({i}, {j}) need moments up to {}",
            i + j
        )));
    }
    let prod = legendre_product_expand(i, j);
    let sum = prod
        .expansion
        .coefficients()
        .iter()
        .zip(moments)
        .fold(Rational::zero(), |acc, (a, m)| acc + a * m);
    Ok(prod.scale.scale(&sum))
}

/// Exact weighted inner product of `P_i^*` and `P_j^*`, `0 <= i, j <= n`.
pub fn orthogonality_exact(n: usize, i: usize, j: usize) -> Result<Surd> {
    if i > n || j > n {
        return Err(Error::InvalidArgument(format!("indices ({i}, {j}) exceed n = {n}")));
    }
    let moments = PartialFractionContext::new(n)?.moments()?;
    orthogonality_exact_with(&moments, i, j)
}

/// Computed support of one family member next to the printed bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportRow {
    pub family: char,
    pub k: usize,
    pub min: Option<i64>,
    pub max: Option<i64>,
    /// Support bound `[lo, hi]` of the commonly displayed closed form, where
    /// one is stated (`k >= 1`).
    pub stated: Option<(i64, i64)>,
}

impl SupportRow {
    pub fn within_stated(&self) -> Option<bool> {
        let (lo, hi) = self.stated?;
        Some(match (self.min, self.max) {
            (Some(a), Some(b)) => lo <= a && b <= hi,
            _ => true,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub n: usize,
    pub rows: Vec<SupportRow>,
}

/// Min/max exponents of every `A_k, B_k, C_k, D_k`, `k <= n`.
pub fn laurent_support_report(family: &AbcdFamily) -> SupportReport {
    let n = family.n as i64;
    let mut rows = Vec::new();
    let mut push = |name: char, members: &[LaurentPoly], stated: &dyn Fn(i64) -> (i64, i64)| {
        for (k, p) in members.iter().enumerate().take(family.n + 1) {
            let (min, max) = match p.support() {
                Some((a, b)) => (Some(a), Some(b)),
                None => (None, None),
            };
            rows.push(SupportRow {
                family: name,
                k,
                min,
                max,
                stated: (k >= 1).then(|| stated(k as i64)),
            });
        }
    };
    push('A', &family.a, &|k| (n - (k + 1), n + (k - 3)));
    push('B', &family.b, &|k| (n - (k - 1), n + (k - 1)));
    push('C', &family.c, &|k| (n - (k + 1), n + (k - 1)));
    push('D', &family.d, &|k| (n - (k + 1), n + (k - 1)));
    SupportReport { n: family.n, rows }
}

impl SupportReport {
    fn row(&self, family: char, k: usize) -> &SupportRow {
        self.rows
            .iter()
            .find(|r| r.family == family && r.k == k)
            .expect("row present")
    }

    /// The structural facts the moment reduction relies on:
    /// `A_k, B_k, C_k, D_k` are polynomials of degree at most `2n-2` for
    /// `k <= n-1`; `B_n` is a polynomial; `A_n` has a `z^{-1}` term and
    /// degree at most `2n-1`; `C_n, D_n` span exactly `z^{-1} … z^{2n-1}`.
    pub fn failures(&self) -> Vec<String> {
        let n = self.n;
        let n64 = n as i64;
        let mut out = Vec::new();
        for r in &self.rows {
            if r.k < n {
                let poly = r.min.is_none_or(|m| m >= 0);
                let low = r.max.is_none_or(|m| m <= 2 * n64 - 2);
                if !(poly && low) {
                    out.push(format!("{}_{} not a polynomial of degree <= 2n-2", r.family, r.k));
                }
            }
        }
        let b_n = self.row('B', n);
        if b_n.min.is_some_and(|m| m < 0) {
            out.push("B_n has negative exponents".into());
        }
        let a_n = self.row('A', n);
        if a_n.min != Some(-1) || a_n.max.is_some_and(|m| m > 2 * n64 - 1) {
            out.push(format!("A_n support {:?}..{:?}", a_n.min, a_n.max));
        }
        for fam in ['C', 'D'] {
            let r = self.row(fam, n);
            if r.min != Some(-1) || r.max != Some(2 * n64 - 1) {
                out.push(format!("{fam}_n support {:?}..{:?}", r.min, r.max));
            }
        }
        out
    }

    /// Rows whose computed support falls outside the printed bounds.
    pub fn stated_mismatches(&self) -> Vec<&SupportRow> {
        self.rows.iter().filter(|r| r.within_stated() == Some(false)).collect()
    }
}

/// Which family carries the `z^{-1}` coefficient equal to `G_n(0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingCoefficientReport {
    pub n: usize,
    /// Exponent of the top term of `C_n`.
    pub c_top_exponent: Option<i64>,
    pub c_top_coeff: String,
    pub f_leading: String,
    pub d_inverse_coeff: String,
    pub b_inverse_coeff: String,
    pub g_at_zero: String,
    pub carrier: char,
}

/// Exact comparison of (i) the top coefficient of `C_n` with the leading
/// coefficient `2^{-2n}(2n+1)C(2n,n)` of `F_n` and (ii) the `z^{-1}`
/// coefficient of `D_n` with `G_n(0)`. `B_n` is also inspected and the
/// family actually carrying the coefficient is recorded.
pub fn leading_coefficient_checks(ctx: &PartialFractionContext) -> (Certificate, LeadingCoefficientReport) {
    let n = ctx.n;
    let c_n = &ctx.family.c[n];
    let d_n = &ctx.family.d[n];
    let b_n = &ctx.family.b[n];
    let lc_f = ctx.factors.f.leading_coeff();
    let g0 = ctx.factors.g.coeff(0);
    let c_top = c_n.leading_coeff();
    let d_inv = d_n.coeff(-1);
    let b_inv = b_n.coeff(-1);
    let carrier = if d_inv == g0 {
        'D'
    } else if b_inv == g0 {
        'B'
    } else {
        '?'
    };
    let ok = c_top == lc_f && c_n.degree() == Some(2 * n as i64 - 1) && carrier == 'D';
    let report = LeadingCoefficientReport {
        n,
        c_top_exponent: c_n.degree(),
        c_top_coeff: c_top.to_string(),
        f_leading: lc_f.to_string(),
        d_inverse_coeff: d_inv.to_string(),
        b_inverse_coeff: b_inv.to_string(),
        g_at_zero: g0.to_string(),
        carrier,
    };
    let detail = format!(
        "top of C_n at z^{} = {} vs lc(F_n) = {}; z^-1 coefficient of D_n = {}, of B_n = {}, G_n(0) = {}",
        report.c_top_exponent.unwrap_or(i64::MIN),
        report.c_top_coeff,
        report.f_leading,
        report.d_inverse_coeff,
        report.b_inverse_coeff,
        report.g_at_zero
    );
    (Certificate::from_check("leading_coefficients", n, None, ok, detail), report)
}

/// Every exact partial-fraction certificate for one `n`: the `+`/`-`
/// splits for all admissible `k`, the support facts, the leading
/// coefficients, the moments, and the orthogonality matrix.
pub struct PartialFractionLedger {
    pub pfd_plus: Vec<Certificate>,
    pub pfd_minus: Vec<Certificate>,
    pub support: Certificate,
    pub leading: Certificate,
    pub moments: Vec<Certificate>,
    pub orthogonality: Certificate,
}

pub fn check_pfd_plus(ctx: &PartialFractionContext, k: usize) -> Certificate {
    Certificate::from_residual("pfd_plus", ctx.n, Some(k as i64), &ctx.pfd_plus_residual(k))
}

pub fn check_pfd_minus(ctx: &PartialFractionContext, k: usize) -> Certificate {
    Certificate::from_residual("pfd_minus", ctx.n, Some(k as i64), &ctx.pfd_minus_residual(k))
}

pub fn check_support(ctx: &PartialFractionContext) -> Certificate {
    let report = laurent_support_report(&ctx.family);
    let failures = report.failures();
    let mismatched: Vec<String> = report
        .stated_mismatches()
        .iter()
        .map(|r| format!("{}_{}", r.family, r.k))
        .collect();
    let detail = if failures.is_empty() {
        if mismatched.is_empty() {
            "supports as required; all within printed bounds".to_string()
        } else {
            format!("supports as required; outside printed bounds: {}", mismatched.join(","))
        }
    } else {
        failures.join("; ")
    };
    Certificate::from_check("laurent_support", ctx.n, None, failures.is_empty(), detail)
}

pub fn check_moment(ctx: &PartialFractionContext, k: usize) -> Certificate {
    let expect = if k == 0 { int(2) } else { Rational::zero() };
    match ctx.moment(k) {
        Ok(m) => Certificate::from_check(
            "exact_moment",
            ctx.n,
            Some(k as i64),
            m == expect,
            format!("{:?} case, value {m}", MomentCase::of(ctx.n, k)),
        ),
        Err(e) => Certificate::from_check("exact_moment", ctx.n, Some(k as i64), false, e.to_string()),
    }
}

/// All `(n+1)²` weighted inner products equal `δ_ij` exactly.
pub fn check_orthogonality(ctx: &PartialFractionContext) -> Certificate {
    let n = ctx.n;
    let moments = match ctx.moments() {
        Ok(m) => m,
        Err(e) => return Certificate::from_check("exact_orthogonality", n, None, false, e.to_string()),
    };
    let mut bad = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let expect = Surd::rational(if i == j { Rational::one() } else { Rational::zero() });
            match orthogonality_exact_with(&moments, i, j) {
                Ok(v) if v == expect => {}
                Ok(v) => bad.push(format!("({i},{j}) = {v}")),
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    Certificate::from_check(
        "exact_orthogonality",
        n,
        None,
        bad.is_empty(),
        if bad.is_empty() { format!("{0}x{0} identity", n + 1) } else { bad.join("; ") },
    )
}

pub fn partial_fraction_ledger(n: usize) -> Result<PartialFractionLedger> {
    let ctx = PartialFractionContext::new(n)?;
    Ok(PartialFractionLedger {
        pfd_plus: (0..=n).map(|k| check_pfd_plus(&ctx, k)).collect(),
        pfd_minus: (0..=n).map(|k| check_pfd_minus(&ctx, k)).collect(),
        support: check_support(&ctx),
        leading: leading_coefficient_checks(&ctx).0,
        moments: (0..=2 * n).map(|k| check_moment(&ctx, k)).collect(),
        orthogonality: check_orthogonality(&ctx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::LaurentPoly as L;

    #[test]
    fn family_examples_n1() {
        let fam = build_abcd(1, 1).unwrap();
        assert_eq!(fam.a[1], L::monomial(int(1), -1));
        assert_eq!(fam.b[1], L::monomial(int(1), 1));
        assert_eq!(fam.c[1], L::from_ints(-1, &[-1, 0, 3], 2));
        assert_eq!(fam.d[1], L::from_ints(-1, &[3, 0, -1], 2));
        assert_eq!(fam.c.len(), 2);
        assert!(build_abcd(0, 3).is_err());
    }

    #[test]
    fn family_examples_n2() {
        let fam = build_abcd(2, 2).unwrap();
        assert_eq!(fam.c[1], L::from_ints(0, &[-1, 0, 5], 4));
        for n in 1..=10 {
            let fam = build_abcd(n, n).unwrap();
            let base = L::monomial(int(1), n as i64 - 1);
            for x in [&fam.a[0], &fam.b[0], &fam.c[0], &fam.d[0]] {
                assert_eq!(x, &base);
            }
            assert_eq!(fam.a.len(), n + 1);
            assert_eq!(fam.c.len(), n + 1);
        }
    }

    #[test]
    fn pfd_examples() {
        let ctx = PartialFractionContext::new(1).unwrap();
        // A_1 G_1 + B_1 F_1 = (3z³ + 2z + 3z^{-1})/2 = 4z P_2(J(z))
        let sum = &(&ctx.family.a[1] * &ctx.factors.g) + &(&ctx.family.b[1] * &ctx.factors.f);
        assert_eq!(sum, L::from_ints(-1, &[3, 0, 2, 0, 3], 2));
        assert_eq!(sum, ctx.numerator(2));
        // C_1 G_1 + D_1 F_1 = 4z
        let sum = &(&ctx.family.c[1] * &ctx.factors.g) + &(&ctx.family.d[1] * &ctx.factors.f);
        assert_eq!(sum, L::monomial(int(4), 1));
        assert!(check_pfd_plus(&ctx, 1).passed());
        assert!(check_pfd_minus(&ctx, 1).passed());
    }

    #[test]
    fn pfd_holds_to_twelve() {
        for n in 1..=12 {
            let ctx = PartialFractionContext::new(n).unwrap();
            for k in 0..=n {
                assert!(check_pfd_plus(&ctx, k).passed(), "plus n={n} k={k}");
                assert!(check_pfd_minus(&ctx, k).passed(), "minus n={n} k={k}");
            }
        }
    }

    #[test]
    fn supports() {
        for n in 1..=12 {
            let ctx = PartialFractionContext::new(n).unwrap();
            let report = laurent_support_report(&ctx.family);
            assert!(report.failures().is_empty(), "n={n}: {:?}", report.failures());
            assert!(check_support(&ctx).passed());
            assert_eq!(ctx.family.a[n].coeff(-1) != Rational::zero(), true);
        }
        let ctx = PartialFractionContext::new(2).unwrap();
        let report = laurent_support_report(&ctx.family);
        let b2 = report.row('B', 2);
        assert_eq!((b2.min, b2.max), (Some(1), Some(3)));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment_exact(1, 0).unwrap(), int(2));
        assert_eq!(moment_exact(1, 1).unwrap(), int(0));
        assert_eq!(moment_exact(1, 2).unwrap(), int(0));
        assert!(moment_exact(1, 3).is_err());
        assert!(moment_exact(0, 0).is_err());
        for n in 1..=10 {
            let ctx = PartialFractionContext::new(n).unwrap();
            let m = ctx.moments().unwrap();
            assert_eq!(m[0], int(2));
            assert!(m[1..].iter().all(Zero::is_zero), "n = {n}");
        }
    }

    #[test]
    fn moment_cases() {
        assert_eq!(MomentCase::of(3, 0), MomentCase::Constant);
        assert_eq!(MomentCase::of(3, 6), MomentCase::Top);
        assert_eq!(MomentCase::of(3, 3), MomentCase::Interior);
    }

    #[test]
    fn orthogonality_examples() {
        assert_eq!(orthogonality_exact(2, 1, 1).unwrap(), Surd::rational(int(1)));
        assert!(orthogonality_exact(2, 0, 1).unwrap().is_zero());
        assert!(orthogonality_exact(2, 0, 3).is_err());
        for n in 1..=8 {
            assert!(check_orthogonality(&PartialFractionContext::new(n).unwrap()).passed());
        }
    }

    #[test]
    fn leading_coefficient_examples() {
        let ctx = PartialFractionContext::new(1).unwrap();
        let (cert, rep) = leading_coefficient_checks(&ctx);
        assert!(cert.passed(), "{}", cert.detail);
        assert_eq!(rep.c_top_coeff, "3/2");
        assert_eq!(rep.d_inverse_coeff, "3/2");
        assert_eq!(rep.b_inverse_coeff, "0");
        assert_eq!(rep.carrier, 'D');
        for n in 1..=12 {
            let ctx = PartialFractionContext::new(n).unwrap();
            assert!(leading_coefficient_checks(&ctx).0.passed(), "n = {n}");
        }
    }

    #[test]
    fn reduction_rules() {
        // f = z² + 1/4 has zeros ±i/2 inside the disk; ∮ z/f = 1, ∮ 1/f = 0.
        let f = L::from_ints(0, &[1, 0, 4], 4);
        assert_eq!(contour_poly_over(&L::monomial(int(1), 1), &f).unwrap(), int(1));
        assert_eq!(contour_poly_over(&L::one(), &f).unwrap(), int(0));
        // deg p >= deg f is reduced first: z³/f = z - (1/4) z / f
        assert_eq!(contour_poly_over(&L::monomial(int(1), 3), &f).unwrap(), rat(-1, 4));
        assert_eq!(contour_const_over_z_times(&int(5), &f).unwrap(), int(0));
        let g = L::from_ints(0, &[4, 0, 1], 1);
        assert_eq!(contour_const_over_z_outside(&int(2), &g).unwrap(), rat(1, 2));
        assert!(split_simple_pole(&L::monomial(int(1), -2)).is_err());
    }
}
