//! Exact arithmetic substrate.
//!
//! Every identity in this crate is checked by building a residual
//! [`LaurentPoly`] with exact rational coefficients and asserting that it is
//! the zero polynomial. Polynomials in `x` are stored as Laurent polynomials
//! with nonnegative support; polynomials in the Joukowski variable `z` may
//! carry negative exponents.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `2^{-e}` as a rational.
pub fn inv_pow2(e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << e)
}

/// Finitely supported series `sum_i c_i z^(min_exponent + i)` with exact
/// coefficients.
///
/// Canonical form: the first and last stored coefficients are nonzero, and
/// the zero polynomial has no coefficients and `min_exponent == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exponent: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_exponent: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(0, vec![c])
    }

    /// `c z^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    /// The Joukowski map `J(z) = (z + 1/z)/2`.
    pub fn joukowski() -> Self {
        Self::new(-1, vec![rat(1, 2), Rational::zero(), rat(1, 2)])
    }

    /// Builds a polynomial from `coeffs[i]` = coefficient of `z^(min_exponent + i)`
    /// and trims it to canonical form.
    pub fn new(min_exponent: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly {
            min_exponent,
            coeffs,
        };
        p.normalize();
        p
    }

    /// Polynomial `sum_i coeffs[i] z^i`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::new(0, coeffs)
    }

    /// Integer coefficients divided by a common denominator.
    pub fn from_ints(min_exponent: i64, coeffs: &[i64], denominator: i64) -> Self {
        Self::new(
            min_exponent,
            coeffs.iter().map(|&c| rat(c, denominator)).collect(),
        )
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.min_exponent = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                self.coeffs.drain(..first);
                self.min_exponent += first as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exponent + self.coeffs.len() as i64 - 1)
        }
    }

    /// `(min, max)` exponents, `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        self.degree().map(|d| (self.min_exponent, d))
    }

    /// Stored coefficients, lowest exponent first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        let idx = e - self.min_exponent;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficient of the highest power; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exponent + i as i64, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.min_exponent >= 0
    }

    /// True when every nonzero term has an even exponent.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exponent: self.min_exponent,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exponent: self.min_exponent + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Term-by-term derivative in `z`.
    pub fn diff(&self) -> Self {
        let coeffs: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * int(self.min_exponent + i as i64))
            .collect();
        Self::new(self.min_exponent - 1, coeffs)
    }

    /// The substitution `z -> 1/z`: the coefficient of `z^k` moves to `z^{-k}`.
    pub fn recip_sub(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => LaurentPoly {
                min_exponent: -d,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Product with `J(z) = (z + 1/z)/2`, computed coefficientwise.
    pub fn mul_joukowski(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let half = rat(1, 2);
        let len = self.coeffs.len();
        let mut out = vec![Rational::zero(); len + 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            let h = c * &half;
            out[i] += &h;
            out[i + 2] += h;
        }
        Self::new(self.min_exponent - 1, out)
    }

    /// Reads `self` as a polynomial in `x` and returns `self(J(z))`.
    ///
    /// Fails if `self` has negative exponents.
    pub fn compose_joukowski(&self) -> Result<Self> {
        if !self.is_polynomial() {
            return Err(Error::InvalidArgument(
                "only polynomials can be composed with J(z)".into(),
            ));
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let mut acc = Self::zero();
        for e in (0..=deg).rev() {
            acc = &acc.mul_joukowski() + &Self::constant(self.coeff(e));
        }
        Ok(acc)
    }

    /// Quotient and remainder of polynomial division. Both operands must be
    /// polynomials and the divisor nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::InvalidArgument(
                "polynomial division needs nonnegative exponents".into(),
            ));
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        };
        let lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let t = Self::monomial(rem.leading_coeff() / &lc, rd - dd);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    /// Floating evaluation: Horner in `z` on the nonnegative part and in
    /// `1/z` on the negative part.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        if self.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let (lo, hi) = self.support().unwrap();
        if lo < 0 && z == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain(
                "evaluation at z = 0 of a series with negative exponents".into(),
            ));
        }
        let mut pos = Complex64::new(0.0, 0.0);
        for e in (0.max(lo)..=hi.max(-1)).rev() {
            pos = pos * z + self.coeff_f64(e);
        }
        if lo > 0 {
            pos *= z.powi(lo as i32);
        }
        let mut neg = Complex64::new(0.0, 0.0);
        if lo < 0 {
            let w = z.inv();
            for e in lo..=hi.min(-1) {
                neg = neg * w + self.coeff_f64(e);
            }
            neg *= w.powi((-hi.min(-1)) as i32);
        }
        Ok(pos + neg)
    }

    /// Real evaluation; same domain rule as [`LaurentPoly::eval_complex`].
    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        self.eval_complex(Complex64::new(x, 0.0)).map(|v| v.re)
    }

    fn coeff_f64(&self, e: i64) -> f64 {
        self.coeff(e).to_f64().unwrap_or(f64::NAN)
    }

    /// Coefficients as `f64`, lowest exponent first.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_into(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exponent.min(b.min_exponent);
    let hi = a.degree().unwrap().max(b.degree().unwrap());
    let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.min_exponent - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.min_exponent - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::new(lo, out)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.min_exponent + rhs.min_exponent, out)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exponent: self.min_exponent,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A real number of the form `coeff * sqrt(radicand)` with a square-free
/// radicand. Carries the irrational normalization of orthonormal Legendre
/// products so that expansion coefficients stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rational,
    pub radicand: u64,
}

impl Surd {
    /// `coeff * sqrt(radicand)`, reduced so the radicand is square-free.
    pub fn new(coeff: Rational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        let mut rest = radicand;
        let mut outside = 1u64;
        let mut p = 2u64;
        while p * p <= rest {
            while rest % (p * p) == 0 {
                rest /= p * p;
                outside *= p;
            }
            p += 1;
        }
        let coeff = coeff * int(outside as i64);
        let radicand = if coeff.is_zero() { 1 } else { rest };
        Surd { coeff, radicand }
    }

    pub fn rational(coeff: Rational) -> Self {
        Surd::new(coeff, 1)
    }

    /// Scalar multiple with the same radicand.
    pub fn scale(&self, c: &Rational) -> Self {
        Surd::new(&self.coeff * c, self.radicand)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `Some(q)` when the value is the rational `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.radicand == 1).then(|| self.coeff.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f1() -> LaurentPoly {
        LaurentPoly::from_ints(0, &[1, 0, 3], 2)
    }

    fn g1() -> LaurentPoly {
        LaurentPoly::from_ints(0, &[3, 0, 1], 2)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        let p = LaurentPoly::new(-3, vec![int(0), int(0), int(5), int(0)]);
        assert_eq!(p.min_exponent(), -1);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(p.degree(), Some(-1));
        let z = LaurentPoly::new(4, vec![int(0), int(0)]);
        assert!(z.is_zero());
        assert_eq!(z.min_exponent(), 0);
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn add_examples() {
        let a = LaurentPoly::from_ints(0, &[1, 1], 1);
        let b = LaurentPoly::from_ints(0, &[-1, 1], 1);
        assert_eq!(&a + &b, LaurentPoly::monomial(int(2), 1));
        let zinv = LaurentPoly::monomial(int(1), -1);
        assert_eq!(&zinv + &LaurentPoly::zero(), zinv);
        assert_eq!(&f1() + &g1(), LaurentPoly::from_ints(0, &[2, 0, 2], 1));
    }

    #[test]
    fn mul_examples() {
        let a = LaurentPoly::from_ints(0, &[1, 1], 1);
        let b = LaurentPoly::from_ints(0, &[1, -1], 1);
        assert_eq!(&a * &b, LaurentPoly::from_ints(0, &[1, 0, -1], 1));
        let zinv = LaurentPoly::monomial(int(1), -1);
        let z = LaurentPoly::monomial(int(1), 1);
        assert_eq!(&zinv * &z, LaurentPoly::one());
        assert_eq!(
            &f1() * &f1().recip_sub(),
            LaurentPoly::from_ints(-2, &[3, 0, 10, 0, 3], 4)
        );
    }

    #[test]
    fn diff_examples() {
        let p = LaurentPoly::new(-1, vec![int(1), int(0), int(0), int(0), int(1)]);
        assert_eq!(p.diff(), LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, 3], 1));
        assert!(LaurentPoly::constant(rat(7, 3)).diff().is_zero());
        let q = LaurentPoly::from_ints(1, &[3, 0, 2, 0, 3], 8);
        assert_eq!(q.diff(), LaurentPoly::from_ints(0, &[3, 0, 6, 0, 15], 8));
    }

    #[test]
    fn recip_sub_examples() {
        let p = LaurentPoly::from_ints(0, &[1, 2], 1);
        assert_eq!(p.recip_sub(), LaurentPoly::from_ints(-1, &[2, 1], 1));
        assert_eq!(f1().recip_sub(), LaurentPoly::from_ints(-2, &[3, 0, 1], 2));
        assert_eq!(f1().recip_sub().recip_sub(), f1());
    }

    #[test]
    fn eval_examples() {
        let root = Complex64::new(0.0, 1.0 / 3f64.sqrt());
        assert!(f1().eval_complex(root).unwrap().norm() < 1e-14);
        let p = LaurentPoly::new(-2, vec![rat(1, 3), int(-2), int(0), rat(5, 7), int(4)]);
        let sum: f64 = p.coeffs_f64().iter().sum();
        let v = p.eval_complex(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - sum).abs() < 1e-14 && v.im == 0.0);
        let zinv = LaurentPoly::monomial(int(1), -1);
        assert_eq!(zinv.eval_f64(2.0).unwrap(), 0.5);
        assert!(matches!(zinv.eval_f64(0.0), Err(Error::Domain(_))));
        assert_eq!(f1().eval_f64(0.0).unwrap(), 0.5);
    }

    #[test]
    fn eval_matches_direct_sum() {
        let p = LaurentPoly::new(-3, (0..7).map(|i| rat(i - 2, 3)).collect());
        let z = Complex64::new(0.4, -0.9);
        let direct: Complex64 = p
            .terms()
            .map(|(e, c)| z.powi(e as i32) * c.to_f64().unwrap())
            .sum();
        assert!((p.eval_complex(z).unwrap() - direct).norm() < 1e-13);
        let q = LaurentPoly::from_ints(2, &[1, -1, 3], 1);
        let direct: Complex64 = q
            .terms()
            .map(|(e, c)| z.powi(e as i32) * c.to_f64().unwrap())
            .sum();
        assert!((q.eval_complex(z).unwrap() - direct).norm() < 1e-13);
    }

    #[test]
    fn joukowski_composition() {
        let x = LaurentPoly::monomial(int(1), 1);
        assert_eq!(x.compose_joukowski().unwrap(), LaurentPoly::joukowski());
        let p2 = LaurentPoly::from_coeffs(vec![rat(-1, 2), int(0), rat(3, 2)]);
        assert_eq!(
            p2.compose_joukowski().unwrap(),
            LaurentPoly::from_ints(-2, &[3, 0, 2, 0, 3], 8)
        );
        assert!(LaurentPoly::monomial(int(1), -1).compose_joukowski().is_err());
        assert_eq!(
            p2.mul_joukowski(),
            &p2 * &LaurentPoly::joukowski(),
        );
    }

    #[test]
    fn division() {
        let f = LaurentPoly::from_ints(0, &[1, 0, 3], 1);
        let p = LaurentPoly::from_ints(0, &[2, 1, 0, 5, 7], 1);
        let (q, r) = p.div_rem(&f).unwrap();
        assert!(r.degree().unwrap_or(-1) < 2);
        assert_eq!(&(&q * &f) + &r, p);
        assert!(p.div_rem(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn binomials_and_surds() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
        let s = Surd::new(rat(1, 2), 9);
        assert_eq!(s.as_rational(), Some(rat(3, 2)));
        let s = Surd::new(rat(1, 2), 12);
        assert_eq!((s.coeff.clone(), s.radicand), (int(1), 3));
        assert_eq!(Surd::new(int(0), 7).radicand, 1);
        assert_eq!(format!("{}", LaurentPoly::from_ints(-1, &[-2, 0, 1], 3)), "-2/3*z^-1 + 1/3*z");
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        (-4i64..4, prop::collection::vec((-9i64..10, 1i64..5), 0..6))
            .prop_map(|(lo, cs)| LaurentPoly::new(lo, cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    fn canonical(p: &LaurentPoly) -> bool {
        match (p.coeffs().first(), p.coeffs().last()) {
            (None, None) => p.min_exponent() == 0,
            (Some(a), Some(b)) => !a.is_zero() && !b.is_zero(),
            _ => false,
        }
    }

    proptest! {
        #[test]
        fn mul_commutes_and_leibniz(a in small_laurent(), b in small_laurent()) {
            let ab = &a * &b;
            prop_assert_eq!(&ab, &(&b * &a));
            let lhs = ab.diff();
            let rhs = &(&a.diff() * &b) + &(&a * &b.diff());
            prop_assert_eq!(lhs, rhs);
            prop_assert!(canonical(&ab));
            prop_assert!(canonical(&(&a + &b)));
            prop_assert!(canonical(&(&a - &a)));
        }

        #[test]
        fn recip_sub_involution(a in small_laurent()) {
            let r = a.recip_sub();
            prop_assert_eq!(&r.recip_sub(), &a);
            prop_assert!(canonical(&r));
            if let Some(d) = r.degree() {
                prop_assert_eq!(d, -a.min_exponent());
            }
        }
    }
}
