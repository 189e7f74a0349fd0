//! Scalar fields used by the geometry.
//!
//! Planar work runs over arbitrary-precision rationals so that equality of
//! volumes, bounds and homothety residuals is decided exactly. The same code
//! also runs over `f64` (with an absolute tolerance in sign tests) for float
//! experiments, and the solid (3D) kernel is float only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Absolute tolerance used by `f64` sign tests.
pub const FLOAT_EPS: f64 = 1e-12;

/// An ordered field the planar kernel can run over.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// True when arithmetic is exact and `sign` never rounds.
    const EXACT: bool;
    /// Name used in the body file format.
    const FIELD: &'static str;

    fn from_int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64(&self) -> f64;

    /// Nearest representable value; exact for rationals (binary fraction).
    fn approx_from_f64(v: f64) -> Self;

    /// Sign of the value; floats treat `|x| <= FLOAT_EPS` as zero.
    fn sign(&self) -> Ordering;

    /// Square root when it exists in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    fn parse_str(s: &str) -> Result<Self>;

    fn render(&self) -> String;

    fn tol_cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other).sign()
    }

    fn tol_eq(&self, other: &Self) -> bool {
        self.tol_cmp(other) == Ordering::Equal
    }

    fn abs_val(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }

    /// Exact conversion from a rational (rounded for floats).
    fn from_rational(r: &Rational) -> Self;

    /// Twice the signed area of the closed polygon `pts`.
    fn shoelace(pts: &[[Self; 2]]) -> Self {
        let n = pts.len();
        (0..n).fold(Self::zero(), |acc, i| {
            let (p, r) = (&pts[i], &pts[(i + 1) % n]);
            acc + p[0].clone() * &r[1] - p[1].clone() * &r[0]
        })
    }

    /// Sign of the cross product `u x v`.
    fn cross_sign(u: &[Self; 2], v: &[Self; 2]) -> Ordering {
        (u[0].clone() * &v[1] - u[1].clone() * &v[0]).sign()
    }

    /// Sign of `(b - a) x (c - a)`.
    fn orient_sign(a: &[Self; 2], b: &[Self; 2], c: &[Self; 2]) -> Ordering {
        let u = [b[0].clone() - &a[0], b[1].clone() - &a[1]];
        let v = [c[0].clone() - &a[0], c[1].clone() - &a[1]];
        Self::cross_sign(&u, &v)
    }
}

/// `(x - y)` as an unreduced numerator/denominator pair.
fn unreduced_diff(x: &Rational, y: &Rational) -> (BigInt, BigInt) {
    (
        x.numer() * y.denom() - y.numer() * x.denom(),
        x.denom() * y.denom(),
    )
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const FIELD: &'static str = "rational";

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Ratio::to_f64 gives up on huge operands; fall back to a scaled quotient.
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    fn approx_from_f64(v: f64) -> Self {
        BigRational::from_float(v).unwrap_or_else(BigRational::zero)
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn tol_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    }

    fn parse_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }

    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    // Integer shoelace over the common denominator of all coordinates.
    fn shoelace(pts: &[[Self; 2]]) -> Self {
        let l = pts
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let int = |c: &Rational| c.numer() * (&l / c.denom());
        let xy: Vec<(BigInt, BigInt)> = pts.iter().map(|p| (int(&p[0]), int(&p[1]))).collect();
        let n = xy.len();
        let sum = (0..n).fold(BigInt::zero(), |acc, i| {
            let (p, r) = (&xy[i], &xy[(i + 1) % n]);
            acc + &p.0 * &r.1 - &p.1 * &r.0
        });
        BigRational::new(sum, &l * &l)
    }

    fn cross_sign(u: &[Self; 2], v: &[Self; 2]) -> Ordering {
        let lhs = u[0].numer() * v[1].numer() * (u[1].denom() * v[0].denom());
        let rhs = u[1].numer() * v[0].numer() * (u[0].denom() * v[1].denom());
        lhs.cmp(&rhs)
    }

    // Cross-multiplied integers: no gcd reductions, denominators stay positive.
    fn orient_sign(a: &[Self; 2], b: &[Self; 2], c: &[Self; 2]) -> Ordering {
        let (ux, dux) = unreduced_diff(&b[0], &a[0]);
        let (uy, duy) = unreduced_diff(&b[1], &a[1]);
        let (vx, dvx) = unreduced_diff(&c[0], &a[0]);
        let (vy, dvy) = unreduced_diff(&c[1], &a[1]);
        let lhs = ux * vy * (&duy * &dvx);
        let rhs = uy * vx * (&dux * &dvy);
        lhs.cmp(&rhs)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const FIELD: &'static str = "float";

    fn from_rational(r: &Rational) -> Self {
        Scalar::to_f64(r)
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_from_f64(v: f64) -> Self {
        v
    }

    fn sign(&self) -> Ordering {
        if self.abs() <= FLOAT_EPS {
            Ordering::Equal
        } else if *self > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn sqrt_exact(&self) -> Option<Self> {
        (*self >= -FLOAT_EPS).then(|| self.max(0.0).sqrt())
    }

    fn parse_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let d: f64 = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if d == 0.0 {
                return Err(Error::Parse(format!("zero denominator in {s}")));
            }
            Ok(n / d)
        } else {
            s.parse().map_err(|_| Error::Parse(s.to_string()))
        }
    }

    fn render(&self) -> String {
        format!("{self:?}")
    }
}

/// Parse `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.trim_start().starts_with('-');
        let int_digits = int.trim().trim_start_matches(['-', '+']);
        let whole: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().map_err(|_| bad())?
        };
        let frac_num: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = BigRational::new(whole * &scale + frac_num, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Shorthand for building exact rationals in tests and examples.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::from_frac(num, den)
}

/// A value of the form `base + coeff * sqrt(radicand)` with `radicand >= 0`.
///
/// Planar Brunn-Minkowski values `(sqrt a + sqrt b)^2 = a + b + 2 sqrt(ab)` and
/// Euclidean distances live in this set, so their signs (hence every
/// comparison the bound chain needs) are decided exactly by squaring.
#[derive(Clone, Debug, PartialEq)]
pub struct Surd<S> {
    pub base: S,
    pub coeff: S,
    pub radicand: S,
}

impl<S: Scalar> Surd<S> {
    pub fn new(base: S, coeff: S, radicand: S) -> Self {
        debug_assert!(radicand.sign() != Ordering::Less);
        Self {
            base,
            coeff,
            radicand,
        }
    }

    pub fn from_scalar(base: S) -> Self {
        Self {
            base,
            coeff: S::zero(),
            radicand: S::zero(),
        }
    }

    /// `sqrt(radicand)`.
    pub fn root(radicand: S) -> Self {
        Self::new(S::zero(), S::one(), radicand)
    }

    /// `x - self` for a plain scalar `x`.
    pub fn subtracted_from(&self, x: &S) -> Self {
        Self {
            base: x.clone() - &self.base,
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn sign(&self) -> Ordering {
        let sb = self.base.sign();
        let sc = if self.radicand.sign() == Ordering::Equal {
            Ordering::Equal
        } else {
            self.coeff.sign()
        };
        match (sb, sc) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (a, b) if a == b => a,
            (sb, _) => {
                // Opposite signs: compare base^2 with coeff^2 * radicand.
                let lhs = self.base.clone() * &self.base;
                let rhs = self.coeff.clone() * &self.coeff * &self.radicand;
                match lhs.tol_cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sb,
                    Ordering::Less => sb.reverse(),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.base.to_f64() + self.coeff.to_f64() * self.radicand.to_f64().max(0.0).sqrt()
    }

    /// Exact value when the radical part vanishes or the radicand is a perfect square.
    pub fn as_scalar(&self) -> Option<S> {
        if self.coeff.sign() == Ordering::Equal || self.radicand.sign() == Ordering::Equal {
            return Some(self.base.clone());
        }
        self.radicand
            .sqrt_exact()
            .map(|r| self.base.clone() + self.coeff.clone() * r)
    }

    pub fn render(&self) -> String {
        if let Some(v) = self.as_scalar() {
            return v.render();
        }
        format!(
            "{} + {}*sqrt({})",
            self.base.render(),
            self.coeff.render(),
            self.radicand.render()
        )
    }
}

/// Exact test of `sqrt(a) <= sqrt(b) + sqrt(c)` for nonnegative `a, b, c`.
pub fn sqrt_sum_dominates<S: Scalar>(a: &S, b: &S, c: &S) -> bool {
    // sqrt(a) <= sqrt(b) + sqrt(c)  <=>  a <= b + c + 2 sqrt(bc)
    let rhs = Surd::new(b.clone() + c, S::one(), S::from_int(4) * b * c);
    rhs.subtracted_from(a).sign() != Ordering::Greater
}
