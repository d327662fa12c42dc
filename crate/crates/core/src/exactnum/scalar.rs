//! Exact complex numbers with rational real and imaginary parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// An exact complex scalar `re + im*i` over arbitrary-precision rationals.
///
/// All arithmetic is exact. Equality is structural, which coincides with
/// mathematical equality because `BigRational` is always reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact real fraction `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// Exact imaginary fraction `(num/den)*i`. Panics if `den == 0`.
    pub fn from_ratio_i(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True if the imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2 = re^2 + im^2`, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, or an error on exact zero.
    pub fn checked_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact division, or an error when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self.clone() * rhs.checked_inv()?)
    }

    /// Lossy conversion for numeric consumers.
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for ExactScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a ExactScalar> for ExactScalar {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        Self::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for ExactScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for ExactScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &'b ExactScalar) -> ExactScalar {
        ExactScalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign for ExactScalar {
    fn mul_assign(&mut self, rhs: Self) {
        *self = &*self * &rhs;
    }
}

/// Panics on division by zero; use [`ExactScalar::checked_div`] on untrusted input.
impl Div for ExactScalar {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by exact zero")
    }
}

fn fmt_rational(r: &BigRational) -> String {
    r.to_string()
}

impl fmt::Display for ExactScalar {
    /// Canonical rendering: `0`, `3/2`, `i`, `-i`, `3/4i`, `1/2-3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                out.push('+');
            }
            if self.im.is_one() {
                out.push('i');
            } else if (-self.im.clone()).is_one() {
                out.push_str("-i");
            } else {
                out.push_str(&fmt_rational(&self.im));
                out.push('i');
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

impl FromStr for ExactScalar {
    type Err = ExactError;

    /// Parses the canonical [`fmt::Display`] forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::BadScalarLiteral(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        // Split an optional trailing imaginary component off the real part.
        if let Some(body) = t.strip_suffix('i') {
            // Find the split point: a '+' or '-' not at position 0 and not
            // inside a fraction. Rational literals contain only digits, '/'
            // and a leading '-', so any interior sign starts the imaginary part.
            let bytes = body.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                if bytes[idx] == b'+' || bytes[idx] == b'-' {
                    split = Some(idx);
                    break;
                }
            }
            let (re_str, im_str) = match split {
                Some(idx) => (&body[..idx], &body[idx..]),
                None => ("0", body),
            };
            let im = match im_str {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                other => {
                    let other = other.strip_prefix('+').unwrap_or(other);
                    BigRational::from_str(other).map_err(|_| bad())?
                }
            };
            let re = BigRational::from_str(re_str).map_err(|_| bad())?;
            Ok(Self::new(re, im))
        } else {
            let re = BigRational::from_str(t).map_err(|_| bad())?;
            Ok(Self::from_rational(re))
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: (i64, i64), im: (i64, i64)) -> ExactScalar {
        ExactScalar::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    #[test]
    fn product_of_gaussian_integers() {
        // (1+2i)(3-i) = 5+5i
        let lhs = c((1, 1), (2, 1)) * c((3, 1), (-1, 1));
        assert_eq!(lhs, c((5, 1), (5, 1)));
    }

    #[test]
    fn conjugation_flips_imaginary_part() {
        let z = c((1, 2), (-3, 4));
        assert_eq!(z.conj(), c((1, 2), (3, 4)));
        assert_eq!(z.clone().conj().conj(), z);
    }

    #[test]
    fn division_by_self_is_one() {
        let z = c((1, 1), (1, 1));
        assert!(z.clone().checked_div(&z).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = ExactScalar::one();
        assert!(matches!(
            z.checked_div(&ExactScalar::zero()),
            Err(ExactError::DivisionByZero)
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "0", "1", "-1", "3/2", "-3/2", "i", "-i", "3/4i", "-3/4i", "1/2+3/4i", "1/2-3/4i",
            "-1/2+i", "-1/2-i", "2+2i",
        ] {
            let z: ExactScalar = s.parse().unwrap();
            assert_eq!(z.to_string(), s, "canonical form of {s:?}");
        }
    }

    #[test]
    fn norm_sqr_is_exact() {
        let z = c((3, 5), (4, 5));
        assert_eq!(z.norm_sqr(), BigRational::one());
    }
}
