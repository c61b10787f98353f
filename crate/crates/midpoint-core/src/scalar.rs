//! Scalars in two modes: exact rationals and 64-bit floats with a
//! tolerance policy. Exact-mode arithmetic is closed under the four
//! operations; float-mode comparisons always go through a
//! [`ToleranceBudget`]. The two modes never mix silently.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Exact,
    Float,
}

/// Comparison bands for float-mode predicates.
///
/// `eq_tol` is the equality band, `strict_margin` the minimum excess
/// needed to certify a strict inequality, `newton_tol` the root-finding
/// convergence target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceBudget {
    pub eq_tol: f64,
    pub strict_margin: f64,
    pub newton_tol: f64,
}

impl Default for ToleranceBudget {
    fn default() -> Self {
        ToleranceBudget { eq_tol: 1e-9, strict_margin: 1e-7, newton_tol: 1e-12 }
    }
}

impl ToleranceBudget {
    pub fn new(eq_tol: f64, strict_margin: f64, newton_tol: f64) -> Result<Self> {
        if !(eq_tol > 0.0) {
            return Err(Error::InvalidTolerance("eq_tol must be positive"));
        }
        if eq_tol > strict_margin {
            return Err(Error::InvalidTolerance("eq_tol must not exceed strict_margin"));
        }
        if newton_tol > eq_tol {
            return Err(Error::InvalidTolerance("newton_tol must not exceed eq_tol"));
        }
        Ok(ToleranceBudget { eq_tol, strict_margin, newton_tol })
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn zero(mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::zero()),
            Mode::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(mode: Mode) -> Scalar {
        Scalar::from_int(1, mode)
    }

    pub fn from_int(n: i64, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::from_integer(BigInt::from(n))),
            Mode::Float => Scalar::Float(n as f64),
        }
    }

    /// Exact rational p/q. Panics if q = 0.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::Exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_f64(v: f64) -> Scalar {
        Scalar::Float(v)
    }

    /// The exact rational with the same value as the float `v`.
    pub fn exact_from_f64(v: f64) -> Scalar {
        Scalar::Exact(BigRational::from_float(v).expect("finite float"))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(v) => *v,
        }
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(crate::math::abs(*v)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    /// Sign with an equality band: exact scalars compare exactly, float
    /// scalars within `band` of zero count as zero.
    pub fn sign_banded(&self, band: f64) -> Ordering {
        match self {
            Scalar::Exact(r) => r.cmp(&BigRational::zero()),
            Scalar::Float(v) => {
                if crate::math::abs(*v) <= band {
                    Ordering::Equal
                } else if *v > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn cmp_banded(&self, other: &Scalar, band: f64) -> Result<Ordering> {
        let d = self.checked_sub(other)?;
        Ok(d.sign_banded(band))
    }

    fn same_mode(&self, other: &Scalar) -> Result<()> {
        if self.mode() == other.mode() {
            Ok(())
        } else {
            Err(Error::MixedMode)
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_mode(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_mode(other)?;
        Ok(self - other)
    }

    /// Demote to float mode (identity on floats).
    pub fn to_float_scalar(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }
}

/// True iff `a` and `b` agree: exactly in exact mode, within
/// `tol.eq_tol` in float mode. Mixed modes are an error.
pub fn approx_eq(a: &Scalar, b: &Scalar, tol: &ToleranceBudget) -> Result<bool> {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => Ok(x == y),
        (Scalar::Float(x), Scalar::Float(y)) => Ok(crate::math::abs(x - y) <= tol.eq_tol),
        _ => Err(Error::MixedMode),
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => panic!("mixed-mode scalar arithmetic"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => a == b,
            _ => false,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Some(a.cmp(b)),
            (Scalar::Float(a), Scalar::Float(b)) => a.partial_cmp(b),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(String::from("bad rational numerator")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(String::from("bad rational denominator")))?;
            if q.is_zero() {
                return Err(Error::InvalidParameter(String::from("zero denominator")));
            }
            Ok(Scalar::Exact(BigRational::new(p, q)))
        } else if let Ok(n) = s.parse::<i64>() {
            Ok(Scalar::from_int(n, Mode::Exact))
        } else {
            let v: f64 = s
                .parse()
                .map_err(|_| Error::InvalidParameter(String::from("bad scalar literal")))?;
            Ok(Scalar::Float(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_eq_bands() {
        let tol = ToleranceBudget::default();
        assert!(approx_eq(&Scalar::Float(1.0), &Scalar::Float(1.0 + 1e-12), &tol).unwrap());
        assert!(approx_eq(&Scalar::from_int(1, Mode::Exact), &Scalar::from_int(1, Mode::Exact), &tol).unwrap());
        assert!(!approx_eq(&Scalar::Float(1.0), &Scalar::Float(1.001), &tol).unwrap());
    }

    #[test]
    fn mixed_mode_comparison_is_error() {
        let tol = ToleranceBudget::default();
        assert!(matches!(
            approx_eq(&Scalar::Float(1.0), &Scalar::from_int(1, Mode::Exact), &tol),
            Err(Error::MixedMode)
        ));
    }

    #[test]
    fn ratio_roundtrip_display() {
        let s = Scalar::ratio(-3, 6);
        assert_eq!(alloc::format!("{s}"), "-1/2");
        let back: Scalar = "-1/2".parse().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn tolerance_validation() {
        assert!(ToleranceBudget::new(1e-9, 1e-7, 1e-12).is_ok());
        assert!(ToleranceBudget::new(1e-6, 1e-7, 1e-12).is_err());
        assert!(ToleranceBudget::new(1e-9, 1e-7, 1e-8).is_err());
    }
}
