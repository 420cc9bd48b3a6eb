//! Exact scalars in the Gaussian rationals ℚ(i).
//!
//! Arithmetic is delegated to malachite; this module owns the text form
//! `a/b+c/d*i` used on the wire and the error contract for division.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{CheckedSqrt, Reciprocal};
use malachite_base::num::basic::traits::Zero;
use malachite_q::gaussian_rational::GaussianRational as Gq;
use malachite_q::Rational;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `re + im·i` of ℚ(i). Components are always in lowest terms.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GaussianRational(Gq);

/// Binary operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn zero() -> Self {
        Self(Gq::ZERO)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(Rational::ZERO, Rational::from(1))
    }

    pub fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(Rational::from(v), Rational::ZERO)
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::from_signeds(num, den), Rational::ZERO)
    }

    /// `a + b·i` with integer parts.
    pub fn gaussian(a: i64, b: i64) -> Self {
        Self::new(Rational::from(a), Rational::from(b))
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        Self(Gq {
            real: re,
            imaginary: im,
        })
    }

    pub fn re(&self) -> &Rational {
        &self.0.real
    }

    pub fn im(&self) -> &Rational {
        &self.0.imaginary
    }

    pub fn is_zero(&self) -> bool {
        self.0.real == 0u32 && self.0.imaginary == 0u32
    }

    pub fn is_one(&self) -> bool {
        self.0.real == 1u32 && self.0.imaginary == 0u32
    }

    pub fn conj(&self) -> Self {
        Self::new(self.0.real.clone(), -self.0.imaginary.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DegenerateScalar);
        }
        Ok(Self((&self.0).reciprocal()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DegenerateScalar);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// A square root inside ℚ(i), or `None` when `self` is not a square there.
    pub fn sqrt_if_square(&self) -> Option<Self> {
        (&self.0).checked_sqrt().map(Self)
    }
}

/// Field operation dispatch; `Div` by zero is the only failure.
pub fn scalar_arith(a: &GaussianRational, b: &GaussianRational, op: ArithOp) -> Result<GaussianRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn scalar_sqrt_if_square(a: &GaussianRational) -> Option<GaussianRational> {
    a.sqrt_if_square()
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for GaussianRational {
    fn from(v: Rational) -> Self {
        Self::new(v, Rational::ZERO)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: &GaussianRational) -> GaussianRational {
                GaussianRational((&self.0).$f(&rhs.0))
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: GaussianRational) -> GaussianRational {
                GaussianRational(self.0.$f(rhs.0))
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: &GaussianRational) -> GaussianRational {
                GaussianRational(self.0.$f(&rhs.0))
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: GaussianRational) -> GaussianRational {
                GaussianRational((&self.0).$f(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

/// Panicking division; use [`GaussianRational::checked_div`] when the divisor may be zero.
impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-self.0)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-&self.0)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if *im == 0u32 {
            return write!(f, "{re}");
        }
        let im_text = |v: &Rational| {
            if *v == 1u32 {
                "i".to_string()
            } else {
                format!("{v}*i")
            }
        };
        if *re == 0u32 {
            if *im < 0u32 {
                return write!(f, "-{}", im_text(&-im.clone()));
            }
            return write!(f, "{}", im_text(im));
        }
        if *im < 0u32 {
            write!(f, "{re}-{}", im_text(&-im.clone()))
        } else {
            write!(f, "{re}+{}", im_text(im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        what: "scalar",
        input: whole.to_string(),
    };
    let body = s.strip_prefix('+').unwrap_or(s);
    if body.is_empty() || body.starts_with(['+', '-']) && body.len() == 1 {
        return Err(bad());
    }
    let r = Rational::from_str(body).map_err(|_| bad())?;
    // malachite accepts "1/0"-free input only, but guard explicit zero denominators anyway.
    if body.ends_with("/0") {
        return Err(bad());
    }
    Ok(r)
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `a`, `a/b`, `c/d*i`, `i`, `-i`, and `a/b±c/d*i` (whitespace ignored).
    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            what: "scalar",
            input: input.to_string(),
        };
        if s.is_empty() {
            return Err(bad());
        }
        let Some(head) = s.strip_suffix('i') else {
            return Ok(Self::from(parse_rational(&s, input)?));
        };
        // Split at the last sign that is not the leading character.
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_txt, im_txt) = match split {
            Some(k) => (&head[..k], &head[k..]),
            None => ("", head),
        };
        let im_txt = im_txt.strip_suffix('*').unwrap_or(im_txt);
        let im = match im_txt {
            "" | "+" => Rational::from(1),
            "-" => Rational::from(-1),
            t => parse_rational(t, input)?,
        };
        let re = if re_txt.is_empty() {
            Rational::ZERO
        } else {
            parse_rational(re_txt, input)?
        };
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = GaussianRational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a scalar string like \"1/2-3*i\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
                Ok(GaussianRational::from_int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
                i64::try_from(v)
                    .map(GaussianRational::from_int)
                    .map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}
