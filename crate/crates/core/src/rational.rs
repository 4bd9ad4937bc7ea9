//! Exact rationals over unbounded integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    /// `None` when `den` is zero.
    pub fn checked_new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Self> {
        let den = den.into();
        if den.is_zero() {
            None
        } else {
            Some(Self::new(num, den))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Mixed form `a+b/c` (or `a-b/c`, or a plain integer).
    pub fn mixed(&self) -> String {
        if self.is_integer() {
            return self.numer().to_string();
        }
        let whole = self.floor();
        let frac = &self.0 - BigRational::from_integer(whole.clone());
        if whole.is_zero() {
            format!("{}/{}", frac.numer(), frac.denom())
        } else {
            format!("{}+{}/{}", whole, frac.numer(), frac.denom())
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl std::str::FromStr for Rational {
    type Err = crate::Error;

    /// Accepts `p`, `p/q` and `a+b/c`.
    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::InvalidInput(format!("cannot parse rational {s:?}"));
        let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
        let parse_frac = |t: &str| -> crate::Result<Rational> {
            match t.split_once('/') {
                Some((p, q)) => {
                    let q = parse_int(q)?;
                    Rational::checked_new(parse_int(p)?, q).ok_or_else(bad)
                }
                None => Ok(Rational::from_int(parse_int(t)?)),
            }
        };
        let s = s.trim();
        // a leading sign is not a mixed-form separator
        match s[1.min(s.len())..].find('+') {
            Some(i) => {
                let (whole, frac) = s.split_at(i + 1);
                Ok(parse_frac(whole)? + parse_frac(&frac[1..])?)
            }
            None => parse_frac(s),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer((*other).into())
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl Rational {
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
}

/// `gcd` on machine integers, shared by the arithmetic modules.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

// JSON shape: {"num": ..., "den": ...}; integers that fit in i64 are
// written as numbers, larger ones as decimal strings.
#[derive(Serialize, Deserialize)]
struct Wire {
    num: WireInt,
    den: WireInt,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl WireInt {
    fn from_big(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| WireInt::Big(v.to_string()), WireInt::Small)
    }

    fn into_big(self) -> Option<BigInt> {
        match self {
            WireInt::Small(v) => Some(v.into()),
            WireInt::Big(s) => s.parse().ok(),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            num: WireInt::from_big(self.numer()),
            den: WireInt::from_big(self.denom()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let num = w.num.into_big().ok_or_else(|| D::Error::custom("bad numerator"))?;
        let den = w.den.into_big().ok_or_else(|| D::Error::custom("bad denominator"))?;
        Rational::checked_new(num, den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_orders() {
        let a = Rational::new(72, 189);
        assert_eq!(a, Rational::new(8, 21));
        assert!(Rational::new(5, 2) < Rational::new(8, 3));
        assert_eq!(Rational::new(-4, -6), Rational::new(2, 3));
        assert_eq!(Rational::new(6, -4).denom(), &BigInt::from(2));
    }

    #[test]
    fn mixed_and_plain_forms() {
        let v = Rational::from(2) + Rational::new(8, 21);
        assert_eq!(v.to_string(), "50/21");
        assert_eq!(v.mixed(), "2+8/21");
        assert_eq!(Rational::from(3).mixed(), "3");
        assert_eq!(Rational::new(3, 4).mixed(), "3/4");
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!("11/4".parse::<Rational>().unwrap(), Rational::new(11, 4));
        assert_eq!("2+8/21".parse::<Rational>().unwrap(), Rational::new(50, 21));
        assert_eq!("-3/6".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = Rational::new(25, 11);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"num":25,"den":11}"#);
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        let huge = Rational::new(BigInt::from(10).pow(30), 7);
        let back: Rational = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }
}
