use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;

/// An exact rational number extended by a single point at infinity.
///
/// The representation is always reduced: `den > 0` and `gcd(|num|, den) = 1`
/// for finite values, and `(1, 0)` is the only representation of infinity.
/// All vertical values `k/0` collapse onto that point, so `+inf` and `-inf`
/// are the same element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Normalizes `num/den`. Rejects `0/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, MathError> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(MathError::Indeterminate);
            }
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Largest integer not above a finite value.
    pub fn floor(&self) -> BigInt {
        self.assert_finite("floor");
        self.num.div_floor(&self.den)
    }

    pub fn ceil(&self) -> BigInt {
        self.assert_finite("ceil");
        -((-&self.num).div_floor(&self.den))
    }

    /// Fractional part `x - floor(x)`, in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        self - &Rational::integer(self.floor())
    }

    pub fn recip(&self) -> Rational {
        if self.is_infinite() {
            return Rational::zero();
        }
        // 1/0 normalizes to infinity.
        Rational::new(self.den.clone(), self.num.clone()).expect("nonzero pair")
    }

    /// Regular continued fraction `[a0; a1, ...]` with `a0 = floor(x)`.
    pub fn continued_fraction(&self) -> Vec<BigInt> {
        self.assert_finite("continued_fraction");
        let mut out = Vec::new();
        let (mut p, mut q) = (self.num.clone(), self.den.clone());
        while !q.is_zero() {
            let (a, r) = p.div_mod_floor(&q);
            out.push(a);
            p = q;
            q = r;
        }
        out
    }

    fn assert_finite(&self, op: &str) {
        assert!(self.is_finite(), "{op} is undefined at infinity");
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

// Arithmetic is only defined on finite values; the slope layer handles the
// point at infinity explicitly.
macro_rules! finite_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl std::ops::$trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.assert_finite(stringify!($method));
                rhs.assert_finite(stringify!($method));
                let f: fn(&Rational, &Rational) -> Rational = $body;
                f(self, rhs)
            }
        }
        impl std::ops::$trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    };
}

finite_binop!(Add, add, |a, b| Rational::new(
    &a.num * &b.den + &b.num * &a.den,
    &a.den * &b.den
)
.expect("finite sum"));
finite_binop!(Sub, sub, |a, b| Rational::new(
    &a.num * &b.den - &b.num * &a.den,
    &a.den * &b.den
)
.expect("finite difference"));
finite_binop!(Mul, mul, |a, b| Rational::new(
    &a.num * &b.num,
    &a.den * &b.den
)
.expect("finite product"));

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        if self.is_infinite() {
            return self;
        }
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

/// Finite values are ordered as real numbers. Infinity equals itself and is
/// incomparable with every finite value.
impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Some(Ordering::Equal),
            (false, false) => Some((&self.num * &other.den).cmp(&(&other.num * &self.den))),
            _ => None,
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Accepts `p/q`, a bare integer `p`, or `inf`.
impl FromStr for Rational {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| MathError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(Rational::infinity());
        }
        let parse_int = |part: &str| -> Result<BigInt, MathError> {
            let part = part.trim();
            let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected an integer"));
            }
            part.parse::<BigInt>()
                .map_err(|_| err("expected an integer"))
        };
        match t.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (parse_int(p)?, parse_int(q)?);
                Rational::new(p, q).map_err(|_| err("0/0 is indeterminate"))
            }
            None => Ok(Rational::integer(parse_int(t)?)),
        }
    }
}
