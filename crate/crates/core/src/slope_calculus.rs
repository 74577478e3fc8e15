//! Slopes on a torus and the `SL(2, Z)` action on them.
//!
//! A slope `p/q` names the unoriented curve `q*lambda + p*mu`; the meridian
//! is `inf = 1/0`. Matrices act on the homogeneous pair `(p, q)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::MathError;
use crate::exact_math::Rational;

/// A point of the slope circle `Q + {inf}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope(Rational);

impl Slope {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, MathError> {
        Rational::new(p, q).map(Slope)
    }

    /// Panicking shorthand for literals in tests and tables.
    pub fn of(p: i64, q: i64) -> Self {
        Self::new(p, q).expect("0/0 is not a slope")
    }

    pub fn meridian() -> Self {
        Slope(Rational::infinity())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope(Rational::integer(n))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_meridian(&self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Primitive vector `(p, q)` with `q >= 0`, and `(1, 0)` for the meridian.
    pub fn vector(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }

    /// Slope of a nonzero homogeneous vector.
    pub fn from_vector(p: &BigInt, q: &BigInt) -> Result<Self, MathError> {
        Self::new(p.clone(), q.clone())
    }

    /// `x + t` for finite `x`; the meridian is fixed.
    pub fn shear(&self, t: &BigInt) -> Slope {
        shear(self, t)
    }

    /// Real-line comparison of finite slopes; `None` whenever the meridian
    /// is involved with a finite slope.
    pub fn compare(&self, other: &Slope) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }

    /// Strict `<` of finite slopes; false whenever either side is `inf`.
    pub fn lt(&self, other: &Slope) -> bool {
        self.compare(other) == Some(Ordering::Less)
    }
}

impl From<Rational> for Slope {
    fn from(r: Rational) -> Self {
        Slope(r)
    }
}

impl From<i64> for Slope {
    fn from(n: i64) -> Self {
        Slope::integer(n)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Slope {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Rational>().map(Slope)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `x + t` for finite `x`; `inf` is fixed.
pub fn shear(x: &Slope, t: &BigInt) -> Slope {
    if x.is_meridian() {
        return x.clone();
    }
    Slope(x.value() + &Rational::integer(t.clone()))
}

/// An arc of the slope circle, traversed in the increasing direction from
/// `lo` to `hi`. When `lo > hi` the arc passes through `inf`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SlopeInterval {
    lo: Slope,
    hi: Slope,
    lo_closed: bool,
    hi_closed: bool,
}

impl SlopeInterval {
    pub fn new(lo: Slope, hi: Slope, lo_closed: bool, hi_closed: bool) -> Result<Self, MathError> {
        if lo == hi {
            return Err(MathError::Dimension(format!(
                "degenerate slope interval at {lo}"
            )));
        }
        Ok(Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn open(lo: Slope, hi: Slope) -> Result<Self, MathError> {
        Self::new(lo, hi, false, false)
    }

    pub fn lo(&self) -> &Slope {
        &self.lo
    }

    pub fn hi(&self) -> &Slope {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn contains(&self, x: &Slope) -> bool {
        interval_contains(self, x)
    }

    pub fn shear(&self, t: &BigInt) -> SlopeInterval {
        SlopeInterval {
            lo: shear(&self.lo, t),
            hi: shear(&self.hi, t),
            ..self.clone()
        }
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lo, self.hi)
    }
}

/// True when `x` lies strictly inside the arc that runs upward from `lo` to
/// `hi` around the slope circle.
pub fn strictly_between(lo: &Slope, x: &Slope, hi: &Slope) -> bool {
    if x == lo || x == hi {
        return false;
    }
    match (lo.is_meridian(), hi.is_meridian(), x.is_meridian()) {
        (true, _, xm) => !xm && x.lt(hi),
        (_, true, xm) => !xm && lo.lt(x),
        (false, false, true) => hi.lt(lo),
        (false, false, false) => {
            if lo.lt(hi) {
                lo.lt(x) && x.lt(hi)
            } else {
                lo.lt(x) || x.lt(hi)
            }
        }
    }
}

pub fn interval_contains(i: &SlopeInterval, x: &Slope) -> bool {
    if *x == i.lo {
        return i.lo_closed;
    }
    if *x == i.hi {
        return i.hi_closed;
    }
    strictly_between(&i.lo, x, &i.hi)
}

fn cross(x: &Slope, y: &Slope) -> BigInt {
    let ((px, qx), (py, qy)) = (x.vector(), y.vector());
    px * qy - py * qx
}

/// Primitive vectors form an integral basis of `H1(T^2)`.
pub fn is_farey_neighbor(x: &Slope, y: &Slope) -> bool {
    cross(x, y).abs().is_one()
}

/// Farey sum of neighbors, formed on representatives with `q >= 0`
/// (`(1, 0)` for `inf`).
pub fn mediant(x: &Slope, y: &Slope) -> Result<Slope, MathError> {
    if !is_farey_neighbor(x, y) {
        return Err(MathError::NotFareyNeighbors(x.to_string(), y.to_string()));
    }
    let ((px, qx), (py, qy)) = (x.vector(), y.vector());
    Slope::new(px + py, qx + qy)
}

/// Farey neighbors of `x` with denominator at most `cap`.
///
/// For `x = inf` the neighbors are the integers; those in `[-cap, cap]` are
/// returned.
pub fn farey_neighbors(x: &Slope, cap: u64) -> Vec<Slope> {
    if x.is_meridian() {
        let c = cap as i64;
        return (-c..=c).map(Slope::integer).collect();
    }
    let (p, q) = x.vector();
    let mut out = Vec::new();
    for d in 0..=cap {
        let d = BigInt::from(d);
        for e in [BigInt::one(), -BigInt::one()] {
            // p*d - n*q = e
            let (n, r) = (&p * &d - &e).div_rem(&q);
            if r.is_zero() && !(d.is_zero() && n.is_zero()) {
                let y = Slope::new(n, d.clone()).expect("nonzero vector");
                if !out.contains(&y) {
                    out.push(y);
                }
            }
        }
    }
    out.sort_by(
        |a: &Slope, b: &Slope| match (a.is_meridian(), b.is_meridian()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => a.compare(b).expect("finite"),
        },
    );
    out
}

/// `[[a, b], [c, d]]` in `SL(2, Z)` acting on `(p, q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SlopeMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SlopeMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, MathError> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.determinant();
        if !det.is_one() {
            return Err(MathError::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `[[1, t], [0, 1]]`: fixes the meridian, moves every longitude by `t`.
    pub fn shear(t: impl Into<BigInt>) -> Self {
        Self {
            a: BigInt::one(),
            b: t.into(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// `self * rhs`, so `rhs` acts first.
    pub fn compose(&self, rhs: &SlopeMatrix) -> Self {
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn apply_vector(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        (&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    pub fn apply(&self, x: &Slope) -> Slope {
        apply_matrix(self, x)
    }
}

pub fn apply_matrix(m: &SlopeMatrix, x: &Slope) -> Slope {
    let (p, q) = x.vector();
    let (p2, q2) = m.apply_vector(&p, &q);
    Slope::new(p2, q2).expect("unimodular image of a nonzero vector")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn interval_membership() {
        let plain = SlopeInterval::open(s("-3"), s("-2")).unwrap();
        assert!(plain.contains(&s("-5/2")));
        assert!(!plain.contains(&s("inf")));
        let wrap = SlopeInterval::open(s("2"), s("-1")).unwrap();
        assert!(wrap.contains(&s("inf")));
        assert!(!wrap.contains(&s("0")));
        assert!(wrap.contains(&s("7/2")) && wrap.contains(&s("-4")));
        let from_inf = SlopeInterval::new(s("inf"), s("-1"), true, false).unwrap();
        assert!(from_inf.contains(&s("inf")) && from_inf.contains(&s("-2")));
        assert!(!from_inf.contains(&s("-1")) && !from_inf.contains(&s("0")));
        assert!(SlopeInterval::open(s("1/2"), s("1/2")).is_err());
    }

    #[test]
    fn farey_adjacency() {
        assert!(is_farey_neighbor(&s("0/1"), &s("1/1")));
        assert!(is_farey_neighbor(&s("1/2"), &s("1/3")));
        assert!(!is_farey_neighbor(&s("1/2"), &s("1/4")));
        assert!(is_farey_neighbor(&s("inf"), &s("-7")));
        assert!(!is_farey_neighbor(&s("inf"), &s("1/2")));
    }

    #[test]
    fn mediants() {
        assert_eq!(mediant(&s("1/2"), &s("1/3")).unwrap(), s("2/5"));
        assert_eq!(mediant(&s("0/1"), &s("1/1")).unwrap(), s("1/2"));
        assert_eq!(mediant(&s("-3/1"), &s("-5/2")).unwrap(), s("-8/3"));
        assert_eq!(mediant(&s("inf"), &s("3")).unwrap(), s("4"));
        assert!(matches!(
            mediant(&s("1/2"), &s("1/4")),
            Err(MathError::NotFareyNeighbors(_, _))
        ));
    }

    #[test]
    fn matrix_action() {
        let x = s("-7/3");
        assert_eq!(SlopeMatrix::identity().apply(&x), x);
        assert_eq!(SlopeMatrix::shear(2).apply(&x), s("-1/3"));
        assert_eq!(SlopeMatrix::shear(5).apply(&s("inf")), s("inf"));
        let m = SlopeMatrix::new(2, 1, 1, 1).unwrap();
        assert_eq!(m.apply(&s("inf")), s("2"));
        assert_eq!(m.apply(&m.inverse().apply(&x)), x);
        assert!(SlopeMatrix::new(2, 0, 0, 1).is_err());
        assert_eq!(m.compose(&m.inverse()), SlopeMatrix::identity());
    }

    #[test]
    fn shears() {
        assert_eq!(shear(&s("-7/3"), &BigInt::from(2)), s("-1/3"));
        assert_eq!(shear(&s("inf"), &BigInt::from(-9)), s("inf"));
    }

    #[test]
    fn neighbor_enumeration() {
        let n = farey_neighbors(&s("1/2"), 5);
        let expected: Vec<Slope> = ["0/1", "1/3", "2/5", "3/5", "2/3", "1/1"]
            .iter()
            .map(|t| s(t))
            .collect();
        assert_eq!(n, expected);
        assert!(farey_neighbors(&s("3"), 1).contains(&s("inf")));
        assert_eq!(farey_neighbors(&s("inf"), 2).len(), 5);
    }

    #[test]
    fn text_round_trip() {
        for t in ["inf", "-2/1", "3/7", "0/1"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("4/0"), s("inf"));
        assert_eq!(s("-4"), s("-4/1"));
        assert!("1/x".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
    }
}
