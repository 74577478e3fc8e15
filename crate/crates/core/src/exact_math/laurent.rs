use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;

/// Integer Laurent polynomial `sum c_i t^(low + i)`.
///
/// Leading and trailing coefficients are nonzero; the zero polynomial has no
/// coefficients and `low = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `1 + t + ... + t^(n-1)`
    pub fn geometric(n: usize) -> Self {
        Self::new(0, vec![BigInt::one(); n])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        Self::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.low + rhs.low, coeffs)
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, MathError> {
        if divisor.is_zero() {
            return Err(MathError::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Strip powers of t (units) and divide the remaining ordinary
        // polynomials from the top down.
        let d = &divisor.coeffs;
        let dl = d.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return Err(self.inexact(divisor));
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            let (c, r) = top.div_rem(dl);
            if !r.is_zero() {
                return Err(self.inexact(divisor));
            }
            if !c.is_zero() {
                for (j, dj) in d.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(self.inexact(divisor));
        }
        Ok(Self::new(self.low - divisor.low, q))
    }

    fn inexact(&self, divisor: &Self) -> MathError {
        MathError::InexactDivision(format!("({self}) / ({divisor})"))
    }

    /// Value at an integer point. Negative exponents need `x = +-1`.
    pub fn eval(&self, x: i64) -> Result<BigInt, MathError> {
        if self.low < 0 && x.abs() != 1 {
            return Err(MathError::Dimension(format!(
                "cannot evaluate a Laurent polynomial with negative exponents at {x}"
            )));
        }
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        // multiply by x^low; for x = +-1 this is a sign
        let scale = if self.low >= 0 {
            num_traits::pow(x, self.low as usize)
        } else if x.is_negative() && self.low % 2 != 0 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok(acc * scale)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    match e {
                        1 => write!(f, "t")?,
                        _ => write!(f, "t^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square matrix over `Z[t, t^-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        Self { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<LaurentPoly>) -> Result<Self, MathError> {
        if entries.len() != n * n {
            return Err(MathError::Shape {
                rows: n,
                cols: n,
                entries: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i * self.n + j] = p;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes");
        let n = self.n;
        let mut out = Self {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j).add(&a.mul(rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Self { n: self.n, entries }
    }

    /// Determinant by Bareiss elimination with exact Laurent division.
    pub fn determinant(&self) -> Result<LaurentPoly, MathError> {
        let n = self.n;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = v.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_examples() {
        let t2m1 = LaurentPoly::from_i64(0, &[-1, 0, 1]);
        let tm1 = LaurentPoly::from_i64(0, &[-1, 1]);
        assert_eq!(
            t2m1.div_exact(&tm1).unwrap(),
            LaurentPoly::from_i64(0, &[1, 1])
        );

        // (-t^3 - 1) / (t + 1) = -t^2 + t - 1
        let p = LaurentPoly::from_i64(0, &[-1, 0, 0, -1]);
        let q = LaurentPoly::from_i64(0, &[1, 1]);
        let quo = p.div_exact(&q).unwrap();
        assert_eq!(quo, LaurentPoly::from_i64(0, &[-1, 1, -1]));
        assert_eq!(quo.to_string(), "-t^2 + t - 1");

        assert_eq!(p.div_exact(&LaurentPoly::one()).unwrap(), p);
    }

    #[test]
    fn inexact_division_is_reported() {
        let p = LaurentPoly::from_i64(0, &[1, 0, 1]);
        let q = LaurentPoly::from_i64(0, &[1, 1]);
        assert!(matches!(
            p.div_exact(&q),
            Err(MathError::InexactDivision(_))
        ));
        let two = LaurentPoly::constant(2);
        assert!(LaurentPoly::constant(3).div_exact(&two).is_err());
    }

    #[test]
    fn negative_exponents() {
        // (t^-1 + 1) * t = 1 + t
        let p = LaurentPoly::from_i64(-1, &[1, 1]);
        assert_eq!(
            p.mul(&LaurentPoly::monomial(1, 1)),
            LaurentPoly::from_i64(0, &[1, 1])
        );
        assert_eq!(p.eval(-1).unwrap(), BigInt::zero());
        assert_eq!(
            LaurentPoly::from_i64(-3, &[2]).eval(-1).unwrap(),
            BigInt::from(-2)
        );
        assert!(p.eval(2).is_err());
        // (t^-2 - t^2) / (t^-1 - t) = t^-1 + t
        let a = LaurentPoly::from_i64(-2, &[1, 0, 0, 0, -1]);
        let b = LaurentPoly::from_i64(-1, &[1, 0, -1]);
        assert_eq!(
            a.div_exact(&b).unwrap(),
            LaurentPoly::from_i64(-1, &[1, 0, 1])
        );
    }

    #[test]
    fn trimming() {
        let p = LaurentPoly::from_i64(-2, &[0, 0, 3, 0]);
        assert_eq!((p.low(), p.high()), (0, 0));
        assert!(LaurentPoly::from_i64(5, &[0, 0]).is_zero());
    }

    #[test]
    fn determinant_2x2() {
        let t = LaurentPoly::monomial(1, 1);
        let m = LaurentMatrix::from_entries(
            2,
            vec![
                t.neg(),
                LaurentPoly::one(),
                LaurentPoly::zero(),
                LaurentPoly::one(),
            ],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), t.neg());
    }
}
