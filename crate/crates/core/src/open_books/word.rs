use std::fmt;

use num_bigint::BigInt;

use super::surface::MarkedSurface;
use crate::error::OpenBookError;
use crate::exact_math::IntMatrix;

/// Product of Dehn twists `c1^e1 c2^e2 ...`; the rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MonodromyWord {
    letters: Vec<(String, i64)>,
}

impl MonodromyWord {
    pub fn new(letters: Vec<(String, i64)>) -> Result<Self, OpenBookError> {
        if let Some((c, _)) = letters.iter().find(|(_, e)| *e == 0) {
            return Err(OpenBookError::WordParse(format!("zero exponent on {c:?}")));
        }
        Ok(Self { letters })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses whitespace-separated `name` or `name^k` tokens and checks
    /// every name against the surface.
    pub fn parse(text: &str, surface: &MarkedSurface) -> Result<Self, OpenBookError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let e: i64 = e.parse().map_err(|_| {
                        OpenBookError::WordParse(format!("bad exponent in {token:?}"))
                    })?;
                    (name, e)
                }
                None => (token, 1),
            };
            if name.is_empty() {
                return Err(OpenBookError::WordParse(format!(
                    "missing curve name in {token:?}"
                )));
            }
            if exp == 0 {
                return Err(OpenBookError::WordParse(format!(
                    "zero exponent in {token:?}"
                )));
            }
            if !surface.has_curve(name) {
                return Err(OpenBookError::UnknownCurve(name.to_string()));
            }
            letters.push((name.to_string(), exp));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed on the right by `other`, so `other` acts first.
    pub fn then(&self, other: &MonodromyWord) -> MonodromyWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        MonodromyWord { letters }
    }

    pub fn pow(&self, n: u32) -> MonodromyWord {
        (0..n).fold(MonodromyWord::empty(), |acc, _| acc.then(self))
    }

    pub fn inverse(&self) -> MonodromyWord {
        MonodromyWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(c, e)| (c.clone(), -e))
                .collect(),
        }
    }
}

impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(c, e)| {
                if *e == 1 {
                    c.clone()
                } else {
                    format!("{c}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `x -> x + exponent * (x . c) c` on `H1(S)`.
pub fn transvection_matrix(
    surface: &MarkedSurface,
    curve: &str,
    exponent: i64,
) -> Result<IntMatrix, OpenBookError> {
    let c = surface.curve_class(curve)?;
    // x . c = x^T (J c)
    let jc = surface.pairing().apply(&c);
    let r = surface.h1_rank();
    let mut m = IntMatrix::identity(r);
    let e = BigInt::from(exponent);
    for (i, ci) in c.iter().enumerate() {
        for (j, jcj) in jc.iter().enumerate() {
            let v = m.get(i, j) + &e * ci * jcj;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

pub fn word_action(
    surface: &MarkedSurface,
    word: &MonodromyWord,
) -> Result<IntMatrix, OpenBookError> {
    let mut acc = IntMatrix::identity(surface.h1_rank());
    for (curve, e) in word.letters() {
        acc = acc.try_mul(&transvection_matrix(surface, curve, *e)?)?;
    }
    Ok(acc)
}

/// Homology correction picked up by an arc as the word acts on it, one
/// twist at a time from the right.
pub fn arc_correction(
    surface: &MarkedSurface,
    arc: &str,
    word: &MonodromyWord,
) -> Result<Vec<BigInt>, OpenBookError> {
    let mut u = surface.arc_covector(arc)?;
    let r = surface.h1_rank();
    let mut total = vec![BigInt::from(0); r];
    let j = surface.pairing();
    for (curve, e) in word.letters().iter().rev() {
        let c = surface.curve_class(curve)?;
        // row vector c^T J
        let c_row: Vec<BigInt> = (0..r)
            .map(|k| (0..r).map(|i| &c[i] * j.get(i, k)).sum())
            .collect();
        let eps = BigInt::from(e.signum());
        for _ in 0..e.unsigned_abs() {
            let uc: BigInt = u.iter().zip(&c).map(|(a, b)| a * b).sum();
            for k in 0..r {
                total[k] -= &eps * &uc * &c[k];
                u[k] += &eps * &uc * &c_row[k];
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::open_books::builtin_surfaces;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn transvection_along_a() {
        let t = builtin_surfaces().t;
        let m = transvection_matrix(&t, "a", 1).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, -1, 0], [0, 1, 0], [0, 0, 1]]));
        for radical in ["d", "delta1", "delta2"] {
            assert_eq!(
                transvection_matrix(&t, radical, 5).unwrap(),
                IntMatrix::identity(3)
            );
        }
    }

    #[test]
    fn ab_to_the_sixth_is_trivial() {
        let t = builtin_surfaces().t;
        let ab = word_action(&t, &MonodromyWord::parse("a b", &t).unwrap()).unwrap();
        assert_eq!(ab.pow(6), IntMatrix::identity(3));
        assert_ne!(ab.pow(3), IntMatrix::identity(3));
    }

    #[test]
    fn words() {
        let t = builtin_surfaces().t;
        assert_eq!(
            word_action(&t, &MonodromyWord::empty()).unwrap(),
            IntMatrix::identity(3)
        );
        let psi = MonodromyWord::parse("a b^-1 c d^-1", &t).unwrap();
        let m = word_action(&t, &psi).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(1));
        let back = word_action(&t, &psi.then(&psi.inverse())).unwrap();
        assert_eq!(back, IntMatrix::identity(3));
        assert!(matches!(
            MonodromyWord::parse("a q", &t),
            Err(OpenBookError::UnknownCurve(_))
        ));
        assert!(MonodromyWord::parse("a^0", &t).is_err());
        assert!(MonodromyWord::parse("a^x", &t).is_err());
        assert_eq!(psi.to_string(), "a b^-1 c d^-1");
    }

    #[test]
    fn arc_corrections() {
        let b = builtin_surfaces();
        let w = MonodromyWord::parse("gamma^7", &b.annulus).unwrap();
        assert_eq!(arc_correction(&b.annulus, "tau", &w).unwrap(), ints(&[-7]));
        let w = MonodromyWord::parse("delta1^3 delta2^4", &b.t).unwrap();
        assert_eq!(arc_correction(&b.t, "tau", &w).unwrap(), ints(&[-7, 0, -7]));
        let w = MonodromyWord::parse("a^2 b^-1", &b.t).unwrap();
        assert_eq!(arc_correction(&b.t, "tau", &w).unwrap(), ints(&[0, 0, 0]));
    }
}
