//! Braid words, closure components and the reduced Burau representation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::BraidError;
use crate::exact_math::{LaurentMatrix, LaurentPoly};

/// Word in the Artin generators `s1 .. s(strands-1)`, read left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i64)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i64)>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for &(index, exp) in &letters {
            if index == 0 || index >= strands {
                return Err(BraidError::GeneratorOutOfRange { index, strands });
            }
            if exp == 0 {
                return Err(BraidError::Parse(format!("zero exponent on s{index}")));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses `s1 s2^-1 ( s1 s2 )^-6`. Without `strands`, the braid uses one
    /// more strand than its largest generator, and at least two.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let letters = Parser::new(text).word()?;
        let needed = letters
            .iter()
            .map(|&(i, _)| i + 1)
            .max()
            .unwrap_or(2)
            .max(2);
        Self::new(strands.unwrap_or(needed), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::Parse(
                "concatenating braids on different strand counts".into(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect();
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, n: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * n as usize);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Letters with every exponent expanded to `+-1`.
    pub fn unit_letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n((i, e.signum()), e.unsigned_abs() as usize))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    format!("s{i}")
                } else {
                    format!("s{i}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn err(&self, msg: &str) -> BraidError {
        BraidError::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn number(&mut self) -> Option<&'a str> {
        let start = self.pos;
        if matches!(self.peek(), Some('+' | '-')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = &self.src[start..self.pos];
        if s.trim_start_matches(['+', '-']).is_empty() {
            self.pos = start;
            return None;
        }
        Some(s)
    }

    fn exponent(&mut self) -> Result<i64, BraidError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let digits = self
            .number()
            .ok_or_else(|| self.err("expected an exponent"))?;
        let e: i64 = digits
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        if e == 0 {
            return Err(self.err("zero exponent"));
        }
        Ok(e)
    }

    fn word(&mut self) -> Result<Vec<(usize, i64)>, BraidError> {
        let out = self.sequence()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.err("unexpected input"));
        }
        Ok(out)
    }

    fn sequence(&mut self) -> Result<Vec<(usize, i64)>, BraidError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(out),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence()?;
                    self.skip_ws();
                    if self.peek() != Some(')') {
                        return Err(self.err("unbalanced parenthesis"));
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    let unit: Vec<(usize, i64)> = if e > 0 {
                        inner
                    } else {
                        inner.iter().rev().map(|&(i, x)| (i, -x)).collect()
                    };
                    for _ in 0..e.unsigned_abs() {
                        out.extend_from_slice(&unit);
                    }
                }
                Some('s' | 'S') => {
                    self.pos += 1;
                    let digits = self
                        .number()
                        .ok_or_else(|| self.err("expected a generator index"))?;
                    let index: usize = digits
                        .parse()
                        .map_err(|_| self.err("bad generator index"))?;
                    let e = self.exponent()?;
                    out.push((index, e));
                }
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
    }
}

/// Permutation of `0..len`, `image[i]` the image of `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Self {
            image: (0..len).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { image })
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        Permutation {
            image: first.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
                len += 1;
            }
            out.push(len);
        }
        out
    }
}

pub fn braid_permutation(w: &BraidWord) -> Permutation {
    let mut perm = Permutation::identity(w.strands);
    for &(i, e) in w.letters.iter().rev() {
        if e % 2 != 0 {
            perm.image.iter_mut().for_each(|x| {
                if *x == i - 1 {
                    *x = i;
                } else if *x == i {
                    *x = i - 1;
                }
            });
        }
    }
    perm
}

pub fn closure_components(w: &BraidWord) -> usize {
    braid_permutation(w).cycle_lengths().len()
}

fn generator_matrix(strands: usize, index: usize, sign: i64) -> LaurentMatrix {
    let n = strands - 1;
    let i0 = index - 1;
    let mut m = LaurentMatrix::identity(n);
    let t = |c: i64, e: i64| LaurentPoly::monomial(c, e);
    if sign > 0 {
        if i0 > 0 {
            m.set(i0, i0 - 1, t(1, 1));
        }
        m.set(i0, i0, t(-1, 1));
        if i0 + 1 < n {
            m.set(i0, i0 + 1, t(1, 0));
        }
    } else {
        if i0 > 0 {
            m.set(i0, i0 - 1, t(1, 0));
        }
        m.set(i0, i0, t(-1, -1));
        if i0 + 1 < n {
            m.set(i0, i0 + 1, t(1, -1));
        }
    }
    m
}

/// Reduced Burau matrix, `(strands - 1)` square. `s1` on two strands is `(-t)`.
pub fn reduced_burau(w: &BraidWord) -> LaurentMatrix {
    w.unit_letters()
        .fold(LaurentMatrix::identity(w.strands - 1), |acc, (i, e)| {
            acc.mul(&generator_matrix(w.strands, i, e))
        })
}

/// `det(B - I) / (1 + t + ... + t^(m-1))`, the Alexander polynomial of the
/// closure up to units.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPoly, BraidError> {
    let b = reduced_burau(w);
    let det = b.sub(&LaurentMatrix::identity(b.size())).determinant()?;
    Ok(det.div_exact(&LaurentPoly::geometric(w.strands))?)
}

/// `|Delta(-1)|` of the closed braid.
pub fn link_determinant(w: &BraidWord) -> Result<BigInt, BraidError> {
    Ok(alexander_polynomial(w)?.eval(-1)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family_word(n: u32) -> BraidWord {
        BraidWord::parse(&format!("( s1 s2^-1 s3 ( s1 s2 )^-6 )^{n}"), Some(4)).unwrap()
    }

    #[test]
    fn parsing() {
        let w = BraidWord::parse("s1 s2^-1 (s1 s2)^-2", None).unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(
            w.letters(),
            &[(1, 1), (2, -1), (2, -1), (1, -1), (2, -1), (1, -1)]
        );
        assert!(BraidWord::parse("s1^0", None).is_err());
        assert!(BraidWord::parse("( s1", None).is_err());
        assert!(BraidWord::parse("s1 x", None).is_err());
        assert!(matches!(
            BraidWord::parse("s3", Some(3)),
            Err(BraidError::GeneratorOutOfRange {
                index: 3,
                strands: 3
            })
        ));
        assert_eq!(BraidWord::parse("", Some(4)).unwrap().strands(), 4);
        assert_eq!(family_word(1).letters().len(), 15);
    }

    #[test]
    fn components() {
        assert_eq!(closure_components(&family_word(1)), 1);
        assert_eq!(closure_components(&family_word(2)), 2);
        assert_eq!(closure_components(&family_word(4)), 4);
        assert_eq!(
            closure_components(&BraidWord::parse("", Some(4)).unwrap()),
            4
        );
        assert_eq!(braid_permutation(&family_word(1)).cycle_lengths(), vec![4]);
        assert_eq!(
            braid_permutation(&family_word(2)).cycle_lengths(),
            vec![2, 2]
        );
    }

    #[test]
    fn burau_basics() {
        let w = BraidWord::parse("s1", Some(2)).unwrap();
        assert_eq!(reduced_burau(&w).get(0, 0), &LaurentPoly::monomial(-1, 1));
        let w = BraidWord::parse("s1 s2^-1 s3^2", Some(4)).unwrap();
        let prod = reduced_burau(&w).mul(&reduced_burau(&w.inverse()));
        assert_eq!(prod, LaurentMatrix::identity(3));
    }

    #[test]
    fn determinants() {
        let trefoil = BraidWord::parse("s1^3", Some(2)).unwrap();
        assert_eq!(
            alexander_polynomial(&trefoil).unwrap(),
            LaurentPoly::from_i64(0, &[-1, 1, -1])
        );
        assert_eq!(link_determinant(&trefoil).unwrap(), BigInt::from(3));
        let eight = BraidWord::parse("s1 s2^-1 s1 s2^-1", None).unwrap();
        assert_eq!(link_determinant(&eight).unwrap(), BigInt::from(5));
        let unlink = BraidWord::parse("", Some(3)).unwrap();
        assert_eq!(link_determinant(&unlink).unwrap(), BigInt::from(0));
    }
}
