use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal `d_1, ..., d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Structure of the cokernel `Z^rows / im(A)`.
    pub fn cokernel(&self) -> Cokernel {
        let diag = self.diagonal();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        Cokernel {
            torsion: diag
                .into_iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .collect(),
            free_rank: self.d.rows() - nonzero,
        }
    }
}

/// A finitely generated abelian group `Z^free_rank + sum Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl Cokernel {
    /// Group order, or zero when the group is infinite.
    pub fn order(&self) -> BigInt {
        if self.free_rank > 0 {
            return BigInt::zero();
        }
        self.torsion.iter().product()
    }

    /// Invariant factors with one `0` per free summand, the usual compact
    /// notation (`[0, 0, 0]` is `Z^3`, `[5, 15]` is `Z/5 + Z/15`).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut out = self.torsion.clone();
        out.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank));
        out
    }
}

fn min_abs_position(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Smith normal form by elementary row and column operations.
///
/// Pivots are chosen with minimal absolute value, which keeps intermediate
/// entries close to the size of the input.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    'diagonal: for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_abs_position(&d, t) else {
                break 'diagonal;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = d.get(i, t) / &pivot;
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &-&q);
                    u.add_row_multiple(i, t, &-&q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = d.get(t, j) / &pivot;
                if !q.is_zero() {
                    d.add_col_multiple(j, t, &-&q);
                    v.add_col_multiple(j, t, &-&q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }

            // Divisibility: fold an offending row into the pivot row and retry.
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_i64(s: &SmithDecomposition) -> Vec<i64> {
        s.diagonal()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    fn check(a: &IntMatrix, s: &SmithDecomposition) {
        let prod = s.u.try_mul(a).unwrap().try_mul(&s.v).unwrap();
        assert_eq!(prod, s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "{diag:?} not a divisor chain");
            } else {
                assert!(w[1].is_zero());
            }
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn diagonal_two_three() {
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(diag_i64(&s), vec![1, 6]);
    }

    #[test]
    fn zero_and_scalar() {
        let z = IntMatrix::from_rows(&[[0]]);
        assert_eq!(diag_i64(&smith_normal_form(&z)), vec![0]);
        for n in [-7, 0, 1, 12] {
            let a = IntMatrix::from_rows(&[[n]]);
            let s = smith_normal_form(&a);
            check(&a, &s);
            assert_eq!(diag_i64(&s), vec![n.abs()]);
        }
    }

    #[test]
    fn rectangular_with_free_part() {
        // Z^3 / <(2,4,4), (-6,6,12)>
        let a = IntMatrix::from_rows(&[[2, -6], [4, 6], [4, 12]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(diag_i64(&s), vec![2, 6]);
        let c = s.cokernel();
        assert_eq!(c.free_rank, 1);
        assert_eq!(c.order(), BigInt::zero());
    }

    #[test]
    fn cokernel_of_unimodular_is_trivial() {
        let a = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        let c = smith_normal_form(&a).cokernel();
        assert!(c.torsion.is_empty());
        assert_eq!(c.order(), BigInt::one());
    }
}
