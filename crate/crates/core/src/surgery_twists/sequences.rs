use num_integer::Roots;
use serde::Serialize;

use crate::error::SurgeryError;
use crate::exact_math::Rational;
use crate::slope_calculus::Slope;

fn offset(n: i64, num: i64, den: i64) -> Slope {
    Slope::from(Rational::integer(n) + Rational::new(num, den).expect("nonzero denominator"))
}

/// `rho_k(n) = n + (k - 1)/k^2` and its leaf slope `n + 1/k`. One contact +1
/// surgery on the leaf sends `rho_k(n)` to the meridian.
pub fn realizable_sequence(n: i64, k: i64) -> Result<(Slope, Slope), SurgeryError> {
    if k < 2 {
        return Err(SurgeryError::InvalidArgument(format!(
            "realizable sequence starts at k = 2, got {k}"
        )));
    }
    Ok((offset(n, k - 1, k * k), offset(n, 1, k)))
}

/// `n + 1 - 1/(k + 1)`, increasing to `n + 1`. Defined for `k >= 0`;
/// `k = 0` is the integer `n` itself.
pub fn ascending_excluded(n: i64, k: i64) -> Result<Slope, SurgeryError> {
    if k < 0 {
        return Err(SurgeryError::InvalidArgument(format!(
            "ascending sequence needs k >= 0, got {k}"
        )));
    }
    Ok(offset(n + 1, -1, k + 1))
}

/// `n + 1/(k + 1)`, decreasing to `n`. Defined for `k >= 1`.
pub fn descending_excluded(n: i64, k: i64) -> Result<Slope, SurgeryError> {
    if k < 1 {
        return Err(SurgeryError::InvalidArgument(format!(
            "descending sequence needs k >= 1, got {k}"
        )));
    }
    Ok(offset(n, 1, k + 1))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExcludedPair {
    pub ascending: Slope,
    pub descending: Slope,
    /// The descending value at `k = 3` is not excluded.
    pub descending_exception: bool,
}

pub fn excluded_sequences(n: i64, k: i64) -> Result<ExcludedPair, SurgeryError> {
    if k < 1 {
        return Err(SurgeryError::InvalidArgument(format!(
            "excluded sequences need k >= 1, got {k}"
        )));
    }
    Ok(ExcludedPair {
        ascending: ascending_excluded(n, k)?,
        descending: descending_excluded(n, k)?,
        descending_exception: k == 3,
    })
}

/// Integers with `k + 1 = B^2`, `-k = b*B + delta*A`, `0 < 2A <= B`,
/// `gcd(A, B) = 1`, `delta = +-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BergeGabaiWitness {
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub big_b: i64,
    pub b: i64,
    pub delta: i64,
}

impl BergeGabaiWitness {
    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.a, self.big_b, self.b, self.delta)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum ScreenVerdict {
    FailsScreen,
    PassesScreen {
        witnesses: Vec<BergeGabaiWitness>,
        /// The screen only checks the listed constraints; a pass outside the
        /// known exception may be ruled out by conditions not checked here.
        unstated_conditions: bool,
    },
}

impl ScreenVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, ScreenVerdict::PassesScreen { .. })
    }

    pub fn witnesses(&self) -> &[BergeGabaiWitness] {
        match self {
            ScreenVerdict::PassesScreen { witnesses, .. } => witnesses,
            ScreenVerdict::FailsScreen => &[],
        }
    }

    pub fn unstated_conditions(&self) -> bool {
        matches!(
            self,
            ScreenVerdict::PassesScreen {
                unstated_conditions: true,
                ..
            }
        )
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Arithmetic screen for the descending slope `-k/(k+1)` (in the frame
/// `n = -1`) to be an integral solid-torus surgery on a knot in the solid
/// torus.
pub fn berge_gabai_screen(k: i64) -> Result<ScreenVerdict, SurgeryError> {
    if k < 1 {
        return Err(SurgeryError::InvalidArgument(format!(
            "screen needs k >= 1, got {k}"
        )));
    }
    let big_b = (k + 1).sqrt();
    if big_b * big_b != k + 1 {
        return Ok(ScreenVerdict::FailsScreen);
    }
    let mut witnesses = Vec::new();
    for delta in [1, -1] {
        for a in 1..=big_b / 2 {
            if gcd(a, big_b) != 1 {
                continue;
            }
            let rest = -k - delta * a;
            if rest % big_b == 0 {
                witnesses.push(BergeGabaiWitness {
                    a,
                    big_b,
                    b: rest / big_b,
                    delta,
                });
            }
        }
    }
    if witnesses.is_empty() {
        return Ok(ScreenVerdict::FailsScreen);
    }
    Ok(ScreenVerdict::PassesScreen {
        witnesses,
        unstated_conditions: k != 3,
    })
}
