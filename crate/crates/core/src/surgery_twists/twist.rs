use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::SurgeryError;
use crate::slope_calculus::{apply_matrix, Slope, SlopeMatrix};

/// Sign of a contact surgery. `Plus` is contact +1 surgery, which acts as a
/// negative Dehn twist on slopes; `Minus` is Legendrian surgery.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ContactSign {
    Plus,
    Minus,
}

impl ContactSign {
    pub fn as_i8(self) -> i8 {
        match self {
            ContactSign::Plus => 1,
            ContactSign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            ContactSign::Plus => ContactSign::Minus,
            ContactSign::Minus => ContactSign::Plus,
        }
    }

    pub fn from_i64(v: i64) -> Result<Self, SurgeryError> {
        match v {
            1 => Ok(ContactSign::Plus),
            -1 => Ok(ContactSign::Minus),
            _ => Err(SurgeryError::InvalidArgument(format!(
                "contact sign must be +1 or -1, got {v}"
            ))),
        }
    }
}

impl fmt::Display for ContactSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContactSign::Plus => "+1",
            ContactSign::Minus => "-1",
        })
    }
}

impl Serialize for ContactSign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

/// Slope action of contact surgery on a leaf of slope `along = r/s`.
///
/// Contact +1 is `[[1 + rs, -r^2], [s^2, 1 - rs]]` on `(p, q)`, contact -1
/// its inverse. Both are independent of the sign of the representative.
pub fn twist_matrix(along: &Slope, sign: ContactSign) -> SlopeMatrix {
    let (r, s) = along.vector();
    let rs = &r * &s;
    let (r2, s2) = (&r * &r, &s * &s);
    let one = BigInt::from(1);
    let m = match sign {
        ContactSign::Plus => SlopeMatrix::new(&one + &rs, -r2, s2, &one - &rs),
        ContactSign::Minus => SlopeMatrix::new(&one - &rs, r2, -s2, &one + &rs),
    };
    m.expect("twist matrices are unimodular")
}

pub fn twist_once(x: &Slope, along: &Slope, sign: ContactSign) -> Slope {
    apply_matrix(&twist_matrix(along, sign), x)
}

pub fn twist_n(x: &Slope, along: &Slope, sign: ContactSign, count: u64) -> Slope {
    let m = twist_matrix(along, sign);
    (0..count).fold(x.clone(), |acc, _| apply_matrix(&m, &acc))
}

/// Contact +1 then contact -1 surgery on the same leaf. Always returns `x`;
/// a mismatch is reported as an internal failure.
pub fn ding_geiges_cancel(x: &Slope, along: &Slope) -> Result<Slope, SurgeryError> {
    let there = twist_once(x, along, ContactSign::Plus);
    let back = twist_once(&there, along, ContactSign::Minus);
    if back != *x {
        return Err(SurgeryError::Internal(format!(
            "+1/-1 pair along {along} sent {x} to {back}"
        )));
    }
    Ok(back)
}
