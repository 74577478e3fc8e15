use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::program::{reduce_to_meridian, Outer, TwistProgram, TwistStep};
use super::twist::ContactSign;
use crate::citations;
use crate::error::SurgeryError;
use crate::exact_math::Rational;
use crate::slope_calculus::{Slope, SlopeInterval};

/// Whether a realizing leaf sits inside the given neighborhood.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locality {
    Local,
    SemiLocal,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExcludedSequence {
    Ascending,
    Descending,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    LegendrianRealizable {
        locality: Locality,
        witness: TwistProgram,
    },
    NotLocallyRealizable {
        sequence: ExcludedSequence,
        k: i64,
        reason: String,
    },
    OvertwistedResult {
        reason: String,
    },
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SlopeVerdict {
    pub slope: Slope,
    pub verdict: Verdict,
    pub citations: Vec<String>,
}

impl SlopeVerdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self.verdict, Verdict::LegendrianRealizable { .. })
    }

    pub fn witness(&self) -> Option<&TwistProgram> {
        match &self.verdict {
            Verdict::LegendrianRealizable { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn locality(&self) -> Option<Locality> {
        match &self.verdict {
            Verdict::LegendrianRealizable { locality, .. } => Some(*locality),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self.verdict {
            Verdict::LegendrianRealizable { .. } => "LegendrianRealizable",
            Verdict::NotLocallyRealizable { .. } => "NotLocallyRealizable",
            Verdict::OvertwistedResult { .. } => "OvertwistedResult",
            Verdict::Unknown => "Unknown",
        }
    }
}

fn cite(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn realizable(
    slope: &Slope,
    witness: TwistProgram,
    extra: &[&str],
) -> Result<SlopeVerdict, SurgeryError> {
    if !witness.verify() {
        return Err(SurgeryError::Internal(format!(
            "witness for {slope} does not replay to the meridian"
        )));
    }
    let locality = if witness.steps_inside_outer() {
        Locality::Local
    } else {
        Locality::SemiLocal
    };
    let mut citations = cite(&[citations::TWIST_ACTION]);
    citations.extend(cite(extra));
    if locality == Locality::SemiLocal {
        citations.push(citations::SEMI_LOCAL.to_string());
    }
    Ok(SlopeVerdict {
        slope: slope.clone(),
        verdict: Verdict::LegendrianRealizable { locality, witness },
        citations,
    })
}

fn small(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

/// Which of the known slope families `s` belongs to, given `n < s < n + 1`.
/// `f = s - n = p/q`.
enum Family {
    Rho(i64),
    Ascending(i64),
    Descending(i64),
    None,
}

fn family_of(f: &Rational) -> Family {
    let (p, q) = (f.numer(), f.denom());
    if let Some(k) = small(p).map(|p| p + 1) {
        if k >= 2 && BigInt::from(k) * k == *q {
            return Family::Rho(k);
        }
    }
    if *q == p + 1u32 {
        if let Some(k) = small(p) {
            return Family::Ascending(k);
        }
    }
    if p.is_one() {
        if let Some(k) = small(q).map(|q| q - 1) {
            return Family::Descending(k);
        }
    }
    Family::None
}

/// Verdict for admissible transverse `s`-surgery on the core of a standard
/// neighborhood with boundary slope `a`, `n < a < n + 1`.
pub fn classify_surgery_slope(s: &Slope, n: i64, a: &Slope) -> Result<SlopeVerdict, SurgeryError> {
    let outer = Outer::new(n, a.clone())?;
    if s.is_meridian() {
        let witness = TwistProgram::from_steps(s.clone(), outer, Vec::new());
        return realizable(s, witness, &[]);
    }
    if !s.lt(a) {
        return Err(SurgeryError::Hypothesis(format!(
            "slope {s} is not admissible below {a}"
        )));
    }
    let nn = Slope::integer(n);
    if s.lt(&nn) {
        let witness = reduce_to_meridian(s, n, a)?;
        return realizable(
            s,
            witness,
            &[citations::LEGENDRIAN_REDUCTION, citations::DING_GEIGES],
        );
    }

    let f = s.value().clone() - Rational::integer(n);
    let family = if f.is_zero() {
        Family::Ascending(0)
    } else {
        family_of(&f)
    };
    match family {
        Family::Rho(k) => {
            let leaf = Slope::from(Rational::integer(n) + Rational::new(1, k)?);
            let step = TwistStep::new(leaf, ContactSign::Plus, 1)?;
            let witness = TwistProgram::from_steps(s.clone(), outer, vec![step]);
            let extra: &[&str] = if k == 2 {
                &[citations::SINGLE_LEAF, citations::DESCENDING_EXCEPTION]
            } else {
                &[citations::SINGLE_LEAF]
            };
            realizable(s, witness, extra)
        }
        Family::Ascending(k) => Ok(SlopeVerdict {
            slope: s.clone(),
            verdict: Verdict::NotLocallyRealizable {
                sequence: ExcludedSequence::Ascending,
                k,
                reason: "unique Stein filling of S^3".into(),
            },
            citations: cite(&[citations::GROMOV]),
        }),
        Family::Descending(k) => {
            debug_assert!(k != 3, "k = 3 is caught by the realizable family");
            Ok(SlopeVerdict {
                slope: s.clone(),
                verdict: Verdict::NotLocallyRealizable {
                    sequence: ExcludedSequence::Descending,
                    k,
                    reason: "solid-torus surgery classification".into(),
                },
                citations: cite(&[citations::LENS_FILLINGS, citations::BERGE_GABAI]),
            })
        }
        Family::None => Ok(SlopeVerdict {
            slope: s.clone(),
            verdict: Verdict::Unknown,
            citations: cite(&[citations::NO_CLAIM]),
        }),
    }
}

/// Legendrian surgery on `L` as a transverse surgery on its push-off, with
/// the contact framing of `L` as slope 0.
pub fn legendrian_as_transverse_slope() -> Slope {
    Slope::integer(-1)
}

/// The same slope measured against a framing in which `L` has
/// Thurston-Bennequin number `tb`.
pub fn legendrian_as_transverse_slope_tb(tb: i64) -> Slope {
    legendrian_as_transverse_slope().shear(&BigInt::from(tb))
}

/// `[-inf, tb_max)`: the tight slope set of a uniformly thick knot type in a
/// manifold where Legendrian surgery preserves tightness.
pub fn uniform_thick_tight_slopes(tb_max: i64) -> SlopeInterval {
    SlopeInterval::new(Slope::meridian(), Slope::integer(tb_max), true, false)
        .expect("inf differs from every integer")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn examples() {
        let v = classify_surgery_slope(&s("-3/2"), -1, &s("-1/4")).unwrap();
        assert!(v.is_realizable() && v.witness().unwrap().verify());
        let v = classify_surgery_slope(&s("-2/3"), -1, &s("-1/4")).unwrap();
        assert!(matches!(
            v.verdict,
            Verdict::NotLocallyRealizable {
                sequence: ExcludedSequence::Descending,
                k: 2,
                ..
            }
        ));
        let v = classify_surgery_slope(&s("-5/11"), -1, &s("-1/4")).unwrap();
        assert_eq!(v.verdict, Verdict::Unknown);
        assert!(classify_surgery_slope(&s("0"), -1, &s("-1/4")).is_err());
        assert!(classify_surgery_slope(&s("-1/4"), -1, &s("-1/4")).is_err());
    }

    #[test]
    fn realizable_sequence_members() {
        let v = classify_surgery_slope(&s("2/9"), 0, &s("1/2")).unwrap();
        assert_eq!(v.locality(), Some(Locality::Local));
        let v = classify_surgery_slope(&s("1/4"), 0, &s("1/3")).unwrap();
        assert_eq!(v.locality(), Some(Locality::SemiLocal));
        let v = classify_surgery_slope(&s("1/4"), 0, &s("2/3")).unwrap();
        assert_eq!(v.locality(), Some(Locality::Local));
    }

    #[test]
    fn integer_and_meridian() {
        let v = classify_surgery_slope(&s("3"), 3, &s("7/2")).unwrap();
        assert!(matches!(
            v.verdict,
            Verdict::NotLocallyRealizable {
                sequence: ExcludedSequence::Ascending,
                k: 0,
                ..
            }
        ));
        let v = classify_surgery_slope(&s("inf"), 0, &s("1/2")).unwrap();
        assert!(v.is_realizable());
        assert_eq!(v.witness().unwrap().total_twists(), 0);
    }

    #[test]
    fn legendrian_slopes() {
        assert_eq!(legendrian_as_transverse_slope(), s("-1"));
        assert_eq!(legendrian_as_transverse_slope_tb(-3), s("-4"));
        let i = uniform_thick_tight_slopes(-1);
        assert!(i.contains(&s("-2")) && i.contains(&s("inf")) && !i.contains(&s("-1")));
    }
}
