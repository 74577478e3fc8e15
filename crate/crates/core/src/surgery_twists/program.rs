use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::twist::{twist_once, ContactSign};
use crate::error::SurgeryError;
use crate::slope_calculus::{strictly_between, Slope, SlopeInterval};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwistStep {
    pub along: Slope,
    pub contact_sign: ContactSign,
    pub count: u64,
}

impl TwistStep {
    pub fn new(along: Slope, contact_sign: ContactSign, count: u64) -> Result<Self, SurgeryError> {
        if count == 0 {
            return Err(SurgeryError::InvalidArgument(
                "a twist step needs count >= 1".into(),
            ));
        }
        Ok(Self {
            along,
            contact_sign,
            count,
        })
    }
}

/// The standard neighborhood the program lives in: boundary slope `a` with
/// `n < a < n + 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Outer {
    pub n: i64,
    pub a: Slope,
}

impl Outer {
    pub fn new(n: i64, a: Slope) -> Result<Self, SurgeryError> {
        let lo = Slope::integer(n);
        let hi = Slope::integer(n + 1);
        if !(lo.lt(&a) && a.lt(&hi)) {
            return Err(SurgeryError::Hypothesis(format!(
                "boundary slope {a} must lie strictly between {n} and {}",
                n + 1
            )));
        }
        Ok(Self { n, a })
    }
}

/// Ordered contact surgeries together with the slope trace they produce.
///
/// The trace has one entry per individual twist, starting at `initial`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwistProgram {
    pub initial: Slope,
    pub outer: Outer,
    pub steps: Vec<TwistStep>,
    pub trace: Vec<Slope>,
    pub verified: bool,
}

/// Slopes visited when the steps are applied to `start`, one per twist.
pub fn replay_steps(start: &Slope, steps: &[TwistStep]) -> Vec<Slope> {
    let mut trace = vec![start.clone()];
    let mut cur = start.clone();
    for step in steps {
        for _ in 0..step.count {
            cur = twist_once(&cur, &step.along, step.contact_sign);
            trace.push(cur.clone());
        }
    }
    trace
}

impl TwistProgram {
    /// Replays `steps` from `initial` and records whether the replay reaches
    /// the meridian.
    pub fn from_steps(initial: Slope, outer: Outer, steps: Vec<TwistStep>) -> Self {
        let trace = replay_steps(&initial, &steps);
        let verified = trace.last().is_some_and(Slope::is_meridian);
        Self {
            initial,
            outer,
            steps,
            trace,
            verified,
        }
    }

    pub fn replay(&self) -> Vec<Slope> {
        replay_steps(&self.initial, &self.steps)
    }

    /// Re-runs the program and checks the stored trace and the endpoint.
    pub fn verify(&self) -> bool {
        let trace = self.replay();
        trace == self.trace && trace.last().is_some_and(Slope::is_meridian)
    }

    pub fn total_twists(&self) -> u64 {
        self.steps.iter().map(|s| s.count).sum()
    }

    pub fn final_slope(&self) -> &Slope {
        self.trace.last().expect("trace is never empty")
    }

    /// `(current inner slope, a)` for each individual twist.
    pub fn inner_intervals(&self) -> Vec<SlopeInterval> {
        let mut out = Vec::new();
        let mut i = 0;
        for step in &self.steps {
            for _ in 0..step.count {
                if let Ok(iv) = SlopeInterval::open(self.trace[i].clone(), self.outer.a.clone()) {
                    out.push(iv);
                }
                i += 1;
            }
        }
        out
    }

    /// Every leaf lies strictly between the current inner slope and `a`,
    /// so all surgeries happen inside the neighborhood.
    pub fn steps_inside_outer(&self) -> bool {
        let mut i = 0;
        for step in &self.steps {
            for _ in 0..step.count {
                if !strictly_between(&self.trace[i], &step.along, &self.outer.a) {
                    return false;
                }
                i += 1;
            }
        }
        true
    }

    /// The same surgery read as Legendrian surgery: steps reversed with
    /// flipped signs, to be replayed from the meridian back to `initial`.
    pub fn legendrian_steps(&self) -> Vec<TwistStep> {
        self.steps
            .iter()
            .rev()
            .map(|s| TwistStep {
                along: s.along.clone(),
                contact_sign: s.contact_sign.flip(),
                count: s.count,
            })
            .collect()
    }

    /// Shears every slope in the program by `t`, moving it to the frame
    /// with integer part `n + t`.
    pub fn sheared(&self, t: i64) -> Self {
        let tb = BigInt::from(t);
        Self {
            initial: self.initial.shear(&tb),
            outer: Outer {
                n: self.outer.n + t,
                a: self.outer.a.shear(&tb),
            },
            steps: self
                .steps
                .iter()
                .map(|s| TwistStep {
                    along: s.along.shear(&tb),
                    ..s.clone()
                })
                .collect(),
            trace: self.trace.iter().map(|x| x.shear(&tb)).collect(),
            verified: self.verified,
        }
    }
}

fn push_merged(steps: &mut Vec<TwistStep>, along: Slope, count: u64) {
    match steps.last_mut() {
        Some(last) if last.along == along && last.contact_sign == ContactSign::Plus => {
            last.count += count
        }
        _ => steps.push(TwistStep {
            along,
            contact_sign: ContactSign::Plus,
            count,
        }),
    }
}

/// Contact +1 program taking `S_{s,a}` to `S_{inf,a}` for `s < n < a < n + 1`.
pub fn reduce_to_meridian(s: &Slope, n: i64, a: &Slope) -> Result<TwistProgram, SurgeryError> {
    let outer = Outer::new(n, a.clone())?;
    if !s.is_finite() || !s.lt(&Slope::integer(n)) {
        return Err(SurgeryError::Hypothesis(format!(
            "slope {s} must be finite and less than {n}"
        )));
    }

    // Work in the frame where n = -1.
    let shift = BigInt::from(-(n + 1));
    let mut cur = s.shear(&shift);
    let mut steps: Vec<TwistStep> = Vec::new();

    while !cur.is_meridian() {
        if cur.is_integer() {
            let along = cur.shear(&BigInt::one());
            let next = twist_once(&cur, &along, ContactSign::Plus);
            if !next.is_meridian() {
                return Err(SurgeryError::Internal(format!(
                    "twist along {along} sent {cur} to {next}"
                )));
            }
            push_merged(&mut steps, along, 1);
            cur = next;
            continue;
        }

        // cur lies in (c - 1, c) with c = -m; r_k = c - 1/(k+1).
        let c = cur.value().ceil();
        let f = crate::exact_math::Rational::integer(c.clone()) - cur.value().clone();
        let k: BigInt = f.recip().ceil() - 2;
        let v = |j: &BigInt| -> (BigInt, BigInt) { (&c * (j + 1) - 1, j + 1) };
        let (v0, v1) = (v(&k), v(&(&k + 1)));
        let (p, q) = cur.vector();
        // det[v0 v1] = -1
        let coef_a: BigInt = &v1.0 * &q - &p * &v1.1;
        let coef_b: BigInt = &p * &v0.1 - &v0.0 * &q;
        if coef_a.is_negative() || coef_b.is_negative() || k.is_negative() {
            return Err(SurgeryError::Internal(format!(
                "decomposition of {cur} at k = {k} gave ({coef_a}, {coef_b})"
            )));
        }
        let along = Slope::integer(c.clone());
        let count = u64::try_from(&k + 1u32)
            .map_err(|_| SurgeryError::Internal("twist count overflow".into()))?;
        let mut next = cur.clone();
        for _ in 0..count {
            next = twist_once(&next, &along, ContactSign::Plus);
        }
        let predicted = if coef_b.is_zero() {
            Slope::meridian()
        } else {
            Slope::new(&coef_b * (&c - 1) - &coef_a, coef_b.clone())?
        };
        if next != predicted {
            return Err(SurgeryError::Internal(format!(
                "{count} twists along {along} sent {cur} to {next}, expected {predicted}"
            )));
        }
        push_merged(&mut steps, along, count);
        cur = next;
    }

    let back = BigInt::from(n + 1);
    let steps = steps
        .into_iter()
        .map(|st| TwistStep {
            along: st.along.shear(&back),
            ..st
        })
        .collect();
    let program = TwistProgram::from_steps(s.clone(), outer, steps);
    if !program.verified || !program.steps_inside_outer() {
        return Err(SurgeryError::Internal(format!(
            "program for {s} failed its own replay"
        )));
    }
    Ok(program)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn alongs(p: &TwistProgram) -> Vec<(String, u64)> {
        p.steps
            .iter()
            .map(|st| (st.along.to_string(), st.count))
            .collect()
    }

    #[test]
    fn integer_slope() {
        let p = reduce_to_meridian(&s("-2"), -1, &s("-1/4")).unwrap();
        assert_eq!(alongs(&p), vec![("-1/1".to_string(), 1)]);
        assert_eq!(p.trace, vec![s("-2"), s("inf")]);
    }

    #[test]
    fn two_and_three_twists() {
        let p = reduce_to_meridian(&s("-5/2"), -1, &s("-1/4")).unwrap();
        assert_eq!(alongs(&p), vec![("-2/1".to_string(), 2)]);
        assert_eq!(p.trace, vec![s("-5/2"), s("-3"), s("inf")]);

        let p = reduce_to_meridian(&s("-7/3"), -1, &s("-1/4")).unwrap();
        assert_eq!(alongs(&p), vec![("-2/1".to_string(), 3)]);
        assert_eq!(p.trace, vec![s("-7/3"), s("-5/2"), s("-3"), s("inf")]);
        assert!(p.verify() && p.steps_inside_outer());
    }

    #[test]
    fn hypotheses() {
        assert!(matches!(
            reduce_to_meridian(&s("-1/2"), -1, &s("-1/4")),
            Err(SurgeryError::Hypothesis(_))
        ));
        assert!(matches!(
            reduce_to_meridian(&s("-3"), -1, &s("1/4")),
            Err(SurgeryError::Hypothesis(_))
        ));
        assert!(reduce_to_meridian(&s("-1"), -1, &s("-1/2")).is_err());
        assert!(reduce_to_meridian(&s("inf"), -1, &s("-1/2")).is_err());
    }

    #[test]
    fn other_frames() {
        let p = reduce_to_meridian(&s("13/7"), 2, &s("5/2")).unwrap();
        assert!(p.verify() && p.steps_inside_outer());
        assert_eq!(
            p.sheared(-3),
            reduce_to_meridian(&s("-8/7"), -1, &s("-1/2")).unwrap()
        );
    }

    #[test]
    fn legendrian_view_returns_to_start() {
        let p = reduce_to_meridian(&s("-17/5"), 0, &s("1/3")).unwrap();
        let back = replay_steps(&Slope::meridian(), &p.legendrian_steps());
        assert_eq!(back.last().unwrap(), &s("-17/5"));
        assert!(p
            .legendrian_steps()
            .iter()
            .all(|st| st.contact_sign == ContactSign::Minus));
    }

    #[test]
    fn json_shape() {
        let p = reduce_to_meridian(&s("-7/3"), -1, &s("-1/4")).unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"initial":"-7/3","outer":{"n":-1,"a":"-1/4"},"steps":[{"along":"-2/1","contact_sign":1,"count":3}],"trace":["-7/3","-5/2","-3/1","inf"],"verified":true}"#
        );
    }
}
