use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::homology::{open_book_homology, HomologyReport};
use super::surface::{builtin_surfaces, MarkedSurface};
use super::word::MonodromyWord;
use crate::citations;
use crate::error::OpenBookError;
use crate::exact_math::Rational;
use crate::slope_calculus::Slope;
use crate::surgery_twists::{
    classify_surgery_slope, realizable_sequence, Locality, TwistProgram, Verdict,
};

/// Parameters of the monodromy `delta1^k1 delta2^k2 (a b^-1 c d^-1)^n` on `T`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FamilyParams {
    pub n: i64,
    pub k1: i64,
    pub k2: i64,
}

impl FamilyParams {
    pub fn new(n: i64, k1: i64, k2: i64) -> Result<Self, OpenBookError> {
        if n < 1 {
            return Err(OpenBookError::Hypothesis(format!(
                "the family needs n >= 1, got {n}"
            )));
        }
        Ok(Self { n, k1, k2 })
    }
}

fn letters(parts: &[(&str, i64)]) -> Vec<(String, i64)> {
    parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(c, e)| (c.to_string(), *e))
        .collect()
}

fn repeat(unit: &[(&str, i64)], n: i64) -> Vec<(String, i64)> {
    let unit = letters(unit);
    (0..n).flat_map(|_| unit.clone()).collect()
}

pub fn family_open_book(p: &FamilyParams) -> Result<(MarkedSurface, MonodromyWord), OpenBookError> {
    let p = FamilyParams::new(p.n, p.k1, p.k2)?;
    let mut w = letters(&[("delta1", p.k1), ("delta2", p.k2)]);
    w.extend(repeat(&[("a", 1), ("b", -1), ("c", 1), ("d", -1)], p.n));
    Ok((builtin_surfaces().t, MonodromyWord::new(w)?))
}

/// Caps off `B1`, giving `delta^(k2 - n) (x^2 y^-1)^n` on `T-hat`.
pub fn cap_off_family(
    p: &FamilyParams,
    boundary: &str,
) -> Result<(MarkedSurface, MonodromyWord), OpenBookError> {
    let p = FamilyParams::new(p.n, p.k1, p.k2)?;
    if boundary != "B1" {
        return Err(OpenBookError::Unsupported(format!(
            "capping data is only available for boundary B1 of this family, not {boundary:?}"
        )));
    }
    let mut w = letters(&[("delta", p.k2 - p.n)]);
    w.extend(repeat(&[("x", 2), ("y", -1)], p.n));
    Ok((builtin_surfaces().t_hat, MonodromyWord::new(w)?))
}

/// FDTC per boundary: `[k1, k2]`, or `[k2 - n]` after capping `B1`.
pub fn family_fdtc(p: &FamilyParams, capped: bool) -> Vec<Rational> {
    if capped {
        vec![Rational::integer(p.k2 - p.n)]
    } else {
        vec![Rational::integer(p.k1), Rational::integer(p.k2)]
    }
}

pub fn family_homology(
    p: &FamilyParams,
    capped: bool,
    fillings: &BTreeMap<String, Slope>,
) -> Result<HomologyReport, OpenBookError> {
    let (s, w) = if capped {
        cap_off_family(p, "B1")?
    } else {
        family_open_book(p)?
    };
    open_book_homology(&s, &w, fillings)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum StatusKind {
    UniversallyTight,
    Overtwisted,
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ContactStatus {
    pub status: StatusKind,
    pub fdtc_per_boundary: Vec<Rational>,
    pub citations: Vec<String>,
}

/// Contact status of the family's open book.
///
/// The uncapped monodromy has one attracting fixed point per boundary
/// unless `fixed_points` says otherwise. For the capped book only the
/// overtwisted rule is applied unless a fixed-point count is supplied.
pub fn family_status(p: &FamilyParams, capped: bool, fixed_points: Option<u32>) -> ContactStatus {
    let fdtc = family_fdtc(p, capped);
    let threshold_met = |fp: u32| {
        fp > 0
            && fdtc
                .iter()
                .all(|c| c.clone() * Rational::integer(fp) >= Rational::integer(2))
    };
    let (status, cites) = if capped && fdtc.iter().any(|c| !c.numer().is_positive()) {
        (
            StatusKind::Overtwisted,
            vec![citations::HONDA_KAZEZ_MATIC, citations::CAPPING_AS_SURGERY],
        )
    } else {
        let fp = if capped {
            fixed_points
        } else {
            Some(fixed_points.unwrap_or(1))
        };
        match fp {
            Some(fp) if threshold_met(fp) => {
                (StatusKind::UniversallyTight, vec![citations::COLIN_HONDA])
            }
            _ => (StatusKind::Unknown, vec![citations::NO_CLAIM]),
        }
    };
    ContactStatus {
        status,
        fdtc_per_boundary: fdtc,
        citations: cites.into_iter().map(String::from).collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SurgeryStatus {
    Tight,
    Overtwisted,
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BindingEntry {
    pub slope: Slope,
    pub status: SurgeryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locality: Option<Locality>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TwistProgram>,
    pub citations: Vec<String>,
}

/// Surgery slopes on the binding component `B1` of the family, measured in
/// the frame where the neighborhood boundary slope `a` lies in `(0, 1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BindingReport {
    pub params: FamilyParams,
    pub a: Slope,
    pub entries: Vec<BindingEntry>,
    /// `0` is excluded while every negative slope is tight.
    pub non_closed: bool,
    /// Tight slopes exist on both sides of the excluded slope `0`.
    pub disconnected: bool,
}

fn check_binding_regime(p: &FamilyParams, a: &Slope) -> Result<(), OpenBookError> {
    if p.k1 < 2 || p.k2 < 2 || p.k2 > p.n {
        return Err(OpenBookError::Hypothesis(format!(
            "needs 2 <= k1 and 2 <= k2 <= n (overtwisted capping needs k2 <= n); got n = {}, k1 = {}, k2 = {}",
            p.n, p.k1, p.k2
        )));
    }
    if !(Slope::integer(0).lt(a) && a.lt(&Slope::integer(1))) {
        return Err(OpenBookError::Hypothesis(format!(
            "binding neighborhood slope {a} must lie in (0, 1)"
        )));
    }
    Ok(())
}

fn binding_entry(p: &FamilyParams, a: &Slope, s: &Slope) -> Result<BindingEntry, OpenBookError> {
    if s.is_finite() && s.numer().is_zero() {
        let capped = family_status(p, true, None);
        if capped.status != StatusKind::Overtwisted {
            return Err(OpenBookError::Hypothesis(
                "capped book is not known to be overtwisted".into(),
            ));
        }
        let mut cites = vec![citations::CAPPING_AS_SURGERY.to_string()];
        cites.extend(
            capped
                .citations
                .into_iter()
                .filter(|c| c != citations::CAPPING_AS_SURGERY),
        );
        return Ok(BindingEntry {
            slope: s.clone(),
            status: SurgeryStatus::Overtwisted,
            locality: None,
            witness: None,
            citations: cites,
        });
    }
    let v = classify_surgery_slope(s, 0, a)?;
    Ok(match v.verdict {
        Verdict::LegendrianRealizable { locality, witness } => BindingEntry {
            slope: s.clone(),
            status: SurgeryStatus::Tight,
            locality: Some(locality),
            witness: Some(witness),
            citations: v.citations,
        },
        _ => BindingEntry {
            slope: s.clone(),
            status: SurgeryStatus::Unknown,
            locality: None,
            witness: None,
            citations: vec![citations::NO_CLAIM.to_string()],
        },
    })
}

/// Tightness of admissible transverse surgeries on the binding `B1`.
///
/// Tight entries carry replay-verified twist programs; slope `0` is the
/// capped-off book.
pub fn binding_tight_slope_report(
    p: &FamilyParams,
    a: &Slope,
    probes: &[Slope],
) -> Result<BindingReport, OpenBookError> {
    let p = FamilyParams::new(p.n, p.k1, p.k2)?;
    check_binding_regime(&p, a)?;
    let entries = probes
        .iter()
        .map(|s| binding_entry(&p, a, s))
        .collect::<Result<Vec<_>, _>>()?;

    // Structural evidence independent of the probes: one negative slope,
    // slope 0 and the first realizable slope below a.
    let below = binding_entry(&p, a, &Slope::integer(-1))?;
    let zero = binding_entry(&p, a, &Slope::integer(0))?;
    let mut k = 2;
    let rho = loop {
        let (rho, _) = realizable_sequence(0, k)?;
        if rho.lt(a) {
            break rho;
        }
        k += 1;
    };
    let above = binding_entry(&p, a, &rho)?;
    let non_closed =
        below.status == SurgeryStatus::Tight && zero.status == SurgeryStatus::Overtwisted;
    let disconnected = non_closed && above.status == SurgeryStatus::Tight;

    Ok(BindingReport {
        params: p,
        a: a.clone(),
        entries,
        non_closed,
        disconnected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn words() {
        let (_, w) = family_open_book(&FamilyParams::new(1, 0, 0).unwrap()).unwrap();
        assert_eq!(w.to_string(), "a b^-1 c d^-1");
        let (_, w) = family_open_book(&FamilyParams::new(2, 3, 4).unwrap()).unwrap();
        assert_eq!(
            w.to_string(),
            "delta1^3 delta2^4 a b^-1 c d^-1 a b^-1 c d^-1"
        );
        assert_eq!(w.len(), 2 + 8);
        let (_, w) = cap_off_family(&FamilyParams::new(3, 2, 2).unwrap(), "B1").unwrap();
        assert_eq!(w.to_string(), "delta^-1 x^2 y^-1 x^2 y^-1 x^2 y^-1");
        let (_, w) = cap_off_family(&FamilyParams::new(1, 5, 1).unwrap(), "B1").unwrap();
        assert_eq!(w.to_string(), "x^2 y^-1");
        assert!(cap_off_family(&FamilyParams::new(1, 5, 1).unwrap(), "B2").is_err());
        assert!(FamilyParams::new(0, 1, 1).is_err());
    }

    #[test]
    fn fdtc_and_status() {
        let p = FamilyParams::new(3, 2, 2).unwrap();
        assert_eq!(
            family_fdtc(&p, false),
            vec![Rational::integer(2), Rational::integer(2)]
        );
        assert_eq!(family_fdtc(&p, true), vec![Rational::integer(-1)]);
        assert_eq!(
            family_fdtc(&FamilyParams::new(1, 7, 9).unwrap(), true),
            vec![Rational::integer(8)]
        );
        assert_eq!(
            family_status(&p, false, None).status,
            StatusKind::UniversallyTight
        );
        assert_eq!(
            family_status(&p, true, None).status,
            StatusKind::Overtwisted
        );
        let q = FamilyParams::new(3, 1, 2).unwrap();
        assert_eq!(family_status(&q, false, None).status, StatusKind::Unknown);
        assert_eq!(
            family_status(&p, false, Some(2)).status,
            StatusKind::UniversallyTight
        );
        assert_eq!(
            family_status(&q, false, Some(2)).status,
            StatusKind::UniversallyTight
        );
    }

    #[test]
    fn binding_report() {
        let p = FamilyParams::new(3, 2, 2).unwrap();
        let probes = [s("-5"), s("0"), s("1/4"), s("1/5"), s("2/9")];
        let r = binding_tight_slope_report(&p, &s("1/3"), &probes).unwrap();
        let st: Vec<SurgeryStatus> = r.entries.iter().map(|e| e.status).collect();
        use SurgeryStatus::*;
        assert_eq!(st, vec![Tight, Overtwisted, Tight, Unknown, Tight]);
        assert!(r.non_closed && r.disconnected);
        assert!(
            binding_tight_slope_report(&FamilyParams::new(3, 2, 4).unwrap(), &s("1/3"), &[])
                .is_err()
        );
        assert!(binding_tight_slope_report(&p, &s("4/3"), &[]).is_err());
        assert!(binding_tight_slope_report(&p, &s("1/3"), &[s("1/2")]).is_err());
    }
}
