use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;
use twistcalc::braids::{
    alexander_polynomial, braid_permutation, closure_components, link_determinant,
};
use twistcalc::citations;
use twistcalc::json::JsonInt;
use twistcalc::open_books::{
    self as ob, binding_tight_slope_report, builtin_surface_json, open_book_homology,
    HomologyReport, MarkedSurface, SurgeryStatus,
};
use twistcalc::surgery_twists::{
    classify_surgery_slope, reduce_to_meridian, twist_matrix, twist_n, Verdict,
};
use twistcalc::{BraidWord, ContactSign, FamilyParams, MonodromyWord, Rational, Slope};

use crate::error::CliError;
use crate::{BraidArgs, FamilyArgs, ReduceArgs, TwistArgs};

pub struct Outcome {
    pub payload: Value,
    pub citations: Vec<String>,
    pub text: String,
}

impl Outcome {
    fn new(
        payload: impl Serialize,
        citations: Vec<String>,
        text: String,
    ) -> Result<Self, CliError> {
        Ok(Self {
            payload: serde_json::to_value(payload)?,
            citations,
            text,
        })
    }
}

fn slope(text: &str) -> Result<Slope, CliError> {
    text.trim()
        .parse::<Slope>()
        .map_err(|e| CliError::parse(e.to_string()))
}

fn sign(text: &str) -> Result<ContactSign, CliError> {
    match text.trim() {
        "+1" | "1" | "+" => Ok(ContactSign::Plus),
        "-1" | "-" => Ok(ContactSign::Minus),
        other => Err(CliError::parse(format!(
            "contact sign must be +1 or -1, got {other:?}"
        ))),
    }
}

fn cite(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn params(a: &FamilyArgs) -> Result<FamilyParams, CliError> {
    Ok(FamilyParams::new(a.n, a.k1, a.k2)?)
}

/// `NAME=p/q`, or a bare slope meaning `default_boundary`.
fn fillings(
    specs: &[String],
    default_boundary: Option<&str>,
) -> Result<BTreeMap<String, Slope>, CliError> {
    let mut out = BTreeMap::new();
    for spec in specs {
        let (name, value) = match (spec.split_once('='), default_boundary) {
            (Some((name, value)), _) => (name.trim().to_string(), value),
            (None, Some(b)) => (b.to_string(), spec.as_str()),
            (None, None) => {
                return Err(CliError::parse(format!(
                    "filling {spec:?} needs the form NAME=p/q"
                )))
            }
        };
        if out.insert(name.clone(), slope(value)?).is_some() {
            return Err(CliError::parse(format!("boundary {name} filled twice")));
        }
    }
    Ok(out)
}

fn group_text(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    factors
        .iter()
        .map(|f| {
            if *f == BigInt::from(0) {
                "Z".to_string()
            } else {
                format!("Z/{f}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn homology_text(h: &HomologyReport) -> String {
    let factors: Vec<String> = h
        .invariant_factors
        .iter()
        .map(ToString::to_string)
        .collect();
    format!(
        "H1 = {}\ninvariant factors: [{}]\norder: {}",
        group_text(&h.invariant_factors),
        factors.join(", "),
        h.order
    )
}

#[derive(Serialize)]
struct TwistPayload<'a> {
    on: &'a Slope,
    along: &'a Slope,
    sign: ContactSign,
    count: u64,
    result: Slope,
    matrix: [[JsonInt<'a>; 2]; 2],
}

pub fn twist(a: &TwistArgs) -> Result<Outcome, CliError> {
    let on = slope(&a.on)?;
    let along = slope(&a.along)?;
    let sg = sign(&a.sign)?;
    let result = twist_n(&on, &along, sg, a.count);
    let rows = twist_matrix(&along, sg).pow(a.count).rows();
    let text = format!(
        "{result}\nmatrix [[{}, {}], [{}, {}]]",
        rows[0][0], rows[0][1], rows[1][0], rows[1][1]
    );
    let payload = TwistPayload {
        on: &on,
        along: &along,
        sign: sg,
        count: a.count,
        result,
        matrix: [
            [JsonInt(&rows[0][0]), JsonInt(&rows[0][1])],
            [JsonInt(&rows[1][0]), JsonInt(&rows[1][1])],
        ],
    };
    Outcome::new(payload, cite(&[citations::TWIST_ACTION]), text)
}

pub fn reduce(a: &ReduceArgs) -> Result<Outcome, CliError> {
    let s = slope(&a.slope)?;
    let outer = slope(&a.a)?;
    let program = reduce_to_meridian(&s, a.n, &outer)?;
    let mut lines: Vec<String> = program
        .steps
        .iter()
        .map(|st| {
            format!(
                "contact {} surgery x{} along {}",
                st.contact_sign, st.count, st.along
            )
        })
        .collect();
    let trace: Vec<String> = program.trace.iter().map(ToString::to_string).collect();
    lines.push(format!("trace: {}", trace.join(" -> ")));
    lines.push(format!("verified: {}", program.verified));
    Outcome::new(
        &program,
        cite(&[citations::LEGENDRIAN_REDUCTION, citations::TWIST_ACTION]),
        lines.join("\n"),
    )
}

pub fn classify(a: &ReduceArgs) -> Result<Outcome, CliError> {
    let s = slope(&a.slope)?;
    let outer = slope(&a.a)?;
    let v = classify_surgery_slope(&s, a.n, &outer)?;
    let mut lines = vec![format!("{}: {}", v.slope, v.label())];
    match &v.verdict {
        Verdict::LegendrianRealizable { locality, witness } => {
            let steps: Vec<String> = witness
                .steps
                .iter()
                .map(|st| format!("{}x{} along {}", st.contact_sign, st.count, st.along))
                .collect();
            lines.push(format!("locality: {locality:?}"));
            lines.push(format!(
                "witness: {}",
                if steps.is_empty() {
                    "(empty)".into()
                } else {
                    steps.join(", ")
                }
            ));
        }
        Verdict::NotLocallyRealizable {
            sequence,
            k,
            reason,
        } => {
            lines.push(format!(
                "excluded: {sequence:?} sequence, k = {k} ({reason})"
            ));
        }
        Verdict::OvertwistedResult { reason } => lines.push(reason.clone()),
        Verdict::Unknown => {}
    }
    lines.extend(v.citations.iter().map(|c| format!("- {c}")));
    let cites = v.citations.clone();
    Outcome::new(&v, cites, lines.join("\n"))
}

pub fn family_status(a: &FamilyArgs, fixed_points: Option<u32>) -> Result<Outcome, CliError> {
    let p = params(a)?;
    let st = ob::family_status(&p, a.capped, fixed_points);
    let fdtc: Vec<String> = st
        .fdtc_per_boundary
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = format!("{:?}\nfdtc: [{}]", st.status, fdtc.join(", "));
    let cites = st.citations.clone();
    Outcome::new(&st, cites, text)
}

#[derive(Serialize)]
struct FdtcPayload {
    params: FamilyParams,
    capped: bool,
    fdtc_per_boundary: Vec<Rational>,
}

pub fn family_fdtc(a: &FamilyArgs) -> Result<Outcome, CliError> {
    let p = params(a)?;
    let fdtc = ob::family_fdtc(&p, a.capped);
    let text = fdtc
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    Outcome::new(
        FdtcPayload {
            params: p,
            capped: a.capped,
            fdtc_per_boundary: fdtc,
        },
        vec![],
        text,
    )
}

#[derive(Serialize)]
struct FamilyHomologyPayload<'a> {
    params: FamilyParams,
    capped: bool,
    fillings: &'a BTreeMap<String, Slope>,
    homology: &'a HomologyReport,
}

pub fn family_homology(a: &FamilyArgs, fill: &[String]) -> Result<Outcome, CliError> {
    let p = params(a)?;
    let fills = fillings(fill, Some("B1"))?;
    let h = ob::family_homology(&p, a.capped, &fills)?;
    let payload = FamilyHomologyPayload {
        params: p,
        capped: a.capped,
        fillings: &fills,
        homology: &h,
    };
    Outcome::new(payload, vec![], homology_text(&h))
}

pub fn family_tight_slopes(a: &FamilyArgs, outer: &str, probes: &str) -> Result<Outcome, CliError> {
    let p = params(a)?;
    let outer = slope(outer)?;
    let probes = probes
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(slope)
        .collect::<Result<Vec<_>, _>>()?;
    let report = binding_tight_slope_report(&p, &outer, &probes)?;
    let mut lines: Vec<String> = report
        .entries
        .iter()
        .map(|e| match (e.status, e.locality) {
            (SurgeryStatus::Tight, Some(l)) => format!("{}: Tight ({l:?})", e.slope),
            (status, _) => format!("{}: {status:?}", e.slope),
        })
        .collect();
    lines.push(format!("non-closed: {}", report.non_closed));
    lines.push(format!("disconnected: {}", report.disconnected));
    let mut cites: Vec<String> = Vec::new();
    for c in report.entries.iter().flat_map(|e| e.citations.iter()) {
        if !cites.contains(c) {
            cites.push(c.clone());
        }
    }
    Outcome::new(&report, cites, lines.join("\n"))
}

fn braid(a: &BraidArgs) -> Result<BraidWord, CliError> {
    Ok(BraidWord::parse(&a.word, a.strands)?)
}

#[derive(Serialize)]
struct DetPayload<'a> {
    word: String,
    strands: usize,
    alexander: String,
    determinant: JsonInt<'a>,
}

pub fn braid_det(a: &BraidArgs) -> Result<Outcome, CliError> {
    let w = braid(a)?;
    let det = link_determinant(&w)?;
    let alex = alexander_polynomial(&w)?;
    let payload = DetPayload {
        word: w.to_string(),
        strands: w.strands(),
        alexander: alex.to_string(),
        determinant: JsonInt(&det),
    };
    Outcome::new(payload, vec![], det.to_string())
}

#[derive(Serialize)]
struct ComponentsPayload {
    word: String,
    strands: usize,
    components: usize,
    cycle_lengths: Vec<usize>,
}

pub fn braid_components(a: &BraidArgs) -> Result<Outcome, CliError> {
    let w = braid(a)?;
    let components = closure_components(&w);
    let payload = ComponentsPayload {
        word: w.to_string(),
        strands: w.strands(),
        components,
        cycle_lengths: braid_permutation(&w).cycle_lengths(),
    };
    Outcome::new(payload, vec![], components.to_string())
}

fn load_surface(spec: &str) -> Result<MarkedSurface, CliError> {
    if let Some(json) = builtin_surface_json(spec) {
        return Ok(MarkedSurface::from_json(json)?);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::parse(format!("cannot read surface {spec:?}: {e}")))?;
    Ok(MarkedSurface::from_json(&text)?)
}

#[derive(Serialize)]
struct OpenbookPayload<'a> {
    surface: &'a str,
    word: String,
    fillings: &'a BTreeMap<String, Slope>,
    homology: &'a HomologyReport,
}

pub fn openbook_homology(surface: &str, word: &str, fill: &[String]) -> Result<Outcome, CliError> {
    let s = load_surface(surface)?;
    let w = MonodromyWord::parse(word, &s)?;
    let fills = fillings(fill, None)?;
    let h = open_book_homology(&s, &w, &fills)?;
    let payload = OpenbookPayload {
        surface: s.name(),
        word: w.to_string(),
        fillings: &fills,
        homology: &h,
    };
    Outcome::new(payload, vec![], homology_text(&h))
}
