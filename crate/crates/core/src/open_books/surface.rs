use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::OpenBookError;
use crate::exact_math::IntMatrix;

/// One curve of the surface file: its class in the chosen `H1` basis and the
/// boundary components it is parallel to.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveRecord {
    pub class: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parallel_to: Vec<String>,
}

/// A properly embedded arc between two boundary components, with its
/// algebraic intersection numbers against named curves.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ArcRecord {
    pub from: String,
    pub to: String,
    pub pairs: BTreeMap<String, i64>,
}

/// On-disk shape of a marked surface.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub name: String,
    pub genus: usize,
    pub boundary: Vec<String>,
    pub curves: BTreeMap<String, CurveRecord>,
    #[serde(default)]
    pub arcs: BTreeMap<String, ArcRecord>,
    pub pairing: Vec<Vec<i64>>,
}

/// A compact surface with named curves and arcs carrying homology data.
///
/// Arc pairings are stored as covectors `u` on `H1`, so `u . [c]` is the
/// intersection of the arc with any curve `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedSurface {
    name: String,
    genus: usize,
    boundary: Vec<String>,
    h1_rank: usize,
    curves: BTreeMap<String, CurveRecord>,
    arcs: BTreeMap<String, (ArcRecord, Vec<i64>)>,
    pairing: IntMatrix,
    source: SurfaceFile,
}

impl MarkedSurface {
    pub fn from_file(file: SurfaceFile) -> Result<Self, OpenBookError> {
        let bad = |m: String| Err(OpenBookError::InvalidSurface(m));
        if file.boundary.is_empty() {
            return bad("a page needs at least one boundary component".into());
        }
        let mut names = file.boundary.clone();
        names.sort();
        names.dedup();
        if names.len() != file.boundary.len() {
            return bad("duplicate boundary names".into());
        }
        let rank = 2 * file.genus + file.boundary.len() - 1;
        if file.pairing.len() != rank || file.pairing.iter().any(|r| r.len() != rank) {
            return bad(format!("pairing must be {rank}x{rank}"));
        }
        for i in 0..rank {
            for j in 0..rank {
                if file.pairing[i][j] != -file.pairing[j][i] {
                    return bad("pairing is not skew-symmetric".into());
                }
            }
        }
        let pairing = IntMatrix::from_rows(&file.pairing);

        for (name, curve) in &file.curves {
            if curve.class.len() != rank {
                return bad(format!(
                    "curve {name:?} has a class of length {}, expected {rank}",
                    curve.class.len()
                ));
            }
            for b in &curve.parallel_to {
                if !file.boundary.contains(b) {
                    return Err(OpenBookError::UnknownBoundary(b.clone()));
                }
            }
            if !curve.parallel_to.is_empty() {
                let c: Vec<BigInt> = curve.class.iter().map(|&x| BigInt::from(x)).collect();
                if pairing.apply(&c).iter().any(|x| x != &BigInt::from(0)) {
                    return bad(format!(
                        "boundary-parallel curve {name:?} is not in the radical of the pairing"
                    ));
                }
            }
        }

        let mut arcs = BTreeMap::new();
        for (name, arc) in &file.arcs {
            for end in [&arc.from, &arc.to] {
                if !file.boundary.contains(end) {
                    return Err(OpenBookError::UnknownBoundary(end.clone()));
                }
            }
            if arc.from == arc.to {
                return bad(format!(
                    "arc {name:?} must join two different boundary components"
                ));
            }
            let u = solve_covector(name, arc, &file.curves, rank)?;
            arcs.insert(name.clone(), (arc.clone(), u));
        }

        Ok(Self {
            name: file.name.clone(),
            genus: file.genus,
            boundary: file.boundary.clone(),
            h1_rank: rank,
            curves: file.curves.clone(),
            arcs,
            pairing,
            source: file,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, OpenBookError> {
        let file: SurfaceFile =
            serde_json::from_str(text).map_err(|e| OpenBookError::InvalidSurface(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> &SurfaceFile {
        &self.source
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_names(&self) -> &[String] {
        &self.boundary
    }

    pub fn h1_rank(&self) -> usize {
        self.h1_rank
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn curve_names(&self) -> impl Iterator<Item = &str> {
        self.curves.keys().map(String::as_str)
    }

    pub fn has_curve(&self, name: &str) -> bool {
        self.curves.contains_key(name)
    }

    pub fn curve_class(&self, name: &str) -> Result<Vec<BigInt>, OpenBookError> {
        self.curves
            .get(name)
            .map(|c| c.class.iter().map(|&x| BigInt::from(x)).collect())
            .ok_or_else(|| OpenBookError::UnknownCurve(name.to_string()))
    }

    pub fn arc_names(&self) -> impl Iterator<Item = &str> {
        self.arcs.keys().map(String::as_str)
    }

    /// Endpoints of an arc.
    pub fn arc_ends(&self, name: &str) -> Result<(&str, &str), OpenBookError> {
        self.arcs
            .get(name)
            .map(|(a, _)| (a.from.as_str(), a.to.as_str()))
            .ok_or_else(|| OpenBookError::UnknownArc(name.to_string()))
    }

    /// The arc's intersection covector on `H1`.
    pub fn arc_covector(&self, name: &str) -> Result<Vec<BigInt>, OpenBookError> {
        self.arcs
            .get(name)
            .map(|(_, u)| u.iter().map(|&x| BigInt::from(x)).collect())
            .ok_or_else(|| OpenBookError::UnknownArc(name.to_string()))
    }

    /// Class of a curve parallel to the given boundary component.
    pub fn boundary_class(&self, boundary: &str) -> Result<Vec<BigInt>, OpenBookError> {
        if !self.boundary.iter().any(|b| b == boundary) {
            return Err(OpenBookError::UnknownBoundary(boundary.to_string()));
        }
        let (name, _) = self
            .curves
            .iter()
            .find(|(_, c)| c.parallel_to.iter().any(|b| b == boundary))
            .ok_or_else(|| OpenBookError::MissingBoundaryCurve(boundary.to_string()))?;
        self.curve_class(name)
    }

    /// Algebraic intersection `x . y = x^T J y`.
    pub fn intersect(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let jy = self.pairing.apply(y);
        x.iter().zip(&jy).map(|(a, b)| a * b).sum()
    }

    /// Basis vectors of the radical of the pairing that appear among the
    /// boundary-parallel curves.
    pub fn radical_curves(&self) -> Vec<&str> {
        self.curves
            .iter()
            .filter(|(_, c)| !c.parallel_to.is_empty())
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

fn solve_covector(
    arc_name: &str,
    arc: &ArcRecord,
    curves: &BTreeMap<String, CurveRecord>,
    rank: usize,
) -> Result<Vec<i64>, OpenBookError> {
    let mut u: Vec<Option<i64>> = vec![None; rank];
    for (curve, &value) in &arc.pairs {
        let rec = curves
            .get(curve)
            .ok_or_else(|| OpenBookError::UnknownCurve(curve.clone()))?;
        let ones: Vec<usize> = (0..rank).filter(|&i| rec.class[i] != 0).collect();
        if ones.len() == 1 && rec.class[ones[0]] == 1 {
            u[ones[0]] = Some(value);
        }
    }
    let u: Vec<i64> = u
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                OpenBookError::InvalidSurface(format!(
                    "arc {arc_name:?} needs a pairing with a curve of class e{}",
                    i + 1
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    for (curve, &value) in &arc.pairs {
        let class = &curves[curve].class;
        let got: i64 = u.iter().zip(class).map(|(a, b)| a * b).sum();
        if got != value {
            return Err(OpenBookError::InvalidSurface(format!(
                "arc {arc_name:?} pairs with {curve:?} as {value}, but its other pairings force {got}"
            )));
        }
    }
    Ok(u)
}

const ANNULUS: &str = r#"{
  "name": "annulus",
  "genus": 0,
  "boundary": ["B1", "B2"],
  "curves": { "gamma": { "class": [1], "parallel_to": ["B1", "B2"] } },
  "arcs": { "tau": { "from": "B1", "to": "B2", "pairs": { "gamma": 1 } } },
  "pairing": [[0]]
}"#;

const T: &str = r#"{
  "name": "T",
  "genus": 1,
  "boundary": ["B1", "B2"],
  "curves": {
    "a": { "class": [1, 0, 0] },
    "b": { "class": [0, 1, 0] },
    "c": { "class": [0, 0, 1] },
    "d": { "class": [1, 0, 1] },
    "delta1": { "class": [1, 0, 1], "parallel_to": ["B1"] },
    "delta2": { "class": [1, 0, 1], "parallel_to": ["B2"] }
  },
  "arcs": {
    "tau": {
      "from": "B1",
      "to": "B2",
      "pairs": { "a": 0, "b": 0, "c": 1, "d": 1, "delta1": 1, "delta2": 1 }
    }
  },
  "pairing": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
}"#;

const T_HAT: &str = r#"{
  "name": "T-hat",
  "genus": 1,
  "boundary": ["B"],
  "curves": {
    "x": { "class": [1, 0] },
    "y": { "class": [0, 1] },
    "delta": { "class": [0, 0], "parallel_to": ["B"] }
  },
  "arcs": {},
  "pairing": [[0, 1], [-1, 0]]
}"#;

/// Raw JSON of the built-in surfaces, by name.
pub fn builtin_surface_json(name: &str) -> Option<&'static str> {
    match name {
        "annulus" => Some(ANNULUS),
        "T" => Some(T),
        "T-hat" => Some(T_HAT),
        _ => None,
    }
}

/// The annulus, the genus one surface `T` with two boundary components and
/// its capped-off version `T-hat`.
pub struct BuiltinSurfaces {
    pub annulus: MarkedSurface,
    pub t: MarkedSurface,
    pub t_hat: MarkedSurface,
}

pub fn builtin_surfaces() -> BuiltinSurfaces {
    let load = |s: &str| MarkedSurface::from_json(s).expect("built-in surface data is valid");
    BuiltinSurfaces {
        annulus: load(ANNULUS),
        t: load(T),
        t_hat: load(T_HAT),
    }
}
