use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::surface::MarkedSurface;
use super::word::{arc_correction, word_action, MonodromyWord};
use crate::error::OpenBookError;
use crate::exact_math::{smith_normal_form, IntMatrix};
use crate::slope_calculus::Slope;

/// `H1` of a closed manifold given by a presentation matrix whose columns are
/// relations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HomologyReport {
    /// Torsion invariant factors in divisibility order, then one `0` per
    /// free summand. The trivial group has no factors.
    #[serde(serialize_with = "crate::json::int_vec")]
    pub invariant_factors: Vec<BigInt>,
    /// Group order, `0` when infinite.
    #[serde(serialize_with = "crate::json::int")]
    pub order: BigInt,
    pub generators: Vec<String>,
    pub presentation_matrix: IntMatrix,
}

impl HomologyReport {
    pub fn from_presentation(generators: Vec<String>, presentation: IntMatrix) -> Self {
        let cok = smith_normal_form(&presentation).cokernel();
        Self {
            invariant_factors: cok.invariant_factors(),
            order: cok.order(),
            generators,
            presentation_matrix: presentation,
        }
    }

    pub fn is_finite(&self) -> bool {
        !self.order.is_zero()
    }
}

/// Binding corrections `beta_i` for every boundary component, found by
/// chaining arcs outward from the first (reference) boundary.
pub fn boundary_corrections(
    surface: &MarkedSurface,
    word: &MonodromyWord,
) -> Result<BTreeMap<String, Vec<BigInt>>, OpenBookError> {
    let names = surface.boundary_names();
    let reference = names[0].clone();
    let r = surface.h1_rank();
    let mut betas: BTreeMap<String, Vec<BigInt>> = BTreeMap::new();
    betas.insert(reference.clone(), vec![BigInt::zero(); r]);

    let mut edges: Vec<(String, String, Vec<BigInt>)> = Vec::new();
    for arc in surface.arc_names() {
        let (from, to) = surface.arc_ends(arc)?;
        let beta = arc_correction(surface, arc, word)?;
        edges.push((from.to_string(), to.to_string(), beta));
    }

    let mut queue = VecDeque::from([reference.clone()]);
    while let Some(b) = queue.pop_front() {
        let base = betas[&b].clone();
        for (from, to, beta) in &edges {
            let (next, sign) = if *from == b {
                (to, 1)
            } else if *to == b {
                (from, -1)
            } else {
                continue;
            };
            if betas.contains_key(next) {
                continue;
            }
            let v = base.iter().zip(beta).map(|(x, y)| x + y * sign).collect();
            betas.insert(next.clone(), v);
            queue.push_back(next.clone());
        }
    }
    for name in names {
        if !betas.contains_key(name) {
            return Err(OpenBookError::DisconnectedArcs {
                reference: reference.clone(),
                target: name.clone(),
            });
        }
    }
    Ok(betas)
}

/// `H1` of the open book `(S, w)` with its binding components filled.
///
/// Fillings are page-framed slopes keyed by boundary name; a missing entry
/// is the meridian `1/0`, which recovers the open book itself.
pub fn open_book_homology(
    surface: &MarkedSurface,
    word: &MonodromyWord,
    fillings: &BTreeMap<String, Slope>,
) -> Result<HomologyReport, OpenBookError> {
    for name in fillings.keys() {
        if !surface.boundary_names().contains(name) {
            return Err(OpenBookError::UnknownBoundary(name.clone()));
        }
    }
    let r = surface.h1_rank();
    let action = word_action(surface, word)?;
    let betas = boundary_corrections(surface, word)?;

    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    let moved = action.try_sub(&IntMatrix::identity(r))?;
    for j in 0..r {
        let mut col = moved.column(j);
        col.push(BigInt::zero());
        columns.push(col);
    }
    for name in surface.boundary_names() {
        let slope = fillings.get(name).cloned().unwrap_or_else(Slope::meridian);
        let (p, q) = slope.vector();
        let beta = &betas[name];
        let mut col: Vec<BigInt> = beta.iter().map(|b| &p * b).collect();
        col.push(p.clone());
        if !q.is_zero() {
            let d = surface.boundary_class(name)?;
            for (k, x) in d.iter().enumerate() {
                col[k] += &q * x;
            }
        }
        columns.push(col);
    }

    let rows = r + 1;
    let mut m = IntMatrix::zeros(rows, columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    let mut generators: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    generators.push("t".into());
    Ok(HomologyReport::from_presentation(generators, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::open_books::builtin_surfaces;

    #[test]
    fn lens_spaces_from_the_annulus() {
        let a = builtin_surfaces().annulus;
        for n in 1..=6u32 {
            let w = MonodromyWord::new(vec![("gamma".into(), n as i64)]).unwrap();
            let h = open_book_homology(&a, &w, &BTreeMap::new()).unwrap();
            assert_eq!(h.order, BigInt::from(n));
        }
        let h = open_book_homology(&a, &MonodromyWord::empty(), &BTreeMap::new()).unwrap();
        assert_eq!(h.invariant_factors, vec![BigInt::zero()]);
    }

    #[test]
    fn identity_monodromy_on_t() {
        let t = builtin_surfaces().t;
        let h = open_book_homology(&t, &MonodromyWord::empty(), &BTreeMap::new()).unwrap();
        assert_eq!(h.invariant_factors, vec![BigInt::zero(); 3]);
        assert_eq!(h.order, BigInt::zero());
    }

    #[test]
    fn disconnected_arcs() {
        let mut f = builtin_surfaces().t.to_file().clone();
        f.arcs.clear();
        let t = MarkedSurface::from_file(f).unwrap();
        assert!(matches!(
            open_book_homology(&t, &MonodromyWord::empty(), &BTreeMap::new()),
            Err(OpenBookError::DisconnectedArcs { .. })
        ));
    }

    #[test]
    fn unknown_filling_boundary() {
        let t = builtin_surfaces().t;
        let fill = BTreeMap::from([("B7".to_string(), Slope::integer(0))]);
        assert!(open_book_homology(&t, &MonodromyWord::empty(), &fill).is_err());
    }
}
