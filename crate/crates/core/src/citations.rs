//! Citation strings attached to verdicts. Each names the external result a
//! verdict rests on, so JSON reports stay traceable without re-deriving them.

pub const TWIST_ACTION: &str =
    "contact +-1 surgery on a leaf of a thickened torus acts on slopes by a Dehn twist";
pub const DING_GEIGES: &str = "Ding-Geiges: contact +1 and -1 surgery on push-offs cancel";
pub const LEGENDRIAN_REDUCTION: &str =
    "admissible transverse s-surgery with s below the neighborhood integer is Legendrian surgery";
pub const SINGLE_LEAF: &str = "contact +1 surgery on one leaf sends the slope to the meridian";
pub const SEMI_LOCAL: &str =
    "witness leaf lies outside the neighborhood; realization needs a thickening (semi-local)";
pub const GROMOV: &str = "Gromov: B^4 is the unique Stein filling of the standard S^3";
pub const LENS_FILLINGS: &str =
    "McDuff, Plamenevskaya-Van Horn-Morris: Stein fillings of L(k,1) have b2 = 1 or are rational balls";
pub const BERGE_GABAI: &str =
    "Berge-Gabai: integral surgeries on knots in a solid torus yielding a solid torus";
pub const DESCENDING_EXCEPTION: &str =
    "the descending excluded slope at k = 3 coincides with a single-leaf realizable slope";
pub const UNIFORM_THICKNESS: &str =
    "uniformly thick knot types: the tight slope set is [-inf, max tb)";
pub const COLIN_HONDA: &str =
    "Colin-Honda: pseudo-Anosov monodromy with FDTC >= 2/n at every boundary supports a universally tight structure";
pub const HONDA_KAZEZ_MATIC: &str =
    "Honda-Kazez-Matic: a pseudo-Anosov monodromy is right-veering iff all FDTCs are positive; non-right-veering is overtwisted";
pub const CAPPING_AS_SURGERY: &str =
    "capping off a binding component is admissible transverse 0-surgery on it";
pub const NO_CLAIM: &str = "no available result decides this case";
