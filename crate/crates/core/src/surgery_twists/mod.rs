//! Contact surgery on leaves of thickened tori, read through its action on
//! slopes.

mod classify;
mod program;
mod sequences;
mod twist;

pub use classify::{
    classify_surgery_slope, legendrian_as_transverse_slope, legendrian_as_transverse_slope_tb,
    uniform_thick_tight_slopes, ExcludedSequence, Locality, SlopeVerdict, Verdict,
};
pub use program::{reduce_to_meridian, replay_steps, Outer, TwistProgram, TwistStep};
pub use sequences::{
    ascending_excluded, berge_gabai_screen, descending_excluded, excluded_sequences,
    realizable_sequence, BergeGabaiWitness, ExcludedPair, ScreenVerdict,
};
pub use twist::{ding_geiges_cancel, twist_matrix, twist_n, twist_once, ContactSign};
