//! Pages with homology data, monodromy words and the homology of the
//! resulting open books, together with the genus one family and its
//! capped-off books.

mod family;
mod homology;
mod surface;
mod word;

pub use family::{
    binding_tight_slope_report, cap_off_family, family_fdtc, family_homology, family_open_book,
    family_status, BindingEntry, BindingReport, ContactStatus, FamilyParams, StatusKind,
    SurgeryStatus,
};
pub use homology::{boundary_corrections, open_book_homology, HomologyReport};
pub use surface::{
    builtin_surface_json, builtin_surfaces, ArcRecord, BuiltinSurfaces, CurveRecord, MarkedSurface,
    SurfaceFile,
};
pub use word::{arc_correction, transvection_matrix, word_action, MonodromyWord};
