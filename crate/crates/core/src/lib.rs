//! Exact-rational toolkit for projective connections on surfaces: the jet
//! action on second-order elements, joint invariants, centre-of-curvature
//! loci, osculating-plane incidence geometry and the twisted-cubic cone.

pub mod error;
pub mod exact;
pub mod cone;
pub mod connection;
pub mod errata;
pub mod invariants;
pub mod jet;
pub mod osculating;

pub use error::{Error, Result};
pub use exact::{BinaryForm3, MatR, Poly, Rat};
pub use invariants::{
    check_genericity, compute_invariants, cross_ratio, ElementTuple, GenericityReport, GenericityViolation,
    InvariantSet,
};
pub use jet::{generator_flow, Element2, Generator, JetMap};
pub use connection::{
    central_locus, central_locus_rank1, centre, centre_transform, classify_rank2, fit_connection, satisfies,
    transform_connection, Centre, ProjConnection, Rank2Class, RankTwoEq,
};
pub use osculating::{
    asymptotic_form, envelope_point_locus, envelope_tangential_cubic, geometry_from_connection, incidence_form,
    straight_lines_connection, union_locus_conjugate, union_locus_general, Geometry, GrassmannPlane, PencilData,
    PluckerLine, SurfaceFrameModel, SurfaceJet,
};
pub use cone::{cone_cross_ratio, embed, g_from_jetmap, on_cone, sym3, ConePoint, GMat};
pub use errata::{verify_errata, Counterexample, ErrataEntry, ErrataStatus};
