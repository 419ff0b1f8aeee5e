//! Exact construction and verification of neighborly polytopes inscribed on
//! the unit sphere, via iterated lexicographic liftings of point
//! configurations.
//!
//! Everything combinatorial is computed with exact rational arithmetic and
//! checked against definitional scans; floating point appears only in
//! explicitly approximate exports and in side tests against curved bodies
//! other than the round ball, where answers too close to the decision
//! boundary are reported as undecided rather than guessed.

pub mod error;
pub mod exact;
pub mod hull;
pub mod kbody;
pub mod lift;
pub mod pipeline;

pub use error::{Error, Result};
pub use exact::{
    chirotope_of, in_sphere, is_general_position, orientation, orientation_of_labels, Chirotope,
    Label, LabeledPoint, Point, PointConfiguration, Rat, Side, Sign,
};
pub use hull::{
    convex_hull, gale_evenness_facets, oriented_hull, same_labeled_type, visible_faces, Facet,
    FacetSet, OrientedFacet,
};
pub use kbody::{
    brown_polytope, inverse_stereographic, k_circumball_side, k_delaunay, stereographic,
    verify_inscribed, InscribedRealization, KBody, KProjection,
};
pub use lift::{
    delaunay_triangulation, dual_graph, is_neighborly_triangulation, k_lift, lex_lift,
    lex_lift_with_policy, lower_envelope, placing_triangulation, positive_signs,
    triangulations_equal, verify_lift, DualGraph, HeightPolicy, Lifting, Triangulation,
};
pub use pipeline::{
    construct_neighborly, count_labeled_types, default_base, enumeration_cap, enumeration_specs,
    final_stage_ball_lifting, inscribed_realization, lower_bound, lower_bound_closed_form,
    lower_bound_dominates_closed_form, pipeline_shape, stacked_universal, verify_certificate,
    ConstructionCertificate, CountReport, IterationPlan, PermutationChoice, PipelineShape,
    PipelineSpec, SignChoice, StageRecord, ENUMERATION_CAP_VAR,
};
