//! Exact Poincaré series of cotangent cohomology.
//!
//! The crate computes, in exact arithmetic, the graded and multigraded
//! dimensions of the cotangent (Harrison) cohomology modules of four
//! singularity families: fat points of minimal multiplicity, cones over
//! rational normal curves, partition curves, and quotient-type rational
//! surface singularities. Closed-form generating series live in
//! [`formulas`]; an independent brute-force route through shuffle-invariant
//! cochain complexes lives in [`oracle`] and backs every closed form with a
//! rank computation over the rationals.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use formulas::{
    fat_point_harrison_dim, hyperplane_section_series, multigraded_harrison_dim, p_cone,
    p_fat_point, p_partition_curve, p_quotient, p_tilde_cone, q_fat_point, q_tilde_cone,
    q_tilde_fat_point, t0_dim, t1_dim, t2_dim, PartitionCurveSpec, QuotientSpec,
};
pub use lattice::{divisors_of_degree, moebius, ConeContext, MultiDegree};
pub use series::{MultiSeries, SeriesJson, UniSeries};
