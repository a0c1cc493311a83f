//! Brute-force cohomology computations over the rationals.
//!
//! Everything in this module recomputes, from first principles, quantities
//! that the [`crate::formulas`] module produces from closed formulas:
//! shuffle-operator ranks on tensor powers, cochain complexes indexed by
//! lattice degrees, and module-valued Harrison dimensions of the fat point.
//! No floating point appears anywhere; ranks are exact.

mod complex;
mod fatpoint;
mod matrix;
mod shuffle;

pub use complex::{
    build_toric_complex, homogeneous_split_dims, toric_t_dim, ToricComplex, ToricComplexSlice,
};
pub use fatpoint::{fat_point_harrison_a_dims, hochschild_module_dims};
pub use matrix::RationalMatrix;
pub use shuffle::{
    fat_point_harrison_dim_oracle, shuffle_operator_rank, shuffles, weighted_shuffle_dim,
};
