//! Parametric patches over lattice point configurations.
//!
//! The crate builds blending functions (toric Bézier, Bernstein, Wachspress
//! and user-supplied products of affine forms), evaluates patches and their
//! tautological maps, certifies linear precision numerically, and computes
//! the unique linear-precision reparametrization of a toric patch by
//! iterative proportional fitting.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fixtures;
pub mod hull;
pub mod ipf;
pub mod lattice;
pub mod patch;
pub mod precision;
pub mod rational;
pub mod toric;

pub use error::{Error, Result};
pub use hull::facet_system;
pub use ipf::{ipf_solve, lp_blending, IpfResult, IpfSettings};
pub use lattice::is_primitive;
pub use patch::{
    eval_patch, nondegeneracy_rank, normalize, tautological, AffineForm, FacetSystem, FormProduct, PatchSpec,
    PointConfig, SimplexPoint, WeightVector,
};
pub use precision::{
    binomial_relation_residual, check_linear_precision, composed_projection, implicit_residual, rational_lp_1d,
    ImplicitSystem, PrecisionReport, Verdict,
};
pub use rational::Rational;
pub use toric::{
    homogenize, laurent_f, monomial_param, simploid_config, toric_bezier, toric_differential, HomogenizedConfig,
    LaurentPolynomial,
};
