//! Exact classification of m-tuples of points in projective (n-1)-space
//! under the diagonal general-linear group action.
//!
//! The crate provides:
//!
//! - exact linear algebra over the rationals and over prime fields
//!   ([`field`], [`linalg`], [`config`]);
//! - the rank function and indecomposable splitting of a configuration,
//!   with canonical representatives ([`rankfn`], [`splitting`], [`stab`]);
//! - the full classification for quadruples of points in the projective
//!   plane: 25 discrete orbit labels plus a one-parameter family of
//!   5-dimensional orbits, the degree-(1,1,1,1) invariant cutting out the
//!   parameterized family, closure relations, and the Hasse diagram of
//!   degenerations ([`label`], [`classify`], [`invariant`], [`closure`]);
//! - closed-form predicates for open-orbit existence and orbit finiteness,
//!   with witnesses ([`openfinite`]);
//! - an exhaustive finite-field census that counts orbits two independent
//!   ways and validates the classification empirically ([`census`]);
//! - seeded verification suites covering the algebraic identities
//!   ([`verify`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads.

pub mod census;
pub mod classify;
pub mod closure;
pub mod config;
pub mod error;
pub mod field;
pub mod invariant;
pub mod label;
pub mod linalg;
pub mod openfinite;
pub mod param;
pub mod rankfn;
pub mod s4;
pub mod sampling;
pub mod splitting;
pub mod stab;
pub mod verify;

pub use census::{census_by_label, census_by_group_action, dimension_audit, enumerate_points, gl_order, CensusReport};
pub use classify::{classify, extract_parameter};
pub use closure::{closure_contains, hasse, in_closure_by_minors, HasseEdge};
pub use config::{Configuration, ProjectivePoint};
pub use error::{Error, Result};
pub use field::{FieldCtx, Scalar};
pub use invariant::{eval_pp, in_orbit5p, is_pp_irreducible};
pub use label::{OrbitLabel, Pair, S4Class};
pub use linalg::Matrix;
pub use openfinite::{has_open_orbit, infinite_family_witness, is_finite_type, open_orbit_witness};
pub use param::ProjParam;
pub use rankfn::{compute_pi, RankFunction};
pub use s4::{parameter_orbit, psi, s4_act, Perm4};
pub use splitting::{compute_varpi, rho, Splitting};
pub use stab::{orbit_dim_of, stabilizer_dim};
