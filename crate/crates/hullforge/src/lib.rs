//! Exact coding-theory toolkit for Galois hulls over finite fields:
//! construct GF(p^h), compute twisted duals and hulls of linear codes,
//! lengthen self-orthogonal codes while controlling the hull dimension,
//! build Hermitian self-orthogonal MDS codes from generalized
//! Reed-Solomon specs, and derive entanglement-assisted quantum code
//! parameters — all in exact field/rational arithmetic, no floats.
//!
//! The crate is `no_std` (with `alloc`); everything IO-related lives in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod eaqecc;
pub mod error;
pub mod extend;
pub mod field;
pub mod grs;
pub mod matrix;

pub use code::{Classification, DistanceResult, LinearCode, SingletonProfile};
pub use eaqecc::{
    derive_eaqecc, derive_eaqecc_with_distances, ea_singleton_check, propagate, rates,
    EaSingletonReport, EaqeccParams, RateReport, Target,
};
pub use error::{Error, Result};
pub use extend::{
    alpha_conditions, closed_form_pair, extend_one_with_hull, extend_self_orthogonal,
    find_alpha_tuple, find_alpha_tuple_with_budget, hull_extension_determinant,
    reduce_hull_dim, scaling_element, AlphaCase, AlphaTuple, ConditionReport,
};
pub use field::{galois_gcd_formula, solve_t0, Field, FieldElement};
pub use grs::{
    extend_grs_one, grs_generator, hermitian_membership, hso_mds_coset, hso_mds_product,
    u_vector, CosetFamily, GrsSpec, ProductFamily,
};
pub use matrix::{gram, inner_product, Matrix};
