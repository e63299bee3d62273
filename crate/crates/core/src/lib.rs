//! Annihilator ideals of inverse forms over exact fields.
//!
//! Given a nonzero finite sequence (equivalently an inverse form `F`), the
//! [`engine`] builds the minimal grlex Gröbner basis of the annihilator
//! ideal `I_F ⊂ K[x, z]` one coefficient at a time, optionally keeping it
//! reduced. [`bm`] runs the same induction on dehomogenised polynomials to
//! produce minimal polynomials and linear complexity profiles, and
//! [`oracle`] re-derives every claim with brute-force checks.

pub mod bm;
pub mod engine;
pub mod error;
pub mod field;
pub mod formats;
pub mod forms;
pub mod inverse;
pub mod oracle;
pub mod univariate;

pub use bm::{linear_complexity_profile, minimal_polynomial, seq_discrepancy, MinPolyResult};
pub use engine::{
    discrepancy, init_state, init_state_with, reduce_basis, run, run_state, AnnihilatorBasis,
    EngineOptions, EngineState, StepInfo, TraceRow, ViablePair,
};
pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldSpec};
pub use forms::{grlex_cmp, ominus, parse_form, rem, s_poly, Form, Monomial};
pub use inverse::{annihilates, contract, from_sequence, InverseForm, Sequence};
pub use oracle::{Check, VerificationReport};
pub use univariate::UnivariatePoly;
