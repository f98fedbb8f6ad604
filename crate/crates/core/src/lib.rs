//! Exact computation of the signature cocycle on `Sp(2g; Z)`, the Meyer
//! functions of genus 1 and 2, and local signatures of fibered 4-manifolds.
//!
//! Everything is exact: integers are [`num_bigint::BigInt`] and rationals
//! [`exact::Rational`]. Floating point is never used.

pub mod cli;
pub mod cocycle;
pub mod data;
pub mod error;
pub mod exact;
pub mod fibered;
pub mod genus1;
pub mod presentations;
pub mod selftest;
pub mod symplectic;

pub use cocycle::{meyer_form, sigma_defect_via_tau, tau_sp, v_space};
pub use data::DataSet;
pub use error::{Error, Result};
pub use exact::{Rational, SignatureTriple, SymmetricForm};
pub use fibered::{
    geography_convert, geography_invert, hyperelliptic_twist_value, local_signature, signature_over_surface,
    total_signature, FiberGerm, FibrationDescription, MeyerFunction, TwistKind,
};
pub use genus1::{dedekind_sum, phi1, rademacher, sigma_defect, SL2Element};
pub use presentations::{ClassOrder, Presentation, SynthesizedMeyerFunction, Word};
pub use symplectic::{dehn_twist, random_symplectic, transvection, HomologyClass, IntMatrix, SymplecticMatrix};
