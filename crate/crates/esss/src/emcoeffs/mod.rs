//! Coefficient modules: motivic cohomology of the base field with 2-primary coefficients.

pub mod field;
pub mod les;
pub mod modules;
pub mod oracle;
pub mod ring;

pub use field::{FieldError, FieldId};
pub use modules::{coeff_basis, hz_basis, tower_source, Modulus};
