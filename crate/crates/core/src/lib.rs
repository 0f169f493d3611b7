//! Six-line configurations in the projective plane: coordinates, invariants,
//! the attached K3 Weierstrass models, their fibers and two-isogenies, and
//! the genus-two specialization.

pub mod check;
pub mod configuration;
mod error;
pub mod fibration;
pub mod genus_two;
pub mod identities;
pub mod invariants;
pub mod isogeny;
pub mod ring;
pub mod sample;

pub use error::CoreError;
