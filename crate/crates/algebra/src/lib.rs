//! Exact arithmetic kernel: rationals, quadratic fields, dense univariate and
//! sparse multivariate polynomials, and weighted projective points.

mod error;
mod field;
pub mod multipoly;
mod quadext;
pub mod ratfunc;
pub mod rational;
pub mod roots;
pub mod unipoly;
pub mod weighted;

pub use error::AlgebraError;
pub use field::Field;
pub use multipoly::MultiPoly;
pub use quadext::{squarefree_core, QuadExt};
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, Rational};
pub use unipoly::UniPoly;
pub use weighted::{weighted_equal, WeightedPoint};
