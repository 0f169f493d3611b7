use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("non-minimal Weierstrass model at {place} (ord f = {ord_f}, ord g = {ord_g})")]
    NonMinimal { place: String, ord_f: u32, ord_g: u32 },
    #[error("no Kodaira type for orders (f, g, disc) = ({0}, {1}, {2}) at {3}")]
    UnknownFiber(u32, u32, u32, String),
    #[error(transparent)]
    Algebra(#[from] sixlines_algebra::AlgebraError),
}

pub(crate) fn precondition(msg: impl Into<String>) -> CoreError {
    CoreError::Precondition(msg.into())
}
