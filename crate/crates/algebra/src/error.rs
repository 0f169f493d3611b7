use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("discriminant of a constant polynomial")]
    ConstantDiscriminant,
    #[error("degree {degree} exceeds homogenization bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("weight vectors differ: {0:?} vs {1:?}")]
    WeightMismatch(Vec<u32>, Vec<u32>),
    #[error("weighted point has all coordinates zero")]
    ZeroPoint,
    #[error("radicands differ: {0} vs {1}")]
    RadicandMismatch(String, String),
    #[error("invalid radicand {0}: must be a non-square integer")]
    BadRadicand(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
