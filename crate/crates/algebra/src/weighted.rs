//! Points of weighted projective space.

use crate::field::Field;
use crate::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPoint<F> {
    pub coords: Vec<F>,
    pub weights: Vec<u32>,
}

impl<F: Field> WeightedPoint<F> {
    pub fn new(coords: Vec<F>, weights: Vec<u32>) -> Result<Self, AlgebraError> {
        assert_eq!(coords.len(), weights.len(), "coordinate/weight length");
        if coords.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::ZeroPoint);
        }
        Ok(WeightedPoint { coords, weights })
    }

    /// Coordinate k multiplied by `λ^{w_k}`.
    pub fn scaled(&self, lambda: &F) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&self.weights)
            .map(|(c, &w)| c.clone() * &lambda.powu(w))
            .collect();
        WeightedPoint { coords, weights: self.weights.clone() }
    }
}

/// Equality over the algebraic closure: same zero pattern, and
/// `p_i^{w_j} q_j^{w_i} = q_i^{w_j} p_j^{w_i}` for every pair of indices
/// with nonzero coordinates.
pub fn weighted_equal<F: Field>(p: &WeightedPoint<F>, q: &WeightedPoint<F>) -> Result<bool, AlgebraError> {
    if p.weights != q.weights {
        return Err(AlgebraError::WeightMismatch(p.weights.clone(), q.weights.clone()));
    }
    let support: Vec<usize> = (0..p.coords.len()).filter(|&i| !p.coords[i].is_zero()).collect();
    if support.iter().copied().ne((0..q.coords.len()).filter(|&i| !q.coords[i].is_zero())) {
        return Ok(false);
    }
    for (a, &i) in support.iter().enumerate() {
        for &j in &support[a..] {
            let (wi, wj) = (p.weights[i], p.weights[j]);
            let lhs = p.coords[i].powu(wj) * &q.coords[j].powu(wi);
            let rhs = q.coords[i].powu(wj) * &p.coords[j].powu(wi);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    fn j_point(v: &[i64]) -> WeightedPoint<Rational> {
        WeightedPoint::new(v.iter().map(|&x| rat(x)).collect(), vec![2, 3, 4, 5, 6]).unwrap()
    }

    #[test]
    fn golden_cases() {
        let p = j_point(&[63, -243, 729, -8748, -32076]);
        assert!(weighted_equal(&p, &p).unwrap());
        let q = j_point(&[252, -1944, 11664, -279936, -2052864]);
        assert!(weighted_equal(&p, &q).unwrap());
        assert_eq!(p.scaled(&rat(2)), q);
        let r = j_point(&[63, 243, 729, -8748, -32076]);
        assert!(!weighted_equal(&p, &r).unwrap());
    }

    #[test]
    fn irrational_scale_is_equal() {
        // λ = √2, then λ = i√2
        let p = WeightedPoint::new(vec![rat(1), rat(1)], vec![2, 4]).unwrap();
        let q = WeightedPoint::new(vec![rat(2), rat(4)], vec![2, 4]).unwrap();
        assert!(weighted_equal(&p, &q).unwrap());
        let q = WeightedPoint::new(vec![rat(-2), rat(4)], vec![2, 4]).unwrap();
        assert!(weighted_equal(&p, &q).unwrap());
    }

    #[test]
    fn mismatched_weights_rejected() {
        let p = WeightedPoint::new(vec![rat(1)], vec![2]).unwrap();
        let q = WeightedPoint::new(vec![rat(1)], vec![3]).unwrap();
        assert!(weighted_equal(&p, &q).is_err());
        assert!(WeightedPoint::new(vec![rat(0)], vec![2]).is_err());
    }
}
