use crate::rational::Rational;
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient field for polynomial arithmetic. Implemented by [`Rational`]
/// and [`crate::QuadExt`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Zero
    + One
{
    fn from_rational(q: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(crate::rational::rat(n))
    }

    fn inv(&self) -> Self {
        Self::one() / self
    }

    fn powu(&self, e: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        out
    }

    /// Galois conjugate; the identity on Q.
    fn conj(&self) -> Self;

    /// The value as a rational, if it lies in Q.
    fn to_rational(&self) -> Option<Rational>;

    /// Distinct roots of `p` lying in this field (in the same extension as
    /// the coefficients of `p`).
    fn roots_in_field(p: &UniPoly<Self>) -> Vec<Self>;
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn roots_in_field(p: &UniPoly<Self>) -> Vec<Self> {
        crate::roots::rational_roots(p)
    }
}
