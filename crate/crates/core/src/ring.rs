//! The handful of ring operations needed to run the coordinate formulas
//! both on numbers and on polynomials in the moduli.

use sixlines_algebra::{Field, MultiPoly, QuadExt, Rational};

pub trait Ring: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    fn zero_like(&self) -> Self;

    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }

    /// Positive powers only.
    fn pow(&self, e: u32) -> Self {
        assert!(e >= 1, "Ring::pow needs a positive exponent");
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self);
        }
        out
    }

    /// `Σ c_i · x_i` with small integer coefficients.
    fn lin(terms: &[(i64, &Self)]) -> Self {
        let mut acc = terms[0].1.zero_like();
        for (c, x) in terms {
            acc = acc.add(&x.scale(&Rational::from_integer((*c).into())));
        }
        acc
    }
}

macro_rules! field_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn add(&self, o: &Self) -> Self {
                self.clone() + o
            }
            fn sub(&self, o: &Self) -> Self {
                self.clone() - o
            }
            fn mul(&self, o: &Self) -> Self {
                self.clone() * o
            }
            fn scale(&self, q: &Rational) -> Self {
                self.clone() * &<$t as Field>::from_rational(q.clone())
            }
            fn zero_like(&self) -> Self {
                <$t as num_traits::Zero>::zero()
            }
        }
    };
}
field_ring!(Rational);
field_ring!(QuadExt);

impl Ring for MultiPoly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, q: &Rational) -> Self {
        MultiPoly::scale(self, q)
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
}

/// 3×3 determinant by cofactor expansion.
pub fn det3<T: Ring>(m: [[&T; 3]; 3]) -> T {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m[r1][c1].mul(m[r2][c2]).sub(&m[r1][c2].mul(m[r2][c1]));
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .sub(&m[0][1].mul(&minor(1, 2, 0, 2)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}
