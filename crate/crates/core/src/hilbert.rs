//! Rational Hilbert series of `kQ` and `A` from the transfer matrix.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactla::{polymat_resolvent, IntPoly};
use crate::language::{dims, Cap};
use crate::presentation::Presentation;
use crate::quiver::Quiver;

/// `numerator / denominator` in lowest terms with `denominator(0) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalSeries {
    /// Reduces `num / den` to lowest terms. Panics if `den(0) = 0`.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(
            !den.coeff(0).is_zero(),
            "denominator must be a unit power series"
        );
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        );
        if den.coeff(0) < BigInt::zero() {
            num = -&num;
            den = -&den;
        }
        RationalSeries {
            numerator: num,
            denominator: den,
        }
    }

    pub fn zero() -> Self {
        RationalSeries {
            numerator: IntPoly::zero(),
            denominator: IntPoly::one(),
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// The first `n + 1` power-series coefficients, via the linear recurrence
    /// given by the denominator. Requires `denominator(0) = 1`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let den = self.denominator.coeffs();
        assert!(den[0].is_one(), "expansion needs denominator(0) = 1");
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = self.numerator.coeff(k);
            for (i, d) in den.iter().enumerate().skip(1).take(k) {
                v -= d * &c[k - i];
            }
            c.push(v);
        }
        c
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

pub fn expand(s: &RationalSeries, n: usize) -> Vec<BigInt> {
    s.expand(n)
}

/// `sum_n (number of paths of length n) t^n = 1^T (I - tM)^{-1} 1`.
pub fn hilbert_quiver(q: &Quiver) -> RationalSeries {
    let r = polymat_resolvent(q.adjacency()).expect("adjacency matrices are square");
    RationalSeries::new(r.adj_sum, r.det)
}

/// `H_A(t) = sum_{n<d} dim A_n t^n + t^d H_Q(t)`, using that paths of length
/// `n` are in bijection with normal words of length `n + d`.
pub fn hilbert_algebra(p: &Presentation, q: &Quiver, cap: Cap) -> Result<RationalSeries> {
    let hq = hilbert_quiver(q);
    let d = q.d();
    let head = if d == 0 {
        IntPoly::zero()
    } else {
        IntPoly::new(dims(d - 1, p, cap)?.into_iter().map(BigInt::from).collect())
    };
    let num = &(&head * hq.denominator()) + &hq.numerator().shift(d);
    Ok(RationalSeries::new(num, hq.denominator().clone()))
}
