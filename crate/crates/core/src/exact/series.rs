//! Power series truncated at a stated order.
//!
//! A `Series` of order `N` stores exactly the coefficients of `x^0..x^N`;
//! arithmetic never claims anything beyond index `N`. Binary operations
//! require equal orders and report a mismatch as an error.

use std::fmt;

use crate::coeff::Coeff;
use crate::exact::{ExactError, Poly};

#[derive(Clone, PartialEq)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::monomial(C::one(), 0, order)
    }

    /// `c * x^k + O(x^{order+1})`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Takes ownership of a full coefficient list of length `order + 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        Series { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Series::from_coeffs(values.iter().map(|&v| C::from_int(v)).collect())
    }

    /// Truncation of a polynomial.
    pub fn from_poly_truncated(p: &Poly<C>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        for i in 0..=order {
            coeffs.push(p.coeff(i));
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; panics beyond the truncation order.
    pub fn coeff(&self, i: usize) -> C {
        assert!(
            i < self.coeffs.len(),
            "coefficient {i} requested from a series of order {}",
            self.order()
        );
        self.coeffs[i].clone()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, rhs: &Self) -> Result<(), ExactError> {
        if self.order() != rhs.order() {
            return Err(ExactError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplicative inverse of a unit series:
    /// `c_0 = 1/a_0`, `c_n = -(sum_{k=1}^{n} a_k c_{n-k}) / a_0`.
    pub fn reciprocal(&self) -> Result<Self, ExactError> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(ExactError::ZeroConstantTerm);
        }
        let inv0 = C::one() / a0.clone();
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = inv0.clone();
        for i in 1..=n {
            let mut acc = C::zero();
            for k in 1..=i {
                if self.coeffs[k].is_zero() || out[i - k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * out[i - k].clone();
            }
            out[i] = -(acc * inv0.clone());
        }
        Ok(Series { coeffs: out })
    }

    /// Multiply by `c * x^k`, truncating at the original order.
    pub fn mul_monomial(&self, c: &C, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        if !c.is_zero() {
            for i in 0..=n.saturating_sub(k) {
                if k + i <= n {
                    out[k + i] = self.coeffs[i].clone() * c.clone();
                }
            }
        }
        Series { coeffs: out }
    }

    /// Divide by `x^k`: drops the low `k` coefficients (which must be zero)
    /// and reduces the order by `k`.
    pub fn div_monomial(&self, k: usize) -> Self {
        assert!(k <= self.order(), "cannot drop below the constant term");
        assert!(
            self.coeffs[..k].iter().all(|c| c.is_zero()),
            "div_monomial would discard nonzero low-order coefficients"
        );
        Series {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Shorten to a lower order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first differing coefficient over the common range.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?} + O(x^{})", self.coeffs, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::{rat, QPoly, QRatFun, QSeries};

    #[test]
    fn reciprocal_of_one_plus_x() {
        let a = QSeries::from_ints(&[1, 1, 0, 0]);
        let r = a.reciprocal().unwrap();
        assert_eq!(r, QSeries::from_ints(&[1, -1, 1, -1]));
        let prod = a.mul(&r).unwrap();
        assert_eq!(prod, QSeries::one(3));
    }

    #[test]
    fn zero_plus_anything() {
        let a = QSeries::from_ints(&[4, -1, 7]);
        assert_eq!(QSeries::zero(2).add(&a).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = QSeries::zero(3);
        let b = QSeries::zero(4);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn reciprocal_of_non_unit_is_an_error() {
        assert!(QSeries::from_ints(&[0, 1]).reciprocal().is_err());
    }

    #[test]
    fn expansion_of_simple_rational_functions() {
        let f = QRatFun::new(QPoly::one(), QPoly::from_ints(&[1, -1])).unwrap();
        assert_eq!(f.series(4).unwrap(), QSeries::from_ints(&[1, 1, 1, 1, 1]));
        let g = QRatFun::new(QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[1, -1])).unwrap();
        assert_eq!(g.series(3).unwrap(), QSeries::from_ints(&[1, 2, 2, 2]));
    }

    #[test]
    fn expansion_at_pole_is_an_error() {
        let f = super::super::geom_sum::<crate::Rat>(0, -3);
        assert!(f.series(5).is_err());
    }

    #[test]
    fn catalan_square_via_coefficient_shift() {
        // c = 1 + x c^2 means the coefficients of c^2 are the Catalan numbers
        // shifted down by one. Using c = 1,1,2,5,14 the oracle gives 1,2,5,14.
        let catalan = [1i64, 1, 2, 5, 14];
        let c = QSeries::from_ints(&catalan[..4]);
        let c2 = c.mul(&c).unwrap();
        assert_eq!(c2, QSeries::from_ints(&catalan[1..]));
    }

    #[test]
    fn monomial_shifts() {
        let a = QSeries::from_ints(&[1, 2, 3]);
        assert_eq!(a.mul_monomial(&rat(1), 1), QSeries::from_ints(&[0, 1, 2]));
        let b = QSeries::from_ints(&[0, 5, 6]);
        assert_eq!(b.div_monomial(1), QSeries::from_ints(&[5, 6]));
    }
}
