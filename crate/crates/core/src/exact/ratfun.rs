//! Normalized rational functions.
//!
//! Invariants maintained by every constructor and operation:
//! - the denominator is nonzero;
//! - numerator and denominator are coprime (monic polynomial gcd removed);
//! - scaling: if `den(0) != 0` the pair is scaled so `den(0) = 1`, otherwise
//!   so the lowest nonzero denominator coefficient is 1.
//!
//! The scaling pins a unique representative, so equality of rational
//! functions is plain structural comparison. This is what makes equation
//! cycle detection in the reduction chain decidable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::coeff::Coeff;
use crate::exact::{ExactError, Poly, Series};

#[derive(Clone, PartialEq)]
pub struct RatFun<C: Coeff> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> RatFun<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<C>, den: Poly<C>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.exact_div(&g), den.exact_div(&g));
        let c0 = den.constant_term();
        let scale = if c0.is_zero() {
            den.coeff(den.valuation().unwrap())
        } else {
            c0
        };
        if !scale.is_one() {
            let inv = C::one() / scale;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    /// `x^k`, negative `k` allowed.
    pub fn monomial_pow(k: i64) -> Self {
        if k >= 0 {
            RatFun::from_poly(Poly::monomial(C::one(), k as usize))
        } else {
            RatFun {
                num: Poly::one(),
                den: Poly::monomial(C::one(), (-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// No pole at the origin, i.e. the denominator does not vanish at 0.
    pub fn is_finite_at_origin(&self) -> bool {
        !self.den.constant_term().is_zero()
    }

    /// Value at the origin; errors on a pole.
    pub fn eval0(&self) -> Result<C, ExactError> {
        if !self.is_finite_at_origin() {
            return Err(ExactError::PoleAtOrigin);
        }
        Ok(self.num.constant_term() / self.den.constant_term())
    }

    /// Order of vanishing at the origin (negative for a pole), `None` for 0.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        let vd = self.den.valuation().unwrap() as i64;
        Some(vn - vd)
    }

    /// Multiply by `x^e` (negative `e` divides).
    pub fn mul_xpow(&self, e: i64) -> Self {
        if self.is_zero() {
            return RatFun::zero();
        }
        if e >= 0 {
            Self::reduced(self.num.shift_up(e as usize), self.den.clone())
        } else {
            Self::reduced(self.num.clone(), self.den.shift_up((-e) as usize))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Coefficients 0..=order of the power-series expansion.
    /// Errors when the function has a pole at the origin.
    pub fn series(&self, order: usize) -> Result<Series<C>, ExactError> {
        if !self.is_finite_at_origin() {
            return Err(ExactError::PoleAtOrigin);
        }
        let num = Series::from_poly_truncated(&self.num, order);
        let den = Series::from_poly_truncated(&self.den, order);
        num.mul(&den.reciprocal()?)
    }
}

/// Signed geometric sum `sum_{i=a}^{b} x^i := (x^a - x^{b+1}) / (1 - x)`,
/// for arbitrary integer limits. For `0 <= a <= b` this is the ordinary
/// polynomial `x^a + ... + x^b`; other limits give a rational function,
/// possibly with a pole at the origin.
pub fn geom_sum<C: Coeff>(a: i64, b: i64) -> RatFun<C> {
    // Clear negative exponents by multiplying top and bottom by x^s.
    let s = 0.max(-a.min(b + 1)) as usize;
    let lo = (a + s as i64) as usize;
    let hi = (b + 1 + s as i64) as usize;
    let num = &Poly::monomial(C::one(), lo) - &Poly::monomial(C::one(), hi);
    let den = Poly::monomial(C::one(), s);
    let one_minus_x = Poly::new(vec![C::one(), -C::one()]);
    RatFun::new(num, &den * &one_minus_x).expect("denominator is nonzero by construction")
}

impl<C: Coeff> fmt::Debug for RatFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<C: Coeff> fmt::Display for RatFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<C: Coeff> Add for &RatFun<C> {
    type Output = RatFun<C>;
    fn add(self, rhs: &RatFun<C>) -> RatFun<C> {
        RatFun::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<C: Coeff> Sub for &RatFun<C> {
    type Output = RatFun<C>;
    fn sub(self, rhs: &RatFun<C>) -> RatFun<C> {
        RatFun::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<C: Coeff> Mul for &RatFun<C> {
    type Output = RatFun<C>;
    fn mul(self, rhs: &RatFun<C>) -> RatFun<C> {
        RatFun::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`RatFun::checked_div`] to get an error.
impl<C: Coeff> Div for &RatFun<C> {
    type Output = RatFun<C>;
    fn div(self, rhs: &RatFun<C>) -> RatFun<C> {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl<C: Coeff> Neg for &RatFun<C> {
    type Output = RatFun<C>;
    fn neg(self) -> RatFun<C> {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
