//! Canonical quadratic functional equations `F = x^d / (u + x^k v F)` and
//! their unique power-series solutions.

use crate::coeff::Coeff;
use crate::exact::{ExactError, RatFun, Series};

/// `F = x^d / (u + x^k v F)` with `u(0) != 0`, `v(0) != 0`, both pole-free
/// at the origin, `k >= 1`. The unique series solution has valuation `d`.
#[derive(Clone, PartialEq)]
pub struct QuadEq<C: Coeff> {
    d: usize,
    k: usize,
    u: RatFun<C>,
    v: RatFun<C>,
}

impl<C: Coeff> QuadEq<C> {
    pub fn new(d: usize, k: usize, u: RatFun<C>, v: RatFun<C>) -> Result<Self, ExactError> {
        if k == 0 {
            return Err(ExactError::InvalidEquation("k must be positive".into()));
        }
        for (name, f) in [("u", &u), ("v", &v)] {
            if !f.is_finite_at_origin() {
                return Err(ExactError::InvalidEquation(format!(
                    "{name} has a pole at the origin"
                )));
            }
            if f.eval0()?.is_zero() {
                return Err(ExactError::InvalidEquation(format!(
                    "{name} vanishes at the origin"
                )));
            }
        }
        Ok(QuadEq { d, k, u, v })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &RatFun<C> {
        &self.u
    }

    pub fn v(&self) -> &RatFun<C> {
        &self.v
    }

    pub fn u0(&self) -> C {
        self.u.eval0().expect("u is finite at the origin")
    }

    pub fn solve(&self, order: usize) -> Result<Series<C>, ExactError> {
        solve_quadratic(self, order)
    }

    /// `F (u + x^k v F) - x^d`, identically zero (up to truncation) for the
    /// solution series.
    pub fn residual(&self, f: &Series<C>) -> Result<Series<C>, ExactError> {
        let order = f.order();
        let u = self.u.series(order)?;
        let v = self.v.series(order)?;
        let den = u.add(&v.mul(f)?.mul_monomial(&C::one(), self.k))?;
        let xd = Series::monomial(C::one(), self.d, order);
        f.mul(&den)?.sub(&xd)
    }
}

impl<C: Coeff> std::fmt::Debug for QuadEq<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "F = x^{} / ({} + x^{} ({}) F)",
            self.d, self.u, self.k, self.v
        )
    }
}

/// Unique power-series solution of a canonical quadratic equation, truncated
/// at `order`.
///
/// Fixed-point iteration `F <- x^d / (u + x^k v F)` from `F = 0`, run for
/// exactly `order + 2` rounds; every round is contractive by at least one
/// order in `x`, so the truncation is exact afterwards.
pub fn solve_quadratic<C: Coeff>(eq: &QuadEq<C>, order: usize) -> Result<Series<C>, ExactError> {
    let u = eq.u.series(order)?;
    let v = eq.v.series(order)?;
    let one = C::one();
    let mut f = Series::zero(order);
    for _ in 0..order + 2 {
        let den = u.add(&v.mul(&f)?.mul_monomial(&one, eq.k))?;
        f = den.reciprocal()?.mul_monomial(&one, eq.d);
    }
    debug_assert!(eq.residual(&f)?.is_zero());
    Ok(f)
}

/// Unique power-series solution of `G = num / (den + coef * G)` where
/// `den(0) != 0`, `coef` vanishes at the origin and `num` is pole-free.
/// Same contraction argument as [`solve_quadratic`].
pub fn moebius_solve<C: Coeff>(
    num: &RatFun<C>,
    den: &RatFun<C>,
    coef: &RatFun<C>,
    order: usize,
) -> Result<Series<C>, ExactError> {
    if !den.is_finite_at_origin() || den.eval0()?.is_zero() {
        return Err(ExactError::InvalidEquation(
            "moebius denominator must be a unit at the origin".into(),
        ));
    }
    if !coef.is_finite_at_origin() || !coef.eval0()?.is_zero() {
        return Err(ExactError::InvalidEquation(
            "moebius coefficient must vanish at the origin".into(),
        ));
    }
    let num = num.series(order)?;
    let den = den.series(order)?;
    let coef = coef.series(order)?;
    let mut g = Series::zero(order);
    for _ in 0..order + 2 {
        g = num.mul(&den.add(&coef.mul(&g)?)?.reciprocal()?)?;
    }
    Ok(g)
}

/// Rewrite a relation `F = num / (den + coef * F)` (arbitrary rational
/// functions) in canonical [`QuadEq`] form.
///
/// Common powers of `x` are cancelled first; afterwards the denominator must
/// be a unit at the origin and the coefficient must still vanish there. The
/// new `d` is the valuation of the numerator, whose unit part is divided out.
pub fn canonicalize_linear_fractional<C: Coeff>(
    num: &RatFun<C>,
    den: &RatFun<C>,
    coef: &RatFun<C>,
) -> Result<QuadEq<C>, ExactError> {
    if num.is_zero() {
        return Err(ExactError::Canonicalization(
            "numerator is identically zero".into(),
        ));
    }
    if den.is_zero() || coef.is_zero() {
        return Err(ExactError::Canonicalization(
            "degenerate linear-fractional relation".into(),
        ));
    }
    let vals = [
        num.valuation().unwrap(),
        den.valuation().unwrap(),
        coef.valuation().unwrap(),
    ];
    let shift = *vals.iter().min().unwrap();
    let (num, den, coef) = (
        num.mul_xpow(-shift),
        den.mul_xpow(-shift),
        coef.mul_xpow(-shift),
    );
    if den.valuation() != Some(0) {
        return Err(ExactError::Canonicalization(
            "denominator vanishes at the origin after cancellation".into(),
        ));
    }
    let d = num.valuation().unwrap();
    let k = coef.valuation().unwrap();
    if k < 1 {
        return Err(ExactError::Canonicalization(
            "coefficient of F does not vanish at the origin".into(),
        ));
    }
    let unit = num.mul_xpow(-d);
    let u = &den / &unit;
    let v = &coef.mul_xpow(-k) / &unit;
    QuadEq::new(d as usize, k as usize, u, v)
}
