//! Checkers for the classical Hankel identities: the a/b transfer lemma,
//! the staircase-product evaluations for continued fractions with
//! alternating zero levels, and the shift identities relating `D^S`,
//! `D^{S+1}`, `D^{S+2}` and `D^{{1} u (S+2)}`.

use num_traits::Zero;
use thiserror::Error;

use crate::exact::ExactError;
use crate::genfun::{dyck_gf_recursive, GFRequest, GenFunError};
use crate::hankel::{hankel_det, HankelError, HankelSpec};
use crate::paths::HeightSet;
use crate::{rat, QSeries, Rat};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("identity `{name}` fails at n = {n}: {lhs} vs {rhs}")]
    Identity {
        name: String,
        n: usize,
        lhs: Box<Rat>,
        rhs: Box<Rat>,
    },
    #[error(transparent)]
    Hankel(#[from] HankelError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    GenFun(#[from] GenFunError),
}

fn expect_eq(name: &str, n: usize, lhs: Rat, rhs: Rat) -> Result<(), CheckError> {
    if lhs != rhs {
        return Err(CheckError::Identity {
            name: name.to_string(),
            n,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        });
    }
    Ok(())
}

fn h(series: &QSeries, shift: usize, n: usize) -> Result<Rat, CheckError> {
    Ok(hankel_det(&HankelSpec { series, shift, n })?)
}

fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = rat(1);
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// For `F = 1 / (1 - a x - b x G)` with `b != 0`, verify for `1 <= n <= n_max`:
///
/// * `H_n(F) = b^{n-1} H_{n-1}^1(G)`
/// * `H_n^1(F) = H_n(a + b G)`
///
/// The first identity carries the shifted index `n - 1`; the transfer drops
/// one matrix dimension when passing from `F` to `G`.
pub fn check_ab_lemma(a: &Rat, b: &Rat, g: &QSeries, n_max: usize) -> Result<(), CheckError> {
    if b.is_zero() {
        return Err(CheckError::BadParameter("b must be nonzero".into()));
    }
    let order = g.order();
    // F = 1 / (1 - a x - b x G)
    let mut den = QSeries::one(order);
    den = den.sub(&QSeries::monomial(a.clone(), 1, order))?;
    den = den.sub(&g.mul_monomial(b, 1))?;
    let f = den.reciprocal()?;
    // a + b G
    let scaled = {
        let mut coeffs = g.scale(b).coeffs().to_vec();
        coeffs[0] += a;
        QSeries::from_coeffs(coeffs)
    };

    for n in 1..=n_max {
        let lhs = h(&f, 0, n)?;
        let rhs = pow(b, n - 1) * h(g, 1, n - 1)?;
        expect_eq("H_n(F) = b^{n-1} H^1_{n-1}(G)", n, lhs, rhs)?;

        let lhs = h(&f, 1, n)?;
        let rhs = h(&scaled, 0, n)?;
        expect_eq("H^1_n(F) = H_n(a + bG)", n, lhs, rhs)?;
    }
    Ok(())
}

/// Expand the continued fraction
/// `F = 1 / (1 - a_1 x - b_1 x / (1 - a_2 x - b_2 x / (...)))`
/// to the given order. The provided levels must comfortably exceed the
/// order, so the unexpanded tail cannot influence the truncation.
fn expand_cf(a: &[Rat], b: &[Rat], order: usize) -> Result<QSeries, CheckError> {
    if a.len() != b.len() {
        return Err(CheckError::BadParameter(
            "level sequences must have equal length".into(),
        ));
    }
    if a.len() < order + 2 {
        return Err(CheckError::BadParameter(format!(
            "need at least {} levels for order {order}",
            order + 2
        )));
    }
    let mut t = QSeries::zero(order);
    for i in (0..a.len()).rev() {
        let mut den = QSeries::one(order);
        den = den.sub(&QSeries::monomial(a[i].clone(), 1, order))?;
        den = den.sub(&t.mul_monomial(&b[i], 1))?;
        t = den.reciprocal()?;
    }
    Ok(t)
}

/// Staircase product evaluations for continued fractions whose level
/// coefficients vanish on alternating levels (1-based indexing):
///
/// * `a_i = 0` for even `i`:  `H_n(F) = prod_{j<n} (b_{2j-1} b_{2j})^{n-j}`
/// * `a_i = 0` for odd `i`:   `H^1_n(F) = b_1^n prod_{j<n} (b_{2j} b_{2j+1})^{n-j}`
///
/// Empty products (n = 1 in the first form) evaluate to 1.
pub fn check_sfraction_products(a: &[Rat], b: &[Rat], n_max: usize) -> Result<(), CheckError> {
    let order = 2 * n_max;
    let f = expand_cf(a, b, order)?;
    let even_zero = a.iter().skip(1).step_by(2).all(|v| v.is_zero());
    let odd_zero = a.iter().step_by(2).all(|v| v.is_zero());
    if !even_zero && !odd_zero {
        return Err(CheckError::BadParameter(
            "neither parity of levels is identically zero".into(),
        ));
    }
    let b1 = |i: usize| -> &Rat { &b[i - 1] }; // 1-based access

    if even_zero {
        for n in 1..=n_max {
            let mut rhs = rat(1);
            for j in 1..n {
                rhs *= pow(&(b1(2 * j - 1) * b1(2 * j)), n - j);
            }
            let lhs = h(&f, 0, n)?;
            expect_eq("staircase product, ordinary", n, lhs, rhs)?;
        }
    }
    if odd_zero {
        for n in 1..=n_max {
            let mut rhs = pow(b1(1), n);
            for j in 1..n {
                rhs *= pow(&(b1(2 * j) * b1(2 * j + 1)), n - j);
            }
            let lhs = h(&f, 1, n)?;
            expect_eq("staircase product, shifted", n, lhs, rhs)?;
        }
    }
    Ok(())
}

/// Shift identities for avoidance sets, for `1 <= n <= n_max`:
///
/// * `H_n(D^{{1} u (S+2)}) = H_n(D^{S+2})`
/// * `H_n(D^{S+2}) = H_{n-1}(D^S)`
/// * `H_n^1(D^{S+1}) = H_n(D^S)`
///
/// `S` must consist of positive heights. Periodic sets are supported when
/// `{1} u (S+2)` is again the same periodic set (i.e. `1 in S+2`), which is
/// the case in every instance exercised here.
pub fn check_shift_identities(set: &HeightSet, n_max: usize) -> Result<(), CheckError> {
    if let HeightSet::Finite(values) = set {
        if values.iter().any(|&v| v <= 0) {
            return Err(CheckError::BadParameter(
                "shift identities need positive heights".into(),
            ));
        }
    }
    let order = 2 * n_max;
    let build = |s: &HeightSet| -> Result<QSeries, CheckError> {
        Ok(dyck_gf_recursive(
            &GFRequest::new(s.clone(), order).map_err(CheckError::from)?,
        )?)
    };
    let base = build(set)?;
    let plus1 = build(&set.shifted(1))?;
    let plus2_set = set.shifted(2);
    let plus2 = build(&plus2_set)?;
    let with_one = plus2_set.with_inserted(1).ok_or_else(|| {
        CheckError::BadParameter(
            "adjoining height 1 to this periodic set leaves the representable class".into(),
        )
    })?;
    let union = build(&with_one)?;

    for n in 1..=n_max {
        expect_eq(
            "H_n(D^{{1} u (S+2)}) = H_n(D^{S+2})",
            n,
            h(&union, 0, n)?,
            h(&plus2, 0, n)?,
        )?;
        expect_eq(
            "H_n(D^{S+2}) = H_{n-1}(D^S)",
            n,
            h(&plus2, 0, n)?,
            h(&base, 0, n - 1)?,
        )?;
        expect_eq(
            "H^1_n(D^{S+1}) = H_n(D^S)",
            n,
            h(&plus1, 1, n)?,
            h(&base, 0, n)?,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::catalan_series;

    #[test]
    fn ab_lemma_catalan_case() {
        // a = 0, b = 1, G = c reproduces F = c; all values 1.
        let g = catalan_series(13);
        check_ab_lemma(&rat(0), &rat(1), &g, 6).unwrap();
    }

    #[test]
    fn ab_lemma_rank_one_case() {
        // a = 1, b = 1, G = 0 gives F = 1/(1-x), whose Hankel matrices are
        // singular from n = 2 on.
        let g = QSeries::zero(13);
        check_ab_lemma(&rat(1), &rat(1), &g, 6).unwrap();
        let mut den = QSeries::one(13);
        den = den.sub(&QSeries::monomial(rat(1), 1, 13)).unwrap();
        let f = den.reciprocal().unwrap();
        assert_eq!(h(&f, 0, 1).unwrap(), rat(1));
        assert_eq!(h(&f, 0, 2).unwrap(), rat(0));
        assert_eq!(h(&f, 0, 5).unwrap(), rat(0));
    }

    #[test]
    fn ab_lemma_rejects_zero_b() {
        let g = catalan_series(8);
        assert!(matches!(
            check_ab_lemma(&rat(0), &rat(0), &g, 2),
            Err(CheckError::BadParameter(_))
        ));
    }

    #[test]
    fn sfraction_all_zero_levels_is_catalan() {
        // a = 0, b = 1 everywhere: F = c and every product is 1.
        let depth = 14;
        let a = vec![rat(0); depth];
        let b = vec![rat(1); depth];
        check_sfraction_products(&a, &b, 5).unwrap();
    }

    #[test]
    fn sfraction_first_weight_two() {
        let depth = 14;
        let a = vec![rat(0); depth];
        let mut b = vec![rat(1); depth];
        b[0] = rat(2);
        check_sfraction_products(&a, &b, 5).unwrap();
    }

    #[test]
    fn shift_identities_trivial_set() {
        check_shift_identities(&HeightSet::finite([]), 5).unwrap();
    }

    #[test]
    fn shift_identities_small_finite_set() {
        check_shift_identities(&HeightSet::finite([1]), 5).unwrap();
        check_shift_identities(&HeightSet::finite([2]), 5).unwrap();
        check_shift_identities(&HeightSet::finite([1, 3]), 4).unwrap();
    }

    #[test]
    fn shift_identities_periodic_example() {
        let s = HeightSet::periodic(5, [1, 2, 4]).unwrap();
        check_shift_identities(&s, 6).unwrap();
    }
}
