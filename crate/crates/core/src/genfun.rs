//! Generating functions for peak-height-restricted Dyck paths, built by
//! independent routes that cross-check one another:
//!
//! 1. first-return recursion on the avoidance set, iterated at series level;
//! 2. the m-layer continued fraction, composed symbolically as a chain of
//!    Moebius maps and solved as a canonical quadratic equation;
//! 3. the closed two-block composition for sets that allow a single residue
//!    class, simplified mechanically to a quadratic equation;
//! 4. exhaustive path enumeration (the [`crate::paths`] oracle).

use thiserror::Error;

use crate::exact::{canonicalize_linear_fractional, geom_sum, solve_quadratic, ExactError, Poly};
use crate::paths::{count_avoiding, HeightSet, PathsError};
use crate::{rat, QPoly, QQuadEq, QRatFun, QSeries, Rat};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenFunError {
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Paths(#[from] PathsError),
    #[error("cross-validation failed for {what}: first mismatch at x^{index} ({left} vs {right})")]
    CrossValidation {
        what: String,
        index: usize,
        left: Box<Rat>,
        right: Box<Rat>,
    },
}

/// A generating-function request: which heights to avoid, and the truncation
/// order of the answer.
#[derive(Debug, Clone)]
pub struct GFRequest {
    pub set: HeightSet,
    pub order: usize,
}

impl GFRequest {
    pub fn new(set: HeightSet, order: usize) -> Result<Self, GenFunError> {
        if let HeightSet::Periodic { modulus, residues } = &set {
            if residues.len() as u32 == *modulus {
                return Err(GenFunError::InvalidRequest(
                    "periodic avoidance set must be a proper subset of the residues".into(),
                ));
            }
        }
        Ok(GFRequest { set, order })
    }
}

/// Catalan series by the convolution recurrence `C_{n+1} = sum C_i C_{n-i}`.
pub fn catalan_series(order: usize) -> QSeries {
    let mut c: Vec<Rat> = Vec::with_capacity(order + 1);
    c.push(rat(1));
    for n in 1..=order {
        let mut acc = rat(0);
        for i in 0..n {
            acc += &c[i] * &c[n - 1 - i];
        }
        c.push(acc);
    }
    QSeries::from_coeffs(c)
}

/// One first-return layer: `D^S = 1 / (1 + chi(1 in S) x - x D^{S-1})`.
fn layer(chi_one: bool, inner: &QSeries) -> Result<QSeries, ExactError> {
    let order = inner.order();
    let mut den = QSeries::one(order);
    if chi_one {
        den = den.add(&QSeries::monomial(rat(1), 1, order))?;
    }
    den = den.sub(&inner.mul_monomial(&rat(1), 1))?;
    den.reciprocal()
}

/// `D^S` by the first-return recursion.
///
/// Finite sets recurse on `S - 1` until no positive element remains and the
/// Catalan series closes the chain. Periodic sets come back to themselves
/// after `m` shifts, so the m-fold layer map is applied as a fixed-point
/// iteration; every layer is contractive by one order in `x`.
pub fn dyck_gf_recursive(req: &GFRequest) -> Result<QSeries, GenFunError> {
    let order = req.order;
    match &req.set {
        HeightSet::Finite(_) => {
            let mut chain = vec![req.set.clone()];
            while !chain.last().unwrap().positive_part_empty() {
                chain.push(chain.last().unwrap().shift_down_one());
            }
            let mut f = catalan_series(order);
            for set in chain.iter().rev().skip(1) {
                f = layer(set.contains(1), &f)?;
            }
            Ok(f)
        }
        HeightSet::Periodic { modulus, .. } => {
            let m = *modulus as usize;
            let chis: Vec<bool> = (0..m)
                .map(|j| {
                    // Layer j tests membership of 1 in S - j.
                    req.set.shifted(-(j as i64)).contains(1)
                })
                .collect();
            let passes = (order + 1).div_ceil(m) + 1;
            let mut f = QSeries::zero(order);
            for _ in 0..passes {
                for j in (0..m).rev() {
                    f = layer(chis[j], &f)?;
                }
            }
            Ok(f)
        }
    }
}

type PolyMat = [[QPoly; 2]; 2];

fn mat_mul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let entry = |i: usize, j: usize| -> QPoly { &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]) };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// The m-layer continued fraction for `D^{(m,V)}`, composed as a product of
/// Moebius maps `T -> 1 / (c_j - x T)` and canonicalized into quadratic form.
pub fn cf_equation(m: u32, residues: &HeightSet) -> Result<QQuadEq, GenFunError> {
    let (modulus, _) = match residues {
        HeightSet::Periodic { modulus, residues } => (*modulus, residues),
        HeightSet::Finite(_) => {
            return Err(GenFunError::InvalidRequest(
                "continued-fraction construction needs a periodic set".into(),
            ))
        }
    };
    if modulus != m {
        return Err(GenFunError::InvalidRequest(format!(
            "modulus mismatch: {m} vs {modulus}"
        )));
    }
    GFRequest::new(residues.clone(), 0)?;

    let mut mat: PolyMat = [[QPoly::one(), QPoly::zero()], [QPoly::zero(), QPoly::one()]];
    for j in 1..=m {
        let c_j = if residues.contains(j) {
            QPoly::from_ints(&[1, 1])
        } else {
            QPoly::one()
        };
        let layer: PolyMat = [
            [QPoly::zero(), QPoly::one()],
            [QPoly::from_ints(&[0, -1]), c_j],
        ];
        mat = mat_mul(&mat, &layer);
    }
    // D = (a D + b) / (c D + d)  =>  D = b / ((d - a) + c D)
    let num = QRatFun::from_poly(mat[0][1].clone());
    let den = QRatFun::from_poly(&mat[1][1] - &mat[0][0]);
    let coef = QRatFun::from_poly(mat[1][0].clone());
    Ok(canonicalize_linear_fractional(&num, &den, &coef)?)
}

/// `D^{(m,V)}` via the continued-fraction equation.
pub fn dyck_gf_continued_fraction(
    m: u32,
    residues: &HeightSet,
    order: usize,
) -> Result<QSeries, GenFunError> {
    let eq = cf_equation(m, residues)?;
    Ok(solve_quadratic(&eq, order)?)
}

/// Raw (pre-canonicalization) functional equation `F = p / (q + c F)` for
/// the series of paths whose peaks all lie in one residue class `r mod m`.
pub struct ResidueRelation {
    pub p: QRatFun,
    pub q: QRatFun,
    pub c: QRatFun,
}

/// Mechanical simplification of the two-block decomposition: the outer `r`
/// uniform layers and inner `m - r` uniform layers are closed forms in the
/// signed geometric sums, composed here as Moebius maps in exact rational
/// function arithmetic.
pub fn residue_relation(m: u32, r: u32) -> Result<ResidueRelation, GenFunError> {
    check_residue_params(m, r)?;
    let s = |n: i64| -> QRatFun { geom_sum(1, n) };
    let phi = |t: i64| -> [[QRatFun; 2]; 2] {
        [
            [s(t - 1), -&QRatFun::one()],
            [s(t), -&QRatFun::one()],
        ]
    };
    let shift = [
        [QRatFun::one(), -&QRatFun::one()],
        [QRatFun::zero(), QRatFun::one()],
    ];
    let mul = |a: &[[QRatFun; 2]; 2], b: &[[QRatFun; 2]; 2]| -> [[QRatFun; 2]; 2] {
        let entry =
            |i: usize, j: usize| -> QRatFun { &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]) };
        [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
    };
    let mat = mul(&mul(&phi(r as i64), &phi((m - r) as i64)), &shift);
    // F = (a F + b) / (c F + d)  =>  F = b / ((d - a) + c F)
    let p = mat[0][1].clone();
    let q = &mat[1][1] - &mat[0][0];
    let c = mat[1][0].clone();
    for (name, f) in [("p", &p), ("q", &q), ("c", &c)] {
        if !f.is_finite_at_origin() {
            return Err(GenFunError::InvalidRequest(format!(
                "{name} kept a pole at the origin; equation transcription is broken"
            )));
        }
    }
    if p.eval0().expect("pole-free") != rat(1) {
        return Err(GenFunError::InvalidRequest(
            "numerator is not a unit with constant term 1".into(),
        ));
    }
    Ok(ResidueRelation { p, q, c })
}

/// Canonical quadratic equation for the one-residue-class series.
pub fn residue_equation(m: u32, r: u32) -> Result<QQuadEq, GenFunError> {
    let rel = residue_relation(m, r)?;
    let eq = canonicalize_linear_fractional(&rel.p, &rel.q, &rel.c)?;
    debug_assert_eq!(eq.d(), 0);
    debug_assert_eq!(eq.k(), 1);
    Ok(eq)
}

fn check_residue_params(m: u32, r: u32) -> Result<(), GenFunError> {
    if m < 2 {
        return Err(GenFunError::InvalidRequest(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    if r == 0 || r > m {
        return Err(GenFunError::InvalidRequest(format!(
            "residue {r} outside 1..={m}"
        )));
    }
    Ok(())
}

/// The avoidance set `[m] \ {r}` for the one-residue-class series.
pub fn residue_avoidance_set(m: u32, r: u32) -> Result<HeightSet, GenFunError> {
    check_residue_params(m, r)?;
    HeightSet::all_residues_except(m, r).map_err(|e| GenFunError::InvalidRequest(e.to_string()))
}

/// Series of Dyck paths whose peak heights are all congruent to `r` mod `m`.
///
/// Solves the canonical quadratic equation and cross-validates the result
/// against the continued-fraction route (full order) and against exhaustive
/// path counts (up to semilength 10). A mismatch aborts with the first
/// differing coefficient.
pub fn residue_gf(m: u32, r: u32, order: usize) -> Result<QSeries, GenFunError> {
    let eq = residue_equation(m, r)?;
    let f = solve_quadratic(&eq, order)?;

    let set = residue_avoidance_set(m, r)?;
    let via_cf = dyck_gf_continued_fraction(m, &set, order)?;
    if let Some(i) = f.first_mismatch(&via_cf) {
        return Err(GenFunError::CrossValidation {
            what: format!("residue series ({m},{r}) vs continued fraction"),
            index: i,
            left: Box::new(f.coeff(i)),
            right: Box::new(via_cf.coeff(i)),
        });
    }

    for n in 0..=order.min(10) {
        let count = rat(count_avoiding(n, &set)? as i64);
        if f.coeff(n) != count {
            return Err(GenFunError::CrossValidation {
                what: format!("residue series ({m},{r}) vs path enumeration"),
                index: n,
                left: Box::new(f.coeff(n)),
                right: Box::new(count),
            });
        }
    }
    Ok(f)
}

/// Residual of the rationalized quadratic satisfied by the two parity
/// families. Only the odd-heights-avoided set `(2,{1})` and the
/// even-heights-avoided set `(2,{2})` have these closed forms; other sets
/// are rejected.
///
/// For odd heights avoided the closed form squares to
/// `(2x(1+x)F - x - 1)^2 = 1 - 2x - 3x^2`; for even heights avoided it is
/// `(2xF - x - 1)^2 = 1 - 2x - 3x^2`. The returned series is identically
/// zero exactly when `F` matches the closed form through its order.
pub fn closed_form_residual(f: &QSeries, set: &HeightSet) -> Result<QSeries, GenFunError> {
    let odd = HeightSet::periodic(2, [1]).expect("valid set");
    let even = HeightSet::periodic(2, [2]).expect("valid set");
    let order = f.order();
    let lhs_inner = if *set == odd {
        // 2x(1+x)F - x - 1
        let two_x_one_plus_x = QSeries::from_poly_truncated(&Poly::from_ints(&[0, 2, 2]), order);
        two_x_one_plus_x.mul(f)?
    } else if *set == even {
        f.mul_monomial(&rat(2), 1)
    } else {
        return Err(GenFunError::InvalidRequest(format!(
            "no rationalized closed form on record for the set {set}"
        )));
    };
    let x_plus_1 = QSeries::from_poly_truncated(&Poly::from_ints(&[1, 1]), order);
    let shifted = lhs_inner.sub(&x_plus_1)?;
    let square = shifted.mul(&shifted)?;
    let target = QSeries::from_poly_truncated(&Poly::from_ints(&[1, -2, -3]), order);
    Ok(square.sub(&target)?)
}
