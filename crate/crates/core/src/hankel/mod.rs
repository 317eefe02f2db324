//! Exact Hankel and shifted-Hankel determinants.
//!
//! The kernel is single-step fraction-free (Bareiss) elimination. All
//! divisions in the schedule are exact, so running it over big integers
//! keeps every intermediate value integral; rational inputs fall back to
//! the same elimination over the field.

mod checks;
mod period;

pub use checks::{check_ab_lemma, check_sfraction_products, check_shift_identities, CheckError};
pub use period::{detect_periodicity, Periodicity};

use thiserror::Error;

use crate::coeff::Coeff;
use crate::exact::Series;
use crate::{Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error(
        "series order {order} too short for H_{n}^{shift} (needs at least {needed} coefficients)"
    )]
    Infeasible {
        order: usize,
        shift: usize,
        n: usize,
        needed: usize,
    },
}

/// A single determinant request: `H_n^k(A) = det(a_{i+j+k})_{0<=i,j<n}`.
#[derive(Debug, Clone, Copy)]
pub struct HankelSpec<'a> {
    pub series: &'a Series<Rat>,
    pub shift: usize,
    pub n: usize,
}

impl<'a> HankelSpec<'a> {
    fn check(&self) -> Result<(), HankelError> {
        if self.n == 0 {
            return Ok(());
        }
        let needed = 2 * (self.n - 1) + self.shift;
        if self.series.order() < needed {
            return Err(HankelError::Infeasible {
                order: self.series.order(),
                shift: self.shift,
                n: self.n,
                needed,
            });
        }
        Ok(())
    }
}

/// Fraction-free determinant of a square matrix over any exact scalar.
///
/// Zero pivots are handled by a row swap with sign tracking; when a pivot
/// column has no nonzero entry the determinant is zero and elimination
/// stops early.
pub fn bareiss_det<C: Coeff>(mut mat: Vec<Vec<C>>) -> C {
    let n = mat.len();
    if n == 0 {
        return C::one();
    }
    debug_assert!(mat.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    negate = !negate;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    mat[k][k].clone() * mat[i][j].clone() - mat[i][k].clone() * mat[k][j].clone();
                mat[i][j] = num / prev.clone();
            }
            mat[i][k] = C::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn hankel_matrix(series: &Series<Rat>, shift: usize, n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| series.coeff(i + j + shift)).collect())
        .collect()
}

/// Exact Hankel determinant; `H_0 = 1` by convention. Integer matrices take
/// the big-integer fast path.
pub fn hankel_det(spec: &HankelSpec) -> Result<Rat, HankelError> {
    spec.check()?;
    if spec.n == 0 {
        return Ok(Rat::from_integer(Int::from(1)));
    }
    let mat = hankel_matrix(spec.series, spec.shift, spec.n);
    if mat.iter().all(|row| row.iter().all(|v| v.is_integer())) {
        let imat: Vec<Vec<Int>> = mat
            .iter()
            .map(|row| row.iter().map(|v| v.numer().clone()).collect())
            .collect();
        Ok(Rat::from_integer(bareiss_det(imat)))
    } else {
        Ok(bareiss_det(mat))
    }
}

/// `(H_1^k, ..., H_{n_max}^k)` of a series.
pub fn hankel_sequence(
    series: &Series<Rat>,
    shift: usize,
    n_max: usize,
) -> Result<Vec<Rat>, HankelError> {
    (1..=n_max)
        .map(|n| hankel_det(&HankelSpec { series, shift, n }))
        .collect()
}
