//! Shared helpers for the integration suites.

use dyck_hankel::{rat, Rat};

/// Naive cofactor-expansion determinant, the independent oracle for the
/// fraction-free kernel. Exponential; fine for n <= 6.
pub fn cofactor_det(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    if n == 0 {
        return rat(1);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = rat(0);
    for (j, top) in mat[0].iter().enumerate() {
        let minor: Vec<Vec<Rat>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top * &cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[allow(dead_code)]
pub fn rats(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat(v)).collect()
}
