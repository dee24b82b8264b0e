//! Exact Gaussian elimination over [`Scalar`].

use num_traits::Zero;

use crate::scalar::Scalar;

/// Rank of the matrix whose rows are `rows`. All rows must share a length.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    row_echelon(rows.to_vec()).len()
}

/// Reduces `rows` to row echelon form and returns the nonzero rows.
pub fn row_echelon(mut rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let width = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == width), "ragged matrix");
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip().expect("nonzero pivot");
        for x in rows[pivot_row].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for r in rows.iter_mut().skip(pivot_row + 1) {
            if r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, pv) in r.iter_mut().zip(&pivot).skip(col) {
                *x -= &(&factor * pv);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}
