//! Fraction-free (Bareiss) elimination over an exact integer scalar.

use crate::scalar::Scalar;

/// Rank of the matrix with the given rows over the rationals.
///
/// Every intermediate entry is a minor of the input, so each division by
/// the previous pivot is exact and no fractions appear.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let nrows = rows.len();
    let mut prev = S::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pivot) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = p.clone() * row[j].clone() - factor.clone() * pivot_row[j].clone();
                row[j] = v / prev.clone();
            }
            row[col] = S::zero();
        }
        prev = p;
        r += 1;
    }
    r
}
