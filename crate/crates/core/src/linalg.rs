//! Small exact linear algebra over the rationals: Gaussian elimination for
//! rank, determinants, and solving against a set of column vectors.

use num_traits::{One, Zero};

use crate::weights::{Rational, WeightVector};

/// Row-reduces `rows` in place; returns the pivot column of each pivot row.
fn eliminate(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let t = p * &f;
                    *x = &*x - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the span of the given vectors.
pub(crate) fn rank(vectors: &[WeightVector]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    eliminate(&mut rows).len()
}

/// Solves `sum_j x_j col_j = target` exactly. Returns `None` when the system
/// is inconsistent; free coefficients (dependent columns) are set to zero.
pub(crate) fn solve_columns(
    columns: &[WeightVector],
    target: &WeightVector,
) -> Option<Vec<Rational>> {
    let dim = target.dim();
    let k = columns.len();
    // augmented system, rows indexed by ambient coordinate
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c.get(i).clone()).collect();
            row.push(target.get(i).clone());
            row
        })
        .collect();
    let pivots = eliminate(&mut rows);
    // inconsistent iff a pivot lands in the augmented column
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][k].clone();
    }
    Some(x)
}

/// Determinant of a square rational matrix.
pub(crate) fn det(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut result = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            result = -result;
        }
        result *= m[c][c].clone();
        let inv = m[c][c].clone();
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &inv;
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    let t = p * &f;
                    *x = &*x - &t;
                }
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::rat;

    #[test]
    fn solve_and_rank() {
        let cols = vec![
            WeightVector::from_ints(&[2, 0, 1]),
            WeightVector::from_ints(&[1, 1, 0]),
        ];
        assert_eq!(rank(&cols), 2);
        let t = WeightVector::from_ints(&[3, 1, 1]);
        assert_eq!(solve_columns(&cols, &t), Some(vec![rat(1), rat(1)]));
        let off_span = WeightVector::from_ints(&[0, 0, 1]);
        assert_eq!(solve_columns(&cols, &off_span), None);
    }

    #[test]
    fn determinant() {
        let m = vec![
            vec![rat(0), rat(1)],
            vec![rat(1), rat(0)],
        ];
        assert_eq!(det(&m), rat(-1));
        let id = vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
        ];
        assert_eq!(det(&id), rat(1));
    }
}
