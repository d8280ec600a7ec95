//! Small exact linear algebra over a [`Field`]: reduced row echelon form,
//! rank, span membership, and inversion. Pivoting is deterministic
//! (first nonzero column, rows in given order).

use crate::coeff::Field;

/// Reduced row echelon form in place; returns the pivot columns.
/// Zero rows are removed.
pub(crate) fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = field.inv(&rows[rank][col]).expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let t = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub(crate) fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m);
    m.len()
}

/// Is `v` in the row span of `rows`?
pub(crate) fn in_span<F: Field>(field: &F, rows: &[Vec<F::Elem>], v: &[F::Elem]) -> bool {
    let mut m = rows.to_vec();
    m.push(v.to_vec());
    rank(field, &m) == rank(field, rows)
}

/// Inverse of a square matrix, or None when singular.
pub(crate) fn invert<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        let mut r = row.clone();
        for j in 0..n {
            r.push(if i == j { field.one() } else { field.zero() });
        }
        aug.push(r);
    }
    let pivots = rref(field, &mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::PrimeField;

    #[test]
    fn rref_and_rank() {
        let f = PrimeField::new(7, 1).unwrap();
        let rows = vec![vec![1u64, 6, 0], vec![1, 0, 6]];
        assert_eq!(rank(&f, &rows), 2);
        // x1 - x2 = (x0 - x2) - (x0 - x1) is in the span.
        assert!(in_span(&f, &rows, &[0, 1, 6]));
        assert!(!in_span(&f, &rows, &[0, 0, 1]));
    }

    #[test]
    fn invert_3x3() {
        let f = PrimeField::new(7, 1).unwrap();
        // Rows: x0 - x1, x0 - x2, x0 (the adapted frame of a J-type flat).
        let m = vec![vec![1u64, 6, 0], vec![1, 0, 6], vec![1, 0, 0]];
        let inv = invert(&f, &m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = f.zero();
                for k in 0..3 {
                    s = f.add(&s, &f.mul(&m[i][k], &inv[k][j]));
                }
                assert_eq!(s, if i == j { f.one() } else { f.zero() });
            }
        }
        let singular = vec![vec![1u64, 6, 0], vec![2, 5, 0], vec![0, 0, 1]];
        assert!(invert(&f, &singular).is_none());
    }
}
