//! Exact Gaussian elimination over the rationals, enough for the small
//! rank computations of this crate (spans of at most a few hundred vectors).

use crate::scalar::Rat;
use num_traits::Zero;

/// Rank of the row span of `rows`. Consumes the matrix.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let pv = rows[r][col];
        for x in rows[r].iter_mut() {
            *x /= pv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= f * y;
                }
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

/// Rank of a set of sparse vectors given as (column index, coefficient) lists.
pub fn sparse_rank(vectors: &[Vec<(usize, Rat)>], ncols: usize) -> usize {
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rat::zero(); ncols];
            for &(j, c) in v {
                row[j] += c;
            }
            row
        })
        .collect();
    rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn rank_of_identity() {
        let rows = (0..4)
            .map(|i| (0..4).map(|j| rat((i == j) as i64)).collect())
            .collect();
        assert_eq!(rank(rows), 4);
    }
}
