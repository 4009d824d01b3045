//! Exact linear algebra over Q: row reduction, rank, and square solves.
//! Used for graded-component dimension counts and for pinning classes
//! against the Poincare pairing.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Rank of a dense rational matrix (rows of equal length).
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = Rational::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..ncols {
                    let sub = &rows[r][c] * &f;
                    rows[i][c] -= sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solve the square system M x = rhs exactly. Returns None when M is
/// singular.
pub fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = Rational::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x *= inv.clone();
        }
        rhs[col] *= inv;
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..n {
                    let sub = &m[col][c] * &f;
                    m[i][c] -= sub;
                }
                let sub = &rhs[col] * &f;
                rhs[i] -= sub;
            }
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rank_and_solve() {
        let rows = vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
            vec![rat(0), rat(1)],
        ];
        assert_eq!(rank(rows), 2);

        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let x = solve(m, vec![rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);

        let singular = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve(singular, vec![rat(1), rat(1)]).is_none());
    }
}
