//! Small exact linear algebra over the rationals.

use crate::Q;
use num_traits::{One, Zero};

/// Solves the square system `a x = b`. Returns `None` when `a` is singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = Q::one() / m[col][col].clone();
        for k in col..=n {
            m[col][k] = m[col][k].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let v = m[col][k].clone() * f.clone();
                    m[r][k] = m[r][k].clone() - v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Q>]) -> usize {
    let mut m = a.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / m[r][c].clone();
                for k in c..cols {
                    let v = m[r][k].clone() * f.clone();
                    m[i][k] = m[i][k].clone() - v;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    #[test]
    fn solves_two_by_two() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(1), q(2)]).unwrap();
        assert_eq!(x, vec![qf(1, 5), qf(3, 5)]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&a, &[q(1), q(1)]).is_none());
        assert_eq!(rank(&a), 1);
    }
}
