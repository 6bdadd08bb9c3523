//! Small dense linear algebra over the rationals.

use num_traits::Zero;

use crate::geometry::Rational;

/// Rank by fraction-exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    row_echelon(rows.to_vec()).0
}

/// Reduced row echelon form; returns the rank and the reduced matrix.
pub fn row_echelon(mut m: Vec<Vec<Rational>>) -> (usize, Vec<Vec<Rational>>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let pivot = m[pivot_row][col].clone();
        for v in m[pivot_row].iter_mut() {
            *v /= &pivot;
        }
        for r in 0..m.len() {
            if r == pivot_row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_values = m[pivot_row][col..cols].to_vec();
            for (target, p) in m[r][col..cols].iter_mut().zip(&pivot_values) {
                *target -= &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    (pivot_row, m)
}

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Solves `m·x = b` by Cramer's rule; `None` when `m` is singular.
pub fn solve3(m: &[[Rational; 3]; 3], b: &[Rational; 3]) -> Option<[Rational; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return None;
    }
    let column = |c: usize| {
        let mut mc = m.clone();
        for r in 0..3 {
            mc[r][c] = b[r].clone();
        }
        det3(&mc) / &det
    };
    Some([column(0), column(1), column(2)])
}
