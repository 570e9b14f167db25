//! Tiny dense exact linear algebra; matrices here are at most 4x4.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Determinant of a square matrix by fraction-exact Gaussian elimination.
pub fn det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut result = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        let p = m[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    result
}

/// Reduced row echelon form; returns the nonzero rows.
pub fn row_reduce(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut lead = 0;
    for col in 0..ncols {
        let Some(pivot) = (lead..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot, lead);
        let p = m[lead][col].clone();
        for c in 0..ncols {
            m[lead][c] = &m[lead][c] / &p;
        }
        for r in 0..m.len() {
            if r == lead || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..ncols {
                let delta = &factor * &m[lead][c];
                m[r][c] -= delta;
            }
        }
        lead += 1;
        if lead == m.len() {
            break;
        }
    }
    m.truncate(lead);
    m
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    row_reduce(rows).len()
}

/// Normal of the hyperplane spanned by `k - 1` difference vectors in `k`
/// dimensions (generalized cross product). Zero iff the vectors are dependent.
pub fn normal(diffs: &[Vec<Rational>]) -> Vec<Rational> {
    let k = diffs.len() + 1;
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<Rational>> = diffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}
