//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn check_rectangular(rows: &[Vec<Rational>]) -> Result<usize> {
    let width = rows.first().map_or(0, Vec::len);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::RaggedMatrix {
                row,
                expected: width,
                found: r.len(),
            });
        }
    }
    Ok(width)
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows end up at the bottom.
fn rref_in_place(m: &mut [Vec<Rational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        if !inv.is_one() {
            for x in m[row][col..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Exact rank of a matrix given as rows. The empty matrix has rank 0.
pub fn rank(rows: &[Vec<Rational>]) -> Result<usize> {
    let width = check_rectangular(rows)?;
    let mut m = rows.to_vec();
    Ok(rref_in_place(&mut m, width).len())
}

/// Reduced row echelon form with zero rows dropped.
pub fn rref(rows: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let width = check_rectangular(rows)?;
    let mut m = rows.to_vec();
    let r = rref_in_place(&mut m, width).len();
    m.truncate(r);
    Ok(m)
}

/// Basis of the right null space `{x : Mx = 0}` of a matrix with `width`
/// columns, one basis vector per free column, in column order.
pub fn null_space(rows: &[Vec<Rational>], width: usize) -> Result<Vec<Vec<Rational>>> {
    let found = check_rectangular(rows)?;
    if !rows.is_empty() && found != width {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {found} columns, expected {width}"
        )));
    }
    let mut m = rows.to_vec();
    let pivots = rref_in_place(&mut m, width);
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); width];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Rank of the differences `p - p0` over a list of points; 0 for fewer than
/// two points. This is the dimension of their affine hull.
pub fn affine_rank<'a, I>(points: I) -> usize
where
    I: IntoIterator<Item = &'a [Rational]>,
{
    let mut it = points.into_iter();
    let Some(base) = it.next() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = it
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs).expect("points share a common length")
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
