//! Sylvester resultants by fraction-free elimination.

use super::multipoly::MultiPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` in `v`; rows hold coefficients from the
/// highest power down.
pub fn sylvester(f: &MultiPoly, g: &MultiPoly, v: Var) -> Vec<Vec<MultiPoly>> {
    let m = f.degree_in(v);
    let n = g.degree_in(v);
    let size = m + n;
    let fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MultiPoly::zero(); size];
        for (j, c) in fc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MultiPoly::zero(); size];
        for (j, c) in gc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss elimination; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &pivot) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// `Res_v(f, g)` as the raw Sylvester determinant.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if f.degree_in(v) == 0 || g.degree_in(v) == 0 || f.is_zero() || g.is_zero() {
        return Err(Error::DegreeZero(v.to_string()));
    }
    Ok(bareiss_det(sylvester(f, g, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::poly;

    #[test]
    fn small_cases() {
        assert!(resultant(&poly("x^2-1"), &poly("x-1"), Var::X).unwrap().is_zero());
        assert_eq!(resultant(&poly("x^2+1"), &poly("x-1"), Var::X).unwrap(), poly("2"));
        assert!(resultant(&poly("x^2+1"), &poly("3"), Var::X).is_err());
    }

    #[test]
    fn eliminates_a_variable() {
        // x = y and x^2 = 2 give y^2 - 2.
        let r = resultant(&poly("x - y"), &poly("x^2 - 2"), Var::X).unwrap();
        assert_eq!(r.numeric_primitive(), poly("y^2 - 2"));
    }
}
