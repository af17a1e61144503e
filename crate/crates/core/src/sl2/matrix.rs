//! 2×2 matrices over the rational-function field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{ratfun, RatFun, Var};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMat2 {
    e: [[RatFun; 2]; 2],
}

impl SymMat2 {
    pub fn new(a: RatFun, b: RatFun, c: RatFun, d: RatFun) -> Self {
        SymMat2 { e: [[a, b], [c, d]] }
    }

    /// Builds a matrix and checks that its determinant is 1.
    pub fn unimodular(a: RatFun, b: RatFun, c: RatFun, d: RatFun) -> Result<Self> {
        let m = SymMat2::new(a, b, c, d);
        let det = m.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    /// Parses four entries in row order.
    pub fn parse(entries: [&str; 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(|s| s.parse::<RatFun>());
        Ok(SymMat2::new(a?, b?, c?, d?))
    }

    /// Panicking variant for literal tables.
    pub fn lit(entries: [&str; 4]) -> Self {
        let [a, b, c, d] = entries.map(ratfun);
        SymMat2::new(a, b, c, d)
    }

    pub fn identity() -> Self {
        SymMat2::new(RatFun::one(), RatFun::zero(), RatFun::zero(), RatFun::one())
    }

    pub fn zero() -> Self {
        SymMat2::new(RatFun::zero(), RatFun::zero(), RatFun::zero(), RatFun::zero())
    }

    /// `diag(x, 1/x)`.
    pub fn diag(x: &RatFun) -> Self {
        SymMat2::new(x.clone(), RatFun::zero(), RatFun::zero(), x.recip().expect("nonzero diagonal"))
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.e[i][j]
    }

    pub fn entries(&self) -> [&RatFun; 4] {
        [&self.e[0][0], &self.e[0][1], &self.e[1][0], &self.e[1][1]]
    }

    pub fn det(&self) -> RatFun {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn trace(&self) -> RatFun {
        &self.e[0][0] + &self.e[1][1]
    }

    /// Inverse by the adjugate; requires determinant 1.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(self.adjugate())
    }

    pub fn adjugate(&self) -> Self {
        SymMat2::new(self.e[1][1].clone(), -&self.e[0][1], -&self.e[1][0], self.e[0][0].clone())
    }

    /// Integer power by repeated squaring; negative powers need det 1.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = SymMat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.e[1][0].is_zero()
    }

    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        SymMat2::new(f(&self.e[0][0]), f(&self.e[0][1]), f(&self.e[1][0]), f(&self.e[1][1]))
    }

    pub fn substitute(&self, v: Var, value: &RatFun) -> Self {
        self.map(|x| x.substitute(v, value))
    }

    /// Entries as canonical strings, row by row.
    pub fn to_strings(&self) -> [[String; 2]; 2] {
        [[self.e[0][0].to_string(), self.e[0][1].to_string()], [self.e[1][0].to_string(), self.e[1][1].to_string()]]
    }
}

impl fmt::Display for SymMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_strings();
        write!(f, "[[{}, {}], [{}, {}]]", s[0][0], s[0][1], s[1][0], s[1][1])
    }
}

impl fmt::Debug for SymMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMat2{self}")
    }
}

impl<'a> Mul<&'a SymMat2> for &'a SymMat2 {
    type Output = SymMat2;
    fn mul(self, r: &SymMat2) -> SymMat2 {
        let l = &self.e;
        let r = &r.e;
        let entry = |i: usize, j: usize| &(&l[i][0] * &r[0][j]) + &(&l[i][1] * &r[1][j]);
        SymMat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl<'a> Add<&'a SymMat2> for &'a SymMat2 {
    type Output = SymMat2;
    fn add(self, r: &SymMat2) -> SymMat2 {
        SymMat2::new(
            &self.e[0][0] + &r.e[0][0],
            &self.e[0][1] + &r.e[0][1],
            &self.e[1][0] + &r.e[1][0],
            &self.e[1][1] + &r.e[1][1],
        )
    }
}

impl<'a> Sub<&'a SymMat2> for &'a SymMat2 {
    type Output = SymMat2;
    fn sub(self, r: &SymMat2) -> SymMat2 {
        self + &(-r)
    }
}

impl Neg for &SymMat2 {
    type Output = SymMat2;
    fn neg(self) -> SymMat2 {
        self.map(|x| -x)
    }
}

impl Mul for SymMat2 {
    type Output = SymMat2;
    fn mul(self, r: SymMat2) -> SymMat2 {
        &self * &r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjugate_inverse() {
        let m = SymMat2::lit(["a", "1", "0", "1/a"]);
        assert_eq!(m.inverse().unwrap(), SymMat2::lit(["1/a", "-1", "0", "a"]));
        assert_eq!(&m.inverse().unwrap() * &m, SymMat2::identity());
        let bad = SymMat2::lit(["a", "1", "0", "a"]);
        assert!(bad.inverse().is_err());
        assert!(SymMat2::unimodular(ratfun("2"), ratfun("0"), ratfun("0"), ratfun("1")).is_err());
    }

    #[test]
    fn product_of_lemma_matrices() {
        let a = SymMat2::lit(["a", "0", "0", "1/a"]);
        let b = SymMat2::lit(["a", "1", "0", "1/a"]);
        let ab = &a * &b;
        assert_eq!(ab.get(0, 1), &ratfun("a"));
        let ab2 = ab.pow(2).unwrap();
        assert_eq!(ab2.trace(), ratfun("(a^8 + 1)/a^4"));
        assert_eq!(ab.pow(-1).unwrap(), ab.inverse().unwrap());
    }
}
