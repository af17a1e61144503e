//! Rational functions in normal form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;

use super::gcd::gcd;
use super::multipoly::MultiPoly;
use super::var::Var;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `num / den` with `gcd(num, den) = 1`, both integer-coefficient, and the
/// denominator's lexicographic leading coefficient positive. Zero is `0/1`.
/// Equality of values is equality of representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        Self::fix_scalars(n, d)
    }

    /// Assumes `n`, `d` coprime up to scalars; fixes the scalar part.
    fn fix_scalars(n: MultiPoly, d: MultiPoly) -> Self {
        let cn = n.numeric_content();
        let cd = d.numeric_content();
        let k = cn / cd;
        let n = n.numeric_primitive().scale(&Rational::from_integer(k.numer().clone()));
        let d = d.numeric_primitive().scale(&Rational::from_integer(k.denom().clone()));
        RatFun { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFun { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: MultiPoly::one(), den: MultiPoly::one() }
    }

    pub fn int(n: i64) -> Self {
        RatFun::from_poly(MultiPoly::int(n))
    }

    pub fn constant(c: Rational) -> Self {
        let n = Rational::from_integer(c.numer().clone());
        let d = Rational::from_integer(c.denom().clone());
        RatFun { num: MultiPoly::constant(n), den: MultiPoly::constant(d) }
    }

    pub fn var(v: Var) -> Self {
        RatFun::from_poly(MultiPoly::var(v))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::fix_scalars(p, MultiPoly::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value, if the denominator is a constant.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        let c = self.den.constant_value()?;
        Some(self.num.scale(&c.recip()))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::fix_scalars(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> RatFun {
        let base = if e < 0 { self.recip().expect("inverting zero") } else { self.clone() };
        let k = e.unsigned_abs();
        RatFun { num: base.num.pow(k), den: base.den.pow(k) }.rescaled()
    }

    fn rescaled(self) -> Self {
        Self::fix_scalars(self.num, self.den)
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        Self::fix_scalars(self.num.scale(c), self.den.clone())
    }

    /// Replaces `v` by a rational function.
    pub fn substitute(&self, v: Var, value: &RatFun) -> RatFun {
        if !self.num.contains_var(v) && !self.den.contains_var(v) {
            return self.clone();
        }
        subst_poly(&self.num, v, value) / subst_poly(&self.den, v, value)
    }

    /// Replaces `v²` by `value` in a function even in `v`. A function that is
    /// odd in both numerator and denominator is first multiplied through by
    /// `v`.
    pub fn subst_square(&self, v: Var, value: &RatFun) -> Result<RatFun> {
        let (n, d) = if self.num.is_odd_in(v) && self.den.is_odd_in(v) {
            let x = MultiPoly::var(v);
            (&self.num * &x, &self.den * &x)
        } else {
            (self.num.clone(), self.den.clone())
        };
        let scratch = Var::U;
        let hn = n.halve_exponents(v, scratch).ok_or_else(|| Error::NotEven(v.to_string()))?;
        let hd = d.halve_exponents(v, scratch).ok_or_else(|| Error::NotEven(v.to_string()))?;
        if self.num.contains_var(scratch) || self.den.contains_var(scratch) {
            return Err(Error::Input("scratch variable already in use".into()));
        }
        Ok(subst_poly(&hn, scratch, value) / subst_poly(&hd, scratch, value))
    }

    pub fn derivative(&self, v: Var) -> RatFun {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        RatFun::normalize(n, &self.den * &self.den)
    }

    /// True if the function does not mention `v`.
    pub fn free_of(&self, v: Var) -> bool {
        !self.num.contains_var(v) && !self.den.contains_var(v)
    }
}

fn subst_poly(p: &MultiPoly, v: Var, value: &RatFun) -> RatFun {
    if !p.contains_var(v) {
        return RatFun::from_poly(p.clone());
    }
    // Homogenize over the common denominator: sum c_i n^i d^(k-i) / d^k.
    let coeffs = p.coeffs_in(v);
    let k = coeffs.len() - 1;
    let mut acc = MultiPoly::zero();
    let mut npow = MultiPoly::one();
    let dpows: Vec<MultiPoly> = {
        let mut v = vec![MultiPoly::one()];
        for i in 1..=k {
            let next = &v[i - 1] * &value.den;
            v.push(next);
        }
        v
    };
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc += &(&(c * &npow) * &dpows[k - i]);
        }
        if i < k {
            npow = &npow * &value.num;
        }
    }
    RatFun::normalize(acc, dpows[k].clone())
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| {
            if p.len() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

impl From<MultiPoly> for RatFun {
    fn from(p: MultiPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<Var> for RatFun {
    fn from(v: Var) -> Self {
        RatFun::var(v)
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::int(n)
    }
}

impl FromStr for RatFun {
    type Err = Error;

    /// Accepts `num` or `(num)/(den)` with polynomial syntax on each side.
    fn from_str(s: &str) -> Result<RatFun> {
        let s = s.trim();
        if let Some(idx) = top_level_div(s) {
            let (n, d) = (&s[..idx], &s[idx + 1..]);
            let n: MultiPoly = n.parse()?;
            let d: MultiPoly = d.parse()?;
            RatFun::new(n, d)
        } else {
            Ok(RatFun::from_poly(s.parse()?))
        }
    }
}

/// Position of a `/` at parenthesis depth 0 whose right side is
/// non-constant.
fn top_level_div(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut last = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => last = Some(i),
            _ => {}
        }
    }
    let i = last?;
    let rhs: MultiPoly = s[i + 1..].parse().ok()?;
    if rhs.is_constant() {
        None
    } else {
        Some(i)
    }
}

/// Shorthand used by tests and formula tables.
pub fn ratfun(s: &str) -> RatFun {
    s.parse().unwrap_or_else(|e| panic!("bad rational function literal `{s}`: {e}"))
}

// ----- arithmetic -----

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFun::fix_scalars(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFun::zero();
        }
        // Any common factor of num and the full denominator divides g.
        let h = gcd(&num, &g);
        let num = num.div_exact(&h).unwrap();
        let g = g.div_exact(&h).unwrap();
        RatFun::fix_scalars(num, &(&b1 * &d1) * &g)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        let inv = rhs.recip().expect("division by zero rational function");
        self.mul(&inv)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: &RatFun) -> RatFun {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<RatFun> for &'a RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::poly;

    #[test]
    fn normal_forms() {
        assert_eq!(ratfun("(a^4-1)/(a^2-1)"), ratfun("a^2+1"));
        assert_eq!(ratfun("z^2/z^5"), ratfun("1/z^3"));
        assert_eq!(ratfun("(-a)/(-1)"), ratfun("a"));
        assert_eq!(ratfun("(2*a)/(4*a^2 - 2)").to_string(), "a/(2*a^2 - 1)");
        assert_eq!(ratfun("(-a)/(2*a^2 - 1)"), -ratfun("a/(2*a^2-1)"));
        assert!(RatFun::new(poly("a"), MultiPoly::zero()).is_err());
    }

    #[test]
    fn field_ops() {
        let x = ratfun("(a^2+1)/(a*z)");
        let y = ratfun("z/(a^2-1)");
        let s = &x + &y;
        assert_eq!(&s - &y, x);
        let p = &x * &y;
        assert_eq!(&p / &y, x);
        assert_eq!(&x * &x.recip().unwrap(), RatFun::one());
    }

    #[test]
    fn substitution_and_squares() {
        let f = ratfun("(a^4 - z^2)/(a^4*z)");
        let sq = &f * &f;
        let g = sq.subst_square(Var::Z, &ratfun("a^2+1")).unwrap();
        let direct = ratfun("(a^4 - a^2 - 1)^2/(a^8*(a^2+1))");
        assert_eq!(g, direct);
        assert!(f.subst_square(Var::Z, &RatFun::one()).is_err());
        // odd/odd is handled
        let t = ratfun("(a^4*z^2 + a^4 - z^2)/(a^4*z)");
        let tz = &t * &RatFun::var(Var::Z);
        assert!(tz.subst_square(Var::Z, &RatFun::one()).is_ok());
    }
}
