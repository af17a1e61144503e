//! Sparse multivariate polynomials over ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, fmt_rational, numerator_gcd, Rational};

/// A polynomial stored as a map from exponent vector to nonzero coefficient.
///
/// Keys are kept in lexicographic order, so the last key is the leading
/// monomial for division.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v, 1), Rational::one())
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        MultiPoly::term(Monomial::var(v, e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial from integer coefficients, lowest degree first.
    pub fn univariate(v: Var, coeffs: &[i64]) -> Self {
        MultiPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Monomial::var(v, i as u16), Rational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()))
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Bit mask of variables occurring in the polynomial.
    pub fn support(&self) -> u32 {
        self.terms.keys().fold(0, |m, k| m | k.support())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.support() & (1 << v.index()) != 0
    }

    pub fn vars(&self) -> Vec<Var> {
        let s = self.support();
        Var::all().filter(|v| s & (1 << v.index()) != 0).collect()
    }

    /// Degree in `v`; zero polynomial has degree 0.
    pub fn degree_in(&self, v: Var) -> usize {
        self.terms.keys().map(|m| m.exp(v) as usize).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree() as usize).max().unwrap_or(0)
    }

    /// Smallest exponent of `v` over all terms.
    pub fn min_degree_in(&self, v: Var) -> usize {
        self.terms.keys().map(|m| m.exp(v) as usize).min().unwrap_or(0)
    }

    /// Leading term in lexicographic order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to `v`, index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(v) + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut rest = *m;
            rest.set_exp(v, 0);
            out[e].terms.insert(rest, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.mul(&Monomial::var(v, i as u16)), a.clone());
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, v: Var) -> MultiPoly {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    /// Replaces `v` by `value` (Horner evaluation).
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval(&self, v: Var, value: &Rational) -> MultiPoly {
        self.substitute(v, &MultiPoly::constant(value.clone()))
    }

    /// Evaluates every variable; missing variables count as zero.
    pub fn eval_all(&self, point: &[(Var, Rational)]) -> Rational {
        let mut p = self.clone();
        for (v, x) in point {
            p = p.eval(*v, x);
        }
        p.constant_value().unwrap_or_else(|| p.coeff(&Monomial::one()))
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut k = *m;
            k.set_exp(v, e - 1);
            out.add_term(k, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        let (ld_m, ld_c) = d.lex_leading().map(|(m, c)| (*m, c.clone()))?;
        if d.is_monomial() {
            let inv = ld_c.recip();
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                if !ld_m.divides(m) {
                    return None;
                }
                out.insert(ld_m.quotient_of(m), c * &inv);
            }
            return Some(MultiPoly { terms: out });
        }
        // Quick degree rejection.
        for v in d.vars() {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let inv = ld_c.recip();
        let mut rem = self.terms.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !ld_m.divides(&m) {
                return None;
            }
            let qm = ld_m.quotient_of(&m);
            let qc = c * &inv;
            for (dm, dc) in &d.terms {
                let key = dm.mul(&qm);
                let delta = &qc * dc;
                use std::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder of `self` by `d` with respect to `v`:
    /// `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn prem(&self, d: &MultiPoly, v: Var) -> MultiPoly {
        let dd = d.degree_in(v);
        let dcoeffs = d.coeffs_in(v);
        let lc = dcoeffs[dd].clone();
        let mut r = self.clone();
        let mut steps = (self.degree_in(v) + 1).saturating_sub(dd);
        while !r.is_zero() && r.degree_in(v) >= dd {
            let rd = r.degree_in(v);
            let rl = r.leading_coeff_in(v);
            let shift = MultiPoly::var_pow(v, (rd - dd) as u16);
            r = &(&r * &lc) - &(&(&rl * &shift) * d);
            steps = steps.saturating_sub(1);
        }
        if steps > 0 {
            r = &r * &lc.pow(steps as u32);
        }
        r
    }

    /// Rational number `c` such that `self / c` has coprime integer
    /// coefficients and a positive lexicographic leading coefficient.
    pub fn numeric_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let l = denominator_lcm(self.terms.values());
        let scaled: Vec<Rational> = self.terms.values().map(|c| c * Rational::from_integer(l.clone())).collect();
        let g = numerator_gcd(scaled.iter());
        let mut content = Rational::new(g, l);
        if self.lex_leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    /// Integer-primitive representative with positive leading coefficient.
    pub fn numeric_primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        self.scale(&self.numeric_content().recip())
    }

    /// Scales so the lexicographic leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.lex_leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Terms sorted for printing: graded lexicographic, descending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.graded_cmp(a.0));
        ts
    }

    /// Keeps only terms whose exponent of `v` is even, flagging any odd one.
    pub fn is_even_in(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) % 2 == 0)
    }

    pub fn is_odd_in(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) % 2 == 1)
    }

    /// Rewrites a polynomial even in `v` as a polynomial in `w = v²`
    /// (exponents halved, result expressed in `w`).
    pub fn halve_exponents(&self, v: Var, w: Var) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e % 2 == 1 {
                return None;
            }
            let mut k = *m;
            k.set_exp(v, 0);
            let k = k.mul(&Monomial::var(w, e / 2));
            out.add_term(k, c.clone());
        }
        Some(out)
    }

    /// Sum of `coeff · v^i` over a univariate-in-`v` polynomial with
    /// constant coefficients, lowest first; `None` if other variables occur.
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Rational>> {
        if self.support() & !(1 << v.index()) != 0 {
            return None;
        }
        let mut out = vec![Rational::zero(); self.degree_in(v) + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize] = c.clone();
        }
        Some(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

// ----- arithmetic -----

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MultiPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

// ----- parsing -----

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses expressions built from rational constants, variable names,
    /// `+ - *`, `^` with a non-negative integer exponent, parentheses, and
    /// division by a constant.
    fn from_str(s: &str) -> Result<MultiPoly> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

/// Shorthand used by tests and by the formula tables.
pub fn poly(s: &str) -> MultiPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal `{s}`: {e}"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = d
                        .constant_value()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                    acc = acc.scale(&c.recip());
                }
                Some(b'(') => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("bad integer"))?;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Var::from_name(name).ok_or_else(|| self.err("unknown variable"))?;
                Ok(MultiPoly::var(v))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let p = poly("(a^2+1)*(a^2-1)");
        assert_eq!(p.to_string(), "a^4 - 1");
        let q = poly("6*a^8*z^2 - 17*a^6*z^2 - 4 + 1/2*z");
        assert_eq!(q.to_string(), "6*a^8*z^2 - 17*a^6*z^2 + 1/2*z - 4");
        assert_eq!(poly(&q.to_string()), q);
    }

    #[test]
    fn graded_order_follows_symbol_order() {
        // a < z < r < T < E: within one degree, `a` terms print first.
        let p = poly("E + T + r + z + a");
        assert_eq!(p.to_string(), "a + z + r + T + E");
    }

    #[test]
    fn exact_division() {
        let f = poly("a^4 - 1");
        let g = poly("a^2 - 1");
        assert_eq!(f.div_exact(&g).unwrap(), poly("a^2 + 1"));
        assert!(poly("a^4 + 1").div_exact(&g).is_none());
        let h = poly("(x + y*z)*(z^2 - x*y + 3)");
        assert_eq!(h.div_exact(&poly("x + y*z")).unwrap(), poly("z^2 - x*y + 3"));
    }

    #[test]
    fn pseudo_remainder() {
        let f = poly("x^2 - 1");
        let g = poly("2*x - 2");
        assert!(f.prem(&g, Var::X).is_zero());
        let r = poly("x^2 + 1").prem(&poly("x - 1"), Var::X);
        assert_eq!(r, poly("2"));
    }

    #[test]
    fn coefficient_views() {
        let p = poly("a^2*z + 3*z - a");
        let cs = p.coeffs_in(Var::Z);
        assert_eq!(cs[0], poly("-a"));
        assert_eq!(cs[1], poly("a^2 + 3"));
        assert_eq!(MultiPoly::from_coeffs_in(Var::Z, &cs), p);
    }

    #[test]
    fn substitution() {
        let p = poly("x^2 + x*y");
        let q = p.substitute(Var::X, &poly("y + 1"));
        assert_eq!(q, poly("2*y^2 + 3*y + 1"));
    }

    #[test]
    fn numeric_normalization() {
        let p = poly("-2/3*a^2 + 4/9");
        assert_eq!(p.numeric_primitive(), poly("3*a^2 - 2"));
    }
}
