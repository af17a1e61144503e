//! Trace polynomials of matrix powers and the Laurent sequence `p_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::ratfun::RatFun;
use super::var::{Monomial, Var};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Rational};

/// `P_n(x)` with `Tr(M^n) = P_n(Tr M)` for unimodular `M`:
/// `P_0 = 2`, `P_1 = x`, `P_{n+1} = x P_n - P_{n-1}`.
pub fn trace_power_poly(n: i64, x: Var) -> Result<MultiPoly> {
    if n < 0 {
        return Err(Error::Range(format!("trace power index {n} is negative")));
    }
    let xv = MultiPoly::var(x);
    let mut prev = MultiPoly::int(2);
    let mut cur = xv.clone();
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &(&xv * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// A univariate Laurent polynomial, exponent to coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(e: i64, c: Rational) -> Self {
        let mut l = Laurent::zero();
        l.add_term(e, c);
        l
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// The polynomial value if no negative exponent occurs.
    pub fn to_poly(&self, x: Var) -> Option<MultiPoly> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        Some(MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (Monomial::var(x, *e as u16), c.clone()))))
    }

    pub fn to_ratfun(&self, x: Var) -> RatFun {
        let low = self.min_exp().unwrap_or(0).min(0);
        let p = self.shift(-low).to_poly(x).expect("shifted to non-negative");
        let den = MultiPoly::var_pow(x, (-low) as u16);
        RatFun::new(p, den).expect("monomial denominator")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let c = if c.is_one() { String::new() } else { format!("{}*", fmt_rational(c)) };
                format!("{c}x^{e}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

/// `p_n` together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeq {
    pub n: u32,
    pub p: Laurent,
}

/// `p_1 = x`, `p_n = x^(3-2n) + x^2 p_(n-1)`.
pub fn pn_sequence(n: i64) -> Result<LaurentSeq> {
    if n < 1 {
        return Err(Error::Range(format!("p_n needs n >= 1, got {n}")));
    }
    let one = Rational::one();
    let mut p = Laurent::monomial(1, one.clone());
    for k in 2..=n {
        p = p.shift(2).add(&Laurent::monomial(3 - 2 * k, one.clone()));
    }
    Ok(LaurentSeq { n: n as u32, p })
}

impl LaurentSeq {
    /// `x^(2n-3) p_n`, which should have no negative exponents.
    pub fn cleared(&self) -> Laurent {
        self.p.shift(2 * self.n as i64 - 3)
    }

    /// `p_n (1 - x^2) x^(2n-1) - 1`, which should be nonzero.
    pub fn obstruction(&self) -> Laurent {
        let one = Rational::one();
        let factor = Laurent::monomial(0, one.clone()).add(&Laurent::monomial(2, -one.clone()));
        self.p.mul(&factor).shift(2 * self.n as i64 - 1).add(&Laurent::monomial(0, -one))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::poly;

    #[test]
    fn low_trace_polys() {
        assert_eq!(trace_power_poly(0, Var::X).unwrap(), poly("2"));
        assert_eq!(trace_power_poly(1, Var::X).unwrap(), poly("x"));
        assert_eq!(trace_power_poly(2, Var::X).unwrap(), poly("x^2 - 2"));
        assert_eq!(trace_power_poly(4, Var::X).unwrap(), poly("x^4 - 4*x^2 + 2"));
        assert!(trace_power_poly(-1, Var::X).is_err());
    }

    #[test]
    fn p_sequence_start() {
        let p1 = pn_sequence(1).unwrap();
        assert_eq!(p1.p.to_poly(Var::X).unwrap(), poly("x"));
        let p2 = pn_sequence(2).unwrap();
        assert_eq!(p2.p.to_ratfun(Var::X), "(x^4 + 1)/x".parse().unwrap());
        assert!(pn_sequence(0).is_err());
    }
}
