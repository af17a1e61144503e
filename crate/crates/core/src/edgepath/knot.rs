//! Montesinos knots given by a list of rational tangles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Rational};

/// The two knot families studied here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `K(1/3, 1/5, 1/(2n+1), 1/2)`.
    Kn(u32),
    /// `K(1/5, 1/3, 1/(2n+1), 1/2)`, the mutant.
    Mutant(u32),
}

impl Family {
    pub fn n(self) -> u32 {
        match self {
            Family::Kn(n) | Family::Mutant(n) => n,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MontesinosKnot {
    tangles: Vec<Rational>,
}

fn unit(q: i64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(q))
}

impl MontesinosKnot {
    /// Accepts at least three reduced fractions strictly between 0 and 1.
    pub fn new(tangles: Vec<Rational>) -> Result<Self> {
        if tangles.len() < 3 {
            return Err(Error::Input(format!("need at least 3 tangles, got {}", tangles.len())));
        }
        for t in &tangles {
            if !t.is_positive() || *t >= Rational::one() {
                return Err(Error::Input(format!("tangle {} must lie strictly between 0 and 1", fmt_rational(t))));
            }
        }
        Ok(MontesinosKnot { tangles })
    }

    /// `K(1/3, 1/5, 1/(2n+1), 1/2)`.
    pub fn k_n(n: u32) -> Self {
        MontesinosKnot { tangles: vec![unit(3), unit(5), unit(2 * n as i64 + 1), unit(2)] }
    }

    /// `K(1/5, 1/3, 1/(2n+1), 1/2)`.
    pub fn mutant(n: u32) -> Self {
        MontesinosKnot { tangles: vec![unit(5), unit(3), unit(2 * n as i64 + 1), unit(2)] }
    }

    pub fn tangles(&self) -> &[Rational] {
        &self.tangles
    }

    pub fn len(&self) -> usize {
        self.tangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tangles.is_empty()
    }

    pub fn all_unit_fractions(&self) -> bool {
        self.tangles.iter().all(|t| t.numer().is_one())
    }

    /// Recognizes the two families for `n >= 2`.
    pub fn family(&self) -> Option<Family> {
        if self.tangles.len() != 4 || !self.all_unit_fractions() {
            return None;
        }
        let q: Vec<i64> = self.tangles.iter().map(|t| t.denom().to_i64().unwrap_or(0)).collect();
        let n = (q[2] - 1) / 2;
        if q[2] < 5 || q[2].is_even() || q[3] != 2 {
            return None;
        }
        match (q[0], q[1]) {
            (3, 5) => Some(Family::Kn(n as u32)),
            (5, 3) => Some(Family::Mutant(n as u32)),
            _ => None,
        }
    }
}

impl fmt::Display for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tangles.iter().map(fmt_rational).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({self})")
    }
}

/// Parses a reduced fraction `p/q`; `p/q` with a common factor is rejected.
pub fn parse_reduced(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed fraction `{s}`"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::Input(format!("fraction `{s}` is not reduced")));
    }
    Ok(Rational::new(p, q))
}

impl FromStr for MontesinosKnot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let tangles = s.split(',').map(parse_reduced).collect::<Result<Vec<_>>>()?;
        MontesinosKnot::new(tangles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_knots() {
        let k: MontesinosKnot = "1/3,1/5,1/5,1/2".parse().unwrap();
        assert_eq!(k, MontesinosKnot::k_n(2));
        assert_eq!(k.family(), Some(Family::Kn(2)));
        assert_eq!(MontesinosKnot::mutant(4).family(), Some(Family::Mutant(4)));
        assert!(matches!("2/0,1/3".parse::<MontesinosKnot>(), Err(Error::Parse(_))));
        assert!(matches!("2/4,1/3,1/5".parse::<MontesinosKnot>(), Err(Error::Input(_))));
        assert!("1/3,1/5".parse::<MontesinosKnot>().is_err());
        assert!("3/2,1/3,1/5".parse::<MontesinosKnot>().is_err());
        assert_eq!("2/5,1/3,1/2".parse::<MontesinosKnot>().unwrap().family(), None);
    }
}
