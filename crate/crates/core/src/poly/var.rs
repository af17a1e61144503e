//! Variable symbols and exponent vectors.

use std::fmt;

/// Number of distinct symbols a polynomial may mention.
pub const NVARS: usize = 13;

const NAMES: [&str; NVARS] = ["a", "z", "r", "T", "E", "u", "x", "y", "w", "p", "q", "s", "t"];

/// A polynomial variable.
///
/// The index order doubles as the symbol order used for serialization, so
/// `a < z < r < T < E` holds by construction. `a` stands for the eigenvalue
/// α of the meridian image and `u` for α² in elimination steps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u8);

impl Var {
    pub const A: Var = Var(0);
    pub const Z: Var = Var(1);
    pub const R: Var = Var(2);
    pub const T: Var = Var(3);
    pub const E: Var = Var(4);
    pub const U: Var = Var(5);
    pub const X: Var = Var(6);
    pub const Y: Var = Var(7);
    pub const W: Var = Var(8);
    pub const P: Var = Var(9);
    pub const Q: Var = Var(10);
    pub const S: Var = Var(11);
    /// Lower-case `t`, the lower-right entry of a generic matrix.
    pub const LT: Var = Var(12);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Option<Var> {
        (i < NVARS).then_some(Var(i as u8))
    }

    pub fn from_name(name: &str) -> Option<Var> {
        NAMES.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS).map(|i| Var(i as u8))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector. The derived `Ord` is lexicographic with `a` most
/// significant, which is the term order used for division.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub(crate) [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut m = Monomial::one();
        m.0[v.index()] = exp;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn set_exp(&mut self, v: Var, e: u16) {
        self.0[v.index()] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] + other.0[i];
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = other.0[i] - self.0[i];
        }
        Monomial(out)
    }

    /// Componentwise minimum, the monomial gcd.
    pub fn lcd(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i].min(other.0[i]);
        }
        Monomial(out)
    }

    /// Bit mask of the variables with a positive exponent.
    pub fn support(&self) -> u32 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Graded order used for printing: higher total degree first, ties broken
    /// lexicographically in symbol order.
    pub fn graded_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::all() {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}
