//! Reduced words in a free group.

use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced word stored as `(generator, exponent)` syllables with
/// nonzero exponents and no two adjacent syllables on the same generator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    syllables: Vec<(String, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen(name: &str) -> Self {
        FreeWord { syllables: vec![(name.to_string(), 1)] }
    }

    /// Builds and reduces a word from raw syllables.
    pub fn from_syllables<S: Into<String>>(raw: impl IntoIterator<Item = (S, i64)>) -> Self {
        free_reduce(raw.into_iter().map(|(g, e)| (g.into(), e)).collect())
    }

    /// Parses space-separated letters such as `w1^-1 w0 w1`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for tok in s.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            if g.is_empty() {
                return Err(Error::Parse(format!("empty generator in `{tok}`")));
            }
            raw.push((g.to_string(), e));
        }
        Ok(free_reduce(raw))
    }

    pub fn syllables(&self) -> &[(String, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        FreeWord { syllables: self.syllables.iter().rev().map(|(g, e)| (g.clone(), -e)).collect() }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut raw = self.syllables.clone();
        raw.extend(other.syllables.iter().cloned());
        free_reduce(raw)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self⁻¹ · x · self`.
    pub fn conjugate(&self, x: &FreeWord) -> Self {
        self.inverse().mul(x).mul(self)
    }

    pub fn generators(&self) -> Vec<&str> {
        let mut g: Vec<&str> = self.syllables.iter().map(|(g, _)| g.as_str()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

/// Stack-based free reduction: merges adjacent syllables on the same
/// generator and drops zero exponents.
pub fn free_reduce(raw: Vec<(String, i64)>) -> FreeWord {
    let mut out: Vec<(String, i64)> = Vec::with_capacity(raw.len());
    for (g, e) in raw {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    FreeWord { syllables: out }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.syllables.iter().map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") }).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

/// Closed forms `(w_{2k+1}, w_{2k+2})` in the generators `w0`, `w1`:
/// `w_{2k+1} = (w0 w1)^-k w1 (w0 w1)^k`,
/// `w_{2k+2} = (w0 w1)^-k w1^-1 (w0 w1)^(k+1)`.
pub fn twist_words(k: i64) -> Result<(FreeWord, FreeWord)> {
    if k < 0 {
        return Err(Error::Range(format!("twist index {k} is negative")));
    }
    let w0 = FreeWord::gen("w0");
    let w1 = FreeWord::gen("w1");
    let p = w0.mul(&w1);
    let odd = p.pow(-k).mul(&w1).mul(&p.pow(k));
    let even = p.pow(-k).mul(&w1.inverse()).mul(&p.pow(k + 1));
    Ok((odd, even))
}

/// `w_j` from the conjugation recurrence `w_{j+2} = w_{j+1}⁻¹ w_j w_{j+1}`.
pub fn twist_word_recurrence(j: usize) -> FreeWord {
    let mut prev = FreeWord::gen("w0");
    let mut cur = FreeWord::gen("w1");
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        let next = cur.conjugate(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let w = FreeWord::parse("w1 w1^-1 w0").unwrap();
        assert_eq!(w, FreeWord::gen("w0"));
        assert_eq!(FreeWord::parse("a a a^-2").unwrap(), FreeWord::identity());
        assert_eq!(FreeWord::parse("a^2 b a^-1").unwrap().to_string(), "a^2 b a^-1");
        assert!(FreeWord::parse("a^x").is_err());
    }

    #[test]
    fn first_closed_forms() {
        let (w1, w2) = twist_words(0).unwrap();
        assert_eq!(w1, FreeWord::gen("w1"));
        assert_eq!(w2, FreeWord::parse("w1^-1 w0 w1").unwrap());
        assert!(twist_words(-1).is_err());
    }

    #[test]
    fn recurrence_matches_closed_forms() {
        for k in 0..6 {
            let (o, e) = twist_words(k).unwrap();
            assert_eq!(twist_word_recurrence(2 * k as usize + 1), o);
            assert_eq!(twist_word_recurrence(2 * k as usize + 2), e);
        }
    }
}
