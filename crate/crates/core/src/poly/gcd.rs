//! Multivariate gcd by recursive primitive polynomial remainder sequences.

use num_traits::One;

use super::multipoly::MultiPoly;
use super::var::{Monomial, Var};
use crate::rational::Rational;

impl MultiPoly {
    /// Content with respect to `v`: gcd of the coefficients in `v`.
    pub fn content_in(&self, v: Var) -> MultiPoly {
        let coeffs = self.coeffs_in(v);
        let mut g = MultiPoly::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content in `v`, numerically normalized.
    pub fn primitive_part_in(&self, v: Var) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let c = self.content_in(v);
        let p = if c.is_constant() { self.clone() } else { self.div_exact(&c).expect("content divides") };
        p.numeric_primitive()
    }
}

fn monomial_content(p: &MultiPoly) -> Monomial {
    let mut it = p.terms().map(|(m, _)| *m);
    let first = it.next().unwrap_or_else(Monomial::one);
    it.fold(first, |acc, m| acc.lcd(&m))
}

/// Greatest common divisor, integer-primitive with positive lexicographic
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.numeric_primitive();
    }
    if g.is_zero() {
        return f.numeric_primitive();
    }
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one();
    }
    if f.is_monomial() || g.is_monomial() {
        let (m, other) = if f.is_monomial() { (f, g) } else { (g, f) };
        let mm = monomial_content(m).lcd(&monomial_content(other));
        return MultiPoly::term(mm, Rational::one());
    }
    // Split off monomial contents first; it keeps the PRS small.
    let mf = monomial_content(f);
    let mg = monomial_content(g);
    let mono = mf.lcd(&mg);
    let f1 = strip_monomial(f, &mf);
    let g1 = strip_monomial(g, &mg);
    let core = gcd_nonmonomial(&f1, &g1);
    (&core * &MultiPoly::term(mono, Rational::one())).numeric_primitive()
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        p.clone()
    } else {
        MultiPoly::from_terms(p.terms().map(|(k, c)| (m.quotient_of(k), c.clone())))
    }
}

fn gcd_nonmonomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one();
    }
    if f.is_monomial() || g.is_monomial() {
        return gcd(f, g);
    }
    let sf = f.support();
    let sg = g.support();
    // A variable in only one argument: reduce through its content.
    for v in Var::all() {
        let bit = 1u32 << v.index();
        if sf & bit != 0 && sg & bit == 0 {
            return gcd(&f.content_in(v), g);
        }
        if sg & bit != 0 && sf & bit == 0 {
            return gcd(f, &g.content_in(v));
        }
    }
    // Common variables only: main variable of least combined degree.
    let v = f
        .vars()
        .into_iter()
        .min_by_key(|v| (f.degree_in(*v).min(g.degree_in(*v)), f.degree_in(*v) + g.degree_in(*v)))
        .expect("non-constant");
    let cf = f.content_in(v);
    let cg = g.content_in(v);
    let c = gcd(&cf, &cg);
    let mut a = if cf.is_constant() { f.clone() } else { f.div_exact(&cf).unwrap() };
    let mut b = if cg.is_constant() { g.clone() } else { g.div_exact(&cg).unwrap() };
    a = a.numeric_primitive();
    b = b.numeric_primitive();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    // Cheap exit when one divides the other.
    if b.divides(&a) {
        return (&c * &b).numeric_primitive();
    }
    while !b.is_zero() {
        let r = a.prem(&b, v);
        a = b;
        if r.is_zero() {
            b = MultiPoly::zero();
        } else if r.degree_in(v) == 0 {
            return c.numeric_primitive();
        } else {
            b = r.primitive_part_in(v);
        }
    }
    (&c * &a.primitive_part_in(v)).numeric_primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::poly;

    #[test]
    fn univariate() {
        let g = gcd(&poly("a^4 - 1"), &poly("a^6 - 1"));
        assert_eq!(g, poly("a^2 - 1"));
    }

    #[test]
    fn bivariate_common_factor() {
        let h = poly("a^2*z - z + 3*a");
        let f = &h * &poly("z^2 + a");
        let g = &h * &poly("a*z - 7");
        assert_eq!(gcd(&f, &g), h.numeric_primitive());
    }

    #[test]
    fn monomials() {
        assert_eq!(gcd(&poly("a^3*z"), &poly("a^2*z^4 + a^5")), poly("a^2"));
        assert_eq!(gcd(&poly("2*a^2*z"), &poly("4*a*z^2*(a+1)")), poly("a*z"));
    }

    #[test]
    fn coprime() {
        assert_eq!(gcd(&poly("a + z"), &poly("a - z")), MultiPoly::one());
    }
}
