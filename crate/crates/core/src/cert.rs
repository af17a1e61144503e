//! Certificate records shared by the symbolic verifiers.

use serde::Serialize;

use crate::poly::{MultiPoly, RatFun};

/// An exact identity `lhs = rhs` between normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn compare(label: impl Into<String>, lhs: &RatFun, rhs: &RatFun) -> Self {
        IdentityCheck { label: label.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), holds: lhs == rhs }
    }

    pub fn zero(label: impl Into<String>, value: &RatFun) -> Self {
        IdentityCheck::compare(label, value, &RatFun::zero())
    }

    pub fn flag(label: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>, holds: bool) -> Self {
        IdentityCheck { label: label.into(), lhs: lhs.into(), rhs: rhs.into(), holds }
    }
}

/// A relation entry that forces a polynomial condition: the entry equals
/// `polynomial · unit`, where the unit is built only from factors that are
/// nonzero on the excluded locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Forcing {
    pub label: String,
    pub entry: String,
    pub polynomial: String,
    pub unit: String,
    pub unit_ok: bool,
    /// Whether the entry vanishes once the forced value is substituted;
    /// `None` when the forcing rules out the branch instead.
    pub vanishes_after: Option<bool>,
}

impl Forcing {
    pub fn holds(&self) -> bool {
        self.unit_ok && self.vanishes_after.unwrap_or(true)
    }
}

/// A nonzero polynomial whose roots bound a branch's contribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finiteness {
    pub label: String,
    pub polynomial: String,
    pub degree: usize,
    pub nonzero: bool,
}

impl Finiteness {
    pub fn of(label: impl Into<String>, p: &MultiPoly) -> Self {
        Finiteness {
            label: label.into(),
            polynomial: p.to_string(),
            degree: p.total_degree(),
            nonzero: !p.is_zero() && !p.is_constant(),
        }
    }
}

/// Strips allowed factors from `p` as long as they divide it; returns the
/// remaining cofactor.
pub fn strip_factors(p: &MultiPoly, allowed: &[MultiPoly]) -> MultiPoly {
    let mut rest = p.clone();
    loop {
        let mut progressed = false;
        for f in allowed {
            if f.is_constant() {
                continue;
            }
            while let Some(q) = rest.div_exact(f) {
                rest = q;
                progressed = true;
            }
        }
        if !progressed {
            return rest;
        }
    }
}

/// True if numerator and denominator of `u` are products of allowed factors
/// times a nonzero constant.
pub fn is_unit(u: &RatFun, allowed: &[MultiPoly]) -> bool {
    if u.is_zero() {
        return false;
    }
    strip_factors(u.num(), allowed).is_constant() && strip_factors(u.den(), allowed).is_constant()
}

/// Certifies `entry = polynomial · unit`.
pub fn forcing(
    label: impl Into<String>,
    entry_name: impl Into<String>,
    entry: &RatFun,
    polynomial: &MultiPoly,
    allowed: &[MultiPoly],
) -> Forcing {
    let p = RatFun::from_poly(polynomial.clone());
    let (unit, ok) = if p.is_zero() {
        (RatFun::zero(), false)
    } else {
        let u = entry / &p;
        let ok = is_unit(&u, allowed);
        (u, ok)
    };
    Forcing {
        label: label.into(),
        entry: entry_name.into(),
        polynomial: polynomial.to_string(),
        unit: unit.to_string(),
        unit_ok: ok,
        vanishes_after: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{poly, ratfun};

    #[test]
    fn units() {
        let allowed = [poly("a"), poly("a - 1"), poly("a + 1")];
        assert!(is_unit(&ratfun("3*a^2/(a^2 - 1)"), &allowed));
        assert!(!is_unit(&ratfun("(a^2 + 1)/a"), &allowed));
        assert!(!is_unit(&RatFun::zero(), &allowed));
    }

    #[test]
    fn forcing_certificate() {
        let entry = ratfun("(a^4 - a^2 + 1)*y/(a^3)");
        let f = forcing("t", "UR", &entry, &poly("a^4 - a^2 + 1"), &[poly("a"), poly("y")]);
        assert!(f.unit_ok);
        let g = forcing("t", "UR", &entry, &poly("a^2 + 1"), &[poly("a"), poly("y")]);
        assert!(!g.unit_ok);
    }
}
