//! Closed forms the case analysis substitutes and checks.

pub const E_MATRIX: [&str; 4] = ["0", "a^2/(a^4 - 1)", "(1 - a^4)/a^2", "(a^2 + 1)/a"];
pub const R_VALUE: &str = "(a^4 + a^2*z^2 - z^2)/(z^2*(a^4 - 1))";
pub const THETA_MATRIX: [&str; 4] = ["(a^4 - z^2)/(a^4*z)", "a*z/(a^4 - 1)", "z*(1 - a^4)/a^5", "z"];
pub const F_SUB_A: [&str; 4] = ["1/a", "a^2/(2*a^2 - 1)", "0", "a"];
pub const F_SUB_B: [&str; 4] =
    ["(a^4 - a^2 - 1)/(a*(a^2 - 1))", "a^2/((a^2 + 1)*(a^2 - 1)^2)", "(a^4 - a^2 - 2)/a^2", "a/(a^2 - 1)"];
pub const SUB_A_QUADRATIC: &str = "(6*a^8 - 17*a^6 + 13*a^4 + 2*a^2 - 4)*z^2 - 6*a^8 + 7*a^6 - 2*a^4";
pub const SUB_A_Z2: &str = "a^4*(6*a^4 - 7*a^2 + 2)/(6*a^8 - 17*a^6 + 13*a^4 + 2*a^2 - 4)";
/// Reference form; the derived value has `a^2` where this has `a^4`.
pub const SUB_A_TR_EC_REFERENCE: &str = "(a^2 + 1)*(10*a^4 - 15*a^2 + 6)/(a^4*(2*a^2 - 1)*(3*a^2 - 2))";
pub const SUB_A_TR_EC: &str = "(a^2 + 1)*(10*a^4 - 15*a^2 + 6)/(a^2*(2*a^2 - 1)*(3*a^2 - 2))";
pub const SUB_A_TR_THETA2: &str = "(a^2 + 1)*(72*a^12 - 288*a^10 + 446*a^8 - 278*a^6 - 25*a^4 + 108*a^2 - 36)/(a^4*(2*a^2 - 1)*(3*a^2 - 2)*(6*a^6 - 11*a^4 + 2*a^2 + 4))";
pub const SUB_A_POLE: &str = "6*a^6 - 11*a^4 + 2*a^2 + 4";
pub const SUB_B_QUARTIC: &str = "(-a^12 + 8*a^10 - 22*a^8 + 23*a^6 - 3*a^4 - 9*a^2 + 4)*z^4 + (2*a^12 - 12*a^10 + 22*a^8 - 11*a^6 - 3*a^4 + 2*a^2)*z^2 - a^12 + 4*a^10 - 4*a^8";
pub const T_FORM: &str = "(a^4*z^2 + a^4 - z^2)/(a^4*z)";
pub const E_FORM: &str = "(a^4*z^2 - a^4 + z^2)/(a^2*z^2)";
