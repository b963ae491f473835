//! Exact calculus over the trigonometric/hyperbolic monomial family.
//!
//! Every expression is a finite sum of monomials
//! `c · cosᵖθ · sinᵠθ · coshʳξ · sinhˢξ` with rational `c, p, q, r, s`. The
//! family is closed under products, `∂θ`, `∂ξ` and multiplication by the
//! elementary ratios (`tan`, `coth`, `sec`, ...), which is all the ladder
//! operators need.

mod calculus;
mod canonical;
pub(crate) mod expr;
mod inner;

pub use calculus::{d_theta, d_xi, eval};
pub use expr::{elementary, Exponents, FunExpr, Monomial};
pub use inner::{inner, ln_beta, monomial_integral};
