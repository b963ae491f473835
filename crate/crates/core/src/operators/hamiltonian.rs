use super::ladder::{diag_eigenvalue, Diag, Realization};
use super::names::OperatorName::*;
use super::{LabeledState, ParamPoint};
use crate::algebra::expr::elementary::*;
use crate::algebra::{d_theta, d_xi, FunExpr};
use crate::error::{Error, Result};
use crate::rational::{half, int, rat, Rational};

fn quarter_shifted_square(l: &Rational) -> Rational {
    l * l - rat(1, 4)
}

/// `H_l f` for the full two-variable Hamiltonian at parameters `l`.
pub fn hamiltonian_on(l: &ParamPoint, f: &FunExpr) -> FunExpr {
    let fx = d_xi(f);
    let radial = &(&d_xi(&fx) + &(&coth() * &fx)).negate() - &(&sech2() * f).scale(&quarter_shifted_square(&l.l2));
    let angular = &(&(&csc2() * f).scale(&quarter_shifted_square(&l.l1))
        + &(&sec2() * f).scale(&quarter_shifted_square(&l.l0)))
        - &d_theta(&d_theta(f));
    &radial + &(&csch2() * &angular)
}

/// Exact image of the state under `H` at its own label.
pub fn apply_hamiltonian(st: &LabeledState) -> FunExpr {
    hamiltonian_on(&st.label, &st.expr)
}

/// The three separated one-dimensional Hamiltonians.
///
/// `Chi` and `Beta` reuse the hyperbolic pair of the monomial family, so a
/// `cosh`/`sinh` monomial is read as a function of χ or β.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separated {
    /// `-∂θ² + (l₁²-¼)/sin²θ + (l₀²-¼)/cos²θ`, parameters `(l₀, l₁)`
    Theta,
    /// `-∂χ² + (l₀²-¼)/sinh²χ - (l₂²-¼)/cosh²χ`, parameters `(l₀, l₂)`
    Chi,
    /// `-∂β² + (l₁²-¼)/sinh²β - (l₂²-¼)/cosh²β`, parameters `(l₁, l₂)`
    Beta,
}

pub fn apply_separated(which: Separated, f: &FunExpr, a: &Rational, b: &Rational) -> Result<FunExpr> {
    match which {
        Separated::Theta => {
            if !f.is_theta_only() {
                return Err(Error::VariableMismatch {
                    variable: "theta",
                    expr: f.to_string(),
                });
            }
            let pot =
                &(&csc2() * f).scale(&quarter_shifted_square(b)) + &(&sec2() * f).scale(&quarter_shifted_square(a));
            Ok(&pot - &d_theta(&d_theta(f)))
        }
        Separated::Chi | Separated::Beta => {
            if !f.is_xi_only() {
                return Err(Error::VariableMismatch {
                    variable: if which == Separated::Chi { "chi" } else { "beta" },
                    expr: f.to_string(),
                });
            }
            let pot =
                &(&csch2() * f).scale(&quarter_shifted_square(a)) - &(&sech2() * f).scale(&quarter_shifted_square(b));
            Ok(&pot - &d_xi(&d_xi(f)))
        }
    }
}

/// One-dimensional factor operators `A±_{a,b}(θ)`, `B±_{a,b}(χ)`, `C±_{a,b}(β)`.
///
/// ```text
/// A±_{l0,l1} = ±∂θ - (l0+½) tan θ + (l1+½) cot θ
/// B±_{l0,l2} = ±∂χ + (l2+½) tanh χ + (l0+½) coth χ
/// C±_{l1,l2} = ±∂β + (l2+½) tanh β + (-l1+½) coth β
/// ```
pub fn factor_operator_1d(which: Separated, plus: bool, a: &Rational, b: &Rational, f: &FunExpr) -> FunExpr {
    let sign = if plus { int(1) } else { int(-1) };
    match which {
        Separated::Theta => {
            let w = &tan().scale(&-(a + half())) + &cot().scale(&(b + half()));
            &d_theta(f).scale(&sign) + &(&w * f)
        }
        Separated::Chi => {
            let w = &tanh().scale(&(b + half())) + &coth().scale(&(a + half()));
            &d_xi(f).scale(&sign) + &(&w * f)
        }
        Separated::Beta => {
            let w = &tanh().scale(&(b + half())) + &coth().scale(&(half() - a));
            &d_xi(f).scale(&sign) + &(&w * f)
        }
    }
}

/// `𝒞' = l₁ + l₂ - l₀`
pub fn cprime(l: &ParamPoint) -> Rational {
    &l.l1 + &l.l2 - &l.l0
}

impl Realization {
    /// Second-order su(2,1) Casimir
    /// `Â⁺Â⁻ - B̂⁺B̂⁻ - Ĉ⁺Ĉ⁻ + ⅔(Â² + B̂² + Ĉ²) - (Â + B̂ + Ĉ)`.
    pub fn casimir(&self, st: &LabeledState) -> FunExpr {
        let aa = self.apply(APlus, &self.apply(AMinus, st)).expr;
        let bb = self.apply(BPlus, &self.apply(BMinus, st)).expr;
        let cc = self.apply(CPlus, &self.apply(CMinus, st)).expr;
        let a = diag_eigenvalue(Diag::A, &st.label);
        let b = diag_eigenvalue(Diag::B, &st.label);
        let c = diag_eigenvalue(Diag::C, &st.label);
        let diag = rat(2, 3) * (&a * &a + &b * &b + &c * &c) - (a + b + c);
        &(&(&aa - &bb) - &cc) + &st.expr.scale(&diag)
    }
}

pub fn apply_casimir(st: &LabeledState) -> FunExpr {
    Realization::default().casimir(st)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(l0: i64, l2: i64) -> LabeledState {
        let e = FunExpr::term(int(1), int(l0) + half(), half(), int(l2) + half(), int(l0 + 1));
        LabeledState::new(ParamPoint::ints(l0, 0, l2), e)
    }

    #[test]
    fn vertex_energy_minus_35_over_4() {
        let st = ground(0, -5);
        assert_eq!(apply_hamiltonian(&st), st.expr.scale(&rat(-35, 4)));
    }

    #[test]
    fn hamiltonian_of_zero_is_zero() {
        let st = LabeledState::new(ParamPoint::ints(1, 2, 3), FunExpr::zero());
        assert!(apply_hamiltonian(&st).is_zero());
    }

    #[test]
    fn separated_ground_states_hit_lambda() {
        // θ: (1 + l0 + l1)²
        let (l0, l1) = (rat(3, 2), int(1));
        let f = FunExpr::term(int(1), &l0 + half(), &l1 + half(), int(0), int(0));
        let lam = (int(1) + &l0 + &l1) * (int(1) + &l0 + &l1);
        assert_eq!(apply_separated(Separated::Theta, &f, &l0, &l1).unwrap(), f.scale(&lam));
        // χ: -(1 + l0 + l2)²
        let (l0, l2) = (int(0), int(-3));
        let g = FunExpr::term(int(1), int(0), int(0), &l2 + half(), &l0 + half());
        let lam = -((int(1) + &l0 + &l2) * (int(1) + &l0 + &l2));
        assert_eq!(apply_separated(Separated::Chi, &g, &l0, &l2).unwrap(), g.scale(&lam));
        // β: -(1 - l1 + l2)²
        let (l1, l2) = (rat(-1, 2), int(-4));
        let g = FunExpr::term(int(1), int(0), int(0), &l2 + half(), half() - &l1);
        let u = int(1) - &l1 + &l2;
        assert_eq!(
            apply_separated(Separated::Beta, &g, &l1, &l2).unwrap(),
            g.scale(&-(&u * &u))
        );
    }

    #[test]
    fn separated_rejects_wrong_variables() {
        let f = FunExpr::term_i(int(1), 1, 0, 1, 0);
        assert!(apply_separated(Separated::Theta, &f, &int(0), &int(0)).is_err());
        assert!(apply_separated(Separated::Chi, &f, &int(0), &int(0)).is_err());
    }

    #[test]
    fn casimir_on_vertex() {
        let st = ground(0, -5);
        assert_eq!(cprime(&st.label), int(-5));
        assert_eq!(apply_casimir(&st), st.expr.scale(&rat(10, 3)));
    }
}
