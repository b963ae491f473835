use crate::algebra::FunExpr;
use crate::error::{Error, Result};
use crate::operators::{LabeledState, ParamPoint};
use crate::rational::{half, int, rat, Rational};

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Inadmissible(msg()))
    }
}

/// `cos^{l0+½}θ sin^{l1+½}θ`, annihilated by `A⁻_{l0,l1}`; needs `l0, l1 ≥ -½`.
pub fn ground_theta(l0: &Rational, l1: &Rational) -> Result<FunExpr> {
    require(*l0 >= rat(-1, 2), || format!("l0 = {l0} violates l0 >= -1/2"))?;
    require(*l1 >= rat(-1, 2), || format!("l1 = {l1} violates l1 >= -1/2"))?;
    Ok(FunExpr::term(int(1), l0 + half(), l1 + half(), int(0), int(0)))
}

/// `cosh^{l2+½}χ sinh^{l0+½}χ` (written on the hyperbolic pair), annihilated by
/// `B⁻_{l0,l2}`; needs `l0 ≥ -½` and `l0 + l2 < -1`.
pub fn ground_chi(l0: &Rational, l2: &Rational) -> Result<FunExpr> {
    require(*l0 >= rat(-1, 2), || format!("l0 = {l0} violates l0 >= -1/2"))?;
    require(l0 + l2 < int(-1), || {
        format!("l0 + l2 = {} violates l0 + l2 < -1", l0 + l2)
    })?;
    Ok(FunExpr::term(int(1), int(0), int(0), l2 + half(), l0 + half()))
}

/// `cosh^{l2+½}β sinh^{-l1+½}β`, annihilated by `C⁻_{l1,l2}`; needs `l1 ≤ ½`
/// and `l2 - l1 < -1`.
pub fn ground_beta(l1: &Rational, l2: &Rational) -> Result<FunExpr> {
    require(*l1 <= half(), || format!("l1 = {l1} violates l1 <= 1/2"))?;
    require(l2 - l1 < int(-1), || {
        format!("l2 - l1 = {} violates l2 - l1 < -1", l2 - l1)
    })?;
    Ok(FunExpr::term(int(1), int(0), int(0), l2 + half(), half() - l1))
}

/// Global fundamental state at `(l0, 0, l2)`:
/// `cos^{l0+½}θ sin^{½}θ cosh^{l2+½}ξ sinh^{l0+1}ξ`, annihilated by `Â⁻, B̂⁻, Ĉ⁻`.
/// Needs `l0 ≥ -½` and `l0 + l2 < -5/2`.
pub fn ground_full(l0: &Rational, l2: &Rational) -> Result<LabeledState> {
    require(*l0 >= rat(-1, 2), || format!("l0 = {l0} violates l0 >= -1/2"))?;
    require(l0 + l2 < rat(-5, 2), || {
        format!("l0 + l2 = {} violates l0 + l2 < -5/2", l0 + l2)
    })?;
    let expr = FunExpr::term(int(1), l0 + half(), half(), l2 + half(), l0 + int(1));
    Ok(LabeledState::new(ParamPoint::new(l0.clone(), int(0), l2.clone()), expr))
}

/// so(4,2) vacuum `ground_full(0, l2)`; needs `l2 < -5/2`.
pub fn so42_vacuum(l2: &Rational) -> Result<LabeledState> {
    require(*l2 < rat(-5, 2), || format!("l2 = {l2} violates l2 < -5/2"))?;
    ground_full(&int(0), l2)
}

/// `E⁰ = -(l0 + l2 + 3/2)(l0 + l2 + 5/2)`
pub fn vertex_energy(l0: &Rational, l2: &Rational) -> Rational {
    let s = l0 + l2;
    -((&s + rat(3, 2)) * (&s + rat(5, 2)))
}
