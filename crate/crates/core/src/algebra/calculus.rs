use std::f64::consts::FRAC_PI_2;

use num_traits::Zero;

use super::expr::{Exponents, FunExpr};
use crate::error::{Error, Result};
use crate::rational::{int, to_f64};

/// `∂θ (cosᵖ sinᵠ) = -p cosᵖ⁻¹ sinᵠ⁺¹ + q cosᵖ⁺¹ sinᵠ⁻¹`
pub fn d_theta(f: &FunExpr) -> FunExpr {
    let mut out = FunExpr::zero();
    for (e, c) in f.terms() {
        if !e.cos.is_zero() {
            let ne = Exponents::new(&e.cos - int(1), &e.sin + int(1), e.cosh.clone(), e.sinh.clone());
            out.add_term(-(c * &e.cos), ne);
        }
        if !e.sin.is_zero() {
            let ne = Exponents::new(&e.cos + int(1), &e.sin - int(1), e.cosh.clone(), e.sinh.clone());
            out.add_term(c * &e.sin, ne);
        }
    }
    out
}

/// `∂ξ (coshʳ sinhˢ) = r coshʳ⁻¹ sinhˢ⁺¹ + s coshʳ⁺¹ sinhˢ⁻¹`
pub fn d_xi(f: &FunExpr) -> FunExpr {
    let mut out = FunExpr::zero();
    for (e, c) in f.terms() {
        if !e.cosh.is_zero() {
            let ne = Exponents::new(e.cos.clone(), e.sin.clone(), &e.cosh - int(1), &e.sinh + int(1));
            out.add_term(c * &e.cosh, ne);
        }
        if !e.sinh.is_zero() {
            let ne = Exponents::new(e.cos.clone(), e.sin.clone(), &e.cosh + int(1), &e.sinh - int(1));
            out.add_term(c * &e.sinh, ne);
        }
    }
    out
}

fn power(base: f64, exp: f64) -> f64 {
    if exp == 0.0 {
        1.0
    } else if exp.fract() == 0.0 && exp.abs() < 64.0 {
        base.powi(exp as i32)
    } else {
        base.powf(exp)
    }
}

/// Floating-point value at `(theta, xi)`.
///
/// Points on the closed quadrant boundary are accepted only when no factor
/// has a negative exponent; points outside the closed quadrant are rejected
/// whenever a non-integer or negative power would be taken of a value that is
/// not strictly positive.
pub fn eval(f: &FunExpr, theta: f64, xi: f64) -> Result<f64> {
    let (c, s) = (theta.cos(), theta.sin());
    let (ch, sh) = (xi.cosh(), xi.sinh());
    let interior = theta > 0.0 && theta < FRAC_PI_2 && xi > 0.0;
    let mut acc = 0.0;
    for m in f.monomials() {
        if !interior {
            let inside_closed = (0.0..=FRAC_PI_2).contains(&theta) && xi >= 0.0;
            if !inside_closed || m.has_negative_exponent() {
                return Err(Error::Domain {
                    theta,
                    xi,
                    monomial: m.to_string(),
                });
            }
        }
        let e = &m.exps;
        acc += to_f64(&m.coeff)
            * power(c.max(0.0), to_f64(&e.cos))
            * power(s.max(0.0), to_f64(&e.sin))
            * power(ch, to_f64(&e.cosh))
            * power(sh.max(0.0), to_f64(&e.sinh));
    }
    Ok(acc)
}
