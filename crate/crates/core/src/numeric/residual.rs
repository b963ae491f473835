use super::{GridSpec, Variable};
use crate::algebra::eval;
use crate::error::Result;
use crate::operators::LabeledState;
use crate::rational::{to_f64, Rational};
use crate::spectra::normalize;

/// Fraction of each interval excluded at both ends.
const MARGIN: f64 = 0.1;

/// `max |(H_num Φ − E Φ)|` over the grid nodes inside the central 80% of each
/// interval, with `Φ` normalized and `H_num` built from central differences of
/// point values at the grid spacing. Converges like `h²` for eigenstates.
pub fn residual_on_grid(
    st: &LabeledState,
    energy: &Rational,
    grid_theta: &GridSpec,
    grid_xi: &GridSpec,
) -> Result<f64> {
    grid_theta.validate(Variable::Theta)?;
    grid_xi.validate(Variable::Xi)?;
    if st.is_zero() {
        return Ok(0.0);
    }
    let c = normalize(st)?.constant;
    let f = |t: f64, x: f64| -> Result<f64> { Ok(c * eval(&st.expr, t, x)?) };
    let l = &st.label;
    let k0 = to_f64(&l.l0).powi(2) - 0.25;
    let k1 = to_f64(&l.l1).powi(2) - 0.25;
    let k2 = to_f64(&l.l2).powi(2) - 0.25;
    let e = to_f64(energy);

    let ht = grid_theta.length() / (grid_theta.n + 1) as f64;
    let hx = grid_xi.length() / (grid_xi.n + 1) as f64;
    let window = |g: &GridSpec| {
        let n = g.n + 1;
        let lo = (MARGIN * n as f64).ceil() as usize;
        let hi = ((1.0 - MARGIN) * n as f64).floor() as usize;
        lo.max(1)..=hi.min(g.n)
    };

    let mut worst: f64 = 0.0;
    for i in window(grid_theta) {
        let t = i as f64 * ht;
        let (s, co) = (t.sin(), t.cos());
        for j in window(grid_xi) {
            let x = j as f64 * hx;
            let v = f(t, x)?;
            let d2t = (f(t + ht, x)? - 2.0 * v + f(t - ht, x)?) / (ht * ht);
            let (xp, xm) = (f(t, x + hx)?, f(t, x - hx)?);
            let d2x = (xp - 2.0 * v + xm) / (hx * hx);
            let d1x = (xp - xm) / (2.0 * hx);
            let angular = -d2t + k1 / (s * s) * v + k0 / (co * co) * v;
            let h = -d2x - d1x / x.tanh() - k2 / x.cosh().powi(2) * v + angular / x.sinh().powi(2);
            worst = worst.max((h - e * v).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FunExpr;
    use crate::rational::{int, rat};
    use crate::spectra::ground_full;

    #[test]
    fn residual_shrinks_quadratically() {
        let st = ground_full(&int(0), &int(-5)).unwrap();
        let e = rat(-35, 4);
        let r = |m: usize| residual_on_grid(&st, &e, &GridSpec::theta(m), &GridSpec::xi(m, 10.0)).unwrap();
        let (a, b) = (r(39), r(79));
        let slope = (a / b).log2();
        assert!(slope > 1.9, "{a} {b} {slope}");
        let wrong = residual_on_grid(&st, &(e + int(1)), &GridSpec::theta(79), &GridSpec::xi(79, 10.0)).unwrap();
        assert!(wrong > 1e-2);
    }

    #[test]
    fn zero_state() {
        let st = LabeledState::new(crate::operators::ParamPoint::ints(0, 0, -5), FunExpr::zero());
        assert_eq!(
            residual_on_grid(&st, &int(0), &GridSpec::theta(20), &GridSpec::xi(20, 5.0)).unwrap(),
            0.0
        );
    }
}
