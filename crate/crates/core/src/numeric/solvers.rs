use super::{EigenResult, GridSpec, SymTridiagonal, Variable};
use crate::error::{Error, Result};

/// Default number of θ levels returned by [`solve_theta`].
pub const THETA_LEVELS: usize = 5;

const TAIL_FRACTION: f64 = 0.05;
const TAIL_MASS_LIMIT: f64 = 1e-8;

/// Discretizes `-(1/w)(w v')' + q v` on a cell-centred grid with zero flux at
/// the left end (where `w` vanishes) and a Dirichlet face at the right end when
/// `dirichlet_right` is set, then symmetrizes with `M^{-1/2}`.
///
/// Weights are passed as logarithms: they span hundreds of orders of
/// magnitude on long ξ intervals.
fn weighted_operator(
    n: usize,
    h: f64,
    ln_w: impl Fn(f64) -> f64,
    q: impl Fn(f64) -> f64,
    dirichlet_right: bool,
) -> SymTridiagonal {
    let centre: Vec<f64> = (0..n).map(|i| ln_w((i as f64 + 0.5) * h)).collect();
    let face: Vec<f64> = (0..=n).map(|i| ln_w(i as f64 * h)).collect();
    let h2 = h * h;
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        let left = if i == 0 { 0.0 } else { (face[i] - centre[i]).exp() };
        let mut right = (face[i + 1] - centre[i]).exp();
        if i + 1 == n && dirichlet_right {
            right *= 2.0;
        } else if i + 1 == n {
            right = 0.0;
        }
        diag.push((left + right) / h2 + q((i as f64 + 0.5) * h));
    }
    let off = (0..n.saturating_sub(1))
        .map(|i| -(face[i + 1] - 0.5 * (centre[i] + centre[i + 1])).exp() / h2)
        .collect();
    SymTridiagonal::new(diag, off)
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} = {x} is not finite")))
    }
}

/// Lowest [`THETA_LEVELS`] eigenvalues of
/// `-∂² + (l1² - 1/4)/sin²θ + (l0² - 1/4)/cos²θ` on `(0, π/2)`.
pub fn solve_theta(l0: f64, l1: f64, grid: &GridSpec) -> Result<EigenResult> {
    solve_theta_levels(l0, l1, grid, THETA_LEVELS)
}

/// As [`solve_theta`] with an explicit number of levels.
///
/// The regular solutions behave like `cos^{l0+1/2} sin^{l1+1/2}` at the ends,
/// so that factor is split off and the remaining problem is solved with weight
/// `cos^{2l0+1} sin^{2l1+1}`.
pub fn solve_theta_levels(l0: f64, l1: f64, grid: &GridSpec, levels: usize) -> Result<EigenResult> {
    grid.validate(Variable::Theta)?;
    check_finite("l0", l0)?;
    check_finite("l1", l1)?;
    if l0 < -0.5 || l1 < -0.5 {
        return Err(Error::Parameter(format!(
            "solve_theta needs l0, l1 >= -1/2, got ({l0}, {l1})"
        )));
    }
    let n = grid.n;
    let h = grid.length() / n as f64;
    let (a, b) = (2.0 * l0 + 1.0, 2.0 * l1 + 1.0);
    let ln_w = |x: f64| {
        let c = x.cos().max(0.0);
        let s = x.sin().max(0.0);
        let term = |e: f64, v: f64| if e == 0.0 { 0.0 } else { e * v.ln() };
        term(a, c) + term(b, s)
    };
    let ground = (1.0 + l0 + l1).powi(2);
    let t = weighted_operator(n, h, ln_w, |_| ground, false);
    let k = levels.min(n);
    let mut res = EigenResult {
        eigenvalues: Vec::new(),
        residual_norms: Vec::new(),
        grid: *grid,
        warnings: Vec::new(),
    };
    for i in 0..k {
        let lam = t.eigenvalue(i);
        let v = t.eigenvector(lam);
        res.residual_norms.push(t.residual(lam, &v));
        res.eigenvalues.push(lam);
    }
    Ok(res)
}

/// Negative eigenvalues of
/// `-∂² - coth ξ ∂ - (l2² - 1/4)/cosh²ξ + α/sinh²ξ` on `(0, cutoff)` in the
/// `sinh ξ dξ` inner product, Dirichlet at the cutoff.
///
/// The factor `sinh^{√α} ξ` is split off, leaving weight `sinh^{2√α+1}` and
/// potential `-(l2² - 1/4)/cosh² - √α(√α + 1)`.
pub fn solve_xi(l2: f64, alpha: f64, grid: &GridSpec) -> Result<EigenResult> {
    grid.validate(Variable::Xi)?;
    check_finite("l2", l2)?;
    check_finite("alpha", alpha)?;
    if alpha <= 0.0 {
        return Err(Error::Parameter(format!(
            "separation constant alpha = {alpha} must be positive"
        )));
    }
    let n = grid.n;
    let h = grid.cutoff / n as f64;
    let b = alpha.sqrt();
    // ln sinh x, stable for large x
    let ln_sinh = |x: f64| {
        if x > 20.0 {
            x - std::f64::consts::LN_2 + (-(-2.0 * x).exp()).ln_1p()
        } else {
            x.sinh().ln()
        }
    };
    let ln_w = |x: f64| (2.0 * b + 1.0) * ln_sinh(x);
    let coupling = l2 * l2 - 0.25;
    let q = |x: f64| -coupling / x.cosh().powi(2) - b * (b + 1.0);
    let t = weighted_operator(n, h, ln_w, q, true);
    let count = t.count_below(0.0);
    let mut res = EigenResult {
        eigenvalues: Vec::new(),
        residual_norms: Vec::new(),
        grid: *grid,
        warnings: Vec::new(),
    };
    for i in 0..count {
        let lam = t.eigenvalue(i);
        let v = t.eigenvector(lam);
        res.residual_norms.push(t.residual(lam, &v));
        res.eigenvalues.push(lam);
        if i == 0 {
            let start = ((1.0 - TAIL_FRACTION) * n as f64) as usize;
            let tail: f64 = v[start..].iter().map(|x| x * x).sum();
            if tail > TAIL_MASS_LIMIT {
                res.warnings.push(format!(
                    "lowest eigenfunction has mass {tail:.3e} in the last {:.0}% of (0, {}); increase the cutoff",
                    TAIL_FRACTION * 100.0,
                    grid.cutoff
                ));
            }
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_levels_follow_the_ladder() {
        let r = solve_theta(0.0, 0.0, &GridSpec::theta(800)).unwrap();
        for (n, a) in r.eigenvalues.iter().take(3).enumerate() {
            let exact = (1.0 + 2.0 * n as f64).powi(2);
            assert!((a - exact).abs() / exact < 1e-4, "{n}: {a}");
        }
        for (lam, res) in r.eigenvalues.iter().zip(&r.residual_norms) {
            assert!(*res <= 1e-6 * lam.abs() + 1e-8, "{res}");
        }
        let r = solve_theta(1.0, 0.0, &GridSpec::theta(800)).unwrap();
        assert!((r.eigenvalues[0] - 4.0).abs() < 1e-3);
    }

    #[test]
    fn xi_ground_energy() {
        let r = solve_xi(-5.0, 1.0, &GridSpec::xi(2000, 25.0)).unwrap();
        assert!((r.eigenvalues[0] + 8.75).abs() < 1e-3, "{:?}", r.eigenvalues);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn xi_without_bound_states() {
        let r = solve_xi(-2.4, 1.0, &GridSpec::xi(200, 25.0)).unwrap();
        assert!(r.eigenvalues.is_empty(), "{:?}", r.eigenvalues);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_theta(-1.0, 0.0, &GridSpec::theta(100)).is_err());
        assert!(solve_theta(0.0, 0.0, &GridSpec::theta(8)).is_err());
        assert!(solve_xi(-5.0, 0.0, &GridSpec::xi(100, 25.0)).is_err());
        assert!(solve_xi(-5.0, 1.0, &GridSpec::theta(100)).is_err());
        assert!(solve_xi(-5.0, 1.0, &GridSpec::xi(100, -1.0)).is_err());
    }

    #[test]
    fn short_cutoff_warns() {
        let r = solve_xi(-5.0, 1.0, &GridSpec::xi(200, 2.0)).unwrap();
        assert!(!r.warnings.is_empty());
    }
}
