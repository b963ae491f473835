use nalgebra::DMatrix;

use crate::algebra::{eval, inner, FunExpr};
use crate::error::{Error, Result};
use crate::operators::{LabeledState, ParamPoint};

const RANK_TOL: f64 = 1e-9;

/// A state scaled to unit norm. The scale factor is in general irrational, so
/// the exact expression is kept alongside the floating-point constant.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub state: LabeledState,
    pub constant: f64,
}

impl Normalized {
    pub fn eval(&self, theta: f64, xi: f64) -> Result<f64> {
        Ok(self.constant * eval(&self.state.expr, theta, xi)?)
    }
}

/// Real linear combination of exact expressions sharing one label.
#[derive(Clone, Debug)]
pub struct Superposition {
    pub label: ParamPoint,
    pub parts: Vec<(f64, FunExpr)>,
}

impl Superposition {
    pub fn eval(&self, theta: f64, xi: f64) -> Result<f64> {
        let mut acc = 0.0;
        for (c, f) in &self.parts {
            if *c != 0.0 {
                acc += c * eval(f, theta, xi)?;
            }
        }
        Ok(acc)
    }
}

/// `1/√⟨st, st⟩` together with the state.
pub fn normalize(st: &LabeledState) -> Result<Normalized> {
    if st.is_zero() {
        return Err(Error::ZeroState);
    }
    let n2 = inner(&st.expr, &st.expr)?;
    if n2.is_nan() || n2 <= 0.0 || n2.is_infinite() {
        return Err(Error::ZeroState);
    }
    Ok(Normalized {
        state: st.clone(),
        constant: 1.0 / n2.sqrt(),
    })
}

pub fn gram_matrix(states: &[LabeledState]) -> Result<DMatrix<f64>> {
    let n = states.len();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = inner(&states[i].expr, &states[j].expr)?;
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    Ok(g)
}

/// Unit-diagonal version of the Gram matrix; zero states are dropped.
fn correlation(g: &DMatrix<f64>) -> DMatrix<f64> {
    let keep: Vec<usize> = (0..g.nrows()).filter(|&i| g[(i, i)] > 0.0).collect();
    DMatrix::from_fn(keep.len(), keep.len(), |a, b| {
        let (i, j) = (keep[a], keep[b]);
        g[(i, j)] / (g[(i, i)] * g[(j, j)]).sqrt()
    })
}

fn singular_values(states: &[LabeledState]) -> Result<Vec<f64>> {
    let c = correlation(&gram_matrix(states)?);
    if c.nrows() == 0 {
        return Ok(Vec::new());
    }
    let mut sv: Vec<f64> = c.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Numerical rank of the Gram matrix of the normalized states.
pub fn gram_rank(states: &[LabeledState]) -> Result<usize> {
    let sv = singular_values(states)?;
    let Some(&top) = sv.first() else { return Ok(0) };
    Ok(sv.iter().filter(|&&s| s > RANK_TOL * top).count())
}

/// Smallest singular value of the Gram matrix after normalizing each state.
pub fn smallest_singular_value(states: &[LabeledState]) -> Result<f64> {
    Ok(singular_values(states)?.last().copied().unwrap_or(0.0))
}

/// Gram–Schmidt in the span of `states` (all at one label). Dependent
/// directions are dropped.
pub fn orthonormalize(states: &[LabeledState]) -> Result<Vec<Superposition>> {
    let Some(first) = states.first() else {
        return Ok(Vec::new());
    };
    let g = gram_matrix(states)?;
    let n = states.len();
    let dot = |u: &[f64], v: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += u[i] * g[(i, j)] * v[j];
            }
        }
        s
    };
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for k in 0..n {
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        let start = g[(k, k)];
        if start <= 0.0 {
            continue;
        }
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &v);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= c * bi;
                }
            }
        }
        let n2 = dot(&v, &v);
        if n2 <= RANK_TOL * start {
            continue;
        }
        let s = n2.sqrt();
        v.iter_mut().for_each(|x| *x /= s);
        basis.push(v);
    }
    Ok(basis
        .into_iter()
        .map(|v| Superposition {
            label: first.label.clone(),
            parts: v.into_iter().zip(states).map(|(c, st)| (c, st.expr.clone())).collect(),
        })
        .collect())
}
