//! Independent oracles shared by the integration tests: double-exponential
//! quadrature, a direct monomial evaluator, exact rank over the rationals
//! and a finite-difference Hamiltonian.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use hyperladder::rational::to_f64;
use hyperladder::{Exponents, FunExpr, ParamPoint, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `∫₀¹ f(x, 1 - x) dx` by tanh-sinh with step halving until successive
/// estimates agree to `tol` (relative). The complement is passed separately
/// so endpoint singularities at either end are resolved.
pub fn tanh_sinh(f: &dyn Fn(f64, f64) -> f64, tol: f64) -> f64 {
    const T_MAX: f64 = 6.5;
    let node = |t: f64| -> f64 {
        let v = PI * t.sinh();
        let x = 1.0 / (1.0 + (-v).exp());
        let xc = 1.0 / (1.0 + v.exp());
        if x == 0.0 || xc == 0.0 {
            return 0.0;
        }
        let w = PI * t.cosh() * x * xc;
        if w == 0.0 {
            0.0
        } else {
            w * f(x, xc)
        }
    };
    let mut h = 0.25;
    let mut sum = node(0.0);
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        sum += node(k as f64 * h) + node(-(k as f64) * h);
        k += 1;
    }
    let mut est = h * sum;
    for _ in 0..7 {
        h /= 2.0;
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            sum += node(k as f64 * h) + node(-(k as f64) * h);
            k += 2;
        }
        let next = h * sum;
        if (next - est).abs() <= tol * next.abs().max(1e-300) {
            return next;
        }
        est = next;
    }
    est
}

/// Logarithms of `cos θ, sin θ` at `θ = (π/2) x` with `1 - x = xc`.
fn ln_trig(x: f64, xc: f64) -> (f64, f64) {
    ((FRAC_PI_2 * xc).sin().ln(), (FRAC_PI_2 * x).sin().ln())
}

/// `(ξ, ln cosh ξ, ln sinh ξ)` at `ξ = -ln u` with `1 - u = uc`.
fn ln_hyp(u: f64, uc: f64) -> (f64, f64, f64) {
    let ln_u = if u < 0.5 { u.ln() } else { (-uc).ln_1p() };
    let ln_sinh = -ln_u + uc.ln() + (1.0 + u).ln() - LN_2;
    let ln_cosh = -ln_u + (u * u).ln_1p() - LN_2;
    (-ln_u, ln_cosh, ln_sinh)
}

fn terms(f: &FunExpr) -> Vec<(f64, [f64; 4])> {
    f.terms()
        .map(|(e, c)| {
            (
                to_f64(c),
                [to_f64(&e.cos), to_f64(&e.sin), to_f64(&e.cosh), to_f64(&e.sinh)],
            )
        })
        .collect()
}

fn value(ts: &[(f64, [f64; 4])], lc: f64, ls: f64, lch: f64, lsh: f64) -> f64 {
    ts.iter()
        .map(|(c, e)| c * (e[0] * lc + e[1] * ls + e[2] * lch + e[3] * lsh).exp())
        .sum()
}

/// A monomial as plain floats: coefficient and exponents of cos, sin, cosh, sinh.
pub type RawTerm = (f64, [f64; 4]);

/// `∫₀^{π/2} ∫₀^∞ a b sinh ξ dξ dθ` by nested tanh-sinh quadrature.
pub fn quad_inner(a: &FunExpr, b: &FunExpr) -> f64 {
    quad_inner_raw(&terms(a), &terms(b))
}

/// As [`quad_inner`] on expressions given as raw (unreduced) term lists.
pub fn quad_inner_raw(a: &[RawTerm], b: &[RawTerm]) -> f64 {
    // every pair of terms is combined in log space so that growing and
    // decaying factors never meet as inf * 0
    let pairs: Vec<(f64, [f64; 4])> = a
        .iter()
        .flat_map(|(ca, ea)| {
            b.iter().map(move |(cb, eb)| {
                (
                    ca * cb,
                    [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3] + 1.0],
                )
            })
        })
        .collect();
    let outer = |x: f64, xc: f64| -> f64 {
        let (lc, ls) = ln_trig(x, xc);
        let inner = |u: f64, uc: f64| -> f64 {
            let (xi, lch, lsh) = ln_hyp(u, uc);
            // dξ = du / u = e^ξ du
            pairs
                .iter()
                .map(|(c, e)| c * (e[0] * lc + e[1] * ls + e[2] * lch + e[3] * lsh + xi).exp())
                .sum()
        };
        tanh_sinh(&inner, 1e-11)
    };
    FRAC_PI_2 * tanh_sinh(&outer, 1e-11)
}

/// Rank of expressions viewed as coefficient vectors in the canonical basis,
/// by exact Gaussian elimination.
pub fn exact_rank(exprs: &[FunExpr]) -> usize {
    let mut index: BTreeMap<Exponents, usize> = BTreeMap::new();
    for f in exprs {
        for (e, _) in f.terms() {
            let n = index.len();
            index.entry(e.clone()).or_insert(n);
        }
    }
    let cols = index.len();
    let mut rows: Vec<Vec<Rational>> = exprs
        .iter()
        .map(|f| {
            let mut row = vec![Rational::zero(); cols];
            for (e, c) in f.terms() {
                row[index[e]] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / &rows[rank][col];
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] * &inv;
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Central-difference application of the Hamiltonian to a point-evaluable
/// function.
pub fn fd_hamiltonian(f: &dyn Fn(f64, f64) -> f64, l: &ParamPoint, theta: f64, xi: f64, h: f64) -> f64 {
    let k = |r: &Rational| to_f64(r).powi(2) - 0.25;
    let v = f(theta, xi);
    let d2t = (f(theta + h, xi) - 2.0 * v + f(theta - h, xi)) / (h * h);
    let d2x = (f(theta, xi + h) - 2.0 * v + f(theta, xi - h)) / (h * h);
    let d1x = (f(theta, xi + h) - f(theta, xi - h)) / (2.0 * h);
    let angular = -d2t + k(&l.l1) / theta.sin().powi(2) * v + k(&l.l0) / theta.cos().powi(2) * v;
    -d2x - d1x / xi.tanh() - k(&l.l2) / xi.cosh().powi(2) * v + angular / xi.sinh().powi(2)
}

/// Direct evaluation of an expression, independent of the crate's `eval`.
pub fn direct_eval(f: &FunExpr, theta: f64, xi: f64) -> f64 {
    let ts = terms(f);
    value(&ts, theta.cos().ln(), theta.sin().ln(), xi.cosh().ln(), xi.sinh().ln())
}

// ---- proptest strategies ----

pub fn rational(max_abs: i64) -> impl Strategy<Value = Rational> {
    (prop::sample::select(vec![1i64, 2, 3, 4, 6]), any::<u32>()).prop_map(move |(den, raw)| {
        let span = 2 * max_abs * den + 1;
        let num = (raw as i64 % span) - max_abs * den;
        Rational::new(num.into(), den.into())
    })
}

pub fn rational_in(lo: i64, hi: i64, den_max: i64) -> impl Strategy<Value = Rational> {
    (1..=den_max, any::<u32>()).prop_map(move |(den, raw)| {
        let span = (hi - lo) * den + 1;
        let num = lo * den + raw as i64 % span;
        Rational::new(num.into(), den.into())
    })
}

pub fn nonzero_coeff() -> impl Strategy<Value = Rational> {
    rational(3).prop_filter("nonzero", |c| !c.is_zero())
}

pub fn monomial() -> impl Strategy<Value = FunExpr> {
    (nonzero_coeff(), rational(4), rational(4), rational(4), rational(4))
        .prop_map(|(c, p, q, r, s)| FunExpr::term(c, p, q, r, s))
}

pub fn expr() -> impl Strategy<Value = FunExpr> {
    prop::collection::vec(monomial(), 1..4).prop_map(|ms| ms.into_iter().fold(FunExpr::zero(), |acc, m| &acc + &m))
}

pub fn label() -> impl Strategy<Value = ParamPoint> {
    (rational(6), rational(6), rational(6)).prop_map(|(a, b, c)| ParamPoint::new(a, b, c))
}
