use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::Zero;

use super::expr::{split_exponent, Exponents, FunExpr, Monomial};
use crate::error::{Error, Result};
use crate::rational::{int, rat, to_f64, Rational};

/// `ln B(x, y)` for `x, y > 0`.
pub fn ln_beta(x: f64, y: f64) -> f64 {
    libm::lgamma(x) + libm::lgamma(y) - libm::lgamma(x + y)
}

/// `∫₀^{π/2} ∫₀^∞ m(θ, ξ) sinh ξ dξ dθ` for a single monomial.
///
/// With `m = c cosᵖ sinᵠ coshʳ sinhˢ` the two factors are Beta integrals:
/// `¼ B((q+1)/2, (p+1)/2) · B((s+2)/2, -(r+s+1)/2)`, finite iff
/// `p > -1`, `q > -1`, `s > -2` and `r + s < -1`.
pub fn monomial_integral(m: &Monomial) -> Result<f64> {
    let e = &m.exps;
    let diverges = |condition: &str| Error::Divergent {
        monomial: m.to_string(),
        condition: condition.to_string(),
    };
    if e.cos <= int(-1) {
        return Err(diverges("cos exponent p > -1"));
    }
    if e.sin <= int(-1) {
        return Err(diverges("sin exponent q > -1"));
    }
    if e.sinh <= int(-2) {
        return Err(diverges("sinh exponent s > -2"));
    }
    let rs: Rational = &e.cosh + &e.sinh;
    if rs >= int(-1) {
        return Err(diverges("cosh + sinh exponents r + s < -1"));
    }
    let half = rat(1, 2);
    let th_a = to_f64(&((&e.sin + int(1)) * &half));
    let th_b = to_f64(&((&e.cos + int(1)) * &half));
    let xi_a = to_f64(&((&e.sinh + int(2)) * &half));
    let xi_b = to_f64(&(-(rs + int(1)) * &half));
    let magnitude = (ln_beta(th_a, th_b) + ln_beta(xi_a, xi_b)).exp() / 4.0;
    Ok(to_f64(&m.coeff) * magnitude)
}

/// Rewrites an expression so that each term is integrable exactly when the
/// whole expression is.
///
/// The canonical basis can split a convergent ξ-integrand into terms that
/// diverge separately at ξ → ∞ (e.g. `cosh⁻² sinh⁻¹ = sinh⁻¹ - cosh⁻² sinh`).
/// Within one class of `(p, q)` and the residues of `(r, s)` mod 2, a term is
/// `c · tᵇ (1-t)^{-(a+b)}` in `t = tanh²ξ`; clearing to a common power of
/// `(1-t)` and cancelling every factor `(1-t)` of the numerator leaves terms
/// whose behaviour at both ends can no longer cancel. The θ side needs no
/// such step: its singular parts at each end are unique partial fractions.
fn integrable_terms(f: &FunExpr) -> Vec<Monomial> {
    type Key = (Rational, Rational, Rational, Rational);
    let mut groups: BTreeMap<Key, Vec<(i64, i64, Rational)>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let (r0, a) = split_exponent(&e.cosh);
        let (s0, b) = split_exponent(&e.sinh);
        groups
            .entry((e.cos.clone(), e.sin.clone(), r0, s0))
            .or_default()
            .push((a, b, c.clone()));
    }
    let mut out = Vec::new();
    for ((p, q, r0, s0), terms) in groups {
        let m = terms.iter().map(|(a, b, _)| a + b).max().expect("non-empty group");
        // numerator as a Laurent polynomial in t
        let mut num: BTreeMap<i64, Rational> = BTreeMap::new();
        for (a, b, c) in &terms {
            let n = (m - a - b) as u64;
            for k in 0..=n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let coeff = c * Rational::from_integer(binomial(n, k).into()) * int(sign);
                *num.entry(b + k as i64).or_insert_with(Rational::zero) += coeff;
            }
        }
        num.retain(|_, v| !v.is_zero());
        let mut m = m;
        while !num.is_empty() && num.values().fold(Rational::zero(), |acc, v| acc + v).is_zero() {
            // divide by (1 - t): prefix sums, dropping the vanishing top coefficient
            let mut running = Rational::zero();
            let mut next = BTreeMap::new();
            let lo = *num.keys().next().unwrap();
            let top = *num.keys().next_back().unwrap();
            for j in lo..top {
                if let Some(v) = num.get(&j) {
                    running += v;
                }
                if !running.is_zero() {
                    next.insert(j, running.clone());
                }
            }
            num = next;
            m -= 1;
        }
        for (j, c) in num {
            let exps = Exponents::new(p.clone(), q.clone(), &r0 + int(2 * (m - j)), &s0 + int(2 * j));
            out.push(Monomial::new(c, exps));
        }
    }
    out
}

/// Real inner product `⟨a, b⟩ = ∫ a·b sinh ξ dθ dξ` over the open quadrant
/// `θ ∈ (0, π/2)`, `ξ ∈ (0, ∞)`.
///
/// The product is integrated term by term after [`integrable_terms`]; the
/// first divergent term is reported.
pub fn inner(a: &FunExpr, b: &FunExpr) -> Result<f64> {
    let prod = a * b;
    let mut acc = 0.0;
    for m in integrable_terms(&prod) {
        acc += monomial_integral(&m)?;
    }
    Ok(acc)
}
