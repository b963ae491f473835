//! Reduction to a unique basis modulo `cos² + sin² = 1` and `cosh² - sinh² = 1`.
//!
//! Write `x = cos²θ, y = sin²θ` (resp. `X = cosh²ξ, Y = sinh²ξ`). A monomial
//! `cosᵖ sinᵠ` with `p = p₀ + 2a`, `q = q₀ + 2b`, `p₀, q₀ ∈ [0, 2)` is
//! `cos^{p₀} sin^{q₀} · xᵃ yᵇ`. Within one residue class `(p₀, q₀)` the Laurent
//! monomials `xᵃ yᵇ` span the rational functions of `x` with poles only at
//! `x = 0` and `x = 1`, whose partial-fraction basis is
//! `{ xⁿ : n ∈ ℤ } ∪ { y⁻ᵏ : k ≥ 1 }`. Distinct residue classes are linearly
//! independent (different monodromy), so the reduced form is unique and
//! structural equality coincides with equality of functions.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Pair {
    /// `x + y = 1`
    Circular,
    /// `X - Y = 1`
    Hyperbolic,
}

pub(crate) type Reduced = Rc<Vec<(i64, i64, BigInt)>>;

fn is_canonical(a: i64, b: i64) -> bool {
    b == 0 || (a == 0 && b < 0)
}

thread_local! {
    static CACHE: RefCell<HashMap<(Pair, i64, i64), Reduced>> = RefCell::new(HashMap::new());
}

/// Expands `xᵃ yᵇ` in the canonical basis, returning `(a', b', coeff)` triples.
pub(crate) fn reduce(pair: Pair, a: i64, b: i64) -> Reduced {
    if is_canonical(a, b) {
        return Rc::new(vec![(a, b, BigInt::one())]);
    }
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&(pair, a, b)).cloned()) {
        return hit;
    }
    // Each rule writes the monomial as a signed sum of two monomials that are
    // strictly closer to the canonical set.
    let (first, second, sign): ((i64, i64), (i64, i64), i64) = match pair {
        Pair::Circular => {
            if b > 0 {
                ((a, b - 1), (a + 1, b - 1), -1)
            } else if a > 0 {
                ((a - 1, b), (a - 1, b + 1), -1)
            } else {
                ((a + 1, b), (a, b + 1), 1)
            }
        }
        Pair::Hyperbolic => {
            if b > 0 {
                ((a + 1, b - 1), (a, b - 1), -1)
            } else if a > 0 {
                ((a - 1, b + 1), (a - 1, b), 1)
            } else {
                ((a + 1, b), (a, b + 1), -1)
            }
        }
    };
    let mut acc: HashMap<(i64, i64), BigInt> = HashMap::new();
    for (aa, bb, c) in reduce(pair, first.0, first.1).iter() {
        *acc.entry((*aa, *bb)).or_default() += c;
    }
    for (aa, bb, c) in reduce(pair, second.0, second.1).iter() {
        *acc.entry((*aa, *bb)).or_default() += c * sign;
    }
    let mut out: Vec<(i64, i64, BigInt)> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), c)| (a, b, c))
        .collect();
    out.sort_by_key(|t| (t.0, t.1));
    let out = Rc::new(out);
    CACHE.with(|c| c.borrow_mut().insert((pair, a, b), out.clone()));
    out
}
