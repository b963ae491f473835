//! Realization of the ladder operators in the (θ, ξ) chart.
//!
//! Indexed first-order operators:
//!
//! ```text
//! A±_{a,b} = ±∂θ - (a+½) tan θ + (b+½) cot θ
//! B±_{a,b} = ±J₁ + (b+½) tanh ξ cos θ + (a+½) coth ξ sec θ
//! C±_{a,b} = ±J₀ + (b+½) tanh ξ sin θ + (-a+½) coth ξ csc θ
//! J₀ = sin θ ∂ξ + cos θ coth ξ ∂θ,   J₁ = cos θ ∂ξ - sin θ coth ξ ∂θ
//! ```
//!
//! The free-index generators pick the index that makes each operator an
//! intertwiner for the state's label and carry a factor ½. Tilde generators
//! are the hatted ones with the reflected parameter substituted.

use num_traits::One;

use super::names::OperatorName::{self, *};
use super::names::OperatorWord;
use super::{LabeledState, ParamPoint};
use crate::algebra::expr::elementary::*;
use crate::algebra::{d_theta, d_xi, FunExpr};
use crate::rational::{half, int, rat, Rational};

/// `coeff_θ ∂θ + coeff_ξ ∂ξ + mult`
#[derive(Clone, Debug)]
pub(crate) struct FirstOrder {
    theta: FunExpr,
    xi: FunExpr,
    mult: FunExpr,
}

impl FirstOrder {
    pub(crate) fn apply(&self, f: &FunExpr) -> FunExpr {
        let mut out = &self.mult * f;
        if !self.theta.is_zero() {
            out = &out + &(&self.theta * &d_theta(f));
        }
        if !self.xi.is_zero() {
            out = &out + &(&self.xi * &d_xi(f));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    A,
    B,
    C,
}

fn sign_expr(plus: bool) -> Rational {
    if plus {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The indexed operator `K±_{a,b}` as a first-order differential operator.
pub(crate) fn indexed(kind: Kind, plus: bool, a: &Rational, b: &Rational) -> FirstOrder {
    let s = sign_expr(plus);
    match kind {
        Kind::A => FirstOrder {
            theta: FunExpr::constant(s),
            xi: FunExpr::zero(),
            mult: &tan().scale(&-(a + half())) + &cot().scale(&(b + half())),
        },
        Kind::B => FirstOrder {
            theta: (&sin() * &coth()).scale(&-s.clone()),
            xi: cos().scale(&s),
            mult: &(&tanh() * &cos()).scale(&(b + half())) + &(&coth() * &sec()).scale(&(a + half())),
        },
        Kind::C => FirstOrder {
            theta: (&cos() * &coth()).scale(&s),
            xi: sin().scale(&s),
            mult: &(&tanh() * &sin()).scale(&(b + half())) + &(&coth() * &csc()).scale(&(half() - a)),
        },
    }
}

/// Index pair and label shift for a hatted generator acting at `l`.
fn hatted_index(kind: Kind, plus: bool, l: &ParamPoint) -> (Rational, Rational) {
    match (kind, plus) {
        (Kind::A, false) => (l.l0.clone(), l.l1.clone()),
        (Kind::A, true) => (&l.l0 - int(1), &l.l1 - int(1)),
        (Kind::B, false) => (l.l0.clone(), l.l2.clone()),
        (Kind::B, true) => (&l.l0 - int(1), &l.l2 - int(1)),
        (Kind::C, false) => (l.l1.clone(), l.l2.clone()),
        (Kind::C, true) => (&l.l1 + int(1), &l.l2 - int(1)),
    }
}

/// Decomposes a ladder name into (family, raising?, reflection used for the tilde).
pub(crate) fn anatomy(op: OperatorName) -> Option<(Kind, bool, Option<usize>)> {
    Some(match op {
        APlus => (Kind::A, true, None),
        AMinus => (Kind::A, false, None),
        BPlus => (Kind::B, true, None),
        BMinus => (Kind::B, false, None),
        CPlus => (Kind::C, true, None),
        CMinus => (Kind::C, false, None),
        ATildePlus => (Kind::A, true, Some(0)),
        ATildeMinus => (Kind::A, false, Some(0)),
        BTildePlus => (Kind::B, true, Some(0)),
        BTildeMinus => (Kind::B, false, Some(0)),
        CTildePlus => (Kind::C, true, Some(1)),
        CTildeMinus => (Kind::C, false, Some(1)),
        L0 | L1 | L2 => return None,
    })
}

/// The concrete first-order operator a ladder generator uses at label `l`
/// (without the ½ factor).
pub(crate) fn concrete(op: OperatorName, l: &ParamPoint) -> Option<FirstOrder> {
    let (kind, plus, refl) = anatomy(op)?;
    let at = match refl {
        Some(i) => l.reflected(i),
        None => l.clone(),
    };
    let (a, b) = hatted_index(kind, plus, &at);
    Some(indexed(kind, plus, &a, &b))
}

/// Diagonal generators: hatted `Â, B̂, Ĉ` and their reflected partners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diag {
    A,
    B,
    C,
    ATilde,
    BTilde,
    CTilde,
}

/// `Â = -½(l₀+l₁)`, `B̂ = -½(l₀+l₂)`, `Ĉ = -½(l₂-l₁)`; tildes substitute
/// `l₀ ↦ -l₀` (A, B) or `l₁ ↦ -l₁` (C).
pub fn diag_eigenvalue(which: Diag, l: &ParamPoint) -> Rational {
    let m = rat(-1, 2);
    match which {
        Diag::A => m * (&l.l0 + &l.l1),
        Diag::B => m * (&l.l0 + &l.l2),
        Diag::C => m * (&l.l2 - &l.l1),
        Diag::ATilde => m * (&l.l1 - &l.l0),
        Diag::BTilde => m * (&l.l2 - &l.l0),
        Diag::CTilde => m * (&l.l2 + &l.l1),
    }
}

/// Scale factors of the twelve ladder generators.
///
/// The default realization uses ½ everywhere. [`Realization::with_scale`]
/// exists so harnesses can check that the identity suite notices a broken
/// operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    scales: Vec<(OperatorName, Rational)>,
}

impl Default for Realization {
    fn default() -> Self {
        Realization {
            scales: OperatorName::LADDERS.iter().map(|&op| (op, half())).collect(),
        }
    }
}

impl Realization {
    /// Replaces the ½ prefactor of one ladder operator.
    pub fn with_scale(mut self, op: OperatorName, factor: Rational) -> Self {
        for entry in &mut self.scales {
            if entry.0 == op {
                entry.1 = factor.clone();
            }
        }
        self
    }

    fn scale_of(&self, op: OperatorName) -> Rational {
        self.scales
            .iter()
            .find(|(o, _)| *o == op)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(half)
    }

    pub fn apply(&self, op: OperatorName, st: &LabeledState) -> LabeledState {
        let label = st.label.shifted(op.shift());
        let expr = match op {
            L0 => st.expr.scale(&st.label.l0),
            L1 => st.expr.scale(&st.label.l1),
            L2 => st.expr.scale(&st.label.l2),
            _ => {
                let fo = concrete(op, &st.label).expect("ladder operator");
                fo.apply(&st.expr).scale(&self.scale_of(op))
            }
        };
        LabeledState::new(label, expr)
    }

    pub fn apply_gen(&self, g: super::Gen, st: &LabeledState) -> LabeledState {
        match g {
            super::Gen::Op(op) => self.apply(op, st),
            super::Gen::Diag(d) => st.scale(&diag_eigenvalue(d, &st.label)),
        }
    }

    pub fn apply_word(&self, word: &OperatorWord, st: &LabeledState) -> LabeledState {
        word.application_order()
            .fold(st.clone(), |acc, op| self.apply(op, &acc))
    }
}

/// Applies a generator with the standard realization; the result carries
/// `st.label + shift(op)`.
pub fn apply(op: OperatorName, st: &LabeledState) -> LabeledState {
    Realization::default().apply(op, st)
}

pub fn apply_gen(g: super::Gen, st: &LabeledState) -> LabeledState {
    Realization::default().apply_gen(g, st)
}

pub fn apply_word(word: &OperatorWord, st: &LabeledState) -> LabeledState {
    Realization::default().apply_word(word, st)
}
