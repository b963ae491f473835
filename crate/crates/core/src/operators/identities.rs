//! Commutators, the su(2,1) bracket table, intertwining relations,
//! factorizations and the reflection table.

use std::fmt;

use super::hamiltonian::{apply_separated, factor_operator_1d, hamiltonian_on, Separated};
use super::ladder::{indexed, Diag, Kind, Realization};
use super::names::OperatorName::{self, *};
use super::{LabeledState, ParamPoint};
use crate::algebra::FunExpr;
use crate::rational::{int, rat, Rational};

/// A generator of the algebra: a ladder/label operator or a diagonal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    Op(OperatorName),
    Diag(Diag),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Op(op) => write!(f, "{op}"),
            Gen::Diag(Diag::A) => f.write_str("A"),
            Gen::Diag(Diag::B) => f.write_str("B"),
            Gen::Diag(Diag::C) => f.write_str("C"),
            Gen::Diag(Diag::ATilde) => f.write_str("Atilde"),
            Gen::Diag(Diag::BTilde) => f.write_str("Btilde"),
            Gen::Diag(Diag::CTilde) => f.write_str("Ctilde"),
        }
    }
}

impl Realization {
    /// `[x, y] ψ = x(yψ) - y(xψ)`; both orderings land on the same label.
    pub fn commutator(&self, x: Gen, y: Gen, st: &LabeledState) -> LabeledState {
        let xy = self.apply_gen(x, &self.apply_gen(y, st));
        let yx = self.apply_gen(y, &self.apply_gen(x, st));
        debug_assert_eq!(xy.label, yx.label);
        LabeledState::new(xy.label, &xy.expr - &yx.expr)
    }
}

pub fn commutator(x: OperatorName, y: OperatorName, st: &LabeledState) -> LabeledState {
    Realization::default().commutator(Gen::Op(x), Gen::Op(y), st)
}

/// `[x, y] = Σ cᵢ gᵢ`
#[derive(Clone, Debug)]
pub struct BracketIdentity {
    pub x: Gen,
    pub y: Gen,
    pub rhs: Vec<(Rational, Gen)>,
}

impl BracketIdentity {
    fn new(x: Gen, y: Gen, rhs: Vec<(Rational, Gen)>) -> Self {
        BracketIdentity { x, y, rhs }
    }

    /// `[x, y]ψ - Σ cᵢ gᵢ ψ`; empty when the identity holds on `st`.
    pub fn residual(&self, real: &Realization, st: &LabeledState) -> FunExpr {
        let lhs = real.commutator(self.x, self.y, st);
        let mut out = lhs.expr;
        for (c, g) in &self.rhs {
            let term = real.apply_gen(*g, st);
            debug_assert!(term.is_zero() || term.label == lhs.label);
            out = &out - &term.expr.scale(c);
        }
        out
    }
}

impl fmt::Display for BracketIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] = ", self.x, self.y)?;
        if self.rhs.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, g)) in self.rhs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c == int(1) {
                write!(f, "{g}")?;
            } else {
                write!(f, "({c}){g}")?;
            }
        }
        Ok(())
    }
}

/// The 36 brackets closing su(2,1): the su(2) and two su(1,1) subalgebras
/// followed by the 27 mixed relations.
pub fn bracket_table() -> Vec<BracketIdentity> {
    let op = Gen::Op;
    let (a, b, c) = (Gen::Diag(Diag::A), Gen::Diag(Diag::B), Gen::Diag(Diag::C));
    let one = || int(1);
    let neg = || int(-1);
    let h = || rat(1, 2);
    let mh = || rat(-1, 2);
    let id = BracketIdentity::new;
    vec![
        // su(2)
        id(op(AMinus), op(APlus), vec![(int(-2), a)]),
        id(a, op(APlus), vec![(one(), op(APlus))]),
        id(a, op(AMinus), vec![(neg(), op(AMinus))]),
        // su(1,1), B
        id(op(BMinus), op(BPlus), vec![(int(2), b)]),
        id(b, op(BPlus), vec![(one(), op(BPlus))]),
        id(b, op(BMinus), vec![(neg(), op(BMinus))]),
        // su(1,1), C
        id(op(CMinus), op(CPlus), vec![(int(2), c)]),
        id(c, op(CPlus), vec![(one(), op(CPlus))]),
        id(c, op(CMinus), vec![(neg(), op(CMinus))]),
        // mixed ladder brackets
        id(op(APlus), op(BPlus), vec![]),
        id(op(AMinus), op(BMinus), vec![]),
        id(op(APlus), op(BMinus), vec![(neg(), op(CMinus))]),
        id(op(AMinus), op(BPlus), vec![(one(), op(CPlus))]),
        id(op(CPlus), op(BPlus), vec![]),
        id(op(CMinus), op(BMinus), vec![]),
        id(op(CPlus), op(APlus), vec![(neg(), op(BPlus))]),
        id(op(CMinus), op(AMinus), vec![(one(), op(BMinus))]),
        id(op(CPlus), op(BMinus), vec![(neg(), op(AMinus))]),
        id(op(CMinus), op(BPlus), vec![(one(), op(APlus))]),
        id(op(CPlus), op(AMinus), vec![]),
        id(op(CMinus), op(APlus), vec![]),
        // diagonal against ladders
        id(a, op(BPlus), vec![(h(), op(BPlus))]),
        id(a, op(BMinus), vec![(mh(), op(BMinus))]),
        id(b, op(APlus), vec![(h(), op(APlus))]),
        id(b, op(AMinus), vec![(mh(), op(AMinus))]),
        id(c, op(BPlus), vec![(h(), op(BPlus))]),
        id(c, op(BMinus), vec![(mh(), op(BMinus))]),
        id(c, op(APlus), vec![(mh(), op(APlus))]),
        id(c, op(AMinus), vec![(h(), op(AMinus))]),
        id(a, op(CMinus), vec![(h(), op(CMinus))]),
        id(a, op(CPlus), vec![(mh(), op(CPlus))]),
        id(b, op(CMinus), vec![(mh(), op(CMinus))]),
        id(b, op(CPlus), vec![(h(), op(CPlus))]),
        // Cartan
        id(a, b, vec![]),
        id(a, c, vec![]),
        id(b, c, vec![]),
    ]
}

/// Subalgebra brackets of the reflected generators (`su(2)~`, two `su(1,1)~`).
pub fn tilde_bracket_table() -> Vec<BracketIdentity> {
    let op = Gen::Op;
    let (a, b, c) = (
        Gen::Diag(Diag::ATilde),
        Gen::Diag(Diag::BTilde),
        Gen::Diag(Diag::CTilde),
    );
    let id = BracketIdentity::new;
    vec![
        id(op(ATildeMinus), op(ATildePlus), vec![(int(-2), a)]),
        id(a, op(ATildePlus), vec![(int(1), op(ATildePlus))]),
        id(a, op(ATildeMinus), vec![(int(-1), op(ATildeMinus))]),
        id(op(BTildeMinus), op(BTildePlus), vec![(int(2), b)]),
        id(b, op(BTildePlus), vec![(int(1), op(BTildePlus))]),
        id(b, op(BTildeMinus), vec![(int(-1), op(BTildeMinus))]),
        id(op(CTildeMinus), op(CTildePlus), vec![(int(2), c)]),
        id(c, op(CTildePlus), vec![(int(1), op(CTildePlus))]),
        id(c, op(CTildeMinus), vec![(int(-1), op(CTildeMinus))]),
    ]
}

/// Operator families whose intertwining relations can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    fn kind(self) -> Kind {
        match self {
            Family::A => Kind::A,
            Family::B => Kind::B,
            Family::C => Kind::C,
        }
    }

    /// Label shift of the lowering member `X⁻_ℓ : f_ℓ → f_{ℓ+d}`.
    fn lowering_shift(self) -> [i64; 3] {
        match self {
            Family::A => [1, 1, 0],
            Family::B => [1, 0, 1],
            Family::C => [0, -1, 1],
        }
    }

    fn index(self, l: &ParamPoint) -> (Rational, Rational) {
        match self {
            Family::A => (l.l0.clone(), l.l1.clone()),
            Family::B => (l.l0.clone(), l.l2.clone()),
            Family::C => (l.l1.clone(), l.l2.clone()),
        }
    }
}

/// Residuals of the two intertwining relations of the family indexed at `l`:
///
/// ```text
/// lowering:  X⁻_ℓ H_ℓ     - H_{ℓ+d} X⁻_ℓ
/// raising:   X⁺_ℓ H_{ℓ+d} - H_ℓ     X⁺_ℓ
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningResidual {
    pub lowering: FunExpr,
    pub raising: FunExpr,
}

impl IntertwiningResidual {
    pub fn is_zero(&self) -> bool {
        self.lowering.is_zero() && self.raising.is_zero()
    }
}

pub fn verify_intertwining(family: Family, l: &ParamPoint, probe: &FunExpr) -> IntertwiningResidual {
    let (a, b) = family.index(l);
    let down = indexed(family.kind(), false, &a, &b);
    let up = indexed(family.kind(), true, &a, &b);
    let next = l.shifted(family.lowering_shift());
    let lowering = &down.apply(&hamiltonian_on(l, probe)) - &hamiltonian_on(&next, &down.apply(probe));
    let raising = &up.apply(&hamiltonian_on(&next, probe)) - &hamiltonian_on(l, &up.apply(probe));
    IntertwiningResidual { lowering, raising }
}

fn square(x: Rational) -> Rational {
    &x * &x
}

/// Residuals of the two factorizations of a separated Hamiltonian on a probe:
///
/// ```text
/// θ:  H_{l0,l1} = A⁺_{l0,l1}A⁻_{l0,l1} + (1+l0+l1)²     = A⁻A⁺ at (l0-1,l1-1) + λ there
/// χ:  H_{l0,l2} = B⁺_{l0,l2}B⁻_{l0,l2} - (1+l0+l2)²     = B⁻B⁺ at (l0-1,l2-1) + λ there
/// β:  H_{l1,l2} = C⁺_{l1,l2}C⁻_{l1,l2} - (1-l1+l2)²     = C⁻C⁺ at (l1+1,l2-1) + λ there
/// ```
pub fn factorization_residuals(which: Separated, a: &Rational, b: &Rational, probe: &FunExpr) -> [FunExpr; 2] {
    let lambda = |a: &Rational, b: &Rational| match which {
        Separated::Theta => square(int(1) + a + b),
        Separated::Chi => -square(int(1) + a + b),
        Separated::Beta => -square(int(1) - a + b),
    };
    let (pa, pb) = match which {
        Separated::Theta | Separated::Chi => (a - int(1), b - int(1)),
        Separated::Beta => (a + int(1), b - int(1)),
    };
    let h = apply_separated(which, probe, a, b).expect("probe must match the separated variable");
    let down = factor_operator_1d(which, false, a, b, probe);
    let first = &(&factor_operator_1d(which, true, a, b, &down) + &probe.scale(&lambda(a, b))) - &h;
    let up = factor_operator_1d(which, true, &pa, &pb, probe);
    let second = &(&factor_operator_1d(which, false, &pa, &pb, &up) + &probe.scale(&lambda(&pa, &pb))) - &h;
    [first, second]
}

/// A generator with a sign, as produced by the reflection table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedOp {
    pub sign: i8,
    pub op: OperatorName,
}

impl fmt::Display for SignedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.op)
    }
}

/// Conjugation `I_i · op · I_i` as tabulated (hatted entries as given; the
/// inverse entries follow because each `I_i` is an involution).
///
/// ```text
/// I0: A± → Ã±,   B± → B̃±,   C± → C±,    L0 → -L0
/// I1: A± → Ã∓,   B± → B±,   C± → C̃±,    L1 → -L1
/// I2: A± → A±,   B± → B̃∓,   C± → -C̃∓,   L2 → -L2
/// ```
pub fn reflect(i: usize, op: OperatorName) -> SignedOp {
    let s = |sign: i8, op| SignedOp { sign, op };
    match (i, op) {
        (0, APlus) => s(1, ATildePlus),
        (0, AMinus) => s(1, ATildeMinus),
        (0, ATildePlus) => s(1, APlus),
        (0, ATildeMinus) => s(1, AMinus),
        (0, BPlus) => s(1, BTildePlus),
        (0, BMinus) => s(1, BTildeMinus),
        (0, BTildePlus) => s(1, BPlus),
        (0, BTildeMinus) => s(1, BMinus),
        (0, L0) => s(-1, L0),

        (1, APlus) => s(1, ATildeMinus),
        (1, AMinus) => s(1, ATildePlus),
        (1, ATildePlus) => s(1, AMinus),
        (1, ATildeMinus) => s(1, APlus),
        (1, CPlus) => s(1, CTildePlus),
        (1, CMinus) => s(1, CTildeMinus),
        (1, CTildePlus) => s(1, CPlus),
        (1, CTildeMinus) => s(1, CMinus),
        (1, L1) => s(-1, L1),

        (2, BPlus) => s(1, BTildeMinus),
        (2, BMinus) => s(1, BTildePlus),
        (2, BTildePlus) => s(1, BMinus),
        (2, BTildeMinus) => s(1, BPlus),
        (2, CPlus) => s(-1, CTildeMinus),
        (2, CMinus) => s(-1, CTildePlus),
        (2, CTildePlus) => s(-1, CMinus),
        (2, CTildeMinus) => s(-1, CPlus),
        (2, L2) => s(-1, L2),

        (0..=2, other) => s(1, other),
        _ => panic!("reflection index {i} out of range"),
    }
}

/// The realized conjugate `I_i · op · I_i` on a state: relabel, act, relabel.
pub fn conjugate(i: usize, op: OperatorName, st: &LabeledState) -> LabeledState {
    let real = Realization::default();
    let moved = LabeledState::new(st.label.reflected(i), st.expr.clone());
    let out = real.apply(op, &moved);
    LabeledState::new(out.label.reflected(i), out.expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe() -> LabeledState {
        let l = ParamPoint::new(rat(2, 3), rat(-1, 5), rat(-7, 2));
        let e = FunExpr::term(rat(3, 4), rat(1, 3), rat(5, 2), rat(-7, 3), rat(2, 5));
        LabeledState::new(l, e)
    }

    #[test]
    fn table_has_36_entries_and_holds_on_a_probe() {
        let real = Realization::default();
        let table = bracket_table();
        assert_eq!(table.len(), 36);
        for id in &table {
            assert!(id.residual(&real, &probe()).is_zero(), "{id}");
        }
    }

    #[test]
    fn tilde_subalgebras_hold() {
        let real = Realization::default();
        for id in tilde_bracket_table() {
            assert!(id.residual(&real, &probe()).is_zero(), "{id}");
        }
    }

    #[test]
    fn a_minus_a_plus_gives_l0_plus_l1() {
        let st = probe();
        let r = commutator(AMinus, APlus, &st);
        assert_eq!(r.expr, st.expr.scale(&(&st.label.l0 + &st.label.l1)));
    }

    #[test]
    fn intertwining_holds_for_all_families() {
        let st = probe();
        for fam in [Family::A, Family::B, Family::C] {
            assert!(verify_intertwining(fam, &st.label, &st.expr).is_zero(), "{fam:?}");
        }
    }

    #[test]
    fn factorizations_hold() {
        let th = FunExpr::term(int(2), rat(1, 3), rat(-2, 5), int(0), int(0));
        let xi = FunExpr::term(int(-1), int(0), int(0), rat(3, 7), rat(5, 2));
        let (a, b) = (rat(5, 4), rat(-2, 3));
        for r in factorization_residuals(Separated::Theta, &a, &b, &th) {
            assert!(r.is_zero());
        }
        for w in [Separated::Chi, Separated::Beta] {
            for r in factorization_residuals(w, &a, &b, &xi) {
                assert!(r.is_zero(), "{w:?}");
            }
        }
    }

    #[test]
    fn reflection_table_examples() {
        assert_eq!(
            reflect(0, APlus),
            SignedOp {
                sign: 1,
                op: ATildePlus
            }
        );
        assert_eq!(
            reflect(2, CMinus),
            SignedOp {
                sign: -1,
                op: CTildePlus
            }
        );
        assert_eq!(reflect(1, BPlus), SignedOp { sign: 1, op: BPlus });
        for i in 0..3 {
            for op in OperatorName::ALL {
                let once = reflect(i, op);
                let twice = reflect(i, once.op);
                assert_eq!(twice.op, op);
                assert_eq!(once.sign * twice.sign, 1);
            }
        }
    }

    #[test]
    fn realized_conjugation_agrees_with_table_up_to_sign() {
        let st = probe();
        let real = Realization::default();
        // rows where the realized conjugate differs from the table by an overall sign
        let flipped = [
            (1, APlus),
            (1, AMinus),
            (1, ATildePlus),
            (1, ATildeMinus),
            (2, BPlus),
            (2, BMinus),
            (2, BTildePlus),
            (2, BTildeMinus),
        ];
        for i in 0..3 {
            for op in OperatorName::LADDERS {
                let got = conjugate(i, op, &st);
                let t = reflect(i, op);
                let want = real.apply(t.op, &st);
                assert_eq!(got.label, want.label, "I{i} {op}");
                let mut sign = int(t.sign as i64);
                if flipped.contains(&(i, op)) {
                    sign = -sign;
                }
                assert_eq!(got.expr, want.expr.scale(&sign), "I{i} {op}");
            }
        }
    }
}
