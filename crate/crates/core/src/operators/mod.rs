//! Ladder generators, Hamiltonian and Casimir operators as exact maps on
//! labeled states.

mod hamiltonian;
mod identities;
mod ladder;
mod names;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FunExpr;
use crate::rational::{int, Rational};

pub use hamiltonian::{
    apply_casimir, apply_hamiltonian, apply_separated, cprime, factor_operator_1d, hamiltonian_on, Separated,
};
pub use identities::{
    bracket_table, commutator, conjugate, factorization_residuals, reflect, tilde_bracket_table, verify_intertwining,
    BracketIdentity, Family, Gen, IntertwiningResidual, SignedOp,
};
pub use ladder::{apply, apply_gen, apply_word, diag_eigenvalue, Diag, Realization};
pub use names::{OperatorName, OperatorWord};

/// A parameter point `ℓ = (l₀, l₁, l₂)` of the Hamiltonian hierarchy.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamPoint {
    #[serde(with = "crate::rational::serde_str")]
    pub l0: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub l1: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub l2: Rational,
}

impl ParamPoint {
    pub fn new(l0: Rational, l1: Rational, l2: Rational) -> Self {
        ParamPoint { l0, l1, l2 }
    }

    pub fn ints(l0: i64, l1: i64, l2: i64) -> Self {
        ParamPoint::new(int(l0), int(l1), int(l2))
    }

    pub fn shifted(&self, d: [i64; 3]) -> ParamPoint {
        ParamPoint::new(&self.l0 + int(d[0]), &self.l1 + int(d[1]), &self.l2 + int(d[2]))
    }

    /// Image under the reflection `I_i: l_i ↦ -l_i`.
    pub fn reflected(&self, i: usize) -> ParamPoint {
        let mut p = self.clone();
        match i {
            0 => p.l0 = -p.l0,
            1 => p.l1 = -p.l1,
            2 => p.l2 = -p.l2,
            _ => panic!("reflection index {i} out of range"),
        }
        p
    }

    pub fn component(&self, i: usize) -> &Rational {
        match i {
            0 => &self.l0,
            1 => &self.l1,
            2 => &self.l2,
            _ => panic!("component index {i} out of range"),
        }
    }

    /// `l₀ + l₂`, the combination that fixes the energy of a vertex.
    pub fn energy_sum(&self) -> Rational {
        &self.l0 + &self.l2
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l0, self.l1, self.l2)
    }
}

/// A function tagged with the Hamiltonian it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledState {
    pub label: ParamPoint,
    pub expr: FunExpr,
}

impl LabeledState {
    pub fn new(label: ParamPoint, expr: FunExpr) -> Self {
        LabeledState { label, expr }
    }

    pub fn is_zero(&self) -> bool {
        self.expr.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> LabeledState {
        LabeledState::new(self.label.clone(), self.expr.scale(c))
    }
}
