use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{cprime, OperatorWord, ParamPoint};
use crate::rational::{half, int, rat, Rational};

use super::gram::{gram_rank, normalize};
use super::ground::vertex_energy;
use super::lattice::{witnesses_at, Algebra};

/// How the observed degeneracy compares with the two closed-form counts that
/// circulate for this system: `n` and `n + 1`, where `n` is measured either
/// in unit steps of `l0 + l2` or in so(4,2) shells (two unit steps each).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegeneracyCheck {
    /// `(l0' + l2') - (l0 + l2)` between vertex and target.
    pub unit_steps: i64,
    /// `degeneracy == unit_steps`
    pub equals_steps: bool,
    /// `unit_steps / 2` when even.
    pub shell: Option<i64>,
    /// `degeneracy == shell + 1`
    pub equals_shell_plus_one: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    #[serde(with = "crate::rational::serde_str")]
    pub energy: Rational,
    pub degeneracy: usize,
    pub witnesses: Vec<OperatorWord>,
    pub vertex: ParamPoint,
    pub check: DegeneracyCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub target: ParamPoint,
    pub levels: Vec<EnergyLevel>,
    /// `1/√⟨Φ, Φ⟩` for each witness state, level by level.
    pub normalizations: Vec<Vec<f64>>,
}

/// Bound levels of `H_target`.
///
/// Candidate vertices `(l0', 0, l2')` share the conserved `l1 + l2 - l0` of the
/// target and have `l0' + l2'` in `{s, s+1, ...}` below `-5/2`, where `s` is
/// the target's `l0 + l2`. Every vertex whose su(2,1) lattice contains the
/// target contributes one level.
pub fn bound_spectrum(target: &ParamPoint) -> Result<SpectrumReport> {
    let c = cprime(target);
    let s = target.energy_sum();
    let mut levels = Vec::new();
    let mut normalizations = Vec::new();
    let mut sum = s.clone();
    let mut steps = 0i64;
    while sum < rat(-5, 2) {
        let l0 = (&sum - &c) * half();
        let l2 = (&sum + &c) * half();
        if l0 >= rat(-1, 2) {
            let vertex = ParamPoint::new(l0, int(0), l2);
            let ws = witnesses_at(&vertex, target, Algebra::Su21)?;
            if !ws.is_empty() {
                let states: Vec<_> = ws.iter().map(|w| w.state.clone()).collect();
                let degeneracy = gram_rank(&states)?;
                let norms = states
                    .iter()
                    .map(|st| normalize(st).map(|n| n.constant))
                    .collect::<Result<Vec<_>>>()?;
                let shell = (steps % 2 == 0).then_some(steps / 2);
                levels.push(EnergyLevel {
                    energy: vertex_energy(&vertex.l0, &vertex.l2),
                    degeneracy,
                    witnesses: ws.into_iter().map(|w| w.word).collect(),
                    vertex,
                    check: DegeneracyCheck {
                        unit_steps: steps,
                        equals_steps: degeneracy as i64 == steps,
                        shell,
                        equals_shell_plus_one: shell.map(|k| degeneracy as i64 == k + 1),
                    },
                });
                normalizations.push(norms);
            }
        }
        sum += int(1);
        steps += 1;
    }
    if levels.is_empty() {
        return Err(Error::Inadmissible(format!(
            "no vertex (l0', 0, l2') with l0' >= -1/2 and l0' + l2' < -5/2 reaches {target}"
        )));
    }
    Ok(SpectrumReport {
        target: target.clone(),
        levels,
        normalizations,
    })
}
