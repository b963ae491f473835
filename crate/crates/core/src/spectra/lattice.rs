use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::inner;
use crate::error::{Error, Result};
use crate::operators::{apply, LabeledState, OperatorName, OperatorWord, ParamPoint};
use crate::rational::{int, to_i64, Rational};

use super::gram::gram_rank;
use super::ground::{ground_full, so42_vacuum, vertex_energy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Su21,
    So42,
}

impl Algebra {
    pub fn raising(self) -> &'static [OperatorName] {
        match self {
            Algebra::Su21 => &OperatorName::SU21_RAISING,
            Algebra::So42 => &OperatorName::SO42_RAISING,
        }
    }

    /// The fundamental state at `vertex`, or an admissibility error.
    pub fn vertex_state(self, vertex: &ParamPoint) -> Result<LabeledState> {
        match self {
            Algebra::Su21 => {
                if vertex.l1 != int(0) {
                    return Err(Error::Inadmissible(format!("su21 vertex {vertex} needs l1 = 0")));
                }
                ground_full(&vertex.l0, &vertex.l2)
            }
            Algebra::So42 => {
                if vertex.l0 != int(0) || vertex.l1 != int(0) {
                    return Err(Error::Inadmissible(format!("so42 vertex {vertex} needs l0 = l1 = 0")));
                }
                so42_vacuum(&vertex.l2)
            }
        }
    }

    /// A linear functional that every raising operator lowers by at least one;
    /// it bounds the word length between two labels.
    fn height(self, l: &ParamPoint) -> Rational {
        match self {
            Algebra::Su21 => &l.l0 + &l.l2,
            Algebra::So42 => &l.l1 + &l.l2 * int(2),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Su21 => "su21",
            Algebra::So42 => "so42",
        })
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su21" | "su(2,1)" => Ok(Algebra::Su21),
            "so42" | "so(4,2)" => Ok(Algebra::So42),
            _ => Err(Error::Parse {
                what: "algebra",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePoint {
    pub label: ParamPoint,
    pub depth: usize,
}

/// A state together with the raising word that produced it from the vertex.
#[derive(Clone, Debug)]
pub struct Witness {
    pub word: OperatorWord,
    pub state: LabeledState,
}

#[derive(Clone, Debug)]
pub struct LatticeNode {
    pub point: LatticePoint,
    /// Linearly independent states found at this label.
    pub states: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticeEdge {
    pub from: ParamPoint,
    pub to: ParamPoint,
    pub op: OperatorName,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub vertex: ParamPoint,
    pub algebra: Algebra,
    pub energy: Rational,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<LatticeEdge>,
}

impl Lattice {
    pub fn node(&self, label: &ParamPoint) -> Option<&LatticeNode> {
        self.nodes.iter().find(|n| &n.point.label == label)
    }
}

fn normalizable(st: &LabeledState) -> bool {
    matches!(inner(&st.expr, &st.expr), Ok(v) if v > 0.0 && v.is_finite())
}

/// Breadth-first exploration of the raising-operator lattice above `vertex`.
///
/// A word is dropped as soon as it yields the zero function, a non-normalizable
/// state or a label rejected by `keep`. Each label keeps a linearly independent
/// set of states; only newly added states are propagated, which is enough
/// because the operators are linear.
pub fn explore(
    vertex: &ParamPoint,
    algebra: Algebra,
    max_depth: usize,
    keep: &dyn Fn(&ParamPoint) -> bool,
) -> Result<Lattice> {
    let root = algebra.vertex_state(vertex)?;
    let mut nodes = vec![LatticeNode {
        point: LatticePoint {
            label: vertex.clone(),
            depth: 0,
        },
        states: vec![Witness {
            word: OperatorWord::empty(),
            state: root,
        }],
    }];
    let mut index: BTreeMap<ParamPoint, usize> = BTreeMap::from([(vertex.clone(), 0)]);
    let mut edges = BTreeSet::new();
    let mut frontier = vec![(0usize, 0usize)];

    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for (ni, si) in frontier {
            let source = nodes[ni].states[si].clone();
            for &op in algebra.raising() {
                let image = apply(op, &source.state);
                if image.is_zero() || !keep(&image.label) || !normalizable(&image) {
                    continue;
                }
                edges.insert(LatticeEdge {
                    from: source.state.label.clone(),
                    to: image.label.clone(),
                    op,
                });
                let witness = Witness {
                    word: source.word.then(op),
                    state: image,
                };
                match index.get(&witness.state.label) {
                    None => {
                        index.insert(witness.state.label.clone(), nodes.len());
                        nodes.push(LatticeNode {
                            point: LatticePoint {
                                label: witness.state.label.clone(),
                                depth,
                            },
                            states: vec![witness],
                        });
                        next.push((nodes.len() - 1, 0));
                    }
                    Some(&t) => {
                        let mut trial: Vec<LabeledState> = nodes[t].states.iter().map(|w| w.state.clone()).collect();
                        trial.push(witness.state.clone());
                        if gram_rank(&trial)? == trial.len() {
                            nodes[t].states.push(witness);
                            next.push((t, nodes[t].states.len() - 1));
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let energy = vertex_energy(&vertex.l0, &vertex.l2);
    Ok(Lattice {
        vertex: vertex.clone(),
        algebra,
        energy,
        nodes,
        edges: edges.into_iter().collect(),
    })
}

/// Labels reachable from `vertex` by raising words of length at most `max_depth`.
pub fn enumerate_lattice(vertex: &ParamPoint, algebra: Algebra, max_depth: usize) -> Result<Vec<LatticePoint>> {
    let lattice = explore(vertex, algebra, max_depth, &|_| true)?;
    Ok(lattice.nodes.into_iter().map(|n| n.point).collect())
}

/// Independent states at `target` generated from `vertex`, with their words.
pub fn witnesses_at(vertex: &ParamPoint, target: &ParamPoint, algebra: Algebra) -> Result<Vec<Witness>> {
    let gap = algebra.height(vertex) - algebra.height(target);
    let Some(depth) = to_i64(&gap).filter(|d| *d >= 0) else {
        algebra.vertex_state(vertex)?;
        return Ok(Vec::new());
    };
    let t = target.clone();
    let floor = algebra.height(target);
    let keep =
        move |l: &ParamPoint| l.l2 >= t.l2 && algebra.height(l) >= floor && (algebra == Algebra::So42 || l.l0 >= t.l0);
    let lattice = explore(vertex, algebra, depth as usize, &keep)?;
    Ok(lattice.node(target).map(|n| n.states.clone()).unwrap_or_default())
}

/// Independent states at `target` generated from `vertex`.
pub fn states_at(vertex: &ParamPoint, target: &ParamPoint, algebra: Algebra) -> Result<Vec<LabeledState>> {
    Ok(witnesses_at(vertex, target, algebra)?
        .into_iter()
        .map(|w| w.state)
        .collect())
}
