//! Exact ladder-operator engine for the superintegrable Hamiltonian
//!
//! ```text
//! H_l = -d²/dξ² - coth ξ d/dξ - (l2² - 1/4)/cosh²ξ
//!       + (1/sinh²ξ) [ -d²/dθ² + (l1² - 1/4)/sin²θ + (l0² - 1/4)/cos²θ ]
//! ```
//!
//! on the two-sheet hyperboloid, written in the (θ, ξ) chart.
//!
//! The crate is organised in four layers:
//!
//! * [`algebra`]: exact calculus over the monomial family
//!   `c · cosᵖθ · sinᵠθ · coshʳξ · sinhˢξ` with rational data, and the
//!   Beta-function inner product for the measure `sinh ξ dθ dξ`.
//! * [`operators`]: the fifteen ladder/diagonal generators, the Hamiltonian,
//!   the su(2,1) Casimir and the commutator engine.
//! * [`spectra`]: fundamental states, representation lattices, Gram-rank
//!   degeneracies and bound spectra.
//! * [`numeric`]: an independent finite-difference eigensolver for the
//!   separated one-dimensional problems.
//!
//! [`verify`] bundles the exact identity suite used by the command line tool.

pub mod algebra;
pub mod error;
pub mod numeric;
pub mod operators;
pub mod rational;
pub mod spectra;
pub mod verify;

pub use algebra::{inner, Exponents, FunExpr, Monomial};
pub use error::{Error, Result};
pub use numeric::{residual_on_grid, solve_theta, solve_xi, EigenResult, GridSpec};
pub use operators::{
    apply, apply_casimir, apply_hamiltonian, commutator, cprime, diag_eigenvalue, LabeledState, OperatorName,
    OperatorWord, ParamPoint,
};
pub use rational::Rational;
pub use spectra::{
    bound_spectrum, enumerate_lattice, gram_rank, ground_full, normalize, states_at, vertex_energy, Algebra,
    EnergyLevel, LatticePoint, SpectrumReport,
};
