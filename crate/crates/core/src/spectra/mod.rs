//! Fundamental states, representation lattices, degeneracies and bound
//! spectra of a single `H_ℓ`.

mod gram;
mod ground;
mod lattice;
mod spectrum;

pub use gram::{gram_matrix, gram_rank, normalize, orthonormalize, smallest_singular_value, Normalized, Superposition};
pub use ground::{ground_beta, ground_chi, ground_full, ground_theta, so42_vacuum, vertex_energy};
pub use lattice::{
    enumerate_lattice, explore, states_at, witnesses_at, Algebra, Lattice, LatticeEdge, LatticeNode, LatticePoint,
    Witness,
};
pub use spectrum::{bound_spectrum, DegeneracyCheck, EnergyLevel, SpectrumReport};
