//! Finite-volume eigensolvers for the separated one-dimensional problems and
//! a finite-difference residual for the full Hamiltonian. Independent of the
//! exact engine apart from point evaluation of states.

mod residual;
mod solvers;
mod tridiag;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use residual::residual_on_grid;
pub use solvers::{solve_theta, solve_theta_levels, solve_xi, THETA_LEVELS};
pub use tridiag::SymTridiagonal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    Theta,
    Xi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    #[default]
    Uniform,
}

/// A uniform grid on `(0, π/2)` for θ or `(0, cutoff)` for ξ with `n`
/// interior points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub variable: Variable,
    pub n: usize,
    pub cutoff: f64,
    pub scheme: Scheme,
}

impl GridSpec {
    pub const MIN_POINTS: usize = 16;

    pub fn theta(n: usize) -> Self {
        GridSpec {
            variable: Variable::Theta,
            n,
            cutoff: std::f64::consts::FRAC_PI_2,
            scheme: Scheme::Uniform,
        }
    }

    pub fn xi(n: usize, cutoff: f64) -> Self {
        GridSpec {
            variable: Variable::Xi,
            n,
            cutoff,
            scheme: Scheme::Uniform,
        }
    }

    /// Length of the interval the grid covers.
    pub fn length(&self) -> f64 {
        match self.variable {
            Variable::Theta => std::f64::consts::FRAC_PI_2,
            Variable::Xi => self.cutoff,
        }
    }

    pub fn validate(&self, expect: Variable) -> Result<()> {
        if self.variable != expect {
            return Err(Error::Grid(format!(
                "expected a {expect:?} grid, got {:?}",
                self.variable
            )));
        }
        if self.n < Self::MIN_POINTS {
            return Err(Error::Grid(format!(
                "n = {} is below the minimum of {}",
                self.n,
                Self::MIN_POINTS
            )));
        }
        if !(self.cutoff > 0.0 && self.cutoff.is_finite()) {
            return Err(Error::Grid(format!(
                "cutoff {} must be positive and finite",
                self.cutoff
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    /// `‖S v − λ v‖₂` of the symmetrized discrete problem for each eigenpair.
    pub residual_norms: Vec<f64>,
    pub grid: GridSpec,
    pub warnings: Vec<String>,
}
