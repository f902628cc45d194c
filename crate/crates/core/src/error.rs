use thiserror::Error;

use crate::relativistic::Regime;

pub type Result<T> = std::result::Result<T, HodoError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HodoError {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("unphysical parameters: {0}")]
    UnphysicalParameters(String),

    #[error("energy {energy} is below the regime minimum {minimum}")]
    BelowMinimumEnergy { energy: f64, minimum: f64 },

    #[error("operation requires the {expected:?} regime, parameters are {found:?}")]
    WrongRegime { expected: Regime, found: Regime },

    /// The tangential velocity vanishes or is negative: the point lies at
    /// spatial infinity (Newtonian unbound endpoint).
    #[error("tangential velocity {v_theta} <= 0, point at infinity")]
    PointAtInfinity { v_theta: f64 },

    #[error("theta = {theta} is outside the admissible range (u_theta = {u_theta})")]
    OutsideAdmissibleRange { theta: f64, u_theta: f64 },

    #[error("hyperbolic argument {argument} exceeds the overflow guard")]
    RangeOverflow { argument: f64 },

    #[error("energy direction is degenerate (Lambda^2 = {lambda_sq})")]
    DegenerateEnergyDirection { lambda_sq: f64 },

    #[error("no physical trajectory for these parameters")]
    NoTrajectory,

    #[error("configuration is not an unbound scattering orbit")]
    NotUnbound,

    #[error("quadrature diverges: {0}")]
    QuadratureDivergence(String),

    #[error("integrator did not converge: {0}")]
    NonConvergence(String),

    #[error("bracket [{lo}, {hi}] does not enclose a sign change")]
    BracketError { lo: f64, hi: f64 },

    #[error("invalid velocity: time component {u0} < 1")]
    InvalidVelocity { u0: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
