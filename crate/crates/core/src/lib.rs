//! Exact hodographs (velocity-space orbits) and spatial trajectories for
//! Newtonian and relativistic Coulomb systems, with an independent
//! numerical integrator of the hodograph flow for cross-validation.

pub mod error;
pub mod newtonian;
pub mod ode;
pub mod quadrature;
pub mod rational;
pub mod reference;
pub mod relativistic;
pub mod spacetime;
pub mod trajectory;
pub mod verify;

pub use error::{HodoError, Result};
pub use relativistic::{Regime, SystemParams};
pub use spacetime::FourVector;
pub use trajectory::{AngularInterval, Branch, OrbitClass, TrajectoryReport};
