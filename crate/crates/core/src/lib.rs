//! Analysis and structure-preserving integration of the three-dimensional
//! bi-Hamiltonian system
//!
//! ```text
//! x' = y z (1 + y²)
//! y' = -x z (1 + x²)
//! z' = x y (x² - y²)
//! ```
//!
//! The crate provides:
//!
//! * [`dynamics`] — the vector field, its Jacobian, the conserved energy
//!   `H = ¼x⁴ + ¼y⁴ - ½z²` and Casimir `C = ½(x² + y² + z²)`, and the
//!   discrete symmetries of the flow;
//! * [`poisson`] — the two compatible Poisson structures realizing the field
//!   as `Π₁∇H = Π₂∇C = f`, a family of rescaled realizations, and a
//!   finite-difference Jacobi-identity check;
//! * [`ecmap`] — the energy-Casimir map `s ↦ (H, C)`, its non-convex image,
//!   the labeled partition of the image, and the rank of the map's
//!   derivative;
//! * [`stability`] — linearization spectra, the energy-Casimir (Arnold)
//!   stability test, predicted and measured small-oscillation periods, and
//!   the invariant Moser surfaces;
//! * [`fibers`] — fiber solving and description, and the heteroclinic-web
//!   experiment on the critical level sets;
//! * [`integrator`] — an implicit mid-point integrator that preserves the
//!   Casimir to solver tolerance, with CSV/JSON trajectory serialization;
//! * [`linalg`] — the small dense kernels the rest of the crate needs.

pub mod dynamics;
pub mod ecmap;
pub mod fibers;
pub mod integrator;
pub mod linalg;
pub mod poisson;
pub mod stability;

pub use dynamics::{EcPoint, State, SymmetryTransform};
pub use ecmap::{Family, RegionLabel};
