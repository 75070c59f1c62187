//! The concrete system: constants of motion, vector field, its Jacobian, and
//! the discrete symmetries.
//!
//! The flow on ℝ³ is
//!
//! ```text
//! x' = y z (1 + y²)
//! y' = -x z (1 + x²)
//! z' = x y (x² - y²)
//! ```
//!
//! with energy `H = ¼x⁴ + ¼y⁴ - ½z²` and Casimir `C = ½(x² + y² + z²)`,
//! both conserved; the field factors as ∇H × ∇C.

use crate::linalg::{cross, Mat3, Vec3};
use serde::{Deserialize, Serialize};

/// A phase-space point (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl State {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_array(a: Vec3) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> Vec3 {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Componentwise (max-norm) distance to `other`.
    pub fn max_abs_diff(self, other: State) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    /// Euclidean distance to `other`.
    pub fn distance(self, other: State) -> f64 {
        let d = [self.x - other.x, self.y - other.y, self.z - other.z];
        crate::linalg::norm(d)
    }
}

impl std::fmt::Display for State {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// A value (h, c) of the energy-Casimir mapping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EcPoint {
    pub h: f64,
    pub c: f64,
}

impl EcPoint {
    pub fn new(h: f64, c: f64) -> Self {
        Self { h, c }
    }
}

/// The five discrete coordinate symmetries of the system.
///
/// Each map sends solutions to solutions with time direction preserved, and
/// leaves both H and C unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryTransform {
    /// (x, y, z) → (-x, -y, z)
    NegateXy,
    /// (x, y, z) → (-x, y, -z)
    NegateXz,
    /// (x, y, z) → (x, -y, -z)
    NegateYz,
    /// (x, y, z) → (-y, x, z)
    QuarterTurn,
    /// (x, y, z) → (y, -x, z)
    QuarterTurnBack,
}

impl SymmetryTransform {
    pub const ALL: [SymmetryTransform; 5] = [
        SymmetryTransform::NegateXy,
        SymmetryTransform::NegateXz,
        SymmetryTransform::NegateYz,
        SymmetryTransform::QuarterTurn,
        SymmetryTransform::QuarterTurnBack,
    ];
}

/// Energy `H = ¼x⁴ + ¼y⁴ - ½z²`.
pub fn hamiltonian(s: State) -> f64 {
    let x2 = s.x * s.x;
    let y2 = s.y * s.y;
    0.25 * x2 * x2 + 0.25 * y2 * y2 - 0.5 * s.z * s.z
}

/// Casimir `C = ½(x² + y² + z²)`.
pub fn casimir(s: State) -> f64 {
    0.5 * (s.x * s.x + s.y * s.y + s.z * s.z)
}

/// Right-hand side of the system.
pub fn vector_field(s: State) -> State {
    let State { x, y, z } = s;
    State::new(
        y * z * (1.0 + y * y),
        -x * z * (1.0 + x * x),
        x * y * (x * x - y * y),
    )
}

/// Jacobian matrix of [`vector_field`].
pub fn jacobian(s: State) -> Mat3 {
    let State { x, y, z } = s;
    [
        [0.0, 3.0 * y * y * z + z, y * y * y + y],
        [-3.0 * x * x * z - z, 0.0, -x * x * x - x],
        [3.0 * x * x * y - y * y * y, x * x * x - 3.0 * x * y * y, 0.0],
    ]
}

/// Gradients `(∇H, ∇C) = ((x³, y³, -z), (x, y, z))`.
pub fn gradients(s: State) -> (State, State) {
    let grad_h = State::new(s.x * s.x * s.x, s.y * s.y * s.y, -s.z);
    let grad_c = s;
    (grad_h, grad_c)
}

/// The cross-product form ∇H × ∇C of the right-hand side; must agree with
/// [`vector_field`] identically.
pub fn cross_field(s: State) -> State {
    let (gh, gc) = gradients(s);
    State::from_array(cross(gh.to_array(), gc.to_array()))
}

/// Applies a symmetry to a point. Every transform is linear, so the same map
/// also pushes tangent vectors forward.
pub fn apply_symmetry(t: SymmetryTransform, s: State) -> State {
    let State { x, y, z } = s;
    match t {
        SymmetryTransform::NegateXy => State::new(-x, -y, z),
        SymmetryTransform::NegateXz => State::new(-x, y, -z),
        SymmetryTransform::NegateYz => State::new(x, -y, -z),
        SymmetryTransform::QuarterTurn => State::new(-y, x, z),
        SymmetryTransform::QuarterTurnBack => State::new(y, -x, z),
    }
}
