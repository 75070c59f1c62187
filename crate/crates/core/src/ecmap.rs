//! The energy-Casimir map `s ↦ (H(s), C(s))`, its image, the partition of the
//! image induced by the equilibrium families, and the rank of the map's
//! derivative.
//!
//! The image is the set `{(h, c) : c ≥ -h and (h ≤ 0 or c ≥ √h)}`. Its
//! boundary and interior split into labeled pieces:
//!
//! * `Sigma12s` — the curve `c = √h`, `h ≥ 0` (images of the `(±M, 0, 0)` and
//!   `(0, ±M, 0)` families),
//! * `Sigma3s` — the ray `c = -h`, `h ≤ 0` (images of `(0, 0, ±M)`),
//! * `Sigma45u` — the curve `c = √(2h)`, `h > 0` (images of `(±M, ±M, 0)`),
//! * `SigmaP1` — the open region between `c = √h` and `c = √(2h)`,
//! * `SigmaP2` — the rest of the interior, including the ray `h = 0, c > 0`,
//! * `BifurcationPoint` — the origin, where all boundary pieces meet.

use crate::dynamics::{casimir, gradients, hamiltonian, EcPoint, State};
use crate::linalg::singular_values_2x3;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default absolute tolerance for [`classify`] boundary tests.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// The five one-parameter equilibrium families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    E1,
    E2,
    E3,
    E4,
    E5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::E1, Family::E2, Family::E3, Family::E4, Family::E5];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "E1" => Ok(Family::E1),
            "E2" => Ok(Family::E2),
            "E3" => Ok(Family::E3),
            "E4" => Ok(Family::E4),
            "E5" => Ok(Family::E5),
            other => Err(format!("unknown equilibrium family '{other}' (expected E1..E5)")),
        }
    }
}

/// The member of `family` with parameter `m`.
pub fn realize(family: Family, m: f64) -> State {
    match family {
        Family::E1 => State::new(m, 0.0, 0.0),
        Family::E2 => State::new(0.0, m, 0.0),
        Family::E3 => State::new(0.0, 0.0, m),
        Family::E4 => State::new(m, m, 0.0),
        Family::E5 => State::new(m, -m, 0.0),
    }
}

/// One representative per family at the same parameter value.
pub fn critical_points(m: f64) -> [State; 5] {
    Family::ALL.map(|f| realize(f, m))
}

pub fn ec_map(s: State) -> EcPoint {
    EcPoint { h: hamiltonian(s), c: casimir(s) }
}

/// Closed-form image of `family` at parameter `m` under the energy-Casimir
/// map; agrees with `ec_map(realize(family, m))` exactly.
pub fn image_of_family(family: Family, m: f64) -> EcPoint {
    let m2 = m * m;
    match family {
        Family::E1 | Family::E2 => EcPoint { h: 0.25 * m2 * m2, c: 0.5 * m2 },
        Family::E3 => EcPoint { h: -0.5 * m2, c: 0.5 * m2 },
        Family::E4 | Family::E5 => EcPoint { h: 0.5 * m2 * m2, c: m2 },
    }
}

/// Exact membership test for the image (no tolerance).
pub fn in_image(p: EcPoint) -> bool {
    p.c >= -p.h && (p.h <= 0.0 || p.c >= p.h.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionLabel {
    BifurcationPoint,
    Sigma12s,
    Sigma3s,
    Sigma45u,
    SigmaP1,
    SigmaP2,
    Outside,
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Assigns `p` to a piece of the partition. Boundary curves are detected
/// within the absolute tolerance `tol` and take precedence, in the order
/// below, over the open regions.
pub fn classify(p: EcPoint, tol: f64) -> RegionLabel {
    let EcPoint { h, c } = p;
    if h.abs() <= tol && c.abs() <= tol {
        return RegionLabel::BifurcationPoint;
    }
    if h >= -tol && (c - h.max(0.0).sqrt()).abs() <= tol {
        return RegionLabel::Sigma12s;
    }
    if h <= tol && (c + h).abs() <= tol {
        return RegionLabel::Sigma3s;
    }
    if h > 0.0 && (c - (2.0 * h).sqrt()).abs() <= tol {
        return RegionLabel::Sigma45u;
    }
    if !in_image(p) {
        return RegionLabel::Outside;
    }
    if h > 0.0 && c < (2.0 * h).sqrt() {
        RegionLabel::SigmaP1
    } else {
        RegionLabel::SigmaP2
    }
}

/// Rank of the 2×3 derivative of the energy-Casimir map at `s`: the number of
/// singular values exceeding `tol` times the largest one.
pub fn rank_dec(s: State, tol: f64) -> usize {
    let (gh, gc) = gradients(s);
    let sv = singular_values_2x3(gh.to_array(), gc.to_array());
    if sv[0] == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&sigma| sigma > tol * sv[0]).count()
}
