//! Linearization spectra, nonlinear stability verdicts, and predicted versus
//! measured small-oscillation periods for the equilibrium families.
//!
//! A verdict is never inferred from a spectrum alone: purely imaginary
//! spectra only fail to certify instability. Nonlinear stability is
//! established either by the energy-Casimir (Arnold) second-variation test on
//! `F = H + λC`, or, at the origin, by the Casimir itself, which is conserved
//! and has a strict minimum there. Instability is certified by an eigenvalue
//! with positive real part.

use crate::dynamics::{casimir, gradients, hamiltonian, jacobian, vector_field, State};
use crate::ecmap::{realize, Family};
use crate::integrator::{midpoint_step, IntegratorConfig, IntegratorError};
use crate::linalg::eigenvalues;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

/// Restricted eigenvalues closer to zero than this are treated as degenerate.
pub const DEFINITENESS_TOL: f64 = 1e-9;
/// A spectral real part must exceed this to certify instability.
pub const SPECTRAL_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum StabilityError {
    #[error("{op} applies only to {allowed}; got {family}")]
    WrongFamily { op: &'static str, allowed: &'static str, family: Family },
    #[error("{op} requires M != 0")]
    ZeroParameter { op: &'static str },
    #[error("no energy-Casimir multiplier exists at {family} with M = {m}")]
    NoMultiplier { family: Family, m: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NonlinearlyStable,
    Unstable,
    Degenerate,
}

/// Which test produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Certificate {
    /// A linearization eigenvalue with positive real part.
    PositiveEigenvalue { eigenvalue: f64 },
    /// Definite second variation of `F = H + multiplier·C` on the tangent
    /// space of the Casimir level set.
    ArnoldDefinite { multiplier: f64, restricted_eigenvalues: [f64; 2] },
    /// The Casimir is a strict Lyapunov function at the origin.
    LyapunovAtOrigin,
    /// No test fired.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityVerdict {
    pub family: Family,
    pub m: f64,
    pub spectrum: [Complex64; 3],
    pub verdict: Verdict,
    pub certificate: Certificate,
}

/// Outcome of the Arnold second-variation test at a member of E1, E2 or E3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArnoldReport {
    pub family: Family,
    pub m: f64,
    pub multiplier: f64,
    /// Eigenvalues of the Hessian of `F` restricted to `ker DC`, ascending.
    pub restricted_eigenvalues: [f64; 2],
    pub verdict: Verdict,
}

/// Linearization spectrum at the member of `family` with parameter `m`,
/// sorted by real part, then imaginary part.
pub fn spectrum_at(family: Family, m: f64) -> [Complex64; 3] {
    eigenvalues(&jacobian(realize(family, m)))
}

/// Closed-form spectrum, in the same order as [`spectrum_at`]:
/// `{0, ±2M²√(M²+1)}` for E4/E5, `{0, ±iM²√(M²+1)}` for E1/E2, and
/// `{0, ±iM}` for E3.
pub fn predicted_spectrum(family: Family, m: f64) -> [Complex64; 3] {
    let m2 = m * m;
    let w = m2 * (m2 + 1.0).sqrt();
    match family {
        Family::E1 | Family::E2 => {
            [Complex64::new(0.0, -w), Complex64::new(0.0, 0.0), Complex64::new(0.0, w)]
        }
        Family::E3 => {
            let a = m.abs();
            [Complex64::new(0.0, -a), Complex64::new(0.0, 0.0), Complex64::new(0.0, a)]
        }
        Family::E4 | Family::E5 => {
            [Complex64::new(-2.0 * w, 0.0), Complex64::new(0.0, 0.0), Complex64::new(2.0 * w, 0.0)]
        }
    }
}

/// Eigenvalues of a symmetric 2×2 matrix, ascending.
fn sym2_eigenvalues(a: f64, b: f64, d: f64) -> [f64; 2] {
    let mean = 0.5 * (a + d);
    let disc = (0.5 * (a - d)).hypot(b);
    [mean - disc, mean + disc]
}

/// Runs the second-variation test on `F = H + λC` at the member of E1, E2 or
/// E3 with parameter `m ≠ 0`. The multiplier `λ` is chosen so that the member
/// is a critical point of `F`; the Hessian of `F` is then restricted to the
/// two-dimensional kernel of `DC` and its definiteness decides the verdict.
pub fn arnold_test(family: Family, m: f64) -> Result<ArnoldReport, StabilityError> {
    let op = "the Arnold test";
    if matches!(family, Family::E4 | Family::E5) {
        return Err(StabilityError::WrongFamily { op, allowed: "E1, E2, E3", family });
    }
    if m == 0.0 {
        return Err(StabilityError::ZeroParameter { op });
    }
    let point = realize(family, m);
    let (gh, gc) = gradients(point);
    let denom = gc.x * gc.x + gc.y * gc.y + gc.z * gc.z;
    let lambda = -(gh.x * gc.x + gh.y * gc.y + gh.z * gc.z) / denom;
    let grad_f = [gh.x + lambda * gc.x, gh.y + lambda * gc.y, gh.z + lambda * gc.z];
    let scale = gh.x.abs().max(gh.y.abs()).max(gh.z.abs()).max(1.0);
    if !lambda.is_finite()
        || grad_f.iter().any(|g| g.abs() > 1e-9 * scale)
    {
        return Err(StabilityError::NoMultiplier { family, m });
    }
    // Hess F = diag(3x² + λ, 3y² + λ, -1 + λ); the kernel of DC at each
    // family is spanned by the two coordinate axes transverse to the member.
    let hess = [
        3.0 * point.x * point.x + lambda,
        3.0 * point.y * point.y + lambda,
        -1.0 + lambda,
    ];
    let basis: [usize; 2] = match family {
        Family::E1 => [1, 2],
        Family::E2 => [0, 2],
        Family::E3 => [0, 1],
        _ => unreachable!(),
    };
    let restricted_eigenvalues = sym2_eigenvalues(hess[basis[0]], 0.0, hess[basis[1]]);
    let definite = restricted_eigenvalues.iter().all(|e| *e > DEFINITENESS_TOL)
        || restricted_eigenvalues.iter().all(|e| *e < -DEFINITENESS_TOL);
    let verdict = if definite { Verdict::NonlinearlyStable } else { Verdict::Degenerate };
    Ok(ArnoldReport { family, m, multiplier: lambda, restricted_eigenvalues, verdict })
}

/// Full stability classification of the member of `family` with parameter
/// `m`: spectrum, verdict, and the certificate behind the verdict.
pub fn classify_equilibrium(family: Family, m: f64) -> StabilityVerdict {
    let spectrum = spectrum_at(family, m);
    if m == 0.0 {
        return StabilityVerdict {
            family,
            m,
            spectrum,
            verdict: Verdict::NonlinearlyStable,
            certificate: Certificate::LyapunovAtOrigin,
        };
    }
    let (verdict, certificate) = match family {
        Family::E4 | Family::E5 => {
            let max_re = spectrum.iter().map(|e| e.re).fold(f64::NEG_INFINITY, f64::max);
            if max_re > SPECTRAL_TOL {
                (Verdict::Unstable, Certificate::PositiveEigenvalue { eigenvalue: max_re })
            } else {
                (Verdict::Degenerate, Certificate::Inconclusive)
            }
        }
        _ => match arnold_test(family, m) {
            Ok(report) if report.verdict == Verdict::NonlinearlyStable => (
                Verdict::NonlinearlyStable,
                Certificate::ArnoldDefinite {
                    multiplier: report.multiplier,
                    restricted_eigenvalues: report.restricted_eigenvalues,
                },
            ),
            _ => (Verdict::Degenerate, Certificate::Inconclusive),
        },
    };
    StabilityVerdict { family, m, spectrum, verdict, certificate }
}

/// Small-oscillation period of the linearized flow at a stable family member:
/// `2π / (M²√(M²+1))` for E1/E2 and `2π / |M|` for E3.
pub fn predicted_period(family: Family, m: f64) -> Result<f64, StabilityError> {
    let op = "period prediction";
    if m == 0.0 {
        return Err(StabilityError::ZeroParameter { op });
    }
    let m2 = m * m;
    match family {
        Family::E1 | Family::E2 => Ok(std::f64::consts::TAU / (m2 * (m2 + 1.0).sqrt())),
        Family::E3 => Ok(std::f64::consts::TAU / m.abs()),
        Family::E4 | Family::E5 => {
            Err(StabilityError::WrongFamily { op, allowed: "E1, E2, E3", family })
        }
    }
}

/// Value of the quadric `M²C - H - ¼M⁴`; its zero set is the invariant Moser
/// surface through `(±M, 0, 0)` and `(0, ±M, 0)`.
pub fn moser_surface_value(m: f64, s: State) -> f64 {
    let m2 = m * m;
    m2 * casimir(s) - hamiltonian(s) - 0.25 * m2 * m2
}

/// Measures the first return of an orbit to the section `y = y(0)`, crossed
/// in the same direction as at `t = 0`, by implicit mid-point integration
/// with linear interpolation of the crossing time. The orbit must first leave
/// a band of half-width `leave_eps` around the section; returns `None` if no
/// return is seen within `max_steps` steps.
pub fn measure_return_period(
    start: State,
    dt: f64,
    max_steps: usize,
    leave_eps: f64,
) -> Result<Option<f64>, IntegratorError> {
    let y0 = start.y;
    let dir = vector_field(start).y;
    let cfg = IntegratorConfig::new(dt, 1);
    let mut state = start;
    let mut prev = 0.0;
    let mut left = false;
    for step in 1..=max_steps {
        state = midpoint_step(state, &cfg)?;
        let cur = state.y - y0;
        if left {
            let crossed = if dir < 0.0 { prev > 0.0 && cur <= 0.0 } else { prev < 0.0 && cur >= 0.0 };
            if crossed {
                let frac = prev / (prev - cur);
                return Ok(Some(((step - 1) as f64 + frac) * dt));
            }
        }
        if cur.abs() > leave_eps {
            left = true;
        }
        prev = cur;
    }
    Ok(None)
}
