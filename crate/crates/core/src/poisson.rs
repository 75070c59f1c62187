//! The two Poisson structures realizing the system, the parametric family of
//! realizations they generate, and numerical verification of the Poisson
//! axioms.

use crate::dynamics::{casimir, hamiltonian, State};
use crate::linalg::Mat3;
use thiserror::Error;

/// Finite-difference step for Jacobi-identity verification.
const JACOBI_FD_STEP: f64 = 1e-5;
/// Allowed deviation of a·dd - b·cc from 1 at construction.
const PARAM_DET_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum PoissonError {
    #[error("realization parameters must satisfy a*dd - b*cc = 1, got {det}")]
    InvalidParams { det: f64 },
}

/// Parameters (a, b, cc, dd) of a realization, constrained by
/// a·dd - b·cc = 1. The last two are named cc/dd so that c stays available
/// for the Casimir value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizationParams {
    a: f64,
    b: f64,
    cc: f64,
    dd: f64,
}

impl RealizationParams {
    pub fn new(a: f64, b: f64, cc: f64, dd: f64) -> Result<Self, PoissonError> {
        let det = a * dd - b * cc;
        if !det.is_finite() || (det - 1.0).abs() > PARAM_DET_TOL {
            return Err(PoissonError::InvalidParams { det });
        }
        Ok(Self { a, b, cc, dd })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn cc(&self) -> f64 {
        self.cc
    }

    pub fn dd(&self) -> f64 {
        self.dd
    }
}

/// A Poisson structure on ℝ³, evaluated pointwise as an antisymmetric 3×3
/// matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PoissonStructure {
    Pi1,
    Pi2,
    Family(RealizationParams),
    /// The pencil member α·Π₁ + β·Π₂ used for compatibility checks.
    Pencil { alpha: f64, beta: f64 },
}

impl PoissonStructure {
    pub fn evaluate(&self, s: State) -> Mat3 {
        match *self {
            PoissonStructure::Pi1 => pi1(s),
            PoissonStructure::Pi2 => pi2(s),
            PoissonStructure::Family(p) => pi_family(p, s),
            PoissonStructure::Pencil { alpha, beta } => {
                let m1 = pi1(s);
                let m2 = pi2(s);
                let mut out = [[0.0; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        out[i][j] = alpha * m1[i][j] + beta * m2[i][j];
                    }
                }
                out
            }
        }
    }
}

/// First structure: rows (0, z, -y), (-z, 0, x), (y, -x, 0).
pub fn pi1(s: State) -> Mat3 {
    let State { x, y, z } = s;
    [[0.0, z, -y], [-z, 0.0, x], [y, -x, 0.0]]
}

/// Second structure: rows (0, z, y³), (-z, 0, -x³), (-y³, x³, 0).
pub fn pi2(s: State) -> Mat3 {
    let State { x, y, z } = s;
    let x3 = x * x * x;
    let y3 = y * y * y;
    [[0.0, z, y3], [-z, 0.0, -x3], [-y3, x3, 0.0]]
}

/// Family member Π_{a,b} = a·Π₁ - b·Π₂.
pub fn pi_family(p: RealizationParams, s: State) -> Mat3 {
    let m1 = pi1(s);
    let m2 = pi2(s);
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = p.a * m1[i][j] - p.b * m2[i][j];
        }
    }
    out
}

/// Hamiltonian of the (a,b,cc,dd) realization:
/// H_{cc,dd} = (dd/4)(x⁴+y⁴) + (cc/2)(x²+y²) + ((cc-dd)/2)z² = cc·C + dd·H.
pub fn h_family(p: RealizationParams, s: State) -> f64 {
    p.cc * casimir(s) + p.dd * hamiltonian(s)
}

/// Casimir of the (a,b,cc,dd) realization: C_{a,b} = a·C + b·H.
pub fn casimir_family(p: RealizationParams, s: State) -> f64 {
    p.a * casimir(s) + p.b * hamiltonian(s)
}

/// Worst Jacobi-identity residual of `p` at `s` over all index triples,
/// with derivatives taken by central finite differences (step 1e-5):
/// max over (i,j,k) of |Σ_l Π_il ∂_l Π_jk + Π_jl ∂_l Π_ki + Π_kl ∂_l Π_ij|.
pub fn jacobi_residual(p: &PoissonStructure, s: State) -> f64 {
    let base = p.evaluate(s);
    // partials[l][i][j] = ∂ Π_ij / ∂ x_l
    let mut partials = [[[0.0; 3]; 3]; 3];
    for l in 0..3 {
        let mut hi = s.to_array();
        let mut lo = s.to_array();
        hi[l] += JACOBI_FD_STEP;
        lo[l] -= JACOBI_FD_STEP;
        let mhi = p.evaluate(State::from_array(hi));
        let mlo = p.evaluate(State::from_array(lo));
        for i in 0..3 {
            for j in 0..3 {
                partials[l][i][j] = (mhi[i][j] - mlo[i][j]) / (2.0 * JACOBI_FD_STEP);
            }
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut total = 0.0;
                for l in 0..3 {
                    total += base[i][l] * partials[l][j][k]
                        + base[j][l] * partials[l][k][i]
                        + base[k][l] * partials[l][i][j];
                }
                worst = worst.max(total.abs());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{gradients, vector_field};
    use crate::linalg::{mat_vec, norm_inf, sub};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_states(n: usize, lo: f64, hi: f64, seed: u64) -> Vec<State> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                State::new(
                    rng.gen_range(lo..hi),
                    rng.gen_range(lo..hi),
                    rng.gen_range(lo..hi),
                )
            })
            .collect()
    }

    fn random_params(n: usize, seed: u64) -> Vec<RealizationParams> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let mut a: f64 = rng.gen_range(-2.0..2.0);
                while a.abs() < 0.3 {
                    a = rng.gen_range(-2.0..2.0);
                }
                let b = rng.gen_range(-2.0..2.0);
                let cc = rng.gen_range(-2.0..2.0);
                let dd = (1.0 + b * cc) / a;
                RealizationParams::new(a, b, cc, dd).unwrap()
            })
            .collect()
    }

    #[test]
    fn params_require_unit_determinant() {
        assert!(RealizationParams::new(1.0, 0.0, 0.0, 1.0).is_ok());
        assert!(RealizationParams::new(0.0, -1.0, 1.0, 0.0).is_ok());
        let err = RealizationParams::new(2.0, 0.0, 0.0, 1.0).unwrap_err();
        assert_eq!(err, PoissonError::InvalidParams { det: 2.0 });
    }

    #[test]
    fn pi1_realizes_the_field_and_kills_c() {
        assert_eq!(pi1(State::new(0.0, 0.0, 0.0)), [[0.0; 3]; 3]);
        for s in random_states(100, -2.0, 2.0, 21) {
            let (gh, gc) = gradients(s);
            let m = pi1(s);
            let realized = mat_vec(&m, gh.to_array());
            assert!(norm_inf(sub(realized, vector_field(s).to_array())) <= 1e-12);
            assert!(norm_inf(mat_vec(&m, gc.to_array())) <= 1e-12);
        }
    }

    #[test]
    fn pi2_realizes_the_field_and_kills_h() {
        assert_eq!(pi2(State::new(0.0, 0.0, 0.0)), [[0.0; 3]; 3]);
        for s in random_states(100, -2.0, 2.0, 22) {
            let (gh, gc) = gradients(s);
            let m = pi2(s);
            let realized = mat_vec(&m, gc.to_array());
            assert!(norm_inf(sub(realized, vector_field(s).to_array())) <= 1e-12);
            assert!(norm_inf(mat_vec(&m, gh.to_array())) <= 1e-12);
        }
    }

    #[test]
    fn family_members_expand_entrywise() {
        for p in random_params(10, 23) {
            for s in random_states(10, -2.0, 2.0, 24) {
                let State { x, y, z } = s;
                let (a, b) = (p.a(), p.b());
                let (x3, y3) = (x * x * x, y * y * y);
                let expected = [
                    [0.0, (a - b) * z, -a * y - b * y3],
                    [(b - a) * z, 0.0, a * x + b * x3],
                    [a * y + b * y3, -a * x - b * x3, 0.0],
                ];
                let got = pi_family(p, s);
                for i in 0..3 {
                    for j in 0..3 {
                        assert!((got[i][j] - expected[i][j]).abs() <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn family_endpoints_recover_pi1_and_pi2() {
        let id = RealizationParams::new(1.0, 0.0, 0.0, 1.0).unwrap();
        let swap = RealizationParams::new(0.0, -1.0, 1.0, 0.0).unwrap();
        for s in random_states(20, -2.0, 2.0, 25) {
            assert_eq!(pi_family(id, s), pi1(s));
            assert_eq!(pi_family(swap, s), pi2(s));
            assert_eq!(h_family(id, s), hamiltonian(s));
            assert_eq!(h_family(swap, s), casimir(s));
            assert_eq!(casimir_family(id, s), casimir(s));
        }
    }

    #[test]
    fn h_family_matches_its_polynomial_form() {
        for p in random_params(10, 26) {
            for s in random_states(10, -2.0, 2.0, 27) {
                let State { x, y, z } = s;
                let direct = p.dd() / 4.0 * (x.powi(4) + y.powi(4))
                    + p.cc() / 2.0 * (x * x + y * y)
                    + (p.cc() - p.dd()) / 2.0 * z * z;
                assert!((h_family(p, s) - direct).abs() <= 1e-10 * direct.abs().max(1.0));
            }
        }
    }

    #[test]
    fn casimir_family_hand_value() {
        let p = RealizationParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(casimir_family(p, State::new(1.0, 1.0, 0.0)), 2.5);
    }

    #[test]
    fn family_realization_and_kernel_identities() {
        for p in random_params(10, 28) {
            for s in random_states(100, -2.0, 2.0, 29) {
                let m = pi_family(p, s);
                let (gh, gc) = gradients(s);
                let grad_h_fam = [
                    p.cc() * gc.x + p.dd() * gh.x,
                    p.cc() * gc.y + p.dd() * gh.y,
                    p.cc() * gc.z + p.dd() * gh.z,
                ];
                let grad_c_fam = [
                    p.a() * gc.x + p.b() * gh.x,
                    p.a() * gc.y + p.b() * gh.y,
                    p.a() * gc.z + p.b() * gh.z,
                ];
                let realized = mat_vec(&m, grad_h_fam);
                assert!(norm_inf(sub(realized, vector_field(s).to_array())) <= 1e-10);
                assert!(norm_inf(mat_vec(&m, grad_c_fam)) <= 1e-10);
            }
        }
    }

    #[test]
    fn antisymmetry_is_exact() {
        let structures = [
            PoissonStructure::Pi1,
            PoissonStructure::Pi2,
            PoissonStructure::Family(RealizationParams::new(2.0, 1.0, 1.0, 1.0).unwrap()),
            PoissonStructure::Pencil { alpha: 0.7, beta: -1.3 },
        ];
        for s in random_states(50, -3.0, 3.0, 30) {
            for p in &structures {
                let m = p.evaluate(s);
                for (i, row) in m.iter().enumerate() {
                    for (j, entry) in row.iter().enumerate() {
                        assert_eq!(*entry, -m[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_residuals_are_small() {
        let pts = random_states(100, -2.0, 2.0, 31);
        for p in [
            PoissonStructure::Pi1,
            PoissonStructure::Pi2,
            PoissonStructure::Pencil { alpha: 1.0, beta: 1.0 },
        ] {
            for s in &pts {
                assert!(jacobi_residual(&p, *s) <= 1e-8, "{p:?} at {s}");
            }
        }
    }

    #[test]
    fn pencil_members_satisfy_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let pts = random_states(20, -2.0, 2.0, 33);
        for _ in 0..10 {
            let alpha = rng.gen_range(-2.0..2.0);
            let beta = rng.gen_range(-2.0..2.0);
            let p = PoissonStructure::Pencil { alpha, beta };
            for s in &pts {
                assert!(jacobi_residual(&p, *s) <= 1e-8);
            }
        }
    }
}
