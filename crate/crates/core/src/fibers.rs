//! Fibers of the energy-Casimir map: solving for points on a fiber,
//! describing a fiber's structure from its region label, and the
//! heteroclinic-web experiment on the `Sigma45u` level sets.
//!
//! On a fiber `(h, c)`, a slice at fixed `z` reduces to the quadratic
//! `t² - st + p = 0` with `s = x² + y² = 2c - z²` and `p = x²y²` recovered
//! from `x⁴ + y⁴ = 4h + 2z²`; each nonnegative root pair yields up to four
//! sign choices. Roots within a small snap band of zero are tried both as
//! exact zeros and as-is, and every candidate must pass a residual filter, so
//! boundary fibers are found exactly and no spurious points survive.

use crate::dynamics::{apply_symmetry, casimir, hamiltonian, EcPoint, State, SymmetryTransform};
use crate::ecmap::{classify, in_image, RegionLabel, DEFAULT_CLASSIFY_TOL};
use crate::integrator::{integrate, IntegratorConfig, IntegratorError, Trajectory};
use serde::Serialize;
use thiserror::Error;

/// Residual bound `|H - h|, |C - c|` every returned fiber point satisfies
/// (scaled by `max(1, |h|, |c|)`).
pub const FIBER_RESIDUAL_TOL: f64 = 1e-9;
/// Quadratic roots within this relative band of zero are also tried as zero.
const SNAP: f64 = 1e-7;
/// Number of z-slices sampled for fiber witnesses.
const WITNESS_SAMPLES: usize = 41;

#[derive(Debug, Error)]
pub enum FiberError {
    #[error("no fiber points at h = {h}, c = {c}, z = {z}")]
    NoSolutions { h: f64, c: f64, z: f64 },
    #[error("solution index {index} out of range: the fiber slice has {count} points")]
    SolutionIndex { index: usize, count: usize },
    #[error("heteroclinic runs require h > 0, got h = {h}")]
    InvalidLevel { h: f64 },
    #[error(transparent)]
    Integration(#[from] IntegratorError),
}

/// All states on the fiber `(h, c)` with the given `z` coordinate, sorted
/// lexicographically by `(x, y)`.
pub fn solve_initial_condition(h: f64, c: f64, z: f64) -> Vec<State> {
    let scale = 1.0_f64.max(h.abs()).max(c.abs());
    let snap = SNAP * scale;
    let tol = FIBER_RESIDUAL_TOL * scale;

    let s_sum = 2.0 * c - z * z;
    if !s_sum.is_finite() || s_sum < -snap {
        return Vec::new();
    }
    let p = (s_sum * s_sum - (4.0 * h + 2.0 * z * z)) / 2.0;
    let disc = s_sum * s_sum - 4.0 * p;
    if disc < -snap {
        return Vec::new();
    }
    let sd = disc.max(0.0).sqrt();
    let roots = [(s_sum - sd) / 2.0, (s_sum + sd) / 2.0];

    // Square-root candidates for x² = t, including the snapped-to-zero twin.
    let cands = |t: f64| -> Vec<f64> {
        let mut out = Vec::new();
        if t >= -snap {
            let v = t.max(0.0).sqrt();
            out.push(v);
            if v != 0.0 {
                out.push(-v);
            }
            if t.abs() <= snap && v != 0.0 {
                out.push(0.0);
            }
        }
        out
    };

    let mut points: Vec<State> = Vec::new();
    for (tx, ty) in [(roots[0], roots[1]), (roots[1], roots[0])] {
        for &x in &cands(tx) {
            for &y in &cands(ty) {
                let st = State::new(x, y, z);
                if (hamiltonian(st) - h).abs() <= tol
                    && (casimir(st) - c).abs() <= tol
                    && !points.iter().any(|q| q.x == st.x && q.y == st.y)
                {
                    points.push(st);
                }
            }
        }
    }
    points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    points
}

/// One explicit point on the fiber of any `(h, c)` in the image: taking
/// `y = 0` reduces the fiber equations to `x⁴ + 2x² = 4(h + c)`, whose
/// nonnegative root always yields a feasible `z² = 2c - x²`.
pub fn canonical_fiber_point(p: EcPoint) -> Option<State> {
    if !in_image(p) {
        return None;
    }
    let x2 = (1.0 + 4.0 * (p.h + p.c)).sqrt() - 1.0;
    let z2 = 2.0 * p.c - x2;
    Some(State::new(x2.max(0.0).sqrt(), 0.0, z2.max(0.0).sqrt()))
}

/// Qualitative structure of a fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiberKind {
    Empty,
    /// Finitely many points, all equilibria.
    FinitePointSet,
    /// A disjoint union of periodic orbits.
    PeriodicOrbitFamily { orbits: usize },
    /// Four saddle equilibria joined by heteroclinic connections.
    HeteroclinicWeb,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiberDescription {
    pub target: EcPoint,
    pub label: RegionLabel,
    pub kind: FiberKind,
    /// For finite fibers, the full point set; otherwise sample points
    /// gathered from z-slices across the fiber.
    pub witnesses: Vec<State>,
}

/// Sample fiber points over a uniform z-grid spanning the closed ball
/// `|z| ≤ √(2c)` the fiber lives in; the grid contains `0` and both exact
/// endpoints.
fn sample_witnesses(h: f64, c: f64) -> Vec<State> {
    let zmax = (2.0 * c.max(0.0)).sqrt();
    let n = WITNESS_SAMPLES;
    let mut out = Vec::new();
    for k in 0..n {
        let z = zmax * (2 * k as i64 - (n as i64 - 1)) as f64 / (n as f64 - 1.0);
        out.extend(solve_initial_condition(h, c, z));
    }
    out
}

/// Describes the fiber over `(h, c)` according to its partition label.
pub fn describe_fiber(target: EcPoint) -> FiberDescription {
    let label = classify(target, DEFAULT_CLASSIFY_TOL);
    let EcPoint { h, c } = target;
    let r = (2.0 * c.max(0.0)).sqrt();
    let (kind, witnesses) = match label {
        RegionLabel::Outside => (FiberKind::Empty, Vec::new()),
        RegionLabel::BifurcationPoint => {
            (FiberKind::FinitePointSet, vec![State::new(0.0, 0.0, 0.0)])
        }
        RegionLabel::Sigma12s => (
            FiberKind::FinitePointSet,
            vec![
                State::new(-r, 0.0, 0.0),
                State::new(0.0, -r, 0.0),
                State::new(0.0, r, 0.0),
                State::new(r, 0.0, 0.0),
            ],
        ),
        RegionLabel::Sigma3s => (
            FiberKind::FinitePointSet,
            vec![State::new(0.0, 0.0, -r), State::new(0.0, 0.0, r)],
        ),
        RegionLabel::SigmaP1 => {
            (FiberKind::PeriodicOrbitFamily { orbits: 4 }, sample_witnesses(h, c))
        }
        RegionLabel::SigmaP2 => {
            (FiberKind::PeriodicOrbitFamily { orbits: 2 }, sample_witnesses(h, c))
        }
        RegionLabel::Sigma45u => (FiberKind::HeteroclinicWeb, sample_witnesses(h, c)),
    };
    FiberDescription { target, label, kind, witnesses }
}

/// One forward/backward integration from a point of a `Sigma45u` fiber,
/// with each endpoint matched to the nearest saddle of the web.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeteroclinicRun {
    pub start: State,
    pub forward_end: State,
    pub backward_end: State,
    pub forward_target: State,
    pub backward_target: State,
    pub forward_distance: f64,
    pub backward_distance: f64,
    pub forward_max_abs_diff: f64,
    pub backward_max_abs_diff: f64,
    /// Largest |C - c| over both trajectory legs.
    pub max_c_level_error: f64,
    /// Largest |H - h| over both trajectory legs.
    pub max_h_level_error: f64,
}

/// The four saddles `E4(±m, ±m, 0)`, `E5(±m, ∓m, 0)` on the level `c = m²`,
/// in heteroclinic-cycle order.
fn saddle_cycle(m: f64) -> [State; 4] {
    [
        State::new(m, m, 0.0),
        State::new(m, -m, 0.0),
        State::new(-m, -m, 0.0),
        State::new(-m, m, 0.0),
    ]
}

fn level_error(tr: &Trajectory, h: f64, c: f64) -> (f64, f64) {
    let mut eh = 0.0_f64;
    let mut ec = 0.0_f64;
    for s in &tr.samples {
        eh = eh.max((hamiltonian(s.state) - h).abs());
        ec = ec.max((casimir(s.state) - c).abs());
    }
    (eh, ec)
}

fn run_from(start: State, h: f64, c: f64, dt: f64, steps: usize) -> Result<HeteroclinicRun, FiberError> {
    let fwd = integrate(start, &IntegratorConfig::new(dt, steps))?;
    let bwd = integrate(start, &IntegratorConfig::new(-dt, steps))?;
    let saddles = saddle_cycle(c.sqrt());
    let nearest = |end: State| -> State {
        *saddles
            .iter()
            .min_by(|a, b| end.distance(**a).total_cmp(&end.distance(**b)))
            .expect("the saddle list is nonempty")
    };
    let forward_end = fwd.final_state();
    let backward_end = bwd.final_state();
    let forward_target = nearest(forward_end);
    let backward_target = nearest(backward_end);
    let (fh, fc) = level_error(&fwd, h, c);
    let (bh, bc) = level_error(&bwd, h, c);
    Ok(HeteroclinicRun {
        start,
        forward_end,
        backward_end,
        forward_target,
        backward_target,
        forward_distance: forward_end.distance(forward_target),
        backward_distance: backward_end.distance(backward_target),
        forward_max_abs_diff: forward_end.max_abs_diff(forward_target),
        backward_max_abs_diff: backward_end.max_abs_diff(backward_target),
        max_c_level_error: fc.max(bc),
        max_h_level_error: fh.max(bh),
    })
}

/// Integrates forward and backward from the fiber point with the given index
/// in the `z = z_seed` slice of the `Sigma45u` fiber at energy `h > 0`
/// (so `c = √(2h)`).
pub fn run_heteroclinic_experiment(
    h: f64,
    z_seed: f64,
    dt: f64,
    steps: usize,
    solution_index: usize,
) -> Result<HeteroclinicRun, FiberError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(FiberError::InvalidLevel { h });
    }
    let c = (2.0 * h).sqrt();
    let slice = solve_initial_condition(h, c, z_seed);
    if slice.is_empty() {
        return Err(FiberError::NoSolutions { h, c, z: z_seed });
    }
    let start = *slice
        .get(solution_index)
        .ok_or(FiberError::SolutionIndex { index: solution_index, count: slice.len() })?;
    run_from(start, h, c, dt, steps)
}

/// A full web: eight runs whose targets cover all four edges of the
/// heteroclinic cycle `E4 → E5 → E4 → E5 → …` on a `Sigma45u` level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeteroclinicWeb {
    pub h: f64,
    pub c: f64,
    /// The saddles in cycle order.
    pub cycle: [State; 4],
    pub runs: Vec<HeteroclinicRun>,
    /// For each cycle edge `(cycle[i], cycle[i+1 mod 4])`, the indices of the
    /// runs connecting its two saddles.
    pub edge_runs: [Vec<usize>; 4],
}

impl HeteroclinicWeb {
    /// True when every edge of the cycle is realized by at least one run.
    pub fn cycle_closed(&self) -> bool {
        self.edge_runs.iter().all(|e| !e.is_empty())
    }
}

/// Builds eight heteroclinic runs on the level `h > 0` by applying symmetry
/// compositions to a single base fiber point (the lexicographically largest
/// solution of the slice `z = √c / 2`).
pub fn generate_heteroclinic_web(
    h: f64,
    dt: f64,
    steps: usize,
) -> Result<HeteroclinicWeb, FiberError> {
    use SymmetryTransform::*;
    const COMBOS: [&[SymmetryTransform]; 8] = [
        &[],
        &[NegateXy],
        &[QuarterTurn],
        &[QuarterTurnBack],
        &[NegateXz],
        &[NegateYz],
        &[NegateXz, QuarterTurn],
        &[NegateXz, QuarterTurnBack],
    ];

    if !(h > 0.0 && h.is_finite()) {
        return Err(FiberError::InvalidLevel { h });
    }
    let c = (2.0 * h).sqrt();
    let z_seed = 0.5 * c.sqrt();
    let slice = solve_initial_condition(h, c, z_seed);
    let base = *slice.last().ok_or(FiberError::NoSolutions { h, c, z: z_seed })?;

    let mut runs = Vec::with_capacity(COMBOS.len());
    for combo in COMBOS {
        let start = combo.iter().fold(base, |s, &t| apply_symmetry(t, s));
        runs.push(run_from(start, h, c, dt, steps)?);
    }

    let cycle = saddle_cycle(c.sqrt());
    let mut edge_runs: [Vec<usize>; 4] = Default::default();
    for (i, edge) in edge_runs.iter_mut().enumerate() {
        let (a, b) = (cycle[i], cycle[(i + 1) % 4]);
        for (j, run) in runs.iter().enumerate() {
            let covers = (run.forward_target.max_abs_diff(a) <= 1e-12
                && run.backward_target.max_abs_diff(b) <= 1e-12)
                || (run.forward_target.max_abs_diff(b) <= 1e-12
                    && run.backward_target.max_abs_diff(a) <= 1e-12);
            if covers {
                edge.push(j);
            }
        }
    }
    Ok(HeteroclinicWeb { h, c, cycle, runs, edge_runs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::vector_field;
    use crate::ecmap::ec_map;
    use crate::integrator::midpoint_step;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn residuals_ok(points: &[State], h: f64, c: f64) {
        let tol = FIBER_RESIDUAL_TOL * 1.0_f64.max(h.abs()).max(c.abs());
        for p in points {
            assert!((hamiltonian(*p) - h).abs() <= tol, "H residual at {p}");
            assert!((casimir(*p) - c).abs() <= tol, "C residual at {p}");
        }
    }

    #[test]
    fn the_reference_slice_has_eight_points() {
        let sols = solve_initial_condition(0.5, 1.0, 0.5);
        assert_eq!(sols.len(), 8);
        residuals_ok(&sols, 0.5, 1.0);
        let last = sols[7];
        assert!((last.x - 1.25338).abs() <= 1e-5 && (last.y - 0.42312).abs() <= 1e-5);
        assert!((last.x - 1.2533836385375998).abs() <= 1e-12);
        assert!((last.y - 0.4231187240553735).abs() <= 1e-12);
        for s in &sols {
            assert_eq!(s.z, 0.5);
            // Sign flips and the x↔y swap stay within the solution set.
            assert!(sols.iter().any(|q| q.x == -s.x && q.y == -s.y));
            assert!(sols.iter().any(|q| q.x == s.y && q.y == s.x));
        }
        let mut sorted = sols.clone();
        sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        assert_eq!(sols, sorted);
    }

    #[test]
    fn degenerate_and_empty_slices() {
        assert_eq!(solve_initial_condition(0.0, 0.0, 0.0), vec![State::new(0.0, 0.0, 0.0)]);
        assert!(solve_initial_condition(1.0, 0.5, 0.0).is_empty());
        assert!(solve_initial_condition(0.5, 1.0, 10.0).is_empty());
        // z = 0 slice of the web level: the four saddles themselves.
        let saddles = solve_initial_condition(0.5, 1.0, 0.0);
        assert_eq!(saddles.len(), 4);
        for s in &saddles {
            assert!((s.x.abs() - 1.0).abs() <= 1e-12 && (s.y.abs() - 1.0).abs() <= 1e-12);
            assert_eq!(vector_field(*s).max_abs_diff(State::new(0.0, 0.0, 0.0)), 0.0);
        }
    }

    #[test]
    fn random_points_lie_on_their_own_fiber_slice() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..200 {
            let s = State::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let p = ec_map(s);
            let sols = solve_initial_condition(p.h, p.c, s.z);
            assert!(!sols.is_empty(), "empty slice for {s}");
            assert!(sols.len() <= 8);
            residuals_ok(&sols, p.h, p.c);
            assert!(
                sols.iter().any(|q| (q.x - s.x).abs() <= 1e-6 && (q.y - s.y).abs() <= 1e-6),
                "generating point {s} not recovered"
            );
        }
    }

    #[test]
    fn canonical_points_cover_the_image() {
        let cases = [
            EcPoint { h: 0.0, c: 0.0 },
            EcPoint { h: 1.0, c: 1.0 },
            EcPoint { h: -1.0, c: 1.0 },
            EcPoint { h: 0.5, c: 1.0 },
            EcPoint { h: 0.64, c: 0.9 },
            EcPoint { h: -1.0, c: 2.0 },
            EcPoint { h: 0.0, c: 3.0 },
            EcPoint { h: 2.0, c: 3.0 },
        ];
        for p in cases {
            let w = canonical_fiber_point(p).expect("point lies in the image");
            assert!((hamiltonian(w) - p.h).abs() <= 1e-9, "H at ({}, {})", p.h, p.c);
            assert!((casimir(w) - p.c).abs() <= 1e-9, "C at ({}, {})", p.h, p.c);
        }
        assert_eq!(canonical_fiber_point(EcPoint { h: 1.0, c: 0.5 }), None);
        assert_eq!(canonical_fiber_point(EcPoint { h: 0.5, c: 0.5 }), None);
    }

    #[test]
    fn boundary_fibers_are_finite_point_sets() {
        let d = describe_fiber(EcPoint { h: 1.0, c: 1.0 });
        assert_eq!(d.label, RegionLabel::Sigma12s);
        assert_eq!(d.kind, FiberKind::FinitePointSet);
        let r = 2.0_f64.sqrt();
        assert_eq!(
            d.witnesses,
            vec![
                State::new(-r, 0.0, 0.0),
                State::new(0.0, -r, 0.0),
                State::new(0.0, r, 0.0),
                State::new(r, 0.0, 0.0),
            ]
        );

        let d = describe_fiber(EcPoint { h: -1.0, c: 1.0 });
        assert_eq!(d.label, RegionLabel::Sigma3s);
        assert_eq!(d.witnesses, vec![State::new(0.0, 0.0, -r), State::new(0.0, 0.0, r)]);

        let d = describe_fiber(EcPoint { h: 0.0, c: 0.0 });
        assert_eq!(d.kind, FiberKind::FinitePointSet);
        assert_eq!(d.witnesses, vec![State::new(0.0, 0.0, 0.0)]);

        let d = describe_fiber(EcPoint { h: 1.0, c: 0.5 });
        assert_eq!(d.label, RegionLabel::Outside);
        assert_eq!(d.kind, FiberKind::Empty);
        assert!(d.witnesses.is_empty());
    }

    #[test]
    fn interior_fibers_are_periodic_orbit_families() {
        let d = describe_fiber(EcPoint { h: 0.64, c: 0.9 });
        assert_eq!(d.label, RegionLabel::SigmaP1);
        assert_eq!(d.kind, FiberKind::PeriodicOrbitFamily { orbits: 4 });
        assert!(!d.witnesses.is_empty());
        residuals_ok(&d.witnesses, 0.64, 0.9);
        let zmax = (2.0 * 0.9_f64).sqrt();
        assert!(d.witnesses.iter().all(|w| w.z.abs() <= zmax));

        let d = describe_fiber(EcPoint { h: -1.0, c: 2.0 });
        assert_eq!(d.kind, FiberKind::PeriodicOrbitFamily { orbits: 2 });
        residuals_ok(&d.witnesses, -1.0, 2.0);

        let d = describe_fiber(EcPoint { h: 0.5, c: 1.0 });
        assert_eq!(d.label, RegionLabel::Sigma45u);
        assert_eq!(d.kind, FiberKind::HeteroclinicWeb);
        assert!(!d.witnesses.is_empty());
    }

    #[test]
    fn periodic_fibers_return_to_their_start() {
        // One representative per interior region; both orbits circle a
        // center on their fiber, so the trajectory must revisit the start
        // within (well within) ten predicted periods.
        for (start, period) in [
            (State::new(1.0, 0.05, 0.05), 4.45),
            (State::new(0.05, 0.05, 2.0), std::f64::consts::PI),
        ] {
            let p = ec_map(start);
            let slice = solve_initial_condition(p.h, p.c, start.z);
            let from = *slice.last().unwrap();
            assert!(from.max_abs_diff(start) <= 1e-6);
            let dt = 1e-3;
            let steps = (2.2 * period / dt) as usize;
            let tr = integrate(from, &IntegratorConfig::new(dt, steps)).unwrap();
            let min_return = tr
                .samples
                .iter()
                .filter(|s| s.t > 0.5 * period)
                .map(|s| s.state.distance(from))
                .fold(f64::INFINITY, f64::min);
            assert!(min_return <= 1e-3, "min return distance {min_return}");
            assert!(tr.max_abs_c_drift() <= 1e-9);
            assert!(tr.max_abs_h_drift() <= 1e-6);
        }
    }

    #[test]
    fn the_base_heteroclinic_run_connects_the_saddles() {
        let run = run_heteroclinic_experiment(0.5, 0.5, 0.015, 160, 7).unwrap();
        assert!((run.start.x - 1.2533836385375998).abs() <= 1e-12);
        assert_eq!(run.forward_target, State::new(1.0, -1.0, 0.0));
        assert_eq!(run.backward_target, State::new(1.0, 1.0, 0.0));
        assert!(run.forward_max_abs_diff <= 5e-3, "forward {}", run.forward_max_abs_diff);
        assert!(run.backward_max_abs_diff <= 5e-3, "backward {}", run.backward_max_abs_diff);
        assert!(run.max_c_level_error <= 1e-9);
        assert!(run.max_h_level_error <= 1e-4);
    }

    #[test]
    fn a_run_seeded_at_a_saddle_is_degenerate() {
        let run = run_heteroclinic_experiment(0.5, 0.0, 0.015, 160, 3).unwrap();
        assert_eq!(run.start, State::new(1.0, 1.0, 0.0));
        assert_eq!(run.forward_end, run.start);
        assert_eq!(run.backward_end, run.start);
        assert_eq!(run.forward_target, run.backward_target);
        assert_eq!(run.forward_distance, 0.0);
    }

    #[test]
    fn experiment_errors() {
        assert!(matches!(
            run_heteroclinic_experiment(-0.5, 0.5, 0.015, 160, 0),
            Err(FiberError::InvalidLevel { .. })
        ));
        assert!(matches!(
            run_heteroclinic_experiment(0.5, 10.0, 0.015, 160, 0),
            Err(FiberError::NoSolutions { .. })
        ));
        match run_heteroclinic_experiment(0.5, 0.5, 0.015, 160, 8) {
            Err(FiberError::SolutionIndex { index: 8, count: 8 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            run_heteroclinic_experiment(0.5, 0.5, f64::NAN, 160, 0),
            Err(FiberError::Integration(_))
        ));
    }

    #[test]
    fn the_web_covers_the_cycle() {
        let web = generate_heteroclinic_web(0.5, 0.015, 160).unwrap();
        assert_eq!(web.c, 1.0);
        assert_eq!(web.runs.len(), 8);
        assert_eq!(
            web.cycle,
            [
                State::new(1.0, 1.0, 0.0),
                State::new(1.0, -1.0, 0.0),
                State::new(-1.0, -1.0, 0.0),
                State::new(-1.0, 1.0, 0.0),
            ]
        );
        for (i, run) in web.runs.iter().enumerate() {
            assert!(run.forward_max_abs_diff <= 5e-3, "run {i} forward");
            assert!(run.backward_max_abs_diff <= 5e-3, "run {i} backward");
            assert!(run.max_c_level_error <= 1e-9, "run {i} C confinement");
            assert!(run.max_h_level_error <= 1e-4, "run {i} H confinement");
        }
        for edge in &web.edge_runs {
            assert_eq!(edge.len(), 2, "edges {:?}", web.edge_runs);
        }
        assert!(web.cycle_closed());

        // The second run is the NegateXy mirror of the base run and covers
        // the opposite E4-E5 edge.
        let mirrored = apply_symmetry(SymmetryTransform::NegateXy, web.runs[0].start);
        assert_eq!(web.runs[1].start, mirrored);
        let pair = [web.runs[1].forward_target, web.runs[1].backward_target];
        assert!(pair.contains(&State::new(-1.0, -1.0, 0.0)));
        assert!(pair.contains(&State::new(-1.0, 1.0, 0.0)));
    }

    #[test]
    fn web_seed_points_stay_on_the_level() {
        let web = generate_heteroclinic_web(0.5, 0.015, 160).unwrap();
        let cfg = IntegratorConfig::new(0.015, 1);
        for run in &web.runs {
            assert!((casimir(run.start) - 1.0).abs() <= 1e-10);
            assert!((hamiltonian(run.start) - 0.5).abs() <= 1e-10);
            let stepped = midpoint_step(run.start, &cfg).unwrap();
            assert!((casimir(stepped) - 1.0).abs() <= 1e-10);
        }
    }
}
