//! Small fixed-size linear algebra: 3-vectors, 3×3 linear solves, closed-form
//! eigenvalues of 3×3 matrices, and singular values of 2×3 matrices.

use num_complex::Complex64;

/// A 3-vector of `f64` components.
pub type Vec3 = [f64; 3];
/// A 3×3 matrix stored row-major.
pub type Mat3 = [[f64; 3]; 3];

/// The 3×3 identity matrix.
pub const IDENTITY: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

/// Componentwise sum `a + b`.
pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Componentwise difference `a - b`.
pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Scalar multiple `k * a`.
pub fn scale(a: Vec3, k: f64) -> Vec3 {
    [k * a[0], k * a[1], k * a[2]]
}

/// Euclidean inner product.
pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Cross product `a × b`.
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Euclidean norm.
pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

/// Max-norm.
pub fn norm_inf(a: Vec3) -> f64 {
    a[0].abs().max(a[1].abs()).max(a[2].abs())
}

/// Matrix-vector product `m · v`.
pub fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

/// Solves `a · x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when the matrix is numerically singular.
pub fn solve(a: &Mat3, b: Vec3) -> Option<Vec3> {
    let mut m = *a;
    let mut rhs = b;
    for col in 0..3 {
        let mut pivot = col;
        for row in col + 1..3 {
            if m[row][col].abs() > m[pivot][col].abs() {
                pivot = row;
            }
        }
        if m[pivot][col] == 0.0 {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = m[col];
        for row in col + 1..3 {
            let factor = m[row][col] / pivot_row[col];
            for (entry, pivot_entry) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= factor * pivot_entry;
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for col in (0..3).rev() {
        let mut acc = rhs[col];
        for k in col + 1..3 {
            acc -= m[col][k] * x[k];
        }
        if !m[col][col].is_finite() || m[col][col] == 0.0 {
            return None;
        }
        x[col] = acc / m[col][col];
    }
    if x.iter().all(|v| v.is_finite()) {
        Some(x)
    } else {
        None
    }
}

/// Eigenvalues of a 3×3 matrix, sorted lexicographically by
/// (real part, imaginary part).
///
/// The characteristic cubic is solved in closed form (trigonometric branch
/// for three real roots, Cardano otherwise) and each root is then refined by
/// a few complex Newton iterations on the characteristic polynomial.
pub fn eigenvalues(m: &Mat3) -> [Complex64; 3] {
    let trace = m[0][0] + m[1][1] + m[2][2];
    // Sum of the principal 2×2 minors.
    let c1 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let mut roots = solve_cubic(-trace, c1, -det);
    for r in roots.iter_mut() {
        *r = polish_root(*r, -trace, c1, -det);
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

/// Roots of `t³ + a2·t² + a1·t + a0`.
fn solve_cubic(a2: f64, a1: f64, a0: f64) -> [Complex64; 3] {
    let shift = a2 / 3.0;
    // Depressed form u³ + p·u + q with t = u - shift.
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    let scale = p.abs().sqrt().max(q.abs().cbrt());
    if scale == 0.0 {
        let r = Complex64::new(-shift, 0.0);
        return [r, r, r];
    }
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let u = if disc > 0.0 {
        // One real root, one complex-conjugate pair.
        let r = disc.sqrt();
        let real = (-q / 2.0 + r).cbrt() + (-q / 2.0 - r).cbrt();
        // Deflation: u³ + p·u + q = (u - real)(u² + real·u + (p + real²)).
        let half = -real / 2.0;
        let rad = p + real * real - half * half;
        let imag = rad.max(0.0).sqrt();
        [
            Complex64::new(real, 0.0),
            Complex64::new(half, imag),
            Complex64::new(half, -imag),
        ]
    } else {
        // Three real roots via the trigonometric form.
        let amp = 2.0 * (-p / 3.0).max(0.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for (k, slot) in out.iter_mut().enumerate() {
            let angle = theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0;
            *slot = Complex64::new(amp * angle.cos(), 0.0);
        }
        out
    };
    [
        u[0] - shift,
        u[1] - shift,
        u[2] - shift,
    ]
}

/// A few complex Newton steps on `t³ + a2·t² + a1·t + a0`, keeping the
/// iterate with the smallest residual.
fn polish_root(start: Complex64, a2: f64, a1: f64, a0: f64) -> Complex64 {
    let eval = |t: Complex64| ((t + a2) * t + a1) * t + a0;
    let deriv = |t: Complex64| (3.0 * t + 2.0 * a2) * t + a1;
    let mut best = start;
    let mut best_res = eval(best).norm();
    let mut t = start;
    for _ in 0..4 {
        let d = deriv(t);
        if d.norm() == 0.0 {
            break;
        }
        t -= eval(t) / d;
        let res = eval(t).norm();
        if !res.is_finite() {
            break;
        }
        if res < best_res {
            best = t;
            best_res = res;
        }
    }
    best
}

/// Singular values `[σ₁, σ₂]` (descending) of the 2×3 matrix with rows
/// `r0`, `r1`.
///
/// σ₁ comes from the larger eigenvalue of the 2×2 Gram matrix; σ₂ is
/// recovered from the identity σ₁σ₂ = ‖r0 × r1‖, which stays accurate where
/// the Gram computation of the smaller eigenvalue loses to cancellation.
pub fn singular_values_2x3(r0: Vec3, r1: Vec3) -> [f64; 2] {
    let g00 = dot(r0, r0);
    let g11 = dot(r1, r1);
    let g01 = dot(r0, r1);
    let mean = 0.5 * (g00 + g11);
    let disc = (0.5 * (g00 - g11)).hypot(g01);
    let sigma1 = (mean + disc).max(0.0).sqrt();
    if sigma1 == 0.0 {
        return [0.0, 0.0];
    }
    let area = norm(cross(r0, r1));
    [sigma1, area / sigma1]
}
