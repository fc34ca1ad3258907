//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use oscinfo::GaussianExponent;
use rand::Rng;

/// Second moments of `|ψ|²` by tensor-product trapezoid quadrature, with
/// momentum moments from fourth-order finite differences of `ψ` itself.
/// Only `GaussianExponent::amplitude` is used, never the moment formulas.
/// Returns the 4×4 matrix over `(x1, p1, x2, p2)` (row-major).
pub fn quadrature_moments(exp: &GaussianExponent) -> [[f64; 4]; 4] {
    // Box and spacing from the decay rates of |ψ|² = exp(-xᵀ Re(K) x).
    let (a, b, c) = (exp.a1.re, exp.a2.re, -0.5 * exp.a12.re);
    let mean = 0.5 * (a + b);
    let rad = (0.25 * (a - b) * (a - b) + c * c).sqrt();
    let (lmin, lmax) = (mean - rad, mean + rad);
    let half = (40.0 / lmin).sqrt();
    let h = 0.25 / lmax.sqrt();
    let n = (2.0 * half / h).ceil() as usize + 1;
    let h = 2.0 * half / (n - 1) as f64;
    let fd = 1e-3;

    let psi = |x1: f64, x2: f64| exp.amplitude(x1, x2);
    let d = |f: &dyn Fn(f64) -> Complex64, x: f64| {
        (-f(x + 2.0 * fd) + 8.0 * f(x + fd) - 8.0 * f(x - fd) + f(x - 2.0 * fd)) / (12.0 * fd)
    };

    let mut norm = 0.0;
    let mut m = [[0.0f64; 4]; 4];
    for i in 0..n {
        let x1 = -half + i as f64 * h;
        let wi = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        for j in 0..n {
            let x2 = -half + j as f64 * h;
            let wj = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
            let w = wi * wj;
            let v = psi(x1, x2);
            let dens = v.norm_sqr() * w;
            norm += dens;
            // p ψ = -i ∂ψ
            let p1 = -Complex64::i() * d(&|y| psi(y, x2), x1);
            let p2 = -Complex64::i() * d(&|y| psi(x1, y), x2);
            let xs = [x1, x2];
            let ps = [p1, p2];
            for a in 0..2 {
                for b in 0..2 {
                    m[2 * a][2 * b] += xs[a] * xs[b] * dens;
                    m[2 * a + 1][2 * b + 1] += (ps[a].conj() * ps[b]).re * w;
                    // Re ⟨ψ| x_a p_b |ψ⟩ = symmetrized correlator
                    m[2 * a][2 * b + 1] += (v.conj() * xs[a] * ps[b]).re * w;
                }
            }
        }
    }
    for a in 0..2 {
        for b in 0..2 {
            m[2 * b + 1][2 * a] = m[2 * a][2 * b + 1];
        }
    }
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v /= norm;
        }
    }
    m
}

/// Symplectic eigenvalues of a two-mode covariance from its invariants:
/// `ν±² = (Δ ± √(Δ² − 4 det σ)) / 2`, `Δ = det A + det B + 2 det C`.
pub fn symplectic_closed_form(s: &[[f64; 4]; 4]) -> (f64, f64) {
    let det2 = |a: f64, b: f64, c: f64, d: f64| a * d - b * c;
    let da = det2(s[0][0], s[0][1], s[1][0], s[1][1]);
    let db = det2(s[2][2], s[2][3], s[3][2], s[3][3]);
    let dc = det2(s[0][2], s[0][3], s[1][2], s[1][3]);
    let m = nalgebra::Matrix4::from_fn(|i, j| s[i][j]);
    let det = m.determinant();
    let delta = da + db + 2.0 * dc;
    let disc = (delta * delta - 4.0 * det).max(0.0).sqrt();
    (((delta + disc) / 2.0).sqrt(), ((delta - disc) / 2.0).max(0.0).sqrt())
}

/// Random normalizable exponent with a moderately conditioned real part.
pub fn random_exponent<R: Rng>(rng: &mut R) -> GaussianExponent {
    let a1 = rng.gen_range(0.7..2.0);
    let a2 = rng.gen_range(0.7..2.0);
    let a12 = rng.gen_range(-0.6..0.6) * 2.0 * f64::sqrt(a1 * a2);
    GaussianExponent::new(
        Complex64::new(a1, rng.gen_range(-1.5..1.5)),
        Complex64::new(a2, rng.gen_range(-1.5..1.5)),
        Complex64::new(a12, rng.gen_range(-1.5..1.5)),
    )
    .expect("normalizable by construction")
}

pub fn to_array(m: &nalgebra::Matrix4<f64>) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[(i, j)];
        }
    }
    out
}

/// Largest entrywise relative deviation; entries smaller than
/// `1e-6 × max|oracle|` are compared against that floor instead.
pub fn max_relative_error(got: &[[f64; 4]; 4], oracle: &[[f64; 4]; 4]) -> f64 {
    let scale = oracle.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = 1e-6 * scale;
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let denom = oracle[i][j].abs().max(floor);
            worst = worst.max((got[i][j] - oracle[i][j]).abs() / denom);
        }
    }
    worst
}
