//! Observables of the coupled model: circuit depth, synchronization,
//! mutual information and the classical Pearson coefficient.

use num_complex::Complex64;

use crate::gaussian::{mode_entropy, CovarianceMatrix, GaussianExponent, Modes};
use crate::{Error, Result};

/// Circuit depth from a factorized reference of frequency `omega_r`:
/// `½ ln(|A₁A₂ − A₁₂²| / ω_R²) + |A₁₂ / A₁|`, using complex moduli.
pub fn circuit_depth(exp: &GaussianExponent, omega_r: f64) -> Result<f64> {
    check_reference(omega_r)?;
    let det = (exp.a1 * exp.a2 - exp.a12 * exp.a12).norm();
    if !(det > 0.0) || exp.a1.norm() == 0.0 {
        return Err(Error::DegenerateState);
    }
    Ok(0.5 * (det / (omega_r * omega_r)).ln() + (exp.a12 / exp.a1).norm())
}

/// Weak-coupling estimate `½ ln(|A₁A₂| / ω_R²)`.
pub fn weak_coupling_depth(exp: &GaussianExponent, omega_r: f64) -> Result<f64> {
    check_reference(omega_r)?;
    let prod = (exp.a1 * exp.a2).norm();
    if !(prod > 0.0) {
        return Err(Error::DegenerateState);
    }
    Ok(0.5 * (prod / (omega_r * omega_r)).ln())
}

/// Field-dominated estimate `ln(ω_c / ω_R)`; undefined without a field.
pub fn field_dominated_depth(omega_c: f64, omega_r: f64) -> Option<f64> {
    (omega_c > 0.0 && omega_r > 0.0).then(|| (omega_c / omega_r).ln())
}

/// Strong-coupling estimate with the interference term replaced by
/// `√(g/2)`. A rough diagnostic, not an identity.
pub fn strong_coupling_depth(exp: &GaussianExponent, g: f64, omega_r: f64) -> Result<f64> {
    check_reference(omega_r)?;
    let a12 = (0.5 * g.abs()).sqrt();
    let det = (exp.a1 * exp.a2 - Complex64::from(0.5 * g.abs())).norm();
    if !(det > 0.0) {
        return Err(Error::DegenerateState);
    }
    Ok(0.5 * (det / (omega_r * omega_r)).ln() + a12 / exp.a1.norm())
}

/// Depth with its regime diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepthReport {
    pub depth: f64,
    pub weak_coupling: f64,
    pub field_dominated: Option<f64>,
}

pub fn depth_report(exp: &GaussianExponent, omega_r: f64, omega_c: f64) -> Result<DepthReport> {
    Ok(DepthReport {
        depth: circuit_depth(exp, omega_r)?,
        weak_coupling: weak_coupling_depth(exp, omega_r)?,
        field_dominated: field_dominated_depth(omega_c, omega_r),
    })
}

fn check_reference(omega_r: f64) -> Result<()> {
    if !(omega_r > 0.0 && omega_r.is_finite()) {
        return Err(Error::param("omega_r", format!("must be positive, got {omega_r}")));
    }
    Ok(())
}

/// `1 / (⟨(p₁−p₂)²⟩ + ⟨(x₁−x₂)²⟩)` for a zero-mean state.
pub fn synchronization(sigma: &CovarianceMatrix) -> Result<f64> {
    let dx = sigma.x(0, 0) + sigma.x(1, 1) - 2.0 * sigma.x(0, 1);
    let dp = sigma.p(0, 0) + sigma.p(1, 1) - 2.0 * sigma.p(0, 1);
    let denom = dx + dp;
    if !(denom > 0.0) {
        return Err(Error::Unphysical { nu: denom });
    }
    Ok(1.0 / denom)
}

/// `S(ρ₁) + S(ρ₂) − S(ρ₁₂)` in nats.
pub fn mutual_information(sigma: &CovarianceMatrix) -> Result<f64> {
    let s1 = mode_entropy(sigma, Modes::First)?;
    let s2 = mode_entropy(sigma, Modes::Second)?;
    let s12 = mode_entropy(sigma, Modes::Both)?;
    let mi = s1 + s2 - s12;
    // rounding on product states
    if mi < 0.0 && mi > -1e-10 {
        return Ok(0.0);
    }
    Ok(mi)
}

/// Pearson correlation of two equally long samples.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Sequence(format!("length mismatch: {} vs {}", a.len(), b.len())));
    }
    if a.len() < 2 {
        return Err(Error::Sequence("need at least two samples".into()));
    }
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut cov, mut va, mut vb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        cov += dx * dy;
        va += dx * dx;
        vb += dy * dy;
    }
    if va == 0.0 || vb == 0.0 {
        return Err(Error::Sequence("zero variance".into()));
    }
    Ok((cov / (va.sqrt() * vb.sqrt())).clamp(-1.0, 1.0))
}

/// Elementary Gaussian gates. Modes are numbered 1 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// `exp[iε(x_j p_j + p_j x_j)/2]`: `ψ(…, x_j, …) → ψ(…, e^ε x_j, …)`.
    Scale(usize),
    /// `exp(iε x_c p_t)`: `ψ(…, x_t, …) → ψ(…, x_t + ε x_c, …)`.
    Entangle { control: usize, target: usize },
}

/// Exponent after applying `gate` with parameter `epsilon`.
/// Normalization is not tracked.
pub fn gate_apply(exp: &GaussianExponent, gate: Gate, epsilon: f64) -> Result<GaussianExponent> {
    let GaussianExponent { a1, a2, a12 } = *exp;
    let out = match gate {
        Gate::Scale(j) => {
            let s = epsilon.exp();
            match j {
                1 => GaussianExponent { a1: a1 * s * s, a2, a12: a12 * s },
                2 => GaussianExponent { a1, a2: a2 * s * s, a12: a12 * s },
                _ => return Err(Error::param("mode", format!("expected 1 or 2, got {j}"))),
            }
        }
        Gate::Entangle { control, target } => match (control, target) {
            // x₂ → x₂ + εx₁
            (1, 2) => GaussianExponent {
                a1: a1 + a2 * epsilon * epsilon - a12 * epsilon,
                a2,
                a12: a12 - a2 * (2.0 * epsilon),
            },
            // x₁ → x₁ + εx₂
            (2, 1) => GaussianExponent {
                a1,
                a2: a2 + a1 * epsilon * epsilon - a12 * epsilon,
                a12: a12 - a1 * (2.0 * epsilon),
            },
            _ => {
                return Err(Error::param(
                    "gate",
                    format!("entangler needs distinct modes in {{1, 2}}, got ({control}, {target})"),
                ))
            }
        },
    };
    Ok(out)
}
