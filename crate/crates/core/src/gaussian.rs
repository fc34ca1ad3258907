//! Zero-mean two-mode Gaussian states.
//!
//! A pure state is described by its wavefunction exponent
//! `ψ(x1, x2) ∝ exp[-½(A1 x1² + A2 x2² - A12 x1 x2)]`; mixed or reduced
//! states by the 4×4 covariance matrix over `(x1, p1, x2, p2)` with the
//! vacuum variance equal to ½.

use nalgebra::{DMatrix, Matrix2, Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerance below ½ accepted for symplectic eigenvalues.
pub const UNCERTAINTY_TOL: f64 = 1e-9;

const SYMMETRY_TOL: f64 = 1e-12;

/// Complex coefficients of a two-mode Gaussian wavefunction exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianExponent {
    pub a1: Complex64,
    pub a2: Complex64,
    pub a12: Complex64,
}

impl GaussianExponent {
    pub fn new(a1: Complex64, a2: Complex64, a12: Complex64) -> Result<Self> {
        let exp = Self { a1, a2, a12 };
        exp.validate()?;
        Ok(exp)
    }

    pub fn real(a1: f64, a2: f64, a12: f64) -> Result<Self> {
        Self::new(a1.into(), a2.into(), a12.into())
    }

    /// Uncoupled vacuum of two oscillators with frequency `omega`.
    pub fn vacuum(omega: f64) -> Self {
        Self { a1: omega.into(), a2: omega.into(), a12: 0.0.into() }
    }

    pub fn validate(&self) -> Result<()> {
        let (r1, r2, r12) = (self.a1.re, self.a2.re, self.a12.re);
        let finite = [self.a1, self.a2, self.a12].iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::NotNormalizable("non-finite coefficient".into()));
        }
        if r1 <= 0.0 || r2 <= 0.0 {
            return Err(Error::NotNormalizable(format!("Re(a1) = {r1}, Re(a2) = {r2}")));
        }
        let det4 = 4.0 * r1 * r2 - r12 * r12;
        if det4 <= 0.0 {
            return Err(Error::NotNormalizable(format!(
                "4 Re(a1) Re(a2) - Re(a12)^2 = {det4} is not positive"
            )));
        }
        Ok(())
    }

    pub fn is_real(&self) -> bool {
        self.a1.im == 0.0 && self.a2.im == 0.0 && self.a12.im == 0.0
    }

    /// Symmetric matrix `K` with exponent `-½ xᵀ K x`.
    pub fn quadratic_form(&self) -> (Matrix2<f64>, Matrix2<f64>) {
        let off = -0.5 * self.a12;
        let re = Matrix2::new(self.a1.re, off.re, off.re, self.a2.re);
        let im = Matrix2::new(self.a1.im, off.im, off.im, self.a2.im);
        (re, im)
    }

    /// Unnormalized wavefunction value.
    pub fn amplitude(&self, x1: f64, x2: f64) -> Complex64 {
        let q = self.a1 * x1 * x1 + self.a2 * x2 * x2 - self.a12 * x1 * x2;
        (-0.5 * q).exp()
    }
}

/// Real symmetric second-moment matrix over `(x1, p1, x2, p2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix(Matrix4<f64>);

impl CovarianceMatrix {
    pub fn new(sigma: Matrix4<f64>) -> Result<Self> {
        let scale = sigma.amax().max(1.0);
        let asym = (sigma - sigma.transpose()).amax();
        if !asym.is_finite() || asym > SYMMETRY_TOL * scale {
            return Err(Error::NotSymmetric(asym));
        }
        Ok(Self(sigma))
    }

    pub fn vacuum() -> Self {
        Self(Matrix4::identity() * 0.5)
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn x(&self, a: usize, b: usize) -> f64 {
        self.0[(2 * a, 2 * b)]
    }

    pub fn p(&self, a: usize, b: usize) -> f64 {
        self.0[(2 * a + 1, 2 * b + 1)]
    }

    /// Symmetrized `⟨x_a p_b + p_b x_a⟩ / 2`.
    pub fn xp(&self, a: usize, b: usize) -> f64 {
        self.0[(2 * a, 2 * b + 1)]
    }

    /// 2×2 block of a single mode (0 or 1).
    pub fn mode_block(&self, mode: usize) -> Matrix2<f64> {
        self.0.fixed_view::<2, 2>(2 * mode, 2 * mode).into_owned()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self(self.0 * factor)
    }

    /// Congruence `S σ Sᵀ`.
    pub fn transformed(&self, s: &Matrix4<f64>) -> Result<Self> {
        let m = s * self.0 * s.transpose();
        Self::new(0.5 * (m + m.transpose()))
    }

    pub fn is_physical(&self) -> bool {
        symplectic_eigenvalues(self).map(|s| s.min() >= 0.5 - UNCERTAINTY_TOL).unwrap_or(false)
    }
}

/// Symplectic eigenvalues of a two-mode covariance, largest first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticSpectrum {
    pub nus: [f64; 2],
}

impl SymplecticSpectrum {
    pub fn min(&self) -> f64 {
        self.nus[1]
    }
}

/// Second moments of the normalized state `ψ ∝ exp(-½ xᵀ(R + iJ)x)`:
/// `Σx = ½R⁻¹`, `Σp = ½R + ½JR⁻¹J`, `Σxp = -½R⁻¹J`.
pub fn exponent_to_covariance(exp: &GaussianExponent) -> Result<CovarianceMatrix> {
    exp.validate()?;
    let (re, im) = exp.quadratic_form();
    let re_inv = re
        .try_inverse()
        .ok_or_else(|| Error::Singular("real part of the exponent".into()))?;
    let sx = 0.5 * re_inv;
    let sp = 0.5 * re + 0.5 * im * re_inv * im;
    let sxp = -0.5 * re_inv * im;

    let mut sigma = Matrix4::zeros();
    for a in 0..2 {
        for b in 0..2 {
            sigma[(2 * a, 2 * b)] = sx[(a, b)];
            sigma[(2 * a + 1, 2 * b + 1)] = sp[(a, b)];
            sigma[(2 * a, 2 * b + 1)] = sxp[(a, b)];
            sigma[(2 * b + 1, 2 * a)] = sxp[(a, b)];
        }
    }
    // Σp and Σx are symmetric analytically; drop rounding residue.
    CovarianceMatrix::new(0.5 * (sigma + sigma.transpose()))
}

/// The 4×4 symplectic form for ordering `(x1, p1, x2, p2)`.
pub fn symplectic_form() -> Matrix4<f64> {
    let mut omega = Matrix4::zeros();
    for m in 0..2 {
        omega[(2 * m, 2 * m + 1)] = 1.0;
        omega[(2 * m + 1, 2 * m)] = -1.0;
    }
    omega
}

/// Moduli of the eigenvalues of `iΩσ`.
///
/// Computed as the square roots of the eigenvalues of `-(σ^½ Ω σ^½)²`, a
/// symmetric matrix whose spectrum is `{ν₁², ν₁², ν₂², ν₂²}`.
pub fn symplectic_eigenvalues(sigma: &CovarianceMatrix) -> Result<SymplecticSpectrum> {
    let eig = SymmetricEigen::new(*sigma.matrix());
    if eig.eigenvalues.iter().any(|&l| l <= 0.0) {
        return Err(Error::Singular(format!(
            "covariance eigenvalues {:?}",
            eig.eigenvalues.as_slice()
        )));
    }
    let sqrt_diag = Matrix4::from_diagonal(&eig.eigenvalues.map(f64::sqrt));
    let root = eig.eigenvectors * sqrt_diag * eig.eigenvectors.transpose();
    let a = root * symplectic_form() * root;
    let b = -(a * a);
    let b = 0.5 * (b + b.transpose());

    let mut sq: Vec<f64> = SymmetricEigen::new(b).eigenvalues.iter().copied().collect();
    sq.sort_by(|x, y| y.total_cmp(x));
    let nu1 = (0.5 * (sq[0] + sq[1])).max(0.0).sqrt();
    let nu2 = (0.5 * (sq[2] + sq[3])).max(0.0).sqrt();
    Ok(SymplecticSpectrum { nus: [nu1, nu2] })
}

/// Entropy contribution of one symplectic eigenvalue, in nats:
/// `(ν+½)ln(ν+½) - (ν-½)ln(ν-½)`.
pub fn entropy_term(nu: f64) -> Result<f64> {
    let eps = nu - 0.5;
    if eps < -UNCERTAINTY_TOL || !nu.is_finite() {
        return Err(Error::Unphysical { nu });
    }
    if eps <= 0.0 {
        return Ok(0.0);
    }
    if eps < 1e-6 {
        // (1+ε)ln(1+ε) - ε ln ε, expanded to second order
        return Ok(eps - eps * eps.ln() + 0.5 * eps * eps);
    }
    Ok((nu + 0.5) * (nu + 0.5).ln() - eps * eps.ln())
}

/// Subset of modes of a two-mode state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modes {
    First,
    Second,
    Both,
}

/// Von Neumann entropy (nats) of the reduced state on `modes`.
pub fn mode_entropy(sigma: &CovarianceMatrix, modes: Modes) -> Result<f64> {
    match modes {
        Modes::First | Modes::Second => {
            let idx = if modes == Modes::First { 0 } else { 1 };
            let det = sigma.mode_block(idx).determinant();
            if det <= 0.0 {
                return Err(Error::Unphysical { nu: det.max(0.0).sqrt() });
            }
            entropy_term(det.sqrt())
        }
        Modes::Both => {
            let spec = symplectic_eigenvalues(sigma)?;
            Ok(entropy_term(spec.nus[0])? + entropy_term(spec.nus[1])?)
        }
    }
}

/// `¼ Tr(log² M)` with `M = G_T G_R⁻¹`, for matrices of any even dimension.
///
/// `M` is similar to `L⁻¹ G_T L⁻ᵀ` where `G_R = L Lᵀ`, so its logarithm is
/// taken through a symmetric eigendecomposition.
pub fn geodesic_complexity_matrix(target: &DMatrix<f64>, reference: &DMatrix<f64>) -> Result<f64> {
    if target.shape() != reference.shape() || !target.is_square() {
        return Err(Error::param("target", "shape mismatch with reference"));
    }
    let chol = reference
        .clone()
        .cholesky()
        .ok_or_else(|| Error::Singular("reference covariance".into()))?;
    let l = chol.l();
    let l_inv = l
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Singular("reference covariance".into()))?;
    let sym = &l_inv * target * l_inv.transpose();
    let sym = 0.5 * (&sym + sym.transpose());
    let eig = SymmetricEigen::new(sym);
    let mut total = 0.0;
    for &lambda in eig.eigenvalues.iter() {
        if lambda <= 0.0 {
            return Err(Error::Singular(format!("target covariance (eigenvalue {lambda})")));
        }
        total += lambda.ln().powi(2);
    }
    Ok(0.25 * total)
}

pub fn geodesic_complexity(target: &CovarianceMatrix, reference: &CovarianceMatrix) -> Result<f64> {
    let t = DMatrix::from_iterator(4, 4, target.matrix().iter().copied());
    let r = DMatrix::from_iterator(4, 4, reference.matrix().iter().copied());
    geodesic_complexity_matrix(&t, &r)
}
