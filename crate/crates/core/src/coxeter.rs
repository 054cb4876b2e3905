//! Cartan and Coxeter matrices, Coxeter polynomials and spectral data.
//!
//! Matrices and characteristic polynomials are exact; floats appear only in
//! [`spectral_data`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::linalg::{
    characteristic_polynomial, cyclotomic_factorization, poly_derivative, poly_eval,
    poly_eval_f64, IntMatrix,
};
use crate::quiver::{Quiver, QuiverError};
use crate::util::{round_sig, round_vec};

/// Iteration cap for power iteration.
pub const MAX_POWER_ITERATIONS: usize = 100_000;
/// Convergence threshold on successive Rayleigh quotients (relative).
pub const RAYLEIGH_TOLERANCE: f64 = 1e-13;
/// Spectral radii above `1 + WILD_MARGIN` count as exceeding one.
pub const WILD_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// `c[i][j]` counts paths from `j` to `i`.
///
/// In an admissible labeling every arrow lowers the label, so filling rows
/// from the top label down sees each predecessor row already complete.
pub fn cartan_matrix(q: &Quiver) -> Result<IntMatrix, CoxeterError> {
    q.check_admissible()?;
    let n = q.n();
    let counts = q.arrow_counts();
    let mut c = IntMatrix::identity(n);
    for i in (0..n).rev() {
        for k in i + 1..n {
            let mult = counts[k][i];
            if mult == 0 {
                continue;
            }
            for j in 0..n {
                let add = &c[(k, j)] * BigInt::from(mult);
                c[(i, j)] += add;
            }
        }
    }
    Ok(c)
}

/// `b_ii = 1` and `-b_ij` is the number of arrows `j -> i`.
pub fn cartan_inverse(q: &Quiver) -> Result<IntMatrix, CoxeterError> {
    q.check_admissible()?;
    let mut b = IntMatrix::identity(q.n());
    for &(s, t) in q.arrows() {
        b[(t, s)] -= 1;
    }
    Ok(b)
}

/// `Φ = -Cᵀ C⁻¹` and `Φ⁻¹ = -C (C⁻¹)ᵀ`.
pub fn coxeter_matrices(c: &IntMatrix, c_inv: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let phi = -(&c.transpose() * c_inv);
    let phi_inv = -(c * &c_inv.transpose());
    (phi, phi_inv)
}

/// Exact root facts about a Coxeter polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RootCertificate {
    pub reciprocal: bool,
    /// Subset of `{1, -1}` that are roots; the only rational candidates.
    pub rational_roots: Vec<i32>,
    /// A spectral radius above one is not ±1, hence irrational.
    pub rho_irrational: bool,
}

pub fn is_reciprocal(coeffs: &[BigInt]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

/// Rational root test for a monic integer polynomial with constant ±1.
pub fn certify_roots(coeffs: &[BigInt], rho: f64) -> Result<RootCertificate, CoxeterError> {
    let lead_ok = coeffs.last().is_some_and(One::is_one);
    let const_ok = coeffs.first().is_some_and(|c| c.abs().is_one());
    if !lead_ok || !const_ok {
        return Err(CoxeterError::PreconditionViolated(
            "polynomial must be monic with constant coefficient ±1".into(),
        ));
    }
    let rational_roots = [1, -1]
        .into_iter()
        .filter(|&r| poly_eval(coeffs, &BigInt::from(r)).is_zero())
        .collect();
    Ok(RootCertificate {
        reciprocal: is_reciprocal(coeffs),
        rational_roots,
        rho_irrational: rho > 1.0 + WILD_MARGIN,
    })
}

/// Numeric spectral data of the Coxeter pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    /// Spectral radius of `Φ⁻¹` (equal to that of `Φ`).
    pub rho: f64,
    /// Positive unit eigenvector of `Φ⁻¹` for `rho`, when power iteration converged.
    pub v1: Option<Vec<f64>>,
    /// Positive unit eigenvector of `Φ` for `rho`, when power iteration converged.
    pub vn: Option<Vec<f64>>,
    pub converged: bool,
    pub iterations: usize,
    /// Limit of the Rayleigh quotients on `Φ⁻¹`, when they settled.
    pub dominant_eigenvalue: Option<f64>,
    /// Cyclotomic indices when the Coxeter polynomial is a product of
    /// cyclotomic polynomials; then every eigenvalue is a root of unity and
    /// `rho == 1` exactly.
    pub cyclotomic_factors: Option<Vec<usize>>,
    pub residual_v1: Option<f64>,
    pub residual_vn: Option<f64>,
}

impl SpectralData {
    pub fn exceeds_one(&self) -> bool {
        self.rho > 1.0 + WILD_MARGIN
    }
}

struct PowerResult {
    vector: Vec<f64>,
    rayleigh: f64,
    converged: bool,
    iterations: usize,
}

fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn normalize_positive(mut x: Vec<f64>) -> Vec<f64> {
    let nrm = norm(&x);
    let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    for v in &mut x {
        *v *= sign / nrm;
    }
    x
}

/// Power iteration from the all-ones vector. Converged once successive
/// Rayleigh quotients agree to [`RAYLEIGH_TOLERANCE`]; a fixed number of extra
/// sweeps then tightens the vector.
fn power_iteration(m: &[Vec<f64>]) -> PowerResult {
    let n = m.len();
    let mut x = normalize_positive(vec![1.0; n]);
    let mut prev = f64::NAN;
    let mut rayleigh = f64::NAN;
    for it in 1..=MAX_POWER_ITERATIONS {
        let y = mat_vec(m, &x);
        rayleigh = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        if norm(&y) == 0.0 {
            break;
        }
        x = normalize_positive(y);
        if (rayleigh - prev).abs() < RAYLEIGH_TOLERANCE * rayleigh.abs().max(1.0) {
            for _ in 0..100 {
                x = normalize_positive(mat_vec(m, &x));
            }
            let y = mat_vec(m, &x);
            rayleigh = x.iter().zip(&y).map(|(a, b)| a * b).sum();
            return PowerResult {
                vector: x,
                rayleigh,
                converged: true,
                iterations: it,
            };
        }
        prev = rayleigh;
    }
    PowerResult {
        vector: x,
        rayleigh,
        converged: false,
        iterations: MAX_POWER_ITERATIONS,
    }
}

/// Newton polish of a simple real root of an integer polynomial.
fn polish_root(coeffs: &[BigInt], guess: f64) -> f64 {
    let deriv = poly_derivative(coeffs);
    let mut x = guess;
    for _ in 0..50 {
        let d = poly_eval_f64(&deriv, x);
        if d == 0.0 {
            break;
        }
        let step = poly_eval_f64(coeffs, x) / d;
        x -= step;
        if step.abs() <= 1e-16 * x.abs() {
            break;
        }
    }
    if (x - guess).abs() < 1e-6 * guess.abs().max(1.0) {
        x
    } else {
        guess
    }
}

fn residual(m: &[Vec<f64>], v: &[f64], rho: f64) -> f64 {
    let mv = mat_vec(m, v);
    mv.iter()
        .zip(v)
        .map(|(a, b)| (a - rho * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Spectral radius with Perron vectors `v₁` (of `Φ⁻¹`) and `vₙ` (of `Φ`).
///
/// A Coxeter polynomial that factors into cyclotomic polynomials certifies
/// `rho = 1`; otherwise `rho` comes from power iteration on `Φ⁻¹`, polished
/// by Newton's method on the exact polynomial.
pub fn spectral_data(phi: &IntMatrix, phi_inv: &IntMatrix, charpoly: &[BigInt]) -> SpectralData {
    let fwd = phi_inv.to_f64_rows();
    let bwd = phi.to_f64_rows();
    let p1 = power_iteration(&fwd);
    let pn = power_iteration(&bwd);
    let cyclotomic_factors = cyclotomic_factorization(charpoly);
    let dominant = p1.converged.then_some(p1.rayleigh);

    if cyclotomic_factors.is_some() {
        return SpectralData {
            rho: 1.0,
            v1: None,
            vn: None,
            converged: p1.converged && pn.converged,
            iterations: p1.iterations.max(pn.iterations),
            dominant_eigenvalue: dominant,
            cyclotomic_factors,
            residual_v1: None,
            residual_vn: None,
        };
    }

    let converged = p1.converged && pn.converged;
    let rho = if p1.converged {
        polish_root(charpoly, p1.rayleigh)
    } else {
        p1.rayleigh.abs()
    };
    let positive = |v: &[f64]| v.iter().all(|&x| x > 0.0);
    let v1 = (p1.converged && positive(&p1.vector)).then(|| p1.vector.clone());
    let vn = (pn.converged && positive(&pn.vector)).then(|| pn.vector.clone());
    SpectralData {
        rho,
        residual_v1: v1.as_ref().map(|v| residual(&fwd, v, rho)),
        residual_vn: vn.as_ref().map(|v| residual(&bwd, v, rho)),
        v1,
        vn,
        converged,
        iterations: p1.iterations.max(pn.iterations),
        dominant_eigenvalue: dominant,
        cyclotomic_factors: None,
    }
}

/// Dimension vectors `dim τ^{-t} P(i)` for `t = 0..=t_max`, starting from
/// column `i` of the Cartan matrix and applying `Φ⁻¹`. Stops before the first
/// vector that is not a nonzero nonnegative vector (the orbit reached an
/// injective).
pub fn dim_vectors(q: &Quiver, vertex: usize, t_max: usize) -> Result<Vec<Vec<BigInt>>, CoxeterError> {
    let c = cartan_matrix(q)?;
    let c_inv = cartan_inverse(q)?;
    let (_, phi_inv) = coxeter_matrices(&c, &c_inv);
    Ok(dim_orbit(&c, &phi_inv, vertex, t_max))
}

fn dim_orbit(c: &IntMatrix, phi_inv: &IntMatrix, vertex: usize, t_max: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![c.column(vertex)];
    for _ in 0..t_max {
        let next = phi_inv.mul_vec(out.last().expect("nonempty"));
        if next.iter().any(Signed::is_negative) || next.iter().all(Zero::is_zero) {
            break;
        }
        out.push(next);
    }
    out
}

/// All exact and numeric Coxeter data for an admissibly labeled quiver.
#[derive(Debug, Clone)]
pub struct CoxeterData {
    pub c: IntMatrix,
    pub c_inv: IntMatrix,
    pub phi: IntMatrix,
    pub phi_inv: IntMatrix,
    /// `det(xI - Φ⁻¹)`, low-to-high.
    pub charpoly: Vec<BigInt>,
    pub spectral: SpectralData,
}

impl CoxeterData {
    pub fn compute(q: &Quiver) -> Result<Self, CoxeterError> {
        let c = cartan_matrix(q)?;
        let c_inv = cartan_inverse(q)?;
        let (phi, phi_inv) = coxeter_matrices(&c, &c_inv);
        let charpoly = characteristic_polynomial(&phi_inv);
        let spectral = spectral_data(&phi, &phi_inv, &charpoly);
        Ok(CoxeterData {
            c,
            c_inv,
            phi,
            phi_inv,
            charpoly,
            spectral,
        })
    }

    pub fn rho(&self) -> f64 {
        self.spectral.rho
    }

    pub fn root_certificate(&self) -> Result<RootCertificate, CoxeterError> {
        certify_roots(&self.charpoly, self.spectral.rho)
    }

    pub fn dim_vectors(&self, vertex: usize, t_max: usize) -> Vec<Vec<BigInt>> {
        dim_orbit(&self.c, &self.phi_inv, vertex, t_max)
    }

    /// `‖Φ⁻ᵗ‖_F / ρᵗ` and `‖Φᵗ‖_F / ρᵗ` for `t = 0..=t_max`.
    pub fn normalized_power_norms(&self, t_max: usize) -> (Vec<f64>, Vec<f64>) {
        let rho = self.spectral.rho;
        let n = self.c.rows();
        let mut inv_pow = IntMatrix::identity(n);
        let mut fwd_pow = IntMatrix::identity(n);
        let mut inv_norms = Vec::with_capacity(t_max + 1);
        let mut fwd_norms = Vec::with_capacity(t_max + 1);
        for t in 0..=t_max {
            let scale = rho.powi(t as i32);
            inv_norms.push(inv_pow.frobenius_norm() / scale);
            fwd_norms.push(fwd_pow.frobenius_norm() / scale);
            inv_pow = &self.phi_inv * &inv_pow;
            fwd_pow = &self.phi * &fwd_pow;
        }
        (inv_norms, fwd_norms)
    }

    pub fn to_json(&self) -> Value {
        let s = &self.spectral;
        let cert = self.root_certificate().ok();
        json!({
            "cartan": self.c.to_string_rows(),
            "cartan_inverse": self.c_inv.to_string_rows(),
            "coxeter": self.phi.to_string_rows(),
            "coxeter_inverse": self.phi_inv.to_string_rows(),
            "charpoly": self.charpoly.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "reciprocal": is_reciprocal(&self.charpoly),
            "rational_roots": cert.as_ref().map(|c| c.rational_roots.clone()),
            "rho_irrational": cert.as_ref().map(|c| c.rho_irrational),
            "rho": round_sig(s.rho),
            "v1": s.v1.as_deref().map(round_vec),
            "vn": s.vn.as_deref().map(round_vec),
            "power_iteration_converged": s.converged,
            "cyclotomic_factors": s.cyclotomic_factors,
            "residual_v1": s.residual_v1.map(round_sig),
            "residual_vn": s.residual_vn.map(round_sig),
        })
    }
}
