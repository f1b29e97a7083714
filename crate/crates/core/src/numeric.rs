//! Floating-point eigenvalues of pencil members, used to cross-check the
//! exact signature computations and to plot the eigenvalue curve.

use crate::pencil::Pencil;
use crate::signature::Inertia;

/// Eigenvalues in ascending order, with the off-diagonal Frobenius norm left
/// when the iteration stopped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericSpectrum {
    pub eigenvalues: [f64; 4],
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumericSignature {
    Conclusive(Inertia),
    /// Some eigenvalue is too close to zero to call its sign.
    Inconclusive,
}

fn off_norm(m: &[[f64; 4]; 4]) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s += m[i][j] * m[i][j];
            }
        }
    }
    s.sqrt()
}

pub fn frobenius_norm(m: &[[f64; 4]; 4]) -> f64 {
    m.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
}

/// Cyclic Jacobi rotations on a symmetric 4x4 matrix.
pub fn jacobi_eigenvalues(mut m: [[f64; 4]; 4]) -> NumericSpectrum {
    let target = 1e-12 * frobenius_norm(&m);
    for _sweep in 0..64 {
        if off_norm(&m) <= target {
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..4 {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..4 {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eigenvalues = [m[0][0], m[1][1], m[2][2], m[3][3]];
    eigenvalues.sort_by(f64::total_cmp);
    NumericSpectrum {
        eigenvalues,
        residual: off_norm(&m),
    }
}

/// Eigenvalues of `lambda A - B`.
pub fn numeric_eigenvalues(pencil: &Pencil, lambda: f64) -> NumericSpectrum {
    jacobi_eigenvalues(pencil.matrix_at_f64(lambda))
}

/// Classifies eigenvalues against the band `tol * ||lambda A - B||_F`.
/// Eigenvalues that are exactly zero count as zero; other eigenvalues
/// inside the band make the result inconclusive.
pub fn signature_from_spectrum(spec: &NumericSpectrum, norm: f64, tol: f64) -> NumericSignature {
    let band = tol * norm;
    let (mut p, mut n, mut z) = (0, 0, 0);
    for &e in &spec.eigenvalues {
        if e == 0.0 {
            z += 1;
        } else if e > band {
            p += 1;
        } else if e < -band {
            n += 1;
        } else {
            return NumericSignature::Inconclusive;
        }
    }
    NumericSignature::Conclusive(Inertia::new(p, n, z))
}

pub fn numeric_signature(pencil: &Pencil, lambda: f64, tol: f64) -> NumericSignature {
    let m = pencil.matrix_at_f64(lambda);
    signature_from_spectrum(&jacobi_eigenvalues(m), frobenius_norm(&m), tol)
}
