//! Quadric forms and the normalized pencil `λA - B`.
//!
//! Coefficient order for a quadric in homogeneous coordinates `(x, y, z, w)`
//! is fixed as `[x², y², z², w², xy, xz, xw, yz, yw, zw]`. Squared terms go on
//! the diagonal, mixed terms are halved into the two symmetric off-diagonal
//! slots.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{bareiss_determinant, denominator_lcm, Integer, IntPolynomial, Rational};
use crate::error::{QsicError, Result};

pub type SymMatrix = [[Integer; 4]; 4];
pub type RationalMatrix = [[Rational; 4]; 4];

/// Matrix positions addressed by the ten coefficients, in input order.
pub const COEFF_POSITIONS: [(usize, usize); 10] = [
    (0, 0),
    (1, 1),
    (2, 2),
    (3, 3),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
];

/// Monomial labels matching [`COEFF_POSITIONS`].
pub const COEFF_LABELS: [&str; 10] = ["x^2", "y^2", "z^2", "w^2", "xy", "xz", "xw", "yz", "yw", "zw"];

/// Probe parameters tried, in order, when the first input matrix is singular.
pub const PROBE_LAMBDAS: [i64; 10] = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5];

/// A quadric `XᵀMX = 0` with rational symmetric `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricForm {
    m: RationalMatrix,
    source_coeffs: [Rational; 10],
}

impl QuadricForm {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.m
    }

    pub fn coeffs(&self) -> &[Rational; 10] {
        &self.source_coeffs
    }

    /// Clears denominators with the positive lcm of all entry denominators.
    pub fn integer_matrix(&self) -> SymMatrix {
        let lcm = Rational::from_integer(denominator_lcm(self.m.iter().flatten()));
        let mut out: SymMatrix = Default::default();
        for (i, row) in self.m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[i][j] = (v * &lcm).to_integer();
            }
        }
        out
    }
}

pub fn quadric_from_coeffs(coeffs: [Rational; 10]) -> Result<QuadricForm> {
    if coeffs.iter().all(Zero::is_zero) {
        return Err(QsicError::ZeroForm);
    }
    let half = Rational::new(1.into(), 2.into());
    let mut m: RationalMatrix = Default::default();
    for (c, &(i, j)) in coeffs.iter().zip(COEFF_POSITIONS.iter()) {
        if i == j {
            m[i][i] = c.clone();
        } else {
            let h = c * &half;
            m[i][j] = h.clone();
            m[j][i] = h;
        }
    }
    Ok(QuadricForm {
        m,
        source_coeffs: coeffs,
    })
}

/// Convenience constructor from integer coefficients.
pub fn quadric_from_i64s(coeffs: [i64; 10]) -> Result<QuadricForm> {
    quadric_from_coeffs(coeffs.map(|c| Rational::from_integer(c.into())))
}

/// Normalized quadric pair with nonsingular first member.
#[derive(Clone, PartialEq, Eq)]
pub struct Pencil {
    a: SymMatrix,
    b: SymMatrix,
    f: IntPolynomial,
    /// `[c3, c2, c1, c0]` with `det(λA - B - uI) = u⁴ + c3 u³ + c2 u² + c1 u + c0`.
    c: [IntPolynomial; 4],
    /// Rows give the new `(A, B)` as integer combinations of the
    /// integer-normalized inputs `(A₀, B₀)`.
    basis_change: [[i64; 2]; 2],
}

impl Pencil {
    pub fn a(&self) -> &SymMatrix {
        &self.a
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    pub fn basis_change(&self) -> [[i64; 2]; 2] {
        self.basis_change
    }

    /// `det(λA - B)`.
    pub fn characteristic_polynomial(&self) -> &IntPolynomial {
        &self.f
    }

    /// `[c3, c2, c1, c0]`.
    pub fn eigencurve_coefficients(&self) -> &[IntPolynomial; 4] {
        &self.c
    }

    /// Builds a pencil directly from integer symmetric matrices, applying the
    /// same checks and nonsingular-first-member normalization as
    /// [`make_pencil`].
    pub fn from_integer_matrices(a0: &SymMatrix, b0: &SymMatrix) -> Result<Self> {
        assert!(is_symmetric(a0) && is_symmetric(b0), "matrices must be symmetric");
        if is_zero_matrix(a0) || is_zero_matrix(b0) {
            return Err(QsicError::ZeroForm);
        }
        if proportional(a0, b0) {
            return Err(QsicError::ProportionalForms);
        }
        let f0 = pencil_determinant_cofactor(a0, b0);
        if f0.is_zero() {
            return Err(QsicError::DegeneratePencil);
        }
        let (a, b, basis_change) = if f0.degree() == Some(4) {
            (a0.clone(), b0.clone(), [[1, 0], [0, 1]])
        } else {
            let l0 = PROBE_LAMBDAS
                .iter()
                .copied()
                .find(|&l| !f0.eval_integer(&l.into()).is_zero())
                .expect("a nonzero polynomial of degree < 4 has at most 3 roots");
            let l0i = Integer::from(l0);
            let a = combine(a0, &l0i, b0, &-Integer::one());
            (a, a0.clone(), [[l0, -1], [1, 0]])
        };
        let f = pencil_determinant_interpolated(&a, &b);
        let c = eigencurve_by_minors(&a, &b);
        debug_assert_eq!(f, c[3]);
        debug_assert_eq!(f.degree(), Some(4));
        Ok(Self {
            a,
            b,
            f,
            c,
            basis_change,
        })
    }

    /// Exact matrix `λ0·A - B`.
    pub fn matrix_at(&self, lambda: &Rational) -> RationalMatrix {
        let mut out: RationalMatrix = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = lambda * Rational::from_integer(self.a[i][j].clone())
                    - Rational::from_integer(self.b[i][j].clone());
            }
        }
        out
    }

    /// Floating-point `λ0·A - B`.
    pub fn matrix_at_f64(&self, lambda: f64) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let a = self.a[i][j].to_f64().unwrap_or(f64::NAN);
                let b = self.b[i][j].to_f64().unwrap_or(f64::NAN);
                out[i][j] = lambda * a - b;
            }
        }
        out
    }
}

impl fmt::Debug for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pencil")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("f", &self.f)
            .field("basis_change", &self.basis_change)
            .finish()
    }
}

/// Integer-normalizes both forms and builds the pencil.
pub fn make_pencil(a0: &QuadricForm, b0: &QuadricForm) -> Result<Pencil> {
    Pencil::from_integer_matrices(&a0.integer_matrix(), &b0.integer_matrix())
}

fn is_symmetric(m: &SymMatrix) -> bool {
    (0..4).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

fn is_zero_matrix(m: &SymMatrix) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

fn upper(m: &SymMatrix) -> [Integer; 10] {
    COEFF_POSITIONS.map(|(i, j)| m[i][j].clone())
}

fn proportional(a: &SymMatrix, b: &SymMatrix) -> bool {
    let (u, v) = (upper(a), upper(b));
    (0..10).all(|i| (0..i).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

/// `s·A + t·B` entrywise.
pub fn combine(a: &SymMatrix, s: &Integer, b: &SymMatrix, t: &Integer) -> SymMatrix {
    let mut out: SymMatrix = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = s * &a[i][j] + t * &b[i][j];
        }
    }
    out
}

fn linear_entry(a: &Integer, b: &Integer) -> IntPolynomial {
    IntPolynomial::linear(a.clone(), -b)
}

/// Determinant of the polynomial submatrix on `rows × cols` by Laplace
/// expansion along the first row.
fn poly_minor(m: &[[IntPolynomial; 4]; 4], rows: &[usize], cols: &[usize]) -> IntPolynomial {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let r0 = rows[0];
    let rest = &rows[1..];
    let mut acc = IntPolynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[r0][c].is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[r0][c] * &poly_minor(m, rest, &sub_cols);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn pencil_poly_matrix(a: &SymMatrix, b: &SymMatrix) -> [[IntPolynomial; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| linear_entry(&a[i][j], &b[i][j])))
}

/// `det(λA - B)` by cofactor expansion over `Z[λ]`.
pub fn pencil_determinant_cofactor(a: &SymMatrix, b: &SymMatrix) -> IntPolynomial {
    let m = pencil_poly_matrix(a, b);
    poly_minor(&m, &[0, 1, 2, 3], &[0, 1, 2, 3])
}

/// `det(λA - B)` from its values at `λ = 0..=4` (Bareiss determinants)
/// by Newton interpolation.
pub fn pencil_determinant_interpolated(a: &SymMatrix, b: &SymMatrix) -> IntPolynomial {
    let values: Vec<Rational> = (0..=4i64)
        .map(|k| {
            let m = combine(a, &Integer::from(k), b, &-Integer::one());
            Rational::from_integer(bareiss_determinant(m.iter().map(|r| r.to_vec()).collect()))
        })
        .collect();
    // divided differences on nodes 0..=4
    let mut dd = values;
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Rational::from_integer(Integer::from(level));
        }
    }
    // expand Newton form: sum dd[k] * prod_{i<k} (x - i)
    let mut coeffs = vec![Rational::zero(); 5];
    let mut basis = vec![Rational::one()];
    for (k, d) in dd.iter().enumerate() {
        for (i, bcoef) in basis.iter().enumerate() {
            coeffs[i] += d * bcoef;
        }
        let node = Rational::from_integer(Integer::from(k as i64));
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, bcoef) in basis.iter().enumerate() {
            next[i + 1] += bcoef;
            next[i] -= bcoef * &node;
        }
        basis = next;
    }
    IntPolynomial::new(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "determinant polynomial has integer coefficients");
                c.to_integer()
            })
            .collect(),
    )
}

/// `[c3, c2, c1, c0]` from sums of principal minors of `λA - B`:
/// `c_{4-k} = (-1)^k · (sum of k×k principal minors)`.
pub fn eigencurve_by_minors(a: &SymMatrix, b: &SymMatrix) -> [IntPolynomial; 4] {
    let m = pencil_poly_matrix(a, b);
    let mut sums: [IntPolynomial; 4] = Default::default();
    for mask in 1u8..16 {
        let idx: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
        let k = idx.len();
        sums[k - 1] = &sums[k - 1] + &poly_minor(&m, &idx, &idx);
    }
    let [e1, e2, e3, e4] = sums;
    [-e1, e2, -e3, e4]
}

/// Exact rational determinant of a 4×4 rational matrix (Gaussian elimination).
pub fn rational_determinant(m: &RationalMatrix) -> Rational {
    let mut a = m.clone();
    let mut det = Rational::one();
    for k in 0..4 {
        let Some(p) = (k..4).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..4 {
            let factor = &a[i][k] / &piv;
            if factor.is_zero() {
                continue;
            }
            for j in k..4 {
                let t = &factor * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}
