//! Inertia of pencil members, at rational parameters and at real roots of
//! the characteristic polynomial.

use std::fmt;

use crate::arith::{sign_variations, sturm_habicht_sequence, variations_at, IntPolynomial, Rational};
use crate::error::{QsicError, Result};
use crate::pencil::Pencil;
use crate::realroots::IsolatedRoot;

/// Counts of positive, negative and zero eigenvalues of a 4x4 symmetric
/// matrix. Always `p + n + z == 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inertia {
    pub p: u8,
    pub n: u8,
    pub z: u8,
}

impl Inertia {
    pub fn new(p: u8, n: u8, z: u8) -> Self {
        debug_assert_eq!(p + n + z, 4);
        Inertia { p, n, z }
    }

    /// Inertia from the signs of `c3, c2, c1, c0` in
    /// `u^4 + c3 u^3 + c2 u^2 + c1 u + c0`, the characteristic polynomial of
    /// a real symmetric matrix. All its roots are real, so Descartes' rule
    /// counts them exactly.
    pub fn from_eigencurve_signs(s: [i8; 4]) -> Self {
        let pos = [1, s[0], s[1], s[2], s[3]];
        let neg = [1, -s[0], s[1], -s[2], s[3]];
        let p = sign_variations(&pos) as u8;
        let n = sign_variations(&neg) as u8;
        Inertia::new(p, n, 4 - p - n)
    }

    /// Inertia of the negated matrix.
    pub fn negated(self) -> Self {
        Inertia::new(self.n, self.p, self.z)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.n)
    }
}

/// Inertia of `lambda A - B`.
pub fn signature_at(pencil: &Pencil, lambda: &Rational) -> Inertia {
    let c = pencil.eigencurve_coefficients();
    Inertia::from_eigencurve_signs(std::array::from_fn(|k| c[k].sign_at(lambda)))
}

/// Sign of `g` at the root isolated by `root`.
pub fn sign_at_root(g: &IntPolynomial, root: &IsolatedRoot) -> Result<i8> {
    if let Some(r) = root.exact_value() {
        return Ok(g.sign_at(r));
    }
    let seq = sturm_habicht_sequence(root.square_free(), g)?;
    let d = variations_at(&seq, root.lo()) as i64 - variations_at(&seq, root.hi()) as i64;
    Ok(d.signum() as i8)
}

/// Inertia of `alpha A - B` for a real root `alpha` of the characteristic
/// polynomial.
pub fn signature_at_root(pencil: &Pencil, root: &IsolatedRoot) -> Result<Inertia> {
    if sign_at_root(pencil.characteristic_polynomial(), root)? != 0 {
        return Err(QsicError::NotARoot);
    }
    let c = pencil.eigencurve_coefficients();
    let mut s = [0i8; 4];
    for (k, ck) in c.iter().enumerate() {
        s[k] = sign_at_root(ck, root)?;
    }
    Ok(Inertia::from_eigencurve_signs(s))
}
