use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::QsicError;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The zero polynomial has no
/// coefficients; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `a*x + b`
    pub fn linear(a: Integer, b: Integer) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content divided out, leading coefficient made positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divides by the (positive) content without touching the sign.
    pub fn positive_primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from(c.clone()))
    }

    /// Sign of `self(x)` computed fraction-free: with `x = a/b`, `b > 0`,
    /// `b^d * self(x)` is an integer of the same sign.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs[..=d].iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        sign_of(&acc)
    }

    /// Pseudo-remainder with a positive multiplier: returns `r` with
    /// `m*self = q*divisor + r`, `m = |lc(divisor)|^e > 0`, `deg r < deg divisor`.
    pub fn positive_pseudo_rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lc = divisor.leading_coeff();
        let (abs_lc, lc_sign) = (lc.abs(), lc.signum());
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let lr = r.last().cloned().unwrap_or_default();
            let factor = &lr * &lc_sign;
            for c in r.iter_mut() {
                *c *= &abs_lc;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                r[i + k] -= &factor * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Exact quotient `self / divisor` in `Z[x]`; `None` if the division
    /// leaves a remainder or a non-integral quotient coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                r[i + k] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Substitute `x -> x + s`.
    pub fn taylor_shift(&self, s: &Integer) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * s;
                c[j] += t;
            }
        }
        Self::new(c)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Primitive gcd with positive leading coefficient, via the primitive
/// pseudo-remainder sequence. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.positive_pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    a.primitive()
}

/// `f / gcd(f, f')`, primitive.
pub fn square_free_part(f: &IntPolynomial) -> Result<IntPolynomial, QsicError> {
    if f.is_zero() {
        return Err(QsicError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(IntPolynomial::one());
    }
    let g = poly_gcd(f, &f.derivative());
    let p = f
        .primitive()
        .div_exact(&g)
        .expect("gcd divides its argument");
    Ok(p.primitive())
}

/// Yun's square-free decomposition: `f = c * prod_i factors[i]^(i+1)` with
/// each factor primitive, square-free, and pairwise coprime. Trailing
/// constant factors are dropped.
pub fn square_free_decomposition(f: &IntPolynomial) -> Result<Vec<IntPolynomial>, QsicError> {
    if f.is_zero() {
        return Err(QsicError::ZeroPolynomial);
    }
    let f = f.primitive();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let b = poly_gcd(&f, &df);
    let mut c = f.div_exact(&b).expect("gcd divides f");
    let mut d = &df.div_exact(&b).expect("gcd divides f'") - &c.derivative();
    let mut out = Vec::new();
    while !c.is_constant() {
        let a = poly_gcd(&c, &d);
        c = c.div_exact(&a).expect("gcd divides c");
        d = &d.div_exact(&a).expect("gcd divides d") - &c.derivative();
        out.push(a);
    }
    while out.last().is_some_and(IntPolynomial::is_constant) {
        out.pop();
    }
    Ok(out)
}

/// Resultant via the Sylvester matrix, evaluated by fraction-free
/// (Bareiss) elimination.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> Integer {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in rows.iter_mut().take(n).enumerate() {
        for (j, c) in a.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
    }
    for (i, row) in rows.iter_mut().skip(n).enumerate() {
        for (j, c) in b.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
    }
    bareiss_determinant(rows)
}

/// Discriminant normalized as `(-1)^(d(d-1)/2) * Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> Result<Integer, QsicError> {
    let d = f.degree().ok_or(QsicError::DegreeTooLow)?;
    if d < 2 {
        return Err(QsicError::DegreeTooLow);
    }
    let res = resultant(f, &f.derivative());
    let q = res / f.leading_coeff();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Signed remainder sequence of `p` and `p' * g`, with every remainder
/// scaled by a positive factor and made primitive. For rationals `a < b`
/// that are not roots of `p`, `V(a) - V(b)` equals the number of roots of
/// `p` in `(a, b]` where `g > 0` minus those where `g < 0`.
pub fn sturm_habicht_sequence(
    p: &IntPolynomial,
    g: &IntPolynomial,
) -> Result<Vec<IntPolynomial>, QsicError> {
    if p.is_zero() {
        return Err(QsicError::ZeroPolynomial);
    }
    let mut seq = vec![p.positive_primitive()];
    let first = (&p.derivative() * g).positive_primitive();
    if first.is_zero() {
        return Ok(seq);
    }
    seq.push(first);
    loop {
        let n = seq.len();
        let r = -&seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.positive_primitive());
    }
    Ok(seq)
}

/// Sign variations of a sequence of polynomials evaluated at `x`.
pub fn variations_at(seq: &[IntPolynomial], x: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|q| q.sign_at(x)).collect();
    super::sign_variations(&signs)
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
