#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use qsic::arith::{IntPolynomial, Integer, Rational};
use qsic::classify::classify_pencil;
use qsic::pencil::{combine, quadric_from_coeffs, Pencil, SymMatrix};
use qsic::sequence::CanonicalKey;
use qsic::{QsicError, Table};
use rand::Rng;

pub fn rat10(v: [i64; 10]) -> [Rational; 10] {
    v.map(|x| Rational::from_integer(x.into()))
}

pub fn int_matrix(coeffs: &[Rational; 10]) -> SymMatrix {
    quadric_from_coeffs(coeffs.clone()).unwrap().integer_matrix()
}

/// Integer matrices of every case's sample pair.
pub fn corpus_matrices() -> Vec<(u8, SymMatrix, SymMatrix)> {
    Table::builtin()
        .cases()
        .iter()
        .map(|c| {
            let (a, b) = c.sample_pair();
            (c.id, int_matrix(a), int_matrix(b))
        })
        .collect()
}

pub fn random_sym<R: Rng>(rng: &mut R, bound: i64) -> SymMatrix {
    let mut m: SymMatrix = Default::default();
    for i in 0..4 {
        for j in i..4 {
            let v = Integer::from(rng.gen_range(-bound..=bound));
            m[i][j] = v.clone();
            m[j][i] = v;
        }
    }
    m
}

/// Product of a few elementary integer matrices (shears, swaps, sign flips).
pub fn random_unimodular<R: Rng>(rng: &mut R) -> SymMatrix {
    let mut q: SymMatrix = std::array::from_fn(|i| std::array::from_fn(|j| Integer::from((i == j) as i64)));
    for _ in 0..rng.gen_range(2..6) {
        let i = rng.gen_range(0..4);
        let j = (i + rng.gen_range(1..4)) % 4;
        match rng.gen_range(0..3) {
            0 => {
                let k = Integer::from(rng.gen_range(-2i64..=2));
                for r in q.iter_mut() {
                    let add = &r[j] * &k;
                    r[i] += add;
                }
            }
            1 => {
                for r in q.iter_mut() {
                    r.swap(i, j);
                }
            }
            _ => {
                for r in q.iter_mut() {
                    r[i] = -r[i].clone();
                }
            }
        }
    }
    q
}

pub fn congruence(q: &SymMatrix, m: &SymMatrix) -> SymMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = Integer::zero();
            for k in 0..4 {
                for l in 0..4 {
                    s += &q[k][i] * &m[k][l] * &q[l][j];
                }
            }
            s
        })
    })
}

pub fn determinant_sign_one(q: &SymMatrix) -> bool {
    let d = qsic::arith::bareiss_determinant(q.iter().map(|r| r.to_vec()).collect());
    d.abs().is_one()
}

/// A random 2x2 integer matrix of determinant ±1.
pub fn random_basis<R: Rng>(rng: &mut R) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..4) {
        let k = rng.gen_range(-2i64..=2);
        match rng.gen_range(0..3) {
            0 => {
                m[0][0] += k * m[1][0];
                m[0][1] += k * m[1][1];
            }
            1 => {
                m[1][0] += k * m[0][0];
                m[1][1] += k * m[0][1];
            }
            _ => m.swap(0, 1),
        }
    }
    m
}

pub fn rebase(m: [[i64; 2]; 2], a: &SymMatrix, b: &SymMatrix) -> (SymMatrix, SymMatrix) {
    let i = |v: i64| Integer::from(v);
    (
        combine(a, &i(m[0][0]), b, &i(m[0][1])),
        combine(a, &i(m[1][0]), b, &i(m[1][1])),
    )
}

pub fn negate(m: &SymMatrix) -> SymMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| -m[i][j].clone()))
}

pub fn classify_matrices(a: &SymMatrix, b: &SymMatrix) -> Result<(u8, CanonicalKey), QsicError> {
    let r = classify_pencil(Pencil::from_integer_matrices(a, b)?)?;
    Ok((r.case_id(), r.key))
}

/// Sign of `g` at the unique root of square-free `p` in `(lo, hi)`, by plain
/// bisection to width below 1e-60 and evaluation at the midpoint. `None`
/// when `|g|` there is too small to call.
pub fn bisection_sign_oracle(p: &IntPolynomial, g: &IntPolynomial, lo: &Rational, hi: &Rational) -> Option<i8> {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let slo = p.sign_at(&lo);
    let eps = Rational::new(Integer::one(), Integer::from(10).pow(60));
    let two = Rational::from_integer(2.into());
    let mut mid = (&lo + &hi) / &two;
    while &hi - &lo > eps {
        mid = (&lo + &hi) / &two;
        let s = p.sign_at(&mid);
        if s == 0 {
            return Some(g.sign_at(&mid));
        }
        if s == slo {
            lo = mid.clone();
        } else {
            hi = mid.clone();
        }
    }
    let v = g.eval(&mid);
    let floor = Rational::new(Integer::one(), Integer::from(10).pow(50));
    if v.abs() > floor {
        Some(if v.is_positive() { 1 } else { -1 })
    } else {
        None
    }
}

type RPoly = Vec<Rational>;

fn rtrim(mut p: RPoly) -> RPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rrem(a: &RPoly, b: &RPoly) -> RPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[i + k] -= &f * c;
        }
        r = rtrim(r);
    }
    r
}

fn reval(p: &RPoly, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Distinct real roots of `f` in `(a, b]` by a classical Sturm chain over
/// the rationals.
pub fn sturm_count(f: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    let p0: RPoly = f.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
    let p1: RPoly = rtrim(f.derivative().coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect());
    let mut chain = vec![p0, p1];
    while !chain.last().unwrap().is_empty() {
        let n = chain.len();
        let r: RPoly = rrem(&chain[n - 2], &chain[n - 1]).into_iter().map(|c| -c).collect();
        chain.push(rtrim(r));
    }
    chain.pop();
    let var = |x: &Rational| {
        let vals: Vec<Rational> = chain.iter().map(|p| reval(p, x)).filter(|v| !v.is_zero()).collect();
        vals.windows(2).filter(|w| w[0].is_positive() != w[1].is_positive()).count()
    };
    var(a) - var(b)
}

/// Resultant by the Euclidean algorithm over the rationals.
pub fn euclid_resultant(a: &IntPolynomial, b: &IntPolynomial) -> Rational {
    let mut f: RPoly = a.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
    let mut g: RPoly = b.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
    if f.is_empty() || g.is_empty() {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    loop {
        let (m, n) = (f.len() - 1, g.len() - 1);
        if n == 0 {
            return acc * num_traits::pow(g[0].clone(), m);
        }
        let r = rrem(&f, &g);
        if r.is_empty() {
            return Rational::zero();
        }
        let k = r.len() - 1;
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(g[n].clone(), m - k);
        f = g;
        g = r;
    }
}
