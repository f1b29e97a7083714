//! Real-root isolation for the characteristic polynomial.
//!
//! Roots are isolated on the square-free part with Descartes' rule of signs
//! and bisection. Every emitted interval has rational endpoints that are not
//! roots, contains exactly one root, and is disjoint from the others.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    simplest_rational_between, sign_variations, square_free_decomposition, square_free_part,
    Integer, IntPolynomial, Rational,
};

/// A real root of `f`, carried as the square-free part `p` of `f` plus an
/// isolating interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    p: IntPolynomial,
    lo: Rational,
    hi: Rational,
    mult: u32,
    exact: Option<Rational>,
}

impl IsolatedRoot {
    /// Square-free part of the polynomial this root belongs to.
    pub fn square_free(&self) -> &IntPolynomial {
        &self.p
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn multiplicity(&self) -> u32 {
        self.mult
    }

    /// The root itself when it is known to be rational.
    pub fn exact_value(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.exact.is_some()
    }

    pub fn midpoint(&self) -> Rational {
        match &self.exact {
            Some(r) => r.clone(),
            None => (&self.lo + &self.hi) / Rational::from_integer(2.into()),
        }
    }

    pub fn approx_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Distinct real roots of `f` in increasing order, with multiplicities.
pub fn isolate_real_roots(f: &IntPolynomial) -> Vec<IsolatedRoot> {
    let Ok(p) = square_free_part(f) else {
        return Vec::new();
    };
    let factors = square_free_decomposition(f).unwrap_or_default();
    let mut cands = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => {
            let r = Rational::new(-p.coeff(0), p.coeff(1));
            vec![exact_candidate(&p, &IntPolynomial::one(), r, &Rational::one())]
        }
        Some(_) => descartes_isolate(&p),
    };
    separate(&p, &mut cands);
    if p.degree().is_some_and(|d| d >= 2) {
        let l = p.leading_coeff().abs();
        let sep = Rational::new(Integer::one(), &l * &l + Integer::one());
        for c in cands.iter_mut().filter(|c| c.exact.is_none()) {
            detect_rational(&p, c, &sep);
        }
    }
    cands
        .into_iter()
        .map(|c| {
            let mult = multiplicity(&factors, &c);
            IsolatedRoot {
                p: p.clone(),
                lo: c.lo,
                hi: c.hi,
                mult,
                exact: c.exact,
            }
        })
        .collect()
}

/// Bisects until the interval is at most `max_width` wide. A midpoint that
/// is itself a root turns the result into an exact rational root.
pub fn refine(root: &IsolatedRoot, max_width: &Rational) -> IsolatedRoot {
    let mut c = Candidate {
        lo: root.lo.clone(),
        hi: root.hi.clone(),
        exact: root.exact.clone(),
    };
    while &(&c.hi - &c.lo) > max_width {
        bisect(&root.p, &mut c);
    }
    IsolatedRoot {
        p: root.p.clone(),
        lo: c.lo,
        hi: c.hi,
        mult: root.mult,
        exact: c.exact,
    }
}

/// Upper bound (exact for 0 and 1) on the number of roots of `q` in the open
/// interval `(a, b)`: sign variations of `(1+x)^d q((a + b x)/(1 + x))`.
pub fn descartes_bound(q: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    let Some(d) = q.degree() else { return 0 };
    let mut total = vec![Rational::zero(); d + 1];
    let lin_ab = [a.clone(), b.clone()];
    let lin_one = [Rational::one(), Rational::one()];
    for (i, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = vec![Rational::from_integer(c.clone())];
        for _ in 0..i {
            term = mul_linear(&term, &lin_ab);
        }
        for _ in i..d {
            term = mul_linear(&term, &lin_one);
        }
        for (t, v) in total.iter_mut().zip(term) {
            *t += v;
        }
    }
    sign_variations(&total)
}

fn mul_linear(p: &[Rational], lin: &[Rational; 2]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c * &lin[0];
        out[i + 1] += c * &lin[1];
    }
    out
}

#[derive(Clone, Debug)]
struct Candidate {
    lo: Rational,
    hi: Rational,
    exact: Option<Rational>,
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn cauchy_bound(p: &IntPolynomial) -> Rational {
    let lc = p.leading_coeff().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    Rational::from_integer(max.div_ceil(&lc) + Integer::from(2))
}

/// Exact root `r` of `p`; `q` is `p` with the factor for `r` removed.
/// The interval is grown from `start_w` downwards until it excludes every
/// other root.
fn exact_candidate(
    p: &IntPolynomial,
    q: &IntPolynomial,
    r: Rational,
    start_w: &Rational,
) -> Candidate {
    let mut w = start_w.clone();
    loop {
        let (lo, hi) = (&r - &w, &r + &w);
        if p.sign_at(&lo) != 0 && p.sign_at(&hi) != 0 && descartes_bound(q, &lo, &hi) == 0 {
            return Candidate {
                lo,
                hi,
                exact: Some(r),
            };
        }
        w *= half();
    }
}

fn linear_factor(r: &Rational) -> IntPolynomial {
    IntPolynomial::linear(r.denom().clone(), -r.numer().clone())
}

fn descartes_isolate(p: &IntPolynomial) -> Vec<Candidate> {
    let bound = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(p.clone(), -bound.clone(), bound)];
    while let Some((q, a, b)) = stack.pop() {
        let v = descartes_bound(&q, &a, &b);
        if v == 0 {
            continue;
        }
        if v == 1 && p.sign_at(&a) != 0 && p.sign_at(&b) != 0 {
            out.push(Candidate {
                lo: a,
                hi: b,
                exact: None,
            });
            continue;
        }
        let m = (&a + &b) * half();
        if q.sign_at(&m) == 0 {
            let q2 = q
                .div_exact(&linear_factor(&m))
                .expect("a rational root's primitive linear factor divides the polynomial");
            let w = (&b - &a) * Rational::new(1.into(), 4.into());
            out.push(exact_candidate(p, &q2, m.clone(), &w));
            stack.push((q2.clone(), a, m.clone()));
            stack.push((q2, m, b));
        } else {
            stack.push((q.clone(), a, m.clone()));
            stack.push((q, m, b));
        }
    }
    out
}

/// One halving step that keeps the root inside.
fn bisect(p: &IntPolynomial, c: &mut Candidate) {
    if let Some(r) = &c.exact {
        let w = (&c.hi - &c.lo) * Rational::new(1.into(), 4.into());
        c.lo = r - &w;
        c.hi = r + &w;
        return;
    }
    let m = (&c.lo + &c.hi) * half();
    let sm = p.sign_at(&m);
    if sm == 0 {
        let w = (&c.hi - &c.lo) * Rational::new(1.into(), 4.into());
        c.lo = &m - &w;
        c.hi = &m + &w;
        c.exact = Some(m);
    } else if sm == p.sign_at(&c.lo) {
        c.lo = m;
    } else {
        c.hi = m;
    }
}

/// Sorts and shrinks candidates until consecutive intervals do not overlap.
fn separate(p: &IntPolynomial, cands: &mut [Candidate]) {
    loop {
        cands.sort_by(|x, y| x.lo.cmp(&y.lo));
        let Some(i) = (0..cands.len().saturating_sub(1)).find(|&i| cands[i].hi > cands[i + 1].lo)
        else {
            return;
        };
        let wi = &cands[i].hi - &cands[i].lo;
        let wj = &cands[i + 1].hi - &cands[i + 1].lo;
        let k = if wi >= wj { i } else { i + 1 };
        bisect(p, &mut cands[k]);
    }
}

/// Marks the root as rational when it is one. A rational root of the
/// primitive `p` has denominator dividing `lc(p)`; once the interval is
/// narrower than `1/(lc² + 1)` the simplest rational inside is the only
/// candidate.
fn detect_rational(p: &IntPolynomial, c: &mut Candidate, sep: &Rational) {
    while c.exact.is_none() && &(&c.hi - &c.lo) > sep {
        bisect(p, c);
    }
    if c.exact.is_some() {
        return;
    }
    let s = simplest_rational_between(&c.lo, &c.hi);
    if p.sign_at(&s) == 0 {
        let w = (&c.hi - &c.lo) * half();
        let w = (&s - &c.lo).min(&c.hi - &s).min(w);
        c.lo = &s - &w;
        c.hi = &s + &w;
        c.exact = Some(s);
    }
}

fn multiplicity(factors: &[IntPolynomial], c: &Candidate) -> u32 {
    for (i, fac) in factors.iter().enumerate() {
        if fac.is_constant() {
            continue;
        }
        let hit = match &c.exact {
            Some(r) => fac.sign_at(r) == 0,
            None => fac.sign_at(&c.lo) != fac.sign_at(&c.hi),
        };
        if hit {
            return i as u32 + 1;
        }
    }
    unreachable!("every root of the square-free part lies on one Yun factor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rational};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn check_invariants(f: &IntPolynomial, roots: &[IsolatedRoot]) {
        for r in roots {
            assert!(r.lo < r.hi);
            assert_ne!(f.sign_at(&r.lo), 0);
            assert_ne!(f.sign_at(&r.hi), 0);
            assert_eq!(r.p.sign_at(&r.lo) * r.p.sign_at(&r.hi), -1);
        }
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn four_simple_roots() {
        let f = p(&[0, 8, -14, 7, -1]);
        let roots = isolate_real_roots(&f);
        check_invariants(&f, &roots);
        let vals: Vec<_> = roots.iter().map(|r| r.exact_value().cloned()).collect();
        assert_eq!(vals, vec![Some(int(0)), Some(int(1)), Some(int(2)), Some(int(4))]);
        assert!(roots.iter().all(|r| r.multiplicity() == 1));
    }

    #[test]
    fn quadruple_root() {
        let f = p(&[0, 0, 0, 0, 1]);
        let roots = isolate_real_roots(&f);
        check_invariants(&f, &roots);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity(), 4);
        assert_eq!(roots[0].exact_value(), Some(&int(0)));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 2, 0, 1])).is_empty());
    }

    #[test]
    fn irrational_roots_and_mixed_multiplicity() {
        // (x^2 - 2)(x - 3)^2
        let f = &p(&[-2, 0, 1]) * &p(&[9, -6, 1]);
        let roots = isolate_real_roots(&f);
        check_invariants(&f, &roots);
        assert_eq!(roots.len(), 3);
        assert!(!roots[0].is_rational() && !roots[1].is_rational());
        assert_eq!(roots[2].exact_value(), Some(&int(3)));
        let mults: Vec<_> = roots.iter().map(|r| r.multiplicity()).collect();
        assert_eq!(mults, vec![1, 1, 2]);
        let r0 = refine(&roots[0], &rational(1, 100));
        assert!(r0.approx_f64() < -1.4 && r0.approx_f64() > -1.43);
    }

    #[test]
    fn rational_non_integer_roots() {
        // (3x - 1)(2x + 5)(x^2 + 1)
        let f = &(&p(&[-1, 3]) * &p(&[5, 2])) * &p(&[1, 0, 1]);
        let roots = isolate_real_roots(&f);
        check_invariants(&f, &roots);
        let vals: Vec<_> = roots.iter().map(|r| r.exact_value().cloned()).collect();
        assert_eq!(vals, vec![Some(rational(-5, 2)), Some(rational(1, 3))]);
    }

    #[test]
    fn refine_bisection_trace() {
        let q = p(&[-2, 0, 1]);
        let root = IsolatedRoot {
            p: q.clone(),
            lo: int(1),
            hi: int(2),
            mult: 1,
            exact: None,
        };
        let r = refine(&root, &rational(1, 4));
        assert!(r.width() <= rational(1, 4));
        assert_eq!((r.lo.clone(), r.hi.clone()), (rational(5, 4), rational(3, 2)));
        assert_eq!(q.sign_at(&r.lo) * q.sign_at(&r.hi), -1);
        // idempotent on an already narrow interval
        assert_eq!(refine(&r, &rational(1, 4)), r);
    }

    #[test]
    fn refine_detects_exact_midpoint() {
        let root = IsolatedRoot {
            p: p(&[0, 1]),
            lo: int(-1),
            hi: int(1),
            mult: 4,
            exact: None,
        };
        let r = refine(&root, &rational(1, 10));
        assert_eq!(r.exact_value(), Some(&int(0)));
        assert!(r.width() <= rational(1, 10));
        assert_eq!(-r.lo.clone(), r.hi);
    }

    #[test]
    fn descartes_bound_cases() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(descartes_bound(&q, &int(0), &int(2)), 1);
        assert_eq!(descartes_bound(&q, &int(-2), &int(2)), 2);
        assert_eq!(descartes_bound(&q, &int(2), &int(3)), 0);
    }
}
