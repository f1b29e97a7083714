//! Signature sequences and their canonical form under rotation, reversal
//! and complement equivalence.

use std::fmt;
use std::str::FromStr;

use crate::arith::Rational;
use crate::error::{QsicError, Result};
use crate::pencil::Pencil;
use crate::realroots::{isolate_real_roots, IsolatedRoot};
use crate::signature::{signature_at, signature_at_root};

/// A real root of the characteristic polynomial: its multiplicity and the
/// inertia `(p, n)` of the pencil member there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootMark {
    pub mult: u8,
    pub p: u8,
    pub n: u8,
}

impl RootMark {
    pub fn corank(&self) -> u8 {
        4 - self.p - self.n
    }

    pub fn complement(self) -> Self {
        RootMark {
            mult: self.mult,
            p: self.n,
            n: self.p,
        }
    }
}

impl fmt::Display for RootMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.mult as usize;
        write!(f, "{}{},{}{}", "(".repeat(k), self.p, self.n, ")".repeat(k))
    }
}

/// `(s0, R1, s1, ..., Rr, sr)`: index `s` (positive inertia) on each arc
/// between consecutive real roots, and a mark per root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureSequence {
    segments: Vec<u8>,
    roots: Vec<RootMark>,
}

impl SignatureSequence {
    pub fn new(segments: Vec<u8>, roots: Vec<RootMark>) -> Result<Self> {
        let bad = |m: &str| Err(QsicError::SequenceSyntax(m.to_string()));
        if segments.len() != roots.len() + 1 {
            return bad("expected one more segment than roots");
        }
        if segments.iter().any(|&s| s > 4) {
            return bad("segment index out of range 0..4");
        }
        if segments[0] + segments[roots.len()] != 4 {
            return bad("first and last segments must sum to 4");
        }
        let mut total = 0u8;
        for (i, r) in roots.iter().enumerate() {
            if r.mult == 0 || r.p + r.n > 3 || r.corank() > r.mult {
                return bad("invalid root mark");
            }
            if segments[i].abs_diff(segments[i + 1]) > r.mult {
                return bad("index jump exceeds root multiplicity");
            }
            total += r.mult;
        }
        if total > 4 {
            return bad("total multiplicity exceeds 4");
        }
        Ok(SignatureSequence { segments, roots })
    }

    pub fn segments(&self) -> &[u8] {
        &self.segments
    }

    pub fn roots(&self) -> &[RootMark] {
        &self.roots
    }

    /// Index jump `s_i - s_{i-1}` across each root.
    pub fn jumps(&self) -> Vec<i8> {
        self.segments.windows(2).map(|w| w[1] as i8 - w[0] as i8).collect()
    }
}

impl fmt::Display for SignatureSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.segments[0])?;
        for (r, s) in self.roots.iter().zip(&self.segments[1..]) {
            write!(f, ",{r},{s}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for SignatureSequence {
    type Err = QsicError;

    /// Parses `(1,((1,1)),3)`; the nesting depth of a root is its
    /// multiplicity.
    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| QsicError::SequenceSyntax(format!("{m} in {s:?}"));
        let t: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.len() < 3 || t[0] != '(' || t[t.len() - 1] != ')' {
            return Err(err("expected parenthesized sequence"));
        }
        let body = &t[1..t.len() - 1];
        let mut segments = Vec::new();
        let mut roots = Vec::new();
        let mut i = 0;
        let digit = |c: Option<&char>| c.and_then(|c| c.to_digit(10)).map(|d| d as u8);
        loop {
            if segments.len() == roots.len() {
                let d = digit(body.get(i)).ok_or_else(|| err("expected segment index"))?;
                segments.push(d);
                i += 1;
            } else {
                let depth = body[i..].iter().take_while(|&&c| c == '(').count();
                if depth == 0 {
                    return Err(err("expected root mark"));
                }
                i += depth;
                let p = digit(body.get(i)).ok_or_else(|| err("expected p"))?;
                if body.get(i + 1) != Some(&',') {
                    return Err(err("expected ',' inside root mark"));
                }
                let n = digit(body.get(i + 2)).ok_or_else(|| err("expected n"))?;
                i += 3;
                let close = body[i..].iter().take_while(|&&c| c == ')').count();
                if close != depth {
                    return Err(err("unbalanced parentheses"));
                }
                i += depth;
                roots.push(RootMark {
                    mult: depth as u8,
                    p,
                    n,
                });
            }
            match body.get(i) {
                None => break,
                Some(',') => i += 1,
                Some(_) => return Err(err("expected ','")),
            }
        }
        if segments.len() == roots.len() {
            return Err(err("sequence must end with a segment"));
        }
        SignatureSequence::new(segments, roots)
    }
}

/// Signature sequence of `lambda A - B` along the real line.
pub fn build_signature_sequence(pencil: &Pencil) -> Result<SignatureSequence> {
    let roots = isolate_real_roots(pencil.characteristic_polynomial());
    sequence_from_roots(pencil, &roots)
}

pub(crate) fn sequence_from_roots(
    pencil: &Pencil,
    roots: &[IsolatedRoot],
) -> Result<SignatureSequence> {
    let one = Rational::from_integer(1.into());
    let samples: Vec<Rational> = match (roots.first(), roots.last()) {
        (Some(first), Some(last)) => {
            let mut v = vec![first.lo() - &one];
            for w in roots.windows(2) {
                v.push((w[0].hi() + w[1].lo()) / Rational::from_integer(2.into()));
            }
            v.push(last.hi() + &one);
            v
        }
        _ => vec![Rational::from_integer(0.into())],
    };
    let segments = samples.iter().map(|x| signature_at(pencil, x).p).collect();
    let marks = roots
        .iter()
        .map(|r| {
            let s = signature_at_root(pencil, r)?;
            Ok(RootMark {
                mult: r.multiplicity() as u8,
                p: s.p,
                n: s.n,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let seq = SignatureSequence::new(segments, marks);
    debug_assert!(seq.is_ok(), "built sequence violates invariants: {seq:?}");
    seq
}

/// One element of a cyclic signature word. Arcs sort before roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KeyElement {
    Arc(u8),
    Root(RootMark),
}

/// Canonical representative of a signature sequence's equivalence class.
///
/// Displayed as `1 (1:1,2) 2 (1:2,1) 3` with roots written `(mult:p,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<KeyElement>);

impl CanonicalKey {
    pub fn elements(&self) -> &[KeyElement] {
        &self.0
    }

    /// The representative as a signature sequence.
    pub fn to_sequence(&self) -> SignatureSequence {
        let mut segments = Vec::new();
        let mut roots = Vec::new();
        for e in &self.0 {
            match *e {
                KeyElement::Arc(s) => segments.push(s),
                KeyElement::Root(r) => roots.push(r),
            }
        }
        SignatureSequence { segments, roots }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match e {
                KeyElement::Arc(s) => write!(f, "{s}")?,
                KeyElement::Root(r) => write!(f, "({}:{},{})", r.mult, r.p, r.n)?,
            }
        }
        Ok(())
    }
}

/// Lexicographically least representative over all rotations and
/// reflections of the sequence's cyclic word on the double cover of the
/// projective line.
pub fn canonicalize(seq: &SignatureSequence) -> CanonicalKey {
    let r = seq.roots.len();
    if r == 0 {
        return CanonicalKey(vec![KeyElement::Arc(seq.segments[0])]);
    }
    let mut word = Vec::with_capacity(4 * r);
    for i in 0..2 * r {
        let arc = if i <= r {
            seq.segments[i]
        } else {
            4 - seq.segments[i - r]
        };
        word.push(KeyElement::Arc(arc));
        let root = if i < r {
            seq.roots[i]
        } else {
            seq.roots[i - r].complement()
        };
        word.push(KeyElement::Root(root));
    }
    let mut rev = word.clone();
    rev.reverse();
    rev.rotate_right(1);
    let len = word.len();
    let best = [&word, &rev]
        .into_iter()
        .flat_map(|w| {
            (0..len)
                .step_by(2)
                .map(move |k| (0..=2 * r).map(|j| w[(k + j) % len]).collect::<Vec<_>>())
        })
        .min()
        .expect("non-empty candidate set");
    CanonicalKey(best)
}
