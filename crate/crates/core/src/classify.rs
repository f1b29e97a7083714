//! The classification table and the full pipeline from two quadrics to a
//! morphology case.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::arith::{discriminant, square_free_part, Integer, IntPolynomial, Rational};
use crate::error::{QsicError, Result};
use crate::pencil::{make_pencil, quadric_from_coeffs, rational_determinant, Pencil, QuadricForm, RationalMatrix, SymMatrix};
use crate::segre::Segre;
use crate::sequence::{build_signature_sequence, canonicalize, CanonicalKey, KeyElement, SignatureSequence};

const BUILTIN_TABLE: &str = include_str!("../data/qsic_table.toml");

/// One of the morphology classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphologyCase {
    pub id: u8,
    pub segre: Segre,
    pub index_sequences: Vec<String>,
    pub raw_sequences: Vec<SignatureSequence>,
    pub keys: Vec<CanonicalKey>,
    pub description: String,
    /// The example pair as listed for this case.
    pub representative: ([Rational; 10], [Rational; 10]),
    /// A replacement example when the listed pair belongs to another case.
    pub substitute: Option<([Rational; 10], [Rational; 10])>,
}

impl MorphologyCase {
    /// An example pair that classifies to this case.
    pub fn sample_pair(&self) -> &([Rational; 10], [Rational; 10]) {
        self.substitute.as_ref().unwrap_or(&self.representative)
    }
}

#[derive(Deserialize)]
struct TableFile {
    format: String,
    version: u32,
    case: Vec<RawCase>,
}

#[derive(Deserialize)]
struct RawCase {
    id: u8,
    segre: String,
    index_sequences: Vec<String>,
    signature_sequences: Vec<String>,
    description: String,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "substitute_A")]
    substitute_a: Option<String>,
    #[serde(rename = "substitute_B")]
    substitute_b: Option<String>,
}

/// Morphology cases indexed by canonical key.
#[derive(Clone, Debug)]
pub struct Table {
    cases: Vec<MorphologyCase>,
    by_key: BTreeMap<CanonicalKey, Vec<u8>>,
}

fn parse_coeffs(s: &str) -> Result<[Rational; 10]> {
    let vals = s
        .split_whitespace()
        .map(|t| t.parse::<Rational>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| QsicError::InvalidTable(format!("coefficient list {s:?}: {e}")))?;
    vals.try_into()
        .map_err(|_| QsicError::InvalidTable(format!("expected 10 coefficients in {s:?}")))
}

impl Table {
    pub fn parse(text: &str) -> Result<Self> {
        let file: TableFile =
            toml::from_str(text).map_err(|e| QsicError::InvalidTable(e.to_string()))?;
        if file.format != "qsic-table" || file.version != 1 {
            return Err(QsicError::InvalidTable(format!(
                "unsupported format {:?} version {}",
                file.format, file.version
            )));
        }
        let mut cases = Vec::with_capacity(file.case.len());
        let mut by_key: BTreeMap<CanonicalKey, Vec<u8>> = BTreeMap::new();
        for (i, raw) in file.case.into_iter().enumerate() {
            if raw.id as usize != i + 1 {
                return Err(QsicError::InvalidTable(format!(
                    "case ids must run 1, 2, ...; found {} at position {}",
                    raw.id,
                    i + 1
                )));
            }
            if raw.signature_sequences.is_empty() {
                return Err(QsicError::InvalidTable(format!("case {} lists no sequence", raw.id)));
            }
            let raw_sequences = raw
                .signature_sequences
                .iter()
                .map(|s| s.parse::<SignatureSequence>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| QsicError::InvalidTable(format!("case {}: {e}", raw.id)))?;
            let mut keys: Vec<CanonicalKey> = raw_sequences.iter().map(canonicalize).collect();
            keys.sort();
            keys.dedup();
            for k in &keys {
                by_key.entry(k.clone()).or_default().push(raw.id);
            }
            let segre = raw
                .segre
                .parse()
                .map_err(|e| QsicError::InvalidTable(format!("case {}: {e}", raw.id)))?;
            let substitute = match (&raw.substitute_a, &raw.substitute_b) {
                (Some(a), Some(b)) => Some((parse_coeffs(a)?, parse_coeffs(b)?)),
                (None, None) => None,
                _ => {
                    return Err(QsicError::InvalidTable(format!(
                        "case {}: substitute pair needs both quadrics",
                        raw.id
                    )))
                }
            };
            cases.push(MorphologyCase {
                id: raw.id,
                segre,
                index_sequences: raw.index_sequences,
                raw_sequences,
                keys,
                description: raw.description,
                representative: (parse_coeffs(&raw.a)?, parse_coeffs(&raw.b)?),
                substitute,
            });
        }
        Ok(Table { cases, by_key })
    }

    /// The shipped table of 35 cases, parsed once.
    pub fn builtin() -> &'static Table {
        static TABLE: OnceLock<Table> = OnceLock::new();
        TABLE.get_or_init(|| Table::parse(BUILTIN_TABLE).expect("built-in table is valid"))
    }

    pub fn cases(&self) -> &[MorphologyCase] {
        &self.cases
    }

    pub fn case(&self, id: u8) -> Option<&MorphologyCase> {
        self.cases.get((id as usize).checked_sub(1)?)
    }

    /// Case ids whose listed sequences have this key.
    pub fn lookup(&self, key: &CanonicalKey) -> &[u8] {
        self.by_key.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of distinct canonical keys over all listed sequences.
    pub fn distinct_keys(&self) -> usize {
        self.by_key.len()
    }

    /// Keys shared by more than one case, with their case ids.
    pub fn collisions(&self) -> Vec<(&CanonicalKey, &[u8])> {
        self.by_key
            .iter()
            .filter(|(_, ids)| ids.len() > 1)
            .map(|(k, ids)| (k, ids.as_slice()))
            .collect()
    }
}

/// Which extra test separated cases that share a signature sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Disambiguator {
    None,
    DiscriminantNonzero,
    MinPolyAnnihilates,
    MinPolyFails,
    QuadMinPolyAnnihilates,
    QuadMinPolyFails,
}

impl Disambiguator {
    pub fn as_str(self) -> &'static str {
        match self {
            Disambiguator::None => "none",
            Disambiguator::DiscriminantNonzero => "discriminant-nonzero",
            Disambiguator::MinPolyAnnihilates => "minpoly-annihilates",
            Disambiguator::MinPolyFails => "minpoly-fails",
            Disambiguator::QuadMinPolyAnnihilates => "quad-minpoly-annihilates",
            Disambiguator::QuadMinPolyFails => "quad-minpoly-fails",
        }
    }
}

impl fmt::Display for Disambiguator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

type IntMatrix = [[Integer; 4]; 4];

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).map(|k| &a[i][k] * &b[k][j]).sum())
    })
}

/// Adjugate of a 4x4 integer matrix, so that `adj(A) A = det(A) I`.
pub fn adjugate(a: &SymMatrix) -> IntMatrix {
    let minor = |r: usize, c: usize| -> Integer {
        let rows: Vec<usize> = (0..4).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let m = |i: usize, j: usize| &a[rows[i]][cols[j]];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = minor(j, i);
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    })
}

/// Whether `g(A⁻¹B) = 0` for `g` of degree 1 or 2, using only integers:
/// with `M = adj(A) B` and `d = det A`, tests `a M² + b d M + c d² I = 0`
/// for `g = aλ² + bλ + c`, or `a M + b d I = 0` for `g = aλ + b`.
///
/// # Panics
/// If `g` does not have degree 1 or 2.
pub fn minimal_poly_annihilates(pencil: &Pencil, g: &IntPolynomial) -> bool {
    let k = match g.degree() {
        Some(k @ (1 | 2)) => k,
        _ => panic!("annihilation test needs degree 1 or 2"),
    };
    let d = pencil.characteristic_polynomial().leading_coeff();
    let m = mat_mul(&adjugate(pencil.a()), pencil.b());
    // d^k g(M/d) = sum of g_i d^(k-i) M^i
    let mut acc: IntMatrix = Default::default();
    let mut power: IntMatrix =
        std::array::from_fn(|i| std::array::from_fn(|j| Integer::from((i == j) as u8)));
    for i in 0..=k {
        let c = g.coeff(i) * num_traits::pow(d.clone(), k - i);
        for (row, prow) in acc.iter_mut().zip(&power) {
            for (v, p) in row.iter_mut().zip(prow) {
                *v += &c * p;
            }
        }
        power = mat_mul(&power, &m);
    }
    acc.iter().flatten().all(Zero::is_zero)
}

fn to_rational(m: &SymMatrix) -> RationalMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| Rational::from_integer(m[i][j].clone())))
}

fn rational_inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.to_vec();
            r.extend((0..4).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..4 {
        let piv = (col..4).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..4 {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, p) in a[r].iter_mut().zip(pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| a[i][j + 4].clone())))
}

/// Same test as [`minimal_poly_annihilates`], evaluated directly with
/// rational matrices.
pub fn annihilates_rational(pencil: &Pencil, g: &IntPolynomial) -> bool {
    let a = to_rational(pencil.a());
    debug_assert!(!rational_determinant(&a).is_zero());
    let Some(ainv) = rational_inverse(&a) else {
        return false;
    };
    let b = to_rational(pencil.b());
    let mul = |x: &RationalMatrix, y: &RationalMatrix| -> RationalMatrix {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| &x[i][k] * &y[k][j]).sum())
        })
    };
    let n = mul(&ainv, &b);
    let mut acc: RationalMatrix = Default::default();
    let mut power: RationalMatrix =
        std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() }));
    for c in g.coeffs() {
        let c = Rational::from_integer(c.clone());
        for i in 0..4 {
            for j in 0..4 {
                acc[i][j] += &c * &power[i][j];
            }
        }
        power = mul(&power, &n);
    }
    acc.iter().flatten().all(Zero::is_zero)
}

/// Picks the case among those sharing `key`.
pub fn disambiguate(pencil: &Pencil, key: &CanonicalKey) -> Result<(u8, Disambiguator)> {
    let f = pencil.characteristic_polynomial();
    let roots: Vec<_> = key
        .elements()
        .iter()
        .filter_map(|e| match e {
            KeyElement::Root(r) => Some(*r),
            KeyElement::Arc(_) => None,
        })
        .collect();
    match roots.as_slice() {
        [] => {
            if !discriminant(f)?.is_zero() {
                return Ok((4, Disambiguator::DiscriminantNonzero));
            }
            let g = square_free_part(f)?;
            if minimal_poly_annihilates(pencil, &g) {
                Ok((31, Disambiguator::MinPolyAnnihilates))
            } else {
                Ok((10, Disambiguator::MinPolyFails))
            }
        }
        [r] if r.mult == 4 && r.p == 1 && r.n == 1 => {
            let lin = square_free_part(f)?;
            let g = &lin * &lin;
            if minimal_poly_annihilates(pencil, &g) {
                Ok((35, Disambiguator::QuadMinPolyAnnihilates))
            } else {
                Ok((26, Disambiguator::QuadMinPolyFails))
            }
        }
        _ => Err(QsicError::NotACollisionKey(key.to_string())),
    }
}

/// Outcome of classifying a quadric pair.
#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub case: &'static MorphologyCase,
    pub sequence: SignatureSequence,
    pub key: CanonicalKey,
    pub disambiguator: Disambiguator,
    pub basis_change: [[i64; 2]; 2],
    pub pencil: Pencil,
}

impl ClassificationResult {
    pub fn case_id(&self) -> u8 {
        self.case.id
    }

    /// The case's listed sequence in the class of the observed one; the
    /// observed sequence itself when it is listed verbatim.
    pub fn listed_sequence(&self) -> &SignatureSequence {
        let listed = &self.case.raw_sequences;
        listed
            .iter()
            .find(|s| **s == self.sequence)
            .or_else(|| listed.iter().find(|s| canonicalize(s) == self.key))
            .unwrap_or(&listed[0])
    }
}

/// Classifies the pencil spanned by two quadrics given as coefficient lists.
pub fn classify(a: &[Rational; 10], b: &[Rational; 10]) -> Result<ClassificationResult> {
    let qa = quadric_from_coeffs(a.clone())?;
    let qb = quadric_from_coeffs(b.clone())?;
    classify_forms(&qa, &qb)
}

pub fn classify_forms(a: &QuadricForm, b: &QuadricForm) -> Result<ClassificationResult> {
    classify_pencil(make_pencil(a, b)?)
}

pub fn classify_pencil(pencil: Pencil) -> Result<ClassificationResult> {
    let table = Table::builtin();
    let sequence = build_signature_sequence(&pencil)?;
    let key = canonicalize(&sequence);
    let miss = || QsicError::TableMiss {
        sequence: sequence.to_string(),
        key: key.to_string(),
    };
    let (id, disambiguator) = match table.lookup(&key) {
        [] => return Err(miss()),
        [id] => (*id, Disambiguator::None),
        ids => {
            let (id, d) = disambiguate(&pencil, &key)?;
            if !ids.contains(&id) {
                return Err(miss());
            }
            (id, d)
        }
    };
    let case = table.case(id).ok_or_else(miss)?;
    Ok(ClassificationResult {
        case,
        basis_change: pencil.basis_change(),
        sequence,
        key,
        disambiguator,
        pencil,
    })
}
