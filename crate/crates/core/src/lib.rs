//! Exact classification of the intersection curve of two real quadric surfaces.
//!
//! Two quadrics span a pencil `λA - B`. The real roots of `det(λA - B)` and
//! the inertia of the pencil members between and at those roots form a
//! signature sequence, which (with a minimal-polynomial test in two
//! ambiguous cases) determines one of 35 morphology classes. All
//! computations are exact over the rationals.
//!
//! ```
//! use qsic::arith::Rational;
//! use qsic::classify::classify;
//!
//! let r = |v: [i64; 10]| v.map(|x| Rational::from_integer(x.into()));
//! // x² + y² + z² - w² and 2x² + 4y² - w²
//! let res = classify(&r([1, 1, 1, -1, 0, 0, 0, 0, 0, 0]), &r([2, 4, 0, -1, 0, 0, 0, 0, 0, 0])).unwrap();
//! assert_eq!(res.case_id(), 1);
//! assert_eq!(res.sequence.to_string(), "(1,(1,2),2,(1,2),1,(1,2),2,(2,1),3)");
//! ```

pub mod arith;
pub mod batch;
pub mod classify;
pub mod error;
pub mod numeric;
pub mod pencil;
pub mod realroots;
pub mod segre;
pub mod sequence;
pub mod signature;

pub use classify::{classify, ClassificationResult, Disambiguator, MorphologyCase, Table};
pub use error::{QsicError, Result};
pub use pencil::{make_pencil, quadric_from_coeffs, Pencil, QuadricForm};
pub use sequence::{build_signature_sequence, canonicalize, CanonicalKey, SignatureSequence};
