//! Classification of many quadric pairs at once.

use crate::arith::Rational;
use crate::classify::{classify, ClassificationResult};
use crate::error::Result;

/// Coefficient lists of two quadrics.
pub type QuadricPair = ([Rational; 10], [Rational; 10]);

/// Classifies each pair in order on the calling thread.
pub fn classify_batch_seq(pairs: &[QuadricPair]) -> Vec<Result<ClassificationResult>> {
    pairs.iter().map(|(a, b)| classify(a, b)).collect()
}

/// Classifies pairs on the rayon thread pool; output order matches input.
#[cfg(feature = "parallel")]
pub fn classify_batch_par(pairs: &[QuadricPair]) -> Vec<Result<ClassificationResult>> {
    use rayon::prelude::*;
    pairs.par_iter().map(|(a, b)| classify(a, b)).collect()
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn classify_batch(pairs: &[QuadricPair]) -> Vec<Result<ClassificationResult>> {
    #[cfg(feature = "parallel")]
    {
        classify_batch_par(pairs)
    }
    #[cfg(not(feature = "parallel"))]
    {
        classify_batch_seq(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Table;

    fn corpus() -> Vec<QuadricPair> {
        Table::builtin().cases().iter().map(|c| c.sample_pair().clone()).collect()
    }

    #[test]
    fn sequential_matches_dispatch() {
        let pairs = corpus();
        let ids = |v: Vec<Result<ClassificationResult>>| -> Vec<u8> {
            v.into_iter().map(|r| r.unwrap().case_id()).collect()
        };
        let seq = ids(classify_batch_seq(&pairs));
        assert_eq!(seq, (1..=35).collect::<Vec<u8>>());
        assert_eq!(ids(classify_batch(&pairs)), seq);
    }

    #[test]
    fn errors_stay_in_place() {
        let zero: [Rational; 10] = Default::default();
        let mut pairs = corpus();
        pairs.insert(3, (zero.clone(), zero));
        let out = classify_batch(&pairs);
        assert_eq!(out.len(), 36);
        assert!(out[3].is_err());
        assert_eq!(out[4].as_ref().unwrap().case_id(), 4);
    }
}
