//! Text embedding behind a pluggable interface.
//!
//! Every vector carries the id of the embedder that produced it so that
//! vectors from different embedders (or dimensions) are never compared.

mod remote;
mod subtoken;

use std::sync::Arc;

use crate::error::{Error, Result};

pub use remote::{RemoteEmbedder, RemoteEmbedderConfig};
pub use subtoken::{SubtokenEmbedder, DEFAULT_DIMENSION};

/// Tolerance on the L2 norm of a non-degenerate embedding.
pub const NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingVector {
    values: Vec<f32>,
    embedder_id: Arc<str>,
}

impl EmbeddingVector {
    /// Wraps raw values, scaling them to unit length. All-zero input stays zero.
    pub fn normalized(mut values: Vec<f32>, embedder_id: Arc<str>) -> Self {
        let norm = l2_norm(&values);
        if norm > 0.0 {
            for v in &mut values {
                *v = (f64::from(*v) / norm) as f32;
            }
        }
        EmbeddingVector { values, embedder_id }
    }

    /// Wraps values that are already normalized (e.g. loaded from disk).
    pub fn from_raw(values: Vec<f32>, embedder_id: Arc<str>) -> Self {
        EmbeddingVector { values, embedder_id }
    }

    pub fn zero(dimension: usize, embedder_id: Arc<str>) -> Self {
        EmbeddingVector {
            values: vec![0.0; dimension],
            embedder_id,
        }
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f32> {
        self.values
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    pub fn embedder_id(&self) -> &str {
        &self.embedder_id
    }

    pub fn norm(&self) -> f64 {
        l2_norm(&self.values)
    }

    /// The degenerate vector produced for text without content. It cannot be indexed.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }
}

fn l2_norm(values: &[f32]) -> f64 {
    values.iter().map(|&v| f64::from(v) * f64::from(v)).sum::<f64>().sqrt()
}

pub trait Embedder: Send + Sync {
    /// Identifies the model and its configuration; persisted with every index.
    fn id(&self) -> &str;

    fn dimension(&self) -> usize;

    fn embed(&self, text: &str) -> Result<EmbeddingVector>;
}

/// Cosine similarity `a·b / (|a||b|)`, or 0 when either vector is zero.
pub fn cosine_similarity(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64> {
    if a.dimension() != b.dimension() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: {} vs {}",
            a.dimension(),
            b.dimension()
        )));
    }
    if a.embedder_id() != b.embedder_id() {
        return Err(Error::Incompatible {
            expected: a.embedder_id().to_string(),
            found: b.embedder_id().to_string(),
        });
    }
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || nb == 0.0 {
        return Ok(0.0);
    }
    let dot: f64 = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(&x, &y)| f64::from(x) * f64::from(y))
        .sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn id() -> Arc<str> {
        Arc::from("test")
    }

    #[test]
    fn basis_vectors() {
        let e1 = EmbeddingVector::from_raw(vec![1.0, 0.0, 0.0], id());
        let e2 = EmbeddingVector::from_raw(vec![0.0, 1.0, 0.0], id());
        assert_eq!(cosine_similarity(&e1, &e1).unwrap(), 1.0);
        assert_eq!(cosine_similarity(&e1, &e2).unwrap(), 0.0);
    }

    #[test]
    fn zero_vector_similarity_is_zero() {
        let z = EmbeddingVector::zero(3, id());
        let e1 = EmbeddingVector::from_raw(vec![1.0, 0.0, 0.0], id());
        assert_eq!(cosine_similarity(&z, &e1).unwrap(), 0.0);
        assert!(z.is_zero());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = EmbeddingVector::from_raw(vec![1.0, 0.0], id());
        let b = EmbeddingVector::from_raw(vec![1.0, 0.0, 0.0], id());
        assert!(matches!(cosine_similarity(&a, &b), Err(Error::InvalidArgument(_))));
        let c = EmbeddingVector::from_raw(vec![1.0, 0.0], Arc::from("other"));
        assert!(matches!(cosine_similarity(&a, &c), Err(Error::Incompatible { .. })));
    }

    // Independent oracle: plain dot product over separately normalized f64 copies.
    fn oracle(a: &[f32], b: &[f32]) -> f64 {
        let a: Vec<f64> = a.iter().map(|&x| x as f64).collect();
        let b: Vec<f64> = b.iter().map(|&x| x as f64).collect();
        let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        let mut dot = 0.0;
        for i in 0..a.len() {
            dot += (a[i] / na) * (b[i] / nb);
        }
        dot
    }

    proptest! {
        #[test]
        fn agrees_with_dot_product_oracle(
            pair in (1usize..48).prop_flat_map(|d| (
                prop::collection::vec(-1.0f32..1.0, d),
                prop::collection::vec(-1.0f32..1.0, d),
            ))
        ) {
            let (a, b) = pair;
            prop_assume!(a.iter().any(|&x| x != 0.0) && b.iter().any(|&x| x != 0.0));
            let expected = oracle(&a, &b);
            let got = cosine_similarity(
                &EmbeddingVector::from_raw(a, id()),
                &EmbeddingVector::from_raw(b, id()),
            ).unwrap();
            prop_assert!((got - expected).abs() <= 1e-9, "{got} vs {expected}");
            prop_assert!((-1.0..=1.0).contains(&got));
        }

        #[test]
        fn normalization_yields_unit_norm(values in prop::collection::vec(-100.0f32..100.0, 1..64)) {
            prop_assume!(values.iter().any(|&x| x.abs() > 1e-3));
            let v = EmbeddingVector::normalized(values, id());
            prop_assert!((v.norm() - 1.0).abs() <= NORM_TOLERANCE);
        }
    }
}
