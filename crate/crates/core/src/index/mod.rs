//! Exact nearest-neighbor search over unit-length reference vectors.
//!
//! Similarity is cosine similarity, obtained from the Euclidean distance
//! between unit vectors as `1 - d²/2`. Small collections are scanned
//! linearly; larger ones are searched through a ball tree. Both paths compute
//! similarities with the same arithmetic, so their results are identical.

mod ball_tree;

use std::cmp::Ordering;
use std::sync::Arc;

use crate::embed::{EmbeddingVector, NORM_TOLERANCE};
use crate::error::{Error, Result};

use ball_tree::BallTree;

pub const DEFAULT_LINEAR_THRESHOLD: usize = 512;
pub const DEFAULT_LEAF_SIZE: usize = 32;

pub type RefId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexStructure {
    Linear,
    BallTree { leaf_size: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct IndexConfig {
    /// Collections with fewer entries than this are scanned linearly.
    pub linear_threshold: usize,
    pub leaf_size: usize,
}

impl Default for IndexConfig {
    fn default() -> Self {
        IndexConfig {
            linear_threshold: DEFAULT_LINEAR_THRESHOLD,
            leaf_size: DEFAULT_LEAF_SIZE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub ref_id: RefId,
    pub similarity: f64,
}

/// Ranking order: higher similarity first, then lower ref id.
pub(crate) fn rank_order(a: &Neighbor, b: &Neighbor) -> Ordering {
    b.similarity
        .total_cmp(&a.similarity)
        .then_with(|| a.ref_id.cmp(&b.ref_id))
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct QueryResult {
    pub neighbors: Vec<Neighbor>,
    /// Set when the query was the zero vector; `neighbors` is then empty.
    pub zero_query: bool,
}

/// Immutable searchable set of `(ref_id, unit vector)` pairs.
#[derive(Debug, Clone)]
pub struct ReferenceIndex {
    embedder_id: Arc<str>,
    dimension: usize,
    ids: Vec<RefId>,
    data: Vec<f32>,
    structure: IndexStructure,
    tree: Option<BallTree>,
}

/// Squared Euclidean distance accumulated in f64, in index order.
#[inline]
pub(crate) fn squared_distance(a: &[f32], b: &[f32]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = f64::from(x) - f64::from(y);
            d * d
        })
        .sum()
}

#[inline]
pub(crate) fn similarity_from_squared_distance(d2: f64) -> f64 {
    1.0 - d2 / 2.0
}

impl ReferenceIndex {
    /// Builds an index for `embedder_id` vectors of length `dimension`.
    pub fn build(
        embedder_id: &str,
        dimension: usize,
        pairs: Vec<(RefId, EmbeddingVector)>,
        config: IndexConfig,
    ) -> Result<ReferenceIndex> {
        if config.leaf_size == 0 {
            return Err(Error::InvalidArgument("leaf size must be positive".into()));
        }
        let mut ids = Vec::with_capacity(pairs.len());
        let mut data = Vec::with_capacity(pairs.len() * dimension);
        for (id, vector) in pairs {
            if vector.embedder_id() != embedder_id {
                return Err(Error::Incompatible {
                    expected: embedder_id.to_string(),
                    found: vector.embedder_id().to_string(),
                });
            }
            if vector.dimension() != dimension {
                return Err(Error::InvalidArgument(format!(
                    "reference {id}: dimension {} differs from {dimension}",
                    vector.dimension()
                )));
            }
            if vector.is_zero() {
                return Err(Error::InvalidArgument(format!("reference {id}: zero vector cannot be indexed")));
            }
            if (vector.norm() - 1.0).abs() > 1e-4 {
                return Err(Error::InvalidArgument(format!(
                    "reference {id}: vector is not unit length (norm {})",
                    vector.norm()
                )));
            }
            ids.push(id);
            data.extend_from_slice(vector.values());
        }
        let (structure, tree) = if ids.len() < config.linear_threshold {
            (IndexStructure::Linear, None)
        } else {
            let tree = BallTree::build(&data, dimension, config.leaf_size);
            (
                IndexStructure::BallTree {
                    leaf_size: config.leaf_size,
                },
                Some(tree),
            )
        };
        Ok(ReferenceIndex {
            embedder_id: Arc::from(embedder_id),
            dimension,
            ids,
            data,
            structure,
            tree,
        })
    }

    pub fn empty(embedder_id: &str, dimension: usize) -> ReferenceIndex {
        ReferenceIndex {
            embedder_id: Arc::from(embedder_id),
            dimension,
            ids: Vec::new(),
            data: Vec::new(),
            structure: IndexStructure::Linear,
            tree: None,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn structure(&self) -> IndexStructure {
        self.structure
    }

    pub fn embedder_id(&self) -> &str {
        &self.embedder_id
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The `m` most similar entries, sorted by similarity descending and
    /// ref id ascending on ties.
    pub fn nearest(&self, query: &EmbeddingVector, m: usize) -> Result<QueryResult> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        if query.embedder_id() != &*self.embedder_id {
            return Err(Error::Incompatible {
                expected: self.embedder_id.to_string(),
                found: query.embedder_id().to_string(),
            });
        }
        if query.dimension() != self.dimension {
            return Err(Error::InvalidArgument(format!(
                "query dimension {} differs from index dimension {}",
                query.dimension(),
                self.dimension
            )));
        }
        if query.is_zero() {
            return Ok(QueryResult {
                neighbors: Vec::new(),
                zero_query: true,
            });
        }
        debug_assert!((query.norm() - 1.0).abs() <= 1e-4 + NORM_TOLERANCE);
        let neighbors = match &self.tree {
            Some(tree) => tree.search(&self.data, self.dimension, &self.ids, query.values(), m),
            None => self.linear_scan(query.values(), m),
        };
        Ok(QueryResult {
            neighbors,
            zero_query: false,
        })
    }

    /// Full scan regardless of structure.
    pub fn linear_scan(&self, query: &[f32], m: usize) -> Vec<Neighbor> {
        let mut all: Vec<Neighbor> = self
            .ids
            .iter()
            .enumerate()
            .map(|(row, &ref_id)| Neighbor {
                ref_id,
                similarity: similarity_from_squared_distance(squared_distance(
                    query,
                    &self.data[row * self.dimension..(row + 1) * self.dimension],
                )),
            })
            .collect();
        all.sort_by(rank_order);
        all.truncate(m);
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::cosine_similarity;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const ID: &str = "test";

    fn unit(values: Vec<f32>) -> EmbeddingVector {
        EmbeddingVector::normalized(values, Arc::from(ID))
    }

    fn random_unit(rng: &mut ChaCha8Rng, d: usize) -> EmbeddingVector {
        loop {
            let v: Vec<f32> = (0..d).map(|_| rng.gen_range(-1.0f32..1.0)).collect();
            if v.iter().any(|&x| x.abs() > 1e-3) {
                return unit(v);
            }
        }
    }

    fn random_pairs(n: usize, d: usize, seed: u64) -> Vec<(RefId, EmbeddingVector)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n as RefId).map(|i| (i, random_unit(&mut rng, d))).collect()
    }

    // Brute-force oracle: sort every (id, cosine) by the documented order.
    fn oracle(pairs: &[(RefId, EmbeddingVector)], q: &EmbeddingVector, m: usize) -> Vec<RefId> {
        let mut scored: Vec<(RefId, f64)> = pairs
            .iter()
            .map(|(id, v)| (*id, cosine_similarity(q, v).unwrap()))
            .collect();
        scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        scored.into_iter().take(m).map(|(id, _)| id).collect()
    }

    #[test]
    fn structure_follows_threshold() {
        let small = ReferenceIndex::build(ID, 8, random_pairs(4, 8, 1), IndexConfig { linear_threshold: 1000, leaf_size: 32 }).unwrap();
        assert_eq!(small.structure(), IndexStructure::Linear);
        let big = ReferenceIndex::build(ID, 8, random_pairs(5000, 8, 2), IndexConfig { linear_threshold: 1000, leaf_size: 32 }).unwrap();
        assert_eq!(big.structure(), IndexStructure::BallTree { leaf_size: 32 });
    }

    #[test]
    fn rejects_zero_and_mixed_vectors() {
        let mut pairs = random_pairs(3, 4, 3);
        pairs.push((7, EmbeddingVector::zero(4, Arc::from(ID))));
        let err = ReferenceIndex::build(ID, 4, pairs, IndexConfig::default()).unwrap_err();
        assert!(err.to_string().contains("reference 7"), "{err}");

        let mut pairs = random_pairs(3, 4, 3);
        pairs.push((9, unit(vec![1.0, 0.0, 0.0])));
        assert!(matches!(
            ReferenceIndex::build(ID, 4, pairs, IndexConfig::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn exact_hit_is_first() {
        let pairs = random_pairs(50, 16, 4);
        let index = ReferenceIndex::build(ID, 16, pairs.clone(), IndexConfig::default()).unwrap();
        let result = index.nearest(&pairs[17].1, 3).unwrap();
        assert_eq!(result.neighbors[0].ref_id, 17);
        assert!((result.neighbors[0].similarity - 1.0).abs() < 1e-6);
    }

    #[test]
    fn oversized_m_returns_everything_sorted() {
        let pairs = random_pairs(5, 8, 5);
        let index = ReferenceIndex::build(ID, 8, pairs.clone(), IndexConfig::default()).unwrap();
        let result = index.nearest(&pairs[0].1, 100).unwrap();
        assert_eq!(result.neighbors.len(), 5);
        assert!(result.neighbors.windows(2).all(|w| w[0].similarity >= w[1].similarity));
    }

    #[test]
    fn zero_query_is_flagged_not_an_error() {
        let index = ReferenceIndex::build(ID, 8, random_pairs(5, 8, 6), IndexConfig::default()).unwrap();
        let result = index.nearest(&EmbeddingVector::zero(8, Arc::from(ID)), 3).unwrap();
        assert!(result.zero_query);
        assert!(result.neighbors.is_empty());
    }

    #[test]
    fn query_mismatches() {
        let index = ReferenceIndex::build(ID, 8, random_pairs(5, 8, 7), IndexConfig::default()).unwrap();
        let other = EmbeddingVector::normalized(vec![1.0; 8], Arc::from("other"));
        assert!(matches!(index.nearest(&other, 1), Err(Error::Incompatible { .. })));
        assert!(matches!(index.nearest(&unit(vec![1.0; 4]), 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(index.nearest(&unit(vec![1.0; 8]), 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn ties_break_by_ascending_id() {
        let v = unit(vec![1.0, 0.0, 0.0]);
        let pairs = vec![(5, v.clone()), (2, v.clone()), (9, v.clone()), (1, unit(vec![0.0, 1.0, 0.0]))];
        for threshold in [1, 100] {
            let index = ReferenceIndex::build(ID, 3, pairs.clone(), IndexConfig { linear_threshold: threshold, leaf_size: 1 }).unwrap();
            let ids: Vec<_> = index.nearest(&v, 4).unwrap().neighbors.iter().map(|n| n.ref_id).collect();
            assert_eq!(ids, vec![2, 5, 9, 1]);
        }
    }

    #[test]
    fn ball_tree_matches_linear_and_oracle() {
        let pairs = random_pairs(1000, 64, 8);
        let linear = ReferenceIndex::build(ID, 64, pairs.clone(), IndexConfig { linear_threshold: usize::MAX, leaf_size: 32 }).unwrap();
        let tree = ReferenceIndex::build(ID, 64, pairs.clone(), IndexConfig { linear_threshold: 1, leaf_size: 32 }).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let q = random_unit(&mut rng, 64);
            let a = linear.nearest(&q, 10).unwrap().neighbors;
            let b = tree.nearest(&q, 10).unwrap().neighbors;
            assert_eq!(a, b);
            let ids: Vec<_> = a.iter().map(|n| n.ref_id).collect();
            assert_eq!(ids, oracle(&pairs, &q, 10));
        }
    }

    #[test]
    fn conversion_identity_on_unit_vectors() {
        let pairs = random_pairs(200, 32, 10);
        for w in pairs.windows(2) {
            let (a, b) = (&w[0].1, &w[1].1);
            let dot: f64 = a.values().iter().zip(b.values()).map(|(&x, &y)| x as f64 * y as f64).sum();
            let sim = similarity_from_squared_distance(squared_distance(a.values(), b.values()));
            assert!((sim - dot).abs() <= 1e-6);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn structures_agree(n in 1usize..300, d in 1usize..12, leaf in 1usize..16, m in 1usize..20, seed in any::<u64>()) {
            let pairs = random_pairs(n, d, seed);
            let linear = ReferenceIndex::build(ID, d, pairs.clone(), IndexConfig { linear_threshold: usize::MAX, leaf_size: leaf }).unwrap();
            let tree = ReferenceIndex::build(ID, d, pairs, IndexConfig { linear_threshold: 0, leaf_size: leaf }).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xdead_beef);
            for _ in 0..5 {
                let q = random_unit(&mut rng, d);
                let a = linear.nearest(&q, m).unwrap().neighbors;
                let b = tree.nearest(&q, m).unwrap().neighbors;
                prop_assert!(a.windows(2).all(|w| w[0].similarity >= w[1].similarity));
                prop_assert_eq!(a, b);
            }
        }
    }
}
