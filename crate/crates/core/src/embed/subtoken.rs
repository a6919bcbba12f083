use std::collections::HashMap;
use std::sync::Arc;

use super::{Embedder, EmbeddingVector};
use crate::error::Result;
use crate::text::lower_subtokens;

pub const DEFAULT_DIMENSION: usize = 256;

/// Deterministic offline embedder over a hashed bag of lowercase subtokens.
///
/// Text is split on non-alphanumerics and at camelCase boundaries, each
/// lowercase subtoken is hashed (FNV-1a) into one of `dimension` buckets, a
/// bucket holding `c` subtoken occurrences gets weight `1 + log10(c)`, and the
/// vector is L2-normalized. Hash collisions are not resolved.
#[derive(Debug, Clone)]
pub struct SubtokenEmbedder {
    dimension: usize,
    id: Arc<str>,
}

impl SubtokenEmbedder {
    pub fn new(dimension: usize) -> Self {
        assert!(dimension > 0, "embedding dimension must be positive");
        SubtokenEmbedder {
            dimension,
            id: Arc::from(format!("subtoken-bag-v1/d{dimension}")),
        }
    }

    pub fn bucket(&self, subtoken: &str) -> usize {
        (fnv1a(subtoken.as_bytes()) % self.dimension as u64) as usize
    }
}

impl Default for SubtokenEmbedder {
    fn default() -> Self {
        SubtokenEmbedder::new(DEFAULT_DIMENSION)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    bytes
        .iter()
        .fold(OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(PRIME))
}

impl Embedder for SubtokenEmbedder {
    fn id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn embed(&self, text: &str) -> Result<EmbeddingVector> {
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for token in lower_subtokens(text) {
            *counts.entry(self.bucket(&token)).or_default() += 1;
        }
        let mut values = vec![0.0f32; self.dimension];
        for (bucket, count) in counts {
            values[bucket] = (1.0 + f64::from(count).log10()) as f32;
        }
        Ok(EmbeddingVector::normalized(values, self.id.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{cosine_similarity, NORM_TOLERANCE};
    use proptest::prelude::*;

    #[test]
    fn empty_and_blank_text_give_zero_vector() {
        let e = SubtokenEmbedder::default();
        assert!(e.embed("").unwrap().is_zero());
        assert!(e.embed("  \n\t").unwrap().is_zero());
        assert!(e.embed("()[]:,").unwrap().is_zero());
    }

    #[test]
    fn id_pins_dimension() {
        assert_ne!(SubtokenEmbedder::new(64).id(), SubtokenEmbedder::new(256).id());
        assert_eq!(SubtokenEmbedder::new(64).embed("abc").unwrap().dimension(), 64);
    }

    #[test]
    fn disjoint_subtoken_bags_are_orthogonal() {
        let e = SubtokenEmbedder::default();
        let a = "ds.find_by_keyword(keyword)";
        let b = "sorted(docs, reverse=True)";
        // Hand-built bags: {find, by, keyword, ds} vs {sorted, docs, reverse, true}.
        let bag_a = ["ds", "find", "by", "keyword"];
        let bag_b = ["sorted", "docs", "reverse", "true"];
        let buckets_a: Vec<_> = bag_a.iter().map(|t| e.bucket(t)).collect();
        assert!(bag_b.iter().all(|t| !buckets_a.contains(&e.bucket(t))));
        let sim = cosine_similarity(&e.embed(a).unwrap(), &e.embed(b).unwrap()).unwrap();
        assert_eq!(sim, 0.0);
    }

    #[test]
    fn hand_computed_similarity() {
        // {push, back} (tf 1 each) vs {push, front}: cosine 1/2 when buckets are distinct.
        let e = SubtokenEmbedder::default();
        let buckets: Vec<_> = ["push", "back", "front"].iter().map(|t| e.bucket(t)).collect();
        assert!(buckets[0] != buckets[1] && buckets[0] != buckets[2] && buckets[1] != buckets[2]);
        let sim = cosine_similarity(&e.embed("push_back").unwrap(), &e.embed("pushFront").unwrap()).unwrap();
        assert!((sim - 0.5).abs() < 1e-6, "{sim}");
    }

    #[test]
    fn case_and_separator_insensitive() {
        let e = SubtokenEmbedder::default();
        let sim = cosine_similarity(&e.embed("findByKeyword").unwrap(), &e.embed("find_by_keyword").unwrap()).unwrap();
        assert!((sim - 1.0).abs() < 1e-6);
    }

    fn code_like() -> impl Strategy<Value = String> {
        prop::collection::vec(
            prop_oneof![
                "[a-z]{1,8}",
                "[A-Z][a-z]{1,6}",
                Just("_".to_string()),
                Just(".".to_string()),
                Just("(".to_string()),
                Just(" ".to_string()),
                Just("\n".to_string()),
            ],
            1..40,
        )
        .prop_map(|parts| parts.concat())
    }

    proptest! {
        #[test]
        fn unit_norm_or_zero(text in code_like()) {
            let v = SubtokenEmbedder::default().embed(&text).unwrap();
            prop_assert!(v.is_zero() || (v.norm() - 1.0).abs() <= NORM_TOLERANCE);
        }

        #[test]
        fn deterministic(text in code_like()) {
            let e = SubtokenEmbedder::default();
            prop_assert_eq!(e.embed(&text).unwrap(), e.embed(&text).unwrap());
        }

        #[test]
        fn self_similarity_is_one(text in code_like()) {
            let e = SubtokenEmbedder::default();
            let v = e.embed(&text).unwrap();
            prop_assume!(!v.is_zero());
            prop_assert!((cosine_similarity(&v, &v).unwrap() - 1.0).abs() < 1e-9);
        }

        #[test]
        fn duplicated_content_stays_close(text in code_like()) {
            let e = SubtokenEmbedder::default();
            let once = e.embed(&text).unwrap();
            prop_assume!(!once.is_zero());
            // Joined by a newline so the copy does not fuse with the original's last word.
            let twice = e.embed(&format!("{text}\n{text}")).unwrap();
            prop_assert!(cosine_similarity(&once, &twice).unwrap() >= 0.99);
        }
    }
}
