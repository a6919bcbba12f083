//! Retrieval of the API references most similar to a piece of code.
//!
//! The code is split into retrieval units (lines or call usages). Every unit
//! is embedded and queried for its own top `n`; the candidate lists are merged
//! keeping each reference once at its highest similarity, ranked by
//! similarity descending and ref id ascending, and cut to `n`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::ApiIndex;
use crate::embed::Embedder;
use crate::error::{Error, Result};
use crate::index::{rank_order, Neighbor, RefId};
use crate::usage::extract_api_usages;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RetrievalMode {
    PerLine,
    PerUsage,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievedRef {
    pub ref_id: RefId,
    /// Rendered reference line.
    pub line: String,
    pub similarity: f64,
    /// The retrieval unit that produced the highest similarity (first such unit on ties).
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalResult {
    pub mode: RetrievalMode,
    pub refs: Vec<RetrievedRef>,
}

impl RetrievalResult {
    pub fn empty(mode: RetrievalMode) -> Self {
        RetrievalResult { mode, refs: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.refs.is_empty()
    }

    pub fn lines(&self) -> impl Iterator<Item = &str> {
        self.refs.iter().map(|r| r.line.as_str())
    }
}

/// Whether a line carries no behavior worth grounding: blank, comment-only or
/// an import.
pub fn is_skipped_line(line: &str) -> bool {
    let t = line.trim();
    t.is_empty()
        || t.starts_with('#')
        || t.starts_with("//")
        || t.starts_with("/*")
        || t.starts_with("*")
        || is_import_line(t)
}

/// Python `import`/`from … import`, JavaScript `import` and `require(` lines.
pub fn is_import_line(line: &str) -> bool {
    let t = line.trim_start();
    t.starts_with("import ")
        || t.starts_with("import{")
        || (t.starts_with("from ") && t.contains(" import"))
        || t.contains("require(")
}

/// The retrieval units of `code` in textual order.
pub fn retrieval_units(code: &str, mode: RetrievalMode) -> Vec<String> {
    match mode {
        RetrievalMode::PerLine => code
            .lines()
            .filter(|l| !is_skipped_line(l))
            .map(|l| l.trim().to_string())
            .collect(),
        RetrievalMode::PerUsage => {
            let kept: Vec<&str> = code.lines().filter(|l| !is_import_line(l)).collect();
            extract_api_usages(&kept.join("\n"))
                .iter()
                .map(|u| u.call_text())
                .collect()
        }
    }
}

pub fn retrieve(code: &str, index: &ApiIndex, embedder: &dyn Embedder, n: usize, mode: RetrievalMode) -> Result<RetrievalResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    index.check_embedder(embedder)?;
    if index.is_empty() {
        return Ok(RetrievalResult::empty(mode));
    }
    let units = retrieval_units(code, mode);
    let per_unit: Vec<Vec<Neighbor>> = units
        .par_iter()
        .map(|unit| {
            let query = embedder.embed(unit)?;
            Ok(index.search().nearest(&query, n)?.neighbors)
        })
        .collect::<Result<_>>()?;

    let merged = merge(&per_unit, n);
    Ok(RetrievalResult {
        mode,
        refs: merged
            .into_iter()
            .map(|(nb, unit)| RetrievedRef {
                ref_id: nb.ref_id,
                line: index.rendered(nb.ref_id).to_string(),
                similarity: nb.similarity,
                source: units[unit].clone(),
            })
            .collect(),
    })
}

pub fn retrieve_per_line(code: &str, index: &ApiIndex, embedder: &dyn Embedder, n: usize) -> Result<RetrievalResult> {
    retrieve(code, index, embedder, n, RetrievalMode::PerLine)
}

pub fn retrieve_per_usage(code: &str, index: &ApiIndex, embedder: &dyn Embedder, n: usize) -> Result<RetrievalResult> {
    retrieve(code, index, embedder, n, RetrievalMode::PerUsage)
}

/// Global top `n` over per-unit candidate lists, each reference kept once at
/// its maximum similarity. Returns the neighbor and the index of its unit.
pub fn merge(per_unit: &[Vec<Neighbor>], n: usize) -> Vec<(Neighbor, usize)> {
    let mut best: HashMap<RefId, (Neighbor, usize)> = HashMap::new();
    for (unit, list) in per_unit.iter().enumerate() {
        for nb in list {
            best.entry(nb.ref_id)
                .and_modify(|cur| {
                    if nb.similarity > cur.0.similarity {
                        *cur = (*nb, unit);
                    }
                })
                .or_insert((*nb, unit));
        }
    }
    let mut all: Vec<(Neighbor, usize)> = best.into_values().collect();
    all.sort_by(|a, b| rank_order(&a.0, &b.0));
    all.truncate(n);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::IndexOptions;
    use crate::embed::{cosine_similarity, SubtokenEmbedder};
    use crate::extract::Language;
    use crate::reference::{ApiReference, Param, RenderOptions, render_reference};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn table_refs() -> Vec<ApiReference> {
        vec![
            ApiReference::function("DataStore.find_by_keyword", "DataStore.py")
                .with_params(vec![Param::named("self"), Param::typed("keyword", "str")])
                .with_return("List[str]"),
            ApiReference::class("DataStore", "DataStore.py"),
            ApiReference::attribute("DataStore.documents", "DataStore.py"),
            ApiReference::function("relevance", "utils.py")
                .with_params(vec![Param::typed("document", "str"), Param::typed("keyword", "str")])
                .with_return("float"),
        ]
    }

    fn build(refs: Vec<ApiReference>) -> ApiIndex {
        ApiIndex::build(refs, Language::Python, &SubtokenEmbedder::default(), BTreeMap::new(), &IndexOptions::default())
            .unwrap()
            .0
    }

    const COMPLETION_BODY: &str =
        "  docs = ds.find_by_keyword(keyword)\n  return sorted(docs, key=lambda x: x.score, reverse=True)[:top_k]";

    #[test]
    fn per_line_ranking_matches_hand_computed_similarities() {
        let e = SubtokenEmbedder::default();
        let idx = build(table_refs());
        let got = retrieve_per_line(COMPLETION_BODY, &idx, &e, 4).unwrap();
        // Oracle: per reference, the maximum cosine over the two lines, computed
        // directly from the embedder; then ranked descending.
        let lines: Vec<&str> = COMPLETION_BODY.lines().map(str::trim).collect();
        let mut oracle: Vec<(String, f64)> = table_refs()
            .iter()
            .map(|r| {
                let text = render_reference(r, &RenderOptions::default());
                let v = e.embed(&text).unwrap();
                let best = lines
                    .iter()
                    .map(|l| cosine_similarity(&e.embed(l).unwrap(), &v).unwrap())
                    .fold(f64::MIN, f64::max);
                (text, best)
            })
            .collect();
        oracle.sort_by(|a, b| b.1.total_cmp(&a.1));
        assert_eq!(got.refs[0].line, "DataStore.find_by_keyword(self, keyword: str) -> List[str]");
        assert_eq!(got.refs[0].line, oracle[0].0);
        assert!((got.refs[0].similarity - oracle[0].1).abs() < 1e-6);
        assert_eq!(got.refs[0].source, lines[0]);
        // Shared subtokens {ds?no, find, by, keyword}: 3 of the reference's weighted terms.
        assert!(got.refs[0].similarity > 0.4);
    }

    #[test]
    fn exact_text_hits_first_with_similarity_one() {
        let e = SubtokenEmbedder::default();
        let idx = build(table_refs());
        let code = "x = 1\nrelevance(document: str, keyword: str) -> float\n";
        let got = retrieve_per_line(code, &idx, &e, 2).unwrap();
        assert_eq!(got.refs[0].line, "relevance(document: str, keyword: str) -> float");
        assert!((got.refs[0].similarity - 1.0).abs() < 1e-6);
    }

    #[test]
    fn n_one_is_global_best() {
        let e = SubtokenEmbedder::default();
        let idx = build(table_refs());
        let all = retrieve_per_line(COMPLETION_BODY, &idx, &e, 10).unwrap();
        let one = retrieve_per_line(COMPLETION_BODY, &idx, &e, 1).unwrap();
        assert_eq!(one.refs.len(), 1);
        assert_eq!(one.refs[0], all.refs[0]);
    }

    #[test]
    fn empty_index_and_blank_input() {
        let e = SubtokenEmbedder::default();
        assert!(retrieve_per_line("foo()", &build(vec![]), &e, 3).unwrap().is_empty());
        assert!(retrieve_per_line("  \n# note\nimport os\n", &build(table_refs()), &e, 3).unwrap().is_empty());
        assert!(retrieve_per_usage("let x = 5;", &build(table_refs()), &e, 3).unwrap().is_empty());
    }

    #[test]
    fn duplicated_usage_equals_single() {
        let e = SubtokenEmbedder::default();
        let idx = build(table_refs());
        let once = retrieve_per_usage("ds.find_by_keyword(k)", &idx, &e, 3).unwrap();
        let twice = retrieve_per_usage("ds.find_by_keyword(k)\nds.find_by_keyword(k)", &idx, &e, 3).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn per_usage_finds_push_front_family() {
        let refs = vec![
            ApiReference::function("js-sdsl.Deque.prototype.pushFront", "Deque.js").with_params(vec![Param::named("t")]),
            ApiReference::function("js-sdsl.Deque.prototype.front", "Deque.js"),
            ApiReference::function("js-sdsl.Vector.prototype.clear", "Vector.js"),
            ApiReference::function("js-sdsl.OrderedMap.prototype.find", "Map.js").with_params(vec![Param::named("key")]),
        ];
        let e = SubtokenEmbedder::default();
        let idx = build(refs);
        let got = retrieve_per_usage("deque.push_back(6)", &idx, &e, 2).unwrap();
        let lines: Vec<&str> = got.lines().collect();
        // {deque, push, back, 6} shares deque and push with pushFront, deque with front.
        assert_eq!(lines[0], "js-sdsl.Deque.prototype.pushFront(t)");
        assert_eq!(lines[1], "js-sdsl.Deque.prototype.front()");
    }

    #[test]
    fn mismatched_embedder_is_rejected() {
        let idx = build(table_refs());
        assert!(matches!(
            retrieve_per_line("x", &idx, &SubtokenEmbedder::new(32), 1),
            Err(Error::Incompatible { .. })
        ));
    }

    // Brute-force oracle: flatten all candidates, keep max per id, sort, cut.
    fn merge_oracle(per_unit: &[Vec<Neighbor>], n: usize) -> Vec<(RefId, f64)> {
        let mut flat: Vec<(RefId, f64)> = per_unit.iter().flatten().map(|nb| (nb.ref_id, nb.similarity)).collect();
        flat.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut out: Vec<(RefId, f64)> = Vec::new();
        for (id, s) in flat {
            if !out.iter().any(|(i, _)| *i == id) {
                out.push((id, s));
            }
        }
        out.truncate(n);
        out
    }

    proptest! {
        #[test]
        fn merge_is_global_top_n(
            lists in prop::collection::vec(
                prop::collection::vec((0u32..12, 0u8..10), 0..8), 0..6),
            n in 1usize..10,
        ) {
            let per_unit: Vec<Vec<Neighbor>> = lists.iter().map(|l| l.iter().map(|&(id, s)| Neighbor {
                ref_id: id, similarity: f64::from(s) / 10.0,
            }).collect()).collect();
            let got: Vec<(RefId, f64)> = merge(&per_unit, n).into_iter().map(|(nb, _)| (nb.ref_id, nb.similarity)).collect();
            prop_assert_eq!(got, merge_oracle(&per_unit, n));
        }

        #[test]
        fn line_order_does_not_change_ranking(seed in 0u64..1000) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let e = SubtokenEmbedder::default();
            let idx = build(table_refs());
            let mut lines = [
                "docs = ds.find_by_keyword(keyword)",
                "return sorted(docs, key=lambda d: relevance(d, keyword))",
                "store = DataStore(path)",
                "print(store.documents)",
            ];
            let base = retrieve_per_line(&lines.join("\n"), &idx, &e, 3).unwrap();
            lines.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let shuffled = retrieve_per_line(&lines.join("\n"), &idx, &e, 3).unwrap();
            let strip = |r: &RetrievalResult| r.refs.iter().map(|x| (x.ref_id, x.similarity)).collect::<Vec<_>>();
            prop_assert_eq!(strip(&base), strip(&shuffled));
        }
    }
}
