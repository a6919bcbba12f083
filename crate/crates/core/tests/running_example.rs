//! The running example project on disk: extraction, persistence and the
//! three-step grounding progression.

use std::path::{Path, PathBuf};

use apiground::catalog::{index_project, ApiIndex, IndexOptions};
use apiground::embed::SubtokenEmbedder;
use apiground::generate::{rank_completions, run_loop, Grounding, LoopConfig};
use apiground::index::IndexConfig;
use apiground::llm::ScriptedLlm;
use apiground::project::scan_project;
use apiground::prompt::PromptMode;
use apiground::tokens::SubtokenCounter;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn index() -> ApiIndex {
    let project = scan_project(&fixture("running_example/project"), None).unwrap();
    index_project(&project, &SubtokenEmbedder::default(), &IndexOptions::default()).unwrap().0
}

#[test]
fn extracts_the_four_reference_kinds() {
    let idx = index();
    let lines: Vec<&str> = (0..idx.len()).map(|i| idx.rendered(i as _)).collect();
    for want in [
        "DataStore.find_by_keyword(self, keyword: str) -> List[str]",
        "relevance(document: str, keyword: str) -> float # Score how relevant a document is to a keyword.",
        "class DataStore()",
        "DataStore.documents",
    ] {
        assert!(lines.contains(&want), "missing `{want}` in {lines:?}");
    }
}

#[test]
fn persisted_index_answers_like_the_built_one() {
    let idx = index();
    let dir = tempfile::tempdir().unwrap();
    idx.save(dir.path()).unwrap();
    let loaded = ApiIndex::load(dir.path(), IndexConfig::default()).unwrap();
    assert!(loaded.references().eq(idx.references()));
    assert_eq!(loaded.manifest().file_digests.len(), 2);
}

#[test]
fn mock_fixture_replays_the_progression() {
    let idx = index();
    let llm = ScriptedLlm::load(&fixture("mocks/running_example.json")).unwrap();
    let context = std::fs::read_to_string(fixture("running_example/UI.py")).unwrap();
    let g = Grounding {
        index: &idx,
        embedder: &SubtokenEmbedder::default(),
        llm: &llm,
        cache: None,
        counter: &SubtokenCounter,
    };
    let config = LoopConfig {
        k: 1,
        n: 1,
        ..LoopConfig::default()
    };
    let trace = run_loop(&context, &g, &config).unwrap();
    let modes: Vec<_> = trace.steps.iter().map(|s| s.mode).collect();
    assert_eq!(modes, [PromptMode::Initial, PromptMode::Rag, PromptMode::Iterative]);
    assert!(trace.steps[0].completions[0].contains("x.score"));
    assert!(trace.steps[1].prompt.text.contains("# DataStore.find_by_keyword(self, keyword: str) -> List[str]"));
    assert!(trace.steps[2].prompt.text.contains("# relevance(document: str, keyword: str) -> float"));
    let best = &rank_completions(&trace)[0];
    assert!(best.contains("relevance(") && !best.contains("x.score"));
}
