//! The grounding loop: query with the bare context, then with references
//! retrieved from the context, then repeatedly with references retrieved from
//! the model's own previous completion.

use serde::{Deserialize, Serialize};

use crate::catalog::ApiIndex;
use crate::embed::Embedder;
use crate::error::Result;
use crate::llm::{query, LanguageModel, LlmRequest, ResponseCache, DEFAULT_MAX_NEW_TOKENS};
use crate::prompt::{build_prompt, context_section_end, Placement, PromptMode, PromptOptions, PromptSpec, DEFAULT_BUDGET, DEFAULT_REFERENCE_SHARE};
use crate::retrieve::{retrieve, RetrievalMode, RetrievalResult};
use crate::tokens::TokenCounter;

pub const DEFAULT_K: usize = 3;
pub const DEFAULT_N_COMPLETION: usize = 20;
pub const DEFAULT_N_REFINEMENT: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoopConfig {
    /// Iterative steps after the Initial and RAG steps.
    pub k: usize,
    /// References per prompt.
    pub n: usize,
    pub placement: Placement,
    pub comment_prefix: String,
    pub budget: usize,
    pub reference_share: f64,
    pub max_new_tokens: u32,
    pub temperature: f64,
    pub num_completions: u32,
}

impl Default for LoopConfig {
    fn default() -> Self {
        LoopConfig {
            k: DEFAULT_K,
            n: DEFAULT_N_COMPLETION,
            placement: Placement::Prepend,
            comment_prefix: "# ".into(),
            budget: DEFAULT_BUDGET,
            reference_share: DEFAULT_REFERENCE_SHARE,
            max_new_tokens: DEFAULT_MAX_NEW_TOKENS,
            temperature: 0.0,
            num_completions: 1,
        }
    }
}

impl LoopConfig {
    /// Defaults for failure-triggered refinement of generated tests.
    pub fn refinement() -> Self {
        LoopConfig {
            n: DEFAULT_N_REFINEMENT,
            placement: Placement::Append,
            comment_prefix: "// ".into(),
            ..LoopConfig::default()
        }
    }

    fn prompt_options(&self) -> PromptOptions<'_> {
        PromptOptions {
            placement: self.placement,
            comment_prefix: &self.comment_prefix,
            budget: self.budget,
            reference_share: self.reference_share,
        }
    }

    fn request(&self, prompt: &str) -> LlmRequest {
        LlmRequest {
            prompt: prompt.to_string(),
            max_new_tokens: self.max_new_tokens,
            temperature: self.temperature,
            num_completions: self.num_completions,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub mode: PromptMode,
    /// Text the references were retrieved from; absent for Initial steps.
    pub retrieval_input: Option<String>,
    pub retrieved: RetrievalResult,
    pub prompt: PromptSpec,
    pub completions: Vec<String>,
    /// Whether the model was called (false when answered from the cache or failed).
    pub model_called: bool,
    /// Failure message when the model call failed.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationTrace {
    pub steps: Vec<Step>,
    pub k: usize,
    pub n: usize,
    pub token_cap: usize,
    /// Model calls issued, cache hits excluded.
    pub llm_calls: usize,
}

impl GenerationTrace {
    fn new(config: &LoopConfig) -> Self {
        GenerationTrace {
            steps: Vec::new(),
            k: config.k,
            n: config.n,
            token_cap: config.budget,
            llm_calls: 0,
        }
    }

    /// First completion of the latest step that produced any.
    pub fn latest_completion(&self) -> Option<&str> {
        self.steps.iter().rev().find_map(|s| s.completions.first().map(String::as_str))
    }
}

/// Shared, read-only inputs of a loop.
#[derive(Clone, Copy)]
pub struct Grounding<'a> {
    pub index: &'a ApiIndex,
    pub embedder: &'a dyn Embedder,
    pub llm: &'a dyn LanguageModel,
    pub cache: Option<&'a ResponseCache>,
    pub counter: &'a dyn TokenCounter,
}

impl Grounding<'_> {
    fn step(
        &self,
        trace: &mut GenerationTrace,
        config: &LoopConfig,
        mode: PromptMode,
        context: &str,
        retrieval_input: Option<String>,
        retrieved: RetrievalResult,
    ) -> Result<()> {
        let lines: Vec<String> = retrieved.lines().map(str::to_string).collect();
        let prompt = build_prompt(context, &lines, mode, &config.prompt_options(), self.counter)?;
        let (completions, model_called, error) = match query(self.llm, self.cache, &config.request(&prompt.text)) {
            Ok((response, called)) => (response.completions, called, None),
            Err(e) => (Vec::new(), false, Some(e.to_string())),
        };
        // A failed call still counts against the query budget.
        if model_called || error.is_some() {
            trace.llm_calls += 1;
        }
        trace.steps.push(Step {
            mode,
            retrieval_input,
            retrieved,
            prompt,
            completions,
            model_called,
            error,
        });
        Ok(())
    }
}

/// Runs Initial, RAG and `k` Iterative steps for `code_context`.
///
/// An empty index yields only the Initial step. Each Iterative step retrieves
/// from the first completion of the previous step; when that step failed, the
/// latest available completion is used, and the context when there is none.
pub fn run_loop(code_context: &str, grounding: &Grounding<'_>, config: &LoopConfig) -> Result<GenerationTrace> {
    let mut trace = GenerationTrace::new(config);
    grounding.step(
        &mut trace,
        config,
        PromptMode::Initial,
        code_context,
        None,
        RetrievalResult::empty(RetrievalMode::PerLine),
    )?;
    if grounding.index.is_empty() {
        return Ok(trace);
    }

    let rag = retrieve(code_context, grounding.index, grounding.embedder, config.n, RetrievalMode::PerLine)?;
    grounding.step(&mut trace, config, PromptMode::Rag, code_context, Some(code_context.to_string()), rag)?;

    for _ in 0..config.k {
        let input = trace
            .steps
            .last()
            .and_then(|s| s.completions.first().cloned())
            .or_else(|| trace.latest_completion().map(str::to_string))
            .unwrap_or_else(|| code_context.to_string());
        let refs = retrieve(&input, grounding.index, grounding.embedder, config.n, RetrievalMode::PerLine)?;
        grounding.step(&mut trace, config, PromptMode::Iterative, code_context, Some(input), refs)?;
    }
    Ok(trace)
}

/// All completions, later steps first, each distinct text once at its first
/// position.
pub fn rank_completions(trace: &GenerationTrace) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for step in trace.steps.iter().rev() {
        for c in &step.completions {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
    }
    out
}

/// Runtime errors that point at a non-existent API.
pub fn detect_hallucination_error(message: &str) -> bool {
    message.contains("is not a function") || message.contains("of undefined")
}

/// The prompt a failing generated test came from: its leading context section
/// and everything up to and including the line opening the first test case.
pub fn refinement_context(artifact: &str) -> String {
    let section = context_section_end(artifact);
    let mut end = section;
    for line in artifact[section..].split_inclusive('\n') {
        end += line.len();
        let t = line.trim_start();
        if t.starts_with("it(") || t.starts_with("test(") || t.starts_with("def test") || t.starts_with("async def test") {
            break;
        }
    }
    artifact[..end].to_string()
}

/// Failure-triggered refinement: when `error_message` indicates a
/// hallucinated API, up to `k` Iterative steps are run whose references are
/// retrieved per usage from the failing artifact and then from each new
/// completion, appended after the context section of the artifact's prompt.
///
/// Returns an empty trace when the gate is closed or the index is empty.
pub fn run_refinement_on_failure(
    artifact: &str,
    error_message: &str,
    grounding: &Grounding<'_>,
    config: &LoopConfig,
) -> Result<GenerationTrace> {
    let mut trace = GenerationTrace::new(config);
    if !detect_hallucination_error(error_message) || grounding.index.is_empty() {
        return Ok(trace);
    }
    let context = refinement_context(artifact);
    let mut input = artifact.to_string();
    for _ in 0..config.k {
        let refs = retrieve(&input, grounding.index, grounding.embedder, config.n, RetrievalMode::PerUsage)?;
        grounding.step(&mut trace, config, PromptMode::Iterative, &context, Some(input.clone()), refs)?;
        if let Some(next) = trace.steps.last().and_then(|s| s.completions.first()) {
            input = next.clone();
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::IndexOptions;
    use crate::embed::SubtokenEmbedder;
    use crate::extract::Language;
    use crate::llm::{ScriptRule, ScriptedLlm};
    use crate::reference::{ApiReference, Param};
    use crate::tokens::SubtokenCounter;
    use std::collections::BTreeMap;

    const CONTEXT: &str = "def search(ds: DataStore, keyword: str, top_k: int) -> List[str]:\n  docs = ds.find_by_keyword(keyword)\n";
    const HALLUCINATED: &str = "  return sorted(docs, key=lambda x: x.score, reverse=True)[:top_k]\n";
    const CORRECT: &str = "  return sorted(docs, key=lambda doc: relevance(keyword, doc), reverse=True)[:top_k]\n";

    fn index(refs: Vec<ApiReference>) -> ApiIndex {
        ApiIndex::build(refs, Language::Python, &SubtokenEmbedder::default(), BTreeMap::new(), &IndexOptions::default())
            .unwrap()
            .0
    }

    fn running_example() -> ApiIndex {
        index(vec![
            ApiReference::function("DataStore.find_by_keyword", "DataStore.py")
                .with_params(vec![Param::named("self"), Param::typed("keyword", "str")])
                .with_return("List[str]"),
            ApiReference::class("DataStore", "DataStore.py"),
            ApiReference::attribute("DataStore.documents", "DataStore.py"),
            ApiReference::function("relevance", "utils.py")
                .with_params(vec![Param::typed("document", "str"), Param::typed("keyword", "str")])
                .with_return("float")
                .with_docstring("Score how relevant a document is to a keyword."),
        ])
    }

    fn mock() -> ScriptedLlm {
        ScriptedLlm::new(
            "running-example",
            vec![ScriptRule {
                if_contains: vec!["# relevance(document: str, keyword: str) -> float".into()],
                unless_contains: vec![],
                completions: vec![CORRECT.into()],
                error: None,
            }],
            vec![HALLUCINATED.into()],
        )
    }

    fn config(k: usize, n: usize) -> LoopConfig {
        LoopConfig {
            k,
            n,
            ..LoopConfig::default()
        }
    }

    #[test]
    fn reproduces_the_three_step_progression() {
        let idx = running_example();
        let llm = mock();
        let g = Grounding {
            index: &idx,
            embedder: &SubtokenEmbedder::default(),
            llm: &llm,
            cache: None,
            counter: &SubtokenCounter,
        };
        let trace = run_loop(CONTEXT, &g, &config(1, 1)).unwrap();
        let modes: Vec<_> = trace.steps.iter().map(|s| s.mode).collect();
        assert_eq!(modes, [PromptMode::Initial, PromptMode::Rag, PromptMode::Iterative]);
        assert_eq!(trace.steps[0].prompt.text, CONTEXT);
        assert!(trace.steps[0].completions[0].contains("x.score"));
        assert_eq!(trace.steps[1].retrieved.refs[0].line, "DataStore.find_by_keyword(self, keyword: str) -> List[str]");
        assert!(trace.steps[1].completions[0].contains("x.score"));
        assert_eq!(trace.steps[2].retrieval_input.as_deref(), Some(HALLUCINATED));
        assert!(trace.steps[2].prompt.text.starts_with("# API Reference:\n# relevance(document: str, keyword: str) -> float"));
        let best = &rank_completions(&trace)[0];
        assert!(best.contains("relevance(") && !best.contains("x.score"));
        assert_eq!(trace.llm_calls, 3);
    }

    #[test]
    fn empty_index_is_initial_only() {
        let idx = index(vec![]);
        let llm = mock();
        let g = Grounding {
            index: &idx,
            embedder: &SubtokenEmbedder::default(),
            llm: &llm,
            cache: None,
            counter: &SubtokenCounter,
        };
        let trace = run_loop(CONTEXT, &g, &config(0, 1)).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(rank_completions(&trace), [HALLUCINATED]);
    }

    #[test]
    fn call_count_is_two_plus_k() {
        let idx = running_example();
        for k in 0..4 {
            let llm = mock();
            let g = Grounding {
                index: &idx,
                embedder: &SubtokenEmbedder::default(),
                llm: &llm,
                cache: None,
                counter: &SubtokenCounter,
            };
            let trace = run_loop(CONTEXT, &g, &config(k, 2)).unwrap();
            assert_eq!(llm.calls(), 2 + k);
            assert_eq!(trace.steps.len(), 2 + k);
        }
    }

    #[test]
    fn cached_rerun_issues_no_calls() {
        let idx = running_example();
        let llm = mock();
        let cache = ResponseCache::in_memory();
        let g = Grounding {
            index: &idx,
            embedder: &SubtokenEmbedder::default(),
            llm: &llm,
            cache: Some(&cache),
            counter: &SubtokenCounter,
        };
        let first = run_loop(CONTEXT, &g, &config(2, 1)).unwrap();
        let calls = llm.calls();
        let second = run_loop(CONTEXT, &g, &config(2, 1)).unwrap();
        assert_eq!(llm.calls(), calls);
        assert_eq!(second.llm_calls, 0);
        assert_eq!(rank_completions(&first), rank_completions(&second));
        let strip = |t: &GenerationTrace| t.steps.iter().map(|s| (s.prompt.text.clone(), s.completions.clone())).collect::<Vec<_>>();
        assert_eq!(strip(&first), strip(&second));
    }

    #[test]
    fn failed_step_is_recorded_and_loop_continues() {
        let idx = running_example();
        let llm = ScriptedLlm::new(
            "flaky",
            vec![ScriptRule {
                if_contains: vec!["# API Reference:\n# DataStore.find_by_keyword".into()],
                unless_contains: vec![],
                completions: vec![],
                error: Some("connection reset".into()),
            }],
            vec![HALLUCINATED.into()],
        );
        let g = Grounding {
            index: &idx,
            embedder: &SubtokenEmbedder::default(),
            llm: &llm,
            cache: None,
            counter: &SubtokenCounter,
        };
        let trace = run_loop(CONTEXT, &g, &config(1, 1)).unwrap();
        assert_eq!(trace.steps.len(), 3);
        assert!(trace.steps[1].error.is_some());
        // Falls back to the Initial completion.
        assert_eq!(trace.steps[2].retrieval_input.as_deref(), Some(HALLUCINATED));
        assert_eq!(trace.llm_calls, 3);
    }

    #[test]
    fn ranking_by_recency_with_dedup() {
        let step = |mode, c: &[&str]| Step {
            mode,
            retrieval_input: None,
            retrieved: RetrievalResult::empty(RetrievalMode::PerLine),
            prompt: build_prompt("x\n", &[], PromptMode::Initial, &PromptOptions::default(), &SubtokenCounter).unwrap(),
            completions: c.iter().map(|s| s.to_string()).collect(),
            model_called: true,
            error: None,
        };
        let mut trace = GenerationTrace::new(&LoopConfig::default());
        trace.steps = vec![
            step(PromptMode::Initial, &["A"]),
            step(PromptMode::Rag, &["B"]),
            step(PromptMode::Iterative, &["C"]),
        ];
        assert_eq!(rank_completions(&trace), ["C", "B", "A"]);
        trace.steps[0].completions = vec!["C".into(), "D".into()];
        assert_eq!(rank_completions(&trace), ["C", "B", "D"]);
        trace.steps.truncate(1);
        assert_eq!(rank_completions(&trace), ["C", "D"]);
    }

    #[test]
    fn hallucination_gate() {
        assert!(detect_hallucination_error("TypeError: deque.push_back is not a function"));
        assert!(detect_hallucination_error("Cannot read properties of undefined (reading 'size')"));
        assert!(!detect_hallucination_error("AssertionError: expected 5 to equal 6"));
        assert!(!detect_hallucination_error("X IS NOT A FUNCTION"));
    }

    const FAILING_TEST: &str = "let mocha = require('mocha');\nlet assert = require('assert');\nlet js_sdsl = require('js-sdsl');\n// class js-sdsl.Deque(t = [], i = 1 << 12)\ndescribe('test js_sdsl', function() {\n    it('test js-sdsl.Deque', function(done) {\n        let deque = new js_sdsl.Deque([1, 2, 3, 4, 5]);\n        deque.push_back(6);\n        done();\n    })\n})\n";

    fn deque_index() -> ApiIndex {
        index(vec![
            ApiReference::class("js-sdsl.Deque", "Deque.js"),
            ApiReference::function("js-sdsl.Deque.prototype.pushFront", "Deque.js").with_params(vec![Param::named("t")]),
            ApiReference::function("js-sdsl.Deque.prototype.pushBack", "Deque.js").with_params(vec![Param::named("t")]),
            ApiReference::function("js-sdsl.Deque.prototype.front", "Deque.js"),
            ApiReference::function("js-sdsl.Vector.prototype.clear", "Vector.js"),
        ])
    }

    #[test]
    fn refinement_appends_references_after_context_section() {
        let idx = deque_index();
        let llm = ScriptedLlm::new("t", vec![], vec!["        deque.pushBack(6);\n".into()]);
        let g = Grounding {
            index: &idx,
            embedder: &SubtokenEmbedder::default(),
            llm: &llm,
            cache: None,
            counter: &SubtokenCounter,
        };
        let cfg = LoopConfig {
            k: 2,
            ..LoopConfig::refinement()
        };
        let trace = run_refinement_on_failure(FAILING_TEST, "TypeError: deque.push_back is not a function", &g, &cfg).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(llm.calls(), 2);
        let text = &trace.steps[0].prompt.text;
        assert!(text.contains("// class js-sdsl.Deque(t = [], i = 1 << 12)\n// API Reference:\n"), "{text}");
        assert!(text.contains("// js-sdsl.Deque.prototype.push"), "{text}");
        assert!(text.ends_with("    it('test js-sdsl.Deque', function(done) {\n"), "{text}");
        assert_eq!(trace.steps[0].prompt.reference_block.len(), 3);
    }

    #[test]
    fn refinement_gate_and_empty_index() {
        let llm = ScriptedLlm::new("t", vec![], vec!["x".into()]);
        let idx = deque_index();
        let empty = index(vec![]);
        for (index, msg) in [(&idx, "AssertionError: expected 5 to equal 6"), (&empty, "x is not a function")] {
            let g = Grounding {
                index,
                embedder: &SubtokenEmbedder::default(),
                llm: &llm,
                cache: None,
                counter: &SubtokenCounter,
            };
            let trace = run_refinement_on_failure(FAILING_TEST, msg, &g, &LoopConfig::refinement()).unwrap();
            assert!(trace.steps.is_empty());
        }
        assert_eq!(llm.calls(), 0);
    }
}
