//! Completion tasks built from a project and the metrics used to score them.

mod metrics;
mod outcomes;
mod tasks;

pub use metrics::{
    best_at_k, best_scores, edit_distance, exact_api_match, levenshtein, normalized_edit_similarity,
    prediction_for, subtokenize, BestScores, Metric, ScoreReport,
};
pub use outcomes::{count_from_percentage, tally_refinement_outcomes, OutcomeCounters, OutcomeRecord, TestStatus};
pub use tasks::{build_tasks, candidate_tasks, CompletionTask, TaskSet};

use serde::{Deserialize, Serialize};

use crate::generate::GenerationTrace;
use crate::prompt::PromptMode;
use crate::Result;

/// Scores of one task per prompt type. A row takes the best completion over
/// every step up to and including its prompt type, so each row is at least
/// as good as the one before it and a missing step (e.g. no RAG step for an
/// empty index) leaves the row equal to its predecessor. A row is `None` only
/// when no step up to it produced a completion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskScores {
    pub initial: Option<BestScores>,
    pub rag: Option<BestScores>,
    pub iterative: Option<BestScores>,
}

fn stage(mode: PromptMode) -> u8 {
    match mode {
        PromptMode::Initial => 0,
        PromptMode::Rag => 1,
        PromptMode::Iterative => 2,
    }
}

fn best_up_to(trace: &GenerationTrace, row: PromptMode, truth: &str) -> Result<Option<BestScores>> {
    let predictions: Vec<String> = trace
        .steps
        .iter()
        .filter(|s| stage(s.mode) <= stage(row))
        .flat_map(|s| s.completions.iter().map(|c| prediction_for(c, truth)))
        .collect();
    if predictions.is_empty() {
        return Ok(None);
    }
    best_scores(&predictions, truth).map(Some)
}

pub fn score_trace(trace: &GenerationTrace, truth: &str) -> Result<TaskScores> {
    Ok(TaskScores {
        initial: best_up_to(trace, PromptMode::Initial, truth)?,
        rag: best_up_to(trace, PromptMode::Rag, truth)?,
        iterative: best_up_to(trace, PromptMode::Iterative, truth)?,
    })
}

/// Mean of each metric over the tasks that have a score for the row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub tasks: usize,
    pub mean_edit_distance: f64,
    pub mean_edit_similarity: f64,
    pub mean_api_recall: f64,
}

pub fn aggregate<'a>(rows: impl IntoIterator<Item = &'a BestScores>) -> Option<Aggregate> {
    let (mut n, mut ed, mut sim, mut recall) = (0usize, 0.0, 0.0, 0.0);
    for r in rows {
        n += 1;
        ed += r.edit_distance as f64;
        sim += r.normalized_edit_similarity;
        recall += r.api_recall;
    }
    (n > 0).then(|| Aggregate {
        tasks: n,
        mean_edit_distance: ed / n as f64,
        mean_edit_similarity: sim / n as f64,
        mean_api_recall: recall / n as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Step;
    use crate::prompt::{Placement, PromptSpec};
    use crate::retrieve::{RetrievalMode, RetrievalResult};

    fn step(mode: PromptMode, completion: &str) -> Step {
        Step {
            mode,
            retrieval_input: None,
            retrieved: RetrievalResult::empty(RetrievalMode::PerLine),
            prompt: PromptSpec {
                mode,
                placement: Placement::Prepend,
                reference_block: Vec::new(),
                dropped_refs: 0,
                code_context: String::new(),
                truncated_lines: 0,
                budget_tokens: 10,
                token_count: 0,
                text: String::new(),
            },
            completions: vec![completion.to_string()],
            model_called: true,
            error: None,
        }
    }

    fn trace(steps: Vec<Step>) -> GenerationTrace {
        GenerationTrace {
            k: steps.len().saturating_sub(2),
            steps,
            n: 1,
            token_cap: 10,
            llm_calls: 0,
        }
    }

    const TRUTH: &str = "  y = f(a)\n";

    #[test]
    fn rows_are_best_so_far() {
        let t = trace(vec![
            step(PromptMode::Initial, "  y = g(a)\n"),
            step(PromptMode::Rag, "  y = h(b, c)\n"),
            step(PromptMode::Iterative, TRUTH),
        ]);
        let s = score_trace(&t, TRUTH).unwrap();
        let (i, r, it) = (s.initial.unwrap(), s.rag.unwrap(), s.iterative.unwrap());
        assert_eq!(i.edit_distance, 1);
        // The RAG completion is worse than the initial one, so the row keeps the initial score.
        assert_eq!(r, i);
        assert_eq!(it.edit_distance, 0);
        assert_eq!(it.api_recall, 1.0);
    }

    #[test]
    fn missing_steps_repeat_the_previous_row() {
        let t = trace(vec![step(PromptMode::Initial, "  y = g(a)\n")]);
        let s = score_trace(&t, TRUTH).unwrap();
        assert_eq!(s.rag, s.initial);
        assert_eq!(s.iterative, s.initial);
        assert!(score_trace(&trace(vec![]), TRUTH).unwrap().initial.is_none());
    }

    #[test]
    fn aggregate_means() {
        let rows = [
            BestScores { edit_distance: 2, normalized_edit_similarity: 0.5, api_recall: 0.0 },
            BestScores { edit_distance: 0, normalized_edit_similarity: 1.0, api_recall: 1.0 },
        ];
        let a = aggregate(&rows).unwrap();
        assert_eq!((a.tasks, a.mean_edit_distance, a.mean_edit_similarity, a.mean_api_recall), (2, 1.0, 0.75, 0.5));
        assert!(aggregate(&[]).is_none());
    }
}
