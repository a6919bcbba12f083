use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{pieces, Piece};
use crate::usage::extract_api_usages;

/// Identifier subtokens and single punctuation characters; whitespace is
/// dropped. Concatenating the tokens gives the input without whitespace.
pub fn subtokenize(text: &str) -> Vec<&str> {
    pieces(text)
        .into_iter()
        .filter_map(|p| match p {
            Piece::Word(w) | Piece::Punct(w) => Some(w),
            Piece::Space(_) => None,
        })
        .collect()
}

/// Unit-cost Levenshtein distance between two sequences.
pub fn levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let substitute = prev[j] + usize::from(x != y);
            cur[j + 1] = substitute.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Levenshtein distance over subtokens.
pub fn edit_distance(pred: &str, truth: &str) -> usize {
    levenshtein(&subtokenize(pred), &subtokenize(truth))
}

/// `1 - ED / max(|pred|, |truth|)` over subtokens; 1 when both are empty.
pub fn normalized_edit_similarity(pred: &str, truth: &str) -> f64 {
    let (p, t) = (subtokenize(pred), subtokenize(truth));
    let longest = p.len().max(t.len());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(&p, &t) as f64 / longest as f64
}

/// Distinct ground-truth usages reproduced verbatim (path and
/// whitespace-normalized arguments) in the prediction, and their total.
pub fn exact_api_match(pred: &str, truth: &str) -> (usize, usize) {
    let predicted: HashSet<_> = extract_api_usages(pred).iter().map(|u| u.normalized()).collect();
    let wanted: HashSet<_> = extract_api_usages(truth).iter().map(|u| u.normalized()).collect();
    let matched = wanted.iter().filter(|u| predicted.contains(*u)).count();
    (matched, wanted.len())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub edit_distance: usize,
    pub normalized_edit_similarity: f64,
    pub exact_api_matches: (usize, usize),
    /// 1-based rank of the scored completion within the candidate list.
    pub best_rank: Option<usize>,
}

impl ScoreReport {
    pub fn score(pred: &str, truth: &str) -> ScoreReport {
        ScoreReport {
            edit_distance: edit_distance(pred, truth),
            normalized_edit_similarity: normalized_edit_similarity(pred, truth),
            exact_api_matches: exact_api_match(pred, truth),
            best_rank: None,
        }
    }

    /// matched / total, or 1 when there is nothing to match.
    pub fn api_recall(&self) -> f64 {
        let (m, t) = self.exact_api_matches;
        if t == 0 {
            1.0
        } else {
            m as f64 / t as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    EditDistance,
    EditSimilarity,
    ExactApiMatch,
}

impl Metric {
    /// Whether `a` is strictly better than `b` under this metric.
    fn better(self, a: &ScoreReport, b: &ScoreReport) -> bool {
        match self {
            Metric::EditDistance => a.edit_distance < b.edit_distance,
            Metric::EditSimilarity => a.normalized_edit_similarity > b.normalized_edit_similarity,
            Metric::ExactApiMatch => a.exact_api_matches.0 > b.exact_api_matches.0,
        }
    }
}

/// Scores every completion and returns the best one under `metric`, with
/// ties going to the lowest rank.
pub fn best_at_k(completions: &[String], truth: &str, metric: Metric) -> Result<ScoreReport> {
    let mut best: Option<ScoreReport> = None;
    for (i, c) in completions.iter().enumerate() {
        let mut report = ScoreReport::score(c, truth);
        report.best_rank = Some(i + 1);
        if best.as_ref().is_none_or(|b| metric.better(&report, b)) {
            best = Some(report);
        }
    }
    best.ok_or_else(|| Error::InvalidArgument("best@k needs at least one completion".into()))
}

/// Best value of each metric independently over the candidate list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestScores {
    pub edit_distance: usize,
    pub normalized_edit_similarity: f64,
    pub api_recall: f64,
}

pub fn best_scores(completions: &[String], truth: &str) -> Result<BestScores> {
    Ok(BestScores {
        edit_distance: best_at_k(completions, truth, Metric::EditDistance)?.edit_distance,
        normalized_edit_similarity: best_at_k(completions, truth, Metric::EditSimilarity)?.normalized_edit_similarity,
        api_recall: best_at_k(completions, truth, Metric::ExactApiMatch)?.api_recall(),
    })
}

/// The part of a completion compared with a ground truth of `truth` lines:
/// leading blank lines are skipped and as many lines as the truth has are kept.
pub fn prediction_for(completion: &str, truth: &str) -> String {
    let wanted = truth.trim_end_matches('\n').lines().count().max(1);
    let lines: Vec<&str> = completion
        .lines()
        .skip_while(|l| l.trim().is_empty())
        .take(wanted)
        .collect();
    let mut out = lines.join("\n");
    if !out.is_empty() && truth.ends_with('\n') {
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TRUTH: &str = "  return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]";
    const HALLUCINATED: &str = "  return sorted(docs, key=lambda x: x.score, reverse=True)[:top_k]";

    #[test]
    fn subtokens() {
        assert_eq!(subtokenize("find_by_keyword"), ["find", "_", "by", "_", "keyword"]);
        assert_eq!(subtokenize(""), Vec::<&str>::new());
        assert_eq!(subtokenize("x.score"), ["x", ".", "score"]);
        assert_eq!(subtokenize("pushFront(t)"), ["push", "Front", "(", "t", ")"]);
    }

    // Classic full-matrix DP, written independently of `levenshtein`.
    fn dp_oracle<T: PartialEq>(a: &[T], b: &[T]) -> usize {
        let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
        for (i, row) in d.iter_mut().enumerate() {
            row[0] = i;
        }
        for (j, cell) in d[0].iter_mut().enumerate() {
            *cell = j;
        }
        for i in 1..=a.len() {
            for j in 1..=b.len() {
                let cost = if a[i - 1] == b[j - 1] { 0 } else { 1 };
                d[i][j] = (d[i - 1][j] + 1).min(d[i][j - 1] + 1).min(d[i - 1][j - 1] + cost);
            }
        }
        d[a.len()][b.len()]
    }

    #[test]
    fn kitten_sitting() {
        let a: Vec<char> = "kitten".chars().collect();
        let b: Vec<char> = "sitting".chars().collect();
        assert_eq!(levenshtein(&a, &b), 3);
        assert_eq!(dp_oracle(&a, &b), 3);
    }

    #[test]
    fn identity_and_disjoint() {
        assert_eq!(edit_distance(TRUTH, TRUTH), 0);
        assert_eq!(normalized_edit_similarity(TRUTH, TRUTH), 1.0);
        assert_eq!(normalized_edit_similarity("a b c", "x y z"), 0.0);
        assert_eq!(normalized_edit_similarity("", ""), 1.0);
    }

    #[test]
    fn running_example_api_matches() {
        assert_eq!(exact_api_match(TRUTH, TRUTH), (2, 2));
        assert_eq!(exact_api_match(HALLUCINATED, TRUTH), (0, 2));
        let extra = format!("{TRUTH}\nlog(docs)");
        assert_eq!(exact_api_match(&extra, TRUTH), (2, 2));
        let spaced = "  return sorted(docs,key=lambda d:relevance(d,keyword),reverse=True)[:top_k]";
        assert_eq!(exact_api_match(spaced, TRUTH), (2, 2));
    }

    #[test]
    fn best_at_k_rules() {
        let list: Vec<String> = vec!["a b c d e".into(), "a b c".into(), "q r s t u v w x y".into()];
        // Distances to "a b c": 2, 0, 9.
        let r = best_at_k(&list, "a b c", Metric::EditDistance).unwrap();
        assert_eq!((r.edit_distance, r.best_rank), (0, Some(2)));
        assert!(best_at_k(&[], "a", Metric::EditDistance).is_err());
        // Distances 5, 3, 9 to a five-token truth.
        let list: Vec<String> = vec!["v w x y z".into(), "a b x y z".into(), "1 2 3 4 5 6 7 8 9".into()];
        let r = best_at_k(&list, "a b c d e", Metric::EditDistance).unwrap();
        assert_eq!((r.edit_distance, r.best_rank), (3, Some(2)));
        // Ties go to the lowest rank.
        let list: Vec<String> = vec!["x".into(), "y".into()];
        assert_eq!(best_at_k(&list, "z", Metric::EditSimilarity).unwrap().best_rank, Some(1));
    }

    #[test]
    fn prediction_keeps_truth_line_count() {
        assert_eq!(prediction_for("\n  a()\n  b()\n", "  x()\n"), "  a()\n");
        assert_eq!(prediction_for("  a(\n  1)\nrest", "f(\n 2)"), "  a(\n  1)");
    }

    fn token_text() -> impl Strategy<Value = String> {
        prop::collection::vec(prop_oneof!["[a-d]", "[A-C][a-b]", "[(),._]"], 0..30).prop_map(|v| v.join(" "))
    }

    proptest! {
        #[test]
        fn matches_dp_oracle(a in token_text(), b in token_text()) {
            let expected = dp_oracle(&subtokenize(&a), &subtokenize(&b));
            prop_assert_eq!(edit_distance(&a, &b), expected);
            let longest = subtokenize(&a).len().max(subtokenize(&b).len());
            let sim = if longest == 0 { 1.0 } else { 1.0 - expected as f64 / longest as f64 };
            prop_assert!((normalized_edit_similarity(&a, &b) - sim).abs() <= 1e-12);
            prop_assert!((0.0..=1.0).contains(&sim));
        }

        #[test]
        fn symmetric_and_triangle(a in token_text(), b in token_text(), c in token_text()) {
            prop_assert_eq!(edit_distance(&a, &b), edit_distance(&b, &a));
            prop_assert!(edit_distance(&a, &c) <= edit_distance(&a, &b) + edit_distance(&b, &c));
        }

        #[test]
        fn similarity_one_iff_same_tokens(a in token_text(), b in token_text()) {
            let same = subtokenize(&a) == subtokenize(&b);
            prop_assert_eq!(normalized_edit_similarity(&a, &b) == 1.0, same);
        }

        #[test]
        fn appending_never_worsens(list in prop::collection::vec(token_text(), 1..5), extra in token_text(), truth in token_text()) {
            let mut longer = list.clone();
            longer.push(extra);
            for m in [Metric::EditDistance, Metric::EditSimilarity, Metric::ExactApiMatch] {
                let a = best_at_k(&list, &truth, m).unwrap();
                let b = best_at_k(&longer, &truth, m).unwrap();
                prop_assert!(!m.better(&a, &b));
            }
        }

        #[test]
        fn whitespace_in_arguments_is_ignored(pad in "[ ]{0,3}") {
            let pred = format!("f(a,{pad}b{pad})");
            prop_assert_eq!(exact_api_match(&pred, "f(a, b)"), (1, 1));
        }

        #[test]
        fn subtokens_are_lossless(s in "[a-zA-Z_.(), ]{0,40}") {
            let joined: String = subtokenize(&s).concat();
            let stripped: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(joined, stripped);
        }
    }
}
