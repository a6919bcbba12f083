//! Prompt assembly: a commented `API Reference:` block combined with the code
//! context under a token budget.
//!
//! Budget policy, applied until the prompt fits:
//!
//! 1. if everything fits, nothing is dropped;
//! 2. otherwise the reference block may use at most `reference_share` of the
//!    budget (or whatever the full context leaves, if more); lowest-ranked
//!    references are dropped to get there;
//! 3. the context is truncated from the beginning, whole lines at a time;
//! 4. if even the last context line does not fit next to the block, more
//!    references are dropped.
//!
//! The header line is dropped together with the last reference.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::retrieve::is_import_line;
use crate::tokens::TokenCounter;

pub const HEADER: &str = "API Reference:";
pub const DEFAULT_BUDGET: usize = 2048;
pub const DEFAULT_REFERENCE_SHARE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PromptMode {
    Initial,
    Rag,
    Iterative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    /// Block before the whole context (code completion).
    Prepend,
    /// Block after the leading context section of imports and comments
    /// (test generation).
    Append,
}

impl std::str::FromStr for Placement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prepend" => Ok(Placement::Prepend),
            "append" => Ok(Placement::Append),
            other => Err(Error::InvalidArgument(format!("unknown placement `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PromptOptions<'a> {
    pub placement: Placement,
    pub comment_prefix: &'a str,
    pub budget: usize,
    /// Fraction of the budget the reference block may claim when the prompt
    /// does not fit as a whole.
    pub reference_share: f64,
}

impl Default for PromptOptions<'_> {
    fn default() -> Self {
        PromptOptions {
            placement: Placement::Prepend,
            comment_prefix: "# ",
            budget: DEFAULT_BUDGET,
            reference_share: DEFAULT_REFERENCE_SHARE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromptSpec {
    pub mode: PromptMode,
    pub placement: Placement,
    /// Rendered reference lines kept in the prompt, without comment prefix.
    pub reference_block: Vec<String>,
    /// References dropped to meet the budget.
    pub dropped_refs: usize,
    /// The retained code context: a suffix of the input context.
    pub code_context: String,
    /// Context lines dropped from the beginning.
    pub truncated_lines: usize,
    pub budget_tokens: usize,
    pub token_count: usize,
    /// The prompt string sent to the model.
    pub text: String,
}

/// Byte offset just past the leading section of blank, comment and import
/// lines, where an appended block is placed.
pub fn context_section_end(context: &str) -> usize {
    let mut end = 0;
    for line in context.split_inclusive('\n') {
        let t = line.trim();
        let is_section = t.is_empty()
            || t.starts_with('#')
            || t.starts_with("//")
            || t.starts_with("/*")
            || t.starts_with('*')
            || is_import_line(t)
            || t.starts_with("'use strict'")
            || t.starts_with("\"use strict\"");
        if !is_section {
            break;
        }
        end += line.len();
    }
    end
}

struct Layout<'a> {
    context: &'a str,
    line_starts: Vec<usize>,
    section_end: usize,
    refs: &'a [String],
    options: &'a PromptOptions<'a>,
}

impl Layout<'_> {
    fn block(&self, k: usize) -> String {
        if k == 0 {
            return String::new();
        }
        let p = self.options.comment_prefix;
        let mut out = format!("{p}{HEADER}\n");
        for line in &self.refs[..k] {
            out.push_str(p);
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    /// Prompt with the first `k` references and the context from line `s`.
    fn assemble(&self, k: usize, s: usize) -> String {
        let start = self.line_starts.get(s).copied().unwrap_or(self.context.len());
        let retained = &self.context[start..];
        let block = self.block(k);
        match self.options.placement {
            Placement::Prepend => block + retained,
            Placement::Append => {
                let at = self.section_end.max(start);
                let mut head = self.context[start..at].to_string();
                if !head.is_empty() && !head.ends_with('\n') {
                    head.push('\n');
                }
                head + &block + &self.context[at..]
            }
        }
    }
}

/// Builds a prompt of `mode` from `code_context` and ranked reference lines.
///
/// Errors when the budget cannot hold the last context line (plus the header
/// line when references are given), or when references are given in Initial
/// mode.
pub fn build_prompt(
    code_context: &str,
    refs: &[String],
    mode: PromptMode,
    options: &PromptOptions<'_>,
    counter: &dyn TokenCounter,
) -> Result<PromptSpec> {
    if options.budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    if mode == PromptMode::Initial && !refs.is_empty() {
        return Err(Error::InvalidArgument("an initial prompt carries no references".into()));
    }
    let mut line_starts = vec![0];
    line_starts.extend(code_context.match_indices('\n').map(|(i, _)| i + 1).filter(|&i| i < code_context.len()));
    let layout = Layout {
        context: code_context,
        line_starts,
        section_end: match options.placement {
            Placement::Prepend => 0,
            Placement::Append => context_section_end(code_context),
        },
        refs,
        options,
    };
    let last = layout.line_starts.len() - 1;
    let budget = options.budget;
    let fits = |k: usize, s: usize| counter.count(&layout.assemble(k, s)) <= budget;

    let minimal = if refs.is_empty() {
        layout.assemble(0, last)
    } else {
        format!("{}{HEADER}\n{}", options.comment_prefix, &code_context[layout.line_starts[last]..])
    };
    let required = counter.count(&minimal);
    if required > budget {
        return Err(Error::Budget { budget, required });
    }

    let (k, s) = if fits(refs.len(), 0) {
        (refs.len(), 0)
    } else {
        let share = (budget as f64 * options.reference_share).floor() as usize;
        let allowed = share.max(budget.saturating_sub(counter.count(code_context)));
        let mut k = refs.len();
        while k > 0 && counter.count(&layout.block(k)) > allowed {
            k -= 1;
        }
        loop {
            if let Some(s) = shortest_fitting_suffix(last, |s| fits(k, s)) {
                break (k, s);
            }
            if k == 0 {
                return Err(Error::Budget { budget, required });
            }
            k -= 1;
        }
    };

    let text = layout.assemble(k, s);
    let token_count = counter.count(&text);
    let start = layout.line_starts.get(s).copied().unwrap_or(code_context.len());
    Ok(PromptSpec {
        mode,
        placement: options.placement,
        reference_block: refs[..k].to_vec(),
        dropped_refs: refs.len() - k,
        code_context: code_context[start..].to_string(),
        truncated_lines: s,
        budget_tokens: budget,
        token_count,
        text,
    })
}

/// Smallest start line in `0..=last` accepted by `fits`, assuming acceptance
/// is (nearly) monotone in the start line; the result is always verified.
fn shortest_fitting_suffix(last: usize, fits: impl Fn(usize) -> bool) -> Option<usize> {
    if !fits(last) {
        return None;
    }
    let (mut lo, mut hi) = (0, last);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo..=last).find(|&s| fits(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokens::SubtokenCounter;
    use proptest::prelude::*;

    const SEARCH: &str = "def search(ds: DataStore, keyword: str, top_k: int) -> List[str]:\n  docs = ds.find_by_keyword(keyword)\n";

    #[test]
    fn prepended_reference_block() {
        let refs = vec!["relevance(document: str, keyword: str) -> float".to_string()];
        let p = build_prompt(SEARCH, &refs, PromptMode::Iterative, &PromptOptions::default(), &SubtokenCounter).unwrap();
        assert_eq!(
            p.text,
            format!("# API Reference:\n# relevance(document: str, keyword: str) -> float\n{SEARCH}")
        );
        assert_eq!(p.dropped_refs, 0);
        assert_eq!(p.code_context, SEARCH);
    }

    #[test]
    fn initial_prompt_is_the_context() {
        let p = build_prompt(SEARCH, &[], PromptMode::Initial, &PromptOptions::default(), &SubtokenCounter).unwrap();
        assert_eq!(p.text, SEARCH);
        assert!(p.reference_block.is_empty());
        assert!(build_prompt(SEARCH, &["x".into()], PromptMode::Initial, &PromptOptions::default(), &SubtokenCounter).is_err());
    }

    #[test]
    fn appended_after_context_section() {
        let ctx = "let assert = require('assert');\nlet js_sdsl = require('js-sdsl');\n// class js-sdsl.Deque(t = [], i = 1 << 12)\ndescribe('test js_sdsl', function() {\n";
        let refs = vec!["js-sdsl.Deque.prototype.pushFront(t)".to_string()];
        let opts = PromptOptions {
            placement: Placement::Append,
            comment_prefix: "// ",
            ..PromptOptions::default()
        };
        let p = build_prompt(ctx, &refs, PromptMode::Iterative, &opts, &SubtokenCounter).unwrap();
        assert_eq!(
            p.text,
            "let assert = require('assert');\nlet js_sdsl = require('js-sdsl');\n// class js-sdsl.Deque(t = [], i = 1 << 12)\n// API Reference:\n// js-sdsl.Deque.prototype.pushFront(t)\ndescribe('test js_sdsl', function() {\n"
        );
    }

    #[test]
    fn long_context_keeps_a_suffix() {
        // 300 lines of about 10 tokens each (~3,000 tokens) against a 2,048 budget.
        let ctx: String = (0..300).map(|i| format!("value_{i} = compute(item, {i})\n")).collect();
        let total = SubtokenCounter.count(&ctx);
        assert!(total > 2048, "{total}");
        let p = build_prompt(&ctx, &[], PromptMode::Initial, &PromptOptions::default(), &SubtokenCounter).unwrap();
        assert!(p.token_count <= 2048);
        assert!(ctx.ends_with(&p.code_context));
        assert!(p.code_context.starts_with("value_"));
        assert!(p.code_context.ends_with("value_299 = compute(item, 299)\n"));
        // Maximal: one more line would not fit.
        let one_more_start = ctx.len() - p.code_context.len();
        let prev_line_start = ctx[..one_more_start - 1].rfind('\n').map_or(0, |i| i + 1);
        assert!(SubtokenCounter.count(&ctx[prev_line_start..]) > 2048);
    }

    #[test]
    fn references_are_dropped_lowest_first() {
        let refs: Vec<String> = (0..50).map(|i| format!("module.function_number_{i}(argument_a, argument_b) -> Result")).collect();
        let opts = PromptOptions {
            budget: 200,
            ..PromptOptions::default()
        };
        let p = build_prompt(SEARCH, &refs, PromptMode::Rag, &opts, &SubtokenCounter).unwrap();
        assert!(p.token_count <= 200);
        assert!(p.dropped_refs > 0);
        assert_eq!(p.reference_block, refs[..refs.len() - p.dropped_refs].to_vec());
        assert_eq!(p.code_context, SEARCH);
    }

    #[test]
    fn header_goes_with_the_last_reference() {
        let refs = vec!["a_very_long_reference_name_that_costs_tokens(one, two, three, four) -> Dict[str, List[int]]".to_string()];
        let opts = PromptOptions {
            budget: 40,
            ..PromptOptions::default()
        };
        let p = build_prompt(SEARCH, &refs, PromptMode::Rag, &opts, &SubtokenCounter).unwrap();
        assert!(p.reference_block.is_empty());
        assert!(!p.text.contains(HEADER));
        assert_eq!(p.text, p.code_context);
    }

    #[test]
    fn budget_below_header_and_last_line_is_an_error() {
        let opts = PromptOptions {
            budget: 3,
            ..PromptOptions::default()
        };
        assert!(matches!(
            build_prompt(SEARCH, &["x()".into()], PromptMode::Rag, &opts, &SubtokenCounter),
            Err(Error::Budget { .. })
        ));
    }

    proptest! {
        #[test]
        fn budget_safety_and_suffix(
            lines in prop::collection::vec("[a-z_]{1,10}( = [a-z]{1,6}\\([a-z, ]{0,12}\\))?", 0..60),
            refs in prop::collection::vec("[a-zA-Z_.]{1,20}\\([a-z:, ]{0,20}\\)", 0..25),
            budget in 8usize..300,
            append in any::<bool>(),
        ) {
            let ctx: String = lines.iter().map(|l| format!("  {l}\n")).collect();
            let opts = PromptOptions {
                budget,
                placement: if append { Placement::Append } else { Placement::Prepend },
                ..PromptOptions::default()
            };
            let mode = if refs.is_empty() { PromptMode::Initial } else { PromptMode::Iterative };
            match build_prompt(&ctx, &refs, mode, &opts, &SubtokenCounter) {
                Ok(p) => {
                    prop_assert!(p.token_count <= budget);
                    prop_assert_eq!(p.token_count, SubtokenCounter.count(&p.text));
                    prop_assert!(ctx.ends_with(&p.code_context));
                    prop_assert_eq!(&p.reference_block[..], &refs[..p.reference_block.len()]);
                    for r in &p.reference_block {
                        let expected = format!("# {}\n", r);
                        prop_assert!(p.text.contains(&expected));
                    }
                }
                Err(Error::Budget { .. }) => {
                    let last = ctx.trim_end_matches('\n').rsplit('\n').next().unwrap_or("");
                    let last = if ctx.is_empty() { String::new() } else { format!("{last}\n") };
                    let minimal = if refs.is_empty() { last } else { format!("# {HEADER}\n{last}") };
                    prop_assert!(SubtokenCounter.count(&minimal) > budget);
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
