//! Syntactic extraction of API usages (call sites) from code text.
//!
//! A usage is the longest dotted identifier chain immediately preceding a `(`
//! together with the top-level, comma-separated argument texts. The scan is
//! lexical and language-agnostic:
//!
//! * string literals (`'…'`, `"…"`, `` `…` ``, triple quotes) are opaque;
//! * lines whose first non-blank characters start a comment (`#`, `//`, `/*`,
//!   `*`) are ignored;
//! * bracket indexing inside a chain is skipped (`a[0].b(` has path `a.b`)
//!   and `?.` is read as `.`;
//! * control-flow keywords are not calls, and names directly after `def`,
//!   `function` or `class` are definitions, not usages;
//! * a `(` without a matching `)` yields nothing.

use serde::{Deserialize, Serialize};

use crate::text::strip_whitespace_outside_strings;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiUsage {
    /// Dotted access path of the callee, e.g. `ds.find_by_keyword`.
    pub path: String,
    /// Trimmed argument texts.
    pub args: Vec<String>,
}

impl ApiUsage {
    /// `path(arg1, arg2)` with arguments joined by `, `.
    pub fn call_text(&self) -> String {
        format!("{}({})", self.path, self.args.join(", "))
    }

    /// Key under which two usages are considered the same call: the path and
    /// the arguments with whitespace outside string literals removed.
    pub fn normalized(&self) -> (String, Vec<String>) {
        (
            self.path.clone(),
            self.args.iter().map(|a| strip_whitespace_outside_strings(a)).collect(),
        )
    }
}

const NOT_CALLS: &[&str] = &[
    "if", "elif", "while", "for", "switch", "catch", "return", "function", "def", "class", "with", "lambda",
    "and", "or", "not", "in", "is", "await", "yield", "typeof", "void", "delete", "throw", "assert", "except",
    "else", "do", "case", "of", "instanceof", "async", "import", "from", "as", "print",
];

const DEFINERS: &[&str] = &["def", "function", "class"];

/// All usages in `code`, ordered by the start of their path.
pub fn extract_api_usages(code: &str) -> Vec<ApiUsage> {
    let chars: Vec<char> = code.chars().collect();
    let class = classify(&chars);
    let mask: Vec<bool> = class.iter().map(|&c| c == Class::Code).collect();
    let mut found: Vec<(usize, ApiUsage)> = Vec::new();
    for open in 0..chars.len() {
        if chars[open] != '(' || !mask[open] {
            continue;
        }
        let Some((start, path)) = callee_path(&chars, &mask, open) else {
            continue;
        };
        let Some(args) = arguments(&chars, &class, open) else {
            continue;
        };
        found.push((start, ApiUsage { path, args }));
    }
    found.sort_by_key(|(start, _)| *start);
    found.into_iter().map(|(_, u)| u).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Code,
    Str,
    Comment,
}

/// Classifies every character as code, string-literal content or comment.
fn classify(chars: &[char]) -> Vec<Class> {
    let mut class = vec![Class::Code; chars.len()];
    let mut i = 0;
    let mut line_start = true;
    while i < chars.len() {
        let c = chars[i];
        if line_start {
            let mut j = i;
            while j < chars.len() && chars[j] != '\n' && chars[j].is_whitespace() {
                j += 1;
            }
            let rest = &chars[j..];
            let is_comment = rest.first() == Some(&'#')
                || rest.starts_with(&['/', '/'])
                || rest.starts_with(&['/', '*'])
                || (rest.first() == Some(&'*') && rest.get(1).is_none_or(|c| c.is_whitespace() || *c == '/'));
            if is_comment {
                while i < chars.len() && chars[i] != '\n' {
                    class[i] = Class::Comment;
                    i += 1;
                }
                continue;
            }
            line_start = false;
        }
        match c {
            '\n' => {
                line_start = true;
                i += 1;
            }
            '"' | '\'' | '`' => {
                let triple = c != '`' && chars.get(i + 1) == Some(&c) && chars.get(i + 2) == Some(&c);
                let quote_len = if triple { 3 } else { 1 };
                let body_start = i + quote_len;
                let mut j = body_start;
                let mut body_end = None;
                let mut escaped = false;
                while j < chars.len() {
                    let d = chars[j];
                    if escaped {
                        escaped = false;
                    } else if d == '\\' {
                        escaped = true;
                    } else if d == c && (!triple || (chars.get(j + 1) == Some(&c) && chars.get(j + 2) == Some(&c))) {
                        body_end = Some(j);
                        break;
                    } else if d == '\n' && !triple && c != '`' {
                        break;
                    }
                    j += 1;
                }
                // Quotes stay code; the body is opaque.
                let end = body_end.unwrap_or(j).min(chars.len());
                class[body_start.min(end)..end].fill(Class::Str);
                i = match body_end {
                    Some(e) => e + quote_len,
                    None => end,
                };
            }
            _ => i += 1,
        }
    }
    class
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Walks backwards from `open` collecting the dotted chain. Returns the chain's
/// start offset and its path.
fn callee_path(chars: &[char], mask: &[bool], open: usize) -> Option<(usize, String)> {
    let mut segments: Vec<String> = Vec::new();
    let mut i = open;
    let mut start = open;
    loop {
        // One identifier segment.
        let end = i;
        while i > 0 && mask[i - 1] && is_ident_char(chars[i - 1]) {
            i -= 1;
        }
        if i == end {
            break;
        }
        segments.push(chars[i..end].iter().collect());
        start = i;
        if i > 0 && chars[i - 1] == '.' && mask[i - 1] {
            let mut k = i - 1;
            if k > 0 && chars[k - 1] == '?' {
                k -= 1;
            }
            // Index groups `[...]` before the dot are not part of the path.
            while k > 0 && chars[k - 1] == ']' && mask[k - 1] {
                match matching_open_bracket(chars, mask, k - 1) {
                    Some(open_bracket) => k = open_bracket,
                    None => break,
                }
            }
            i = k;
        } else {
            break;
        }
    }
    // Strip a leading segment that is not an identifier start (e.g. `1.5(`).
    while segments.last().is_some_and(|s| s.starts_with(|c: char| c.is_ascii_digit())) {
        segments.pop();
    }
    if segments.is_empty() {
        return None;
    }
    segments.reverse();
    if segments.len() == 1 && NOT_CALLS.contains(&segments[0].as_str()) {
        return None;
    }
    if let Some(word) = previous_word(chars, mask, start) {
        if DEFINERS.contains(&word.as_str()) {
            return None;
        }
    }
    Some((start, segments.join(".")))
}

fn matching_open_bracket(chars: &[char], mask: &[bool], close: usize) -> Option<usize> {
    let mut depth = 0usize;
    let mut i = close + 1;
    while i > 0 {
        i -= 1;
        if !mask[i] {
            continue;
        }
        match chars[i] {
            ']' => depth += 1,
            '[' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn previous_word(chars: &[char], mask: &[bool], mut i: usize) -> Option<String> {
    while i > 0 && chars[i - 1].is_whitespace() && chars[i - 1] != '\n' {
        i -= 1;
    }
    let end = i;
    while i > 0 && mask[i - 1] && is_ident_char(chars[i - 1]) {
        i -= 1;
    }
    (i < end).then(|| chars[i..end].iter().collect())
}

/// Top-level arguments of the call opened at `open`, or `None` when unmatched.
fn arguments(chars: &[char], class: &[Class], open: usize) -> Option<Vec<String>> {
    let mut depth = 0usize;
    let mut args = Vec::new();
    let mut current = String::new();
    for i in open + 1..chars.len() {
        let c = chars[i];
        match class[i] {
            Class::Comment => continue,
            Class::Str => {}
            Class::Code => match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' if depth > 0 => depth -= 1,
                ')' => {
                    // A trailing comma leaves an empty last argument, which is dropped.
                    let last = current.trim();
                    if !last.is_empty() {
                        args.push(last.to_string());
                    }
                    return Some(args);
                }
                ']' | '}' => return None,
                ',' if depth == 0 => {
                    args.push(current.trim().to_string());
                    current.clear();
                    continue;
                }
                _ => {}
            },
        }
        current.push(c);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn usage(path: &str, args: &[&str]) -> ApiUsage {
        ApiUsage {
            path: path.into(),
            args: args.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn method_call_with_receiver() {
        assert_eq!(
            extract_api_usages("  docs = ds.find_by_keyword(keyword)"),
            vec![usage("ds.find_by_keyword", &["keyword"])]
        );
    }

    #[test]
    fn nested_calls_yield_outer_then_inner() {
        let got = extract_api_usages("  return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]");
        assert_eq!(
            got,
            vec![
                usage("sorted", &["docs", "key=lambda d: relevance(d, keyword)", "reverse=True"]),
                usage("relevance", &["d", "keyword"]),
            ]
        );
    }

    #[test]
    fn empty_and_callless_inputs() {
        assert!(extract_api_usages("").is_empty());
        assert!(extract_api_usages("let x = 5;").is_empty());
    }

    #[test]
    fn definitions_and_keywords_are_not_usages() {
        assert!(extract_api_usages("def search(ds, keyword):").is_empty());
        assert!(extract_api_usages("function pushBack(x) {").is_empty());
        assert!(extract_api_usages("if (a) { while (b) {} }").is_empty());
        assert_eq!(extract_api_usages("return f(1)"), vec![usage("f", &["1"])]);
    }

    #[test]
    fn strings_and_comments_are_opaque() {
        assert!(extract_api_usages("s = 'call(me)'").is_empty());
        assert!(extract_api_usages("# ds.find(x)\n// deque.push(1)\n").is_empty());
        assert_eq!(
            extract_api_usages("log(\"a, b\", c)"),
            vec![usage("log", &["\"a, b\"", "c"])]
        );
    }

    #[test]
    fn index_groups_and_optional_chaining() {
        assert_eq!(extract_api_usages("a[0].b(x)"), vec![usage("a.b", &["x"])]);
        assert_eq!(extract_api_usages("a?.b(x)"), vec![usage("a.b", &["x"])]);
        assert_eq!(extract_api_usages("foo().bar()"), vec![usage("foo", &[]), usage("bar", &[])]);
    }

    #[test]
    fn unmatched_paren_is_dropped() {
        assert_eq!(extract_api_usages("f(g(1)"), vec![usage("g", &["1"])]);
    }

    #[test]
    fn javascript_usages() {
        assert_eq!(
            extract_api_usages("  deque.push_back(6);\n  expect(deque.size()).to.equal(6);"),
            vec![
                usage("deque.push_back", &["6"]),
                usage("expect", &["deque.size()"]),
                usage("deque.size", &[]),
                usage("to.equal", &["6"]),
            ]
        );
    }

    #[test]
    fn multi_line_call() {
        let got = extract_api_usages("x = f(\n  a,\n  b,\n)");
        assert_eq!(got, vec![usage("f", &["a", "b"])]);
    }

    #[test]
    fn normalization_ignores_whitespace_outside_strings() {
        let a = &extract_api_usages("f(a , ' x ')")[0];
        let b = &extract_api_usages("f(a,' x ')")[0];
        assert_eq!(a.normalized(), b.normalized());
    }
}
