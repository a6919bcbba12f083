//! Static extraction of a project's API surface from source files.
//!
//! Parsing is done with tree-sitter grammars. Files that do not parse cleanly
//! are skipped and reported as diagnostics; the extraction as a whole still
//! succeeds.

mod javascript;
mod python;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reference::{ApiReference, ReferenceKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    Python,
    JavaScript,
}

impl Language {
    pub fn from_path(path: &str) -> Option<Language> {
        let ext = path.rsplit_once('.')?.1;
        match ext {
            "py" | "pyi" => Some(Language::Python),
            "js" | "cjs" | "mjs" | "jsx" => Some(Language::JavaScript),
            _ => None,
        }
    }

    /// Line-comment prefix used when rendering reference blocks into prompts.
    pub fn comment_prefix(self) -> &'static str {
        match self {
            Language::Python => "# ",
            Language::JavaScript => "// ",
        }
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "python" | "py" => Ok(Language::Python),
            "javascript" | "js" => Ok(Language::JavaScript),
            other => Err(Error::InvalidArgument(format!("unsupported language `{other}`"))),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::Python => "python",
            Language::JavaScript => "javascript",
        })
    }
}

/// One input file: a project-relative path and its contents.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub path: String,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<String>, text: impl Into<String>) -> Self {
        SourceFile {
            path: path.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct ExtractOptions {
    /// Prepended (with a `.`) to every qualified name, e.g. a package name.
    pub module_prefix: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct Extraction {
    pub references: Vec<ApiReference>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Extracts function, class and attribute references from `files`.
///
/// Files are processed in path order regardless of input order, and the
/// result is deduplicated by `(kind, qualified_name)` keeping the first.
pub fn extract_api_references(files: &[SourceFile], language: Language) -> Extraction {
    extract_api_references_with(files, language, &ExtractOptions::default())
}

pub fn extract_api_references_with(
    files: &[SourceFile],
    language: Language,
    options: &ExtractOptions,
) -> Extraction {
    let mut ordered: Vec<&SourceFile> = files.iter().collect();
    ordered.sort_by(|a, b| a.path.cmp(&b.path));

    let per_file: Vec<std::result::Result<Vec<ApiReference>, Diagnostic>> = ordered
        .par_iter()
        .map(|file| extract_file(file, language))
        .collect();

    let mut out = Extraction::default();
    let mut seen: HashSet<(ReferenceKind, String)> = HashSet::new();
    for result in per_file {
        match result {
            Ok(refs) => {
                for mut r in refs {
                    if let Some(prefix) = &options.module_prefix {
                        r.qualified_name = format!("{prefix}.{}", r.qualified_name);
                    }
                    if !r.is_well_formed() {
                        continue;
                    }
                    if seen.insert((r.kind, r.qualified_name.clone())) {
                        out.references.push(r);
                    }
                }
            }
            Err(diag) => out.diagnostics.push(diag),
        }
    }
    out
}

fn extract_file(file: &SourceFile, language: Language) -> std::result::Result<Vec<ApiReference>, Diagnostic> {
    let tree = parse(&file.text, language).ok_or_else(|| Diagnostic {
        path: file.path.clone(),
        message: "parser produced no tree".into(),
    })?;
    let root = tree.root_node();
    if root.has_error() {
        let pos = first_error(root).map(|n| n.start_position());
        return Err(Diagnostic {
            path: file.path.clone(),
            message: match pos {
                Some(p) => format!("syntax error at {}:{}; file skipped", p.row + 1, p.column + 1),
                None => "syntax error; file skipped".into(),
            },
        });
    }
    Ok(match language {
        Language::Python => python::extract(root, &file.text, &file.path),
        Language::JavaScript => javascript::extract(root, &file.text, &file.path),
    })
}

pub(crate) fn parse(text: &str, language: Language) -> Option<tree_sitter::Tree> {
    let lang: tree_sitter::Language = match language {
        Language::Python => tree_sitter_python::LANGUAGE.into(),
        Language::JavaScript => tree_sitter_javascript::LANGUAGE.into(),
    };
    let mut parser = tree_sitter::Parser::new();
    parser.set_language(&lang).ok()?;
    parser.parse(text, None)
}

fn first_error(node: tree_sitter::Node<'_>) -> Option<tree_sitter::Node<'_>> {
    if node.is_error() || node.is_missing() {
        return Some(node);
    }
    let mut cursor = node.walk();
    let children: Vec<_> = node.children(&mut cursor).collect();
    children
        .into_iter()
        .filter(|c| c.has_error())
        .find_map(first_error)
}

pub(crate) fn node_text<'a>(node: tree_sitter::Node<'_>, source: &'a str) -> &'a str {
    &source[node.byte_range()]
}

fn qualify(scope: &[String], name: &str) -> String {
    if scope.is_empty() {
        name.to_string()
    } else {
        format!("{}.{}", scope.join("."), name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn language_tags() {
        assert_eq!("python".parse::<Language>().unwrap(), Language::Python);
        assert_eq!("JS".parse::<Language>().unwrap(), Language::JavaScript);
        assert!(matches!("cobol".parse::<Language>(), Err(Error::InvalidArgument(_))));
        assert_eq!(Language::from_path("a/b.py"), Some(Language::Python));
        assert_eq!(Language::from_path("a/b.rs"), None);
    }

    #[test]
    fn empty_source_yields_nothing() {
        let out = extract_api_references(&[SourceFile::new("empty.py", "")], Language::Python);
        assert!(out.references.is_empty());
        assert!(out.diagnostics.is_empty());
    }

    #[test]
    fn broken_file_is_skipped_with_diagnostic() {
        let files = [
            SourceFile::new("bad.py", "def broken(:\n  pass\n"),
            SourceFile::new("good.py", "def ok():\n  pass\n"),
        ];
        let out = extract_api_references(&files, Language::Python);
        assert_eq!(out.references.len(), 1);
        assert_eq!(out.references[0].qualified_name, "ok");
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].path, "bad.py");
    }

    #[test]
    fn module_prefix_is_applied() {
        let files = [SourceFile::new("index.js", "function f(a) {}\n")];
        let opts = ExtractOptions {
            module_prefix: Some("pkg".into()),
        };
        let out = extract_api_references_with(&files, Language::JavaScript, &opts);
        assert_eq!(out.references[0].qualified_name, "pkg.f");
    }

    #[test]
    fn duplicate_names_keep_first_file_in_path_order() {
        let files = [
            SourceFile::new("b.py", "def helper(y):\n  pass\n"),
            SourceFile::new("a.py", "def helper(x):\n  pass\n"),
        ];
        let out = extract_api_references(&files, Language::Python);
        assert_eq!(out.references.len(), 1);
        assert_eq!(out.references[0].source_file, "a.py");
    }
}
