use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tree_sitter::Node;

use crate::extract::{extract_api_references, node_text, parse, Language};
use crate::project::Project;
use crate::reference::ReferenceKind;
use crate::usage::extract_api_usages;

/// A line-start completion point whose ground truth calls a project API.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletionTask {
    /// `file:line` of the ground truth's first line.
    pub id: String,
    pub project_root: PathBuf,
    pub file: String,
    /// 1-based line and 0-based column of the cursor.
    pub cursor: (usize, usize),
    pub prefix_context: String,
    pub ground_truth: String,
    pub removed_imports: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct TaskSet {
    pub tasks: Vec<CompletionTask>,
    pub diagnostics: Vec<String>,
}

struct Grammar {
    functions: &'static [&'static str],
    statements: &'static [&'static str],
    blocks: &'static [&'static str],
}

fn grammar(language: Language) -> Grammar {
    match language {
        Language::Python => Grammar {
            functions: &["function_definition"],
            statements: &["expression_statement", "return_statement"],
            blocks: &["block"],
        },
        Language::JavaScript => Grammar {
            functions: &[
                "function_declaration",
                "function_expression",
                "function",
                "arrow_function",
                "method_definition",
                "generator_function_declaration",
            ],
            statements: &["expression_statement", "return_statement", "lexical_declaration", "variable_declaration"],
            blocks: &["statement_block"],
        },
    }
}

/// Name of the called function or class, if the call's callee has one.
fn callee_name<'a>(call: Node<'_>, source: &'a str) -> Option<&'a str> {
    let callee = call
        .child_by_field_name("function")
        .or_else(|| call.child_by_field_name("constructor"))?;
    let name_node = match callee.kind() {
        "identifier" => callee,
        "attribute" => callee.child_by_field_name("attribute")?,
        "member_expression" => callee.child_by_field_name("property")?,
        _ => return None,
    };
    Some(node_text(name_node, source))
}

fn is_call(node: Node<'_>) -> bool {
    matches!(node.kind(), "call" | "call_expression" | "new_expression")
}

/// Smallest simple statement directly inside a function body that contains `node`.
fn enclosing_statement<'t>(node: Node<'t>, g: &Grammar) -> Option<Node<'t>> {
    let mut cur = node;
    let statement = loop {
        let parent = cur.parent()?;
        if g.statements.contains(&cur.kind()) && g.blocks.contains(&parent.kind()) {
            break cur;
        }
        cur = parent;
    };
    let mut up = statement.parent();
    while let Some(n) = up {
        if g.functions.contains(&n.kind()) {
            return Some(statement);
        }
        up = n.parent();
    }
    None
}

fn walk<'t>(node: Node<'t>, out: &mut Vec<Node<'t>>) {
    out.push(node);
    let mut cursor = node.walk();
    for child in node.children(&mut cursor) {
        walk(child, out);
    }
}

/// Top-level import statements: (first row, last row, bound names).
fn imports(root: Node<'_>, source: &str, language: Language) -> Vec<(usize, usize, HashSet<String>)> {
    let mut out = Vec::new();
    let mut cursor = root.walk();
    for stmt in root.children(&mut cursor) {
        let is_import = match language {
            Language::Python => matches!(stmt.kind(), "import_statement" | "import_from_statement" | "future_import_statement"),
            Language::JavaScript => {
                stmt.kind() == "import_statement"
                    || (matches!(stmt.kind(), "lexical_declaration" | "variable_declaration")
                        && node_text(stmt, source).contains("require("))
            }
        };
        if !is_import {
            continue;
        }
        let mut nodes = Vec::new();
        walk(stmt, &mut nodes);
        let names: HashSet<String> = nodes
            .iter()
            .filter(|n| n.child_count() == 0 && n.kind().contains("identifier"))
            .map(|n| node_text(*n, source).to_string())
            .filter(|name| name != "require")
            .collect();
        out.push((stmt.start_position().row, stmt.end_position().row, names));
    }
    out
}

fn candidates_in_file(
    project: &Project,
    path: &str,
    text: &str,
    api_names: &HashSet<String>,
) -> Result<Vec<CompletionTask>, String> {
    let language = project.language;
    let tree = parse(text, language).ok_or_else(|| format!("{path}: parser produced no tree"))?;
    let root = tree.root_node();
    if root.has_error() {
        return Err(format!("{path}: syntax error; file skipped"));
    }
    let g = grammar(language);
    let mut nodes = Vec::new();
    walk(root, &mut nodes);
    let mut statements: BTreeSet<(usize, usize)> = BTreeSet::new();
    for node in nodes.into_iter().filter(|n| is_call(*n)) {
        let Some(name) = callee_name(node, text) else { continue };
        if !api_names.contains(name) {
            continue;
        }
        if let Some(stmt) = enclosing_statement(node, &g) {
            statements.insert((stmt.start_position().row, stmt.end_position().row));
        }
    }

    let lines: Vec<&str> = text.split_inclusive('\n').collect();
    let imports = imports(root, text, language);
    let mut tasks = Vec::new();
    for (first, last) in statements {
        let ground_truth: String = lines[first..=last].concat();
        let heads: HashSet<String> = extract_api_usages(&ground_truth)
            .iter()
            .filter_map(|u| u.path.split('.').next().map(str::to_string))
            .collect();
        let mut dropped = vec![false; first];
        let mut removed_imports = Vec::new();
        for (s, e, names) in &imports {
            if *s < first && names.iter().any(|n| heads.contains(n)) {
                let end = (*e).min(first - 1);
                for flag in &mut dropped[*s..=end] {
                    *flag = true;
                }
                removed_imports.push(lines[*s..=end].concat());
            }
        }
        let prefix_context: String = lines[..first]
            .iter()
            .zip(&dropped)
            .filter(|(_, d)| !**d)
            .map(|(l, _)| *l)
            .collect();
        tasks.push(CompletionTask {
            id: format!("{path}:{}", first + 1),
            project_root: project.root.clone(),
            file: path.to_string(),
            cursor: (first + 1, 0),
            prefix_context,
            ground_truth,
            removed_imports,
        });
    }
    Ok(tasks)
}

/// Every candidate task of `project` in file and line order, with diagnostics
/// for files that could not be parsed.
///
/// A candidate is a simple statement inside a function body that calls a
/// function or class defined in the project (matched by its simple name).
/// The ground truth is every line of that statement; imports before it that
/// bind a name heading one of the ground truth's call paths are removed.
pub fn candidate_tasks(project: &Project) -> (Vec<CompletionTask>, Vec<String>) {
    let extraction = extract_api_references(&project.files, project.language);
    let api_names: HashSet<String> = extraction
        .references
        .iter()
        .filter(|r| r.kind != ReferenceKind::Attribute)
        .map(|r| r.simple_name().to_string())
        .filter(|n| !(n.starts_with("__") && n.ends_with("__")) && n != "constructor")
        .collect();
    let per_file: Vec<Result<Vec<CompletionTask>, String>> = project
        .files
        .par_iter()
        .map(|f| candidates_in_file(project, &f.path, &f.text, &api_names))
        .collect();
    let mut tasks = Vec::new();
    let mut diagnostics = Vec::new();
    for r in per_file {
        match r {
            Ok(mut t) => tasks.append(&mut t),
            Err(d) => diagnostics.push(d),
        }
    }
    (tasks, diagnostics)
}

/// Samples up to `count` tasks in a seeded random order. Tasks for which
/// `skip` returns true (e.g. the model already predicts them exactly) are
/// passed over and replaced by further candidates.
pub fn build_tasks(
    project: &Project,
    count: usize,
    seed: u64,
    skip: Option<&dyn Fn(&CompletionTask) -> bool>,
) -> TaskSet {
    let (mut candidates, mut diagnostics) = candidate_tasks(project);
    candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut tasks = Vec::new();
    let mut skipped = 0;
    for task in candidates {
        if tasks.len() == count {
            break;
        }
        if skip.is_some_and(|f| f(&task)) {
            skipped += 1;
            continue;
        }
        tasks.push(task);
    }
    if tasks.len() < count {
        diagnostics.push(format!(
            "only {} of {count} requested tasks available ({skipped} skipped by the filter)",
            tasks.len()
        ));
    }
    TaskSet { tasks, diagnostics }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::SourceFile;

    fn project(language: Language, files: &[(&str, &str)]) -> Project {
        Project {
            root: PathBuf::from("/p"),
            language,
            module_prefix: None,
            files: files.iter().map(|(p, t)| SourceFile::new(*p, *t)).collect(),
        }
    }

    const DATASTORE: &str = "class DataStore():\n  def __init__(self, file: str):\n    self.documents = []\n\n  def find_by_keyword(self, keyword: str) -> List[str]:\n    return [d for d in self.documents if keyword in d]\n";
    const UTILS: &str = "def relevance(document: str, keyword: str) -> float:\n  return document.count(keyword) / len(document)\n";
    const UI: &str = "from typing import List\nfrom DataStore import DataStore\nfrom utils import relevance\n\n\ndef search(ds: DataStore, keyword: str, top_k: int) -> List[str]:\n  docs = ds.find_by_keyword(keyword)\n  return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]\n";

    #[test]
    fn running_example_task() {
        let p = project(Language::Python, &[("DataStore.py", DATASTORE), ("UI.py", UI), ("utils.py", UTILS)]);
        let (tasks, diags) = candidate_tasks(&p);
        assert!(diags.is_empty());
        let task = tasks.iter().find(|t| t.id == "UI.py:8").expect("relevance task");
        assert_eq!(
            task.ground_truth,
            "  return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]\n"
        );
        assert_eq!(task.removed_imports, ["from utils import relevance\n"]);
        assert!(!task.prefix_context.contains("import relevance"));
        assert!(task.prefix_context.contains("from DataStore import DataStore"));
        assert!(task.prefix_context.ends_with("  docs = ds.find_by_keyword(keyword)\n"));
        assert_eq!(task.cursor, (8, 0));
        let find = tasks.iter().find(|t| t.id == "UI.py:7").expect("find_by_keyword task");
        assert!(find.removed_imports.is_empty());
    }

    #[test]
    fn multi_line_call_is_taken_whole() {
        let src = "def helper(a, b, c):\n    return a\n\n\ndef main():\n    value = helper(\n        1,\n        2)\n    return value\n";
        let p = project(Language::Python, &[("m.py", src)]);
        let (tasks, _) = candidate_tasks(&p);
        assert_eq!(tasks.len(), 1);
        assert_eq!(tasks[0].ground_truth, "    value = helper(\n        1,\n        2)\n");
        assert_eq!(tasks[0].ground_truth.lines().count(), 3);
    }

    #[test]
    fn no_call_sites_gives_empty_set_with_diagnostic() {
        let p = project(Language::Python, &[("a.py", "def f():\n    return 1\n")]);
        let set = build_tasks(&p, 3, 0, None);
        assert!(set.tasks.is_empty());
        assert_eq!(set.diagnostics.len(), 1);
    }

    #[test]
    fn skip_filter_replaces_tasks() {
        let p = project(Language::Python, &[("DataStore.py", DATASTORE), ("UI.py", UI), ("utils.py", UTILS)]);
        let all = build_tasks(&p, 10, 7, None);
        assert_eq!(all.tasks.len(), 2);
        let skip = |t: &CompletionTask| t.ground_truth.contains("relevance");
        let filtered = build_tasks(&p, 1, 7, Some(&skip));
        assert_eq!(filtered.tasks.len(), 1);
        assert!(filtered.tasks[0].ground_truth.contains("find_by_keyword"));
        // Deterministic per seed.
        assert_eq!(build_tasks(&p, 2, 7, None).tasks, all.tasks);
    }

    #[test]
    fn javascript_require_is_removed() {
        let lib = "class Deque {\n  pushFront(t) { return t; }\n}\nmodule.exports = { Deque };\n";
        let test = "const { Deque } = require('./deque');\nconst assert = require('assert');\n\nfunction check() {\n  const d = new Deque();\n  d.pushFront(1);\n  assert.ok(d);\n}\n";
        let p = project(Language::JavaScript, &[("deque.js", lib), ("test.js", test)]);
        let (tasks, _) = candidate_tasks(&p);
        let ids: Vec<_> = tasks.iter().map(|t| t.id.as_str()).collect();
        assert_eq!(ids, ["test.js:5", "test.js:6"]);
        assert_eq!(tasks[0].removed_imports, ["const { Deque } = require('./deque');\n"]);
        assert!(tasks[1].removed_imports.is_empty());
        assert!(tasks[0].prefix_context.starts_with("const assert"));
    }
}
