//! The three subcommands driven through argument parsing.

use std::fs;
use std::path::{Path, PathBuf};

use apiground_cli::{run, Cli, Io};
use clap::Parser;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let parsed = Cli::try_parse_from(std::iter::once("apiground").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&parsed, &mut Io { out: &mut out, err: &mut err });
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_lines(out: &str) -> Vec<Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FIND_LINE: &str = "  docs = ds.find_by_keyword(keyword)\n";
const RELEVANCE_LINE: &str = "  return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]\n";

/// The running example with the complete `search` function, so that tasks
/// can be built from it.
fn eval_project(dir: &Path) -> PathBuf {
    let root = dir.join("project");
    fs::create_dir_all(&root).unwrap();
    for name in ["DataStore.py", "utils.py"] {
        fs::copy(fixture("running_example/project").join(name), root.join(name)).unwrap();
    }
    let ui = fs::read_to_string(fixture("running_example/UI.py")).unwrap();
    fs::write(root.join("UI.py"), format!("{ui}{RELEVANCE_LINE}")).unwrap();
    root
}

fn write_mock(dir: &Path, name: &str, rules: Value, default: &str) -> PathBuf {
    let path = dir.join(name);
    let mock = serde_json::json!({"id": name, "rules": rules, "default": [default]});
    fs::write(&path, mock.to_string()).unwrap();
    path
}

/// Answers each of the two tasks with its ground truth.
fn oracle_mock(dir: &Path) -> PathBuf {
    let rules = serde_json::json!([{"if_contains": [FIND_LINE], "completions": [RELEVANCE_LINE]}]);
    write_mock(dir, "oracle.json", rules, FIND_LINE)
}

#[test]
fn index_reports_counts_by_kind() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("idx");
    let (code, out, err) = cli(&["index", s(&fixture("running_example/project")), s(&out_dir)]);
    assert_eq!(code, 0, "{err}");
    let report = &json_lines(&out)[0];
    assert!(report["references"].as_u64().unwrap() >= 4);
    assert_eq!(report["by_kind"]["class"], 1);
    assert_eq!(report["by_kind"]["attribute"], 1);
    assert!(err.contains(" ms"));
    assert!(out_dir.join("manifest.json").exists() && out_dir.join("vectors.bin").exists());
}

#[test]
fn index_of_empty_directory_warns_and_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty");
    fs::create_dir(&empty).unwrap();
    let (code, out, err) = cli(&["index", s(&empty), s(&dir.path().join("idx"))]);
    assert_eq!(code, 0);
    assert_eq!(json_lines(&out)[0]["references"], 0);
    assert!(err.contains("warning"));
}

#[test]
fn index_of_missing_path_fails() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, err) = cli(&["index", s(&dir.path().join("missing")), s(&dir.path().join("idx"))]);
    assert_ne!(code, 0);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
}

fn indexed(dir: &Path, project: &Path) -> PathBuf {
    let idx = dir.join("idx");
    let (code, _, err) = cli(&["index", s(project), s(&idx)]);
    assert_eq!(code, 0, "{err}");
    idx
}

#[test]
fn complete_ranks_the_grounded_completion_first() {
    let dir = tempfile::tempdir().unwrap();
    let idx = indexed(dir.path(), &fixture("running_example/project"));
    let mock = fixture("mocks/running_example.json");
    let ui = fixture("running_example/UI.py");
    let (code, out, err) = cli(&["complete", s(&idx), s(&ui), "--k", "1", "--n", "1", "--mock", s(&mock)]);
    assert_eq!(code, 0, "{err}");
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["rank"], 1);
    assert!(lines[0]["completion"].as_str().unwrap().contains("relevance(keyword, doc)"));
    assert!(err.contains("3 model call(s)"));
}

#[test]
fn complete_with_empty_index_and_no_iterations_is_the_baseline() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty");
    fs::create_dir(&empty).unwrap();
    let idx = indexed(dir.path(), &empty);
    let mock = fixture("mocks/running_example.json");
    let ui = fixture("running_example/UI.py");
    let (code, out, _) = cli(&["complete", s(&idx), s(&ui), "--k", "0", "--mock", s(&mock)]);
    assert_eq!(code, 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["completion"], "  return sorted(docs, key=lambda x: x.score, reverse=True)[:top_k]\n");
}

#[test]
fn complete_fails_on_missing_index_or_other_embedder() {
    let dir = tempfile::tempdir().unwrap();
    let mock = fixture("mocks/running_example.json");
    let ui = fixture("running_example/UI.py");
    let (code, _, err) = cli(&["complete", s(&dir.path().join("none")), s(&ui), "--mock", s(&mock)]);
    assert_ne!(code, 0);
    assert!(err.contains("manifest.json"));

    let idx = indexed(dir.path(), &fixture("running_example/project"));
    let (code, _, err) = cli(&[
        "complete",
        s(&idx),
        s(&ui),
        "--mock",
        s(&mock),
        "--embedder",
        "http://127.0.0.1:9/embed",
    ]);
    assert_ne!(code, 0);
    assert!(err.contains("incompatible embedder"), "{err}");
}

#[test]
fn complete_without_a_model_fails() {
    let dir = tempfile::tempdir().unwrap();
    let idx = indexed(dir.path(), &fixture("running_example/project"));
    let (code, _, err) = cli(&["complete", s(&idx), s(&fixture("running_example/UI.py"))]);
    assert_ne!(code, 0);
    assert!(err.contains("--mock"));
}

#[test]
fn refinement_runs_only_for_hallucination_errors() {
    let dir = tempfile::tempdir().unwrap();
    let idx = indexed(dir.path(), &fixture("running_example/project"));
    let mock = fixture("mocks/running_example.json");
    let artifact = dir.path().join("test.py");
    let ui = fs::read_to_string(fixture("running_example/UI.py")).unwrap();
    fs::write(&artifact, format!("{ui}  return sorted(docs, key=lambda x: x.score)\n")).unwrap();
    let base = ["complete", s(&idx), s(&artifact), "--mock", s(&mock), "--k", "2", "--on-failure"];

    let (code, out, err) = cli(&[&base[..], &["AssertionError: expected 5 to equal 6"]].concat());
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(err.contains("0 model call(s)"));

    let (code, out, err) = cli(&[&base[..], &["TypeError: x.score is not a function", "--verbose"]].concat());
    assert_eq!(code, 0, "{err}");
    let lines = json_lines(&out);
    let steps = lines.last().unwrap()["trace"]["steps"].as_array().unwrap().clone();
    assert!(!steps.is_empty() && steps.len() <= 2);
    assert!(steps.iter().all(|s| s["mode"] == "iterative" && s["prompt"]["placement"] == "append"));
}

#[test]
fn eval_with_an_oracle_model_is_perfect() {
    let dir = tempfile::tempdir().unwrap();
    let project = eval_project(dir.path());
    let mock = oracle_mock(dir.path());
    let (code, out, err) = cli(&["eval", s(&project), "--tasks", "2", "--mock", s(&mock), "--k", "1"]);
    assert_eq!(code, 0, "{err}");
    let lines = json_lines(&out);
    let tasks: Vec<_> = lines.iter().filter(|l| l.get("task").is_some()).collect();
    assert_eq!(tasks.len(), 2);
    let aggregates: Vec<_> = lines.iter().filter(|l| l.get("aggregate").is_some()).collect();
    assert_eq!(aggregates.len(), 3);
    for a in aggregates {
        assert_eq!(a["tasks"], 2);
        assert_eq!(a["mean_edit_distance"], 0.0);
        assert_eq!(a["mean_edit_similarity"], 1.0);
        assert_eq!(a["mean_api_recall"], 1.0);
    }
}

#[test]
fn eval_with_a_model_that_never_improves_has_equal_rows() {
    let dir = tempfile::tempdir().unwrap();
    let project = eval_project(dir.path());
    let mock = write_mock(dir.path(), "stuck.json", serde_json::json!([]), "  results = lookup(keyword)\n");
    let (code, out, err) = cli(&["eval", s(&project), "--tasks", "2", "--mock", s(&mock)]);
    assert_eq!(code, 0, "{err}");
    let lines = json_lines(&out);
    for task in lines.iter().filter(|l| l.get("task").is_some()) {
        assert_eq!(task["initial"], task["iterative"]);
        assert_eq!(task["initial"], task["rag"]);
    }
    let row = |name: &str| lines.iter().find(|l| l["aggregate"] == name).unwrap().clone();
    let (mut initial, mut iterative) = (row("initial"), row("iterative"));
    initial["aggregate"] = Value::Null;
    iterative["aggregate"] = Value::Null;
    assert_eq!(initial, iterative);
}

#[test]
fn eval_sweep_rows_never_worsen_with_k() {
    let dir = tempfile::tempdir().unwrap();
    let project = eval_project(dir.path());
    // Hallucinates until the relevance reference shows up in the prompt.
    let rules = serde_json::json!([
        {"if_contains": ["# relevance(document: str, keyword: str) -> float"], "completions": [RELEVANCE_LINE]},
        {"if_contains": [FIND_LINE], "completions": ["  return sorted(docs, key=lambda x: x.score, reverse=True)[:top_k]\n"]}
    ]);
    let mock = write_mock(dir.path(), "sweep.json", rules, FIND_LINE);
    let (code, out, err) = cli(&["eval", s(&project), "--tasks", "2", "--mock", s(&mock), "--sweep-k", "1,2,3", "--n", "1"]);
    assert_eq!(code, 0, "{err}");
    let lines = json_lines(&out);
    let iterative: Vec<&Value> = lines.iter().filter(|l| l["aggregate"] == "iterative").collect();
    assert_eq!(iterative.iter().map(|l| l["k"].as_u64().unwrap()).collect::<Vec<_>>(), [1, 2, 3]);
    for pair in iterative.windows(2) {
        assert!(pair[1]["mean_edit_distance"].as_f64() <= pair[0]["mean_edit_distance"].as_f64());
        assert!(pair[1]["mean_edit_similarity"].as_f64() >= pair[0]["mean_edit_similarity"].as_f64());
        assert!(pair[1]["mean_api_recall"].as_f64() >= pair[0]["mean_api_recall"].as_f64());
    }
    assert_eq!(lines.iter().filter(|l| l.get("aggregate").is_some()).count(), 9);
}

#[test]
fn eval_skip_exact_drops_tasks_the_model_already_knows() {
    let dir = tempfile::tempdir().unwrap();
    let project = eval_project(dir.path());
    let mock = write_mock(dir.path(), "knows_find.json", serde_json::json!([]), FIND_LINE);
    let (code, out, err) = cli(&["eval", s(&project), "--tasks", "2", "--mock", s(&mock), "--skip-exact"]);
    assert_eq!(code, 0, "{err}");
    let tasks: Vec<_> = json_lines(&out).into_iter().filter(|l| l.get("task").is_some()).collect();
    assert_eq!(tasks.len(), 1);
    assert_eq!(tasks[0]["task"], "UI.py:8");
    assert!(err.contains("only 1 of 2"));
}

#[test]
fn repeated_runs_with_a_cache_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let project = eval_project(dir.path());
    let mock = oracle_mock(dir.path());
    let cache = dir.path().join("cache.jsonl");
    let args = ["eval", s(&project), "--tasks", "2", "--mock", s(&mock), "--cache", s(&cache)];
    let (code, first, _) = cli(&args);
    assert_eq!(code, 0);
    let (_, second, _) = cli(&args);
    assert_eq!(first, second);
    assert!(fs::metadata(&cache).unwrap().len() > 0);
    // Traces record whether each answer came from the cache, so they agree
    // once the cache is warm.
    let verbose = [&args[..], &["--verbose"]].concat();
    let (_, third, _) = cli(&verbose);
    let (_, fourth, _) = cli(&verbose);
    assert_eq!(third, fourth);
    assert!(third.contains("\"model_called\":false"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let idx = indexed(dir.path(), &fixture("running_example/project"));
    let config = dir.path().join("run.toml");
    let mock = fixture("mocks/running_example.json");
    fs::write(&config, format!("k = 0\nn = 1\nmock = {:?}\n", s(&mock))).unwrap();
    let ui = fixture("running_example/UI.py");
    let (code, _, err) = cli(&["complete", s(&idx), s(&ui), "--config", s(&config)]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("2 model call(s)"), "{err}");
    let (code, _, err) = cli(&["complete", s(&idx), s(&ui), "--config", s(&config), "--k", "2"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("4 model call(s)"), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_apiground");
    let status = std::process::Command::new(bin).args(["index", "/nonexistent/path", "/tmp/unused"]).output().unwrap();
    assert_ne!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let help = std::process::Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    let text = String::from_utf8(help.stdout).unwrap();
    for sub in ["index", "complete", "eval"] {
        assert!(text.contains(sub));
    }
}
