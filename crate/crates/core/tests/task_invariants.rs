//! Invariants of every completion task built from the synthetic project.

use std::path::Path;

use apiground::eval::{build_tasks, candidate_tasks};
use apiground::project::scan_project;
use apiground::usage::extract_api_usages;

#[test]
fn every_candidate_is_a_well_formed_task() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/synthetic/project");
    let project = scan_project(&root, None).unwrap();
    let (tasks, diagnostics) = candidate_tasks(&project);
    assert!(diagnostics.is_empty(), "{diagnostics:?}");
    assert!(tasks.len() > 500);
    for t in &tasks {
        let source = &project.file(&t.file).unwrap().text;
        let lines: Vec<&str> = source.split_inclusive('\n').collect();
        let (line, column) = t.cursor;
        assert_eq!(column, 0);
        assert!(t.ground_truth.starts_with(lines[line - 1]), "{}", t.id);
        assert!(!extract_api_usages(&t.ground_truth).is_empty(), "{}", t.id);
        for removed in &t.removed_imports {
            assert!(!t.prefix_context.contains(removed.as_str()), "{}", t.id);
        }
        // Without removed imports the prefix is exactly the text before the cursor.
        let before: String = lines[..line - 1].concat();
        if t.removed_imports.is_empty() {
            assert_eq!(t.prefix_context, before, "{}", t.id);
        } else {
            assert!(t.prefix_context.len() < before.len());
        }
    }
}

#[test]
fn sampling_is_seeded_and_without_repeats() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/synthetic/project");
    let project = scan_project(&root, None).unwrap();
    let a = build_tasks(&project, 50, 3, None);
    let b = build_tasks(&project, 50, 3, None);
    let c = build_tasks(&project, 50, 4, None);
    assert_eq!(a.tasks, b.tasks);
    assert_ne!(a.tasks, c.tasks);
    let mut ids: Vec<&str> = a.tasks.iter().map(|t| t.id.as_str()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 50);
}
