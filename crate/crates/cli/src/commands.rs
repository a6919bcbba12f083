use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use apiground::catalog::{index_project, ApiIndex, IndexOptions};
use apiground::eval::{aggregate, build_tasks, prediction_for, score_trace, BestScores, CompletionTask, TaskScores};
use apiground::generate::{
    rank_completions, run_loop, run_refinement_on_failure, GenerationTrace, Grounding, LoopConfig,
    DEFAULT_N_REFINEMENT,
};
use apiground::llm::{query, LanguageModel, LlmRequest, ResponseCache};
use apiground::project::scan_project;
use apiground::reference::ReferenceKind;
use apiground::tokens::SubtokenCounter;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::config::{RunConfig, RunFlags};

pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs `body`, reporting an error on the error stream; returns the exit code.
pub fn exit_code(io: &mut Io<'_>, body: impl FnOnce(&mut Io<'_>) -> anyhow::Result<()>) -> i32 {
    match body(io) {
        Ok(()) => 0,
        Err(e) => {
            // Library errors already embed their cause in the message.
            let mut message = e.to_string();
            for cause in e.chain().skip(1) {
                let cause = cause.to_string();
                if !message.contains(&cause) {
                    message = format!("{message}: {cause}");
                }
            }
            let _ = writeln!(io.err, "error: {message}");
            1
        }
    }
}

fn line(out: &mut dyn Write, value: &impl Serialize) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn open_cache(config: &RunConfig) -> anyhow::Result<Option<ResponseCache>> {
    config
        .cache
        .as_deref()
        .map(|p| ResponseCache::open(p).with_context(|| format!("opening cache {}", p.display())))
        .transpose()
}

fn loop_config(config: &RunConfig, index: &ApiIndex, n: usize, refinement: bool) -> LoopConfig {
    let base = if refinement { LoopConfig::refinement() } else { LoopConfig::default() };
    LoopConfig {
        k: config.k,
        n,
        placement: config.placement.unwrap_or(base.placement),
        comment_prefix: index.language().comment_prefix().to_string(),
        budget: config.budget_tokens,
        temperature: config.temperature,
        num_completions: config.num_completions,
        ..base
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct IndexArgs {
    /// Project directory to analyze.
    pub project: PathBuf,
    /// Directory the index is written to.
    pub out: PathBuf,
    #[command(flatten)]
    pub flags: RunFlags,
}

/// Extracts, embeds and persists the API references of a project.
///
/// Output: one JSON line
/// `{"index": <out>, "files": F, "lines": L, "references": N, "by_kind": {"function": a, "class": b, "attribute": c}}`.
pub fn cmd_index(args: &IndexArgs, io: &mut Io<'_>) -> i32 {
    exit_code(io, |io| {
        let started = Instant::now();
        let config = RunConfig::resolve(args.flags.clone())?;
        let project = scan_project(&args.project, config.language)?;
        if project.files.is_empty() {
            writeln!(io.err, "warning: no {} source files under {}", project.language, args.project.display())?;
        }
        let embedder = config.embedder();
        let options = IndexOptions {
            index: config.index_config(),
            ..IndexOptions::default()
        };
        let (index, diagnostics) = pool(config.workers)?.install(|| index_project(&project, embedder.as_ref(), &options))?;
        for d in &diagnostics {
            writeln!(io.err, "warning: {}: {}", d.path, d.message)?;
        }
        index.save(&args.out)?;
        let counts = index.counts();
        let by_kind: BTreeMap<&str, usize> = [
            ("function", ReferenceKind::Function),
            ("class", ReferenceKind::Class),
            ("attribute", ReferenceKind::Attribute),
        ]
        .into_iter()
        .map(|(name, kind)| (name, counts.get(&kind).copied().unwrap_or(0)))
        .collect();
        line(
            io.out,
            &json!({
                "index": args.out,
                "files": project.files.len(),
                "lines": project.line_count(),
                "references": index.len(),
                "by_kind": by_kind,
            }),
        )?;
        writeln!(io.err, "indexed {} lines in {} ms", project.line_count(), started.elapsed().as_millis())?;
        Ok(())
    })
}

#[derive(Debug, Clone, clap::Args)]
pub struct CompleteArgs {
    /// Index directory written by `index`.
    pub index: PathBuf,
    /// File holding the incomplete code.
    pub context: PathBuf,
    /// Treat the context as a failing generated test and refine it only if
    /// this error message points at a hallucinated API.
    #[arg(long)]
    pub on_failure: Option<String>,
    /// Also print the full generation trace.
    #[arg(long)]
    pub verbose: bool,
    #[command(flatten)]
    pub flags: RunFlags,
}

/// Runs the grounding loop on one context.
///
/// Output: one JSON line `{"rank": r, "completion": text}` per distinct
/// completion, best first; with `--verbose` a final `{"trace": GenerationTrace}` line.
pub fn cmd_complete(args: &CompleteArgs, io: &mut Io<'_>) -> i32 {
    exit_code(io, |io| {
        let started = Instant::now();
        let config = RunConfig::resolve(args.flags.clone())?;
        let index = ApiIndex::load(&args.index, config.index_config())
            .with_context(|| format!("loading index {}", args.index.display()))?;
        let embedder = config.embedder();
        index.check_embedder(embedder.as_ref())?;
        let context = std::fs::read_to_string(&args.context)
            .with_context(|| format!("reading context {}", args.context.display()))?;
        let llm = config.model()?;
        let cache = open_cache(&config)?;
        let grounding = Grounding {
            index: &index,
            embedder: embedder.as_ref(),
            llm: llm.as_ref(),
            cache: cache.as_ref(),
            counter: &SubtokenCounter,
        };
        let trace = match &args.on_failure {
            Some(message) => {
                let cfg = loop_config(&config, &index, config.n_or(DEFAULT_N_REFINEMENT), true);
                let trace = run_refinement_on_failure(&context, message, &grounding, &cfg)?;
                if trace.steps.is_empty() {
                    writeln!(io.err, "note: error is not a hallucination signal or the index is empty; nothing to refine")?;
                }
                trace
            }
            None => run_loop(&context, &grounding, &loop_config(&config, &index, config.completion_n(), false))?,
        };
        for step in &trace.steps {
            if let Some(e) = &step.error {
                writeln!(io.err, "warning: {:?} step failed: {e}", step.mode)?;
            }
        }
        let ranked = rank_completions(&trace);
        for (i, completion) in ranked.iter().enumerate() {
            line(io.out, &json!({"rank": i + 1, "completion": completion}))?;
        }
        if args.verbose {
            line(io.out, &json!({ "trace": trace }))?;
        }
        writeln!(
            io.err,
            "{} model call(s), {} step(s) in {} ms",
            trace.llm_calls,
            trace.steps.len(),
            started.elapsed().as_millis()
        )?;
        if ranked.is_empty() && trace.steps.iter().any(|s| s.error.is_some()) {
            bail!("every model call failed");
        }
        Ok(())
    })
}

#[derive(Debug, Clone, clap::Args)]
pub struct EvalArgs {
    /// Project to build completion tasks from.
    pub project: PathBuf,
    /// Number of tasks to sample.
    #[arg(long, default_value_t = 50)]
    pub tasks: usize,
    /// Seed of the task sampler.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Score the same traces cut off after each of these iterative step
    /// counts (e.g. `1,2,3`) instead of only `--k`.
    #[arg(long, value_delimiter = ',')]
    pub sweep_k: Vec<usize>,
    /// Skip tasks whose ground truth the model already predicts exactly from
    /// the bare context.
    #[arg(long)]
    pub skip_exact: bool,
    /// Also print every task and its generation trace.
    #[arg(long)]
    pub verbose: bool,
    #[command(flatten)]
    pub flags: RunFlags,
}

type RowPick = fn(&TaskScores) -> Option<&BestScores>;

#[derive(Serialize)]
struct TaskRow<'a> {
    task: &'a str,
    k: usize,
    #[serde(flatten)]
    scores: &'a TaskScores,
}

/// The trace as it stood after `k` iterative steps.
fn cut(trace: &GenerationTrace, k: usize) -> GenerationTrace {
    let steps: Vec<_> = trace.steps.iter().take(2 + k).cloned().collect();
    GenerationTrace {
        llm_calls: steps.iter().filter(|s| s.model_called || s.error.is_some()).count(),
        steps,
        k,
        ..trace.clone()
    }
}

fn predicts_exactly(llm: &dyn LanguageModel, cache: Option<&ResponseCache>, cfg: &LoopConfig, task: &CompletionTask) -> bool {
    let request = LlmRequest {
        prompt: task.prefix_context.clone(),
        max_new_tokens: cfg.max_new_tokens,
        temperature: cfg.temperature,
        num_completions: cfg.num_completions,
    };
    query(llm, cache, &request).is_ok_and(|(r, _)| {
        r.completions
            .first()
            .is_some_and(|c| prediction_for(c, &task.ground_truth).trim_end() == task.ground_truth.trim_end())
    })
}

/// Builds tasks from a project, runs the loop on each and scores every
/// prompt type.
///
/// Output: per task and k, `{"task": id, "k": k, "initial": S, "rag": S, "iterative": S}`
/// where S is `{"edit_distance", "normalized_edit_similarity", "api_recall"}` or null;
/// then per k and row, `{"aggregate": row, "k": k, "tasks", "mean_edit_distance",
/// "mean_edit_similarity", "mean_api_recall"}`.
pub fn cmd_eval(args: &EvalArgs, io: &mut Io<'_>) -> i32 {
    exit_code(io, |io| {
        let started = Instant::now();
        let config = RunConfig::resolve(args.flags.clone())?;
        let project = scan_project(&args.project, config.language)?;
        let embedder = config.embedder();
        let options = IndexOptions {
            index: config.index_config(),
            ..IndexOptions::default()
        };
        let pool = pool(config.workers)?;
        let (index, diagnostics) = pool.install(|| index_project(&project, embedder.as_ref(), &options))?;
        for d in &diagnostics {
            writeln!(io.err, "warning: {}: {}", d.path, d.message)?;
        }
        let llm = config.model()?;
        let cache = open_cache(&config)?;
        let sweep: Vec<usize> = if args.sweep_k.is_empty() { vec![config.k] } else { args.sweep_k.clone() };
        let max_k = sweep.iter().copied().max().unwrap_or(0);
        let cfg = LoopConfig {
            k: max_k,
            ..loop_config(&config, &index, config.completion_n(), false)
        };

        let exact = |t: &CompletionTask| predicts_exactly(llm.as_ref(), cache.as_ref(), &cfg, t);
        let filter: Option<&dyn Fn(&CompletionTask) -> bool> = if args.skip_exact { Some(&exact) } else { None };
        let set = build_tasks(&project, args.tasks, args.seed, filter);
        for d in &set.diagnostics {
            writeln!(io.err, "warning: {d}")?;
        }

        let grounding = Grounding {
            index: &index,
            embedder: embedder.as_ref(),
            llm: llm.as_ref(),
            cache: cache.as_ref(),
            counter: &SubtokenCounter,
        };
        let traces: Vec<apiground::Result<GenerationTrace>> = pool.install(|| {
            set.tasks
                .par_iter()
                .map(|t| run_loop(&t.prefix_context, &grounding, &cfg))
                .collect()
        });

        let mut failed = 0;
        let mut rows: BTreeMap<usize, Vec<TaskScores>> = BTreeMap::new();
        for (task, trace) in set.tasks.iter().zip(traces) {
            let trace = match trace {
                Ok(t) => t,
                Err(e) => {
                    failed += 1;
                    writeln!(io.err, "error: task {}: {e}", task.id)?;
                    continue;
                }
            };
            if args.verbose {
                line(io.out, &json!({ "task": task.id, "definition": task, "trace": trace }))?;
            }
            for &k in &sweep {
                let scores = score_trace(&cut(&trace, k), &task.ground_truth)?;
                line(io.out, &TaskRow { task: &task.id, k, scores: &scores })?;
                rows.entry(k).or_default().push(scores);
            }
        }
        for &k in &sweep {
            let scored = rows.get(&k).map(Vec::as_slice).unwrap_or_default();
            let picks: [(&str, RowPick); 3] = [
                ("initial", |s| s.initial.as_ref()),
                ("rag", |s| s.rag.as_ref()),
                ("iterative", |s| s.iterative.as_ref()),
            ];
            for (name, pick) in picks {
                if let Some(a) = aggregate(scored.iter().filter_map(pick)) {
                    let mut value = serde_json::to_value(&a)?;
                    value["aggregate"] = json!(name);
                    value["k"] = json!(k);
                    line(io.out, &value)?;
                }
            }
        }
        writeln!(
            io.err,
            "{} task(s), {} failed, {} ms",
            set.tasks.len(),
            failed,
            started.elapsed().as_millis()
        )?;
        if failed > 0 {
            bail!("{failed} task(s) failed");
        }
        Ok(())
    })
}

fn pool(workers: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(workers).build()?)
}
