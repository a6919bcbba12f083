use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};
use apiground::embed::{Embedder, RemoteEmbedder, RemoteEmbedderConfig, SubtokenEmbedder};
use apiground::generate::{DEFAULT_K, DEFAULT_N_COMPLETION};
use apiground::index::IndexConfig;
use apiground::llm::{HttpLlm, HttpLlmConfig, LanguageModel, ScriptedLlm};
use apiground::prompt::{Placement, DEFAULT_BUDGET};
use clap::Args;
use serde::Deserialize;

pub const LLM_TOKEN_VAR: &str = "APIGROUND_LLM_TOKEN";
pub const EMBEDDER_TOKEN_VAR: &str = "APIGROUND_EMBEDDER_TOKEN";
pub const DEFAULT_REMOTE_DIMENSION: usize = 768;

/// Settings shared by every subcommand. Each may come from a flag or from the
/// flat TOML file named by `--config`; flags win. Secrets are read from the
/// environment only.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunFlags {
    /// Iterative steps after the initial and RAG steps.
    #[arg(long)]
    pub k: Option<usize>,
    /// API references per prompt.
    #[arg(long)]
    pub n: Option<usize>,
    /// Prompt budget in tokens.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Where the reference block goes: prepend or append.
    #[arg(long)]
    pub placement: Option<String>,
    /// `builtin`, or the URL of an embedding service.
    #[arg(long)]
    pub embedder: Option<String>,
    /// Vector dimension of a remote embedder.
    #[arg(long)]
    pub embedder_dim: Option<usize>,
    /// URL of an LLM completion endpoint.
    #[arg(long)]
    pub llm_url: Option<String>,
    /// Scripted mock LLM fixture (JSON) used instead of an endpoint.
    #[arg(long)]
    pub mock: Option<PathBuf>,
    /// Response cache file (JSON lines), created if missing.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Worker threads for parallel stages.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Indexes with fewer entries are searched by linear scan.
    #[arg(long)]
    pub linear_threshold: Option<usize>,
    /// Completions requested per prompt.
    #[arg(long)]
    pub num_completions: Option<u32>,
    #[arg(long)]
    pub temperature: Option<f64>,
    /// Project language (python or javascript); detected when absent.
    #[arg(long)]
    pub language: Option<String>,
    /// Flat TOML file with any of the settings above.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

impl RunFlags {
    /// Fills every unset flag from the config file, if one was given.
    pub fn with_config_file(self) -> anyhow::Result<RunFlags> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading config {}", path.display()))?;
        let file: RunFlags = toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        Ok(self.or(file))
    }

    fn or(self, other: RunFlags) -> RunFlags {
        RunFlags {
            k: self.k.or(other.k),
            n: self.n.or(other.n),
            budget: self.budget.or(other.budget),
            placement: self.placement.or(other.placement),
            embedder: self.embedder.or(other.embedder),
            embedder_dim: self.embedder_dim.or(other.embedder_dim),
            llm_url: self.llm_url.or(other.llm_url),
            mock: self.mock.or(other.mock),
            cache: self.cache.or(other.cache),
            workers: self.workers.or(other.workers),
            linear_threshold: self.linear_threshold.or(other.linear_threshold),
            num_completions: self.num_completions.or(other.num_completions),
            temperature: self.temperature.or(other.temperature),
            language: self.language.or(other.language),
            config: self.config,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EmbedderChoice {
    Builtin,
    Remote { url: String, dimension: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelChoice {
    Mock(PathBuf),
    Http(String),
}

/// Fully resolved settings.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub k: usize,
    /// `None` leaves the choice to the command (completion vs refinement).
    pub n: Option<usize>,
    pub budget_tokens: usize,
    pub placement: Option<Placement>,
    pub embedder: EmbedderChoice,
    pub model: Option<ModelChoice>,
    pub cache: Option<PathBuf>,
    pub workers: usize,
    pub linear_threshold: usize,
    pub num_completions: u32,
    pub temperature: f64,
    pub language: Option<apiground::extract::Language>,
}

impl RunConfig {
    pub fn resolve(flags: RunFlags) -> anyhow::Result<RunConfig> {
        let flags = flags.with_config_file()?;
        if flags.n == Some(0) {
            bail!("--n must be positive");
        }
        if flags.budget == Some(0) {
            bail!("--budget must be positive");
        }
        let embedder = match flags.embedder.as_deref() {
            None | Some("builtin") => EmbedderChoice::Builtin,
            Some(url) if url.starts_with("http://") || url.starts_with("https://") => EmbedderChoice::Remote {
                url: url.to_string(),
                dimension: flags.embedder_dim.unwrap_or(DEFAULT_REMOTE_DIMENSION),
            },
            Some(other) => bail!("unknown embedder `{other}`: expected `builtin` or an http(s) URL"),
        };
        let model = match (flags.mock, flags.llm_url) {
            (Some(_), Some(_)) => bail!("--mock and --llm-url are mutually exclusive"),
            (Some(path), None) => Some(ModelChoice::Mock(path)),
            (None, Some(url)) => Some(ModelChoice::Http(url)),
            (None, None) => None,
        };
        Ok(RunConfig {
            k: flags.k.unwrap_or(DEFAULT_K),
            n: flags.n,
            budget_tokens: flags.budget.unwrap_or(DEFAULT_BUDGET),
            placement: flags.placement.as_deref().map(Placement::from_str).transpose()?,
            embedder,
            model,
            cache: flags.cache,
            workers: flags
                .workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
                .max(1),
            linear_threshold: flags.linear_threshold.unwrap_or(IndexConfig::default().linear_threshold),
            num_completions: flags.num_completions.unwrap_or(1).max(1),
            temperature: flags.temperature.unwrap_or(0.0),
            language: flags.language.as_deref().map(str::parse).transpose()?,
        })
    }

    pub fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    pub fn completion_n(&self) -> usize {
        self.n_or(DEFAULT_N_COMPLETION)
    }

    pub fn index_config(&self) -> IndexConfig {
        IndexConfig {
            linear_threshold: self.linear_threshold,
            ..IndexConfig::default()
        }
    }

    pub fn embedder(&self) -> Box<dyn Embedder> {
        match &self.embedder {
            EmbedderChoice::Builtin => Box::new(SubtokenEmbedder::default()),
            EmbedderChoice::Remote { url, dimension } => {
                let mut config = RemoteEmbedderConfig::new(url.clone(), url.clone(), *dimension);
                config.token = std::env::var(EMBEDDER_TOKEN_VAR).ok();
                config.max_in_flight = self.workers;
                Box::new(RemoteEmbedder::new(config))
            }
        }
    }

    pub fn model(&self) -> anyhow::Result<Box<dyn LanguageModel>> {
        match &self.model {
            Some(ModelChoice::Mock(path)) => Ok(Box::new(load_mock(path)?)),
            Some(ModelChoice::Http(url)) => {
                let mut config = HttpLlmConfig::new(url.clone());
                config.token = std::env::var(LLM_TOKEN_VAR).ok();
                Ok(Box::new(HttpLlm::new(config)))
            }
            None => bail!("no language model configured: pass --mock <fixture> or --llm-url <url>"),
        }
    }
}

fn load_mock(path: &Path) -> anyhow::Result<ScriptedLlm> {
    ScriptedLlm::load(path).with_context(|| format!("loading mock {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::resolve(RunFlags::default()).unwrap();
        assert_eq!((c.k, c.completion_n(), c.budget_tokens), (3, 20, 2048));
        assert_eq!(c.n_or(3), 3);
        assert_eq!(c.embedder, EmbedderChoice::Builtin);
        assert_eq!(c.linear_threshold, 512);
        assert!(c.model.is_none() && c.placement.is_none());
    }

    #[test]
    fn flags_win_over_the_config_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "k = 1\nn = 5\nbudget = 512\nplacement = \"append\"\nmock = \"m.json\"\n").unwrap();
        let flags = RunFlags {
            k: Some(2),
            config: Some(path),
            ..RunFlags::default()
        };
        let c = RunConfig::resolve(flags).unwrap();
        assert_eq!((c.k, c.n, c.budget_tokens), (2, Some(5), 512));
        assert_eq!(c.placement, Some(Placement::Append));
        assert_eq!(c.model, Some(ModelChoice::Mock("m.json".into())));
    }

    #[test]
    fn rejects_bad_settings() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "unknown_key = 1\n").unwrap();
        assert!(RunConfig::resolve(RunFlags { config: Some(path), ..RunFlags::default() }).is_err());
        assert!(RunConfig::resolve(RunFlags { n: Some(0), ..RunFlags::default() }).is_err());
        assert!(RunConfig::resolve(RunFlags { embedder: Some("bert".into()), ..RunFlags::default() }).is_err());
        let both = RunFlags {
            mock: Some("m.json".into()),
            llm_url: Some("http://x".into()),
            ..RunFlags::default()
        };
        assert!(RunConfig::resolve(both).is_err());
    }
}
