//! Black-box language model interface, an HTTP client, a scripted mock and a
//! response cache.
//!
//! HTTP wire format: `POST <url>` with the JSON-encoded [`LlmRequest`]
//! (`{"prompt", "max_new_tokens", "temperature", "num_completions"}`) and an
//! optional `Authorization: Bearer <token>` header; the reply is a JSON
//! [`LlmResponse`] (`{"completions": [...], "usage_tokens": n}`) whose
//! completion count must equal `num_completions`.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::project::sha256_hex;

pub const DEFAULT_MAX_NEW_TOKENS: u32 = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LlmRequest {
    pub prompt: String,
    pub max_new_tokens: u32,
    pub temperature: f64,
    pub num_completions: u32,
}

impl LlmRequest {
    pub fn new(prompt: impl Into<String>) -> Self {
        LlmRequest {
            prompt: prompt.into(),
            max_new_tokens: DEFAULT_MAX_NEW_TOKENS,
            temperature: 0.0,
            num_completions: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LlmResponse {
    pub completions: Vec<String>,
    #[serde(default)]
    pub usage_tokens: u64,
}

pub trait LanguageModel: Send + Sync {
    /// Identifies the model and endpoint; part of every cache key.
    fn id(&self) -> &str;

    fn complete(&self, request: &LlmRequest) -> Result<LlmResponse>;
}

fn validate(request: &LlmRequest) -> Result<()> {
    if request.num_completions == 0 || request.max_new_tokens == 0 {
        return Err(Error::InvalidArgument("num_completions and max_new_tokens must be positive".into()));
    }
    if request.temperature.is_nan() || request.temperature < 0.0 {
        return Err(Error::InvalidArgument("temperature must be non-negative".into()));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct HttpLlmConfig {
    pub url: String,
    pub token: Option<String>,
    pub max_attempts: u32,
    pub timeout: Duration,
}

impl HttpLlmConfig {
    pub fn new(url: impl Into<String>) -> Self {
        HttpLlmConfig {
            url: url.into(),
            token: None,
            max_attempts: 3,
            timeout: Duration::from_secs(120),
        }
    }
}

pub struct HttpLlm {
    config: HttpLlmConfig,
    id: String,
    agent: ureq::Agent,
}

impl HttpLlm {
    pub fn new(config: HttpLlmConfig) -> Self {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(config.timeout))
            .build()
            .into();
        HttpLlm {
            id: format!("http:{}", config.url),
            agent,
            config,
        }
    }
}

impl LanguageModel for HttpLlm {
    fn id(&self) -> &str {
        &self.id
    }

    fn complete(&self, request: &LlmRequest) -> Result<LlmResponse> {
        validate(request)?;
        let attempts = self.config.max_attempts.max(1);
        let mut last = String::new();
        for attempt in 1..=attempts {
            let mut call = self.agent.post(&self.config.url);
            if let Some(token) = &self.config.token {
                call = call.header("Authorization", &format!("Bearer {token}"));
            }
            match call.send_json(request) {
                Ok(mut response) => {
                    let body: LlmResponse = response
                        .body_mut()
                        .read_json()
                        .map_err(|e| Error::Protocol(e.to_string()))?;
                    if body.completions.len() != request.num_completions as usize {
                        return Err(Error::Protocol(format!(
                            "expected {} completions, got {}",
                            request.num_completions,
                            body.completions.len()
                        )));
                    }
                    return Ok(body);
                }
                Err(e) => {
                    last = e.to_string();
                    if attempt < attempts {
                        std::thread::sleep(Duration::from_millis(100 * u64::from(attempt)));
                    }
                }
            }
        }
        Err(Error::Transport { attempts, message: last })
    }
}

/// Deterministic mock answering from substring rules.
///
/// Fixture format:
///
/// ```json
/// {
///   "id": "mock-name",
///   "rules": [
///     {"if_contains": ["a", "b"], "unless_contains": ["c"], "completions": ["..."]},
///     {"if_contains": ["boom"], "error": "connection reset"}
///   ],
///   "default": ["..."]
/// }
/// ```
///
/// The first rule whose `if_contains` substrings all occur in the prompt and
/// whose `unless_contains` substrings all do not occur wins. Its completions
/// are repeated cyclically up to `num_completions`; a rule with `error`
/// fails with a transport error instead.
#[derive(Debug, Serialize, Deserialize)]
pub struct ScriptedLlm {
    pub id: String,
    #[serde(default)]
    pub rules: Vec<ScriptRule>,
    pub default: Vec<String>,
    #[serde(skip)]
    calls: AtomicUsize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScriptRule {
    #[serde(default)]
    pub if_contains: Vec<String>,
    #[serde(default)]
    pub unless_contains: Vec<String>,
    #[serde(default)]
    pub completions: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScriptedLlm {
    pub fn new(id: impl Into<String>, rules: Vec<ScriptRule>, default: Vec<String>) -> Self {
        ScriptedLlm {
            id: id.into(),
            rules,
            default,
            calls: AtomicUsize::new(0),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let llm: ScriptedLlm = serde_json::from_str(text)?;
        if llm.default.is_empty() {
            return Err(Error::InvalidArgument("mock script needs at least one default completion".into()));
        }
        Ok(llm)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path).map_err(|e| Error::io(path, e))?)
    }

    /// Number of `complete` calls so far.
    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }
}

impl ScriptRule {
    fn matches(&self, prompt: &str) -> bool {
        self.if_contains.iter().all(|s| prompt.contains(s.as_str()))
            && !self.unless_contains.iter().any(|s| prompt.contains(s.as_str()))
    }
}

impl LanguageModel for ScriptedLlm {
    fn id(&self) -> &str {
        &self.id
    }

    fn complete(&self, request: &LlmRequest) -> Result<LlmResponse> {
        validate(request)?;
        self.calls.fetch_add(1, Ordering::SeqCst);
        let rule = self.rules.iter().find(|r| r.matches(&request.prompt));
        if let Some(message) = rule.and_then(|r| r.error.as_ref()) {
            return Err(Error::Transport {
                attempts: 1,
                message: message.clone(),
            });
        }
        let pool = match rule {
            Some(r) if !r.completions.is_empty() => &r.completions,
            _ => &self.default,
        };
        let completions: Vec<String> = pool.iter().cycle().take(request.num_completions as usize).cloned().collect();
        let usage_tokens = completions.iter().map(|c| crate::tokens::count_tokens(c) as u64).sum();
        Ok(LlmResponse {
            completions,
            usage_tokens,
        })
    }
}

/// Thread-safe response cache keyed by model id and full request, optionally
/// persisted as append-only JSON lines `{"key": ..., "response": ...}`.
pub struct ResponseCache {
    entries: Mutex<HashMap<String, LlmResponse>>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    key: String,
    response: LlmResponse,
}

impl ResponseCache {
    pub fn in_memory() -> Self {
        ResponseCache {
            entries: Mutex::new(HashMap::new()),
            file: None,
            path: None,
        }
    }

    /// Opens (or creates) a cache file. Unparseable lines are ignored.
    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(|e| Error::io(path, e))?);
            for line in reader.lines() {
                let line = line.map_err(|e| Error::io(path, e))?;
                if let Ok(entry) = serde_json::from_str::<CacheLine>(&line) {
                    entries.insert(entry.key, entry.response);
                }
            }
        } else if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| Error::io(path, e))?;
        Ok(ResponseCache {
            entries: Mutex::new(entries),
            file: Some(Mutex::new(file)),
            path: Some(path.to_path_buf()),
        })
    }

    pub fn key(model_id: &str, request: &LlmRequest) -> String {
        let payload = serde_json::to_string(&(model_id, request)).expect("request serializes");
        sha256_hex(payload.as_bytes())
    }

    pub fn get(&self, key: &str) -> Option<LlmResponse> {
        self.entries.lock().unwrap_or_else(|e| e.into_inner()).get(key).cloned()
    }

    pub fn insert(&self, key: String, response: LlmResponse) -> Result<()> {
        if let Some(file) = &self.file {
            let line = serde_json::to_string(&CacheLine {
                key: key.clone(),
                response: response.clone(),
            })?;
            let mut f = file.lock().unwrap_or_else(|e| e.into_inner());
            writeln!(f, "{line}").map_err(|e| Error::io(self.path.clone().unwrap_or_default(), e))?;
        }
        self.entries.lock().unwrap_or_else(|e| e.into_inner()).insert(key, response);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Answers `request` from `cache` when possible. Returns the response and
/// whether the model was actually called.
pub fn query(llm: &dyn LanguageModel, cache: Option<&ResponseCache>, request: &LlmRequest) -> Result<(LlmResponse, bool)> {
    let Some(cache) = cache else {
        return Ok((llm.complete(request)?, true));
    };
    let key = ResponseCache::key(llm.id(), request);
    if let Some(hit) = cache.get(&key) {
        return Ok((hit, false));
    }
    let response = llm.complete(request)?;
    cache.insert(key, response.clone())?;
    Ok((response, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mock() -> ScriptedLlm {
        ScriptedLlm::from_json(
            r#"{
                "id": "m",
                "rules": [
                    {"if_contains": ["fail"], "error": "down"},
                    {"if_contains": ["relevance("], "unless_contains": ["skip"], "completions": ["good", "alt"]}
                ],
                "default": ["bad"]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn rules_and_cycling() {
        let m = mock();
        let mut req = LlmRequest::new("uses relevance(x)");
        req.num_completions = 3;
        assert_eq!(m.complete(&req).unwrap().completions, ["good", "alt", "good"]);
        assert_eq!(m.complete(&LlmRequest::new("relevance( skip")).unwrap().completions, ["bad"]);
        assert!(matches!(m.complete(&LlmRequest::new("fail")), Err(Error::Transport { .. })));
        assert_eq!(m.calls(), 3);
    }

    #[test]
    fn script_without_default_is_rejected() {
        assert!(ScriptedLlm::from_json(r#"{"id": "x", "default": []}"#).is_err());
    }

    #[test]
    fn invalid_requests() {
        let mut req = LlmRequest::new("p");
        req.num_completions = 0;
        assert!(mock().complete(&req).is_err());
        let mut req = LlmRequest::new("p");
        req.temperature = -1.0;
        assert!(mock().complete(&req).is_err());
    }

    #[test]
    fn cache_serves_repeats_and_persists() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub/cache.jsonl");
        let m = mock();
        let req = LlmRequest::new("relevance(");
        {
            let cache = ResponseCache::open(&path).unwrap();
            assert!(query(&m, Some(&cache), &req).unwrap().1);
            assert!(!query(&m, Some(&cache), &req).unwrap().1);
        }
        let reopened = ResponseCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 1);
        let (resp, called) = query(&m, Some(&reopened), &req).unwrap();
        assert!(!called);
        assert_eq!(resp.completions, ["good"]);
        assert_eq!(m.calls(), 1);
    }

    #[test]
    fn cache_key_covers_parameters() {
        let a = LlmRequest::new("p");
        let mut b = a.clone();
        b.temperature = 0.1;
        assert_ne!(ResponseCache::key("m", &a), ResponseCache::key("m", &b));
        assert_ne!(ResponseCache::key("m", &a), ResponseCache::key("n", &a));
    }
}
