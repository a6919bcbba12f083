use std::sync::{Arc, Condvar, Mutex};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{Embedder, EmbeddingVector};
use crate::error::{Error, Result};

/// Client for a single-endpoint embedding service.
///
/// Request: `POST <url>` with body `{"text": "..."}` and, when a token is
/// configured, an `Authorization: Bearer <token>` header.
/// Response: `{"embedding": [f32, ...]}`. The returned vector is normalized
/// locally; a length different from the configured dimension is an
/// incompatibility error.
pub struct RemoteEmbedder {
    config: RemoteEmbedderConfig,
    id: Arc<str>,
    agent: ureq::Agent,
    permits: Semaphore,
}

#[derive(Debug, Clone)]
pub struct RemoteEmbedderConfig {
    pub url: String,
    pub token: Option<String>,
    /// Model name recorded in the embedder id.
    pub model: String,
    pub dimension: usize,
    pub max_attempts: u32,
    pub max_in_flight: usize,
    pub timeout: Duration,
}

impl RemoteEmbedderConfig {
    pub fn new(url: impl Into<String>, model: impl Into<String>, dimension: usize) -> Self {
        RemoteEmbedderConfig {
            url: url.into(),
            token: None,
            model: model.into(),
            dimension,
            max_attempts: 3,
            max_in_flight: 4,
            timeout: Duration::from_secs(30),
        }
    }
}

#[derive(Serialize)]
struct EmbedRequest<'a> {
    text: &'a str,
}

#[derive(Deserialize)]
struct EmbedResponse {
    embedding: Vec<f32>,
}

impl RemoteEmbedder {
    pub fn new(config: RemoteEmbedderConfig) -> Self {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(config.timeout))
            .build()
            .into();
        RemoteEmbedder {
            id: Arc::from(format!("remote:{}/d{}", config.model, config.dimension)),
            permits: Semaphore::new(config.max_in_flight.max(1)),
            agent,
            config,
        }
    }

    fn request(&self, text: &str) -> std::result::Result<Vec<f32>, RequestFailure> {
        let _permit = self.permits.acquire();
        let mut request = self.agent.post(&self.config.url);
        if let Some(token) = &self.config.token {
            request = request.header("Authorization", &format!("Bearer {token}"));
        }
        let mut response = request
            .send_json(EmbedRequest { text })
            .map_err(|e| RequestFailure::Transport(e.to_string()))?;
        let body: EmbedResponse = response
            .body_mut()
            .read_json()
            .map_err(|e| RequestFailure::Protocol(e.to_string()))?;
        Ok(body.embedding)
    }
}

enum RequestFailure {
    Transport(String),
    Protocol(String),
}

impl Embedder for RemoteEmbedder {
    fn id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.config.dimension
    }

    fn embed(&self, text: &str) -> Result<EmbeddingVector> {
        if text.trim().is_empty() {
            return Ok(EmbeddingVector::zero(self.config.dimension, self.id.clone()));
        }
        let attempts = self.config.max_attempts.max(1);
        let mut last = String::new();
        for attempt in 1..=attempts {
            match self.request(text) {
                Ok(values) => {
                    if values.len() != self.config.dimension {
                        return Err(Error::Incompatible {
                            expected: format!("{} (dimension {})", self.id, self.config.dimension),
                            found: format!("dimension {}", values.len()),
                        });
                    }
                    return Ok(EmbeddingVector::normalized(values, self.id.clone()));
                }
                Err(RequestFailure::Protocol(msg)) => return Err(Error::Protocol(msg)),
                Err(RequestFailure::Transport(msg)) => {
                    last = msg;
                    if attempt < attempts {
                        std::thread::sleep(Duration::from_millis(50 * u64::from(attempt)));
                    }
                }
            }
        }
        Err(Error::Transport {
            attempts,
            message: last,
        })
    }
}

/// Counting semaphore bounding concurrent requests.
struct Semaphore {
    available: Mutex<usize>,
    freed: Condvar,
}

struct Permit<'a>(&'a Semaphore);

impl Semaphore {
    fn new(permits: usize) -> Self {
        Semaphore {
            available: Mutex::new(permits),
            freed: Condvar::new(),
        }
    }

    fn acquire(&self) -> Permit<'_> {
        let mut n = self.available.lock().unwrap_or_else(|e| e.into_inner());
        while *n == 0 {
            n = self.freed.wait(n).unwrap_or_else(|e| e.into_inner());
        }
        *n -= 1;
        Permit(self)
    }
}

impl Drop for Permit<'_> {
    fn drop(&mut self) {
        let mut n = self.0.available.lock().unwrap_or_else(|e| e.into_inner());
        *n += 1;
        self.0.freed.notify_one();
    }
}
