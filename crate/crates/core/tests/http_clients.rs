//! Remote embedder and HTTP model client against a local scripted server.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::Duration;

use apiground::embed::{Embedder, RemoteEmbedder, RemoteEmbedderConfig};
use apiground::llm::{HttpLlm, HttpLlmConfig, LanguageModel, LlmRequest};
use apiground::Error;

#[derive(Debug, Clone)]
struct Received {
    authorization: Option<String>,
    body: String,
}

/// Serves one scripted `(status, body)` reply per connection, in order.
fn serve(replies: Vec<(u16, String)>) -> (String, Arc<Mutex<Vec<Received>>>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/v1", listener.local_addr().unwrap());
    let log = Arc::new(Mutex::new(Vec::new()));
    let seen = log.clone();
    thread::spawn(move || {
        for (status, reply) in replies {
            let (stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut length = 0;
            let mut authorization = None;
            loop {
                let mut header = String::new();
                reader.read_line(&mut header).unwrap();
                let header = header.trim_end();
                if header.is_empty() {
                    break;
                }
                let (name, value) = header.split_once(':').unwrap_or((header, ""));
                match name.to_ascii_lowercase().as_str() {
                    "content-length" => length = value.trim().parse().unwrap(),
                    "authorization" => authorization = Some(value.trim().to_string()),
                    _ => {}
                }
            }
            let mut body = vec![0; length];
            reader.read_exact(&mut body).unwrap();
            seen.lock().unwrap().push(Received {
                authorization,
                body: String::from_utf8(body).unwrap(),
            });
            let mut stream = stream;
            write!(
                stream,
                "HTTP/1.1 {status} X\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{reply}",
                reply.len()
            )
            .unwrap();
        }
    });
    (url, log)
}

fn llm(url: &str) -> HttpLlm {
    let mut config = HttpLlmConfig::new(url);
    config.token = Some("secret".into());
    config.timeout = Duration::from_secs(5);
    HttpLlm::new(config)
}

#[test]
fn llm_round_trip_sends_request_schema_and_token() {
    let (url, log) = serve(vec![(200, r#"{"completions": ["a()", "b()"], "usage_tokens": 4}"#.into())]);
    let request = LlmRequest {
        num_completions: 2,
        ..LlmRequest::new("def f():\n")
    };
    let response = llm(&url).complete(&request).unwrap();
    assert_eq!(response.completions, ["a()", "b()"]);
    let got = log.lock().unwrap()[0].clone();
    assert_eq!(got.authorization.as_deref(), Some("Bearer secret"));
    let sent: serde_json::Value = serde_json::from_str(&got.body).unwrap();
    assert_eq!(sent["prompt"], "def f():\n");
    assert_eq!(sent["max_new_tokens"], 256);
    assert_eq!(sent["num_completions"], 2);
}

#[test]
fn llm_retries_server_errors() {
    let (url, log) = serve(vec![
        (503, "{}".into()),
        (200, r#"{"completions": ["ok"]}"#.into()),
    ]);
    let response = llm(&url).complete(&LlmRequest::new("x")).unwrap();
    assert_eq!(response.completions, ["ok"]);
    assert_eq!(log.lock().unwrap().len(), 2);
}

#[test]
fn llm_gives_up_after_max_attempts() {
    let (url, _) = serve(vec![(500, "{}".into()), (500, "{}".into()), (500, "{}".into())]);
    let err = llm(&url).complete(&LlmRequest::new("x")).unwrap_err();
    assert!(matches!(err, Error::Transport { attempts: 3, .. }), "{err}");
    assert!(err.is_retryable());
}

#[test]
fn llm_rejects_wrong_completion_count() {
    let (url, _) = serve(vec![(200, r#"{"completions": ["a", "b"]}"#.into())]);
    let err = llm(&url).complete(&LlmRequest::new("x")).unwrap_err();
    assert!(matches!(err, Error::Protocol(_)), "{err}");
}

fn embedder(url: &str, dimension: usize) -> RemoteEmbedder {
    let mut config = RemoteEmbedderConfig::new(url, "test-model", dimension);
    config.token = Some("emb".into());
    config.timeout = Duration::from_secs(5);
    RemoteEmbedder::new(config)
}

#[test]
fn remote_embedder_normalizes_and_records_its_id() {
    let (url, log) = serve(vec![(200, r#"{"embedding": [3.0, 4.0, 0.0]}"#.into())]);
    let e = embedder(&url, 3);
    let v = e.embed("relevance(document, keyword)").unwrap();
    assert_eq!(v.values(), [0.6, 0.8, 0.0]);
    assert_eq!(v.embedder_id(), e.id());
    assert_eq!(e.id(), "remote:test-model/d3");
    let got = log.lock().unwrap()[0].clone();
    assert_eq!(got.authorization.as_deref(), Some("Bearer emb"));
    assert_eq!(serde_json::from_str::<serde_json::Value>(&got.body).unwrap()["text"], "relevance(document, keyword)");
}

#[test]
fn remote_embedder_dimension_mismatch_is_incompatible() {
    let (url, _) = serve(vec![(200, r#"{"embedding": [1.0, 0.0]}"#.into())]);
    let err = embedder(&url, 3).embed("x").unwrap_err();
    assert!(matches!(err, Error::Incompatible { .. }), "{err}");
}

#[test]
fn remote_embedder_retries_then_succeeds() {
    let (url, log) = serve(vec![(502, "{}".into()), (200, r#"{"embedding": [0.0, 2.0, 0.0]}"#.into())]);
    let v = embedder(&url, 3).embed("x").unwrap();
    assert_eq!(v.values(), [0.0, 1.0, 0.0]);
    assert_eq!(log.lock().unwrap().len(), 2);
}

#[test]
fn remote_embedder_skips_the_call_for_blank_text() {
    let e = embedder("http://127.0.0.1:9/unused", 4);
    assert!(e.embed("   ").unwrap().is_zero());
}
