//! A project's indexed API surface: references, their rendered lines, their
//! vectors and the search index, plus on-disk persistence.
//!
//! An index directory holds two files:
//!
//! * `manifest.json`: metadata and entries (see [`ProjectIndexManifest`]);
//! * `vectors.bin`: little-endian `f32` values, one vector per entry stored
//!   consecutively in entry order. `vector_offset` and `vector_len` of an
//!   entry count floats, not bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use chrono::{DateTime, Utc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embed::{Embedder, EmbeddingVector};
use crate::error::{Error, Result};
use crate::extract::{extract_api_references_with, Diagnostic, ExtractOptions, Language};
use crate::index::{IndexConfig, ReferenceIndex, RefId};
use crate::project::{sha256_hex, Project};
use crate::reference::{render_reference, ApiReference, ReferenceKind, RenderOptions};

pub const FORMAT_VERSION: u32 = 1;
pub const MANIFEST_FILE: &str = "manifest.json";
pub const VECTORS_FILE: &str = "vectors.bin";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectIndexManifest {
    pub format_version: u32,
    pub embedder_id: String,
    pub dimension: usize,
    pub language: Language,
    pub created_at: DateTime<Utc>,
    pub docstring_limit: usize,
    /// Relative path → hex SHA-256 of the file contents, for every scanned file.
    pub file_digests: BTreeMap<String, String>,
    /// Hex SHA-256 of `vectors.bin`.
    pub vectors_digest: String,
    pub entries: Vec<ManifestEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub reference: ApiReference,
    pub vector_offset: usize,
    pub vector_len: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct IndexOptions {
    pub docstring_limit: usize,
    pub index: IndexConfig,
}

impl Default for IndexOptions {
    fn default() -> Self {
        IndexOptions {
            docstring_limit: RenderOptions::default().docstring_limit,
            index: IndexConfig::default(),
        }
    }
}

/// Immutable; ref ids are positions in [`ApiIndex::references`].
#[derive(Debug, Clone)]
pub struct ApiIndex {
    manifest: ProjectIndexManifest,
    rendered: Vec<String>,
    vectors: Vec<f32>,
    index: ReferenceIndex,
}

impl ApiIndex {
    /// Renders and embeds `references`. References whose rendered line embeds
    /// to the zero vector are left out and reported.
    pub fn build(
        references: Vec<ApiReference>,
        language: Language,
        embedder: &dyn Embedder,
        file_digests: BTreeMap<String, String>,
        options: &IndexOptions,
    ) -> Result<(ApiIndex, Vec<Diagnostic>)> {
        let render = RenderOptions {
            docstring_limit: options.docstring_limit,
        };
        let embedded: Vec<Result<(ApiReference, String, EmbeddingVector)>> = references
            .into_par_iter()
            .map(|r| {
                let line = render_reference(&r, &render);
                let v = embedder.embed(&line)?;
                Ok((r, line, v))
            })
            .collect();

        let dimension = embedder.dimension();
        let mut diagnostics = Vec::new();
        let mut entries = Vec::new();
        let mut rendered = Vec::new();
        let mut vectors = Vec::new();
        for item in embedded {
            let (reference, line, vector) = item?;
            if vector.is_zero() {
                diagnostics.push(Diagnostic {
                    path: reference.source_file.clone(),
                    message: format!("`{}` has no embeddable text; not indexed", reference.qualified_name),
                });
                continue;
            }
            entries.push(ManifestEntry {
                reference,
                vector_offset: vectors.len(),
                vector_len: dimension,
            });
            rendered.push(line);
            vectors.extend_from_slice(vector.values());
        }

        let manifest = ProjectIndexManifest {
            format_version: FORMAT_VERSION,
            embedder_id: embedder.id().to_string(),
            dimension,
            language,
            created_at: Utc::now(),
            docstring_limit: options.docstring_limit,
            file_digests,
            vectors_digest: sha256_hex(&vector_bytes(&vectors)),
            entries,
        };
        let index = search_index(&manifest, &vectors, options.index)?;
        Ok((
            ApiIndex {
                manifest,
                rendered,
                vectors,
                index,
            },
            diagnostics,
        ))
    }

    pub fn manifest(&self) -> &ProjectIndexManifest {
        &self.manifest
    }

    pub fn language(&self) -> Language {
        self.manifest.language
    }

    pub fn len(&self) -> usize {
        self.manifest.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.manifest.entries.is_empty()
    }

    pub fn reference(&self, id: RefId) -> &ApiReference {
        &self.manifest.entries[id as usize].reference
    }

    pub fn references(&self) -> impl Iterator<Item = &ApiReference> {
        self.manifest.entries.iter().map(|e| &e.reference)
    }

    /// The rendered line of a reference, as embedded and shown in prompts.
    pub fn rendered(&self, id: RefId) -> &str {
        &self.rendered[id as usize]
    }

    pub fn search(&self) -> &ReferenceIndex {
        &self.index
    }

    pub fn embedder_id(&self) -> &str {
        &self.manifest.embedder_id
    }

    /// Fails when `embedder` did not produce this index's vectors.
    pub fn check_embedder(&self, embedder: &dyn Embedder) -> Result<()> {
        if embedder.id() != self.manifest.embedder_id || embedder.dimension() != self.manifest.dimension {
            return Err(Error::Incompatible {
                expected: format!("{} (dimension {})", self.manifest.embedder_id, self.manifest.dimension),
                found: format!("{} (dimension {})", embedder.id(), embedder.dimension()),
            });
        }
        Ok(())
    }

    /// Reference counts per kind.
    pub fn counts(&self) -> BTreeMap<ReferenceKind, usize> {
        let mut counts = BTreeMap::new();
        for r in self.references() {
            *counts.entry(r.kind).or_insert(0) += 1;
        }
        counts
    }

    pub fn save(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let vectors_path = dir.join(VECTORS_FILE);
        fs::write(&vectors_path, vector_bytes(&self.vectors)).map_err(|e| Error::io(&vectors_path, e))?;
        let manifest_path = dir.join(MANIFEST_FILE);
        let text = serde_json::to_string_pretty(&self.manifest)?;
        fs::write(&manifest_path, text + "\n").map_err(|e| Error::io(&manifest_path, e))?;
        Ok(())
    }

    pub fn load(dir: &Path, config: IndexConfig) -> Result<ApiIndex> {
        let manifest_path = dir.join(MANIFEST_FILE);
        let text = fs::read_to_string(&manifest_path).map_err(|e| Error::io(&manifest_path, e))?;
        let manifest: ProjectIndexManifest = serde_json::from_str(&text)?;
        if manifest.format_version != FORMAT_VERSION {
            return Err(Error::Integrity {
                entry: MANIFEST_FILE.into(),
                reason: format!("unsupported format version {}", manifest.format_version),
            });
        }
        let vectors_path = dir.join(VECTORS_FILE);
        let blob = fs::read(&vectors_path).map_err(|e| Error::io(&vectors_path, e))?;
        let vectors = validate_blob(&manifest, &blob)?;

        let render = RenderOptions {
            docstring_limit: manifest.docstring_limit,
        };
        let rendered = manifest
            .entries
            .iter()
            .map(|e| render_reference(&e.reference, &render))
            .collect();
        let index = search_index(&manifest, &vectors, config)?;
        Ok(ApiIndex {
            manifest,
            rendered,
            vectors,
            index,
        })
    }
}

fn entry_name(manifest: &ProjectIndexManifest, i: usize) -> String {
    format!("#{i} {}", manifest.entries[i].reference.qualified_name)
}

fn validate_blob(manifest: &ProjectIndexManifest, blob: &[u8]) -> Result<Vec<f32>> {
    let floats = blob.len() / 4;
    if !blob.len().is_multiple_of(4) {
        // The entry that would own the dangling bytes.
        let culprit = manifest
            .entries
            .iter()
            .position(|e| e.vector_offset <= floats && floats < e.vector_offset + e.vector_len);
        return Err(Error::Integrity {
            entry: culprit.map_or_else(|| VECTORS_FILE.to_string(), |i| entry_name(manifest, i)),
            reason: format!("vector payload of {} bytes is not a whole number of floats", blob.len()),
        });
    }
    for (i, e) in manifest.entries.iter().enumerate() {
        if e.vector_len != manifest.dimension {
            return Err(Error::Integrity {
                entry: entry_name(manifest, i),
                reason: format!("vector length {} differs from dimension {}", e.vector_len, manifest.dimension),
            });
        }
        if e.vector_offset.checked_add(e.vector_len).is_none_or(|end| end > floats) {
            return Err(Error::Integrity {
                entry: entry_name(manifest, i),
                reason: format!(
                    "vector range {}..{} exceeds the {floats} stored floats",
                    e.vector_offset,
                    e.vector_offset.saturating_add(e.vector_len)
                ),
            });
        }
    }
    if sha256_hex(blob) != manifest.vectors_digest {
        return Err(Error::Integrity {
            entry: VECTORS_FILE.into(),
            reason: "digest mismatch".into(),
        });
    }
    Ok(blob
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect())
}

fn vector_bytes(vectors: &[f32]) -> Vec<u8> {
    vectors.iter().flat_map(|v| v.to_le_bytes()).collect()
}

fn search_index(manifest: &ProjectIndexManifest, vectors: &[f32], config: IndexConfig) -> Result<ReferenceIndex> {
    let id: Arc<str> = Arc::from(manifest.embedder_id.as_str());
    let pairs = manifest
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let values = vectors[e.vector_offset..e.vector_offset + e.vector_len].to_vec();
            (i as RefId, EmbeddingVector::from_raw(values, id.clone()))
        })
        .collect();
    ReferenceIndex::build(&manifest.embedder_id, manifest.dimension, pairs, config).map_err(|e| match e {
        Error::InvalidArgument(reason) => Error::Integrity {
            entry: MANIFEST_FILE.into(),
            reason,
        },
        other => other,
    })
}

/// Extracts and embeds every reference of `project`.
pub fn index_project(
    project: &Project,
    embedder: &dyn Embedder,
    options: &IndexOptions,
) -> Result<(ApiIndex, Vec<Diagnostic>)> {
    let extraction = extract_api_references_with(
        &project.files,
        project.language,
        &ExtractOptions {
            module_prefix: project.module_prefix.clone(),
        },
    );
    let (index, mut diagnostics) = ApiIndex::build(
        extraction.references,
        project.language,
        embedder,
        project.file_digests(),
        options,
    )?;
    let mut all = extraction.diagnostics;
    all.append(&mut diagnostics);
    Ok((index, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::SubtokenEmbedder;
    use crate::reference::Param;

    pub(crate) fn table_refs() -> Vec<ApiReference> {
        vec![
            ApiReference::function("DataStore.find_by_keyword", "DataStore.py")
                .with_params(vec![Param::named("self"), Param::typed("keyword", "str")])
                .with_return("List[str]"),
            ApiReference::class("DataStore", "DataStore.py"),
            ApiReference::attribute("DataStore.documents", "DataStore.py"),
            ApiReference::function("relevance", "utils.py")
                .with_params(vec![Param::typed("document", "str"), Param::typed("keyword", "str")])
                .with_return("float"),
        ]
    }

    fn build() -> ApiIndex {
        ApiIndex::build(
            table_refs(),
            Language::Python,
            &SubtokenEmbedder::default(),
            BTreeMap::from([("DataStore.py".into(), "aa".into()), ("utils.py".into(), "bb".into())]),
            &IndexOptions::default(),
        )
        .unwrap()
        .0
    }

    #[test]
    fn round_trip_is_lossless() {
        let idx = build();
        let dir = tempfile::tempdir().unwrap();
        idx.save(dir.path()).unwrap();
        let back = ApiIndex::load(dir.path(), IndexConfig::default()).unwrap();
        assert_eq!(back.manifest(), idx.manifest());
        assert_eq!(back.vectors, idx.vectors);
        assert_eq!(back.rendered, idx.rendered);
        assert_eq!(back.len(), 4);
    }

    #[test]
    fn truncated_blob_is_an_integrity_error() {
        let idx = build();
        let dir = tempfile::tempdir().unwrap();
        idx.save(dir.path()).unwrap();
        let path = dir.path().join(VECTORS_FILE);
        let blob = fs::read(&path).unwrap();
        fs::write(&path, &blob[..blob.len() - 10]).unwrap();
        match ApiIndex::load(dir.path(), IndexConfig::default()) {
            Err(Error::Integrity { entry, .. }) => assert!(entry.contains("relevance"), "{entry}"),
            other => panic!("{other:?}"),
        }
        fs::write(&path, &blob[..blob.len() - 8]).unwrap();
        match ApiIndex::load(dir.path(), IndexConfig::default()) {
            Err(Error::Integrity { entry, .. }) => assert!(entry.contains("relevance"), "{entry}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hand_edited_dimension_names_the_entry() {
        let idx = build();
        let dir = tempfile::tempdir().unwrap();
        idx.save(dir.path()).unwrap();
        let path = dir.path().join(MANIFEST_FILE);
        let text = fs::read_to_string(&path).unwrap();
        let edited = text.replacen("\"dimension\": 256", "\"dimension\": 768", 1);
        assert_ne!(edited, text);
        fs::write(&path, edited).unwrap();
        match ApiIndex::load(dir.path(), IndexConfig::default()) {
            Err(Error::Integrity { entry, reason }) => {
                assert!(entry.contains("DataStore.find_by_keyword"), "{entry}");
                assert!(reason.contains("256") && reason.contains("768"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tampered_payload_fails_digest() {
        let idx = build();
        let dir = tempfile::tempdir().unwrap();
        idx.save(dir.path()).unwrap();
        let path = dir.path().join(VECTORS_FILE);
        let mut blob = fs::read(&path).unwrap();
        blob[0] ^= 1;
        fs::write(&path, blob).unwrap();
        assert!(matches!(
            ApiIndex::load(dir.path(), IndexConfig::default()),
            Err(Error::Integrity { .. })
        ));
    }

    #[test]
    fn embedder_mismatch_is_incompatible() {
        let idx = build();
        assert!(idx.check_embedder(&SubtokenEmbedder::default()).is_ok());
        assert!(matches!(
            idx.check_embedder(&SubtokenEmbedder::new(64)),
            Err(Error::Incompatible { .. })
        ));
    }

    #[test]
    fn counts_by_kind() {
        let counts = build().counts();
        assert_eq!(counts[&ReferenceKind::Function], 2);
        assert_eq!(counts[&ReferenceKind::Class], 1);
        assert_eq!(counts[&ReferenceKind::Attribute], 1);
    }
}
