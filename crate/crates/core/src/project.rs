//! Discovery of a project's source files on disk.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::extract::{Language, SourceFile};

/// Directories never descended into.
const SKIPPED_DIRS: &[&str] = &["node_modules", "__pycache__", "target", "venv", "dist", "build"];

/// The source files of one project in one language.
#[derive(Debug, Clone)]
pub struct Project {
    pub root: PathBuf,
    pub language: Language,
    /// Package name applied to qualified names (JavaScript `package.json` name).
    pub module_prefix: Option<String>,
    /// Sorted by relative path; paths use `/` separators.
    pub files: Vec<SourceFile>,
}

impl Project {
    /// Content digests (hex SHA-256) of every scanned file.
    pub fn file_digests(&self) -> BTreeMap<String, String> {
        self.files
            .iter()
            .map(|f| (f.path.clone(), sha256_hex(f.text.as_bytes())))
            .collect()
    }

    pub fn line_count(&self) -> usize {
        self.files.iter().map(|f| f.text.lines().count()).sum()
    }

    pub fn file(&self, path: &str) -> Option<&SourceFile> {
        self.files.iter().find(|f| f.path == path)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Scans `root` for source files. Without an explicit language the most
/// frequent supported extension wins (Python on a tie or an empty tree).
pub fn scan_project(root: &Path, language: Option<Language>) -> Result<Project> {
    let meta = fs::metadata(root).map_err(|e| Error::io(root, e))?;
    if !meta.is_dir() {
        return Err(Error::InvalidArgument(format!("{} is not a directory", root.display())));
    }

    let mut found: Vec<(String, PathBuf, Language)> = Vec::new();
    let walker = WalkDir::new(root).sort_by_file_name().into_iter().filter_entry(|e| {
        e.depth() == 0 || {
            let name = e.file_name().to_string_lossy();
            !(e.file_type().is_dir() && (name.starts_with('.') || SKIPPED_DIRS.contains(&name.as_ref())))
        }
    });
    for entry in walker {
        let entry = entry.map_err(|e| {
            let path = e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf());
            Error::io(path, e.into())
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = relative_path(root, entry.path());
        if let Some(lang) = Language::from_path(&rel) {
            found.push((rel, entry.path().to_path_buf(), lang));
        }
    }

    let language = language.unwrap_or_else(|| {
        let js = found.iter().filter(|f| f.2 == Language::JavaScript).count();
        let py = found.len() - js;
        if js > py {
            Language::JavaScript
        } else {
            Language::Python
        }
    });

    let mut files = Vec::new();
    for (rel, path, lang) in found {
        if lang != language {
            continue;
        }
        let bytes = fs::read(&path).map_err(|e| Error::io(&path, e))?;
        files.push(SourceFile::new(rel, String::from_utf8_lossy(&bytes).into_owned()));
    }
    files.sort_by(|a, b| a.path.cmp(&b.path));

    let module_prefix = match language {
        Language::JavaScript => package_name(root),
        Language::Python => None,
    };

    Ok(Project {
        root: root.to_path_buf(),
        language,
        module_prefix,
        files,
    })
}

fn relative_path(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

fn package_name(root: &Path) -> Option<String> {
    let text = fs::read_to_string(root.join("package.json")).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    let name = value.get("name")?.as_str()?.trim();
    (!name.is_empty() && !name.contains(char::is_whitespace)).then(|| name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(root: &Path, rel: &str, text: &str) {
        let path = root.join(rel);
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, text).unwrap();
    }

    #[test]
    fn scans_sorted_and_skips_vendor_dirs() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "b.py", "def b(): pass\n");
        write(dir.path(), "pkg/a.py", "def a(): pass\n");
        write(dir.path(), "node_modules/x.py", "def x(): pass\n");
        write(dir.path(), ".hidden/y.py", "def y(): pass\n");
        write(dir.path(), "notes.txt", "text");
        let p = scan_project(dir.path(), None).unwrap();
        let paths: Vec<_> = p.files.iter().map(|f| f.path.as_str()).collect();
        assert_eq!(paths, ["b.py", "pkg/a.py"]);
        assert_eq!(p.language, Language::Python);
        assert_eq!(p.file_digests().len(), 2);
    }

    #[test]
    fn javascript_uses_package_name() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "package.json", r#"{"name": "js-sdsl"}"#);
        write(dir.path(), "src/deque.js", "class Deque {}\n");
        let p = scan_project(dir.path(), None).unwrap();
        assert_eq!(p.language, Language::JavaScript);
        assert_eq!(p.module_prefix.as_deref(), Some("js-sdsl"));
    }

    #[test]
    fn empty_directory_and_bad_path() {
        let dir = tempfile::tempdir().unwrap();
        assert!(scan_project(dir.path(), None).unwrap().files.is_empty());
        assert!(scan_project(&dir.path().join("missing"), None).is_err());
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
