//! Project API references and their one-line textual rendering.
//!
//! A reference is rendered so that it reads like source code: function
//! references look like a signature, class references like a class header
//! and attribute references like an access path. The rendered line is what
//! gets embedded and what gets placed into prompts.

use serde::{Deserialize, Serialize};

/// Default maximum number of docstring characters kept in a rendered line.
pub const DEFAULT_DOCSTRING_LIMIT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    Function,
    Class,
    Attribute,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_annotation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default_value: Option<String>,
}

impl Param {
    pub fn named(name: impl Into<String>) -> Self {
        Param {
            name: name.into(),
            type_annotation: None,
            default_value: None,
        }
    }

    pub fn typed(name: impl Into<String>, ty: impl Into<String>) -> Self {
        Param {
            name: name.into(),
            type_annotation: Some(ty.into()),
            default_value: None,
        }
    }

    pub fn with_default(mut self, value: impl Into<String>) -> Self {
        self.default_value = Some(value.into());
        self
    }
}

/// A function, class or constructor-assigned attribute defined in the project.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApiReference {
    pub kind: ReferenceKind,
    pub qualified_name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Param>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub return_annotation: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parent_classes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub docstring: Option<String>,
    pub source_file: String,
}

impl ApiReference {
    pub fn function(qualified_name: impl Into<String>, source_file: impl Into<String>) -> Self {
        Self::new(ReferenceKind::Function, qualified_name, source_file)
    }

    pub fn class(qualified_name: impl Into<String>, source_file: impl Into<String>) -> Self {
        Self::new(ReferenceKind::Class, qualified_name, source_file)
    }

    pub fn attribute(qualified_name: impl Into<String>, source_file: impl Into<String>) -> Self {
        Self::new(ReferenceKind::Attribute, qualified_name, source_file)
    }

    fn new(kind: ReferenceKind, qualified_name: impl Into<String>, source_file: impl Into<String>) -> Self {
        ApiReference {
            kind,
            qualified_name: qualified_name.into(),
            params: Vec::new(),
            return_annotation: None,
            parent_classes: Vec::new(),
            docstring: None,
            source_file: source_file.into(),
        }
    }

    pub fn with_params(mut self, params: Vec<Param>) -> Self {
        self.params = params;
        self
    }

    pub fn with_return(mut self, annotation: impl Into<String>) -> Self {
        self.return_annotation = Some(annotation.into());
        self
    }

    pub fn with_parents(mut self, parents: Vec<String>) -> Self {
        self.parent_classes = parents;
        self
    }

    pub fn with_docstring(mut self, doc: impl Into<String>) -> Self {
        self.docstring = Some(doc.into());
        self
    }

    /// The last component of the qualified name.
    pub fn simple_name(&self) -> &str {
        self.qualified_name
            .rsplit('.')
            .next()
            .unwrap_or(&self.qualified_name)
    }

    /// Checks the structural invariants of a reference.
    pub fn is_well_formed(&self) -> bool {
        !self.qualified_name.is_empty() && !self.qualified_name.chars().any(char::is_whitespace)
    }

    /// Renders with the default docstring limit.
    pub fn render(&self) -> String {
        render_reference(self, &RenderOptions::default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderOptions {
    /// Docstrings are whitespace-collapsed and cut hard at this many characters.
    pub docstring_limit: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            docstring_limit: DEFAULT_DOCSTRING_LIMIT,
        }
    }
}

/// Renders a reference as a single line of code-like text.
///
/// * function: `Qualified.name(p1: T1, p2: T2 = default) -> R # doc`
/// * class: `class Qualified.Name(Parent1, Parent2)`
/// * attribute: `Qualified.name`
pub fn render_reference(reference: &ApiReference, options: &RenderOptions) -> String {
    match reference.kind {
        ReferenceKind::Function => {
            let params = reference
                .params
                .iter()
                .map(render_param)
                .collect::<Vec<_>>()
                .join(", ");
            let mut line = format!("{}({})", single_line(&reference.qualified_name), params);
            if let Some(ret) = &reference.return_annotation {
                line.push_str(" -> ");
                line.push_str(&single_line(ret));
            }
            if let Some(doc) = reference.docstring.as_deref() {
                let doc = truncate_chars(&single_line(doc), options.docstring_limit);
                if !doc.is_empty() {
                    line.push_str(" # ");
                    line.push_str(&doc);
                }
            }
            line
        }
        ReferenceKind::Class => format!(
            "class {}({})",
            single_line(&reference.qualified_name),
            reference
                .parent_classes
                .iter()
                .map(|p| single_line(p))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        ReferenceKind::Attribute => single_line(&reference.qualified_name),
    }
}

fn render_param(param: &Param) -> String {
    let mut out = single_line(&param.name);
    if let Some(ty) = &param.type_annotation {
        out.push_str(": ");
        out.push_str(&single_line(ty));
    }
    if let Some(default) = &param.default_value {
        out.push_str(" = ");
        out.push_str(&single_line(default));
    }
    out
}

/// Collapses every whitespace run (newlines included) into one space.
fn single_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn truncate_chars(text: &str, limit: usize) -> String {
    match text.char_indices().nth(limit) {
        Some((idx, _)) => text[..idx].to_string(),
        None => text.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find_by_keyword() -> ApiReference {
        ApiReference::function("DataStore.find_by_keyword", "DataStore.py")
            .with_params(vec![Param::named("self"), Param::typed("keyword", "str")])
            .with_return("List[str]")
    }

    #[test]
    fn renders_table_rows() {
        assert_eq!(
            find_by_keyword().render(),
            "DataStore.find_by_keyword(self, keyword: str) -> List[str]"
        );
        let relevance = ApiReference::function("relevance", "utils.py")
            .with_params(vec![Param::typed("document", "str"), Param::typed("keyword", "str")])
            .with_return("float");
        assert_eq!(relevance.render(), "relevance(document: str, keyword: str) -> float");
        assert_eq!(ApiReference::class("DataStore", "DataStore.py").render(), "class DataStore()");
        assert_eq!(
            ApiReference::attribute("DataStore.documents", "DataStore.py").render(),
            "DataStore.documents"
        );
    }

    #[test]
    fn class_with_parents() {
        let r = ApiReference::class("Cache", "c.py").with_parents(vec!["Base".into(), "Mixin".into()]);
        assert_eq!(r.render(), "class Cache(Base, Mixin)");
    }

    #[test]
    fn defaults_render_with_spaced_equals() {
        let r = ApiReference::function("js-sdsl.Deque", "deque.js").with_params(vec![
            Param::named("t").with_default("[]"),
            Param::named("i").with_default("1 << 12"),
        ]);
        assert_eq!(r.render(), "js-sdsl.Deque(t = [], i = 1 << 12)");
        let typed = ApiReference::function("f", "f.py")
            .with_params(vec![Param::typed("x", "int").with_default("3")]);
        assert_eq!(typed.render(), "f(x: int = 3)");
    }

    #[test]
    fn docstring_is_collapsed_and_cut_mid_word() {
        let doc = "Split an iterable of paths in `sources` into two sets.\n\n    The first contains paths of files that modified on disk or are not in the\n    cache. The other contains paths to non-modified files.\n    ";
        let r = ApiReference::function("filter_cached", "black/__init__.py")
            .with_params(vec![
                Param::typed("cache", "Cache"),
                Param::typed("sources", "Iterable[Path]"),
            ])
            .with_return("Tuple[Set[Path], Set[Path]]")
            .with_docstring(doc);
        assert_eq!(
            r.render(),
            "filter_cached(cache: Cache, sources: Iterable[Path]) -> Tuple[Set[Path], Set[Path]] # Split an iterable of paths in `sources` into two sets. The first contains paths of files that modifi"
        );
    }

    #[test]
    fn docstring_limit_is_configurable() {
        let r = ApiReference::function("f", "f.py").with_docstring("abcdef");
        let line = render_reference(&r, &RenderOptions { docstring_limit: 3 });
        assert_eq!(line, "f() # abc");
    }

    #[test]
    fn rendering_is_single_line() {
        let r = ApiReference::function("f", "f.py")
            .with_params(vec![Param::typed("x", "Dict[\n str,\n int]")])
            .with_docstring("one\ntwo");
        assert!(!r.render().contains('\n'));
    }

    #[test]
    fn well_formedness() {
        assert!(find_by_keyword().is_well_formed());
        assert!(!ApiReference::function("", "a.py").is_well_formed());
        assert!(!ApiReference::function("a b", "a.py").is_well_formed());
    }
}
