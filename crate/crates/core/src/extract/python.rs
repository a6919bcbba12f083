use tree_sitter::Node;

use super::{node_text, qualify};
use crate::reference::{ApiReference, Param};

pub(super) fn extract(root: Node<'_>, source: &str, path: &str) -> Vec<ApiReference> {
    let mut walker = Walker {
        source,
        path,
        out: Vec::new(),
    };
    walker.block(root, &mut Vec::new(), None);
    walker.out
}

struct Walker<'a> {
    source: &'a str,
    path: &'a str,
    out: Vec<ApiReference>,
}

impl<'a> Walker<'a> {
    fn text(&self, node: Node<'_>) -> &'a str {
        node_text(node, self.source)
    }

    /// Visits the statements of a module, class body or function body.
    /// `class_scope` is set when the block is a class body.
    fn block(&mut self, node: Node<'_>, scope: &mut Vec<String>, class_scope: Option<&str>) {
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            self.statement(child, scope, class_scope);
        }
    }

    fn statement(&mut self, node: Node<'_>, scope: &mut Vec<String>, class_scope: Option<&str>) {
        match node.kind() {
            "function_definition" => self.function(node, scope, class_scope),
            "class_definition" => self.class(node, scope),
            "decorated_definition" => {
                if let Some(def) = node.child_by_field_name("definition") {
                    self.statement(def, scope, class_scope);
                }
            }
            // Definitions nested in control flow are still definitions.
            "if_statement" | "for_statement" | "while_statement" | "try_statement"
            | "with_statement" | "else_clause" | "elif_clause" | "except_clause"
            | "finally_clause" | "block" => {
                let mut cursor = node.walk();
                for child in node.named_children(&mut cursor) {
                    self.statement(child, scope, class_scope);
                }
            }
            _ => {}
        }
    }

    fn function(&mut self, node: Node<'_>, scope: &mut Vec<String>, class_scope: Option<&str>) {
        let Some(name_node) = node.child_by_field_name("name") else {
            return;
        };
        let name = self.text(name_node);
        let qualified = qualify(scope, name);
        let params = node
            .child_by_field_name("parameters")
            .map(|p| self.parameters(p))
            .unwrap_or_default();
        let body = node.child_by_field_name("body");

        let mut reference = ApiReference::function(qualified.clone(), self.path).with_params(params.clone());
        if let Some(ret) = node.child_by_field_name("return_type") {
            reference.return_annotation = Some(self.text(ret).to_string());
        }
        reference.docstring = body.and_then(|b| self.docstring(b));
        self.out.push(reference);

        if let (Some(class_name), "__init__", Some(body)) = (class_scope, name, body) {
            if let Some(receiver) = params.first() {
                let receiver = receiver.name.clone();
                let mut attrs = Vec::new();
                self.constructor_assignments(body, &receiver, &mut attrs);
                let mut seen = std::collections::HashSet::new();
                for attr in attrs {
                    if seen.insert(attr.clone()) {
                        self.out
                            .push(ApiReference::attribute(format!("{class_name}.{attr}"), self.path));
                    }
                }
            }
        }

        if let Some(body) = body {
            scope.push(name.to_string());
            self.block(body, scope, None);
            scope.pop();
        }
    }

    fn class(&mut self, node: Node<'_>, scope: &mut Vec<String>) {
        let Some(name_node) = node.child_by_field_name("name") else {
            return;
        };
        let name = self.text(name_node);
        let qualified = qualify(scope, name);
        let mut parents = Vec::new();
        if let Some(args) = node.child_by_field_name("superclasses") {
            let mut cursor = args.walk();
            for arg in args.named_children(&mut cursor) {
                if arg.kind() != "keyword_argument" && arg.kind() != "comment" {
                    parents.push(self.text(arg).to_string());
                }
            }
        }
        let body = node.child_by_field_name("body");
        let mut reference = ApiReference::class(qualified.clone(), self.path).with_parents(parents);
        reference.docstring = body.and_then(|b| self.docstring(b));
        self.out.push(reference);

        if let Some(body) = body {
            scope.push(name.to_string());
            self.block(body, scope, Some(&qualified));
            scope.pop();
        }
    }

    fn parameters(&self, node: Node<'_>) -> Vec<Param> {
        let mut params = Vec::new();
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            let field = |name: &str| child.child_by_field_name(name).map(|n| self.text(n).to_string());
            let param = match child.kind() {
                "identifier" | "list_splat_pattern" | "dictionary_splat_pattern" => {
                    Param::named(self.text(child))
                }
                "typed_parameter" => {
                    let name = child
                        .named_child(0)
                        .map(|n| self.text(n).to_string())
                        .unwrap_or_default();
                    Param {
                        name,
                        type_annotation: field("type"),
                        default_value: None,
                    }
                }
                "default_parameter" => Param {
                    name: field("name").unwrap_or_default(),
                    type_annotation: None,
                    default_value: field("value"),
                },
                "typed_default_parameter" => Param {
                    name: field("name").unwrap_or_default(),
                    type_annotation: field("type"),
                    default_value: field("value"),
                },
                "keyword_separator" => Param::named("*"),
                "positional_separator" => Param::named("/"),
                _ => continue,
            };
            params.push(param);
        }
        params
    }

    fn docstring(&self, body: Node<'_>) -> Option<String> {
        let first = body.named_child(0)?;
        if first.kind() != "expression_statement" {
            return None;
        }
        let string = first.named_child(0)?;
        if string.kind() != "string" {
            return None;
        }
        let mut cursor = string.walk();
        let content: String = string
            .named_children(&mut cursor)
            .filter(|c| c.kind() == "string_content")
            .map(|c| self.text(c))
            .collect();
        let trimmed = content.trim();
        (!trimmed.is_empty()).then(|| trimmed.to_string())
    }

    /// Collects `receiver.attr` assignment targets in a constructor body,
    /// without descending into nested scopes.
    fn constructor_assignments(&self, node: Node<'_>, receiver: &str, out: &mut Vec<String>) {
        match node.kind() {
            "function_definition" | "class_definition" | "lambda" | "decorated_definition" => return,
            "assignment" | "augmented_assignment" => {
                if let Some(left) = node.child_by_field_name("left") {
                    self.assignment_targets(left, receiver, out);
                }
                if let Some(right) = node.child_by_field_name("right") {
                    // Chained assignments nest on the right-hand side.
                    self.constructor_assignments(right, receiver, out);
                }
                return;
            }
            _ => {}
        }
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            self.constructor_assignments(child, receiver, out);
        }
    }

    fn assignment_targets(&self, target: Node<'_>, receiver: &str, out: &mut Vec<String>) {
        match target.kind() {
            "attribute" => {
                let object = target.child_by_field_name("object");
                let attr = target.child_by_field_name("attribute");
                if let (Some(object), Some(attr)) = (object, attr) {
                    if object.kind() == "identifier" && self.text(object) == receiver {
                        out.push(self.text(attr).to_string());
                    }
                }
            }
            "pattern_list" | "tuple_pattern" | "list_pattern" | "parenthesized_expression" => {
                let mut cursor = target.walk();
                for child in target.named_children(&mut cursor) {
                    self.assignment_targets(child, receiver, out);
                }
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::extract::{extract_api_references, Language, SourceFile};
    use crate::reference::{ApiReference, Param, ReferenceKind};

    const DATASTORE: &str = r#"class DataStore():
  def __init__(self, file: str):
    with open(file, 'r') as f:
      self.documents = f.read().split('-----')
  def find_by_keyword(self, keyword: str) -> List[str]:
      return [d for d in self.documents if keyword in d]
"#;

    fn run(src: &str) -> Vec<ApiReference> {
        let out = extract_api_references(&[SourceFile::new("DataStore.py", src)], Language::Python);
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        out.references
    }

    #[test]
    fn running_example_datastore() {
        let refs = run(DATASTORE);
        let names: Vec<_> = refs.iter().map(|r| (r.kind, r.qualified_name.as_str())).collect();
        assert_eq!(
            names,
            vec![
                (ReferenceKind::Class, "DataStore"),
                (ReferenceKind::Function, "DataStore.__init__"),
                (ReferenceKind::Attribute, "DataStore.documents"),
                (ReferenceKind::Function, "DataStore.find_by_keyword"),
            ]
        );
        let fbk = &refs[3];
        assert_eq!(fbk.params, vec![Param::named("self"), Param::typed("keyword", "str")]);
        assert_eq!(fbk.return_annotation.as_deref(), Some("List[str]"));
        assert_eq!(fbk.render(), "DataStore.find_by_keyword(self, keyword: str) -> List[str]");
        assert_eq!(refs[0].render(), "class DataStore()");
    }

    #[test]
    fn parameter_forms() {
        let refs = run("def f(a, b: int, c=3, d: str = 'x', *args, e, **kw) -> None:\n  pass\n");
        assert_eq!(refs[0].render(), "f(a, b: int, c = 3, d: str = 'x', *args, e, **kw) -> None");
        let refs = run("def g(a, /, b, *, c):\n  pass\n");
        assert_eq!(refs[0].render(), "g(a, /, b, *, c)");
    }

    #[test]
    fn nested_and_decorated_definitions() {
        let src = r#"
@decorator
def outer(x):
    def inner(y):
        return y
    return inner

class A(Base, metaclass=Meta):
    """Class doc."""
    @staticmethod
    def build():
        """Build one.

        More text here."""
        pass
    class B:
        def m(self):
            pass
"#;
        let refs = run(src);
        let names: Vec<_> = refs.iter().map(|r| r.qualified_name.as_str()).collect();
        assert_eq!(names, vec!["outer", "outer.inner", "A", "A.build", "A.B", "A.B.m"]);
        assert_eq!(refs[2].parent_classes, vec!["Base".to_string()]);
        assert_eq!(refs[2].docstring.as_deref(), Some("Class doc."));
        assert_eq!(refs[3].render(), "A.build() # Build one. More text here.");
    }

    #[test]
    fn constructor_attributes_only() {
        let src = r#"
class P:
    def __init__(this, a):
        this.a = a
        this.b, this.c = 1, 2
        this.a = 5
        other.z = 3
        def helper():
            this.hidden = 1
        if a:
            this.d: int = 4
    def later(self):
        self.not_ctor = 1
"#;
        let refs = run(src);
        let attrs: Vec<_> = refs
            .iter()
            .filter(|r| r.kind == ReferenceKind::Attribute)
            .map(|r| r.qualified_name.as_str())
            .collect();
        assert_eq!(attrs, vec!["P.a", "P.b", "P.c", "P.d"]);
    }

    #[test]
    fn function_count_matches_definitions() {
        let src = "def a():\n  pass\nclass C:\n  def b(self):\n    pass\n  def c(self):\n    pass\ndef d():\n  pass\n";
        let refs = run(src);
        let functions = refs.iter().filter(|r| r.kind == ReferenceKind::Function).count();
        assert_eq!(functions, 4);
    }
}
