use tree_sitter::Node;

use super::{node_text, qualify};
use crate::reference::{ApiReference, Param};

// Static extraction covers function declarations, function-valued variable
// declarations, class methods, `X.prototype.y = function` assignments and
// `this.x =` assignments in constructors. Instance methods are named
// `Class.prototype.method`, static methods `Class.method`.

pub(super) fn extract(root: Node<'_>, source: &str, path: &str) -> Vec<ApiReference> {
    let mut walker = Walker {
        source,
        path,
        out: Vec::new(),
    };
    walker.statements(root, &mut Vec::new());
    walker.out
}

struct Walker<'a> {
    source: &'a str,
    path: &'a str,
    out: Vec<ApiReference>,
}

fn is_function_value(kind: &str) -> bool {
    matches!(
        kind,
        "function_expression" | "function" | "arrow_function" | "generator_function"
    )
}

impl<'a> Walker<'a> {
    fn text(&self, node: Node<'_>) -> &'a str {
        node_text(node, self.source)
    }

    fn statements(&mut self, node: Node<'_>, scope: &mut Vec<String>) {
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            self.statement(child, scope);
        }
    }

    fn statement(&mut self, node: Node<'_>, scope: &mut Vec<String>) {
        match node.kind() {
            "function_declaration" | "generator_function_declaration" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let name = self.text(name).to_string();
                    self.function(node, &name, scope, node);
                }
            }
            "class_declaration" => self.class(node, scope),
            "export_statement" => {
                if let Some(decl) = node.child_by_field_name("declaration") {
                    self.statement(decl, scope);
                }
            }
            "lexical_declaration" | "variable_declaration" => {
                let mut cursor = node.walk();
                for declarator in node.named_children(&mut cursor) {
                    if declarator.kind() != "variable_declarator" {
                        continue;
                    }
                    let (Some(name), Some(value)) = (
                        declarator.child_by_field_name("name"),
                        declarator.child_by_field_name("value"),
                    ) else {
                        continue;
                    };
                    if name.kind() != "identifier" {
                        continue;
                    }
                    let name = self.text(name).to_string();
                    if is_function_value(value.kind()) {
                        self.function(value, &name, scope, node);
                    } else if value.kind() == "class" {
                        self.class_like(value, &name, scope, node);
                    }
                }
            }
            "expression_statement" => {
                if let Some(expr) = node.named_child(0) {
                    if expr.kind() == "assignment_expression" {
                        self.prototype_assignment(expr, node, scope);
                    }
                }
            }
            "statement_block" | "if_statement" | "else_clause" | "try_statement"
            | "catch_clause" | "finally_clause" => {
                let mut cursor = node.walk();
                for child in node.named_children(&mut cursor) {
                    self.statement(child, scope);
                }
            }
            _ => {}
        }
    }

    /// `function` is the node holding `parameters` and `body`; `anchor` is the
    /// statement a leading JSDoc comment would attach to.
    fn function(&mut self, function: Node<'_>, name: &str, scope: &mut Vec<String>, anchor: Node<'_>) {
        let qualified = qualify(scope, name);
        self.push_function(function, qualified, anchor);
        if let Some(body) = function.child_by_field_name("body") {
            let attrs = self.this_assignments(body);
            for attr in attrs {
                self.out
                    .push(ApiReference::attribute(format!("{}.{attr}", qualify(scope, name)), self.path));
            }
            if body.kind() == "statement_block" {
                scope.push(name.to_string());
                self.statements(body, scope);
                scope.pop();
            }
        }
    }

    fn push_function(&mut self, function: Node<'_>, qualified: String, anchor: Node<'_>) {
        let params = self.parameters(function);
        let mut reference = ApiReference::function(qualified, self.path).with_params(params);
        reference.docstring = self.jsdoc(anchor);
        self.out.push(reference);
    }

    fn class(&mut self, node: Node<'_>, scope: &mut [String]) {
        if let Some(name) = node.child_by_field_name("name") {
            let name = self.text(name).to_string();
            self.class_like(node, &name, scope, node);
        }
    }

    fn class_like(&mut self, node: Node<'_>, name: &str, scope: &mut [String], anchor: Node<'_>) {
        let qualified = qualify(scope, name);
        let mut parents = Vec::new();
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            if child.kind() == "class_heritage" {
                let mut hc = child.walk();
                for expr in child.named_children(&mut hc) {
                    parents.push(self.text(expr).to_string());
                }
            }
        }
        let mut reference = ApiReference::class(qualified.clone(), self.path).with_parents(parents);
        reference.docstring = self.jsdoc(anchor);
        self.out.push(reference);

        let Some(body) = node.child_by_field_name("body") else {
            return;
        };
        let mut cursor = body.walk();
        let mut prev: Option<Node<'_>> = None;
        for member in body.named_children(&mut cursor) {
            if member.kind() == "method_definition" {
                self.method(member, &qualified, prev);
            }
            if member.kind() != "comment" {
                prev = None;
            } else {
                prev = Some(member);
            }
        }
    }

    fn method(&mut self, node: Node<'_>, class: &str, leading_comment: Option<Node<'_>>) {
        let Some(name_node) = node.child_by_field_name("name") else {
            return;
        };
        let name = self.text(name_node);
        let mut is_static = false;
        let mut cursor = node.walk();
        for child in node.children(&mut cursor) {
            if child.kind() == "static" {
                is_static = true;
            }
        }
        let qualified = if is_static || name == "constructor" {
            format!("{class}.{name}")
        } else {
            format!("{class}.prototype.{name}")
        };
        let params = self.parameters(node);
        let mut reference = ApiReference::function(qualified, self.path).with_params(params);
        reference.docstring = leading_comment.and_then(|c| self.jsdoc_text(c));
        self.out.push(reference);

        if name == "constructor" {
            if let Some(body) = node.child_by_field_name("body") {
                for attr in self.this_assignments(body) {
                    self.out
                        .push(ApiReference::attribute(format!("{class}.{attr}"), self.path));
                }
            }
        }
    }

    fn prototype_assignment(&mut self, expr: Node<'_>, anchor: Node<'_>, scope: &[String]) {
        let (Some(left), Some(right)) = (expr.child_by_field_name("left"), expr.child_by_field_name("right")) else {
            return;
        };
        if left.kind() != "member_expression" || !is_function_value(right.kind()) {
            return;
        }
        let Some(object) = left.child_by_field_name("object") else {
            return;
        };
        let is_prototype = object.kind() == "member_expression"
            && object
                .child_by_field_name("property")
                .is_some_and(|p| self.text(p) == "prototype");
        if !is_prototype {
            return;
        }
        let path: String = self.text(left).split_whitespace().collect();
        self.push_function(right, qualify(scope, &path), anchor);
    }

    fn parameters(&self, function: Node<'_>) -> Vec<Param> {
        // Arrow functions may take a single bare identifier.
        if let Some(single) = function.child_by_field_name("parameter") {
            return vec![Param::named(self.text(single))];
        }
        let Some(params) = function.child_by_field_name("parameters") else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut cursor = params.walk();
        for p in params.named_children(&mut cursor) {
            match p.kind() {
                "comment" => {}
                "assignment_pattern" => {
                    let name = p.child_by_field_name("left").map(|n| self.text(n)).unwrap_or_default();
                    let mut param = Param::named(name);
                    param.default_value = p.child_by_field_name("right").map(|n| self.text(n).to_string());
                    out.push(param);
                }
                _ => out.push(Param::named(self.text(p))),
            }
        }
        out
    }

    fn this_assignments(&self, body: Node<'_>) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_this(body, &mut out);
        let mut seen = std::collections::HashSet::new();
        out.retain(|a| seen.insert(a.clone()));
        out
    }

    fn collect_this(&self, node: Node<'_>, out: &mut Vec<String>) {
        match node.kind() {
            // `this` is rebound inside nested non-arrow functions and classes.
            "function_expression" | "function" | "function_declaration" | "generator_function"
            | "generator_function_declaration" | "class" | "class_declaration" | "method_definition" => {
                return
            }
            "assignment_expression" => {
                if let Some(left) = node.child_by_field_name("left") {
                    if left.kind() == "member_expression" {
                        let object = left.child_by_field_name("object");
                        let property = left.child_by_field_name("property");
                        if let (Some(o), Some(p)) = (object, property) {
                            if o.kind() == "this" && p.kind() == "property_identifier" {
                                out.push(self.text(p).to_string());
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        let mut cursor = node.walk();
        for child in node.named_children(&mut cursor) {
            self.collect_this(child, out);
        }
    }

    fn jsdoc(&self, anchor: Node<'_>) -> Option<String> {
        let mut target = anchor;
        if let Some(parent) = anchor.parent() {
            if parent.kind() == "export_statement" {
                target = parent;
            }
        }
        let prev = target.prev_sibling()?;
        if prev.kind() != "comment" || prev.end_position().row + 1 < target.start_position().row {
            return None;
        }
        self.jsdoc_text(prev)
    }

    fn jsdoc_text(&self, comment: Node<'_>) -> Option<String> {
        let raw = self.text(comment);
        let inner = raw.strip_prefix("/**")?.strip_suffix("*/")?;
        let lines: Vec<&str> = inner
            .lines()
            .map(|l| l.trim().trim_start_matches('*').trim())
            .take_while(|l| !l.starts_with('@'))
            .filter(|l| !l.is_empty())
            .collect();
        (!lines.is_empty()).then(|| lines.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use crate::extract::{extract_api_references, Language, SourceFile};
    use crate::reference::ReferenceKind;

    fn names(src: &str) -> Vec<(ReferenceKind, String, String)> {
        let out = extract_api_references(&[SourceFile::new("lib.js", src)], Language::JavaScript);
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        out.references
            .into_iter()
            .map(|r| {
                let line = r.render();
                (r.kind, r.qualified_name, line)
            })
            .collect()
    }

    #[test]
    fn classes_methods_and_constructor_fields() {
        let src = r#"
/** A double-ended queue. */
class Deque extends Base {
  constructor(t = [], i = 1 << 12) {
    super();
    this.size_ = 0;
    this.items = t;
    const cb = function () { this.ignored = 1; };
  }
  /** Push an element to the front. */
  pushFront(t) { this.size_ += 1; }
  front() { return this.items[0]; }
  static from(arr) { return new Deque(arr); }
}
"#;
        let got = names(src);
        let lines: Vec<&str> = got.iter().map(|g| g.2.as_str()).collect();
        assert_eq!(
            lines,
            vec![
                "class Deque(Base)",
                "Deque.constructor(t = [], i = 1 << 12)",
                "Deque.size_",
                "Deque.items",
                "Deque.prototype.pushFront(t) # Push an element to the front.",
                "Deque.prototype.front()",
                "Deque.from(arr)",
            ]
        );
        assert_eq!(got[0].0, ReferenceKind::Class);
        assert_eq!(got[2].0, ReferenceKind::Attribute);
    }

    #[test]
    fn functions_prototypes_and_constructor_functions() {
        let src = r#"
function Queue(capacity) {
  this.capacity = capacity;
}
Queue.prototype.front = function () { return this.head; };
const makeQueue = (n) => new Queue(n);
let single = x => x;
export function exported(a, ...rest) {}
module.exports.notIndexed = function () {};
"#;
        let got = names(src);
        let lines: Vec<&str> = got.iter().map(|g| g.2.as_str()).collect();
        assert_eq!(
            lines,
            vec![
                "Queue(capacity)",
                "Queue.capacity",
                "Queue.prototype.front()",
                "makeQueue(n)",
                "single(x)",
                "exported(a, ...rest)",
            ]
        );
    }
}
