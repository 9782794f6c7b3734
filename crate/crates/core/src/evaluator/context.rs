use std::sync::Arc;

use super::Builtin;
use crate::polynomial::TermOrder;
use crate::value::Value;

/// An immutable chain of binding frames. Binding never touches an existing
/// frame; it returns a new context whose innermost frame holds the new
/// names, so older contexts and the values they hold stay valid.
#[derive(Clone, Debug, Default)]
pub struct Context(Option<Arc<Frame>>);

#[derive(Debug)]
struct Frame {
    bindings: Vec<(String, Value)>,
    prelude: bool,
    parent: Context,
}

impl Context {
    pub fn empty() -> Context {
        Context(None)
    }

    /// The root context: builtins, `lex`/`grad`, `true`/`false`.
    pub fn prelude() -> Context {
        let mut bindings: Vec<(String, Value)> = Builtin::ALL
            .iter()
            .map(|b| (b.name().to_string(), Value::Builtin(*b)))
            .collect();
        for order in [TermOrder::Lex, TermOrder::Grad] {
            bindings.push((order.name().to_string(), Value::Order(order)));
        }
        bindings.push(("true".into(), Value::Bool(true)));
        bindings.push(("false".into(), Value::Bool(false)));
        Context(Some(Arc::new(Frame {
            bindings,
            prelude: true,
            parent: Context::empty(),
        })))
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        let mut ctx = self;
        while let Some(frame) = &ctx.0 {
            if let Some((_, v)) = frame.bindings.iter().rev().find(|(n, _)| n == name) {
                return Some(v);
            }
            ctx = &frame.parent;
        }
        None
    }

    pub fn bind(&self, bindings: Vec<(String, Value)>) -> Context {
        Context(Some(Arc::new(Frame {
            bindings,
            prelude: false,
            parent: self.clone(),
        })))
    }

    pub fn bind_one(&self, name: impl Into<String>, value: Value) -> Context {
        self.bind(vec![(name.into(), value)])
    }

    /// Visible non-prelude bindings, oldest first, shadowed names omitted.
    pub fn user_bindings(&self) -> Vec<(&str, &Value)> {
        let mut frames = Vec::new();
        let mut ctx = self;
        while let Some(frame) = &ctx.0 {
            if !frame.prelude {
                frames.push(frame);
            }
            ctx = &frame.parent;
        }
        let mut seen: Vec<&str> = Vec::new();
        let mut out = Vec::new();
        for frame in frames {
            for (name, value) in frame.bindings.iter().rev() {
                if !seen.contains(&name.as_str()) {
                    seen.push(name);
                    out.push((name.as_str(), value));
                }
            }
        }
        out.reverse();
        out
    }
}
