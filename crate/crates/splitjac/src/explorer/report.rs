//! Verification reports and their JSON wire format.

use serde_json::{json, Value};

/// What kind of fact a check certifies; used to group report lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactKind {
    /// An exact polynomial or arithmetic identity.
    Identity,
    /// A finite-field point count or Jacobian order.
    Count,
    /// A torsion-order or infinite-order certificate.
    Order,
    /// A search reproduction (bounded-height enumeration).
    Search,
    /// A structural computation (group quotients, censuses).
    Structure,
}

impl FactKind {
    pub fn label(&self) -> &'static str {
        match self {
            FactKind::Identity => "identity",
            FactKind::Count => "count",
            FactKind::Order => "order",
            FactKind::Search => "search",
            FactKind::Structure => "structure",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Fact {
    pub description: String,
    pub kind: FactKind,
    pub pass: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub example: String,
    pub facts: Vec<Fact>,
}

impl Report {
    pub fn new(example: &str) -> Report {
        Report {
            example: example.to_string(),
            facts: Vec::new(),
        }
    }

    pub fn check(&mut self, kind: FactKind, description: impl Into<String>, pass: bool) -> bool {
        self.facts.push(Fact {
            description: description.into(),
            kind,
            pass,
        });
        pass
    }

    /// Record a fact that already failed to compute (constructor errors etc.).
    pub fn fail(&mut self, kind: FactKind, description: impl Into<String>) -> bool {
        self.check(kind, description, false)
    }

    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "example": self.example,
            "pass": self.all_pass(),
            "facts": self.facts.iter().map(|f| json!({
                "description": f.description,
                "kind": f.kind.label(),
                "pass": f.pass,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let status = if self.all_pass() { "PASS" } else { "FAIL" };
        s.push_str(&format!("[{status}] {}\n", self.example));
        for f in &self.facts {
            let mark = if f.pass { "ok " } else { "FAIL" };
            s.push_str(&format!("  {mark} ({}) {}\n", f.kind.label(), f.description));
        }
        s
    }
}
