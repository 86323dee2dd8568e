//! The report every command produces, and its three renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use qlogic::projorder::{LawCheck, Poset};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub passed: bool,
    pub sections: Vec<Section>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hasse: Option<Hasse>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Item {
    Fact {
        key: String,
        value: String,
    },
    Check {
        law: String,
        holds: bool,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        witness: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        residual: Option<f64>,
    },
    List {
        key: String,
        values: Vec<String>,
    },
}

/// Cover edges of an order, `(lower, upper)`, over the listed nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hasse {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl Hasse {
    pub fn of(poset: &Poset) -> Self {
        Hasse {
            nodes: poset.names.clone(),
            edges: poset
                .hasse_edges()
                .into_iter()
                .map(|(a, b)| (poset.names[a].clone(), poset.names[b].clone()))
                .collect(),
        }
    }
}

impl Item {
    pub fn fact(key: &str, value: impl ToString) -> Self {
        Item::Fact {
            key: key.into(),
            value: value.to_string(),
        }
    }

    pub fn check(law: &str, holds: bool) -> Self {
        Item::Check {
            law: law.into(),
            holds,
            witness: Vec::new(),
            residual: None,
        }
    }

    pub fn list(key: &str, values: impl IntoIterator<Item = impl ToString>) -> Self {
        Item::List {
            key: key.into(),
            values: values.into_iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn holds(&self) -> bool {
        !matches!(self, Item::Check { holds: false, .. })
    }
}

impl From<LawCheck> for Item {
    fn from(c: LawCheck) -> Self {
        Item::Check {
            law: c.law,
            holds: c.holds,
            witness: c.witness,
            residual: None,
        }
    }
}

impl Section {
    pub fn new(title: &str, items: Vec<Item>) -> Self {
        Section {
            title: title.into(),
            items,
        }
    }
}

impl Report {
    pub fn new(command: &str, subject: &str) -> Self {
        Report {
            command: command.into(),
            subject: subject.into(),
            passed: true,
            sections: Vec::new(),
            hasse: None,
        }
    }

    /// Adds a section; any failing check in it fails the report.
    pub fn push(&mut self, section: Section) {
        self.passed &= section.items.iter().all(Item::holds);
        self.sections.push(section);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{} {}: {status}", self.command, self.subject);
        for section in &self.sections {
            let _ = writeln!(out, "\n== {} ==", section.title);
            for item in &section.items {
                let _ = match item {
                    Item::Fact { key, value } => writeln!(out, "  {key}: {value}"),
                    Item::List { key, values } => writeln!(out, "  {key}: {}", values.join(", ")),
                    Item::Check {
                        law,
                        holds,
                        witness,
                        residual,
                    } => {
                        let mark = if *holds { "ok  " } else { "FAIL" };
                        let mut line = format!("  [{mark}] {law}");
                        if let Some(r) = residual {
                            let _ = write!(line, " (residual {r:.2e})");
                        }
                        if !witness.is_empty() {
                            let _ = write!(line, " witness: {}", witness.join(", "));
                        }
                        writeln!(out, "{line}")
                    }
                };
            }
        }
        if let Some(h) = &self.hasse {
            let _ = writeln!(out, "\n== cover edges ==");
            for (a, b) in &h.edges {
                let _ = writeln!(out, "  {a} < {b}");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Graphviz source for the cover relation, bottom to top, nodes in
    /// report order.
    pub fn to_dot(&self) -> Option<String> {
        let h = self.hasse.as_ref()?;
        let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let id = |name: &str| {
            h.nodes
                .iter()
                .position(|n| n == name)
                .expect("edge endpoints are nodes")
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "digraph {} {{",
            quote(&format!("{} {}", self.command, self.subject))
        );
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, name) in h.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label={}];", quote(name));
        }
        for (a, b) in &h.edges {
            let _ = writeln!(out, "  n{} -> n{};", id(a), id(b));
        }
        out.push_str("}\n");
        Some(out)
    }
}
