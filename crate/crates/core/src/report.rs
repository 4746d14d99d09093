//! Predicted-versus-computed reports shared by the command line and bindings.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::groebner::GbStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportItem {
    pub name: String,
    pub predicted: Option<Value>,
    pub computed: Option<Value>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    /// SHA-256 over the input texts, hex.
    pub inputs_digest: String,
    pub items: Vec<ReportItem>,
    pub stats: GbStats,
    pub version: String,
}

pub fn digest(inputs: &[&str]) -> String {
    let mut h = Sha256::new();
    for s in inputs {
        h.update((s.len() as u64).to_le_bytes());
        h.update(s.as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    pub fn new(command: Vec<String>, inputs: &[&str]) -> Self {
        Report {
            command,
            inputs_digest: digest(inputs),
            items: Vec::new(),
            stats: GbStats::default(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Compares a prediction with a computed value. A missing prediction or a
    /// missing computation is `skipped`; only two unequal values `fail`.
    pub fn check(&mut self, name: &str, predicted: Option<Value>, computed: Option<Value>, note: Option<String>) {
        let (status, note) = match (&predicted, &computed) {
            (Some(p), Some(c)) if p == c => (Status::Pass, note),
            (Some(_), Some(_)) => (Status::Fail, note),
            (None, _) => (Status::Skipped, note.or_else(|| Some("no prediction".into()))),
            (_, None) => (Status::Skipped, note.or_else(|| Some("not computed".into()))),
        };
        self.items.push(ReportItem {
            name: name.to_string(),
            predicted,
            computed,
            status,
            note,
        });
    }

    /// Records a computed value with nothing to compare against.
    pub fn record(&mut self, name: &str, computed: Value) {
        self.items.push(ReportItem {
            name: name.to_string(),
            predicted: None,
            computed: Some(computed),
            status: Status::Pass,
            note: None,
        });
    }

    pub fn skip(&mut self, name: &str, predicted: Option<Value>, reason: impl Into<String>) {
        self.items.push(ReportItem {
            name: name.to_string(),
            predicted,
            computed: None,
            status: Status::Skipped,
            note: Some(reason.into()),
        });
    }

    pub fn fail(&mut self, name: &str, predicted: Option<Value>, reason: impl Into<String>) {
        self.items.push(ReportItem {
            name: name.to_string(),
            predicted,
            computed: None,
            status: Status::Fail,
            note: Some(reason.into()),
        });
    }

    pub fn item(&self, name: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn has_failure(&self) -> bool {
        self.items.iter().any(|i| i.status == Status::Fail)
    }

    pub fn has_skipped(&self) -> bool {
        self.items.iter().any(|i| i.status == Status::Skipped)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// One line per item.
    pub fn to_text(&self) -> String {
        let show = |v: &Option<Value>| v.as_ref().map_or("-".to_string(), |v| v.to_string());
        let mut out = String::new();
        for i in &self.items {
            let status = match i.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out.push_str(&format!(
                "{status:<5} {:<28} predicted={:<10} computed={}",
                i.name,
                show(&i.predicted),
                show(&i.computed)
            ));
            if let Some(n) = &i.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn statuses() {
        let mut r = Report::new(vec!["verify".into()], &["abc"]);
        r.check("a", Some(json!(2)), Some(json!(2)), None);
        r.check("b", Some(json!(2)), Some(json!(3)), None);
        r.check("c", None, Some(json!(3)), None);
        r.check("d", Some(json!(1)), None, None);
        let s: Vec<Status> = r.items.iter().map(|i| i.status).collect();
        assert_eq!(s, vec![Status::Pass, Status::Fail, Status::Skipped, Status::Skipped]);
        assert!(r.has_failure());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn digest_separates_inputs() {
        assert_ne!(digest(&["ab", "c"]), digest(&["a", "bc"]));
        assert_eq!(digest(&["x"]).len(), 64);
    }
}
