use rpoisson::report::Report;
use serde::Serialize;
use serde_json::{Map, Value};

/// Result of one command: extra data plus the verification reports.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub command: String,
    pub passed: bool,
    pub details: Map<String, Value>,
    pub reports: Vec<Report>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn new(command: &str) -> Self {
        Outcome {
            command: command.into(),
            passed: true,
            details: Map::new(),
            reports: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn report(&mut self, r: Report) {
        self.passed &= r.passed();
        self.reports.push(r);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("outcome serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for r in &self.reports {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out.push_str(if self.passed {
            "overall: pass\n"
        } else {
            "overall: fail\n"
        });
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}
