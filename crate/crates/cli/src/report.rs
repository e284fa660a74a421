use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ok,
    Member,
    NonMember,
    Feasible,
    Infeasible,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok | Verdict::Member | Verdict::Feasible => 0,
            Verdict::NonMember | Verdict::Infeasible => 1,
            Verdict::Error => 2,
        }
    }

    pub fn member(yes: bool) -> Self {
        if yes {
            Verdict::Member
        } else {
            Verdict::NonMember
        }
    }

    pub fn feasible(yes: bool) -> Self {
        if yes {
            Verdict::Feasible
        } else {
            Verdict::Infeasible
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::Feasible => "feasible",
            Verdict::Infeasible => "infeasible",
            Verdict::Error => "error",
        }
    }
}

/// What a command prints. Timing is only included on request, so the
/// report is otherwise a pure function of the arguments and input files.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub witnesses: BTreeMap<String, Value>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, verdict: Verdict) -> Self {
        RunReport { command, verdict, witnesses: BTreeMap::new(), violations: Vec::new(), error: None, timing_ms: None }
    }

    pub fn witness(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.witnesses.insert(key.to_string(), serde_json::to_value(value).expect("witnesses serialize"));
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict.as_str());
        for (k, v) in &self.witnesses {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        for v in &self.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("time: {t:.3} ms\n"));
        }
        out
    }
}
