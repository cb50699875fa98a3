use std::collections::BTreeMap;

use auslander::homology::Verdict;
use auslander::modrep::Dim;
use auslander::Error;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::format::FORMAT_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedVerdict {
    pub name: String,
    /// `"true"`, `"false"` or `"indeterminate"`.
    pub verdict: String,
}

/// Machine-readable record of one command run.
///
/// Everything except `timing_ms` is a function of the inputs and the seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: u32,
    pub command: String,
    pub args: Vec<String>,
    pub seed: u64,
    pub caps: BTreeMap<String, usize>,
    pub verdicts: Vec<NamedVerdict>,
    pub results: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, args: Vec<String>, seed: u64) -> RunReport {
        RunReport {
            version: FORMAT_VERSION,
            command: command.into(),
            args,
            seed,
            caps: BTreeMap::new(),
            verdicts: Vec::new(),
            results: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            error: None,
            timing_ms: 0,
        }
    }

    pub fn cap(&mut self, name: &str, v: usize) {
        self.caps.insert(name.into(), v);
    }

    pub fn verdict(&mut self, name: &str, v: Verdict) {
        self.verdicts.push(NamedVerdict {
            name: name.into(),
            verdict: v.to_string(),
        });
    }

    pub fn result(&mut self, name: &str, v: impl Serialize) {
        self.results.insert(
            name.into(),
            serde_json::to_value(v).expect("report values serialize"),
        );
    }

    pub fn witness(&mut self, name: &str, v: impl Serialize) {
        self.witnesses.insert(
            name.into(),
            serde_json::to_value(v).expect("report values serialize"),
        );
    }

    pub fn get_verdict(&self, name: &str) -> Option<&str> {
        self.verdicts
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.verdict.as_str())
    }

    /// 1 if any verdict is false, else 3 if any is indeterminate, else 0; errors map by kind.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            return self
                .results
                .get("exit_code")
                .and_then(Value::as_i64)
                .map_or(EXIT_INPUT, |c| c as i32);
        }
        if self.verdicts.iter().any(|v| v.verdict == "false") {
            EXIT_REFUTED
        } else if self.verdicts.iter().any(|v| v.verdict == "indeterminate") {
            EXIT_INDETERMINATE
        } else {
            EXIT_OK
        }
    }

    pub fn fail(&mut self, e: &Error) {
        self.error = Some(e.to_string());
        self.result("exit_code", exit_code_for(e));
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut s = format!("{} (seed {})\n", self.command, self.seed);
        if let Some(e) = &self.error {
            s.push_str(&format!("error: {e}\n"));
        }
        for v in &self.verdicts {
            s.push_str(&format!("  {:<28} {}\n", v.name, v.verdict));
        }
        for (k, v) in &self.results {
            if k != "exit_code" {
                s.push_str(&format!("  {k}: {}\n", compact(v)));
            }
        }
        for (k, v) in &self.witnesses {
            s.push_str(&format!("  witness {k}: {}\n", compact(v)));
        }
        s
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 400 {
        format!("{}...", &s[..400])
    } else {
        s
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Input(_)
        | Error::BadRelation(_)
        | Error::NotAdmissible(_)
        | Error::FieldTooSmall { .. }
        | Error::Unsupported(_)
        | Error::NonIntegerMultiplicity(_)
        | Error::MissingPowerMaps(_) => EXIT_INPUT,
        Error::Inconclusive(_) | Error::ResolutionTruncated(_) | Error::IncompleteEnumeration => {
            EXIT_INDETERMINATE
        }
        Error::Precondition(_) | Error::Internal(_) => EXIT_REFUTED,
    }
}

/// `Exact(n)` serializes as `n`, `AtLeast(n)` as `">=n"`.
pub fn dim_value(d: Dim) -> Value {
    match d {
        Dim::Exact(n) => Value::from(n),
        Dim::AtLeast(n) => Value::from(format!(">={n}")),
    }
}

pub fn decided(d: Dim) -> Verdict {
    match d {
        Dim::Exact(_) => Verdict::True,
        Dim::AtLeast(_) => Verdict::Indeterminate,
    }
}
