//! Command reports and exit codes.

use hwglue::Error;
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
    Usage,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undecided => 2,
            Status::Usage => EXIT_USAGE,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// The weaker of two statuses: a failure beats undecided beats a pass.
    pub fn and(self, other: Status) -> Status {
        fn rank(s: Status) -> u8 {
            match s {
                Status::Pass => 0,
                Status::Undecided => 1,
                Status::Fail => 2,
                Status::Usage => 3,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// What a command produced: text lines for people and a JSON value for
/// machines. Every line is also present in the JSON document.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub lines: Vec<String>,
    pub data: Value,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), status: Status::Pass, lines: Vec::new(), data: json!({}) }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).unwrap_or(Value::Null);
        if let Value::Object(m) = &mut self.data {
            m.insert(key.to_string(), v);
        }
    }

    pub fn demand(&mut self, s: Status) {
        self.status = self.status.and(s);
    }

    pub fn from_error(command: impl Into<String>, e: &Error) -> Report {
        let mut r = Report::new(command);
        r.status = error_status(e);
        r.line(format!("error: {e}"));
        r.set("error", e.to_string());
        r
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn emit(&self, as_json: bool) -> String {
        if as_json {
            let doc = json!({
                "command": self.command,
                "status": self.status,
                "exit_code": self.exit_code(),
                "lines": self.lines,
                "result": self.data,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            for l in &self.lines {
                s.push_str(l);
                s.push('\n');
            }
            s.push_str(&format!("status: {}\n", status_word(self.status)));
            s
        }
    }
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Undecided => "undecided",
        Status::Usage => "usage",
    }
}

pub fn error_status(e: &Error) -> Status {
    match e {
        Error::Undecided(_) | Error::TruncationTooShallow(_) | Error::NonTerminating(_) | Error::NotFiniteDimensional(_) => {
            Status::Undecided
        }
        Error::Parse { .. }
        | Error::UnknownVertex(_)
        | Error::UnknownArrow(_)
        | Error::IllFormedRelation(_)
        | Error::InvalidField(_)
        | Error::AlgebraMismatch => Status::Usage,
        _ => Status::Fail,
    }
}
