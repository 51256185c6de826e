use std::io::Write;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::input::InputInfo;

pub const SCHEMA_VERSION: &str = "itree-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub subcommand: &'static str,
    pub argv: Vec<String>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub checks: Vec<String>,
    pub failures: Vec<String>,
}

impl Verification {
    pub fn new() -> Self {
        Verification {
            ok: true,
            ..Default::default()
        }
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(name.to_string());
        if !passed {
            self.ok = false;
            self.failures.push(name.to_string());
        }
    }

    pub fn absorb(&mut self, name: &str, verdict: itree::certify::Verdict) {
        self.checks.push(name.to_string());
        if !verdict.ok {
            self.ok = false;
            self.failures
                .extend(verdict.failures.into_iter().map(|f| format!("{name}: {f}")));
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub version: String,
    pub command: CommandEcho,
    pub input: Option<InputInfo>,
    /// Position of the graph within a batch input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub result: Value,
    pub verification: Verification,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(
        command: &CommandEcho,
        input: Option<&InputInfo>,
        result: Value,
        verification: Verification,
        elapsed: Duration,
    ) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            version: format!("itree {}", env!("CARGO_PKG_VERSION")),
            command: command.clone(),
            input: input.cloned(),
            index: None,
            result,
            verification,
            timing: Timing {
                elapsed_ms: elapsed.as_secs_f64() * 1000.0,
            },
        }
    }

    pub fn at(mut self, index: usize) -> Self {
        self.index = Some(index);
        self
    }

    pub fn print(&self, pretty: bool) {
        let text = if pretty {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        };
        emit(&text.expect("reports serialize"));
    }
}

/// Writes one line to stdout. A closed pipe ends the process quietly, as
/// when the output is piped into `head`.
pub fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}").and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}
