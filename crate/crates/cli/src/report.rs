use std::fmt::Write as _;

use symprod_core::orbifold::{CheckOutcome, Status};

use crate::error::exit;

/// Text output of one command and its exit code. Rendering depends only on
/// the inputs, so identical invocations print identical bytes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    pub fn new(echo: &str) -> Self {
        Report {
            lines: vec![format!("# symprod {echo}")],
            failed: false,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn fail(&mut self) {
        self.failed = true;
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    /// Appends check lines, aligned on the name column, and a result line.
    pub fn checks(&mut self, outcomes: &[CheckOutcome]) {
        let width = outcomes
            .iter()
            .map(|o| o.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut counts = [0usize; 3];
        for o in outcomes {
            let pad = width - o.name.chars().count();
            self.line(format!(
                "{}  {}{}  {}",
                o.status.label(),
                o.name,
                " ".repeat(pad),
                o.detail
            ));
            counts[match o.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Skipped => 2,
            }] += 1;
        }
        if counts[1] > 0 {
            self.fail();
        }
        self.line(format!(
            "result: {} ({} passed, {} failed, {} skipped)",
            if counts[1] == 0 { "PASS" } else { "FAIL" },
            counts[0],
            counts[1],
            counts[2]
        ));
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            exit::MISMATCH
        } else {
            exit::PASS
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        out
    }
}
