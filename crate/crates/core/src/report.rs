//! Plain-data verification reports.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational line; never fails a report.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub status: Status,
    pub label: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub lines: Vec<Line>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, label: impl Into<String>, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.lines.push(Line {
            status,
            label: label.into(),
            detail: detail.into(),
        });
    }

    pub fn info(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(Line {
            status: Status::Info,
            label: label.into(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Line> {
        self.lines.iter().filter(|l| l.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for l in &self.lines {
            if l.detail.is_empty() {
                writeln!(f, "{} {}", l.status, l.label)?;
            } else {
                writeln!(f, "{} {}: {}", l.status, l.label, l.detail)?;
            }
        }
        Ok(())
    }
}
