//! Pass/fail records for verified claims, and their JSON report form.

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub detail: String,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// One line: `PASS  id  (12 ms)  detail`.
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        format!("{tag}  {}  ({} ms)  {}", self.id, self.elapsed.as_millis(), self.detail)
    }
}

/// Starts the clock for one claim.
#[derive(Clone, Copy, Debug)]
pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn finish(self, id: &str, status: Status, detail: impl Into<String>) -> ClaimReport {
        ClaimReport {
            id: id.to_string(),
            status,
            detail: detail.into(),
            elapsed: self.0.elapsed(),
        }
    }

    pub fn pass(self, id: &str, detail: impl Into<String>) -> ClaimReport {
        self.finish(id, Status::Pass, detail)
    }

    pub fn fail(self, id: &str, detail: impl Into<String>) -> ClaimReport {
        self.finish(id, Status::Fail, detail)
    }

    pub fn check(self, id: &str, ok: bool, detail: impl Into<String>) -> ClaimReport {
        self.finish(id, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

/// The machine-readable report: claims sorted by id.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub claims: Vec<ClaimReport>,
}

impl Report {
    pub fn new(mut claims: Vec<ClaimReport>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        Report { schema: 1, claims }
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let a = Timer::start().pass("b", "ok");
        let b = Timer::start().fail("a", "no");
        let r = Report::new(vec![a, b]);
        assert!(!r.all_passed());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["claims"][0]["id"], "a");
        assert_eq!(v["claims"][0]["status"], "fail");
        assert!(v["claims"][1]["elapsed_ms"].is_u64());
    }
}
