//! Check reports and their JSON-lines form.

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest as _, Sha256};

/// Expected or actual value of a check: a count, or a text digest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Digest {
    Count(i64),
    Text(String),
}

impl From<i64> for Digest {
    fn from(v: i64) -> Self {
        Digest::Count(v)
    }
}

impl From<u64> for Digest {
    fn from(v: u64) -> Self {
        Digest::Count(i64::try_from(v).expect("count fits in i64"))
    }
}

impl From<usize> for Digest {
    fn from(v: usize) -> Self {
        Digest::from(v as u64)
    }
}

impl From<bool> for Digest {
    fn from(v: bool) -> Self {
        Digest::Text(v.to_string())
    }
}

impl From<String> for Digest {
    fn from(v: String) -> Self {
        Digest::Text(v)
    }
}

impl From<&str> for Digest {
    fn from(v: &str) -> Self {
        Digest::Text(v.to_owned())
    }
}

/// Order-independent digest `size=N;sha256=<16 hex>` of a set, taken over the
/// sorted, newline-joined serialization of its members.
pub fn set_digest<I>(items: I) -> Digest
where
    I: IntoIterator,
    I::Item: Display,
{
    let mut lines: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    lines.sort_unstable();
    lines.dedup();
    let hash = Sha256::digest(lines.join("\n").as_bytes());
    let hex: String = hash[..8].iter().map(|b| format!("{b:02x}")).collect();
    Digest::Text(format!("size={};sha256={hex}", lines.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub expected: Digest,
    pub actual: Digest,
    pub pass: bool,
    pub exploratory: bool,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn new(
        check: impl Into<String>,
        n: Option<usize>,
        d: Option<usize>,
        expected: impl Into<Digest>,
        actual: impl Into<Digest>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        CheckReport {
            check: check.into(),
            n,
            d,
            pass: expected == actual,
            expected,
            actual,
            exploratory: false,
            elapsed_ms: 0,
        }
    }

    /// Runs `f` for `(expected, actual)` and records how long it took.
    pub fn timed<E, A>(
        check: impl Into<String>,
        n: Option<usize>,
        d: Option<usize>,
        f: impl FnOnce() -> (E, A),
    ) -> Self
    where
        E: Into<Digest>,
        A: Into<Digest>,
    {
        let start = Instant::now();
        let (e, a) = f();
        let mut r = CheckReport::new(check, n, d, e, a);
        r.elapsed_ms = start.elapsed().as_millis();
        r
    }

    pub fn exploratory(mut self) -> Self {
        self.exploratory = true;
        self
    }

    /// One JSON object; `elapsed_ms` only when asked, so that output without
    /// timings is byte-for-byte reproducible.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "check": self.check,
            "n": self.n,
            "d": self.d,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.pass,
        });
        let obj = v.as_object_mut().expect("object literal");
        if self.exploratory {
            obj.insert("label".into(), json!("EXPLORATORY"));
        }
        if timings {
            obj.insert("elapsed_ms".into(), json!(self.elapsed_ms as u64));
        }
        v
    }

    pub fn to_json_line(&self, timings: bool) -> String {
        self.to_json(timings).to_string()
    }
}
