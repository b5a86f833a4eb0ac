use serde::{Deserialize, Serialize};

use crate::pclass::{CWitness, ClassIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One check. `expected` and `computed` hold canonical strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassIndex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Report {
    pub fn new(id: impl Into<String>, pass: bool) -> Self {
        Report {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected: None,
            computed: None,
            class: None,
            witness: None,
            seed: None,
            millis: None,
        }
    }

    /// Passes iff the two strings are equal.
    pub fn compare(
        id: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        let (e, c) = (expected.into(), computed.into());
        let mut r = Report::new(id, e == c);
        r.expected = Some(e);
        r.computed = Some(c);
        r
    }

    pub fn fail(id: impl Into<String>, why: impl Into<String>) -> Self {
        let mut r = Report::new(id, false);
        r.computed = Some(why.into());
        r
    }

    pub fn skipped(id: impl Into<String>, why: impl Into<String>) -> Self {
        let mut r = Report::new(id, false);
        r.status = Status::Skipped;
        r.computed = Some(why.into());
        r
    }

    pub fn with_expected(mut self, e: impl Into<String>) -> Self {
        self.expected = Some(e.into());
        self
    }

    pub fn with_computed(mut self, c: impl Into<String>) -> Self {
        self.computed = Some(c.into());
        self
    }

    pub fn with_class(mut self, c: ClassIndex) -> Self {
        self.class = Some(c);
        self
    }

    pub fn with_witness(mut self, w: CWitness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_seed(mut self, s: u64) -> Self {
        self.seed = Some(s);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Single text line: status, id, then whatever detail is present.
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let mut s = format!("{tag} {}", self.id);
        if let Some(c) = self.class {
            s += &format!(" class={c}");
        }
        if let Some(w) = self.witness {
            s += &format!(" witness={w}");
        }
        if let Some(seed) = self.seed {
            s += &format!(" seed={seed}");
        }
        if self.status != Status::Pass {
            if let Some(e) = &self.expected {
                s += &format!("\n  expected: {e}");
            }
            if let Some(c) = &self.computed {
                s += &format!("\n  computed: {c}");
            }
        }
        if let Some(ms) = self.millis {
            s += &format!(" ({ms} ms)");
        }
        s
    }
}

/// Failures and skips count against a run; passes only when every report
/// passed.
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

pub fn to_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        out += &r.line();
        out.push('\n');
    }
    out
}

pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_compare_keeps_both_strings() {
        let r = Report::compare("x", "a + b", "a - b");
        assert_eq!(r.status, Status::Fail);
        assert!(r.line().contains("expected: a + b"));
        assert!(r.line().contains("computed: a - b"));
    }

    #[test]
    fn json_uses_tuples() {
        let r = Report::new("k", true)
            .with_class(ClassIndex::new(3, 4))
            .with_witness(CWitness::new([5, 3, 7], [8, 4, 12]));
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(
            j,
            r#"{"id":"k","status":"pass","class":[3,4],"witness":[[5,3,7],[8,4,12]]}"#
        );
        let back: Report = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
    }
}
