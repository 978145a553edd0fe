//! Check reports, the typo-suspect configuration and the check catalogue.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    pub expected_ref: String,
    pub derived: String,
    pub difference: String,
}

impl CheckReport {
    /// Builds a report from a comparison. A nonempty difference becomes a
    /// discrepancy when the id is configured as a typo suspect, a failure otherwise.
    pub fn compare(check_id: &str, derived: String, difference: String) -> CheckReport {
        let status = if difference.is_empty() {
            Status::Pass
        } else if suspects().contains(check_id) {
            Status::Discrepancy
        } else {
            Status::Fail
        };
        CheckReport {
            check_id: check_id.to_string(),
            status,
            expected_ref: catalogue().reference(check_id),
            derived,
            difference,
        }
    }

    /// A yes/no check with a description of what was found.
    pub fn boolean(check_id: &str, ok: bool, derived: String) -> CheckReport {
        let difference = if ok { String::new() } else { "check failed".to_string() };
        CheckReport::compare(check_id, derived, difference)
    }

    pub fn error(check_id: &str, err: &dyn std::fmt::Display) -> CheckReport {
        CheckReport {
            check_id: check_id.to_string(),
            status: Status::Fail,
            expected_ref: catalogue().reference(check_id),
            derived: String::new(),
            difference: format!("error: {err}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<CheckReport>) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Discrepancy => summary.discrepancy += 1,
            }
        }
        Report { checks, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Discrepancy => "discrepancy",
            };
            out.push_str(&format!("{tag:<12} {}\n", c.check_id));
            if !c.difference.is_empty() {
                out.push_str(&format!("             derived: {}\n", c.derived));
                out.push_str(&format!("             difference: {}\n", c.difference));
            }
        }
        let s = &self.summary;
        out.push_str(&format!("pass {} / fail {} / discrepancy {}\n", s.pass, s.fail, s.discrepancy));
        out
    }
}

/// One configured typo suspect. `listed` marks the suspects that were
/// known before re-derivation; the others were added after adjudication.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Suspect {
    pub check_id: String,
    pub listed: bool,
    pub finding: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Suspects {
    pub suspects: Vec<Suspect>,
}

impl Suspects {
    pub fn contains(&self, id: &str) -> bool {
        self.suspects.iter().any(|s| s.check_id == id)
    }

    pub fn listed(&self) -> impl Iterator<Item = &Suspect> {
        self.suspects.iter().filter(|s| s.listed)
    }
}

pub fn suspects() -> &'static Suspects {
    static S: OnceLock<Suspects> = OnceLock::new();
    S.get_or_init(|| serde_json::from_str(include_str!("../data/typo_suspects.json")).expect("typo_suspects.json is valid"))
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CatalogueEntry {
    pub location: String,
    pub quote: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Catalogue {
    pub entries: BTreeMap<String, CatalogueEntry>,
}

impl Catalogue {
    /// `location: quote` for an id. Per-coefficient ids fall back to
    /// their display (`calc.C1.shift_0_2` to `calc.C1`).
    pub fn reference(&self, id: &str) -> String {
        let mut key = id;
        loop {
            if let Some(e) = self.entries.get(key) {
                return format!("{}: {}", e.location, e.quote);
            }
            match key.rfind('.') {
                Some(p) => key = &key[..p],
                None => return String::new(),
            }
        }
    }
}

pub fn catalogue() -> &'static Catalogue {
    static C: OnceLock<Catalogue> = OnceLock::new();
    C.get_or_init(|| serde_json::from_str(include_str!("../data/catalogue.json")).expect("catalogue.json is valid"))
}
