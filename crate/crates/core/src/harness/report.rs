use std::collections::BTreeMap;

use serde::Serialize;

/// Failures kept per report; further ones are dropped after sorting.
pub const FAILURE_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// Edge-list text of the offending graph.
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub instances_checked: u64,
    /// Sorted by graph text, then detail.
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    /// Wall-clock milliseconds per phase. Not covered by determinism.
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The report as JSON without the timing fields, for byte-level
    /// comparison across runs.
    pub fn deterministic_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(map) = value.as_object_mut() {
            map.remove("timings_ms");
        }
        serde_json::to_string(&value).expect("report serializes")
    }
}

/// Associative accumulator for per-graph results.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.trim();
        self
    }

    /// Keeps the smallest failures only. Trimming each part before merging
    /// keeps the overall smallest, so the outcome is schedule independent.
    pub fn trim(&mut self) {
        if self.failures.len() > FAILURE_CAP {
            self.failures.sort();
            self.failures.truncate(FAILURE_CAP);
        }
    }

    pub fn into_report(
        mut self,
        suite: &str,
        seed: u64,
        timings_ms: BTreeMap<String, u64>,
    ) -> Report {
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(FAILURE_CAP);
        Report {
            suite: suite.to_string(),
            seed,
            instances_checked: self.checked,
            verdict: if self.failures.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            failures: self.failures,
            timings_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failure(i: usize) -> Failure {
        Failure {
            graph: format!("g{i:04}"),
            detail: "x".into(),
        }
    }

    #[test]
    fn merge_is_order_independent_under_the_cap() {
        let parts: Vec<Tally> = (0..5)
            .map(|p| Tally {
                checked: 10,
                failures: (0..60).map(|i| failure(i * 5 + p)).collect(),
            })
            .collect();
        let forward = parts.iter().cloned().fold(Tally::default(), Tally::merge);
        let backward = parts
            .iter()
            .rev()
            .cloned()
            .fold(Tally::default(), Tally::merge);
        let a = forward.into_report("s", 1, BTreeMap::new());
        let b = backward.into_report("s", 1, BTreeMap::new());
        assert_eq!(a, b);
        assert_eq!(a.failures.len(), FAILURE_CAP);
        assert_eq!(a.failures[0], failure(0));
        assert_eq!(a.instances_checked, 50);
        assert_eq!(a.verdict, Verdict::Fail);
    }

    #[test]
    fn timings_are_excluded_from_the_deterministic_form() {
        let mut t = BTreeMap::new();
        t.insert("check".to_string(), 5);
        let r = Tally::default().into_report("theorem2", 3, t);
        assert_eq!(
            r.deterministic_json(),
            r#"{"failures":[],"instances_checked":0,"seed":3,"suite":"theorem2","verdict":"pass"}"#
        );
    }
}
