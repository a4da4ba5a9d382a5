use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use chordpart::partitioner::{Certificate, Potential};
use chordpart::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Partitioned,
    Packed,
    Failed,
    Refused,
    Valid,
    Invalid,
    Checked,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Partitioned | Verdict::Packed | Verdict::Valid | Verdict::Checked => 0,
            Verdict::Failed | Verdict::Invalid => 1,
            Verdict::Refused => 2,
        }
    }

    /// Verdicts that come with cycles.
    pub fn has_cycles(self) -> bool {
        matches!(self, Verdict::Partitioned | Verdict::Packed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub digest: String,
    pub n: usize,
    pub m: usize,
}

impl InputSummary {
    pub fn of(g: &Graph) -> Self {
        InputSummary {
            digest: g.digest(),
            n: g.n(),
            m: g.m(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

/// One threshold test. `measured` is `None` when the quantity is infinite
/// (σ₂ of a complete graph).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub measured: Option<usize>,
    pub required: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialTrace {
    pub initial: Potential,
    #[serde(rename = "final")]
    pub last: Potential,
    pub steps: usize,
    pub bound: usize,
    pub kinds: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureSummary {
    pub reason: String,
    pub ore_ok: bool,
    pub order_ok: bool,
    /// Verdict of the engine's own exact search, when it ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_verdict: Option<bool>,
    /// Verdict of the brute-force oracle, when the graph is small enough.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_verdict: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixpoint_clean: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    pub params: RunParams,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<Vertex>>>,
    pub move_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<PotentialTrace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timings: Timings,
}

impl RunReport {
    pub fn new(command: &str, verdict: Verdict) -> Self {
        RunReport {
            command: command.to_string(),
            input: None,
            params: RunParams::default(),
            verdict,
            cycles: None,
            move_count: 0,
            potential: None,
            resolution: None,
            checks: Vec::new(),
            certificate: None,
            failure: None,
            error: None,
            timings: Timings::default(),
        }
    }

    pub fn refused(command: &str, error: impl ToString) -> Self {
        let mut r = RunReport::new(command, Verdict::Refused);
        r.error = Some(error.to_string());
        r
    }

    /// Cycles present iff the verdict carries them.
    pub fn is_consistent(&self) -> bool {
        self.cycles.is_some() == self.verdict.has_cycles()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = RunReport::new("partition", Verdict::Partitioned);
        r.input = Some(InputSummary {
            digest: "ab".into(),
            n: 4,
            m: 6,
        });
        r.params.k = Some(1);
        r.params.c = Some(2);
        r.cycles = Some(vec![vec![0, 1, 2, 3]]);
        r.move_count = 2;
        r.potential = Some(PotentialTrace {
            initial: Potential {
                low_covered: 0,
                covered: 3,
            },
            last: Potential {
                low_covered: 0,
                covered: 4,
            },
            steps: 1,
            bound: 5,
            kinds: BTreeMap::from([("crossing_rotation".to_string(), 1)]),
        });
        r.checks.push(Check {
            name: "ore".into(),
            measured: None,
            required: 4,
            pass: true,
        });
        r.timings.total_ms = 0.125;
        let text = serde_json::to_string(&r).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(back.is_consistent());
        assert!(text.contains("\"final\""));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict::Partitioned.exit_code(), 0);
        assert_eq!(Verdict::Valid.exit_code(), 0);
        assert_eq!(Verdict::Failed.exit_code(), 1);
        assert_eq!(Verdict::Invalid.exit_code(), 1);
        assert_eq!(Verdict::Refused.exit_code(), 2);
    }
}
