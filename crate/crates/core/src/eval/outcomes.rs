use serde::{Deserialize, Serialize};

use crate::generate::detect_hallucination_error;

/// Final status of a generated test after refinement, as reported by an
/// external test runner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestStatus {
    Pass,
    Fail,
    Crash,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    /// Error message of the test before refinement, if it failed.
    pub initial_error: Option<String>,
    pub final_status: TestStatus,
    /// Error message after refinement, if it still fails.
    #[serde(default)]
    pub final_error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeCounters {
    pub passing: usize,
    /// Tests that initially crashed with a hallucination error and now pass.
    pub fixed_hallucinations: usize,
    /// Tests that initially crashed with a hallucination error and now run
    /// without one but still do not pass.
    pub non_crashing_failures: usize,
}

pub fn tally_refinement_outcomes(records: &[OutcomeRecord]) -> OutcomeCounters {
    let mut c = OutcomeCounters::default();
    for r in records {
        let hallucinated = r.initial_error.as_deref().is_some_and(detect_hallucination_error);
        match r.final_status {
            TestStatus::Pass => {
                c.passing += 1;
                if hallucinated {
                    c.fixed_hallucinations += 1;
                }
            }
            TestStatus::Fail | TestStatus::Crash => {
                let still = r.final_error.as_deref().is_some_and(detect_hallucination_error);
                if hallucinated && !still {
                    c.non_crashing_failures += 1;
                }
            }
        }
    }
    c
}

/// Count implied by a percentage of `total`, rounded half away from zero.
pub fn count_from_percentage(total: usize, percent: f64) -> usize {
    (total as f64 * percent / 100.0).round() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(initial: Option<&str>, status: TestStatus, after: Option<&str>) -> OutcomeRecord {
        OutcomeRecord {
            initial_error: initial.map(str::to_string),
            final_status: status,
            final_error: after.map(str::to_string),
        }
    }

    #[test]
    fn hallucination_to_pass_is_fixed() {
        let c = tally_refinement_outcomes(&[rec(Some("TypeError: d.pushfront is not a function"), TestStatus::Pass, None)]);
        assert_eq!(c, OutcomeCounters { passing: 1, fixed_hallucinations: 1, non_crashing_failures: 0 });
    }

    #[test]
    fn assertion_to_pass_is_not_fixed_hallucination() {
        let c = tally_refinement_outcomes(&[rec(Some("AssertionError: expected 1 to equal 2"), TestStatus::Pass, None)]);
        assert_eq!(c, OutcomeCounters { passing: 1, fixed_hallucinations: 0, non_crashing_failures: 0 });
    }

    #[test]
    fn hallucination_to_assertion_failure_is_non_crashing() {
        let c = tally_refinement_outcomes(&[
            rec(Some("Cannot read property 'x' of undefined"), TestStatus::Fail, Some("AssertionError")),
            rec(Some("Cannot read property 'x' of undefined"), TestStatus::Crash, Some("y is not a function")),
        ]);
        assert_eq!(c, OutcomeCounters { passing: 0, fixed_hallucinations: 0, non_crashing_failures: 1 });
    }

    #[test]
    fn percentage_counts_round_half_away_from_zero() {
        // 622 * 0.167 = 103.874
        assert_eq!(count_from_percentage(622, 16.7), 104);
        assert_eq!(count_from_percentage(10, 25.0), 3);
        assert_eq!(count_from_percentage(10, 24.0), 2);
        assert_eq!(count_from_percentage(0, 50.0), 0);
    }

    #[test]
    fn tally_of_622_records_at_the_reported_share() {
        let passing = count_from_percentage(622, 16.7);
        let records: Vec<_> = (0..622)
            .map(|i| rec(Some("AssertionError"), if i < passing { TestStatus::Pass } else { TestStatus::Fail }, None))
            .collect();
        assert_eq!(tally_refinement_outcomes(&records).passing, 104);
    }
}
