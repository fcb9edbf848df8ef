//! On-disk formats: category, ledger and sweep-config JSON, sweep CSV.

use std::fmt::Write as _;

use infocog_core::ca::{LambdaSummary, SweepConfig, SweepRecord};
use infocog_core::cogaug::{Agent, Bloom, Dikw, Ledger, Step, Stock, StockSnapshot};
use infocog_core::grit::BooleanCategory;
use infocog_core::Error as CoreError;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"dimensions": D, "members": [[0,1,...], ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub dimensions: usize,
    pub members: Vec<Vec<u8>>,
}

impl CategoryFile {
    pub fn to_category(&self) -> Result<BooleanCategory, CoreError> {
        BooleanCategory::from_vectors(self.dimensions, &self.members)
    }

    pub fn from_category(c: &BooleanCategory) -> Self {
        Self {
            dimensions: c.dimensions(),
            members: c.members().iter().map(|&m| c.vector(m)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AgentTag {
    Human,
    Cog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DikwTag {
    Data,
    Information,
    Knowledge,
    Wisdom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BloomTag {
    Remember,
    Understand,
    Apply,
    Analyze,
    Evaluate,
    Create,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnapshotFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dikw: Option<DikwTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bloom: Option<BloomTag>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepFile {
    pub id: String,
    pub agent: AgentTag,
    #[serde(rename = "in")]
    pub stock_in: SnapshotFile,
    #[serde(rename = "out")]
    pub stock_out: SnapshotFile,
    #[serde(default)]
    pub psi_lost: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy_j: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerFile {
    pub steps: Vec<StepFile>,
}

impl SnapshotFile {
    fn to_snapshot(&self) -> Result<StockSnapshot, CoreError> {
        let stock = match (&self.psi, &self.category) {
            (Some(p), None) => Stock::Psi(*p),
            (None, Some(c)) => Stock::Category(c.to_category()?),
            _ => return Err(CoreError::UnresolvablePsi),
        };
        Ok(StockSnapshot {
            stock,
            dikw: self.dikw.map(|t| match t {
                DikwTag::Data => Dikw::Data,
                DikwTag::Information => Dikw::Information,
                DikwTag::Knowledge => Dikw::Knowledge,
                DikwTag::Wisdom => Dikw::Wisdom,
            }),
            bloom: self.bloom.map(|t| match t {
                BloomTag::Remember => Bloom::Remember,
                BloomTag::Understand => Bloom::Understand,
                BloomTag::Apply => Bloom::Apply,
                BloomTag::Analyze => Bloom::Analyze,
                BloomTag::Evaluate => Bloom::Evaluate,
                BloomTag::Create => Bloom::Create,
            }),
        })
    }
}

impl LedgerFile {
    /// Snapshots must carry exactly one of `psi` or `category`; failures
    /// name the step.
    pub fn to_ledger(&self) -> Result<Ledger, CoreError> {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let tag = |e| CoreError::Step {
                    id: s.id.clone(),
                    source: Box::new(e),
                };
                Ok(Step {
                    id: s.id.clone(),
                    agent: match s.agent {
                        AgentTag::Human => Agent::Human,
                        AgentTag::Cog => Agent::Cog,
                    },
                    stock_in: s.stock_in.to_snapshot().map_err(tag)?,
                    stock_out: s.stock_out.to_snapshot().map_err(tag)?,
                    psi_lost: s.psi_lost,
                    time_s: s.time_s,
                    energy_j: s.energy_j,
                })
            })
            .collect::<Result<Vec<_>, CoreError>>()?;
        Ledger::new(steps)
    }
}

fn default_states() -> u8 {
    2
}

fn default_radius() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfigFile {
    #[serde(default = "default_states")]
    pub states: u8,
    #[serde(default = "default_radius")]
    pub radius: usize,
    pub lambda_grid: Vec<f64>,
    pub samples_per_lambda: u64,
    pub width: usize,
    pub steps: usize,
    pub transient_cutoff: usize,
    #[serde(default)]
    pub seed: u64,
}

impl From<SweepConfigFile> for SweepConfig {
    fn from(f: SweepConfigFile) -> Self {
        SweepConfig {
            states: f.states,
            radius: f.radius,
            lambda_grid: f.lambda_grid,
            samples_per_lambda: f.samples_per_lambda,
            width: f.width,
            steps: f.steps,
            transient_cutoff: f.transient_cutoff,
            seed: f.seed,
        }
    }
}

pub const SWEEP_CSV_HEADER: &str = "lambda,seed,eta,capacity,activity,class";

/// LF line endings, no quoting, fixed six-decimal reals.
pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{:.6},{},{:.6},{:.6},{:.6},{}",
            r.lambda, r.seed, r.site_entropy_eta, r.capacity, r.activity, r.class_heuristic
        );
    }
    out
}

pub const SUMMARY_CSV_HEADER: &str = "lambda,samples,mean_eta,mean_capacity,mean_activity";

pub fn sweep_summary_csv(summary: &[LambdaSummary]) -> String {
    let mut out = String::from(SUMMARY_CSV_HEADER);
    out.push('\n');
    for s in summary {
        let _ = writeln!(
            out,
            "{:.6},{},{:.6},{:.6},{:.6}",
            s.lambda, s.samples, s.mean_eta, s.mean_capacity, s.mean_activity
        );
    }
    out
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_json(&path.display().to_string(), &text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use infocog_core::ca::WolframClass;

    #[test]
    fn ledger_snapshot_must_pick_one_source() {
        let text = r#"{"steps": [{"id": "s1", "agent": "human", "in": {"dikw": "data"}, "out": {"psi": 1.0}}]}"#;
        let file: LedgerFile = parse_json("ledger", text).unwrap();
        let err = file.to_ledger().unwrap_err();
        assert!(err.to_string().contains("s1"), "{err}");

        let both = r#"{"steps": [{"id": "s2", "agent": "cog", "in": {"psi": 1.0, "category": {"dimensions": 1, "members": [[0]]}}, "out": {"psi": 1.0}}]}"#;
        let file: LedgerFile = parse_json("ledger", both).unwrap();
        assert!(file.to_ledger().unwrap_err().to_string().contains("s2"));
    }

    #[test]
    fn ledger_rejects_unknown_fields() {
        let text =
            r#"{"steps": [{"id": "s1", "agent": "robot", "in": {"psi": 1}, "out": {"psi": 1}}]}"#;
        assert!(parse_json::<LedgerFile>("ledger", text).is_err());
    }

    #[test]
    fn category_file_round_trips_through_core() {
        let file = CategoryFile {
            dimensions: 3,
            members: vec![vec![1, 0, 0], vec![0, 0, 1]],
        };
        let c = file.to_category().unwrap();
        let back = CategoryFile::from_category(&c);
        assert_eq!(back.members, vec![vec![0, 0, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn csv_layout() {
        let r = SweepRecord {
            lambda: 0.125,
            seed: 42,
            site_entropy_eta: 0.5,
            capacity: 300.0,
            activity: 0.25,
            class_heuristic: WolframClass::III,
        };
        assert_eq!(
            sweep_csv(&[r]),
            "lambda,seed,eta,capacity,activity,class\n0.125000,42,0.500000,300.000000,0.250000,III\n"
        );
    }
}
