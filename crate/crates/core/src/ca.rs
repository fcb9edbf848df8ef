//! One-dimensional cellular automata for edge-of-chaos experiments.
//!
//! Lattices are periodic. A rule table over `k` states with radius `r` has
//! `k^(2r+1)` entries, indexed by the neighborhood read left to right as a
//! base-`k` number (leftmost cell most significant). State 0 is quiescent,
//! and Langton's λ is the fraction of table entries that are not.
//!
//! Everything random is driven by [`SplitMix64`], so a sweep is a pure
//! function of its configuration.

use alloc::vec::Vec;
use core::fmt;

use crate::emergence::emergent_capacity_or_limit;
use crate::math::log2;
use crate::rng::{derive_seed, SplitMix64};
use crate::{Error, Result};

pub const QUIESCENT: u8 = 0;

/// Largest table we are willing to allocate.
const MAX_TABLE_LEN: u64 = 1 << 24;

/// Tolerance when turning `λ · k^(2r+1)` into an entry count.
pub const LAMBDA_COUNT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    states: u8,
    radius: usize,
    outputs: Vec<u8>,
}

/// `k^(2r+1)`, checked against [`MAX_TABLE_LEN`].
pub fn table_len(states: u8, radius: usize) -> Result<usize> {
    if states < 2 {
        return Err(Error::domain("states", f64::from(states), "[2, 255]"));
    }
    if radius < 1 {
        return Err(Error::domain("radius", radius as f64, "[1, inf)"));
    }
    let mut len: u64 = 1;
    for _ in 0..(2 * radius + 1) {
        len = len.saturating_mul(u64::from(states));
        if len > MAX_TABLE_LEN {
            return Err(Error::InvalidRule("table larger than 2^24 entries"));
        }
    }
    Ok(len as usize)
}

impl RuleTable {
    pub fn new(states: u8, radius: usize, outputs: Vec<u8>) -> Result<Self> {
        if outputs.len() != table_len(states, radius)? {
            return Err(Error::InvalidRule("output count is not k^(2r+1)"));
        }
        if outputs.iter().any(|&s| s >= states) {
            return Err(Error::InvalidRule("output state not below k"));
        }
        Ok(Self {
            states,
            radius,
            outputs,
        })
    }

    pub fn states(&self) -> u8 {
        self.states
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn outputs(&self) -> &[u8] {
        &self.outputs
    }

    pub fn neighborhood_size(&self) -> usize {
        2 * self.radius + 1
    }
}

pub fn lambda_of(rule: &RuleTable) -> f64 {
    let active = rule.outputs.iter().filter(|&&s| s != QUIESCENT).count();
    active as f64 / rule.outputs.len() as f64
}

/// Wolfram's numbering for `k = 2, r = 1`: entry `4l + 2c + r` is bit
/// `4l + 2c + r` of `code`.
pub fn elementary_rule(code: u32) -> Result<RuleTable> {
    if code > 255 {
        return Err(Error::domain("rule", f64::from(code), "[0, 255]"));
    }
    let outputs = (0..8).map(|n| ((code >> n) & 1) as u8).collect();
    RuleTable::new(2, 1, outputs)
}

/// Number of non-quiescent entries implied by `lambda` for a table of `len`.
pub fn lambda_count(lambda: f64, len: usize) -> Result<usize> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::domain("lambda", lambda, "[0, 1]"));
    }
    let exact = lambda * len as f64;
    let count = libm::round(exact);
    if (exact - count).abs() > LAMBDA_COUNT_TOLERANCE {
        return Err(Error::domain("lambda", lambda, "multiples of 1/k^(2r+1)"));
    }
    Ok(count as usize)
}

/// Rule with exactly `λ · k^(2r+1)` non-quiescent entries.
///
/// Entries are chosen by a Fisher–Yates shuffle of the table slots; each
/// chosen slot gets a uniformly random non-quiescent state.
pub fn random_rule_with_lambda(
    states: u8,
    radius: usize,
    lambda: f64,
    seed: u64,
) -> Result<RuleTable> {
    let len = table_len(states, radius)?;
    let count = lambda_count(lambda, len)?;
    let mut rng = SplitMix64::new(seed);
    let mut slots: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        slots.swap(i, j);
    }
    let mut outputs = alloc::vec![QUIESCENT; len];
    for &slot in &slots[..count] {
        outputs[slot] = 1 + rng.next_below(u64::from(states) - 1) as u8;
    }
    RuleTable::new(states, radius, outputs)
}

/// Evolved lattice; `rows[0]` is the initial condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacetimeDiagram {
    states: u8,
    width: usize,
    rows: Vec<Vec<u8>>,
}

impl SpacetimeDiagram {
    pub fn new(states: u8, rows: Vec<Vec<u8>>) -> Result<Self> {
        let width = rows
            .first()
            .map(Vec::len)
            .ok_or(Error::InvalidLattice("no rows"))?;
        if width < 3 {
            return Err(Error::InvalidLattice("width below 3"));
        }
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidLattice("rows differ in width"));
        }
        if rows.iter().flatten().any(|&s| s >= states) {
            return Err(Error::InvalidLattice("cell state not below k"));
        }
        Ok(Self {
            states,
            width,
            rows,
        })
    }

    pub fn states(&self) -> u8 {
        self.states
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn after(&self, cutoff: usize) -> Result<&[Vec<u8>]> {
        if cutoff >= self.steps() {
            return Err(Error::domain(
                "transient_cutoff",
                cutoff as f64,
                "below the number of steps",
            ));
        }
        Ok(&self.rows[cutoff + 1..])
    }
}

/// Synchronous update with periodic boundaries.
pub fn evolve(rule: &RuleTable, initial: &[u8], steps: usize) -> Result<SpacetimeDiagram> {
    let width = initial.len();
    let hood = rule.neighborhood_size();
    if width < hood || width < 3 {
        return Err(Error::WidthTooSmall {
            width,
            neighborhood: hood.max(3),
        });
    }
    if initial.iter().any(|&s| s >= rule.states) {
        return Err(Error::InvalidLattice("cell state not below k"));
    }
    let k = usize::from(rule.states);
    let r = rule.radius;
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(initial.to_vec());
    for t in 0..steps {
        let prev = &rows[t];
        let mut next = alloc::vec![QUIESCENT; width];
        for (i, cell) in next.iter_mut().enumerate() {
            let mut index = 0usize;
            for offset in 0..hood {
                let j = (i + width + offset - r) % width;
                index = index * k + usize::from(prev[j]);
            }
            *cell = rule.outputs[index];
        }
        rows.push(next);
    }
    Ok(SpacetimeDiagram {
        states: rule.states,
        width,
        rows,
    })
}

/// Uniform random lattice row.
pub fn random_row(states: u8, width: usize, rng: &mut SplitMix64) -> Vec<u8> {
    (0..width)
        .map(|_| rng.next_below(u64::from(states)) as u8)
        .collect()
}

/// Row with a single cell in state 1 at the center.
pub fn single_seed_row(width: usize) -> Vec<u8> {
    let mut row = alloc::vec![QUIESCENT; width];
    if width > 0 {
        row[width / 2] = 1;
    }
    row
}

fn state_counts(d: &SpacetimeDiagram, rows: &[Vec<u8>]) -> Vec<u64> {
    let mut counts = alloc::vec![0u64; usize::from(d.states)];
    for &s in rows.iter().flatten() {
        counts[usize::from(s)] += 1;
    }
    counts
}

/// Shannon entropy of the pooled cell states in rows after `cutoff`,
/// divided by `log2 k`.
pub fn site_entropy(d: &SpacetimeDiagram, cutoff: usize) -> Result<f64> {
    let rows = d.after(cutoff)?;
    let counts = state_counts(d, rows);
    let total: u64 = counts.iter().sum();
    let n = total as f64;
    let h: f64 = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * log2(p)
        })
        .sum();
    let eta = h / log2(f64::from(d.states));
    // clamp keeps the sign of -0.0 from the single-state sum
    Ok(if eta > 0.0 { eta.min(1.0) } else { 0.0 })
}

/// Fraction of non-quiescent cells in rows after `cutoff`.
pub fn activity(d: &SpacetimeDiagram, cutoff: usize) -> Result<f64> {
    let rows = d.after(cutoff)?;
    let counts = state_counts(d, rows);
    let total: u64 = counts.iter().sum();
    Ok((total - counts[usize::from(QUIESCENT)]) as f64 / total as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WolframClass {
    I,
    II,
    III,
    IV,
}

impl WolframClass {
    pub fn as_str(self) -> &'static str {
        match self {
            WolframClass::I => "I",
            WolframClass::II => "II",
            WolframClass::III => "III",
            WolframClass::IV => "IV",
        }
    }
}

impl fmt::Display for WolframClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Thresholds for [`classify_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierParams {
    pub max_period: usize,
    pub entropy_threshold: f64,
}

impl Default for ClassifierParams {
    fn default() -> Self {
        Self {
            max_period: 16,
            entropy_threshold: 0.9,
        }
    }
}

/// Heuristic Wolfram class with the default thresholds.
///
/// This is an approximation; exact classification is undecidable.
pub fn classify_heuristic(d: &SpacetimeDiagram) -> Result<WolframClass> {
    classify_with(d, ClassifierParams::default())
}

/// I: final row homogeneous. II: final row repeats an earlier row at most
/// `max_period` steps back (the update is deterministic, so the orbit is
/// periodic from there on). III: normalized entropy of the second half of
/// the run at or above `entropy_threshold`. IV: everything else.
pub fn classify_with(d: &SpacetimeDiagram, params: ClassifierParams) -> Result<WolframClass> {
    let steps = d.steps();
    if steps < 2 {
        return Err(Error::domain("steps", steps as f64, "[2, inf)"));
    }
    let last = &d.rows[steps];
    if last.iter().all(|&s| s == last[0]) {
        return Ok(WolframClass::I);
    }
    let periodic = (1..=params.max_period.min(steps)).any(|p| d.rows[steps - p] == *last);
    if periodic {
        return Ok(WolframClass::II);
    }
    if site_entropy(d, steps / 2)? >= params.entropy_threshold {
        return Ok(WolframClass::III);
    }
    Ok(WolframClass::IV)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub states: u8,
    pub radius: usize,
    pub lambda_grid: Vec<f64>,
    pub samples_per_lambda: u64,
    pub width: usize,
    pub steps: usize,
    pub transient_cutoff: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let len = table_len(self.states, self.radius)?;
        if self.lambda_grid.is_empty() {
            return Err(Error::Empty("lambda_grid"));
        }
        for &lambda in &self.lambda_grid {
            lambda_count(lambda, len)?;
        }
        if self.samples_per_lambda == 0 {
            return Err(Error::domain("samples_per_lambda", 0.0, "[1, inf)"));
        }
        let hood = 2 * self.radius + 1;
        if self.width < hood.max(3) {
            return Err(Error::WidthTooSmall {
                width: self.width,
                neighborhood: hood.max(3),
            });
        }
        if self.steps < 2 {
            return Err(Error::domain("steps", self.steps as f64, "[2, inf)"));
        }
        if self.transient_cutoff >= self.steps {
            return Err(Error::domain(
                "transient_cutoff",
                self.transient_cutoff as f64,
                "below steps",
            ));
        }
        Ok(())
    }

    /// `(λ, ordinal)` pairs in output order: λ ascending, then ordinal.
    pub fn jobs(&self) -> Vec<(f64, u64)> {
        let mut grid = self.lambda_grid.clone();
        grid.sort_by(f64::total_cmp);
        grid.dedup();
        grid.iter()
            .flat_map(|&l| (0..self.samples_per_lambda).map(move |o| (l, o)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub lambda: f64,
    pub seed: u64,
    pub site_entropy_eta: f64,
    pub capacity: f64,
    pub activity: f64,
    pub class_heuristic: WolframClass,
}

/// One sample of a sweep. Depends only on `(cfg, lambda, ordinal)`, so
/// samples may run in any order or in parallel.
///
/// The sample seed is `derive_seed(cfg.seed, ordinal)`; it drives the rule
/// table directly and, through `derive_seed(sample_seed, 1)`, the initial row.
pub fn sweep_sample(cfg: &SweepConfig, lambda: f64, ordinal: u64) -> Result<SweepRecord> {
    let seed = derive_seed(cfg.seed, ordinal);
    let rule = random_rule_with_lambda(cfg.states, cfg.radius, lambda, seed)?;
    let mut row_rng = SplitMix64::new(derive_seed(seed, 1));
    let initial = random_row(cfg.states, cfg.width, &mut row_rng);
    let diagram = evolve(&rule, &initial, cfg.steps)?;
    let eta = site_entropy(&diagram, cfg.transient_cutoff)?;
    Ok(SweepRecord {
        lambda,
        seed,
        site_entropy_eta: eta,
        capacity: emergent_capacity_or_limit(cfg.width as f64, eta)?,
        activity: activity(&diagram, cfg.transient_cutoff)?,
        class_heuristic: classify_heuristic(&diagram)?,
    })
}

/// Sequential sweep over every job in [`SweepConfig::jobs`] order.
pub fn lambda_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    cfg.jobs()
        .into_iter()
        .map(|(lambda, ordinal)| sweep_sample(cfg, lambda, ordinal))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSummary {
    pub lambda: f64,
    pub samples: usize,
    pub mean_eta: f64,
    pub mean_capacity: f64,
    pub mean_activity: f64,
}

/// Per-λ means, assuming records are grouped by λ as a sweep emits them.
pub fn summarize(records: &[SweepRecord]) -> Vec<LambdaSummary> {
    let mut out: Vec<LambdaSummary> = Vec::new();
    for group in records.chunk_by(|a, b| a.lambda == b.lambda) {
        let n = group.len() as f64;
        let mean = |f: fn(&SweepRecord) -> f64| group.iter().map(f).sum::<f64>() / n;
        out.push(LambdaSummary {
            lambda: group[0].lambda,
            samples: group.len(),
            mean_eta: mean(|r| r.site_entropy_eta),
            mean_capacity: mean(|r| r.capacity),
            mean_activity: mean(|r| r.activity),
        });
    }
    out
}

/// Empirical transition point: the upper end of the grid interval over
/// which mean η rises fastest. `None` with fewer than two grid points.
pub fn steepest_rise(summary: &[LambdaSummary]) -> Option<f64> {
    summary
        .windows(2)
        .map(|w| {
            (
                w[1].lambda,
                (w[1].mean_eta - w[0].mean_eta) / (w[1].lambda - w[0].lambda),
            )
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(lambda, _)| lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lambda_of_elementary() {
        assert_eq!(lambda_of(&elementary_rule(0).unwrap()), 0.0);
        assert_eq!(lambda_of(&elementary_rule(30).unwrap()), 0.5);
        assert_eq!(lambda_of(&elementary_rule(110).unwrap()), 0.625);
    }

    #[test]
    fn elementary_encoding() {
        assert_eq!(elementary_rule(0).unwrap().outputs(), &[0; 8]);
        assert_eq!(elementary_rule(255).unwrap().outputs(), &[1; 8]);
        let identity = elementary_rule(204).unwrap();
        for n in 0..8 {
            let center = (n >> 1) & 1;
            assert_eq!(identity.outputs()[n], center as u8);
        }
        assert!(matches!(
            elementary_rule(256),
            Err(Error::Domain { field: "rule", .. })
        ));
    }

    #[test]
    fn random_rule_counts_and_determinism() {
        let zero = random_rule_with_lambda(2, 1, 0.0, 9).unwrap();
        assert_eq!(zero, elementary_rule(0).unwrap());
        let half = random_rule_with_lambda(2, 1, 0.5, 9).unwrap();
        assert_eq!(half.outputs().iter().filter(|&&s| s != 0).count(), 4);
        assert_eq!(half, random_rule_with_lambda(2, 1, 0.5, 9).unwrap());
        let k4 = random_rule_with_lambda(4, 1, 0.75, 3).unwrap();
        assert_eq!(k4.outputs().iter().filter(|&&s| s != 0).count(), 48);
        assert!(k4.outputs().iter().all(|&s| s < 4));
        assert!(matches!(
            random_rule_with_lambda(2, 1, 0.3, 1),
            Err(Error::Domain {
                field: "lambda",
                ..
            })
        ));
    }

    #[test]
    fn identity_and_null_rules() {
        let row = vec![0, 1, 1, 0, 1, 0, 0, 1, 1];
        let d = evolve(&elementary_rule(204).unwrap(), &row, 5).unwrap();
        assert!(d.rows().iter().all(|r| *r == row));
        let d0 = evolve(&elementary_rule(0).unwrap(), &row, 1).unwrap();
        assert_eq!(d0.rows()[1], vec![0; 9]);
    }

    #[test]
    fn rule30_width3_by_hand() {
        // neighborhoods of (0,1,0) with wraparound: 001 -> 1, 010 -> 1, 100 -> 1
        let d = evolve(&elementary_rule(30).unwrap(), &[0, 1, 0], 1).unwrap();
        assert_eq!(d.rows()[1], vec![1, 1, 1]);
        // rule 30 entry 7 (111) is 0
        let d = evolve(&elementary_rule(30).unwrap(), &[1, 1, 1], 1).unwrap();
        assert_eq!(d.rows()[1], vec![0, 0, 0]);
    }

    #[test]
    fn evolve_errors() {
        let wide = random_rule_with_lambda(2, 2, 0.5, 1).unwrap();
        assert!(matches!(
            evolve(&wide, &[0, 1, 0, 1], 3),
            Err(Error::WidthTooSmall {
                width: 4,
                neighborhood: 5
            })
        ));
        assert!(evolve(&elementary_rule(30).unwrap(), &[0, 2, 0], 1).is_err());
    }

    #[test]
    fn site_entropy_examples() {
        let zeros = SpacetimeDiagram::new(2, vec![vec![0; 4]; 3]).unwrap();
        assert_eq!(site_entropy(&zeros, 0).unwrap(), 0.0);
        let half = SpacetimeDiagram::new(2, vec![vec![0, 1, 0, 1]; 3]).unwrap();
        assert_eq!(site_entropy(&half, 0).unwrap(), 1.0);
        assert_eq!(activity(&half, 0).unwrap(), 0.5);

        let mut rng = SplitMix64::new(11);
        let row = random_row(2, 64, &mut rng);
        let d = evolve(&elementary_rule(0).unwrap(), &row, 4).unwrap();
        assert_eq!(site_entropy(&d, 1).unwrap(), 0.0);
        assert!(matches!(
            site_entropy(&d, 4),
            Err(Error::Domain {
                field: "transient_cutoff",
                ..
            })
        ));
    }

    #[test]
    fn classes() {
        let mut rng = SplitMix64::new(5);
        let row = random_row(2, 32, &mut rng);
        let run = |code| evolve(&elementary_rule(code).unwrap(), &row, 40).unwrap();
        assert_eq!(classify_heuristic(&run(0)).unwrap(), WolframClass::I);
        assert_eq!(classify_heuristic(&run(204)).unwrap(), WolframClass::II);
        assert_eq!(classify_heuristic(&run(51)).unwrap(), WolframClass::II);
        let chaotic = evolve(
            &elementary_rule(30).unwrap(),
            &random_row(2, 256, &mut rng),
            300,
        )
        .unwrap();
        assert_eq!(classify_heuristic(&chaotic).unwrap(), WolframClass::III);
    }

    #[test]
    fn sweep_zero_lambda_is_dead() {
        let cfg = SweepConfig {
            states: 2,
            radius: 1,
            lambda_grid: vec![0.0],
            samples_per_lambda: 8,
            width: 32,
            steps: 20,
            transient_cutoff: 5,
            seed: 1,
        };
        let records = lambda_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 8);
        for r in &records {
            assert_eq!(r.site_entropy_eta, 0.0);
            assert_eq!(r.class_heuristic, WolframClass::I);
            assert_eq!(r.capacity, 32.0);
        }
    }

    #[test]
    fn sweep_output_order_is_lambda_then_ordinal() {
        let cfg = SweepConfig {
            states: 2,
            radius: 1,
            lambda_grid: vec![0.5, 0.0, 0.25],
            samples_per_lambda: 3,
            width: 16,
            steps: 8,
            transient_cutoff: 2,
            seed: 77,
        };
        let records = lambda_sweep(&cfg).unwrap();
        let lambdas: Vec<f64> = records.iter().map(|r| r.lambda).collect();
        assert_eq!(
            lambdas,
            vec![0.0, 0.0, 0.0, 0.25, 0.25, 0.25, 0.5, 0.5, 0.5]
        );
        assert_eq!(records[0].seed, derive_seed(77, 0));
        assert_eq!(records[2].seed, derive_seed(77, 2));
        let summary = summarize(&records);
        assert_eq!(summary.len(), 3);
        assert_eq!(summary[1].samples, 3);
        assert!(steepest_rise(&summary).is_some());
    }

    #[test]
    fn sweep_config_validation() {
        let mut cfg = SweepConfig {
            states: 2,
            radius: 1,
            lambda_grid: vec![0.1],
            samples_per_lambda: 1,
            width: 16,
            steps: 8,
            transient_cutoff: 2,
            seed: 0,
        };
        assert!(cfg.validate().is_err());
        cfg.lambda_grid = vec![0.125];
        assert!(cfg.validate().is_ok());
        cfg.transient_cutoff = 8;
        assert!(cfg.validate().is_err());
    }
}
