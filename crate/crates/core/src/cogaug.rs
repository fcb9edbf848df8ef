//! Cognitive-augmentation accounting over a ledger of transformation steps.
//!
//! Each step moves an information stock from `ψ_in` to `ψ_out` and is done
//! either by a human or by a cog (artificial cognitive entity).
//!
//! * work `W = |ψ_out - ψ_in| + ψ_lost`
//! * gain `G = (ψ_out - ψ_in) / ψ_in`
//! * per-agent sums `W_H, W_C, G_H, G_C` and ensemble sums `W*, G*`
//! * augmentation factor `A⁺ = (cog) / (human)`, 0 for a human working alone
//!   and unbounded when only the cog contributes
//! * efficiency `G/W`, power `x/t`, density `x/E`
//!
//! DIKW and Bloom tags are carried through unchanged and never enter a
//! computation.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::grit::{psi, BooleanCategory};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Agent {
    Human,
    Cog,
}

impl Agent {
    pub fn as_str(self) -> &'static str {
        match self {
            Agent::Human => "human",
            Agent::Cog => "cog",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dikw {
    Data,
    Information,
    Knowledge,
    Wisdom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bloom {
    Remember,
    Understand,
    Apply,
    Analyze,
    Evaluate,
    Create,
}

/// Where a snapshot's structural complexity comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Stock {
    Psi(f64),
    /// Assessed with the default scaling `k = 2/D`.
    Category(BooleanCategory),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StockSnapshot {
    pub stock: Stock,
    pub dikw: Option<Dikw>,
    pub bloom: Option<Bloom>,
}

impl StockSnapshot {
    pub fn psi(value: f64) -> Self {
        Self {
            stock: Stock::Psi(value),
            dikw: None,
            bloom: None,
        }
    }

    pub fn category(category: BooleanCategory) -> Self {
        Self {
            stock: Stock::Category(category),
            dikw: None,
            bloom: None,
        }
    }

    pub fn resolve(&self) -> Result<f64> {
        match &self.stock {
            Stock::Psi(v) if v.is_finite() && *v >= 0.0 => Ok(*v),
            Stock::Psi(_) => Err(Error::UnresolvablePsi),
            Stock::Category(c) => psi(c, None),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub id: String,
    pub agent: Agent,
    pub stock_in: StockSnapshot,
    pub stock_out: StockSnapshot,
    pub psi_lost: f64,
    pub time_s: Option<f64>,
    pub energy_j: Option<f64>,
}

impl Step {
    pub fn new(
        id: impl Into<String>,
        agent: Agent,
        stock_in: StockSnapshot,
        stock_out: StockSnapshot,
    ) -> Self {
        Self {
            id: id.into(),
            agent,
            stock_in,
            stock_out,
            psi_lost: 0.0,
            time_s: None,
            energy_j: None,
        }
    }

    pub fn with_psi_lost(mut self, psi_lost: f64) -> Self {
        self.psi_lost = psi_lost;
        self
    }

    pub fn with_time(mut self, time_s: f64) -> Self {
        self.time_s = Some(time_s);
        self
    }

    pub fn with_energy(mut self, energy_j: f64) -> Self {
        self.energy_j = Some(energy_j);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ledger {
    steps: Vec<Step>,
}

impl Ledger {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for s in &steps {
            if !seen.insert(s.id.as_str()) {
                return Err(Error::DuplicateStepId(s.id.clone()));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

/// `|ψ_out - ψ_in| + ψ_lost`.
pub fn step_work(s: &Step) -> Result<f64> {
    if !(s.psi_lost >= 0.0) || !s.psi_lost.is_finite() {
        return Err(Error::domain("psi_lost", s.psi_lost, "[0, inf)"));
    }
    let (a, b) = (s.stock_in.resolve()?, s.stock_out.resolve()?);
    Ok((b - a).abs() + s.psi_lost)
}

/// `(ψ_out - ψ_in) / ψ_in`.
pub fn step_gain(s: &Step) -> Result<f64> {
    let (a, b) = (s.stock_in.resolve()?, s.stock_out.resolve()?);
    if !(a > 0.0) {
        return Err(Error::ZeroBaseComplexity);
    }
    Ok((b - a) / a)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AgentTotals {
    pub work_human: f64,
    pub gain_human: f64,
    pub work_cog: f64,
    pub gain_cog: f64,
}

pub fn agent_totals(l: &Ledger) -> Result<AgentTotals> {
    let mut t = AgentTotals::default();
    for s in &l.steps {
        let w = step_work(s).map_err(|e| Error::in_step(&s.id, e))?;
        let g = step_gain(s).map_err(|e| Error::in_step(&s.id, e))?;
        match s.agent {
            Agent::Human => {
                t.work_human += w;
                t.gain_human += g;
            }
            Agent::Cog => {
                t.work_cog += w;
                t.gain_cog += g;
            }
        }
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EnsembleTotals {
    pub work: f64,
    pub gain: f64,
}

pub fn ensemble_totals(t: &AgentTotals) -> EnsembleTotals {
    EnsembleTotals {
        work: t.work_human + t.work_cog,
        gain: t.gain_human + t.gain_cog,
    }
}

/// A ratio that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Ratio {
    Finite(f64),
    Unbounded,
}

impl Ratio {
    pub fn as_f64(self) -> f64 {
        match self {
            Ratio::Finite(x) => x,
            Ratio::Unbounded => f64::INFINITY,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(x) => write!(f, "{x}"),
            Ratio::Unbounded => f.write_str("inf"),
        }
    }
}

/// `cog / human` with `0` when the cog contributed nothing (including
/// `0/0`) and [`Ratio::Unbounded`] when only the cog contributed.
pub fn augmentation_ratio(cog: f64, human: f64) -> Ratio {
    if cog == 0.0 {
        Ratio::Finite(0.0)
    } else if human == 0.0 {
        Ratio::Unbounded
    } else {
        Ratio::Finite(cog / human)
    }
}

/// `(A⁺_W, A⁺_G)`.
pub fn augmentation_factor(t: &AgentTotals) -> (Ratio, Ratio) {
    (
        augmentation_ratio(t.work_cog, t.work_human),
        augmentation_ratio(t.gain_cog, t.gain_human),
    )
}

/// Cognitive efficiency `G / W`.
pub fn efficiency(gain: f64, work: f64) -> Result<f64> {
    if work == 0.0 {
        return Err(Error::ZeroWork);
    }
    Ok(gain / work)
}

/// Cognitive power `x / t`, for gain or work.
pub fn power(x: f64, time_s: f64) -> Result<f64> {
    if !(time_s > 0.0) {
        return Err(Error::NonpositiveTime(time_s));
    }
    Ok(x / time_s)
}

/// Cognitive density `x / E`, for gain or work.
pub fn density(x: f64, energy_j: f64) -> Result<f64> {
    if !(energy_j > 0.0) {
        return Err(Error::NonpositiveEnergy(energy_j));
    }
    Ok(x / energy_j)
}

/// Metrics derived from time and energy. Each is `None` when its input
/// is missing, or for efficiency when no work was done.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RateMetrics {
    pub efficiency: Option<f64>,
    pub power_gain: Option<f64>,
    pub power_work: Option<f64>,
    pub density_gain: Option<f64>,
    pub density_work: Option<f64>,
}

impl RateMetrics {
    fn compute(gain: f64, work: f64, time_s: Option<f64>, energy_j: Option<f64>) -> Result<Self> {
        let efficiency = if work > 0.0 {
            Some(efficiency(gain, work)?)
        } else {
            None
        };
        let (power_gain, power_work) = match time_s {
            Some(t) => (Some(power(gain, t)?), Some(power(work, t)?)),
            None => (None, None),
        };
        let (density_gain, density_work) = match energy_j {
            Some(e) => (Some(density(gain, e)?), Some(density(work, e)?)),
            None => (None, None),
        };
        Ok(Self {
            efficiency,
            power_gain,
            power_work,
            density_gain,
            density_work,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepReport {
    pub id: String,
    pub agent: Agent,
    pub psi_in: f64,
    pub psi_out: f64,
    pub work: f64,
    pub gain: f64,
    pub rates: RateMetrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LedgerReport {
    pub steps: Vec<StepReport>,
    pub totals: AgentTotals,
    pub ensemble: EnsembleTotals,
    pub a_plus_work: Ratio,
    pub a_plus_gain: Ratio,
    /// Sum of step times, present only when every step has one.
    pub total_time_s: Option<f64>,
    /// Sum of step energies, present only when every step has one.
    pub total_energy_j: Option<f64>,
    pub rates: RateMetrics,
}

fn evaluate_step(s: &Step) -> Result<StepReport> {
    let work = step_work(s)?;
    let gain = step_gain(s)?;
    Ok(StepReport {
        id: s.id.clone(),
        agent: s.agent,
        psi_in: s.stock_in.resolve()?,
        psi_out: s.stock_out.resolve()?,
        work,
        gain,
        rates: RateMetrics::compute(gain, work, s.time_s, s.energy_j)?,
    })
}

/// Every per-step and aggregate metric. All failing steps are reported
/// together, each tagged with its id.
pub fn evaluate_ledger(l: &Ledger) -> Result<LedgerReport> {
    let mut steps = Vec::with_capacity(l.steps.len());
    let mut failures = Vec::new();
    for s in &l.steps {
        match evaluate_step(s) {
            Ok(r) => steps.push(r),
            Err(e) => failures.push(Error::in_step(&s.id, e)),
        }
    }
    match failures.len() {
        0 => {}
        1 => return Err(failures.pop().unwrap()),
        _ => return Err(Error::Steps(failures)),
    }

    let mut totals = AgentTotals::default();
    for r in &steps {
        match r.agent {
            Agent::Human => {
                totals.work_human += r.work;
                totals.gain_human += r.gain;
            }
            Agent::Cog => {
                totals.work_cog += r.work;
                totals.gain_cog += r.gain;
            }
        }
    }
    let ensemble = ensemble_totals(&totals);
    let (a_plus_work, a_plus_gain) = augmentation_factor(&totals);
    let total_time_s = l
        .steps
        .iter()
        .map(|s| s.time_s)
        .sum::<Option<f64>>()
        .filter(|_| !l.steps.is_empty());
    let total_energy_j = l
        .steps
        .iter()
        .map(|s| s.energy_j)
        .sum::<Option<f64>>()
        .filter(|_| !l.steps.is_empty());
    let rates = RateMetrics::compute(ensemble.gain, ensemble.work, total_time_s, total_energy_j)?;
    Ok(LedgerReport {
        steps,
        totals,
        ensemble,
        a_plus_work,
        a_plus_gain,
        total_time_s,
        total_energy_j,
        rates,
    })
}
