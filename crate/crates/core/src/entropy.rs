//! Discrete entropy and information measures.
//!
//! All functions use the convention `0 · log 0 = 0`. Distributions are
//! validated on construction and never renormalized: a vector whose sum is
//! more than `1e-9` away from one is rejected.
//!
//! Sign conventions: the Gibbs form is returned as `-k Σ p ln p` and mutual
//! information as `Σ p(x,y) log[p(x,y) / p(x)p(y)]`, so both are nonnegative.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::math::{ln, log_base, powf};
use crate::{Error, Result};

/// Allowed deviation of a distribution's total mass from one.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Logarithm base plus the arbitrary multiplicative constant `K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyUnits {
    base: f64,
    scale: f64,
}

impl EntropyUnits {
    pub const BITS: EntropyUnits = EntropyUnits {
        base: 2.0,
        scale: 1.0,
    };
    pub const NATS: EntropyUnits = EntropyUnits {
        base: core::f64::consts::E,
        scale: 1.0,
    };

    pub fn new(base: f64, scale: f64) -> Result<Self> {
        if !(base > 1.0) || !base.is_finite() {
            return Err(Error::domain("base", base, "(1, inf)"));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::domain("scale", scale, "(0, inf)"));
        }
        Ok(Self { base, scale })
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    #[inline]
    fn log(&self, x: f64) -> f64 {
        log_base(x, self.base)
    }
}

impl Default for EntropyUnits {
    fn default() -> Self {
        Self::BITS
    }
}

/// A validated probability mass function over `len()` outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probabilities: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        check_masses(&probabilities)?;
        Ok(Self { probabilities })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty("distribution"));
        }
        Self::new(alloc::vec![1.0 / n as f64; n])
    }

    /// Point mass on `index` out of `n` outcomes.
    pub fn degenerate(n: usize, index: usize) -> Result<Self> {
        if index >= n {
            return Err(Error::LengthMismatch {
                left: index + 1,
                right: n,
            });
        }
        let mut p = alloc::vec![0.0; n];
        p[index] = 1.0;
        Self::new(p)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    /// Number of outcomes with nonzero probability.
    pub fn support_size(&self) -> usize {
        self.probabilities.iter().filter(|&&p| p > 0.0).count()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probabilities
    }
}

fn check_masses(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty("distribution"));
    }
    for (index, &value) in values.iter().enumerate() {
        if value.is_nan() || value < 0.0 {
            return Err(Error::NegativeProbability { index, value });
        }
        if value > 1.0 {
            return Err(Error::ProbabilityAboveOne { index, value });
        }
    }
    let sum: f64 = values.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::SumOutOfTolerance { sum });
    }
    Ok(())
}

/// Validates `raw` as a probability vector without renormalizing it.
pub fn validate_distribution(raw: &[f64]) -> Result<ProbabilityDistribution> {
    ProbabilityDistribution::new(raw.to_vec())
}

/// A validated joint mass function `p(x, y)`, rows indexed by `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    rows: usize,
    cols: usize,
    cells: Vec<f64>,
}

impl JointDistribution {
    pub fn new(matrix: &[Vec<f64>]) -> Result<Self> {
        let rows = matrix.len();
        if rows == 0 {
            return Err(Error::Empty("joint distribution"));
        }
        let cols = matrix[0].len();
        let mut cells = Vec::with_capacity(rows * cols);
        for (row, values) in matrix.iter().enumerate() {
            if values.len() != cols {
                return Err(Error::RaggedJoint {
                    row,
                    expected: cols,
                    found: values.len(),
                });
            }
            cells.extend_from_slice(values);
        }
        Self::from_flat(rows, cols, cells)
    }

    /// Row-major constructor.
    pub fn from_flat(rows: usize, cols: usize, cells: Vec<f64>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::LengthMismatch {
                left: cells.len(),
                right: rows * cols,
            });
        }
        check_masses(&cells)?;
        Ok(Self { rows, cols, cells })
    }

    /// Outer product `p(x) q(y)`.
    pub fn independent(px: &ProbabilityDistribution, py: &ProbabilityDistribution) -> Self {
        let mut cells = Vec::with_capacity(px.len() * py.len());
        for &a in px.as_slice() {
            for &b in py.as_slice() {
                cells.push(a * b);
            }
        }
        Self {
            rows: px.len(),
            cols: py.len(),
            cells,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.cells[x * self.cols + y]
    }

    pub fn cells(&self) -> &[f64] {
        &self.cells
    }

    /// Row sums, `p(x)`.
    pub fn marginal_x(&self) -> ProbabilityDistribution {
        let probabilities = self
            .cells
            .chunks_exact(self.cols.max(1))
            .map(|row| row.iter().sum())
            .collect();
        ProbabilityDistribution { probabilities }
    }

    /// Column sums, `p(y)`.
    pub fn marginal_y(&self) -> ProbabilityDistribution {
        let mut probabilities = alloc::vec![0.0; self.cols];
        for row in self.cells.chunks_exact(self.cols.max(1)) {
            for (acc, &p) in probabilities.iter_mut().zip(row) {
                *acc += p;
            }
        }
        ProbabilityDistribution { probabilities }
    }

    pub fn transpose(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for y in 0..self.cols {
            for x in 0..self.rows {
                cells.push(self.get(x, y));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            cells,
        }
    }
}

/// `N` symbols drawn from an alphabet of `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MessageSpec {
    pub alphabet_size: u64,
    pub length: u64,
}

impl MessageSpec {
    pub fn new(alphabet_size: u64, length: u64) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::domain("alphabet_size", 0.0, "[1, inf)"));
        }
        Ok(Self {
            alphabet_size,
            length,
        })
    }
}

/// Number of equally likely arrangements `W` with a Boltzmann-style constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MicrostateCount {
    pub arrangements: f64,
    pub k: f64,
}

impl MicrostateCount {
    pub fn new(arrangements: f64, k: f64) -> Result<Self> {
        if !(arrangements >= 1.0) {
            return Err(Error::domain("W", arrangements, "[1, inf)"));
        }
        if !(k > 0.0) {
            return Err(Error::domain("k", k, "(0, inf)"));
        }
        Ok(Self { arrangements, k })
    }
}

// Entropies are nonnegative; this folds rounding residue and -0.0 into +0.0.
#[inline]
fn nonneg(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        0.0
    }
}

/// `k ln W`.
pub fn boltzmann_entropy(m: MicrostateCount) -> Result<f64> {
    if !(m.arrangements >= 1.0) {
        return Err(Error::domain("W", m.arrangements, "[1, inf)"));
    }
    Ok(nonneg(m.k * ln(m.arrangements)))
}

/// `-K Σ p log p`.
pub fn shannon_entropy(d: &ProbabilityDistribution, u: EntropyUnits) -> f64 {
    let sum: f64 = d
        .as_slice()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * u.log(p))
        .sum();
    nonneg(-u.scale * sum)
}

/// Thermodynamic form `-k Σ p ln p`.
pub fn gibbs_entropy(d: &ProbabilityDistribution, k: f64) -> f64 {
    let sum: f64 = d
        .as_slice()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * ln(p))
        .sum();
    nonneg(-k * sum)
}

/// Maximum entropy over the full outcome set.
pub fn max_entropy(n: usize, u: EntropyUnits) -> f64 {
    u.scale * u.log(n as f64)
}

/// Distance below maximum entropy, `K log n - H(d)`.
pub fn negentropy(d: &ProbabilityDistribution, u: EntropyUnits) -> f64 {
    nonneg(max_entropy(d.len(), u) - shannon_entropy(d, u))
}

/// `K N log S`.
pub fn hartley_information(m: MessageSpec, u: EntropyUnits) -> f64 {
    if m.length == 0 {
        return 0.0;
    }
    nonneg(u.scale * m.length as f64 * u.log(m.alphabet_size as f64))
}

/// Information in an `m`-symbol message, `m · H(d)`.
pub fn message_information(d: &ProbabilityDistribution, m: u64, u: EntropyUnits) -> f64 {
    m as f64 * shannon_entropy(d, u)
}

pub fn joint_entropy(j: &JointDistribution, u: EntropyUnits) -> f64 {
    let sum: f64 = j
        .cells()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * u.log(p))
        .sum();
    nonneg(-u.scale * sum)
}

/// `H(X | Y)` with `X` on rows and `Y` on columns.
pub fn conditional_entropy(j: &JointDistribution, u: EntropyUnits) -> f64 {
    let py = j.marginal_y();
    let mut sum = 0.0;
    for x in 0..j.rows() {
        for (y, &p_y) in py.as_slice().iter().enumerate() {
            let p = j.get(x, y);
            if p > 0.0 && p_y > 0.0 {
                sum += p * u.log(p / p_y);
            }
        }
    }
    nonneg(-u.scale * sum)
}

pub fn mutual_information(j: &JointDistribution, u: EntropyUnits) -> f64 {
    let px = j.marginal_x();
    let py = j.marginal_y();
    let mut sum = 0.0;
    for (x, &p_x) in px.as_slice().iter().enumerate() {
        for (y, &p_y) in py.as_slice().iter().enumerate() {
            let p = j.get(x, y);
            if p > 0.0 {
                sum += p * u.log(p / (p_x * p_y));
            }
        }
    }
    nonneg(u.scale * sum)
}

/// Kullback–Leibler divergence `D(p || q)`; `+inf` when `p` is not
/// absolutely continuous with respect to `q`.
pub fn relative_entropy(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    u: EntropyUnits,
) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let mut sum = 0.0;
    for (&a, &b) in p.as_slice().iter().zip(q.as_slice()) {
        if a == 0.0 {
            continue;
        }
        if b == 0.0 {
            return Ok(f64::INFINITY);
        }
        sum += a * u.log(a / b);
    }
    Ok(nonneg(u.scale * sum))
}

/// Rényi entropy of order `alpha`. Order 0 is the Hartley entropy of the
/// support and order 1 is the Shannon limit.
pub fn renyi_entropy(d: &ProbabilityDistribution, alpha: f64, u: EntropyUnits) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::domain("alpha", alpha, "[0, inf)"));
    }
    if alpha == 1.0 {
        return Ok(shannon_entropy(d, u));
    }
    if alpha == 0.0 {
        return Ok(nonneg(u.scale * u.log(d.support_size() as f64)));
    }
    let power_sum: f64 = d
        .as_slice()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| powf(p, alpha))
        .sum();
    Ok(nonneg(u.scale * u.log(power_sum) / (1.0 - alpha)))
}

/// Shannon entropy in bits divided by `log2 n`, in `[0, 1]`.
pub fn normalized_entropy(d: &ProbabilityDistribution) -> Result<f64> {
    if d.len() < 2 {
        return Err(Error::domain("n", d.len() as f64, "[2, inf)"));
    }
    let eta = shannon_entropy(d, EntropyUnits::BITS) / max_entropy(d.len(), EntropyUnits::BITS);
    Ok(eta.min(1.0))
}

/// Relative symbol frequencies, ordered by first appearance.
pub fn empirical_distribution<T: Ord + Clone>(message: &[T]) -> Result<ProbabilityDistribution> {
    let (_, counts) = first_appearance_counts(message);
    if counts.is_empty() {
        return Err(Error::Empty("message"));
    }
    let n = message.len() as f64;
    ProbabilityDistribution::new(counts.into_iter().map(|c| c as f64 / n).collect())
}

/// Distinct symbols in order of first appearance, with their counts.
pub fn first_appearance_counts<T: Ord + Clone>(message: &[T]) -> (Vec<T>, Vec<u64>) {
    let mut index: BTreeMap<T, usize> = BTreeMap::new();
    let mut symbols = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    for s in message {
        let slot = *index.entry(s.clone()).or_insert_with(|| {
            symbols.push(s.clone());
            counts.push(0);
            counts.len() - 1
        });
        counts[slot] += 1;
    }
    (symbols, counts)
}
