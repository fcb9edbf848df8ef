//! Structural complexity and representational information of Boolean
//! categories.
//!
//! A category `F` is a set of distinct points of `{0,1}^D`. Its invariance
//! along dimension `i` is the share of members that stay inside `F` when
//! coordinate `i` is flipped; `φ` is the Euclidean norm of those `D` shares.
//! Structural complexity is `ψ(F) = |F| exp(-k φ²)` with `k = 2/D` unless
//! given, and the representational information of a reduction `F → F'`
//! is the relative change `(ψ(F') - ψ(F)) / ψ(F)`.
//!
//! Members are stored as bit masks with coordinate 1 in the most significant
//! of the `D` bits, so numeric order on masks is lexicographic order on the
//! coordinate vectors.

use alloc::format;
use alloc::vec::Vec;

use crate::math::exp;
use crate::{Error, Result};

/// Dimensions beyond this do not fit the mask representation.
pub const MAX_DIMENSIONS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanCategory {
    dimensions: usize,
    members: Vec<u64>,
}

impl BooleanCategory {
    /// Builds a category from member masks. Duplicates are rejected.
    pub fn new(dimensions: usize, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if dimensions == 0 || dimensions > MAX_DIMENSIONS {
            return Err(Error::InvalidCategory(format!(
                "dimensions must be in 1..={MAX_DIMENSIONS}, got {dimensions}"
            )));
        }
        let mut members: Vec<u64> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >> dimensions != 0) {
            return Err(Error::InvalidCategory(format!(
                "member {bad:#b} has more than {dimensions} coordinates"
            )));
        }
        members.sort_unstable();
        let before = members.len();
        members.dedup();
        if members.len() != before {
            return Err(Error::InvalidCategory("duplicate members".into()));
        }
        Ok(Self {
            dimensions,
            members,
        })
    }

    /// Builds a category from coordinate vectors of 0/1 values.
    pub fn from_vectors<V: AsRef<[u8]>>(dimensions: usize, vectors: &[V]) -> Result<Self> {
        let mut masks = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            let v = v.as_ref();
            if v.len() != dimensions {
                return Err(Error::InvalidCategory(format!(
                    "member {i} has {} coordinates, expected {dimensions}",
                    v.len()
                )));
            }
            if v.iter().any(|&c| c > 1) {
                return Err(Error::InvalidCategory(format!(
                    "member {i} has a non-binary coordinate"
                )));
            }
            masks.push(encode(v));
        }
        Self::new(dimensions, masks)
    }

    pub fn empty(dimensions: usize) -> Result<Self> {
        Self::new(dimensions, [])
    }

    /// All `2^D` points.
    pub fn full(dimensions: usize) -> Result<Self> {
        if dimensions > 20 {
            return Err(Error::InvalidCategory("full category too large".into()));
        }
        Self::new(dimensions, 0..(1u64 << dimensions))
    }

    pub fn dimensions(&self) -> usize {
        self.dimensions
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, member: u64) -> bool {
        self.members.binary_search(&member).is_ok()
    }

    pub fn is_subset_of(&self, other: &BooleanCategory) -> bool {
        self.dimensions == other.dimensions && self.members.iter().all(|&m| other.contains(m))
    }

    pub fn without(&self, member: u64) -> BooleanCategory {
        BooleanCategory {
            dimensions: self.dimensions,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| m != member)
                .collect(),
        }
    }

    /// Coordinate vector of a member mask.
    pub fn vector(&self, member: u64) -> Vec<u8> {
        decode(member, self.dimensions)
    }

    /// Mask that flips coordinate `i` (0-based).
    fn toggle_mask(&self, i: usize) -> u64 {
        1u64 << (self.dimensions - 1 - i)
    }
}

/// Encodes a 0/1 vector with the first coordinate most significant.
pub fn encode(vector: &[u8]) -> u64 {
    vector
        .iter()
        .fold(0u64, |acc, &c| (acc << 1) | u64::from(c & 1))
}

pub fn decode(mask: u64, dimensions: usize) -> Vec<u8> {
    (0..dimensions)
        .map(|i| ((mask >> (dimensions - 1 - i)) & 1) as u8)
        .collect()
}

/// Per dimension, the number of members whose toggle stays in the category.
pub fn invariance_counts(f: &BooleanCategory) -> Vec<u64> {
    (0..f.dimensions)
        .map(|i| {
            let t = f.toggle_mask(i);
            f.members.iter().filter(|&&m| f.contains(m ^ t)).count() as u64
        })
        .collect()
}

pub fn partial_invariances(f: &BooleanCategory) -> Result<Vec<f64>> {
    if f.is_empty() {
        return Err(Error::EmptyCategory);
    }
    let n = f.len() as f64;
    Ok(invariance_counts(f)
        .into_iter()
        .map(|c| c as f64 / n)
        .collect())
}

/// `φ²` from integer counts. Exactly invariant under permutations of the
/// dimensions.
fn phi_squared(f: &BooleanCategory) -> f64 {
    if f.is_empty() {
        return 0.0;
    }
    let sum_sq: u128 = invariance_counts(f)
        .into_iter()
        .map(|c| u128::from(c) * u128::from(c))
        .sum();
    let n = f.len() as f64;
    sum_sq as f64 / (n * n)
}

/// `2 / D`.
pub fn default_scaling(dimensions: usize) -> f64 {
    2.0 / dimensions as f64
}

fn resolve_scaling(k: Option<f64>, dimensions: usize) -> Result<f64> {
    let k = k.unwrap_or_else(|| default_scaling(dimensions));
    if k > 0.0 && k.is_finite() {
        Ok(k)
    } else {
        Err(Error::domain("k", k, "(0, inf)"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuralAssessment {
    pub partial_invariances: Vec<f64>,
    pub phi: f64,
    pub k_scaling: f64,
    pub psi: f64,
}

/// `ψ(F)` alone. `ψ(∅) = 0`.
pub fn psi(f: &BooleanCategory, k: Option<f64>) -> Result<f64> {
    let k = resolve_scaling(k, f.dimensions)?;
    Ok(f.len() as f64 * exp(-k * phi_squared(f)))
}

pub fn structural_complexity(f: &BooleanCategory, k: Option<f64>) -> Result<StructuralAssessment> {
    let k_scaling = resolve_scaling(k, f.dimensions)?;
    let partial_invariances = if f.is_empty() {
        alloc::vec![0.0; f.dimensions]
    } else {
        partial_invariances(f)?
    };
    let phi_sq = phi_squared(f);
    Ok(StructuralAssessment {
        partial_invariances,
        phi: libm::sqrt(phi_sq),
        k_scaling,
        psi: f.len() as f64 * exp(-k_scaling * phi_sq),
    })
}

/// `h_s(F → F') = (ψ(F') - ψ(F)) / ψ(F)` for `F' ⊆ F`, with `k` fixed by
/// the parent's dimension when not given.
pub fn representational_information(
    f: &BooleanCategory,
    f_prime: &BooleanCategory,
    k: Option<f64>,
) -> Result<f64> {
    if !f_prime.is_subset_of(f) {
        return Err(Error::NotASubset);
    }
    let k = Some(resolve_scaling(k, f.dimensions)?);
    let base = psi(f, k)?;
    if !(base > 0.0) {
        return Err(Error::ZeroBaseComplexity);
    }
    Ok((psi(f_prime, k)? - base) / base)
}

/// Representational information of removing `member` from `f`.
pub fn element_information(f: &BooleanCategory, member: u64, k: Option<f64>) -> Result<f64> {
    if !f.contains(member) {
        return Err(Error::NotAMember);
    }
    if f.len() < 2 {
        return Err(Error::TooSmall {
            min: 2,
            found: f.len(),
        });
    }
    representational_information(f, &f.without(member), k)
}

/// Members by ascending element information (most valuable first), ties in
/// lexicographic member order.
pub fn rank_elements(f: &BooleanCategory, k: Option<f64>) -> Result<Vec<(u64, f64)>> {
    if f.len() < 2 {
        return Err(Error::TooSmall {
            min: 2,
            found: f.len(),
        });
    }
    let mut ranked = f
        .members
        .iter()
        .map(|&m| Ok((m, element_information(f, m, k)?)))
        .collect::<Result<Vec<_>>>()?;
    // members are already lexicographic and the sort is stable
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(ranked)
}

/// Extremes of `h_s` over every pair `F' ⊆ F ⊆ {0,1}^D` with `F` non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetSurvey {
    pub dimensions: usize,
    pub pairs: u64,
    pub max_h_s: f64,
    pub argmax: (BooleanCategory, BooleanCategory),
    pub min_h_s: f64,
    /// Pairs where removing members raised ψ.
    pub increasing_pairs: u64,
}

/// Exhaustive enumeration, feasible for `D <= 4` (`3^16` pairs at `D = 4`).
pub fn survey_subsets(dimensions: usize, k: Option<f64>) -> Result<SubsetSurvey> {
    if dimensions == 0 || dimensions > 4 {
        return Err(Error::domain("dimensions", dimensions as f64, "[1, 4]"));
    }
    let k = Some(resolve_scaling(k, dimensions)?);
    let points = 1usize << dimensions;
    let category_of = |set: u32| {
        BooleanCategory::new(
            dimensions,
            (0..points as u64).filter(|&p| set >> p & 1 == 1),
        )
    };
    let psis = (0u32..(1u32 << points))
        .map(|set| psi(&category_of(set)?, k))
        .collect::<Result<Vec<f64>>>()?;

    let mut pairs = 0u64;
    let mut max_h_s = f64::NEG_INFINITY;
    let mut argmax = (0u32, 0u32);
    let mut min_h_s = f64::INFINITY;
    let mut increasing_pairs = 0u64;
    for set in 1u32..(1u32 << points) {
        let base = psis[set as usize];
        // walk every subset of `set`, including the empty one
        let mut sub = set;
        loop {
            let h = (psis[sub as usize] - base) / base;
            pairs += 1;
            if h > max_h_s {
                max_h_s = h;
                argmax = (set, sub);
            }
            min_h_s = min_h_s.min(h);
            if psis[sub as usize] > base {
                increasing_pairs += 1;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & set;
        }
    }
    Ok(SubsetSurvey {
        dimensions,
        pairs,
        max_h_s,
        argmax: (category_of(argmax.0)?, category_of(argmax.1)?),
        min_h_s,
        increasing_pairs,
    })
}
