//! Schmidt vectors and Nielsen's majorization criterion.
//!
//! A pure state `Ψ` converts to `Φ` with certainty under LOCC iff
//! `λ_Ψ ≺ λ_Φ`, that is, every partial sum of the descending Schmidt
//! vector of `Ψ` is bounded by the matching partial sum for `Φ`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{partial_trace_b, PureState};
use crate::tol;

/// Descending probability vector of squared Schmidt coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtVector {
    probs: Vec<f64>,
}

impl SchmidtVector {
    /// Validates and sorts a probability vector.
    ///
    /// Entries in `[-1e-12, 0)` are clamped to zero; the sum must be one to
    /// within `1e-10`. The result is sorted descending.
    pub fn new(mut probs: Vec<f64>) -> Result<Self> {
        if probs.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = probs.iter().sum();
        if probs.is_empty()
            || probs.iter().any(|&p| p < -tol::ZERO_CLAMP)
            || (sum - 1.0).abs() > tol::ITERATIVE
        {
            return Err(Error::InvalidSimplex { sum });
        }
        for p in &mut probs {
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        probs.sort_by(|a, b| b.total_cmp(a));
        Ok(SchmidtVector { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Entry `i`, reading zero past the end.
    pub fn get(&self, i: usize) -> f64 {
        self.probs.get(i).copied().unwrap_or(0.0)
    }

    /// Partial sums over the first `len` entries, zero-padded.
    pub fn partial_sums(&self, len: usize) -> Vec<f64> {
        let mut acc = 0.0;
        (0..len)
            .map(|i| {
                acc += self.get(i);
                acc
            })
            .collect()
    }

    /// Largest entrywise difference after zero-padding both vectors.
    pub fn max_abs_diff(&self, other: &SchmidtVector) -> f64 {
        let n = self.len().max(other.len());
        (0..n)
            .map(|i| (self.get(i) - other.get(i)).abs())
            .fold(0.0, f64::max)
    }
}

/// Descending Schmidt coefficients (squared) of a bipartite pure state,
/// truncated to `min(dim_a, dim_b)` entries.
pub fn schmidt_vector(state: &PureState) -> Result<SchmidtVector> {
    let rho = partial_trace_b(state)?;
    let mut probs = rho.eigenvalues();
    probs.resize(state.dim_a().min(state.dim_b()), 0.0);
    SchmidtVector::new(probs)
}

/// Entropy of entanglement in bits; probabilities below `1e-12` count as zero.
pub fn entanglement_entropy(sv: &SchmidtVector) -> f64 {
    let h: f64 = sv
        .probs
        .iter()
        .filter(|&&p| p > tol::ZERO_CLAMP)
        .map(|&p| -p * libm::log2(p))
        .sum();
    // -0.0 for a point mass
    h.max(0.0)
}

/// `a ≺ b`: every partial sum of `a` is at most the matching partial sum
/// of `b`, up to `1e-10`. The shorter vector is zero-padded.
pub fn majorizes(a: &SchmidtVector, b: &SchmidtVector) -> bool {
    let n = a.len().max(b.len());
    a.partial_sums(n)
        .iter()
        .zip(b.partial_sums(n))
        .all(|(sa, sb)| *sa <= sb + tol::SCHMIDT)
}

/// Outcome of Nielsen's criterion applied in both directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvertibilityVerdict {
    /// Mutual majorization: interconvertible.
    Equivalent,
    /// `a → b` is possible, `b → a` is not.
    ForwardOnly,
    /// `b → a` is possible, `a → b` is not.
    BackwardOnly,
    /// Neither direction is possible.
    Incomparable,
}

impl ConvertibilityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ConvertibilityVerdict::Equivalent => "Equivalent",
            ConvertibilityVerdict::ForwardOnly => "ForwardOnly",
            ConvertibilityVerdict::BackwardOnly => "BackwardOnly",
            ConvertibilityVerdict::Incomparable => "Incomparable",
        }
    }

    pub fn from_directions(forward: bool, backward: bool) -> Self {
        match (forward, backward) {
            (true, true) => ConvertibilityVerdict::Equivalent,
            (true, false) => ConvertibilityVerdict::ForwardOnly,
            (false, true) => ConvertibilityVerdict::BackwardOnly,
            (false, false) => ConvertibilityVerdict::Incomparable,
        }
    }

    pub fn forward_possible(self) -> bool {
        matches!(
            self,
            ConvertibilityVerdict::Equivalent | ConvertibilityVerdict::ForwardOnly
        )
    }

    pub fn backward_possible(self) -> bool {
        matches!(
            self,
            ConvertibilityVerdict::Equivalent | ConvertibilityVerdict::BackwardOnly
        )
    }

    /// The verdict for the swapped pair.
    pub fn reversed(self) -> Self {
        Self::from_directions(self.backward_possible(), self.forward_possible())
    }
}

impl fmt::Display for ConvertibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConvertibilityVerdict {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "Equivalent" => Ok(ConvertibilityVerdict::Equivalent),
            "ForwardOnly" => Ok(ConvertibilityVerdict::ForwardOnly),
            "BackwardOnly" => Ok(ConvertibilityVerdict::BackwardOnly),
            "Incomparable" => Ok(ConvertibilityVerdict::Incomparable),
            _ => Err(()),
        }
    }
}

/// Classifies the pair `(a, b)`; "forward" means `a → b`.
pub fn classify(a: &SchmidtVector, b: &SchmidtVector) -> ConvertibilityVerdict {
    ConvertibilityVerdict::from_directions(majorizes(a, b), majorizes(b, a))
}

/// Closed-form incomparability test for two three-level Schmidt vectors:
/// incomparable iff `a₁ > b₁ ∧ a₃ > b₃` or `b₁ > a₁ ∧ b₃ > a₃`.
///
/// Both vectors must have three strictly decreasing, strictly positive
/// entries; gaps at or below the Schmidt tolerance count as ties. Inputs
/// outside that domain give `FastPathInapplicable` and should go through
/// [`classify`] instead.
pub fn incomparable_fast_path_d3(a: &SchmidtVector, b: &SchmidtVector) -> Result<bool> {
    let strict = |v: &SchmidtVector| {
        v.len() == 3
            && v.get(0) - v.get(1) > tol::SCHMIDT
            && v.get(1) - v.get(2) > tol::SCHMIDT
            && v.get(2) > tol::SCHMIDT
    };
    if !strict(a) || !strict(b) {
        return Err(Error::FastPathInapplicable);
    }
    let gt = |x: f64, y: f64| x - y > tol::SCHMIDT;
    let (a1, a3, b1, b3) = (a.get(0), a.get(2), b.get(0), b.get(2));
    Ok((gt(a1, b1) && gt(a3, b3)) || (gt(b1, a1) && gt(b3, a3)))
}
