//! Classification of the (initial, cloned) witness pair across the overlap
//! `α = ⟨0|ψ⟩`.
//!
//! Each point is classified from the closed-form spectra and cross-checked
//! against the numerically expanded states; a disagreement is fatal. The
//! comparability threshold is located on the verdict itself, not on any
//! single inequality between spectra.

use alloc::vec::Vec;

use crate::construction::{
    apply_cloner, build_initial, expand, BlankChoice, ClosedFormSpectra, QubitSpec,
};
use crate::error::{Error, Result};
use crate::schmidt::{
    classify, entanglement_entropy, majorizes, schmidt_vector, ConvertibilityVerdict,
    SchmidtVector,
};

/// Number of points in the preliminary scan of [`find_threshold`].
pub const THRESHOLD_SCAN_POINTS: usize = 64;

/// Individual inequalities between the closed-form spectra at one `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InequalityChecks {
    /// `λᶠ₁ < λⁱ₁`
    pub lf1_below_li1: bool,
    /// `λᶠ₂ < λⁱ₁`
    pub lf2_below_li1: bool,
    /// `λᶠ₃ < λⁱ₂`, i.e. the smallest final coefficient is below the smallest initial one.
    pub lf3_below_li2: bool,
}

/// Classification of the witness pair at one `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub alpha: f64,
    /// Formula-order coefficients, as reported in the `li*` / `lf*` columns.
    pub closed_form: ClosedFormSpectra,
    pub initial_spectrum: SchmidtVector,
    pub final_spectrum: SchmidtVector,
    /// Forward means initial → final, the direction the cloner would implement.
    pub verdict: ConvertibilityVerdict,
    pub entropy_initial: f64,
    pub entropy_final: f64,
    /// True iff the pair is incomparable, so the cloning argument applies.
    pub paper_claim_upheld: bool,
    pub forward_blocked: bool,
    /// The deleter's direction, final → initial.
    pub backward_blocked: bool,
}

impl PairReport {
    pub fn inequality_checks(&self) -> InequalityChecks {
        let [li1, li2, _] = self.closed_form.initial;
        let [lf1, lf2, lf3] = self.closed_form.cloned;
        InequalityChecks {
            lf1_below_li1: lf1 < li1,
            lf2_below_li1: lf2 < li1,
            lf3_below_li2: lf3 < li2,
        }
    }
}

/// Spectra of the expanded initial and cloned states.
pub fn numeric_spectra(q: QubitSpec) -> Result<(SchmidtVector, SchmidtVector)> {
    let initial = build_initial(q)?;
    let cloned = apply_cloner(&initial)?;
    let blank = BlankChoice::default();
    Ok((
        schmidt_vector(&expand(&initial, &blank)?.state)?,
        schmidt_vector(&expand(&cloned, &blank)?.state)?,
    ))
}

/// Classifies the witness pair at `alpha`.
pub fn classify_construction(alpha: f64) -> Result<PairReport> {
    let q = QubitSpec::new(alpha)?;
    let closed_form = ClosedFormSpectra::evaluate(alpha)?;
    let initial_spectrum = closed_form.initial_sorted();
    let final_spectrum = closed_form.cloned_sorted();
    let verdict = classify(&initial_spectrum, &final_spectrum);

    let (num_initial, num_final) = numeric_spectra(q)?;
    if classify(&num_initial, &num_final) != verdict {
        return Err(Error::InternalInconsistency { alpha });
    }

    Ok(PairReport {
        alpha,
        closed_form,
        entropy_initial: entanglement_entropy(&initial_spectrum),
        entropy_final: entanglement_entropy(&final_spectrum),
        paper_claim_upheld: verdict == ConvertibilityVerdict::Incomparable,
        forward_blocked: !majorizes(&initial_spectrum, &final_spectrum),
        backward_blocked: !majorizes(&final_spectrum, &initial_spectrum),
        initial_spectrum,
        final_spectrum,
        verdict,
    })
}

/// `steps` uniformly spaced points on `[alpha_min, alpha_max]`, endpoints included.
pub fn grid(alpha_min: f64, alpha_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(alpha_min.is_finite() && alpha_max.is_finite()) {
        return Err(Error::RangeError("non-finite bound"));
    }
    if !(0.0 < alpha_min && alpha_min < alpha_max && alpha_max < 1.0) {
        return Err(Error::RangeError("need 0 < alpha_min < alpha_max < 1"));
    }
    if steps < 2 {
        return Err(Error::RangeError("need at least 2 steps"));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i + 1 == steps {
                alpha_max
            } else {
                alpha_min + (alpha_max - alpha_min) * (i as f64 / last)
            }
        })
        .collect())
}

/// Classifies the witness pair on a uniform grid, in increasing `α`.
pub fn sweep(alpha_min: f64, alpha_max: f64, steps: usize) -> Result<Vec<PairReport>> {
    grid(alpha_min, alpha_max, steps)?
        .into_iter()
        .map(classify_construction)
        .collect()
}

/// Location of the verdict change between `lo` and `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    /// Midpoint of the final bracket.
    pub alpha_star: f64,
    pub bracket: (f64, f64),
    pub verdict_below: ConvertibilityVerdict,
    pub verdict_above: ConvertibilityVerdict,
    /// Verdict changes seen on the preliminary scan; always 1 on success.
    pub grid_sign_changes: usize,
}

/// Bisects the verdict boundary on `[lo, hi]` down to a bracket of width `tol`.
///
/// A 64-point scan must first see exactly one verdict change; anything else
/// is `NonMonotoneBoundary`.
pub fn find_threshold(lo: f64, hi: f64, tol: f64) -> Result<ThresholdResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::RangeError("tolerance must be positive"));
    }
    let scan = grid(lo, hi, THRESHOLD_SCAN_POINTS)?;
    let verdicts = scan
        .iter()
        .map(|&a| classify_construction(a).map(|r| r.verdict))
        .collect::<Result<Vec<_>>>()?;
    let changes: Vec<usize> = (1..verdicts.len())
        .filter(|&i| verdicts[i] != verdicts[i - 1])
        .collect();
    if changes.len() != 1 {
        return Err(Error::NonMonotoneBoundary {
            changes: changes.len(),
        });
    }

    let i = changes[0];
    let (below, above) = (verdicts[i - 1], verdicts[i]);
    let (mut a, mut b) = (scan[i - 1], scan[i]);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let v = classify_construction(mid)?.verdict;
        if v == below {
            a = mid;
        } else if v == above {
            b = mid;
        } else {
            return Err(Error::NonMonotoneBoundary { changes: 2 });
        }
    }

    Ok(ThresholdResult {
        alpha_star: 0.5 * (a + b),
        bracket: (a, b),
        verdict_below: below,
        verdict_above: above,
        grid_sign_changes: 1,
    })
}

/// True iff the cloned state cannot be turned back into the initial one
/// with certainty, i.e. the deleter would have to beat LOCC.
pub fn no_deleting_check(alpha: f64) -> Result<bool> {
    let q = QubitSpec::new(alpha)?;
    let cf = ClosedFormSpectra::evaluate(q.alpha())?;
    Ok(!majorizes(&cf.cloned_sorted(), &cf.initial_sorted()))
}
