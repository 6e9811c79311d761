//! Seeded samplers and exact-rational oracles shared by the integration tests.
//!
//! Nothing here calls into the majorization code under test; the rational
//! routines recompute partial sums, closed forms and the threshold root
//! independently.

#![allow(dead_code)]

use locc_core::{Complex64, ConvertibilityVerdict, PureState};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().expect("finite rational")
}

/// The 99-point grid 0.01, 0.02, ..., 0.99.
pub fn alpha_grid() -> Vec<f64> {
    (1..=99).map(|k| k as f64 / 100.0).collect()
}

/// Same grid, exactly.
pub fn alpha_grid_exact() -> Vec<Q> {
    (1..=99).map(|k| q(k, 100)).collect()
}

/// Descending probability vector from sorted i.i.d. exponentials.
pub fn random_simplex(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..d)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln())
        .collect();
    let s: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= s);
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Descending rational probability vector with integer weights.
pub fn rational_simplex(rng: &mut ChaCha8Rng, d: usize) -> Vec<Q> {
    let w: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=1_000_000)).collect();
    let total: i64 = w.iter().sum();
    let mut v: Vec<Q> = w.iter().map(|&x| q(x, total)).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

fn padded_partial_sums_f64(v: &[f64], n: usize) -> Vec<f64> {
    let mut acc = 0.0;
    (0..n)
        .map(|i| {
            acc += v.get(i).copied().unwrap_or(0.0);
            acc
        })
        .collect()
}

/// Smallest |Σa − Σb| over the partial sums `k < n`, the last one being 1 = 1.
pub fn min_partial_sum_gap(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    let (sa, sb) = (padded_partial_sums_f64(a, n), padded_partial_sums_f64(b, n));
    (0..n.saturating_sub(1))
        .map(|k| (sa[k] - sb[k]).abs())
        .fold(f64::INFINITY, f64::min)
}

fn padded_partial_sums(v: &[Q], n: usize) -> Vec<Q> {
    let mut acc = Q::zero();
    (0..n)
        .map(|i| {
            if let Some(x) = v.get(i) {
                acc += x;
            }
            acc.clone()
        })
        .collect()
}

/// Exact `a ≺ b` on descending rational vectors.
pub fn exact_majorizes(a: &[Q], b: &[Q]) -> bool {
    let n = a.len().max(b.len());
    padded_partial_sums(a, n)
        .iter()
        .zip(padded_partial_sums(b, n))
        .all(|(x, y)| *x <= y)
}

pub fn exact_classify(a: &[Q], b: &[Q]) -> ConvertibilityVerdict {
    ConvertibilityVerdict::from_directions(exact_majorizes(a, b), exact_majorizes(b, a))
}

/// Smallest non-zero |Σa − Σb| over all partial sums, or `None` if all are equal.
pub fn exact_min_nonzero_gap(a: &[Q], b: &[Q]) -> Option<Q> {
    let n = a.len().max(b.len());
    padded_partial_sums(a, n)
        .iter()
        .zip(padded_partial_sums(b, n))
        .map(|(x, y)| (x - y).abs())
        .filter(|g| !g.is_zero())
        .min()
}

/// Uniform amplitudes in the unit box, normalized.
pub fn random_state(rng: &mut ChaCha8Rng, da: usize, db: usize) -> PureState {
    let amps = (0..da * db)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    PureState::from_unnormalized(da, db, amps).unwrap().0
}

/// Closed-form initial coefficients `(λⁱ₁, λⁱ₂, λⁱ₂)`, exactly.
pub fn exact_initial(alpha: &Q) -> [Q; 3] {
    let one = Q::one();
    let three = q(3, 1);
    let a4 = pow(alpha, 4);
    let n = &three - &a4;
    let l1 = (&one + &a4) / &n;
    let l2 = (&one - &a4) / &n;
    [l1, l2.clone(), l2]
}

/// Closed-form final coefficients `(λᶠ₁, λᶠ₂, λᶠ₃)`, exactly.
pub fn exact_final(alpha: &Q) -> [Q; 3] {
    let one = Q::one();
    let three = q(3, 1);
    let (a2, a3, a5) = (pow(alpha, 2), pow(alpha, 3), pow(alpha, 5));
    let n = &three - &a5;
    [
        (&one + &a5) / &n,
        (&one + &a2) * (&one - &a3) / &n,
        (&one - &a2) * (&one + &a3) / &n,
    ]
}

/// Initial reduced density matrix in closed form: diagonal
/// `2(1+α⁴), 2(1−α⁴), 2(1−α⁴)` over `N = 2(3−α⁴)`.
pub fn exact_rho_initial(alpha: &Q) -> [[Q; 3]; 3] {
    let two = q(2, 1);
    let a4 = pow(alpha, 4);
    let n = &two * (q(3, 1) - &a4);
    let mut m: [[Q; 3]; 3] = Default::default();
    m[0][0] = &two * (Q::one() + &a4) / &n;
    m[1][1] = &two * (Q::one() - &a4) / &n;
    m[2][2] = m[1][1].clone();
    m
}

/// Final reduced density matrix in closed form: diagonal
/// `2(1+α⁵), 2(1−α⁵), 2(1−α⁵)` with `−2α²(1−α)` coupling levels 2 and 3,
/// over `N = 2(3−α⁵)`.
pub fn exact_rho_final(alpha: &Q) -> [[Q; 3]; 3] {
    let two = q(2, 1);
    let a5 = pow(alpha, 5);
    let n = &two * (q(3, 1) - &a5);
    let mut m: [[Q; 3]; 3] = Default::default();
    m[0][0] = &two * (Q::one() + &a5) / &n;
    m[1][1] = &two * (Q::one() - &a5) / &n;
    m[2][2] = m[1][1].clone();
    let off = -&two * pow(alpha, 2) * (Q::one() - alpha) / &n;
    m[1][2] = off.clone();
    m[2][1] = off;
    m
}

pub fn pow(x: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

/// `sign(λᶠ₂ − λⁱ₁)` numerator: `(1+α²)(1−α³)(3−α⁴) − (1+α⁴)(3−α⁵)`.
/// Both denominators are positive on (0, 1).
pub fn threshold_polynomial(alpha: &Q) -> Q {
    let one = Q::one();
    let three = q(3, 1);
    (&one + pow(alpha, 2)) * (&one - pow(alpha, 3)) * (&three - pow(alpha, 4))
        - (&one + pow(alpha, 4)) * (&three - pow(alpha, 5))
}

/// Root of [`threshold_polynomial`] in `[1/2, 3/5]` by exact bisection,
/// to a bracket narrower than `2^-64`.
pub fn exact_threshold_root() -> Q {
    let (mut lo, mut hi) = (q(1, 2), q(3, 5));
    assert!(threshold_polynomial(&lo).is_positive());
    assert!(threshold_polynomial(&hi).is_negative());
    for _ in 0..64 {
        let mid = (&lo + &hi) / q(2, 1);
        if threshold_polynomial(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / q(2, 1)
}
