//! The six-branch witness states and the hypothetical copying machines.
//!
//! Alice holds a qutrit; Bob holds four qubits, each in `|0⟩` or
//! `|ψ⟩ = α|0⟩ + β|1⟩`, plus a blank qubit. The initial state is
//!
//! ```text
//! |1⟩(ZPZP + PZPZ) + |2⟩(ZPPZ − PZZP) + |3⟩(ZZPP − PPZZ)   ⊗ |b⟩
//! ```
//!
//! with `Z ≡ |0⟩`, `P ≡ |ψ⟩`. The cloner is only defined on `{|0⟩, |ψ⟩}`,
//! so it acts on each branch word separately: the fourth symbol is copied
//! into the blank. The deleter undoes that on doubled words. Working on
//! words keeps both machines exact; a linear extension to the whole Bob
//! space would be a different map.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kron_vec, CMatrix, DensityMatrix, PureState};
use crate::schmidt::SchmidtVector;

/// Alice's dimension in the witness construction.
pub const ALICE_DIM: usize = 3;

/// The input qubit `|ψ⟩ = α|0⟩ + β|1⟩` with real `α = ⟨0|ψ⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitSpec {
    alpha: f64,
    beta: f64,
}

impl QubitSpec {
    /// Requires `0 < α < 1`; the endpoints give `DegenerateOverlap`.
    pub fn new(alpha: f64) -> Result<Self> {
        let q = Self::with_endpoints(alpha)?;
        if alpha == 0.0 || alpha == 1.0 {
            return Err(Error::DegenerateOverlap { alpha });
        }
        Ok(q)
    }

    /// Accepts the closed interval `[0, 1]`. Only limit evaluations and
    /// oracles should use endpoint values.
    pub fn with_endpoints(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange { alpha });
        }
        Ok(QubitSpec {
            alpha,
            beta: libm::sqrt(1.0 - alpha * alpha),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha == 0.0 || self.alpha == 1.0
    }

    /// Amplitudes of `|ψ⟩` in the computational basis.
    pub fn psi(&self) -> [Complex64; 2] {
        [Complex64::new(self.alpha, 0.0), Complex64::new(self.beta, 0.0)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// `|0⟩`
    Zero,
    /// `|ψ⟩`
    Psi,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => 'Z',
            Symbol::Psi => 'P',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'Z' | '0' => Some(Symbol::Zero),
            'P' => Some(Symbol::Psi),
            _ => None,
        }
    }

    fn amplitudes(self, q: &QubitSpec) -> [Complex64; 2] {
        match self {
            Symbol::Zero => [Complex64::new(1.0, 0.0), Complex64::zero()],
            Symbol::Psi => q.psi(),
        }
    }
}

/// Parses a word such as `"ZPZP"`.
pub fn word(s: &str) -> Option<Vec<Symbol>> {
    s.chars().map(Symbol::from_char).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One signed product word attached to an Alice level (1, 2 or 3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchTerm {
    pub alice_level: u8,
    pub word: Vec<Symbol>,
    pub sign: Sign,
}

impl fmt::Display for BranchTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}|{}>", self.alice_level)?;
        self.word.iter().try_for_each(|x| write!(f, "{}", x.as_char()))
    }
}

/// Signed branch terms over `{Z, P}` together with the blank flag.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicState {
    terms: Vec<BranchTerm>,
    has_blank: bool,
    qubit: QubitSpec,
}

const INITIAL_TERMS: [(u8, Sign, &str); 6] = [
    (1, Sign::Plus, "ZPZP"),
    (1, Sign::Plus, "PZPZ"),
    (2, Sign::Plus, "ZPPZ"),
    (2, Sign::Minus, "PZZP"),
    (3, Sign::Plus, "ZZPP"),
    (3, Sign::Minus, "PPZZ"),
];

impl SymbolicState {
    pub fn terms(&self) -> &[BranchTerm] {
        &self.terms
    }

    pub fn has_blank(&self) -> bool {
        self.has_blank
    }

    pub fn qubit(&self) -> &QubitSpec {
        &self.qubit
    }

    pub fn word_len(&self) -> usize {
        self.terms.first().map_or(0, |t| t.word.len())
    }

    /// Number of Bob qubits once the blank (if present) is counted.
    pub fn bob_qubits(&self) -> usize {
        self.word_len() + usize::from(self.has_blank)
    }

    /// The same words with a different input qubit.
    pub fn with_qubit(&self, qubit: QubitSpec) -> Self {
        SymbolicState {
            qubit,
            ..self.clone()
        }
    }

    /// `⟨B_k|B_j⟩` for the per-level Bob branch vectors, as an exact
    /// polynomial in the overlap `⟨0|ψ⟩ = alpha`.
    ///
    /// Two words overlap in `alpha^m` where `m` counts positions whose
    /// symbols differ; the blank contributes a factor of one. Works for any
    /// numeric type, so rational `alpha` gives exact results.
    pub fn branch_overlaps<T: Num + Clone>(&self, alpha: T) -> [[T; 3]; 3] {
        let mut g: [[T; 3]; 3] = core::array::from_fn(|_| core::array::from_fn(|_| T::zero()));
        for tj in &self.terms {
            for tk in &self.terms {
                let mismatches = tj.word.iter().zip(&tk.word).filter(|(x, y)| x != y).count();
                let overlap = num_traits::pow(alpha.clone(), mismatches);
                let (j, k) = (tj.alice_level as usize - 1, tk.alice_level as usize - 1);
                let cell = &mut g[j][k];
                *cell = match tj.sign.times(tk.sign) {
                    Sign::Plus => cell.clone() + overlap,
                    Sign::Minus => cell.clone() - overlap,
                };
            }
        }
        g
    }

    /// Squared norm of the unnormalized superposition: the trace of
    /// [`SymbolicState::branch_overlaps`].
    pub fn normalizer<T: Num + Clone>(&self, alpha: T) -> T {
        let g = self.branch_overlaps(alpha);
        g[0][0].clone() + g[1][1].clone() + g[2][2].clone()
    }

    /// Alice's reduced state as exact entries `⟨B_k|B_j⟩ / N`.
    pub fn reduced_density_exact<T: Num + Clone>(&self, alpha: T) -> [[T; 3]; 3] {
        let g = self.branch_overlaps(alpha);
        let n = g[0][0].clone() + g[1][1].clone() + g[2][2].clone();
        g.map(|row| row.map(|x| x / n.clone()))
    }
}

/// Builds the initial witness state with a blank qubit on Bob's side.
pub fn build_initial(q: QubitSpec) -> Result<SymbolicState> {
    if q.is_degenerate() {
        return Err(Error::DegenerateOverlap { alpha: q.alpha });
    }
    Ok(build_initial_ungated(q))
}

/// [`build_initial`] without the endpoint check, for limit oracles.
pub fn build_initial_ungated(q: QubitSpec) -> SymbolicState {
    let terms = INITIAL_TERMS
        .iter()
        .map(|&(alice_level, sign, w)| BranchTerm {
            alice_level,
            word: word(w).expect("static word"),
            sign,
        })
        .collect();
    SymbolicState {
        terms,
        has_blank: true,
        qubit: q,
    }
}

/// Applies `|0⟩|b⟩ → |0⟩|0⟩`, `|ψ⟩|b⟩ → |ψ⟩|ψ⟩` to Bob's fourth qubit and
/// the blank, branch by branch.
pub fn apply_cloner(s: &SymbolicState) -> Result<SymbolicState> {
    if !s.has_blank {
        return Err(Error::MachineInputMissing);
    }
    if s.word_len() != 4 {
        return Err(Error::ShapeError {
            expected: 4,
            found: s.word_len(),
        });
    }
    let terms = s
        .terms
        .iter()
        .map(|t| {
            let mut word = t.word.clone();
            word.push(t.word[3]);
            BranchTerm {
                word,
                ..t.clone()
            }
        })
        .collect();
    Ok(SymbolicState {
        terms,
        has_blank: false,
        qubit: s.qubit,
    })
}

/// Applies `|0⟩|0⟩ → |0⟩|b⟩`, `|ψ⟩|ψ⟩ → |ψ⟩|b⟩` to Bob's last two qubits.
///
/// Every branch must end in a doubled symbol; the machine is undefined
/// anywhere else.
pub fn apply_deleter(s: &SymbolicState) -> Result<SymbolicState> {
    if s.has_blank {
        return Err(Error::MachineInputMissing);
    }
    let mut terms = Vec::with_capacity(s.terms.len());
    for (i, t) in s.terms.iter().enumerate() {
        match t.word.as_slice() {
            [.., x, y] if x == y => {
                let mut word = t.word.clone();
                word.pop();
                terms.push(BranchTerm {
                    word,
                    ..t.clone()
                });
            }
            _ => return Err(Error::MachineDomainViolation { term: i }),
        }
    }
    Ok(SymbolicState {
        terms,
        has_blank: true,
        qubit: s.qubit,
    })
}

/// Amplitudes of the blank qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlankChoice {
    amps: [Complex64; 2],
}

impl BlankChoice {
    /// Renormalizes within the normalization gate, rejects otherwise.
    pub fn new(b0: Complex64, b1: Complex64) -> Result<Self> {
        let st = PureState::new(1, 2, alloc::vec![b0, b1])?;
        Ok(BlankChoice {
            amps: [st.amps()[0], st.amps()[1]],
        })
    }

    pub fn zero() -> Self {
        BlankChoice {
            amps: [Complex64::new(1.0, 0.0), Complex64::zero()],
        }
    }

    pub fn one() -> Self {
        BlankChoice {
            amps: [Complex64::zero(), Complex64::new(1.0, 0.0)],
        }
    }

    pub fn plus() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        BlankChoice {
            amps: [Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
        }
    }

    pub fn amps(&self) -> [Complex64; 2] {
        self.amps
    }
}

impl Default for BlankChoice {
    fn default() -> Self {
        BlankChoice::zero()
    }
}

/// A numeric state together with its squared norm before normalization.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub state: PureState,
    pub norm_sq: f64,
}

/// Expands the branch words into a normalized `3 × 2^n` state vector.
///
/// Bob's qubits are ordered as in the word (first symbol most significant),
/// with the blank appended last when present.
pub fn expand(s: &SymbolicState, blank: &BlankChoice) -> Result<Expansion> {
    let dim_b = 1usize << s.bob_qubits();
    let mut amps = alloc::vec![Complex64::zero(); ALICE_DIM * dim_b];
    for t in &s.terms {
        let mut v = alloc::vec![Complex64::new(t.sign.value(), 0.0)];
        for sym in &t.word {
            v = kron_vec(&v, &sym.amplitudes(&s.qubit));
        }
        if s.has_blank {
            v = kron_vec(&v, &blank.amps);
        }
        let row = (t.alice_level as usize - 1) * dim_b;
        for (dst, x) in amps[row..row + dim_b].iter_mut().zip(v) {
            *dst += x;
        }
    }
    let (state, norm_sq) = PureState::from_unnormalized(ALICE_DIM, dim_b, amps)?;
    Ok(Expansion { state, norm_sq })
}

/// Alice's reduced state from symbolic overlaps, without expanding.
pub fn gram_reduced_density(s: &SymbolicState) -> Result<DensityMatrix> {
    let rho = s.reduced_density_exact(s.qubit.alpha);
    DensityMatrix::new(CMatrix::from_fn(3, 3, |j, k| {
        Complex64::new(rho[j][k], 0.0)
    }))
}

/// Closed-form Schmidt spectra of the initial and cloned states, in the
/// unsorted order `(λ₁, λ₂, λ₃)` of the formulas:
///
/// ```text
/// initial: ((1+α⁴), (1−α⁴), (1−α⁴)) / (3−α⁴)
/// cloned:  ((1+α⁵), (1+α²)(1−α³), (1−α²)(1+α³)) / (3−α⁵)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormSpectra {
    pub initial: [f64; 3],
    pub cloned: [f64; 3],
}

impl ClosedFormSpectra {
    /// Evaluates the formulas on the closed interval, endpoints included.
    pub fn evaluate(alpha: f64) -> Result<Self> {
        let q = QubitSpec::with_endpoints(alpha)?;
        let (initial, cloned) = closed_form_terms(q.alpha);
        Ok(ClosedFormSpectra { initial, cloned })
    }

    pub fn initial_sorted(&self) -> SchmidtVector {
        sorted(self.initial)
    }

    pub fn cloned_sorted(&self) -> SchmidtVector {
        sorted(self.cloned)
    }
}

fn sorted(v: [f64; 3]) -> SchmidtVector {
    // Each triple sums to one exactly in real arithmetic; rounding stays far
    // below the simplex tolerance on [0, 1].
    SchmidtVector::new(v.to_vec()).expect("closed-form spectrum is a probability vector")
}

/// The closed-form formulas over any numeric type.
pub fn closed_form_terms<T: Num + Clone>(alpha: T) -> ([T; 3], [T; 3]) {
    let one = T::one;
    let a2 = alpha.clone() * alpha.clone();
    let a3 = a2.clone() * alpha.clone();
    let a4 = a2.clone() * a2.clone();
    let a5 = a4.clone() * alpha;
    let three = one() + one() + one();
    let ni = three.clone() - a4.clone();
    let nf = three - a5.clone();
    let li1 = (one() + a4.clone()) / ni.clone();
    let li2 = (one() - a4) / ni;
    let lf1 = (one() + a5) / nf.clone();
    let lf2 = (one() + a2.clone()) * (one() - a3.clone()) / nf.clone();
    let lf3 = (one() - a2) * (one() + a3) / nf;
    ([li1, li2.clone(), li2], [lf1, lf2, lf3])
}

/// Descending closed-form Schmidt vector of the initial state.
pub fn closed_form_initial_spectrum(q: QubitSpec) -> Result<SchmidtVector> {
    if q.is_degenerate() {
        return Err(Error::DegenerateOverlap { alpha: q.alpha });
    }
    Ok(ClosedFormSpectra::evaluate(q.alpha)?.initial_sorted())
}

/// Descending closed-form Schmidt vector of the state after cloning.
pub fn closed_form_final_spectrum(q: QubitSpec) -> Result<SchmidtVector> {
    if q.is_degenerate() {
        return Err(Error::DegenerateOverlap { alpha: q.alpha });
    }
    Ok(ClosedFormSpectra::evaluate(q.alpha)?.cloned_sorted())
}
