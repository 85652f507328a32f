//! Orbit analysis for the restriction of a parabolically induced
//! representation to the symplectic subgroup.
//!
//! The double cosets of the symplectic group on a partial flag variety of
//! `k`-dimensional subspaces are indexed by the radical dimension `r` of the
//! stabilized subspace, with `k - r` even. Each orbit contributes a layer
//! whose invariant functionals are controlled by a Levi
//! `GL_r x Sp_{(k-r)/2} x Sp_{(2n-k-r)/2}` acting on Jacquet-module terms of
//! the two inducing factors. A layer term can only carry a functional when
//! the two `GL_r` pieces match as a contragredient pair after a fixed
//! one-step twist, and both symplectic pieces admit invariant functionals;
//! checking these necessary conditions orbit by orbit yields a sound
//! vanishing criterion and an upper bound on the space of functionals.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::jacquet::{jacquet_ss, JacquetTerm};
use crate::line::CuspidalLine;
use crate::product::FormalProduct;

/// Numeric invariants of one orbit: ambient rank `n`, block size `k`,
/// radical dimension `r`, the three Levi ranks, and the two unipotent block
/// dimensions `a = k - r`, `b = 2n - (k + r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitDatum {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub levi: (u32, u32, u32),
    pub unipotent_dims: (u32, u32),
}

impl OrbitDatum {
    pub fn new(n: u32, k: u32, r: u32) -> Result<Self> {
        if k > 2 * n || r > k || (k - r) % 2 != 0 || k + r > 2 * n {
            return Err(Error::InvalidParameter(format!(
                "no orbit with n={n}, k={k}, r={r}"
            )));
        }
        let a = k - r;
        let b = 2 * n - (k + r);
        Ok(OrbitDatum { n, k, r, levi: (r, a / 2, b / 2), unipotent_dims: (a, b) })
    }
}

impl fmt::Display for OrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={}: levi=(GL{}, Sp{}, Sp{}), a={}, b={}",
            self.r, self.levi.0, self.levi.1, self.levi.2, self.unipotent_dims.0, self.unipotent_dims.1
        )
    }
}

/// One datum per admissible radical dimension, open orbit first
/// (descending `r`). The closed orbit `r = 0` exists exactly when `k` is
/// even.
pub fn orbit_parameters(n: u32, k: u32) -> Vec<OrbitDatum> {
    let mut out = Vec::new();
    if k > 2 * n {
        return out;
    }
    let r_max = k.min(2 * n - k);
    let mut r = r_max as i64;
    // keep k - r even
    if (k as i64 - r) % 2 != 0 {
        r -= 1;
    }
    while r >= 0 {
        out.push(OrbitDatum::new(n, k, r as u32).expect("admissible by construction"));
        r -= 2;
    }
    out
}

/// The two determinant exponents on the `GL_r` Levi factor: the modular
/// character exponent `r + a + b + 1` of the stabilizer, and the effective
/// half-density quotient exponent `-(n - r + 1)`.
pub fn modular_exponents(d: &OrbitDatum) -> (i64, i64) {
    let (a, b) = d.unipotent_dims;
    (
        d.r as i64 + a as i64 + b as i64 + 1,
        -((d.n as i64) - (d.r as i64) + 1),
    )
}

/// Modular-character exponents of a block upper-triangular parabolic: the
/// exponent of `|det g_i|` is the total size of the later blocks minus the
/// total size of the earlier ones.
pub fn block_modular_exponents(blocks: &[u32]) -> Vec<i64> {
    let total: i64 = blocks.iter().map(|&b| b as i64).sum();
    let mut before: i64 = 0;
    let mut out = Vec::with_capacity(blocks.len());
    for &b in blocks {
        let after = total - before - b as i64;
        out.push(after - before);
        before += b as i64;
    }
    out
}

/// Tri-valued distinction answer used by the recursive oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

/// A recursive symplectic-distinction oracle for Jacquet-module pieces.
///
/// `No` must be sound (a certified vanishing); `Yes` and `Unknown` both let a
/// term survive. Implementations must be reentrant.
pub trait SpOracle {
    fn assess(&self, piece: &FormalProduct) -> TriState;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintStatus {
    Yes,
    No,
    NotApplicable,
}

/// The central-support matching condition on the `GL_r` factor: the right
/// piece must have the support of the left piece lowered by one step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentConstraint {
    /// Support of the left piece after the one-step twist, flattened with
    /// multiplicity.
    pub twisted_left: Vec<(CuspidalLine, i32)>,
    /// Support of the contragredient-acting right piece.
    pub right: Vec<(CuspidalLine, i32)>,
    pub satisfied: ConstraintStatus,
}

impl fmt::Display for ExponentConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn supp(points: &[(CuspidalLine, i32)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{{")?;
            for (i, (line, x2)) in points.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                if x2 % 2 == 0 {
                    write!(f, "{}", x2 / 2)?;
                } else {
                    write!(f, "{}/2", x2)?;
                }
                if !line.is_principal() {
                    write!(f, "@{}", line)?;
                }
            }
            write!(f, "}}")
        }
        match self.satisfied {
            ConstraintStatus::NotApplicable => write!(f, "no GL factor"),
            _ => {
                supp(&self.twisted_left, f)?;
                write!(f, " =?= ")?;
                supp(&self.right, f)
            }
        }
    }
}

fn flatten_support(supp: &BTreeMap<(CuspidalLine, i32), u32>) -> Vec<(CuspidalLine, i32)> {
    let mut out = Vec::new();
    for ((line, x2), &mult) in supp {
        for _ in 0..mult {
            out.push((line.clone(), *x2));
        }
    }
    out
}

/// Why one layer term admits no functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailCause {
    SupportMismatch(ExponentConstraint),
    SpVanishes { side: SpSide, piece: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpSide {
    FirstFactor,
    SecondFactor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermFailure {
    pub term: String,
    pub cause: FailCause,
}

/// A term that passed every necessary condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivingTerm {
    pub first: JacquetTerm,
    pub second: JacquetTerm,
    pub constraint: ExponentConstraint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitStatus {
    /// Every term fails; the recorded failures replay the reasons.
    Vanishes(Vec<TermFailure>),
    MaybeNonzero { witness: Box<SurvivingTerm>, term_count: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitVerdict {
    pub orbit: OrbitDatum,
    pub status: OrbitStatus,
}

/// Evaluate one orbit layer for the induced product `sigma1 x sigma2`.
pub fn orbit_term(
    sigma1: &FormalProduct,
    sigma2: &FormalProduct,
    datum: &OrbitDatum,
    oracle: &dyn SpOracle,
) -> Result<OrbitVerdict> {
    if sigma1.dimension() != datum.k {
        return Err(Error::DimensionMismatch { expected: datum.k, got: sigma1.dimension() });
    }
    if sigma2.dimension() != 2 * datum.n - datum.k {
        return Err(Error::DimensionMismatch {
            expected: 2 * datum.n - datum.k,
            got: sigma2.dimension(),
        });
    }
    let r = datum.r;
    let first_terms = jacquet_ss(sigma1, r);
    let second_terms = jacquet_ss(sigma2, 2 * datum.n - datum.k - r);
    let mut failures = Vec::new();
    let mut witness: Option<SurvivingTerm> = None;
    let mut term_count = 0u32;
    for t1 in &first_terms {
        for t2 in &second_terms {
            let constraint = if r == 0 {
                ExponentConstraint {
                    twisted_left: Vec::new(),
                    right: Vec::new(),
                    satisfied: ConstraintStatus::NotApplicable,
                }
            } else {
                let twisted: BTreeMap<(CuspidalLine, i32), u32> = t1
                    .left
                    .support2()
                    .into_iter()
                    .map(|((line, x2), m)| ((line, x2 - 2), m))
                    .collect();
                let right = t2.right.support2();
                let ok = twisted == right;
                ExponentConstraint {
                    twisted_left: flatten_support(&twisted),
                    right: flatten_support(&right),
                    satisfied: if ok { ConstraintStatus::Yes } else { ConstraintStatus::No },
                }
            };
            if constraint.satisfied == ConstraintStatus::No {
                failures.push(TermFailure {
                    term: format!("{} | {}", t1, t2),
                    cause: FailCause::SupportMismatch(constraint),
                });
                continue;
            }
            if oracle.assess(&t1.right) == TriState::No {
                failures.push(TermFailure {
                    term: format!("{} | {}", t1, t2),
                    cause: FailCause::SpVanishes {
                        side: SpSide::FirstFactor,
                        piece: t1.right.to_string(),
                    },
                });
                continue;
            }
            if oracle.assess(&t2.left) == TriState::No {
                failures.push(TermFailure {
                    term: format!("{} | {}", t1, t2),
                    cause: FailCause::SpVanishes {
                        side: SpSide::SecondFactor,
                        piece: t2.left.to_string(),
                    },
                });
                continue;
            }
            term_count += 1;
            if witness.is_none() {
                witness = Some(SurvivingTerm { first: t1.clone(), second: t2.clone(), constraint });
            }
        }
    }
    let status = match witness {
        Some(w) => OrbitStatus::MaybeNonzero { witness: Box::new(w), term_count },
        None => OrbitStatus::Vanishes(failures),
    };
    Ok(OrbitVerdict { orbit: *datum, status })
}

/// Outcome of the full orbit filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MackeyOutcome {
    /// Every orbit vanishes: the induced product carries no invariant
    /// functional, hence neither does any of its quotients.
    NotDistinguished { verdicts: Vec<OrbitVerdict> },
    /// Some layers survive; their term count bounds the functional space.
    Inconclusive { bound: u32, verdicts: Vec<OrbitVerdict> },
}

impl MackeyOutcome {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, MackeyOutcome::NotDistinguished { .. })
    }

    pub fn verdicts(&self) -> &[OrbitVerdict] {
        match self {
            MackeyOutcome::NotDistinguished { verdicts } => verdicts,
            MackeyOutcome::Inconclusive { verdicts, .. } => verdicts,
        }
    }
}

/// Run every orbit of `sigma1 x sigma2`, open to closed.
pub fn mackey_upper_bound(
    sigma1: &FormalProduct,
    sigma2: &FormalProduct,
    oracle: &dyn SpOracle,
) -> Result<MackeyOutcome> {
    let k = sigma1.dimension();
    let total = k + sigma2.dimension();
    if total % 2 != 0 {
        return Err(Error::OddDimension { dim: total });
    }
    let n = total / 2;
    let mut verdicts = Vec::new();
    let mut bound = 0u32;
    for datum in orbit_parameters(n, k) {
        let v = orbit_term(sigma1, sigma2, &datum, oracle)?;
        if let OrbitStatus::MaybeNonzero { term_count, .. } = v.status {
            bound += term_count;
        }
        verdicts.push(v);
    }
    if bound == 0 {
        Ok(MackeyOutcome::NotDistinguished { verdicts })
    } else {
        Ok(MackeyOutcome::Inconclusive { bound, verdicts })
    }
}
