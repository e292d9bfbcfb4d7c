//! Topological Lefschetz pencil algebra.
//!
//! A pencil is summarized by its fiber genus `k`, base-point count `A`
//! (the self-intersection of the hyperplane class), singular-point count
//! `B`, and the ambient `(chi, sigma)`. The canonical class enters only
//! through the integer pairing `K.h = 2k - 2 - A`.
//!
//! The singular-point relation is shipped in two conventions, because the
//! printed form `B = chi + A + 2*K.h` fails an elementary independent check
//! (the Euler count of the blow-up, `chi + A = (2 - 2k)*2 + B`) on the pencil
//! of lines in the projective plane, where it yields `B = -2`. The
//! Euler-consistent reading `B = chi + 3A + 2*K.h` is the unique one
//! satisfying that identity and is the default; the literal form is kept
//! available and its failures are reported, not suppressed.

use std::fmt;

use thiserror::Error;

use crate::kodaira::KodairaDim;

/// Which reading of the singular-point relation an operation uses. Every
/// operation that depends on it takes a mode and records it in its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConventionMode {
    /// The relation exactly as printed: `B = chi + A + 2*K.h`.
    PaperLiteral,
    /// The relation forced by the blow-up Euler identity:
    /// `B = chi + 3A + 2*K.h`.
    EulerConsistent,
}

impl ConventionMode {
    pub fn label(self) -> &'static str {
        match self {
            ConventionMode::PaperLiteral => "paper-literal",
            ConventionMode::EulerConsistent => "euler",
        }
    }
}

impl fmt::Display for ConventionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A value tagged with the convention that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Moded<T> {
    pub value: T,
    pub mode: ConventionMode,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PencilError {
    #[error("parity violation: A + K.h = {sum} is odd, the fiber genus would be fractional")]
    ParityViolation { sum: i64 },
    #[error("negative fiber genus {value}")]
    NegativeGenus { value: i64 },
    #[error("negative singular-point count {count} ({mode} mode)")]
    NegativeCount { count: i64, mode: ConventionMode },
    #[error("conversion numerator {numerator} is not divisible by 4 ({mode} mode)")]
    DivisibilityViolation {
        numerator: i64,
        mode: ConventionMode,
    },
    #[error(
        "inconsistent pairing: K.omega = 0 with K^2 = {v} > 0 is impossible for symplectic data"
    )]
    InconsistentPairing { v: i64 },
    #[error("a pencil has a nonempty base locus, got A = {a}")]
    BasePointsRequired { a: i64 },
    #[error("negative singular-point count B = {b}")]
    NegativeSingularPoints { b: i64 },
    #[error("supplied K.h = {supplied} disagrees with 2k - 2 - A = {derived}")]
    CanonicalPairingMismatch { supplied: i64, derived: i64 },
}

/// Pencil summary `(k, A, B)` plus the ambient `(chi, sigma)`. The pairing
/// `K.h` is derived from `(k, A)` unless supplied, in which case it must
/// agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilData {
    fiber_genus: i64,
    base_points: i64,
    singular_points: i64,
    chi: i64,
    sigma: i64,
    k_dot_h: i64,
}

impl PencilData {
    pub fn new(
        fiber_genus: i64,
        base_points: i64,
        singular_points: i64,
        chi: i64,
        sigma: i64,
        k_dot_h: Option<i64>,
    ) -> Result<PencilData, PencilError> {
        if fiber_genus < 0 {
            return Err(PencilError::NegativeGenus { value: fiber_genus });
        }
        if base_points < 1 {
            return Err(PencilError::BasePointsRequired { a: base_points });
        }
        if singular_points < 0 {
            return Err(PencilError::NegativeSingularPoints { b: singular_points });
        }
        let derived = canonical_dot_h(fiber_genus, base_points);
        if let Some(supplied) = k_dot_h {
            if supplied != derived {
                return Err(PencilError::CanonicalPairingMismatch { supplied, derived });
            }
        }
        Ok(PencilData {
            fiber_genus,
            base_points,
            singular_points,
            chi,
            sigma,
            k_dot_h: derived,
        })
    }

    pub fn fiber_genus(&self) -> i64 {
        self.fiber_genus
    }

    pub fn base_points(&self) -> i64 {
        self.base_points
    }

    pub fn singular_points(&self) -> i64 {
        self.singular_points
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn k_dot_h(&self) -> i64 {
        self.k_dot_h
    }
}

/// Fiber genus of a pencil from the base-point count and the canonical
/// pairing: `k = (A + K.h + 2) / 2`.
pub fn pencil_genus(a: i64, k_dot_h: i64) -> Result<i64, PencilError> {
    if a < 1 {
        return Err(PencilError::BasePointsRequired { a });
    }
    let sum = a + k_dot_h;
    if sum.rem_euclid(2) != 0 {
        return Err(PencilError::ParityViolation { sum });
    }
    let k = (sum + 2) / 2;
    if k < 0 {
        return Err(PencilError::NegativeGenus { value: k });
    }
    Ok(k)
}

/// The canonical pairing `K.h = 2k - 2 - A`; inverse of [`pencil_genus`]
/// in its second argument.
pub fn canonical_dot_h(k: i64, a: i64) -> i64 {
    2 * k - 2 - a
}

/// Singular-point count from the ambient Euler characteristic, in the chosen
/// convention. In the literal convention a negative result is expected on
/// known examples and is reported as an error, never clamped.
pub fn singular_fiber_count(
    chi: i64,
    a: i64,
    k_dot_h: i64,
    mode: ConventionMode,
) -> Result<Moded<i64>, PencilError> {
    if a < 1 {
        return Err(PencilError::BasePointsRequired { a });
    }
    let count = match mode {
        ConventionMode::PaperLiteral => chi + a + 2 * k_dot_h,
        ConventionMode::EulerConsistent => chi + 3 * a + 2 * k_dot_h,
    };
    if count < 0 {
        return Err(PencilError::NegativeCount { count, mode });
    }
    Ok(Moded { value: count, mode })
}

/// The blow-up Euler identity: blowing up the `A` base points yields a
/// genus-`k` fibration over the sphere with `B` singular fibers, so
/// `chi + A = (2 - 2k)*2 + B`. This is the independent oracle every
/// convention-dependent value is checked against.
pub fn blow_up_euler_identity(chi: i64, a: i64, b: i64, k: i64) -> bool {
    chi + a == (2 - 2 * k) * 2 + b
}

/// True iff the pencil's own data satisfies the blow-up Euler identity with
/// the genus recomputed from `(A, K.h)`.
pub fn pencil_consistency(p: &PencilData) -> bool {
    match pencil_genus(p.base_points, p.k_dot_h) {
        Ok(k) => blow_up_euler_identity(p.chi, p.base_points, p.singular_points, k),
        Err(_) => false,
    }
}

/// Combinatorial Kodaira dimension of a minimal 4-manifold admitting a
/// pencil, from the signs of `u = 2k - 2 - A` and `v = 3*sigma + 2*chi`.
/// The combination `u = 0, v > 0` cannot occur for genuine symplectic data
/// and is rejected.
pub fn kappa_pencil(k: i64, a: i64, chi: i64, sigma: i64) -> Result<KodairaDim, PencilError> {
    let u = canonical_dot_h(k, a);
    let v = 3 * sigma + 2 * chi;
    if u < 0 || v < 0 {
        Ok(KodairaDim::MinusInfinity)
    } else if u == 0 && v == 0 {
        Ok(KodairaDim::Zero)
    } else if u > 0 && v == 0 {
        Ok(KodairaDim::One)
    } else if u > 0 {
        Ok(KodairaDim::Two)
    } else {
        Err(PencilError::InconsistentPairing { v })
    }
}

/// Fiber genus of a pencil corresponding to a `(g, h)` fibration with `B'`
/// singular fibers on the same manifold, given the pencil's `(A, B)`.
///
/// Literal convention: `k = (A + B - B')/4 - gh + g + h` as printed.
/// Euler-consistent convention: `k = (B - A - (2-2g)(2-2h) - B' + 4)/4`,
/// which is exactly the blow-up Euler identity solved for `k` with
/// `chi = (2-2g)(2-2h) + B'`.
pub fn fibration_to_pencil_genus(
    g: u32,
    h: u32,
    b_prime: i64,
    a: i64,
    b: i64,
    mode: ConventionMode,
) -> Result<Moded<i64>, PencilError> {
    if a < 1 {
        return Err(PencilError::BasePointsRequired { a });
    }
    if b_prime < 0 {
        return Err(PencilError::NegativeSingularPoints { b: b_prime });
    }
    if b < 0 {
        return Err(PencilError::NegativeSingularPoints { b });
    }
    let g = i64::from(g);
    let h = i64::from(h);
    let (numerator, offset) = match mode {
        ConventionMode::PaperLiteral => (a + b - b_prime, -g * h + g + h),
        ConventionMode::EulerConsistent => (b - a - (2 - 2 * g) * (2 - 2 * h) - b_prime + 4, 0),
    };
    if numerator.rem_euclid(4) != 0 {
        return Err(PencilError::DivisibilityViolation { numerator, mode });
    }
    let k = numerator.div_euclid(4) + offset;
    if k < 0 {
        return Err(PencilError::NegativeGenus { value: k });
    }
    Ok(Moded { value: k, mode })
}

/// Constraints a pencil on a minimal symplectic manifold of dimension zero
/// must satisfy: even `A`, even `B`, genus at least two, and
/// `chi in {0, 12, 24}`. Returns the violated constraints, empty when all
/// hold.
pub fn kappa0_pencil_constraints(k: i64, a: i64, b: i64, chi: i64) -> Vec<Kappa0Violation> {
    let mut violations = Vec::new();
    if a.rem_euclid(2) != 0 {
        violations.push(Kappa0Violation::OddBasePoints);
    }
    if b.rem_euclid(2) != 0 {
        violations.push(Kappa0Violation::OddSingularPoints);
    }
    if k < 2 {
        violations.push(Kappa0Violation::GenusBelowTwo);
    }
    if !matches!(chi, 0 | 12 | 24) {
        violations.push(Kappa0Violation::EulerCharNotInList { chi });
    }
    violations
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kappa0Violation {
    OddBasePoints,
    OddSingularPoints,
    GenusBelowTwo,
    EulerCharNotInList { chi: i64 },
}

impl fmt::Display for Kappa0Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kappa0Violation::OddBasePoints => f.write_str("A odd"),
            Kappa0Violation::OddSingularPoints => f.write_str("B odd"),
            Kappa0Violation::GenusBelowTwo => f.write_str("k < 2"),
            Kappa0Violation::EulerCharNotInList { chi } => {
                write!(f, "chi = {chi} not in {{0, 12, 24}}")
            }
        }
    }
}
