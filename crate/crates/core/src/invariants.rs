//! Basic topological invariants of closed oriented 4-manifolds and the
//! dimension classifiers built on them.
//!
//! All formula evaluation is exact. Operations that must return an integer
//! error out (never round) when the exact value is fractional.

use thiserror::Error;

use crate::kodaira::KodairaDim;
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("non-minimal input: the canonical-class classifier requires a minimal manifold")]
    NonMinimal,
    #[error(
        "contradictory data: a torsion canonical class has square zero, got K^2 = {k_squared}"
    )]
    TorsionNonzeroSquare { k_squared: i64 },
    #[error("impossible minimal data: K^2 = {k_squared} < 0 with non-torsion K on a manifold that is neither rational nor ruled")]
    ImpossibleMinimalData { k_squared: i64 },
    #[error("non-almost-complex Betti data: 1 - b1 + b+ = {value} is odd")]
    BettiParity { value: i64 },
    #[error("plurigenus index n = {n} must be at least 2")]
    PlurigenusIndex { n: i64 },
    #[error("general-type plurigenus requires K^2 > 0, got {k_squared}")]
    KSquaredNotPositive { k_squared: i64 },
}

/// Kodaira dimension of a closed oriented surface: `-inf` for the sphere,
/// `0` for the torus, `1` for higher genus.
pub fn surface_kappa(genus: u32) -> KodairaDim {
    match genus {
        0 => KodairaDim::MinusInfinity,
        1 => KodairaDim::Zero,
        _ => KodairaDim::One,
    }
}

/// Euler characteristic of the total space of a genus-`g` fibration over a
/// genus-`h` surface with `n` singular fibers: `(2-2g)(2-2h) + n`.
pub fn euler_characteristic(g: u32, h: u32, n: i64) -> i64 {
    assert!(n >= 0, "singular-fiber count must be nonnegative");
    let fiber = 2 - 2 * i128::from(g);
    let base = 2 - 2 * i128::from(h);
    let chi = fiber * base + i128::from(n);
    i64::try_from(chi).expect("euler characteristic overflow")
}

/// The numeric invariants `(chi, sigma, K^2, chi_h)` of a closed oriented
/// 4-manifold. `K^2` is always recomputed as `2*chi + 3*sigma` and `chi_h`
/// as the exact rational `(chi + sigma)/4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldInvariants {
    pub chi: i64,
    pub sigma: i64,
    pub k_squared: i64,
    pub chi_h: Rational,
    /// True iff `chi + sigma = 0 mod 4`, i.e. `chi_h` is an integer. A false
    /// flag marks data no almost complex structure can realize; it is
    /// reported, not rejected.
    pub almost_complex_admissible: bool,
}

pub fn compute_invariants(chi: i64, sigma: i64) -> ManifoldInvariants {
    let k_squared = 2 * i128::from(chi) + 3 * i128::from(sigma);
    let chi_h = Rational::new(i128::from(chi) + i128::from(sigma), 4);
    ManifoldInvariants {
        chi,
        sigma,
        k_squared: i64::try_from(k_squared).expect("K^2 overflow"),
        chi_h,
        almost_complex_admissible: chi_h.is_integer(),
    }
}

/// Kodaira dimension of a minimal symplectic 4-manifold from its canonical
/// class data: rational/ruled manifolds sit at `-inf`, otherwise a torsion
/// class gives `0`, square zero gives `1` and positive square gives `2`.
pub fn kodaira_from_canonical(
    minimal: bool,
    rational_or_ruled: bool,
    k_torsion: bool,
    k_squared: i64,
) -> Result<KodairaDim, InvariantError> {
    if !minimal {
        return Err(InvariantError::NonMinimal);
    }
    if k_torsion && k_squared != 0 {
        return Err(InvariantError::TorsionNonzeroSquare { k_squared });
    }
    if rational_or_ruled {
        return Ok(KodairaDim::MinusInfinity);
    }
    if k_torsion {
        return Ok(KodairaDim::Zero);
    }
    match k_squared {
        0 => Ok(KodairaDim::One),
        v if v > 0 => Ok(KodairaDim::Two),
        _ => Err(InvariantError::ImpossibleMinimalData { k_squared }),
    }
}

/// The n-th plurigenus of a minimal general-type surface for `n >= 2`:
/// `n(n-1)/2 * K^2 + (1 - b1 + b+)/2`. Grows quadratically in `n`.
pub fn plurigenus_general_type(
    n: i64,
    k_squared: i64,
    b1: i64,
    b_plus: i64,
) -> Result<i64, InvariantError> {
    if n < 2 {
        return Err(InvariantError::PlurigenusIndex { n });
    }
    if k_squared <= 0 {
        return Err(InvariantError::KSquaredNotPositive { k_squared });
    }
    let constant = 1 - b1 + b_plus;
    if constant.rem_euclid(2) != 0 {
        return Err(InvariantError::BettiParity { value: constant });
    }
    let n = i128::from(n);
    let value = n * (n - 1) / 2 * i128::from(k_squared) + i128::from(constant) / 2;
    Ok(i64::try_from(value).expect("plurigenus overflow"))
}

/// Slack in the slope inequality for a relatively minimal holomorphic
/// fibration of fiber genus `g >= 2` over a genus-`h` base:
/// `K^2 - 8(g-1)(h-1) - (4 - 4/g)(chi_h - (h-1)(g-1))`.
/// Nonnegative iff the inequality holds; zero at equality.
pub fn xiao_slope_gap(g: u32, h: u32, k_squared: i64, chi_h: Rational) -> Rational {
    assert!(g >= 2, "slope inequality needs fiber genus >= 2");
    let g_i = i128::from(g);
    let h_i = i128::from(h);
    let correction = Rational::from_integer(8 * (g_i - 1) * (h_i - 1));
    let slope = Rational::from_integer(4) - Rational::new(4, g_i);
    let shifted_chi_h = chi_h - Rational::from_integer((h_i - 1) * (g_i - 1));
    Rational::from(k_squared) - correction - slope * shifted_chi_h
}

/// Slack in the signature bound `sigma >= -(g+1)/(2g+1) * chi` implied by
/// the slope inequality over a torus base, i.e.
/// `sigma + (g+1)/(2g+1) * chi`. Nonnegative iff the bound holds.
pub fn signature_bound_gap(g: u32, chi: i64, sigma: i64) -> Rational {
    assert!(g >= 2, "signature bound needs fiber genus >= 2");
    let g_i = i128::from(g);
    Rational::from(sigma) + Rational::new(g_i + 1, 2 * g_i + 1) * Rational::from(chi)
}
