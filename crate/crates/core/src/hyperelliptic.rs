//! Signature and canonical-square formulas for hyperelliptic Lefschetz
//! fibrations over the torus.
//!
//! For a hyperelliptic fibration of fiber genus `g >= 2` over a genus-1 base
//! the signature is a closed form in the vanishing-cycle counts:
//!
//! ```text
//! sigma = -(g+1)/(2g+1) * a + sum_{j=1..floor(g/2)} (4j(g-j)/(2g+1) - 1) * s[j]
//! ```
//!
//! where `a` counts nonseparating vanishing cycles and `s[j]` counts the
//! separating ones splitting off a genus-`j` piece. Integrality of the sum is
//! the admissibility criterion for combinatorial data; geometric
//! realizability is not decided here.

use thiserror::Error;

use crate::kodaira::{KodairaDim, KodairaVerdict, Provenance};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HyperellipticError {
    #[error("signature formula needs fiber genus >= 2, got g = {g}")]
    FiberGenusTooSmall { g: u32 },
    #[error("signature formula is stated over a genus-1 base, got h = {h}")]
    WrongBase { h: u32 },
    #[error("fibration is not flagged hyperelliptic")]
    NotHyperelliptic,
    #[error("non-integer signature {0}: combinatorially inadmissible vanishing-cycle data")]
    NonIntegerSignature(Rational),
    #[error("K^2 = {k_squared} <= 0 contradicts positivity of the canonical square; internal consistency failure")]
    KSquaredNotPositive { k_squared: i64 },
    #[error("verdict needs at least one singular fiber")]
    NoVanishingCycles,
    #[error("separating vector has {got} entries, fiber genus {g} allows at most {max}")]
    SeparatingVectorTooLong { got: usize, g: u32, max: usize },
    #[error("vanishing-cycle counts must be nonnegative")]
    NegativeCycleCount,
}

/// User-supplied structure assertions. They are trusted, never verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibrationFlags {
    pub hyperelliptic: bool,
    pub spin: bool,
    pub complex: bool,
    pub minimal: bool,
}

impl Default for FibrationFlags {
    fn default() -> FibrationFlags {
        FibrationFlags {
            hyperelliptic: false,
            spin: false,
            complex: false,
            minimal: true,
        }
    }
}

/// Combinatorial summary of a `(g, h)` Lefschetz fibration: the genera plus
/// vanishing-cycle counts by type. The separating vector always has exactly
/// `floor(g/2)` entries (short input is right-padded with zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationData {
    g: u32,
    h: u32,
    nonseparating: i64,
    separating: Vec<i64>,
    pub flags: FibrationFlags,
}

impl FibrationData {
    pub fn new(
        g: u32,
        h: u32,
        nonseparating: i64,
        mut separating: Vec<i64>,
        flags: FibrationFlags,
    ) -> Result<FibrationData, HyperellipticError> {
        let max = (g / 2) as usize;
        if separating.len() > max {
            return Err(HyperellipticError::SeparatingVectorTooLong {
                got: separating.len(),
                g,
                max,
            });
        }
        if nonseparating < 0 || separating.iter().any(|&s| s < 0) {
            return Err(HyperellipticError::NegativeCycleCount);
        }
        separating.resize(max, 0);
        Ok(FibrationData {
            g,
            h,
            nonseparating,
            separating,
            flags,
        })
    }

    pub fn fiber_genus(&self) -> u32 {
        self.g
    }

    pub fn base_genus(&self) -> u32 {
        self.h
    }

    pub fn nonseparating(&self) -> i64 {
        self.nonseparating
    }

    pub fn separating(&self) -> &[i64] {
        &self.separating
    }

    /// Total number of vanishing cycles (= singular fibers).
    pub fn n(&self) -> i64 {
        self.nonseparating + self.separating.iter().sum::<i64>()
    }
}

fn check_preconditions(d: &FibrationData) -> Result<(), HyperellipticError> {
    if d.g < 2 {
        return Err(HyperellipticError::FiberGenusTooSmall { g: d.g });
    }
    if d.h != 1 {
        // The closed form is only known over the torus; no extension is
        // attempted for other bases.
        return Err(HyperellipticError::WrongBase { h: d.h });
    }
    if !d.flags.hyperelliptic {
        return Err(HyperellipticError::NotHyperelliptic);
    }
    Ok(())
}

fn signature_rational(d: &FibrationData) -> Rational {
    let g = i128::from(d.g);
    let den = 2 * g + 1;
    let mut sum = Rational::new(-(g + 1), den) * Rational::from(d.nonseparating);
    for (idx, &count) in d.separating.iter().enumerate() {
        let j = idx as i128 + 1;
        let coeff = Rational::new(4 * j * (g - j), den) - Rational::ONE;
        sum = sum + coeff * Rational::from(count);
    }
    sum
}

/// Exact signature of a hyperelliptic `(g, 1)` fibration. Errs with the
/// exact rational when the sum is not an integer, which marks the
/// vanishing-cycle data as combinatorially inadmissible.
///
/// Other base genera are refused with [`HyperellipticError::WrongBase`];
/// that check is the extension point should a closed form for `h != 1`
/// become available, and it stays off rather than guessing.
pub fn endo_signature(d: &FibrationData) -> Result<i64, HyperellipticError> {
    check_preconditions(d)?;
    let sigma = signature_rational(d);
    match sigma.as_integer() {
        Some(v) => Ok(i64::try_from(v).expect("signature overflow")),
        None => Err(HyperellipticError::NonIntegerSignature(sigma)),
    }
}

/// Canonical square of a hyperelliptic `(g, 1)` fibration, evaluated through
/// its own expansion
///
/// ```text
/// K^2 = (g-1)/(2g+1) * a + sum_j (6j(g-2j) + 2g(j-1) + (4gj-1))/(2g+1) * s[j]
/// ```
///
/// rather than through `3*sigma + 2*n`; the two routes must agree exactly and
/// tests hold them to that.
pub fn hyperelliptic_k_squared(d: &FibrationData) -> Result<i64, HyperellipticError> {
    check_preconditions(d)?;
    // Admissibility is integrality of the signature, even when the K^2
    // expansion happens to be integral on its own (possible when 3 | 2g+1).
    let sigma = signature_rational(d);
    if !sigma.is_integer() {
        return Err(HyperellipticError::NonIntegerSignature(sigma));
    }
    let g = i128::from(d.g);
    let den = 2 * g + 1;
    let mut sum = Rational::new(g - 1, den) * Rational::from(d.nonseparating);
    for (idx, &count) in d.separating.iter().enumerate() {
        let j = idx as i128 + 1;
        let numer = 6 * j * (g - 2 * j) + 2 * g * (j - 1) + (4 * g * j - 1);
        sum = sum + Rational::new(numer, den) * Rational::from(count);
    }
    let value = sum
        .as_integer()
        .expect("K^2 expansion is integral whenever the signature is");
    Ok(i64::try_from(value).expect("K^2 overflow"))
}

/// Verdict for a hyperelliptic `(g, 1)` fibration with at least one singular
/// fiber: the canonical square is strictly positive, forcing dimension two.
pub fn prop_he_verdict(d: &FibrationData) -> Result<KodairaVerdict, HyperellipticError> {
    check_preconditions(d)?;
    if d.n() == 0 {
        return Err(HyperellipticError::NoVanishingCycles);
    }
    let k_squared = hyperelliptic_k_squared(d)?;
    if k_squared <= 0 {
        return Err(HyperellipticError::KSquaredNotPositive { k_squared });
    }
    Ok(KodairaVerdict::new(
        KodairaDim::Two,
        Provenance::ObstructionForced("hyperelliptic-Endo".to_string()),
    )
    .with_note(format!("K^2={k_squared}")))
}
