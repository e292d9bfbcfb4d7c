//! Kodaira dimension values and classification verdicts.

use std::fmt;

/// Extended Kodaira dimension of a 4-manifold, totally ordered
/// `-inf < 0 < 1 < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaDim {
    MinusInfinity,
    Zero,
    One,
    Two,
}

impl KodairaDim {
    pub fn finite_value(self) -> Option<i64> {
        match self {
            KodairaDim::MinusInfinity => None,
            KodairaDim::Zero => Some(0),
            KodairaDim::One => Some(1),
            KodairaDim::Two => Some(2),
        }
    }

    /// Extended addition: `-inf` absorbs, finite values add as integers.
    /// Finite sums can exceed two, so the result lives in [`ExtendedKappa`].
    pub fn extended_add(self, other: KodairaDim) -> ExtendedKappa {
        match (self.finite_value(), other.finite_value()) {
            (Some(a), Some(b)) => ExtendedKappa::Finite(a + b),
            _ => ExtendedKappa::MinusInfinity,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            KodairaDim::MinusInfinity => "-inf",
            KodairaDim::Zero => "0",
            KodairaDim::One => "1",
            KodairaDim::Two => "2",
        }
    }
}

impl fmt::Display for KodairaDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl From<KodairaDim> for ExtendedKappa {
    fn from(dim: KodairaDim) -> ExtendedKappa {
        match dim.finite_value() {
            Some(v) => ExtendedKappa::Finite(v),
            None => ExtendedKappa::MinusInfinity,
        }
    }
}

/// A value in `{-inf} ∪ Z`, the codomain of extended addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedKappa {
    MinusInfinity,
    Finite(i64),
}

/// How a dimension verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Assigned directly by a defining table.
    Definitional,
    /// Proven equal to the symplectic/complex Kodaira dimension.
    ProvenEquivalent,
    /// Table value whose equality with the symplectic/complex dimension is
    /// conjectural; only the `(g > 2, h = 1, n >= 1)` fibrations land here.
    Conjectural,
    /// Forced by a named numeric obstruction.
    ObstructionForced(String),
}

impl Provenance {
    pub fn label(&self) -> String {
        match self {
            Provenance::Definitional => "definitional".to_string(),
            Provenance::ProvenEquivalent => "proven".to_string(),
            Provenance::Conjectural => "conjectural".to_string(),
            Provenance::ObstructionForced(name) => format!("obstruction:{name}"),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A dimension value together with its provenance and free-form notes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaVerdict {
    pub dim: KodairaDim,
    pub provenance: Provenance,
    pub notes: Vec<String>,
}

impl KodairaVerdict {
    pub fn new(dim: KodairaDim, provenance: Provenance) -> KodairaVerdict {
        KodairaVerdict {
            dim,
            provenance,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> KodairaVerdict {
        self.notes.push(note.into());
        self
    }
}
