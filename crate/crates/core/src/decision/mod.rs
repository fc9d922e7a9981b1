//! Decision and semi-decision procedures.
//!
//! Only the fixed-point property is decided outright. Emptiness, language
//! membership and containment are answered up to a budget: a [`Verdict`]
//! is `Yes` or `No` only with a certificate, and `Unknown` otherwise.
//! Window searches count only occurrences lying entirely inside the window,
//! which is what makes a "no admissible pattern" answer a proof of
//! emptiness.

mod emptiness;
mod entropy;
mod language;
pub(crate) mod search;
mod window;

use serde::Serialize;

use crate::presentation::SftPresentation;
use crate::Symbol;

pub use emptiness::{
    check_empty, decide_empty, find_periodic, locally_admissible_patterns, BallPattern, PeriodicWitness,
};
pub use entropy::{entropy_upper_bound, ln_biguint, pattern_count, EntropyBound};
pub use language::{contains_bounded, pattern_in_language_bounded, sofic_image_patterns, Counterexample};

/// Exhausted search budget attached to an `Unknown` verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_period: Option<usize>,
}

/// Certificate that nothing admissible exists on the ball of this radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RadiusCertificate {
    pub radius: usize,
}

/// Three-valued outcome of a semi-decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<Y, N> {
    Yes(Y),
    No(N),
    Unknown(Budget),
}

impl<Y, N> Verdict<Y, N> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }
}

/// "Is the SFT nonempty?": `Yes` carries a periodic configuration, `No` the
/// radius at which no admissible ball pattern remains.
pub type Nonemptiness = Verdict<PeriodicWitness, RadiusCertificate>;

/// Symbols `a` whose constant configuration avoids every forbidden pattern.
///
/// A pattern appears in the constant configuration `x_a` exactly when all
/// its values equal `a`, so this only inspects the values.
pub fn fixed_point_symbols(pres: &SftPresentation) -> Vec<Symbol> {
    pres.alphabet()
        .iter()
        .copied()
        .filter(|&a| pres.forbidden().iter().all(|p| p.constant_value() != Some(a)))
        .collect()
}

/// Whether the SFT contains a fixed point (a constant configuration).
pub fn has_fixed_point(pres: &SftPresentation) -> bool {
    !fixed_point_symbols(pres).is_empty()
}
