//! Many-one reductions from emptiness of SFTs to dynamical properties, and
//! the library of witness pairs they are instantiated with.
//!
//! A witness pair `(X₊, X₋)` for a property `P` consists of an SFT with `P`,
//! an SFT none of whose extensions has `P`, and a morphism `X₊ -> X₋`. The
//! Berger reduction maps an input presentation `X` to
//! `Z = X₊ ⊔ (X × X₋)`: if `X` is empty then `Z` is conjugate to `X₊`,
//! otherwise `Z` factors onto `X₋`. Witness validity is undecidable in
//! general, so catalog entries carry a justification note instead of a
//! check.

use crate::construction::{disjoint_union, mixing_patterns, product, project_local_map, Component};
use crate::error::{Error, Result};
use crate::group::GroupKind;
use crate::limits::Limits;
use crate::presentation::format::{digest, sofic_digest};
use crate::presentation::{SftPresentation, SoficPresentation};

/// A witness pair for a property, with its justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergerWitness {
    pub name: String,
    pub x_plus: SftPresentation,
    pub x_minus: SftPresentation,
    pub property: String,
    pub justification: String,
    /// Only valid on amenable groups; never checked.
    pub amenable_only: bool,
    /// Description of the morphism `X₊ -> X₋`. The reduction never uses it.
    pub morphism: String,
}

impl BergerWitness {
    /// Builds a witness from user-supplied presentations.
    pub fn custom(x_plus: SftPresentation, x_minus: SftPresentation) -> Result<Self> {
        x_plus.same_group(&x_minus)?;
        Ok(BergerWitness {
            name: "custom".into(),
            x_plus,
            x_minus,
            property: "user-supplied property".into(),
            justification: "user-supplied pair; not verified".into(),
            amenable_only: false,
            morphism: "user-supplied".into(),
        })
    }

    pub fn group(&self) -> GroupKind {
        self.x_plus.group()
    }
}

/// A catalog entry as listed by `witness list`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub property: &'static str,
    pub x_plus: &'static str,
    pub x_minus: &'static str,
    pub justification: &'static str,
    pub morphism: &'static str,
    /// Requires the parameter presentation `X`.
    pub parameterized: bool,
    pub amenable_only: bool,
    /// Restricted to grid groups of dimension at least 2.
    pub grid_2d_only: bool,
}

const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "transitivity",
        property: "topological transitivity",
        x_plus: "singleton {0}",
        x_minus: "two fixed points {0,1}",
        justification: "a one-point system is transitive; a system with two fixed points is not, \
                        and every extension of it splits into two disjoint nonempty invariant sets",
        morphism: "the constant map onto the fixed point 0",
        parameterized: false,
        amenable_only: false,
        grid_2d_only: false,
    },
    CatalogEntry {
        name: "minimality",
        property: "minimality",
        x_plus: "singleton {0}",
        x_minus: "two fixed points {0,1}",
        justification: "a one-point system is minimal; each fixed point of the two-point system \
                        is a proper nonempty subsystem, and preimages of it persist in extensions",
        morphism: "the constant map onto the fixed point 0",
        parameterized: false,
        amenable_only: false,
        grid_2d_only: false,
    },
    CatalogEntry {
        name: "no-strongly-aperiodic",
        property: "having no strongly aperiodic configuration",
        x_plus: "singleton {0}",
        x_minus: "full shift {0,1}",
        justification: "the single configuration of the singleton is fixed by every shift; the \
                        full shift contains strongly aperiodic points, and so do their preimages",
        morphism: "the inclusion of the constant configuration 0",
        parameterized: false,
        amenable_only: false,
        grid_2d_only: false,
    },
    CatalogEntry {
        name: "tcpe",
        property: "topological completely positive entropy",
        x_plus: "full shift {0,1}",
        x_minus: "full shift {0,1} ⊔ full shift {2,3}",
        justification: "the full shift has completely positive entropy; the union factors onto a \
                        two-point zero-entropy system, which every extension inherits",
        morphism: "the inclusion onto the first copy",
        parameterized: false,
        amenable_only: false,
        grid_2d_only: true,
    },
    CatalogEntry {
        name: "conjugate-to-x",
        property: "being conjugate to X",
        x_plus: "X",
        x_minus: "X ⊔ full shift {0,1}",
        justification: "X is conjugate to itself; on amenable groups no extension of X joined with \
                        a positive-entropy component is conjugate to X",
        morphism: "the inclusion onto the copy of X",
        parameterized: true,
        amenable_only: true,
        grid_2d_only: false,
    },
    CatalogEntry {
        name: "factor-of-x",
        property: "being a factor of X",
        x_plus: "X",
        x_minus: "X ⊔ full shift {0,1}",
        justification: "X is a factor of itself; on amenable groups no extension of X joined with \
                        a positive-entropy component is a factor of X",
        morphism: "the inclusion onto the copy of X",
        parameterized: true,
        amenable_only: true,
        grid_2d_only: false,
    },
    CatalogEntry {
        name: "embeds-into-x",
        property: "embedding into X",
        x_plus: "X",
        x_minus: "X ⊔ full shift {0,1}",
        justification: "X embeds into itself; on amenable groups no extension of X joined with \
                        a positive-entropy component embeds into X",
        morphism: "the inclusion onto the copy of X",
        parameterized: true,
        amenable_only: true,
        grid_2d_only: false,
    },
];

/// The built-in witness pairs, in listing order.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

fn entry(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownWitness(name.to_string()))
}

fn singleton(group: GroupKind) -> Result<SftPresentation> {
    SftPresentation::full_shift(group, vec![0])
}

fn binary_full_shift(group: GroupKind) -> Result<SftPresentation> {
    SftPresentation::full_shift(group, vec![0, 1])
}

/// Alphabet `{0, 1}` with every adjacent `0`/`1` pair forbidden: exactly the
/// two constant configurations.
pub fn two_fixed_points(group: GroupKind) -> Result<SftPresentation> {
    SftPresentation::new(group, vec![0, 1], mixing_patterns(group, &[0], &[1])?)
}

/// Instantiates the catalog entry `name` on `group`. Parameterized entries
/// take `param_x` verbatim.
pub fn builtin_witness(
    name: &str,
    group: GroupKind,
    param_x: Option<&SftPresentation>,
    limits: &Limits,
) -> Result<BergerWitness> {
    let e = entry(name)?;
    group.validate()?;
    let (x_plus, x_minus) = match e.name {
        "transitivity" | "minimality" => (singleton(group)?, two_fixed_points(group)?),
        "no-strongly-aperiodic" => (singleton(group)?, binary_full_shift(group)?),
        "tcpe" => {
            if group.grid_dimension().is_none_or(|d| d < 2) {
                return Err(Error::UnsupportedGroup {
                    operation: "the tcpe witness",
                    group,
                });
            }
            let full = binary_full_shift(group)?;
            (
                full.clone(),
                disjoint_union(&full, &full, limits)?.without_comment(),
            )
        }
        _ => {
            let x = param_x.ok_or_else(|| Error::MissingParameter(name.to_string()))?;
            if x.group() != group {
                return Err(Error::GroupMismatch {
                    left: group,
                    right: x.group(),
                });
            }
            let x = x.clone().without_comment();
            let minus = disjoint_union(&x, &binary_full_shift(group)?, limits)?.without_comment();
            (x, minus)
        }
    };
    Ok(BergerWitness {
        name: e.name.to_string(),
        x_plus,
        x_minus,
        property: e.property.to_string(),
        justification: e.justification.to_string(),
        amenable_only: e.amenable_only,
        morphism: e.morphism.to_string(),
    })
}

/// `Z = X₊ ⊔ (input × X₋)`.
pub fn berger_reduction(
    input: &SftPresentation,
    w: &BergerWitness,
    limits: &Limits,
) -> Result<SftPresentation> {
    input.same_group(&w.x_plus)?;
    let z = disjoint_union(&w.x_plus, &product(input, &w.x_minus, limits)?, limits)?;
    Ok(z.with_comment(format!(
        "berger reduction of {} via witness '{}'",
        digest(input),
        w.name
    )))
}

/// `Z = X₀ ⊔ (Y₀ × input)`.
///
/// For an invariant that does not decrease under unions and under products
/// with nonempty systems, `Z` sits at the value of `X₀` when the input is
/// empty and at least at the value of `Y₀` otherwise.
pub fn invariant_gap_reduction(
    input: &SftPresentation,
    x0: &SftPresentation,
    y0: &SftPresentation,
    limits: &Limits,
) -> Result<SftPresentation> {
    input.same_group(x0)?;
    input.same_group(y0)?;
    let z = disjoint_union(x0, &product(y0, input, limits)?, limits)?;
    Ok(z.with_comment(format!(
        "invariant reduction of {}: x0 {}, y0 {}",
        digest(input),
        digest(x0),
        digest(y0)
    )))
}

/// Sofic presentation with base `plus.base × input` and the local map of
/// `plus` read through the first component.
///
/// It presents the same subshift as `plus` when the input is nonempty, and
/// the empty subshift otherwise.
pub fn sofic_rice_reduction(
    input: &SftPresentation,
    plus: &SoficPresentation,
    limits: &Limits,
) -> Result<SoficPresentation> {
    input.same_group(plus.base())?;
    let base = product(plus.base(), input, limits)?;
    let map = project_local_map(&base, Component::First, plus.local_map(), limits)?;
    let out = SoficPresentation::new(base, map)?;
    Ok(out.with_comment(format!(
        "sofic reduction of {} via {}",
        digest(input),
        sofic_digest(plus)
    )))
}
