//! Subshifts of finite type on grid groups `Z^d` and free groups `F_k`.
//!
//! Presentations are finite lists of forbidden patterns over words in the
//! group generators. On top of them the crate provides the effective
//! constructions (products, disjoint unions, sofic composition), a decision
//! procedure for fixed points, budgeted semi-decision procedures for
//! emptiness, language membership and containment, box-level entropy
//! bounds, and the many-one reductions in [`reduction`].
//!
//! ```
//! use sftkit::{check_empty, parse_wang, wang_to_sft, GroupContext, Verdict};
//!
//! let tiles = parse_wang(r#"{"tiles": [{"n": 0, "e": 0, "s": 1, "w": 1}]}"#).unwrap();
//! let sft = wang_to_sft(&tiles).unwrap();
//! let ctx = GroupContext::grid(2);
//! assert!(matches!(check_empty(&ctx, &sft, 1).unwrap(), Verdict::No(_)));
//! ```

pub mod construction;
pub mod decision;
pub mod error;
pub mod group;
pub mod limits;
pub mod presentation;
pub mod reduction;

/// Alphabet symbols are natural numbers.
pub type Symbol = u64;

pub use construction::{disjoint_union, product, project_local_map, CantorPairing, Component};
pub use decision::{
    check_empty, contains_bounded, decide_empty, entropy_upper_bound, find_periodic, fixed_point_symbols,
    has_fixed_point, locally_admissible_patterns, pattern_count, pattern_in_language_bounded,
    sofic_image_patterns, BallPattern, Budget, Counterexample, EntropyBound, Nonemptiness, PeriodicWitness,
    RadiusCertificate, Verdict,
};
pub use error::{Error, Result};
pub use group::{Element, Generator, GroupContext, GroupKind, Word};
pub use limits::Limits;
pub use presentation::format::{parse_document, parse_pattern, parse_sft, parse_sofic, parse_wang, Document};
pub use presentation::{
    appears, apply_local_map, resolve, wang_to_sft, Configuration, LocalMap, PatternPresentation,
    ResolvedPattern, SftPresentation, SoficPresentation, WangTile, WangTileset,
};
pub use reduction::{
    berger_reduction, builtin_witness, catalog, invariant_gap_reduction, sofic_rice_reduction, BergerWitness,
    CatalogEntry,
};
