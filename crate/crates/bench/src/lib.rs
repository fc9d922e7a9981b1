//! Fixture presentations shared by the benchmarks.

use sftkit::{GroupKind, PatternPresentation, SftPresentation, Symbol};

pub const Z2: GroupKind = GroupKind::Grid { dimension: 2 };

fn pattern(pairs: &[(&str, Symbol)]) -> PatternPresentation {
    PatternPresentation::from_pairs(pairs.iter().copied()).expect("valid pattern")
}

/// No two horizontally or vertically adjacent ones.
pub fn hard_square() -> SftPresentation {
    SftPresentation::new(
        Z2,
        vec![0, 1],
        vec![pattern(&[("", 1), ("a", 1)]), pattern(&[("", 1), ("b", 1)])],
    )
    .expect("valid presentation")
}

/// Adjacent cells differ.
pub fn checkerboard() -> SftPresentation {
    let forbidden = ["a", "b"]
        .iter()
        .flat_map(|s| [0, 1].map(|v| pattern(&[("", v), (s, v)])))
        .collect();
    SftPresentation::new(Z2, vec![0, 1], forbidden).expect("valid presentation")
}

/// Proper 3-colourings of the grid graph.
pub fn three_colouring() -> SftPresentation {
    let forbidden = ["a", "b"]
        .iter()
        .flat_map(|s| [0, 1, 2].map(|v| pattern(&[("", v), (s, v)])))
        .collect();
    SftPresentation::new(Z2, vec![0, 1, 2], forbidden).expect("valid presentation")
}

/// Every symbol forbidden.
pub fn empty() -> SftPresentation {
    SftPresentation::empty_shift(Z2, vec![0, 1]).expect("valid presentation")
}
