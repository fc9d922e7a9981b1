use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupKind, Word};
use crate::presentation::{PatternPresentation, SftPresentation};
use crate::Symbol;

/// A unit square with colored edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WangTile {
    pub n: u64,
    pub e: u64,
    pub s: u64,
    pub w: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WangTileset {
    pub tiles: Vec<WangTile>,
}

impl WangTileset {
    pub fn new(tiles: Vec<WangTile>) -> Result<Self> {
        if tiles.is_empty() {
            return Err(Error::invalid("tiles", "tileset is empty"));
        }
        Ok(WangTileset { tiles })
    }
}

/// Compiles a tileset to a `Z^2` SFT whose configurations are its tilings.
///
/// Tile `i` becomes symbol `i`. Step `a` is east and `b` is north; a pair
/// `(i, j)` is forbidden along `a` when `east(i) != west(j)` and along `b`
/// when `north(i) != south(j)`.
pub fn wang_to_sft(tileset: &WangTileset) -> Result<SftPresentation> {
    let tiles = &tileset.tiles;
    if tiles.is_empty() {
        return Err(Error::invalid("tiles", "tileset is empty"));
    }
    let east: Word = "a".parse().expect("letter");
    let north: Word = "b".parse().expect("letter");
    let mut forbidden = Vec::new();
    for (step, clash) in [
        (
            &east,
            (|s: &WangTile, t: &WangTile| s.e != t.w) as fn(&WangTile, &WangTile) -> bool,
        ),
        (&north, |s: &WangTile, t: &WangTile| s.n != t.s),
    ] {
        for (i, s) in tiles.iter().enumerate() {
            for (j, t) in tiles.iter().enumerate() {
                if clash(s, t) {
                    forbidden.push(PatternPresentation::new(vec![
                        (Word::empty(), i as Symbol),
                        (step.clone(), j as Symbol),
                    ])?);
                }
            }
        }
    }
    SftPresentation::new(
        GroupKind::Grid { dimension: 2 },
        (0..tiles.len() as Symbol).collect(),
        forbidden,
    )
}
