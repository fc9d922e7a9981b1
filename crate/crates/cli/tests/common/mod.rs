#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::Rng;
use sftkit::{
    appears, resolve, Configuration, Element, Generator, GroupContext, GroupKind, PatternPresentation,
    ResolvedPattern, SftPresentation, Symbol, Word,
};

pub const Z2: GroupKind = GroupKind::Grid { dimension: 2 };
pub const F2: GroupKind = GroupKind::Free { rank: 2 };

pub fn random_word(rng: &mut StdRng, group: GroupKind, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word(
        (0..len)
            .map(|_| Generator::new(rng.gen_range(0..group.letters()), rng.gen_bool(0.5)))
            .collect(),
    )
}

pub fn random_pattern(
    rng: &mut StdRng,
    group: GroupKind,
    alphabet: &[Symbol],
    max_cells: usize,
    max_len: usize,
) -> PatternPresentation {
    let cells = rng.gen_range(1..=max_cells);
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    while entries.len() < cells {
        let w = random_word(rng, group, max_len);
        if seen.insert(w.to_string()) {
            entries.push((w, alphabet[rng.gen_range(0..alphabet.len())]));
        }
    }
    PatternPresentation::new(entries).unwrap()
}

/// Alphabet of size `1..=max_alpha` drawn from `0..8`, up to `max_forbidden`
/// patterns of up to 3 cells with words of length at most `max_len`.
pub fn random_presentation(
    rng: &mut StdRng,
    group: GroupKind,
    max_alpha: usize,
    max_forbidden: usize,
    max_len: usize,
) -> SftPresentation {
    let size = rng.gen_range(1..=max_alpha);
    let mut alphabet = BTreeSet::new();
    while alphabet.len() < size {
        alphabet.insert(rng.gen_range(0..8u64));
    }
    let alphabet: Vec<Symbol> = alphabet.into_iter().collect();
    let n = rng.gen_range(0..=max_forbidden);
    let forbidden = (0..n)
        .map(|_| random_pattern(rng, group, &alphabet, 3, max_len))
        .collect();
    SftPresentation::new(group, alphabet, forbidden).unwrap()
}

/// Every assignment of `alphabet` to `cells`, in lexicographic order.
pub fn all_assignments(cells: usize, alphabet: &[Symbol]) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..cells {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Whether some forbidden pattern occurs entirely inside the finite
/// configuration `c`, tried at every translate `g` in `c`'s domain.
pub fn has_inside_occurrence(ctx: &GroupContext, pres: &SftPresentation, c: &Configuration) -> bool {
    let domain: BTreeSet<&Element> = c.domain().collect();
    pres.forbidden().iter().any(|p| {
        let q = resolve(ctx, p).unwrap();
        let ResolvedPattern::Consistent(support) = &q else {
            return false;
        };
        // placements anchored so that some support point lands on each cell
        domain.iter().any(|cell| {
            support.keys().any(|h| {
                let g = ctx.multiply(cell, &ctx.inverse(h));
                let inside = support.keys().all(|k| domain.contains(&ctx.multiply(&g, k)));
                inside && appears(ctx, &q, c, &g).unwrap()
            })
        })
    })
}

/// Brute-force admissible value vectors on `ball(radius)`.
pub fn brute_admissible(ctx: &GroupContext, pres: &SftPresentation, radius: usize) -> BTreeSet<Vec<Symbol>> {
    let ball = ctx.ball(radius).unwrap();
    all_assignments(ball.len(), pres.alphabet())
        .into_iter()
        .filter(|values| {
            let c: Configuration = ball.iter().cloned().zip(values.iter().copied()).collect();
            !has_inside_occurrence(ctx, pres, &c)
        })
        .collect()
}

/// Symbols whose constant configuration on `ball(r)` with `r` at least the
/// largest word length has no forbidden occurrence at the identity.
pub fn brute_fixed_points(ctx: &GroupContext, pres: &SftPresentation) -> Vec<Symbol> {
    let r = pres
        .forbidden()
        .iter()
        .map(|p| p.max_word_len())
        .max()
        .unwrap_or(0);
    let ball = ctx.ball(r).unwrap();
    pres.alphabet()
        .iter()
        .copied()
        .filter(|&a| {
            let c = Configuration::constant(ball.iter().cloned(), a);
            pres.forbidden().iter().all(|p| {
                let q = resolve(ctx, p).unwrap();
                !appears(ctx, &q, &c, &ctx.identity()).unwrap()
            })
        })
        .collect()
}
