use std::collections::BTreeSet;

use crate::decision::emptiness::{torus_search, PeriodicWitness};
use crate::decision::window::{check_group, compile, symbol_index, Boundary, Window};
use crate::decision::{Budget, RadiusCertificate, Verdict};
use crate::error::{Error, Result};
use crate::group::{GroupContext, Word};
use crate::presentation::{
    resolve, PatternPresentation, ResolvedPattern, SftPresentation, SoficPresentation,
};
use crate::Symbol;

/// Bounded membership of `p` in the language of `X`.
///
/// `No(r)` when no locally admissible pattern on `ball(radius)` extends `p`
/// at the identity, which proves `p` appears in no configuration. `Yes`
/// when a torus of period at most `max_period` carries `p` (grid groups
/// only). `Unknown` otherwise.
pub fn pattern_in_language_bounded(
    ctx: &GroupContext,
    pres: &SftPresentation,
    p: &PatternPresentation,
    radius: usize,
    max_period: Option<usize>,
) -> Result<Verdict<PeriodicWitness, RadiusCertificate>> {
    check_group(ctx, pres)?;
    let ResolvedPattern::Consistent(support) = resolve(ctx, p)? else {
        return Ok(Verdict::No(RadiusCertificate { radius }));
    };
    if ctx.covering_radius(support.keys()) > radius {
        return Err(Error::SupportTooLarge { radius });
    }

    let window = Window::new(ctx.ball(radius)?);
    let mut builder = compile(ctx, pres, &window, Boundary::Open)?;
    for (h, v) in &support {
        let cell = window.index_of(h).expect("support lies in the ball") as usize;
        builder.pin(cell, symbol_index(pres, *v));
    }
    if builder.build(ctx.limits().max_nodes).first_solution()?.is_none() {
        return Ok(Verdict::No(RadiusCertificate { radius }));
    }

    let max_period = max_period.filter(|_| ctx.kind().is_grid());
    if let Some(max) = max_period {
        let pins: Vec<_> = support.into_iter().collect();
        for n in 1..=max {
            if let Some(w) = torus_search(ctx, pres, n, &pins)? {
                return Ok(Verdict::Yes(w));
            }
        }
    }
    Ok(Verdict::Unknown(Budget {
        radius: Some(radius),
        max_period,
    }))
}

/// A pattern of the candidate that does occur in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub pattern: PatternPresentation,
    pub witness: PeriodicWitness,
}

/// Bounded test of `X ⊆ X_(B, G)`.
///
/// `X` is contained in the candidate exactly when no pattern of `G` lies in
/// the language of `X` and `X` uses no symbol outside `B`; the latter is
/// checked as the singleton patterns `{ε -> a}` for `a` in `A \ B`.
pub fn contains_bounded(
    ctx: &GroupContext,
    candidate: &SftPresentation,
    x: &SftPresentation,
    radius: usize,
    max_period: Option<usize>,
) -> Result<Verdict<RadiusCertificate, Counterexample>> {
    candidate.same_group(x)?;
    check_group(ctx, x)?;
    let extra = x
        .alphabet()
        .iter()
        .filter(|a| !candidate.contains_symbol(**a))
        .map(|&a| PatternPresentation::new(vec![(Word::empty(), a)]))
        .collect::<Result<Vec<_>>>()?;

    let mut unknown = None;
    for q in candidate.forbidden().iter().chain(&extra) {
        match pattern_in_language_bounded(ctx, x, q, radius, max_period)? {
            Verdict::Yes(witness) => {
                return Ok(Verdict::No(Counterexample {
                    pattern: q.clone(),
                    witness,
                }))
            }
            Verdict::No(_) => {}
            Verdict::Unknown(b) => unknown = Some(b),
        }
    }
    Ok(match unknown {
        Some(b) => Verdict::Unknown(b),
        None => Verdict::Yes(RadiusCertificate { radius }),
    })
}

/// Images on `ball(radius)` of the locally admissible base patterns on the
/// ball large enough to feed the local map everywhere, as value vectors in
/// canonical ball order.
pub fn sofic_image_patterns(
    ctx: &GroupContext,
    sofic: &SoficPresentation,
    radius: usize,
) -> Result<BTreeSet<Vec<Symbol>>> {
    let base = sofic.base();
    check_group(ctx, base)?;
    let map = sofic.local_map();
    let outer_radius = radius + map.max_word_len();
    let outer = ctx.ball(outer_radius)?;
    let inner = ctx.ball(radius)?;
    let offsets = map
        .domain_words()
        .iter()
        .map(|w| ctx.evaluate(w))
        .collect::<Result<Vec<_>>>()?;
    // reads[i][k]: index in `outer` of inner[i]·offsets[k]
    let reads: Vec<Vec<usize>> = inner
        .iter()
        .map(|g| {
            offsets
                .iter()
                .map(|h| {
                    outer
                        .binary_search(&ctx.multiply(g, h))
                        .expect("outer ball covers the local map's reach")
                })
                .collect()
        })
        .collect();

    let window = Window::new(outer);
    let problem = compile(ctx, base, &window, Boundary::Open)?.build(ctx.limits().max_nodes);
    let mut images = BTreeSet::new();
    let mut input = Vec::with_capacity(offsets.len());
    for sol in problem.all_solutions(ctx.limits().max_patterns)? {
        let image = reads
            .iter()
            .map(|idx| {
                input.clear();
                input.extend(idx.iter().map(|&j| base.alphabet()[sol[j] as usize]));
                map.lookup(&input)
            })
            .collect::<Result<Vec<_>>>()?;
        images.insert(image);
    }
    Ok(images)
}
