//! Compiling a presentation onto a finite window of cells.

use std::collections::{BTreeMap, HashMap};

use crate::decision::search::{Pin, Problem, ProblemBuilder};
use crate::error::{Error, Result};
use crate::group::{Element, GroupContext};
use crate::presentation::{resolve, ResolvedPattern, SftPresentation};
use crate::Symbol;

/// Cells of a window in assignment order.
#[derive(Debug, Clone)]
pub(crate) struct Window {
    pub cells: Vec<Element>,
    index: HashMap<Element, u32>,
}

impl Window {
    pub fn new(cells: Vec<Element>) -> Self {
        let index = cells
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Window { cells, index }
    }

    pub fn index_of(&self, e: &Element) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }
}

/// How pattern placements interact with the window boundary.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Boundary {
    /// Only occurrences lying entirely inside the window count.
    Open,
    /// The window is the torus `(Z/nZ)^d`; coordinates wrap mod `n`.
    Torus { period: usize },
}

pub(crate) fn check_group(ctx: &GroupContext, pres: &SftPresentation) -> Result<()> {
    if ctx.kind() != pres.group() {
        return Err(Error::GroupMismatch {
            left: ctx.kind(),
            right: pres.group(),
        });
    }
    Ok(())
}

/// Consistent forbidden supports with values mapped to alphabet indices.
/// Patterns using a symbol outside the alphabet can never appear and are
/// dropped, as are inconsistent ones.
fn indexed_supports(ctx: &GroupContext, pres: &SftPresentation) -> Result<Vec<Vec<(Element, u16)>>> {
    let mut out = Vec::new();
    'patterns: for p in pres.forbidden() {
        let ResolvedPattern::Consistent(support) = resolve(ctx, p)? else {
            continue;
        };
        let mut indexed = Vec::with_capacity(support.len());
        for (e, v) in support {
            match pres.alphabet().binary_search(&v) {
                Ok(i) => indexed.push((e, i as u16)),
                Err(_) => continue 'patterns,
            }
        }
        out.push(indexed);
    }
    Ok(out)
}

pub(crate) fn symbol_index(pres: &SftPresentation, v: Symbol) -> Pin {
    match pres.alphabet().binary_search(&v) {
        Ok(i) => Pin::Fixed(i as u16),
        Err(_) => Pin::Impossible,
    }
}

fn wrap(coords: &[i64], period: usize) -> Element {
    Element::Grid(coords.iter().map(|x| x.rem_euclid(period as i64)).collect())
}

/// Builds the search problem for `pres` on `window`.
pub(crate) fn compile(
    ctx: &GroupContext,
    pres: &SftPresentation,
    window: &Window,
    boundary: Boundary,
) -> Result<ProblemBuilder> {
    check_group(ctx, pres)?;
    let limits = ctx.limits();
    if window.len() > limits.max_cells {
        return Err(Error::cap("window cells", window.len(), limits.max_cells));
    }
    let mut builder = ProblemBuilder::new(window.len(), pres.alphabet().len());
    for support in indexed_supports(ctx, pres)? {
        match boundary {
            Boundary::Open => {
                let anchor_inv = ctx.inverse(&support[0].0);
                'placements: for c in &window.cells {
                    let g = ctx.multiply(c, &anchor_inv);
                    let mut pairs = Vec::with_capacity(support.len());
                    for (h, s) in &support {
                        match window.index_of(&ctx.multiply(&g, h)) {
                            Some(i) => pairs.push((i, *s)),
                            None => continue 'placements,
                        }
                    }
                    builder.forbid(pairs);
                }
            }
            Boundary::Torus { period } => {
                'placements: for g in &window.cells {
                    let mut merged: BTreeMap<u32, u16> = BTreeMap::new();
                    for (h, s) in &support {
                        let e = ctx.multiply(g, h);
                        let coords = e.coords().expect("torus windows are grid-only");
                        let i = window
                            .index_of(&wrap(coords, period))
                            .expect("torus window covers every residue");
                        if *merged.entry(i).or_insert(*s) != *s {
                            // two support points share a residue with different values
                            continue 'placements;
                        }
                    }
                    builder.forbid(merged.into_iter().collect());
                }
            }
        }
        if builder.occurrence_count() > limits.max_patterns {
            return Err(Error::cap(
                "forbidden occurrences",
                builder.occurrence_count(),
                limits.max_patterns,
            ));
        }
    }
    Ok(builder)
}

pub(crate) fn compile_problem(
    ctx: &GroupContext,
    pres: &SftPresentation,
    window: &Window,
    boundary: Boundary,
) -> Result<Problem> {
    Ok(compile(ctx, pres, window, boundary)?.build(ctx.limits().max_nodes))
}

/// The box `{0..side-1}^d` in lexicographic order.
pub(crate) fn box_cells(ctx: &GroupContext, side: usize) -> Result<Vec<Element>> {
    let d = ctx.kind().grid_dimension().ok_or(Error::UnsupportedGroup {
        operation: "box windows",
        group: ctx.kind(),
    })?;
    let cap = ctx.limits().max_cells;
    let total = u32::try_from(d)
        .ok()
        .and_then(|d| side.checked_pow(d))
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::cap("box cells", format!("{side}^{d}"), cap))?;
    let mut out = Vec::with_capacity(total);
    let mut v = vec![0i64; d];
    for _ in 0..total {
        out.push(Element::Grid(v.clone()));
        for k in (0..d).rev() {
            v[k] += 1;
            if (v[k] as usize) < side {
                break;
            }
            v[k] = 0;
        }
    }
    Ok(out)
}
