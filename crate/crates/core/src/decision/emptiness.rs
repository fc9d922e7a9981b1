use std::sync::Arc;

use serde::Serialize;

use crate::decision::search::Problem;
use crate::decision::window::{box_cells, check_group, compile_problem, Boundary, Window};
use crate::decision::{Budget, Nonemptiness, RadiusCertificate, Verdict};
use crate::error::{Error, Result};
use crate::group::{Element, GroupContext};
use crate::presentation::{appears, resolve, Configuration, SftPresentation};
use crate::Symbol;

/// A total assignment of symbols to `ball(radius)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallPattern {
    pub radius: usize,
    /// The ball in canonical order, shared between patterns.
    pub cells: Arc<[Element]>,
    /// `values[i]` sits on `cells[i]`.
    pub values: Vec<Symbol>,
}

impl BallPattern {
    pub fn get(&self, e: &Element) -> Option<Symbol> {
        self.cells.binary_search(e).ok().map(|i| self.values[i])
    }

    pub fn to_configuration(&self) -> Configuration {
        self.cells
            .iter()
            .cloned()
            .zip(self.values.iter().copied())
            .collect()
    }
}

pub(crate) fn ball_problem(
    ctx: &GroupContext,
    pres: &SftPresentation,
    radius: usize,
) -> Result<(Window, Problem)> {
    let window = Window::new(ctx.ball(radius)?);
    let problem = compile_problem(ctx, pres, &window, Boundary::Open)?;
    Ok((window, problem))
}

/// Every assignment on `ball(radius)` in which no consistent forbidden
/// pattern occurs entirely inside the ball, in lexicographic order of the
/// values along the canonical ball order.
pub fn locally_admissible_patterns(
    ctx: &GroupContext,
    pres: &SftPresentation,
    radius: usize,
) -> Result<Vec<BallPattern>> {
    let (window, problem) = ball_problem(ctx, pres, radius)?;
    let cells: Arc<[Element]> = window.cells.into();
    Ok(problem
        .all_solutions(ctx.limits().max_patterns)?
        .into_iter()
        .map(|sol| BallPattern {
            radius,
            cells: Arc::clone(&cells),
            values: sol.iter().map(|&s| pres.alphabet()[s as usize]).collect(),
        })
        .collect())
}

/// Certifies emptiness at the smallest `r <= max_radius` whose ball admits
/// no locally admissible pattern; otherwise `Unknown`. Never answers `Yes`.
pub fn check_empty(ctx: &GroupContext, pres: &SftPresentation, max_radius: usize) -> Result<Nonemptiness> {
    check_group(ctx, pres)?;
    for r in 0..=max_radius {
        let (_, problem) = ball_problem(ctx, pres, r)?;
        if problem.first_solution()?.is_none() {
            return Ok(Verdict::No(RadiusCertificate { radius: r }));
        }
    }
    Ok(Verdict::Unknown(Budget {
        radius: Some(max_radius),
        max_period: None,
    }))
}

/// An `n`-periodic configuration of `Z^d`, stored on one period cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicWitness {
    pub period: usize,
    pub dimension: usize,
    /// Values on `{0..period-1}^dimension` in lexicographic order.
    pub values: Vec<Symbol>,
}

impl PeriodicWitness {
    pub fn value_at(&self, coords: &[i64]) -> Symbol {
        assert_eq!(coords.len(), self.dimension);
        let n = self.period as i64;
        let idx = coords
            .iter()
            .fold(0usize, |acc, x| acc * self.period + x.rem_euclid(n) as usize);
        self.values[idx]
    }

    /// The witness on the box `{0..side-1}^d`.
    pub fn lift(&self, ctx: &GroupContext, side: usize) -> Result<Configuration> {
        Ok(box_cells(ctx, side)?
            .into_iter()
            .map(|e| {
                let v = self.value_at(e.coords().expect("grid element"));
                (e, v)
            })
            .collect())
    }

    /// Replays the witness: lifts it to a `3n` box and checks that no
    /// consistent forbidden pattern occurs fully inside.
    pub fn verify(&self, ctx: &GroupContext, pres: &SftPresentation) -> Result<bool> {
        check_group(ctx, pres)?;
        if ctx.kind().grid_dimension() != Some(self.dimension) {
            return Ok(false);
        }
        if self.values.iter().any(|v| !pres.contains_symbol(*v)) {
            return Ok(false);
        }
        let lifted = self.lift(ctx, 3 * self.period)?;
        for p in pres.forbidden() {
            let q = resolve(ctx, p)?;
            let Some(support) = q.support() else { continue };
            let anchor = ctx.inverse(support.keys().next().expect("nonempty support"));
            for c in lifted.domain() {
                let g = ctx.multiply(c, &anchor);
                match appears(ctx, &q, &lifted, &g) {
                    Ok(true) => return Ok(false),
                    Ok(false) | Err(Error::OutsideDomain) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn torus_search(
    ctx: &GroupContext,
    pres: &SftPresentation,
    period: usize,
    pins: &[(Element, Symbol)],
) -> Result<Option<PeriodicWitness>> {
    let dimension = ctx.kind().grid_dimension().ok_or(Error::UnsupportedGroup {
        operation: "periodic search",
        group: ctx.kind(),
    })?;
    let window = Window::new(box_cells(ctx, period)?);
    let mut builder = crate::decision::window::compile(ctx, pres, &window, Boundary::Torus { period })?;
    let mut pinned = std::collections::BTreeMap::new();
    for (h, v) in pins {
        let coords = h.coords().expect("grid element");
        let wrapped = Element::Grid(coords.iter().map(|x| x.rem_euclid(period as i64)).collect());
        let cell = window.index_of(&wrapped).expect("torus covers residues") as usize;
        if *pinned.entry(cell).or_insert(*v) != *v {
            return Ok(None);
        }
    }
    for (cell, v) in pinned {
        builder.pin(cell, crate::decision::window::symbol_index(pres, v));
    }
    let problem = builder.build(ctx.limits().max_nodes);
    Ok(problem.first_solution()?.map(|sol| PeriodicWitness {
        period,
        dimension,
        values: sol.iter().map(|&s| pres.alphabet()[s as usize]).collect(),
    }))
}

/// Searches tori of period `1..=max_period` for an admissible assignment.
/// A solution lifts to a periodic configuration, so `Yes` proves
/// nonemptiness. Never answers `No`. Grid groups only.
pub fn find_periodic(ctx: &GroupContext, pres: &SftPresentation, max_period: usize) -> Result<Nonemptiness> {
    check_group(ctx, pres)?;
    if !ctx.kind().is_grid() {
        return Err(Error::UnsupportedGroup {
            operation: "periodic search",
            group: ctx.kind(),
        });
    }
    for n in 1..=max_period {
        if let Some(w) = torus_search(ctx, pres, n, &[])? {
            return Ok(Verdict::Yes(w));
        }
    }
    Ok(Verdict::Unknown(Budget {
        radius: None,
        max_period: Some(max_period),
    }))
}

/// Emptiness certificate first, then (on grid groups) a periodic witness.
pub fn decide_empty(
    ctx: &GroupContext,
    pres: &SftPresentation,
    max_radius: usize,
    max_period: usize,
) -> Result<Nonemptiness> {
    let v = check_empty(ctx, pres, max_radius)?;
    if v.is_no() {
        return Ok(v);
    }
    if !ctx.kind().is_grid() {
        return Ok(Verdict::Unknown(Budget {
            radius: Some(max_radius),
            max_period: None,
        }));
    }
    Ok(match find_periodic(ctx, pres, max_period)? {
        Verdict::Unknown(_) => Verdict::Unknown(Budget {
            radius: Some(max_radius),
            max_period: Some(max_period),
        }),
        other => other,
    })
}
