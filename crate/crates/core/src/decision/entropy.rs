use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::decision::window::{box_cells, check_group, compile_problem, Boundary, Window};
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::presentation::SftPresentation;

/// Exact number of locally admissible assignments on the box
/// `{0..side-1}^d`. Only occurrences lying entirely inside the box count.
pub fn pattern_count(ctx: &GroupContext, pres: &SftPresentation, side: usize) -> Result<BigUint> {
    check_group(ctx, pres)?;
    if !ctx.kind().is_grid() {
        return Err(Error::UnsupportedGroup {
            operation: "box pattern counting",
            group: ctx.kind(),
        });
    }
    if side == 0 {
        return Err(Error::invalid("box", "box side must be at least 1"));
    }
    let window = Window::new(box_cells(ctx, side)?);
    compile_problem(ctx, pres, &window, Boundary::Open)?.count()
}

/// Natural logarithm of a big integer. `x` must be nonzero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits in u64").to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Box-level entropy upper bound `ln(count) / side^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyBound {
    pub side: usize,
    pub count: BigUint,
    pub bound: f64,
}

/// `ln(pattern_count(side)) / side^d`, the per-site growth rate of
/// admissible box patterns. It bounds the topological entropy from above
/// and does not increase from `n` to `2n`. An empty box is reported as
/// [`Error::EmptyBox`].
pub fn entropy_upper_bound(ctx: &GroupContext, pres: &SftPresentation, side: usize) -> Result<EntropyBound> {
    let count = pattern_count(ctx, pres, side)?;
    if count.is_zero() {
        return Err(Error::EmptyBox { side });
    }
    let d = ctx
        .kind()
        .grid_dimension()
        .expect("grid checked by pattern_count");
    let volume = (side as f64).powi(d as i32);
    let bound = ln_biguint(&count) / volume;
    Ok(EntropyBound { side, count, bound })
}
