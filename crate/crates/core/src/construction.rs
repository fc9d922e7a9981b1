//! Presentation-level constructions: direct products, disjoint unions and
//! projection of local maps onto a product component.
//!
//! Product alphabets are encoded with the Cantor pairing, so a product
//! symbol `c` stands for the pair `(first(c), second(c))`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupKind, Word};
use crate::limits::Limits;
use crate::presentation::format::digest;
use crate::presentation::{LocalMap, PatternPresentation, SftPresentation};
use crate::Symbol;

/// The Cantor pairing `N x N -> N` and its two projections.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CantorPairing;

impl CantorPairing {
    /// `(m + n)(m + n + 1)/2 + n`, or `None` if it does not fit in a symbol.
    pub fn pair(m: Symbol, n: Symbol) -> Option<Symbol> {
        let s = (m as u128) + (n as u128);
        let z = s.checked_mul(s + 1)? / 2 + n as u128;
        Symbol::try_from(z).ok()
    }

    pub fn unpair(z: Symbol) -> (Symbol, Symbol) {
        let z = z as u128;
        // largest w with w(w+1)/2 <= z
        let mut w = ((((8 * z + 1) as f64).sqrt() - 1.0) / 2.0) as u128;
        while w * (w + 1) / 2 > z {
            w -= 1;
        }
        while (w + 1) * (w + 2) / 2 <= z {
            w += 1;
        }
        let n = z - w * (w + 1) / 2;
        ((w - n) as Symbol, n as Symbol)
    }

    pub fn first(z: Symbol) -> Symbol {
        Self::unpair(z).0
    }

    pub fn second(z: Symbol) -> Symbol {
        Self::unpair(z).1
    }

    pub fn project(component: Component, z: Symbol) -> Symbol {
        match component {
            Component::First => Self::first(z),
            Component::Second => Self::second(z),
        }
    }
}

/// Which factor of a product a projection reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    First,
    Second,
}

fn pair_checked(m: Symbol, n: Symbol) -> Result<Symbol> {
    CantorPairing::pair(m, n).ok_or(Error::Overflow("pairing product symbols"))
}

/// Number of forbidden patterns [`product`] generates: each pattern on `W`
/// lifts to `|other alphabet|^|W|` patterns.
pub fn lifted_pattern_count(a: &SftPresentation, b: &SftPresentation) -> Option<u128> {
    let lift = |p: &SftPresentation, other: usize| -> Option<u128> {
        p.forbidden().iter().try_fold(0u128, |acc, q| {
            (other as u128)
                .checked_pow(u32::try_from(q.len()).ok()?)
                .and_then(|n| acc.checked_add(n))
        })
    };
    lift(a, b.alphabet().len())?.checked_add(lift(b, a.alphabet().len())?)
}

/// A presentation conjugate to `X_a × X_b`.
///
/// The alphabet is `{pair(a, b)}`; every forbidden `p: W -> A` of the first
/// factor is replaced by all `q: W -> C` with `first ∘ q = p`, and likewise
/// for the second factor.
pub fn product(a: &SftPresentation, b: &SftPresentation, limits: &Limits) -> Result<SftPresentation> {
    a.same_group(b)?;
    let size = a.alphabet().len() * b.alphabet().len();
    if size > limits.max_alphabet {
        return Err(Error::cap("product alphabet", size, limits.max_alphabet));
    }
    let lifted = lifted_pattern_count(a, b)
        .filter(|&n| n <= limits.max_patterns as u128)
        .ok_or_else(|| {
            let needed = lifted_pattern_count(a, b).map_or("overflow".to_string(), |n| n.to_string());
            Error::cap("lifted forbidden patterns", needed, limits.max_patterns)
        })?;

    let mut alphabet = Vec::with_capacity(size);
    for &x in a.alphabet() {
        for &y in b.alphabet() {
            alphabet.push(pair_checked(x, y)?);
        }
    }
    alphabet.sort_unstable();

    let mut forbidden = Vec::with_capacity(lifted as usize);
    for p in a.forbidden() {
        for others in crate::presentation::assignments(b.alphabet(), p.len()) {
            let values = p
                .values()
                .zip(&others)
                .map(|(x, &y)| pair_checked(x, y))
                .collect::<Result<Vec<_>>>()?;
            forbidden.push(p.with_values(&values));
        }
    }
    for p in b.forbidden() {
        for others in crate::presentation::assignments(a.alphabet(), p.len()) {
            let values = others
                .iter()
                .zip(p.values())
                .map(|(&x, y)| pair_checked(x, y))
                .collect::<Result<Vec<_>>>()?;
            forbidden.push(p.with_values(&values));
        }
    }
    Ok(
        SftPresentation::from_parts_unchecked(a.group(), alphabet, forbidden).with_comment(format!(
            "product({}, {}); lifted forbidden patterns: {lifted}",
            digest(a),
            digest(b)
        )),
    )
}

/// Two-cell patterns `[(ε, x), (s, y)]` and `[(ε, y), (s, x)]` for every
/// generator `s`, `x` in `left` and `y` in `right`.
pub fn mixing_patterns(
    group: GroupKind,
    left: &[Symbol],
    right: &[Symbol],
) -> Result<Vec<PatternPresentation>> {
    let ctx = GroupContext::new(group)?;
    let mut out = Vec::new();
    for s in ctx.generators() {
        let step = Word(vec![s]);
        for &x in left {
            for &y in right {
                out.push(PatternPresentation::new(vec![
                    (Word::empty(), x),
                    (step.clone(), y),
                ])?);
                out.push(PatternPresentation::new(vec![
                    (Word::empty(), y),
                    (step.clone(), x),
                ])?);
            }
        }
    }
    Ok(out)
}

/// Offset added to the second alphabet by [`disjoint_union`].
pub fn union_offset(a: &SftPresentation) -> Result<Symbol> {
    a.max_symbol()
        .checked_add(1)
        .ok_or(Error::Overflow("relabeling the second alphabet"))
}

/// A presentation conjugate to `X_a ⊔ X_b`.
///
/// The second alphabet is shifted past the first, both forbidden sets are
/// kept, and every generator-adjacent pair mixing the two copies is
/// forbidden. Since the Cayley graph is connected, a configuration avoiding
/// the mixing pairs lies entirely in one copy.
pub fn disjoint_union(a: &SftPresentation, b: &SftPresentation, limits: &Limits) -> Result<SftPresentation> {
    a.same_group(b)?;
    let offset = union_offset(a)?;
    let size = a.alphabet().len() + b.alphabet().len();
    if size > limits.max_alphabet {
        return Err(Error::cap("union alphabet", size, limits.max_alphabet));
    }
    let shift = |v: Symbol| {
        v.checked_add(offset)
            .ok_or(Error::Overflow("relabeling the second alphabet"))
    };
    let shifted: Vec<Symbol> = b.alphabet().iter().map(|&v| shift(v)).collect::<Result<_>>()?;

    let generators = 2 * a.group().letters();
    let mixing = 2 * generators * a.alphabet().len() * b.alphabet().len();
    let total = a.forbidden().len() + b.forbidden().len() + mixing;
    if total > limits.max_patterns {
        return Err(Error::cap("union forbidden patterns", total, limits.max_patterns));
    }

    let mut forbidden = Vec::with_capacity(total);
    forbidden.extend(a.forbidden().iter().cloned());
    for p in b.forbidden() {
        forbidden.push(p.map_values(|v| v + offset));
    }
    forbidden.extend(mixing_patterns(a.group(), a.alphabet(), &shifted)?);

    let mut alphabet = a.alphabet().to_vec();
    alphabet.extend(shifted);
    Ok(
        SftPresentation::from_parts_unchecked(a.group(), alphabet, forbidden).with_comment(format!(
            "union({}, {}); offset {offset}",
            digest(a),
            digest(b)
        )),
    )
}

/// Lifts a local map on one factor to the product alphabet: the new row for
/// `p` is the old row for `project(component) ∘ p`.
pub fn project_local_map(
    product: &SftPresentation,
    component: Component,
    map: &LocalMap,
    limits: &Limits,
) -> Result<LocalMap> {
    let projected: Vec<Symbol> = product
        .alphabet()
        .iter()
        .map(|&c| CantorPairing::project(component, c))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if projected != map.input_alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: map.input_alphabet().to_vec(),
            found: projected,
        });
    }
    LocalMap::tabulate(
        product.group(),
        map.domain_words().to_vec(),
        product.alphabet().to_vec(),
        map.codomain().to_vec(),
        limits.max_table_rows,
        |input| {
            let inner: Vec<Symbol> = input
                .iter()
                .map(|&c| CantorPairing::project(component, c))
                .collect();
            map.lookup(&inner)
        },
    )
}
