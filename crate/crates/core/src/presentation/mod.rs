//! Pattern, SFT and sofic presentations.
//!
//! A pattern presentation maps finitely many words to symbols. Words are
//! only meaningful once evaluated in a group, so [`resolve`] turns a
//! presentation into an element-indexed [`ResolvedPattern`]; two words that
//! land on the same element with different values make the pattern
//! inconsistent, and an inconsistent pattern appears nowhere.

pub mod format;
mod sofic;
mod wang;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{Element, GroupContext, GroupKind, Word};
use crate::Symbol;

pub(crate) use sofic::assignments;
pub use sofic::{apply_local_map, LocalMap, SoficPresentation};
pub use wang::{wang_to_sft, WangTile, WangTileset};

/// A finite map from words to symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternPresentation {
    entries: Vec<(Word, Symbol)>,
}

impl PatternPresentation {
    /// Builds a pattern; entries must be nonempty and words pairwise distinct
    /// as literal strings.
    pub fn new(entries: Vec<(Word, Symbol)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("words", "pattern has no entries"));
        }
        let mut seen = BTreeSet::new();
        for (i, (w, _)) in entries.iter().enumerate() {
            if !seen.insert(w) {
                return Err(Error::invalid(
                    format!("words[{i}]"),
                    format!("duplicate word \"{w}\""),
                ));
            }
        }
        Ok(PatternPresentation { entries })
    }

    /// Convenience constructor from textual words. Panics on bad letters.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Symbol)>) -> Result<Self> {
        let entries = pairs
            .into_iter()
            .map(|(w, v)| {
                let word = w
                    .parse::<Word>()
                    .map_err(|c| Error::invalid("words", format!("'{c}' is not a generator letter")))?;
                Ok((word, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(Word, Symbol)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|(w, _)| w)
    }

    pub fn values(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.entries.iter().map(|(_, v)| *v)
    }

    /// The common value if every entry carries the same symbol.
    pub fn constant_value(&self) -> Option<Symbol> {
        let first = self.entries[0].1;
        self.values().all(|v| v == first).then_some(first)
    }

    pub fn max_word_len(&self) -> usize {
        self.words().map(Word::len).max().unwrap_or(0)
    }

    /// Same pattern with every value passed through `f`.
    pub fn map_values(&self, mut f: impl FnMut(Symbol) -> Symbol) -> Self {
        PatternPresentation {
            entries: self.entries.iter().map(|(w, v)| (w.clone(), f(*v))).collect(),
        }
    }

    pub(crate) fn with_values(&self, values: &[Symbol]) -> Self {
        debug_assert_eq!(values.len(), self.entries.len());
        PatternPresentation {
            entries: self
                .entries
                .iter()
                .zip(values)
                .map(|((w, _), v)| (w.clone(), *v))
                .collect(),
        }
    }
}

/// A pattern presentation after evaluating its words in a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolvedPattern {
    Consistent(BTreeMap<Element, Symbol>),
    /// Two words evaluate to the same element but carry different values.
    Inconsistent,
}

impl ResolvedPattern {
    pub fn support(&self) -> Option<&BTreeMap<Element, Symbol>> {
        match self {
            ResolvedPattern::Consistent(m) => Some(m),
            ResolvedPattern::Inconsistent => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, ResolvedPattern::Consistent(_))
    }
}

pub fn resolve(ctx: &GroupContext, p: &PatternPresentation) -> Result<ResolvedPattern> {
    let mut support = BTreeMap::new();
    for (w, v) in p.entries() {
        let e = ctx.evaluate(w)?;
        match support.insert(e, *v) {
            Some(prev) if prev != *v => return Ok(ResolvedPattern::Inconsistent),
            _ => {}
        }
    }
    Ok(ResolvedPattern::Consistent(support))
}

/// A finite configuration: symbols on a finite set of group elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Configuration {
    cells: BTreeMap<Element, Symbol>,
}

impl Configuration {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(cells: impl IntoIterator<Item = Element>, value: Symbol) -> Self {
        cells.into_iter().map(|e| (e, value)).collect()
    }

    pub fn get(&self, e: &Element) -> Option<Symbol> {
        self.cells.get(e).copied()
    }

    pub fn insert(&mut self, e: Element, v: Symbol) {
        self.cells.insert(e, v);
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, Symbol)> {
        self.cells.iter().map(|(e, v)| (e, *v))
    }

    pub fn domain(&self) -> impl Iterator<Item = &Element> {
        self.cells.keys()
    }
}

impl FromIterator<(Element, Symbol)> for Configuration {
    fn from_iter<I: IntoIterator<Item = (Element, Symbol)>>(iter: I) -> Self {
        Configuration {
            cells: iter.into_iter().collect(),
        }
    }
}

/// Whether `q` appears in `c` at `g`, i.e. `c(g·h) = q(h)` for every `h` in
/// the support. Inconsistent patterns never appear.
pub fn appears(ctx: &GroupContext, q: &ResolvedPattern, c: &Configuration, g: &Element) -> Result<bool> {
    let Some(support) = q.support() else {
        return Ok(false);
    };
    let mut all = true;
    for (h, v) in support {
        match c.get(&ctx.multiply(g, h)) {
            None => return Err(Error::OutsideDomain),
            Some(x) if x != *v => all = false,
            Some(_) => {}
        }
    }
    Ok(all)
}

/// An SFT presentation `(A, F)` over a fixed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SftPresentation {
    group: GroupKind,
    alphabet: Vec<Symbol>,
    forbidden: Vec<PatternPresentation>,
    comment: Option<String>,
}

impl SftPresentation {
    /// Validates and builds a presentation. The alphabet is stored sorted;
    /// forbidden patterns keep their order.
    pub fn new(group: GroupKind, alphabet: Vec<Symbol>, forbidden: Vec<PatternPresentation>) -> Result<Self> {
        group.validate()?;
        let alphabet = canonical_alphabet(alphabet, "alphabet")?;
        let ctx = GroupContext::new(group)?;
        for (i, p) in forbidden.iter().enumerate() {
            for (j, (w, v)) in p.entries().iter().enumerate() {
                ctx.check_word(w)
                    .map_err(|e| e.at(format!("forbidden[{i}].words[{j}]")))?;
                if alphabet.binary_search(v).is_err() {
                    return Err(Error::invalid(
                        format!("forbidden[{i}].values[{j}]"),
                        format!("value {v} is not in the alphabet"),
                    ));
                }
            }
        }
        Ok(SftPresentation {
            group,
            alphabet,
            forbidden,
            comment: None,
        })
    }

    pub fn full_shift(group: GroupKind, alphabet: Vec<Symbol>) -> Result<Self> {
        Self::new(group, alphabet, Vec::new())
    }

    /// A presentation of the empty subshift: every symbol is forbidden.
    pub fn empty_shift(group: GroupKind, alphabet: Vec<Symbol>) -> Result<Self> {
        let forbidden = alphabet
            .iter()
            .map(|&a| PatternPresentation::new(vec![(Word::empty(), a)]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, alphabet, forbidden)
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comment = Some(comment.into());
        self
    }

    pub fn without_comment(mut self) -> Self {
        self.comment = None;
        self
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &[PatternPresentation] {
        &self.forbidden
    }

    pub fn comment(&self) -> Option<&str> {
        self.comment.as_deref()
    }

    pub fn contains_symbol(&self, a: Symbol) -> bool {
        self.alphabet.binary_search(&a).is_ok()
    }

    pub fn max_symbol(&self) -> Symbol {
        *self.alphabet.last().expect("alphabet is nonempty")
    }

    pub fn context(&self) -> Result<GroupContext> {
        GroupContext::new(self.group)
    }

    pub(crate) fn from_parts_unchecked(
        group: GroupKind,
        alphabet: Vec<Symbol>,
        forbidden: Vec<PatternPresentation>,
    ) -> Self {
        debug_assert!(alphabet.windows(2).all(|w| w[0] < w[1]));
        SftPresentation {
            group,
            alphabet,
            forbidden,
            comment: None,
        }
    }

    /// Indices of forbidden patterns whose words collide with different
    /// values. Such patterns are kept but can never appear.
    pub fn inconsistent_patterns(&self) -> Result<Vec<usize>> {
        let ctx = self.context()?;
        let mut out = Vec::new();
        for (i, p) in self.forbidden.iter().enumerate() {
            if !resolve(&ctx, p)?.is_consistent() {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub(crate) fn same_group(&self, other: &SftPresentation) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group,
                right: other.group,
            });
        }
        Ok(())
    }
}

/// Sorts an alphabet and rejects empty or repeated ones.
pub(crate) fn canonical_alphabet(mut alphabet: Vec<Symbol>, location: &str) -> Result<Vec<Symbol>> {
    if alphabet.is_empty() {
        return Err(Error::invalid(location, "alphabet is empty"));
    }
    alphabet.sort_unstable();
    if let Some(w) = alphabet.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::invalid(location, format!("repeated symbol {}", w[0])));
    }
    Ok(alphabet)
}

impl Error {
    /// Prefixes the location of a validation error.
    pub(crate) fn at(self, prefix: impl AsRef<str>) -> Error {
        let prefix = prefix.as_ref();
        match self {
            Error::Invalid { location, message } => Error::Invalid {
                location: if location.is_empty() {
                    prefix.to_string()
                } else if location.starts_with('[') {
                    format!("{prefix}{location}")
                } else {
                    format!("{prefix}.{location}")
                },
                message,
            },
            Error::UnknownGenerator { symbol, group } => Error::Invalid {
                location: prefix.to_string(),
                message: format!("unknown generator symbol '{symbol}' for {group}"),
            },
            other => other,
        }
    }
}
