//! Finitely generated groups with a fixed symmetric generating set.
//!
//! Two families are supported: the grid groups `Z^d` and the free groups
//! `F_k`. Generators are named by letters `a`, `b`, `c`, ...; the uppercase
//! letter denotes the formal inverse. In `Z^d` the `i`-th letter is the
//! `i`-th standard basis vector.
//!
//! All group-specific arithmetic lives in [`GroupContext`]; adding another
//! group with a decidable word problem means adding a [`GroupKind`] variant
//! and an [`Element`] canonical form.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest number of generator letters (one per ASCII letter).
pub const MAX_GENERATORS: usize = 26;

/// Group descriptor as it appears in presentation files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupKind {
    Grid { dimension: usize },
    Free { rank: usize },
}

impl GroupKind {
    /// Number of positive generators (letters).
    pub fn letters(&self) -> usize {
        match *self {
            GroupKind::Grid { dimension } => dimension,
            GroupKind::Free { rank } => rank,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.letters();
        if n == 0 || n > MAX_GENERATORS {
            return Err(Error::invalid(
                "group",
                format!("number of generators must be in 1..={MAX_GENERATORS}, got {n}"),
            ));
        }
        Ok(())
    }

    pub fn is_grid(&self) -> bool {
        matches!(self, GroupKind::Grid { .. })
    }

    pub fn grid_dimension(&self) -> Option<usize> {
        match *self {
            GroupKind::Grid { dimension } => Some(dimension),
            GroupKind::Free { .. } => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Grid { dimension } => write!(f, "Z^{dimension}"),
            GroupKind::Free { rank } => write!(f, "F_{rank}"),
        }
    }
}

/// One letter of the symmetric generating set.
///
/// Ordered by letter first, so `a < A < b < B < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub index: u8,
    pub inverse: bool,
}

impl Generator {
    pub fn new(index: usize, inverse: bool) -> Self {
        assert!(index < MAX_GENERATORS, "generator index {index} out of range");
        Generator {
            index: index as u8,
            inverse,
        }
    }

    pub fn inverted(self) -> Self {
        Generator {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn letter(self) -> char {
        let c = (b'a' + self.index) as char;
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Generator::new((c as u8 - b'a') as usize, false))
        } else if c.is_ascii_uppercase() {
            Some(Generator::new((c as u8 - b'A') as usize, true))
        } else {
            None
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A word over the generating set. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverted()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl FromStr for Word {
    type Err = char;

    /// Parses a string of ASCII letters; returns the first offending
    /// character on failure.
    fn from_str(s: &str) -> std::result::Result<Self, char> {
        s.chars()
            .map(|c| Generator::from_letter(c).ok_or(c))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Canonical form of a group element.
///
/// Grid elements are integer vectors; free-group elements are freely
/// reduced words. Equal elements have equal canonical forms, so the derived
/// `Eq`/`Ord` are the group's equality and the canonical ball ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Grid(Vec<i64>),
    Free(Vec<Generator>),
}

impl Element {
    pub fn coords(&self) -> Option<&[i64]> {
        match self {
            Element::Grid(v) => Some(v),
            Element::Free(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Grid(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Element::Free(w) if w.is_empty() => write!(f, "ε"),
            Element::Free(w) => {
                for g in w {
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

/// A group together with the resource caps used when enumerating it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupContext {
    kind: GroupKind,
    limits: Limits,
}

impl GroupContext {
    pub fn new(kind: GroupKind) -> Result<Self> {
        Self::with_limits(kind, Limits::default())
    }

    pub fn with_limits(kind: GroupKind, limits: Limits) -> Result<Self> {
        kind.validate()?;
        Ok(GroupContext { kind, limits })
    }

    pub fn grid(dimension: usize) -> Self {
        Self::new(GroupKind::Grid { dimension }).expect("invalid grid dimension")
    }

    pub fn free(rank: usize) -> Self {
        Self::new(GroupKind::Free { rank }).expect("invalid free rank")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// The symmetric generating set in canonical order `a, A, b, B, ...`.
    pub fn generators(&self) -> Vec<Generator> {
        (0..self.kind.letters())
            .flat_map(|i| [Generator::new(i, false), Generator::new(i, true)])
            .collect()
    }

    pub fn contains_generator(&self, g: Generator) -> bool {
        (g.index as usize) < self.kind.letters()
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|g| !self.contains_generator(**g)) {
            Some(g) => Err(Error::UnknownGenerator {
                symbol: g.letter(),
                group: self.kind,
            }),
            None => Ok(()),
        }
    }

    pub fn identity(&self) -> Element {
        match self.kind {
            GroupKind::Grid { dimension } => Element::Grid(vec![0; dimension]),
            GroupKind::Free { .. } => Element::Free(Vec::new()),
        }
    }

    /// Evaluates a word to the canonical form of the element it represents.
    pub fn evaluate(&self, w: &Word) -> Result<Element> {
        self.check_word(w)?;
        let mut e = self.identity();
        for &g in &w.0 {
            self.push_generator(&mut e, g);
        }
        Ok(e)
    }

    /// Parses and evaluates a textual word.
    pub fn evaluate_str(&self, s: &str) -> Result<Element> {
        let w: Word = s.parse().map_err(|c| Error::UnknownGenerator {
            symbol: c,
            group: self.kind,
        })?;
        self.evaluate(&w)
    }

    /// Right multiplication by a single generator, in place.
    pub fn push_generator(&self, e: &mut Element, g: Generator) {
        match e {
            Element::Grid(v) => v[g.index as usize] += if g.inverse { -1 } else { 1 },
            Element::Free(w) => {
                if w.last() == Some(&g.inverted()) {
                    w.pop();
                } else {
                    w.push(g);
                }
            }
        }
    }

    pub fn mul_generator(&self, e: &Element, g: Generator) -> Element {
        let mut out = e.clone();
        self.push_generator(&mut out, g);
        out
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        match (g, h) {
            (Element::Grid(a), Element::Grid(b)) => {
                assert_eq!(a.len(), b.len(), "grid elements of different dimension");
                Element::Grid(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Element::Free(_), Element::Free(b)) => {
                let mut out = g.clone();
                for &s in b {
                    self.push_generator(&mut out, s);
                }
                out
            }
            _ => panic!("element does not belong to {}", self.kind),
        }
    }

    pub fn inverse(&self, g: &Element) -> Element {
        match g {
            Element::Grid(v) => Element::Grid(v.iter().map(|x| -x).collect()),
            Element::Free(w) => Element::Free(w.iter().rev().map(|s| s.inverted()).collect()),
        }
    }

    /// Word length with respect to the generating set.
    pub fn length(&self, g: &Element) -> usize {
        match g {
            Element::Grid(v) => v.iter().map(|x| x.unsigned_abs() as usize).sum(),
            Element::Free(w) => w.len(),
        }
    }

    /// All elements of word length at most `radius`, sorted canonically.
    pub fn ball(&self, radius: usize) -> Result<Vec<Element>> {
        let cap = self.limits.max_cells;
        let gens = self.generators();
        let id = self.identity();
        let mut seen: HashSet<Element> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([(id, 0usize)]);
        while let Some((e, d)) = queue.pop_front() {
            if d == radius {
                continue;
            }
            for &g in &gens {
                let next = self.mul_generator(&e, g);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::cap("ball cells", format!("more than {cap}"), cap));
                    }
                    queue.push_back((next, d + 1));
                }
            }
        }
        let mut out: Vec<Element> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Smallest radius whose ball contains every element of `support`.
    pub fn covering_radius<'a>(&self, support: impl IntoIterator<Item = &'a Element>) -> usize {
        support.into_iter().map(|e| self.length(e)).max().unwrap_or(0)
    }
}
