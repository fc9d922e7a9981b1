use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{Element, GroupContext, GroupKind, Word};
use crate::presentation::{canonical_alphabet, Configuration, SftPresentation};
use crate::Symbol;

/// A local function presentation `A^W -> B` given by an explicit table.
///
/// The table is total: one row per assignment of input symbols to the
/// domain words, keyed by the inputs in domain-word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMap {
    domain_words: Vec<Word>,
    input_alphabet: Vec<Symbol>,
    codomain: Vec<Symbol>,
    table: BTreeMap<Vec<Symbol>, Symbol>,
}

impl LocalMap {
    pub fn new(
        group: GroupKind,
        domain_words: Vec<Word>,
        input_alphabet: Vec<Symbol>,
        codomain: Vec<Symbol>,
        rows: impl IntoIterator<Item = (Vec<Symbol>, Symbol)>,
    ) -> Result<Self> {
        let ctx = GroupContext::new(group)?;
        let mut seen = BTreeSet::new();
        for (i, w) in domain_words.iter().enumerate() {
            ctx.check_word(w)
                .map_err(|e| e.at(format!("domain_words[{i}]")))?;
            if !seen.insert(w) {
                return Err(Error::invalid(
                    format!("domain_words[{i}]"),
                    format!("duplicate word \"{w}\""),
                ));
            }
        }
        let input_alphabet = canonical_alphabet(input_alphabet, "alphabet")?;
        let codomain = canonical_alphabet(codomain, "codomain")?;

        let mut table = BTreeMap::new();
        for (i, (input, output)) in rows.into_iter().enumerate() {
            let loc = format!("table[{i}]");
            if input.len() != domain_words.len() {
                return Err(Error::invalid(
                    loc,
                    format!(
                        "input has {} values, expected {}",
                        input.len(),
                        domain_words.len()
                    ),
                ));
            }
            if let Some(v) = input.iter().find(|v| input_alphabet.binary_search(v).is_err()) {
                return Err(Error::invalid(
                    loc,
                    format!("input value {v} is not in the alphabet"),
                ));
            }
            if codomain.binary_search(&output).is_err() {
                return Err(Error::invalid(
                    loc,
                    format!("output {output} is not in the codomain"),
                ));
            }
            if table.insert(input.clone(), output).is_some() {
                return Err(Error::invalid(loc, format!("duplicate row for input {input:?}")));
            }
        }

        let expected = row_count(input_alphabet.len(), domain_words.len());
        if expected != Some(table.len()) {
            let expected = expected.map_or_else(|| "too many".to_string(), |n| n.to_string());
            return Err(Error::invalid(
                "table",
                format!(
                    "integrity error: {} rows present, {expected} required (|A|^|W|)",
                    table.len()
                ),
            ));
        }
        Ok(LocalMap {
            domain_words,
            input_alphabet,
            codomain,
            table,
        })
    }

    /// Builds a table by evaluating `f` on every assignment, in lexicographic
    /// order of inputs.
    pub fn tabulate(
        group: GroupKind,
        domain_words: Vec<Word>,
        input_alphabet: Vec<Symbol>,
        codomain: Vec<Symbol>,
        max_rows: usize,
        mut f: impl FnMut(&[Symbol]) -> Result<Symbol>,
    ) -> Result<Self> {
        let input_alphabet = canonical_alphabet(input_alphabet, "alphabet")?;
        let rows = row_count(input_alphabet.len(), domain_words.len())
            .filter(|&n| n <= max_rows)
            .ok_or_else(|| {
                Error::cap(
                    "local map rows",
                    format!("{}^{}", input_alphabet.len(), domain_words.len()),
                    max_rows,
                )
            })?;
        let mut table = Vec::with_capacity(rows);
        for input in assignments(&input_alphabet, domain_words.len()) {
            let out = f(&input)?;
            table.push((input, out));
        }
        Self::new(group, domain_words, input_alphabet, codomain, table)
    }

    pub fn domain_words(&self) -> &[Word] {
        &self.domain_words
    }

    pub fn input_alphabet(&self) -> &[Symbol] {
        &self.input_alphabet
    }

    pub fn codomain(&self) -> &[Symbol] {
        &self.codomain
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[Symbol], Symbol)> {
        self.table.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn row_count(&self) -> usize {
        self.table.len()
    }

    pub fn lookup(&self, input: &[Symbol]) -> Result<Symbol> {
        self.table.get(input).copied().ok_or_else(|| Error::MissingRow {
            input: input.to_vec(),
        })
    }

    pub fn max_word_len(&self) -> usize {
        self.domain_words.iter().map(Word::len).max().unwrap_or(0)
    }
}

/// `base^exp`, or `None` on overflow.
fn row_count(base: usize, exp: usize) -> Option<usize> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}

/// All words of length `len` over `alphabet`, lexicographically.
pub(crate) fn assignments(alphabet: &[Symbol], len: usize) -> impl Iterator<Item = Vec<Symbol>> + '_ {
    let mut idx = vec![0usize; len];
    let mut done = alphabet.is_empty() && len > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: Vec<Symbol> = idx.iter().map(|&i| alphabet[i]).collect();
        done = true;
        for k in (0..len).rev() {
            idx[k] += 1;
            if idx[k] < alphabet.len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        Some(out)
    })
}

/// A sofic subshift presentation `(A, F, mu, B)`: the image of the SFT
/// `base` under the sliding block code given by `local_map`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoficPresentation {
    base: SftPresentation,
    local_map: LocalMap,
}

impl SoficPresentation {
    pub fn new(base: SftPresentation, local_map: LocalMap) -> Result<Self> {
        if local_map.input_alphabet() != base.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: base.alphabet().to_vec(),
                found: local_map.input_alphabet().to_vec(),
            });
        }
        Ok(SoficPresentation { base, local_map })
    }

    /// The identity factor map on `base`: `W = {ε}`, every symbol to itself.
    pub fn identity(base: SftPresentation) -> Result<Self> {
        let alphabet = base.alphabet().to_vec();
        let map = LocalMap::new(
            base.group(),
            vec![Word::empty()],
            alphabet.clone(),
            alphabet.clone(),
            alphabet.iter().map(|&a| (vec![a], a)),
        )?;
        Self::new(base, map)
    }

    pub fn base(&self) -> &SftPresentation {
        &self.base
    }

    pub fn local_map(&self) -> &LocalMap {
        &self.local_map
    }

    pub fn group(&self) -> GroupKind {
        self.base.group()
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.base = self.base.with_comment(comment);
        self
    }
}

/// The symbol the factor map writes at `g`: the table row indexed by
/// `w -> c(g·w)` over the domain words.
pub fn apply_local_map(ctx: &GroupContext, map: &LocalMap, c: &Configuration, g: &Element) -> Result<Symbol> {
    let mut input = Vec::with_capacity(map.domain_words().len());
    for w in map.domain_words() {
        let e = ctx.multiply(g, &ctx.evaluate(w)?);
        input.push(c.get(&e).ok_or(Error::OutsideDomain)?);
    }
    map.lookup(&input)
}
