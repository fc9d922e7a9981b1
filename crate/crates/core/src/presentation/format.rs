//! JSON presentation files.
//!
//! ```json
//! {"group": {"kind": "grid", "dimension": 2},
//!  "alphabet": [0, 1],
//!  "forbidden": [{"words": ["", "a"], "values": [1, 1]}]}
//! ```
//!
//! Sofic files add a `local_map` object; Wang files are `{"tiles": [...]}`.
//! Serialization is canonical: sorted alphabet, table rows sorted by input,
//! pretty-printed with a trailing newline.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{GroupKind, Word};
use crate::presentation::{LocalMap, PatternPresentation, SftPresentation, SoficPresentation, WangTileset};
use crate::Symbol;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    group: GroupKind,
    alphabet: Vec<Symbol>,
    forbidden: Vec<RawPattern>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    local_map: Option<RawLocalMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comment: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPattern {
    words: Vec<String>,
    values: Vec<Symbol>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLocalMap {
    domain_words: Vec<String>,
    codomain: Vec<Symbol>,
    table: Vec<RawRow>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRow {
    input: Vec<Symbol>,
    output: Symbol,
}

/// A parsed presentation file of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Sft(SftPresentation),
    Sofic(SoficPresentation),
}

impl Document {
    pub fn base(&self) -> &SftPresentation {
        match self {
            Document::Sft(p) => p,
            Document::Sofic(s) => s.base(),
        }
    }
}

fn parse_word(s: &str, location: &str) -> Result<Word> {
    s.parse::<Word>()
        .map_err(|c| Error::invalid(location, format!("'{c}' is not a generator letter")))
}

fn pattern_from_raw(raw: RawPattern) -> Result<PatternPresentation> {
    if raw.words.len() != raw.values.len() {
        return Err(Error::invalid(
            "",
            format!("{} words but {} values", raw.words.len(), raw.values.len()),
        ));
    }
    let entries = raw
        .words
        .iter()
        .zip(raw.values)
        .enumerate()
        .map(|(j, (w, v))| Ok((parse_word(w, &format!("words[{j}]"))?, v)))
        .collect::<Result<Vec<_>>>()?;
    PatternPresentation::new(entries)
}

fn pattern_to_raw(p: &PatternPresentation) -> RawPattern {
    RawPattern {
        words: p.words().map(|w| w.to_string()).collect(),
        values: p.values().collect(),
    }
}

fn document_from_raw(raw: RawPresentation) -> Result<Document> {
    raw.group.validate()?;
    let forbidden = raw
        .forbidden
        .into_iter()
        .enumerate()
        .map(|(i, p)| pattern_from_raw(p).map_err(|e| e.at(format!("forbidden[{i}]"))))
        .collect::<Result<Vec<_>>>()?;
    let mut base = SftPresentation::new(raw.group, raw.alphabet, forbidden)?;
    if let Some(c) = raw.comment {
        base = base.with_comment(c);
    }
    let Some(lm) = raw.local_map else {
        return Ok(Document::Sft(base));
    };
    let domain_words = lm
        .domain_words
        .iter()
        .enumerate()
        .map(|(i, w)| parse_word(w, &format!("domain_words[{i}]")))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.at("local_map"))?;
    let map = LocalMap::new(
        base.group(),
        domain_words,
        base.alphabet().to_vec(),
        lm.codomain,
        lm.table.into_iter().map(|r| (r.input, r.output)),
    )
    .map_err(|e| e.at("local_map"))?;
    Ok(Document::Sofic(SoficPresentation::new(base, map)?))
}

fn sft_to_raw(p: &SftPresentation) -> RawPresentation {
    RawPresentation {
        group: p.group(),
        alphabet: p.alphabet().to_vec(),
        forbidden: p.forbidden().iter().map(pattern_to_raw).collect(),
        local_map: None,
        comment: p.comment().map(str::to_string),
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_document(text: &str) -> Result<Document> {
    let raw: RawPresentation = serde_json::from_str(text)?;
    document_from_raw(raw)
}

pub fn parse_sft(text: &str) -> Result<SftPresentation> {
    match parse_document(text)? {
        Document::Sft(p) => Ok(p),
        Document::Sofic(_) => Err(Error::invalid(
            "local_map",
            "expected an SFT presentation, found a sofic presentation",
        )),
    }
}

pub fn parse_sofic(text: &str) -> Result<SoficPresentation> {
    match parse_document(text)? {
        Document::Sofic(s) => Ok(s),
        Document::Sft(_) => Err(Error::invalid(
            "local_map",
            "expected a sofic presentation, the document has no local_map",
        )),
    }
}

/// Parses a standalone pattern file `{"words": [...], "values": [...]}`.
/// Letters are checked against `group`; values are unrestricted.
pub fn parse_pattern(text: &str, group: GroupKind) -> Result<PatternPresentation> {
    let raw: RawPattern = serde_json::from_str(text)?;
    let p = pattern_from_raw(raw)?;
    let ctx = crate::group::GroupContext::new(group)?;
    for (j, w) in p.words().enumerate() {
        ctx.check_word(w).map_err(|e| e.at(format!("words[{j}]")))?;
    }
    Ok(p)
}

pub fn parse_wang(text: &str) -> Result<WangTileset> {
    let set: WangTileset = serde_json::from_str(text)?;
    WangTileset::new(set.tiles)
}

pub fn sft_to_string(p: &SftPresentation) -> String {
    to_pretty(&sft_to_raw(p))
}

pub fn sofic_to_string(s: &SoficPresentation) -> String {
    let mut raw = sft_to_raw(s.base());
    let map = s.local_map();
    raw.local_map = Some(RawLocalMap {
        domain_words: map.domain_words().iter().map(|w| w.to_string()).collect(),
        codomain: map.codomain().to_vec(),
        table: map
            .rows()
            .map(|(input, output)| RawRow {
                input: input.to_vec(),
                output,
            })
            .collect(),
    });
    to_pretty(&raw)
}

pub fn document_to_string(d: &Document) -> String {
    match d {
        Document::Sft(p) => sft_to_string(p),
        Document::Sofic(s) => sofic_to_string(s),
    }
}

pub fn pattern_to_string(p: &PatternPresentation) -> String {
    to_pretty(&pattern_to_raw(p))
}

pub fn wang_to_string(t: &WangTileset) -> String {
    to_pretty(t)
}

/// SHA-256 of the canonical serialization, ignoring the comment field.
pub fn digest(p: &SftPresentation) -> String {
    hex(&Sha256::digest(
        sft_to_string(&p.clone().without_comment()).as_bytes(),
    ))
}

pub fn sofic_digest(s: &SoficPresentation) -> String {
    let bare = SoficPresentation::new(s.base().clone().without_comment(), s.local_map().clone())
        .expect("alphabets already agree");
    hex(&Sha256::digest(sofic_to_string(&bare).as_bytes()))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
