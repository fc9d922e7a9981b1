//! Rendering of command results as plain text or JSON.
//!
//! JSON objects use sorted keys and are pretty-printed with a trailing
//! newline; plain text puts the verdict word alone on the first line.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};
use sftkit::reduction::catalog;
use sftkit::{
    Budget, Counterexample, EntropyBound, Nonemptiness, PeriodicWitness, RadiusCertificate, Symbol, Verdict,
};

pub struct Report {
    pub stdout: String,
    pub code: u8,
}

const YES: u8 = 0;
const NO: u8 = 1;
const UNKNOWN: u8 = 3;

impl Report {
    /// A presentation file; always JSON.
    pub fn document(text: String) -> Self {
        Report {
            stdout: text,
            code: 0,
        }
    }

    fn new(json: bool, value: Value, text: String, code: u8) -> Self {
        let stdout = if json {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        } else {
            text
        };
        Report { stdout, code }
    }
}

/// Which answer of an emptiness verdict counts as "yes" for the exit status.
#[derive(Clone, Copy)]
pub struct Polarity {
    empty_is_yes: bool,
}

pub const EMPTY_IS_YES: Polarity = Polarity { empty_is_yes: true };
pub const NONEMPTY_IS_YES: Polarity = Polarity { empty_is_yes: false };

fn join(values: &[Symbol]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn witness_json(w: &PeriodicWitness) -> Value {
    serde_json::to_value(w).expect("serializable")
}

fn witness_text(w: &PeriodicWitness) -> String {
    format!("period: {}\nvalues: {}\n", w.period, join(&w.values))
}

fn budget_object(verdict: &str, b: &Budget) -> (Value, String) {
    let mut obj = Map::new();
    obj.insert("verdict".into(), verdict.into());
    let mut text = format!("{verdict}\n");
    if let Some(r) = b.radius {
        obj.insert("radius".into(), r.into());
        text += &format!("radius: {r}\n");
    }
    if let Some(n) = b.max_period {
        obj.insert("max_period".into(), n.into());
        text += &format!("max period: {n}\n");
    }
    (Value::Object(obj), text)
}

pub fn nonemptiness(v: &Nonemptiness, polarity: Polarity, json: bool) -> Report {
    let (yes, no) = if polarity.empty_is_yes {
        (NO, YES)
    } else {
        (YES, NO)
    };
    match v {
        Verdict::Yes(w) => Report::new(
            json,
            json!({"verdict": "nonempty", "witness": witness_json(w)}),
            format!("nonempty\n{}", witness_text(w)),
            yes,
        ),
        Verdict::No(RadiusCertificate { radius }) => Report::new(
            json,
            json!({"verdict": "empty", "radius": radius}),
            format!("empty\nradius: {radius}\n"),
            no,
        ),
        Verdict::Unknown(b) => {
            let (value, text) = budget_object("unknown", b);
            Report::new(json, value, text, UNKNOWN)
        }
    }
}

pub fn membership(v: &Verdict<PeriodicWitness, RadiusCertificate>, json: bool) -> Report {
    match v {
        Verdict::Yes(w) => Report::new(
            json,
            json!({"verdict": "yes", "witness": witness_json(w)}),
            format!("yes\n{}", witness_text(w)),
            YES,
        ),
        Verdict::No(RadiusCertificate { radius }) => Report::new(
            json,
            json!({"verdict": "no", "radius": radius}),
            format!("no\nradius: {radius}\n"),
            NO,
        ),
        Verdict::Unknown(b) => {
            let (value, text) = budget_object("unknown", b);
            Report::new(json, value, text, UNKNOWN)
        }
    }
}

pub fn containment(v: &Verdict<RadiusCertificate, Counterexample>, json: bool) -> Report {
    match v {
        Verdict::Yes(RadiusCertificate { radius }) => Report::new(
            json,
            json!({"verdict": "yes", "radius": radius}),
            format!("yes\nradius: {radius}\n"),
            YES,
        ),
        Verdict::No(cx) => {
            let words: Vec<String> = cx.pattern.words().map(|w| w.to_string()).collect();
            let values: Vec<Symbol> = cx.pattern.values().collect();
            let shown: Vec<String> = words
                .iter()
                .zip(&values)
                .map(|(w, v)| format!("{}->{v}", if w.is_empty() { "ε" } else { w }))
                .collect();
            Report::new(
                json,
                json!({
                    "verdict": "no",
                    "pattern": {"words": words, "values": values},
                    "witness": witness_json(&cx.witness),
                }),
                format!("no\npattern: {}\n{}", shown.join(" "), witness_text(&cx.witness)),
                NO,
            )
        }
        Verdict::Unknown(b) => {
            let (value, text) = budget_object("unknown", b);
            Report::new(json, value, text, UNKNOWN)
        }
    }
}

pub fn fixed_points(symbols: &[Symbol], json: bool) -> Report {
    let verdict = if symbols.is_empty() { "no" } else { "yes" };
    Report::new(
        json,
        json!({"verdict": verdict, "symbols": symbols}),
        format!("{verdict}\nsymbols: {}\n", join(symbols)),
        if symbols.is_empty() { NO } else { YES },
    )
}

pub fn count(side: usize, count: &BigUint, json: bool) -> Report {
    Report::new(
        json,
        json!({"box": side, "count": count.to_string()}),
        format!("{count}\n"),
        0,
    )
}

pub fn entropy(b: &EntropyBound, json: bool) -> Report {
    Report::new(
        json,
        json!({"box": b.side, "count": b.count.to_string(), "bound": b.bound.to_string()}),
        format!("{}\ncount: {}\n", b.bound, b.count),
        0,
    )
}

pub fn witness_list(json: bool) -> Report {
    let entries: Vec<Value> = catalog()
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "property": e.property,
                "x_plus": e.x_plus,
                "x_minus": e.x_minus,
                "morphism": e.morphism,
                "justification": e.justification,
                "parameterized": e.parameterized,
                "amenable_only": e.amenable_only,
                "grid_2d_only": e.grid_2d_only,
            })
        })
        .collect();
    let mut text = String::new();
    for e in catalog() {
        text += &format!(
            "{}\n  property: {}\n  x_plus: {}\n  x_minus: {}\n  morphism: {}\n  justification: {}\n",
            e.name, e.property, e.x_plus, e.x_minus, e.morphism, e.justification
        );
        if e.parameterized {
            text += "  requires: --param-x\n";
        }
        if e.amenable_only {
            text += "  groups: amenable only (not checked)\n";
        }
        if e.grid_2d_only {
            text += "  groups: Z^d with d >= 2\n";
        }
    }
    Report::new(json, Value::Array(entries), text, 0)
}

pub fn lint(findings: &[String], canonical: bool, json: bool) -> Report {
    let mut text: String = findings.iter().map(|f| format!("{f}\n")).collect();
    if findings.is_empty() {
        text += "ok\n";
    }
    if !canonical {
        text += "note: file is not in canonical form\n";
    }
    Report::new(
        json,
        json!({"findings": findings, "canonical": canonical}),
        text,
        if findings.is_empty() { 0 } else { 1 },
    )
}
