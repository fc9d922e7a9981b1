mod args;
mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use sftkit::presentation::format::{document_to_string, sft_to_string, sofic_to_string};
use sftkit::{
    berger_reduction, builtin_witness, check_empty, contains_bounded, decide_empty, disjoint_union,
    entropy_upper_bound, find_periodic, fixed_point_symbols, invariant_gap_reduction, parse_document,
    parse_pattern, parse_sft, parse_sofic, parse_wang, pattern_count, pattern_in_language_bounded, product,
    resolve, sofic_rice_reduction, wang_to_sft, BergerWitness, Error, GroupContext, Limits, ResolvedPattern,
    SftPresentation,
};

use args::{Cli, Command, ReduceCommand, WangCommand, WitnessCommand};
use report::Report;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_CAP: u8 = 69;
const EXIT_INTERNAL: u8 = 70;

/// A failed command: message for stderr and exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ResourceCap { .. } => EXIT_CAP,
            Error::UnsupportedGroup { .. } | Error::UnknownWitness(_) | Error::MissingParameter(_) => {
                EXIT_USAGE
            }
            Error::OutsideDomain => EXIT_INTERNAL,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn limits() -> Result<Limits, Failure> {
    let limits = Limits::default();
    match std::env::var("SFTKIT_MAX_CELLS") {
        Ok(v) => v
            .parse()
            .map(|cells| limits.with_max_cells(cells))
            .map_err(|_| Failure::usage(format!("SFTKIT_MAX_CELLS must be a positive integer, got '{v}'"))),
        Err(_) => Ok(limits),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("{}: {e}", path.display()),
    })
}

fn located(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

fn load_sft(path: &Path) -> Result<SftPresentation, Failure> {
    parse_sft(&read(path)?).map_err(located(path))
}

/// The base SFT of either file kind. A sofic shift is empty exactly when
/// its base is.
fn load_base(path: &Path) -> Result<SftPresentation, Failure> {
    Ok(parse_document(&read(path)?)
        .map_err(located(path))?
        .base()
        .clone())
}

fn context(p: &SftPresentation, limits: Limits) -> Result<GroupContext, Failure> {
    Ok(GroupContext::with_limits(p.group(), limits)?)
}

fn run(cli: &Cli) -> Outcome {
    let limits = limits()?;
    let json = cli.json;
    match &cli.command {
        Command::Wang(WangCommand::Compile { tiles }) => {
            let set = parse_wang(&read(tiles)?).map_err(located(tiles))?;
            let sft =
                wang_to_sft(&set)?.with_comment(format!("wang tile set with {} tiles", set.tiles.len()));
            Ok(Report::document(sft_to_string(&sft)))
        }
        Command::Product { a, b } => {
            let p = product(&load_sft(a)?, &load_sft(b)?, &limits)?;
            Ok(Report::document(sft_to_string(&p)))
        }
        Command::Union { a, b } => {
            let p = disjoint_union(&load_sft(a)?, &load_sft(b)?, &limits)?;
            Ok(Report::document(sft_to_string(&p)))
        }
        Command::FixedPoints { file } => {
            let p = load_sft(file)?;
            Ok(report::fixed_points(&fixed_point_symbols(&p), json))
        }
        Command::CheckEmpty { file, radius } => {
            let p = load_base(file)?;
            let v = check_empty(&context(&p, limits)?, &p, *radius)?;
            Ok(report::nonemptiness(&v, report::EMPTY_IS_YES, json))
        }
        Command::FindPeriodic { file, max_period } => {
            let p = load_base(file)?;
            let v = find_periodic(&context(&p, limits)?, &p, *max_period)?;
            Ok(report::nonemptiness(&v, report::NONEMPTY_IS_YES, json))
        }
        Command::DecideEmpty {
            file,
            radius,
            max_period,
        } => {
            let p = load_base(file)?;
            let v = decide_empty(&context(&p, limits)?, &p, *radius, *max_period)?;
            Ok(report::nonemptiness(&v, report::EMPTY_IS_YES, json))
        }
        Command::LangMember {
            file,
            pattern,
            radius,
            max_period,
        } => {
            let p = load_sft(file)?;
            let q = parse_pattern(&read(pattern)?, p.group()).map_err(located(pattern))?;
            let v = pattern_in_language_bounded(&context(&p, limits)?, &p, &q, *radius, *max_period)?;
            Ok(report::membership(&v, json))
        }
        Command::Contains {
            candidate,
            x,
            radius,
            max_period,
        } => {
            let (c, x) = (load_sft(candidate)?, load_sft(x)?);
            let v = contains_bounded(&context(&x, limits)?, &c, &x, *radius, *max_period)?;
            Ok(report::containment(&v, json))
        }
        Command::Count { file, side } => {
            let p = load_sft(file)?;
            let count = pattern_count(&context(&p, limits)?, &p, *side)?;
            Ok(report::count(*side, &count, json))
        }
        Command::EntropyBound { file, side } => {
            let p = load_sft(file)?;
            let b = entropy_upper_bound(&context(&p, limits)?, &p, *side)?;
            Ok(report::entropy(&b, json))
        }
        Command::Reduce(ReduceCommand::Berger {
            input,
            witness,
            param_x,
            plus,
            minus,
        }) => {
            let input_p = load_sft(input)?;
            let w = match (witness, plus, minus) {
                (Some(name), _, _) => {
                    let x = param_x.as_deref().map(load_sft).transpose()?;
                    builtin_witness(name, input_p.group(), x.as_ref(), &limits)?
                }
                (None, Some(plus), Some(minus)) => BergerWitness::custom(load_sft(plus)?, load_sft(minus)?)?,
                _ => {
                    return Err(Failure::usage(
                        "either --witness or both --plus and --minus are required",
                    ))
                }
            };
            Ok(Report::document(sft_to_string(&berger_reduction(
                &input_p, &w, &limits,
            )?)))
        }
        Command::Reduce(ReduceCommand::Invariant { input, x0, y0 }) => {
            let z = invariant_gap_reduction(&load_sft(input)?, &load_sft(x0)?, &load_sft(y0)?, &limits)?;
            Ok(Report::document(sft_to_string(&z)))
        }
        Command::Reduce(ReduceCommand::Sofic { input, plus }) => {
            let plus = parse_sofic(&read(plus)?).map_err(located(plus))?;
            let s = sofic_rice_reduction(&load_sft(input)?, &plus, &limits)?;
            Ok(Report::document(sofic_to_string(&s)))
        }
        Command::Witness(WitnessCommand::List) => Ok(report::witness_list(json)),
        Command::Lint { file } => {
            let doc = parse_document(&read(file)?).map_err(located(file))?;
            let p = doc.base();
            let ctx = context(p, limits)?;
            let mut findings = Vec::new();
            let mut first_seen = BTreeMap::new();
            for (i, q) in p.forbidden().iter().enumerate() {
                match resolve(&ctx, q)? {
                    ResolvedPattern::Inconsistent => {
                        findings.push(format!("forbidden[{i}]: inconsistent, never appears"))
                    }
                    ResolvedPattern::Consistent(support) => {
                        if let Some(j) = first_seen.get(&support) {
                            findings.push(format!("forbidden[{i}]: same pattern as forbidden[{j}]"));
                        } else {
                            first_seen.insert(support, i);
                        }
                    }
                }
            }
            // canonical form check: the file round-trips to itself
            let canonical = document_to_string(&doc);
            Ok(report::lint(&findings, canonical == read(file)?, json))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.stdout);
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("sftkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
