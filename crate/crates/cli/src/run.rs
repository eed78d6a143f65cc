use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use clap::error::ErrorKind;
use clap::CommandFactory;
use ddrs_core::catalog::{all_systems, get_system};
use ddrs_core::rewrite::trace::ReplayError;
use ddrs_core::verify::{run_suite, Suite, SuiteConfig};
use ddrs_core::weights::DEFAULT_BIT_CAP;
use ddrs_core::{
    canonical_term, eval_int, find_redexes, list_systems, normalize, parse_term, render_term,
    term_weight, Error, Limits, ParseError, Signature, Style, Symbol, System, Term, Trace, View,
    ViewKind,
};
use serde_json::json;

use crate::args::{CheckArgs, Cli, Command, Global};

/// Why a command did not succeed, and the exit code that goes with it.
#[derive(Debug)]
pub enum Failure {
    /// A check ran and found a problem.
    Check(String),
    /// Bad input, unknown ids, unreadable or unwritable files.
    Input(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::StepLimit { .. } => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Normalize { term } => normalize_cmd(g, term),
        Command::Eval { term } => eval_cmd(g, term),
        Command::Convert { to, term } => convert_cmd(g, *to, term),
        Command::Redexes { term } => redexes_cmd(g, term),
        Command::Weight { term } => weight_cmd(g, term),
        Command::Show { id } => show_cmd(g, id.as_deref()),
        Command::Check(args) => check_cmd(g, args),
        Command::Replay { path } => replay_cmd(g, path),
    }
}

/// Exits with status 2 and the subcommand's usage.
fn usage(subcommand: &str, message: &str) -> ! {
    let mut cmd = Cli::command();
    cmd.build();
    let sub = cmd
        .find_subcommand_mut(subcommand)
        .expect("known subcommand");
    sub.error(ErrorKind::MissingRequiredArgument, message).exit()
}

fn required_system(g: &Global, subcommand: &str) -> Result<&'static System, Failure> {
    match g.system.as_deref() {
        Some(id) => Ok(get_system(id)?),
        None => usage(subcommand, "the `--system <ID>` option is required"),
    }
}

fn optional_system(g: &Global) -> Result<Option<&'static System>, Failure> {
    g.system
        .as_deref()
        .map(get_system)
        .transpose()
        .map_err(Failure::from)
}

fn read_term(text: &str, sig: &Signature) -> Result<Term, Failure> {
    parse_term(text, sig).map_err(|e| Failure::Input(parse_message(text, &e)))
}

fn parse_message(text: &str, e: &ParseError) -> String {
    let col = text.get(..e.offset).map_or(0, |p| p.chars().count());
    format!("{e}\n  {text}\n  {}^", " ".repeat(col))
}

fn style_for(g: &Global, sig: &Signature) -> Style {
    g.style.unwrap_or(if sig.contains(Symbol::Append) {
        Style::Compact
    } else {
        Style::Minimal
    })
}

fn write_file(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Outcome {
    let fail = |e: io::Error| Failure::Input(format!("cannot write {}: {e}", path.display()));
    let file = File::create(path).map_err(fail)?;
    let mut w = BufWriter::new(file);
    write(&mut w).and_then(|_| w.flush()).map_err(fail)
}

fn write_json(g: &Global, value: &impl serde::Serialize) -> Outcome {
    match &g.json {
        Some(path) => write_file(path, |w| {
            serde_json::to_writer_pretty(&mut *w, value)?;
            w.write_all(b"\n")
        }),
        None => Ok(()),
    }
}

pub fn write_trace(trace: &Trace, path: &Path) -> Outcome {
    write_file(path, |w| trace.write_jsonl(w))
}

fn normalize_cmd(g: &Global, text: &str) -> Outcome {
    let sys = required_system(g, "normalize")?;
    let t = read_term(text, sys.signature())?;
    let limits = Limits {
        max_steps: g.max_steps,
    };
    let (nf, trace) = normalize(sys, &t, g.strategy, limits)?;
    let shown = render_term(&nf, style_for(g, sys.signature()));
    println!("{shown}");
    if let Some(path) = &g.trace {
        write_trace(&trace, path)?;
    }
    write_json(
        g,
        &json!({
            "system": sys.id(),
            "strategy": g.strategy,
            "input": render_term(&t, Style::Minimal),
            "normal_form": shown,
            "steps": trace.steps.len(),
        }),
    )
}

fn eval_cmd(g: &Global, text: &str) -> Outcome {
    let sig = optional_system(g)?.map_or(Signature::ANY, |s| *s.signature());
    let value = eval_int(&read_term(text, &sig)?);
    println!("{value}");
    write_json(g, &json!({ "term": text, "value": value.to_string() }))
}

fn convert_cmd(g: &Global, to: View, text: &str) -> Outcome {
    let sig = optional_system(g)?.map_or(Signature::ANY, |s| *s.signature());
    let value = eval_int(&read_term(text, &sig)?);
    let t = canonical_term(&value, to)?;
    let style = g.style.unwrap_or(match to.kind {
        ViewKind::Unary => Style::Compact,
        _ => Style::Minimal,
    });
    let shown = render_term(&t, style);
    println!("{shown}");
    write_json(
        g,
        &json!({ "term": text, "view": to.to_string(), "value": value.to_string(), "canonical": shown }),
    )
}

fn redexes_cmd(g: &Global, text: &str) -> Outcome {
    let sys = required_system(g, "redexes")?;
    let redexes = find_redexes(sys, &read_term(text, sys.signature())?);
    for r in &redexes {
        println!("{r}");
    }
    write_json(g, &json!({ "system": sys.id(), "term": text, "redexes": redexes }))
}

fn weight_cmd(g: &Global, text: &str) -> Outcome {
    let sys = required_system(g, "weight")?;
    let w = term_weight(&read_term(text, sys.signature())?, sys.scheme(), DEFAULT_BIT_CAP)?;
    println!("{w}");
    write_json(
        g,
        &json!({ "system": sys.id(), "scheme": sys.scheme().to_string(), "term": text, "weight": w.to_string() }),
    )
}

fn show_cmd(g: &Global, id: Option<&str>) -> Outcome {
    match id.or(g.system.as_deref()) {
        Some(id) => {
            let sys = get_system(id)?;
            print!("{}", sys.dump());
            let rules: Vec<_> = sys
                .rules()
                .iter()
                .map(|r| json!({ "id": r.id(), "rule": r.to_string() }))
                .collect();
            write_json(g, &json!({ "system": sys.info(), "rules": rules }))
        }
        None => {
            let all = list_systems();
            for info in &all {
                println!(
                    "{:<4} {:>2} rules  {:<13}  {}",
                    info.id,
                    info.rule_count,
                    info.signature.to_string(),
                    info.provenance
                );
            }
            write_json(g, &all)
        }
    }
}

fn check_cmd(g: &Global, args: &CheckArgs) -> Outcome {
    let suites: Vec<Suite> = match args.suite.as_str() {
        "all" => Suite::ALL.to_vec(),
        name => vec![name.parse().map_err(Failure::Input)?],
    };
    let systems: Vec<String> = match g.system.as_deref() {
        None | Some("all") => all_systems().iter().map(|s| s.id().to_string()).collect(),
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
    };
    let defaults = SuiteConfig::default();
    let config = SuiteConfig {
        systems,
        seed: g.seed,
        max_steps: g.max_steps,
        max_size: args.max_size.unwrap_or(defaults.max_size),
        samples: args.samples.unwrap_or(defaults.samples),
        random_terms: args.random_terms.unwrap_or(defaults.random_terms),
        ..defaults
    };
    let mut reports = Vec::new();
    for suite in suites {
        let report = run_suite(suite, &config)?;
        println!("{report}");
        reports.push(report);
    }
    match reports.as_slice() {
        [one] => write_json(g, one)?,
        many => write_json(g, &many)?,
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.suite.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed suites: {}", failed.join(", "))))
    }
}

fn replay_cmd(g: &Global, path: &Path) -> Outcome {
    let file = File::open(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let trace = Trace::replay(BufReader::new(file)).map_err(|e| {
        let msg = format!("{}: {e}", path.display());
        match e {
            ReplayError::Mismatch { .. } => Failure::Check(msg),
            ReplayError::Io(_) | ReplayError::Malformed { .. } => Failure::Input(msg),
        }
    })?;
    let sys = get_system(&trace.system)?;
    println!("{}", render_term(&trace.final_term, style_for(g, sys.signature())));
    eprintln!("replayed {} steps", trace.steps.len());
    write_json(
        g,
        &json!({
            "system": trace.system,
            "steps": trace.steps.len(),
            "final": render_term(&trace.final_term, Style::Minimal),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn global(args: &[&str]) -> Global {
        let mut argv = vec!["ddrs"];
        argv.extend_from_slice(args);
        argv.extend(["eval", "0"]);
        Cli::try_parse_from(argv).unwrap().global
    }

    #[test]
    fn caret_counts_characters() {
        let text = "−0+)";
        let e = parse_term(text, &Signature::ANY).unwrap_err();
        let msg = parse_message(text, &e);
        assert!(msg.ends_with("\n     ^"), "{msg:?}");
    }

    #[test]
    fn default_style_follows_the_signature() {
        let g = global(&[]);
        assert_eq!(style_for(&g, &Signature::UNARY), Style::Compact);
        assert_eq!(style_for(&g, &Signature::UNARY_NAT), Style::Compact);
        assert_eq!(style_for(&g, &Signature::SUCCESSOR), Style::Minimal);
        assert_eq!(style_for(&g, &Signature::RING), Style::Minimal);
        let g = global(&["--style", "full"]);
        assert_eq!(style_for(&g, &Signature::UNARY), Style::Full);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::StepLimit { limit: 1 }).exit_code(), 1);
        assert_eq!(Failure::from(get_system("x").unwrap_err()).exit_code(), 2);
    }
}
