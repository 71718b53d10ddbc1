//! The `towers` command line.
//!
//! Exit codes: 0 on success (including a `false` answer to a predicate),
//! 1 when the input is well formed but the operation is undefined on it,
//! 2 when the arguments or the input cannot be parsed.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::Value;
use tower_tableaux::render::{self, Drawable};
use tower_tableaux::*;

#[derive(Parser, Debug)]
#[command(
    name = "towers",
    version,
    about = "Tower diagrams, tower tableaux and Schubert polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Read the input from a file instead of the argument or standard input.
    #[arg(long = "in", value_name = "FILE", global = true)]
    input_file: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slide a reduced word into a standard tower tableau.
    Slide { input: Option<String> },
    /// Reading word of a standard tableau (JSON).
    Reading { input: Option<String> },
    /// Tower diagram of a permutation.
    Shape { input: Option<String> },
    /// Rothification of a tableau (JSON) or of the tableau of a word.
    Rothify {
        input: Option<String>,
        /// Emit the complete tableau (main and virtual) instead.
        #[arg(long)]
        complete: bool,
    },
    /// Canonical labeling of a reduced word.
    Canonical { input: Option<String> },
    /// Reduced word of an injective balanced labeling (JSON).
    Recover { input: Option<String> },
    /// Is a Rothe labeling (JSON) balanced?
    BalancedCheck { input: Option<String> },
    /// Is a tower tableau (JSON) semi-standard?
    SemistandardCheck { input: Option<String> },
    /// Standardization of a semi-standard tableau (JSON).
    Standardize { input: Option<String> },
    /// Flag tableau of a permutation, or of a shape given as a JSON array of heights.
    Flag { input: Option<String> },
    /// Schubert polynomial of a permutation.
    Schubert { input: Option<String> },
    /// Stanley symmetric function of a permutation in finitely many variables.
    Stanley {
        input: Option<String>,
        #[arg(long = "vars", short = 'm', value_name = "M")]
        vars: usize,
    },
    /// All reduced words of a permutation.
    ReducedWords { input: Option<String> },
    /// Draw a diagram, tableau, complete tableau or Rothe labeling (JSON).
    Render {
        input: Option<String>,
        #[arg(long, conflicts_with = "ascii")]
        svg: bool,
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Debug)]
enum Failure {
    /// exit 2
    Parse(String),
    /// exit 1
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<Terminated> for Failure {
    fn from(e: Terminated) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the command line on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            if !text.is_empty() && !text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            0
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn read_input(
    cli: &Cli,
    positional: &Option<String>,
    stdin: &mut dyn Read,
) -> std::result::Result<String, Failure> {
    match (positional, &cli.input_file) {
        (Some(_), Some(_)) => Err(Failure::Parse(
            "give the input either as an argument or with --in, not both".into(),
        )),
        (Some(text), None) => Ok(text.clone()),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {path}: {e}")))
        }
        (None, None) => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> std::result::Result<T, Failure> {
    serde_json::from_str(text.trim()).map_err(|e| Failure::Parse(format!("invalid {what}: {e}")))
}

fn parse_word(text: &str) -> std::result::Result<Word, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::Parse(format!("invalid word {:?}", text.trim())))
}

fn parse_perm(text: &str) -> std::result::Result<Permutation, Failure> {
    text.trim()
        .parse()
        .map_err(|e: Error| Failure::Parse(format!("invalid permutation {:?}: {e}", text.trim())))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

/// Drawings for `pretty` and `ascii`, JSON otherwise.
fn picture<T: serde::Serialize>(
    format: Format,
    value: &T,
    drawable: impl FnOnce() -> Drawable,
) -> String {
    match format {
        Format::Json => json(value),
        Format::Pretty | Format::Ascii => render::ascii(&drawable()),
    }
}

fn text<T: serde::Serialize>(format: Format, value: &T, shown: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json(value),
        Format::Pretty | Format::Ascii => shown(),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Slide { input } => {
            let word = parse_word(&read_input(cli, input, stdin)?)?;
            let t = TowerTableau::slide_word(&word)?;
            Ok(picture(f, &t, || Drawable::Tableau(t.clone())))
        }
        Command::Reading { input } => {
            let t: TowerTableau = parse_json(&read_input(cli, input, stdin)?, "tableau")?;
            let word = t.reading_word()?;
            Ok(text(f, &word, || word.to_string()))
        }
        Command::Shape { input } => {
            let w = parse_perm(&read_input(cli, input, stdin)?)?;
            let shape = TowerDiagram::of_permutation(&w);
            Ok(picture(f, &shape, || Drawable::Diagram(shape.clone())))
        }
        Command::Rothify { input, complete } => {
            let raw = read_input(cli, input, stdin)?;
            let t = if raw.trim_start().starts_with('{') {
                parse_json::<TowerTableau>(&raw, "tableau")?
            } else {
                TowerTableau::slide_word(&parse_word(&raw)?)?
            };
            if *complete {
                let c = CompleteTowerTableau::new(&t.standardize()?)?;
                Ok(picture(f, &c, || Drawable::Complete(c.clone())))
            } else {
                let l = rothify_semistandard(&t)?;
                Ok(picture(f, &l, || Drawable::Rothe(l.clone())))
            }
        }
        Command::Canonical { input } => {
            let word = parse_word(&read_input(cli, input, stdin)?)?;
            let l = RotheLabeling::canonical(&word)?;
            Ok(picture(f, &l, || Drawable::Rothe(l.clone())))
        }
        Command::Recover { input } => {
            let l: RotheLabeling = parse_json(&read_input(cli, input, stdin)?, "labeling")?;
            let word = l.recover_word()?;
            Ok(text(f, &word, || word.to_string()))
        }
        Command::BalancedCheck { input } => {
            let l: RotheLabeling = parse_json(&read_input(cli, input, stdin)?, "labeling")?;
            let ok = l.is_balanced();
            Ok(text(f, &ok, || ok.to_string()))
        }
        Command::SemistandardCheck { input } => {
            let t: TowerTableau = parse_json(&read_input(cli, input, stdin)?, "tableau")?;
            let ok = t.is_semistandard();
            Ok(text(f, &ok, || ok.to_string()))
        }
        Command::Standardize { input } => {
            let t: TowerTableau = parse_json(&read_input(cli, input, stdin)?, "tableau")?;
            let s = t.standardize()?;
            Ok(picture(f, &s, || Drawable::Tableau(s.clone())))
        }
        Command::Flag { input } => {
            let raw = read_input(cli, input, stdin)?;
            let shape = if raw.trim_start().starts_with('[') {
                parse_json::<TowerDiagram>(&raw, "shape")?
            } else {
                TowerDiagram::of_permutation(&parse_perm(&raw)?)
            };
            let t = flag_tableau(&shape);
            Ok(picture(f, &t, || Drawable::Tableau(t.clone())))
        }
        Command::Schubert { input } => {
            let w = parse_perm(&read_input(cli, input, stdin)?)?;
            let p = schubert(&w);
            Ok(text(f, &p, || p.to_string()))
        }
        Command::Stanley { input, vars } => {
            if *vars == 0 {
                return Err(Failure::Parse("--vars must be at least 1".into()));
            }
            let w = parse_perm(&read_input(cli, input, stdin)?)?;
            let p = stanley_truncated(&w, *vars);
            Ok(text(f, &p, || p.to_string()))
        }
        Command::ReducedWords { input } => {
            let w = parse_perm(&read_input(cli, input, stdin)?)?;
            let words = w.reduced_words();
            Ok(text(f, &words, || {
                words.iter().map(|w| format!("{w}\n")).collect()
            }))
        }
        Command::Render { input, svg, .. } => {
            let raw = read_input(cli, input, stdin)?;
            let drawable = detect(&raw)?;
            Ok(if *svg {
                render::svg(&drawable)
            } else {
                render::ascii(&drawable)
            })
        }
    }
}

/// Works out which kind of object a JSON document holds.
fn detect(raw: &str) -> std::result::Result<Drawable, Failure> {
    let value: Value = parse_json(raw, "JSON")?;
    let unknown = || {
        Failure::Parse(
            "unknown object kind: expected a diagram, tableau, complete tableau or Rothe labeling"
                .into(),
        )
    };
    let decode = |v: Value, what: &str| -> std::result::Result<Drawable, Failure> {
        let bad = |e: serde_json::Error| Failure::Parse(format!("invalid {what}: {e}"));
        Ok(match what {
            "complete tableau" => {
                let c: CompleteTowerTableau = serde_json::from_value(v).map_err(bad)?;
                Drawable::Complete(c)
            }
            "tableau" => Drawable::Tableau(serde_json::from_value(v).map_err(bad)?),
            "diagram" => Drawable::Diagram(serde_json::from_value(v).map_err(bad)?),
            "Rothe labeling" => Drawable::Rothe(serde_json::from_value(v).map_err(bad)?),
            _ => Drawable::RotheShape(serde_json::from_value(v).map_err(bad)?),
        })
    };
    match &value {
        Value::Object(map) if map.contains_key("main") && map.contains_key("virtual") => {
            decode(value, "complete tableau")
        }
        Value::Object(map) if map.contains_key("heights") && map.contains_key("labels") => {
            decode(value, "tableau")
        }
        Value::Array(items) => match items.first() {
            None => Ok(Drawable::Diagram(TowerDiagram::empty())),
            Some(Value::Number(_)) => decode(value, "diagram"),
            Some(Value::Object(o)) if o.contains_key("row") => decode(value, "Rothe labeling"),
            Some(Value::Array(_)) => decode(value, "Rothe diagram"),
            _ => Err(unknown()),
        },
        _ => Err(unknown()),
    }
}
