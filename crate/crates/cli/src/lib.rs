//! The `plott` command-line tool: JSON documents in, JSON or DOT out.
//!
//! Exit status: 0 on success, 1 for invalid input, 2 when a checked
//! property fails (a function is not path independent, a word set is not
//! convex, ...), 3 when a size cap is exceeded.

pub mod document;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use plott::lattice::Strategy;
use plott::{
    convexity, dot, functorial, geometry, lattice, ChoiceFunction, PlottError, PlottFunction,
    SimpleWord, WordSet, DEFAULT_CAP,
};
use serde_json::{json, Value};
use thiserror::Error;

use document::{choice_json, family_json, map_json, order_json, subset_key, words_json, Document};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Plott(#[from] PlottError),
    #[error("{0}")]
    Io(String),
    /// A checked property does not hold; the payload is still printed.
    #[error("{0}")]
    Violated(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Plott(PlottError::NotPlott | PlottError::NotLinear { .. }) => 2,
            CliError::Plott(PlottError::Capacity { .. }) => 3,
            CliError::Violated(_) => 2,
            CliError::Plott(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "plott", version, about = "Path-independent choice functions")]
pub struct Cli {
    /// Largest ground set accepted on load (at most 24).
    #[arg(long, global = true, env = "PLOTT_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check path independence; exit 2 with a witness if it fails.
    CheckPi {
        file: PathBuf,
    },
    /// Largest path-independent function below a choice function.
    Plottize {
        file: PathBuf,
    },
    Join {
        left: PathBuf,
        right: PathBuf,
    },
    Meet {
        left: PathBuf,
        right: PathBuf,
    },
    Support {
        file: PathBuf,
    },
    Basement {
        file: PathBuf,
    },
    Socle {
        file: PathBuf,
    },
    /// Convex geometry (closed sets) of a Plott function.
    Geometry {
        file: PathBuf,
    },
    FromGeometry {
        file: PathBuf,
    },
    /// Piece poset, with each piece's set and owner.
    Pieces {
        file: PathBuf,
    },
    /// Canonical superset rationalization: piece order and owner map.
    Rationalize {
        file: PathBuf,
    },
    /// Whether an order and a map rationalize a choice function.
    VerifyRat {
        order: PathBuf,
        map: PathBuf,
        choice: PathBuf,
    },
    /// Direct image of a choice function, or word image of a word set.
    Image {
        #[arg(long)]
        map: PathBuf,
        file: PathBuf,
    },
    /// Inverse image of a choice function.
    Preimage {
        #[arg(long)]
        map: PathBuf,
        file: PathBuf,
    },
    /// Trivial extension along an injective map.
    Extend {
        #[arg(long)]
        map: PathBuf,
        file: PathBuf,
    },
    Sum {
        left: PathBuf,
        right: PathBuf,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
    },
    /// Apply the correspondence (h, phi, psi) to f.
    Correspond {
        h: PathBuf,
        phi: PathBuf,
        psi: PathBuf,
        f: PathBuf,
    },
    /// Shuffles of the two words of a word set with disjoint letters.
    Shuffle {
        file: PathBuf,
    },
    /// Melanges of all words of a word set.
    Melange {
        file: PathBuf,
    },
    /// Segment between the two words of a word set.
    Segment {
        file: PathBuf,
    },
    Hull {
        file: PathBuf,
    },
    /// Check convexity of a word set; exit 2 if it is not convex.
    IsConvex {
        file: PathBuf,
    },
    /// All Plott functions on a ground set.
    Enumerate {
        #[arg(long)]
        ground: PathBuf,
        #[arg(long, default_value = "geometry")]
        strategy: Strategy,
    },
    /// Hasse diagram of an order, family or word set in DOT.
    Dot {
        file: PathBuf,
    },
}

/// Command output: a JSON document or raw text.
enum Output {
    Json(Value),
    Text(String),
}

struct Context {
    cap: usize,
    stdin: Option<String>,
}

impl Context {
    fn read(&mut self, path: &PathBuf) -> Result<String, CliError> {
        if path.as_os_str() == "-" {
            return self
                .stdin
                .take()
                .ok_or_else(|| CliError::Io("standard input used twice".into()));
        }
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }

    fn load(&mut self, path: &PathBuf) -> Result<Document, CliError> {
        let text = self.read(path)?;
        document::load(&text, self.cap)
    }

    fn choice(&mut self, path: &PathBuf) -> Result<ChoiceFunction, CliError> {
        match self.load(path)? {
            Document::Choice(f) => Ok(f),
            other => Err(wrong_kind(path, "choice", &other)),
        }
    }

    fn plott(&mut self, path: &PathBuf) -> Result<PlottFunction, CliError> {
        Ok(PlottFunction::new(self.choice(path)?)?)
    }

    fn map(&mut self, path: &PathBuf) -> Result<plott::SetMap, CliError> {
        match self.load(path)? {
            Document::Map(m) => Ok(m),
            other => Err(wrong_kind(path, "map", &other)),
        }
    }

    fn words(&mut self, path: &PathBuf) -> Result<WordSet, CliError> {
        match self.load(path)? {
            Document::Words(w) => Ok(w),
            other => Err(wrong_kind(path, "words", &other)),
        }
    }

    fn word_pair(&mut self, path: &PathBuf) -> Result<(SimpleWord, SimpleWord), CliError> {
        let ws = self.words(path)?;
        match ws.words() {
            [w, v] => Ok((w.clone(), v.clone())),
            _ => Err(PlottError::Invalid(format!(
                "expected exactly two words, found {}",
                ws.len()
            ))
            .into()),
        }
    }
}

fn wrong_kind(path: &Path, want: &str, got: &Document) -> CliError {
    PlottError::Invalid(format!(
        "{}: expected a {want} document, found {}",
        path.display(),
        got.kind()
    ))
    .into()
}

/// The result of a command plus, for checks, the violated property.
struct Outcome {
    output: Output,
    violation: Option<String>,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome {
            output,
            violation: None,
        }
    }
}

fn check(body: Value, holds: bool, violation: &str) -> Outcome {
    Outcome {
        output: Output::Json(body),
        violation: (!holds).then(|| violation.to_string()),
    }
}

fn json_out(value: Value) -> Result<Outcome, CliError> {
    Ok(Output::Json(value).into())
}

fn execute(command: Command, cx: &mut Context) -> Result<Outcome, CliError> {
    match command {
        Command::CheckPi { file } => {
            let f = cx.choice(&file)?;
            let g = f.ground();
            Ok(match f.path_independence_witness() {
                None => check(json!({ "path_independent": true }), true, ""),
                Some((a, b)) => check(
                    json!({
                        "path_independent": false,
                        "witness": [subset_key(g, a), subset_key(g, b)],
                    }),
                    false,
                    "not path independent",
                ),
            })
        }
        Command::Plottize { file } => json_out(choice_json(
            lattice::plottize(&cx.choice(&file)?).as_choice(),
        )),
        Command::Join { left, right } => {
            let (f, g) = (cx.plott(&left)?, cx.plott(&right)?);
            json_out(choice_json(lattice::join(&f, &g)?.as_choice()))
        }
        Command::Meet { left, right } => {
            let (f, g) = (cx.plott(&left)?, cx.plott(&right)?);
            json_out(choice_json(lattice::meet(&f, &g)?.as_choice()))
        }
        Command::Support { file } => {
            let f = cx.choice(&file)?;
            json_out(json!({
                "ground": f.ground().symbols(),
                "support": subset_key(f.ground(), f.support()),
            }))
        }
        Command::Basement { file } => {
            json_out(words_json(&lattice::basement(cx.plott(&file)?.as_choice())))
        }
        Command::Socle { file } => {
            json_out(words_json(&lattice::socle(cx.plott(&file)?.as_choice())))
        }
        Command::Geometry { file } => {
            json_out(family_json(&geometry::to_geometry(&cx.plott(&file)?)))
        }
        Command::FromGeometry { file } => {
            let family = match cx.load(&file)? {
                Document::Family(f) => f,
                other => return Err(wrong_kind(&file, "family", &other)),
            };
            if !geometry::is_convex_geometry(&family) {
                return Err(CliError::Violated("family is not a convex geometry".into()));
            }
            json_out(choice_json(geometry::from_geometry(&family)?.as_choice()))
        }
        Command::Pieces { file } => {
            let f = cx.plott(&file)?;
            let s = geometry::pieces(&f)?;
            let mut body = order_json(&s.order);
            let (mut owners, mut sets) = (serde_json::Map::new(), serde_json::Map::new());
            for (i, p) in s.pieces.iter().enumerate() {
                let name = s.ground().symbol(i).to_string();
                owners.insert(name.clone(), json!(f.ground().symbol(p.owner)));
                sets.insert(name, json!(subset_key(f.ground(), p.set)));
            }
            body["owners"] = Value::Object(owners);
            body["sets"] = Value::Object(sets);
            json_out(body)
        }
        Command::Rationalize { file } => {
            let rat = geometry::canonical_rationalization(&cx.plott(&file)?)?;
            json_out(json!({ "order": order_json(&rat.order), "map": map_json(&rat.map) }))
        }
        Command::VerifyRat { order, map, choice } => {
            let order = match cx.load(&order)? {
                Document::Order(o) => o,
                other => return Err(wrong_kind(&order, "order", &other)),
            };
            let psi = cx.map(&map)?;
            let f = cx.choice(&choice)?;
            let holds = geometry::verify_ss_rationalization(&order, &psi, &f)?;
            Ok(check(
                json!({ "rationalizes": holds }),
                holds,
                "not a rationalization",
            ))
        }
        Command::Image { map, file } => {
            let phi = cx.map(&map)?;
            match cx.load(&file)? {
                Document::Choice(f) => json_out(choice_json(&functorial::direct_image(&phi, &f)?)),
                Document::Words(ws) => {
                    let images = ws
                        .iter()
                        .map(|w| functorial::word_image(&phi, w))
                        .collect::<plott::Result<Vec<_>>>()?;
                    json_out(words_json(&WordSet::new(phi.target(), images)?))
                }
                other => Err(wrong_kind(&file, "choice or words", &other)),
            }
        }
        Command::Preimage { map, file } => {
            let phi = cx.map(&map)?;
            let g = cx.choice(&file)?;
            json_out(choice_json(
                functorial::inverse_image(&phi, &g)?.as_choice(),
            ))
        }
        Command::Extend { map, file } => {
            let embed = cx.map(&map)?;
            let f = cx.choice(&file)?;
            json_out(choice_json(&functorial::trivial_extension(&f, &embed)?))
        }
        Command::Sum { left, right } => {
            let (f, g) = (cx.choice(&left)?, cx.choice(&right)?);
            json_out(choice_json(&functorial::direct_sum_capped(&f, &g, cx.cap)?))
        }
        Command::Product { left, right } => {
            let (f, g) = (cx.choice(&left)?, cx.choice(&right)?);
            json_out(choice_json(
                functorial::direct_product_capped(&f, &g, cx.cap)?.as_choice(),
            ))
        }
        Command::Correspond { h, phi, psi, f } => {
            let h = cx.plott(&h)?;
            let (phi, psi) = (cx.map(&phi)?, cx.map(&psi)?);
            let f = cx.choice(&f)?;
            json_out(choice_json(
                functorial::apply_correspondence(&h, &phi, &psi, &f)?.as_choice(),
            ))
        }
        Command::Shuffle { file } => {
            let (w, v) = cx.word_pair(&file)?;
            json_out(words_json(&convexity::shuffle(&w, &v)?))
        }
        Command::Melange { file } => {
            let ws = cx.words(&file)?;
            json_out(words_json(&convexity::melange_family(ws.words())?))
        }
        Command::Segment { file } => {
            let (w, v) = cx.word_pair(&file)?;
            json_out(words_json(&convexity::segment(&w, &v)?))
        }
        Command::Hull { file } => json_out(words_json(&convexity::convex_hull(&cx.words(&file)?))),
        Command::IsConvex { file } => {
            let holds = convexity::is_convex(&cx.words(&file)?);
            Ok(check(
                json!({ "convex": holds }),
                holds,
                "word set is not convex",
            ))
        }
        Command::Enumerate { ground, strategy } => {
            let text = cx.read(&ground)?;
            let ground = document::load_ground_document(&text, cx.cap)?;
            let all = lattice::enumerate_plott(&ground, strategy)?;
            let functions: Vec<Value> = all
                .iter()
                .map(|f| choice_json(f)["choice"].clone())
                .collect();
            json_out(json!({
                "ground": ground.symbols(),
                "count": all.len(),
                "functions": functions,
            }))
        }
        Command::Dot { file } => {
            let text = match cx.load(&file)? {
                Document::Order(o) => dot::poset_dot(&o)?,
                Document::Family(f) => dot::family_dot(&f)?,
                Document::Words(w) => dot::word_order_dot(&w)?,
                other => return Err(wrong_kind(&file, "order, family or words", &other)),
            };
            Ok(Output::Text(text).into())
        }
    }
}

/// Runs the tool on `args` (including the program name), returning the exit
/// status. `stdin` is read lazily, only when a file argument is `-`.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let mut input = String::new();
    let stdin_text = if uses_stdin(&cli.command) {
        if let Err(e) = stdin.read_to_string(&mut input) {
            let _ = writeln!(stderr, "error: reading standard input: {e}");
            return 1;
        }
        Some(input)
    } else {
        None
    };
    let mut cx = Context {
        cap: cli.cap,
        stdin: stdin_text,
    };
    match execute(cli.command, &mut cx) {
        Ok(outcome) => {
            let written = match &outcome.output {
                Output::Json(v) => writeln!(stdout, "{v}"),
                Output::Text(t) => write!(stdout, "{t}"),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: writing output: {e}");
                return 1;
            }
            match outcome.violation {
                Some(why) => {
                    let _ = writeln!(stderr, "{why}");
                    2
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn uses_stdin(command: &Command) -> bool {
    let paths: Vec<&PathBuf> = match command {
        Command::CheckPi { file }
        | Command::Plottize { file }
        | Command::Support { file }
        | Command::Basement { file }
        | Command::Socle { file }
        | Command::Geometry { file }
        | Command::FromGeometry { file }
        | Command::Pieces { file }
        | Command::Rationalize { file }
        | Command::Shuffle { file }
        | Command::Melange { file }
        | Command::Segment { file }
        | Command::Hull { file }
        | Command::IsConvex { file }
        | Command::Dot { file } => vec![file],
        Command::Join { left, right }
        | Command::Meet { left, right }
        | Command::Sum { left, right }
        | Command::Product { left, right } => vec![left, right],
        Command::VerifyRat { order, map, choice } => vec![order, map, choice],
        Command::Image { map, file }
        | Command::Preimage { map, file }
        | Command::Extend { map, file } => vec![map, file],
        Command::Correspond { h, phi, psi, f } => vec![h, phi, psi, f],
        Command::Enumerate { ground, .. } => vec![ground],
    };
    paths.iter().any(|p| p.as_os_str() == "-")
}
