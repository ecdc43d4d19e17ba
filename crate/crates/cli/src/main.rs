//! `g2fano`: command-line front end for g2-core.
//!
//! Every command builds one JSON document (`schema_version` 1); `--format
//! text` renders the same document as indented `key: value` lines.
//! Exit codes: 0 success, 1 bad input, 2 internal failure or failed selfcheck.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use g2_core::checks::{self, Options};
use g2_core::chevalley::{root_basis_index, Element, RANK};
use g2_core::classify::{classify_element, isomorphic_cartan_points};
use g2_core::cones::build_cone_cycle;
use g2_core::omega::{default_regular_witness, torus_fixed_points};
use g2_core::rootsystem::{LengthClass, CARTAN_MATRIX};
use g2_core::weyl::{classify_point, ProjPoint};
use g2_core::{Error, Field, G2};

mod render;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "g2fano",
    version,
    about = "Exact g2 computations and automorphism groups of the fourfolds V(h)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Work over Q(sqrt(d)); scalars may then use `a+b*w` with w = sqrt(d)
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "d")]
    field: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the document here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system, Killing form, Weyl group and sextic coefficients
    Info,
    /// Automorphism group of V(h)
    Classify {
        /// 14 comma-separated scalars: h1, h2, then e_r for roots 0..11 (see `info`)
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// kappa, T4, T6 and both sextics at an element
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Weyl orbit and stabilizer of a point (u:v) of the Cartan line
    WeylOrbit {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The hexagon of cubic cones and the induced Weyl actions
    ConeCycle {
        /// Restrict to the stabilizer of this point
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Torus-fixed lines for a regular Cartan element
    FixedPoints {
        /// Defaults to h1 + 5 h2
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Whether two Cartan points give isomorphic fourfolds
    Isomorphic {
        /// Give exactly twice
        #[arg(long, allow_hyphen_values = true, num_args = 1, required = true)]
        point: Vec<String>,
    },
    /// Run every named check
    Selfcheck {
        #[arg(long, default_value_t = checks::DEFAULT_SEED)]
        seed: u64,
        /// Flip one seeded structure constant first; the Jacobi check must then fail
        #[arg(long)]
        mutate: bool,
    },
}

enum Failure {
    User(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::User(e.to_string())
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Some(d), Value::Object(b)) = (doc.as_object_mut(), body) {
        d.extend(b);
    }
    doc
}

fn info(g2: &G2) -> Value {
    let rs = g2.root_system();
    let roots: Vec<Value> = rs
        .roots()
        .iter()
        .enumerate()
        .map(|(r, root)| {
            json!({
                "index": r,
                "basis_index": root_basis_index(r),
                "root": root.to_string(),
                "length": match rs.length_class(r) { LengthClass::Long => "long", LengthClass::Short => "short" },
                "coroot": rs.coroot(*root),
            })
        })
        .collect();
    let gram = g2.invariants().killing().cartan_gram();
    let gram: Vec<Vec<String>> = gram
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    let mut basis: Vec<String> = (1..=RANK).map(|i| format!("h{i}")).collect();
    basis.extend(rs.roots().iter().map(|r| format!("e_{r}")));
    json!({
        "dim": g2.algebra().dim(),
        "rank": RANK,
        "basis": basis,
        "cartan_matrix": CARTAN_MATRIX,
        "roots": roots,
        "killing_cartan_gram": gram,
        "psi_long": g2.invariants().psi_long_form().to_string(),
        "psi_short": g2.invariants().psi_short_form().to_string(),
        "extension_coeffs": to_value(g2.invariants().coeffs()),
        "weyl_order": g2.weyl().order(),
        "structure_constants": g2.algebra().structure_constants().len(),
    })
}

fn parse_points(points: &[String], field: Field) -> Result<Vec<ProjPoint>, Failure> {
    points
        .iter()
        .map(|p| ProjPoint::parse(p, field).map_err(Failure::from))
        .collect()
}

fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    let field = Field::from_param(cli.common.field).map_err(|e| Failure::User(e.to_string()))?;
    let g2 = G2::build()?;
    let g2 = &g2;
    let doc = match &cli.command {
        Command::Info => document("info", info(g2)),
        Command::Classify { element } => {
            let x = Element::parse(element, field)?;
            let report = classify_element(g2, &x)?;
            let mut body = to_value(&report);
            body["element"] = to_value(&x);
            document("classify", body)
        }
        Command::Invariants { element } => {
            let x = Element::parse(element, field)?;
            let vals = g2.invariants().eval(g2.algebra(), &x)?;
            let mut body = json!({ "element": x, "invariants": vals });
            if x.is_cartan() {
                let p = ProjPoint::from_element(&x)?;
                body["point"] = to_value(&p);
                body["point_class"] = to_value(&classify_point(g2.invariants(), &p));
            }
            document("invariants", body)
        }
        Command::WeylOrbit { point } => {
            let p = ProjPoint::parse(point, field)?;
            let report = g2.weyl().orbit_of_point(g2.invariants(), &p);
            let mut body = to_value(&report);
            body["point"] = to_value(&p);
            document("weyl-orbit", body)
        }
        Command::ConeCycle { point } => {
            let cycle = build_cone_cycle(g2.root_system(), g2.weyl())?;
            let (indices, p) = match point {
                Some(text) => {
                    let p = ProjPoint::parse(text, field)?;
                    (g2.weyl().stabilizer_of_point(&p), Some(p))
                }
                None => ((0..g2.weyl().order()).collect(), None),
            };
            let actions: Vec<Value> = indices
                .iter()
                .map(|&i| {
                    let w = g2.weyl().element(i);
                    json!({ "weyl_index": i, "matrix": w.matrix, "action": cycle.induced_action(w) })
                })
                .collect();
            let mut body = json!({ "cycle": cycle, "actions": actions });
            if let Some(p) = p {
                body["point"] = to_value(&p);
                body["point_class"] = to_value(&classify_point(g2.invariants(), &p));
            }
            document("cone-cycle", body)
        }
        Command::FixedPoints { element } => {
            let h = match element {
                Some(text) => Element::parse(text, field)?,
                None => default_regular_witness(),
            };
            let loci = torus_fixed_points(g2, &h)?;
            let in_min = g2_core::omega::fixed_points_in_min_orbit(&loci).len();
            document(
                "fixed-points",
                json!({ "element": h, "loci": loci, "in_min_orbit": in_min }),
            )
        }
        Command::Isomorphic { point } => {
            if point.len() != 2 {
                return Err(Failure::User(format!(
                    "isomorphic needs exactly two --point values, got {}",
                    point.len()
                )));
            }
            let ps = parse_points(point, field)?;
            let iso = isomorphic_cartan_points(g2, &ps[0], &ps[1])?;
            let classes: Vec<Value> = ps
                .iter()
                .map(|p| to_value(&classify_point(g2.invariants(), p)))
                .collect();
            document(
                "isomorphic",
                json!({ "points": ps, "point_classes": classes, "isomorphic": iso }),
            )
        }
        Command::Selfcheck { seed, mutate } => {
            let report = checks::run(
                g2,
                &Options {
                    seed: *seed,
                    mutate: *mutate,
                },
            );
            let ok = report.all_passed();
            let mut body = to_value(&report);
            body["passed"] = json!(ok);
            return Ok((document("selfcheck", body), ok));
        }
    };
    Ok((doc, true))
}

fn emit(cli: &Cli, doc: &Value) -> std::io::Result<()> {
    let text = match cli.common.format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Text => render::text(doc),
    };
    match &cli.common.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((doc, ok)) => {
            if let Err(e) = emit(&cli, &doc) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                if let Some(fail) = doc["checks"]
                    .as_array()
                    .and_then(|c| c.iter().find(|c| c["passed"] == false))
                {
                    eprintln!("selfcheck failed: {fail}");
                }
                ExitCode::from(2)
            }
        }
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
