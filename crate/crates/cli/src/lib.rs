//! Front end for `polar-core`: expression parsing, subcommands, JSON and SVG.
//!
//! Exit codes: 0 on success, 1 when the input violates a precondition of the
//! requested computation, 2 when the input cannot be read or parsed. Every
//! failure prints `{"error": ...}`.

pub mod expr;
pub mod json;
pub mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use polar_core::branch::{
    abhyankar_moh_pencil, associated_diagram, irreducibility_test, milnor_from_sequence, transverse_generators,
    z_test, z_violation, Verdict, ZSequence,
};
use polar_core::diagram::{diagram_of, mu_of_diagram, nondegenerate_test};
use polar_core::jacobian::jacobian_polygon;
use polar_core::kuolu::{ball_invariant, build_tree, contact_matrix, tree_invariants, tree_polygon};
use polar_core::multibranch::{
    equisingular_compare, eta_formula, h_collection_compare, milnor_additivity, pair_equisingular_compare,
    pencil_test, polar_set, BranchFamily,
};
use polar_core::nondegenerate::newton_route_polygon;
use polar_core::{BivariatePolynomial, JacobianPolygon, NewtonDiagram};
use serde_json::{json, Value};

pub use expr::{parse, parse_in, ParseError, PolynomialExpression};

#[derive(Parser, Debug)]
#[command(name = "polar", version, about = "Invariants of plane curve singularities")]
struct Cli {
    /// Emit JSON (the only output format; accepted for explicitness).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Newton diagram of a polynomial.
    Diagram {
        expr: String,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Kouchnirenko number of the Newton diagram and the nondegeneracy flag.
    Mu { expr: String },
    /// Milnor number of a Y-distinguished squarefree polynomial.
    Milnor { expr: String },
    /// Jacobian Newton polygon from the discriminant.
    Jnp {
        expr: String,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Jacobian Newton polygon read off the Newton diagram (nondegenerate input).
    JnpNewton {
        expr: String,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Irreducibility verdict with the semigroup of a branch.
    Irreducible { expr: String },
    /// Checks a generator sequence and reports its diagram and pencil data.
    Zseq {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<u64>,
    },
    /// Contact tree and polar invariants from a roots or contacts file.
    Tree { file: PathBuf },
    /// Polar set and eta of a branch family file.
    Family {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        pencil: Option<u64>,
        #[arg(long, value_name = "FILE")]
        against: Option<PathBuf>,
    },
}

/// Exit code and the text written to standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

enum Failure {
    Precondition(String),
    Input(Value),
}

impl From<polar_core::Error> for Failure {
    fn from(e: polar_core::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(json!({ "error": e.message, "position": e.position }))
    }
}

impl From<json::DecodeError> for Failure {
    fn from(e: json::DecodeError) -> Self {
        match e {
            json::DecodeError::Schema(s) => Failure::Input(json!({ "error": s.0 })),
            json::DecodeError::Rejected(e) => e.into(),
        }
    }
}

type Outcome = Result<Value, Failure>;

pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output { code: 0, stdout: e.to_string() },
                _ => Output { code: 2, stdout: json!({ "error": e.to_string().trim_end() }).to_string() + "\n" },
            };
        }
    };
    let (code, value) = match execute(cli.command) {
        Ok(v) => (0, v),
        Err(Failure::Precondition(msg)) => (1, json!({ "error": msg })),
        Err(Failure::Input(v)) => (2, v),
    };
    Output { code, stdout: value.to_string() + "\n" }
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Diagram { expr, svg } => {
            let d = diagram_of(&parse(&expr)?)?;
            write_svg(svg.as_deref(), &d)?;
            Ok(json::diagram(&d))
        }
        Command::Mu { expr } => {
            let f = parse(&expr)?;
            let d = diagram_of(&f)?;
            Ok(json!({ "mu": json::rational(&mu_of_diagram(&d)), "nondegenerate": nondegenerate_test(&f)? }))
        }
        Command::Milnor { expr } => Ok(json!({ "mu": polar_core::algebra::milnor_number(&parse(&expr)?)? })),
        Command::Jnp { expr, svg } => polygon_output(jacobian_polygon(&parse(&expr)?)?, svg.as_deref()),
        Command::JnpNewton { expr, svg } => polygon_output(newton_route_polygon(&parse(&expr)?)?, svg.as_deref()),
        Command::Irreducible { expr } => irreducible(&parse(&expr)?),
        Command::Zseq { generators } => zseq(&generators),
        Command::Tree { file } => tree(&read_json(&file)?),
        Command::Family { file, pencil, against } => family(&file, pencil, against.as_deref()),
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(json!({ "error": format!("cannot read {}: {e}", path.display()) })))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(json!({ "error": format!("{} is not valid JSON: {e}", path.display()) })))
}

fn write_svg(path: Option<&Path>, d: &NewtonDiagram) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, svg::render(d))
            .map_err(|e| Failure::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn polygon_output(p: JacobianPolygon, svg: Option<&Path>) -> Outcome {
    write_svg(svg, p.polygon())?;
    Ok(json::polygon(&p))
}

fn irreducible(f: &BivariatePolynomial) -> Outcome {
    Ok(match irreducibility_test(f)? {
        Verdict::Irreducible(b) => json!({
            "irreducible": true,
            "sequence": b.generators(),
            "semigroup": transverse_generators(&b),
            "mu": milnor_from_sequence(&b),
        }),
        Verdict::Reducible(why) => json!({ "irreducible": false, "reason": why.to_string() }),
    })
}

fn zseq(b: &[u64]) -> Outcome {
    if !z_test(b)? {
        let reason = z_violation(b).map(|v| v.to_string()).unwrap_or_default();
        return Ok(json!({ "valid": false, "reason": reason }));
    }
    let s = ZSequence::new(b.to_vec())?;
    let (diagram, am, eta) = if s.h() == 0 {
        (Value::Null, Value::Null, Value::Null)
    } else {
        let pencil = abhyankar_moh_pencil(&s)?;
        (json::diagram(&associated_diagram(&s)?), Value::Bool(pencil.am), json::rational(&pencil.eta))
    };
    Ok(json!({
        "valid": true,
        "sequence": s.generators(),
        "e": s.e(),
        "n": s.n(),
        "mu": milnor_from_sequence(&s),
        "am": am,
        "eta": eta,
        "diagram": diagram,
    }))
}

fn tree(input: &Value) -> Outcome {
    let m = match json::decode_tree(input)? {
        json::TreeInput::Roots(roots) => contact_matrix(&roots)?,
        json::TreeInput::Contacts(m) => m,
    };
    let t = build_tree(&m);
    let q: Vec<_> = (0..t.balls().len()).map(|i| ball_invariant(&t, i).ok()).collect();
    let invariants: Vec<Value> =
        tree_invariants(&t)?.iter().map(|e| json!({ "q": json::rational(&e.q), "m": e.multiplicity })).collect();
    Ok(json!({
        "balls": json::tree(&t, &q),
        "invariants": invariants,
        "polygon": json::polygon(&tree_polygon(&t)?),
    }))
}

fn family(path: &Path, pencil: Option<u64>, against: Option<&Path>) -> Outcome {
    let fam = json::decode_family(&read_json(path)?)?;
    let set = polar_set(&fam)?;
    let eta = eta_formula(&fam)?;
    let mus: Vec<u64> = fam.branches().iter().map(|b| b.milnor_number()).collect();
    let mut out = json!({
        "polar_set": set.iter().map(json::rational).collect::<Vec<_>>(),
        "eta": json::rational(&eta),
        "mu": milnor_additivity(&fam, &mus)?,
    });
    if let Some(n) = pencil {
        let o = pencil_test(&set, &eta, n)?;
        out["pencil"] = json!({ "n": n, "off_origin": o.off_origin, "everywhere": o.everywhere });
    }
    if let Some(other) = against {
        let other: BranchFamily = json::decode_family(&read_json(other)?)?;
        out["against"] = json!({
            "equisingular": equisingular_compare(&fam, &other),
            "pair_equisingular": pair_equisingular_compare(&fam, &other),
            "h_collection": h_collection_compare(&fam, &other).ok(),
        });
    }
    Ok(out)
}
