mod verify;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use preproj::dynkin::{DynkinType, ExtDynkinType};
use preproj::intersection::{intersection_matrix, smooth_resolution};
use preproj::knitting::{extract_maps, knit, render_pattern, MapExtraction, MapSearch};
use preproj::pathalg::{graded_dims_pi, hom_matrix_from};
use preproj::singularity::{descriptor, q_lambda_decompose, translation_permutation};
use preproj::typea::{presentation, type_a_sequence, TypeASequence};
use preproj::weights::{quasi_dominantize, Weight};
use preproj::{FieldElem, Result};
use serde::Serialize;
use serde_json::{json, Value};

use verify::Suite;

#[derive(Parser)]
#[command(name = "preproj", version, about = "Deformed preprojective algebras of extended Dynkin quivers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Include the knitting pattern as ASCII art.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct TypeWeight {
    /// Extended type, e.g. ~A5, ~D6, ~E8.
    #[arg(long = "type")]
    ty: ExtDynkinType,
    /// Comma-separated weight λ_0,…,λ_n; entries are rationals like -1/2.
    #[arg(long, allow_hyphen_values = true)]
    weights: Weight,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose Q_λ into Dynkin components and the translation permutation.
    Decompose {
        #[command(flatten)]
        tw: TypeWeight,
        /// Move λ into the quasi-dominant region first.
        #[arg(long)]
        quasi_dominantize: bool,
    },
    /// Knit from vertex 0 and the set S down to a target vertex.
    Knit {
        #[arg(long = "type")]
        ty: ExtDynkinType,
        #[arg(long = "S", value_delimiter = ',', required = true)]
        s: Vec<usize>,
        #[arg(long)]
        target: usize,
        /// Also read off and certify the maps of the sequence.
        #[arg(long)]
        maps: bool,
    },
    /// Graded dimensions and Hom matrix of Π(Q) for a Dynkin type.
    Dims {
        /// Dynkin type, e.g. A4, D5, E7.
        #[arg(long = "type")]
        ty: DynkinType,
    },
    /// Intersection matrix of the simples.
    Intersect {
        #[arg(long = "type")]
        ty: ExtDynkinType,
    },
    /// Reflections carrying ε_0 to a weight with all λ_i > 0 for i ≥ 1.
    Resolve {
        #[arg(long = "type")]
        ty: ExtDynkinType,
    },
    /// Presentation of O^λ in type Ã by x, y, z.
    Presentation {
        #[command(flatten)]
        tw: TypeWeight,
        /// Also describe the sequence 0 → V_k → V_i ⊕ V_j → V_{i+j−k} → 0.
        #[arg(long, value_delimiter = ',', num_args = 1, value_names = ["I,J,K"])]
        sequence: Option<Vec<usize>>,
    },
    /// Run the fixture suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Degree cap for ideal membership.
        #[arg(long, default_value_t = 24)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn matrix_text<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn decompose(tw: &TypeWeight, normalize: bool) -> Result<Output> {
    let (lambda, reflections) = if normalize {
        quasi_dominantize(tw.ty, &tw.weights)?
    } else {
        (tw.weights.clone(), Vec::new())
    };
    let d = q_lambda_decompose(tw.ty, &lambda)?;
    let desc = descriptor(&d);
    let perm = translation_permutation(&d);
    let json = json!({
        "type": tw.ty,
        "weight": lambda,
        "reflections": reflections,
        "i_lambda": d.i_lambda,
        "components": d.components,
        "descriptor": desc,
        "translation": perm,
    });
    let mut text = String::new();
    if normalize {
        let _ = writeln!(text, "quasi-dominant weight: ({lambda}) via reflections {reflections:?}");
    }
    let _ = writeln!(text, "I_lambda: {:?}", d.i_lambda);
    for c in &d.components {
        let _ = writeln!(text, "component {} on {:?}", c.ty, c.vertices);
    }
    let _ = writeln!(text, "descriptor: {desc}");
    let maps: Vec<String> = perm.map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    let _ = write!(text, "translation: {}", maps.join(" "));
    Ok(Output { json, text, ok: true })
}

fn maps_text(m: &MapExtraction) -> String {
    match &m.search {
        MapSearch::Certified { psi, phi, certificates, .. } => {
            let mut t = String::new();
            for (k, s) in m.summands.iter().enumerate() {
                let _ = writeln!(t, "V{}: phi = {}, psi = {}", s.vertex, phi[k], psi[k]);
            }
            let _ = write!(t, "psi.phi = 0 certified ({} entries)", certificates.len());
            t
        }
        MapSearch::Unresolved { tried } => format!("no sign pattern found among {tried} tried"),
    }
}

fn knit_cmd(ty: ExtDynkinType, s: &[usize], target: usize, maps: bool, ascii: bool) -> Result<Output> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    let r = knit(ty, &set, target)?;
    let mut json = to_value(&r);
    let middle: Vec<String> = r.middle().iter().map(|v| format!("V{v}")).collect();
    let mut text = format!(
        "0 -> V{} -> {} -> V{} -> 0\nmultiplicities: {}",
        r.kernel,
        middle.join(" + "),
        r.target,
        r.multiplicities
            .iter()
            .map(|(v, a)| format!("{v}:{a}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let mut ok = true;
    if ascii {
        let art = render_pattern(&r.pattern);
        json["ascii"] = Value::String(art.clone());
        text.push('\n');
        text.push_str(&art);
    }
    if maps {
        let m = extract_maps(&r)?;
        ok = matches!(m.search, MapSearch::Certified { .. });
        json["maps"] = to_value(&m);
        text.push('\n');
        text.push_str(&maps_text(&m));
    }
    Ok(Output { json, text, ok })
}

fn dims_cmd(ty: DynkinType) -> Output {
    let g = graded_dims_pi(ty);
    let h = hom_matrix_from(&g);
    let json = json!({
        "type": ty,
        "total": g.total,
        "by_degree": g.by_degree,
        "vertex_modules": h.row_sums(),
        "hom_matrix": h.h,
    });
    let text = format!(
        "dim = {}\nby degree: {:?}\nU: {:?}\nH:\n{}",
        g.total,
        g.by_degree,
        h.row_sums(),
        matrix_text(&h.h)
    );
    Output { json, text, ok: true }
}

fn intersect_cmd(ty: ExtDynkinType) -> Result<Output> {
    let g = intersection_matrix(ty)?;
    let text = format!("vertices: {:?}\n{}", g.vertices, matrix_text(&g.matrix));
    Ok(Output {
        json: to_value(&g),
        text,
        ok: true,
    })
}

fn resolve_cmd(ty: ExtDynkinType) -> Result<Output> {
    let r = smooth_resolution(ty)?;
    let text = format!(
        "mu = ({})\nreflections: {:?}\nintersection matrix:\n{}",
        r.mu,
        r.reflections,
        matrix_text(&r.intersection.matrix)
    );
    Ok(Output {
        json: to_value(&r),
        text,
        ok: true,
    })
}

fn linear(s: &FieldElem, sign: char) -> String {
    if *s == FieldElem::from_int(0) {
        "z".into()
    } else if s.is_real() && s.is_negative() {
        let flip = if sign == '+' { '-' } else { '+' };
        format!("(z {flip} {})", -s.clone())
    } else if s.is_real() {
        format!("(z {sign} {s})")
    } else {
        format!("(z {sign} ({s}))")
    }
}

fn presentation_cmd(tw: &TypeWeight, seq: Option<&[usize]>) -> Result<Output> {
    if tw.ty.family() != preproj::dynkin::Family::A {
        return Err(preproj::Error::UnsupportedType(format!(
            "presentation is only available for ~A types, got {}",
            tw.ty
        )));
    }
    let n = tw.ty.rank();
    let p = presentation(n, &tw.weights)?;
    let relations = vec![
        format!("xy = {}", p.xy),
        format!("yx = {}", p.yx),
        format!("xz = {}x", linear(&p.shift, '+')),
        format!("yz = {}y", linear(&p.shift, '-')),
    ];
    let mut json = to_value(&p);
    json["relations"] = to_value(&relations);
    let mut text = relations.join("\n");
    if let Some(v) = seq {
        let [i, j, k] = v else {
            return Err(preproj::Error::Precondition(
                "--sequence takes exactly three indices i,j,k".into(),
            ));
        };
        let s: TypeASequence = type_a_sequence(n, &tw.weights, *i, *j, *k)?;
        json["sequence"] = to_value(&s);
        text.push('\n');
        text.push_str(&s.to_string());
    }
    Ok(Output { json, text, ok: true })
}

fn verify_cmd(suite: Suite, cap: usize, seed: u64) -> Output {
    let r = verify::run(suite, cap, seed);
    let mut text = String::new();
    for f in &r.fixtures {
        let tag = match f.status {
            verify::Status::Pass => "PASS",
            verify::Status::Corrected => "CORRECTED",
            verify::Status::Fail => "FAIL",
        };
        let _ = writeln!(text, "{tag:<9} {}  {}", f.id, f.detail);
    }
    let _ = write!(
        text,
        "{} passed, {} passed after documented corrections, {} failed",
        r.passed, r.corrected, r.failed
    );
    Output {
        ok: r.ok(),
        json: to_value(&r),
        text,
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Decompose { tw, quasi_dominantize } => decompose(tw, *quasi_dominantize),
        Command::Knit { ty, s, target, maps } => knit_cmd(*ty, s, *target, *maps, cli.ascii),
        Command::Dims { ty } => Ok(dims_cmd(*ty)),
        Command::Intersect { ty } => intersect_cmd(*ty),
        Command::Resolve { ty } => resolve_cmd(*ty),
        Command::Presentation { tw, sequence } => presentation_cmd(tw, sequence.as_deref()),
        Command::Verify { suite, cap, seed } => Ok(verify_cmd(*suite, *cap, *seed)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match dispatch(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
