//! `semipair` command-line front end. Exit codes: 0 affirmative, 2 negative
//! verdict with a witness in the payload, 1 input or precondition error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semipair::binaryforms::{
    chow_polytope_vertices, disc_polytope_vertices, discriminant, ord_profile, resultant,
    scaled_containment_check, sl2_pair_violation, textbook_discriminant, BinaryForm,
};
use semipair::energy::{asymptotic_slope, energy_along_1ps, log_grid, NormKind, PairNorms};
use semipair::fixtures::{run_example, EXAMPLES};
use semipair::io::{
    complex_from_json, envelope, pair_from_json, parse_json, points_from_json, vector_from_json,
};
use semipair::koszul::{
    discriminant_h0, koszul_resultant, resultant_h0, torsion, weighted_euler_degree,
};
use semipair::lattice::Cocharacter;
use semipair::pairs::{characteristic, futaki_gen, nss_check, nss_fixed_torus, Pair};
use semipair::rational::format;
use semipair::toric::{extension_criterion, Extension, ToricData};
use semipair::Error;

#[derive(Parser)]
#[command(
    name = "semipair",
    version,
    about = "Semistable pairs: numerical criteria, resultants and torsion"
)]
struct Cli {
    /// Seed for every random choice (ChaCha8).
    #[arg(long, global = true, env = "SEMIPAIR_SEED", default_value_t = 0)]
    seed: u64,
    /// Random conjugate tori tested after the diagonal one.
    #[arg(long, global = true, default_value_t = 32)]
    samples: usize,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical semistability of a pair read from JSON.
    PairCheck {
        /// Pair JSON (`{"v": ..., "w": ...}`); `-` reads stdin.
        input: PathBuf,
    },
    /// Exact SL(2) decision for a pair of binary forms.
    PairCheckSl2 {
        /// Coefficients of f, low to high, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Coefficients of g, low to high, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// `futaki_gen(p, u)` for a pair and a cocharacter.
    Futaki {
        input: PathBuf,
        /// Cocharacter, comma separated, summing to zero.
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// Characteristic, height and `h` of a weighted vector.
    Characteristic { input: PathBuf },
    /// Energy along a one-parameter subgroup.
    EnergyProfile {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, default_value_t = 1e-6)]
        t_min: f64,
        #[arg(long, default_value_t = 4)]
        per_decade: usize,
        #[arg(long, value_enum, default_value_t = Norm::Orthonormal)]
        norm: Norm,
        /// Emit `t,log_t2,nu` rows instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Whether the map `X_A ⇢ X_B` extends; input `{"a": [...], "b": [...]}`.
    ToricExtend { input: PathBuf },
    /// Sylvester resultant of two binary forms.
    Resultant {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Discriminant `Res(P, P')` and the normalized discriminant.
    Discriminant {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Vertices of the Chow polytope of `d` points on the line.
    ChowPolytope {
        #[arg(long)]
        d: usize,
    },
    /// Vertices of the discriminant polytope in degree `d`.
    DiscPolytope {
        #[arg(long)]
        d: usize,
    },
    /// Scaled containment of the resultant polytope in the discriminant polytope.
    ScaledContainment {
        #[arg(long)]
        d: usize,
    },
    /// Torsion of an exact complex; input `{"dims": [...], "maps": [...]}`.
    Torsion { input: PathBuf },
    /// Resultant as the torsion of the Koszul complex twisted by `m`.
    KoszulResultant {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        m: i64,
    },
    /// Weighted Euler characteristic `Σ (-1)^{j+1} j h⁰_j`.
    EulerDegree {
        /// Explicit `h⁰` list, comma separated.
        #[arg(long, conflicts_with_all = ["kind", "d", "m"])]
        h0: Option<String>,
        #[arg(long, value_enum, requires_all = ["d", "m"])]
        kind: Option<Kind>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Worked examples as JSON.
    Examples {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLES))]
        name: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Norm {
    Orthonormal,
    Bombieri,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Resultant,
    Discriminant,
}

enum Output {
    Json(Value, bool),
    Text(String),
}

fn read_json(path: &PathBuf) -> Result<Value, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Invalid(e.to_string()))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    }
    parse_json(&text)
}

fn read_pair(path: &PathBuf) -> Result<Pair, Error> {
    pair_from_json(&read_json(path)?)
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

fn parse_cocharacter(s: &str) -> Result<Cocharacter, Error> {
    Cocharacter::new(parse_ints(s)?)
}

fn form_json(f: &BinaryForm) -> Value {
    json!(f.coeffs().iter().map(format).collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let ok = |v: Value| Ok(Output::Json(v, true));
    match &cli.command {
        Command::PairCheck { input } => {
            let p = read_pair(input)?;
            let verdict = nss_check(&p, cli.samples, cli.seed)?;
            let negative = verdict.is_unstable();
            let body = json!({
                "samples": cli.samples,
                "seed": cli.seed,
                "fixed_torus": nss_fixed_torus(&p)?,
                "verdict": serde_json::to_value(&verdict).map_err(|e| Error::Invalid(e.to_string()))?,
            });
            Ok(Output::Json(envelope("pair-check", &body)?, !negative))
        }
        Command::PairCheckSl2 { f, g } => {
            let (f, g) = (BinaryForm::parse(f)?, BinaryForm::parse(g)?);
            let p = Pair::new(f.to_vector(), g.to_vector())?;
            let violation = sl2_pair_violation(&f, &g);
            let verdict = nss_check(&p, cli.samples, cli.seed)?;
            let body = json!({
                "f": form_json(&f),
                "g": form_json(&g),
                "semistable": violation.is_none(),
                "violation": violation,
                "ord_f": ord_profile(&f),
                "ord_g": ord_profile(&g),
                "verdict": verdict,
            });
            Ok(Output::Json(
                envelope("pair-check-sl2", &body)?,
                !verdict.is_unstable(),
            ))
        }
        Command::Futaki { input, u } => {
            let p = read_pair(input)?;
            let u = parse_cocharacter(u)?;
            let f = futaki_gen(&p, &u)?;
            ok(envelope(
                "futaki",
                &json!({ "cocharacter": u, "futaki_gen": f }),
            )?)
        }
        Command::Characteristic { input } => {
            let v = vector_from_json(&read_json(input)?)?;
            ok(envelope("characteristic", &characteristic(&v)?)?)
        }
        Command::EnergyProfile {
            input,
            u,
            t_min,
            per_decade,
            norm,
            csv,
        } => {
            let p = read_pair(input)?;
            let u = parse_cocharacter(u)?;
            let kind = match norm {
                Norm::Orthonormal => NormKind::WeightOrthonormal,
                Norm::Bombieri => NormKind::Bombieri,
            };
            let h = PairNorms::with_kind(&p, kind)?;
            let profile = energy_along_1ps(&p, &u, &log_grid(*t_min, *per_decade)?, &h)?;
            if *csv {
                return Ok(Output::Text(profile.to_csv()));
            }
            let body = json!({
                "profile": profile,
                "slope": asymptotic_slope(&profile)?,
                "futaki_gen": futaki_gen(&p, &u)?,
            });
            ok(envelope("energy-profile", &body)?)
        }
        Command::ToricExtend { input } => {
            let v = read_json(input)?;
            let field = |k: &str| {
                v.get(k)
                    .ok_or_else(|| Error::Parse(format!("missing field {k:?}")))
            };
            let data = ToricData::new(
                points_from_json(field("a")?)?,
                points_from_json(field("b")?)?,
            )?;
            let result = extension_criterion(&data)?;
            let extends = matches!(result, Extension::Extends);
            Ok(Output::Json(
                envelope(
                    "toric-extend",
                    &json!({ "data": data, "extension": result }),
                )?,
                extends,
            ))
        }
        Command::Resultant { f, g } => {
            let (f, g) = (BinaryForm::parse(f)?, BinaryForm::parse(g)?);
            ok(envelope(
                "resultant",
                &json!({ "resultant": format(&resultant(&f, &g)) }),
            )?)
        }
        Command::Discriminant { f } => {
            let f = BinaryForm::parse(f)?;
            let body = json!({
                "res_p_dp": format(&discriminant(&f)?),
                "discriminant": format(&textbook_discriminant(&f)?),
            });
            ok(envelope("discriminant", &body)?)
        }
        Command::ChowPolytope { d } => ok(envelope(
            "chow-polytope",
            &json!({ "d": d, "vertices": chow_polytope_vertices(*d)? }),
        )?),
        Command::DiscPolytope { d } => ok(envelope(
            "disc-polytope",
            &json!({ "d": d, "vertices": disc_polytope_vertices(*d)? }),
        )?),
        Command::ScaledContainment { d } => {
            let check = scaled_containment_check(*d)?;
            let holds = check.holds();
            Ok(Output::Json(
                envelope(
                    "scaled-containment",
                    &json!({ "holds": holds, "check": check }),
                )?,
                holds,
            ))
        }
        Command::Torsion { input } => {
            let c = complex_from_json(&read_json(input)?)?;
            ok(envelope(
                "torsion",
                &json!({ "dims": c.dims(), "torsion": format(&torsion(&c)?) }),
            )?)
        }
        Command::KoszulResultant { f, g, m } => {
            let (f, g) = (BinaryForm::parse(f)?, BinaryForm::parse(g)?);
            let body = json!({
                "m": m,
                "torsion": format(&koszul_resultant(&f, &g, *m)?),
                "sylvester": format(&resultant(&f, &g)),
            });
            ok(envelope("koszul-resultant", &body)?)
        }
        Command::EulerDegree { h0, kind, d, m } => {
            let h0 = match (h0, kind, d, m) {
                (Some(list), ..) => parse_ints(list)?,
                (None, Some(Kind::Resultant), Some(d), Some(m)) => resultant_h0(*d, *m),
                (None, Some(Kind::Discriminant), Some(d), Some(m)) => discriminant_h0(*d, *m),
                _ => {
                    return Err(Error::Invalid(
                        "give --h0, or --kind with --d and --m".into(),
                    ))
                }
            };
            ok(envelope(
                "euler-degree",
                &json!({ "h0": h0, "degree": weighted_euler_degree(&h0) }),
            )?)
        }
        Command::Examples { name } => ok(run_example(name, cli.samples, cli.seed)?),
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let (text, affirmative) = match out {
                Output::Json(v, a) => (
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&v).expect("values serialize")
                    ),
                    a,
                ),
                Output::Text(t) => (t, true),
            };
            if let Err(e) = emit(&cli, &text) {
                eprintln!("semipair: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            let body = json!({
                "schema": semipair::io::schema_name("error"),
                "contract": e.contract(),
                "message": e.to_string(),
            });
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&body).expect("values serialize")
            );
            ExitCode::from(1)
        }
    }
}
