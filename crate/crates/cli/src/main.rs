use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use quadfac::extring::{
    d1_classify, d1_factorizations, d2_witness_verify, D1Class, ExtElem, Level,
};
use quadfac::factor::{ring_elasticity_lower_bound, FactorizationSet, Factorizer};
use quadfac::ideals::{
    gamma_verdict, gcd_v, is_primitive, is_superprimitive, FracIdeal, GammaVerdict,
};
use quadfac::kpoly::factor_k;
use quadfac::rpoly::{factorizations_rx, is_irreducible_rx, property_p_witness};
use quadfac::text::{parse_ideal, parse_kpoly, parse_quad, parse_rpoly};
use quadfac::{Error, RingCfg};

mod suite;

const DEFAULT_RING_NORM_BOUND: u64 = 1000;
const DEFAULT_WITNESS_NORM_BOUND: u64 = 20;
const DEFAULT_DEG_BOUND: usize = 2;

#[derive(Parser)]
#[command(
    name = "quadfac",
    version,
    about = "Factorization and elasticity in Z[sqrt(d)], Z[sqrt(d)][x] and related rings"
)]
struct Cli {
    /// Negative squarefree d with |d| <= 100; `w` denotes sqrt(d) in inputs.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = -5)]
    d: i64,
    /// Norm bound for searches (ring elasticity bound, witness coefficients).
    #[arg(long, global = true)]
    norm_bound: Option<u64>,
    /// Degree bound for witness searches.
    #[arg(long, global = true)]
    deg_bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Maximality, class number and units of Z[sqrt(d)].
    RingInfo,
    /// All irreducible factorizations of an element.
    Factor {
        #[arg(allow_hyphen_values = true)]
        elem: String,
    },
    /// Elasticity of an element, or a lower bound for the ring without one.
    Elasticity {
        #[arg(allow_hyphen_values = true)]
        elem: Option<String>,
    },
    /// All irreducible factorizations of a polynomial in R[x].
    PolyFactor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Elasticity of a polynomial in R[x].
    PolyElasticity {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Irreducibility in R[x], with a splitting certificate when reducible.
    Irr {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Factorization over the quotient field.
    Kfactor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Primitivity and superprimitivity of a polynomial.
    PspCheck {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Generator of the v-closure of (a1, ..., an), if principal.
    GcdV {
        #[arg(required = true, allow_negative_numbers = true)]
        elems: Vec<String>,
    },
    /// Condition: (BC)_v = R implies B_v principal, on one pair of ideals.
    GammaCheck { b: String, c: String },
    /// First R[x]-irreducible polynomial that splits over the quotient field.
    WitnessP,
    /// Classification and factorizations in R + xK[x].
    D1 {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Verify (pi^n + x)(pi^n - x) = pi^(2n)(1 - x^2/pi^(2n)) in R + Rx + x^2 K[x].
    D2Demo {
        #[arg(allow_hyphen_values = true)]
        pi: String,
        n: u32,
    },
    /// Run the reference battery and print a pass/fail table.
    PaperSuite,
}

fn factor_report<T: ToString>(fs: &FactorizationSet<T>, d: i64) -> Value {
    json!({
        "element": fs.element.to_string(),
        "d": d,
        "factorizations": fs
            .factorizations
            .iter()
            .map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "length_set": fs.length_set(),
        "elasticity": fs.elasticity(),
    })
}

fn run(cli: &Cli) -> Result<(Value, bool), Error> {
    let d = cli.d;
    let cfg = RingCfg::new(d)?;
    let value = match &cli.command {
        Command::RingInfo => json!({
            "d": d,
            "maximal": cfg.is_maximal(),
            "class_number": cfg.class_number(),
            "ufd": cfg.is_ufd(),
            "units": cfg.units().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        Command::Factor { elem } => {
            let x = parse_quad(elem, d)?;
            factor_report(&Factorizer::new(&cfg).factorizations(&x)?, d)
        }
        Command::Elasticity { elem: Some(elem) } => {
            let x = parse_quad(elem, d)?;
            let fs = Factorizer::new(&cfg).factorizations(&x)?;
            json!({
                "element": x.to_string(),
                "d": d,
                "length_set": fs.length_set(),
                "elasticity": fs.elasticity(),
            })
        }
        Command::Elasticity { elem: None } => {
            let bound = cli.norm_bound.unwrap_or(DEFAULT_RING_NORM_BOUND);
            let b = ring_elasticity_lower_bound(&cfg, bound)?;
            json!({
                "d": d,
                "norm_bound": bound,
                "elasticity_lower_bound": b.lower_bound,
                "argmax": b.argmax.map(|x| x.to_string()),
                "exact": false,
            })
        }
        Command::PolyFactor { poly } => {
            factor_report(&factorizations_rx(&parse_rpoly(poly, d)?)?, d)
        }
        Command::PolyElasticity { poly } => {
            let fs = factorizations_rx(&parse_rpoly(poly, d)?)?;
            json!({
                "element": fs.element.to_string(),
                "d": d,
                "length_set": fs.length_set(),
                "elasticity": fs.elasticity(),
            })
        }
        Command::Irr { poly } => {
            let f = parse_rpoly(poly, d)?;
            let v = is_irreducible_rx(&f)?;
            json!({
                "element": f.to_string(),
                "d": d,
                "irreducible": v.irreducible,
                "certificate": v.certificate.map(|c| json!({
                    "subset": c.subset,
                    "lambda": c.lambda.to_string(),
                    "g": c.g.to_string(),
                    "h": c.h.to_string(),
                })),
                "search_size": v.search_size,
            })
        }
        Command::Kfactor { poly } => {
            let f = parse_kpoly(poly, d)?;
            let kf = factor_k(&f)?;
            json!({
                "element": f.to_string(),
                "d": d,
                "unit": kf.unit.to_string(),
                "factors": kf.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "irreducible": kf.is_irreducible(),
            })
        }
        Command::PspCheck { poly } => {
            let f = parse_rpoly(poly, d)?;
            let (sp, z) = is_superprimitive(&f)?;
            json!({
                "element": f.to_string(),
                "d": d,
                "primitive": is_primitive(&f),
                "superprimitive": sp,
                "witness": z.map(|z| z.to_string()),
            })
        }
        Command::GcdV { elems } => {
            let xs = elems
                .iter()
                .map(|e| parse_quad(e, d))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = FracIdeal::from_quads(&cfg, &xs)?;
            json!({
                "elements": xs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "d": d,
                "ideal": ideal.to_string(),
                "v_closure": ideal.v_closure()?.to_string(),
                "gcd": gcd_v(&xs)?.map(|g| g.to_string()),
            })
        }
        Command::GammaCheck { b, c } => {
            let bi = parse_ideal(b, &cfg)?;
            let ci = parse_ideal(c, &cfg)?;
            let verdict = gamma_verdict(&bi, &ci)?;
            json!({
                "b": bi.to_string(),
                "c": ci.to_string(),
                "d": d,
                "bc_v": bi.mul(&ci)?.v_closure()?.to_string(),
                "verdict": match verdict {
                    GammaVerdict::Vacuous => "vacuous",
                    GammaVerdict::Holds => "holds",
                    GammaVerdict::Fails => "fails",
                },
                "holds": verdict != GammaVerdict::Fails,
            })
        }
        Command::WitnessP => {
            let max_norm = cli.norm_bound.unwrap_or(DEFAULT_WITNESS_NORM_BOUND);
            let max_deg = cli.deg_bound.unwrap_or(DEFAULT_DEG_BOUND);
            let w = property_p_witness(&cfg, max_norm, max_deg)?;
            let factors = match &w {
                Some(f) => factor_k(&f.to_kpoly())?
                    .factors
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                None => Vec::new(),
            };
            json!({
                "d": d,
                "norm_bound": max_norm,
                "deg_bound": max_deg,
                "witness": w.map(|f| f.to_string()),
                "k_factors": factors,
            })
        }
        Command::D1 { poly } => {
            let g = ExtElem::new(parse_kpoly(poly, d)?, Level::D1, &cfg)?;
            let class = d1_classify(&g)?;
            let mut out = Map::new();
            out.insert("element".into(), json!(g.poly().to_string()));
            out.insert("d".into(), json!(d));
            out.insert(
                "class".into(),
                serde_json::to_value(class).expect("plain enum"),
            );
            out.insert("prime".into(), json!(class.is_prime()));
            if !matches!(class, D1Class::Unit | D1Class::NotAtomic) {
                let fs = d1_factorizations(&g)?;
                let rep = factor_report(&fs, d);
                for key in ["factorizations", "length_set", "elasticity"] {
                    out.insert(key.into(), rep[key].clone());
                }
            }
            Value::Object(out)
        }
        Command::D2Demo { pi, n } => {
            let pi = parse_quad(pi, d)?;
            let mut v = serde_json::to_value(d2_witness_verify(&pi, *n)?).expect("plain report");
            v["d"] = json!(d);
            v
        }
        Command::PaperSuite => {
            let report = suite::run(cli.seed);
            let ok = report.iter().all(|e| e.pass);
            return Ok((
                json!({ "seed": cli.seed, "entries": report, "all_pass": ok }),
                ok,
            ));
        }
    };
    Ok((value, true))
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values serialize"),
        Format::Tsv => {
            if let Some(entries) = v.get("entries").and_then(Value::as_array) {
                let mut lines = vec!["id\tanchor\tpass\tobserved".to_string()];
                for e in entries {
                    lines.push(format!(
                        "{}\t{}\t{}\t{}",
                        tsv_cell(&e["id"]),
                        tsv_cell(&e["anchor"]),
                        if e["pass"].as_bool() == Some(true) {
                            "PASS"
                        } else {
                            "FAIL"
                        },
                        tsv_cell(&e["observed"]),
                    ));
                }
                return lines.join("\n");
            }
            match v.as_object() {
                Some(map) => map
                    .iter()
                    .map(|(k, val)| format!("{k}\t{}", tsv_cell(val)))
                    .collect::<Vec<_>>()
                    .join("\n"),
                None => tsv_cell(v),
            }
        }
    }
}

fn fail(code: &str, message: &str, status: u8) -> ExitCode {
    let err = json!({ "error": { "code": code, "message": message } });
    eprintln!("{err}");
    ExitCode::from(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            return fail("parse_error", first.trim_start_matches("error: "), 2);
        }
    };
    match run(&cli) {
        Ok((value, ok)) => {
            let mut out = std::io::stdout().lock();
            // Ignore a closed pipe, as with `| head`.
            let _ = writeln!(out, "{}", render(&value, cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(e.code(), &e.to_string(), e.exit_status() as u8),
    }
}
