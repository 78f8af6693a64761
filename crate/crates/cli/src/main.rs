use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use staircase::conjecture::{self, ClassifyOptions, Scope, DEFAULT_BUDGET};
use staircase::families::{self, FamilyKind, FamilyTag};
use staircase::hull::{self, Side};
use staircase::search::{self, SearchOptions, DEFAULT_ENUMERATION_CAP};
use staircase::tangent::{self, TangentOptions};
use staircase::{colength, parse_ideal, render, Error, MonomialIdeal, Result};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "staircase",
    version,
    about = "Tangent dimensions of Hilbert schemes of points at monomial ideals"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Number of variables of the polynomial ring.
    #[arg(long, global = true, default_value_t = 3)]
    nvars: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tangent dimension and colength of an ideal.
    Tangent {
        ideal: String,
        #[arg(long, value_enum, default_value_t = Method::Graded)]
        method: Method,
    },
    /// Colength of an ideal.
    Colength { ideal: String },
    /// Necessary conditions for maximality.
    #[command(subcommand)]
    Check(Check),
    /// Type classification by convex-hull conditions.
    Classify {
        ideal: String,
        /// Candidate family used by the boundary-maximality conditions.
        #[arg(long, default_value = "borel-colength")]
        scope: Scope,
        /// Also run the unrestricted boundary-maximality search.
        #[arg(long)]
        unrestricted: bool,
        /// Evaluate every condition even after a cheaper one fails.
        #[arg(long)]
        evaluate_all: bool,
        /// Node budget of the unrestricted search.
        #[arg(long, env = "STAIRCASE_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Members of the explicit ideal families.
    Family {
        #[arg(long)]
        kind: FamilyTag,
        /// `k`, or `j` for STAR.
        #[arg(long = "k")]
        param: u32,
        #[arg(long, value_enum, default_value_t = FamilyEmit::Ideal)]
        emit: FamilyEmit,
    },
    /// Convex hull of the generator exponents.
    Hull {
        ideal: String,
        #[arg(long, value_enum)]
        emit: Option<HullEmit>,
    },
    /// Certified maximum tangent dimension at a colength.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        borel_only: bool,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Recomputed table of maximal examples.
    Table {
        #[arg(long = "max")]
        max: usize,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Number of ideals of a colength.
    Count {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Smallest pure power against the colength bracket.
    Necessary { ideal: String },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    workers: Option<usize>,
    /// Directory of the resumable tangent cache.
    #[arg(long, env = search::CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Largest colength accepted by the enumerator.
    #[arg(long, env = "STAIRCASE_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

impl ScanArgs {
    fn options(&self, borel_only: bool) -> SearchOptions {
        SearchOptions {
            borel_only,
            cap: self.cap,
            workers: self.workers,
            cache_dir: self.cache.clone(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Graded,
    Dense,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyEmit {
    Ideal,
    Json,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum HullEmit {
    Off,
}

/// Text and JSON forms of one command's result.
struct Output {
    text: String,
    json: Value,
}

fn envelope(command: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    body
}

fn require_three(nvars: usize) -> Result<()> {
    if nvars == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(nvars))
    }
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({ "text": render(i), "generators": i.generators() })
}

fn run(cli: Cli) -> Result<Output> {
    let nvars = cli.nvars;
    let parse = |s: &str| parse_ideal(s, nvars);
    Ok(match cli.command {
        Command::Tangent { ideal, method } => {
            let i = parse(&ideal)?;
            let n = colength(&i)?;
            let t = match method {
                Method::Graded => {
                    tangent::tangent_dimension_with(&i, TangentOptions::default())?.dimension
                }
                Method::Dense => tangent::tangent_dimension_dense(&i)?,
            };
            Output {
                text: format!("T = {t}\ncolength = {n}"),
                json: envelope(
                    "tangent",
                    json!({ "ideal": ideal_json(&i), "colength": n, "tangent": t }),
                ),
            }
        }
        Command::Colength { ideal } => {
            let i = parse(&ideal)?;
            let n = colength(&i)?;
            Output {
                text: n.to_string(),
                json: envelope(
                    "colength",
                    json!({ "ideal": ideal_json(&i), "colength": n }),
                ),
            }
        }
        Command::Check(Check::Necessary { ideal }) => {
            let i = parse(&ideal)?;
            let r = conjecture::check_necessary(&i)?;
            Output {
                text: format!(
                    "colength {} bracket k = {} smallest pure power {}: {}",
                    r.n,
                    r.k,
                    r.m1,
                    if r.passes { "pass" } else { "fail" }
                ),
                json: envelope(
                    "check necessary",
                    json!({ "ideal": ideal_json(&i), "report": r }),
                ),
            }
        }
        Command::Classify {
            ideal,
            scope,
            unrestricted,
            evaluate_all,
            budget,
        } => {
            require_three(nvars)?;
            let i = parse(&ideal)?;
            let opts = ClassifyOptions {
                budget,
                scope,
                unrestricted,
                evaluate_all,
            };
            let r = conjecture::classify_type_with(&i, opts)?;
            let mut text = format!("type {}\nm = {:?} n = {} k = {}\n", r.label, r.m, r.n, r.k);
            for (name, c) in r.hypotheses.iter().chain(&r.conditions) {
                text.push_str(&format!("  {name:<22} {:?}  {}\n", c.status, c.detail));
            }
            for m in &r.maxima {
                let all = m.all.map_or("-".to_string(), |v| v.to_string());
                text.push_str(&format!(
                    "  max {:?}: own {} all {} borel {} borel-colength {}\n",
                    m.region, m.count, all, m.borel, m.borel_colength
                ));
            }
            Output {
                text: text.trim_end().to_string(),
                json: envelope(
                    "classify",
                    json!({ "ideal": ideal_json(&i), "scope": scope, "report": r }),
                ),
            }
        }
        Command::Family { kind, param, emit } => {
            require_three(nvars)?;
            let kd = FamilyKind::new(kind, param)?;
            let i = families::family_ideal(kd)?;
            let body = json!({
                "kind": kd.tag,
                "param": kd.param,
                "ideal": ideal_json(&i),
                "predicted_colength": families::predicted_colength(kd)?,
                "predicted_tangent": families::predicted_tangent(kd)?,
            });
            match emit {
                FamilyEmit::Off => {
                    let off = hull::export_off(&hull::ideal_hull(&i)?)?;
                    Output {
                        json: envelope("family", json!({ "off": off })),
                        text: off.trim_end().to_string(),
                    }
                }
                FamilyEmit::Json => {
                    let j = envelope("family", body);
                    Output {
                        text: serde_json::to_string_pretty(&j)?,
                        json: j,
                    }
                }
                FamilyEmit::Ideal => Output {
                    text: render(&i),
                    json: envelope("family", body),
                },
            }
        }
        Command::Hull { ideal, emit } => {
            require_three(nvars)?;
            let i = parse(&ideal)?;
            let h = hull::ideal_hull(&i)?;
            match emit {
                Some(HullEmit::Off) => {
                    let off = hull::export_off(&h)?;
                    Output {
                        json: envelope("hull", json!({ "off": off })),
                        text: off.trim_end().to_string(),
                    }
                }
                None => {
                    let count = |side| h.boundary(side).map(|f| f.len()).unwrap_or(0);
                    let (lower, upper) = (count(Side::Lower), count(Side::Upper));
                    Output {
                        text: format!(
                            "dimension {}\nvertices {}\nfacets {} (lower {lower}, upper {upper})\nedges {}\ninterior generators {}",
                            h.dim,
                            h.vertices.len(),
                            h.facets.len(),
                            h.edge_count(),
                            h.interior_points().len()
                        ),
                        json: envelope(
                            "hull",
                            json!({
                                "ideal": ideal_json(&i),
                                "dim": h.dim,
                                "vertices": h.vertices,
                                "facets": h.facets,
                                "lower_facets": lower,
                                "upper_facets": upper,
                                "edges": h.edge_count(),
                                "interior_generators": h.interior_points(),
                            }),
                        ),
                    }
                }
            }
        }
        Command::Search {
            n,
            borel_only,
            scan,
        } => {
            require_three(nvars)?;
            let r = search::max_tangent_with(n, &scan.options(borel_only))?;
            eprintln!("scanned {} ideals in {} ms", r.ideals_scanned, r.elapsed_ms);
            let mut text = format!(
                "colength {n}: max T = {} over {} ideals{}\nargmax ({}):",
                r.max_tangent,
                r.ideals_scanned,
                if borel_only { " (Borel-fixed)" } else { "" },
                r.argmax.len()
            );
            for i in &r.argmax {
                text.push_str(&format!("\n  {}", render(i)));
            }
            let argmax: Vec<Value> = r.argmax.iter().map(ideal_json).collect();
            Output {
                text,
                json: envelope(
                    "search",
                    json!({
                        "n": r.n,
                        "max_tangent": r.max_tangent,
                        "argmax": argmax,
                        "ideals_scanned": r.ideals_scanned,
                        "borel_only": r.borel_only,
                    }),
                ),
            }
        }
        Command::Table { max, scan } => {
            require_three(nvars)?;
            let rows = search::reproduce_table_with(max, &scan.options(false))?;
            let mut text =
                String::from(" n  kind         max  argmax  listed T      match  labels");
            let mut out = Vec::new();
            for r in &rows {
                let mut labels = r.type_labels.clone();
                labels.sort();
                labels.dedup();
                text.push_str(&format!(
                    "\n{:>2}  {:<11} {:>4}  {:>6}  {:<12}  {:<5}  {}",
                    r.n,
                    format!("{:?}", r.kind),
                    r.computed_max,
                    r.computed_argmax.len(),
                    format!("{:?}", r.listed_tangents),
                    r.matches,
                    labels.join(" ")
                ));
                out.push(json!({
                    "n": r.n,
                    "kind": r.kind,
                    "listed_ideals": r.listed_ideals.iter().map(ideal_json).collect::<Vec<_>>(),
                    "listed_tangents": r.listed_tangents,
                    "computed_max": r.computed_max,
                    "computed_argmax": r.computed_argmax.iter().map(ideal_json).collect::<Vec<_>>(),
                    "type_labels": r.type_labels,
                    "match": r.matches,
                }));
            }
            Output {
                text,
                json: envelope("table", json!({ "rows": out })),
            }
        }
        Command::Count { n } => {
            require_three(nvars)?;
            if n > 100 {
                return Err(Error::InvalidParam {
                    kind: "count".into(),
                    param: n as u32,
                });
            }
            let c = search::count_ideals(n) as u64;
            Output {
                text: c.to_string(),
                json: envelope("count", json!({ "n": n, "count": c })),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(out) => {
            let body = if as_json {
                serde_json::to_string(&out.json).expect("serializable output")
            } else {
                out.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
