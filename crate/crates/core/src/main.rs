//! Command-line front end: enumerations, censuses, verifications, and table
//! exports. JSON is the machine format of record; stdout is byte-identical
//! for identical inputs regardless of `--jobs` (timings go to stderr).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use flip_census::atlas::{
    classification_table, euler_char, f_vector, isometry_orbits, SymmetryGroup,
};
use flip_census::census::{census, ShapeCounter};
use flip_census::error::Error;
use flip_census::export::{
    cells_markdown, census_csv, classes_csv, count_csv, fvector_csv, orbits_csv, overcount_csv,
    CellsDoc, CensusDoc, ClassDoc, ClassesDoc, CountDoc, CountRow, FVectorDoc, FiberDoc, JsonInt,
    OrbitsDoc, OvercountTableDoc,
};
use flip_census::identity::overcount_table;
use flip_census::verify::{verify_columns, verify_euler, verify_of, verify_theorem, CheckReport};
use flip_census::{Partition, Result};

#[derive(Parser)]
#[command(
    name = "flip-census",
    version,
    about = "Count and classify polygon tilings up to flip equivalence"
)]
struct Cli {
    /// Output format; json is the stable machine format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker-thread bound for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Trivial,
    Cyclic,
    Dihedral,
}

#[derive(Subcommand)]
enum Cmd {
    /// Shape counts a_n(λ) of the n-gon (dynamic programming; any n).
    Count {
        #[arg(long)]
        n: u32,
        /// Restrict to a single shape, e.g. "2,1,1" or "1^2 2".
        #[arg(long)]
        shape: Option<String>,
    },
    /// Flip-equivalence classes: full census export, or one shape with
    /// optional fiber breakdown.
    Classes {
        #[arg(long)]
        n: u32,
        /// Restrict to one shape; without it the whole census is exported.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        fibers: bool,
    },
    /// Verify closed forms against brute-force oracles.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// The overcount-factor table for all row/column partitions up to a weight.
    OfTable {
        #[arg(long = "max-weight")]
        max_weight: usize,
    },
    /// f-vector and Euler characteristic of the complex on the n-gon.
    Fvector {
        #[arg(long)]
        n: u32,
    },
    /// Orbits of tilings under polygon symmetries.
    Orbits {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Restrict to cells of one dimension.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Classification table of cells by dimension and label.
    Cells {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Class-count formula vs flip-graph search for every shape, n <= max-n.
    Theorem {
        #[arg(long = "max-n")]
        max_n: u32,
    },
    /// Euler characteristics and Euler reference sums up to max-n.
    Euler {
        #[arg(long = "max-n")]
        max_n: u32,
    },
    /// Signed overcount column sums and the column product identity.
    Columns {
        #[arg(long = "max-weight")]
        max_weight: usize,
    },
    /// Brute-force overcount ratios vs the closed form, n <= max-n.
    Of {
        #[arg(long = "max-n")]
        max_n: u32,
    },
}

/// Envelope printed (as JSON) for every run.
#[derive(Serialize)]
struct RunReport {
    command: String,
    parameters: BTreeMap<String, String>,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
}

#[derive(Serialize)]
struct Verdict {
    pass: bool,
    checks: Vec<CheckReport>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("usage error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("usage error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let started = Instant::now();
    let outcome = run(&cli);
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.cmd {
        Cmd::Count { n, shape } => {
            if *n < 3 {
                return Err(Error::Usage(format!("count needs n >= 3, got {n}")));
            }
            let mut params = BTreeMap::from([("n".to_string(), n.to_string())]);
            let mut counter = ShapeCounter::new();
            let shapes: Vec<CountRow> = match shape {
                Some(text) => {
                    let shape: Partition = text.parse()?;
                    params.insert("shape".into(), shape.to_string());
                    vec![CountRow {
                        lambda: shape.to_string(),
                        a: JsonInt(counter.count(*n as usize, &shape)),
                    }]
                }
                None => counter
                    .census_row(*n as usize)
                    .into_iter()
                    .map(|(shape, v)| CountRow {
                        lambda: shape.to_string(),
                        a: JsonInt(v),
                    })
                    .collect(),
            };
            let total = shapes.iter().map(|r| &r.a.0).sum::<num_bigint::BigInt>();
            let doc = CountDoc {
                n: *n,
                total: JsonInt(total),
                shapes,
            };
            match cli.format {
                Format::Json => emit_json("count", params, &doc, None),
                Format::Csv => print!("{}", count_csv(&doc)?),
                Format::Table => {
                    println!("n = {}   total = {}", doc.n, doc.total.0);
                    for row in &doc.shapes {
                        println!("{:<16} {}", row.lambda, row.a.0);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classes { n, shape, fibers } => {
            let Some(shape) = shape else {
                // Whole-census export.
                let params = BTreeMap::from([("n".to_string(), n.to_string())]);
                let cen = census(*n)?;
                let doc = CensusDoc::from_census(&cen);
                match cli.format {
                    Format::Json => emit_json("classes", params, &doc, None),
                    Format::Csv => print!("{}", census_csv(&cen)?),
                    Format::Table => {
                        println!("n = {}   total = {}", cen.n, cen.total());
                        for s in &doc.shapes {
                            println!("{:<16} a = {:<8} ae = {}", s.lambda, s.a.0, s.ae.0);
                        }
                    }
                }
                return Ok(ExitCode::SUCCESS);
            };
            let shape: Partition = shape.parse()?;
            let params = BTreeMap::from([
                ("n".to_string(), n.to_string()),
                ("shape".to_string(), shape.to_string()),
                ("fibers".to_string(), fibers.to_string()),
            ]);
            flip_census::census::check_shape_weight(*n, &shape)?;
            let cen = census(*n)?;
            let classes = flip_census::census::flip_classes(*n, &shape)?;
            let doc = ClassesDoc {
                n: *n,
                lambda: shape.to_string(),
                a: JsonInt(cen.count(&shape)),
                ae: JsonInt(cen.class_count(&shape)),
                classes: classes
                    .iter()
                    .map(|c| ClassDoc {
                        size: JsonInt(c.len().into()),
                        representative: c[0].to_string(),
                    })
                    .collect(),
                fibers: if *fibers {
                    Some(
                        cen.shapes
                            .get(&shape)
                            .map(|e| {
                                e.fibers
                                    .iter()
                                    .map(|(nu, fe)| FiberDoc {
                                        nu: nu.to_string(),
                                        a: JsonInt(fe.count.clone()),
                                        ae: JsonInt(fe.class_count.clone()),
                                    })
                                    .collect()
                            })
                            .unwrap_or_default(),
                    )
                } else {
                    None
                },
            };
            match cli.format {
                Format::Json => emit_json("classes", params, &doc, None),
                Format::Csv => print!("{}", classes_csv(&doc)?),
                Format::Table => {
                    println!(
                        "n = {}   lambda = {}   a = {}   ae = {}",
                        doc.n, doc.lambda, doc.a.0, doc.ae.0
                    );
                    for c in &doc.classes {
                        println!("class size {:<6} rep {}", c.size.0, c.representative);
                    }
                    if let Some(fibers) = &doc.fibers {
                        for f in fibers {
                            println!("fiber {:<12} a = {:<8} ae = {}", f.nu, f.a.0, f.ae.0);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { what } => {
            let (name, params, report) = match what {
                VerifyCmd::Theorem { max_n } => (
                    "verify theorem",
                    BTreeMap::from([("max-n".to_string(), max_n.to_string())]),
                    verify_theorem(*max_n)?,
                ),
                VerifyCmd::Euler { max_n } => (
                    "verify euler",
                    BTreeMap::from([("max-n".to_string(), max_n.to_string())]),
                    verify_euler(*max_n)?,
                ),
                VerifyCmd::Columns { max_weight } => (
                    "verify columns",
                    BTreeMap::from([("max-weight".to_string(), max_weight.to_string())]),
                    verify_columns(*max_weight),
                ),
                VerifyCmd::Of { max_n } => (
                    "verify of",
                    BTreeMap::from([("max-n".to_string(), max_n.to_string())]),
                    verify_of(*max_n)?,
                ),
            };
            let pass = report.passed();
            match cli.format {
                Format::Json => {
                    let verdict = Verdict {
                        pass,
                        checks: vec![report],
                    };
                    emit_json(name, params, &Value::Null, Some(verdict));
                }
                Format::Csv | Format::Table => {
                    println!(
                        "{}: {} ({} instances, {} failures)",
                        report.check,
                        if pass { "pass" } else { "FAIL" },
                        report.instances,
                        report.failures.len()
                    );
                    for f in &report.failures {
                        println!(
                            "  n={} lambda={} mu={} nu={} expected={} actual={}",
                            f.n.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                            f.lambda.as_deref().unwrap_or("-"),
                            f.mu.as_deref().unwrap_or("-"),
                            f.nu.as_deref().unwrap_or("-"),
                            f.expected,
                            f.actual
                        );
                    }
                }
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::OfTable { max_weight } => {
            let params = BTreeMap::from([("max-weight".to_string(), max_weight.to_string())]);
            let table = overcount_table(*max_weight);
            let doc = OvercountTableDoc::from_table(&table);
            match cli.format {
                Format::Json => emit_json("of-table", params, &doc, None),
                Format::Csv => print!("{}", overcount_csv(&table)?),
                Format::Table => {
                    let width = 10;
                    print!("{:>width$}", "mu\\nu");
                    for c in &doc.nu {
                        print!("{c:>width$}");
                    }
                    println!();
                    for (mu, row) in doc.mu.iter().zip(&doc.of) {
                        print!("{mu:>width$}");
                        for v in row {
                            print!("{:>width$}", v.0);
                        }
                        println!();
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fvector { n } => {
            let params = BTreeMap::from([("n".to_string(), n.to_string())]);
            let doc = FVectorDoc {
                n: *n,
                f: f_vector(*n)?.into_iter().map(JsonInt).collect(),
                euler: JsonInt(euler_char(*n)?),
            };
            match cli.format {
                Format::Json => emit_json("fvector", params, &doc, None),
                Format::Csv => print!("{}", fvector_csv(&doc)?),
                Format::Table => {
                    let fs: Vec<String> = doc.f.iter().map(|v| v.0.to_string()).collect();
                    println!(
                        "n = {}   f = ({})   euler = {}",
                        doc.n,
                        fs.join(", "),
                        doc.euler.0
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Orbits { n, group, dim } => {
            let (gname, g) = match group {
                GroupArg::Trivial => ("trivial", SymmetryGroup::Trivial),
                GroupArg::Cyclic => ("cyclic", SymmetryGroup::Cyclic),
                GroupArg::Dihedral => ("dihedral", SymmetryGroup::Dihedral),
            };
            let mut params = BTreeMap::from([
                ("n".to_string(), n.to_string()),
                ("group".to_string(), gname.to_string()),
            ]);
            if let Some(d) = dim {
                params.insert("dim".into(), d.to_string());
            }
            let orbits = isometry_orbits(*n, g, *dim)?;
            let doc = OrbitsDoc::new(*n, gname, &orbits);
            match cli.format {
                Format::Json => emit_json("orbits", params, &doc, None),
                Format::Csv => print!("{}", orbits_csv(&doc)?),
                Format::Table => {
                    println!(
                        "n = {}   group = {}   orbits = {}",
                        doc.n, doc.group, doc.orbit_count
                    );
                    for o in &doc.orbits {
                        println!("size {:<4} rep {}", o.size, o.representative);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cells { n } => {
            let params = BTreeMap::from([("n".to_string(), n.to_string())]);
            let summary = classification_table(*n)?;
            match cli.format {
                Format::Json => emit_json("cells", params, &CellsDoc::from_summary(&summary), None),
                Format::Csv | Format::Table => print!("{}", cells_markdown(&summary)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_json<T: Serialize>(
    command: &str,
    parameters: BTreeMap<String, String>,
    payload: &T,
    verdict: Option<Verdict>,
) {
    let report = RunReport {
        command: command.to_string(),
        parameters,
        result: serde_json::to_value(payload).expect("payload serializes"),
        verdict,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
}
