use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mtc_galois::families;
use mtc_galois::galois;
use mtc_galois::pointed::{
    build_pointed, cyclic_generator_partition, cyclic_subgroup_count, parse_gram, FiniteAbelianGroup,
    QuadraticForm,
};
use mtc_galois::report::analyze;
use mtc_galois::spectra::{rows_dividing, verify_tables, TableScope};
use mtc_galois::subcat::DEFAULT_MAX_RANK;
use mtc_galois::{Error, ModularData};

/// Galois orbits and structure of modular data.
#[derive(Parser)]
#[command(name = "mtc", version)]
struct Cli {
    /// Starting precision in bits for certified sign computations.
    #[arg(long, global = true, env = "MTC_CERT_PRECISION")]
    precision: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a modular data file against the full data contract.
    Validate { file: PathBuf },
    /// Orbits, subcategories and structural checks. INPUT is a file or a fixture name.
    Report {
        input: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Orbit count of pointed data on the group with the given invariant factors.
    Pointed {
        /// Invariant factors, e.g. 2,30,30.
        group: String,
        /// Only evaluate the cyclic subgroup count.
        #[arg(long)]
        count_only: bool,
        /// Gram matrix "a,b;c,d" (exponents modulo the form modulus).
        #[arg(long)]
        form: Option<String>,
        /// Largest group order built explicitly.
        #[arg(long, default_value_t = 1024)]
        max_order: u64,
    },
    /// Verify the t-spectrum tables at every level dividing N.
    Tables {
        #[arg(long)]
        check: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write the Deligne product of two data files (or fixture names).
    Product {
        a: String,
        b: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a named fixture; `list` prints the names.
    Fixture {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(input: &str) -> Result<ModularData, Error> {
    if Path::new(input).exists() {
        ModularData::read_file(input)
    } else {
        families::fixture(input).map_err(|e| match e {
            Error::UnknownFixture(_) => Error::Io(format!("{input}: no such file or fixture")),
            other => other,
        })
    }
}

fn validate(file: &Path) -> Outcome {
    let m = ModularData::read_file(file)?;
    let rep = m.validate();
    if rep.passed() {
        println!("{}: ok (rank {}, conductor {})", file.display(), m.rank(), m.conductor());
        return Ok(());
    }
    for i in &rep.issues {
        println!("[{}] {}", i.check, i.detail);
    }
    Err(Failure::Check(format!("{} check(s) failed", rep.issues.len())))
}

fn report(input: &str, max_rank: usize, json: bool) -> Outcome {
    let m = load(input)?;
    let r = analyze(input, &m, max_rank)?;
    if json {
        println!("{}", r.to_json());
    } else {
        print!("{r}");
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check("analysis found failures".into()))
    }
}

fn pointed(group: &str, count_only: bool, form: Option<&str>, max_order: u64) -> Outcome {
    let a: FiniteAbelianGroup = group.parse()?;
    let count = cyclic_subgroup_count(&a);
    if count_only {
        println!("{a}: {count}");
        return Ok(());
    }
    if a.order() > max_order {
        return Err(Failure::Input(format!(
            "order {} exceeds --max-order {max_order}; use --count-only",
            a.order()
        )));
    }
    let q = match form {
        Some(f) => QuadraticForm::new(&a, parse_gram(f)?)?,
        None => QuadraticForm::standard(&a),
    };
    let m = build_pointed(&a, &q)?;
    let partition = galois::orbits(&m)?;
    println!("{a}: {} orbits (cyclic subgroups: {count})", partition.orbit_count());
    if partition.orbit_count() as u64 != count {
        return Err(Failure::Check("orbit count differs from the cyclic subgroup count".into()));
    }
    if partition.orbits != cyclic_generator_partition(&a) {
        return Err(Failure::Check("orbits differ from the cyclic generator partition".into()));
    }
    Ok(())
}

fn tables(bound: u64, json: bool) -> Outcome {
    if bound == 0 {
        return Err(Failure::Input("--check needs a positive level".into()));
    }
    let rows = rows_dividing(&TableScope::default(), bound);
    let rep = verify_tables(&rows)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
    } else {
        for (row, c) in rows.iter().zip(&rep.rows) {
            let status = if !c.has_claims() {
                "info"
            } else if c.passed() {
                "pass"
            } else {
                "FAIL"
            };
            println!(
                "{status} table {} level {} {}: dim {}, |spectrum| {}, |Gal| {}  [{}]",
                c.table,
                c.level,
                c.label,
                c.dim,
                c.spectrum_size,
                c.computed_gal,
                row.spectrum_text()
            );
            for f in &c.failures {
                println!("     {f}");
            }
        }
        let failed = rep.failures().count();
        println!("{} rows, {failed} failed", rep.rows.len());
    }
    if rep.passed() {
        Ok(())
    } else {
        Err(Failure::Check("table rows failed".into()))
    }
}

fn product(a: &str, b: &str, output: &Path) -> Outcome {
    let p = load(a)?.deligne_product(&load(b)?)?;
    p.write_file(output)?;
    println!("wrote {} (rank {}, conductor {})", output.display(), p.rank(), p.conductor());
    Ok(())
}

fn fixture(name: &str, output: Option<&Path>) -> Outcome {
    if name == "list" {
        for f in families::catalog() {
            println!("{:<20} {:?}  {}", f.name, f.source, f.note);
        }
        return Ok(());
    }
    let m = families::fixture(name)?;
    match output {
        Some(path) => {
            m.write_file(path)?;
            println!("wrote {}", path.display());
        }
        None => print!("{}", m.to_json_string()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(bits) = cli.precision {
        std::env::set_var("MTC_CERT_PRECISION", bits.to_string());
    }
    let outcome = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Report { input, max_rank, json } => report(input, *max_rank, *json),
        Command::Pointed { group, count_only, form, max_order } => {
            pointed(group, *count_only, form.as_deref(), *max_order)
        }
        Command::Tables { check, json } => tables(*check, *json),
        Command::Product { a, b, output } => product(a, b, output),
        Command::Fixture { name, output } => fixture(name, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
