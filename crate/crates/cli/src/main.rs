use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use virasoro_core::action::WeightVector;
use virasoro_core::coeff::{CoefficientModule, Descriptor};
use virasoro_core::driver::{
    apply_operator, run_probe, run_verify, Mutant, SuiteSelection, VerifyOptions,
};
use virasoro_core::io::{
    parse_operator, parse_weight_vector, weight_vector_json, DescriptorFile, Mode,
};
use virasoro_core::kernel::format_rational;
use virasoro_core::oracles::ReachConfig;
use virasoro_core::Error;

// Stdout writes ignore errors so that `virasoro ... | head` exits quietly.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

/// Exact weight Virasoro modules and their verification suites.
#[derive(Parser)]
#[command(name = "virasoro", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a summary and validation result for a descriptor file.
    Describe { file: PathBuf },
    /// Apply d(m), t(k), c or omega(l,m,s) to a vector literal.
    Act {
        file: PathBuf,
        /// Operator, e.g. "d(3)" or "omega(0,1,3)".
        #[arg(long)]
        op: String,
        /// Vector literal, e.g. "1 @ grade 2".
        #[arg(long)]
        vector: String,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites and write a report document.
    Verify {
        file: PathBuf,
        /// Comma-separated suites, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Degree of random coefficient vectors.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Filtration cap of the reachability slice.
        #[arg(long, default_value_t = 3)]
        degree_cap: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true, value_enum)]
        mutant: Option<MutantArg>,
    },
    /// Rank of the span reachable from a seed vector inside a finite slice.
    Probe {
        file: PathBuf,
        /// Seed vector literal; defaults to the unit at grade 0.
        #[arg(long)]
        vector: Option<String>,
        #[arg(long, default_value_t = 3)]
        degree_cap: usize,
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        grade_lo: i64,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        grade_hi: i64,
        #[arg(long, default_value_t = 6)]
        operator_window: i64,
        #[arg(long, default_value_t = 4)]
        word_length: usize,
        #[arg(long, default_value_t = 2000)]
        max_slice_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MutantArg {
    DropFactorial,
}

enum Failure {
    Suite,
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<DescriptorFile, Failure> {
    DescriptorFile::parse(&read(path)?)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn describe(path: &Path) -> Result<(), Failure> {
    let (file, violations) = DescriptorFile::parse_unvalidated(&read(path)?)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    let desc = &file.descriptor;
    let status = if violations.is_empty() {
        "valid"
    } else {
        "invalid"
    };
    match desc {
        Descriptor::OneDim(d) => {
            outln!("family onedim, rank 0, {status}");
            outln!("parameters: b = {}", format_rational(&d.b));
        }
        Descriptor::Gamma(g) => {
            outln!("family gamma, effective rank {}, {status}", desc.rank());
            outln!(
                "parameters: alpha1 = {}, lambda1 = {}, lambda2 = {}",
                format_rational(&g.alpha1),
                format_rational(&g.lambda1),
                format_rational(&g.lambda2)
            );
        }
        Descriptor::QLambda(q) => {
            outln!("family qlambda, rank {}, {status}", q.r);
            let s: Vec<String> = q.s.iter().map(|i| i.to_string()).collect();
            let l: Vec<String> = q
                .lambda
                .iter()
                .map(|(i, c)| format!("lambda{i} = {}", format_rational(c)))
                .collect();
            outln!(
                "parameters: S = {{{}}}, {}",
                s.join(", "),
                if l.is_empty() {
                    "all lambda zero".into()
                } else {
                    l.join(", ")
                }
            );
            let c: Vec<String> = q.complement().iter().map(|i| i.to_string()).collect();
            outln!("basis generators: {{{}}}", c.join(", "));
        }
    }
    match &file.mode {
        Mode::Plain(a) => outln!("mode: plain, alpha = {}", format_rational(a)),
        Mode::Twisted(b) => outln!("mode: twisted, beta = {b}"),
    }
    if violations.is_empty() {
        if matches!(desc, Descriptor::QLambda(_)) {
            outln!("conditions (I)-(III): satisfied");
        }
        out!("\n{}", file.to_toml());
        Ok(())
    } else {
        for v in &violations {
            outln!("violation: {v}");
        }
        Err(Failure::Config(format!(
            "{} violation(s)",
            violations.len()
        )))
    }
}

fn act(path: &Path, op: &str, vector: &str, json: bool) -> Result<(), Failure> {
    let file = load(path)?;
    let op = parse_operator(op)?;
    let w = parse_weight_vector(&file.descriptor, vector)?;
    let out = apply_operator(&file, op, &w)?;
    if json {
        outln!(
            "{}",
            serde_json::to_string_pretty(&weight_vector_json(&out)).unwrap()
        );
    } else {
        outln!("{out}");
    }
    Ok(())
}

fn verify(
    path: &Path,
    suite: &str,
    opts: VerifyOptions,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let file = load(path)?;
    let selection = SuiteSelection::parse(suite)?;
    let doc = run_verify(&file, &selection, &opts)?;
    let mut summary = String::new();
    for r in &doc.suites {
        let skipped = r.total_checks == 0 && r.notes.iter().any(|n| n.starts_with("skipped"));
        let tag = match (skipped, r.passed()) {
            (true, _) => "SKIP",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        };
        summary.push_str(&format!(
            "{tag} {} ({} checks, {} failures)\n",
            r.suite, r.total_checks, r.failure_count
        ));
        for n in &r.notes {
            summary.push_str(&format!("     note: {n}\n"));
        }
        if let Some(f) = r.failures.first() {
            summary.push_str(&format!(
                "     counterexample: {}\n       expected: {}\n       actual:   {}\n",
                f.inputs, f.expected, f.actual
            ));
        }
    }
    for (k, v) in &doc.derived_constants {
        summary.push_str(&format!("constant {k} = {v}\n"));
    }
    for d in &doc.discrepancy_flags {
        summary.push_str(&format!("discrepancy {d}\n"));
    }
    match out {
        Some(p) => {
            write(p, &doc.to_json())?;
            out!("{summary}");
        }
        None => {
            eprint!("{summary}");
            out!("{}", doc.to_json());
        }
    }
    if doc.passed {
        Ok(())
    } else {
        Err(Failure::Suite)
    }
}

fn probe(
    path: &Path,
    vector: Option<&str>,
    cfg: ReachConfig,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let file = load(path)?;
    let seed = match vector {
        Some(v) => parse_weight_vector(&file.descriptor, v)?,
        None => WeightVector::single(0, file.descriptor.unit()),
    };
    let rr = run_probe(&file, &seed, &cfg)?;
    outln!(
        "rank {} of slice dimension {} ({})",
        rr.rank,
        rr.slice_dim,
        if rr.full { "full" } else { "deficient" }
    );
    outln!("level ranks: {:?}", rr.level_ranks);
    outln!("note: {}", rr.note);
    if let Some(p) = out {
        let mut text = serde_json::to_string_pretty(&rr).unwrap();
        text.push('\n');
        write(p, &text)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Describe { file } => describe(&file),
        Command::Act {
            file,
            op,
            vector,
            json,
        } => act(&file, &op, &vector, json),
        Command::Verify {
            file,
            suite,
            seed,
            window,
            samples,
            degree,
            degree_cap,
            out,
            mutant,
        } => verify(
            &file,
            &suite,
            VerifyOptions {
                seed,
                window,
                samples,
                degree,
                degree_cap,
                mutant: mutant.map(|MutantArg::DropFactorial| Mutant::DropFactorial),
            },
            out.as_deref(),
        ),
        Command::Probe {
            file,
            vector,
            degree_cap,
            grade_lo,
            grade_hi,
            operator_window,
            word_length,
            max_slice_dim,
            out,
        } => probe(
            &file,
            vector.as_deref(),
            ReachConfig {
                degree_cap,
                grade_lo,
                grade_hi,
                operator_window,
                word_length,
                max_slice_dim,
                ..ReachConfig::default()
            },
            out.as_deref(),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
