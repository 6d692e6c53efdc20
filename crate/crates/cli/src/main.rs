use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mlog_cli::corpus::CORPUS;
use mlog_cli::render::render_text;
use mlog_cli::{corpus, load_problem, run, Check, CliError, Options};

#[derive(Parser)]
#[command(
    name = "mlog",
    version,
    about = "Freeness and duality checks for log forms along Cohen-Macaulay subspaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    /// Verdicts, duality certificates and Ext comparisons.
    Basic,
    /// Every check, including chains, residues and the alternative complete intersection.
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in a problem file and write a report.
    Analyze {
        /// Problem file, or the name of a corpus entry.
        file: String,
        /// Form degree to analyze; repeat for several. Overrides the file.
        #[arg(long = "q")]
        q: Vec<usize>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print a human readable report.
        #[arg(long)]
        text: bool,
        /// Leave timings out of the report so it is reproducible.
        #[arg(long)]
        no_timings: bool,
        /// Largest degree searched for the fundamental form.
        #[arg(long)]
        degree_bound: Option<i64>,
    },
    /// Run a fixed set of checks and print pass or fail.
    Verify {
        /// Problem file, or the name of a corpus entry.
        file: String,
        #[arg(long, value_enum, default_value = "basic")]
        level: Level,
        #[arg(long)]
        degree_bound: Option<i64>,
    },
    /// List the bundled problems, or print one of them.
    Corpus { name: Option<String> },
}

fn analyze(
    file: &str,
    q: Vec<usize>,
    json: Option<PathBuf>,
    text: bool,
    no_timings: bool,
    degree_bound: Option<i64>,
) -> Result<bool, CliError> {
    let problem = load_problem(file)?;
    let doc = run(
        &problem,
        &Options {
            degrees: q,
            degree_bound,
            timings: !no_timings,
        },
    )?;
    match &json {
        Some(path) => std::fs::write(path, doc.to_json())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?,
        None if !text => print!("{}", doc.to_json()),
        None => {}
    }
    if text {
        print!("{}", render_text(&doc));
    }
    Ok(doc.passed)
}

fn verify(file: &str, level: Level, degree_bound: Option<i64>) -> Result<bool, CliError> {
    let mut problem = load_problem(file)?;
    problem.checks = match level {
        Level::Basic => vec![Check::Freeness, Check::Duality, Check::ExtComparison],
        Level::Full => Check::ALL.to_vec(),
    };
    if matches!(level, Level::Basic) {
        problem.alternative_complete_intersection = None;
    }
    let doc = run(
        &problem,
        &Options {
            degree_bound,
            ..Options::default()
        },
    )?;
    for r in &doc.results {
        if let Some(v) = &r.verdict {
            println!("q = {}: {} (pdim {}, k = {})", r.q, v.verdict, v.pdim, v.k);
        }
    }
    for f in doc.failures() {
        println!("FAIL {f}");
    }
    println!("{}", if doc.passed { "PASS" } else { "FAIL" });
    Ok(doc.passed)
}

fn list_corpus(name: Option<String>) -> Result<bool, CliError> {
    match name {
        None => {
            for e in CORPUS {
                println!("{:<20} {}", e.name, e.summary);
            }
        }
        Some(n) => {
            let e = corpus::find(&n)
                .ok_or_else(|| CliError::Input(format!("no corpus entry named {n:?}")))?;
            print!("{}", e.json);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze {
            file,
            q,
            json,
            text,
            no_timings,
            degree_bound,
        } => analyze(&file, q, json, text, no_timings, degree_bound),
        Command::Verify {
            file,
            level,
            degree_bound,
        } => verify(&file, level, degree_bound),
        Command::Corpus { name } => list_corpus(name),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("mlog: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
