//! Command-line surface: generate, verify, hunt and certify.
//!
//! Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or
//! inadmissible parameters, 3 I/O or parse error, 4 search budget
//! exceeded.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use evenweave::constructions::{build_unparalleled, check_certificate, CertOptions};
use evenweave::io::SystemDocument;
use evenweave::verifier::{
    check_decomposition, check_intersecting, find_parallel_class, SearchBudget, SearchOutcome,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "evenweave",
    about = "Construct and verify unparalleled even cycle systems of K_v - I",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node limit for exhaustive parallel-class search.
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit in seconds for exhaustive search.
    #[arg(long)]
    budget_seconds: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_time: self.budget_seconds.map(Duration::from_secs),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build an unparalleled CS(v, 2t), write it out, and print the
    /// certificate summary (plus a hunt summary at small orders).
    Generate {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        v: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Orders up to this bound get an exhaustive no-parallel-class search.
        #[arg(long, default_value_t = 24)]
        exhaustive_threshold: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check that a document's cycles decompose its host (and pairwise
    /// intersect, when an anchor is declared).
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Comma-separated anchor labels overriding the document's own.
        #[arg(long)]
        anchor: Option<String>,
    },
    /// Exhaustively search a document's system for a parallel class.
    Hunt {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Rebuild the (v, t) system and re-validate its certificate.
    Certify {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 24)]
        exhaustive_threshold: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Generate { t, v, format, out, exhaustive_threshold, budget } => {
            generate(t, v, format, out, exhaustive_threshold, &budget.budget())
        }
        Command::Verify { input, anchor } => verify(&input, anchor.as_deref()),
        Command::Hunt { input, budget } => hunt(&input, budget.budget()),
        Command::Certify { t, v, exhaustive_threshold, budget } => {
            certify(t, v, exhaustive_threshold, &budget.budget())
        }
    };
    ExitCode::from(code)
}

fn read_document(path: &PathBuf) -> Result<SystemDocument, u8> {
    let raw = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_IO
    })?;
    let parsed = if raw.trim_start().starts_with('{') {
        SystemDocument::parse_json(&raw)
    } else {
        SystemDocument::parse_text(&raw)
    };
    parsed.map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_IO
    })
}

fn generate(
    t: u32,
    v: u32,
    format: Format,
    out: Option<PathBuf>,
    exhaustive_threshold: u32,
    budget: &SearchBudget,
) -> u8 {
    let (sys, cert) = match build_unparalleled(v, t) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let doc = SystemDocument::from_system(&sys);
    let rendered = match format {
        Format::Text => doc.render_text(),
        Format::Json => doc.render_json(),
    };
    match &out {
        Some(path) => {
            if let Err(e) = fs::write(path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_IO;
            }
        }
        None => print!("{rendered}"),
    }
    // The summary goes to stdout when the document went to a file, and to
    // stderr otherwise, so piped output stays a clean document.
    let emit = |line: String| match &out {
        Some(_) => println!("{line}"),
        None => eprintln!("{line}"),
    };
    emit(format!("built CS({v}, {}) with {} cycles [{}]", 2 * t, sys.cycle_count(), sys.provenance));
    let opts = CertOptions { exhaustive_threshold, budget: *budget };
    let report = check_certificate(&cert, &sys, &opts);
    for line in &report.lines {
        emit(format!("  [{}] {}: {}", if line.pass { "PASS" } else { "FAIL" }, line.path, line.claim));
    }
    if v <= exhaustive_threshold {
        match find_parallel_class(&sys.system, *budget) {
            SearchOutcome::NoneExhaustive { nodes } => {
                emit(format!("hunt: NoneExhaustive ({nodes} nodes)"))
            }
            SearchOutcome::Found(_) => {
                emit("hunt: Found — a parallel class exists, output is not unparalleled".into());
                return EXIT_FAIL;
            }
            SearchOutcome::BudgetExceeded { nodes } => {
                emit(format!("hunt: BudgetExceeded ({nodes} nodes)"));
                return EXIT_BUDGET;
            }
        }
    }
    if report.pass {
        0
    } else {
        EXIT_FAIL
    }
}

fn verify(input: &PathBuf, anchor_flag: Option<&str>) -> u8 {
    let doc = match read_document(input) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let sys = match doc.to_system() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_IO;
        }
    };
    let anchor: Option<BTreeSet<u32>> = match anchor_flag {
        Some(raw) => {
            let parsed: Result<BTreeSet<u32>, _> =
                raw.split(',').map(|x| x.trim().parse::<u32>()).collect();
            match parsed {
                Ok(a) => Some(a),
                Err(_) => {
                    eprintln!("error: --anchor expects comma-separated labels");
                    return EXIT_USAGE;
                }
            }
        }
        None => doc.anchor_set(),
    };

    let rep = check_decomposition(&sys);
    let mut pass = rep.pass;
    println!("decomposition: {}", if rep.pass { "PASS" } else { "FAIL" });
    for e in &rep.duplicated {
        println!("  duplicated edge {}-{}", e.0, e.1);
    }
    for e in &rep.uncovered {
        println!("  uncovered edge {}-{}", e.0, e.1);
    }
    for e in &rep.foreign {
        println!("  foreign edge {}-{}", e.0, e.1);
    }
    for c in &rep.malformed {
        println!("  malformed cycle {:?}", c.vertices());
    }
    if let Some(a) = &anchor {
        let rep = check_intersecting(&sys, Some(a));
        pass &= rep.pass;
        println!("intersecting (anchored): {}", if rep.pass { "PASS" } else { "FAIL" });
        if let Some((c1, c2)) = &rep.witness {
            println!("  disjoint pair {:?} / {:?}", c1.vertices(), c2.vertices());
        }
    }
    if pass {
        0
    } else {
        EXIT_FAIL
    }
}

fn hunt(input: &PathBuf, budget: SearchBudget) -> u8 {
    let doc = match read_document(input) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let sys = match doc.to_system() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_IO;
        }
    };
    match find_parallel_class(&sys, budget) {
        SearchOutcome::Found(class) => {
            assert!(class.validate(&sys), "search returned an invalid class");
            println!("Found: parallel class of {} cycles", class.cycles.len());
            for c in &class.cycles {
                println!("  {:?}", c.vertices());
            }
            0
        }
        SearchOutcome::NoneExhaustive { nodes } => {
            println!("NoneExhaustive: no parallel class ({nodes} nodes searched)");
            0
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            println!("BudgetExceeded: undecided after {nodes} nodes");
            EXIT_BUDGET
        }
    }
}

fn certify(t: u32, v: u32, exhaustive_threshold: u32, budget: &SearchBudget) -> u8 {
    let (sys, cert) = match build_unparalleled(v, t) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let opts = CertOptions { exhaustive_threshold, budget: *budget };
    let report = check_certificate(&cert, &sys, &opts);
    for line in &report.lines {
        println!("[{}] {}: {}", if line.pass { "PASS" } else { "FAIL" }, line.path, line.claim);
    }
    println!("certificate: {}", if report.pass { "PASS" } else { "FAIL" });
    if report.pass {
        0
    } else {
        EXIT_FAIL
    }
}
