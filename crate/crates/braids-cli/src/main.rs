//! Command-line front end: parse braids, certify, estimate entropies, build
//! family words, and sweep families into deterministic survey tables.
//!
//! Exit codes: 0 success/certified, 2 input error, 3 not certified,
//! 4 unconverged estimate.

use braids::certify::{certify_even_power_form, certify_subset_criterion, Certification};
use braids_cli::survey;
use braids::dilatation::{entropy_estimate, DEFAULT_MAX_ITER, DEFAULT_TOLERANCE};
use braids::families::{alpha_p, chain_braid, eta, lens_braid, trivial_link_beta, FamilyOutput};
use braids::linking::{components, linking_matrix};
use braids::BraidWord;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::process::ExitCode;
use survey::{render_csv, render_json, OutputFormat, RunManifest};

#[derive(Parser)]
#[command(
    name = "braids",
    about = "Braid algebra, pseudo-Anosov certification and dilatation surveys",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BraidInput {
    /// Braid in the canonical format, e.g. `n=5 3 3 -4 -4` (quoting optional:
    /// trailing arguments are joined with spaces).
    #[arg(required = true, num_args = 1.., value_name = "BRAID", allow_hyphen_values = true)]
    braid: Vec<String>,
}

impl BraidInput {
    fn parse(&self) -> Result<BraidWord, braids::Error> {
        BraidWord::parse(&self.braid.join(" "))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certify a pure braid pseudo-Anosov from its linking numbers.
    Certify {
        #[command(flatten)]
        input: BraidInput,
        /// Emit the verdict and witness as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Estimate the dilatation by iterating lamination coordinates.
    Entropy {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Include the full per-iteration growth trace in the JSON.
        #[arg(long)]
        json: bool,
    },
    /// Apply the skew involution.
    Skew {
        #[command(flatten)]
        input: BraidInput,
    },
    /// Skew-palindromize: `skew(b)·b`.
    Palindromize {
        #[command(flatten)]
        input: BraidInput,
    },
    /// Delete one strand, reindexing the surviving letters.
    DeleteStrand {
        /// 1-based strand index to remove.
        #[arg(long, short)]
        index: usize,
        #[command(flatten)]
        input: BraidInput,
    },
    /// Closure components and linking matrix.
    Lk {
        #[command(flatten)]
        input: BraidInput,
    },
    /// Construct one member of a braid family, with its certificate.
    Family {
        #[command(subcommand)]
        which: FamilyCommand,
    },
    /// Sweep families from a JSON manifest into a CSV or JSON table.
    Survey {
        /// Path to the run manifest.
        #[arg(long)]
        manifest: std::path::PathBuf,
        /// Output path (overrides the manifest; `-` or absent means stdout).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Disk-twist family `α(p) ∈ B_{5+2p}`.
    Alpha {
        #[arg(long)]
        p: usize,
    },
    /// Lens-space family `η(σ1^{2m}, j) ∈ B5`.
    Lens {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        j: usize,
    },
    /// Trivial-link family `β_(j) ∈ B_{2n+1}`.
    TrivialLink {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
    },
    /// Chain-link family on the alternating 3-braid with the given twists.
    Chain {
        /// Comma-separated positive twist exponents, e.g. `1,1,1,1,1,1`.
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        j: usize,
    },
    /// Generic `η(base, j)` for a pure even-power homogeneous base word.
    Eta {
        /// Base braid, e.g. `n=2 1 1 1 1`.
        #[arg(long)]
        base: String,
        #[arg(long)]
        j: usize,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn run_certify(b: &BraidWord, json: bool) -> ExitCode {
    // Fast syntactic test first, then the subset criterion.
    let mut cert: Option<Certification> = None;
    if b.strands() >= 4 {
        match certify_even_power_form(b) {
            Ok(c) if c.is_pseudo_anosov() => cert = Some(c),
            Ok(_) | Err(_) => {}
        }
    }
    let cert = match cert {
        Some(c) => c,
        None => match certify_subset_criterion(b) {
            Ok(c) => c,
            Err(e) => return input_error(e),
        },
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));
    } else if cert.is_pseudo_anosov() {
        println!("PseudoAnosov");
    } else {
        println!("NotCertified: {:?}", cert.witness.as_ref().expect("witness"));
    }
    if cert.is_pseudo_anosov() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}

fn run_entropy(b: &BraidWord, tolerance: f64, max_iter: usize, with_trace: bool) -> ExitCode {
    let est = match entropy_estimate(b, tolerance, max_iter) {
        Ok(est) => est,
        Err(e) => return input_error(e),
    };
    let mut value = serde_json::to_value(&est).expect("serializable");
    if !with_trace {
        value.as_object_mut().expect("object").remove("growth_trace");
    }
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    if est.converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    }
}

fn family_json(out: &FamilyOutput) -> serde_json::Value {
    json!({
        "family": out.spec.label(),
        "fiber_braid": out.fiber_braid.to_string(),
        "palindromized": out.palindromized.to_string(),
        "deleted": out.deleted.to_string(),
        "genus": out.genus,
        "u": out.certificate.u,
        "index": out.certificate.index,
        "class_label": out.class_label.map(|(x, y)| format!("({x};{y})")),
        "manifold": out.manifold,
        "certificate": out.certificate,
    })
}

fn run_family(which: &FamilyCommand) -> ExitCode {
    let result = match which {
        FamilyCommand::Alpha { p } => alpha_p(*p),
        FamilyCommand::Lens { m, j } => lens_braid(*m, *j),
        FamilyCommand::TrivialLink { n, j } => trivial_link_beta(*n, *j),
        FamilyCommand::Chain { m, j } => chain_braid(m, *j),
        FamilyCommand::Eta { base, j } => {
            BraidWord::parse(base).and_then(|b| eta(&b, *j))
        }
    };
    match result {
        Ok(out) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&family_json(&out)).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Err(e) => input_error(e),
    }
}

fn run_survey(manifest_path: &std::path::Path, out: Option<&std::path::Path>) -> ExitCode {
    let text = match std::fs::read_to_string(manifest_path) {
        Ok(t) => t,
        Err(e) => return input_error(format!("reading {}: {e}", manifest_path.display())),
    };
    let manifest: RunManifest = match serde_json::from_str(&text) {
        Ok(m) => m,
        Err(e) => return input_error(format!("manifest: {e}")),
    };
    if !(manifest.tolerance > 0.0) {
        return input_error("manifest tolerance must be positive");
    }
    let records = survey::run(&manifest);
    let rendered = match manifest.format {
        OutputFormat::Csv => render_csv(&records),
        OutputFormat::Json => render_json(&records),
    };
    let target = out
        .map(|p| p.to_path_buf())
        .or_else(|| manifest.out.as_ref().map(std::path::PathBuf::from));
    match target {
        Some(path) if path.as_os_str() != "-" => {
            if let Err(e) = std::fs::write(&path, rendered) {
                return input_error(format!("writing {}: {e}", path.display()));
            }
        }
        _ => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Certify { input, json } => match input.parse() {
            Ok(b) => run_certify(&b, *json),
            Err(e) => input_error(e),
        },
        Command::Entropy {
            input,
            tolerance,
            max_iter,
            json,
        } => match input.parse() {
            Ok(b) => run_entropy(&b, *tolerance, *max_iter, *json),
            Err(e) => input_error(e),
        },
        Command::Skew { input } => match input.parse() {
            Ok(b) => {
                println!("{}", b.skew());
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Palindromize { input } => match input.parse() {
            Ok(b) => {
                println!("{}", b.palindromize());
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::DeleteStrand { index, input } => match input.parse().and_then(|b| b.delete_strand(*index)) {
            Ok(b) => {
                println!("{b}");
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Lk { input } => match input.parse() {
            Ok(b) => {
                let value = json!({
                    "components": components(&b).cycles,
                    "linking_matrix": linking_matrix(&b).entries,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Family { which } => run_family(which),
        Command::Survey { manifest, out } => run_survey(manifest, out.as_deref()),
    }
}
