use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use primcone::jordan::JordanLabel;
use primcone::rootdata::parse_cartan_type;
use primcone_cli::{
    bwb, candidates, classify_hilbert, classify_t1_table, flatness, jordan_check, parse_window, t1_cone, ConeFamily, Report,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Table,
    Json,
}

/// Cones of primitive vectors: tangent spaces of invariant Hilbert schemes,
/// first-order deformations, and the Jordan-algebra cross-reference.
///
/// Exit status: 0 when the output matches the embedded tables, 1 on a
/// mismatch, 2 on a usage error.
#[derive(Parser, Debug)]
#[command(name = "primcone", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tangent-space dimension at the cone for every candidate weight.
    ClassifyHilbert {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Candidate weights (sum or half-sum of a simple and a positive root).
    /// Without --type: every simple type up to rank 8 and A1xA1.
    Candidates {
        #[arg(long = "type")]
        cartan_type: Option<String>,
    },
    /// First-order deformations of the cone, by isotypic piece.
    ClassifyT1 {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Cohomology of the line bundle of weight μ on G/P_λ.
    Bwb {
        #[arg(long = "type")]
        cartan_type: String,
        /// Weight λ defining the parabolic, e.g. "1,0".
        #[arg(long, allow_hyphen_values = true)]
        parabolic: String,
        /// Weight μ, e.g. "-3,1".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Graded T¹ of a Hankel or Segre–Veronese cone.
    T1Cone {
        #[arg(long, conflicts_with = "segre", required_unless_present = "segre")]
        hankel: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        segre: Option<Vec<usize>>,
        /// Degree window "lo..hi" (inclusive); default -(m+1)..2.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Flatness of the perturbed minor family and the first-order triviality test.
    Flatness {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Nonzero parameter samples for the triviality test.
        #[arg(long, default_value_t = 50)]
        triviality_samples: usize,
        /// Seed; default 0x5EEDC0DE20240001.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Jordan identity, trace form and cross-reference row. Without --label: the full panel.
    JordanCheck {
        /// J1(w), J2(n), J3(n), J4(n) or J5.
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn emit<T: Serialize>(r: &Report<T>, output: Output) -> ExitCode {
    let text = match output {
        Output::Table => r.table.clone(),
        Output::Json => format!("{}\n", r.json()),
    };
    // A closed reader (e.g. `| head`) is not an error of ours.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    for m in &r.mismatches {
        eprintln!("mismatch: {m}");
    }
    if r.matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = cli.output;
    Ok(match cli.command {
        Command::ClassifyHilbert { max_rank } => emit(&classify_hilbert(max_rank)?, out),
        Command::Candidates { cartan_type } => {
            let ct = cartan_type.as_deref().map(parse_cartan_type).transpose()?;
            emit(&candidates(ct.as_ref()), out)
        }
        Command::ClassifyT1 { max_rank } => emit(&classify_t1_table(max_rank)?, out),
        Command::Bwb { cartan_type, parabolic, weight } => emit(&bwb(&cartan_type, &parabolic, &weight)?, out),
        Command::T1Cone { hankel, segre, window } => {
            let cone = match (hankel, segre.as_deref()) {
                (Some(m), _) => ConeFamily::Hankel { m },
                (None, Some(&[m, n])) => ConeFamily::Segre { m, n },
                _ => unreachable!("clap enforces one of --hankel or --segre M N"),
            };
            let w = window.as_deref().map(parse_window).transpose()?;
            emit(&t1_cone(cone, w)?, out)
        }
        Command::Flatness { m, n, samples, triviality_samples, seed } => emit(&flatness(m, n, samples, triviality_samples, seed)?, out),
        Command::JordanCheck { label, seed } => {
            let labels = match label {
                Some(l) => vec![l.parse::<JordanLabel>()?],
                None => JordanLabel::panel(),
            };
            emit(&jordan_check(&labels, seed)?, out)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
