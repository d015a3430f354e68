use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ppsp_census::arith::fundamental_discriminant;
use ppsp_census::census::Fault;
use ppsp_census::quadratic::{zeta_bernoulli, zeta_siegel};
use ppsp_census::report::{census_range, markdown_table, record_for, verify, write_csv, OutputRecord};
use ppsp_census::{Error, PrimeInput};

#[derive(Parser)]
#[command(name = "ppsp", version, about = "Counts superspecial abelian surfaces over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    RefinedHMinusP,
}

#[derive(Subcommand)]
enum Command {
    /// Full census for q = p^n.
    Census {
        q: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also print the alternative type-number expression for p ≡ 1 (mod 4).
        #[arg(long)]
        diagnostic: bool,
    },
    /// Census for every prime in [p_min, p_max].
    Range {
        p_min: u64,
        p_max: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, env = "CENSUS_JOBS")]
        jobs: Option<usize>,
    },
    /// Checks every identity for all primes up to p_max.
    Verify {
        p_max: u64,
        #[arg(long, env = "CENSUS_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// ζ_F(-1) for F = Q(√p) by both routes.
    Zeta { p: u64 },
}

fn render(records: &[OutputRecord], format: Format, diagnostic: bool, lines: bool) -> Result<String, Error> {
    Ok(match format {
        Format::Json if lines => records.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Json => records.iter().map(|r| r.to_json_pretty() + "\n").collect(),
        Format::Csv => write_csv(records, diagnostic)?,
        Format::Markdown => markdown_table(records),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Census { q, format, diagnostic } => {
            let rec = record_for(q, diagnostic)?;
            print!("{}", render(&[rec], format, diagnostic, false)?);
        }
        Command::Range { p_min, p_max, format, jobs } => {
            let recs = census_range(p_min, p_max, jobs, false)?;
            print!("{}", render(&recs, format, false, true)?);
        }
        Command::Verify { p_max, jobs, inject_fault } => {
            let fault = inject_fault.map(|FaultArg::RefinedHMinusP| Fault::RefinedHMinusP);
            let summary = verify(p_max, jobs, fault)?;
            print!("{summary}");
            if !summary.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Zeta { p } => {
            let p = PrimeInput::new(p)?;
            let d_f = fundamental_discriminant(p.as_i64())?;
            let siegel = zeta_siegel(d_f);
            let bernoulli = zeta_bernoulli(d_f);
            println!("p = {p}, d_F = {d_f}");
            println!("siegel    {siegel}");
            println!("bernoulli {bernoulli}");
            if siegel != bernoulli {
                eprintln!("the two routes disagree");
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let input_error = matches!(
                e,
                Error::NotPrime(_)
                    | Error::NotPrimePower(_)
                    | Error::Precondition(_)
                    | Error::ResidueClass { .. }
            );
            ExitCode::from(if input_error { 2 } else { 1 })
        }
    }
}
