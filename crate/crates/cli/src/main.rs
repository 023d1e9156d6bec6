use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use debruijn_gsr::bench::{bench_table, TSV_HEADER};
use debruijn_gsr::verify::run_suites;
use debruijn_gsr::{
    cfl, filling_the_gap, format_word, generate_sequence, gsr_variant, lnext, parse_word, Format,
    Params, Symbol, Variant, Word,
};

/// Generalized shift rule for the prefer-min and prefer-max De Bruijn sequences.
#[derive(Parser)]
#[command(name = "dbgsr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the whole sequence, or its first --limit symbols.
    Generate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = Variant::Min)]
        variant: Variant,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Print the --count symbols that follow --word.
    Gsr {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = Variant::Min)]
        variant: Variant,
    },
    /// Print the single symbol that follows --word.
    Next {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = Variant::Min)]
        variant: Variant,
    },
    /// Print the block and the fill for --word, one per line.
    Ftg {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        word: String,
    },
    /// Print the next Lyndon word whose length divides n.
    Lnext {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        word: String,
    },
    /// Print the Lyndon factorization of --word, factors separated by `|`.
    Cfl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        word: String,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Check the fast algorithms against the brute-force oracles.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Time the shift rule on seeded random words and print a TSV table.
    Bench {
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<usize>,
        #[arg(long, default_value_t = 31)]
        reps: usize,
        #[arg(long, default_value_t = 3)]
        warmup: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// digits (default when k <= 10) or csv.
    #[arg(long)]
    format: Option<Format>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<(Params, Format), CliError> {
        let p = Params::new(self.n, self.k)?;
        let format = self.format.unwrap_or_else(|| Format::default_for(&p));
        Ok((p, format))
    }
}

enum CliError {
    Input(debruijn_gsr::Error),
    Usage(String),
    Io(io::Error),
}

impl From<debruijn_gsr::Error> for CliError {
    fn from(e: debruijn_gsr::Error) -> Self {
        CliError::Input(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

const CHUNK: usize = 1 << 16;
const BENCH_SEED: u64 = 0xdb_5eed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dbgsr: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_word(text: &str, p: &Params, format: Format) -> Result<Word, CliError> {
    let w = parse_word(text, p, format)?;
    p.check_word(&w)?;
    Ok(w)
}

fn print_line(line: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    writeln!(out, "{line}")?;
    out.flush()?;
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Generate {
            params,
            variant,
            limit,
        } => {
            let (p, format) = params.resolve()?;
            // Validate the format before the first chunk goes out.
            format_word(&[], &p, format)?;
            let mut stream = generate_sequence(&p, variant, limit);
            let mut out = BufWriter::new(io::stdout().lock());
            let mut buf: Vec<Symbol> = Vec::with_capacity(CHUNK);
            let mut first = true;
            loop {
                buf.clear();
                if stream.fill_chunk(&mut buf, CHUNK) == 0 {
                    break;
                }
                if !first && format == Format::Csv {
                    out.write_all(b",")?;
                }
                first = false;
                out.write_all(format_word(&buf, &p, format)?.as_bytes())?;
            }
            out.write_all(b"\n")?;
            out.flush()?;
        }
        Command::Gsr {
            params,
            word,
            count,
            variant,
        } => {
            let (p, format) = params.resolve()?;
            let w = read_word(&word, &p, format)?;
            let out = gsr_variant(&w, count, &p, variant)?;
            print_line(&format_word(&out, &p, format)?)?;
        }
        Command::Next {
            params,
            word,
            variant,
        } => {
            let (p, format) = params.resolve()?;
            let w = read_word(&word, &p, format)?;
            let out = gsr_variant(&w, 1, &p, variant)?;
            print_line(&format_word(&out, &p, format)?)?;
        }
        Command::Ftg { params, word } => {
            let (p, format) = params.resolve()?;
            let w = read_word(&word, &p, format)?;
            let gap = filling_the_gap(&w, &p)?;
            print_line(&format_word(&gap.lyndon, &p, format)?)?;
            print_line(&format_word(&gap.fill, &p, format)?)?;
        }
        Command::Lnext { params, word } => {
            let (p, format) = params.resolve()?;
            let l = parse_word(&word, &p, format)?;
            print_line(&format_word(&lnext(&l, &p)?, &p, format)?)?;
        }
        Command::Cfl { k, word, format } => {
            // n only bounds symbol parsing here; any n >= 1 works.
            let p = Params::new(1, k)?;
            let format = format.unwrap_or_else(|| Format::default_for(&p));
            let w = parse_word(&word, &p, format)?;
            let factors = cfl(&w)?
                .into_factors()
                .iter()
                .map(|f| format_word(f, &p, format))
                .collect::<Result<Vec<_>, _>>()?;
            print_line(&factors.join("|"))?;
        }
        Command::Verify { n, k, exhaustive } => {
            let p = Params::new(n, k)?;
            let reports = run_suites(&p, exhaustive)?;
            let mut out = io::stdout().lock();
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            out.flush()?;
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            n,
            c,
            reps,
            warmup,
            k,
        } => {
            if n.is_empty() || c.is_empty() {
                return Err(CliError::Usage(
                    "bench needs non-empty --n and --c lists".into(),
                ));
            }
            let mut rng = StdRng::seed_from_u64(BENCH_SEED);
            let mut cases = Vec::with_capacity(n.len() * c.len());
            for &len in &n {
                let p = Params::new(len, k)?;
                let w: Word = (0..len).map(|_| rng.random_range(0..k)).collect();
                for &count in &c {
                    cases.push((w.clone(), count, p));
                }
            }
            let rows = bench_table(&cases, reps, warmup)?;
            let mut out = io::stdout().lock();
            writeln!(out, "{TSV_HEADER}")?;
            for row in rows {
                writeln!(out, "{}", row.to_tsv())?;
            }
            out.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
