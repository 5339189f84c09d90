use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use optbwt::{
    build_sap, build_suffix_array, compare, count_runs, extract_bwt, generate, invert_bwt,
    optimize, sap_heuristic, BwtString, InputFormat, StringCollection, StringOrdering,
};

#[derive(Parser)]
#[command(
    name = "optbwt",
    version,
    about = "BWT of string collections with SAP-array and run-minimal rewriting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the BWT of a collection, optionally rewriting it
    Build(BuildArgs),
    /// Print length, run count and mean run length of a BWT file
    Stats {
        /// BWT file, or '-' for stdin
        file: String,
    },
    /// Recover the collection from a BWT file
    Invert(InvertArgs),
    /// Report the run counts of all five BWT variants of a collection
    Compare(CompareArgs),
    /// Write a seeded random collection
    Gen(GenArgs),
}

#[derive(clap::Args)]
struct BuildArgs {
    /// Input file, or '-' for stdin
    #[arg(short, long)]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatOpt::Lines)]
    format: FormatOpt,
    /// Arrangement of the strings before the transform
    #[arg(long, value_enum, default_value_t = OrderOpt::Input)]
    order: OrderOpt,
    /// Within-interval rewrite applied to the constructed BWT
    #[arg(long, value_enum, default_value_t = RewriteOpt::None)]
    rewrite: RewriteOpt,
    /// Output BWT file (raw bytes, sentinel '$', no trailing newline)
    #[arg(short, long)]
    output: PathBuf,
    /// Also write the SAP-array of the constructed BWT (before rewriting)
    #[arg(long)]
    sap: Option<PathBuf>,
    /// Also write a run-length encoding of the final BWT
    #[arg(long)]
    rle: Option<PathBuf>,
}

#[derive(clap::Args)]
struct InvertArgs {
    /// BWT file, or '-' for stdin
    file: String,
    /// Output file; stdout when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormatOpt::Lines)]
    format: OutputFormatOpt,
}

#[derive(clap::Args)]
struct CompareArgs {
    /// Input file, or '-' for stdin
    #[arg(short, long)]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatOpt::Lines)]
    format: FormatOpt,
    /// Print machine-readable key=value lines instead of the table
    #[arg(long)]
    kv: bool,
}

#[derive(clap::Args)]
struct GenArgs {
    /// Number of strings
    #[arg(long)]
    num: usize,
    #[arg(long)]
    minlen: usize,
    #[arg(long)]
    maxlen: usize,
    /// Symbols to draw from
    #[arg(long, default_value = "ACGT")]
    alphabet: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (lines format); stdout when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatOpt {
    Fasta,
    Fastq,
    Lines,
}

impl From<FormatOpt> for InputFormat {
    fn from(f: FormatOpt) -> Self {
        match f {
            FormatOpt::Fasta => InputFormat::Fasta,
            FormatOpt::Fastq => InputFormat::Fastq,
            FormatOpt::Lines => InputFormat::Lines,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderOpt {
    Input,
    Lex,
    Colex,
}

impl From<OrderOpt> for StringOrdering {
    fn from(o: OrderOpt) -> Self {
        match o {
            OrderOpt::Input => StringOrdering::Input,
            OrderOpt::Lex => StringOrdering::Lex,
            OrderOpt::Colex => StringOrdering::Colex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RewriteOpt {
    None,
    Sap,
    Opt,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormatOpt {
    Lines,
    Fasta,
}

fn main() {
    if let Err(err) = run(Cli::parse()) {
        eprintln!("optbwt: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build(args) => build(args),
        Command::Stats { file } => stats(&file),
        Command::Invert(args) => invert(args),
        Command::Compare(args) => compare_cmd(args),
        Command::Gen(args) => gen(args),
    }
}

fn read_source(source: &str) -> Result<Vec<u8>> {
    if source == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(source).with_context(|| format!("reading {source}"))
    }
}

fn write_file(path: &Path, data: &[u8]) -> Result<()> {
    fs::write(path, data).with_context(|| format!("writing {}", path.display()))
}

fn write_out(path: Option<&Path>, data: &[u8]) -> Result<()> {
    match path {
        Some(path) => write_file(path, data),
        None => io::stdout().write_all(data).context("writing stdout"),
    }
}

fn parse_collection(source: &str, format: FormatOpt) -> Result<StringCollection> {
    let data = read_source(source)?;
    StringCollection::parse(&data, format.into())
        .with_context(|| format!("parsing {source}"))
}

fn build(args: BuildArgs) -> Result<()> {
    if args.input != "-" {
        let input = Path::new(&args.input);
        for out in [Some(&args.output), args.sap.as_ref(), args.rle.as_ref()].into_iter().flatten()
        {
            if out.as_path() == input {
                bail!("output path {} equals the input path", out.display());
            }
        }
    }
    let coll = parse_collection(&args.input, args.format)?;
    let reordered = coll.reorder(&args.order.into())?;
    let sa = build_suffix_array(&reordered);
    let bwt = extract_bwt(&reordered, &sa)?;

    let sap = match (&args.sap, args.rewrite) {
        (None, RewriteOpt::None) => None,
        _ => Some(build_sap(&reordered, &sa)?),
    };
    if let Some(path) = &args.sap {
        write_file(path, &sap.as_ref().unwrap().to_ascii())?;
    }

    let final_bwt = match args.rewrite {
        RewriteOpt::None => bwt,
        RewriteOpt::Sap => sap_heuristic(&bwt, sap.as_ref().unwrap())?,
        RewriteOpt::Opt => optimize(&bwt, sap.as_ref().unwrap())?,
    };
    write_file(&args.output, final_bwt.as_bytes())?;
    if let Some(path) = &args.rle {
        write_file(path, &final_bwt.to_rle())?;
    }
    Ok(())
}

fn stats(file: &str) -> Result<()> {
    let bwt = read_source(file)?;
    let stats = count_runs(&bwt).with_context(|| format!("counting runs of {file}"))?;
    print!("n={}\nr={}\nn/r={:.4}\n", stats.n, stats.r, stats.mean_run());
    Ok(())
}

fn invert(args: InvertArgs) -> Result<()> {
    if let Some(out) = &args.output {
        if args.file != "-" && out.as_path() == Path::new(&args.file) {
            bail!("output path {} equals the input path", out.display());
        }
    }
    let bytes = read_source(&args.file)?;
    let coll = invert_bwt(&BwtString::from_bytes(bytes))
        .with_context(|| format!("inverting {}", args.file))?;
    let rendered = match args.format {
        OutputFormatOpt::Lines => coll.to_lines(),
        OutputFormatOpt::Fasta => coll.to_fasta(),
    };
    write_out(args.output.as_deref(), &rendered)
}

fn compare_cmd(args: CompareArgs) -> Result<()> {
    let coll = parse_collection(&args.input, args.format)?;
    let report = compare(&coll)?;
    if args.kv {
        print!("{}", report.kv_lines());
    } else {
        print!("{}", report.table());
    }
    Ok(())
}

fn gen(args: GenArgs) -> Result<()> {
    let coll = generate(
        args.num,
        (args.minlen, args.maxlen),
        args.alphabet.as_bytes(),
        args.seed,
    )?;
    write_out(args.output.as_deref(), &coll.to_lines())
}
