mod step;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gnfakit::check::{check_machine, check_regexp, check_trace, CheckReport};
use gnfakit::n2r::ndfa_to_regexp;
use gnfakit::r2n::regexp_to_ndfa_over;
use gnfakit::regex::{gen_word, parse_regexp, simplify, DEFAULT_MAX_STAR_REPS};
use gnfakit::trace::frame_to_dot;
use gnfakit::{Nfa, Regexp, Trace};

#[derive(Parser)]
#[command(
    name = "gnfakit",
    version,
    about = "Regexp <-> NFA conversions through GNFAs, step by step"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a regular expression to an NFA, recording every expansion.
    R2n {
        regexp: String,
        /// Alphabet, e.g. "abc". Defaults to the symbols of the regexp.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Both)]
        format: Format,
    },
    /// Convert a machine (JSON file) to a regular expression by ripping states.
    N2r {
        machine: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Both)]
        format: Format,
        /// Also write and print the simplified regexp.
        #[arg(long)]
        simplify: bool,
    },
    /// Check that the conversion routes agree on all words up to --maxlen.
    ///
    /// INPUT is a machine JSON file, a trace JSON file, or regexp text.
    Check {
        input: String,
        #[arg(long, default_value_t = 5)]
        maxlen: usize,
        /// Alphabet for regexp input. Defaults to the regexp's symbols.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Step through a trace: → next, ← previous, ↓ end, ↑ start, q quit.
    ///
    /// Without a terminal every frame is printed in order.
    Step {
        trace: PathBuf,
        /// Replay keys non-interactively: n(ext) p(rev) e(nd) s(tart) q(uit).
        #[arg(long)]
        keys: Option<String>,
        /// Where frame DOT files live. Defaults to the trace's directory.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Print words drawn at random from a regexp's language.
    Gen {
        regexp: String,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_STAR_REPS)]
        max_reps: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::R2n {
            regexp,
            sigma,
            out,
            format,
        } => cmd_r2n(&regexp, sigma.as_deref(), &out, format),
        Command::N2r {
            machine,
            out,
            format,
            simplify,
        } => cmd_n2r(&machine, &out, format, simplify),
        Command::Check {
            input,
            maxlen,
            sigma,
        } => cmd_check(&input, maxlen, sigma.as_deref()),
        Command::Step {
            trace,
            keys,
            dot_dir,
        } => step::cmd_step(&trace, keys.as_deref(), dot_dir.as_deref()),
        Command::Gen {
            regexp,
            count,
            seed,
            max_reps,
        } => cmd_gen(&regexp, count, seed, max_reps),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn parse_sigma(sigma: &str) -> Vec<char> {
    let mut cs: Vec<char> = sigma.chars().filter(|c| !c.is_whitespace()).collect();
    cs.sort_unstable();
    cs.dedup();
    cs
}

fn read_regexp(text: &str, sigma: Option<&str>) -> Result<(Regexp, Vec<char>)> {
    let sigma = sigma.map(parse_sigma);
    let r =
        parse_regexp(text, sigma.as_deref()).with_context(|| format!("cannot parse {text:?}"))?;
    let sigma = sigma.unwrap_or_else(|| r.symbols().into_iter().collect());
    Ok((r, sigma))
}

fn read_machine(path: &Path) -> Result<Nfa> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid machine in {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

pub(crate) fn dot_file_name(index: usize) -> String {
    format!("frame_{index:03}.dot")
}

fn write_trace(trace: &Trace, out: &Path, format: Format) -> Result<()> {
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    if format != Format::Dot {
        write_file(
            &out.join("trace.json"),
            &(serde_json::to_string_pretty(trace)? + "\n"),
        )?;
    }
    if format != Format::Json {
        for frame in trace.frames() {
            write_file(&out.join(dot_file_name(frame.index)), &frame_to_dot(frame))?;
        }
    }
    Ok(())
}

fn cmd_r2n(text: &str, sigma: Option<&str>, out: &Path, format: Format) -> Result<ExitCode> {
    let (r, sigma) = read_regexp(text, sigma)?;
    let (machine, trace) = regexp_to_ndfa_over(&r, &sigma);
    write_trace(&trace, out, format)?;
    write_file(
        &out.join("machine.json"),
        &(serde_json::to_string_pretty(&machine)? + "\n"),
    )?;
    let plural = if trace.len() == 1 { "" } else { "s" };
    println!("{} frame{plural} written to {}", trace.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_n2r(machine: &Path, out: &Path, format: Format, simplified: bool) -> Result<ExitCode> {
    let m = read_machine(machine)?;
    let (r, trace) = ndfa_to_regexp(&m);
    write_trace(&trace, out, format)?;
    write_file(&out.join("regexp.txt"), &format!("{r}\n"))?;
    println!("{r}");
    if simplified {
        let s = simplify(&r);
        write_file(&out.join("regexp.simplified.txt"), &format!("{s}\n"))?;
        println!("{s}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(input: &str, maxlen: usize, sigma: Option<&str>) -> Result<ExitCode> {
    let path = Path::new(input);
    let report = if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {input}"))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).with_context(|| format!("{input} is not JSON"))?;
        if value.get("frames").is_some() {
            let trace: Trace = serde_json::from_value(value)
                .with_context(|| format!("invalid trace in {input}"))?;
            check_trace(&trace, maxlen)
        } else {
            let m: Nfa = serde_json::from_value(value)
                .with_context(|| format!("invalid machine in {input}"))?;
            check_machine(&m, maxlen)
        }
    } else {
        let (r, sigma) = read_regexp(input, sigma)?;
        check_regexp(&r, &sigma, maxlen)
    };
    Ok(print_report(&report))
}

fn print_report(report: &CheckReport) -> ExitCode {
    print!("{report}");
    match report.shortest_counterexample() {
        None => {
            println!("EQUIVALENT (all words up to length {})", report.maxlen);
            ExitCode::SUCCESS
        }
        Some((name, w)) => {
            println!("NOT EQUIVALENT: {name} differ on {w}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_gen(text: &str, count: u64, seed: u64, max_reps: usize) -> Result<ExitCode> {
    let (r, _) = read_regexp(text, None)?;
    if r.is_empty_language() {
        bail!("{r} denotes the empty language");
    }
    for i in 0..count {
        let w = gen_word(&r, seed.wrapping_add(i), max_reps)?;
        println!("{w}");
    }
    Ok(ExitCode::SUCCESS)
}
