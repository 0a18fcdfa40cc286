use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use cardcodes_core::search::{satisfies, DEFAULT_TIMEOUT};
use cardcodes_core::{
    builtin_fixture, check_ca2_ca3, check_informative, check_min_informative, check_safe, check_solvability_bounds,
    decode_full, decode_min, dual_protocol, dual_protocol_unchecked, find_coloring, graph_stats, learned_card,
    reduce_protocol, tabulate, Coloring, Constraints, Error, FieldWeights, GraphSpec, Hand, Informativeness,
    MessageId, Outcome, Protocol, Report, Safety, Signature, Solvability, WitnessMode, FIXTURE_NAMES,
};
use clap::{Parser, Subcommand, ValueEnum};

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

/// Exit statuses.
const OK: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "cardcodes", version, about = "Card-deal announcement protocols as Johnson graph colorings")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Search time limit in seconds; 0 disables the limit.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a protocol into a coloring file.
    Gen {
        /// modn, mod2, gf, or fixture:NAME.
        #[arg(long)]
        protocol: String,
        #[arg(long)]
        sig: Option<Signature>,
        /// Number of symmetric polynomials for gf.
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Field size for gf (default: least prime >= n).
        #[arg(long)]
        q: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check informativeness and safety predicates.
    Verify {
        /// Coloring file, or fixture:NAME.
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        sig: Option<Signature>,
        #[arg(long, value_delimiter = ',', default_value = "informative,safe")]
        checks: Vec<Check>,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Decode an announcement from B's point of view.
    Decode {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        sig: Option<Signature>,
        /// B's hand.
        #[arg(long)]
        hand: Hand,
        #[arg(long)]
        msg: MessageId,
        #[arg(long, value_enum, default_value_t = DecodeMode::Full)]
        mode: DecodeMode,
    },
    /// Search for a coloring under constraints.
    Search {
        #[arg(long)]
        sig: Signature,
        #[arg(short)]
        k: usize,
        /// proper or min, optionally with safe or weaksafe.
        #[arg(long, value_delimiter = ',', default_value = "proper")]
        constraints: Vec<ConstraintName>,
        /// Required class sizes.
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
        #[arg(long)]
        no_symmetry: bool,
        /// Extra necessary condition for safe searches.
        #[arg(long)]
        double_cover: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complement transform onto signature (b+1, a-1, c, r).
    Dual {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        sig: Option<Signature>,
        /// Skip the c+r=1 requirement.
        #[arg(long)]
        unchecked: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce message ids to a minimally informative protocol.
    Reduce {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        sig: Option<Signature>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structure of J^d(n,m), given directly or as B's graph of a signature.
    Stats {
        #[arg(long, conflicts_with_all = ["n", "m", "d"])]
        sig: Option<Signature>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Informative,
    Min,
    Safe,
    Ca23,
    Bounds,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecodeMode {
    Full,
    Min,
    Card,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintName {
    Proper,
    Min,
    Safe,
    Weaksafe,
}

/// A failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InconsistentAnnouncement(_) | Error::Ambiguous(_) | Error::NotMinimallyInformative(_) => FALSE,
            _ => USAGE,
        };
        Failure(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    let timeout = match cli.timeout {
        None => Some(DEFAULT_TIMEOUT),
        Some(0) => None,
        Some(s) => Some(Duration::from_secs(s)),
    };
    let parallel = cli.jobs != Some(1);
    let result = match cli.command {
        Command::Gen { protocol, sig, d, q, output } => gen(&protocol, sig, d, q, output.as_deref()),
        Command::Verify { coloring, sig, checks, all_witnesses } => verify(&coloring, sig, &checks, all_witnesses),
        Command::Decode { coloring, sig, hand, msg, mode } => decode(&coloring, sig, hand, msg, mode),
        Command::Search { sig, k, constraints, profile, no_symmetry, double_cover, output } => {
            let opts = SearchOpts { k, profile, no_symmetry, double_cover, timeout, parallel };
            search(&sig, &constraints, opts, output.as_deref())
        }
        Command::Dual { coloring, sig, unchecked, output } => dual(&coloring, sig, unchecked, output.as_deref()),
        Command::Reduce { coloring, sig, output } => reduce(&coloring, sig, output.as_deref()),
        Command::Stats { sig, n, m, d } => stats(sig, n, m, d),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

/// Resolves `fixture:NAME`, a file path, or a bare fixture name.
fn load(source: &str, sig: Option<Signature>) -> Result<(Coloring, Signature), Failure> {
    let fixture = source
        .strip_prefix("fixture:")
        .or_else(|| (!Path::new(source).exists() && FIXTURE_NAMES.contains(&source)).then_some(source));
    let (col, own) = match fixture {
        Some(name) => {
            let (col, own) = builtin_fixture(name)?;
            (col, Some(own))
        }
        None => {
            let text = fs::read_to_string(source).map_err(|e| Failure(USAGE, format!("{source}: {e}")))?;
            let col: Coloring = text.parse().map_err(|e: Error| Failure(USAGE, format!("{source}: {e}")))?;
            (col, None)
        }
    };
    let sig = sig.or(own).ok_or_else(|| Failure(USAGE, "--sig is required for coloring files".into()))?;
    col.check_dimensions(&sig)?;
    Ok((col, sig))
}

fn emit(col: &Coloring, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            fs::write(path, col.to_string()).map_err(|e| Failure(USAGE, format!("{}: {e}", path.display())))?;
            out!("written={}", path.display());
        }
        None => {
            use std::io::Write;
            let _ = write!(std::io::stdout(), "{col}");
        }
    }
    Ok(())
}

fn summary(col: &Coloring, to_stdout: bool) {
    let mut sizes = col.class_sizes();
    sizes.sort_unstable();
    let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
    let lines = [format!("message_count={}", col.message_count()), format!("class_sizes={}", sizes.join(","))];
    for line in lines {
        if to_stdout {
            out!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

fn gen(protocol: &str, sig: Option<Signature>, d: usize, q: Option<u64>, output: Option<&Path>) -> CmdResult {
    let (col, sig) = if let Some(name) = protocol.strip_prefix("fixture:") {
        load(&format!("fixture:{name}"), sig)?
    } else {
        let sig = sig.ok_or_else(|| Failure(USAGE, "--sig is required".into()))?;
        let kind = match protocol {
            "modn" => Protocol::ModN,
            "mod2" => Protocol::Parity,
            "gf" => {
                let weights = match q {
                    Some(q) => FieldWeights::identity_mod(sig.n(), q)?,
                    None => FieldWeights::identity(sig.n()),
                };
                Protocol::Gf { weights, d }
            }
            other => return Err(Failure(USAGE, format!("unknown protocol `{other}`"))),
        };
        (tabulate(&kind, &sig)?, sig)
    };
    let to_stdout = output.is_some();
    emit(&col, output)?;
    if to_stdout {
        out!("sig={sig}");
    }
    summary(&col, to_stdout);
    Ok(OK)
}

fn print_report(name: &str, report: &Report) {
    out!("{name}={} checked={} witnesses={}", report.verdict, report.checked_count, report.witnesses.len());
    for w in &report.witnesses {
        out!("{w}");
    }
}

fn verify(source: &str, sig: Option<Signature>, checks: &[Check], all: bool) -> CmdResult {
    let (col, sig) = load(source, sig)?;
    let mode = if all { WitnessMode::All } else { WitnessMode::First };
    let mut pass = true;
    for check in checks {
        let (name, report) = match check {
            Check::Informative => ("informative", check_informative(&col, &sig, mode)?),
            Check::Min => ("min_informative", check_min_informative(&col, &sig, mode)?),
            Check::Safe => ("safe", check_safe(&col, &sig, mode)?),
            Check::Ca23 => ("ca2_ca3", check_ca2_ca3(&col, &sig, mode)?),
            Check::Bounds => {
                let b = check_solvability_bounds(&sig);
                out!("bounds={}", b.informative_safe_possible);
                for r in &b.reasons {
                    out!("reason={r}");
                }
                pass &= b.informative_safe_possible != Solvability::Impossible;
                continue;
            }
        };
        pass &= report.verdict;
        print_report(name, &report);
    }
    Ok(if pass { OK } else { FALSE })
}

fn decode(source: &str, sig: Option<Signature>, hand: Hand, msg: MessageId, mode: DecodeMode) -> CmdResult {
    let (col, sig) = load(source, sig)?;
    match mode {
        DecodeMode::Full => out!("hand={}", decode_full(hand, msg, &col, &sig)?),
        DecodeMode::Min => out!("set={}", decode_min(hand, msg, &col, &sig)?),
        DecodeMode::Card => out!("card={}", learned_card(hand, msg, &col, &sig)?),
    }
    Ok(OK)
}

struct SearchOpts {
    k: usize,
    profile: Option<Vec<usize>>,
    no_symmetry: bool,
    double_cover: bool,
    timeout: Option<Duration>,
    parallel: bool,
}

fn search(sig: &Signature, names: &[ConstraintName], opts: SearchOpts, output: Option<&Path>) -> CmdResult {
    let mut inf = Informativeness::None;
    let mut safety = Safety::None;
    for name in names {
        match name {
            ConstraintName::Proper => inf = Informativeness::Proper,
            ConstraintName::Min => inf = Informativeness::MinInformative,
            ConstraintName::Safe => safety = Safety::Safe,
            ConstraintName::Weaksafe => safety = Safety::WeakSafe,
        }
    }
    let mut cons = Constraints::new(inf, safety, opts.k)
        .with_timeout(opts.timeout)
        .with_symmetry_breaking(!opts.no_symmetry)
        .with_double_cover_pruning(opts.double_cover)
        .with_parallel(opts.parallel);
    cons.size_profile = opts.profile;
    let res = find_coloring(sig, &cons)?;
    out!("outcome={}", res.outcome);
    out!("nodes={}", res.nodes_explored);
    out!("elapsed_ms={}", res.elapsed.as_millis());
    match &res.outcome {
        Outcome::Sat(col) => {
            out!("verified={}", satisfies(col, sig, &cons)?);
            summary(col, true);
            if let Some(path) = output {
                emit(col, Some(path))?;
            }
            Ok(OK)
        }
        Outcome::Unsat => Ok(FALSE),
        Outcome::Timeout => Ok(TIMEOUT),
    }
}

fn dual(source: &str, sig: Option<Signature>, unchecked: bool, output: Option<&Path>) -> CmdResult {
    let (col, sig) = load(source, sig)?;
    let (out, target) = if unchecked {
        let target = Signature::new(sig.b() + 1, sig.a() - 1, sig.c(), sig.r())?;
        (dual_protocol_unchecked(&col)?, target)
    } else {
        dual_protocol(&col, &sig)?
    };
    let to_stdout = output.is_some();
    emit(&out, output)?;
    if to_stdout {
        out!("sig={target}");
    } else {
        eprintln!("sig={target}");
    }
    Ok(OK)
}

fn reduce(source: &str, sig: Option<Signature>, output: Option<&Path>) -> CmdResult {
    let (col, sig) = load(source, sig)?;
    let out = reduce_protocol(&col, &sig)?;
    let to_stdout = output.is_some();
    emit(&out, output)?;
    summary(&out, to_stdout);
    Ok(OK)
}

fn stats(sig: Option<Signature>, n: Option<usize>, m: Option<usize>, d: usize) -> CmdResult {
    let spec = match (sig, n, m) {
        (Some(sig), _, _) => GraphSpec::of_signature(&sig),
        (None, Some(n), Some(m)) => GraphSpec::new(n, m, d)?,
        _ => return Err(Failure(USAGE, "give --sig or --n and --m".into())),
    };
    out!("graph={spec}");
    out!("{}", graph_stats(&spec)?);
    Ok(OK)
}
