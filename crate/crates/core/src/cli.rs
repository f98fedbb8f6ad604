//! Command-line front end. Every subcommand prints exact values, `p/q` or `n`.
//!
//! Exit codes: `0` success, `1` domain or validation error, `2` parse error
//! (including malformed command lines).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cocycle::tau_sp;
use crate::data::{DataSet, GENUS2_FILE, SL2Z_FILE};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fibered::{
    euler_contribution, geography_convert, geography_invert, horikawa_total, hyperelliptic_twist_value,
    sigma_alg_hyperelliptic, signature_report, total_euler, FibrationDescription, Geography, TwistKind,
};
use crate::genus1::{dedekind_sum_euclid, phi1, rademacher, SL2Element};
use crate::presentations::{ClassOrder, Presentation};
use crate::selftest;
use crate::symplectic::{random_symplectic_with, SymplecticMatrix};

/// Words longer than this are refused on the command line.
pub const MAX_WORD_LETTERS: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "meyer", version, about = "Exact signature cocycle and Meyer function calculator")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Run the randomised invariant suites and exit.
    #[arg(long)]
    selftest: bool,

    /// Seed for every randomised computation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Directory overriding the embedded sl2z.json, genus2.json and kodaira.json.
    #[arg(long, global = true, value_name = "DIR")]
    data: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature cocycle tau_g(A, B).
    Tau {
        #[arg(short, long)]
        genus: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Genus-1 Meyer function of a matrix in SL(2; Z).
    Phi1 {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Dedekind sum s(a, c).
    Dedekind {
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
        #[arg(allow_hyphen_values = true)]
        c: BigInt,
    },
    /// Rademacher function of a matrix in SL(2; Z).
    Rademacher {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Order of the signature class on a presentation ("infinite" if unbounded).
    Order {
        #[arg(short, long, value_name = "FILE")]
        presentation: PathBuf,
        /// Also print m and the per-generator coefficients.
        #[arg(long)]
        verbose: bool,
    },
    /// Value of the Meyer function synthesised from a presentation.
    Phi {
        #[arg(short, long, value_name = "FILE")]
        presentation: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Local signatures of the germs in a fibration file, then the total.
    LocalSig {
        #[arg(short, long, value_name = "FILE")]
        file: PathBuf,
    },
    /// Euler number of a fibration, or one fiber's contribution with --fiber-chi.
    Euler(EulerArgs),
    /// Convert (K^2, chi(O)) to (Sign, chi_top), or back with --invert.
    Geo {
        #[arg(long)]
        invert: bool,
        #[arg(allow_hyphen_values = true)]
        first: Rational,
        #[arg(allow_hyphen_values = true)]
        second: Rational,
    },
    /// Hyperelliptic local signature (g H - (g + 1) e) / (2g + 1).
    SigmaAlg {
        #[arg(short, long)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        horikawa: Rational,
        #[arg(long, allow_hyphen_values = true)]
        eps: i64,
    },
    /// Total Horikawa index K^2 - (4(g - 1)/g) chi_f.
    Horikawa {
        #[arg(short, long)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi_f: Rational,
    },
    /// Hyperelliptic Meyer function on a Dehn twist.
    TwistValue(TwistArgs),
    /// A pseudo-random element of Sp(2g; Z), controlled by --seed.
    RandomSp {
        #[arg(short, long)]
        genus: usize,
        #[arg(short, long, default_value_t = 10)]
        length: usize,
    },
}

#[derive(Args, Debug)]
struct EulerArgs {
    #[arg(short, long, allow_hyphen_values = true)]
    genus: i64,
    /// Genus of the base surface.
    #[arg(short, long, default_value_t = 0)]
    base_genus: i64,
    /// Print epsilon(F) for a singular fiber of this Euler characteristic instead.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "contributions")]
    fiber_chi: Option<i64>,
    /// Euler contributions of the singular fibers.
    #[arg(allow_hyphen_values = true)]
    contributions: Vec<i64>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").required(true).args(["sep", "nonsep"])))]
struct TwistArgs {
    #[arg(short, long)]
    genus: u32,
    /// Separating curve bounding a genus-h subsurface.
    #[arg(long, value_name = "h")]
    sep: Option<u32>,
    /// Non-separating curve.
    #[arg(long)]
    nonsep: bool,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        2
    } else {
        1
    }
}

fn parse_matrix(text: &str, genus: Option<usize>) -> Result<SymplecticMatrix> {
    let m = SymplecticMatrix::parse(text)?;
    match genus {
        Some(g) if g != m.genus() => Err(Error::DimensionMismatch {
            expected: format!("{0}x{0} matrix", 2 * g),
            found: format!("{0}x{0}", 2 * m.genus()),
        }),
        _ => Ok(m),
    }
}

fn parse_sl2(text: &str) -> Result<SL2Element> {
    SL2Element::try_from(parse_matrix(text, Some(1))?)
}

/// Reads a presentation file. A missing `sl2z.json` or `genus2.json` resolves
/// to the copy in the data set.
fn load_presentation(path: &Path, data: &DataSet) -> Result<Presentation> {
    if path.exists() {
        return Presentation::from_json(&fs::read_to_string(path)?);
    }
    match path.file_name().and_then(|n| n.to_str()) {
        Some(SL2Z_FILE) | Some("sl2z") => Ok(data.sl2z.clone()),
        Some(GENUS2_FILE) | Some("genus2") => Ok(data.genus2.clone()),
        _ => Err(Error::Io(format!("{}: no such file", path.display()))),
    }
}

fn check_word_length(text: &str) -> Result<()> {
    let letters = text.split(|c: char| c.is_whitespace()).filter(|t| !t.is_empty()).count();
    if text.len() > 8 * MAX_WORD_LETTERS || letters > MAX_WORD_LETTERS {
        return Err(Error::Domain(format!("word longer than {MAX_WORD_LETTERS} letters")));
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let data = match &cli.data {
        Some(dir) => DataSet::from_dir(dir)?,
        None => DataSet::embedded(),
    };
    if cli.selftest {
        let mut ok = true;
        for r in selftest::run(cli.seed, &data) {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {} ({} cases)", r.name, r.cases)?;
            for f in &r.failures {
                writeln!(err, "  {f}")?;
            }
            ok &= r.passed();
        }
        return Ok(if ok { 0 } else { 1 });
    }
    let Some(command) = cli.command else {
        return Ok(0);
    };
    match command {
        Command::Tau { genus, a, b } => {
            let a = parse_matrix(&a, Some(genus))?;
            let b = parse_matrix(&b, Some(genus))?;
            writeln!(out, "{}", tau_sp(&a, &b)?)?;
        }
        Command::Phi1 { matrix } => writeln!(out, "{}", phi1(&parse_sl2(&matrix)?)?)?,
        Command::Dedekind { a, c } => writeln!(out, "{}", dedekind_sum_euclid(&a, &c)?)?,
        Command::Rademacher { matrix } => writeln!(out, "{}", rademacher(&parse_sl2(&matrix)?))?,
        Command::Order { presentation, verbose } => {
            let p = load_presentation(&presentation, &data)?;
            match p.class_order()? {
                ClassOrder::Finite(o) => {
                    writeln!(out, "{}", o.n)?;
                    if verbose {
                        if let Some(m) = &o.m {
                            writeln!(out, "m {m}")?;
                        }
                        for (name, q) in p.generator_names().iter().zip(&o.coefficients) {
                            writeln!(out, "q {name} {q}")?;
                        }
                    }
                }
                ClassOrder::Unbounded => writeln!(out, "infinite")?,
            }
        }
        Command::Phi { presentation, word } => {
            check_word_length(&word)?;
            let p = load_presentation(&presentation, &data)?;
            let w = p.parse_word(&word)?;
            if w.len() > MAX_WORD_LETTERS {
                return Err(Error::Domain(format!("word longer than {MAX_WORD_LETTERS} letters")));
            }
            writeln!(out, "{}", p.synthesize_meyer()?.eval(&w)?)?;
        }
        Command::LocalSig { file } => {
            let fd = FibrationDescription::from_json(&fs::read_to_string(&file)?, &data)?;
            let report = signature_report(&fd, &data)?;
            for (label, value) in &report.local {
                writeln!(out, "{label}\t{value}")?;
            }
            writeln!(out, "total\t{}", report.total)?;
        }
        Command::Euler(args) => match args.fiber_chi {
            Some(chi) => writeln!(out, "{}", euler_contribution(chi, args.genus))?,
            None => writeln!(out, "{}", total_euler(args.genus, args.base_genus, &args.contributions))?,
        },
        Command::Geo { invert, first, second } => {
            if invert {
                let (k2, chi) = geography_invert(&Geography {
                    signature: first,
                    euler: second,
                });
                writeln!(out, "{k2} {chi}")?;
            } else {
                let g = geography_convert(&first, &second);
                writeln!(out, "{} {}", g.signature, g.euler)?;
            }
        }
        Command::SigmaAlg { genus, horikawa, eps } => {
            writeln!(out, "{}", sigma_alg_hyperelliptic(&horikawa, eps, genus)?)?
        }
        Command::Horikawa { genus, k2, chi_f } => writeln!(out, "{}", horikawa_total(k2, &chi_f, genus)?)?,
        Command::TwistValue(args) => {
            let kind = match args.sep {
                Some(h) => TwistKind::Separating(h),
                None => TwistKind::NonSeparating,
            };
            writeln!(out, "{}", hyperelliptic_twist_value(args.genus, kind)?)?;
        }
        Command::RandomSp { genus, length } => {
            if genus == 0 {
                return Err(Error::Domain("genus must be at least 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            writeln!(out, "{}", random_symplectic_with(genus, length, &mut rng))?;
        }
    }
    Ok(0)
}

/// Runs the command line `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("meyer").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn basic_commands() {
        assert_eq!(run_str(&["phi1", "1,1;0,1"]).1, "2/3\n");
        assert_eq!(run_str(&["tau", "-g", "1", "1,0;0,1", "0,1;-1,0"]).1, "0\n");
        assert_eq!(run_str(&["dedekind", "1", "3"]).1, "1/18\n");
        assert_eq!(run_str(&["order", "-p", "sl2z.json"]).1, "3\n");
        assert_eq!(run_str(&["twist-value", "-g", "2", "--sep", "1"]).1, "-4/5\n");
        assert_eq!(run_str(&["geo", "0", "1"]).1, "-8 12\n");
        assert_eq!(run_str(&["euler", "-g", "1", "1", "1", "1"]).1, "3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["phi1", "1,1;0"]).0, 2);
        assert_eq!(run_str(&["phi1", "1,1;1,1"]).0, 1);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["twist-value", "-g", "2"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn long_words_rejected() {
        let word = vec!["a"; MAX_WORD_LETTERS + 1].join(" ");
        let (code, _, err) = run_str(&["phi", "-p", "sl2z.json", &word]);
        assert_eq!(code, 1, "{err}");
        let compact = format!("(a)^{}", MAX_WORD_LETTERS + 1);
        assert_eq!(run_str(&["phi", "-p", "sl2z.json", &compact]).0, 1);
    }
}
