//! Command-line interface: parses a document or builtin name, runs one
//! computation or check, and prints a deterministic report (text or JSON).
//! Exit codes: 0 all verdicts pass, 1 a mathematical check failed, 2 the
//! input was unusable.

pub mod document;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use crate::abelian::{col_rank, AbelianGroup};
use crate::complexes::EquivariantChainComplex;
use crate::error::{Error, Result};
use crate::homology::{
    equivariant_homology, fixed_homology, homology, quotient_homology, Coeff,
};
use crate::hyper::{e_infinity, page, s_groups, Filtration};
use crate::les::{build_les, check_exact};
use crate::report::Report;
use crate::spaces;
use crate::theorems;
use document::ComplexDocument;

#[derive(Parser)]
#[command(
    name = "equichain",
    about = "Exact homology of finite group actions on finite complexes",
    version
)]
struct Cli {
    /// Render reports as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and check it is a valid equivariant complex.
    Validate {
        /// A JSON document path or a builtin name.
        file: String,
    },
    /// Homology of one of the four chain models.
    Homology {
        file: String,
        /// Which chain model: total | invariant | quotient | fixed.
        #[arg(long, default_value = "invariant")]
        which: String,
        /// Coefficients: z | q | zp:P.
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// The long exact sequence linking quotient, invariant and fixed-set
    /// homology mod p, with an exactness verdict at every junction.
    Les {
        file: String,
        /// Highest degree shown (default: one above the top dimension).
        #[arg(long)]
        top: Option<i64>,
    },
    /// Hypercohomology-style groups S_n of the action double complex.
    Hyper {
        file: String,
        /// Degree window A..B, inclusive (default: -(d+3)..d).
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Coefficients: z | zp:P.
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// One page of the spectral sequence of the double complex.
    Pages {
        file: String,
        /// Which filtration: I (by complex degree) or II (by group degree).
        #[arg(long, default_value = "I")]
        filtration: String,
        /// Page number r >= 1, or "infinity".
        #[arg(long, default_value = "2")]
        page: String,
        /// Coefficients zp:P; P must be the prime order of the group
        /// (default: that prime).
        #[arg(long)]
        coeff: Option<String>,
    },
    /// Run a theorem check: smith | conner | coprime:L | free | collapse.
    Check {
        what: String,
        /// A JSON document path or a builtin name.
        file: Option<String>,
        /// Run over every builtin whose hypotheses apply instead of a file.
        #[arg(long)]
        all_builtins: bool,
    },
    /// List builtin spaces or emit one as a JSON document.
    Spaces {
        #[command(subcommand)]
        cmd: SpacesCommand,
    },
}

#[derive(Subcommand)]
enum SpacesCommand {
    /// Print the catalog of builtin names.
    List,
    /// Print a builtin complex as a JSON document.
    Emit {
        name: String,
        /// Optional parameters, equivalent to writing name(p1, p2).
        params: Vec<String>,
    },
}

/// Entry point shared by the binary and the tests: parse argv, run, write
/// everything to `out`, return the exit code.
pub fn run<I, T, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{e}");
            return e.exit_code();
        }
    };
    let json = cli.json;
    match dispatch(cli.command, json, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(2 * digest.len() + 7);
    s.push_str("sha256:");
    for b in digest {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// Canonical JSON text of a builtin, exactly as `spaces emit` prints it.
fn emit_text(name: &str) -> Result<String> {
    let x = spaces::builtin(name)?;
    Ok(ComplexDocument::from_complex(&x)?.render())
}

/// Resolve FILE as a path or a builtin name; returns the complex and the
/// digest of the document text, without checking equivariance.
fn load_unchecked(file: &str) -> Result<(EquivariantChainComplex, String)> {
    let text = if Path::new(file).exists() {
        std::fs::read_to_string(file)
            .map_err(|e| Error::Document(format!("cannot read {file}: {e}")))?
    } else {
        match emit_text(file) {
            Ok(t) => t,
            Err(Error::UnknownName(_)) => {
                return Err(Error::Document(format!(
                    "{file}: no such file, and not a builtin name"
                )));
            }
            Err(e) => return Err(e),
        }
    };
    let digest = sha256_hex(text.as_bytes());
    let doc = ComplexDocument::parse(&text)?;
    Ok((doc.to_complex()?, digest))
}

/// Resolve FILE and insist the complex is a valid equivariant complex.
fn load(file: &str) -> Result<(EquivariantChainComplex, String)> {
    let (x, digest) = load_unchecked(file)?;
    let violations = x.validate();
    if let Some(v) = violations.first() {
        return Err(Error::InvalidComplex(v.clone()));
    }
    Ok((x, digest))
}

fn dispatch<W: Write>(cmd: Command, json: bool, out: &mut W) -> Result<i32> {
    let report = match cmd {
        Command::Validate { file } => cmd_validate(&file)?,
        Command::Homology { file, which, coeff } => cmd_homology(&file, &which, &coeff)?,
        Command::Les { file, top } => cmd_les(&file, top)?,
        Command::Hyper { file, range, coeff } => cmd_hyper(&file, range.as_deref(), &coeff)?,
        Command::Pages { file, filtration, page, coeff } => {
            cmd_pages(&file, &filtration, &page, coeff.as_deref())?
        }
        Command::Check { what, file, all_builtins } => {
            cmd_check(&what, file.as_deref(), all_builtins)?
        }
        Command::Spaces { cmd } => {
            return match cmd {
                SpacesCommand::List => {
                    for (name, desc) in spaces::list() {
                        let _ = writeln!(out, "{name}: {desc}");
                    }
                    Ok(0)
                }
                SpacesCommand::Emit { name, params } => {
                    let spec = if params.is_empty() {
                        name
                    } else {
                        format!("{name}({})", params.join(","))
                    };
                    let _ = write!(out, "{}", emit_text(&spec)?);
                    Ok(0)
                }
            };
        }
    };
    let _ = write!(out, "{}", if json { report.render_json() } else { report.render_text() });
    Ok(report.exit_code())
}

fn cmd_validate(file: &str) -> Result<Report> {
    let (x, digest) = load_unchecked(file)?;
    let mut report = Report::new("validate", digest);
    let violations = x.validate();
    if violations.is_empty() {
        report.pass(
            "admissible",
            &format!(
                "group of order {}, cells {:?}, boundaries and action commute",
                x.group().order(),
                x.complex().cell_counts()
            ),
        );
    } else {
        for v in violations {
            report.fail("admissible", &v);
        }
    }
    Ok(report)
}

fn cmd_homology(file: &str, which: &str, coeff: &str) -> Result<Report> {
    let (x, digest) = load(file)?;
    let c = Coeff::parse(coeff)?;
    let graded = match which {
        "total" => homology(x.complex(), c)?,
        "invariant" => equivariant_homology(&x, c)?,
        "quotient" => quotient_homology(&x, c)?,
        "fixed" => fixed_homology(&x, c)?,
        other => {
            return Err(Error::BadParameter(format!(
                "unknown chain model {other:?}; use total, invariant, quotient or fixed"
            )));
        }
    };
    let mut report = Report::new(format!("homology --which {which} --coeff {coeff}"), digest);
    report.info(graded.notation_line(), "");
    Ok(report)
}

fn cmd_les(file: &str, top: Option<i64>) -> Result<Report> {
    let (x, digest) = load(file)?;
    let top = top.unwrap_or(x.top_dim() + 1);
    let les = build_les(&x, top)?;
    let mut report = Report::new(format!("les --top {top}"), digest);
    for line in les.lines() {
        report.info(line, "");
    }
    report.absorb("", check_exact(&les));
    Ok(report)
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::BadParameter(format!("range {s:?} is not of the form A..B")))?;
    let lo = a
        .trim()
        .parse::<i64>()
        .map_err(|_| Error::BadParameter(format!("range start {a:?} is not an integer")))?;
    let hi = b
        .trim()
        .parse::<i64>()
        .map_err(|_| Error::BadParameter(format!("range end {b:?} is not an integer")))?;
    if lo > hi {
        return Err(Error::BadParameter(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

fn cmd_hyper(file: &str, range: Option<&str>, coeff: &str) -> Result<Report> {
    let (x, digest) = load(file)?;
    let c = Coeff::parse(coeff)?;
    let (lo, hi) = match range {
        Some(r) => parse_range(r)?,
        None => (-(x.top_dim() + 3), x.top_dim()),
    };
    let groups = s_groups(&x, c, lo, hi)?;
    let mut report = Report::new(
        format!("hyper --range {lo}..{hi} --coeff {coeff}"),
        digest,
    );
    for (n, g) in groups.iter().rev() {
        report.info(format!("S_{n}"), g.notation());
    }
    Ok(report)
}

fn cmd_pages(file: &str, filtration: &str, page_arg: &str, coeff: Option<&str>) -> Result<Report> {
    let (x, digest) = load(file)?;
    let filtration = Filtration::parse(filtration)?;
    let (group_p, _) = x.group().prime_order_generator()?;
    let p = match coeff {
        None => group_p,
        Some(s) => match Coeff::parse(s)? {
            Coeff::Zp(p) if p == group_p => p,
            Coeff::Zp(p) => {
                return Err(Error::BadParameter(format!(
                    "pages are computed at the group's own prime {group_p}, not {p}"
                )));
            }
            _ => {
                return Err(Error::BadParameter(
                    "pages need finite coefficients zp:P".into(),
                ));
            }
        },
    };
    let sp = match page_arg {
        "infinity" | "inf" => e_infinity(&x, filtration, p)?,
        r => {
            let r: u32 = r.parse().map_err(|_| {
                Error::BadParameter(format!("page {r:?} is not a number or \"infinity\""))
            })?;
            if r == 0 {
                return Err(Error::BadParameter("pages start at r = 1".into()));
            }
            page(&x, filtration, r, p)?
        }
    };
    let page_name = match sp.r {
        Some(r) => format!("E^{r}"),
        None => "E^infinity".to_string(),
    };
    let mut report = Report::new(
        format!("pages --filtration {filtration} --page {page_arg} --coeff zp:{p}"),
        digest,
    );
    report.info(
        "grading",
        &format!("{page_name} for filtration {filtration}, entries (Z/{p})^dim"),
    );
    for (&(q, t), &dim) in &sp.entries {
        report.info(
            format!("{page_name}({q},{t})"),
            AbelianGroup::vector_space(p, dim).notation(),
        );
    }
    let mut ranks: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (&key, m) in &sp.differentials {
        let rank = col_rank(m);
        if rank > 0 {
            ranks.insert(key, rank);
        }
    }
    for (&(q, t), &rank) in &ranks {
        report.info(format!("d({q},{t})"), format!("rank {rank}"));
    }
    if sp.r.is_some() && ranks.is_empty() {
        report.info("differentials", "all zero");
    }
    Ok(report)
}

/// The builtin instances a batch check runs over, in name order. Public so
/// whole-catalog test sweeps iterate exactly the list the CLI uses.
pub fn builtin_instances() -> Vec<&'static str> {
    vec![
        "circle_reflection",
        "circle_rotation(2)",
        "circle_rotation(3)",
        "circle_rotation(5)",
        "cone_of(circle_rotation(2))",
        "cone_of(circle_rotation(3))",
        "cone_of(cross_polytope_sphere(2))",
        "cp1_conjugation",
        "cross_polytope_sphere(1)",
        "cross_polytope_sphere(1, reflection)",
        "cross_polytope_sphere(2)",
        "cross_polytope_sphere(2, reflection)",
        "cross_polytope_sphere(3)",
        "lens_sphere(2)",
        "lens_sphere(3)",
        "lens_sphere(5)",
        "point(2)",
        "point(3)",
        "sphere_reflection",
        "torus_diagonal(2)",
        "torus_diagonal(3)",
    ]
}

fn cmd_check(what: &str, file: Option<&str>, all_builtins: bool) -> Result<Report> {
    let (kind, param) = match what.split_once(':') {
        Some((k, p)) => (k, Some(p)),
        None => (what, None),
    };
    let coprime_l = match (kind, param) {
        ("coprime", Some(l)) => Some(l.parse::<u64>().map_err(|_| {
            Error::BadParameter(format!("coprime needs a prime after the colon, got {l:?}"))
        })?),
        ("coprime", None) => {
            return Err(Error::BadParameter(
                "coprime needs a modulus: check coprime:L".into(),
            ));
        }
        (_, Some(p)) => {
            return Err(Error::BadParameter(format!(
                "check {kind} takes no parameter, got {p:?}"
            )));
        }
        _ => None,
    };
    let runner = |x: &EquivariantChainComplex| -> Result<Report> {
        match kind {
            "smith" => theorems::smith_check(x),
            "conner" => theorems::conner_check(x),
            "coprime" => theorems::coprime_check(x, coprime_l.expect("parsed above")),
            "free" => theorems::free_action_check(x),
            "collapse" => crate::hyper::collapse_check(x),
            other => Err(Error::BadParameter(format!(
                "unknown check {other:?}; use smith, conner, coprime:L, free or collapse"
            ))),
        }
    };

    if all_builtins {
        let mut report = Report::new(format!("check {what} --all-builtins"), String::new());
        for name in builtin_instances() {
            let (x, _) = load(name)?;
            match runner(&x) {
                Ok(r) => report.absorb(name, r),
                // a builtin that does not meet the hypotheses is skipped,
                // not failed: the batch is a falsification harness
                Err(
                    e @ (Error::InapplicableHypothesis(_)
                    | Error::NotCoprime(_)
                    | Error::NotFree(_)
                    | Error::NotPrimeOrder),
                ) => report.inapplicable(name, format!("{e}")),
                Err(e) => return Err(e),
            }
        }
        return Ok(report);
    }

    let file = file.ok_or_else(|| {
        Error::BadParameter("check needs a FILE argument or --all-builtins".into())
    })?;
    let (x, digest) = load(file)?;
    let mut report = runner(&x)?;
    report.command = format!("check {what}");
    report.input_digest = digest;
    Ok(report)
}
