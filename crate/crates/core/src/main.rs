use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plonka::algebra::{counterexamples, enumerate_homomorphisms, find_irregularity_witness, FiniteAlgebra};
use plonka::io::{self, Document, IoError};
use plonka::plonka::{decompose, identity_transfer_report, plonka_sum, Consistency, DirectSystem};
use plonka::random::{gen_random_system, FIBER_SIZES};
use plonka::semilattice::is_semilattice_homomorphism;
use plonka::stone::{duality_roundtrip_check, dualize_direct_system, primalize_inverse_system};
use plonka::systems::{check_fibre_preservation, fibre_map_of_hom, roundtrip_equivalence_check};
use plonka::terms::{parse_identity, parse_term, Signature};

#[derive(Parser)]
#[command(
    name = "plonka",
    version,
    about = "Płonka sums, partition functions and finite Stone duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a document and run its validator
    Validate { file: PathBuf },
    /// Płonka sum of a direct system
    Sum {
        system: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decompose an algebra along a partition term
    Decompose {
        algebra: PathBuf,
        #[arg(long)]
        term: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check an identity, listing every counterexample
    CheckId { algebra: PathBuf, identity: String },
    /// Is an identity regular (same variables on both sides)?
    Regular {
        identity: String,
        /// signature, algebra or system document
        #[arg(long)]
        sig: PathBuf,
    },
    /// Search for a term t(x, y) with t(x, y) = x
    Witness {
        algebra: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Enumerate homomorphisms A → B
    Homs {
        a: PathBuf,
        b: PathBuf,
        /// systems whose sums are A and B; checks fibre preservation
        #[arg(long, num_args = 2, value_names = ["SYS_A", "SYS_B"])]
        check_fibres: Option<Vec<PathBuf>>,
    },
    /// Compare identities in the fibers and in the sum
    Transfer {
        system: PathBuf,
        #[arg(long)]
        ids: PathBuf,
    },
    /// Dual inverse system of a Boolean-fiber direct system
    Dualize {
        system: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Powerset direct system of an inverse system
    Primalize {
        inverse_system: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Sum, decompose, and compare both ways
    Roundtrip {
        system: PathBuf,
        #[arg(long)]
        term: String,
    },
    /// Dualize, primalize, and compare both ways
    DualRoundtrip { system: PathBuf },
    /// Random Boolean-fiber direct system
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        fibers: usize,
        #[arg(long, value_parser = parse_fiber_size)]
        fiber_size: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn parse_fiber_size(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if FIBER_SIZES.contains(&n) {
        Ok(n)
    } else {
        Err("must be 2, 4 or 8".into())
    }
}

/// Malformed input; exits with 2.
struct Malformed(String);

impl From<IoError> for Malformed {
    fn from(e: IoError) -> Self {
        Malformed(e.to_string())
    }
}

type Outcome = Result<bool, Malformed>;

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

fn malformed(e: impl std::fmt::Display) -> Malformed {
    Malformed(e.to_string())
}

fn load(path: &Path) -> Result<Document, Malformed> {
    Ok(io::read_document(path)?)
}

fn algebra(path: &Path) -> Result<FiniteAlgebra, Malformed> {
    Ok(io::expect_algebra(load(path)?)?)
}

fn system(path: &Path) -> Result<DirectSystem, Malformed> {
    Ok(io::expect_system(load(path)?)?)
}

fn emit(doc: &Document, path: Option<&Path>, buf: &mut String) -> Result<(), Malformed> {
    let text = doc.to_json();
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| malformed(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            buf.push_str(&text);
            Ok(())
        }
    }
}

fn signature_of(doc: Document) -> Result<Signature, Malformed> {
    match doc {
        Document::Signature(s) => Ok(s),
        Document::Algebra(a) => Ok(a.signature().clone()),
        Document::System(s) => Ok(s.signature().clone()),
        other => Err(malformed(format!("a {} document has no signature", other.kind()))),
    }
}

fn run(command: Command, buf: &mut String) -> Outcome {
    match command {
        Command::Validate { file } => match io::read_document(&file) {
            Ok(doc) => {
                say!(buf, "valid {}", doc.kind());
                Ok(true)
            }
            Err(e @ IoError::Invalid { .. }) => {
                say!(buf, "{e}");
                Ok(false)
            }
            Err(e) => Err(e.into()),
        },
        Command::Sum { system: path, out } => {
            let sum = plonka_sum(&system(&path)?);
            emit(&Document::Algebra(sum.into_carrier()), out.as_deref(), buf)?;
            Ok(true)
        }
        Command::Decompose {
            algebra: path,
            term,
            out,
        } => {
            let a = algebra(&path)?;
            let t = parse_term(&term, a.signature()).map_err(malformed)?;
            match decompose(&a, &t) {
                Ok(d) => {
                    emit(&Document::System(d.system), out.as_deref(), buf)?;
                    Ok(true)
                }
                Err(e) => {
                    say!(buf, "{e}");
                    Ok(false)
                }
            }
        }
        Command::CheckId {
            algebra: path,
            identity,
        } => {
            let a = algebra(&path)?;
            let id = parse_identity(&identity, a.signature()).map_err(malformed)?;
            let cexs = counterexamples(&a, &id).map_err(malformed)?;
            if cexs.is_empty() {
                say!(buf, "holds: {id}");
                return Ok(true);
            }
            say!(buf, "fails: {id} ({} counterexamples)", cexs.len());
            for c in &cexs {
                say!(buf, "  {}", c.describe(&a));
            }
            Ok(false)
        }
        Command::Regular { identity, sig } => {
            let sig = signature_of(load(&sig)?)?;
            let id = parse_identity(&identity, &sig).map_err(malformed)?;
            let regular = id.is_regular();
            say!(buf, "{}", if regular { "regular" } else { "irregular" });
            Ok(regular)
        }
        Command::Witness { algebra: path, depth } => {
            let a = algebra(&path)?;
            match find_irregularity_witness(&a, depth) {
                Some(t) => {
                    say!(buf, "{t}");
                    Ok(true)
                }
                None => {
                    say!(buf, "no witness up to depth {depth}");
                    Ok(false)
                }
            }
        }
        Command::Homs { a, b, check_fibres } => {
            let (a, b) = (algebra(&a)?, algebra(&b)?);
            let homs = enumerate_homomorphisms(&a, &b).map_err(malformed)?;
            say!(buf, "{} homomorphisms", homs.len());
            for h in &homs {
                say!(buf, "  {h}");
            }
            let Some(paths) = check_fibres else {
                return Ok(true);
            };
            let (sa, sb) = (system(&paths[0])?, system(&paths[1])?);
            let (pa, pb) = (plonka_sum(&sa), plonka_sum(&sb));
            if pa.carrier() != &a || pb.carrier() != &b {
                return Err(malformed("the algebras are not the sums of the given systems"));
            }
            let mut ok = true;
            for h in &homs {
                let preserved = check_fibre_preservation(h, &pa, &pb);
                let phi = fibre_map_of_hom(h, &pa, &pb).ok();
                let semilattice_hom = phi
                    .as_ref()
                    .is_some_and(|p| is_semilattice_homomorphism(pa.index(), pb.index(), p));
                if !(preserved && semilattice_hom) {
                    ok = false;
                    say!(buf, "  {h}: fibre-preserving {preserved}, index map {phi:?}");
                }
            }
            say!(
                buf,
                "fibre check: {}",
                if ok { "all preserve fibres" } else { "failures" }
            );
            Ok(ok)
        }
        Command::Transfer { system: path, ids } => {
            let sys = system(&path)?;
            let list = io::expect_identity_list(load(&ids)?)?;
            let ids = io::identities_of(&list, sys.signature())?;
            let rows = identity_transfer_report(&sys, &ids).map_err(malformed)?;
            let sum = plonka_sum(&sys);
            let mut ok = true;
            for r in &rows {
                ok &= r.consistency != Consistency::Inconsistent;
                let cex = r
                    .sum_counterexample
                    .as_ref()
                    .map(|c| format!(" [{}]", c.describe(sum.carrier())))
                    .unwrap_or_default();
                say!(
                    buf,
                    "{}: regular {}, fibers {}, sum {}, {:?}{cex}",
                    r.identity,
                    r.regular,
                    r.fibers_satisfy,
                    r.sum_satisfies,
                    r.consistency
                );
            }
            say!(buf, "consistent: {ok}");
            Ok(ok)
        }
        Command::Dualize { system: path, out } => match dualize_direct_system(&system(&path)?) {
            Ok(inv) => {
                emit(&Document::InverseSystem(inv), out.as_deref(), buf)?;
                Ok(true)
            }
            Err(e) => {
                say!(buf, "{e}");
                Ok(false)
            }
        },
        Command::Primalize { inverse_system, out } => {
            let inv = io::expect_inverse_system(load(&inverse_system)?)?;
            let sys = primalize_inverse_system(&inv).map_err(malformed)?;
            emit(&Document::System(sys), out.as_deref(), buf)?;
            Ok(true)
        }
        Command::Roundtrip { system: path, term } => {
            let sys = system(&path)?;
            let t = parse_term(&term, sys.signature()).map_err(malformed)?;
            match roundtrip_equivalence_check(&sys, &t) {
                Ok(report) => {
                    say!(buf, "system isomorphism F(G(S)) -> S: {}", report.system_iso);
                    say!(buf, "algebra isomorphism G(F(A)) -> A: {}", report.algebra_iso);
                    Ok(true)
                }
                Err(e) => {
                    say!(buf, "{e}");
                    Ok(false)
                }
            }
        }
        Command::DualRoundtrip { system: path } => match duality_roundtrip_check(&system(&path)?, &[]) {
            Ok(report) => {
                say!(buf, "primal of dual -> system: {}", report.primal_iso);
                say!(buf, "dual of primal -> dual: {}", report.dual_iso);
                Ok(true)
            }
            Err(e) => {
                say!(buf, "{e}");
                Ok(false)
            }
        },
        Command::Gen {
            seed,
            fibers,
            fiber_size,
            out,
        } => {
            let sys = gen_random_system(seed, fibers, fiber_size).map_err(malformed)?;
            emit(&Document::System(sys), out.as_deref(), buf)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Malformed(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
