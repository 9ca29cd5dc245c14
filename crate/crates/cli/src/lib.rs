//! `equifreq` command-line front end.
//!
//! [`run`] takes the full argument vector and two output streams and
//! returns the process exit code: 0 on success, 1 when a requested witness
//! does not exist (unequal frequencies, degenerate identity, ...), 2 on
//! usage or domain errors.

pub mod records;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use equifreq::transitions::{verify_ionized, PairCheck};
use equifreq::{
    ap_triple, assert_no_four_term, bf_expand, compose, enumerate_identities, enumerate_pairs,
    find_cascades, identity_to_pairs, photon_observables, recover_params, triple_from_circle,
    triple_to_cascade, verify_pair, APParams, BFParams, CascadeError, CirclePoint,
    PhysicalConstants, SquareIdentity, Transition,
};
use num_bigint::BigInt;

pub use records::{Format, Record};

const CSV_HELP: &str = "\
CSV columns by record type (one header per block of same-type records):
  pair          n1,N1,n2,N2,delta_num,delta_den
  identity      side1,side2,norm        (sides as space-separated \"a b\")
  params        r,s,u,v
  verify        equal,delta1_num,delta1_den,delta2_num,delta2_den
  triple        A,B,C
  circle        p,q,r
  cascade       x0,x1,x2,delta_num,delta_den,primitive
  ap_params     m,n
  observe       N,n,delta_num,delta_den,wavelength_m,frequency_hz
  no_four_term  max_level,cascades_checked,chains_found

JSON output is one object per line with a \"record\" field naming the type.

Exit status: 0 success, 1 requested witness absent, 2 usage or domain error.";

#[derive(Debug, Parser)]
#[command(name = "equifreq", version, about = "Equal-frequency transitions of the Bohr hydrogen atom", after_help = CSV_HELP)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Rydberg wavenumber in 1/m (overrides config file).
    #[arg(long, global = true, env = "EQUIFREQ_RYDBERG")]
    rydberg: Option<String>,

    /// Config file with `rydberg = <value>`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All primitive equal-frequency pairs with levels <= N.
    Pairs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        max_level: u32,
    },
    /// Check whether N1->n1 and N2->n2 have the same frequency.
    Verify {
        upper1: String,
        lower1: String,
        upper2: String,
        lower2: String,
        /// Accept `inf` as one upper level (the ionized E=0 state).
        #[arg(long)]
        allow_ionized: bool,
    },
    /// Expand (r+is)(u±iv) into an identity, its pairs and a recovered witness.
    #[command(allow_negative_numbers = true)]
    Expand {
        r: BigInt,
        s: BigInt,
        u: BigInt,
        v: BigInt,
    },
    /// Recover a witness (r,s,u,v) for A^2+B^2=C^2+D^2.
    #[command(allow_negative_numbers = true)]
    Recover {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
    },
    /// All nontrivial identities with entries in 1..=N.
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_entry: u32,
    },
    /// All two-step cascades with levels <= N.
    Cascades {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        max_level: u32,
        /// Drop cascades whose levels share a common factor.
        #[arg(long)]
        primitive_only: bool,
    },
    /// Cascade from the three-squares parametrization with m > n > 0.
    #[command(allow_negative_numbers = true)]
    CascadeParams { m: BigInt, n: BigInt },
    /// Multiply two unit-circle points and report the resulting cascade.
    #[command(allow_negative_numbers = true)]
    Compose {
        p1: BigInt,
        q1: BigInt,
        r1: BigInt,
        p2: BigInt,
        q2: BigInt,
        r2: BigInt,
    },
    /// Exhaustively confirm there is no four-level equal-frequency chain.
    NoFourTerm {
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..))]
        max_level: u32,
    },
    /// Wavelength and frequency of the transition N->n.
    #[command(allow_negative_numbers = true)]
    Observe { upper: BigInt, lower: BigInt },
}

struct Outcome {
    records: Vec<Record>,
    /// Set when the requested witness does not exist.
    missing: Option<String>,
}

impl Outcome {
    fn ok(records: Vec<Record>) -> Self {
        Outcome {
            records,
            missing: None,
        }
    }
}

fn constants(cli: &Cli) -> anyhow::Result<PhysicalConstants> {
    if let Some(v) = &cli.rydberg {
        return v.parse().context("--rydberg");
    }
    match &cli.config {
        Some(path) => PhysicalConstants::from_config_file(path)
            .with_context(|| format!("config {}", path.display())),
        None => Ok(PhysicalConstants::default()),
    }
}

enum Level {
    Finite(BigInt),
    Infinite,
}

fn parse_level(s: &str, allow_inf: bool) -> anyhow::Result<Level> {
    if s == "inf" {
        if !allow_inf {
            bail!("level `inf` requires --allow-ionized");
        }
        return Ok(Level::Infinite);
    }
    let v: BigInt = s.parse().with_context(|| format!("invalid level {s:?}"))?;
    Ok(Level::Finite(v))
}

fn verify(
    upper1: &str,
    lower1: &str,
    upper2: &str,
    lower2: &str,
    allow_ionized: bool,
) -> anyhow::Result<Outcome> {
    let finite = |s: &str| -> anyhow::Result<BigInt> {
        match parse_level(s, false)? {
            Level::Finite(v) => Ok(v),
            Level::Infinite => unreachable!(),
        }
    };
    let (lo1, lo2) = (finite(lower1)?, finite(lower2)?);
    let check = match (
        parse_level(upper1, allow_ionized)?,
        parse_level(upper2, allow_ionized)?,
    ) {
        (Level::Finite(u1), Level::Finite(u2)) => {
            verify_pair(&Transition::new(u1, lo1)?, &Transition::new(u2, lo2)?)
        }
        (Level::Infinite, Level::Finite(u2)) => verify_ionized(&lo1, &Transition::new(u2, lo2)?)?,
        (Level::Finite(u1), Level::Infinite) => verify_ionized(&lo2, &Transition::new(u1, lo1)?)?,
        (Level::Infinite, Level::Infinite) => bail!("at most one level may be `inf`"),
    };
    let (equal, left, right) = match check {
        PairCheck::Equal(d) => (true, d.clone(), d),
        PairCheck::NotEqual(l, r) => (false, l, r),
    };
    Ok(Outcome {
        records: vec![Record::Verify { equal, left, right }],
        missing: (!equal).then(|| "transitions have different frequencies".to_string()),
    })
}

fn expand(p: BFParams) -> anyhow::Result<Outcome> {
    if p.is_degenerate() {
        bail!("degenerate parameters: r+is and u+iv must both be nonzero");
    }
    let id = bf_expand(&p);
    let witness = recover_params(&id)?;
    let mut records = vec![Record::Identity(id.clone()), Record::Params(witness)];
    let missing = match identity_to_pairs(&id) {
        Ok(pairs) => {
            records.extend(pairs.into_iter().map(Record::Pair));
            None
        }
        Err(e) => Some(format!("no transition pair: {e}")),
    };
    Ok(Outcome { records, missing })
}

fn cascade_records(triple: equifreq::SquareTriple, records: &mut Vec<Record>) -> Option<String> {
    let cascade = triple_to_cascade(&triple);
    records.push(Record::Triple(triple));
    match cascade {
        Ok(c) => {
            records.push(Record::Cascade(c));
            None
        }
        Err(e) => Some(format!("no cascade: {e}")),
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    Ok(match &cli.command {
        Command::Pairs { max_level } => Outcome::ok(
            enumerate_pairs(*max_level)
                .into_iter()
                .map(Record::Pair)
                .collect(),
        ),
        Command::Verify {
            upper1,
            lower1,
            upper2,
            lower2,
            allow_ionized,
        } => verify(upper1, lower1, upper2, lower2, *allow_ionized)?,
        Command::Expand { r, s, u, v } => {
            expand(BFParams::new(r.clone(), s.clone(), u.clone(), v.clone()))?
        }
        Command::Recover { a, b, c, d } => {
            let id = SquareIdentity::new(a.clone(), b.clone(), c.clone(), d.clone())?;
            let p = recover_params(&id)?;
            Outcome::ok(vec![Record::Identity(id), Record::Params(p)])
        }
        Command::Identities { max_entry } => Outcome::ok(
            enumerate_identities(*max_entry)
                .into_iter()
                .map(Record::Identity)
                .collect(),
        ),
        Command::Cascades {
            max_level,
            primitive_only,
        } => Outcome::ok(
            find_cascades(*max_level)
                .into_iter()
                .filter(|c| !primitive_only || c.is_primitive())
                .map(Record::Cascade)
                .collect(),
        ),
        Command::CascadeParams { m, n } => {
            let params = APParams::new(m.clone(), n.clone())?;
            let triple = ap_triple(&params)?;
            let mut records = vec![Record::ApParams(params)];
            let missing = cascade_records(triple, &mut records);
            Outcome { records, missing }
        }
        Command::Compose {
            p1,
            q1,
            r1,
            p2,
            q2,
            r2,
        } => {
            let a = CirclePoint::new(p1.clone(), q1.clone(), r1.clone())?;
            let b = CirclePoint::new(p2.clone(), q2.clone(), r2.clone())?;
            let z = compose(&a, &b);
            let triple = triple_from_circle(&z);
            let mut records = vec![Record::Circle(z)];
            let missing = cascade_records(triple, &mut records);
            Outcome { records, missing }
        }
        Command::NoFourTerm { max_level } => match assert_no_four_term(*max_level) {
            Ok(report) => Outcome::ok(vec![Record::NoFourTerm(report)]),
            Err(CascadeError::FourTermChain(chain)) => Outcome {
                records: Vec::new(),
                missing: Some(format!("four-level chain found: {chain:?}")),
            },
            Err(e) => return Err(e.into()),
        },
        Command::Observe { upper, lower } => {
            let t = Transition::new(upper.clone(), lower.clone())?;
            let obs = photon_observables(&t, &constants(cli)?);
            Outcome::ok(vec![Record::Observe { transition: t, obs }])
        }
    })
}

/// Parses `args` (including the program name), runs the subcommand and
/// writes its records to `out`; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                // --help / --version
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if let Err(e) = records::write_records(out, cli.format, &outcome.records) {
                let _ = writeln!(err, "error: writing output: {e}");
                return 2;
            }
            match outcome.missing {
                None => 0,
                Some(msg) => {
                    let _ = writeln!(err, "{msg}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
