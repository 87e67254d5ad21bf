//! Command-line frontend for `etalecup`.

pub mod checks;
pub mod report;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use etalecup::cohomology::{
    cohomology_punctured, cohomology_unpunctured, enumerate_torsors, torsor_sign, BaseField, CohomologyProfile,
};
use etalecup::cup::{pairing_table, verify_reciprocity};
use etalecup::{Error, FiniteAbelianGroup, DEFAULT_SEED};

use report::{Format, GroupEntry, LegendreRow, PairingEntry, Params, Payload, Report, TorsorEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "etalecup", version, about = "Etale cohomology of Spec Z \\ S and cup products")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, env = "ETALECUP_FORMAT", default_value = "json", global = true)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Place {
    /// Base field: `Q` or `sqrt:<m>`.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Comma-separated finite primes; omit for the unpunctured case.
    #[arg(long = "S", value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Coefficient modulus.
    #[arg(long, default_value_t = 2)]
    pub n: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology groups H^0 .. H^4 and the stable tail.
    Groups(Place),
    /// Cup product table over the quadratic torsor basis.
    Pairing(Place),
    /// Cup vanishing against Legendre symbols for primes 1 mod 4.
    Legendre {
        #[arg(long, default_value_t = 30)]
        max: u64,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
    /// List the quadratic torsors of Spec Z \ S.
    Torsors(Place),
}

fn parse_field(s: &str) -> etalecup::Result<BaseField> {
    let t = s.trim();
    match t.strip_prefix("sqrt:") {
        Some(m) => BaseField::parse(m),
        None if t.eq_ignore_ascii_case("q") => Ok(BaseField::Rationals),
        None => Err(Error::InvalidInput(format!("field must be Q or sqrt:<m>, got '{s}'"))),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn group_entry<C>(degree: &str, g: &FiniteAbelianGroup<C>, description: String) -> GroupEntry {
    GroupEntry {
        degree: degree.to_string(),
        invariants: strings(g.invariants()),
        order: g.order().to_string(),
        description,
    }
}

fn profile_payload(p: &CohomologyProfile) -> Payload {
    let groups = p
        .groups()
        .iter()
        .enumerate()
        .take(4)
        .map(|(i, g)| {
            let source = g
                .generators()
                .first()
                .map(|d| d.source.to_string())
                .unwrap_or_else(|| "0".to_string());
            group_entry(&i.to_string(), g, source)
        })
        .collect();
    let tail = p.stable_tail();
    let source = tail
        .generators()
        .first()
        .map(|d| d.source.to_string())
        .unwrap_or_else(|| "0".to_string());
    Payload::Groups {
        punctured: p.is_punctured(),
        groups,
        stable_tail: group_entry(">=4", tail, source),
    }
}

fn params(place: &Place, seed: u64) -> Params {
    Params {
        field: Some(place.field.clone()),
        primes: Some(strings(&place.primes)),
        n: Some(place.n.to_string()),
        max: None,
        seed: seed.to_string(),
    }
}

fn execute(cli: &Cli) -> etalecup::Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Groups(place) => {
            let field = parse_field(&place.field)?;
            let profile = if place.primes.is_empty() {
                cohomology_unpunctured(field, place.n)?
            } else if field == BaseField::Rationals {
                cohomology_punctured(&place.primes, place.n)?
            } else {
                return Err(Error::Unsupported("punctured profiles are computed over Q".into()));
            };
            Ok(Report::new("groups", params(place, seed), profile_payload(&profile)))
        }
        Command::Pairing(place) => {
            if parse_field(&place.field)? != BaseField::Rationals {
                return Err(Error::Unsupported("pairing tables are computed over Q".into()));
            }
            let table = pairing_table(&place.primes, place.n)?;
            let mut entries = Vec::new();
            for (i, y) in table.basis.iter().enumerate() {
                for (j, z) in table.basis.iter().enumerate() {
                    entries.push(PairingEntry {
                        y: y.disc().to_string(),
                        z: z.disc().to_string(),
                        values: strings(&table.entries[i][j]),
                    });
                }
            }
            let payload = Payload::Pairing {
                basis: table.basis.iter().map(|t| t.disc().to_string()).collect(),
                torsion_generators: strings(&table.torsion_generators),
                entries,
            };
            Ok(Report::new("pairing", params(place, seed), payload))
        }
        Command::Legendre { max } => {
            let r = verify_reciprocity(*max)?;
            let rows = r
                .pairs
                .iter()
                .map(|c| LegendreRow {
                    p: c.p.to_string(),
                    q: c.q.to_string(),
                    legendre_pq: c.legendre_pq,
                    legendre_qp: c.legendre_qp,
                    cup_pq_vanishes: c.cup_pq.iter().all(|&x| x == 0),
                    cup_qp_vanishes: c.cup_qp.iter().all(|&x| x == 0),
                    agree: c.pass,
                })
                .collect();
            let params = Params {
                max: Some(max.to_string()),
                seed: seed.to_string(),
                ..Params::default()
            };
            Ok(Report::new("legendre", params, Payload::Legendre { rows }))
        }
        Command::Verify { max } => {
            let records = checks::run_all(*max, seed)?;
            let params = Params {
                max: Some(max.to_string()),
                seed: seed.to_string(),
                ..Params::default()
            };
            Ok(Report::new("verify", params, Payload::Verify { records }))
        }
        Command::Torsors(place) => {
            let torsors = enumerate_torsors(&place.primes, place.n)?
                .iter()
                .map(|t| TorsorEntry {
                    disc: t.disc().to_string(),
                    field: t.to_string(),
                    ramified: strings(&t.ramified_primes()),
                    real_sign: torsor_sign(t).to_string(),
                })
                .collect();
            Ok(Report::new("torsors", params(place, seed), Payload::Torsors { torsors }))
        }
    }
}

/// Run with the given arguments; returns the exit code and the bytes for
/// standard output and standard error.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                (code, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
            (code, report.emit(cli.format), String::new())
        }
        Err(e @ (Error::InvalidInput(_) | Error::Unsupported(_))) => (EXIT_USAGE, String::new(), format!("error: {e}\n")),
        Err(e) => (EXIT_FAILED, String::new(), format!("error: {e}\n")),
    }
}
