//! `modsym` command line: modular symbol spaces, Hecke operators,
//! q-expansions, eigenform classes and the q-series oracle.

mod table;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modsym::arith::{Field, FieldElement, DEFAULT_SEED};
use modsym::decompose::eigenform_classes_seeded;
use modsym::hecke::{hecke_algebra, qexp_basis, HeckeContext, SubspaceTag};
use modsym::level::{char_group, p1_list, DirichletCharacter};
use modsym::manin::{build_space, ManinSpace};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] modsym::Error),
    #[error(transparent)]
    Oracle(#[from] qseries::OracleError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Engine(modsym::Error::Parse(_)) => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sub {
    Full,
    Cusp,
    Plus,
}

impl From<Sub> for SubspaceTag {
    fn from(s: Sub) -> Self {
        match s {
            Sub::Full => SubspaceTag::Full,
            Sub::Cusp => SubspaceTag::Cuspidal,
            Sub::Plus => SubspaceTag::Plus,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "modsym", version, about = "Modular symbols, Hecke operators and q-expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field: `q` or `fp:P`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Index into the character group (0 is the trivial character).
    #[arg(long = "char", global = true, default_value_t = 0)]
    chi: usize,
    /// Subspace for operators: full, cusp or plus.
    #[arg(long, global = true, value_enum)]
    sub: Option<Sub>,
    /// Seed for randomized factorization.
    #[arg(long, global = true, env = "MODSYM_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for Hecke matrix columns.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List P^1(Z/NZ).
    P1 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
    },
    /// Dimensions of the modular symbol space and its subspaces.
    Space {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        weight: u32,
    },
    /// Matrix of the Hecke operator T_n.
    Hecke {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        op: u64,
    },
    /// q-expansion basis of the cusp forms.
    Qexp {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
    },
    /// Galois classes of normalized eigenforms.
    Eigenforms {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
    },
    /// Independent q-series oracle.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Eta quotient expansion, exponents as `d:r,d:r,...`.
    Eta {
        #[arg(long)]
        exps: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
    },
    /// Index and dimensions for trivial character.
    Dim {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        weight: u32,
    },
}

fn parse_field(s: &str) -> Result<Field, CliError> {
    if s == "q" || s == "Q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Usage(format!("invalid field '{s}', expected q or fp:P")))?;
    Field::prime(p).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_exps(s: &str) -> Result<BTreeMap<u64, i64>, CliError> {
    let mut out = BTreeMap::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (d, r) = part
            .split_once(':')
            .and_then(|(d, r)| Some((d.trim().parse::<u64>().ok()?, r.trim().parse::<i64>().ok()?)))
            .filter(|(d, _)| *d > 0)
            .ok_or_else(|| CliError::Usage(format!("invalid exponent '{part}', expected d:r")))?;
        *out.entry(d).or_insert(0) += r;
    }
    Ok(out)
}

struct Job<'a> {
    cli: &'a Cli,
    field: Field,
}

impl Job<'_> {
    fn character(&self, level: u64) -> Result<DirichletCharacter, CliError> {
        let mut group = char_group(level, &self.field)?;
        if self.cli.chi >= group.len() {
            return Err(CliError::Usage(format!(
                "character index {} out of range (level {level} has {} characters over {})",
                self.cli.chi,
                group.len(),
                self.field
            )));
        }
        Ok(group.swap_remove(self.cli.chi))
    }

    fn space(&self, level: u64, weight: u32) -> Result<ManinSpace, CliError> {
        let chi = self.character(level)?;
        Ok(build_space(level, weight, &chi, &self.field)?)
    }

    fn context<'s>(&self, space: &'s ManinSpace) -> HeckeContext<'s> {
        HeckeContext::new(space).with_threads(self.cli.threads as usize)
    }

    fn tag(&self, default: SubspaceTag) -> SubspaceTag {
        self.cli.sub.map(SubspaceTag::from).unwrap_or(default)
    }
}

fn strings(v: &[FieldElement]) -> Vec<Value> {
    v.iter().map(FieldElement::to_json).collect()
}

/// JSON document and table rendering for a command.
fn run(cli: &Cli) -> Result<(Value, String), CliError> {
    let job = Job { cli, field: parse_field(&cli.field)? };
    match &cli.command {
        Command::P1 { level } => {
            let elems = p1_list(*level)?;
            let doc = json!({
                "level": level,
                "size": elems.len(),
                "elements": elems.iter().map(|e| json!([e.u, e.v])).collect::<Vec<_>>(),
            });
            let rows = elems
                .iter()
                .enumerate()
                .map(|(i, e)| vec![i.to_string(), e.u.to_string(), e.v.to_string()])
                .collect();
            Ok((doc, table::render(&["index", "u", "v"], rows)))
        }
        Command::Space { level, weight } => {
            let s = job.space(*level, *weight)?;
            let full = s.dim();
            let cusp = s.cuspidal_subspace().dim();
            let pairs = [
                ("dim_full", full),
                ("dim_cuspidal", cusp),
                ("dim_eisenstein", full - cusp),
                ("dim_plus", s.plus_subspace().dim()),
                ("dim_minus", s.minus_subspace().dim()),
            ];
            let mut doc = json!({
                "level": level,
                "weight": weight,
                "field": job.field.to_json(),
                "character": s.character().to_json(),
            });
            for (k, v) in pairs {
                doc[k] = json!(v);
            }
            Ok((doc, table::key_values(&pairs.map(|(k, v)| (k, v.to_string())))))
        }
        Command::Hecke { level, weight, op } => {
            let s = job.space(*level, *weight)?;
            let ctx = job.context(&s);
            let m = ctx.hecke_operator(*op, job.tag(SubspaceTag::Full))?;
            let rows = (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect();
            Ok((m.to_json(), table::render(&[], rows)))
        }
        Command::Qexp { level, weight, prec } => {
            let s = job.space(*level, *weight)?;
            let ctx = job.context(&s);
            let alg = hecke_algebra(&ctx, job.tag(SubspaceTag::Plus))?;
            let basis = qexp_basis(&ctx, &alg, *prec as usize)?;
            let doc = Value::Array(basis.iter().map(|f| Value::Array(strings(f))).collect());
            let mut header = vec!["n".to_string()];
            header.extend((1..=basis.len()).map(|j| format!("f{j}")));
            let rows = (0..*prec as usize)
                .map(|n| {
                    let mut row = vec![(n + 1).to_string()];
                    row.extend(basis.iter().map(|f| f[n].to_string()));
                    row
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            Ok((doc, table::render(&header, rows)))
        }
        Command::Eigenforms { level, weight, prec } => {
            let s = job.space(*level, *weight)?;
            let ctx = job.context(&s);
            let alg = hecke_algebra(&ctx, job.tag(SubspaceTag::Plus))?;
            let classes = eigenform_classes_seeded(&ctx, &alg, *prec as usize, cli.seed)?;
            let doc = Value::Array(classes.iter().map(|c| c.to_json()).collect());
            let mut text = String::new();
            for (i, c) in classes.iter().enumerate() {
                text.push_str(&format!("class {}: degree {}, modulus {}\n", i + 1, c.degree(), c.modulus));
                let rows = (1..=c.an.len())
                    .map(|n| {
                        let coords: Vec<String> = c.coordinates(n).iter().map(ToString::to_string).collect();
                        vec![n.to_string(), coords.join(" ")]
                    })
                    .collect();
                text.push_str(&table::render(&["n", "a_n"], rows));
            }
            Ok((doc, text))
        }
        Command::Oracle { which: OracleCommand::Eta { exps, prec } } => {
            let series = qseries::eta_quotient(&parse_exps(exps)?, *prec as usize)?;
            let coeffs: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
            let rows = coeffs.iter().enumerate().map(|(n, c)| vec![n.to_string(), c.clone()]).collect();
            Ok((json!(coeffs), table::render(&["n", "c_n"], rows)))
        }
        Command::Oracle { which: OracleCommand::Dim { level, weight } } => {
            let pairs = [
                ("index", qseries::index_mu(*level)?),
                ("dim_cuspforms", qseries::dim_cuspforms(*level, *weight)?),
                ("dim_modforms", qseries::dim_modforms(*level, *weight)?),
            ];
            let mut doc = json!({"level": level, "weight": weight});
            for (k, v) in pairs {
                doc[k] = json!(v);
            }
            Ok((doc, table::key_values(&pairs.map(|(k, v)| (k, v.to_string())))))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok((doc, text)) => {
            match cli.format {
                Format::Json => println!("{doc}"),
                Format::Table => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
