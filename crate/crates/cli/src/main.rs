use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use holomorphy::automorphisms::{self, AutData};
use holomorphy::oracle::{self, CayleyGroup, Presentation};
use holomorphy::verify::{self, Suite, VerifyConfig, DEFAULT_MAX_ORDER};
use holomorphy::{numtheory, Error, HolContext, HolElem};

const MAX_ORDER_VAR: &str = "HOLOMORPHY_MAX_ORDER";

#[derive(Parser)]
#[command(
    name = "holomorphy",
    version,
    about = "Exact arithmetic in Hol(C_n) for n = 2p^e, with brute-force verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ContextArgs {
    /// Modulus, of the form 2p^e with p an odd prime.
    #[arg(long)]
    n: u64,
    /// Generator of the units modulo n (default: least primitive root).
    #[arg(long)]
    k: Option<u64>,
}

impl ContextArgs {
    fn context(&self) -> Result<HolContext, Error> {
        HolContext::new(self.n, self.k)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements given as exponent pairs "a,b".
    Mul {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        g: (i64, i64),
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        h: (i64, i64),
    },
    /// Raise an element to an integer power.
    Pow {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        g: (i64, i64),
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Invert an element.
    Inv {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        g: (i64, i64),
    },
    /// Order of an element.
    Order {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        g: (i64, i64),
    },
    /// Image under ψ of the automorphism x ↦ x^(k^j), y ↦ x^c y, given as "c,j".
    Psi {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
        alpha: (i64, i64),
    },
    /// Summary of the group: p, e, φ(n), k, order and center.
    Info {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Run verification suites and print a report.
    Verify {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Comma-separated suite names (default: all).
        #[arg(long)]
        suites: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include per-suite wall time in JSON output.
        #[arg(long)]
        timings: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a Cayley table as JSON.
    Export {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read and validate a Cayley table written by `export`.
    Import {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    #[value(name = "hol-table")]
    Hol,
    #[value(name = "aut-table")]
    Aut,
    #[value(name = "dihedral-table")]
    Dihedral,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected an exponent pair \"a,b\", got \"{s}\""))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad exponent \"{t}\" in \"{s}\": {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::Json(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn max_order() -> Result<u64, Failure> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_ORDER_VAR} must be a positive integer, got \"{v}\""
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn show(g: HolElem) -> String {
    format!("{g} ({},{})", g.a(), g.b())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_size(size: u64) -> Result<(), Failure> {
    let limit = max_order()?;
    if size > limit {
        return Err(Error::SizeLimit { size, limit }.into());
    }
    Ok(())
}

/// `Hol(C_n)` as a table: the cyclic model for n = 2p^e, the full unit group otherwise.
fn holomorph_table(args: &ContextArgs) -> Result<(CayleyGroup, Presentation), Failure> {
    match args.context() {
        Ok(ctx) => {
            check_size(ctx.group_order())?;
            Ok((
                oracle::build_holomorph_table(&ctx),
                Presentation::holomorph(&ctx),
            ))
        }
        Err(Error::Shape { .. }) if args.k.is_none() => {
            check_size(args.n * numtheory::totient(args.n)?)?;
            Ok((
                oracle::build_general_holomorph(args.n)?,
                Presentation::general_holomorph(args.n)?,
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn aut_table(group: &CayleyGroup, pres: &Presentation) -> Result<CayleyGroup, Failure> {
    let auts = oracle::enumerate_automorphisms_bruteforce(group, pres)?;
    let table = oracle::aut_group_table(group, &auts)?;
    let names = ["x", "y"];
    let labels = auts
        .iter()
        .map(|a| {
            group
                .generators()
                .iter()
                .enumerate()
                .map(|(i, &g)| {
                    let name = if group.generators().len() == 2 {
                        names[i].to_string()
                    } else {
                        group.label(g)
                    };
                    format!("{name} ↦ {}", group.label(a.image(g)))
                })
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    Ok(CayleyGroup::new(
        table.size(),
        table.table().to_vec(),
        table.identity(),
        Vec::new(),
        Some(labels),
    )?)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Mul { ctx, g, h } => {
            let ctx = ctx.context()?;
            println!("{}", show(ctx.mul(ctx.elem(g.0, g.1), ctx.elem(h.0, h.1))));
        }
        Command::Pow { ctx, g, m } => {
            let ctx = ctx.context()?;
            let g = ctx.elem(g.0, g.1);
            let base = if m < 0 { ctx.inverse(g) } else { g };
            println!("{}", show(ctx.power(base, m.unsigned_abs())));
        }
        Command::Inv { ctx, g } => {
            let ctx = ctx.context()?;
            println!("{}", show(ctx.inverse(ctx.elem(g.0, g.1))));
        }
        Command::Order { ctx, g } => {
            let ctx = ctx.context()?;
            println!("{}", ctx.element_order(ctx.elem(g.0, g.1)));
        }
        Command::Psi { ctx, alpha } => {
            let ctx = ctx.context()?;
            let alpha = AutData::new(&ctx, alpha.0, alpha.1);
            println!("{}", show(automorphisms::psi(&ctx, alpha)));
        }
        Command::Info { ctx } => {
            let ctx = ctx.context()?;
            println!("n = {} = 2·{}^{}", ctx.n(), ctx.p(), ctx.e());
            println!("φ(n) = {}", ctx.phi());
            println!("k = {}", ctx.k());
            println!("|Hol(C_n)| = {}", ctx.group_order());
            let center: Vec<String> = ctx.center().into_iter().map(show).collect();
            println!("center = {{{}}}", center.join(", "));
        }
        Command::Verify {
            ctx,
            suites,
            format,
            seed,
            timings,
            out,
        } => {
            let suites = match suites {
                Some(csv) => Suite::parse_list(&csv)?,
                None => Suite::ALL.to_vec(),
            };
            let config = VerifyConfig {
                n: ctx.n,
                k: ctx.k,
                suites,
                seed,
                max_order: max_order()?,
                timings: timings || format == Format::Text,
            };
            let report = verify::run(&config)?;
            let text = match format {
                Format::Text => report.render_text(),
                Format::Json => report.to_json() + "\n",
            };
            emit(&text, out.as_deref())?;
            return Ok(report.all_passed());
        }
        Command::Export { ctx, what, out } => {
            let table = match what {
                What::Hol => holomorph_table(&ctx)?.0,
                What::Aut => {
                    let (group, pres) = holomorph_table(&ctx)?;
                    aut_table(&group, &pres)?
                }
                What::Dihedral => {
                    check_size(2 * ctx.n)?;
                    oracle::build_dihedral(ctx.n)?
                }
            };
            emit(&(table.to_json()? + "\n"), out.as_deref())?;
        }
        Command::Import { path, format } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Runtime(format!("cannot read {}: {e}", path.display())))?;
            let group = CayleyGroup::from_json(&text)?;
            match format {
                Format::Json => println!("{}", group.to_json()?),
                Format::Text => {
                    let center = oracle::center_bruteforce(&group);
                    println!("order {}", group.size());
                    println!("identity {}", group.label(group.identity()));
                    let gens: Vec<String> =
                        group.generators().iter().map(|&g| group.label(g)).collect();
                    println!("generators [{}]", gens.join(", "));
                    println!("abelian {}", group.is_abelian());
                    println!("center order {}", center.len());
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
