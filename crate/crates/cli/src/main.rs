use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eqschubert::cache;
use eqschubert::schubert::{render_expansion, type_a_double_schubert};
use eqschubert::verify::{self, Engines, Suite};
use eqschubert::{
    parse_gamma, CartanType, Error, Family, GammaElement, SchubertEngine, SignedPermutation, ZPoly,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "eqschubert",
    version,
    about = "Equivariant double Schubert polynomials of types A, B, C, D"
)]
struct Cli {
    /// Directory for cached tables.
    #[arg(long, global = true, env = "SCHUBERT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache even if a directory is configured.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Specialization {
    /// t = 0 (Billey-Haiman polynomial)
    T0,
    /// z = t = 0 (Stanley symmetric function)
    X0t0,
}

#[derive(Subcommand)]
enum Command {
    /// Print the double Schubert polynomial of a signed permutation.
    Compute {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        /// One-line notation, e.g. "-2 -1 3".
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long = "spec", value_enum)]
        specialization: Option<Specialization>,
    },
    /// Print the polynomial of every element of rank n.
    Table {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Restrict the polynomial of --perm to the fixed point --at.
    Localize {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand an expression such as "Q[1]*Q[1]" in the Schubert basis.
    Expand {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Pad permutations in the output to at least this rank.
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidPermutation(_)
            | Error::ParityViolation(_)
            | Error::InvalidPartition(_)
            | Error::InvalidGenerator { .. }
            | Error::FlavorMismatch(_)
            | Error::NotInSpan(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn cartan(ty: TypeArg) -> Result<CartanType, Failure> {
    match ty {
        TypeArg::B => Ok(CartanType::B),
        TypeArg::C => Ok(CartanType::C),
        TypeArg::D => Ok(CartanType::D),
        TypeArg::A => Err(Failure::Usage("this command needs type B, C or D".into())),
    }
}

struct Session {
    dir: Option<PathBuf>,
}

impl Session {
    /// An engine seeded from the cache for rank `n`, if there is one.
    fn engine(&self, ty: CartanType, n: u32) -> Result<SchubertEngine, Failure> {
        let engine = SchubertEngine::new(ty);
        if let Some(dir) = &self.dir {
            cache::load(&engine, dir, n)?;
        }
        Ok(engine)
    }

    fn save(&self, engine: &SchubertEngine, n: u32) -> Result<(), Failure> {
        if let Some(dir) = &self.dir {
            cache::store(&engine.snapshot().restricted(n), dir, n)?;
        }
        Ok(())
    }
}

fn render_gamma(g: &GammaElement, format: Format, extra: serde_json::Value) -> String {
    match format {
        Format::Text => g.to_string(),
        Format::Latex => g.to_latex(),
        Format::Json => {
            let mut v = extra;
            v["polynomial"] = serde_json::to_value(g).expect("serializable");
            v.to_string()
        }
    }
}

fn render_poly(p: &ZPoly, format: Format, extra: serde_json::Value) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => p.to_latex(),
        Format::Json => {
            let mut v = extra;
            v["polynomial"] = serde_json::to_value(p).expect("serializable");
            v.to_string()
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let session = Session {
        dir: if cli.no_cache { None } else { cli.cache_dir },
    };
    match cli.command {
        Command::Compute {
            ty,
            perm,
            format,
            specialization,
        } => {
            if let TypeArg::A = ty {
                let w = SignedPermutation::parse(&perm, Family::BC)?;
                let p = type_a_double_schubert(&w)?;
                println!(
                    "{}",
                    render_poly(&p, format, json!({"type": "A", "perm": w}))
                );
                return Ok(());
            }
            let ty = cartan(ty)?;
            let w = SignedPermutation::parse(&perm, ty.family())?;
            let n = w.rank().max(1);
            let engine = session.engine(ty, n)?;
            let g = match specialization {
                None => (*engine.double_schubert(&w)?).clone(),
                Some(Specialization::T0) => engine.billey_haiman(&w)?,
                Some(Specialization::X0t0) => engine.stanley(&w)?,
            };
            session.save(&engine, n)?;
            let extra = json!({"type": ty.to_string(), "perm": w});
            println!("{}", render_gamma(&g, format, extra));
        }
        Command::Table { ty, n, format } => {
            let ty = cartan(ty)?;
            let engine = session.engine(ty, n)?;
            let mut rows = Vec::new();
            for w in SignedPermutation::elements(ty.family(), n) {
                let g = engine.double_schubert(&w)?;
                rows.push((w, g));
            }
            session.save(&engine, n)?;
            match format {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(w, g)| json!({"perm": w, "polynomial": **g}))
                        .collect();
                    println!("{}", json!({"type": ty.to_string(), "rows": v}));
                }
                Format::Text => {
                    for (w, g) in &rows {
                        let entries: Vec<String> = w
                            .images_padded(n as usize)
                            .iter()
                            .map(i32::to_string)
                            .collect();
                        println!("{}\t{g}", entries.join(" "));
                    }
                }
                Format::Latex => {
                    println!("\\begin{{array}}{{|c|l|}}\n\\hline");
                    for (w, g) in &rows {
                        println!("{} & {} \\\\\n\\hline", w.to_latex(), g.to_latex());
                    }
                    println!("\\end{{array}}");
                }
            }
        }
        Command::Localize {
            ty,
            perm,
            at,
            format,
        } => {
            let ty = cartan(ty)?;
            let w = SignedPermutation::parse(&perm, ty.family())?;
            let v = SignedPermutation::parse(&at, ty.family())?;
            let n = w.rank().max(1);
            let engine = session.engine(ty, n)?;
            let value = engine.localize(&w, &v)?;
            session.save(&engine, n)?;
            let extra = json!({"type": ty.to_string(), "perm": w, "at": v});
            println!("{}", render_poly(&value, format, extra));
        }
        Command::Expand {
            ty,
            expr,
            n,
            format,
        } => {
            let ty = cartan(ty)?;
            let f = parse_gamma(&expr, ty.flavor())?;
            if f.flavor() != ty.flavor() {
                return Err(Failure::Usage(format!(
                    "type {ty} expressions use the {:?} basis",
                    ty.flavor()
                )));
            }
            let engine = session.engine(ty, n)?;
            let terms = engine.expand(&f)?;
            match format {
                Format::Json => {
                    let v: Vec<_> = terms
                        .iter()
                        .map(|(w, c)| json!({"perm": w, "coefficient": c}))
                        .collect();
                    println!("{}", json!({"type": ty.to_string(), "terms": v}));
                }
                Format::Text => println!("{}", render_expansion(&terms, n as usize)),
                Format::Latex => {
                    let parts: Vec<String> = terms
                        .iter()
                        .map(|(w, c)| {
                            format!("({})\\mathfrak{{S}}_{{{}}}", c.to_latex(), w.to_latex())
                        })
                        .collect();
                    println!(
                        "{}",
                        if parts.is_empty() {
                            "0".to_string()
                        } else {
                            parts.join(" + ")
                        }
                    );
                }
            }
        }
        Command::Verify { suite, n } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let engines = Engines::default();
            if let Some(dir) = &session.dir {
                for ty in [CartanType::B, CartanType::C, CartanType::D] {
                    cache::load(engines.get(ty), dir, n)?;
                }
            }
            let reports = verify::run(suite, n, &engines)?;
            let mut failed = None;
            for r in &reports {
                println!("[{}]", r.suite);
                print!("{r}");
                if failed.is_none() {
                    failed = r.first_failure().map(|(name, d)| format!("{name}: {d}"));
                }
            }
            for ty in [CartanType::B, CartanType::C, CartanType::D] {
                session.save(engines.get(ty), n)?;
            }
            if let Some(f) = failed {
                return Err(Failure::Check(f));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
