use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use cogirth::bits::{self, Mask};
use cogirth::m4::{in_m4, minimality_violation};
use cogirth::spec::{self, MatroidSpec};
use cogirth::{catalog, has_minor, is_isomorphic, Catalog, Fingerprint, Matroid, Report, Sources, Suite};

/// Matroid queries and the claim verifier.
///
/// Matroid arguments are catalog names (case-insensitive, optionally written
/// `name:X`) or paths to JSON spec files.
#[derive(Parser)]
#[command(name = "cogirth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the named matroids.
    Catalog,
    /// Print the basic invariants of a matroid.
    Show {
        matroid: String,
        /// Also list every circuit and cocircuit.
        #[arg(long)]
        families: bool,
        /// Print the matroid as a circuits spec instead.
        #[arg(long)]
        spec: bool,
    },
    /// Decide whether two matroids are isomorphic.
    Iso { a: String, b: String },
    /// Search for TARGET as a minor of HOST.
    HasMinor { host: String, target: String },
    /// Simple with every cocircuit of size at least four?
    CheckM4 { matroid: String },
    /// Is the matroid minor-minimal in that class? At most 13 elements.
    Minimal { matroid: String },
    /// Run the claim battery.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// JSON file replacing some of the catalog's literal matrices and
        /// edge lists, e.g. `{"q9": [[1,1,0,1,1], ...]}`.
        #[arg(long)]
        sources: Option<PathBuf>,
    },
    /// Exhaustive scan of a projective geometry's point sets.
    Sweep {
        #[arg(long)]
        field: u32,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

struct Loaded {
    matroid: Matroid,
    labels: Vec<String>,
}

impl Loaded {
    fn set(&self, x: Mask) -> String {
        let names: Vec<&str> = bits::elements(x).map(|e| self.labels[e].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

fn load(arg: &str, cat: &Catalog) -> Result<Loaded> {
    let spec = spec::resolve(arg, cat).with_context(|| format!("reading `{arg}`"))?;
    let matroid = spec.build(cat).with_context(|| format!("building `{arg}`"))?;
    let labels = match &spec {
        MatroidSpec::Name { name } => cat.get(name).map(|e| e.labels.clone()),
        _ => None,
    }
    .unwrap_or_else(|| (0..matroid.n()).map(|e| e.to_string()).collect());
    Ok(Loaded { matroid, labels })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let cat = catalog();
    match command {
        Command::Catalog => {
            println!("{:<9} {:>3} {:>3} {:>7} {:>8}  source", "name", "n", "r", "girth", "cogirth");
            for e in cat.entries() {
                let m = &e.matroid;
                println!(
                    "{:<9} {:>3} {:>3} {:>7} {:>8}  {}",
                    e.name,
                    m.n(),
                    m.rank(),
                    m.girth().to_string(),
                    m.cogirth().to_string(),
                    e.source
                );
            }
        }
        Command::Show { matroid, families, spec } => {
            let l = load(&matroid, &cat)?;
            let m = &l.matroid;
            if spec {
                println!("{}", MatroidSpec::from_matroid(m).to_json());
                return Ok(ExitCode::SUCCESS);
            }
            let circuits = m.circuits();
            let cocircuits = m.cocircuits();
            println!("elements     {}", l.labels.join(" "));
            println!("n            {}", m.n());
            println!("rank         {}", m.rank());
            println!("bases        {}", m.bases().len());
            println!("girth        {}", m.girth());
            println!("cogirth      {}", m.cogirth());
            println!("simple       {}", m.is_simple());
            println!("in M4        {}", in_m4(m));
            println!("circuits     {} by size {:?}", circuits.len(), circuits.size_histogram());
            println!("cocircuits   {} by size {:?}", cocircuits.len(), cocircuits.size_histogram());
            let triangles: Vec<String> = m.triangles().iter().map(|t| l.set(t)).collect();
            println!("triangles    {}", triangles.join(" "));
            println!("fingerprint  {}", Fingerprint::of(m).token());
            if families {
                for c in circuits.iter() {
                    println!("circuit      {}", l.set(c));
                }
                for d in cocircuits.iter() {
                    println!("cocircuit    {}", l.set(d));
                }
            }
        }
        Command::Iso { a, b } => {
            let (a, b) = (load(&a, &cat)?, load(&b, &cat)?);
            match is_isomorphic(&a.matroid, &b.matroid) {
                Some(f) => {
                    println!("isomorphic");
                    for (e, &g) in f.iter().enumerate() {
                        println!("  {} -> {}", a.labels[e], b.labels[g]);
                    }
                }
                None => println!("not isomorphic"),
            }
        }
        Command::HasMinor { host, target } => {
            let (h, t) = (load(&host, &cat)?, load(&target, &cat)?);
            match has_minor(&h.matroid, &t.matroid) {
                Some(w) => {
                    println!("minor found");
                    println!("  contract {}", h.set(w.contract));
                    println!("  delete   {}", h.set(w.delete));
                    for (e, &g) in w.mapping.iter().enumerate() {
                        println!("  {} -> {}", t.labels[e], h.labels[g]);
                    }
                }
                None => println!("no minor"),
            }
        }
        Command::CheckM4 { matroid } => {
            let l = load(&matroid, &cat)?;
            let m = &l.matroid;
            println!("{} (girth {}, cogirth {})", in_m4(m), m.girth(), m.cogirth());
        }
        Command::Minimal { matroid } => {
            let l = load(&matroid, &cat)?;
            let m = &l.matroid;
            if !in_m4(m) {
                println!("false (not in M4: girth {}, cogirth {})", m.girth(), m.cogirth());
                return Ok(ExitCode::SUCCESS);
            }
            match minimality_violation(m)? {
                None => println!("true (no proper nonempty minor is in M4)"),
                Some((c, d)) => {
                    let (minor, _) = m.minor(c, d)?;
                    println!(
                        "false (M / {} \\ {} is in M4: {} elements, rank {})",
                        l.set(c),
                        l.set(d),
                        minor.n(),
                        minor.rank()
                    );
                }
            }
        }
        Command::VerifyPaper { suite, json, sources } => {
            let src = match sources {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
                }
                None => Sources::default(),
            };
            let report = Report::new(cogirth::verify_with(suite, &src));
            for c in &report.claims {
                println!("{}", c.line());
            }
            let (pass, fail, skip) = cogirth::claims::tally(&report.claims);
            println!("{pass} passed, {fail} failed, {skip} skipped");
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sweep { field, rank, json } => {
            let r = cogirth::sweep(field, rank, &cat)?;
            println!("PG({}, {field}): {} points, {} subsets", rank - 1, r.universe, r.subsets);
            println!("simple with cogirth >= 4: {} subsets, {} classes", r.qualifying_subsets, r.classes.len());
            for c in &r.classes {
                println!(
                    "  n={:<2} r={} points {:?} minor {}",
                    c.n,
                    c.r,
                    c.points,
                    c.minor.as_deref().unwrap_or("NONE")
                );
            }
            println!("failures: {}", r.failures.len());
            for f in &r.failures {
                println!("  {}", f.to_json());
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&r)?;
                std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            if !r.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
