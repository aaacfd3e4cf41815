use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hopfkit::builders::{
    builtin_group, builtin_group_text, drinfeld_double, function_algebra, group_algebra, parse_group, tensor_product,
    GroupTable, BUILTIN_GROUPS,
};
use hopfkit::hopf::{parse_hopf, write_hopf, HopfData};
use hopfkit::pipeline::Analysis;
use hopfkit::theorems::{run_suites, Suite, VerificationReport};
use hopfkit::Error;

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact computation with semisimple Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group table or a Hopf algebra file.
    #[command(subcommand)]
    Build(Build),
    /// Check the Hopf algebra axioms.
    CheckAxioms(Session),
    /// Print the normalized integrals λ, Λ and Λ'.
    Integrals(Session),
    /// Decompose into blocks and print their degrees.
    Wedderburn(Session),
    /// Print the character table, centrality and fusion rules.
    Characters(Session),
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        session: Session,
        #[arg(long, default_value = "all", value_parser = [
            "all", "axioms", "integrals", "lemma1", "corollary", "proposition", "section4", "kaplansky", "central-fusion",
        ])]
        suite: String,
    },
    /// Run every suite and print one JSON document.
    Report {
        #[command(flatten)]
        session: Session,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Build {
    /// Group algebra kG of a `.grp` file or built-in group.
    GroupAlgebra {
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Function algebra k^G of a `.grp` file.
    FunctionAlgebra {
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Drinfeld double D(G) of a `.grp` file.
    Double {
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Tensor product of two `.hopf` files.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write one of the built-in group tables.
    Group {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(BUILTIN_GROUPS))]
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    GroupAlgebra,
    FunctionAlgebra,
    Double,
}

#[derive(Args)]
struct Session {
    /// A `.hopf` file, or a `.grp` file or built-in group name with `--as`.
    input: String,
    /// Build the algebra from a group first.
    #[arg(long = "as", value_enum)]
    construction: Option<Construction>,
    /// Cyclotomic order N used for splitting; defaults to the input's field.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    cyclotomic: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Print stage timings to stderr.
    #[arg(long)]
    timings: bool,
}

enum Outcome {
    Pass,
    Fail,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_group(source: &str) -> Result<GroupTable, Error> {
    let path = Path::new(source);
    if !path.exists() {
        if let Some(g) = builtin_group(source) {
            return Ok(g);
        }
    }
    parse_group(&read(path)?)
}

fn build(g: &GroupTable, how: Construction) -> HopfData {
    match how {
        Construction::GroupAlgebra => group_algebra(g),
        Construction::FunctionAlgebra => function_algebra(g),
        Construction::Double => drinfeld_double(g),
    }
}

impl Session {
    fn algebra(&self) -> Result<HopfData, Error> {
        match self.construction {
            Some(how) => Ok(build(&load_group(&self.input)?, how)),
            None if self.input.ends_with(".grp") => {
                Err(Error::InvalidInput(format!("{} is a group table; pass --as to choose a construction", self.input)))
            }
            None => parse_hopf(&read(Path::new(&self.input))?),
        }
    }

    fn analysis(&self) -> Result<Analysis, Error> {
        let h = self.algebra()?;
        let order = self.cyclotomic.unwrap_or_else(|| h.field().order());
        Ok(Analysis::new(h, order, self.seed))
    }

    fn finish(&self, a: &Analysis) {
        if self.timings {
            for (stage, t) in a.timings() {
                eprintln!("{stage:>16}: {:.3}s", t.as_secs_f64());
            }
        }
    }
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn outcome(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json"));
}

fn run_build(cmd: Build) -> Result<Outcome, Error> {
    let (text, output) = match cmd {
        Build::GroupAlgebra { group, output } => {
            (write_hopf(&build(&load_group(&group)?, Construction::GroupAlgebra)), output)
        }
        Build::FunctionAlgebra { group, output } => {
            (write_hopf(&build(&load_group(&group)?, Construction::FunctionAlgebra)), output)
        }
        Build::Double { group, output } => (write_hopf(&build(&load_group(&group)?, Construction::Double)), output),
        Build::Tensor { left, right, output } => {
            let a = parse_hopf(&read(&left)?)?;
            let b = parse_hopf(&read(&right)?)?;
            (write_hopf(&tensor_product(&a, &b)), output)
        }
        Build::Group { name, output } => (builtin_group_text(&name).expect("validated by clap"), output),
    };
    write(&output, &text)?;
    Ok(Outcome::Pass)
}

fn check_axioms(s: &Session) -> Result<Outcome, Error> {
    let a = s.analysis()?;
    let report = a.axioms();
    if s.json {
        print_json(
            &json!({ "algebra": a.algebra().name(), "dim": a.algebra().dim(), "checks": report.checks, "overall": report.all_pass() }),
        );
    } else {
        println!("{} (dim {})", a.algebra().name(), a.algebra().dim());
        for c in &report.checks {
            println!("{} {:<32} {}", mark(c.passed), c.name, c.statement);
            if let Some(w) = &c.witness {
                println!("     {w}");
            }
        }
    }
    s.finish(&a);
    Ok(outcome(report.all_pass()))
}

fn integrals(s: &Session) -> Result<Outcome, Error> {
    let a = s.analysis()?;
    let h = a.algebra();
    let ip = a.integrals()?;
    let checks = ip.checks(h);
    let pass = checks.iter().all(|c| c.pass);
    if s.json {
        let strings = |v: &[hopfkit::arith::CycScalar]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        print_json(&json!({
            "algebra": h.name(),
            "dim": h.dim(),
            "lambda": strings(&ip.dual_integral.coords),
            "Lambda": strings(&ip.integral),
            "Lambda_scaled": strings(&ip.integral_scaled),
            "checks": checks,
            "overall": pass,
        }));
    } else {
        println!("λ  = [{}]", join(&ip.dual_integral.coords));
        println!("Λ  = [{}]", join(&ip.integral));
        println!("Λ' = [{}]", join(&ip.integral_scaled));
        for c in &checks {
            println!("{} {:<20} {}", mark(c.pass), c.id, c.statement);
        }
    }
    s.finish(&a);
    Ok(outcome(pass))
}

fn wedderburn(s: &Session) -> Result<Outcome, Error> {
    let a = s.analysis()?;
    let h = a.algebra();
    let blocks = a.blocks()?;
    let checks = blocks.checks(h);
    let pass = checks.iter().all(|c| c.pass);
    if s.json {
        let rows: Vec<_> = blocks
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "label": b.label,
                    "degree": b.degree,
                    "eigenvalue": b.eigenvalue.to_string(),
                    "idempotent": b.idempotent.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({
            "algebra": h.name(),
            "dim": h.dim(),
            "cyclotomic": a.order(),
            "seed": a.seed(),
            "center_dim": blocks.center_basis.len(),
            "splitting_polynomial": blocks.splitting_polynomial.to_string(),
            "attempts": blocks.attempts,
            "blocks": rows,
            "checks": checks,
            "overall": pass,
        }));
    } else {
        println!("{} (dim {}) over Q(ζ_{})", h.name(), h.dim(), a.order());
        println!("blocks: {}", blocks.len());
        println!("degrees: {}", join(&blocks.degrees()));
        println!("splitting polynomial: {} ({} attempts)", blocks.splitting_polynomial, blocks.attempts);
        for b in &blocks.blocks {
            println!("  {:<4} degree {:<3} eigenvalue {}", b.label, b.degree, b.eigenvalue);
        }
        for c in &checks {
            println!("{} {:<22} {}", mark(c.pass), c.id, c.statement);
            if let Some(w) = &c.witness {
                println!("     {w}");
            }
        }
    }
    s.finish(&a);
    Ok(outcome(pass))
}

fn characters(s: &Session) -> Result<Outcome, Error> {
    let a = s.analysis()?;
    let h = a.algebra();
    let table = a.characters()?;
    let central = a.centrality()?;
    let fusion = a.fusion()?;
    let pass = fusion.annihilated.iter().all(|&x| x);
    if s.json {
        let rows: Vec<_> = (0..table.len())
            .map(|v| {
                json!({
                    "label": table.labels[v],
                    "degree": table.degrees[v],
                    "central": central[v],
                    "values": table.characters[v].coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({
            "algebra": h.name(),
            "dim": h.dim(),
            "characters": rows,
            "fusion": {
                "labels": fusion.labels,
                "coefficients": fusion.coefficients,
                "dual": fusion.dual,
                "unit": fusion.unit,
                "polynomials": fusion.polynomials.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "annihilated": fusion.annihilated,
            },
            "overall": pass,
        }));
    } else {
        println!("{} (dim {})", h.name(), h.dim());
        for v in 0..table.len() {
            println!(
                "{:<4} degree {:<3} central {:<5} [{}]",
                table.labels[v],
                table.degrees[v],
                central[v],
                join(&table.characters[v].coords)
            );
        }
        println!("fusion rules:");
        let n = fusion.rank();
        for v in 0..n {
            for w in 0..n {
                let terms: Vec<String> = (0..n)
                    .filter(|&u| fusion.coefficients[v][w][u] > 0)
                    .map(|u| match fusion.coefficients[v][w][u] {
                        1 => fusion.labels[u].clone(),
                        m => format!("{m}{}", fusion.labels[u]),
                    })
                    .collect();
                println!("  {} ⊗ {} = {}", fusion.labels[v], fusion.labels[w], terms.join(" + "));
            }
        }
        for v in 0..n {
            println!(
                "{} {}* = {}, p(x) = {}",
                mark(fusion.annihilated[v]),
                fusion.labels[v],
                fusion.labels[fusion.dual[v]],
                fusion.polynomials[v]
            );
        }
    }
    s.finish(&a);
    Ok(outcome(pass))
}

fn print_report(report: &VerificationReport) {
    println!("{} (dim {})", report.algebra, report.dim);
    for suite in &report.suites {
        let tag = if suite.exploratory { " (exploratory)" } else { "" };
        println!("[{}] {}{tag}", mark(suite.passed()), suite.name);
        for item in &suite.items {
            println!("  {} {:<34} {}", mark(item.pass), item.id, item.statement);
            if !item.pass {
                println!("       {}", item.witness);
            }
        }
    }
    println!("overall: {}", mark(report.overall));
}

fn verify(s: &Session, suite: &str) -> Result<Outcome, Error> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let a = s.analysis()?;
    let report = run_suites(&a, &suites)?;
    if s.json {
        println!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    s.finish(&a);
    Ok(outcome(report.overall))
}

fn report(s: &Session, output: Option<&Path>) -> Result<Outcome, Error> {
    let a = s.analysis()?;
    let report = run_suites(&a, &Suite::ALL)?;
    let text = report.to_json();
    match output {
        Some(path) => write(path, &format!("{text}\n"))?,
        None => println!("{text}"),
    }
    s.finish(&a);
    Ok(outcome(report.overall))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) | Error::Algorithm(_) | Error::RetriesExhausted(_) | Error::NonSquareTrace(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(b) => run_build(b),
        Command::CheckAxioms(s) => check_axioms(&s),
        Command::Integrals(s) => integrals(&s),
        Command::Wedderburn(s) => wedderburn(&s),
        Command::Characters(s) => characters(&s),
        Command::Verify { session, suite } => verify(&session, &suite),
        Command::Report { session, output } => report(&session, output.as_deref()),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
