mod demo;
mod input;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use qmatroid::amplitude::Propagator;
use qmatroid::kontsevich::{Theorem1Options, WStarStrategy};
use qmatroid::matroid::{char_poly, tutte_poly, whitney_rank_poly};
use qmatroid::report::{CheckRecord, Format, Report};
use qmatroid::{Budget, Error, Field};

use input::Input;
use suites::Ctx;

#[derive(Parser)]
#[command(name = "qmatroid", version, about = "Finite-field matroid invariants and their identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial invariant of a matroid or graph.
    Poly {
        /// Matroid or graph file, or a catalog name.
        input: String,
        which: PolyKind,
        #[arg(long, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Walk through a worked example.
    Demo {
        which: DemoKind,
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Char,
    Tutte,
    Whitney,
    Chromatic,
    Flow,
    Dichromatic,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoKind {
    U24,
    C4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Theorem2,
    Fourier,
    Chevalley,
    Convolution,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Shortcut,
    SubsetSearch,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Matroid or graph file, or a catalog name.
    input: Option<String>,
    /// Field order or evaluation point; repeatable.
    #[arg(long = "q", allow_negative_numbers = true)]
    q: Vec<i64>,
    /// Propagator value at coincident points.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: BigRational,
    /// Propagator value at distinct points.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    b: BigRational,
    /// Field as `p`, `p^d`, or `p^d:c0,c1,...`.
    #[arg(long)]
    field: Option<Field>,
    #[arg(long, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
    #[arg(long, value_enum, default_value = "shortcut")]
    oracle: OracleKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::BudgetExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn fields_for(qs: &[i64], field: &Option<Field>, default: &[i64]) -> Result<Vec<Field>, Error> {
    if let Some(f) = field {
        return Ok(vec![f.clone()]);
    }
    let qs = if qs.is_empty() { default } else { qs };
    qs.iter()
        .map(|&q| {
            if q < 2 {
                return Err(Error::InvalidQ(q));
            }
            Field::with_order(q as u64)
        })
        .collect()
}

fn odd_fields(qs: &[i64], field: &Option<Field>, default: &[i64]) -> Result<Vec<Field>, Error> {
    if let Some(&q) = qs.iter().find(|&&q| q % 2 == 0) {
        return Err(Error::InvalidQ(q));
    }
    let fields = fields_for(qs, field, default)?;
    if let Some(f) = fields.iter().find(|f| f.characteristic() == 2) {
        return Err(Error::InvalidQ(f.order() as i64));
    }
    Ok(fields)
}

fn points(qs: &[i64], default: impl Iterator<Item = i64>) -> Result<Vec<i64>, Error> {
    let qs: Vec<i64> = if qs.is_empty() { default.collect() } else { qs.to_vec() };
    match qs.iter().find(|&&q| q < 2) {
        Some(&q) => Err(Error::InvalidQ(q)),
        None => Ok(qs),
    }
}

fn required(input: Option<&Input>) -> Result<&Input, Error> {
    input.ok_or_else(|| Error::UnknownLabel("this suite needs an input".into()))
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<CheckRecord>, Error> {
    let input = args.input.as_deref().map(Input::resolve).transpose()?;
    let budget = Budget::new(args.budget);
    let ctx = Ctx {
        budget,
        options: Theorem1Options {
            strategy: match args.oracle {
                OracleKind::Shortcut => WStarStrategy::LaplacianRank,
                OracleKind::SubsetSearch => WStarStrategy::SubsetSearch,
            },
            budget,
            ..Default::default()
        },
        seed: args.seed,
        samples: args.samples,
        propagator: Propagator::new(args.a.clone(), args.b.clone()),
    };
    let native = input.as_ref().and_then(Input::native_field);
    let field = args.field.clone().or(native);
    let mut out = Vec::new();
    let all = args.suite == Suite::All;
    if matches!(args.suite, Suite::Theorem1 | Suite::All) {
        let input = required(input.as_ref())?;
        let fields = odd_fields(&args.q, &field, &[3, 5])?;
        out.extend(suites::theorem1_suite(input, &fields, &ctx)?);
    }
    if matches!(args.suite, Suite::Theorem2 | Suite::All) {
        let qs = points(&args.q, 2..=12)?;
        out.extend(suites::theorem2_suite(required(input.as_ref())?, &qs, &ctx)?);
    }
    if matches!(args.suite, Suite::Fourier | Suite::All) {
        let input = required(input.as_ref())?;
        if !all || input.graph().is_some() {
            let fields = fields_for(&args.q, &args.field, &[3])?;
            out.extend(suites::fourier_suite(input, &fields, &ctx)?);
        }
    }
    if matches!(args.suite, Suite::Chevalley | Suite::All) {
        let fields = odd_fields(&args.q, &field, &[3, 5, 7])?;
        out.extend(suites::chevalley_suite(input.as_ref(), &fields, &ctx)?);
    }
    if matches!(args.suite, Suite::Convolution | Suite::All) {
        let qs = points(&args.q, 2..=5)?;
        out.extend(suites::convolution_suite(required(input.as_ref())?, &qs, &ctx)?);
    }
    Ok(out)
}

fn run_poly(input: &str, which: PolyKind, budget: Budget) -> Result<String, Error> {
    let input = Input::resolve(input)?;
    let graph = || {
        input
            .graph()
            .ok_or_else(|| Error::UnknownLabel(format!("{} is not a graph", input.name())))
    };
    Ok(match which {
        PolyKind::Char => char_poly(&input.oracle(budget)?, budget)?.display_with("x"),
        PolyKind::Tutte => tutte_poly(&input.oracle(budget)?, budget)?.display_with("x", "y"),
        PolyKind::Whitney => whitney_rank_poly(&input.oracle(budget)?, budget)?.display_with("x", "y"),
        PolyKind::Chromatic => graph()?.chromatic_poly(budget)?.display_with("x"),
        PolyKind::Flow => graph()?.flow_poly(budget)?.display_with("x"),
        PolyKind::Dichromatic => graph()?.dichromatic_poly(budget)?.display_with("x", "y"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poly { input, which, budget } => run_poly(&input, which, Budget::new(budget)).map(|p| {
            println!("{p}");
            true
        }),
        Command::Demo { which, q } => match which {
            DemoKind::U24 => demo::u24(q.unwrap_or(5), Budget::default()),
            DemoKind::C4 => demo::c4(q.unwrap_or(3) as i64, Budget::default()),
        },
        Command::Verify(args) => {
            if let Some(n) = args.workers {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            run_verify(&args).map(|records| {
                let report = Report { records };
                let format = match args.format {
                    OutFormat::Text => Format::Text,
                    OutFormat::Json => Format::Structured,
                };
                print!("{}", report.render(format));
                report.all_pass()
            })
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}
