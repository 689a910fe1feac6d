//! Command-line front end: reproduces the worked examples and runs the law suites.

pub mod golden;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use monadcheck_core::harness::{self, Generators};
use monadcheck_core::monadic::{
    self, extract_or_zero, guarded_log, guarded_one_minus_sqrt, guarded_sqrt, instance_by_name, nub,
    odd_doubler, pythagorean_triples, safe_head, ContainerMonad, PHONEBOOK,
};
use monadcheck_core::report::render_reports;
use monadcheck_core::{FiniteSet, LawReport, ListMonad, MultiShapeFunctor, Powerset, Value, WrapFunctor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "monadcheck", version, about = "Functor and monad laws, checked")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pythagorean triples with every coordinate at most N.
    Pythagoras {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        n: i64,
        /// Only triples with x < y < z.
        #[arg(long)]
        strict: bool,
    },
    /// The list monad examples.
    ListDemo,
    /// The guarded Maybe pipelines and safe head.
    MaybeDemo,
    /// Look a name up in the phone book.
    Phonebook {
        #[arg(long)]
        name: String,
    },
    /// The two functor program transcripts.
    FunctorDemo {
        /// Include the "Program begins." / "Program ends." lines.
        #[arg(long)]
        banner: bool,
    },
    /// Check functor and monad laws for a container instance.
    Laws {
        #[arg(long, value_parser = monadic::INSTANCE_NAMES)]
        instance: String,
        /// Succeed only if exactly the instance's known law violation occurs.
        #[arg(long)]
        expect_fail: bool,
        /// Use COUNT random containers drawn from this seed instead of the default panel.
        #[arg(long, requires = "count")]
        seed: Option<u64>,
        #[arg(long, requires = "seed")]
        count: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the powerset monad's unit, associativity and naturality laws.
    PowersetCheck {
        /// Largest carrier size checked.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        max_size: u8,
        /// Seed for sampled associativity at sizes above 2.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = monadcheck_core::powerset::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
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
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match cli.command {
        Command::Pythagoras { n, strict } => Outcome::ok(line(&triples_value(n, strict))),
        Command::ListDemo => Outcome::ok(list_demo()),
        Command::MaybeDemo => Outcome::ok(maybe_demo()),
        Command::Phonebook { name } => {
            let found = monadic::lookup(&name.as_str(), &PHONEBOOK).map(|v| Value::from(*v));
            Outcome::ok(line(&Value::from(found)))
        }
        Command::FunctorDemo { banner } => Outcome::ok(functor_demo(banner)),
        Command::Laws {
            instance,
            expect_fail,
            seed,
            count,
            report,
        } => laws(&instance, expect_fail, seed.zip(count), report),
        Command::PowersetCheck {
            max_size,
            seed,
            samples,
            report,
        } => powerset_check(max_size as usize, seed, samples, report),
    }
}

fn line(v: &Value) -> String {
    format!("{v}\n")
}

fn triples_value(n: i64, strict: bool) -> Value {
    Value::list(
        pythagorean_triples(n, strict)
            .into_iter()
            .map(|(x, y, z)| Value::tuple([x, y, z])),
    )
}

fn one_to_ten() -> Value {
    Value::list(1..=10)
}

fn list_demo() -> String {
    let l = ListMonad;
    let unit = |x: &Value| l.unit(x.clone());
    let returned_odd = |x: &Value| l.unit(odd_doubler(x)?);
    let outputs = [
        l.bind(&one_to_ten(), &unit),
        l.bind(&one_to_ten(), &odd_doubler),
        l.bind(&one_to_ten(), &returned_odd),
        l.map(&odd_doubler, &one_to_ten()),
        l.map(&monadic::dup_succ, &one_to_ten()),
        l.bind(&one_to_ten(), &monadic::dup_succ),
    ];
    let mut out = String::new();
    for v in outputs {
        out.push_str(&line(&v.expect("list demo functions are total on integers")));
    }
    let Ok(Value::List(dup)) = l.bind(&one_to_ten(), &monadic::dup_succ) else {
        unreachable!("bind over a list yields a list")
    };
    out.push_str(&line(&Value::List(nub(&dup))));
    out
}

fn maybe_demo() -> String {
    let mut out = String::new();
    let block = |out: &mut String, values: Vec<Value>| {
        for v in values {
            out.push_str(&line(&v));
        }
    };
    block(
        &mut out,
        [3.0, -3.0, 0.0, -1.0]
            .into_iter()
            .map(|x| Value::from(guarded_one_minus_sqrt(x)))
            .collect(),
    );
    out.push('\n');
    block(
        &mut out,
        [3.0, -3.0, 0.0, 1.0]
            .into_iter()
            .map(|x| Value::from(guarded_log(guarded_one_minus_sqrt(x))))
            .collect(),
    );
    out.push('\n');
    block(
        &mut out,
        [0.5, -3.0, 5.0, 1.0]
            .into_iter()
            .map(|x| Value::Float(extract_or_zero(guarded_log(guarded_sqrt(x)))))
            .collect(),
    );
    out.push('\n');
    block(
        &mut out,
        vec![Value::from(safe_head(&[])), Value::from(safe_head(&[6, 1, 2]))],
    );
    out
}

fn functor_demo(banner: bool) -> String {
    let times = |k: i64| move |v: &Value| Ok(Value::Int(v.as_int()? * k));
    let plus1 = |v: &Value| Ok(Value::Int(v.as_int()? + 1));
    let singleton = |v: &Value| Ok(Value::list([v.clone()]));
    let odd_list = |v: &Value| Ok(Value::list([2 * v.as_int()? + 1]));
    let id = |v: &Value| Ok(v.clone());
    let times6 = |v: &Value| times(2)(&times(3)(v)?);

    let w = WrapFunctor;
    let thing1 = Value::wrap(45);
    let first = [
        Ok(thing1.clone()),
        w.map(&times(2), &thing1),
        w.map(&plus1, &thing1),
        w.map(&singleton, &thing1),
        w.map(&odd_list, &thing1),
        Ok(thing1.clone()),
    ];

    let m = MultiShapeFunctor;
    let mut second = Vec::new();
    for thing in [Value::f1(10), Value::f2([100, 1000, 10000, 100000]), Value::f3(400, 500)] {
        second.push(Ok(thing.clone()));
        second.push(m.map(&times(2), &thing));
        second.push(Ok(thing));
    }
    let thing4 = Value::f4(200);
    second.extend([
        Ok(thing4.clone()),
        m.map(&times(2), &thing4),
        m.map(&id, &thing4),
        m.map(&times6, &thing4),
        m.map(&times(3), &thing4).and_then(|v| m.map(&times(2), &v)),
        Ok(thing4),
    ]);

    let mut out = String::new();
    for (i, transcript) in [first.to_vec(), second].into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if banner {
            out.push_str("Program begins.\n");
        }
        for v in transcript {
            out.push_str(&line(&v.expect("integer maps are total")));
        }
        if banner {
            out.push_str("Program ends.\n");
        }
    }
    out
}

/// Failures an instance is known to have under its default panel.
fn known_failures(instance: &str) -> Vec<String> {
    match instance {
        "multishape" => vec!["FAIL functor-identity @ multishape witness=F4 200 lhs=F1 200 rhs=F4 200".into()],
        _ => Vec::new(),
    }
}

fn write_report(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => Ok(()),
    }
}

fn laws(instance: &str, expect_fail: bool, random: Option<(u64, usize)>, report: Option<PathBuf>) -> Outcome {
    let known = known_failures(instance);
    if expect_fail && known.is_empty() {
        return Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: --expect-fail: {instance} has no known law violation\n"),
        };
    }
    let inst: Box<dyn ContainerMonad> = instance_by_name(instance).expect("clap restricts instance names");
    let gen = match random {
        Some((seed, count)) => Generators::random_for(instance, seed, count),
        None => Generators::default_for(instance),
    }
    .expect("every instance has panels");
    let reports = match harness::check_all(inst.as_ref(), &gen) {
        Ok(r) => r,
        Err(e) => return failure(format!("error: {e}\n")),
    };
    let text = render_reports(&reports);
    if let Err(e) = write_report(&report, &text) {
        return failure(format!("error: {e}\n"));
    }
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(LawReport::to_string).collect();
    let code = if expect_fail {
        if failed == known {
            EXIT_OK
        } else {
            EXIT_LAW_FAILURE
        }
    } else if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_LAW_FAILURE
    };
    Outcome {
        code,
        stdout: text,
        stderr: String::new(),
    }
}

fn failure(stderr: String) -> Outcome {
    Outcome {
        code: EXIT_LAW_FAILURE,
        stdout: String::new(),
        stderr,
    }
}

/// Unit triangles and associativity per carrier size, then naturality of
/// η (sizes ≤ 3) and μ (sizes ≤ 2) against every arrow, in component order.
pub fn powerset_reports(
    max_size: usize,
    seed: u64,
    samples: usize,
) -> Result<Vec<LawReport<monadcheck_core::Atom>>, monadcheck_core::PowersetError> {
    let ps = Powerset::default();
    let mut reports = Vec::new();
    for n in 0..=max_size {
        let x = FiniteSet::range(n);
        reports.extend(ps.check_unit_laws(&x)?);
        reports.push(if n <= 2 {
            ps.check_associativity(&x)?
        } else {
            ps.check_associativity_sampled(&x, seed, samples)?
        });
    }
    for (t, limit) in [(ps.eta_transform(), 3), (ps.mu_transform(), 2)] {
        let top = max_size.min(limit);
        for n in 0..=top {
            for m in 0..=top {
                reports.push(ps.check_naturality_all(&t, &FiniteSet::range(n), &FiniteSet::range(m))?);
            }
        }
    }
    Ok(reports)
}

fn powerset_check(max_size: usize, seed: u64, samples: usize, report: Option<PathBuf>) -> Outcome {
    let reports = match powerset_reports(max_size, seed, samples) {
        Ok(r) => r,
        Err(e) => return failure(format!("error: {e}\n")),
    };
    let text = render_reports(&reports);
    if let Err(e) = write_report(&report, &text) {
        return failure(format!("error: {e}\n"));
    }
    let mut summary = String::new();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(summary, "{} checks, {failed} failed", reports.len());
    Outcome {
        code: if failed == 0 { EXIT_OK } else { EXIT_LAW_FAILURE },
        stdout: text,
        stderr: summary,
    }
}
