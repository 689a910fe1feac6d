//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use monadcheck_cli::golden::{self, FLOAT_TOLERANCE};
use monadcheck_core::finset::{enumerate_functions, identity};
use monadcheck_core::harness::{self, recheck, Generators};
use monadcheck_core::monadic::{ContainerMonad, ValueFn};
use monadcheck_core::powerset::{union_of, Endofunctor, NatTransform};
use monadcheck_core::{
    Atom, FiniteFunction, FiniteSet, ListMonad, MonadError, MultiShapeFunctor, OptionMonad, Powerset, Value,
    WrapFunctor,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Run {
    code: i32,
    stdout: String,
    elapsed: Duration,
}

fn monadcheck(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_monadcheck"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        elapsed: start.elapsed(),
    }
}

fn golden_file(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_outputs() -> Outcome {
    let cases: [(&[&str], &str); 7] = [
        (&["pythagoras", "--n", "9"], "pythagoras_9.txt"),
        (&["pythagoras", "--n", "25", "--strict"], "pythagoras_25_strict.txt"),
        (&["phonebook", "--name", "Ali"], "phonebook_ali.txt"),
        (&["phonebook", "--name", "Salem"], "phonebook_salem.txt"),
        (&["list-demo"], "list_demo.txt"),
        (&["functor-demo"], "functor_demo.txt"),
        (&["functor-demo", "--banner"], "functor_demo_banner.txt"),
    ];
    let mut total = Duration::ZERO;
    for (args, file) in cases {
        let run = monadcheck(args);
        total += run.elapsed;
        ensure(run.code == 0, || format!("{args:?} exited {}", run.code))?;
        ensure(run.stdout == golden_file(file), || {
            format!("{args:?} differs from {file}:\n{}", run.stdout)
        })?;
    }
    // safe head: the last block of maybe-demo, which has no float lines.
    let maybe = monadcheck(&["maybe-demo"]);
    total += maybe.elapsed;
    ensure(maybe.stdout.ends_with("\n\nNothing\nJust 6\n"), || {
        format!("safe head block missing:\n{}", maybe.stdout)
    })?;
    ensure(total < Duration::from_secs(1), || format!("took {total:?}"))?;
    Ok(format!("8 transcripts byte-exact in {} ms", total.as_millis()))
}

fn float_pipelines() -> Outcome {
    let run = monadcheck(&["maybe-demo"]);
    ensure(run.code == 0, || format!("maybe-demo exited {}", run.code))?;
    golden::compare(&golden_file("maybe_demo.txt"), &run.stdout, FLOAT_TOLERANCE)?;
    // The reference values themselves, independently of the transcript.
    let (f3, h05, h5) = (1.0 - 3f64.sqrt(), 0.5f64.sqrt().ln(), 5f64.sqrt().ln());
    for (got, want) in [(f3, -0.7320508), (h05, -0.34657362), (h5, 0.804719)] {
        ensure((got - want).abs() <= FLOAT_TOLERANCE, || format!("{got} vs {want}"))?;
    }
    Ok(format!("17 lines within {FLOAT_TOLERANCE:e}"))
}

fn powerset_verification() -> Outcome {
    let start = Instant::now();
    let run = monadcheck(&["powerset-check", "--max-size", "3", "--seed", "42", "--samples", "10000"]);
    let elapsed = start.elapsed();
    ensure(run.code == 0, || format!("powerset-check exited {}:\n{}", run.code, run.stdout))?;
    let lines: Vec<&str> = run.stdout.lines().collect();
    ensure(lines.iter().all(|l| l.starts_with("PASS ")), || run.stdout.clone())?;

    let mut expected = Vec::new();
    for n in 0..=3usize {
        let x = FiniteSet::range(n);
        for law in ["unit-left", "unit-right"] {
            expected.push(format!("PASS {law} @ {x} checked={}", 1usize << n));
        }
        expected.push(match n {
            // |P³(X)| = 2^(2^(2^n)) elements, each checked.
            0..=2 => format!("PASS associativity @ {x} checked={}", 1usize << (1usize << (1usize << n))),
            _ => format!("PASS associativity @ {x} checked=10000 mode=sampled seed=42"),
        });
    }
    // Naturality: every arrow X→Y (|Y|^|X| of them) times every element of the source object.
    for (name, top, source_size) in [
        ("eta", 3usize, (|n: usize| n) as fn(usize) -> usize),
        ("mu", 2, |n| 1 << (1 << n)),
    ] {
        for n in 0..=top {
            for m in 0..=top {
                let arrows = m.pow(n as u32);
                expected.push(format!(
                    "PASS naturality({name}) @ {}->{} checked={}",
                    FiniteSet::range(n),
                    FiniteSet::range(m),
                    arrows * source_size(n)
                ));
            }
        }
    }
    ensure(lines == expected, || {
        format!("report mismatch:\n{}\nexpected:\n{}", run.stdout, expected.join("\n"))
    })?;

    // Component sizes: μ_X is a table over P²(X), 256 entries at |X| = 3.
    let ps = Powerset::default();
    for n in 0..=3usize {
        let mu = ps.mu(&FiniteSet::range(n)).map_err(|e| e.to_string())?;
        let size = 1usize << (1usize << n);
        ensure(mu.table().len() == size, || format!("μ table at {n} has {}", mu.table().len()))?;
    }
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{} reports in {:.2} s", lines.len(), elapsed.as_secs_f64()))
}

fn law_harness() -> Outcome {
    let lawful: [(&str, &dyn ContainerMonad, usize); 3] =
        [("list", &ListMonad, 6), ("option", &OptionMonad, 6), ("wrap", &WrapFunctor, 2)];
    let mut total = 0;
    for (name, inst, laws) in lawful {
        let gen = Generators::default_for(name).ok_or("no panel")?;
        ensure(gen.values.len() >= 50, || format!("{name}: {} values", gen.values.len()))?;
        ensure(gen.endos.len() >= 5, || format!("{name}: {} endos", gen.endos.len()))?;
        if inst.supports_join() {
            ensure(gen.kleislis.len() >= 5, || format!("{name}: {} kleislis", gen.kleislis.len()))?;
        }
        let reports = harness::check_all(inst, &gen).map_err(|e| e.to_string())?;
        ensure(reports.len() == laws, || format!("{name}: {} reports", reports.len()))?;
        for r in &reports {
            ensure(r.passed(), || format!("{name}: {r}"))?;
        }
        total += reports.len();
    }

    let gen = Generators::default_for("multishape").ok_or("no panel")?;
    let reports = harness::check_all(&MultiShapeFunctor, &gen).map_err(|e| e.to_string())?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    ensure(failed.len() == 1 && failed[0].law == "functor-identity", || format!("{failed:?}"))?;
    let cx = failed[0].counterexample.as_ref().ok_or("no counterexample")?;
    ensure(cx.witness == Value::f4(200) && cx.lhs == Value::f1(200) && cx.rhs == Value::f4(200), || {
        failed[0].to_string()
    })?;
    ensure(recheck(&MultiShapeFunctor, &gen, failed[0]).map_err(|e| e.to_string())?, || {
        "counterexample does not recheck".into()
    })?;
    let cli = monadcheck(&["laws", "--instance", "multishape", "--expect-fail"]);
    ensure(cli.code == 0, || format!("--expect-fail exited {}", cli.code))?;
    Ok(format!("{total} lawful reports pass; multishape: {}", failed[0]))
}

fn category_laws() -> Outcome {
    let sets: Vec<FiniteSet> = (0..=2).map(FiniteSet::range).collect();
    let arrows = |a: &FiniteSet, b: &FiniteSet| -> Vec<FiniteFunction> {
        enumerate_functions(a, b).expect("small").collect()
    };
    let mut identities = 0;
    let mut triples = 0;
    for a in &sets {
        for b in &sets {
            for f in arrows(a, b) {
                let left = identity(b).compose(&f).map_err(|e| e.to_string())?;
                let right = f.compose(&identity(a)).map_err(|e| e.to_string())?;
                ensure(left == f && right == f, || format!("identity fails for {f:?}"))?;
                identities += 1;
                for c in &sets {
                    for g in arrows(b, c) {
                        for d in &sets {
                            for h in arrows(c, d) {
                                let lhs = h.compose(&g.compose(&f).unwrap()).unwrap();
                                let rhs = h.compose(&g).unwrap().compose(&f).unwrap();
                                ensure(lhs == rhs, || format!("associativity fails: {f:?} {g:?} {h:?}"))?;
                                // Independent of the table machinery: pointwise application.
                                for x in a.iter() {
                                    let direct = h.apply(g.apply(f.apply(x).unwrap()).unwrap()).unwrap();
                                    ensure(lhs.apply(x).unwrap() == direct, || format!("{x} mis-evaluated"))?;
                                }
                                triples += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    ensure(triples >= 64, || format!("only {triples} triples"))?;
    Ok(format!("{identities} arrows, {triples} composable triples, 0 failures"))
}

/// List monad whose `join` silently loses one element.
struct DroppingJoin {
    seed: usize,
}

impl ContainerMonad for DroppingJoin {
    fn name(&self) -> &'static str {
        "list-dropping-join"
    }
    fn unit(&self, x: Value) -> Result<Value, MonadError> {
        ListMonad.unit(x)
    }
    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError> {
        ListMonad.map(f, m)
    }
    fn join(&self, mm: &Value) -> Result<Value, MonadError> {
        let Value::List(mut xs) = ListMonad.join(mm)? else { unreachable!("list join yields a list") };
        if !xs.is_empty() {
            let i = self.seed % xs.len();
            xs.remove(i);
        }
        Ok(Value::List(xs))
    }
}

fn self_certification() -> Outcome {
    let ps = Powerset::default();
    let mut detected = Vec::new();

    let empty_eta = NatTransform::new("eta-empty", Endofunctor::Identity, Endofunctor::P, move |x| {
        let px = ps.object(x)?;
        Ok(FiniteFunction::from_fn(x.clone(), px, |_| Atom::Set(FiniteSet::empty()))?)
    });
    let mu = ps.mu_transform();
    for n in 1..=3 {
        let x = FiniteSet::range(n);
        for r in ps.check_unit_laws_with(&empty_eta, &mu, &x).map_err(|e| e.to_string())? {
            ensure(!r.passed(), || format!("η = ∅ not caught: {r}"))?;
            ensure(ps.recheck_unit(&empty_eta, &mu, &x, &r).map_err(|e| e.to_string())?, || {
                format!("does not recheck: {r}")
            })?;
            ensure(!ps.recheck_unit(&ps.eta_transform(), &mu, &x, &r).map_err(|e| e.to_string())?, || {
                format!("lawful η reproduces: {r}")
            })?;
        }
    }
    detected.push("η = ∅".to_string());

    let lossy_mu = NatTransform::new("mu-lossy", Endofunctor::P2, Endofunctor::P, move |x| {
        let mu = ps.mu(x)?;
        Ok(FiniteFunction::from_fn(mu.domain().clone(), mu.codomain().clone(), |fam| {
            let rest: FiniteSet = fam.as_set().expect("family").iter().skip(1).cloned().collect();
            Atom::Set(union_of(&rest))
        })?)
    });
    let x = FiniteSet::range(1);
    let r = ps.check_associativity_with(&lossy_mu, &x).map_err(|e| e.to_string())?;
    let cx = r.counterexample.as_ref().ok_or("lossy μ not caught")?;
    ensure(ps.recheck_associativity_with(&lossy_mu, &x, cx).map_err(|e| e.to_string())?, || {
        format!("does not recheck: {r}")
    })?;
    detected.push("lossy μ".into());

    let gen = Generators::default_for("list").ok_or("no panel")?;
    for seed in [0, 1, 7] {
        let inst = DroppingJoin { seed };
        let reports = harness::check_all(&inst, &gen).map_err(|e| e.to_string())?;
        let failures: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        ensure(!failures.is_empty(), || format!("dropping join (seed {seed}) not caught"))?;
        for r in failures {
            ensure(recheck(&inst, &gen, r).map_err(|e| e.to_string())?, || format!("does not recheck: {r}"))?;
            ensure(!recheck(&ListMonad, &gen, r).map_err(|e| e.to_string())?, || {
                format!("lawful list reproduces: {r}")
            })?;
        }
        detected.push(format!("dropping join seed {seed}"));
    }
    ensure(detected.len() >= 2, || format!("{detected:?}"))?;
    Ok(format!("{} mutations detected and rechecked: {}", detected.len(), detected.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("golden outputs", golden_outputs),
        ("float pipelines", float_pipelines),
        ("powerset monad verification", powerset_verification),
        ("law harness", law_harness),
        ("category laws", category_laws),
        ("self-certification", self_certification),
    ];
    let mut all_passed = true;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                all_passed = false;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
