//! Panel-based checker for the functor and monad laws of a [`ContainerMonad`].
//!
//! Each law is evaluated over the full cross-product of a finite value panel
//! and a labeled function panel, in panel order. The first disagreement stops
//! that law and becomes its counterexample, so reports are deterministic and
//! each failure can be re-evaluated with [`recheck`].

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monadic::{dup_succ, odd_doubler, ContainerMonad};
use crate::report::{Counterexample, Coverage, LawReport};
use crate::value::{MonadError, Value};

type SharedFn = Arc<dyn Fn(&Value) -> Result<Value, MonadError> + Send + Sync>;

/// A panel function with a human-readable label.
#[derive(Clone)]
pub struct LabeledFn {
    pub label: String,
    f: SharedFn,
}

impl LabeledFn {
    pub fn new<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Value) -> Result<Value, MonadError> + Send + Sync + 'static,
    {
        LabeledFn {
            label: label.into(),
            f: Arc::new(f),
        }
    }

    /// Lifts an integer endofunction; other payloads are a type error.
    pub fn int(label: impl Into<String>, f: fn(i64) -> i64) -> Self {
        LabeledFn::new(label, move |v| Ok(Value::Int(f(v.as_int()?))))
    }

    pub fn call(&self, v: &Value) -> Result<Value, MonadError> {
        (self.f)(v)
    }
}

impl fmt::Debug for LabeledFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledFn({})", self.label)
    }
}

/// The finite panels a law is quantified over.
#[derive(Debug, Clone)]
pub struct Generators {
    /// Containers of the instance under test.
    pub values: Vec<Value>,
    /// Plain payloads, for left identity.
    pub scalars: Vec<Value>,
    /// Payload endofunctions, for the functor laws.
    pub endos: Vec<LabeledFn>,
    /// Payload-to-container functions, for the monad laws.
    pub kleislis: Vec<LabeledFn>,
    pub coverage: Coverage,
}

/// Integers ordered by magnitude, non-negative first: `0, 1, -1, 2, -2, ...`.
fn ints_by_size(count: usize) -> impl Iterator<Item = i64> {
    (0..count as i64).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

fn int_endos() -> Vec<LabeledFn> {
    vec![
        LabeledFn::int("id", |x| x),
        LabeledFn::int("×2", |x| x.wrapping_mul(2)),
        LabeledFn::int("×3", |x| x.wrapping_mul(3)),
        LabeledFn::int("+1", |x| x.wrapping_add(1)),
        LabeledFn::int("negate", |x| x.wrapping_neg()),
        LabeledFn::int("square", |x| x.wrapping_mul(x)),
        LabeledFn::int("const0", |_| 0),
    ]
}

fn list_kleislis() -> Vec<LabeledFn> {
    vec![
        LabeledFn::new("unit", |x| Ok(Value::List(vec![x.clone()]))),
        LabeledFn::new("odd-filter", odd_doubler),
        LabeledFn::new("dup-succ", dup_succ),
        LabeledFn::new("empty", |_| Ok(Value::List(Vec::new()))),
        LabeledFn::new("with-negation", |x| {
            let n = x.as_int()?;
            Ok(Value::list([n, n.wrapping_neg()]))
        }),
    ]
}

fn option_kleislis() -> Vec<LabeledFn> {
    vec![
        LabeledFn::new("unit", |x| Ok(Value::just(x.clone()))),
        LabeledFn::new("half-if-even", |x| {
            let n = x.as_int()?;
            Ok(if n % 2 == 0 { Value::just(n / 2) } else { Value::nothing() })
        }),
        LabeledFn::new("positive", |x| {
            let n = x.as_int()?;
            Ok(if n > 0 { Value::just(n) } else { Value::nothing() })
        }),
        LabeledFn::new("nothing", |_| Ok(Value::nothing())),
        LabeledFn::new("succ", |x| Ok(Value::just(x.as_int()?.wrapping_add(1)))),
    ]
}

/// Every list over `alphabet` of length at most `max_len`, shortest first.
fn all_lists(alphabet: &[i64], max_len: usize) -> Vec<Value> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for &a in alphabet {
                let mut l = prefix.clone();
                l.push(a);
                next.push(l);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(Value::list).collect()
}

impl Generators {
    /// The default panel for a named instance.
    pub fn default_for(instance: &str) -> Option<Generators> {
        let scalars: Vec<Value> = ints_by_size(11).map(Value::Int).collect();
        let (values, kleislis) = match instance {
            "list" => {
                let mut values = all_lists(&[0, 1, 2], 3);
                values.extend((4..=10).map(|n| Value::list(1..=n)));
                values.push(Value::list([-1, -2]));
                values.push(Value::list([45]));
                values.push(Value::list([10, 200]));
                values.push(Value::list([3, 3, 3, 3]));
                (values, list_kleislis())
            }
            "option" => {
                let mut values = vec![Value::nothing()];
                values.extend(ints_by_size(50).map(Value::just));
                (values, option_kleislis())
            }
            "wrap" => {
                let mut values = vec![Value::wrap(45)];
                values.extend(ints_by_size(50).map(Value::wrap));
                (values, Vec::new())
            }
            "multishape" => {
                // The program's own exhibits lead the panel.
                let mut values = vec![
                    Value::f1(10),
                    Value::f2([100, 1000, 10000, 100000]),
                    Value::f3(400, 500),
                    Value::f4(200),
                ];
                for n in ints_by_size(12) {
                    values.push(Value::f1(n));
                    values.push(Value::f3(n, n.wrapping_add(1)));
                    values.push(Value::f4(n));
                }
                values.extend(all_lists(&[0, 1], 3).into_iter().map(|l| match l {
                    Value::List(xs) => Value::f2(xs),
                    _ => unreachable!(),
                }));
                (values, Vec::new())
            }
            _ => return None,
        };
        Some(Generators {
            values,
            scalars,
            endos: int_endos(),
            kleislis,
            coverage: Coverage::Exhaustive,
        })
    }

    /// Default function panels with `count` random containers drawn from `seed`.
    pub fn random_for(instance: &str, seed: u64, count: usize) -> Option<Generators> {
        let mut gen = Generators::default_for(instance)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let small = |rng: &mut ChaCha8Rng| Value::Int(rng.gen_range(-20..=20));
        gen.values = (0..count)
            .map(|_| match instance {
                "list" => {
                    let len = rng.gen_range(0..=6);
                    Value::List((0..len).map(|_| small(&mut rng)).collect())
                }
                "option" => {
                    if rng.gen_bool(0.2) {
                        Value::nothing()
                    } else {
                        Value::just(small(&mut rng))
                    }
                }
                "wrap" => Value::wrap(small(&mut rng)),
                _ => match rng.gen_range(0..4) {
                    0 => Value::f1(small(&mut rng)),
                    1 => {
                        let len = rng.gen_range(0..=4);
                        Value::f2((0..len).map(|_| small(&mut rng)).collect::<Vec<_>>())
                    }
                    2 => Value::f3(small(&mut rng), small(&mut rng)),
                    _ => Value::f4(small(&mut rng)),
                },
            })
            .collect();
        gen.coverage = Coverage::Sampled { seed };
        Some(gen)
    }
}

/// The laws the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    FunctorIdentity,
    FunctorComposition,
    LeftIdentity,
    RightIdentity,
    Associativity,
    BindJoin,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::FunctorIdentity,
        Law::FunctorComposition,
        Law::LeftIdentity,
        Law::RightIdentity,
        Law::Associativity,
        Law::BindJoin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::FunctorIdentity => "functor-identity",
            Law::FunctorComposition => "functor-composition",
            Law::LeftIdentity => "left-identity",
            Law::RightIdentity => "right-identity",
            Law::Associativity => "associativity",
            Law::BindJoin => "bind-join",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|l| l.name() == name)
    }

    /// Both sides of the law at one panel point.
    fn sides(
        self,
        inst: &dyn ContainerMonad,
        input: &Value,
        fns: &[&LabeledFn],
    ) -> Result<(Value, Value), MonadError> {
        let call = |i: usize| move |v: &Value| fns[i].call(v);
        let unit = |v: &Value| inst.unit(v.clone());
        match self {
            Law::FunctorIdentity => Ok((inst.map(&|v| Ok(v.clone()), input)?, input.clone())),
            Law::FunctorComposition => {
                let (f, g) = (call(0), call(1));
                let lhs = inst.map(&|v| f(&g(v)?), input)?;
                let rhs = inst.map(&f, &inst.map(&g, input)?)?;
                Ok((lhs, rhs))
            }
            Law::LeftIdentity => {
                let k = call(0);
                Ok((inst.bind(&inst.unit(input.clone())?, &k)?, k(input)?))
            }
            Law::RightIdentity => Ok((inst.bind(input, &unit)?, input.clone())),
            Law::Associativity => {
                let (k, h) = (call(0), call(1));
                let lhs = inst.bind(&inst.bind(input, &k)?, &h)?;
                let rhs = inst.bind(input, &|x| inst.bind(&k(x)?, &h))?;
                Ok((lhs, rhs))
            }
            Law::BindJoin => {
                let k = call(0);
                Ok((inst.bind(input, &k)?, inst.join(&inst.map(&k, input)?)?))
            }
        }
    }

    fn roles(self) -> &'static [&'static str] {
        match self {
            Law::FunctorIdentity | Law::RightIdentity => &[],
            Law::FunctorComposition => &["f", "g"],
            Law::LeftIdentity | Law::BindJoin => &["k"],
            Law::Associativity => &["k", "h"],
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs one law over `inputs × fns^arity`, stopping at the first failure.
fn check_law(
    law: Law,
    inst: &dyn ContainerMonad,
    inputs: &[Value],
    fns: &[LabeledFn],
    coverage: Coverage,
) -> Result<LawReport<Value>, MonadError> {
    let roles = law.roles();
    let mut combos: Vec<Vec<&LabeledFn>> = vec![Vec::new()];
    for _ in roles {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                fns.iter().map(move |f| {
                    let mut c = prefix.clone();
                    c.push(f);
                    c
                })
            })
            .collect();
    }
    let mut checked = 0;
    for input in inputs {
        for combo in &combos {
            checked += 1;
            let (lhs, rhs) = law.sides(inst, input, combo)?;
            if lhs != rhs {
                let functions = roles
                    .iter()
                    .zip(combo)
                    .map(|(role, f)| format!("{role}={}", f.label))
                    .collect();
                let cx = Counterexample {
                    witness: input.clone(),
                    functions,
                    lhs,
                    rhs,
                };
                return Ok(LawReport::fail(law.name(), inst.name(), checked, cx).with_coverage(coverage));
            }
        }
    }
    Ok(LawReport::pass(law.name(), inst.name(), checked).with_coverage(coverage))
}

/// `map id = id` and `map (f ∘ g) = map f ∘ map g`.
pub fn check_functor_laws(inst: &dyn ContainerMonad, gen: &Generators) -> Result<Vec<LawReport<Value>>, MonadError> {
    Ok(vec![
        check_law(Law::FunctorIdentity, inst, &gen.values, &gen.endos, gen.coverage)?,
        check_law(Law::FunctorComposition, inst, &gen.values, &gen.endos, gen.coverage)?,
    ])
}

/// Left identity, right identity and associativity of `bind`.
pub fn check_monad_laws(inst: &dyn ContainerMonad, gen: &Generators) -> Result<Vec<LawReport<Value>>, MonadError> {
    Ok(vec![
        check_law(Law::LeftIdentity, inst, &gen.scalars, &gen.kleislis, gen.coverage)?,
        check_law(Law::RightIdentity, inst, &gen.values, &gen.kleislis, gen.coverage)?,
        check_law(Law::Associativity, inst, &gen.values, &gen.kleislis, gen.coverage)?,
    ])
}

/// `bind m k = join (map k m)`.
pub fn check_bind_join_coherence(inst: &dyn ContainerMonad, gen: &Generators) -> Result<LawReport<Value>, MonadError> {
    check_law(Law::BindJoin, inst, &gen.values, &gen.kleislis, gen.coverage)
}

/// Every law the instance supports: functor laws always, monad and
/// bind/join coherence when it has both `unit` and `join`.
pub fn check_all(inst: &dyn ContainerMonad, gen: &Generators) -> Result<Vec<LawReport<Value>>, MonadError> {
    let mut reports = check_functor_laws(inst, gen)?;
    if inst.supports_unit() && inst.supports_join() {
        reports.extend(check_monad_laws(inst, gen)?);
        reports.push(check_bind_join_coherence(inst, gen)?);
    }
    Ok(reports)
}

/// Re-evaluates a failing report's counterexample against `inst`.
///
/// Returns `Ok(true)` when both sides are recomputed, still differ, and match
/// the values stored in the report; `Ok(false)` for passing reports or
/// counterexamples that no longer reproduce.
pub fn recheck(inst: &dyn ContainerMonad, gen: &Generators, report: &LawReport<Value>) -> Result<bool, MonadError> {
    let Some(cx) = &report.counterexample else {
        return Ok(false);
    };
    let Some(law) = Law::from_name(&report.law) else {
        return Ok(false);
    };
    let panel = match law {
        Law::FunctorIdentity | Law::FunctorComposition => &gen.endos,
        _ => &gen.kleislis,
    };
    let mut fns = Vec::new();
    for (role, entry) in law.roles().iter().zip(&cx.functions) {
        let Some(label) = entry.strip_prefix(role).and_then(|s| s.strip_prefix('=')) else {
            return Ok(false);
        };
        match panel.iter().find(|f| f.label == label) {
            Some(f) => fns.push(f),
            None => return Ok(false),
        }
    }
    if fns.len() != law.roles().len() {
        return Ok(false);
    }
    let (lhs, rhs) = law.sides(inst, &cx.witness, &fns)?;
    Ok(lhs != rhs && lhs == cx.lhs && rhs == cx.rhs)
}
