//! Container functors and monads over [`Value`]s.
//!
//! An instance supplies `unit`, `map` and `join`; `bind` defaults to
//! `join ∘ map`. Instances that override `bind` are expected to agree with
//! that decomposition, which the law harness checks.

use std::fmt;

use crate::value::{MonadError, Multi, Value};

/// A function between values, possibly failing on ill-typed input.
pub type ValueFn<'a> = dyn Fn(&Value) -> Result<Value, MonadError> + 'a;

pub trait ContainerMonad: Send + Sync {
    fn name(&self) -> &'static str;

    fn unit(&self, x: Value) -> Result<Value, MonadError>;

    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError>;

    fn join(&self, mm: &Value) -> Result<Value, MonadError>;

    fn bind(&self, m: &Value, k: &ValueFn<'_>) -> Result<Value, MonadError> {
        self.join(&self.map(k, m)?)
    }

    fn supports_unit(&self) -> bool {
        true
    }

    fn supports_join(&self) -> bool {
        true
    }
}

impl fmt::Debug for dyn ContainerMonad + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContainerMonad({})", self.name())
    }
}

fn shape_mismatch(instance: &'static str, found: &Value) -> MonadError {
    MonadError::ShapeMismatch {
        instance,
        found: found.to_string(),
    }
}

/// Lists: `unit x = [x]`, `join = concat`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ListMonad;

impl ListMonad {
    fn items<'v>(&self, m: &'v Value) -> Result<&'v [Value], MonadError> {
        match m {
            Value::List(xs) => Ok(xs),
            other => Err(shape_mismatch(self.name(), other)),
        }
    }
}

impl ContainerMonad for ListMonad {
    fn name(&self) -> &'static str {
        "list"
    }

    fn unit(&self, x: Value) -> Result<Value, MonadError> {
        Ok(Value::List(vec![x]))
    }

    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError> {
        self.items(m)?.iter().map(f).collect::<Result<_, _>>().map(Value::List)
    }

    fn join(&self, mm: &Value) -> Result<Value, MonadError> {
        let mut out = Vec::new();
        for inner in self.items(mm)? {
            out.extend_from_slice(self.items(inner)?);
        }
        Ok(Value::List(out))
    }
}

/// `Maybe`: `unit x = Just x`; `Nothing` absorbs.
#[derive(Debug, Clone, Copy, Default)]
pub struct OptionMonad;

impl OptionMonad {
    fn inner<'v>(&self, m: &'v Value) -> Result<Option<&'v Value>, MonadError> {
        match m {
            Value::Maybe(x) => Ok(x.as_deref()),
            other => Err(shape_mismatch(self.name(), other)),
        }
    }
}

impl ContainerMonad for OptionMonad {
    fn name(&self) -> &'static str {
        "option"
    }

    fn unit(&self, x: Value) -> Result<Value, MonadError> {
        Ok(Value::just(x))
    }

    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError> {
        match self.inner(m)? {
            None => Ok(Value::nothing()),
            Some(x) => Ok(Value::just(f(x)?)),
        }
    }

    fn join(&self, mm: &Value) -> Result<Value, MonadError> {
        match self.inner(mm)? {
            None => Ok(Value::nothing()),
            Some(inner) => {
                self.inner(inner)?;
                Ok(inner.clone())
            }
        }
    }

    /// `Nothing >>= k = Nothing`, `Just x >>= k = k x`; `k` never runs on `Nothing`.
    fn bind(&self, m: &Value, k: &ValueFn<'_>) -> Result<Value, MonadError> {
        match self.inner(m)? {
            None => Ok(Value::nothing()),
            Some(x) => {
                let out = k(x)?;
                self.inner(&out)?;
                Ok(out)
            }
        }
    }
}

/// The single-constructor functor `MyF a`. It has a unit but no join.
#[derive(Debug, Clone, Copy, Default)]
pub struct WrapFunctor;

impl ContainerMonad for WrapFunctor {
    fn name(&self) -> &'static str {
        "wrap"
    }

    fn unit(&self, x: Value) -> Result<Value, MonadError> {
        Ok(Value::wrap(x))
    }

    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError> {
        match m {
            Value::Wrap(x) => Ok(Value::wrap(f(x)?)),
            other => Err(shape_mismatch(self.name(), other)),
        }
    }

    fn join(&self, _mm: &Value) -> Result<Value, MonadError> {
        Err(MonadError::Unsupported {
            instance: self.name(),
            operation: "join",
        })
    }

    fn supports_join(&self) -> bool {
        false
    }
}

/// `F1 a | F2 [a] | F3 (a,a) | F4 a` with a deliberately defective `map`:
/// `F4 x` is sent to `F1 (f x)`, so `map id` is not the identity.
#[derive(Debug, Clone, Copy, Default)]
pub struct MultiShapeFunctor;

impl ContainerMonad for MultiShapeFunctor {
    fn name(&self) -> &'static str {
        "multishape"
    }

    fn unit(&self, _x: Value) -> Result<Value, MonadError> {
        Err(MonadError::Unsupported {
            instance: self.name(),
            operation: "unit",
        })
    }

    fn map(&self, f: &ValueFn<'_>, m: &Value) -> Result<Value, MonadError> {
        let Value::Multi(shape) = m else {
            return Err(shape_mismatch(self.name(), m));
        };
        Ok(match shape {
            Multi::F1(x) => Value::f1(f(x)?),
            Multi::F2(xs) => Value::Multi(Multi::F2(xs.iter().map(f).collect::<Result<_, _>>()?)),
            Multi::F3(a, b) => Value::f3(f(a)?, f(b)?),
            Multi::F4(x) => Value::f1(f(x)?),
        })
    }

    fn join(&self, _mm: &Value) -> Result<Value, MonadError> {
        Err(MonadError::Unsupported {
            instance: self.name(),
            operation: "join",
        })
    }

    fn supports_unit(&self) -> bool {
        false
    }

    fn supports_join(&self) -> bool {
        false
    }
}

pub const INSTANCE_NAMES: [&str; 4] = ["list", "option", "wrap", "multishape"];

pub fn instance_by_name(name: &str) -> Option<Box<dyn ContainerMonad>> {
    match name {
        "list" => Some(Box::new(ListMonad)),
        "option" => Some(Box::new(OptionMonad)),
        "wrap" => Some(Box::new(WrapFunctor)),
        "multishape" => Some(Box::new(MultiShapeFunctor)),
        _ => None,
    }
}

/// Removes repeated elements, keeping each first occurrence in place.
pub fn nub<T: PartialEq + Clone>(xs: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(xs.len());
    for x in xs {
        if !out.contains(x) {
            out.push(x.clone());
        }
    }
    out
}

pub fn safe_head(xs: &[i64]) -> Option<i64> {
    xs.first().copied()
}

/// Value of the first pair whose key matches.
pub fn lookup<'a, K, V>(key: &K, table: &'a [(K, V)]) -> Option<&'a V>
where
    K: PartialEq,
{
    table.iter().find(|(k, _)| k == key).map(|(_, v)| v)
}

pub const PHONEBOOK: [(&str, &str); 5] = [
    ("Ali", "96552233"),
    ("Belgacem", "98555111"),
    ("Salha", "27211211"),
    ("Mohsen", ""),
    ("Massaoud", "55222333"),
];

fn int_range(lo: i64, hi: i64) -> Value {
    Value::List((lo..=hi).map(Value::Int).collect())
}

/// All `(x, y, z)` with `x² + y² = z²` and every coordinate in `1..=n`,
/// built by nested list binds. `strict` restricts to `x < y < z`.
pub fn pythagorean_triples(n: i64, strict: bool) -> Vec<(i64, i64, i64)> {
    let list = ListMonad;
    let result = list.bind(&int_range(1, n), &|xv| {
        let x = xv.as_int()?;
        let ys = if strict { int_range(x + 1, n) } else { int_range(1, n) };
        list.bind(&ys, &|yv| {
            let y = yv.as_int()?;
            let zs = if strict { int_range(y + 1, n) } else { int_range(1, n) };
            list.bind(&zs, &|zv| {
                let z = zv.as_int()?;
                Ok(if x * x + y * y == z * z {
                    Value::list([Value::tuple([x, y, z])])
                } else {
                    Value::List(Vec::new())
                })
            })
        })
    });
    let Ok(Value::List(triples)) = result else {
        unreachable!("binds over integer lists stay in the list monad")
    };
    triples
        .iter()
        .map(|t| match t {
            Value::Tuple(c) => (
                c[0].as_int().expect("int"),
                c[1].as_int().expect("int"),
                c[2].as_int().expect("int"),
            ),
            _ => unreachable!("only triples are emitted"),
        })
        .collect()
}

pub fn guarded_sqrt(x: f64) -> Option<f64> {
    (x >= 0.0).then(|| x.sqrt())
}

pub fn guarded_one_minus_sqrt(x: f64) -> Option<f64> {
    (x >= 0.0).then(|| 1.0 - x.sqrt())
}

/// Natural log on `Just` of a strictly positive number, `Nothing` otherwise.
pub fn guarded_log(mx: Option<f64>) -> Option<f64> {
    match mx {
        None => None,
        Some(x) if x > 0.0 => Some(x.ln()),
        Some(_) => None,
    }
}

pub fn extract_or_zero(mx: Option<f64>) -> f64 {
    mx.unwrap_or(0.0)
}

/// `\x -> if odd x then [x*2] else []`.
pub fn odd_doubler(x: &Value) -> Result<Value, MonadError> {
    let n = x.as_int()?;
    Ok(if n % 2 != 0 {
        Value::list([n.wrapping_mul(2)])
    } else {
        Value::List(Vec::new())
    })
}

/// `\x -> [x, x+1]`.
pub fn dup_succ(x: &Value) -> Result<Value, MonadError> {
    let n = x.as_int()?;
    Ok(Value::list([n, n.wrapping_add(1)]))
}
