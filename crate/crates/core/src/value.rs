//! The closed value universe that container instances and law panels share.

use thiserror::Error;

/// A payload or container value.
///
/// Containers are values too, so `m (m a)` is just a `Value` whose elements
/// are containers of the same shape.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Bool(bool),
    Str(String),
    List(Vec<Value>),
    Tuple(Vec<Value>),
    /// `Nothing` / `Just v`.
    Maybe(Option<Box<Value>>),
    /// `MyF v`.
    Wrap(Box<Value>),
    Multi(Multi),
}

/// The four-constructor functor `F1 a | F2 [a] | F3 (a,a) | F4 a`.
#[derive(Debug, Clone, PartialEq)]
pub enum Multi {
    F1(Box<Value>),
    F2(Vec<Value>),
    F3(Box<Value>, Box<Value>),
    F4(Box<Value>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonadError {
    #[error("{instance} does not support {operation}")]
    Unsupported {
        instance: &'static str,
        operation: &'static str,
    },
    #[error("{instance} expected one of its own containers, got {found}")]
    ShapeMismatch { instance: &'static str, found: String },
    #[error("expected {expected}, got {found}")]
    TypeMismatch { expected: &'static str, found: String },
}

impl Value {
    pub fn nothing() -> Self {
        Value::Maybe(None)
    }

    pub fn just(v: impl Into<Value>) -> Self {
        Value::Maybe(Some(Box::new(v.into())))
    }

    pub fn list<I, V>(items: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Value>,
    {
        Value::List(items.into_iter().map(Into::into).collect())
    }

    pub fn tuple<I, V>(items: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Value>,
    {
        Value::Tuple(items.into_iter().map(Into::into).collect())
    }

    pub fn wrap(v: impl Into<Value>) -> Self {
        Value::Wrap(Box::new(v.into()))
    }

    pub fn f1(v: impl Into<Value>) -> Self {
        Value::Multi(Multi::F1(Box::new(v.into())))
    }

    pub fn f2<I, V>(items: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Value>,
    {
        Value::Multi(Multi::F2(items.into_iter().map(Into::into).collect()))
    }

    pub fn f3(a: impl Into<Value>, b: impl Into<Value>) -> Self {
        Value::Multi(Multi::F3(Box::new(a.into()), Box::new(b.into())))
    }

    pub fn f4(v: impl Into<Value>) -> Self {
        Value::Multi(Multi::F4(Box::new(v.into())))
    }

    pub fn as_int(&self) -> Result<i64, MonadError> {
        match self {
            Value::Int(v) => Ok(*v),
            other => Err(MonadError::TypeMismatch {
                expected: "Int",
                found: other.to_string(),
            }),
        }
    }

    pub fn as_float(&self) -> Result<f64, MonadError> {
        match self {
            Value::Float(v) => Ok(*v),
            other => Err(MonadError::TypeMismatch {
                expected: "Float",
                found: other.to_string(),
            }),
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        Value::Maybe(v.map(|x| Box::new(x.into())))
    }
}
