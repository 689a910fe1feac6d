//! Category-theoretic foundations of functional programming, made checkable.
//!
//! - [`finset`]: the category of finite sets and total functions, with
//!   exhaustive arrow enumeration.
//! - [`powerset`]: the powerset monad on that category and exhaustive
//!   checkers for its functor, naturality, unit and associativity laws.
//! - [`monadic`]: list, option and wrapper container instances over a
//!   dynamic [`value::Value`] universe, plus the worked list/option examples.
//! - [`harness`]: panel-based functor and monad law checking with
//!   re-checkable counterexamples.
//! - [`report`] / [`show`]: the line-oriented report format and Haskell-style
//!   value rendering.

pub mod finset;
pub mod harness;
pub mod monadic;
pub mod powerset;
pub mod report;
pub mod show;
pub mod value;

pub use finset::{Atom, FinSetError, FiniteFunction, FiniteSet};
pub use harness::{Generators, LabeledFn, Law};
pub use monadic::{ContainerMonad, ListMonad, MultiShapeFunctor, OptionMonad, WrapFunctor};
pub use powerset::{Endofunctor, NatTransform, Powerset, PowersetError};
pub use report::{Counterexample, Coverage, LawReport};
pub use value::{MonadError, Multi, Value};
