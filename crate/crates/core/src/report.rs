//! Law check outcomes and their line-oriented text form.
//!
//! ```text
//! PASS <law> @ <component> checked=<n>
//! FAIL <law> @ <component> witness=<element> lhs=<value> rhs=<value>
//! ```
//!
//! When a counterexample involves labeled functions they are appended to the
//! law name in brackets, e.g. `functor-composition[f=×2,g=×3]`. Sampled checks
//! end their line with `mode=sampled seed=<s>`; lines without it are exhaustive.

use std::fmt;

/// How thoroughly a law was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled { seed: u64 },
}

/// The first input on which the two sides of a law disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample<W> {
    pub witness: W,
    /// Labels of the panel functions the law was instantiated with.
    pub functions: Vec<String>,
    pub lhs: W,
    pub rhs: W,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport<W> {
    pub law: String,
    pub component: String,
    pub checked: usize,
    pub coverage: Coverage,
    pub counterexample: Option<Counterexample<W>>,
}

impl<W> LawReport<W> {
    pub fn pass(law: impl Into<String>, component: impl Into<String>, checked: usize) -> Self {
        LawReport {
            law: law.into(),
            component: component.into(),
            checked,
            coverage: Coverage::Exhaustive,
            counterexample: None,
        }
    }

    pub fn fail(
        law: impl Into<String>,
        component: impl Into<String>,
        checked: usize,
        counterexample: Counterexample<W>,
    ) -> Self {
        LawReport {
            law: law.into(),
            component: component.into(),
            checked,
            coverage: Coverage::Exhaustive,
            counterexample: Some(counterexample),
        }
    }

    pub fn with_coverage(mut self, coverage: Coverage) -> Self {
        self.coverage = coverage;
        self
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl<W: fmt::Display> fmt::Display for LawReport<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} @ {} checked={}", self.law, self.component, self.checked)?,
            Some(cx) => {
                write!(f, "FAIL {}", self.law)?;
                if !cx.functions.is_empty() {
                    write!(f, "[{}]", cx.functions.join(","))?;
                }
                write!(
                    f,
                    " @ {} witness={} lhs={} rhs={}",
                    self.component, cx.witness, cx.lhs, cx.rhs
                )?;
            }
        }
        if let Coverage::Sampled { seed } = self.coverage {
            write!(f, " mode=sampled seed={seed}")?;
        }
        Ok(())
    }
}

/// Renders reports one per line, in the order given.
pub fn render_reports<W: fmt::Display>(reports: &[LawReport<W>]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
