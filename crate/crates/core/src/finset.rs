//! The category of finite sets and total functions.
//!
//! Objects are [`FiniteSet`]s of [`Atom`]s, kept in sorted order so that set
//! equality is structural. Arrows are [`FiniteFunction`]s carrying their
//! domain and codomain, so two arrows are equal only when their tables *and*
//! their endpoints agree.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default upper bound on the number of functions [`enumerate_functions`] will yield.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinSetError {
    #[error("no mapping given for domain element {element}")]
    MissingMapping { element: Atom },
    #[error("value {value} assigned to {element} is not in the codomain")]
    CodomainViolation { element: Atom, value: Atom },
    #[error("domain element {key} is mapped more than once")]
    DuplicateKey { key: Atom },
    #[error("{element} is not in the domain")]
    NotInDomain { element: Atom },
    #[error("cannot compose: codomain {codomain} of the first arrow differs from domain {domain} of the second")]
    CompositionMismatch { codomain: FiniteSet, domain: FiniteSet },
    #[error("{count} functions exceed the enumeration cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
}

/// An element of a finite set.
///
/// Variant order fixes the total order across kinds: integers sort before
/// strings, strings before nested sets. Nested sets compare lexicographically
/// on their sorted member lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Int(i64),
    Str(Arc<str>),
    Set(FiniteSet),
}

impl Atom {
    pub fn str(s: &str) -> Self {
        Atom::Str(Arc::from(s))
    }

    pub fn as_set(&self) -> Option<&FiniteSet> {
        match self {
            Atom::Set(s) => Some(s),
            _ => None,
        }
    }
}

impl From<i64> for Atom {
    fn from(v: i64) -> Self {
        Atom::Int(v)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::str(s)
    }
}

impl From<FiniteSet> for Atom {
    fn from(s: FiniteSet) -> Self {
        Atom::Set(s)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(v) => write!(f, "{v}"),
            Atom::Str(s) => f.write_str(s),
            Atom::Set(s) => write!(f, "{s}"),
        }
    }
}

/// A finite set of atoms in canonical (sorted, duplicate-free) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSet {
    elements: Arc<[Atom]>,
}

impl FiniteSet {
    /// Builds a set from atoms in any order; repeated atoms collapse.
    pub fn new<I, A>(atoms: I) -> Self
    where
        I: IntoIterator<Item = A>,
        A: Into<Atom>,
    {
        let mut elements: Vec<Atom> = atoms.into_iter().map(Into::into).collect();
        elements.sort_unstable();
        elements.dedup();
        FiniteSet {
            elements: elements.into(),
        }
    }

    pub fn empty() -> Self {
        FiniteSet {
            elements: Arc::from(Vec::new()),
        }
    }

    /// `{1, 2, ..., n}`.
    pub fn range(n: usize) -> Self {
        FiniteSet::new((1..=n as i64).map(Atom::Int))
    }

    /// Wraps an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(elements: Vec<Atom>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        FiniteSet {
            elements: elements.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Atom] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Atom> {
        self.elements.iter()
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.elements.binary_search(atom).ok()
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.index_of(atom).is_some()
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet::new(self.iter().chain(other.iter()).cloned())
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Atom;
    type IntoIter = std::slice::Iter<'a, Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl FromIterator<Atom> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        FiniteSet::new(iter)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// A total function between finite sets.
///
/// `table[i]` is the image of `domain.elements()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFunction {
    domain: FiniteSet,
    codomain: FiniteSet,
    table: Vec<Atom>,
}

impl FiniteFunction {
    /// Validates a mapping given as `(argument, value)` pairs in any order.
    pub fn new<I>(domain: FiniteSet, codomain: FiniteSet, pairs: I) -> Result<Self, FinSetError>
    where
        I: IntoIterator<Item = (Atom, Atom)>,
    {
        let mut slots: Vec<Option<Atom>> = vec![None; domain.len()];
        for (key, value) in pairs {
            let i = domain
                .index_of(&key)
                .ok_or_else(|| FinSetError::NotInDomain {
                    element: key.clone(),
                })?;
            if slots[i].is_some() {
                return Err(FinSetError::DuplicateKey { key });
            }
            if !codomain.contains(&value) {
                return Err(FinSetError::CodomainViolation {
                    element: key,
                    value,
                });
            }
            slots[i] = Some(value);
        }
        let table = slots
            .into_iter()
            .zip(domain.iter())
            .map(|(slot, x)| {
                slot.ok_or_else(|| FinSetError::MissingMapping { element: x.clone() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteFunction {
            domain,
            codomain,
            table,
        })
    }

    /// Tabulates `rule` over the domain, checking each value lands in the codomain.
    pub fn from_fn<F>(domain: FiniteSet, codomain: FiniteSet, mut rule: F) -> Result<Self, FinSetError>
    where
        F: FnMut(&Atom) -> Atom,
    {
        let mut table = Vec::with_capacity(domain.len());
        for x in domain.iter() {
            let value = rule(x);
            if !codomain.contains(&value) {
                return Err(FinSetError::CodomainViolation {
                    element: x.clone(),
                    value,
                });
            }
            table.push(value);
        }
        Ok(FiniteFunction {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(set: &FiniteSet) -> Self {
        FiniteFunction {
            domain: set.clone(),
            codomain: set.clone(),
            table: set.elements().to_vec(),
        }
    }

    pub fn domain(&self) -> &FiniteSet {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSet {
        &self.codomain
    }

    /// Values in domain order.
    pub fn table(&self) -> &[Atom] {
        &self.table
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Atom, &Atom)> + '_ {
        self.domain.iter().zip(self.table.iter())
    }

    pub fn apply(&self, x: &Atom) -> Result<&Atom, FinSetError> {
        self.domain
            .index_of(x)
            .map(|i| &self.table[i])
            .ok_or_else(|| FinSetError::NotInDomain { element: x.clone() })
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &FiniteFunction) -> Result<FiniteFunction, FinSetError> {
        if inner.codomain != self.domain {
            return Err(FinSetError::CompositionMismatch {
                codomain: inner.codomain.clone(),
                domain: self.domain.clone(),
            });
        }
        let table = inner
            .table
            .iter()
            .map(|y| {
                let i = self
                    .domain
                    .index_of(y)
                    .expect("validated arrow maps into its codomain");
                self.table[i].clone()
            })
            .collect();
        Ok(FiniteFunction {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            table,
        })
    }

    /// Image of a subset of the domain.
    pub fn image(&self, subset: &FiniteSet) -> Result<FiniteSet, FinSetError> {
        subset
            .iter()
            .map(|x| self.apply(x).cloned())
            .collect::<Result<FiniteSet, _>>()
    }

    /// First domain element on which the two tables disagree, if the arrows
    /// share a domain.
    pub fn first_disagreement<'a>(&'a self, other: &'a FiniteFunction) -> Option<(&'a Atom, &'a Atom, &'a Atom)> {
        self.domain
            .iter()
            .zip(self.table.iter().zip(other.table.iter()))
            .find(|(_, (l, r))| l != r)
            .map(|(x, (l, r))| (x, l, r))
    }
}

/// `g ∘ f`.
pub fn compose(g: &FiniteFunction, f: &FiniteFunction) -> Result<FiniteFunction, FinSetError> {
    g.compose(f)
}

pub fn identity(set: &FiniteSet) -> FiniteFunction {
    FiniteFunction::identity(set)
}

/// `|codomain|^|domain|`, saturating.
pub fn function_count(domain: &FiniteSet, codomain: &FiniteSet) -> u128 {
    let base = codomain.len() as u128;
    let mut count: u128 = 1;
    for _ in 0..domain.len() {
        count = count.saturating_mul(base);
        if count == 0 {
            break;
        }
    }
    count
}

/// All total functions `domain → codomain`, capped at [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_functions(domain: &FiniteSet, codomain: &FiniteSet) -> Result<FunctionEnumerator, FinSetError> {
    enumerate_functions_capped(domain, codomain, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_functions_capped(
    domain: &FiniteSet,
    codomain: &FiniteSet,
    cap: u128,
) -> Result<FunctionEnumerator, FinSetError> {
    let count = function_count(domain, codomain);
    if count > cap {
        return Err(FinSetError::EnumerationTooLarge { count, cap });
    }
    Ok(FunctionEnumerator {
        domain: domain.clone(),
        codomain: codomain.clone(),
        digits: vec![0; domain.len()],
        remaining: count,
    })
}

/// Odometer over value tables, in lexicographic order of the tables
/// (the last domain element varies fastest).
#[derive(Debug, Clone)]
pub struct FunctionEnumerator {
    domain: FiniteSet,
    codomain: FiniteSet,
    digits: Vec<usize>,
    remaining: u128,
}

impl Iterator for FunctionEnumerator {
    type Item = FiniteFunction;

    fn next(&mut self) -> Option<FiniteFunction> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let values = self.codomain.elements();
        let table = self.digits.iter().map(|&d| values[d].clone()).collect();
        let out = FiniteFunction {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            table,
        };
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < values.len() {
                break;
            }
            *d = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, usize::try_from(self.remaining).ok())
    }
}

/// Arrows from the composition example: parity test on `{16, 27}` and its
/// description.
pub mod parity {
    use super::*;

    pub const EVEN: &str = "This is an even Number";
    pub const ODD: &str = "This is an ODD number";

    pub fn numbers() -> FiniteSet {
        FiniteSet::new([16i64, 27])
    }

    pub fn booleans() -> FiniteSet {
        FiniteSet::new(["True", "False"])
    }

    pub fn descriptions() -> FiniteSet {
        FiniteSet::new([EVEN, ODD])
    }

    /// `g x = x rem 2 == 0`.
    pub fn is_even() -> FiniteFunction {
        FiniteFunction::from_fn(numbers(), booleans(), |x| match x {
            Atom::Int(v) if v % 2 == 0 => Atom::str("True"),
            _ => Atom::str("False"),
        })
        .expect("parity lands in the booleans")
    }

    /// `f b = if b then EVEN else ODD`.
    pub fn describe() -> FiniteFunction {
        FiniteFunction::from_fn(booleans(), descriptions(), |b| {
            if *b == Atom::str("True") {
                Atom::str(EVEN)
            } else {
                Atom::str(ODD)
            }
        })
        .expect("descriptions land in the codomain")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs<const N: usize>(p: [(i64, &str); N]) -> Vec<(Atom, Atom)> {
        p.iter().map(|(k, v)| (Atom::Int(*k), Atom::str(v))).collect()
    }

    #[test]
    fn parity_arrow_from_pairs() {
        let g = FiniteFunction::new(
            parity::numbers(),
            parity::booleans(),
            pairs([(16, "True"), (27, "False")]),
        )
        .unwrap();
        assert_eq!(g, parity::is_even());
        assert_eq!(g.apply(&Atom::Int(16)).unwrap(), &Atom::str("True"));
    }

    #[test]
    fn empty_function_is_valid() {
        let f = FiniteFunction::new(FiniteSet::empty(), FiniteSet::new(["a"]), []).unwrap();
        assert!(f.table().is_empty());
    }

    #[test]
    fn make_function_errors() {
        let dom = FiniteSet::new([1i64, 2]);
        let cod = FiniteSet::new(["a"]);
        assert_eq!(
            FiniteFunction::new(dom.clone(), cod.clone(), pairs([(1, "a")])),
            Err(FinSetError::MissingMapping {
                element: Atom::Int(2)
            })
        );
        assert_eq!(
            FiniteFunction::new(dom.clone(), cod.clone(), pairs([(1, "a"), (2, "b")])),
            Err(FinSetError::CodomainViolation {
                element: Atom::Int(2),
                value: Atom::str("b")
            })
        );
        assert_eq!(
            FiniteFunction::new(dom.clone(), cod.clone(), pairs([(1, "a"), (1, "a")])),
            Err(FinSetError::DuplicateKey { key: Atom::Int(1) })
        );
        assert_eq!(
            FiniteFunction::new(dom, cod, pairs([(3, "a")])),
            Err(FinSetError::NotInDomain {
                element: Atom::Int(3)
            })
        );
    }

    #[test]
    fn identity_tables() {
        let x = FiniteSet::range(3);
        let id = identity(&x);
        for a in &x {
            assert_eq!(id.apply(a).unwrap(), a);
        }
        assert!(identity(&FiniteSet::empty()).table().is_empty());
    }

    #[test]
    fn parity_composition() {
        let fg = compose(&parity::describe(), &parity::is_even()).unwrap();
        assert_eq!(fg.apply(&Atom::Int(16)).unwrap(), &Atom::str(parity::EVEN));
        assert_eq!(fg.apply(&Atom::Int(27)).unwrap(), &Atom::str(parity::ODD));

        let g = parity::is_even();
        assert_eq!(compose(&identity(g.codomain()), &g).unwrap(), g);
        assert_eq!(compose(&g, &identity(g.domain())).unwrap(), g);
    }

    #[test]
    fn apply_outside_domain() {
        assert_eq!(
            parity::is_even().apply(&Atom::Int(99)),
            Err(FinSetError::NotInDomain {
                element: Atom::Int(99)
            })
        );
    }

    #[test]
    fn composition_mismatch() {
        let g = parity::is_even();
        let err = compose(&g, &g).unwrap_err();
        assert!(matches!(err, FinSetError::CompositionMismatch { .. }));
    }

    #[test]
    fn arrow_equality_includes_codomain() {
        let x = FiniteSet::new([1i64]);
        let narrow = identity(&x);
        let wide = FiniteFunction::from_fn(x.clone(), FiniteSet::new([1i64, 2]), |a| a.clone()).unwrap();
        assert_eq!(narrow.table(), wide.table());
        assert_ne!(narrow, wide);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_functions(&FiniteSet::range(2), &FiniteSet::range(3)).unwrap().count(), 9);
        assert_eq!(enumerate_functions(&FiniteSet::empty(), &FiniteSet::range(3)).unwrap().count(), 1);
        assert_eq!(enumerate_functions(&FiniteSet::empty(), &FiniteSet::empty()).unwrap().count(), 1);
        assert_eq!(enumerate_functions(&FiniteSet::range(1), &FiniteSet::empty()).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_cap() {
        let err = enumerate_functions_capped(&FiniteSet::range(3), &FiniteSet::range(3), 26).unwrap_err();
        assert_eq!(err, FinSetError::EnumerationTooLarge { count: 27, cap: 26 });
        assert!(enumerate_functions(&FiniteSet::range(7), &FiniteSet::range(8)).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let tables: Vec<Vec<Atom>> = enumerate_functions(&FiniteSet::range(2), &FiniteSet::range(2))
            .unwrap()
            .map(|f| f.table().to_vec())
            .collect();
        let i = |v: i64| Atom::Int(v);
        assert_eq!(
            tables,
            vec![vec![i(1), i(1)], vec![i(1), i(2)], vec![i(2), i(1)], vec![i(2), i(2)]]
        );
    }

    #[test]
    fn set_display() {
        assert_eq!(FiniteSet::new([2i64, 1]).to_string(), "{1,2}");
        assert_eq!(FiniteSet::empty().to_string(), "{}");
        let nested = FiniteSet::new([Atom::Set(FiniteSet::empty()), Atom::Set(FiniteSet::range(1))]);
        assert_eq!(nested.to_string(), "{{},{1}}");
    }
}
