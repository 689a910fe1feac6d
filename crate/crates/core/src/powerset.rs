//! The powerset monad `(P, η, μ)` on finite sets.
//!
//! `P` sends a set to the set of its subsets and an arrow to its direct-image
//! map; `η_X` sends `x` to `{x}` and `μ_X` sends a family of subsets to its
//! union. Every component is a tabulated [`FiniteFunction`], so the unit
//! triangles, the associativity square and the naturality squares are
//! checked by comparing whole tables.
//!
//! Sizes grow as towers of two: `|P³(X)| = 2^(2^(2^|X|))`. The associativity
//! square is checked exhaustively up to `|X| = 2` (65 536 elements) and by
//! seeded sampling beyond that.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::finset::{Atom, FinSetError, FiniteFunction, FiniteSet};
use crate::report::{Counterexample, Coverage, LawReport};

/// Largest carrier whose powerset is materialized by default (`2^16` subsets).
pub const DEFAULT_POWERSET_CAP: usize = 16;

pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowersetError {
    #[error("powerset of a {size}-element set exceeds the cap of {cap} elements")]
    PowersetTooLarge { size: usize, cap: usize },
    #[error("{members} is not a subset of {carrier}")]
    NotASubset { carrier: FiniteSet, members: FiniteSet },
    #[error("component {name} at {object} has type {found}, expected {expected}")]
    ComponentMismatch {
        name: String,
        object: FiniteSet,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    FinSet(#[from] FinSetError),
}

/// A subset of a fixed carrier; an element of `P(carrier)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetAtom {
    carrier: FiniteSet,
    members: FiniteSet,
}

impl SubsetAtom {
    pub fn new(carrier: FiniteSet, members: FiniteSet) -> Result<Self, PowersetError> {
        if !members.is_subset_of(&carrier) {
            return Err(PowersetError::NotASubset { carrier, members });
        }
        Ok(SubsetAtom { carrier, members })
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn members(&self) -> &FiniteSet {
        &self.members
    }

    /// The atom representing this subset inside `P(carrier)`.
    pub fn to_atom(&self) -> Atom {
        Atom::Set(self.members.clone())
    }
}

/// The endofunctors the monad structure mentions: `1`, `P`, `P²`, `P³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endofunctor {
    Identity,
    P,
    P2,
    P3,
}

impl Endofunctor {
    fn depth(self) -> usize {
        match self {
            Endofunctor::Identity => 0,
            Endofunctor::P => 1,
            Endofunctor::P2 => 2,
            Endofunctor::P3 => 3,
        }
    }

    pub fn object(self, ps: &Powerset, x: &FiniteSet) -> Result<FiniteSet, PowersetError> {
        let mut obj = x.clone();
        for _ in 0..self.depth() {
            obj = ps.object(&obj)?;
        }
        Ok(obj)
    }

    pub fn arrow(self, ps: &Powerset, f: &FiniteFunction) -> Result<FiniteFunction, PowersetError> {
        let mut arr = f.clone();
        for _ in 0..self.depth() {
            arr = ps.arrow(&arr)?;
        }
        Ok(arr)
    }

    /// `F(f)` evaluated at a single element of `F(dom f)` without tabulating.
    pub fn arrow_at(self, f: &FiniteFunction, element: &Atom) -> Result<Atom, PowersetError> {
        fn go(depth: usize, f: &FiniteFunction, element: &Atom) -> Result<Atom, PowersetError> {
            if depth == 0 {
                return Ok(f.apply(element)?.clone());
            }
            let members = element.as_set().ok_or_else(|| FinSetError::NotInDomain {
                element: element.clone(),
            })?;
            let image = members
                .iter()
                .map(|m| go(depth - 1, f, m))
                .collect::<Result<FiniteSet, _>>()?;
            Ok(Atom::Set(image))
        }
        go(self.depth(), f, element)
    }
}

impl fmt::Display for Endofunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endofunctor::Identity => "1",
            Endofunctor::P => "P",
            Endofunctor::P2 => "P²",
            Endofunctor::P3 => "P³",
        })
    }
}

/// The powerset functor with a bound on how large a carrier it will expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Powerset {
    pub cap: usize,
}

impl Default for Powerset {
    fn default() -> Self {
        Powerset {
            cap: DEFAULT_POWERSET_CAP,
        }
    }
}

impl Powerset {
    pub fn with_cap(cap: usize) -> Self {
        Powerset { cap }
    }

    /// `P(X)`: all `2^|X|` subsets, canonically ordered.
    pub fn object(&self, x: &FiniteSet) -> Result<FiniteSet, PowersetError> {
        let n = x.len();
        if n > self.cap || n >= usize::BITS as usize {
            return Err(PowersetError::PowersetTooLarge {
                size: n,
                cap: self.cap,
            });
        }
        let elems = x.elements();
        let subsets = (0..1usize << n).map(|mask| {
            let members = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| elems[i].clone())
                .collect();
            Atom::Set(FiniteSet::from_sorted(members))
        });
        Ok(FiniteSet::new(subsets))
    }

    /// `P(f)`: sends each subset `A` of the domain to its image `f(A)`.
    pub fn arrow(&self, f: &FiniteFunction) -> Result<FiniteFunction, PowersetError> {
        let domain = self.object(f.domain())?;
        let codomain = self.object(f.codomain())?;
        Ok(FiniteFunction::from_fn(domain, codomain, |a| {
            let subset = a.as_set().expect("elements of a powerset are sets");
            Atom::Set(f.image(subset).expect("subsets of the domain have images"))
        })?)
    }

    /// `η_X: X → P(X)`, `x ↦ {x}`.
    pub fn eta(&self, x: &FiniteSet) -> Result<FiniteFunction, PowersetError> {
        let px = self.object(x)?;
        Ok(FiniteFunction::from_fn(x.clone(), px, |a| {
            Atom::Set(FiniteSet::from_sorted(vec![a.clone()]))
        })?)
    }

    /// `μ_X: P(P(X)) → P(X)`, a family of subsets to its union.
    pub fn mu(&self, x: &FiniteSet) -> Result<FiniteFunction, PowersetError> {
        let px = self.object(x)?;
        let ppx = self.object(&px)?;
        Ok(FiniteFunction::from_fn(ppx, px, |family| {
            Atom::Set(union_of(family.as_set().expect("elements of P(P(X)) are sets")))
        })?)
    }

    pub fn eta_transform(&self) -> NatTransform {
        let ps = *self;
        NatTransform::new("eta", Endofunctor::Identity, Endofunctor::P, move |x| ps.eta(x))
    }

    pub fn mu_transform(&self) -> NatTransform {
        let ps = *self;
        NatTransform::new("mu", Endofunctor::P2, Endofunctor::P, move |x| ps.mu(x))
    }

    /// `F(f) ∘ t_X = t_Y ∘ G(f)` for `t: G ⇒ F` and `f: X → Y`.
    pub fn check_naturality(&self, t: &NatTransform, f: &FiniteFunction) -> Result<LawReport<Atom>, PowersetError> {
        let (lhs, rhs) = self.naturality_sides(t, f)?;
        let law = format!("naturality({})", t.name);
        let component = arrow_label(f);
        Ok(compare_tables(law, component, &lhs, &rhs, vec![format!("f={}", table_label(f))]))
    }

    fn naturality_sides(
        &self,
        t: &NatTransform,
        f: &FiniteFunction,
    ) -> Result<(FiniteFunction, FiniteFunction), PowersetError> {
        let at_dom = t.component_at(self, f.domain())?;
        let at_cod = t.component_at(self, f.codomain())?;
        let lhs = t.target.arrow(self, f)?.compose(&at_dom)?;
        let rhs = at_cod.compose(&t.source.arrow(self, f)?)?;
        Ok((lhs, rhs))
    }

    /// Naturality of `t` against every arrow `x → y`, stopping at the first failure.
    pub fn check_naturality_all(
        &self,
        t: &NatTransform,
        x: &FiniteSet,
        y: &FiniteSet,
    ) -> Result<LawReport<Atom>, PowersetError> {
        let law = format!("naturality({})", t.name);
        let component = format!("{x}->{y}");
        let mut checked = 0;
        for f in crate::finset::enumerate_functions(x, y)? {
            let report = self.check_naturality(t, &f)?;
            checked += report.checked;
            if let Some(cx) = report.counterexample {
                return Ok(LawReport::fail(law, component, checked, cx));
            }
        }
        Ok(LawReport::pass(law, component, checked))
    }

    /// Both unit triangles at `X`: `μ_X ∘ η_{P(X)} = id` and `μ_X ∘ P(η_X) = id`.
    pub fn check_unit_laws(&self, x: &FiniteSet) -> Result<[LawReport<Atom>; 2], PowersetError> {
        self.check_unit_laws_with(&self.eta_transform(), &self.mu_transform(), x)
    }

    /// The unit triangles for arbitrary candidate unit and multiplication transforms.
    pub fn check_unit_laws_with(
        &self,
        eta: &NatTransform,
        mu: &NatTransform,
        x: &FiniteSet,
    ) -> Result<[LawReport<Atom>; 2], PowersetError> {
        let px = self.object(x)?;
        let mu_x = mu.component_at(self, x)?;
        let left = mu_x.compose(&eta.component_at(self, &px)?)?;
        let right = mu_x.compose(&self.arrow(&eta.component_at(self, x)?)?)?;
        let id = FiniteFunction::identity(&px);
        Ok([
            compare_tables(UNIT_LEFT, x.to_string(), &left, &id, Vec::new()),
            compare_tables(UNIT_RIGHT, x.to_string(), &right, &id, Vec::new()),
        ])
    }

    /// Re-evaluates a unit-triangle counterexample pointwise at its witness `A ∈ P(X)`.
    pub fn recheck_unit(
        &self,
        eta: &NatTransform,
        mu: &NatTransform,
        x: &FiniteSet,
        report: &LawReport<Atom>,
    ) -> Result<bool, PowersetError> {
        let Some(cx) = &report.counterexample else {
            return Ok(false);
        };
        let mu_x = mu.component_at(self, x)?;
        let family = match report.law.as_str() {
            UNIT_LEFT => eta.component_at(self, &self.object(x)?)?.apply(&cx.witness)?.clone(),
            UNIT_RIGHT => Endofunctor::P.arrow_at(&eta.component_at(self, x)?, &cx.witness)?,
            _ => return Ok(false),
        };
        let lhs = mu_x.apply(&family)?.clone();
        let rhs = cx.witness.clone();
        Ok(lhs != rhs && lhs == cx.lhs && rhs == cx.rhs)
    }

    /// The associativity square `μ_X ∘ μ_{P(X)} = μ_X ∘ P(μ_X)` over all of `P³(X)`.
    pub fn check_associativity(&self, x: &FiniteSet) -> Result<LawReport<Atom>, PowersetError> {
        self.check_associativity_with(&self.mu_transform(), x)
    }

    /// Exhaustive associativity for an arbitrary candidate multiplication.
    pub fn check_associativity_with(&self, mu: &NatTransform, x: &FiniteSet) -> Result<LawReport<Atom>, PowersetError> {
        let mu_x = mu.component_at(self, x)?;
        let mu_px = mu.component_at(self, &self.object(x)?)?;
        let lhs = mu_x.compose(&mu_px)?;
        let rhs = mu_x.compose(&self.arrow(&mu_x)?)?;
        Ok(compare_tables(ASSOCIATIVITY, x.to_string(), &lhs, &rhs, Vec::new()))
    }

    /// The associativity square on `samples` uniformly drawn elements of `P³(X)`.
    pub fn check_associativity_sampled(
        &self,
        x: &FiniteSet,
        seed: u64,
        samples: usize,
    ) -> Result<LawReport<Atom>, PowersetError> {
        let mu = self.mu(x)?;
        let ppx = mu.domain().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coverage = Coverage::Sampled { seed };
        for i in 0..samples {
            let family: FiniteSet = FiniteSet::from_sorted(
                ppx.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect(),
            );
            let witness = Atom::Set(family);
            let (lhs, rhs) = associativity_at(&mu, &witness)?;
            if lhs != rhs {
                let cx = Counterexample {
                    witness,
                    functions: Vec::new(),
                    lhs,
                    rhs,
                };
                return Ok(LawReport::fail(ASSOCIATIVITY, x.to_string(), i + 1, cx).with_coverage(coverage));
            }
        }
        Ok(LawReport::pass(ASSOCIATIVITY, x.to_string(), samples).with_coverage(coverage))
    }

    /// `P(id_X) = id_{P(X)}`.
    pub fn check_functor_identity(&self, x: &FiniteSet) -> Result<LawReport<Atom>, PowersetError> {
        let lifted = self.arrow(&FiniteFunction::identity(x))?;
        let id = FiniteFunction::identity(&self.object(x)?);
        Ok(compare_tables("functor-identity(P)", x.to_string(), &lifted, &id, Vec::new()))
    }

    /// `P(g ∘ f) = P(g) ∘ P(f)`.
    pub fn check_functor_composition(
        &self,
        g: &FiniteFunction,
        f: &FiniteFunction,
    ) -> Result<LawReport<Atom>, PowersetError> {
        let lhs = self.arrow(&g.compose(f)?)?;
        let rhs = self.arrow(g)?.compose(&self.arrow(f)?)?;
        let labels = vec![format!("g={}", table_label(g)), format!("f={}", table_label(f))];
        Ok(compare_tables("functor-composition(P)", arrow_label(f), &lhs, &rhs, labels))
    }

    /// Re-evaluates both sides of a naturality counterexample pointwise.
    /// True when the stored inequality is reproduced.
    pub fn recheck_naturality(
        &self,
        t: &NatTransform,
        f: &FiniteFunction,
        cx: &Counterexample<Atom>,
    ) -> Result<bool, PowersetError> {
        let at_dom = t.component_at(self, f.domain())?;
        let at_cod = t.component_at(self, f.codomain())?;
        let lhs = t.target.arrow_at(f, at_dom.apply(&cx.witness)?)?;
        let rhs = at_cod.apply(&t.source.arrow_at(f, &cx.witness)?)?.clone();
        Ok(lhs != rhs && lhs == cx.lhs && rhs == cx.rhs)
    }

    /// Re-evaluates a built-in associativity counterexample pointwise.
    pub fn recheck_associativity(&self, x: &FiniteSet, cx: &Counterexample<Atom>) -> Result<bool, PowersetError> {
        let (lhs, rhs) = associativity_at(&self.mu(x)?, &cx.witness)?;
        Ok(lhs != rhs && lhs == cx.lhs && rhs == cx.rhs)
    }

    /// Re-evaluates an associativity counterexample for a candidate multiplication.
    pub fn recheck_associativity_with(
        &self,
        mu: &NatTransform,
        x: &FiniteSet,
        cx: &Counterexample<Atom>,
    ) -> Result<bool, PowersetError> {
        let mu_x = mu.component_at(self, x)?;
        let mu_px = mu.component_at(self, &self.object(x)?)?;
        let lhs = mu_x.apply(mu_px.apply(&cx.witness)?)?.clone();
        let rhs = mu_x.apply(&Endofunctor::P.arrow_at(&mu_x, &cx.witness)?)?.clone();
        Ok(lhs != rhs && lhs == cx.lhs && rhs == cx.rhs)
    }
}

const UNIT_LEFT: &str = "unit-left";
const UNIT_RIGHT: &str = "unit-right";
const ASSOCIATIVITY: &str = "associativity";

/// Union of a family of subsets.
pub fn union_of(family: &FiniteSet) -> FiniteSet {
    family
        .iter()
        .flat_map(|a| a.as_set().expect("members of a family are sets").iter().cloned())
        .collect()
}

/// Both sides of the associativity square at one element of `P³(X)`.
fn associativity_at(mu: &FiniteFunction, family_of_families: &Atom) -> Result<(Atom, Atom), PowersetError> {
    let fam = family_of_families.as_set().ok_or_else(|| FinSetError::NotInDomain {
        element: family_of_families.clone(),
    })?;
    // μ_{P(X)} first: flatten one level, then μ_X.
    let lhs = mu.apply(&Atom::Set(union_of(fam)))?.clone();
    // P(μ_X) first: take each inner union, then μ_X.
    let rhs = mu.apply(&Atom::Set(mu.image(fam)?))?.clone();
    Ok((lhs, rhs))
}

fn compare_tables(
    law: impl Into<String>,
    component: impl Into<String>,
    lhs: &FiniteFunction,
    rhs: &FiniteFunction,
    functions: Vec<String>,
) -> LawReport<Atom> {
    debug_assert_eq!(lhs.domain(), rhs.domain());
    let checked = lhs.domain().len();
    let witness = lhs
        .first_disagreement(rhs)
        .map(|(x, l, r)| (x.clone(), l.clone(), r.clone()));
    match witness {
        None => LawReport::pass(law, component, checked),
        Some((witness, lhs, rhs)) => LawReport::fail(
            law,
            component,
            checked,
            Counterexample {
                witness,
                functions,
                lhs,
                rhs,
            },
        ),
    }
}

fn arrow_label(f: &FiniteFunction) -> String {
    format!("{}->{}", f.domain(), f.codomain())
}

fn table_label(f: &FiniteFunction) -> String {
    let entries: Vec<String> = f.pairs().map(|(x, y)| format!("{x}↦{y}")).collect();
    format!("<{}>", entries.join(";"))
}

type ComponentFn = dyn Fn(&FiniteSet) -> Result<FiniteFunction, PowersetError> + Send + Sync;

/// A family of arrows `t_X: G(X) → F(X)`, one per finite set.
#[derive(Clone)]
pub struct NatTransform {
    pub name: String,
    pub source: Endofunctor,
    pub target: Endofunctor,
    component: Arc<ComponentFn>,
}

impl NatTransform {
    pub fn new<F>(name: impl Into<String>, source: Endofunctor, target: Endofunctor, component: F) -> Self
    where
        F: Fn(&FiniteSet) -> Result<FiniteFunction, PowersetError> + Send + Sync + 'static,
    {
        NatTransform {
            name: name.into(),
            source,
            target,
            component: Arc::new(component),
        }
    }

    /// The component at `x`, checked to run from `source(x)` to `target(x)`.
    pub fn component_at(&self, ps: &Powerset, x: &FiniteSet) -> Result<FiniteFunction, PowersetError> {
        let c = (self.component)(x)?;
        let dom = self.source.object(ps, x)?;
        let cod = self.target.object(ps, x)?;
        if c.domain() != &dom || c.codomain() != &cod {
            return Err(PowersetError::ComponentMismatch {
                name: self.name.clone(),
                object: x.clone(),
                expected: format!("{}({x}) -> {}({x})", self.source, self.target),
                found: format!("{} -> {}", c.domain(), c.codomain()),
            });
        }
        Ok(c)
    }
}

impl fmt::Debug for NatTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatTransform({}: {} => {})", self.name, self.source, self.target)
    }
}

pub fn powerset_object(x: &FiniteSet) -> Result<FiniteSet, PowersetError> {
    Powerset::default().object(x)
}

pub fn powerset_arrow(f: &FiniteFunction) -> Result<FiniteFunction, PowersetError> {
    Powerset::default().arrow(f)
}

pub fn eta_component(x: &FiniteSet) -> Result<FiniteFunction, PowersetError> {
    Powerset::default().eta(x)
}

pub fn mu_component(x: &FiniteSet) -> Result<FiniteFunction, PowersetError> {
    Powerset::default().mu(x)
}
