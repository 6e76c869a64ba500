//! Set semantics for the nondeterminism monad and its combination with
//! array state.
//!
//! A nondeterministic computation is identified with the canonical set of
//! its possible results. Choice is union, failure is the empty set, and
//! `bind` is the union of the continuation over every outcome. Multiplicity
//! and order of outcomes are unobservable, which makes choice idempotent and
//! commutative.
//!
//! Stateful nondeterministic computations are run from a single initial
//! state and denote a [`StateOutcomes`]: every branch carries its own final
//! state.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array_model::ArrayState;
use crate::error::{Error, Result};

/// Canonical finite set of outcomes. The empty set is failure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Outcomes<T: Ord>(BTreeSet<T>);

/// Outcomes of a stateful computation: each value paired with the final
/// state of its branch.
pub type StateOutcomes<T> = Outcomes<(T, ArrayState)>;

impl<T: Ord> Outcomes<T> {
    pub fn empty() -> Self {
        Outcomes(BTreeSet::new())
    }

    pub fn singleton(x: T) -> Self {
        let mut set = BTreeSet::new();
        set.insert(x);
        Outcomes(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.0.contains(x)
    }

    /// Iterates in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.0.iter()
    }

    pub fn insert(&mut self, x: T) -> bool {
        self.0.insert(x)
    }

    /// `m >>= f`.
    pub fn bind<U: Ord>(&self, mut f: impl FnMut(&T) -> Outcomes<U>) -> Outcomes<U> {
        let mut out = BTreeSet::new();
        for x in &self.0 {
            let mut next = f(x).0;
            out.append(&mut next);
        }
        Outcomes(out)
    }

    /// `m >> n`: run `m`, discard its result, continue with `n`.
    pub fn then<U: Ord + Clone>(&self, next: &Outcomes<U>) -> Outcomes<U> {
        self.bind(|_| next.clone())
    }

    pub fn map<U: Ord>(&self, f: impl FnMut(&T) -> U) -> Outcomes<U> {
        self.0.iter().map(f).collect()
    }

    /// Nondeterministic choice.
    pub fn mplus(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        Outcomes(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        Outcomes(self.0.intersection(&other.0).cloned().collect())
    }

    /// `self ⊆ other`: every outcome of `self` is an outcome of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Refinement by its algebraic definition, `m1 ⫾ m2 = m2`.
    pub fn refines_by_choice(&self, other: &Self) -> bool
    where
        T: Clone,
    {
        self.mplus(other) == *other
    }

    pub fn into_set(self) -> BTreeSet<T> {
        self.0
    }
}

impl<T: Ord> Default for Outcomes<T> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<T: Ord> FromIterator<T> for Outcomes<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Outcomes(iter.into_iter().collect())
    }
}

impl<T: Ord> IntoIterator for Outcomes<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a Outcomes<T> {
    type Item = &'a T;
    type IntoIter = std::collections::btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Outcomes<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

pub fn ret<T: Ord>(x: T) -> Outcomes<T> {
    Outcomes::singleton(x)
}

pub fn mzero<T: Ord>() -> Outcomes<T> {
    Outcomes::empty()
}

pub fn bind<A: Ord, B: Ord>(m: &Outcomes<A>, f: impl FnMut(&A) -> Outcomes<B>) -> Outcomes<B> {
    m.bind(f)
}

pub fn mplus<T: Ord + Clone>(m1: &Outcomes<T>, m2: &Outcomes<T>) -> Outcomes<T> {
    m1.mplus(m2)
}

pub fn guard(b: bool) -> Outcomes<()> {
    if b {
        ret(())
    } else {
        mzero()
    }
}

/// `filt p x = guard (p x) >> {x}`.
pub fn filt<A: Ord + Clone>(p: impl Fn(&A) -> bool, x: &A) -> Outcomes<A> {
    guard(p(x)).then(&ret(x.clone()))
}

pub fn lift_m2<A: Ord, B: Ord, C: Ord>(
    op: impl Fn(&A, &B) -> C,
    m1: &Outcomes<A>,
    m2: &Outcomes<B>,
) -> Outcomes<C> {
    m1.bind(|x1| m2.bind(|x2| ret(op(x1, x2))))
}

/// `f >=> g`.
pub fn kleisli<A, B: Ord, C: Ord>(
    f: impl Fn(&A) -> Outcomes<B>,
    g: impl Fn(&B) -> Outcomes<C>,
) -> impl Fn(&A) -> Outcomes<C> {
    move |x| f(x).bind(&g)
}

pub fn refines<T: Ord>(m1: &Outcomes<T>, m2: &Outcomes<T>) -> bool {
    m1.refines(m2)
}

/// Refinement of stateful outcome sets: inclusion on `(value, state)` pairs,
/// with final states compared in full.
pub fn refines_state<T: Ord>(m1: &StateOutcomes<T>, m2: &StateOutcomes<T>) -> bool {
    m1.refines(m2)
}

/// Pointwise refinement `f ⊆̇ g` over a finite domain.
pub fn refines_pointwise<'a, A: 'a, B: Ord>(
    domain: impl IntoIterator<Item = &'a A>,
    f: impl Fn(&A) -> Outcomes<B>,
    g: impl Fn(&A) -> Outcomes<B>,
) -> bool {
    domain.into_iter().all(|x| f(x).refines(&g(x)))
}

/// Runs a pure nondeterministic computation inside the state monad: every
/// outcome is paired with the unchanged state.
pub fn with_state<T: Ord + Clone>(m: &Outcomes<T>, s: &ArrayState) -> StateOutcomes<T> {
    m.map(|x| (x.clone(), s.clone()))
}

/// Bind for stateful outcomes: the continuation runs from each branch's own
/// final state.
pub fn bind_state<A: Ord, B: Ord>(
    m: &StateOutcomes<A>,
    mut f: impl FnMut(&A, &ArrayState) -> StateOutcomes<B>,
) -> StateOutcomes<B> {
    m.bind(|(x, s)| f(x, s))
}

/// A finite tabulated Kleisli arrow `A -> Outcomes<B>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KleisliTable<A: Ord, B: Ord> {
    domain: Vec<A>,
    mapping: BTreeMap<A, Outcomes<B>>,
}

impl<A: Ord + Clone, B: Ord + Clone> KleisliTable<A, B> {
    pub fn tabulate(domain: Vec<A>, f: impl Fn(&A) -> Outcomes<B>) -> Self {
        let mapping = domain.iter().map(|x| (x.clone(), f(x))).collect();
        KleisliTable { domain, mapping }
    }

    /// Builds a table from explicit rows; the domain is the list of keys in
    /// the given order.
    pub fn from_rows(rows: Vec<(A, Outcomes<B>)>) -> Self {
        let domain = rows.iter().map(|(x, _)| x.clone()).collect();
        KleisliTable {
            domain,
            mapping: rows.into_iter().collect(),
        }
    }

    pub fn domain(&self) -> &[A] {
        &self.domain
    }

    pub fn apply(&self, x: &A) -> Result<&Outcomes<B>> {
        self.mapping.get(x).ok_or(Error::OutsideDomain)
    }

    /// Total lookup for use where the argument is known to be in the domain;
    /// outside the domain the result is failure.
    pub fn at(&self, x: &A) -> Outcomes<B> {
        self.mapping.get(x).cloned().unwrap_or_default()
    }

    /// `self >=> g`, tabulated over this table's domain.
    pub fn then<C: Ord + Clone>(&self, g: &KleisliTable<B, C>) -> Result<KleisliTable<A, C>> {
        let mut rows = Vec::with_capacity(self.domain.len());
        for x in &self.domain {
            let mut out = Outcomes::empty();
            for y in &self.mapping[x] {
                out = out.mplus(g.apply(y)?);
            }
            rows.push((x.clone(), out));
        }
        Ok(KleisliTable::from_rows(rows))
    }

    /// Pointwise refinement over this table's domain. Points missing from
    /// `other` count as failure there.
    pub fn refines(&self, other: &Self) -> bool {
        self.domain
            .iter()
            .all(|x| self.mapping[x].refines(&other.at(x)))
    }
}

impl<A: Ord + fmt::Debug, B: Ord + fmt::Debug> fmt::Debug for KleisliTable<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.domain.iter().map(|x| (x, &self.mapping[x])))
            .finish()
    }
}
