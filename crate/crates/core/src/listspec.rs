//! List-level sorting specification: sortedness, two definitions of
//! permutation, nondeterministic `split` and `insert`, and `slowsort`.

use std::cell::RefCell;
use std::collections::HashMap;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::effects::{filt, lift_m2, ret, Outcomes};

/// An element with a sort key and an identity tag.
///
/// Sorting predicates compare keys only, so `(≤)` is a total preorder on
/// elements. Equality and the canonical order used by outcome sets compare
/// `(key, tag)`, which keeps equal-keyed elements distinguishable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elm {
    pub key: i64,
    pub tag: u32,
}

pub type ElmList = Vec<Elm>;

impl Elm {
    pub const fn new(key: i64, tag: u32) -> Self {
        Elm { key, tag }
    }

    /// The sorting preorder.
    pub fn leq(&self, other: &Elm) -> bool {
        self.key <= other.key
    }
}

impl fmt::Debug for Elm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.key, self.tag)
    }
}

impl fmt::Display for Elm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Elements with the given keys, tagged by position.
pub fn elms(keys: &[i64]) -> ElmList {
    keys.iter()
        .enumerate()
        .map(|(t, &k)| Elm::new(k, t as u32))
        .collect()
}

pub fn keys(xs: &[Elm]) -> Vec<i64> {
    xs.iter().map(|x| x.key).collect()
}

/// `sorted (x:xs) = all (x ≤) xs ∧ sorted xs`.
pub fn sorted(xs: &[Elm]) -> bool {
    match xs.split_first() {
        None => true,
        Some((x, rest)) => rest.iter().all(|y| x.leq(y)) && sorted(rest),
    }
}

/// Sortedness of `ys ++ [x] ++ zs` decomposed into its four conjuncts.
pub fn sorted_cat3(ys: &[Elm], x: &Elm, zs: &[Elm]) -> bool {
    sorted(ys) && sorted(zs) && ys.iter().all(|y| y.leq(x)) && zs.iter().all(|z| x.leq(z))
}

fn cons<T: Clone>(x: &T, xs: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(xs.len() + 1);
    out.push(x.clone());
    out.extend_from_slice(xs);
    out
}

/// All order-preserving ways of distributing `xs` over two lists.
pub fn split<T: Ord + Clone>(xs: &[T]) -> Outcomes<(Vec<T>, Vec<T>)> {
    match xs.split_first() {
        None => ret((Vec::new(), Vec::new())),
        Some((x, rest)) => split(rest)
            .bind(|(ys, zs)| ret((cons(x, ys), zs.clone())).mplus(&ret((ys.clone(), cons(x, zs))))),
    }
}

/// Inserts `x` at every position of `xs`.
pub fn insert<T: Ord + Clone>(x: &T, xs: &[T]) -> Outcomes<Vec<T>> {
    match xs.split_first() {
        None => ret(vec![x.clone()]),
        Some((y, rest)) => ret(cons(x, xs)).mplus(&insert(x, rest).bind(|zs| ret(cons(y, zs)))),
    }
}

/// `perm [] = {[]}`, `perm (x:xs) = perm xs >>= insert x`.
pub fn perm_insert<T: Ord + Clone>(xs: &[T]) -> Outcomes<Vec<T>> {
    match xs.split_first() {
        None => ret(Vec::new()),
        Some((x, rest)) => perm_insert(rest).bind(|ys| insert(x, ys)),
    }
}

/// `perm (x:xs) = split xs >>= λ(ys,zs) → liftM2 (++[x]++) (perm ys) (perm zs)`.
pub fn perm_split<T: Ord + Clone>(xs: &[T]) -> Outcomes<Vec<T>> {
    match xs.split_first() {
        None => ret(Vec::new()),
        Some((x, rest)) => split(rest).bind(|(ys, zs)| {
            lift_m2(
                |ys1: &Vec<T>, zs1: &Vec<T>| {
                    [ys1.as_slice(), std::slice::from_ref(x), zs1].concat()
                },
                &perm_split(ys),
                &perm_split(zs),
            )
        }),
    }
}

/// The permutation generator used by the sorting specification. The two
/// definitions denote the same outcome sets; this one is the split-based
/// form that drives the quicksort derivation.
/// It follows the split-based recursion, memoised per thread for short
/// lists.
pub fn perm(xs: &[Elm]) -> Outcomes<ElmList> {
    const CACHED_LEN: usize = 5;
    const CACHE_LIMIT: usize = 1 << 14;
    thread_local! {
        static CACHE: RefCell<HashMap<ElmList, Outcomes<ElmList>>> = RefCell::new(HashMap::new());
    }
    let Some((x, rest)) = xs.split_first() else {
        return ret(Vec::new());
    };
    let cacheable = xs.len() <= CACHED_LEN;
    if cacheable {
        if let Some(hit) = CACHE.with(|c| c.borrow().get(xs).cloned()) {
            return hit;
        }
    }
    let out = split(rest).bind(|(ys, zs)| {
        lift_m2(
            |ys1: &ElmList, zs1: &ElmList| [ys1.as_slice(), std::slice::from_ref(x), zs1].concat(),
            &perm(ys),
            &perm(zs),
        )
    });
    if cacheable {
        CACHE.with(|c| {
            let mut c = c.borrow_mut();
            if c.len() >= CACHE_LIMIT {
                c.clear();
            }
            c.insert(xs.to_vec(), out.clone());
        });
    }
    out
}

/// `slowsort = perm >=> filt sorted`.
pub fn slowsort(xs: &[Elm]) -> Outcomes<ElmList> {
    perm(xs).bind(|ys| filt(|zs: &ElmList| sorted(zs), ys))
}

/// Whether `ys` is a rearrangement of `xs`, comparing `(key, tag)`.
pub fn is_rearrangement(xs: &[Elm], ys: &[Elm]) -> bool {
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}
