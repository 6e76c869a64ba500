//! Pure list quicksort and the accumulating partition family.
//!
//! [`partition`] is the deterministic refinement of [`partition_spec`];
//! [`qsort`] refines `slowsort`. For the array derivation the partition is
//! generalised with accumulators ([`partl`]) and then relaxed so that the
//! right-hand accumulator may be permuted ([`partl_prime`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::effects::{filt, ret, Outcomes};
use crate::listspec::{perm, slowsort, split, Elm, ElmList};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct PartitionPair {
    pub left: ElmList,
    pub right: ElmList,
}

impl PartitionPair {
    pub fn new(left: ElmList, right: ElmList) -> Self {
        PartitionPair { left, right }
    }
}

impl fmt::Debug for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.left, self.right)
    }
}

/// Accumulator triple `(ys, zs, xs)`: elements already placed left, already
/// placed right, and still to be processed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct PartitionTriple {
    pub ys: ElmList,
    pub zs: ElmList,
    pub xs: ElmList,
}

impl PartitionTriple {
    pub fn new(ys: ElmList, zs: ElmList, xs: ElmList) -> Self {
        PartitionTriple { ys, zs, xs }
    }

    pub fn total_len(&self) -> usize {
        self.ys.len() + self.zs.len() + self.xs.len()
    }
}

impl fmt::Debug for PartitionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.ys, self.zs, self.xs)
    }
}

pub type PartitionFn = fn(&Elm, &[Elm]) -> PartitionPair;

/// Stable two-way partition. Elements equal to the pivot go left.
pub fn partition(p: &Elm, xs: &[Elm]) -> PartitionPair {
    match xs.split_first() {
        None => PartitionPair::default(),
        Some((x, rest)) => {
            let PartitionPair {
                mut left,
                mut right,
            } = partition(p, rest);
            if x.leq(p) {
                left.insert(0, *x);
            } else {
                right.insert(0, *x);
            }
            PartitionPair { left, right }
        }
    }
}

/// `split xs >>= filt (λ(ys,zs) → all (≤ p) ys ∧ all (p ≤) zs)`.
pub fn partition_spec(p: &Elm, xs: &[Elm]) -> Outcomes<PartitionPair> {
    split(xs).bind(|(ys, zs)| {
        filt(
            |(ys, zs): &(ElmList, ElmList)| {
                ys.iter().all(|y| y.leq(p)) && zs.iter().all(|z| p.leq(z))
            },
            &(ys.clone(), zs.clone()),
        )
        .map(|(ys, zs)| PartitionPair::new(ys.clone(), zs.clone()))
    })
}

pub fn qsort(xs: &[Elm]) -> ElmList {
    qsort_with(partition, xs)
}

/// `qsort (p:xs) = qsort ys ++ [p] ++ qsort zs` with `(ys, zs)` from the
/// given partition function.
pub fn qsort_with(part: PartitionFn, xs: &[Elm]) -> ElmList {
    match xs.split_first() {
        None => Vec::new(),
        Some((p, rest)) => {
            let PartitionPair { left, right } = part(p, rest);
            let mut out = qsort_with(part, &left);
            out.push(*p);
            out.extend(qsort_with(part, &right));
            out
        }
    }
}

/// The right-hand side of the divide-and-conquer property:
/// `{partition p xs} >>= λ(ys,zs) → slowsort ys >>= λys' → slowsort zs >>= λzs' → {ys' ++ [p] ++ zs'}`.
pub fn slowsort_divided(part: PartitionFn, p: &Elm, xs: &[Elm]) -> Outcomes<ElmList> {
    ret(part(p, xs)).bind(|PartitionPair { left, right }| {
        slowsort(left).bind(|ys1| {
            slowsort(right).bind(|zs1| ret([ys1.as_slice(), std::slice::from_ref(p), zs1].concat()))
        })
    })
}

/// `partl p (ys, zs, xs) = let (us, vs) = partition p xs in (ys ++ us, zs ++ vs)`.
pub fn partl(p: &Elm, t: &PartitionTriple) -> PartitionPair {
    partl_with(partition, p, t)
}

pub fn partl_with(part: PartitionFn, p: &Elm, t: &PartitionTriple) -> PartitionPair {
    let PartitionPair {
        left: us,
        right: vs,
    } = part(p, &t.xs);
    PartitionPair::new(
        [t.ys.as_slice(), &us].concat(),
        [t.zs.as_slice(), &vs].concat(),
    )
}

/// Tail-recursive form of [`partl`].
pub fn partl_tail(p: &Elm, t: &PartitionTriple) -> PartitionPair {
    let mut ys = t.ys.clone();
    let mut zs = t.zs.clone();
    for x in &t.xs {
        if x.leq(p) {
            ys.push(*x);
        } else {
            zs.push(*x);
        }
    }
    PartitionPair::new(ys, zs)
}

/// One step of the relaxed partition: place `x` and permute the right
/// accumulator.
pub fn dispatch(x: &Elm, p: &Elm, t: &PartitionTriple) -> Outcomes<PartitionTriple> {
    if x.leq(p) {
        let ys = [t.ys.as_slice(), std::slice::from_ref(x)].concat();
        perm(&t.zs).map(|zs1| PartitionTriple::new(ys.clone(), zs1.clone(), t.xs.clone()))
    } else {
        let zs = [t.zs.as_slice(), std::slice::from_ref(x)].concat();
        perm(&zs).map(|zs1| PartitionTriple::new(t.ys.clone(), zs1.clone(), t.xs.clone()))
    }
}

/// `partl' p (ys, zs, x:xs) = dispatch x p (ys, zs, xs) >>= partl' p`.
pub fn partl_prime(p: &Elm, t: &PartitionTriple) -> Outcomes<PartitionPair> {
    match t.xs.split_first() {
        None => ret(PartitionPair::new(t.ys.clone(), t.zs.clone())),
        Some((x, rest)) => {
            let t1 = PartitionTriple::new(t.ys.clone(), t.zs.clone(), rest.to_vec());
            dispatch(x, p, &t1).bind(|t2| partl_prime(p, t2))
        }
    }
}

/// [`partl_prime`] before the recursive calls were lifted out of the
/// branches.
pub fn partl_prime_branching(p: &Elm, t: &PartitionTriple) -> Outcomes<PartitionPair> {
    match t.xs.split_first() {
        None => ret(PartitionPair::new(t.ys.clone(), t.zs.clone())),
        Some((x, rest)) => {
            if x.leq(p) {
                let ys = [t.ys.as_slice(), std::slice::from_ref(x)].concat();
                perm(&t.zs).bind(|zs1| {
                    partl_prime_branching(
                        p,
                        &PartitionTriple::new(ys.clone(), zs1.clone(), rest.to_vec()),
                    )
                })
            } else {
                let zs = [t.zs.as_slice(), std::slice::from_ref(x)].concat();
                perm(&zs).bind(|zs1| {
                    partl_prime_branching(
                        p,
                        &PartitionTriple::new(t.ys.clone(), zs1.clone(), rest.to_vec()),
                    )
                })
            }
        }
    }
}

/// `second perm`.
pub fn second_perm(pr: &PartitionPair) -> Outcomes<PartitionPair> {
    perm(&pr.right).map(|zs| PartitionPair::new(pr.left.clone(), zs.clone()))
}
