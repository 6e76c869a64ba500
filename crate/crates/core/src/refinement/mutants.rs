//! Seeded faults used to show that the obligations can fail.
//!
//! [`Programs`] is the set of implementations an obligation run exercises.
//! The pristine set calls the derived programs; each [`Mutant`] replaces one
//! of them with a deliberately broken copy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::array_model::{Index, MonadArr, TraceEvent};
use crate::error::{Error, Result};
use crate::listspec::{Elm, ElmList};
use crate::quicksort_array::{ipartl_on, iqsort_on};
use crate::quicksort_list::{
    partition, partl_with, qsort_with, PartitionFn, PartitionPair, PartitionTriple,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutant {
    #[default]
    None,
    /// List partition sends equal keys right and reverses the left part.
    EqualKeysRight,
    /// The Lomuto swap targets one cell past the right part's start.
    IpartlSwapOffByOne,
    /// Array quicksort never moves the pivot into place.
    IqsortNoPivotSwap,
}

impl Mutant {
    pub const ALL: [Mutant; 3] = [
        Mutant::EqualKeysRight,
        Mutant::IpartlSwapOffByOne,
        Mutant::IqsortNoPivotSwap,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutant::None => "none",
            Mutant::EqualKeysRight => "equal-keys-right",
            Mutant::IpartlSwapOffByOne => "ipartl-swap-off-by-one",
            Mutant::IqsortNoPivotSwap => "iqsort-no-pivot-swap",
        }
    }
}

impl fmt::Display for Mutant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Mutant::None]
            .into_iter()
            .chain(Mutant::ALL)
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMutant(s.to_string()))
    }
}

fn partition_equal_keys_right(p: &Elm, xs: &[Elm]) -> PartitionPair {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in xs {
        if x.key < p.key {
            left.insert(0, *x);
        } else {
            right.push(*x);
        }
    }
    PartitionPair::new(left, right)
}

fn ipartl_swap_off_by_one<M: MonadArr>(
    arr: &mut M,
    p: &Elm,
    i: Index,
    mut ny: usize,
    mut nz: usize,
    mut nx: usize,
) -> Result<(usize, usize)> {
    while nx > 0 {
        arr.trace(TraceEvent::PartitionStep { nx });
        let x = arr.read(i + (ny + nz) as Index)?;
        if x.leq(p) {
            arr.swap(i + ny as Index + 1, i + (ny + nz) as Index)?;
            ny += 1;
        } else {
            nz += 1;
        }
        nx -= 1;
    }
    Ok((ny, nz))
}

type IpartlFn<M> = fn(&mut M, &Elm, Index, usize, usize, usize) -> Result<(usize, usize)>;

fn iqsort_variant<M: MonadArr>(
    arr: &mut M,
    i: Index,
    n: usize,
    part: IpartlFn<M>,
    pivot_swap: bool,
) -> Result<()> {
    arr.trace(TraceEvent::SortEnter { i, n });
    if n > 0 {
        let p = arr.read(i)?;
        let (ny, nz) = part(arr, &p, i + 1, 0, 0, n - 1)?;
        if pivot_swap {
            arr.swap(i, i + ny as Index)?;
        }
        iqsort_variant(arr, i, ny, part, pivot_swap)?;
        iqsort_variant(arr, i + ny as Index + 1, nz, part, pivot_swap)?;
    }
    arr.trace(TraceEvent::SortExit);
    Ok(())
}

/// The implementations under test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Programs {
    pub mutant: Mutant,
}

impl Programs {
    pub fn pristine() -> Self {
        Self::default()
    }

    pub fn with_mutant(mutant: Mutant) -> Self {
        Programs { mutant }
    }

    pub fn partition_fn(&self) -> PartitionFn {
        match self.mutant {
            Mutant::EqualKeysRight => partition_equal_keys_right,
            _ => partition,
        }
    }

    pub fn partition(&self, p: &Elm, xs: &[Elm]) -> PartitionPair {
        (self.partition_fn())(p, xs)
    }

    pub fn qsort(&self, xs: &[Elm]) -> ElmList {
        qsort_with(self.partition_fn(), xs)
    }

    pub fn partl(&self, p: &Elm, t: &PartitionTriple) -> PartitionPair {
        partl_with(self.partition_fn(), p, t)
    }

    pub fn ipartl_on<M: MonadArr>(
        &self,
        arr: &mut M,
        p: &Elm,
        i: Index,
        ny: usize,
        nz: usize,
        nx: usize,
    ) -> Result<(usize, usize)> {
        match self.mutant {
            Mutant::IpartlSwapOffByOne => ipartl_swap_off_by_one(arr, p, i, ny, nz, nx),
            _ => ipartl_on(arr, p, i, ny, nz, nx),
        }
    }

    pub fn iqsort_on<M: MonadArr>(&self, arr: &mut M, i: Index, n: usize) -> Result<()> {
        match self.mutant {
            Mutant::IpartlSwapOffByOne => {
                iqsort_variant(arr, i, n, ipartl_swap_off_by_one::<M>, true)
            }
            Mutant::IqsortNoPivotSwap => iqsort_variant(arr, i, n, ipartl_on::<M>, false),
            _ => iqsort_on(arr, i, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array_model::ArrayState;
    use crate::listspec::{elms, keys, sorted};

    #[test]
    fn names_round_trip() {
        for m in Mutant::ALL {
            assert_eq!(m.name().parse::<Mutant>().unwrap(), m);
        }
        assert_eq!("none".parse::<Mutant>().unwrap(), Mutant::None);
        assert!(matches!(
            "bogus".parse::<Mutant>(),
            Err(Error::UnknownMutant(_))
        ));
    }

    #[test]
    fn pristine_programs_match_derived_code() {
        let xs = elms(&[2, 0, 2, 1]);
        let progs = Programs::pristine();
        assert_eq!(progs.qsort(&xs), crate::quicksort_list::qsort(&xs));
        let mut a = ArrayState::from_list(0, &xs);
        let mut b = a.clone();
        progs.iqsort_on(&mut a, 0, 4).unwrap();
        iqsort_on(&mut b, 0, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mutants_differ_from_pristine() {
        let xs = elms(&[1, 1, 0]);
        let p = Elm::new(1, 9);
        let m = Programs::with_mutant(Mutant::EqualKeysRight);
        assert_ne!(m.partition(&p, &xs), partition(&p, &xs));
        // Equal keys to the right still yields a sorted list.
        assert!(sorted(&m.qsort(&xs)));

        let xs = elms(&[2, 1, 0]);
        let mut arr = ArrayState::from_list(0, &xs);
        Programs::with_mutant(Mutant::IqsortNoPivotSwap)
            .iqsort_on(&mut arr, 0, 3)
            .unwrap();
        assert_ne!(keys(&arr.segment(0, 3).unwrap()), vec![0, 1, 2]);
    }
}
