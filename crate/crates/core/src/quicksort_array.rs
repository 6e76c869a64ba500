//! In-place Lomuto partition and array quicksort, together with executable
//! forms of the specifications they refine.
//!
//! The programs are deterministic state transformers written against
//! [`MonadArr`], and they mutate the array only through `swap`. The
//! specification side builds [`StateOutcomes`] from the list-level
//! nondeterministic programs followed by the `writeList` family.

use crate::array_model::{
    self, write2_l, write_list, ArrayState, Index, MonadArr, StateStep, TraceEvent,
};
use crate::effects::{bind_state, ret, with_state, StateOutcomes};
use crate::error::Result;
use crate::listspec::{perm, slowsort, Elm};
use crate::quicksort_list::{partl_prime, PartitionPair, PartitionTriple};

/// Lomuto partition of the segment `[i, i + ny + nz + nx)` around `p`.
///
/// The segment holds `ys ++ zs ++ xs` with `#ys = ny`, `#zs = nz`,
/// `#xs = nx`. Each step reads the first unprocessed element; if it is at
/// most `p` it is swapped with the first element of the right part.
/// Returns the final lengths of the left and right parts.
pub fn ipartl_on<M: MonadArr>(
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
            arr.swap(i + ny as Index, i + (ny + nz) as Index)?;
            ny += 1;
        } else {
            nz += 1;
        }
        nx -= 1;
    }
    Ok((ny, nz))
}

/// Sorts the `n` cells starting at `i`.
pub fn iqsort_on<M: MonadArr>(arr: &mut M, i: Index, n: usize) -> Result<()> {
    arr.trace(TraceEvent::SortEnter { i, n });
    if n > 0 {
        let p = arr.read(i)?;
        let (ny, nz) = ipartl_on(arr, &p, i + 1, 0, 0, n - 1)?;
        arr.swap(i, i + ny as Index)?;
        iqsort_on(arr, i, ny)?;
        iqsort_on(arr, i + ny as Index + 1, nz)?;
    }
    arr.trace(TraceEvent::SortExit);
    Ok(())
}

pub fn ipartl(
    s: &ArrayState,
    p: &Elm,
    i: Index,
    ny: usize,
    nz: usize,
    nx: usize,
) -> Result<StateStep<(usize, usize)>> {
    let mut next = s.clone();
    let result = ipartl_on(&mut next, p, i, ny, nz, nx)?;
    Ok(StateStep { result, next })
}

pub fn iqsort(s: &ArrayState, i: Index, n: usize) -> Result<StateStep<()>> {
    let mut next = s.clone();
    iqsort_on(&mut next, i, n)?;
    Ok(StateStep { result: (), next })
}

/// `writeList i (ys ++ zs ++ xs) >> ipartl p i (#ys, #zs, #xs)`, run from `s`.
pub fn ipartl_after_write(
    s: &ArrayState,
    p: &Elm,
    i: Index,
    t: &PartitionTriple,
) -> Result<StateOutcomes<(usize, usize)>> {
    let seeded = write_list(s, i, &[t.ys.as_slice(), &t.zs, &t.xs].concat()).next;
    let step = ipartl(&seeded, p, i, t.ys.len(), t.zs.len(), t.xs.len())?;
    Ok(ret(step.into_pair()))
}

/// `partl' p (ys, zs, xs) >>= write2L i`, run from `s`.
pub fn ipartl_spec(
    s: &ArrayState,
    p: &Elm,
    i: Index,
    ys: &[Elm],
    zs: &[Elm],
    xs: &[Elm],
) -> StateOutcomes<(usize, usize)> {
    let t = PartitionTriple::new(ys.to_vec(), zs.to_vec(), xs.to_vec());
    bind_state(
        &with_state(&partl_prime(p, &t), s),
        |PartitionPair { left, right }, s1| ret(write2_l(s1, i, (left, right)).into_pair()),
    )
}

/// `perm zs >>= λzs' → writeList i ([x] ++ zs')`.
pub fn perm_write_swap_lhs(s: &ArrayState, i: Index, x: &Elm, zs: &[Elm]) -> StateOutcomes<()> {
    bind_state(&with_state(&perm(zs), s), |zs1, s1| {
        ret(write_list(s1, i, &[std::slice::from_ref(x), zs1].concat()).into_pair())
    })
}

/// `writeList i (zs ++ [x]) >> swap i (i + #zs)`.
pub fn perm_write_swap_rhs(s: &ArrayState, i: Index, x: &Elm, zs: &[Elm]) -> StateOutcomes<()> {
    let written = write_list(s, i, &[zs, std::slice::from_ref(x)].concat()).next;
    let swapped = array_model::swap(&written, i, i + zs.len() as Index)
        .expect("both swapped cells were just written");
    ret(swapped.into_pair())
}

/// `perm ys >>= λys' → writeList i (ys' ++ [p])`.
pub fn perm_write_swap2_lhs(s: &ArrayState, i: Index, p: &Elm, ys: &[Elm]) -> StateOutcomes<()> {
    bind_state(&with_state(&perm(ys), s), |ys1, s1| {
        ret(write_list(s1, i, &[ys1.as_slice(), std::slice::from_ref(p)].concat()).into_pair())
    })
}

/// `writeList i ([p] ++ ys) >> swap i (i + #ys)`.
pub fn perm_write_swap2_rhs(s: &ArrayState, i: Index, p: &Elm, ys: &[Elm]) -> StateOutcomes<()> {
    let written = write_list(s, i, &[std::slice::from_ref(p), ys].concat()).next;
    let swapped = array_model::swap(&written, i, i + ys.len() as Index)
        .expect("both swapped cells were just written");
    ret(swapped.into_pair())
}

/// `writeList i xs >> iqsort i (#xs)`, run from `s`.
pub fn iqsort_after_write(s: &ArrayState, i: Index, xs: &[Elm]) -> Result<StateOutcomes<()>> {
    let seeded = write_list(s, i, xs).next;
    Ok(ret(iqsort(&seeded, i, xs.len())?.into_pair()))
}

/// `slowsort xs >>= writeList i`, run from `s`.
pub fn iqsort_spec(s: &ArrayState, i: Index, xs: &[Elm]) -> StateOutcomes<()> {
    bind_state(&with_state(&slowsort(xs), s), |ys, s1| {
        ret(write_list(s1, i, ys).into_pair())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array_model::{AuditedArray, DenseArray};
    use crate::effects::refines_state;
    use crate::listspec::{elms, keys};

    fn pivot(key: i64) -> Elm {
        Elm::new(key, 50)
    }

    #[test]
    fn ipartl_base_case_is_identity() {
        let s = ArrayState::from_list(0, &elms(&[3, 1]));
        let step = ipartl(&s, &pivot(2), 0, 1, 1, 0).unwrap();
        assert_eq!(step.result, (1, 1));
        assert_eq!(step.next, s);
    }

    #[test]
    fn ipartl_traces() {
        let xs = elms(&[1, 3]);
        let s = ArrayState::from_list(0, &xs);
        let step = ipartl(&s, &pivot(2), 0, 0, 0, 2).unwrap();
        assert_eq!(step.result, (1, 1));
        assert_eq!(step.next, s);

        let xs = elms(&[3, 1]);
        let step = ipartl(&ArrayState::from_list(0, &xs), &pivot(2), 0, 0, 0, 2).unwrap();
        assert_eq!(step.result, (1, 1));
        assert_eq!(step.next, ArrayState::from_list(0, &[xs[1], xs[0]]));
    }

    #[test]
    fn ipartl_spec_examples() {
        let s = ArrayState::from_list(10, &elms(&[7]));
        let ys = elms(&[1]);
        let zs = vec![Elm::new(5, 1)];
        let spec = ipartl_spec(&s, &pivot(2), 0, &ys, &zs, &[]);
        let expected = write_list(&s, 0, &[ys.clone(), zs.clone()].concat()).next;
        assert_eq!(spec, ret(((1, 1), expected)));

        let xs = elms(&[1, 3]);
        let spec = ipartl_spec(&ArrayState::new(), &pivot(2), 0, &[], &[], &xs);
        assert_eq!(spec, ret(((1, 1), ArrayState::from_list(0, &xs))));
        let spec = ipartl_spec(&ArrayState::new(), &pivot(2), 0, &[], &[xs[1]], &[xs[0]]);
        assert_eq!(spec, ret(((1, 1), ArrayState::from_list(0, &xs))));
    }

    #[test]
    fn swap_lemmas_small_cases() {
        let s = ArrayState::new();
        let x = Elm::new(4, 0);
        assert_eq!(
            perm_write_swap_lhs(&s, 0, &x, &[]),
            perm_write_swap_rhs(&s, 0, &x, &[])
        );
        assert_eq!(
            perm_write_swap_rhs(&s, 0, &x, &[]),
            ret(((), ArrayState::from_list(0, &[x])))
        );
        let b = Elm::new(1, 1);
        let rhs = perm_write_swap_rhs(&s, 0, &x, &[b]);
        assert_eq!(rhs, ret(((), ArrayState::from_list(0, &[x, b]))));
        assert!(refines_state(&rhs, &perm_write_swap_lhs(&s, 0, &x, &[b])));

        assert_eq!(
            perm_write_swap2_rhs(&s, 2, &x, &[]),
            perm_write_swap2_lhs(&s, 2, &x, &[])
        );
        let rhs = perm_write_swap2_rhs(&s, 0, &x, &[b]);
        assert_eq!(rhs, ret(((), ArrayState::from_list(0, &[b, x]))));
        assert!(refines_state(&rhs, &perm_write_swap2_lhs(&s, 0, &x, &[b])));
    }

    #[test]
    fn iqsort_examples() {
        let s = ArrayState::from_list(0, &elms(&[2, 1]));
        assert_eq!(iqsort(&s, 0, 0).unwrap().next, s);
        let sorted = iqsort(&s, 0, 2).unwrap().next;
        assert_eq!(keys(&sorted.segment(0, 2).unwrap()), vec![1, 2]);
        let s = ArrayState::from_list(0, &elms(&[3, 1, 2]));
        let sorted = iqsort(&s, 0, 3).unwrap().next;
        assert_eq!(keys(&sorted.segment(0, 3).unwrap()), vec![1, 2, 3]);
        assert!(matches!(
            iqsort(&ArrayState::new(), 0, 1),
            Err(crate::Error::UninitializedRead(0))
        ));
    }

    #[test]
    fn iqsort_spec_examples() {
        let s = ArrayState::new();
        assert_eq!(iqsort_spec(&s, 3, &[]), ret(((), s.clone())));
        let xs = elms(&[2, 1]);
        assert_eq!(
            iqsort_spec(&s, 0, &xs),
            ret(((), ArrayState::from_list(0, &[xs[1], xs[0]])))
        );
        let dup = vec![Elm::new(1, 0), Elm::new(1, 1)];
        assert_eq!(iqsort_spec(&s, 0, &dup).len(), 2);
    }

    #[test]
    fn iqsort_mutates_only_by_swapping() {
        let xs = elms(&[2, 0, 1, 2, 0]);
        let mut arr = AuditedArray::new(ArrayState::from_list(4, &xs));
        iqsort_on(&mut arr, 4, xs.len()).unwrap();
        assert_eq!(arr.direct_writes().count(), 0);
        assert_eq!(arr.first_access_outside(4, xs.len()), None);
    }

    #[test]
    fn dense_and_value_modes_agree() {
        let xs = elms(&[5, 3, 9, 3, 0, 1, 8]);
        let s = ArrayState::from_list(-1, &xs);
        let mut dense = DenseArray::from_state(&s);
        iqsort_on(&mut dense, -1, xs.len()).unwrap();
        assert_eq!(dense.to_state(), iqsort(&s, -1, xs.len()).unwrap().next);
    }
}
