//! The integer-indexed array state and its read/write family.
//!
//! [`ArrayState`] is a partial finite map: a cell is either written or
//! undefined, and reading an undefined cell is a hard error rather than a
//! default value. The free functions in this module are state transformers
//! over immutable states. Programs that should also run in place are
//! written against the [`MonadArr`] trait, which has three implementations:
//! the value model itself, an [`AuditedArray`] that records every access for
//! frame and mutation-discipline checks, and a [`DenseArray`] backed by a
//! vector for benchmarking.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::listspec::Elm;

pub type Index = i64;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrayState {
    cells: BTreeMap<Index, Elm>,
}

impl ArrayState {
    pub fn new() -> Self {
        Self::default()
    }

    /// A state holding `xs` from index `base` onwards.
    pub fn from_list(base: Index, xs: &[Elm]) -> Self {
        let mut s = Self::new();
        s.store_list(base, xs);
        s
    }

    pub fn get(&self, i: Index) -> Option<&Elm> {
        self.cells.get(&i)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Index, &Elm)> + '_ {
        self.cells.iter().map(|(i, x)| (*i, x))
    }

    /// Reads `n` cells starting at `base`.
    pub fn segment(&self, base: Index, n: usize) -> Result<Vec<Elm>> {
        (0..n as Index).map(|k| self.load(base + k)).collect()
    }

    fn load(&self, i: Index) -> Result<Elm> {
        self.cells
            .get(&i)
            .copied()
            .ok_or(Error::UninitializedRead(i))
    }

    fn store(&mut self, i: Index, x: Elm) {
        self.cells.insert(i, x);
    }

    fn store_list(&mut self, base: Index, xs: &[Elm]) {
        for (k, x) in xs.iter().enumerate() {
            self.store(base + k as Index, *x);
        }
    }
}

impl fmt::Debug for ArrayState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.cells.iter()).finish()
    }
}

/// Result of a deterministic state transformer: a value and the next state.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StateStep<T> {
    pub result: T,
    pub next: ArrayState,
}

impl<T> StateStep<T> {
    fn new(result: T, next: ArrayState) -> Self {
        StateStep { result, next }
    }

    pub fn into_pair(self) -> (T, ArrayState) {
        (self.result, self.next)
    }
}

pub fn read(s: &ArrayState, i: Index) -> Result<StateStep<Elm>> {
    Ok(StateStep::new(s.load(i)?, s.clone()))
}

pub fn write(s: &ArrayState, i: Index, x: Elm) -> StateStep<()> {
    let mut next = s.clone();
    next.store(i, x);
    StateStep::new((), next)
}

/// `readList i 0 = {[]}`, `readList i (1+k) = liftM2 (:) (read i) (readList (i+1) k)`.
pub fn read_list(s: &ArrayState, i: Index, n: usize) -> Result<StateStep<Vec<Elm>>> {
    if n == 0 {
        return Ok(StateStep::new(Vec::new(), s.clone()));
    }
    let head = read(s, i)?;
    let tail = read_list(&head.next, i + 1, n - 1)?;
    let mut xs = Vec::with_capacity(n);
    xs.push(head.result);
    xs.extend(tail.result);
    Ok(StateStep::new(xs, tail.next))
}

/// `writeList i [] = {()}`, `writeList i (x:xs) = write i x >> writeList (i+1) xs`.
pub fn write_list(s: &ArrayState, i: Index, xs: &[Elm]) -> StateStep<()> {
    match xs.split_first() {
        None => StateStep::new((), s.clone()),
        Some((x, rest)) => write_list(&write(s, i, *x).next, i + 1, rest),
    }
}

pub fn write_l(s: &ArrayState, i: Index, xs: &[Elm]) -> StateStep<usize> {
    let step = write_list(s, i, xs);
    StateStep::new(xs.len(), step.next)
}

pub fn write2_l(s: &ArrayState, i: Index, (xs, ys): (&[Elm], &[Elm])) -> StateStep<(usize, usize)> {
    let step = write_list(s, i, &[xs, ys].concat());
    StateStep::new((xs.len(), ys.len()), step.next)
}

pub fn write3_l(
    s: &ArrayState,
    i: Index,
    (xs, ys, zs): (&[Elm], &[Elm], &[Elm]),
) -> StateStep<(usize, usize, usize)> {
    let step = write_list(s, i, &[xs, ys, zs].concat());
    StateStep::new((xs.len(), ys.len(), zs.len()), step.next)
}

/// `swap i j = read i >>= λx → read j >>= λy → write i y >> write j x`.
pub fn swap(s: &ArrayState, i: Index, j: Index) -> Result<StateStep<()>> {
    let x = read(s, i)?;
    let y = read(&x.next, j)?;
    let s1 = write(&y.next, i, y.result).next;
    Ok(write(&s1, j, x.result))
}

/// Markers emitted by the derived array programs so that audits can check
/// recursion measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// One iteration of the partition loop with the remaining unprocessed
    /// length.
    PartitionStep {
        nx: usize,
    },
    SortEnter {
        i: Index,
        n: usize,
    },
    SortExit,
}

/// Array effect interface for programs that run in place.
pub trait MonadArr {
    fn read(&mut self, i: Index) -> Result<Elm>;

    fn write(&mut self, i: Index, x: Elm);

    fn swap(&mut self, i: Index, j: Index) -> Result<()> {
        let x = self.read(i)?;
        let y = self.read(j)?;
        self.write(i, y);
        self.write(j, x);
        Ok(())
    }

    fn trace(&mut self, _event: TraceEvent) {}
}

impl MonadArr for ArrayState {
    fn read(&mut self, i: Index) -> Result<Elm> {
        self.load(i)
    }

    fn write(&mut self, i: Index, x: Elm) {
        self.store(i, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Access {
    Read(Index),
    /// A write issued directly through `write`.
    Write(Index),
    /// A write performed as part of a `swap`.
    SwapWrite(Index),
}

impl Access {
    pub fn index(&self) -> Index {
        match *self {
            Access::Read(i) | Access::Write(i) | Access::SwapWrite(i) => i,
        }
    }
}

/// Value-semantics array that logs every access and trace event.
#[derive(Clone, Debug, Default)]
pub struct AuditedArray {
    state: ArrayState,
    accesses: Vec<Access>,
    events: Vec<TraceEvent>,
}

impl AuditedArray {
    pub fn new(state: ArrayState) -> Self {
        AuditedArray {
            state,
            ..Default::default()
        }
    }

    pub fn state(&self) -> &ArrayState {
        &self.state
    }

    pub fn into_state(self) -> ArrayState {
        self.state
    }

    pub fn accesses(&self) -> &[Access] {
        &self.accesses
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    /// Writes that did not come from a swap.
    pub fn direct_writes(&self) -> impl Iterator<Item = Index> + '_ {
        self.accesses.iter().filter_map(|a| match a {
            Access::Write(i) => Some(*i),
            _ => None,
        })
    }

    /// First access outside `[lo, lo + n)`, if any.
    pub fn first_access_outside(&self, lo: Index, n: usize) -> Option<Access> {
        let hi = lo + n as Index;
        self.accesses
            .iter()
            .copied()
            .find(|a| a.index() < lo || a.index() >= hi)
    }
}

impl MonadArr for AuditedArray {
    fn read(&mut self, i: Index) -> Result<Elm> {
        self.accesses.push(Access::Read(i));
        self.state.load(i)
    }

    fn write(&mut self, i: Index, x: Elm) {
        self.accesses.push(Access::Write(i));
        self.state.store(i, x);
    }

    fn swap(&mut self, i: Index, j: Index) -> Result<()> {
        let x = self.read(i)?;
        let y = self.read(j)?;
        self.accesses.push(Access::SwapWrite(i));
        self.state.store(i, y);
        self.accesses.push(Access::SwapWrite(j));
        self.state.store(j, x);
        Ok(())
    }

    fn trace(&mut self, event: TraceEvent) {
        self.events.push(event);
    }
}

/// Vector-backed array updated in place. Cells cover `[base, base + len)`
/// and grow on writes outside that window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseArray {
    base: Index,
    cells: Vec<Option<Elm>>,
}

impl DenseArray {
    pub fn from_list(base: Index, xs: &[Elm]) -> Self {
        DenseArray {
            base,
            cells: xs.iter().copied().map(Some).collect(),
        }
    }

    pub fn from_state(s: &ArrayState) -> Self {
        let mut cells = s.cells();
        let Some((base, first)) = cells.next() else {
            return DenseArray {
                base: 0,
                cells: Vec::new(),
            };
        };
        let mut dense = DenseArray::from_list(base, &[*first]);
        for (i, x) in cells {
            dense.write(i, *x);
        }
        dense
    }

    pub fn to_state(&self) -> ArrayState {
        let mut s = ArrayState::new();
        for (k, cell) in self.cells.iter().enumerate() {
            if let Some(x) = cell {
                s.store(self.base + k as Index, *x);
            }
        }
        s
    }

    fn slot(&self, i: Index) -> Option<usize> {
        let k = i.checked_sub(self.base)?;
        usize::try_from(k).ok().filter(|&k| k < self.cells.len())
    }
}

impl MonadArr for DenseArray {
    fn read(&mut self, i: Index) -> Result<Elm> {
        self.slot(i)
            .and_then(|k| self.cells[k])
            .ok_or(Error::UninitializedRead(i))
    }

    fn write(&mut self, i: Index, x: Elm) {
        if self.cells.is_empty() {
            self.base = i;
        }
        if i < self.base {
            let grow = (self.base - i) as usize;
            self.cells.splice(0..0, std::iter::repeat_n(None, grow));
            self.base = i;
        }
        let k = (i - self.base) as usize;
        if k >= self.cells.len() {
            self.cells.resize(k + 1, None);
        }
        self.cells[k] = Some(x);
    }

    fn swap(&mut self, i: Index, j: Index) -> Result<()> {
        let a = self.slot(i).filter(|&k| self.cells[k].is_some());
        let b = self.slot(j).filter(|&k| self.cells[k].is_some());
        match (a, b) {
            (Some(a), Some(b)) => {
                self.cells.swap(a, b);
                Ok(())
            }
            (None, _) => Err(Error::UninitializedRead(i)),
            (_, None) => Err(Error::UninitializedRead(j)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(key: i64, tag: u32) -> Elm {
        Elm::new(key, tag)
    }

    #[test]
    fn read_written_cell() {
        let (a, b) = (e(1, 0), e(2, 1));
        let s = ArrayState::from_list(0, &[a]);
        assert_eq!(read(&s, 0).unwrap(), StateStep::new(a, s.clone()));
        let s2 = write(&s, 0, b).next;
        assert_eq!(read(&s2, 0).unwrap(), StateStep::new(b, s2.clone()));
        assert_eq!(
            read(&ArrayState::new(), 5),
            Err(Error::UninitializedRead(5))
        );
    }

    #[test]
    fn write_overwrites_and_extends() {
        let (a, x, y) = (e(0, 0), e(1, 1), e(2, 2));
        assert_eq!(
            write(&ArrayState::new(), 0, a).next,
            ArrayState::from_list(0, &[a])
        );
        let s = write(&write(&ArrayState::new(), 3, x).next, 3, y).next;
        assert_eq!(s.get(3), Some(&y));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn read_list_unfolds() {
        let (a, b) = (e(1, 0), e(2, 1));
        let s = ArrayState::from_list(0, &[a, b]);
        assert_eq!(read_list(&s, 7, 0).unwrap().result, Vec::<Elm>::new());
        let step = read_list(&s, 0, 2).unwrap();
        assert_eq!(step.result, vec![a, b]);
        assert_eq!(step.next, s);
        let short = ArrayState::from_list(0, &[a]);
        assert_eq!(read_list(&short, 0, 2), Err(Error::UninitializedRead(1)));
    }

    #[test]
    fn write_list_family() {
        let (a, b, c, z) = (e(1, 0), e(2, 1), e(3, 2), e(9, 3));
        let s = ArrayState::from_list(0, &[z]);
        assert_eq!(write_list(&s, 4, &[]).next, s);
        assert_eq!(
            write_list(&ArrayState::new(), 0, &[a, b]).next,
            ArrayState::from_list(0, &[a, b])
        );
        assert_eq!(
            write_list(&s, 1, &[a]).next,
            ArrayState::from_list(0, &[z, a])
        );

        let step = write2_l(&ArrayState::new(), 4, (&[a], &[b, c]));
        assert_eq!(step.result, (1, 2));
        assert_eq!(step.next, ArrayState::from_list(4, &[a, b, c]));
        let step = write3_l(&s, 2, (&[], &[], &[]));
        assert_eq!(step, StateStep::new((0, 0, 0), s.clone()));
        let step = write_l(&ArrayState::new(), 0, &[a, b]);
        assert_eq!(step.result, 2);
        assert_eq!(step.next, ArrayState::from_list(0, &[a, b]));
    }

    #[test]
    fn swap_exchanges_cells() {
        let (a, b) = (e(1, 0), e(2, 1));
        let s = ArrayState::from_list(0, &[a, b]);
        let swapped = swap(&s, 0, 1).unwrap().next;
        assert_eq!(swapped, ArrayState::from_list(0, &[b, a]));
        assert_eq!(swap(&s, 1, 1).unwrap().next, s);
        assert_eq!(swap(&swapped, 0, 1).unwrap().next, s);
        assert_eq!(swap(&s, 0, 2), Err(Error::UninitializedRead(2)));
    }

    #[test]
    fn audit_separates_swap_writes() {
        let mut arr = AuditedArray::new(ArrayState::from_list(0, &[e(1, 0), e(2, 1)]));
        arr.swap(0, 1).unwrap();
        assert_eq!(arr.direct_writes().count(), 0);
        MonadArr::write(&mut arr, 5, e(0, 9));
        assert_eq!(arr.direct_writes().collect::<Vec<_>>(), vec![5]);
        assert_eq!(arr.first_access_outside(0, 2), Some(Access::Write(5)));
    }

    #[test]
    fn dense_array_round_trips_sparse_states() {
        let s = ArrayState::from_list(-2, &[e(1, 0)]);
        let s = write(&s, 3, e(2, 1)).next;
        let mut dense = DenseArray::from_state(&s);
        assert_eq!(dense.to_state(), s);
        assert_eq!(dense.read(0), Err(Error::UninitializedRead(0)));
        assert_eq!(dense.swap(-2, 0), Err(Error::UninitializedRead(0)));
        dense.swap(-2, 3).unwrap();
        assert_eq!(dense.to_state(), swap(&s, -2, 3).unwrap().next);
        MonadArr::write(&mut dense, -5, e(7, 7));
        assert_eq!(dense.to_state().get(-5), Some(&e(7, 7)));
    }
}
