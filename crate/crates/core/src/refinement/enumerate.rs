//! Exhaustive input generators. Every generator is deterministic and yields
//! smaller inputs first.

use crate::array_model::{ArrayState, Index};
use crate::effects::{KleisliTable, Outcomes};
use crate::listspec::{Elm, ElmList};
use crate::quicksort_list::PartitionTriple;

/// Tag given to pivots drawn from the alphabet, distinct from any
/// per-position tag of an enumerated list.
pub const PIVOT_TAG: u32 = 1_000;

/// All key sequences of length `n` over `[0, alphabet)`, in lexicographic
/// order.
pub fn key_sequences(alphabet: usize, n: usize) -> impl Iterator<Item = Vec<i64>> {
    let total = (alphabet as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    (0..total).map(move |mut code| {
        let mut keys = vec![0; n];
        for slot in keys.iter_mut().rev() {
            *slot = (code % alphabet as u64) as i64;
            code /= alphabet as u64;
        }
        keys
    })
}

fn tagged(keys: &[i64], first_tag: u32) -> ElmList {
    keys.iter()
        .enumerate()
        .map(|(k, &key)| Elm::new(key, first_tag + k as u32))
        .collect()
}

/// All lists of length exactly `n` with keys in `[0, alphabet)` and tags
/// `0..n` by position.
pub fn lists_of_len(alphabet: usize, n: usize) -> impl Iterator<Item = ElmList> {
    key_sequences(alphabet, n).map(|keys| tagged(&keys, 0))
}

/// All lists of length `0..=max_len`, shortest first. Duplicate keys occur;
/// tags keep every element distinct.
pub fn enumerate_lists(alphabet: usize, max_len: usize) -> impl Iterator<Item = ElmList> {
    assert!(alphabet >= 1, "alphabet must contain at least one key");
    (0..=max_len).flat_map(move |n| lists_of_len(alphabet, n))
}

/// Every list of total length `0..=max_total` cut into two consecutive
/// pieces.
pub fn enumerate_pairs(
    alphabet: usize,
    max_total: usize,
) -> impl Iterator<Item = (ElmList, ElmList)> {
    enumerate_lists(alphabet, max_total)
        .flat_map(|l| (0..=l.len()).map(move |a| (l[..a].to_vec(), l[a..].to_vec())))
}

/// Every list of total length `0..=max_total` cut into three consecutive
/// pieces `(ys, zs, xs)`.
pub fn enumerate_triples(
    alphabet: usize,
    max_total: usize,
) -> impl Iterator<Item = PartitionTriple> {
    enumerate_lists(alphabet, max_total).flat_map(|l| {
        let n = l.len();
        (0..=n)
            .flat_map(move |a| (a..=n).map(move |b| (a, b)))
            .map(move |(a, b)| {
                PartitionTriple::new(l[..a].to_vec(), l[a..b].to_vec(), l[b..].to_vec())
            })
    })
}

/// One pivot per key of the alphabet.
pub fn pivots(alphabet: usize) -> Vec<Elm> {
    (0..alphabet as i64)
        .map(|k| Elm::new(k, PIVOT_TAG))
        .collect()
}

/// Element values used to fill array cells: one per key.
pub fn cell_values(alphabet: usize) -> Vec<Elm> {
    (0..alphabet as i64)
        .map(|k| Elm::new(k, k as u32))
        .collect()
}

/// All subsets of `universe`, ordered by bitmask.
pub fn subsets<T: Ord + Clone>(universe: &[T]) -> Vec<Outcomes<T>> {
    assert!(universe.len() < 20, "universe too large to enumerate");
    (0u32..1 << universe.len())
        .map(|mask| {
            universe
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// All Kleisli tables from `domain` into subsets of `universe`.
pub fn tables<A: Ord + Clone, B: Ord + Clone>(
    domain: &[A],
    universe: &[B],
) -> Vec<KleisliTable<A, B>> {
    let choices = subsets(universe);
    let mut out = vec![Vec::new()];
    for x in domain {
        out = out
            .into_iter()
            .flat_map(|rows: Vec<(A, Outcomes<B>)>| {
                choices.iter().map(move |m| {
                    let mut rows = rows.clone();
                    rows.push((x.clone(), m.clone()));
                    rows
                })
            })
            .collect();
    }
    out.into_iter().map(KleisliTable::from_rows).collect()
}

/// All partial array states over `indices`, each cell either absent or
/// holding one of `values`.
pub fn states(indices: &[Index], values: &[Elm]) -> Vec<ArrayState> {
    let mut out = vec![ArrayState::new()];
    for &i in indices {
        out = out
            .into_iter()
            .flat_map(|s| {
                let mut next = vec![s.clone()];
                next.extend(
                    values
                        .iter()
                        .map(|x| crate::array_model::write(&s, i, *x).next),
                );
                next
            })
            .collect();
    }
    out
}

/// Number of lists [`enumerate_lists`] yields.
pub fn count_lists(alphabet: usize, max_len: usize) -> u64 {
    (0..=max_len as u32).map(|n| (alphabet as u64).pow(n)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_enumeration_examples() {
        assert_eq!(
            enumerate_lists(1, 0).collect::<Vec<_>>(),
            vec![Vec::<Elm>::new()]
        );
        let two: Vec<_> = enumerate_lists(2, 1).collect();
        assert_eq!(
            two,
            vec![vec![], vec![Elm::new(0, 0)], vec![Elm::new(1, 0)]]
        );
        let mut counted = 0u64;
        for n in 0..=3 {
            counted += 3u64.pow(n);
        }
        assert_eq!(counted, 40);
        assert_eq!(enumerate_lists(3, 3).count() as u64, counted);
        assert_eq!(count_lists(3, 3), 40);
    }

    #[test]
    fn lists_are_shortest_first_with_positional_tags() {
        let lists: Vec<_> = enumerate_lists(3, 4).collect();
        assert!(lists.windows(2).all(|w| w[0].len() <= w[1].len()));
        for l in &lists {
            assert!(l.iter().enumerate().all(|(k, x)| x.tag == k as u32));
        }
        assert!(lists.iter().any(|l| l.len() == 2 && l[0].key == l[1].key));
    }

    #[test]
    fn triple_and_pair_counts() {
        // A list of length n has n + 1 two-way and (n+1)(n+2)/2 three-way cuts.
        let pairs: u64 = (0..=3u64).map(|n| 2u64.pow(n as u32) * (n + 1)).sum();
        assert_eq!(enumerate_pairs(2, 3).count() as u64, pairs);
        let triples: u64 = (0..=3u64)
            .map(|n| 2u64.pow(n as u32) * (n + 1) * (n + 2) / 2)
            .sum();
        assert_eq!(enumerate_triples(2, 3).count() as u64, triples);
    }

    #[test]
    fn subsets_tables_states() {
        assert_eq!(subsets(&[1, 2, 3]).len(), 8);
        assert_eq!(tables(&[0, 1], &['a', 'b']).len(), 16);
        assert_eq!(tables::<u8, u8>(&[], &[1]).len(), 1);
        let s = states(&[0, 1], &cell_values(2));
        assert_eq!(s.len(), 9);
        assert!(s.contains(&ArrayState::new()));
    }
}
