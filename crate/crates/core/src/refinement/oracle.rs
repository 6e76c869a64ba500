//! Reference computations that do not go through the monadic definitions.

use crate::effects::Outcomes;
use crate::listspec::{Elm, ElmList};

/// All permutations of `xs` by Heap's algorithm.
pub fn permutations<T: Ord + Clone>(xs: &[T]) -> Outcomes<Vec<T>> {
    fn heap<T: Ord + Clone>(k: usize, a: &mut Vec<T>, out: &mut Outcomes<Vec<T>>) {
        if k <= 1 {
            out.insert(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut out = Outcomes::empty();
    heap(xs.len(), &mut xs.to_vec(), &mut out);
    out
}

/// The permutations of `xs` whose keys never decrease, via windows.
pub fn sorted_permutations(xs: &[Elm]) -> Outcomes<ElmList> {
    permutations(xs)
        .into_iter()
        .filter(|ys| ys.windows(2).all(|w| w[0].key <= w[1].key))
        .collect()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listspec::elms;

    #[test]
    fn counts() {
        for n in 0..=6 {
            let xs = elms(&vec![0; n]);
            assert_eq!(permutations(&xs).len(), factorial(n));
            // All keys equal: every permutation is sorted.
            assert_eq!(sorted_permutations(&xs).len(), factorial(n));
        }
        assert_eq!(sorted_permutations(&elms(&[2, 0, 1])).len(), 1);
    }
}
