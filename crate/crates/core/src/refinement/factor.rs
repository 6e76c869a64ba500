//! Left factors of Kleisli arrows over finite domains.
//!
//! `f \ h` is the greatest `g` with `f >=> g ⊆̇ h`. Pointwise, `(f \ h) b`
//! is the intersection of `h x` over every `x` whose `f x` can produce `b`;
//! a `b` that no `x` reaches is unconstrained.

use std::collections::BTreeMap;

use crate::effects::{KleisliTable, Outcomes};
use crate::error::Result;

/// A left factor computed over the reachable part of the middle type.
/// Points absent from the map are unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor<B: Ord, C: Ord> {
    constrained: BTreeMap<B, Outcomes<C>>,
}

impl<B: Ord + Clone, C: Ord + Clone> Factor<B, C> {
    pub fn compute<A>(
        domain: impl IntoIterator<Item = A>,
        f: impl Fn(&A) -> Outcomes<B>,
        h: impl Fn(&A) -> Outcomes<C>,
    ) -> Self {
        let mut constrained: BTreeMap<B, Outcomes<C>> = BTreeMap::new();
        for x in domain {
            let hx = h(&x);
            for b in f(&x) {
                match constrained.get_mut(&b) {
                    Some(acc) => *acc = acc.intersection(&hx),
                    None => {
                        constrained.insert(b, hx.clone());
                    }
                }
            }
        }
        Factor { constrained }
    }

    /// `None` when `b` is unconstrained.
    pub fn at(&self, b: &B) -> Option<&Outcomes<C>> {
        self.constrained.get(b)
    }

    pub fn admits(&self, b: &B, c: &C) -> bool {
        self.at(b).is_none_or(|allowed| allowed.contains(c))
    }

    /// Points that some argument of `f` reaches.
    pub fn reachable(&self) -> impl Iterator<Item = (&B, &Outcomes<C>)> + '_ {
        self.constrained.iter()
    }

    /// Materialises the factor over explicit universes.
    pub fn to_table(&self, b_universe: &[B], c_universe: &[C]) -> KleisliTable<B, C> {
        let everything: Outcomes<C> = c_universe.iter().cloned().collect();
        KleisliTable::tabulate(b_universe.to_vec(), |b| match self.at(b) {
            Some(allowed) => allowed.intersection(&everything),
            None => everything.clone(),
        })
    }
}

/// `f \ h` tabulated over `b_universe`, with outcomes drawn from
/// `c_universe`.
pub fn left_factor<A, B, C>(
    f: &KleisliTable<A, B>,
    h: &KleisliTable<A, C>,
    b_universe: &[B],
    c_universe: &[C],
) -> Result<KleisliTable<B, C>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    for x in f.domain() {
        h.apply(x)?;
    }
    let factor = Factor::compute(f.domain().iter().cloned(), |x| f.at(x), |x| h.at(x));
    Ok(factor.to_table(b_universe, c_universe))
}

/// Whether `f >=> g ⊆̇ h` and `g ⊆̇ f \ h` agree for this triple.
pub fn check_galois<A, B, C>(
    f: &KleisliTable<A, B>,
    g: &KleisliTable<B, C>,
    h: &KleisliTable<A, C>,
    b_universe: &[B],
    c_universe: &[C],
) -> Result<bool>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let factor = left_factor(f, h, b_universe, c_universe)?;
    let composed_refines = f.then(g)?.refines(h);
    let below_factor = g.refines(&factor);
    Ok(composed_refines == below_factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effects::ret;
    use crate::refinement::enumerate::{subsets, tables};

    fn set(xs: &[u8]) -> Outcomes<u8> {
        xs.iter().copied().collect()
    }

    #[test]
    fn factor_of_return_is_h() {
        let dom = [0u8, 1, 2];
        let f = KleisliTable::tabulate(dom.to_vec(), |x| ret(*x));
        let h = KleisliTable::from_rows(vec![(0, set(&[1])), (1, set(&[0, 2])), (2, set(&[]))]);
        assert_eq!(left_factor(&f, &h, &dom, &dom).unwrap(), h);
    }

    #[test]
    fn unreachable_points_are_unconstrained() {
        let f = KleisliTable::from_rows(vec![(0u8, set(&[0]))]);
        let h = KleisliTable::from_rows(vec![(0u8, set(&[1]))]);
        let factor = left_factor(&f, &h, &[0, 1], &[0, 1, 2]).unwrap();
        assert_eq!(factor.at(&1), set(&[0, 1, 2]));
        assert_eq!(factor.at(&0), set(&[1]));
    }

    #[test]
    fn hand_picked_factor_is_lawful_and_greatest() {
        // f 0 = {0, 1}, f 1 = {1}; h 0 = {0, 1}, h 1 = {1}.
        let f = KleisliTable::from_rows(vec![(0u8, set(&[0, 1])), (1, set(&[1]))]);
        let h = KleisliTable::from_rows(vec![(0u8, set(&[0, 1])), (1, set(&[1]))]);
        let universe = [0u8, 1];
        let factor = left_factor(&f, &h, &universe, &universe).unwrap();
        assert_eq!(factor.at(&0), set(&[0, 1]));
        assert_eq!(factor.at(&1), set(&[1]));
        assert!(f.then(&factor).unwrap().refines(&h));
        // Brute force over all 2^(|B|·|C|) candidates: every lawful g sits
        // below the factor.
        let lawful: Vec<_> = tables(&universe, &universe)
            .into_iter()
            .filter(|g| f.then(g).unwrap().refines(&h))
            .collect();
        assert!(lawful.contains(&factor));
        assert!(lawful.iter().all(|g| g.refines(&factor)));
    }

    #[test]
    fn galois_on_factor_and_above_it() {
        let f = KleisliTable::from_rows(vec![(0u8, set(&[0])), (1, set(&[0, 1]))]);
        let h = KleisliTable::from_rows(vec![(0u8, set(&[2])), (1, set(&[1, 2]))]);
        let universe = [0u8, 1, 2];
        let factor = left_factor(&f, &h, &universe[..2], &universe).unwrap();
        assert!(check_galois(&f, &factor, &h, &universe[..2], &universe).unwrap());
        assert!(f.then(&factor).unwrap().refines(&h));

        let mut rows: Vec<_> = factor.domain().iter().map(|b| (*b, factor.at(b))).collect();
        rows[0].1.insert(0);
        let above = KleisliTable::from_rows(rows);
        assert!(check_galois(&f, &above, &h, &universe[..2], &universe).unwrap());
        assert!(!f.then(&above).unwrap().refines(&h));
        assert!(!above.refines(&factor));
    }

    #[test]
    fn mismatched_domains_are_rejected() {
        let f = KleisliTable::from_rows(vec![(0u8, set(&[0])), (1, set(&[0]))]);
        let h = KleisliTable::from_rows(vec![(0u8, set(&[0]))]);
        assert!(left_factor(&f, &h, &[0], &[0]).is_err());
        assert_eq!(subsets(&[0u8]).len(), 2);
    }
}
