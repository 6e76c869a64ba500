//! Bodies of the registered obligations.

use super::enumerate::{
    cell_values, enumerate_lists, enumerate_pairs, enumerate_triples, pivots, states, subsets,
    tables,
};
use super::factor::{left_factor, Factor};
use super::oracle;
use super::{Bounds, Collector, Ctx, Kind, Obligation, RunOptions, Scale, Verdict};
use crate::array_model::{
    self, read_list, write, write3_l, write_l, write_list, ArrayState, AuditedArray, DenseArray,
    Index, TraceEvent,
};
use crate::effects::{
    bind_state, guard, mzero, ret, with_state, KleisliTable, Outcomes, StateOutcomes,
};
use crate::listspec::{
    is_rearrangement, keys, perm, perm_insert, perm_split, slowsort, sorted, sorted_cat3, Elm,
    ElmList,
};
use crate::quicksort_array::{
    perm_write_swap2_lhs, perm_write_swap2_rhs, perm_write_swap_lhs, perm_write_swap_rhs,
};
use crate::quicksort_list::{
    dispatch, partition_spec, partl_prime, partl_prime_branching, partl_tail, second_perm,
    slowsort_divided, PartitionPair, PartitionTriple,
};

/// Largest number of law instances enumerated for one universe shape.
const SHAPE_BUDGET: u64 = 1 << 22;

/// Base indices for array obligations, including a negative one.
const BASES: [Index; 3] = [-1, 0, 3];

/// Sentinel cells bordering a segment. Their keys lie outside every
/// enumerated alphabet: a large key on the left and a small one on the
/// right, so a partition that wanders past either border moves them.
const LEFT_SENTINEL: Elm = Elm::new(100, 2_000);
const RIGHT_SENTINEL: Elm = Elm::new(-100, 2_001);

const fn ob(
    name: &'static str,
    law: &'static str,
    kind: Kind,
    max_len: usize,
    alphabet: usize,
    scale: Scale,
    check: fn(&Ctx, &mut Collector),
) -> Obligation {
    Obligation {
        name,
        law,
        kind,
        bounds: Bounds { max_len, alphabet },
        scale,
        check,
    }
}

use Kind::{Equality, RefinementPure, RefinementState};
use Scale::{ListLength, Universe};

pub(super) const REGISTRY: &[Obligation] = &[
    ob(
        "monad-left-identity",
        "monad-laws",
        Equality,
        4,
        4,
        Universe,
        monad_left_identity,
    ),
    ob(
        "monad-right-identity",
        "monad-laws",
        Equality,
        4,
        4,
        Universe,
        monad_right_identity,
    ),
    ob(
        "monad-associativity",
        "monad-laws",
        Equality,
        4,
        4,
        Universe,
        monad_associativity,
    ),
    ob(
        "choice-monoid",
        "choice-monoid",
        Equality,
        4,
        0,
        Universe,
        choice_monoid,
    ),
    ob(
        "choice-idempotent-commutative",
        "choice-idempotent-commutative",
        Equality,
        4,
        0,
        Universe,
        choice_idem_comm,
    ),
    ob(
        "nd-left-zero",
        "nd-left-zero",
        Equality,
        4,
        4,
        Universe,
        nd_left_zero,
    ),
    ob(
        "nd-right-zero",
        "nd-right-zero",
        Equality,
        4,
        0,
        Universe,
        nd_right_zero,
    ),
    ob(
        "nd-left-distributivity",
        "nd-left-distributivity",
        Equality,
        4,
        4,
        Universe,
        nd_left_distributivity,
    ),
    ob(
        "nd-right-distributivity",
        "nd-right-distributivity",
        Equality,
        4,
        4,
        Universe,
        nd_right_distributivity,
    ),
    ob(
        "refinement-definition",
        "refinement-definition",
        Equality,
        4,
        0,
        Universe,
        refinement_definition,
    ),
    ob(
        "refinement-partial-order",
        "refinement-partial-order",
        RefinementPure,
        4,
        0,
        Universe,
        refinement_partial_order,
    ),
    ob(
        "refinement-existential",
        "refinement-existential",
        Equality,
        4,
        0,
        Universe,
        refinement_existential,
    ),
    ob(
        "bind-monotonic",
        "bind-monotonic",
        RefinementPure,
        4,
        4,
        Universe,
        bind_monotonic,
    ),
    ob(
        "guard-commutes",
        "guard-commutes",
        Equality,
        4,
        4,
        Universe,
        guard_commutes,
    ),
    ob(
        "guard-conjunction",
        "guard-conjunction",
        Equality,
        0,
        0,
        Universe,
        guard_conjunction,
    ),
    ob(
        "guard-if",
        "guard-if",
        RefinementPure,
        4,
        0,
        Universe,
        guard_if,
    ),
    ob(
        "sorted-cat3",
        "sorted-cat3",
        Equality,
        6,
        3,
        ListLength,
        sorted_cat3_equivalence,
    ),
    ob(
        "perm-definitions-agree",
        "perm-equivalence",
        Equality,
        6,
        3,
        ListLength,
        perm_definitions_agree,
    ),
    ob(
        "perm-matches-oracle",
        "perm-permutes",
        Equality,
        6,
        3,
        ListLength,
        perm_matches_oracle,
    ),
    ob(
        "perm-kleisli-idempotent",
        "perm-idempotent",
        Equality,
        5,
        3,
        ListLength,
        perm_kleisli_idempotent,
    ),
    ob(
        "perm-absorbs-slowsort",
        "perm-idempotent",
        Equality,
        5,
        3,
        ListLength,
        perm_absorbs_slowsort,
    ),
    ob(
        "length-preserving",
        "length-preserving",
        Equality,
        5,
        3,
        ListLength,
        length_preserving,
    ),
    ob(
        "slowsort-oracle",
        "slowsort-sorts",
        Equality,
        6,
        3,
        ListLength,
        slowsort_oracle,
    ),
    ob(
        "partition-refines-spec",
        "partition-refinement",
        RefinementPure,
        6,
        3,
        ListLength,
        partition_refines_spec,
    ),
    ob(
        "divide-and-conquer",
        "divide-and-conquer",
        RefinementPure,
        5,
        3,
        ListLength,
        divide_and_conquer,
    ),
    ob(
        "qsort-refines-slowsort",
        "qsort-refinement",
        RefinementPure,
        7,
        3,
        ListLength,
        qsort_refines_slowsort,
    ),
    ob(
        "partition-measure",
        "qsort-termination",
        Equality,
        7,
        3,
        ListLength,
        partition_measure,
    ),
    ob(
        "partl-agreement",
        "partl-tail-recursion",
        Equality,
        6,
        3,
        ListLength,
        partl_agreement,
    ),
    ob(
        "partl-prime-refactoring",
        "partl-prime-refactoring",
        Equality,
        5,
        3,
        ListLength,
        partl_prime_refactoring,
    ),
    ob(
        "partl-prime-refines",
        "partl-prime-refinement",
        RefinementPure,
        5,
        3,
        ListLength,
        partl_prime_refines,
    ),
    ob(
        "array-read-write",
        "array-read-write",
        Equality,
        4,
        3,
        Universe,
        array_read_write,
    ),
    ob(
        "array-write-read",
        "array-write-read",
        Equality,
        4,
        3,
        Universe,
        array_write_read,
    ),
    ob(
        "array-write-write",
        "array-write-write",
        Equality,
        4,
        3,
        Universe,
        array_write_write,
    ),
    ob(
        "array-read-read",
        "array-read-read",
        Equality,
        4,
        3,
        Universe,
        array_read_read,
    ),
    ob(
        "array-commutation",
        "array-commutation",
        Equality,
        4,
        3,
        Universe,
        array_commutation,
    ),
    ob(
        "writelist-append",
        "writelist-append",
        Equality,
        5,
        3,
        ListLength,
        writelist_append,
    ),
    ob(
        "writelist-readlist",
        "writelist-readlist",
        Equality,
        5,
        3,
        ListLength,
        writelist_readlist,
    ),
    ob(
        "perm-write-swap",
        "perm-write-swap",
        RefinementState,
        4,
        3,
        ListLength,
        perm_write_swap,
    ),
    ob(
        "perm-write-swap-dual",
        "perm-write-swap-dual",
        RefinementState,
        4,
        3,
        ListLength,
        perm_write_swap_dual,
    ),
    ob(
        "ipartl-refines-spec",
        "ipartl-refinement",
        RefinementState,
        5,
        3,
        ListLength,
        ipartl_refines_spec,
    ),
    ob(
        "ipartl-swap-only",
        "swap-only-mutation",
        Equality,
        5,
        3,
        ListLength,
        ipartl_swap_only,
    ),
    ob(
        "iqsort-refines-spec",
        "iqsort-refinement",
        RefinementState,
        6,
        3,
        ListLength,
        iqsort_refines_spec,
    ),
    ob(
        "iqsort-swap-only",
        "swap-only-mutation",
        Equality,
        6,
        3,
        ListLength,
        iqsort_swap_only,
    ),
    ob(
        "sort-modes-agree",
        "sort-modes-agree",
        Equality,
        7,
        3,
        ListLength,
        sort_modes_agree,
    ),
    ob(
        "dense-mode-equivalence",
        "sort-modes-agree",
        Equality,
        7,
        3,
        ListLength,
        dense_mode_equivalence,
    ),
    ob(
        "galois-connection",
        "left-factor-galois",
        Equality,
        3,
        2,
        Universe,
        galois_connection,
    ),
    ob(
        "left-factor-maximality",
        "left-factor-greatest",
        Equality,
        3,
        2,
        Universe,
        left_factor_maximality,
    ),
    ob(
        "factor-specs",
        "factor-specs",
        RefinementState,
        3,
        3,
        ListLength,
        factor_specs,
    ),
];

/// Runs the factor-form specifications of both array programs at their
/// default scale.
pub fn conclusion_specs_check() -> Verdict {
    REGISTRY
        .iter()
        .find(|o| o.name == "factor-specs")
        .expect("factor-specs is registered")
        .run(&RunOptions::default())
}

fn universe(n: usize) -> Vec<u8> {
    (0..n as u8).collect()
}

fn pow2(bits: usize) -> u64 {
    1u64.checked_shl(bits as u32).unwrap_or(u64::MAX)
}

// ---------------------------------------------------------------------------
// Monad and nondeterminism laws. For these `alphabet` bounds the size of the
// tabulated domains and `max_len` the size of outcome universes.

fn monad_left_identity(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            if pow2(a * b) > SHAPE_BUDGET {
                continue;
            }
            let (da, ub) = (universe(a), universe(b));
            for f in tables(&da, &ub) {
                for x in &da {
                    c.equal(
                        a + b,
                        || format!("x={x} f={f:?}"),
                        &f.at(x),
                        &ret(*x).bind(|y| f.at(y)),
                    );
                }
            }
        }
    }
}

fn monad_right_identity(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len.max(ctx.bounds.alphabet) {
        for m in subsets(&universe(n)) {
            c.equal(n, || format!("m={m:?}"), &m, &m.bind(|x| ret(*x)));
        }
    }
}

fn monad_associativity(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            for cc in 0..=nu {
                let cost = pow2(a + a * b + b * cc);
                if cost > SHAPE_BUDGET {
                    continue;
                }
                let (da, ub, uc) = (universe(a), universe(b), universe(cc));
                let (ms, fs, gs) = (subsets(&da), tables(&da, &ub), tables(&ub, &uc));
                for f in &fs {
                    for g in &gs {
                        for m in &ms {
                            let lhs = m.bind(|x| f.at(x)).bind(|y| g.at(y));
                            let rhs = m.bind(|x| f.at(x).bind(|y| g.at(y)));
                            c.equal(
                                a + b + cc,
                                || format!("m={m:?} f={f:?} g={g:?}"),
                                &rhs,
                                &lhs,
                            );
                        }
                    }
                }
            }
        }
    }
}

fn choice_monoid(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m1 in &ms {
            c.equal(n, || format!("m={m1:?}"), m1, &mzero().mplus(m1));
            c.equal(n, || format!("m={m1:?}"), m1, &m1.mplus(&mzero()));
            for m2 in &ms {
                for m3 in &ms {
                    c.equal(
                        n,
                        || format!("m1={m1:?} m2={m2:?} m3={m3:?}"),
                        &m1.mplus(&m2.mplus(m3)),
                        &m1.mplus(m2).mplus(m3),
                    );
                }
            }
        }
    }
}

fn choice_idem_comm(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m in &ms {
            c.equal(n, || format!("m={m:?}"), m, &m.mplus(m));
            for k in &ms {
                c.equal(n, || format!("m={m:?} n={k:?}"), &k.mplus(m), &m.mplus(k));
            }
        }
    }
}

fn nd_left_zero(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            if pow2(a * b) > SHAPE_BUDGET {
                continue;
            }
            for f in tables(&universe(a), &universe(b)) {
                c.equal(
                    a + b,
                    || format!("f={f:?}"),
                    &mzero(),
                    &mzero::<u8>().bind(|x| f.at(x)),
                );
            }
        }
    }
}

fn nd_right_zero(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        for m in subsets(&universe(n)) {
            c.equal(n, || format!("m={m:?}"), &mzero(), &m.then(&mzero::<u8>()));
        }
    }
}

fn nd_left_distributivity(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            if pow2(2 * a + a * b) > SHAPE_BUDGET {
                continue;
            }
            let (da, ub) = (universe(a), universe(b));
            let ms = subsets(&da);
            for f in tables(&da, &ub) {
                for m1 in &ms {
                    for m2 in &ms {
                        let lhs = m1.mplus(m2).bind(|x| f.at(x));
                        let rhs = m1.bind(|x| f.at(x)).mplus(&m2.bind(|x| f.at(x)));
                        c.equal(a + b, || format!("m1={m1:?} m2={m2:?} f={f:?}"), &rhs, &lhs);
                    }
                }
            }
        }
    }
}

fn nd_right_distributivity(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            if pow2(a + 2 * a * b) > SHAPE_BUDGET {
                continue;
            }
            let (da, ub) = (universe(a), universe(b));
            let ms = subsets(&da);
            let fs = tables(&da, &ub);
            for f1 in &fs {
                for f2 in &fs {
                    for m in &ms {
                        let lhs = m.bind(|x| f1.at(x).mplus(&f2.at(x)));
                        let rhs = m.bind(|x| f1.at(x)).mplus(&m.bind(|x| f2.at(x)));
                        c.equal(a + b, || format!("m={m:?} f1={f1:?} f2={f2:?}"), &rhs, &lhs);
                    }
                }
            }
        }
    }
}

fn refinement_definition(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m1 in &ms {
            for m2 in &ms {
                c.equal(
                    n,
                    || format!("m1={m1:?} m2={m2:?}"),
                    &m1.refines_by_choice(m2),
                    &m1.refines(m2),
                );
            }
        }
    }
}

fn refinement_partial_order(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m in &ms {
            c.case(n, m.refines(m), || {
                (format!("m={m:?}"), "m ⊆ m".into(), "not reflexive".into())
            });
            for k in &ms {
                let antisym = !(m.refines(k) && k.refines(m)) || m == k;
                c.case(n, antisym, || {
                    (format!("m={m:?} n={k:?}"), "m = n".into(), "m ≠ n".into())
                });
                for o in &ms {
                    let trans = !(m.refines(k) && k.refines(o)) || m.refines(o);
                    c.case(n, trans, || {
                        (
                            format!("m={m:?} n={k:?} o={o:?}"),
                            "m ⊆ o".into(),
                            "not transitive".into(),
                        )
                    });
                }
            }
        }
    }
}

fn refinement_existential(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m1 in &ms {
            for m2 in &ms {
                let witness = ms.iter().any(|k| m1.mplus(k) == *m2);
                c.equal(
                    n,
                    || format!("m1={m1:?} m2={m2:?}"),
                    &witness,
                    &m1.refines(m2),
                );
            }
        }
    }
}

fn bind_monotonic(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            let (da, ub) = (universe(a), universe(b));
            if pow2(2 * a + a * b) <= SHAPE_BUDGET {
                let ms = subsets(&da);
                for f in tables(&da, &ub) {
                    for m1 in &ms {
                        for m2 in ms.iter().filter(|m2| m1.refines(m2)) {
                            let ok = m1.bind(|x| f.at(x)).refines(&m2.bind(|x| f.at(x)));
                            c.case(a + b, ok, || {
                                (
                                    format!("m1={m1:?} m2={m2:?} f={f:?}"),
                                    "m1 >>= f ⊆ m2 >>= f".into(),
                                    "not included".into(),
                                )
                            });
                        }
                    }
                }
            }
            // Pairs f1 ⊆̇ f2 number 3^(a·b).
            if pow2(a) * 3u64.pow((a * b) as u32) <= SHAPE_BUDGET {
                let ms = subsets(&da);
                let fs = tables(&da, &ub);
                for f1 in &fs {
                    for f2 in fs.iter().filter(|f2| f1.refines(f2)) {
                        for m in &ms {
                            let ok = m.bind(|x| f1.at(x)).refines(&m.bind(|x| f2.at(x)));
                            c.case(a + b, ok, || {
                                (
                                    format!("m={m:?} f1={f1:?} f2={f2:?}"),
                                    "m >>= f1 ⊆ m >>= f2".into(),
                                    "not included".into(),
                                )
                            });
                        }
                    }
                }
            }
        }
    }
}

fn guard_commutes(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            if pow2(a + a * b) > SHAPE_BUDGET {
                continue;
            }
            let (da, ub) = (universe(a), universe(b));
            let ms = subsets(&da);
            for f in tables(&da, &ub) {
                for m in &ms {
                    for p in [false, true] {
                        let lhs = m.bind(|x| guard(p).bind(|_| f.at(x)));
                        let rhs = guard(p).bind(|_| m.bind(|x| f.at(x)));
                        c.equal(a + b, || format!("p={p} m={m:?} f={f:?}"), &rhs, &lhs);
                    }
                }
            }
        }
    }
}

fn guard_conjunction(_ctx: &Ctx, c: &mut Collector) {
    for p in [false, true] {
        for q in [false, true] {
            c.equal(
                0,
                || format!("p={p} q={q}"),
                &guard(p && q),
                &guard(p).then(&guard(q)),
            );
        }
    }
}

fn guard_if(ctx: &Ctx, c: &mut Collector) {
    for n in 0..=ctx.bounds.max_len {
        let ms = subsets(&universe(n));
        for m1 in &ms {
            for m2 in &ms {
                for p in [false, true] {
                    let spec = guard(p).then(m1).mplus(&guard(!p).then(m2));
                    let branch = if p { m1.clone() } else { m2.clone() };
                    c.refines(n, || format!("p={p} m1={m1:?} m2={m2:?}"), &branch, &spec);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// List specification.

fn lists(b: Bounds) -> impl Iterator<Item = ElmList> {
    enumerate_lists(b.alphabet, b.max_len)
}

fn sorted_cat3_equivalence(ctx: &Ctx, c: &mut Collector) {
    for l in lists(ctx.bounds) {
        for k in 0..l.len() {
            let (ys, x, zs) = (&l[..k], &l[k], &l[k + 1..]);
            c.equal(
                l.len(),
                || format!("ys={ys:?} x={x:?} zs={zs:?}"),
                &sorted(&l),
                &sorted_cat3(ys, x, zs),
            );
        }
    }
}

fn perm_definitions_agree(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let by_split = perm_split(&xs);
        c.equal(
            xs.len(),
            || format!("xs={xs:?}"),
            &perm_insert(&xs),
            &by_split,
        );
        c.equal(
            xs.len(),
            || format!("memoised xs={xs:?}"),
            &by_split,
            &perm(&xs),
        );
    }
}

fn perm_matches_oracle(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let ps = perm(&xs);
        let all_rearranged = ps.iter().all(|ys| is_rearrangement(&xs, ys));
        c.case(xs.len(), all_rearranged, || {
            (
                format!("xs={xs:?}"),
                "rearrangements only".into(),
                format!("{ps:?}"),
            )
        });
        c.equal(
            xs.len(),
            || format!("xs={xs:?}"),
            &oracle::permutations(&xs),
            &ps,
        );
    }
}

fn perm_kleisli_idempotent(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let once = perm(&xs);
        let twice = once.bind(|ys| perm(ys));
        c.equal(xs.len(), || format!("xs={xs:?}"), &once, &twice);
    }
}

fn perm_absorbs_slowsort(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let direct = slowsort(&xs);
        let composed = perm(&xs).bind(|ys| slowsort(ys));
        c.equal(xs.len(), || format!("xs={xs:?}"), &direct, &composed);
    }
}

fn length_preserving(ctx: &Ctx, c: &mut Collector) {
    type Gen = fn(&[Elm]) -> Outcomes<ElmList>;
    let fs: [(&str, Gen); 2] = [("perm", |xs| perm(xs)), ("slowsort", slowsort)];
    for xs in lists(ctx.bounds) {
        for (name, f) in fs {
            let out = f(&xs);
            let own = out.map(|ys| (ys.clone(), ys.len()));
            let input = out.map(|ys| (ys.clone(), xs.len()));
            c.equal(xs.len(), || format!("f={name} xs={xs:?}"), &input, &own);
        }
    }
}

fn slowsort_oracle(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let out = slowsort(&xs);
        c.case(xs.len(), !out.is_empty(), || {
            (format!("xs={xs:?}"), "nonempty".into(), "∅".into())
        });
        c.equal(
            xs.len(),
            || format!("xs={xs:?}"),
            &oracle::sorted_permutations(&xs),
            &out,
        );
    }
}

// ---------------------------------------------------------------------------
// List quicksort.

fn partition_refines_spec(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for xs in lists(ctx.bounds) {
        for p in &ps {
            let actual = ret(ctx.programs.partition(p, &xs));
            c.refines(
                xs.len(),
                || format!("p={p:?} xs={xs:?}"),
                &actual,
                &partition_spec(p, &xs),
            );
        }
    }
}

fn divide_and_conquer(ctx: &Ctx, c: &mut Collector) {
    for l in lists(ctx.bounds).filter(|l| !l.is_empty()) {
        let (p, xs) = (&l[0], &l[1..]);
        let divided = slowsort_divided(ctx.programs.partition_fn(), p, xs);
        c.refines(
            l.len(),
            || format!("p={p:?} xs={xs:?}"),
            &divided,
            &slowsort(&l),
        );
    }
}

fn qsort_refines_slowsort(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let out = ctx.programs.qsort(&xs);
        let ok = sorted(&out) && is_rearrangement(&xs, &out);
        c.case(xs.len(), ok, || {
            (
                format!("xs={xs:?}"),
                "sorted rearrangement".into(),
                format!("{out:?}"),
            )
        });
        c.refines(
            xs.len(),
            || format!("xs={xs:?}"),
            &ret(out.clone()),
            &slowsort(&xs),
        );
    }
}

fn partition_measure(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for xs in lists(ctx.bounds) {
        for p in &ps {
            let PartitionPair { left, right } = ctx.programs.partition(p, &xs);
            c.equal(
                xs.len(),
                || format!("p={p:?} xs={xs:?}"),
                &xs.len(),
                &(left.len() + right.len()),
            );
        }
        // qsort (p:xs) recurses on the two parts of partition p xs.
        if let Some((p, rest)) = xs.split_first() {
            let PartitionPair { left, right } = ctx.programs.partition(p, rest);
            let shrinks = left.len() < xs.len() && right.len() < xs.len();
            c.case(xs.len(), shrinks, || {
                (
                    format!("xs={xs:?}"),
                    format!("both parts shorter than {}", xs.len()),
                    format!("{left:?} {right:?}"),
                )
            });
        }
    }
}

fn partl_agreement(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for t in enumerate_triples(ctx.bounds.alphabet, ctx.bounds.max_len) {
        for p in &ps {
            let n = t.total_len();
            c.equal(
                n,
                || format!("p={p:?} t={t:?}"),
                &partl_tail(p, &t),
                &ctx.programs.partl(p, &t),
            );
            if t.ys.is_empty() && t.zs.is_empty() {
                c.equal(
                    n,
                    || format!("p={p:?} xs={:?}", t.xs),
                    &ctx.programs.partl(p, &t),
                    &ctx.programs.partition(p, &t.xs),
                );
            }
        }
    }
}

fn partl_prime_refactoring(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for t in enumerate_triples(ctx.bounds.alphabet, ctx.bounds.max_len) {
        for p in &ps {
            let n = t.total_len();
            let refactored = partl_prime(p, &t);
            c.equal(
                n,
                || format!("p={p:?} t={t:?}"),
                &partl_prime_branching(p, &t),
                &refactored,
            );
            // One unfolding through dispatch.
            if let Some((x, rest)) = t.xs.split_first() {
                let t1 = PartitionTriple::new(t.ys.clone(), t.zs.clone(), rest.to_vec());
                let unfolded = dispatch(x, p, &t1).bind(|t2| partl_prime(p, t2));
                c.equal(n, || format!("p={p:?} t={t:?}"), &unfolded, &refactored);
            }
        }
    }
}

fn partl_prime_refines(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for t in enumerate_triples(ctx.bounds.alphabet, ctx.bounds.max_len) {
        for p in &ps {
            let spec = second_perm(&ctx.programs.partl(p, &t));
            c.refines(
                t.total_len(),
                || format!("p={p:?} t={t:?}"),
                &partl_prime(p, &t),
                &spec,
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Array laws. `max_len` is the number of cells in the state window and
// `alphabet` the number of distinct cell values.

fn window(n: usize) -> Vec<Index> {
    (-1..n as Index - 1).collect()
}

fn law_states(b: Bounds) -> (Vec<Index>, Vec<Elm>, Vec<ArrayState>) {
    let cells = window(b.max_len);
    let values = cell_values(b.alphabet);
    let all = states(&cells, &values);
    // Indices probed include one cell just outside the window.
    let mut probe = cells;
    probe.push(b.max_len as Index - 1);
    (probe, values, all)
}

fn array_read_write(ctx: &Ctx, c: &mut Collector) {
    let (probe, _, all) = law_states(ctx.bounds);
    for s in &all {
        for &i in probe.iter().filter(|&&i| s.get(i).is_some()) {
            let x = array_model::read(s, i).expect("cell is written");
            let after = write(&x.next, i, x.result);
            c.equal(
                s.len(),
                || format!("s={s:?} i={i}"),
                &((), s.clone()),
                &after.into_pair(),
            );
        }
    }
}

fn array_write_read(ctx: &Ctx, c: &mut Collector) {
    let (probe, values, all) = law_states(ctx.bounds);
    for s in &all {
        for &i in &probe {
            for x in &values {
                let w = write(s, i, *x);
                let lhs = array_model::read(&w.next, i).map(|r| r.into_pair());
                let rhs = Ok((*x, w.next.clone()));
                c.equal(s.len(), || format!("s={s:?} i={i} x={x:?}"), &rhs, &lhs);
            }
        }
    }
}

fn array_write_write(ctx: &Ctx, c: &mut Collector) {
    let (probe, values, all) = law_states(ctx.bounds);
    for s in &all {
        for &i in &probe {
            for x in &values {
                for x2 in &values {
                    let lhs = write(&write(s, i, *x).next, i, *x2);
                    c.equal(
                        s.len(),
                        || format!("s={s:?} i={i} x={x:?} x'={x2:?}"),
                        &write(s, i, *x2),
                        &lhs,
                    );
                }
            }
        }
    }
}

fn array_read_read(ctx: &Ctx, c: &mut Collector) {
    let (probe, _, all) = law_states(ctx.bounds);
    for s in &all {
        for &i in &probe {
            // With f x x' = {(x, x')}, the most informative continuation.
            let lhs = array_model::read(s, i).and_then(|a| {
                array_model::read(&a.next, i).map(|b| ((a.result, b.result), b.next))
            });
            let rhs = array_model::read(s, i).map(|a| ((a.result, a.result), a.next));
            c.equal(s.len(), || format!("s={s:?} i={i}"), &rhs, &lhs);
        }
    }
}

fn array_commutation(ctx: &Ctx, c: &mut Collector) {
    let (probe, values, all) = law_states(ctx.bounds);
    for s in &all {
        for &i in &probe {
            for &j in &probe {
                let size = s.len();
                let rr_ij = array_model::read(s, i).and_then(|x| {
                    array_model::read(&x.next, j).map(|y| ((x.result, y.result), y.next))
                });
                let rr_ji = array_model::read(s, j).and_then(|y| {
                    array_model::read(&y.next, i).map(|x| ((x.result, y.result), x.next))
                });
                // Failing reads compare by definedness only.
                c.equal(
                    size,
                    || format!("read/read s={s:?} i={i} j={j}"),
                    &rr_ij.ok(),
                    &rr_ji.ok(),
                );
                if i == j {
                    continue;
                }
                for x in &values {
                    let wr_first =
                        array_model::read(&write(s, i, *x).next, j).map(|r| r.into_pair());
                    let rd_first =
                        array_model::read(s, j).map(|r| (r.result, write(&r.next, i, *x).next));
                    c.equal(
                        size,
                        || format!("write/read s={s:?} i={i} j={j} x={x:?}"),
                        &rd_first.ok(),
                        &wr_first.ok(),
                    );
                    for y in &values {
                        let ij = write(&write(s, i, *x).next, j, *y);
                        let ji = write(&write(s, j, *y).next, i, *x);
                        c.equal(
                            size,
                            || format!("write/write s={s:?} i={i} j={j} x={x:?} y={y:?}"),
                            &ji,
                            &ij,
                        );
                    }
                }
            }
        }
    }
}

/// Initial states for list-to-array obligations: empty, and one with
/// cells around the written region.
fn background_states(i: Index, max_len: usize) -> [ArrayState; 2] {
    let mut s = ArrayState::new();
    s = write(&s, i - 1, LEFT_SENTINEL).next;
    s = write(&s, i + 1, Elm::new(50, 3_000)).next;
    s = write(&s, i + max_len as Index, RIGHT_SENTINEL).next;
    [ArrayState::new(), s]
}

fn writelist_append(ctx: &Ctx, c: &mut Collector) {
    for (xs, ys) in enumerate_pairs(ctx.bounds.alphabet, ctx.bounds.max_len) {
        for i in BASES {
            for s in background_states(i, ctx.bounds.max_len) {
                let whole = write_list(&s, i, &[xs.as_slice(), &ys].concat());
                let first = write_list(&s, i, &xs);
                let pieces = write_list(&first.next, i + xs.len() as Index, &ys);
                c.equal(
                    xs.len() + ys.len(),
                    || format!("i={i} xs={xs:?} ys={ys:?} s={s:?}"),
                    &whole,
                    &pieces,
                );
            }
        }
    }
}

fn writelist_readlist(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        for i in BASES {
            for s in background_states(i, ctx.bounds.max_len) {
                let written = write_list(&s, i, &xs).next;
                let back = read_list(&written, i, xs.len()).map(|r| r.into_pair());
                c.equal(
                    xs.len(),
                    || format!("i={i} xs={xs:?} s={s:?}"),
                    &Ok((xs.clone(), written.clone())),
                    &back,
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Array quicksort.

fn perm_write_swap(ctx: &Ctx, c: &mut Collector) {
    let values = cell_values(ctx.bounds.alphabet);
    for zs in lists(ctx.bounds) {
        for x in &values {
            let x = Elm::new(x.key, 500);
            for i in BASES {
                for s in background_states(i, ctx.bounds.max_len + 1) {
                    let rhs = perm_write_swap_rhs(&s, i, &x, &zs);
                    let lhs = perm_write_swap_lhs(&s, i, &x, &zs);
                    c.refines(
                        zs.len(),
                        || format!("i={i} x={x:?} zs={zs:?} s={s:?}"),
                        &rhs,
                        &lhs,
                    );
                }
            }
        }
    }
}

fn perm_write_swap_dual(ctx: &Ctx, c: &mut Collector) {
    let values = cell_values(ctx.bounds.alphabet);
    for ys in lists(ctx.bounds) {
        for p in &values {
            let p = Elm::new(p.key, 500);
            for i in BASES {
                for s in background_states(i, ctx.bounds.max_len + 1) {
                    let rhs = perm_write_swap2_rhs(&s, i, &p, &ys);
                    let lhs = perm_write_swap2_lhs(&s, i, &p, &ys);
                    c.refines(
                        ys.len(),
                        || format!("i={i} p={p:?} ys={ys:?} s={s:?}"),
                        &rhs,
                        &lhs,
                    );
                }
            }
        }
    }
}

/// State with sentinels directly bordering `[i, i + n)`.
fn framed(i: Index, n: usize) -> ArrayState {
    let s = write(&ArrayState::new(), i - 1, LEFT_SENTINEL).next;
    write(&s, i + n as Index, RIGHT_SENTINEL).next
}

fn sentinels_intact(s: &ArrayState, i: Index, n: usize) -> bool {
    s.get(i - 1) == Some(&LEFT_SENTINEL) && s.get(i + n as Index) == Some(&RIGHT_SENTINEL)
}

/// Checks the trace of one partition loop: `nx` falls by one per step.
fn partition_steps_decrease(events: &[TraceEvent]) -> Result<(), String> {
    let mut last: Option<usize> = None;
    for ev in events {
        match *ev {
            TraceEvent::PartitionStep { nx } => {
                if last.is_some_and(|l| nx >= l) {
                    return Err(format!("partition step nx={nx} after nx={}", last.unwrap()));
                }
                last = Some(nx);
            }
            TraceEvent::SortEnter { .. } | TraceEvent::SortExit => last = None,
        }
    }
    Ok(())
}

/// Checks the recursion tree of a sort: every call on `n > 0` makes two
/// recursive calls on lengths summing to `n - 1`, each strictly shorter.
fn sort_calls_shrink(events: &[TraceEvent]) -> Result<(), String> {
    let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
    for ev in events {
        match *ev {
            TraceEvent::SortEnter { n, .. } => {
                if let Some((parent, children)) = stack.last_mut() {
                    if n >= *parent {
                        return Err(format!("call on n={n} inside call on n={parent}"));
                    }
                    children.push(n);
                }
                stack.push((n, Vec::new()));
            }
            TraceEvent::SortExit => {
                let (n, children) = stack.pop().ok_or("unbalanced sort exit")?;
                let expected = if n == 0 { 0 } else { 2 };
                if children.len() != expected || (n > 0 && children.iter().sum::<usize>() != n - 1)
                {
                    return Err(format!("call on n={n} recursed on {children:?}"));
                }
            }
            TraceEvent::PartitionStep { .. } => {}
        }
    }
    if stack.is_empty() {
        Ok(())
    } else {
        Err("sort call never returned".into())
    }
}

/// Runs the program under audit from `writeList i (ys ++ zs ++ xs)` over a
/// framed state.
fn audited_ipartl(
    ctx: &Ctx,
    p: &Elm,
    i: Index,
    t: &PartitionTriple,
) -> (ArrayState, AuditedArray, crate::Result<(usize, usize)>) {
    let n = t.total_len();
    let s0 = framed(i, n);
    let seeded = write_list(&s0, i, &[t.ys.as_slice(), &t.zs, &t.xs].concat()).next;
    let mut arr = AuditedArray::new(seeded);
    let res = ctx
        .programs
        .ipartl_on(&mut arr, p, i, t.ys.len(), t.zs.len(), t.xs.len());
    (s0, arr, res)
}

const IPARTL_BASES: [Index; 2] = [-1, 2];

fn ipartl_refines_spec(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for t in enumerate_triples(ctx.bounds.alphabet, ctx.bounds.max_len) {
        let n = t.total_len();
        for p in &ps {
            // The specification depends on the base only through the
            // written cells, so one partl' run serves every base.
            let choices = partl_prime(p, &t);
            for i in IPARTL_BASES {
                let input = || format!("p={p:?} i={i} (ys,zs,xs)={t:?}");
                let (s0, arr, res) = audited_ipartl(ctx, p, i, &t);
                match res {
                    Err(e) => c.error(n, input, &e),
                    Ok(lens) => {
                        let lhs: StateOutcomes<(usize, usize)> = ret((lens, arr.state().clone()));
                        let spec = bind_state(&with_state(&choices, &s0), |pr, s1| {
                            ret(array_model::write2_l(s1, i, (&pr.left, &pr.right)).into_pair())
                        });
                        c.refines(n, input, &lhs, &spec);
                    }
                }
            }
        }
    }
}

fn ipartl_swap_only(ctx: &Ctx, c: &mut Collector) {
    let ps = pivots(ctx.bounds.alphabet);
    for t in enumerate_triples(ctx.bounds.alphabet, ctx.bounds.max_len) {
        let n = t.total_len();
        for p in &ps {
            for i in IPARTL_BASES {
                let input = || format!("p={p:?} i={i} (ys,zs,xs)={t:?}");
                let (_, arr, res) = audited_ipartl(ctx, p, i, &t);
                if let Err(e) = res {
                    c.error(n, input, &e);
                    continue;
                }
                let problem = audit_problem(&arr, i, n)
                    .or_else(|| partition_steps_decrease(arr.events()).err())
                    .or_else(|| {
                        let (ny, nz) = res.as_ref().copied().unwrap_or_default();
                        (ny + nz != n).then(|| format!("returned lengths ({ny}, {nz}) for n={n}"))
                    });
                c.case(n, problem.is_none(), || {
                    (input(), "clean audit".into(), problem.unwrap_or_default())
                });
            }
        }
    }
}

fn audit_problem(arr: &AuditedArray, i: Index, n: usize) -> Option<String> {
    if let Some(w) = arr.direct_writes().next() {
        return Some(format!("direct write to cell {w}"));
    }
    if let Some(a) = arr.first_access_outside(i, n) {
        return Some(format!("access {a:?} outside [{i}, {})", i + n as Index));
    }
    if !sentinels_intact(arr.state(), i, n) {
        return Some(format!("sentinel overwritten: {:?}", arr.state()));
    }
    None
}

fn audited_iqsort(
    ctx: &Ctx,
    i: Index,
    xs: &[Elm],
) -> (ArrayState, AuditedArray, crate::Result<()>) {
    let s0 = framed(i, xs.len());
    let mut arr = AuditedArray::new(write_list(&s0, i, xs).next);
    let res = ctx.programs.iqsort_on(&mut arr, i, xs.len());
    (s0, arr, res)
}

fn iqsort_refines_spec(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let choices = slowsort(&xs);
        for i in BASES {
            let input = || format!("i={i} xs={xs:?}");
            let (s0, arr, res) = audited_iqsort(ctx, i, &xs);
            match res {
                Err(e) => c.error(xs.len(), input, &e),
                Ok(()) => {
                    let spec = bind_state(&with_state(&choices, &s0), |ys, s1| {
                        ret(write_list(s1, i, ys).into_pair())
                    });
                    c.refines(xs.len(), input, &ret(((), arr.state().clone())), &spec);
                }
            }
        }
    }
}

fn iqsort_swap_only(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        for i in BASES {
            let input = || format!("i={i} xs={xs:?}");
            let (_, arr, res) = audited_iqsort(ctx, i, &xs);
            if let Err(e) = res {
                c.error(xs.len(), input, &e);
                continue;
            }
            let problem = audit_problem(&arr, i, xs.len())
                .or_else(|| partition_steps_decrease(arr.events()).err())
                .or_else(|| sort_calls_shrink(arr.events()).err());
            c.case(xs.len(), problem.is_none(), || {
                (input(), "clean audit".into(), problem.unwrap_or_default())
            });
        }
    }
}

fn sort_modes_agree(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        let listed = keys(&ctx.programs.qsort(&xs));
        let mut arr = ArrayState::from_list(0, &xs);
        let arrayed = ctx
            .programs
            .iqsort_on(&mut arr, 0, xs.len())
            .and_then(|()| arr.segment(0, xs.len()))
            .map(|ys| keys(&ys));
        c.equal(xs.len(), || format!("xs={xs:?}"), &Ok(listed), &arrayed);
    }
}

fn dense_mode_equivalence(ctx: &Ctx, c: &mut Collector) {
    for xs in lists(ctx.bounds) {
        for i in BASES {
            let s0 = framed(i, xs.len());
            let seeded = write_list(&s0, i, &xs).next;
            let mut value = seeded.clone();
            let value_res = ctx
                .programs
                .iqsort_on(&mut value, i, xs.len())
                .map(|()| value);
            let mut dense = DenseArray::from_state(&seeded);
            let dense_res = ctx
                .programs
                .iqsort_on(&mut dense, i, xs.len())
                .map(|()| dense.to_state());
            c.equal(
                xs.len(),
                || format!("i={i} xs={xs:?}"),
                &value_res,
                &dense_res,
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Left factors. `alphabet` bounds the domain of f and h, `max_len` the
// universes of the middle and result types.

fn galois_connection(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            for cc in 0..=nu {
                if pow2(a * b + a * cc + b * cc) > SHAPE_BUDGET {
                    continue;
                }
                let (da, ub, uc) = (universe(a), universe(b), universe(cc));
                let (fs, gs, hs) = (tables(&da, &ub), tables(&ub, &uc), tables(&da, &uc));
                for f in &fs {
                    for h in &hs {
                        let factor = left_factor(f, h, &ub, &uc).expect("shared domain");
                        for g in &gs {
                            let composed = f.then(g).expect("g covers f's universe").refines(h);
                            let below = g.refines(&factor);
                            c.equal(
                                a + b + cc,
                                || format!("f={f:?} g={g:?} h={h:?}"),
                                &composed,
                                &below,
                            );
                        }
                    }
                }
            }
        }
    }
}

fn left_factor_maximality(ctx: &Ctx, c: &mut Collector) {
    let Bounds {
        max_len: nu,
        alphabet: nd,
    } = ctx.bounds;
    for a in 0..=nd {
        for b in 0..=nu {
            for cc in 0..=nu {
                if pow2(a * b + a * cc + b * cc) > SHAPE_BUDGET {
                    continue;
                }
                let (da, ub, uc) = (universe(a), universe(b), universe(cc));
                let candidates = tables(&ub, &uc);
                for f in tables(&da, &ub) {
                    for h in tables(&da, &uc) {
                        let size = a + b + cc;
                        let input = || format!("f={f:?} h={h:?}");
                        let factor = left_factor(&f, &h, &ub, &uc).expect("shared domain");
                        let lawful =
                            |g: &KleisliTable<u8, u8>| f.then(g).expect("total").refines(&h);
                        c.case(size, lawful(&factor), || {
                            (input(), "f >=> f\\h ⊆̇ h".into(), format!("{factor:?}"))
                        });
                        // Enlarging the factor at any single point breaks it.
                        for bv in &ub {
                            for cv in uc.iter().filter(|cv| !factor.at(bv).contains(cv)) {
                                let bigger = KleisliTable::tabulate(ub.clone(), |y| {
                                    let mut out = factor.at(y);
                                    if y == bv {
                                        out.insert(*cv);
                                    }
                                    out
                                });
                                c.case(size, !lawful(&bigger), || {
                                    (
                                        input(),
                                        "no lawful table above f\\h".into(),
                                        format!("{bigger:?}"),
                                    )
                                });
                            }
                        }
                        // Every lawful candidate lies below the factor.
                        for g in candidates.iter().filter(|g| lawful(g)) {
                            c.case(size, g.refines(&factor), || {
                                (input(), format!("⊆̇ {factor:?}"), format!("{g:?}"))
                            });
                        }
                    }
                }
            }
        }
    }
}

fn factor_specs(ctx: &Ctx, c: &mut Collector) {
    let Bounds { max_len, alphabet } = ctx.bounds;
    let i: Index = 0;
    let starts = background_states(i, max_len);
    let ps = pivots(alphabet);

    for p in &ps {
        let domain: Vec<(PartitionTriple, ArrayState)> = enumerate_triples(alphabet, max_len)
            .flat_map(|t| starts.iter().map(move |s| (t.clone(), s.clone())))
            .collect();
        let factor = Factor::compute(
            domain,
            |(t, s)| ret(write3_l(s, i, (&t.ys, &t.zs, &t.xs)).into_pair()),
            |(t, s)| {
                let part = second_perm(&ctx.programs.partl(p, t));
                bind_state(&with_state(&part, s), |pr, s1| {
                    ret(array_model::write2_l(s1, i, (&pr.left, &pr.right)).into_pair())
                })
            },
        );
        for (((ny, nz, nx), s1), _) in factor.reachable() {
            let size = ny + nz + nx;
            let input = || format!("ipartl p={p:?} i={i} ({ny},{nz},{nx}) s={s1:?}");
            let mut arr = s1.clone();
            match ctx.programs.ipartl_on(&mut arr, p, i, *ny, *nz, *nx) {
                Err(e) => c.error(size, input, &e),
                Ok(lens) => {
                    let point = ((*ny, *nz, *nx), s1.clone());
                    let admitted = factor.admits(&point, &(lens, arr.clone()));
                    c.case(size, admitted, || {
                        (
                            input(),
                            format!("⊆ {:?}", factor.at(&point)),
                            format!("{:?}", (lens, arr)),
                        )
                    });
                }
            }
        }
    }

    let domain: Vec<(ElmList, ArrayState)> = enumerate_lists(alphabet, max_len)
        .flat_map(|xs| starts.iter().map(move |s| (xs.clone(), s.clone())))
        .collect();
    let factor = Factor::compute(
        domain,
        |(xs, s)| ret(write_l(s, i, xs).into_pair()),
        |(xs, s)| {
            bind_state(&with_state(&slowsort(xs), s), |ys, s1| {
                ret(write_list(s1, i, ys).into_pair())
            })
        },
    );
    for ((n, s1), _) in factor.reachable() {
        let input = || format!("iqsort i={i} n={n} s={s1:?}");
        let mut arr = s1.clone();
        match ctx.programs.iqsort_on(&mut arr, i, *n) {
            Err(e) => c.error(*n, input, &e),
            Ok(()) => {
                let point = (*n, s1.clone());
                let admitted = factor.admits(&point, &((), arr.clone()));
                c.case(*n, admitted, || {
                    (
                        input(),
                        format!("⊆ {:?}", factor.at(&point)),
                        format!("{arr:?}"),
                    )
                });
            }
        }
    }
}
