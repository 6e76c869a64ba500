//! Obligation registry and exhaustive checking driver.
//!
//! Each [`Obligation`] names one law, lemma, or refinement step, the law it
//! stands for, the bounds of its enumeration, and the check that compares
//! the two sides. Running an obligation produces a [`Verdict`] holding the
//! number of cases tried and the smallest counterexamples found.

mod checks;
pub mod enumerate;
pub mod factor;
pub mod mutants;
pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::conclusion_specs_check;
pub use factor::{check_galois, left_factor, Factor};
pub use mutants::{Mutant, Programs};

/// Counterexamples kept per obligation unless configured otherwise.
pub const DEFAULT_FAILURE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Equality,
    RefinementPure,
    RefinementState,
}

/// Enumeration limits. For list obligations `max_len` bounds the input
/// length; for algebraic laws it bounds the size of the value universes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_len: usize,
    pub alphabet: usize,
}

/// Whether `--max-len` style overrides apply to an obligation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    ListLength,
    Universe,
}

type CheckFn = fn(&Ctx, &mut Collector);

#[derive(Clone, Copy)]
pub struct Obligation {
    pub name: &'static str,
    /// Identifier of the law in [`LAWS`].
    pub law: &'static str,
    pub kind: Kind,
    pub bounds: Bounds,
    pub scale: Scale,
    check: CheckFn,
}

impl std::fmt::Debug for Obligation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Obligation")
            .field("name", &self.name)
            .field("law", &self.law)
            .field("kind", &self.kind)
            .field("bounds", &self.bounds)
            .finish()
    }
}

/// Laws of the derivation, each with the statement it checks.
pub const LAWS: &[(&str, &str)] = &[
    ("monad-laws", "m >>= {·} = m;  {x} >>= f = f x;  (m >>= f) >>= g = m >>= (λx → f x >>= g)"),
    ("choice-monoid", "∅ ⫾ m = m = m ⫾ ∅;  (m1 ⫾ m2) ⫾ m3 = m1 ⫾ (m2 ⫾ m3)"),
    ("choice-idempotent-commutative", "m ⫾ m = m;  m ⫾ n = n ⫾ m"),
    ("nd-left-zero", "∅ >>= f = ∅"),
    ("nd-right-zero", "m >> ∅ = ∅"),
    ("nd-left-distributivity", "(m1 ⫾ m2) >>= f = (m1 >>= f) ⫾ (m2 >>= f)"),
    ("nd-right-distributivity", "m >>= (λx → f1 x ⫾ f2 x) = (m >>= f1) ⫾ (m >>= f2)"),
    ("refinement-definition", "m1 ⊆ m2 ≡ m1 ⫾ m2 = m2"),
    ("refinement-partial-order", "⊆ is reflexive, transitive and anti-symmetric"),
    ("refinement-existential", "m1 ⊆ m2 ≡ ∃n. m1 ⫾ n = m2"),
    ("bind-monotonic", "m1 ⊆ m2 ⇒ m1 >>= f ⊆ m2 >>= f;  f1 ⊆̇ f2 ⇒ m >>= f1 ⊆ m >>= f2"),
    ("guard-commutes", "guard p commutes with every nondeterministic m"),
    ("guard-conjunction", "guard (p ∧ q) = guard p >> guard q"),
    ("guard-if", "(guard p >> m1) ⫾ (guard (¬p) >> m2) ⊇ if p then m1 else m2"),
    ("sorted-cat3", "sorted (ys ++ [x] ++ zs) ≡ sorted ys ∧ sorted zs ∧ all (≤ x) ys ∧ all (x ≤) zs"),
    ("perm-equivalence", "perm via insert = perm via split"),
    ("perm-permutes", "every outcome of perm xs is a rearrangement of xs, and all are present"),
    ("perm-idempotent", "perm >=> perm = perm;  perm >=> slowsort = slowsort"),
    ("length-preserving", "f xs >>= λys → {(ys, #ys)} = f xs >>= λys → {(ys, #xs)} for f ∈ {perm, slowsort}"),
    ("slowsort-sorts", "slowsort xs = the sorted permutations of xs, never empty"),
    ("partition-refinement", "{partition p xs} ⊆ split xs >>= filt (λ(ys,zs) → all (≤ p) ys ∧ all (p ≤) zs)"),
    ("divide-and-conquer", "slowsort (p:xs) ⊇ {partition p xs} >>= λ(ys,zs) → slowsort ys >>= λys' → slowsort zs >>= λzs' → {ys' ++ [p] ++ zs'}"),
    ("qsort-refinement", "{·} · qsort ⊆̇ slowsort"),
    ("qsort-termination", "#ys + #zs = #xs for (ys, zs) = partition p xs; recursive calls shrink"),
    ("partl-tail-recursion", "partl p (ys, zs, xs) = (ys ++ us, zs ++ vs) equals its tail-recursive form; partition p xs = partl p ([], [], xs)"),
    ("partl-prime-refactoring", "partl' p (ys, zs, x:xs) = dispatch x p (ys, zs, xs) >>= partl' p"),
    ("partl-prime-refinement", "partl' p ⊆̇ second perm · partl p"),
    ("array-read-write", "read i >>= write i = {()}"),
    ("array-write-read", "write i x >> read i = write i x >> {x}"),
    ("array-write-write", "write i x >> write i x' = write i x'"),
    ("array-read-read", "read i >>= λx → read i >>= λx' → f x x' = read i >>= λx → f x x"),
    ("array-commutation", "read i, read j commute; write i x, write j y commute and write i x, read j commute when i ≠ j"),
    ("writelist-append", "writeList i (xs ++ ys) = writeList i xs >> writeList (i + #xs) ys"),
    ("writelist-readlist", "writeList i xs >> readList i (#xs) = writeList i xs >> {xs}"),
    ("perm-write-swap", "perm zs >>= λzs' → writeList i ([x] ++ zs') ⊇ writeList i (zs ++ [x]) >> swap i (i + #zs)"),
    ("perm-write-swap-dual", "perm ys >>= λys' → writeList i (ys' ++ [p]) ⊇ writeList i ([p] ++ ys) >> swap i (i + #ys)"),
    ("ipartl-refinement", "writeList i (ys ++ zs ++ xs) >> ipartl p i (#ys, #zs, #xs) ⊆ partl' p (ys, zs, xs) >>= write2L i"),
    ("iqsort-refinement", "writeList i xs >> iqsort i (#xs) ⊆ slowsort xs >>= writeList i"),
    ("swap-only-mutation", "the derived array programs mutate the array only by swapping, inside their segment"),
    ("sort-modes-agree", "qsort and iqsort produce the same key sequence; in-place and value execution agree"),
    ("left-factor-galois", "f >=> g ⊆̇ h ≡ g ⊆̇ f \\ h"),
    ("left-factor-greatest", "f \\ h is the greatest g with f >=> g ⊆̇ h"),
    ("factor-specs", "ipartl p i ⊆̇ write3L i \\ ((second perm · partl p) >=> write2L i);  iqsort i ⊆̇ writeL i \\ (slowsort >=> writeList i)"),
];

pub fn law_statement(id: &str) -> Option<&'static str> {
    LAWS.iter().find(|(k, _)| *k == id).map(|(_, s)| *s)
}

/// One failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Input size used for minimal-first ordering.
    pub size: usize,
    pub input: String,
    /// The specification side.
    pub expected: String,
    /// The implementation side.
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub obligation: String,
    pub paper_anchor: String,
    pub kind: Kind,
    pub bounds: Bounds,
    pub cases_run: u64,
    pub failures: Vec<Counterexample>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of running a selection of obligations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub mutant: Mutant,
    pub passed: bool,
    pub total_cases: u64,
    pub obligations: Vec<Verdict>,
}

impl Report {
    pub fn from_verdicts(mutant: Mutant, obligations: Vec<Verdict>) -> Self {
        Report {
            mutant,
            passed: obligations.iter().all(Verdict::passed),
            total_cases: obligations.iter().map(|v| v.cases_run).sum(),
            obligations,
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Verdict> + '_ {
        self.obligations.iter().filter(|v| !v.passed())
    }
}

/// Everything a check needs: its bounds and the programs under test.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub bounds: Bounds,
    pub programs: Programs,
}

/// Accumulates case counts and the smallest counterexamples.
#[derive(Debug)]
pub struct Collector {
    cases: u64,
    cap: usize,
    failures: Vec<Counterexample>,
}

impl Collector {
    pub fn new(cap: usize) -> Self {
        Collector {
            cases: 0,
            cap: cap.max(1),
            failures: Vec::new(),
        }
    }

    /// Records one case. `detail` is only evaluated when the failure will be
    /// kept.
    pub fn case(
        &mut self,
        size: usize,
        ok: bool,
        detail: impl FnOnce() -> (String, String, String),
    ) {
        self.cases += 1;
        if ok {
            return;
        }
        if self.failures.len() >= self.cap && self.failures.last().is_some_and(|f| f.size <= size) {
            return;
        }
        let (input, expected, actual) = detail();
        let at = self.failures.partition_point(|f| f.size <= size);
        self.failures.insert(
            at,
            Counterexample {
                size,
                input,
                expected,
                actual,
            },
        );
        self.failures.truncate(self.cap);
    }

    /// Records an equality case; values are rendered with `Debug`.
    pub fn equal<T: PartialEq + std::fmt::Debug>(
        &mut self,
        size: usize,
        input: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.case(size, expected == actual, || {
            (input(), format!("{expected:?}"), format!("{actual:?}"))
        });
    }

    /// Records a refinement case `actual ⊆ expected`.
    pub fn refines<T: Ord + std::fmt::Debug>(
        &mut self,
        size: usize,
        input: impl FnOnce() -> String,
        actual: &crate::effects::Outcomes<T>,
        expected: &crate::effects::Outcomes<T>,
    ) {
        self.case(size, actual.refines(expected), || {
            (input(), format!("⊇ {expected:?}"), format!("{actual:?}"))
        });
    }

    /// Records a program error as a failing case.
    pub fn error(&mut self, size: usize, input: impl FnOnce() -> String, err: &Error) {
        self.case(size, false, || {
            (input(), "no error".to_string(), format!("error: {err}"))
        });
    }

    pub fn cases(&self) -> u64 {
        self.cases
    }

    pub fn into_parts(self) -> (u64, Vec<Counterexample>) {
        (self.cases, self.failures)
    }
}

/// Options that apply across a run.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub max_len: Option<usize>,
    pub alphabet: Option<usize>,
    pub mutant: Mutant,
    /// `0` means [`DEFAULT_FAILURE_CAP`].
    pub failure_cap: usize,
    pub fail_fast: bool,
}

impl Obligation {
    pub fn anchor(&self) -> &'static str {
        law_statement(self.law).unwrap_or(self.law)
    }

    pub fn effective_bounds(&self, opts: &RunOptions) -> Bounds {
        let mut b = self.bounds;
        if self.scale == Scale::ListLength {
            if let Some(n) = opts.max_len {
                b.max_len = n;
            }
            if let Some(a) = opts.alphabet {
                b.alphabet = a;
            }
        }
        b
    }

    pub fn run(&self, opts: &RunOptions) -> Verdict {
        let bounds = self.effective_bounds(opts);
        let ctx = Ctx {
            bounds,
            programs: Programs::with_mutant(opts.mutant),
        };
        let cap = if opts.failure_cap == 0 {
            DEFAULT_FAILURE_CAP
        } else {
            opts.failure_cap
        };
        let mut collector = Collector::new(cap);
        (self.check)(&ctx, &mut collector);
        let (cases_run, failures) = collector.into_parts();
        Verdict {
            obligation: self.name.to_string(),
            paper_anchor: self.anchor().to_string(),
            kind: self.kind,
            bounds,
            cases_run,
            failures,
        }
    }
}

/// All registered obligations in a fixed order.
pub fn registry() -> Vec<Obligation> {
    checks::REGISTRY.to_vec()
}

pub fn find(name: &str) -> Result<Obligation> {
    checks::REGISTRY
        .iter()
        .find(|o| o.name == name)
        .copied()
        .ok_or_else(|| Error::UnknownObligation(name.to_string()))
}

/// Runs a single obligation by name with default options.
pub fn check_obligation(name: &str) -> Result<Verdict> {
    Ok(find(name)?.run(&RunOptions::default()))
}

/// Runs the named obligations, or all of them when `names` is empty.
/// Every name is resolved before anything runs.
pub fn run_obligations(names: &[String], opts: &RunOptions) -> Result<Report> {
    let selected = if names.is_empty() {
        registry()
    } else {
        names.iter().map(|n| find(n)).collect::<Result<Vec<_>>>()?
    };
    let mut verdicts = Vec::with_capacity(selected.len());
    for ob in &selected {
        let v = ob.run(opts);
        let failed = !v.passed();
        verdicts.push(v);
        if failed && opts.fail_fast {
            break;
        }
    }
    Ok(Report::from_verdicts(opts.mutant, verdicts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_law_has_an_obligation_and_back() {
        let reg = registry();
        for (id, _) in LAWS {
            assert!(
                reg.iter().any(|o| o.law == *id),
                "law `{id}` has no obligation"
            );
        }
        for o in &reg {
            assert!(
                law_statement(o.law).is_some(),
                "obligation `{}` names unknown law",
                o.name
            );
        }
    }

    #[test]
    fn obligation_names_are_unique() {
        let reg = registry();
        let mut names: Vec<_> = reg.iter().map(|o| o.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), reg.len());
    }

    #[test]
    fn unknown_names_are_rejected_before_running() {
        let err = run_obligations(
            &["monad-left-identity".into(), "no-such-law".into()],
            &RunOptions::default(),
        );
        assert_eq!(
            err.unwrap_err(),
            Error::UnknownObligation("no-such-law".into())
        );
        assert!(check_obligation("nope").is_err());
    }

    #[test]
    fn collector_keeps_smallest_failures() {
        let mut c = Collector::new(2);
        for size in [5, 3, 4, 1, 6] {
            c.case(size, false, || {
                (size.to_string(), String::new(), String::new())
            });
        }
        c.case(0, true, || unreachable!());
        let (cases, failures) = c.into_parts();
        assert_eq!(cases, 6);
        assert_eq!(
            failures.iter().map(|f| f.size).collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn list_overrides_leave_universe_bounds_alone() {
        let opts = RunOptions {
            max_len: Some(2),
            alphabet: Some(2),
            ..Default::default()
        };
        let q = find("qsort-refines-slowsort").unwrap();
        assert_eq!(
            q.effective_bounds(&opts),
            Bounds {
                max_len: 2,
                alphabet: 2
            }
        );
        let m = find("monad-associativity").unwrap();
        assert_eq!(m.effective_bounds(&opts), m.bounds);
    }
}
