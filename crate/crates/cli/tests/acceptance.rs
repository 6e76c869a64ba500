//! Acceptance criteria, one line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use msort_core::listspec::{elms, perm};
use msort_core::refinement::{self, oracle, Bounds, Mutant, RunOptions};
use msort_core::Verdict;

struct Check {
    name: &'static str,
    max_len: Option<usize>,
    alphabet: Option<usize>,
    /// Bounds the verdict must report, pinned here rather than taken from
    /// the registry.
    expect: Bounds,
}

const fn at(name: &'static str, max_len: usize, alphabet: usize) -> Check {
    Check {
        name,
        max_len: Some(max_len),
        alphabet: Some(alphabet),
        expect: Bounds { max_len, alphabet },
    }
}

/// Universe-scaled obligations ignore overrides; their bounds are fixed.
const fn fixed(name: &'static str, max_len: usize, alphabet: usize) -> Check {
    Check {
        name,
        max_len: None,
        alphabet: None,
        expect: Bounds { max_len, alphabet },
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn run_checks(checks: &[Check], limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut problems = Vec::new();
    for c in checks {
        let ob = match refinement::find(c.name) {
            Ok(ob) => ob,
            Err(e) => {
                problems.push(e.to_string());
                continue;
            }
        };
        let opts = RunOptions {
            max_len: c.max_len,
            alphabet: c.alphabet,
            ..RunOptions::default()
        };
        let v: Verdict = ob.run(&opts);
        cases += v.cases_run;
        if v.bounds != c.expect {
            problems.push(format!(
                "{} ran at {:?}, expected {:?}",
                c.name, v.bounds, c.expect
            ));
        }
        if v.cases_run == 0 {
            problems.push(format!("{} ran no cases", c.name));
        }
        if let Some(cx) = v.failures.first() {
            problems.push(format!("{} failed on {}", c.name, cx.input));
        }
    }
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            problems.push(format!("took {elapsed:.1?}, limit {limit:?}"));
        }
    }
    let summary = format!("{} obligations, {cases} cases, {elapsed:.1?}", checks.len());
    if problems.is_empty() {
        Outcome {
            ok: true,
            detail: summary,
        }
    } else {
        Outcome {
            ok: false,
            detail: format!("{summary}; {}", problems.join("; ")),
        }
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        ok: a.ok && b.ok,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn law_suite() -> Outcome {
    let checks = [
        fixed("monad-left-identity", 4, 4),
        fixed("monad-right-identity", 4, 4),
        fixed("monad-associativity", 4, 4),
        fixed("choice-monoid", 4, 0),
        fixed("choice-idempotent-commutative", 4, 0),
        fixed("nd-left-zero", 4, 4),
        fixed("nd-right-zero", 4, 0),
        fixed("nd-left-distributivity", 4, 4),
        fixed("nd-right-distributivity", 4, 4),
        fixed("guard-commutes", 4, 4),
        fixed("guard-conjunction", 0, 0),
        fixed("guard-if", 4, 0),
        fixed("array-read-write", 4, 3),
        fixed("array-write-read", 4, 3),
        fixed("array-write-write", 4, 3),
        fixed("array-read-read", 4, 3),
        fixed("array-commutation", 4, 3),
    ];
    run_checks(&checks, Some(Duration::from_secs(30)))
}

fn perm_equivalence() -> Outcome {
    let run = run_checks(
        &[at("perm-definitions-agree", 6, 3)],
        Some(Duration::from_secs(60)),
    );
    // Six distinct elements have 6! = 720 orderings.
    let xs = elms(&[0, 1, 2, 0, 1, 2]);
    let n = perm(&xs).len();
    let count = Outcome {
        ok: n == 720 && n == oracle::factorial(6),
        detail: format!("perm of 6 tagged elements has {n} outcomes"),
    };
    both(run, count)
}

fn exit_with_counterexample(args: &[&str], want: i32) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_msort"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let has_counterexample = stdout.contains("counterexample (size");
    let ok = code == want && (want == 0 || has_counterexample);
    let last = stdout.lines().last().unwrap_or("").to_string();
    Outcome {
        ok,
        detail: format!("`{}` exit {code}: {last}", args.join(" ")),
    }
}

fn cli_contract() -> Outcome {
    let mut outcome = exit_with_counterexample(&["laws", "--all"], 0);
    for m in Mutant::ALL {
        let name = m.name();
        let run = exit_with_counterexample(&["laws", "--all", "--fail-fast", "--mutant", name], 1);
        outcome = both(outcome, run);
    }
    outcome
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: Vec<Criterion> = vec![
        ("law suite", law_suite),
        ("perm equivalence", perm_equivalence),
        ("qsort refinement", || {
            run_checks(&[at("qsort-refines-slowsort", 7, 3)], None)
        }),
        ("divide and conquer", || {
            run_checks(
                &[
                    at("divide-and-conquer", 5, 3),
                    at("partition-refines-spec", 5, 3),
                ],
                None,
            )
        }),
        ("partl agreement", || {
            run_checks(
                &[at("partl-agreement", 5, 3), at("partl-prime-refines", 5, 3)],
                None,
            )
        }),
        ("writeList append", || {
            run_checks(&[at("writelist-append", 5, 3)], None)
        }),
        ("swap lemmas", || {
            run_checks(
                &[
                    at("perm-write-swap", 4, 3),
                    at("perm-write-swap-dual", 4, 3),
                ],
                None,
            )
        }),
        ("ipartl specification", || {
            run_checks(
                &[
                    at("ipartl-refines-spec", 5, 3),
                    at("ipartl-swap-only", 5, 3),
                ],
                Some(Duration::from_secs(300)),
            )
        }),
        ("iqsort specification", || {
            run_checks(
                &[
                    at("iqsort-refines-spec", 6, 3),
                    at("iqsort-swap-only", 6, 3),
                ],
                None,
            )
        }),
        ("left factors", || {
            run_checks(
                &[
                    fixed("galois-connection", 3, 2),
                    fixed("left-factor-maximality", 3, 2),
                    at("factor-specs", 3, 3),
                ],
                None,
            )
        }),
        ("cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let outcome = check();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", k + 1, outcome.detail);
        if !outcome.ok {
            failed += 1;
        }
    }
    println!("{failed} criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
