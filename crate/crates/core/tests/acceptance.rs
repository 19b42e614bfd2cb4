//! Exit criteria. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any fails. Run with `cargo test -p cyclebreak --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_one_lines, factorial};
use cyclebreak::*;

const COUNT_BUDGET: Duration = Duration::from_secs(30);
const LARGE_ROUND_TRIP_BUDGET: Duration = Duration::from_secs(10);
const LARGE_GROUND: u32 = 50;
const LARGE_SAMPLES: u64 = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn range(n: u32) -> GroundSet {
    GroundSet::range(n)
}

fn count_class(n: u32, class: ClassFilter) -> usize {
    enumerate_class(&range(n), class, DEFAULT_SAFETY_BOUND).unwrap().count()
}

fn count_identity() -> Outcome {
    let start = Instant::now();
    let expected = [(2u32, 1usize), (4, 9), (6, 225), (8, 11025)];
    for (n, want) in expected {
        let a = count_class(n, ClassFilter::AllOdd);
        let p = count_class(n, ClassFilter::P);
        let b = count_class(n, ClassFilter::AllEven);
        ensure(a == want && p == want && b == want, || {
            format!("n={n}: |A|={a} |P|={p} |B|={b}, expected {want}")
        })?;
        let formula = expected_count(CountedClass::AllOdd, n as usize).unwrap();
        ensure(formula == want.into(), || format!("n={n}: formula gives {formula}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= COUNT_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("|A|=|P|=|B| = 1, 9, 225, 11025 in {elapsed:.2?}"))
}

fn check_report(report: &VerificationReport) -> Result<(), String> {
    ensure(
        report.bijective && report.round_trip_ok && report.counterexamples.is_empty(),
        || format!("{} on {} failed:\n{report}", report.map, report.ground),
    )
}

fn phi_bijection() -> Outcome {
    let mut grounds: Vec<GroundSet> = [2, 4, 6, 8].into_iter().map(range).collect();
    for labels in [
        vec![2u32, 5, 7, 9],
        vec![3, 8],
        vec![4, 6, 11, 13, 20, 21],
        vec![2, 3, 5, 7, 11, 13, 17, 19],
    ] {
        grounds.push(GroundSet::new(labels).unwrap());
    }
    for ground in &grounds {
        let report = verify_map(MapName::Phi, ground, DEFAULT_SAFETY_BOUND).unwrap();
        check_report(&report)?;
        ensure(report.domain_count == report.codomain_count, || "count mismatch".into())?;
    }
    Ok(format!(
        "phi bijective with zero counterexamples on {} grounds",
        grounds.len()
    ))
}

fn composed_bijection() -> Outcome {
    for n in [2, 4, 6, 8] {
        let report = verify_map(MapName::Psi, &range(n), DEFAULT_SAFETY_BOUND).unwrap();
        check_report(&report)?;
        // The oracle already rejects non-even or non-peeling images; recheck directly.
        for p in enumerate_class(&range(n), ClassFilter::AllOdd, DEFAULT_SAFETY_BOUND).unwrap() {
            let image = psi(&p).unwrap();
            ensure(image.is_all_even() && has_peeling_property(&image), || {
                format!("psi({p}) = {image}")
            })?;
        }
    }
    Ok("psi bijective A -> B on [2], [4], [6], [8]; every image all-even and peeling".into())
}

fn same_cycle_correspondence() -> Outcome {
    for n in 2..=7u32 {
        let half = factorial(n as u64) / 2;
        let same = count_class(n, ClassFilter::SameCycleE1E2) as u64;
        let diff = count_class(n, ClassFilter::DiffCycleE1E2) as u64;
        ensure(same == half && diff == half, || {
            format!("n={n}: same={same} diff={diff}")
        })?;
        for p in enumerate_permutations(&range(n), DEFAULT_SAFETY_BOUND).unwrap() {
            let q = ps_map(&p).unwrap();
            ensure(ps_map(&q).unwrap() == p, || format!("ps_map not an involution at {p}"))?;
            ensure(p.e1_e2_same_cycle().unwrap() != q.e1_e2_same_cycle().unwrap(), || {
                format!("ps_map kept the class of {p}")
            })?;
        }
        let report = verify_map(MapName::PsMap, &range(n), DEFAULT_SAFETY_BOUND).unwrap();
        check_report(&report)?;
    }
    Ok("same/diff classes have n!/2 members for n = 2..7; ps_map involutive and exchanging".into())
}

fn large_round_trips() -> Outcome {
    let ground = range(LARGE_GROUND);
    let start = Instant::now();
    for seed in 0..LARGE_SAMPLES {
        let p = sample_all_odd(&ground, seed).unwrap();
        ensure(p.is_all_odd(), || format!("sample {seed} not all-odd"))?;
        let image = psi(&p).unwrap();
        ensure(image.is_all_even(), || format!("psi of sample {seed} has an odd cycle"))?;
        ensure(psi_inverse(&image).unwrap() == p, || {
            format!("round trip failed for seed {seed}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= LARGE_ROUND_TRIP_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{LARGE_SAMPLES} samples at size {LARGE_GROUND} in {elapsed:.2?}"
    ))
}

fn sequence_cross_check() -> Outcome {
    let want = [1u64, 1, 3, 9, 45, 225, 1575, 11025];
    let mut got = Vec::new();
    for n in 1..=8u32 {
        // Independent brute force next to the library enumeration.
        let oracle = all_one_lines(n as usize).iter().filter(|l| common::all_odd(l)).count() as u64;
        let lib = count_class(n, ClassFilter::AllOdd) as u64;
        let table = expected_count(CountedClass::AllOdd, n as usize).unwrap();
        ensure(oracle == lib && table == lib.into(), || {
            format!("n={n}: oracle={oracle} enumeration={lib} table={table}")
        })?;
        got.push(lib);
    }
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("all-odd counts {got:?}"))
}

fn structural_properties() -> Outcome {
    let mut pairs = 0u64;
    for n in 0..=7u32 {
        let ground = range(n);
        for line in all_one_lines(n as usize) {
            let p = CyclePermutation::from_one_line(ground.clone(), &line).unwrap();
            ensure(p.to_one_line() == line, || format!("one-line round trip {line:?}"))?;
            for flag in [true, false] {
                let back = CyclePermutation::parse(&p.format(flag), ground.clone()).unwrap();
                ensure(back == p, || format!("text round trip {p}"))?;
            }
            let raw: Vec<Vec<u32>> = p
                .cycles()
                .iter()
                .rev()
                .map(|c| {
                    let mut v = c.elements().to_vec();
                    v.rotate_right(1);
                    v
                })
                .collect();
            let once = canonicalize(raw);
            ensure(canonicalize(once.clone()) == once, || {
                format!("canonicalize not idempotent at {p}")
            })?;
            for x in 1..=n {
                for y in x + 1..=n {
                    let host = p.cycle_containing(x).unwrap().clone();
                    if host.contains(y) {
                        let b = break_cycle(&p, x, y).unwrap();
                        pairs += 1;
                        let lx = b.cycle_containing(x).unwrap().len();
                        let ly = b.cycle_containing(y).unwrap().len();
                        let parity_ok = (lx % 2 == ly % 2) == host.is_even();
                        ensure(parity_ok, || format!("break parity at {p}, {x}, {y}"))?;
                        ensure(merge_cycles(&b, x, y).unwrap() == p, || format!("merge(break) at {p}"))?;
                    } else {
                        let m = merge_cycles(&p, x, y).unwrap();
                        ensure(break_cycle(&m, x, y).unwrap() == p, || format!("break(merge) at {p}"))?;
                        pairs += 1;
                    }
                }
            }
            if n <= 6 {
                for x in 1..=n {
                    for y in 1..=n {
                        let q = swap_labels(&p, x, y).unwrap();
                        ensure(q.cycle_type() == p.cycle_type(), || format!("swap changed type of {p}"))?;
                        ensure(swap_labels(&q, x, y).unwrap() == p, || {
                            format!("swap not involutive at {p}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("exhaustive to n = 7 ({pairs} element pairs checked)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 count identity |A|=|P|=|B|=((n-1)!!)^2", count_identity),
        ("2 phi: A(S) <-> P(S) bijection", phi_bijection),
        ("3 psi: A(S) <-> B(S) bijection with peeling", composed_bijection),
        (
            "4 same-cycle / different-cycle correspondence",
            same_cycle_correspondence,
        ),
        ("5 large-instance psi round trips", large_round_trips),
        ("6 all-odd sequence cross-check", sequence_cross_check),
        ("7 structural property suite", structural_properties),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
