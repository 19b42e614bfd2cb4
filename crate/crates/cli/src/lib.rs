//! Command-line front end for the `cyclebreak` library.
//!
//! [`run`] takes the argument vector and returns the exit code together
//! with everything destined for stdout and stderr, so the whole surface can
//! be tested without spawning processes. Exit codes: 0 success, 1 a check
//! ran and failed, 2 usage or input error.

mod args;
mod output;

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::Parser;
use cyclebreak::{
    break_cycle, enumerate_class, expected_count, merge_cycles, phi, phi_inverse, phi_traced, ps_map, psi, psi_inverse,
    psi_inverse_traced, psi_traced, sample_all_odd, sample_permutation, swap_labels, ClassFilter, CountedClass,
    CyclePermutation, Error, GroundSet, MapName, VerificationPlan, VerificationReport, DEFAULT_SAFETY_BOUND,
};
use rayon::prelude::*;

pub use args::Format;
use args::{ApplyArgs, ClassArgs, Cli, Command, GroundArgs, RoundtripArgs, VerifyArgs};

/// Environment variable that raises or lowers the exhaustive safety bound.
pub const MAX_GROUND_ENV: &str = "CYCLEBREAK_MAX_GROUND";

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String) -> Self {
        Outcome {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(format!("error: {}: {e}", e.code()))
    }
}

type CmdResult = Result<Outcome, Outcome>;

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    let result = safety_bound(cli.max_ground).and_then(|bound| match cli.command {
        Command::Apply(a) => apply(&a),
        Command::Trace(a) => trace(&a),
        Command::Enumerate(a) => enumerate(&a, bound),
        Command::Count(a) => count(&a, bound),
        Command::Verify(a) => verify(&a, bound),
        Command::Roundtrip(a) => roundtrip(&a),
    });
    result.unwrap_or_else(|e| e)
}

fn safety_bound(flag: Option<usize>) -> Result<usize, Outcome> {
    if let Some(bound) = flag {
        return Ok(bound);
    }
    match std::env::var(MAX_GROUND_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Outcome::usage(format!(
                "error: {MAX_GROUND_ENV} must be a nonnegative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_SAFETY_BOUND),
    }
}

fn parse_ground(g: &GroundArgs) -> Result<Option<GroundSet>, Outcome> {
    match (g.n, &g.ground) {
        (Some(n), _) => Ok(Some(GroundSet::range(n))),
        (None, Some(list)) => {
            let mut labels = Vec::new();
            for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let x: u32 = part
                    .parse()
                    .map_err(|_| Outcome::usage(format!("error: bad ground element `{part}`")))?;
                labels.push(x);
            }
            Ok(Some(GroundSet::new(labels)?))
        }
        (None, None) => Ok(None),
    }
}

fn require_ground(g: &GroundArgs) -> Result<GroundSet, Outcome> {
    parse_ground(g)?.ok_or_else(|| Outcome::usage("error: a ground set is required (--n K or --ground LIST)"))
}

/// Reads the permutation; without an explicit ground, the ground is
/// `{1, ..., m}` for the largest label `m` in the text.
fn parse_perm(text: &str, g: &GroundArgs) -> Result<CyclePermutation, Outcome> {
    let ground = match parse_ground(g)? {
        Some(ground) => ground,
        None => {
            let max = text
                .split(|c: char| !c.is_ascii_digit())
                .filter_map(|s| s.parse::<u32>().ok())
                .max()
                .unwrap_or(0);
            GroundSet::range(max)
        }
    };
    Ok(CyclePermutation::parse(text, ground)?)
}

fn parse_pair(pair: Option<&str>, map: &str) -> Result<(u32, u32), Outcome> {
    let pair = pair.ok_or_else(|| Outcome::usage(format!("error: --pair X,Y is required for map `{map}`")))?;
    let bad = || Outcome::usage(format!("error: --pair expects two integers `X,Y`, got `{pair}`"));
    let (x, y) = pair.split_once(',').ok_or_else(bad)?;
    Ok((
        x.trim().parse().map_err(|_| bad())?,
        y.trim().parse().map_err(|_| bad())?,
    ))
}

fn render(p: &CyclePermutation, format: Format, hide_fixed: bool) -> String {
    match format {
        Format::Cycles | Format::Json => p.format(!hide_fixed),
        Format::Oneline => output::one_line(p),
    }
}

fn apply(a: &ApplyArgs) -> CmdResult {
    let p = parse_perm(&a.perm, &a.ground)?;
    let out = match a.map.as_str() {
        "phi" => phi(&p)?,
        "phi-inv" => phi_inverse(&p)?,
        "psi" => psi(&p)?,
        "psi-inv" => psi_inverse(&p)?,
        "ps" => ps_map(&p)?,
        "break" | "merge" | "swap" => {
            let (x, y) = parse_pair(a.pair.as_deref(), &a.map)?;
            match a.map.as_str() {
                "break" => break_cycle(&p, x, y)?,
                "merge" => merge_cycles(&p, x, y)?,
                _ => swap_labels(&p, x, y)?,
            }
        }
        other => return Err(Error::UnknownMap(other.into()).into()),
    };
    let text = match a.format {
        Format::Json => output::json(&output::ApplyJson {
            map: &a.map,
            ground: p.ground().as_slice(),
            input: p.format(!a.hide_fixed),
            output: out.format(!a.hide_fixed),
            one_line: out.to_one_line(),
        }),
        f => render(&out, f, a.hide_fixed),
    };
    Ok(Outcome::ok(text + "\n"))
}

fn trace(a: &ApplyArgs) -> CmdResult {
    let p = parse_perm(&a.perm, &a.ground)?;
    let (out, steps) = match a.map.as_str() {
        "phi" => phi_traced(&p)?,
        "psi" => psi_traced(&p)?,
        "psi-inv" => psi_inverse_traced(&p)?,
        other => {
            return Err(Outcome::usage(format!(
                "error: trace supports phi, psi and psi-inv, not `{other}`"
            )))
        }
    };
    let show = |q: &CyclePermutation| render(q, a.format, a.hide_fixed);
    let text = match a.format {
        Format::Json => {
            let steps = steps
                .iter()
                .map(|s| output::StepJson {
                    depth: s.depth,
                    rule: s.rule.name(),
                    before: show(&s.before),
                    after: show(&s.after),
                })
                .collect();
            output::json(&output::TraceJson {
                map: &a.map,
                input: show(&p),
                result: show(&out),
                steps,
            }) + "\n"
        }
        _ => {
            let mut text = String::new();
            for s in &steps {
                let indent = "  ".repeat(s.depth);
                let _ = writeln!(
                    text,
                    "{indent}[{}] {}: {} -> {}",
                    s.depth,
                    s.rule,
                    show(&s.before),
                    show(&s.after)
                );
            }
            let _ = writeln!(text, "result: {}", show(&out));
            text
        }
    };
    Ok(Outcome::ok(text))
}

fn parse_class(name: &str) -> Result<ClassFilter, Outcome> {
    name.parse::<ClassFilter>()
        .map_err(|_| Outcome::usage(format!("error: UNSUPPORTED_CLASS: unknown class `{name}`")))
}

fn enumerate(a: &ClassArgs, bound: usize) -> CmdResult {
    let class = parse_class(&a.class)?;
    let ground = require_ground(&a.ground)?;
    let members: Vec<String> = enumerate_class(&ground, class, bound)?
        .map(|p| render(&p, a.format, a.hide_fixed))
        .collect();
    let text = match a.format {
        Format::Json => output::json(&members) + "\n",
        _ => members.iter().map(|m| format!("{m}\n")).collect(),
    };
    Ok(Outcome::ok(text))
}

fn count(a: &ClassArgs, bound: usize) -> CmdResult {
    let class = parse_class(&a.class)?;
    let ground = require_ground(&a.ground)?;
    let enumerated = enumerate_class(&ground, class, bound)?.count() as u64;
    let expected = CountedClass::try_from(class)
        .ok()
        .and_then(|c| expected_count(c, ground.len()).ok())
        .map(|e| e.to_string());
    let matches = expected.as_ref().map(|e| *e == enumerated.to_string());
    let text = match a.format {
        Format::Json => {
            output::json(&output::CountJson {
                class: class.name(),
                ground_size: ground.len(),
                enumerated,
                expected: expected.clone(),
                matches,
            }) + "\n"
        }
        _ => {
            let mut text = format!(
                "class: {}\nground_size: {}\nenumerated: {enumerated}\n",
                class.name(),
                ground.len()
            );
            if let Some(e) = &expected {
                let _ = writeln!(text, "expected: {e}");
                let _ = writeln!(text, "match: {}", matches == Some(true));
            }
            text
        }
    };
    Ok(if matches == Some(false) {
        Outcome::failed(text)
    } else {
        Outcome::ok(text)
    })
}

fn parse_map(name: &str) -> Result<MapName, Outcome> {
    Ok(name.parse::<MapName>()?)
}

/// Runs the exhaustive oracle, spreading partitions over `jobs` threads.
pub fn verify_parallel(
    map: MapName,
    ground: GroundSet,
    bound: usize,
    jobs: usize,
) -> Result<VerificationReport, Error> {
    let plan = VerificationPlan::new(map, ground, bound)?;
    let n = plan.partitions();
    if jobs <= 1 {
        return Ok(plan.finish((0..n).map(|k| plan.run_partition(k))));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    // collect() keeps partition order, so the merge is deterministic.
    let parts: Vec<_> = pool.install(|| (0..n).into_par_iter().map(|k| plan.run_partition(k)).collect());
    Ok(plan.finish(parts))
}

fn verify(a: &VerifyArgs, bound: usize) -> CmdResult {
    let map = parse_map(&a.map)?;
    let ground = require_ground(&a.ground)?;
    if a.jobs == 0 {
        return Err(Outcome::usage("error: --jobs must be at least 1"));
    }
    let report = verify_parallel(map, ground, bound, a.jobs)?;
    let text = match a.format {
        Format::Json => output::json(&output::ReportJson::from(&report)) + "\n",
        _ => report.to_string(),
    };
    Ok(if report.passed() {
        Outcome::ok(text)
    } else {
        Outcome::failed(text)
    })
}

fn roundtrip(a: &RoundtripArgs) -> CmdResult {
    let map = parse_map(&a.map)?;
    let ground = require_ground(&a.ground)?;
    let mut failures = Vec::new();
    for i in 0..a.samples {
        let seed = a.seed.wrapping_add(i);
        let p = match map {
            MapName::PsMap => sample_permutation(&ground, seed),
            MapName::Phi | MapName::Psi => sample_all_odd(&ground, seed)?,
        };
        let image = map.forward(&p)?;
        let lands = match map {
            // ps is an involution over everything; it must swap the two classes.
            MapName::PsMap => p.e1_e2_same_cycle() != image.e1_e2_same_cycle(),
            _ => map.codomain().matches(&image),
        };
        let ok = lands && map.inverse(&image).as_ref() == Ok(&p);
        if !ok {
            failures.push(p.to_string());
        }
    }
    let text = match a.format {
        Format::Json => {
            output::json(&output::RoundtripJson {
                map: map.name(),
                ground_size: ground.len(),
                seed: a.seed,
                samples: a.samples,
                failures: &failures,
            }) + "\n"
        }
        _ => {
            let mut text = format!(
                "map: {}\nground_size: {}\nseed: {}\nsamples: {}\nfailures: {}\n",
                map.name(),
                ground.len(),
                a.seed,
                a.samples,
                failures.len()
            );
            for f in &failures {
                let _ = writeln!(text, "  {f}");
            }
            text
        }
    };
    Ok(if failures.is_empty() {
        Outcome::ok(text)
    } else {
        Outcome::failed(text)
    })
}
