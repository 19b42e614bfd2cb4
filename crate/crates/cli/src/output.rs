use cyclebreak::{CyclePermutation, VerificationReport};
use serde::Serialize;

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn one_line(p: &CyclePermutation) -> String {
    let images: Vec<String> = p.to_one_line().iter().map(u32::to_string).collect();
    format!("[{}]", images.join(","))
}

/// Report schema; field order is part of the format.
#[derive(Serialize)]
pub struct ReportJson<'a> {
    pub map: &'a str,
    pub ground_size: usize,
    pub domain_class: &'a str,
    pub codomain_class: &'a str,
    pub domain_count: u64,
    pub codomain_count: u64,
    pub image_count: u64,
    pub bijective: bool,
    pub round_trip_ok: bool,
    pub counterexamples: Vec<CounterexampleJson<'a>>,
}

#[derive(Serialize)]
pub struct CounterexampleJson<'a> {
    pub input: &'a str,
    pub kind: &'a str,
    pub witness: &'a str,
}

impl<'a> From<&'a VerificationReport> for ReportJson<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        ReportJson {
            map: r.map.name(),
            ground_size: r.ground_size(),
            domain_class: r.domain_class.name(),
            codomain_class: r.codomain_class.name(),
            domain_count: r.domain_count,
            codomain_count: r.codomain_count,
            image_count: r.image_count,
            bijective: r.bijective,
            round_trip_ok: r.round_trip_ok,
            counterexamples: r
                .counterexamples
                .iter()
                .map(|c| CounterexampleJson {
                    input: &c.input,
                    kind: c.kind.name(),
                    witness: &c.witness,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ApplyJson<'a> {
    pub map: &'a str,
    pub ground: &'a [u32],
    pub input: String,
    pub output: String,
    pub one_line: Vec<u32>,
}

#[derive(Serialize)]
pub struct StepJson {
    pub depth: usize,
    pub rule: &'static str,
    pub before: String,
    pub after: String,
}

#[derive(Serialize)]
pub struct TraceJson<'a> {
    pub map: &'a str,
    pub input: String,
    pub result: String,
    pub steps: Vec<StepJson>,
}

#[derive(Serialize)]
pub struct CountJson {
    pub class: &'static str,
    pub ground_size: usize,
    pub enumerated: u64,
    pub expected: Option<String>,
    pub matches: Option<bool>,
}

#[derive(Serialize)]
pub struct RoundtripJson<'a> {
    pub map: &'static str,
    pub ground_size: usize,
    pub seed: u64,
    pub samples: u64,
    pub failures: &'a [String],
}
