//! Brute-force certification of the bijections.
//!
//! A check walks every permutation of the ground set once. Members of the
//! domain class are pushed through the map and then back through its
//! inverse; members of the codomain class go the other way. The walk splits
//! into partitions by the first entry of the one-line form, so callers can
//! farm partitions out to worker threads and merge the results with
//! [`VerificationPlan::finish`]. The merged report does not depend on how
//! the work was divided.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bijection::{has_peeling_property, phi, phi_inverse, ps_map, psi, psi_inverse};
use crate::enumerate::{check_bound, ClassFilter, Permutations};
use crate::error::{Error, Result};
use crate::perm::{CyclePermutation, GroundSet};

/// Counterexamples kept per report; counts are exact regardless.
pub const MAX_COUNTEREXAMPLES: usize = 32;

/// A map the oracle knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    Phi,
    Psi,
    PsMap,
}

impl MapName {
    pub fn name(self) -> &'static str {
        match self {
            MapName::Phi => "phi",
            MapName::Psi => "psi",
            MapName::PsMap => "ps_map",
        }
    }

    pub fn domain(self) -> ClassFilter {
        match self {
            MapName::Phi | MapName::Psi => ClassFilter::AllOdd,
            MapName::PsMap => ClassFilter::SameCycleE1E2,
        }
    }

    pub fn codomain(self) -> ClassFilter {
        match self {
            MapName::Phi => ClassFilter::P,
            MapName::Psi => ClassFilter::AllEven,
            MapName::PsMap => ClassFilter::DiffCycleE1E2,
        }
    }

    pub fn forward(self, p: &CyclePermutation) -> Result<CyclePermutation> {
        match self {
            MapName::Phi => phi(p),
            MapName::Psi => psi(p),
            MapName::PsMap => ps_map(p),
        }
    }

    pub fn inverse(self, p: &CyclePermutation) -> Result<CyclePermutation> {
        match self {
            MapName::Phi => phi_inverse(p),
            MapName::Psi => psi_inverse(p),
            MapName::PsMap => ps_map(p),
        }
    }

    fn check_ground(self, ground: &GroundSet) -> Result<()> {
        let n = ground.len();
        match self {
            MapName::Phi if n == 0 => Err(Error::GroundTooSmall { required: 2, actual: 0 }),
            MapName::Phi | MapName::Psi if n % 2 == 1 => Err(Error::OddGroundSize(n)),
            MapName::PsMap if n < 2 => Err(Error::GroundTooSmall { required: 2, actual: n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(MapName::Phi),
            "psi" => Ok(MapName::Psi),
            "ps" | "ps_map" | "ps-map" => Ok(MapName::PsMap),
            other => Err(Error::UnknownMap(other.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailureKind {
    /// The forward map rejected a domain member.
    MapError,
    /// The image is outside the codomain class.
    NotInCodomain,
    /// The image is all even but its cycles fail the peeling order.
    Peeling,
    /// Two domain members share an image; the witness is the other input.
    Collision,
    /// The inverse did not return the original input.
    RoundTrip,
    /// The inverse rejected a codomain member.
    InverseError,
    /// Forward after inverse did not return a codomain member.
    InverseRoundTrip,
}

impl FailureKind {
    pub fn name(self) -> &'static str {
        match self {
            FailureKind::MapError => "MAP_ERROR",
            FailureKind::NotInCodomain => "NOT_IN_CODOMAIN",
            FailureKind::Peeling => "PEELING",
            FailureKind::Collision => "COLLISION",
            FailureKind::RoundTrip => "ROUND_TRIP",
            FailureKind::InverseError => "INVERSE_ERROR",
            FailureKind::InverseRoundTrip => "INVERSE_ROUND_TRIP",
        }
    }

    fn breaks_round_trip(self) -> bool {
        matches!(
            self,
            FailureKind::RoundTrip | FailureKind::InverseError | FailureKind::InverseRoundTrip
        )
    }
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub kind: FailureKind,
    pub witness: String,
}

/// Outcome of checking one map over one ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub map: MapName,
    pub ground: GroundSet,
    pub domain_class: ClassFilter,
    pub codomain_class: ClassFilter,
    pub domain_count: u64,
    pub codomain_count: u64,
    /// Distinct images of the domain.
    pub image_count: u64,
    pub bijective: bool,
    pub round_trip_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn passed(&self) -> bool {
        self.bijective && self.round_trip_ok
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map: {}", self.map)?;
        writeln!(f, "ground: {}", self.ground)?;
        writeln!(f, "ground_size: {}", self.ground_size())?;
        writeln!(f, "domain_class: {}", self.domain_class)?;
        writeln!(f, "codomain_class: {}", self.codomain_class)?;
        writeln!(f, "domain_count: {}", self.domain_count)?;
        writeln!(f, "codomain_count: {}", self.codomain_count)?;
        writeln!(f, "image_count: {}", self.image_count)?;
        writeln!(f, "bijective: {}", self.bijective)?;
        writeln!(f, "round_trip_ok: {}", self.round_trip_ok)?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            writeln!(f, "  {} {} -> {}", c.kind, c.input, c.witness)?;
        }
        Ok(())
    }
}

/// Results of one partition, ready to be merged.
#[derive(Clone, Debug, Default)]
pub struct PartialVerification {
    domain_count: u64,
    codomain_count: u64,
    // image one-line form -> input one-line form
    images: BTreeMap<Vec<u32>, Vec<u32>>,
    failures: Vec<Counterexample>,
    failure_kinds: Vec<FailureKind>,
}

impl PartialVerification {
    fn fail(&mut self, input: &CyclePermutation, kind: FailureKind, witness: String) {
        self.failure_kinds.push(kind);
        if self.failures.len() < MAX_COUNTEREXAMPLES {
            self.failures.push(Counterexample {
                input: input.to_string(),
                kind,
                witness,
            });
        }
    }
}

/// A validated (map, ground) pair.
#[derive(Clone, Debug)]
pub struct VerificationPlan {
    map: MapName,
    ground: GroundSet,
    bound: usize,
}

impl VerificationPlan {
    pub fn new(map: MapName, ground: GroundSet, bound: usize) -> Result<Self> {
        check_bound(&ground, bound)?;
        map.check_ground(&ground)?;
        Ok(VerificationPlan { map, ground, bound })
    }

    pub fn partitions(&self) -> usize {
        Permutations::partition_count(&self.ground)
    }

    pub fn run_partition(&self, index: usize) -> PartialVerification {
        let map = self.map;
        let (domain, codomain) = (map.domain(), map.codomain());
        let mut part = PartialVerification::default();
        let perms = Permutations::partition(self.ground.clone(), index, self.bound).expect("bound checked in new");
        for p in perms {
            if domain.matches(&p) {
                part.domain_count += 1;
                self.check_forward(&p, &mut part);
            }
            if codomain.matches(&p) {
                part.codomain_count += 1;
                match map.inverse(&p) {
                    Err(e) => part.fail(&p, FailureKind::InverseError, e.to_string()),
                    Ok(pre) => match map.forward(&pre) {
                        Ok(back) if back == p => {}
                        Ok(back) => part.fail(&p, FailureKind::InverseRoundTrip, back.to_string()),
                        Err(e) => part.fail(&p, FailureKind::InverseRoundTrip, e.to_string()),
                    },
                }
            }
        }
        part
    }

    fn check_forward(&self, p: &CyclePermutation, part: &mut PartialVerification) {
        let map = self.map;
        let image = match map.forward(p) {
            Ok(image) => image,
            Err(e) => return part.fail(p, FailureKind::MapError, e.to_string()),
        };
        if !map.codomain().matches(&image) {
            part.fail(p, FailureKind::NotInCodomain, image.to_string());
        } else if map == MapName::Psi && !has_peeling_property(&image) {
            part.fail(p, FailureKind::Peeling, image.to_string());
        }
        match map.inverse(&image) {
            Ok(back) if back == *p => {}
            Ok(back) => part.fail(p, FailureKind::RoundTrip, back.to_string()),
            Err(e) => part.fail(p, FailureKind::RoundTrip, e.to_string()),
        }
        let key = image.to_one_line();
        if let Some(prev) = part.images.get(&key) {
            let prev = CyclePermutation::from_one_line(self.ground.clone(), prev).expect("stored one-line");
            part.fail(p, FailureKind::Collision, prev.to_string());
        } else {
            part.images.insert(key, p.to_one_line());
        }
    }

    /// Merges partition results, which must be given in partition order.
    pub fn finish(&self, parts: impl IntoIterator<Item = PartialVerification>) -> VerificationReport {
        let mut domain_count = 0;
        let mut codomain_count = 0;
        let mut images: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
        let mut kinds = Vec::new();
        let mut counterexamples = Vec::new();
        for part in parts {
            domain_count += part.domain_count;
            codomain_count += part.codomain_count;
            kinds.extend(part.failure_kinds);
            counterexamples.extend(part.failures);
            for (image, input) in part.images {
                if let Some(prev) = images.get(&image) {
                    let input = CyclePermutation::from_one_line(self.ground.clone(), &input).expect("stored");
                    let prev = CyclePermutation::from_one_line(self.ground.clone(), prev).expect("stored");
                    kinds.push(FailureKind::Collision);
                    counterexamples.push(Counterexample {
                        input: input.to_string(),
                        kind: FailureKind::Collision,
                        witness: prev.to_string(),
                    });
                } else {
                    images.insert(image, input);
                }
            }
        }
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        let image_count = images.len() as u64;
        let image_failure = kinds.iter().any(|k| {
            matches!(
                k,
                FailureKind::MapError | FailureKind::NotInCodomain | FailureKind::Peeling | FailureKind::Collision
            )
        });
        let bijective = !image_failure && image_count == domain_count && domain_count == codomain_count;
        let round_trip_ok = !kinds.iter().any(|k| k.breaks_round_trip());
        VerificationReport {
            map: self.map,
            ground: self.ground.clone(),
            domain_class: self.map.domain(),
            codomain_class: self.map.codomain(),
            domain_count,
            codomain_count,
            image_count,
            bijective,
            round_trip_ok,
            counterexamples,
        }
    }
}

/// Single-threaded exhaustive check of `map` over `ground`.
pub fn verify_map(map: MapName, ground: &GroundSet, bound: usize) -> Result<VerificationReport> {
    let plan = VerificationPlan::new(map, ground.clone(), bound)?;
    let parts: Vec<_> = (0..plan.partitions()).map(|k| plan.run_partition(k)).collect();
    Ok(plan.finish(parts))
}
