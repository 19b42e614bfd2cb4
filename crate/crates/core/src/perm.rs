//! Permutations in canonical cycle form over arbitrary finite label sets.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite set of positive integer labels, kept sorted ascending.
///
/// The two smallest elements are the distinguished pair `e1`, `e2` that the
/// bijections break and merge around.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet(Vec<u32>);

impl GroundSet {
    /// Builds a ground set from labels in any order. Zero and repeated labels
    /// are rejected.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::InvalidGround("labels must be positive".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(GroundSet(elements))
    }

    /// The standard ground set `{1, ..., n}`.
    pub fn range(n: u32) -> Self {
        GroundSet((1..=n).collect())
    }

    pub fn empty() -> Self {
        GroundSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn index_of(&self, x: u32) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }

    /// Smallest element.
    pub fn e1(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Second smallest element.
    pub fn e2(&self) -> Option<u32> {
        self.0.get(1).copied()
    }

    /// The ground set with `removed` taken out. Elements of `removed` that
    /// are not members are ignored.
    pub fn without(&self, removed: &[u32]) -> GroundSet {
        GroundSet(self.0.iter().copied().filter(|x| !removed.contains(x)).collect())
    }

    fn check_member(&self, x: u32) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfGround(x))
        }
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// One cycle, stored with its minimum first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<u32>);

impl Cycle {
    /// Builds a cycle from its elements in cyclic order, rotating the minimum
    /// to the front.
    pub fn new(mut elements: Vec<u32>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                message: "empty cycle".into(),
            });
        }
        let mut seen = elements.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        rotate_min_first(&mut elements);
        Ok(Cycle(elements))
    }

    /// Caller guarantees the elements are nonempty and distinct.
    pub(crate) fn from_distinct(mut elements: Vec<u32>) -> Self {
        debug_assert!(!elements.is_empty());
        rotate_min_first(&mut elements);
        Cycle(elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; a cycle has at least one element.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    /// Fixed points count as odd cycles.
    pub fn is_odd(&self) -> bool {
        !self.is_even()
    }

    pub fn minimum(&self) -> u32 {
        self.0[0]
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.contains(&x)
    }

    /// Image of `x` under this cycle, if `x` belongs to it.
    pub fn successor(&self, x: u32) -> Option<u32> {
        let i = self.0.iter().position(|&y| y == x)?;
        Some(self.0[(i + 1) % self.0.len()])
    }

    /// The cyclic sequence written starting at `x`.
    pub fn starting_at(&self, x: u32) -> Option<Vec<u32>> {
        let i = self.0.iter().position(|&y| y == x)?;
        let mut seq = Vec::with_capacity(self.0.len());
        seq.extend_from_slice(&self.0[i..]);
        seq.extend_from_slice(&self.0[..i]);
        Some(seq)
    }

    pub(crate) fn relabel(&self, f: impl Fn(u32) -> u32) -> Cycle {
        Cycle::from_distinct(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn rotate_min_first(elements: &mut [u32]) {
    if let Some((i, _)) = elements.iter().enumerate().min_by_key(|&(_, &x)| x) {
        elements.rotate_left(i);
    }
}

/// Canonical form of a raw list of disjoint cycles: each cycle rotated so
/// its minimum leads, cycles sorted by minimum. Empty cycles are dropped.
pub fn canonicalize(mut cycles: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    cycles.retain(|c| !c.is_empty());
    for c in cycles.iter_mut() {
        rotate_min_first(c);
    }
    cycles.sort_unstable_by_key(|c| c[0]);
    cycles
}

/// Classification of a permutation relative to the two smallest ground
/// elements `e1` and `e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// All cycles odd, `e1` and `e2` in the same cycle.
    A12,
    /// All cycles odd, `e1` and `e2` in different cycles.
    ASplit,
    /// `e1` and `e2` share an even cycle, every other cycle odd.
    P12,
    /// `e1` in an even cycle, `e2` in an odd one, every other cycle odd.
    PSplit,
    /// `e1` and `e2` in distinct even cycles, every other cycle odd.
    Q,
    /// `e1` in an odd cycle, `e2` in an even one, every other cycle odd.
    U,
    /// Label-swapped image of `U`. Never produced by [`CyclePermutation::classify`],
    /// which reports the same set as `PSplit`.
    V,
    /// Every cycle even, and none of the tags above applies.
    AllEven,
    Other,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::A12 => "A12",
            ClassTag::ASplit => "A_SPLIT",
            ClassTag::P12 => "P12",
            ClassTag::PSplit => "P_SPLIT",
            ClassTag::Q => "Q",
            ClassTag::U => "U",
            ClassTag::V => "V",
            ClassTag::AllEven => "ALL_EVEN",
            ClassTag::Other => "OTHER",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A permutation of a [`GroundSet`] held as disjoint cycles.
///
/// Invariants: the cycles partition the ground set, each cycle has its
/// minimum first, cycles are sorted by minimum, and fixed points are stored
/// as 1-cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePermutation {
    ground: GroundSet,
    cycles: Vec<Cycle>,
}

impl CyclePermutation {
    /// The permutation of the empty ground set.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(ground: GroundSet) -> Self {
        let cycles = ground.as_slice().iter().map(|&x| Cycle(alloc::vec![x])).collect();
        CyclePermutation { ground, cycles }
    }

    /// Builds a permutation from disjoint cycles over `ground`. Ground
    /// elements not mentioned in any cycle become fixed points.
    pub fn from_cycles<I, C>(ground: GroundSet, cycles: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<u32>>,
    {
        let mut seen = alloc::vec![false; ground.len()];
        let mut out = Vec::new();
        for c in cycles {
            let c: Vec<u32> = c.into();
            for &x in &c {
                let i = ground.index_of(x).ok_or(Error::ElementOutOfGround(x))?;
                if core::mem::replace(&mut seen[i], true) {
                    return Err(Error::DuplicateElement(x));
                }
            }
            if !c.is_empty() {
                out.push(Cycle::from_distinct(c));
            }
        }
        for (i, &x) in ground.as_slice().iter().enumerate() {
            if !seen[i] {
                out.push(Cycle(alloc::vec![x]));
            }
        }
        out.sort_unstable_by_key(Cycle::minimum);
        Ok(CyclePermutation { ground, cycles: out })
    }

    /// Builds a permutation whose ground set is the union of the given
    /// disjoint cycles.
    pub fn from_disjoint_cycles<I, C>(cycles: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<u32>>,
    {
        let cycles: Vec<Vec<u32>> = cycles.into_iter().map(Into::into).collect();
        let ground = GroundSet::new(cycles.iter().flatten().copied())?;
        Self::from_cycles(ground, cycles)
    }

    /// Builds a permutation from its one-line form: `images[i]` is the image
    /// of the `i`-th smallest ground element.
    pub fn from_one_line(ground: GroundSet, images: &[u32]) -> Result<Self> {
        let n = ground.len();
        if images.len() != n {
            return Err(Error::NotAPermutation(alloc::format!(
                "{} images for a ground set of {} elements",
                images.len(),
                n
            )));
        }
        let mut targets = Vec::with_capacity(n);
        let mut hit = alloc::vec![false; n];
        for &y in images {
            let j = ground
                .index_of(y)
                .ok_or_else(|| Error::NotAPermutation(alloc::format!("image {y} is outside the ground set")))?;
            if core::mem::replace(&mut hit[j], true) {
                return Err(Error::NotAPermutation(alloc::format!("image {y} repeats")));
            }
            targets.push(j);
        }
        let elems = ground.as_slice();
        let mut visited = alloc::vec![false; n];
        let mut cycles = Vec::new();
        // Starting from the smallest unvisited index yields min-first cycles
        // already sorted by minimum.
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cycle.push(elems[i]);
                i = targets[i];
            }
            cycles.push(Cycle(cycle));
        }
        Ok(CyclePermutation { ground, cycles })
    }

    /// Images of the ground elements in ascending order.
    pub fn to_one_line(&self) -> Vec<u32> {
        let mut images = alloc::vec![0; self.ground.len()];
        for c in &self.cycles {
            let k = c.len();
            for (i, &x) in c.0.iter().enumerate() {
                let slot = self.ground.index_of(x).expect("cycle element in ground");
                images[slot] = c.0[(i + 1) % k];
            }
        }
        images
    }

    /// Parses cycle notation such as `"(1 3)(2,4)"` or `"()"`.
    pub fn parse(text: &str, ground: GroundSet) -> Result<Self> {
        let cycles = parse_cycle_text(text)?;
        Self::from_cycles(ground, cycles)
    }

    /// Canonical cycle notation. With `include_fixed_points` off, 1-cycles
    /// are omitted; a permutation with nothing left to print is written `()`.
    pub fn format(&self, include_fixed_points: bool) -> String {
        let mut out = String::new();
        for c in &self.cycles {
            if include_fixed_points || c.len() > 1 {
                out.push_str(&c.to_string());
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn image(&self, x: u32) -> Option<u32> {
        self.cycles.iter().find_map(|c| c.successor(x))
    }

    pub(crate) fn cycle_index(&self, x: u32) -> Result<usize> {
        self.cycles
            .iter()
            .position(|c| c.contains(x))
            .ok_or(Error::ElementOutOfGround(x))
    }

    pub fn cycle_containing(&self, x: u32) -> Result<&Cycle> {
        self.cycle_index(x).map(|i| &self.cycles[i])
    }

    pub fn is_all_odd(&self) -> bool {
        self.cycles.iter().all(Cycle::is_odd)
    }

    pub fn is_all_even(&self) -> bool {
        self.cycles.iter().all(Cycle::is_even)
    }

    /// Membership in P: the cycle of the ground minimum is even and every
    /// other cycle is odd.
    pub fn is_in_p(&self) -> Result<bool> {
        let e1 = self
            .ground
            .e1()
            .ok_or(Error::GroundTooSmall { required: 1, actual: 0 })?;
        // Cycles are sorted by minimum, so e1's cycle comes first.
        debug_assert!(self.cycles[0].contains(e1));
        Ok(self.cycles[0].is_even() && self.cycles[1..].iter().all(Cycle::is_odd))
    }

    /// Whether `e1` and `e2` lie in the same cycle.
    pub fn e1_e2_same_cycle(&self) -> Result<bool> {
        let (e1, e2) = self.distinguished()?;
        Ok(self.cycle_containing(e1)?.contains(e2))
    }

    pub(crate) fn distinguished(&self) -> Result<(u32, u32)> {
        match (self.ground.e1(), self.ground.e2()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::GroundTooSmall {
                required: 2,
                actual: self.ground.len(),
            }),
        }
    }

    /// Assigns the unique [`ClassTag`]. Named classes take precedence over
    /// `AllEven`, which takes precedence over `Other`.
    pub fn classify(&self) -> Result<ClassTag> {
        let (e1, e2) = self.distinguished()?;
        let i1 = self.cycle_index(e1)?;
        let i2 = self.cycle_index(e2)?;
        let c1 = &self.cycles[i1];
        let c2 = &self.cycles[i2];
        let rest_odd = self
            .cycles
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != i1 && i != i2)
            .all(|(_, c)| c.is_odd());
        let tag = if rest_odd {
            match (i1 == i2, c1.is_even(), c2.is_even()) {
                (true, false, _) => ClassTag::A12,
                (true, true, _) => ClassTag::P12,
                (false, false, false) => ClassTag::ASplit,
                (false, true, false) => ClassTag::PSplit,
                (false, true, true) => ClassTag::Q,
                (false, false, true) => ClassTag::U,
            }
        } else if self.is_all_even() {
            ClassTag::AllEven
        } else {
            ClassTag::Other
        };
        Ok(tag)
    }

    /// Splits off the cycle containing `x`, returning it together with the
    /// restriction of `self` to the remaining ground.
    pub fn split_off_cycle(&self, x: u32) -> Result<(Cycle, CyclePermutation)> {
        let i = self.cycle_index(x)?;
        let mut cycles = self.cycles.clone();
        let c = cycles.remove(i);
        let ground = self.ground.without(c.elements());
        Ok((c, CyclePermutation { ground, cycles }))
    }

    /// Disjoint union with one more cycle on fresh labels.
    pub fn with_cycle(&self, cycle: Cycle) -> Result<CyclePermutation> {
        if let Some(&x) = cycle.elements().iter().find(|&&x| self.ground.contains(x)) {
            return Err(Error::DuplicateElement(x));
        }
        let ground = GroundSet::new(self.ground.as_slice().iter().chain(cycle.elements()).copied())?;
        let mut cycles = self.cycles.clone();
        let at = cycles.partition_point(|c| c.minimum() < cycle.minimum());
        cycles.insert(at, cycle);
        Ok(CyclePermutation { ground, cycles })
    }

    pub(crate) fn check_member(&self, x: u32) -> Result<()> {
        self.ground.check_member(x)
    }

    /// Replaces the cycles, keeping the ground; `cycles` must already be
    /// canonical rotations covering the ground.
    pub(crate) fn with_cycles(&self, mut cycles: Vec<Cycle>) -> CyclePermutation {
        cycles.sort_unstable_by_key(Cycle::minimum);
        CyclePermutation {
            ground: self.ground.clone(),
            cycles,
        }
    }

    /// Multiset of cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Cycle::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(true))
    }
}

/// Grammar: `permutation := cycle+ | "()"`, `cycle := "(" int (sep int)* ")"`,
/// `sep := " "+ | ","`. Whitespace around the whole text is ignored.
fn parse_cycle_text(text: &str) -> Result<Vec<Vec<u32>>> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body == "()" {
        return Ok(Vec::new());
    }
    let bytes = body.as_bytes();
    let err = |offset: usize, message: &str| Error::Parse {
        offset: lead + offset,
        message: message.into(),
    };
    if bytes.is_empty() {
        return Err(err(0, "expected `(`"));
    }
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(err(i, "expected `(`"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected a positive integer"));
            }
            let value: u32 = body[start..i].parse().map_err(|_| err(start, "integer out of range"))?;
            if value == 0 {
                return Err(err(start, "labels must be positive"));
            }
            cycle.push(value);
            match bytes.get(i) {
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(b',') => i += 1,
                Some(b' ') => {
                    while bytes.get(i) == Some(&b' ') {
                        i += 1;
                    }
                }
                Some(_) => return Err(err(i, "expected a separator or `)`")),
                None => return Err(err(i, "unterminated cycle")),
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}
