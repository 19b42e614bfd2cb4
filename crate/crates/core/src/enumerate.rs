//! Exhaustive generation, class filters, counting formulas and seeded
//! sampling.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{CyclePermutation, GroundSet};

/// Exhaustive operations refuse ground sets larger than this unless the
/// caller raises the bound.
pub const DEFAULT_SAFETY_BOUND: usize = 10;

pub(crate) fn check_bound(ground: &GroundSet, bound: usize) -> Result<()> {
    if ground.len() > bound {
        return Err(Error::GroundTooLarge {
            actual: ground.len(),
            bound,
        });
    }
    Ok(())
}

/// Every permutation of a ground set, in lexicographic order of the
/// one-line form.
///
/// A stream can be restricted to the permutations whose one-line form begins
/// with a given ground element; the `n` such partitions, concatenated in
/// order, reproduce the full stream.
#[derive(Clone, Debug)]
pub struct Permutations {
    ground: GroundSet,
    // Indices into the ground set, one-line form.
    state: Option<Vec<usize>>,
    frozen: usize,
}

impl Permutations {
    pub fn new(ground: GroundSet, bound: usize) -> Result<Self> {
        check_bound(&ground, bound)?;
        let state = Some((0..ground.len()).collect());
        Ok(Permutations {
            ground,
            state,
            frozen: 0,
        })
    }

    /// Only the permutations sending the smallest ground element to the
    /// `first`-th smallest. For an empty ground, partition 0 holds the empty
    /// permutation.
    pub fn partition(ground: GroundSet, first: usize, bound: usize) -> Result<Self> {
        check_bound(&ground, bound)?;
        let n = ground.len();
        let state = if n == 0 {
            (first == 0).then(Vec::new)
        } else if first < n {
            let mut s = Vec::with_capacity(n);
            s.push(first);
            s.extend((0..n).filter(|&i| i != first));
            Some(s)
        } else {
            None
        };
        Ok(Permutations {
            ground,
            state,
            frozen: 1,
        })
    }

    /// Number of partitions of a ground set's stream.
    pub fn partition_count(ground: &GroundSet) -> usize {
        ground.len().max(1)
    }
}

/// Advances `s[from..]` to its next lexicographic arrangement.
fn next_arrangement(s: &mut [usize], from: usize) -> bool {
    let start = from.min(s.len());
    let tail = &mut s[start..];
    let n = tail.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && tail[i - 1] >= tail[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while tail[j] <= tail[i - 1] {
        j -= 1;
    }
    tail.swap(i - 1, j);
    tail[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = CyclePermutation;

    fn next(&mut self) -> Option<CyclePermutation> {
        let state = self.state.as_mut()?;
        let elems = self.ground.as_slice();
        let images: Vec<u32> = state.iter().map(|&i| elems[i]).collect();
        if !next_arrangement(state, self.frozen) {
            self.state = None;
        }
        Some(CyclePermutation::from_one_line(self.ground.clone(), &images).expect("arrangement is a permutation"))
    }
}

/// Every permutation of `ground`, refusing grounds above `bound`.
pub fn enumerate_permutations(ground: &GroundSet, bound: usize) -> Result<Permutations> {
    Permutations::new(ground.clone(), bound)
}

/// Named permutation classes that can be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    All,
    /// A(S): every cycle odd.
    AllOdd,
    /// B(S): every cycle even.
    AllEven,
    /// P(S): the minimum in an even cycle, every other cycle odd.
    P,
    SameCycleE1E2,
    DiffCycleE1E2,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 6] = [
        ClassFilter::All,
        ClassFilter::AllOdd,
        ClassFilter::AllEven,
        ClassFilter::P,
        ClassFilter::SameCycleE1E2,
        ClassFilter::DiffCycleE1E2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::All => "ALL",
            ClassFilter::AllOdd => "ALL_ODD",
            ClassFilter::AllEven => "ALL_EVEN",
            ClassFilter::P => "P",
            ClassFilter::SameCycleE1E2 => "SAME_CYCLE_E1E2",
            ClassFilter::DiffCycleE1E2 => "DIFF_CYCLE_E1E2",
        }
    }

    /// Whether `p` belongs to the class. Classes defined through `e1`/`e2`
    /// contain nothing over grounds too small to have them.
    pub fn matches(self, p: &CyclePermutation) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::AllOdd => p.is_all_odd(),
            ClassFilter::AllEven => p.is_all_even(),
            ClassFilter::P => p.is_in_p().unwrap_or(false),
            ClassFilter::SameCycleE1E2 => p.e1_e2_same_cycle().unwrap_or(false),
            ClassFilter::DiffCycleE1E2 => p.e1_e2_same_cycle().map(|same| !same).unwrap_or(false),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase().replace('-', "_");
        ClassFilter::ALL
            .into_iter()
            .find(|c| c.name() == upper)
            .ok_or_else(|| Error::UnsupportedClass {
                class: String::from(s),
                n: 0,
            })
    }
}

/// The members of one class, in the order of [`enumerate_permutations`].
pub fn enumerate_class(
    ground: &GroundSet,
    class: ClassFilter,
    bound: usize,
) -> Result<impl Iterator<Item = CyclePermutation>> {
    Ok(enumerate_permutations(ground, bound)?.filter(move |p| class.matches(p)))
}

/// `k!! = k (k-2) (k-4) ...` down to 1 or 2; `0!!` and `(-1)!!` are 1, as is
/// every `k <= 0`.
pub fn double_factorial(k: i64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut i = k;
    while i > 1 {
        acc *= BigUint::from(i as u64);
        i -= 2;
    }
    acc
}

/// Classes with a closed-form or tabulated count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountedClass {
    AllOdd,
    AllEven,
    P,
}

impl TryFrom<ClassFilter> for CountedClass {
    type Error = Error;

    fn try_from(c: ClassFilter) -> Result<Self> {
        match c {
            ClassFilter::AllOdd => Ok(CountedClass::AllOdd),
            ClassFilter::AllEven => Ok(CountedClass::AllEven),
            ClassFilter::P => Ok(CountedClass::P),
            other => Err(Error::UnsupportedClass {
                class: String::from(other.name()),
                n: 0,
            }),
        }
    }
}

/// All-odd counts on odd ground sizes `1, 3, 5, 7, 9`, produced by
/// exhaustive enumeration (see the `odd_size_table_matches_enumeration`
/// integration test).
const ALL_ODD_ODD_SIZES: [u64; 5] = [1, 3, 45, 1575, 99225];

/// Expected size of a class over a ground set of `n` elements.
///
/// For even `n = 2m` the three classes all have `((2m-1)!!)^2` members. The
/// all-odd class on odd `n` is served from an enumerated table up to `n = 9`.
pub fn expected_count(class: CountedClass, n: usize) -> Result<BigUint> {
    if n.is_multiple_of(2) {
        let d = double_factorial(n as i64 - 1);
        return Ok(&d * &d);
    }
    let unsupported = |name: &str| Error::UnsupportedClass {
        class: String::from(name),
        n,
    };
    match class {
        CountedClass::AllOdd => ALL_ODD_ODD_SIZES
            .get(n / 2)
            .map(|&c| BigUint::from(c))
            .ok_or_else(|| unsupported("ALL_ODD")),
        CountedClass::AllEven => Err(unsupported("ALL_EVEN")),
        CountedClass::P => Err(unsupported("P")),
    }
}

/// A seeded permutation with every cycle odd, for ground sets of even size.
///
/// Cycle lengths are drawn one at a time: with an even number of elements
/// left, an odd length at most one less; with an odd number left, an odd
/// length at most that number. Each cycle is filled from a seeded shuffle.
/// The result is not uniform over A(S).
pub fn sample_all_odd(ground: &GroundSet, seed: u64) -> Result<CyclePermutation> {
    if ground.len() % 2 == 1 {
        return Err(Error::OddGroundSize(ground.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = ground.as_slice().to_vec();
    pool.shuffle(&mut rng);
    let mut cycles = Vec::new();
    let mut rest = pool.as_slice();
    while !rest.is_empty() {
        let max = if rest.len().is_multiple_of(2) {
            rest.len() - 1
        } else {
            rest.len()
        };
        // Odd lengths 1, 3, ..., max.
        let len = 2 * rng.gen_range(0..=max / 2) + 1;
        let (cycle, tail) = rest.split_at(len);
        cycles.push(cycle.to_vec());
        rest = tail;
    }
    CyclePermutation::from_cycles(ground.clone(), cycles)
}

/// A seeded uniformly random permutation of `ground`.
pub fn sample_permutation(ground: &GroundSet, seed: u64) -> CyclePermutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut images = ground.as_slice().to_vec();
    images.shuffle(&mut rng);
    CyclePermutation::from_one_line(ground.clone(), &images).expect("shuffle is a permutation")
}
