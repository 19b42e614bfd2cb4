//! Cycle breaking and merging, and the bijections built from them.
//!
//! `phi` sends the all-odd permutations A(S) of an even-size ground set S
//! onto P(S), the permutations whose only even cycle is the one holding the
//! ground minimum. `psi` iterates `phi`, peeling off one even cycle at a
//! time, and lands in the all-even permutations B(S).

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{ClassTag, Cycle, CyclePermutation};

/// Which case of the recursion produced a [`TraceStep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceRule {
    /// Two-element ground: merge the two fixed points.
    Base,
    /// `e1`, `e2` in different odd cycles: merge them into one even cycle.
    MergeASplit,
    /// `e1`, `e2` share an odd cycle: break it. The result is either in
    /// `P_SPLIT` (final) or in `U` (continued by a swap).
    BreakToPSplit,
    /// Exchange `e1` and `e2` so that `e1` sits in the even cycle.
    UBranchSwap,
    /// Apply `phi` to what is left after removing the even cycle of `e1`.
    Recurse,
    /// Merge the two even cycles of `e1` and `e2`.
    FinalMerge,
    /// Set aside the even cycle holding the current minimum.
    Peel,
    /// Put a peeled cycle back and undo `phi`.
    Unpeel,
}

impl TraceRule {
    pub fn name(self) -> &'static str {
        match self {
            TraceRule::Base => "BASE",
            TraceRule::MergeASplit => "MERGE_A_SPLIT",
            TraceRule::BreakToPSplit => "BREAK_TO_P_SPLIT",
            TraceRule::UBranchSwap => "U_BRANCH_SWAP",
            TraceRule::Recurse => "RECURSE",
            TraceRule::FinalMerge => "FINAL_MERGE",
            TraceRule::Peel => "PEEL",
            TraceRule::Unpeel => "UNPEEL",
        }
    }
}

impl fmt::Display for TraceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rule application with snapshots on either side.
///
/// A `Recurse` step sits one level deeper than its caller; its `before` is
/// the restricted permutation handed down and its `after` is what came back.
/// The steps of the nested call follow it at the same depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub rule: TraceRule,
    pub before: CyclePermutation,
    pub after: CyclePermutation,
}

struct Recorder<'a>(Option<&'a mut Vec<TraceStep>>);

impl Recorder<'_> {
    fn push(&mut self, depth: usize, rule: TraceRule, before: &CyclePermutation, after: &CyclePermutation) {
        if let Some(steps) = self.0.as_deref_mut() {
            steps.push(TraceStep {
                depth,
                rule,
                before: before.clone(),
                after: after.clone(),
            });
        }
    }

    fn mark(&self) -> usize {
        self.0.as_deref().map_or(0, Vec::len)
    }

    fn insert(&mut self, at: usize, step: impl FnOnce() -> TraceStep) {
        if let Some(steps) = self.0.as_deref_mut() {
            steps.insert(at, step());
        }
    }
}

fn check_pair(p: &CyclePermutation, x: u32, y: u32) -> Result<()> {
    p.check_member(x)?;
    p.check_member(y)?;
    if x == y {
        return Err(Error::RepeatedElement(x, y));
    }
    Ok(())
}

/// Splits the cycle holding `x` and `y`. Written starting at `x`, the cycle
/// becomes the run from `x` up to just before `y`, and the run from `y` up
/// to just before `x`.
pub fn break_cycle(p: &CyclePermutation, x: u32, y: u32) -> Result<CyclePermutation> {
    check_pair(p, x, y)?;
    let i = p.cycle_index(x)?;
    let host = &p.cycles()[i];
    if !host.contains(y) {
        return Err(Error::NotSameCycle(x, y));
    }
    let mut seq = host.starting_at(x).expect("x in its own cycle");
    let k = seq.iter().position(|&z| z == y).expect("y in host cycle");
    let tail = seq.split_off(k);
    debug_assert_eq!(
        host.is_even(),
        seq.len() % 2 == tail.len() % 2,
        "break parity: even cycles split into equal parities, odd into opposite"
    );
    let mut cycles: Vec<Cycle> = p.cycles().to_vec();
    cycles[i] = Cycle::from_distinct(seq);
    cycles.push(Cycle::from_distinct(tail));
    Ok(p.with_cycles(cycles))
}

/// Joins the cycle of `x` (read from `x`) and the cycle of `y` (read from
/// `y`) into one cycle. Inverse of [`break_cycle`] with the same arguments.
pub fn merge_cycles(p: &CyclePermutation, x: u32, y: u32) -> Result<CyclePermutation> {
    check_pair(p, x, y)?;
    let ix = p.cycle_index(x)?;
    let iy = p.cycle_index(y)?;
    if ix == iy {
        return Err(Error::SameCycle(x, y));
    }
    let mut seq = p.cycles()[ix].starting_at(x).expect("x in its own cycle");
    seq.extend(p.cycles()[iy].starting_at(y).expect("y in its own cycle"));
    let mut cycles: Vec<Cycle> = p
        .cycles()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ix && i != iy)
        .map(|(_, c)| c.clone())
        .collect();
    cycles.push(Cycle::from_distinct(seq));
    Ok(p.with_cycles(cycles))
}

/// Relabels `x` as `y` and `y` as `x` (conjugation by the transposition).
pub fn swap_labels(p: &CyclePermutation, x: u32, y: u32) -> Result<CyclePermutation> {
    p.check_member(x)?;
    p.check_member(y)?;
    let swap = |z: u32| {
        if z == x {
            y
        } else if z == y {
            x
        } else {
            z
        }
    };
    Ok(p.with_cycles(p.cycles().iter().map(|c| c.relabel(swap)).collect()))
}

/// Breaks the cycle of `e1` and `e2` if they share one, merges their cycles
/// otherwise. An involution exchanging the two classes.
pub fn ps_map(p: &CyclePermutation) -> Result<CyclePermutation> {
    let (e1, e2) = p.distinguished()?;
    if p.e1_e2_same_cycle()? {
        break_cycle(p, e1, e2)
    } else {
        merge_cycles(p, e1, e2)
    }
}

fn check_even_ground(p: &CyclePermutation, allow_empty: bool) -> Result<()> {
    let n = p.len();
    if n == 0 && !allow_empty {
        return Err(Error::GroundTooSmall { required: 2, actual: 0 });
    }
    if n % 2 == 1 {
        return Err(Error::OddGroundSize(n));
    }
    Ok(())
}

/// The bijection A(S) → P(S) for a ground set S of even size.
pub fn phi(p: &CyclePermutation) -> Result<CyclePermutation> {
    check_phi_domain(p)?;
    Ok(phi_rec(p, 0, &mut Recorder(None)))
}

/// [`phi`] together with the rule applications it went through.
pub fn phi_traced(p: &CyclePermutation) -> Result<(CyclePermutation, Vec<TraceStep>)> {
    check_phi_domain(p)?;
    let mut steps = Vec::new();
    let out = phi_rec(p, 0, &mut Recorder(Some(&mut steps)));
    Ok((out, steps))
}

fn check_phi_domain(p: &CyclePermutation) -> Result<()> {
    check_even_ground(p, false)?;
    if !p.is_all_odd() {
        return Err(Error::NotAllOdd);
    }
    Ok(())
}

fn phi_rec(p: &CyclePermutation, depth: usize, rec: &mut Recorder<'_>) -> CyclePermutation {
    let (e1, e2) = p.distinguished().expect("ground of size >= 2");
    if p.len() == 2 {
        let out = merge_cycles(p, e1, e2).expect("two fixed points");
        rec.push(depth, TraceRule::Base, p, &out);
        return out;
    }
    match p.classify().expect("ground of size >= 2") {
        ClassTag::ASplit => {
            let out = merge_cycles(p, e1, e2).expect("e1, e2 in different cycles");
            rec.push(depth, TraceRule::MergeASplit, p, &out);
            out
        }
        ClassTag::A12 => {
            let broken = break_cycle(p, e1, e2).expect("e1, e2 share a cycle");
            rec.push(depth, TraceRule::BreakToPSplit, p, &broken);
            match broken.classify().expect("same ground") {
                ClassTag::PSplit => broken,
                ClassTag::U => {
                    let swapped = swap_labels(&broken, e1, e2).expect("members");
                    rec.push(depth, TraceRule::UBranchSwap, &broken, &swapped);
                    let (even, rest) = swapped.split_off_cycle(e1).expect("member");
                    assert!(
                        rest.len() % 2 == 0 && rest.len() + 2 <= p.len() && rest.ground().e1() == Some(e2),
                        "recursive ground shrinks, stays even and starts at e2"
                    );
                    let at = rec.mark();
                    let sub = phi_rec(&rest, depth + 1, rec);
                    rec.insert(at, || TraceStep {
                        depth: depth + 1,
                        rule: TraceRule::Recurse,
                        before: rest.clone(),
                        after: sub.clone(),
                    });
                    let joined = sub.with_cycle(even).expect("disjoint labels");
                    debug_assert_eq!(joined.classify(), Ok(ClassTag::Q));
                    let out = merge_cycles(&joined, e1, e2).expect("two even cycles");
                    rec.push(depth, TraceRule::FinalMerge, &joined, &out);
                    out
                }
                other => unreachable!("breaking an odd cycle of an all-odd permutation gave {other}"),
            }
        }
        other => unreachable!("phi called outside A(S): {other}"),
    }
}

/// Inverse of [`phi`], P(S) → A(S).
pub fn phi_inverse(p: &CyclePermutation) -> Result<CyclePermutation> {
    check_even_ground(p, false)?;
    if !p.is_in_p()? {
        return Err(Error::NotInP);
    }
    Ok(phi_inverse_rec(p))
}

fn phi_inverse_rec(p: &CyclePermutation) -> CyclePermutation {
    let (e1, e2) = p.distinguished().expect("ground of size >= 2");
    if p.len() == 2 {
        return break_cycle(p, e1, e2).expect("single 2-cycle");
    }
    match p.classify().expect("ground of size >= 2") {
        ClassTag::PSplit => merge_cycles(p, e1, e2).expect("e1, e2 in different cycles"),
        ClassTag::P12 => {
            let broken = break_cycle(p, e1, e2).expect("e1, e2 share a cycle");
            match broken.classify().expect("same ground") {
                ClassTag::ASplit => broken,
                ClassTag::Q => {
                    let (even, rest) = broken.split_off_cycle(e1).expect("member");
                    let sub = phi_inverse_rec(&rest);
                    let joined = sub.with_cycle(even).expect("disjoint labels");
                    let swapped = swap_labels(&joined, e1, e2).expect("members");
                    debug_assert_eq!(swapped.classify(), Ok(ClassTag::U));
                    merge_cycles(&swapped, e1, e2).expect("e1, e2 in different cycles")
                }
                other => unreachable!("breaking an even cycle of a P permutation gave {other}"),
            }
        }
        other => unreachable!("phi_inverse called outside P(S): {other}"),
    }
}

/// The bijection A(S) → B(S): apply [`phi`], set aside the even cycle of the
/// minimum, repeat on what remains.
pub fn psi(p: &CyclePermutation) -> Result<CyclePermutation> {
    check_psi_domain(p)?;
    Ok(psi_rec(p, &mut Recorder(None)))
}

/// [`psi`] together with every `phi` step and peel.
pub fn psi_traced(p: &CyclePermutation) -> Result<(CyclePermutation, Vec<TraceStep>)> {
    check_psi_domain(p)?;
    let mut steps = Vec::new();
    let out = psi_rec(p, &mut Recorder(Some(&mut steps)));
    Ok((out, steps))
}

fn check_psi_domain(p: &CyclePermutation) -> Result<()> {
    check_even_ground(p, true)?;
    if !p.is_all_odd() {
        return Err(Error::NotAllOdd);
    }
    Ok(())
}

fn psi_rec(p: &CyclePermutation, rec: &mut Recorder<'_>) -> CyclePermutation {
    let mut peeled = Vec::new();
    let mut rest = p.clone();
    while let Some(min) = rest.ground().e1() {
        let image = phi_rec(&rest, 0, rec);
        let (even, remaining) = image.split_off_cycle(min).expect("member");
        rec.push(0, TraceRule::Peel, &image, &remaining);
        peeled.push(even);
        rest = remaining;
    }
    p.with_cycles(peeled)
}

/// Inverse of [`psi`], B(S) → A(S).
pub fn psi_inverse(p: &CyclePermutation) -> Result<CyclePermutation> {
    check_psi_inverse_domain(p)?;
    Ok(psi_inverse_rec(p, &mut Recorder(None)))
}

/// [`psi_inverse`] with one `Unpeel` step per cycle.
pub fn psi_inverse_traced(p: &CyclePermutation) -> Result<(CyclePermutation, Vec<TraceStep>)> {
    check_psi_inverse_domain(p)?;
    let mut steps = Vec::new();
    let out = psi_inverse_rec(p, &mut Recorder(Some(&mut steps)));
    Ok((out, steps))
}

fn check_psi_inverse_domain(p: &CyclePermutation) -> Result<()> {
    check_even_ground(p, true)?;
    if !p.is_all_even() {
        return Err(Error::NotAllEven);
    }
    Ok(())
}

fn psi_inverse_rec(p: &CyclePermutation, rec: &mut Recorder<'_>) -> CyclePermutation {
    // Each cycle holds the minimum of itself and every cycle after it, so
    // rebuilding from the largest minimum down keeps every partial state in P.
    let mut acc = CyclePermutation::empty();
    for even in p.cycles().iter().rev() {
        let joined = acc.with_cycle(even.clone()).expect("disjoint labels");
        let next = phi_inverse_rec(&joined);
        rec.push(0, TraceRule::Unpeel, &joined, &next);
        acc = next;
    }
    acc
}

/// All cycles even, and each cycle (in order of minima) holds the minimum of
/// itself together with every later cycle.
pub fn has_peeling_property(p: &CyclePermutation) -> bool {
    let cycles = p.cycles();
    p.is_all_even()
        && cycles.iter().enumerate().all(|(i, c)| {
            let m = c.minimum();
            cycles[i..].iter().flat_map(Cycle::elements).all(|&x| x >= m)
        })
}
