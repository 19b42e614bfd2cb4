//! Cycle-breaking bijections on permutations.
//!
//! Permutations are held in canonical cycle form over arbitrary finite sets
//! of positive labels ([`GroundSet`]). The two smallest labels `e1 < e2` are
//! the distinguished pair every map works around:
//!
//! * [`ps_map`] breaks the cycle through `e1` and `e2`, or merges their two
//!   cycles. It swaps the permutations where `e1`, `e2` share a cycle with
//!   those where they do not.
//! * [`phi`] maps the all-odd-cycle permutations A(S) of an even-size set
//!   onto P(S), where only the cycle of `e1` is even.
//! * [`psi`] iterates `phi`, peeling off the even cycle of the current
//!   minimum each time, and lands in the all-even-cycle permutations B(S).
//!
//! All three come with inverses, and [`verify_map`] certifies them by
//! exhaustive enumeration. The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use cyclebreak::{phi, psi, CyclePermutation, GroundSet};
//!
//! let p = CyclePermutation::parse("(1 2 3)(4)", GroundSet::range(4)).unwrap();
//! assert_eq!(phi(&p).unwrap().to_string(), "(1 3 2 4)");
//!
//! let q = CyclePermutation::parse("()", GroundSet::range(4)).unwrap();
//! assert_eq!(psi(&q).unwrap().to_string(), "(1 2)(3 4)");
//! ```
#![no_std]

extern crate alloc;

mod bijection;
mod enumerate;
mod error;
mod perm;
mod verify;

pub use bijection::{
    break_cycle, has_peeling_property, merge_cycles, phi, phi_inverse, phi_traced, ps_map, psi, psi_inverse,
    psi_inverse_traced, psi_traced, swap_labels, TraceRule, TraceStep,
};
pub use enumerate::{
    double_factorial, enumerate_class, enumerate_permutations, expected_count, sample_all_odd, sample_permutation,
    ClassFilter, CountedClass, Permutations, DEFAULT_SAFETY_BOUND,
};
pub use error::{Error, Result};
pub use perm::{canonicalize, ClassTag, Cycle, CyclePermutation, GroundSet};
pub use verify::{
    verify_map, Counterexample, FailureKind, MapName, PartialVerification, VerificationPlan, VerificationReport,
    MAX_COUNTEREXAMPLES,
};
