//! Independent checkers and instance generators used to test the orienters.

pub mod generate;
pub mod verify;

pub use generate::{gen_instances, InstanceSpec};
pub use verify::{brute_force_feasible, verify, Verdict, Violation, DEFAULT_TRAIL_CAP};
