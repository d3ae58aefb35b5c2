//! Polynomial constructions for digraphs.
//!
//! Out-out `(1, 1)` via even cycles in terminal components, out-in `(1, 1)`
//! on strong digraphs via arc reduction, nebulas and their conversion to
//! and from partitions, extension along the condensation, and the
//! out-total `(1, 1)` layering.

mod condensation;
mod nebula;
mod out_total;
mod outdeg;
mod rule_a;

pub use condensation::condensation_extend;
pub use nebula::{nebula_to_partition, partition_to_nebula, Nebula};
pub use out_total::out_total_partition;
pub use outdeg::outdeg11_decide;
pub use rule_a::{inout11_strong_decide, lift_coloring, rule_a_reduce, Reduced, ReductionStep, ReductionTrace};
