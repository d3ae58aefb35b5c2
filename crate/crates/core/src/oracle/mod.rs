//! Exact deciders and brute-force reference solvers.

mod certificate;
mod check;
mod formula;
mod search;
mod spec;

pub use certificate::{Answer, Certificate, NoReason};
pub use check::{check_partition, CheckReport, Violation};
pub use formula::{
    hyper2color_brute, sat_brute, Clause, CnfFormula, Hypergraph, Literal, SatMode, DEFAULT_BRUTE_BOUND,
};
pub use search::{budget_from_env, exact_decide, naive_decide, DEFAULT_BUDGET};
pub use spec::{requirements, Neighborhood, PartitionSpec, Relation, Requirement, SpecKind};
