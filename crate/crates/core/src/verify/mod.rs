//! Verification harness producing [`CheckReport`]s.

mod convergence;
mod distribution;
mod exact;
mod report;

pub use convergence::{
    check_analytic, check_asymptotics, check_moments, DEFAULT_CHECKPOINTS,
};
pub use distribution::{
    check_distribution, empirical_distribution, kolmogorov_distance, DistRow, EmpiricalDist,
};
pub use exact::{
    check_identities, check_log_concavity, check_oracles, check_partition_tail, check_table1,
    log_concavity_on, table1_value, TABLE1,
};
pub use report::{CheckReport, Status, Witness, WITNESS_CAP};
