//! Exact generating functions: the unimodal rank series by three independent
//! routes, partition rank/crank tables, and the auxiliary one-variable series
//! (ospt, crank zero, distinct-part pairs, the mock theta function).

mod partitions;
mod tables;
mod unimodal;

pub use partitions::{
    crank_zero_series, ospt_from_moments, ospt_series, partition_stat_bivariate, psi_series,
    s_series, PartitionStat,
};
pub use tables::{unimodal_moments, Route, UnimodalTableSet};
pub use unimodal::{
    max_rank, u_m_series, u_m_series_with, unimodal_bivariate, unimodal_total_series,
    v_m_terms, v_m_theta_series, RowEvaluator,
};
