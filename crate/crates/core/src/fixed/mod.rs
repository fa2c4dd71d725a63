//! Promotion-fixed tableaux: explicit constructions, brute-force search,
//! counting formulas and permutation statistics.

mod construct;
mod csp;
mod enumerate;
mod permutations;
mod search;

pub use construct::{
    beta_shape, block_fixed_points, construct_r2, construct_ra, fixed_straight, gamma_shape,
    promotion_equivariance_check, r2_concatenate, reindex, Construction,
};
pub use csp::{csp_evaluate, q_hook_value, CspReport};
pub use enumerate::{
    enumerate_syt, enumerate_syt_with_limit, max_cells, set_compositions, SetComposition, SytIter,
    DEFAULT_MAX_CELLS, MAX_CELLS_ENV,
};
pub use permutations::{
    has_stab2_recording, permutations_with_stab, stab2_count, stab2_recording_tableau,
    stab_distribution, stab_distribution_brute, stab_of_permutation,
};
pub use search::{count_fixed, enumerate_fixed, lr_coefficient, row_superstandard};
