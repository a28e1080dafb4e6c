//! Exact Bernoulli machinery, binomial double sums, the Euler–Maclaurin oracle and
//! auxiliary sums.

pub mod altzeta;
pub mod bernoulli;
pub mod constants;
pub mod hasse;
pub mod oracle;
pub mod sums;

pub use altzeta::{briggs_chowla, dilcher_forward, printed_inversion, stieltjes_from_altzeta, stieltjes_from_moments};
pub use bernoulli::{bernoulli_number, bernoulli_poly, binomial, factorial, harmonic};
pub use hasse::{
    alt_zeta_hasse, alt_zeta_log_moment, binomial_log_gamma, hasse_stieltjes, hasse_stieltjes_with,
    kronecker_degenerate_sum, SumDiagnostics, HASSE_CAP,
};
pub use oracle::{em_hurwitz, limit_stieltjes_oracle, limit_stieltjes_oracle_all, oracle_zeta, oracle_zeta_derivs};
pub use sums::{
    digamma_dirichlet, harmonic_dirichlet, harmonic_excess, kanemitsu_companion, kanemitsu_partial, kanemitsu_sum,
    plouffe_zeta3, plouffe_zeta3_terms,
};
