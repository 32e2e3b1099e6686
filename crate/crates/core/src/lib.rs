//! Exact arithmetic for Tuenter polynomials.
//!
//! `P_0 = 1` and `P_{k+1}(n) = n^2 (P_k(n) - P_k(n-1)) + n P_k(n-1)`. The crate
//! builds these polynomials, expands them in the descending-factorial basis
//! `(n)_j = n(n-1)...(n-j+1)`, and checks the coefficient triangle `c_{j,k}`
//! three ways: the defining recurrence, the Catalan-triangle closed form, and a
//! brute-force binomial sum. It also covers the diagonal family `F_k(j)` with
//! its factorization conjecture and the Golay-Rudin-Shapiro partial sums whose
//! maxima sit at `c_{2,k}`.
//!
//! No floating point is used anywhere; every value is an arbitrary-precision
//! integer or a reduced rational.

pub mod error;
pub mod fpoly;
pub mod grs;
pub mod poly;
pub mod tuenter;
pub mod verify;

pub use error::{CoreError, Result};
pub use fpoly::{
    check_conjecture, double_factorial_odd, f_polynomial, f_value, f_value_nested, product_factor,
    ConjectureReport, FValue,
};
pub use grs::{cross_check_c2, grs_scan, grs_term, C2CrossCheck, C2Position, GrsScan};
pub use poly::{falling_factorial, from_falling_basis, interpolate, Int, Poly, Rational};
pub use tuenter::{
    apply_r, binomial, brute_sum, c2_closed, catalan_entry, catalan_triangle, coeff_closed,
    coeff_table, tuenter_poly, verify_sum_identity, CatalanEntry, CoeffTriangle, FallingCoeffs,
    SumWitness, TuenterFamily,
};
pub use verify::{run_sweep, CheckSummary, SweepConfig, SweepReport};
