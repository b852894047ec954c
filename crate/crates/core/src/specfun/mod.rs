//! Core special functions: gamma, Riemann/Hurwitz zeta with analytic
//! s-derivatives, Bessel J/I with derivatives, Bessel-type zero finding, and
//! the exact-rational uniform-expansion coefficient polynomials.
//!
//! Everything here is a pure function of its inputs; summations are
//! compensated where the term count is large, so results do not depend on
//! evaluation order.

pub mod bessel;
pub mod gamma;
pub mod olver;
pub mod zeros;
pub mod zeta;

pub use bessel::{
    bessel_i, bessel_i_log, bessel_i_prime, bessel_i_prime_log, bessel_j, bessel_j_pair,
    bessel_j_prime,
};
pub use gamma::{digamma, gamma, log_gamma, trigamma, EULER_GAMMA, LN_2PI, ZETA_3, ZETA_PRIME_0, ZETA_PRIME_M2};
pub use olver::{
    eta, log_i_prime_uniform, log_i_uniform, uv_coefficients, w_coefficients,
    AsymptoticPolynomial, CombinationSign,
};
pub use zeros::{find_zeros, zero_target, ZeroKind};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_e, riemann_zeta, riemann_zeta_deriv};
