//! Analytic torsion of finite metric cones over S¹, S² and S³.
//!
//! The cone `C_α Sⁿ` is the space `[0, l] × Sⁿ` with metric
//! `dr ⊗ dr + r² sin²α g_{Sⁿ}`; the angle α ∈ (0, π/2] controls the opening
//! (α = π/2 is the flat disc) and ν = csc α plays the role of a spectral
//! scaling parameter.  This crate computes the analytic torsion
//! `log T(C_α Sⁿ)` two independent ways:
//!
//! * **closed form** — the explicit formulas
//!   `½ log Vol + ½ sin α` (n = 1),
//!   `½ log Vol − ½ f(csc α) + ¼ sin²α` (n = 2) and
//!   `½ log Vol + ¾ sin α − 1/12 sin³α` (n = 3);
//! * **spectral** — from scratch, out of the Laplace spectra on forms.  Those
//!   spectra are squares of zeros of Bessel-type functions `J_μ`, `J'_μ`,
//!   `T^±_μ = ±J_μ + zJ'_μ` and `G^±_μ = ±½J_μ + zJ'_μ`, indexed by a sphere
//!   eigenvalue ladder.  The derivative at zero of the associated double zeta
//!   functions is obtained by spectral decomposition over the sphere zeta
//!   function: uniform large-order expansions of the Bessel factors produce
//!   coefficient polynomials in `p = (1−λ)^{-1/2}` whose Mellin transforms are
//!   elementary Gamma quotients, and the leftover coefficient sums are
//!   continued via Riemann/Hurwitz zeta functions.
//!
//! The crate also evaluates the boundary anomaly of the deformation to a
//! product metric, the Reidemeister torsion `½ log Vol`, and the residual
//! contribution of the cone tip, and it houses the conjectural closed form
//! for cones over odd spheres.
//!
//! Modules follow the pipeline:
//!
//! * [`specfun`] — gamma/zeta/Bessel kernels, Bessel-type zero finding and
//!   the exact-rational uniform-expansion polynomials `U_k`, `V_k`, `W_{k,±}`;
//! * [`spectra`] — cone geometry, form-spectrum tables, sphere zeta functions
//!   and the quadratic Bessel zeta values at `s = 0`;
//! * [`besselseq`] — double sequences of zeros: log-Gamma product
//!   representations, the `φ_h` expansion polynomials and coefficient ledgers;
//! * [`decomp`] — the decomposition engine: Mellin transforms `Φ_h`, their
//!   residues/finite parts at 0, regularized coefficient sums and the
//!   assembly of `ζ(0)`, `ζ'(0)` for the sequence combinations;
//! * [`torsion`] — both torsion routes, the function `f(ν)` and the odd-sphere
//!   conjecture formula;
//! * [`anomaly`] — boundary anomaly, Reidemeister torsion and the
//!   smooth-vs-singular decomposition check;
//! * [`verify`] — the acceptance checks shared by the CLI and the test suite.

pub mod anomaly;
pub mod besselseq;
pub mod decomp;
pub mod error;
pub mod rational;
pub mod specfun;
pub mod spectra;
pub mod torsion;
pub mod verify;

pub use error::{Error, Result};


