//! Uniform large-order expansion coefficients for the modified Bessel
//! functions, kept as exact rational polynomials.
//!
//! With `p = (1+z²)^{-1/2}` and `η(z) = √(1+z²) + log(z/(1+√(1+z²)))`,
//!
//! ```text
//! I_ν(νz)  ≈ e^{νη} / (√(2πν) (1+z²)^{1/4}) · (1 + Σ_k U_k(p) ν^{-k})
//! I'_ν(νz) ≈ (1+z²)^{1/4} e^{νη} / (√(2πν) z) · (1 + Σ_k V_k(p) ν^{-k})
//! ```
//!
//! The `U_k` satisfy the recursion
//! `U_{k+1} = ½ p²(1−p²) U_k' + ⅛ ∫₀^p (1−5t²) U_k(t) dt` and
//! `V_k = U_k − ½ p(1−p²) U_{k−1} − p²(1−p²) U_{k−1}'`.  Coefficients are
//! generated once, exactly, and shared between the symbolic pipeline (which
//! needs them as rationals) and the numeric asymptotics (which evaluates
//! them in f64).  The combinations `W_{k,±} = V_k ± w·p·U_{k−1}` arise when the
//! expanded function is `±w·I_ν(x) + x I'_ν(x)` (`w = 1` and `w = ½` here).

use crate::error::{Error, Result};
use crate::rational::{rat, rat_int, Rat, RatPoly};
use num_traits::Zero;
use once_cell::sync::Lazy;

/// Highest expansion order generated for numeric use.
pub const UNIFORM_ORDER: usize = 8;

static U_POLYS: Lazy<Vec<RatPoly>> = Lazy::new(|| generate_u_polys(UNIFORM_ORDER));
static V_POLYS: Lazy<Vec<RatPoly>> = Lazy::new(|| generate_v_polys(UNIFORM_ORDER));

fn generate_u_polys(kmax: usize) -> Vec<RatPoly> {
    let mut us = vec![RatPoly::constant(rat_int(1))];
    // ½ p²(1−p²) U' + ⅛ ∫₀^p (1−5t²) U dt
    let half_p2 = RatPoly::term(rat(1, 2), 2).sub(&RatPoly::term(rat(1, 2), 4));
    let kernel = RatPoly::constant(rat(1, 8)).sub(&RatPoly::term(rat(5, 8), 2));
    for k in 0..kmax {
        let u = &us[k];
        let next = half_p2.mul(&u.derivative()).add(&kernel.mul(u).integral());
        us.push(next);
    }
    us
}

fn generate_v_polys(kmax: usize) -> Vec<RatPoly> {
    let us = &*U_POLYS;
    let p_half = RatPoly::term(rat(1, 2), 1).sub(&RatPoly::term(rat(1, 2), 3));
    let p2 = RatPoly::term(rat_int(1), 2).sub(&RatPoly::term(rat_int(1), 4));
    let mut vs = vec![RatPoly::constant(rat_int(1))];
    for k in 1..=kmax {
        let v = us[k]
            .sub(&p_half.mul(&us[k - 1]))
            .sub(&p2.mul(&us[k - 1].derivative()));
        vs.push(v);
    }
    vs
}

pub(crate) fn u_poly(k: usize) -> &'static RatPoly {
    &U_POLYS[k]
}

pub(crate) fn v_poly(k: usize) -> &'static RatPoly {
    &V_POLYS[k]
}

/// A finite combination Σ c_a (1−λ)^{-a} + constant, with half-integer
/// exponents a ≥ 0.  Stored as a polynomial in `p = (1−λ)^{-1/2}`, so the
/// coefficient of `p^m` is the term with exponent `a = m/2` and the `p⁰`
/// coefficient is the constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticPolynomial {
    pub poly: RatPoly,
}

impl AsymptoticPolynomial {
    pub fn from_poly(poly: RatPoly) -> Self {
        AsymptoticPolynomial { poly }
    }

    pub fn zero() -> Self {
        AsymptoticPolynomial { poly: RatPoly::zero() }
    }

    /// The constant term (the value as λ → −∞).
    pub fn constant(&self) -> Rat {
        self.poly.coeff(0)
    }

    /// Non-constant terms as (2a, coefficient) with exponent a = m/2 > 0.
    pub fn terms(&self) -> Vec<(u32, Rat)> {
        self.poly
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m as u32, c.clone()))
            .collect()
    }

    /// Exponents all distinct by construction; true when only the constant
    /// term survives.
    pub fn is_constant(&self) -> bool {
        self.terms().is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        AsymptoticPolynomial { poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AsymptoticPolynomial { poly: self.poly.sub(&other.poly) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        AsymptoticPolynomial { poly: self.poly.scale(c) }
    }

    /// Evaluate at a spectral parameter λ < 1.
    pub fn eval_lambda(&self, lambda: f64) -> f64 {
        self.poly.eval_f64((1.0 - lambda).powf(-0.5))
    }

    /// Evaluate as a polynomial in p.
    pub fn eval_p(&self, p: f64) -> f64 {
        self.poly.eval_f64(p)
    }
}

impl std::fmt::Display for AsymptoticPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// U_k and V_k of the uniform expansion, as polynomials in p.
pub fn uv_coefficients(k: usize) -> Result<(AsymptoticPolynomial, AsymptoticPolynomial)> {
    if k == 0 || k > 3 {
        return Err(Error::UnsupportedOrder(k));
    }
    Ok((
        AsymptoticPolynomial::from_poly(u_poly(k).clone()),
        AsymptoticPolynomial::from_poly(v_poly(k).clone()),
    ))
}

/// Sign of the Bessel-combination function being expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombinationSign {
    Plus,
    Minus,
}

/// W_{k,±} = V_k ± w·p·U_{k−1}, for weight w = 1 (±J + zJ') or w = ½
/// (±½J + zJ').
pub fn w_coefficients(
    k: usize,
    sign: CombinationSign,
    weight_half: bool,
) -> Result<AsymptoticPolynomial> {
    let kmax = if weight_half { 2 } else { 3 };
    if k == 0 || k > kmax {
        return Err(Error::UnsupportedOrder(k));
    }
    Ok(AsymptoticPolynomial::from_poly(w_poly(k, sign, weight_half)))
}

pub(crate) fn w_poly(k: usize, sign: CombinationSign, weight_half: bool) -> RatPoly {
    let w = if weight_half { rat(1, 2) } else { rat_int(1) };
    let s = match sign {
        CombinationSign::Plus => w,
        CombinationSign::Minus => -w,
    };
    v_poly(k).add(&RatPoly::term(s, 1).mul(u_poly(k - 1)))
}

/// η(z) of the uniform expansion.
pub fn eta(z: f64) -> f64 {
    let r = (1.0 + z * z).sqrt();
    r + (z / (1.0 + r)).ln()
}

/// log I_ν(νz) by the uniform expansion with `UNIFORM_ORDER` corrections.
pub fn log_i_uniform(nu: f64, z: f64) -> f64 {
    let r2 = 1.0 + z * z;
    let p = r2.powf(-0.5);
    let mut corr = 0.0;
    let mut nuk = nu;
    for k in 1..=UNIFORM_ORDER {
        corr += u_poly(k).eval_f64(p) / nuk;
        nuk *= nu;
    }
    nu * eta(z) - 0.5 * (2.0 * std::f64::consts::PI * nu).ln() - 0.25 * r2.ln() + corr.ln_1p()
}

/// log I'_ν(νz) by the uniform expansion.
pub fn log_i_prime_uniform(nu: f64, z: f64) -> f64 {
    let r2 = 1.0 + z * z;
    let p = r2.powf(-0.5);
    let mut corr = 0.0;
    let mut nuk = nu;
    for k in 1..=UNIFORM_ORDER {
        corr += v_poly(k).eval_f64(p) / nuk;
        nuk *= nu;
    }
    nu * eta(z) - 0.5 * (2.0 * std::f64::consts::PI * nu).ln() + 0.25 * r2.ln() - z.ln()
        + corr.ln_1p()
}
