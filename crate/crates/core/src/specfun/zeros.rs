//! Positive zeros of J_ν, J'_ν and the boundary combinations
//! T^±_ν(z) = ±J_ν(z) + zJ'_ν(z) and G^±_ν(z) = ±½J_ν(z) + zJ'_ν(z).
//!
//! J zeros take McMahon (large index) or Olver-type (large order) initial
//! guesses refined by safeguarded Newton with bisection fallback.  The other
//! kinds are bracketed by the J_ν zero ladder: between consecutive zeros of
//! J_ν the combination ±c·J + zJ' changes sign exactly once, so each interval
//! is scanned for a sign change and polished the same way.

use super::bessel::bessel_j_pair;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const MAX_ITER: usize = 100;

/// Which Bessel-type function a zero sequence refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroKind {
    /// zeros of J_ν
    J,
    /// zeros of J'_ν
    JPrime,
    /// zeros of T⁺_ν = J_ν + zJ'_ν
    TPlus,
    /// zeros of T⁻_ν = −J_ν + zJ'_ν
    TMinus,
    /// zeros of G⁺_ν = ½J_ν + zJ'_ν
    GPlus,
    /// zeros of G⁻_ν = −½J_ν + zJ'_ν
    GMinus,
}

impl ZeroKind {
    /// Weight c in ±c·J_ν + z·J'_ν (None for the plain J / J' kinds).
    pub fn combination_weight(self) -> Option<f64> {
        match self {
            ZeroKind::TPlus => Some(1.0),
            ZeroKind::TMinus => Some(-1.0),
            ZeroKind::GPlus => Some(0.5),
            ZeroKind::GMinus => Some(-0.5),
            _ => None,
        }
    }
}

/// Target function and its derivative at z for a given kind/order.
pub fn zero_target(kind: ZeroKind, nu: f64, z: f64) -> Result<(f64, f64)> {
    let (j, j1) = bessel_j_pair(nu, z)?;
    let jp = (nu / z) * j - j1;
    // J'' from the Bessel equation
    let jpp = -jp / z + (nu * nu / (z * z) - 1.0) * j;
    Ok(match kind {
        ZeroKind::J => (j, jp),
        ZeroKind::JPrime => (jp, jpp),
        _ => {
            let c = kind.combination_weight().unwrap();
            (c * j + z * jp, (c + 1.0) * jp + z * jpp)
        }
    })
}

fn check_preconditions(kind: ZeroKind, nu: f64) -> Result<()> {
    if nu < 0.0 {
        return Err(Error::Domain(format!("order must be >= 0, got {nu}")));
    }
    match kind {
        // T⁻_ν ~ (1 − 1/ν) z^ν near 0: the positive-zero structure needs ν > 1
        ZeroKind::TMinus if nu <= 1.0 => Err(Error::Domain(format!(
            "T- zeros require nu > 1, got {nu}"
        ))),
        ZeroKind::GMinus if nu <= 0.5 => Err(Error::Domain(format!(
            "G- zeros require nu > 1/2, got {nu}"
        ))),
        _ => Ok(()),
    }
}

/// First `count` positive zeros of the target function, strictly increasing.
pub fn find_zeros(kind: ZeroKind, nu: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Domain("count must be >= 1".into()));
    }
    check_preconditions(kind, nu)?;
    match kind {
        ZeroKind::J => j_zeros(nu, count),
        _ => ladder_zeros(kind, nu, count),
    }
}

// ---------------------------------------------------------------- J zeros

// McMahon expansion for the k-th zero, good for k ≳ ν.
fn mcmahon_guess(nu: f64, k: usize) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

// Olver-type guess for the first zeros at large order.
fn large_order_guess(nu: f64, k: usize) -> f64 {
    // first negative Airy zeros
    const AIRY: [f64; 5] = [2.338107410, 4.087949444, 5.520559828, 6.786708090, 7.944133587];
    let a = AIRY[(k - 1).min(4)];
    let c = nu.powf(1.0 / 3.0);
    nu + a * c + 0.78 * a * a / c
}

fn j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    let mut zeros = Vec::with_capacity(count);
    let mut prev = 0.0f64;
    for k in 1..=count {
        let guess = if nu >= 3.0 && (k as f64) < 0.5 * nu {
            large_order_guess(nu, k)
        } else {
            mcmahon_guess(nu, k)
        };
        let guess = guess.max(prev + 0.05);
        let z = refine_from_guess(ZeroKind::J, nu, guess, prev)?;
        if z <= prev {
            return Err(Error::NonConvergence(format!(
                "J zeros not increasing at k = {k} (nu = {nu})"
            )));
        }
        zeros.push(z);
        prev = z;
    }
    Ok(zeros)
}

// Bracket around the guess (staying above `floor`), then safeguarded Newton.
fn refine_from_guess(kind: ZeroKind, nu: f64, guess: f64, floor: f64) -> Result<f64> {
    let spacing = local_spacing(nu, guess);
    let mut lo = (guess - 0.5 * spacing).max(floor + 1e-9 * guess.max(1.0));
    let mut hi = guess + 0.5 * spacing;
    let mut flo = zero_target(kind, nu, lo)?.0;
    let mut iter = 0;
    // expand until the bracket straddles a sign change
    loop {
        let fhi = zero_target(kind, nu, hi)?.0;
        if flo == 0.0 {
            return Ok(lo);
        }
        if flo * fhi < 0.0 {
            break;
        }
        // march the window right; zeros are isolated and ~spacing apart
        lo = hi;
        flo = fhi;
        hi += 0.5 * spacing;
        iter += 1;
        if iter > MAX_ITER {
            return Err(Error::NonConvergence(format!(
                "no bracket near guess {guess} (kind {kind:?}, nu = {nu})"
            )));
        }
    }
    newton_bisect(kind, nu, lo, hi)
}

// Zero spacing estimate π/sqrt(1 − ν²/z²), clamped.
fn local_spacing(nu: f64, z: f64) -> f64 {
    if z <= nu + 1.0 {
        return PI;
    }
    let r = 1.0 - (nu / z) * (nu / z);
    (PI / r.sqrt()).min(4.0 * PI)
}

fn newton_bisect(kind: ZeroKind, nu: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = zero_target(kind, nu, lo)?.0;
    let mut z = 0.5 * (lo + hi);
    for _ in 0..MAX_ITER {
        let (f, fp) = zero_target(kind, nu, z)?;
        if f == 0.0 {
            return Ok(z);
        }
        // shrink the bracket
        if f * flo < 0.0 {
            hi = z;
        } else {
            lo = z;
            flo = f;
        }
        let step = f / fp;
        let next = z - step;
        z = if next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
        if (hi - lo) < 1e-15 * z.max(1.0) || step.abs() < 1e-15 * z.max(1.0) {
            return Ok(z);
        }
    }
    Err(Error::NonConvergence(format!(
        "Newton/bisection exhausted {MAX_ITER} iterations (kind {kind:?}, nu = {nu})"
    )))
}

// -------------------------------------------- ladder scan for other kinds

// Between consecutive zeros of J_ν the function ±cJ + zJ' (and J' itself)
// changes sign an odd number of times; scan each interval with a fixed probe
// grid and polish every sign change found.
fn ladder_zeros(kind: ZeroKind, nu: f64, count: usize) -> Result<Vec<f64>> {
    let mut zeros: Vec<f64> = Vec::with_capacity(count);
    let mut j_lo = 0.0f64;
    // enough J intervals: one zero per interval plus the one below j_{ν,1}
    let ladder = j_zeros(nu, count + 2)?;
    const PROBES: usize = 8;
    for &j_hi in &ladder {
        let a = if j_lo == 0.0 {
            // avoid the z^ν vanishing at the origin
            (j_hi * 1e-3).max(1e-6).min(0.5 * j_hi)
        } else {
            j_lo + 1e-9 * j_lo
        };
        let b = j_hi - 1e-9 * j_hi;
        let mut prev_x = a;
        let mut prev_f = zero_target(kind, nu, prev_x)?.0;
        for i in 1..=PROBES {
            let x = a + (b - a) * i as f64 / PROBES as f64;
            let f = zero_target(kind, nu, x)?.0;
            if prev_f == 0.0 {
                zeros.push(prev_x);
            } else if prev_f * f < 0.0 {
                zeros.push(newton_bisect(kind, nu, prev_x, x)?);
            }
            if zeros.len() == count {
                return Ok(zeros);
            }
            prev_x = x;
            prev_f = f;
        }
        j_lo = j_hi;
    }
    Err(Error::NonConvergence(format!(
        "found only {} of {count} zeros (kind {kind:?}, nu = {nu})",
        zeros.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel::bessel_j;

    fn residual_ok(kind: ZeroKind, nu: f64, zs: &[f64]) {
        for &z in zs {
            let (f, _) = zero_target(kind, nu, z).unwrap();
            assert!(
                f.abs() <= 1e-12 * z.max(1.0),
                "residual {f:e} at z = {z} (kind {kind:?}, nu = {nu})"
            );
        }
    }

    #[test]
    fn first_zeros_match_frozen_references() {
        // bisection oracles frozen to 12+ digits
        let j0 = find_zeros(ZeroKind::J, 0.0, 1).unwrap();
        assert!((j0[0] - 2.404825557695773).abs() < 1e-10);
        let jp1 = find_zeros(ZeroKind::JPrime, 1.0, 1).unwrap();
        assert!((jp1[0] - 1.841183781340659).abs() < 1e-10);
        let tp2 = find_zeros(ZeroKind::TPlus, 2.0, 1).unwrap();
        assert!((tp2[0] - 3.518324392875923).abs() < 1e-10);
    }

    #[test]
    fn bisection_oracle_j0_first_zero() {
        // independent of the Newton path: plain bisection of J0 on [2, 3]
        let (mut lo, mut hi) = (2.0f64, 3.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if bessel_j(0.0, lo).unwrap() * bessel_j(0.0, mid).unwrap() <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let fast = find_zeros(ZeroKind::J, 0.0, 1).unwrap()[0];
        assert!((oracle - fast).abs() < 1e-12);
    }

    #[test]
    fn half_integer_zeros_are_multiples_of_pi() {
        // J_{1/2}(z) ∝ sin z: zeros at kπ exactly
        let zs = find_zeros(ZeroKind::J, 0.5, 6).unwrap();
        for (k, z) in zs.iter().enumerate() {
            assert!((z - (k as f64 + 1.0) * PI).abs() < 1e-11, "k={k}");
        }
    }

    #[test]
    fn residuals_and_ordering_across_kinds() {
        for kind in [
            ZeroKind::J,
            ZeroKind::JPrime,
            ZeroKind::TPlus,
            ZeroKind::TMinus,
            ZeroKind::GPlus,
            ZeroKind::GMinus,
        ] {
            let nu = 2.5;
            let zs = find_zeros(kind, nu, 12).unwrap();
            residual_ok(kind, nu, &zs);
            for w in zs.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn interlacing_with_next_order() {
        // j_{ν,k} < j_{ν+1,k} < j_{ν,k+1}
        for &nu in &[0.0, 0.5, 1.0, 5.0] {
            let a = find_zeros(ZeroKind::J, nu, 10).unwrap();
            let b = find_zeros(ZeroKind::J, nu + 1.0, 10).unwrap();
            for k in 0..9 {
                assert!(a[k] < b[k] && b[k] < a[k + 1], "nu={nu} k={k}");
            }
        }
    }

    #[test]
    fn jprime_zeros_precede_j_zeros() {
        let nu = 3.0;
        let j = find_zeros(ZeroKind::J, nu, 8).unwrap();
        let jp = find_zeros(ZeroKind::JPrime, nu, 8).unwrap();
        for k in 0..8 {
            assert!(jp[k] < j[k], "k={k}");
        }
    }

    #[test]
    fn large_order_first_zero() {
        let zs = find_zeros(ZeroKind::J, 20.0, 2).unwrap();
        assert!((zs[0] - 25.417140814072524).abs() < 1e-9);
        residual_ok(ZeroKind::J, 20.0, &zs);
    }

    #[test]
    fn domain_preconditions() {
        assert!(find_zeros(ZeroKind::TMinus, 1.0, 3).is_err());
        assert!(find_zeros(ZeroKind::GMinus, 0.5, 3).is_err());
        assert!(find_zeros(ZeroKind::TMinus, 1.5, 3).is_ok());
        assert!(find_zeros(ZeroKind::GMinus, 0.75, 3).is_ok());
        assert!(find_zeros(ZeroKind::J, 1.0, 0).is_err());
    }
}
