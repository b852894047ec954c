//! Gamma function and its logarithmic derivatives.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;
/// log(2π).
pub const LN_2PI: f64 = 1.837877066409345483560659472811;
/// ζ(3) (Apéry's constant).
pub const ZETA_3: f64 = 1.202056903159594285399738161511;
/// ζ'(−2) = −ζ(3)/(4π²).
pub const ZETA_PRIME_M2: f64 = -0.030448457058393270780251530471;
/// ζ'(0) = −½ log 2π.
pub const ZETA_PRIME_0: f64 = -0.918938533204672741780329736406;

// Lanczos coefficients, g = 607/128, 15 terms (Boost/GSL grade: ~1e-15
// relative on the positive real axis).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut s = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + k as f64);
    }
    s
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Γ(x) for real x away from the poles at 0, −1, −2, …
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("gamma pole at x = {x}")));
    }
    if x < 0.5 {
        // reflection: Γ(x)Γ(1−x) = π/sin(πx)
        let s = (std::f64::consts::PI * x).sin();
        return Ok(std::f64::consts::PI / (s * gamma(1.0 - x)?));
    }
    Ok(log_gamma(x)?.exp())
}

/// log Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x >= 30.0 {
        return Ok(stirling_log_gamma(x));
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    Ok(0.5 * LN_2PI + (xm1 + 0.5) * t.ln() - t + lanczos_sum(xm1).ln())
}

// Stirling series with Bernoulli corrections; ~1e-16 relative for x >= 30.
fn stirling_log_gamma(x: f64) -> f64 {
    const B: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
    ];
    let mut s = (x - 0.5) * x.ln() - x + 0.5 * LN_2PI;
    let x2 = x * x;
    let mut xp = x;
    for b in B {
        s += b / xp;
        xp *= x2;
    }
    s
}

/// Digamma ψ(x) = Γ'(x)/Γ(x) for x away from the poles.
pub fn digamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("digamma pole at x = {x}")));
    }
    if x < 0.0 {
        // reflection: ψ(1−x) − ψ(x) = π cot(πx)
        let pix = std::f64::consts::PI * x;
        return Ok(digamma(1.0 - x)? - std::f64::consts::PI * pix.cos() / pix.sin());
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 12.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    // asymptotic series
    const B: [f64; 6] = [
        -1.0 / 12.0,
        1.0 / 120.0,
        -1.0 / 252.0,
        1.0 / 240.0,
        -1.0 / 132.0,
        691.0 / 32760.0,
    ];
    let mut s = y.ln() - 0.5 / y;
    let y2 = y * y;
    let mut yp = y2;
    for b in B {
        s += b / yp;
        yp *= y2;
    }
    Ok(acc + s)
}

/// Trigamma ψ'(x) for x > 0; used for zero-sum tail estimates.
pub fn trigamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("trigamma requires x > 0, got {x}")));
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 12.0 {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    const B: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let mut s = 1.0 / y + 0.5 / (y * y);
    let y2 = y * y;
    let mut yp = y * y2;
    for b in B {
        s += b / yp;
        yp *= y2;
    }
    Ok(acc + s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_basics() {
        assert!((gamma(1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((gamma(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-13);
        assert!((gamma(5.0).unwrap() - 24.0).abs() < 24.0 * 1e-14);
        assert!(gamma(-3.0).is_err());
        assert!(gamma(0.0).is_err());
    }

    #[test]
    fn gamma_relative_accuracy_on_range() {
        // Γ(x+1) = xΓ(x) consistency sweep over [0.1, 50]
        let mut x = 0.1;
        while x <= 50.0 {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!(
                ((lhs - rhs) / rhs).abs() < 1e-13,
                "recurrence relative error at x = {x}"
            );
            x += 0.37;
        }
    }

    #[test]
    fn log_gamma_matches_gamma() {
        for &x in &[0.7, 1.3, 4.5, 17.0, 29.9, 30.1, 250.0] {
            let lg = log_gamma(x).unwrap();
            if x < 40.0 {
                assert!((lg.exp() - gamma(x).unwrap()).abs() < gamma(x).unwrap() * 1e-12);
            }
            // duplication-style check: logΓ(x+1) = log x + logΓ(x)
            let rec = log_gamma(x + 1.0).unwrap() - x.ln() - lg;
            assert!(rec.abs() < 1e-12, "x = {x}: {rec:e}");
        }
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-13);
        // ψ(1/2) = −γ − 2 log 2
        assert!(
            (digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * std::f64::consts::LN_2).abs() < 1e-13
        );
        // ψ(3/2) = ψ(1/2) + 2
        assert!((digamma(1.5).unwrap() - digamma(0.5).unwrap() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn trigamma_values() {
        // ψ'(1) = π²/6
        let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((trigamma(1.0).unwrap() - pi2_6).abs() < 1e-12);
        // ψ'(x) − ψ'(x+1) = 1/x²
        assert!(
            (trigamma(3.25).unwrap() - trigamma(4.25).unwrap() - 1.0 / 3.25f64.powi(2)).abs()
                < 1e-13
        );
    }
}
