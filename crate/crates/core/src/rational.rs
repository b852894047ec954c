//! Exact rational arithmetic for the coefficient algebra.
//!
//! Expansion polynomials, anomaly sums and conjecture coefficients are all
//! manipulated as `BigRational` values and only converted to `f64` at
//! evaluation time, so the identities asserted by the test suite are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // BigRational::to_f64 goes through numerator/denominator separately and
    // can overflow for large exact coefficients; split off the integer part.
    let trunc = r.trunc();
    let frac = r - &trunc;
    trunc.to_integer().to_f64().unwrap_or(f64::NAN) + frac.to_f64().unwrap_or(f64::NAN)
}

/// Binomial coefficient C(n, k) over big integers.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Double factorial n!! with the usual conventions (-1)!! = 0!! = 1.
pub fn double_factorial(n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 0 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Dense polynomial with rational coefficients; `coeffs[k]` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    pub coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly { coeffs: vec![c] }.trimmed()
    }

    /// Single term c·x^k.
    pub fn term(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        RatPoly { coeffs }.trimmed()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        RatPoly { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .trimmed()
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.trimmed()
    }

    /// d/dx.
    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| c * rat_int(k as i64 + 1))
            .collect();
        RatPoly { coeffs }.trimmed()
    }

    /// ∫₀^x, the antiderivative with zero constant term.
    pub fn integral(&self) -> RatPoly {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c / rat_int(k as i64 + 1);
        }
        RatPoly { coeffs }.trimmed()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        // Horner, highest power first.
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                1 => write!(f, "{}*x", a)?,
                _ => write!(f, "{}*x^{}", a, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_ops() {
        // (1 + x)(1 - x) = 1 - x^2
        let p = RatPoly {
            coeffs: vec![rat_int(1), rat_int(1)],
        };
        let q = RatPoly {
            coeffs: vec![rat_int(1), rat_int(-1)],
        };
        let r = p.mul(&q);
        assert_eq!(r.coeff(0), rat_int(1));
        assert_eq!(r.coeff(1), rat_int(0));
        assert_eq!(r.coeff(2), rat_int(-1));
        assert_eq!(r.derivative().coeff(1), rat_int(-2));
        assert_eq!(r.integral().coeff(3), rat(-1, 3));
        assert!((r.eval_f64(0.5) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial_int(5, 2), BigInt::from(10));
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(-1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
