//! Foundational complex helpers: log-gamma, generalized binomials,
//! principal powers. Everything downstream builds on these.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub const LN_PI: f64 = 1.1447298858494001741;
const LN_SQRT_TWO_PI: f64 = 0.91893853320467274178;

/// Lanczos coefficients, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_C: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// True when `z` sits exactly on a gamma pole (0, -1, -2, ...).
pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn lanczos_log(z: Complex64) -> Complex64 {
    // Valid for Re(z) >= 0.5; analytic there, so no branch bookkeeping needed.
    let zm1 = z - 1.0;
    let mut x = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        x += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    LN_SQRT_TWO_PI + (zm1 + 0.5) * t.ln() - t + x.ln()
}

/// log(sin(pi z)) continued analytically from the upper half-plane.
///
/// Derivation: sin(pi z) = e^{i pi/2} e^{-i pi z} (1 - e^{2 pi i z}) / 2, and
/// for Im(z) >= 0 the last factor stays in the closed right half-disc, so its
/// principal log is continuous; the linear term carries the continuation.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    let w = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp();
    Complex64::new(0.0, std::f64::consts::FRAC_PI_2)
        - std::f64::consts::LN_2
        - Complex64::new(0.0, std::f64::consts::PI) * z
        + (Complex64::new(1.0, 0.0) - w).ln()
}

/// Log-gamma, analytically continued (not the principal log of gamma):
/// satisfies log_gamma(z+1) = log_gamma(z) + Log z away from the cut and
/// conjugate symmetry, and exp(log_gamma) = gamma everywhere representable.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("log_gamma at non-positive integer {}", z.re)));
    }
    if z.im < 0.0 {
        return Ok(log_gamma(z.conj())?.conj());
    }
    if z.re >= 0.5 {
        Ok(lanczos_log(z))
    } else {
        // Reflection: log Γ(z) = log π − log sin(πz) − log Γ(1−z).
        Ok(LN_PI - log_sin_pi_upper(z) - lanczos_log(1.0 - z))
    }
}

/// Gamma via exp(log_gamma); errors on poles.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// 1/Γ(z), entire: exactly zero at the poles of gamma.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        Complex64::new(0.0, 0.0)
    } else {
        (-log_gamma(z).expect("pole already handled")).exp()
    }
}

/// Generalized binomial coefficient `a choose k` for complex `a`,
/// computed multiplicatively: prod_{j=1..k} (a-j+1)/j.
///
/// Never routed through gamma quotients, so negative-integer upper indices
/// (ubiquitous in the Laguerre formulas) give exact finite values.
pub fn binomial_general(a: Complex64, k: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 1..=k {
        acc *= (a - (j as f64 - 1.0)) / j as f64;
    }
    acc
}

/// Principal power z^s = exp(s Log z), branch cut along the negative real axis.
///
/// z = 0 returns 0 when Re(s) > 0 (the analytic limit) and a domain error
/// otherwise.
pub fn pow_principal(z: Complex64, s: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return if s.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::Domain("0^s undefined for Re(s) <= 0".into()))
        };
    }
    Ok((s * z.ln()).exp())
}

/// (k² π)^(s/2) for integer k >= 1, evaluated as exp((s/2)(2 ln k + ln π)) so
/// every term of a lattice sum uses one consistent (real) logarithm.
pub fn pow_k2pi(k: u32, s_half: Complex64) -> Complex64 {
    let ln_base = 2.0 * (k as f64).ln() + LN_PI;
    (s_half * ln_base).exp()
}

/// (m² π / 4)^(s/2) for integer m >= 1, same consistent-logarithm policy.
pub fn pow_m2pi_quarter(m: u32, s_half: Complex64) -> Complex64 {
    let ln_base = 2.0 * (m as f64).ln() + LN_PI - 2.0 * std::f64::consts::LN_2;
    (s_half * ln_base).exp()
}
