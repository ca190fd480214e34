//! Confluent hypergeometric functions: the Kummer M power series, the U
//! combination, Laguerre-series expansions for both, and the generating-series
//! partial sum for exp(−tz) in Laguerre terms.

use crate::error::{Error, Result};
use crate::laguerre;
use crate::numeric::{gamma, is_nonpositive_integer, pow_principal, recip_gamma};
use num_complex::Complex64;

/// Iteration cap for the M power series.
pub const M_SERIES_MAX_TERMS: usize = 100_000;

/// Result of a truncated series evaluation: the partial-sum value, how many
/// terms were accumulated, and the magnitude of the last included term as a
/// cheap tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
}

fn is_integer_real(b: Complex64) -> bool {
    b.im == 0.0 && b.re.fract() == 0.0 && b.re.abs() < 1e15
}

/// Kummer M(a; b; z) by the defining power series with term recursion
/// t_{i+1} = t_i (a+i) z / ((b+i)(i+1)); stops once |t| < tol·|partial sum|
/// holds for three consecutive terms.
pub fn m_series(a: Complex64, b: Complex64, z: Complex64, tol: f64) -> Result<SeriesResult> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(format!(
            "M(a; b; z) undefined at non-positive integer b = {b}"
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small_streak = 0;
    for i in 0..M_SERIES_MAX_TERMS {
        let ifl = i as f64;
        term *= (a + ifl) * z / ((b + ifl) * (ifl + 1.0));
        sum += term;
        if term.norm() < tol * sum.norm() {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: i + 2,
                    tail_estimate: term.norm(),
                });
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NoConvergence {
        count: M_SERIES_MAX_TERMS,
        unit: "terms",
    })
}

/// Tricomi U(a, b, z) for non-integer b via the standard two-M combination
///   U = Γ(1−b)/Γ(1−b+a) M(a; b; z) + Γ(b−1)/Γ(a) z^{1−b} M(a−b+1; 2−b; z).
///
/// When a denominator gamma sits at a pole the corresponding term is zero
/// (e.g. non-positive-integer a kills the second term). Integer b is rejected;
/// callers wanting integer b should evaluate at b ± ε and average (documented
/// policy, ε ≈ 1e−6).
pub fn u(a: Complex64, b: Complex64, z: Complex64, tol: f64) -> Result<SeriesResult> {
    if is_integer_real(b) {
        return Err(Error::Domain(format!(
            "U(a, b, z) via the two-M combination needs non-integer b; got b = {b} \
             (evaluate at b ± 1e-6 and average instead)"
        )));
    }
    let mut terms_used = 0;
    let mut tail = 0.0f64;

    let coeff1 = gamma(1.0 - b)? * recip_gamma(1.0 - b + a);
    let first = if coeff1.norm() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        let m1 = m_series(a, b, z, tol)?;
        terms_used += m1.terms_used;
        tail += coeff1.norm() * m1.tail_estimate;
        coeff1 * m1.value
    };

    let coeff2 = gamma(b - 1.0)? * recip_gamma(a);
    let second = if coeff2.norm() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        let m2 = m_series(a - b + 1.0, 2.0 - b, z, tol)?;
        terms_used += m2.terms_used;
        let zp = pow_principal(z, 1.0 - b)?;
        tail += (coeff2 * zp).norm() * m2.tail_estimate;
        coeff2 * zp * m2.value
    };

    Ok(SeriesResult {
        value: first + second,
        terms_used,
        tail_estimate: tail,
    })
}

/// Laguerre-series form of M: for Re(b − a) > 0,
///   M(a; b; z) = Γ(b)Γ(b−β−a) / (Γ(b−a)Γ(b−β)) Σ_i d_i L_i^{(β−i)}(z),
/// with d_0 = 1 and d_i = d_{i−1} (a+i−1)/(β−b−i+1).
///
/// β = 0 converges factorially; β near b − 1 degrades. The free parameter β
/// must keep b − β and b − β − a away from gamma poles, and β − b must not be
/// a non-negative integer (the d-recursion denominator hits zero).
pub fn m_laguerre(
    a: Complex64,
    b: Complex64,
    z: Complex64,
    beta: Complex64,
    n_terms: usize,
) -> Result<SeriesResult> {
    if (b - a).re <= 0.0 {
        return Err(Error::Domain(format!(
            "m_laguerre requires Re(b - a) > 0; got b - a = {}",
            b - a
        )));
    }
    let shift = beta - b;
    if is_integer_real(shift) && shift.re >= 0.0 {
        return Err(Error::Domain(format!(
            "m_laguerre requires β − b not a non-negative integer; got {shift}"
        )));
    }
    let prefactor = gamma(b)? * gamma(b - beta - a)? * recip_gamma(b - a) * recip_gamma(b - beta);
    let lag = laguerre::shifted_recur_batch(n_terms, beta, z);
    let mut d = Complex64::new(1.0, 0.0);
    let mut sum = lag[0];
    let mut last = lag[0].norm();
    for i in 1..=n_terms {
        let ifl = i as f64;
        d *= (a + ifl - 1.0) / (beta - b - ifl + 1.0);
        let t = d * lag[i];
        sum += t;
        last = t.norm();
    }
    Ok(SeriesResult {
        value: prefactor * sum,
        terms_used: n_terms + 1,
        tail_estimate: prefactor.norm() * last,
    })
}

/// Laguerre-series form of U: for Re(α − 2b) > −5/2,
///   U(a, b, z) = Γ(2+α−b)/Γ(2+α−b+a) Σ_i e_i L_i^{(α)}(z),
/// with e_0 = 1 and e_i = e_{i−1} (−a−i+1)/(b−a−α−1−i).
///
/// Terms decay like i^{Re(b−α/2)−9/4}, so this is an algebraic-rate series;
/// b − a − α − 2 must not be a non-negative integer.
pub fn u_laguerre(
    a: Complex64,
    b: Complex64,
    z: Complex64,
    alpha: Complex64,
    n_terms: usize,
) -> Result<SeriesResult> {
    if (alpha - 2.0 * b).re <= -2.5 {
        return Err(Error::Domain(format!(
            "u_laguerre requires Re(α − 2b) > −5/2; got {}",
            (alpha - 2.0 * b).re
        )));
    }
    let c = b - a - alpha - 2.0;
    if is_integer_real(c) && c.re >= 0.0 {
        return Err(Error::Domain(format!(
            "u_laguerre requires b − a − α − 2 not a non-negative integer; got {c}"
        )));
    }
    let prefactor = gamma(2.0 + alpha - b)? * recip_gamma(2.0 + alpha - b + a);
    let lag = laguerre::recur_batch(n_terms, alpha, z);
    let mut e = Complex64::new(1.0, 0.0);
    let mut sum = lag[0];
    let mut last = lag[0].norm();
    for i in 1..=n_terms {
        let ifl = i as f64;
        e *= (-a - ifl + 1.0) / (b - a - alpha - 1.0 - ifl);
        let t = e * lag[i];
        sum += t;
        last = t.norm();
    }
    Ok(SeriesResult {
        value: prefactor * sum,
        terms_used: n_terms + 1,
        tail_estimate: prefactor.norm() * last,
    })
}

/// Partial sum of the Laguerre generating series for the exponential:
///   exp(−tz) = (1+t)^{−α−1} Σ_i L_i^{(α)}(z) (t/(1+t))^i,  Re(t) > −1/2.
pub fn exp_laguerre_partial(
    t: Complex64,
    alpha: Complex64,
    z: Complex64,
    n_terms: usize,
) -> Result<SeriesResult> {
    if t.re <= -0.5 {
        return Err(Error::Domain(format!(
            "exp_laguerre_partial requires Re(t) > −1/2; got Re(t) = {}",
            t.re
        )));
    }
    let prefactor = pow_principal(1.0 + t, -(alpha + 1.0))?;
    let r = t / (1.0 + t);
    let lag = laguerre::recur_batch(n_terms, alpha, z);
    let mut rp = Complex64::new(1.0, 0.0);
    let mut sum = lag[0];
    let mut last = lag[0].norm();
    for &l in lag.iter().skip(1) {
        rp *= r;
        let term = l * rp;
        sum += term;
        last = term.norm();
    }
    Ok(SeriesResult {
        value: prefactor * sum,
        terms_used: n_terms + 1,
        tail_estimate: prefactor.norm() * last,
    })
}
