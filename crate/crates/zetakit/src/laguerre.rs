//! Generalized Laguerre polynomials L_i^{(α)}(z): explicit low-degree sum,
//! stable three-term recursions (plain and shifted-order), batch variants for
//! series consumers, and the leading-order growth asymptotics.

use crate::error::{Error, Result};
use crate::numeric::{binomial_general, pow_principal};
use num_complex::Complex64;

/// Hard cap for the explicit sum; beyond this the alternating factorial terms
/// lose too many digits, and the recursion is the supported path anyway.
pub const EXPLICIT_DEGREE_CAP: usize = 40;

/// Direction selector for [`asymptotic`]: estimate L_i^{(α)}(z) (oscillatory,
/// `Plus`) or L_i^{(α)}(−z) (exponentially growing, `Minus`), both for
/// Re(z) > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticSign {
    Plus,
    Minus,
}

/// Explicit representation Σ_{j=0..i} (−1)^j C(i+α, i−j) z^j / j!.
///
/// Retained as a low-degree oracle; unstable for large degree, hence the cap.
pub fn explicit(i: usize, alpha: Complex64, z: Complex64) -> Result<Complex64> {
    if i > EXPLICIT_DEGREE_CAP {
        return Err(Error::DegreeCap {
            max: EXPLICIT_DEGREE_CAP,
            got: i,
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut z_pow_over_fact = Complex64::new(1.0, 0.0); // z^j / j!
    let mut sign = 1.0;
    for j in 0..=i {
        if j > 0 {
            z_pow_over_fact *= z / j as f64;
            sign = -sign;
        }
        sum += sign * binomial_general(alpha + i as f64, i - j) * z_pow_over_fact;
    }
    Ok(sum)
}

/// Stable three-term recursion in the degree (fixed order α):
/// L_i = ((2i + α − 1 − z) L_{i−1} − (i + α − 1) L_{i−2}) / i.
pub fn recur(i: usize, alpha: Complex64, z: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for j in 1..=i {
        let jf = j as f64;
        let next = ((2.0 * jf + alpha - 1.0 - z) * cur - (jf + alpha - 1.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// All degrees 0..=i of L^{(α)}(z) in one recursion pass.
pub fn recur_batch(i: usize, alpha: Complex64, z: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(i + 1);
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    out.push(cur);
    for j in 1..=i {
        let jf = j as f64;
        let next = ((2.0 * jf + alpha - 1.0 - z) * cur - (jf + alpha - 1.0) * prev) / jf;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Shifted-order value L_i^{(β−i)}(z) by the order-descending recursion
/// L_j^{(β−j)} = ((β + 1 − j − z) L_{j−1}^{(β−j+1)} − z L_{j−2}^{(β−j+2)}) / j.
///
/// Each intermediate is itself the shifted value of its own degree, which is
/// what makes the batch variant a single pass.
pub fn shifted_recur(i: usize, beta: Complex64, z: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for j in 1..=i {
        let jf = j as f64;
        let next = ((beta + 1.0 - jf - z) * cur - z * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// All shifted values L_j^{(β−j)}(z), j = 0..=i, in one pass.
pub fn shifted_recur_batch(i: usize, beta: Complex64, z: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(i + 1);
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    out.push(cur);
    for j in 1..=i {
        let jf = j as f64;
        let next = ((beta + 1.0 - jf - z) * cur - z * prev) / jf;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Leading-order large-degree estimate, valid for Re(z) > 0 and i >= 1.
///
/// `Plus` estimates L_i^{(α)}(z):
///   i^{α/2−1/4} / √π · e^{z/2} / z^{α/2+1/4} · cos(2√(z(i+(α+1)/2)) − π(α+1/2)/2).
/// `Minus` estimates L_i^{(α)}(−z):
///   i^{α/2−1/4} / (2√π) · e^{−z/2} / z^{α/2+1/4} · exp(2√(z(i+(α+1)/2))).
///
/// The 1/(2√π) constant in the growing branch is the one that makes the
/// ratio L_i^{(α)}(−z) / estimate tend to 1 (Perron's classical asymptotic);
/// a variant with 1/√π in circulation converges to 1/2 instead.
pub fn asymptotic(
    i: usize,
    alpha: Complex64,
    z: Complex64,
    sign: AsymptoticSign,
) -> Result<Complex64> {
    if z.re <= 0.0 {
        return Err(Error::Domain(
            "laguerre asymptotic requires Re(z) > 0".into(),
        ));
    }
    if i == 0 {
        return Err(Error::Domain("laguerre asymptotic requires degree >= 1".into()));
    }
    let ifl = i as f64;
    let sqrt_pi = std::f64::consts::PI.sqrt();
    // i^{α/2−1/4} with a real logarithm.
    let i_pow = ((alpha / 2.0 - 0.25) * ifl.ln()).exp();
    let z_pow = pow_principal(z, alpha / 2.0 + 0.25)?;
    let phase = 2.0 * (z * (ifl + (alpha + 1.0) / 2.0)).sqrt();
    match sign {
        AsymptoticSign::Plus => {
            let arg = phase - std::f64::consts::FRAC_PI_2 * (alpha + 0.5);
            Ok(i_pow / sqrt_pi * (z / 2.0).exp() / z_pow * arg.cos())
        }
        AsymptoticSign::Minus => {
            Ok(i_pow / (2.0 * sqrt_pi) * (-z / 2.0).exp() / z_pow * phase.exp())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const C: fn(f64, f64) -> Complex64 = Complex64::new;
    const PI: f64 = std::f64::consts::PI;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn explicit_trivial_cases() {
        // L_1^{(α)}(z) = 1 + α − z.
        let a = C(2.3, -0.4);
        let z = C(0.7, 1.1);
        assert!(rel(explicit(1, a, z).unwrap(), 1.0 + a - z) < 1e-15);
        // z = 0 leaves only the j = 0 term.
        assert!(rel(explicit(7, a, C(0.0, 0.0)).unwrap(), binomial_general(a + 7.0, 7)) < 1e-15);
        // L_2^{(0)}(1) = 1 − 2 + 1/2 = −1/2.
        assert_relative_eq!(
            explicit(2, C(0.0, 0.0), C(1.0, 0.0)).unwrap().re,
            -0.5,
            max_relative = 1e-14
        );
    }

    #[test]
    fn explicit_degree_cap() {
        assert!(matches!(
            explicit(41, C(0.0, 0.0), C(1.0, 0.0)),
            Err(Error::DegreeCap { max: 40, got: 41 })
        ));
    }

    #[test]
    fn recur_trivial_and_frozen() {
        assert_eq!(recur(0, C(3.0, 0.0), C(9.0, 0.0)), C(1.0, 0.0));
        // L_1^{(2)}(3) = 1 + 2 − 3 = 0.
        assert!(recur(1, C(2.0, 0.0), C(3.0, 0.0)).norm() < 1e-15);
        // Frozen oracle value: L_25^{(−1/2)}(π).
        let got = recur(25, C(-0.5, 0.0), C(PI, 0.0));
        assert_relative_eq!(got.re, 0.23278642417505248581, max_relative = 1e-12);
        assert!(got.im == 0.0);
    }

    #[test]
    fn recur_matches_explicit_on_grid() {
        let alphas = [C(-0.5, 0.0), C(0.0, 0.0), C(1.0, 0.0), C(2.7, 0.0), C(3.0, 1.0)];
        let zs = [C(0.5, 0.0), C(1.0, 0.0), C(PI, 0.0), C(2.0, -1.0)];
        for &alpha in &alphas {
            for &z in &zs {
                for i in 0..=25 {
                    let e = explicit(i, alpha, z).unwrap();
                    let r = recur(i, alpha, z);
                    assert!(
                        (r - e).norm() / (1.0 + e.norm()) < 1e-10,
                        "mismatch at i={i}, α={alpha}, z={z}: {r} vs {e}"
                    );
                }
            }
        }
    }

    #[test]
    fn batch_matches_single() {
        let alpha = C(1.3, 0.2);
        let z = C(2.0, -0.7);
        let batch = recur_batch(12, alpha, z);
        for (i, &v) in batch.iter().enumerate() {
            assert!(rel(v, recur(i, alpha, z)) < 1e-15);
        }
        let beta = C(4.0, 0.0);
        let sbatch = shifted_recur_batch(12, beta, z);
        for (i, &v) in sbatch.iter().enumerate() {
            assert!(rel(v, shifted_recur(i, beta, z)) < 1e-15);
        }
    }

    #[test]
    fn shifted_trivial_and_frozen() {
        let beta = C(2.2, 0.5);
        let z = C(1.4, -0.3);
        assert_eq!(shifted_recur(0, beta, z), C(1.0, 0.0));
        // L_1^{(β−1)}(z) = 1 + (β−1) − z = β − z.
        assert!(rel(shifted_recur(1, beta, z), beta - z) < 1e-15);
        // Frozen oracle value: L_15^{(−11)}(2) via β = 4.
        let got = shifted_recur(15, C(4.0, 0.0), C(2.0, 0.0));
        assert_relative_eq!(got.re, -2.4268891993759718627e-5, max_relative = 1e-11);
    }

    #[test]
    fn shifted_matches_explicit_with_shifted_order() {
        let z = C(1.2, 0.4);
        for &beta in &[C(4.0, 0.0), C(2.5, 0.0), C(1.0, -1.0)] {
            for i in 0..=20 {
                let s = shifted_recur(i, beta, z);
                let e = explicit(i, beta - i as f64, z).unwrap();
                assert!(
                    (s - e).norm() / (1.0 + e.norm()) < 1e-10,
                    "shifted mismatch at i={i}, β={beta}"
                );
            }
        }
    }

    #[test]
    fn convolution_identity() {
        // Σ_{j=0..i} L_{i−j}^{(α)}(x) L_j^{(β)}(y) = L_i^{(α+β+1)}(x+y).
        let alpha = C(0.7, 0.3);
        let beta = C(-0.4, 0.1);
        let x = C(0.9, -0.2);
        let y = C(1.6, 0.5);
        for i in 0..=15 {
            let la = recur_batch(i, alpha, x);
            let lb = recur_batch(i, beta, y);
            let mut sum = C(0.0, 0.0);
            for j in 0..=i {
                sum += la[i - j] * lb[j];
            }
            let rhs = recur(i, alpha + beta + 1.0, x + y);
            assert!(
                (sum - rhs).norm() / (1.0 + rhs.norm()) < 1e-10,
                "convolution fails at i={i}: {sum} vs {rhs}"
            );
        }
    }

    #[test]
    fn growth_law_shifted_over_binomial() {
        // L_j^{(β−j)}(z) / C(β, j) → e^z. Needs non-integer β: at integer β the
        // binomial is exactly zero for j > β and the ratio degenerates.
        let beta = C(2.5, 0.0);
        let z = C(1.0, 0.0);
        let j = 2000;
        let ratio = shifted_recur(j, beta, z) / binomial_general(beta, j);
        let expect = z.exp();
        assert!(
            rel(ratio, expect) < 0.02,
            "growth law off by {:.4}% at j={j}",
            rel(ratio, expect) * 100.0
        );
    }

    #[test]
    fn asymptotic_minus_direct_formula() {
        // i=4, α=0, z=1: estimate = 4^{−1/4}/(2√π) · e^{−1/2} · e^{2√4.5}.
        let got = asymptotic(4, C(0.0, 0.0), C(1.0, 0.0), AsymptoticSign::Minus).unwrap();
        let want = 0.25f64.sqrt().sqrt() / (2.0 * PI.sqrt()) * (-0.5f64).exp()
            * (2.0 * 4.5f64.sqrt()).exp();
        assert_relative_eq!(got.re, want, max_relative = 1e-13);
    }

    #[test]
    fn asymptotic_minus_ratio_tends_to_one() {
        // L_i^{(α)}(−z) against the growing estimate at a large degree.
        let alpha = C(0.0, 0.0);
        let z = C(1.0, 0.0);
        let i = 10_000;
        let exact = recur(i, alpha, -z);
        let est = asymptotic(i, alpha, z, AsymptoticSign::Minus).unwrap();
        let ratio = exact / est;
        assert!(
            (ratio.re - 1.0).abs() < 0.05 && ratio.im.abs() < 0.05,
            "minus-sign ratio {ratio} not within 5% of 1"
        );
    }

    #[test]
    fn asymptotic_plus_ratio_where_cosine_dominates() {
        // Oscillatory branch, checked at a degree where |cos| > 0.5 so the
        // leading term dominates.
        let alpha = C(1.0, 0.0);
        let z = C(2.0, 0.0);
        let i = 10_000;
        let est = asymptotic(i, alpha, z, AsymptoticSign::Plus).unwrap();
        let phase = 2.0 * (z * (i as f64 + (alpha + 1.0) / 2.0)).sqrt();
        let c = (phase - std::f64::consts::FRAC_PI_2 * (alpha + 0.5)).cos();
        assert!(c.norm() > 0.5, "test point must have a dominant cosine");
        let exact = recur(i, alpha, z);
        assert!(
            rel(exact, est) < 0.05,
            "plus-sign ratio off: exact {exact} vs estimate {est}"
        );
    }

    #[test]
    fn asymptotic_domain_errors() {
        assert!(asymptotic(10, C(0.0, 0.0), C(-1.0, 0.0), AsymptoticSign::Plus).is_err());
        assert!(asymptotic(0, C(0.0, 0.0), C(1.0, 0.0), AsymptoticSign::Minus).is_err());
    }
}
