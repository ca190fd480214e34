//! Built-in verification suite: one quick check per documented invariant,
//! runnable from the command line (`zetakit selftest`) on any host to confirm
//! the numerics behave there as they did under test.
//!
//! Two checks probe documented binary64 floors and are expected to fail;
//! they are annotated (`known_limit`) and do not gate the exit status.

use crate::numeric::{binomial_general, gamma, pow_k2pi, pow_principal};
use crate::{approx, incgamma, kummer, laguerre, zeta};
use num_complex::Complex64;
use std::io::Write;

const C0: Complex64 = Complex64::new(0.0, 0.0);
const PI: f64 = std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Outcome of one self-test check.
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// True for checks that probe a documented numerical floor: their failure
    /// is expected, reported as such, and does not gate the exit status.
    pub known_limit: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        known_limit: false,
        detail,
    }
}

fn known_limit(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        known_limit: true,
        detail,
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn binomial_falling_factorial() -> Check {
    let a = c(7.3, -1.2);
    let mut product = c(1.0, 0.0);
    for j in 0..4 {
        product *= a - j as f64;
    }
    let got = binomial_general(a, 4) * 24.0;
    let err = rel(got, product);
    check(
        "binomial-falling-factorial",
        err < 1e-13,
        format!("C(a,4)·4! vs a(a−1)(a−2)(a−3) rel err {err:.2e}"),
    )
}

fn gamma_recurrence() -> Check {
    let mut worst = 0.0f64;
    for &s in &[c(2.7, 1.3), c(0.4, -3.0), c(-1.6, 0.8)] {
        let lhs = gamma(s + 1.0).unwrap();
        let rhs = s * gamma(s).unwrap();
        worst = worst.max(rel(lhs, rhs));
    }
    check(
        "gamma-recurrence",
        worst < 1e-12,
        format!("Γ(s+1) = sΓ(s) worst rel err {worst:.2e}"),
    )
}

fn power_consistency() -> Check {
    let direct = pow_k2pi(3, c(2.0, 0.0));
    let expected = (9.0 * PI) * (9.0 * PI);
    let e1 = rel(direct, c(expected, 0.0));
    let cube = pow_principal(c(2.0, 0.0), c(3.0, 0.0)).unwrap();
    let e2 = rel(cube, c(8.0, 0.0));
    check(
        "power-integer-consistency",
        e1 < 1e-13 && e2 < 1e-14,
        format!("(9π)² rel err {e1:.2e}, 2³ rel err {e2:.2e}"),
    )
}

fn laguerre_recurrence_vs_explicit() -> Check {
    let alpha = c(0.7, -0.2);
    let z = c(1.3, 0.4);
    let err = rel(
        laguerre::recur(12, alpha, z),
        laguerre::explicit(12, alpha, z).unwrap(),
    );
    check(
        "laguerre-recurrence-vs-explicit",
        err < 1e-12,
        format!("L_12 two routes rel err {err:.2e}"),
    )
}

fn laguerre_convolution() -> Check {
    let (alpha, beta) = (c(0.3, 0.0), c(1.1, 0.0));
    let (x, y) = (c(0.9, 0.2), c(1.4, -0.3));
    let i = 9;
    let lx = laguerre::recur_batch(i, alpha, x);
    let ly = laguerre::recur_batch(i, beta, y);
    let mut sum = C0;
    for j in 0..=i {
        sum += lx[i - j] * ly[j];
    }
    let whole = laguerre::recur(i, alpha + beta + 1.0, x + y);
    let err = rel(sum, whole);
    check(
        "laguerre-convolution",
        err < 1e-12,
        format!("Σ L_(i−j)L_j vs L_i^(α+β+1)(x+y) rel err {err:.2e}"),
    )
}

fn laguerre_shifted_ladder() -> Check {
    let beta = c(4.0, 0.5);
    let z = c(2.0, -0.7);
    let err = rel(
        laguerre::shifted_recur(6, beta, z),
        laguerre::explicit(6, beta - 6.0, z).unwrap(),
    );
    check(
        "laguerre-shifted-ladder",
        err < 1e-12,
        format!("L_6^(β−6) ladder vs explicit rel err {err:.2e}"),
    )
}

fn laguerre_growth_law() -> Check {
    // L_j^{(β−j)}(z)/C(β,j) → e^z as j → ∞ for non-integer β.
    let beta = c(2.5, 0.0);
    let z = c(0.8, 0.3);
    let j = 2000;
    let ratio = laguerre::shifted_recur(j, beta, z) / binomial_general(beta, j);
    let err = rel(ratio, z.exp());
    check(
        "laguerre-growth-law",
        err < 0.02,
        format!("j = {j} ratio-to-e^z rel err {err:.2e} (algebraic approach)"),
    )
}

fn laguerre_asymptotic_head() -> Check {
    // Non-oscillatory branch; the leading-order estimate carries an
    // O(i^{−1/2}) correction, so a few percent is the honest expectation.
    let alpha = c(0.0, 0.0);
    let z = c(1.0, 0.0);
    let i = 10_000;
    let err = rel(
        laguerre::recur(i, alpha, -z),
        laguerre::asymptotic(i, alpha, z, laguerre::AsymptoticSign::Minus).unwrap(),
    );
    check(
        "laguerre-asymptotic-head",
        err < 0.05,
        format!("i = {i} leading-order vs recurrence rel err {err:.2e}"),
    )
}

fn kummer_transformation() -> Check {
    let (a, b, z) = (c(0.8, 0.3), c(2.2, -0.4), c(1.5, 2.0));
    let lhs = kummer::m_series(a, b, z, 1e-15).unwrap().value;
    let rhs = z.exp() * kummer::m_series(b - a, b, -z, 1e-15).unwrap().value;
    let err = rel(lhs, rhs);
    check(
        "kummer-transformation",
        err < 1e-11,
        format!("M(a;b;z) = e^z M(b−a;b;−z) rel err {err:.2e}"),
    )
}

fn kummer_u_reflection() -> Check {
    let (a, b, z) = (c(1.2, 0.0), c(0.4, 0.0), c(2.5, 0.0));
    let lhs = kummer::u(a, b, z, 1e-15).unwrap().value;
    let rhs = pow_principal(z, 1.0 - b).unwrap()
        * kummer::u(1.0 + a - b, 2.0 - b, z, 1e-15).unwrap().value;
    let err = rel(lhs, rhs);
    check(
        "kummer-u-reflection",
        err < 5e-9,
        format!("U(a;b;z) = z^(1−b) U(1+a−b;2−b;z) rel err {err:.2e} (two-series cancellation bound)"),
    )
}

fn kummer_m_laguerre_series() -> Check {
    let (a, b, z) = (c(0.6, 0.0), c(1.9, 0.0), c(1.1, 0.0));
    let series = kummer::m_laguerre(a, b, z, C0, 60).unwrap().value;
    let direct = kummer::m_series(a, b, z, 1e-15).unwrap().value;
    let err = rel(series, direct);
    check(
        "kummer-m-laguerre-series",
        err < 1e-10,
        format!("β = 0 Laguerre route vs power series rel err {err:.2e}"),
    )
}

fn kummer_polynomial_collapse() -> Check {
    let (b, z) = (c(1.5, 0.0), c(2.5, 0.0));
    let got = kummer::m_series(c(-2.0, 0.0), b, z, 1e-15).unwrap().value;
    let expected = 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0));
    let err = rel(got, expected);
    check(
        "kummer-polynomial-collapse",
        err < 1e-14,
        format!("M(−2;b;z) vs quadratic rel err {err:.2e}"),
    )
}

fn incgamma_complementarity() -> Check {
    let (s, z) = (c(1.7, 0.3), c(2.0, -1.0));
    let lower = incgamma::lower_gamma(s, z, 1e-15).unwrap().value;
    let upper = incgamma::upper_gamma_cf(s, z, 1e-15).unwrap().value;
    let err = rel(lower + upper, gamma(s).unwrap());
    check(
        "incgamma-complementarity",
        err < 1e-12,
        format!("γ(s,z) + Γ(s,z) = Γ(s) rel err {err:.2e}"),
    )
}

fn incgamma_convergent_closed_form() -> Check {
    let (s, z) = (c(0.4, 0.1), c(2.5, 0.0));
    let raw = incgamma::convergent_pq(s, z, 17).unwrap();
    let closed = incgamma::convergent_q_closed(8, s, z).unwrap();
    let e_even = rel(closed.p, raw[16].q);
    let e_odd = rel(closed.q, raw[17].q);
    check(
        "incgamma-convergent-closed-form",
        e_even < 1e-11 && e_odd < 1e-11,
        format!("k!L_k^(−s)/zk!L_k^(1−s) vs recursion rel errs {e_even:.2e}, {e_odd:.2e}"),
    )
}

fn incgamma_telescoping() -> Check {
    let (s, z) = (c(0.5, 0.0), c(3.0, 0.0));
    let summed = incgamma::upper_gamma_convergent_sum(s, z, 10).unwrap();
    let pair = incgamma::convergent_pq(s, z, 21).unwrap();
    let quotient = pair[21].p / pair[21].q;
    let err = rel(summed, quotient);
    check(
        "incgamma-telescoping",
        err < 1e-11,
        format!("telescoped partial sums vs p/q rel err {err:.2e}"),
    )
}

fn incgamma_four_paths() -> Check {
    let (s, z) = (c(0.3, 0.0), c(PI, 0.0));
    let cf = incgamma::upper_gamma_cf(s, z, 1e-15).unwrap().value;
    let summed = incgamma::upper_gamma_convergent_sum(s, z, 120).unwrap()
        * pow_principal(z, s).unwrap()
        * (-z).exp();
    let limit = incgamma::upper_gamma_laguerre_limit(s, z, 60, incgamma::LimitVariant::Even)
        .unwrap()
        * pow_principal(z, s).unwrap()
        * (-z).exp();
    let series = incgamma::upper_gamma_laguerre_series(s, z, c(5.0, 0.0), 400)
        .unwrap()
        .value;
    let worst = [summed, limit, series]
        .iter()
        .map(|&v| rel(v, cf))
        .fold(0.0f64, f64::max);
    check(
        "incgamma-four-paths",
        worst < 1e-7,
        format!("CF / telescoped / limit / series max pairwise rel err {worst:.2e}"),
    )
}

fn xi_truncation_decay() -> Check {
    let s = c(2.3, 1.1);
    let reference = zeta::xi_basic(s, 6).unwrap().xi;
    let e1 = (zeta::xi_basic(s, 1).unwrap().xi - reference).norm();
    let e2 = (zeta::xi_basic(s, 2).unwrap().xi - reference).norm();
    let passed = e1 > e2 && e2 < 1e-8 && e1 < 1e-3 && e1 > 1e-9;
    check(
        "xi-truncation-gaussian-decay",
        passed,
        format!("|Δ(K=1)| = {e1:.2e}, |Δ(K=2)| = {e2:.2e} (e^(−π(K+1)²) scale)"),
    )
}

fn xi_functional_symmetry() -> Check {
    let mut worst = 0.0f64;
    for &s in &[c(0.3, 7.0), c(2.0, -1.0), c(-1.2, 3.5)] {
        let a = zeta::xi_basic(s, 6).unwrap().xi;
        let b = zeta::xi_basic(1.0 - s, 6).unwrap().xi;
        worst = worst.max(rel(a, b));
    }
    check(
        "xi-functional-symmetry",
        worst < 1e-12,
        format!("xi(s) vs xi(1−s) worst rel err {worst:.2e}"),
    )
}

fn xi_x_independence() -> Check {
    let s = c(0.7, 3.0);
    let base = zeta::xi_basic(s, 8).unwrap().xi;
    let mut worst = 0.0f64;
    for &x in &[c(0.9, 0.0), c(1.2, 0.0), c(0.8, 0.3)] {
        worst = worst.max(rel(zeta::xi_general(s, x, 8).unwrap().xi, base));
    }
    check(
        "xi-x-independence",
        worst < 1e-9,
        format!("free parameter x moved, worst rel drift {worst:.2e}"),
    )
}

fn xi_upsilon_agreement() -> Check {
    let s = c(0.6, 2.0);
    let err = rel(
        zeta::xi_upsilon(s, c(1.0, 0.0), 6).unwrap().xi,
        zeta::xi_basic(s, 6).unwrap().xi,
    );
    check(
        "xi-upsilon-agreement",
        err < 1e-10,
        format!("alternating-block route vs basic rel err {err:.2e}"),
    )
}

fn zeta_reference_grid() -> Check {
    // Known binary64 floor: the completed form is O(e^{−πt/4}) while the
    // sums building it are O(1), so unfolding ζ amplifies roundoff like
    // ε·e^{πt/4} — past the 1e−10 target near |t| ≈ 18 (measured ~2e−10 at
    // t = 20, ~7e−7 at t = 30; the reference side stays below 2e−13).
    // No grid point may sit on a zeta zero: the comparison is relative.
    let sigmas = [-1.5, 0.25, 0.5, 1.25, 3.0];
    let ts = [0.5, 5.0, 10.0, 20.0, 25.0, 30.0];
    let mut worst = 0.0f64;
    let mut worst_at = (0.0, 0.0);
    let mut worst_low = 0.0f64;
    for &sigma in &sigmas {
        for &t in &ts {
            let s = c(sigma, t);
            let got = zeta::zeta_value(s, zeta::ZetaMethod::Basic, 6).unwrap();
            let want = zeta::reference_zeta(s).unwrap();
            let e = rel(got, want);
            if e > worst {
                worst = e;
                worst_at = (sigma, t);
            }
            if t < 21.0 && e > worst_low {
                worst_low = e;
            }
        }
    }
    known_limit(
        "zeta-reference-grid",
        worst < 1e-10,
        format!(
            "worst rel err {worst:.2e} at σ = {}, t = {} (1e−10 target; \
             t ≤ 20 portion is at {worst_low:.2e})",
            worst_at.0, worst_at.1
        ),
    )
}

fn approximant_degree_law() -> Check {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in [1usize, 3, 6] {
        let spec = approx::ApproximantSpec {
            variant: approx::Variant::LaguerreSeries,
            delta: 2.5,
            n,
            z_max: approx::DEFAULT_Z_MAX,
        };
        let d = approx::approximant_polynomial(&spec).unwrap().degree();
        ok &= d == 2 * n;
        seen.push(format!("n={n}→{d}"));
    }
    check(
        "approximant-degree-law",
        ok,
        format!("cleared degree 2n: {}", seen.join(", ")),
    )
}

fn rootset_mirror_pairing() -> Check {
    let spec = approx::ApproximantSpec {
        variant: approx::Variant::LaguerreSeries,
        delta: 5.0,
        n: 6,
        z_max: approx::DEFAULT_Z_MAX,
    };
    let rs = approx::find_roots(&spec, approx::DEFAULT_TAU, 11).unwrap();
    let paired = rs.roots.iter().all(|r| {
        rs.roots
            .iter()
            .any(|q| q.re == 1.0 - r.re && q.im == -r.im)
    });
    check(
        "rootset-mirror-pairing",
        paired && rs.roots.len() == 12,
        format!(
            "{} roots, bitwise s ↔ 1−s pairing {}",
            rs.roots.len(),
            if paired { "exact" } else { "broken" }
        ),
    )
}

fn rootset_first_zero_monotone() -> Check {
    // Raising the truncation pulls the lowest on-line root toward the first
    // zeta zero 1/2 + 14.1347i monotonically.
    let target = 14.134725141734693;
    let mut distances = Vec::new();
    for n in [10usize, 15, 20, 25] {
        let spec = approx::ApproximantSpec {
            variant: approx::Variant::LaguerreSeries,
            delta: 5.0,
            n,
            z_max: approx::DEFAULT_Z_MAX,
        };
        let rs = approx::find_roots(&spec, approx::DEFAULT_TAU, 4).unwrap();
        let first = rs
            .roots
            .iter()
            .filter(|r| r.class == approx::RootClass::OnCriticalLine && r.im > 0.0)
            .map(|r| r.im)
            .fold(f64::INFINITY, f64::min);
        distances.push((first - target).abs());
    }
    let monotone = distances.windows(2).all(|w| w[1] < w[0]);
    check(
        "rootset-first-zero-monotone",
        monotone && distances[3] < 0.1,
        format!(
            "distance to 14.1347…: {}",
            distances
                .iter()
                .map(|d| format!("{d:.5}"))
                .collect::<Vec<_>>()
                .join(" → ")
        ),
    )
}

fn rootset_strip_regression() -> Check {
    // Documented exception: at Δ = 5, n = 25 the cleared polynomial carries a
    // genuine quartet of in-strip roots off the critical line near
    // 8.3465 ± 4.7058i and their mirrors; every other in-strip root with
    // 2 < |Im| < 30 is on-line.
    let spec = approx::ApproximantSpec {
        variant: approx::Variant::LaguerreSeries,
        delta: 5.0,
        n: 25,
        z_max: approx::DEFAULT_Z_MAX,
    };
    let rs = approx::find_roots(&spec, approx::DEFAULT_TAU, 4).unwrap();
    let offenders: Vec<String> = rs
        .roots
        .iter()
        .filter(|r| {
            r.re > -11.0
                && r.re <= 10.0
                && r.im.abs() > 2.0
                && r.im.abs() < 30.0
                && (r.re - 0.5).abs() >= approx::DEFAULT_TAU
        })
        .map(|r| format!("{:.4}{:+.4}i", r.re, r.im))
        .collect();
    known_limit(
        "rootset-strip-regression",
        offenders.is_empty(),
        if offenders.is_empty() {
            "all in-strip roots with 2 < |Im| < 30 on the critical line".into()
        } else {
            format!(
                "{} in-strip off-line roots (documented quartet): {}",
                offenders.len(),
                offenders.join(", ")
            )
        },
    )
}

fn rootset_json_round_trip() -> Check {
    let spec = approx::ApproximantSpec {
        variant: approx::Variant::LaguerreSeries,
        delta: 5.0,
        n: 2,
        z_max: approx::DEFAULT_Z_MAX,
    };
    let rs = approx::find_roots(&spec, approx::DEFAULT_TAU, 13).unwrap();
    let mut buf = Vec::new();
    approx::export_rootset(&rs, approx::ExportFormat::Json, &mut buf).unwrap();
    let ok = matches!(approx::import_rootset_json(&buf[..]), Ok(back) if back == rs);
    check(
        "rootset-json-round-trip",
        ok,
        "export → import reproduces every bit".into(),
    )
}

fn float_format_round_trip() -> Check {
    let values = [
        0.1,
        PI,
        1e-300,
        2.2250738585072014e-308,
        -14.134725141734693,
        6.02e23,
    ];
    let ok = values.iter().all(|&v| {
        v.to_string()
            .parse::<f64>()
            .map(|back| back.to_bits() == v.to_bits())
            .unwrap_or(false)
    });
    check(
        "float-format-round-trip",
        ok,
        "shortest decimal form parses back bit-identically".into(),
    )
}

/// Run every check in a fixed order.
pub fn run_all() -> Vec<Check> {
    vec![
        binomial_falling_factorial(),
        gamma_recurrence(),
        power_consistency(),
        laguerre_recurrence_vs_explicit(),
        laguerre_convolution(),
        laguerre_shifted_ladder(),
        laguerre_growth_law(),
        laguerre_asymptotic_head(),
        kummer_transformation(),
        kummer_u_reflection(),
        kummer_m_laguerre_series(),
        kummer_polynomial_collapse(),
        incgamma_complementarity(),
        incgamma_convergent_closed_form(),
        incgamma_telescoping(),
        incgamma_four_paths(),
        xi_truncation_decay(),
        xi_functional_symmetry(),
        xi_x_independence(),
        xi_upsilon_agreement(),
        zeta_reference_grid(),
        approximant_degree_law(),
        rootset_mirror_pairing(),
        rootset_first_zero_monotone(),
        rootset_strip_regression(),
        rootset_json_round_trip(),
        float_format_round_trip(),
    ]
}

/// Print one line per check; returns false if any unexpected failure occurred
/// (annotated known-limit failures count as expected).
pub fn report<W: Write>(checks: &[Check], mut out: W) -> std::io::Result<bool> {
    let mut ok = true;
    for chk in checks {
        let status = if chk.passed {
            "ok  "
        } else if chk.known_limit {
            "FAIL (expected — documented limit)"
        } else {
            ok = false;
            "FAIL"
        };
        writeln!(out, "{status} {} — {}", chk.name, chk.detail)?;
    }
    let unexpected = checks.iter().filter(|c| !c.passed && !c.known_limit).count();
    let expected = checks.iter().filter(|c| !c.passed && c.known_limit).count();
    writeln!(
        out,
        "{} checks: {} passed, {} failed ({} expected)",
        checks.len(),
        checks.iter().filter(|c| c.passed).count(),
        unexpected + expected,
        expected
    )?;
    Ok(ok)
}
