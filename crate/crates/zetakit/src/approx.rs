//! Polynomial approximants of the completed zeta function whose roots shadow
//! the zeta zeros.
//!
//! Truncating the incomplete-gamma series for xi(s) and expanding each
//! Γ(s/2, z²π) in a fixed-order Laguerre series turns xi into a finite sum of
//! reciprocal binomials in s. Clearing denominators yields an honest
//! polynomial of even degree whose coefficients are exactly symmetric under
//! s ↔ 1−s. Everything is built in the centered variable u = s − 1/2, where
//! that symmetry reads u ↔ −u; the polynomial is then even, compresses to
//! half degree in w = u², and every root pair comes out exactly mirrored.

use crate::error::{Error, Result};
use crate::laguerre;
use crate::numeric::binomial_general;
use crate::poly::{self, Polynomial};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::io::Write;

const C0: Complex64 = Complex64::new(0.0, 0.0);
const PI: f64 = std::f64::consts::PI;

/// Which family of approximants to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// xi(s) ≈ 1 − s(1−s) Σ_k a_k [1/C(s/2+k+Δ, k+1) + 1/C((1−s)/2+k+Δ, k+1)]
    /// with a_k = Σ_z e^{−z²π} L_k^{(Δ−1/2)}(z²π)/(k+1); degree 2n.
    LaguerreSeries,
    /// The modulus-4 alternating-block form: its cleared polynomial carries
    /// the zeros of (2^s − 1)(1 − 2^{1−s}) ζ(s) Γ(s/2) π^{−s/2}, so genuine
    /// zeta zeros plus the normalization's own lattice zeros; degree 2n.
    Upsilon,
    /// Experimental: replaces each Γ(s/2, z²π) by its odd continued-fraction
    /// convergent (a rational function of s) and clears all denominators.
    /// Kept for comparison only; excluded from the documented invariants.
    ContinuedFraction,
}

/// Parameters of one approximant: the Laguerre order shift Δ, the truncation
/// n (series terms for `LaguerreSeries`, blocks for `Upsilon`, convergent
/// level for `ContinuedFraction`), and the lattice cutoff z_max.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproximantSpec {
    pub variant: Variant,
    pub delta: f64,
    pub n: usize,
    pub z_max: u32,
}

/// Default classification half-width around the critical line.
pub const DEFAULT_TAU: f64 = 0.05;
/// Default lattice cutoff: e^{−36π} ≈ 1e−50 already floors binary64.
pub const DEFAULT_Z_MAX: u32 = 5;

impl ApproximantSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta <= 100.0) {
            return Err(Error::Domain(format!(
                "delta must lie in (0, 100]; got {}",
                self.delta
            )));
        }
        if self.z_max < 3 {
            return Err(Error::Domain(format!(
                "z_max >= 3 is required for the coefficient sums; got {}",
                self.z_max
            )));
        }
        let cap = match self.variant {
            Variant::LaguerreSeries | Variant::Upsilon => 60,
            Variant::ContinuedFraction => 12,
        };
        if self.n == 0 || self.n > cap {
            return Err(Error::Domain(format!(
                "truncation n must lie in 1..={cap} for this variant; got {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Coefficient weights of the approximant series: a_0..a_{n−1} for the
/// Laguerre variant, the block-summed b_0..b_n for the alternating variant,
/// and the lattice weights e^{−z²π} for the continued-fraction variant.
pub fn approximant_coefficients(spec: &ApproximantSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    match spec.variant {
        Variant::LaguerreSeries => Ok(laguerre_weights(spec)),
        Variant::Upsilon => Ok(upsilon_weights(spec.n, spec.delta)),
        Variant::ContinuedFraction => Ok((1..=spec.z_max)
            .map(|z| (-((z * z) as f64) * PI).exp())
            .collect()),
    }
}

/// a_k = Σ_{z=1..z_max} e^{−z²π} L_k^{(Δ−1/2)}(z²π) / (k+1), k = 0..n−1.
fn laguerre_weights(spec: &ApproximantSpec) -> Vec<f64> {
    let alpha = Complex64::new(spec.delta - 0.5, 0.0);
    let mut a = vec![0.0f64; spec.n];
    for z in 1..=spec.z_max {
        let w = ((z * z) as f64) * PI;
        let damp = (-w).exp();
        if damp == 0.0 {
            break;
        }
        let lag = laguerre::recur_batch(spec.n - 1, alpha, Complex64::new(w, 0.0));
        for (k, l) in lag.iter().enumerate() {
            a[k] += damp * l.re / (k + 1) as f64;
        }
    }
    a
}

/// b_i = Σ_j Σ_{m ∈ {4j+1, 4j+2, 4j+3}} c_m e^{−m²π/4} L_i^{(Δ)}(m²π/4) with
/// weights (+1, −2, +1); blocks stop once the Gaussian weight underflows.
fn upsilon_weights(k: usize, delta: f64) -> Vec<f64> {
    let alpha = Complex64::new(delta, 0.0);
    let mut b = vec![0.0f64; k + 1];
    'blocks: for j in 0u32.. {
        for (offset, weight) in [(1u32, 1.0f64), (2, -2.0), (3, 1.0)] {
            let m = (4 * j + offset) as f64;
            let w = m * m * PI / 4.0;
            let damp = (-w).exp();
            if damp == 0.0 {
                if offset == 1 {
                    break 'blocks;
                }
                continue;
            }
            let lag = laguerre::recur_batch(k, alpha, Complex64::new(w, 0.0));
            for (i, l) in lag.iter().enumerate() {
                b[i] += weight * damp * l.re;
            }
        }
    }
    b
}

/// Truncated xi approximant of the Laguerre variant,
///   1 − s(1−s) Σ_{k=0..n−1} a_k [1/C(s/2+k+Δ, k+1) + 1/C((1−s)/2+k+Δ, k+1)],
/// evaluated directly at a point. Vanishing binomials are reported as poles.
pub fn approximant_value(spec: &ApproximantSpec, s: Complex64) -> Result<Complex64> {
    spec.validate()?;
    if spec.variant != Variant::LaguerreSeries {
        return Err(Error::Domain(
            "pointwise evaluation is defined for the Laguerre-series variant; \
             other variants are root generators"
                .into(),
        ));
    }
    let a = laguerre_weights(spec);
    let mut sum = C0;
    for (k, &ak) in a.iter().enumerate() {
        let kf = k as f64;
        let b1 = binomial_general(s / 2.0 + kf + spec.delta, k + 1);
        let b2 = binomial_general((1.0 - s) / 2.0 + kf + spec.delta, k + 1);
        if b1.norm() == 0.0 || b2.norm() == 0.0 {
            return Err(Error::Pole(format!(
                "approximant denominator binomial vanished at term k = {k}"
            )));
        }
        sum += ak * (1.0 / b1 + 1.0 / b2);
    }
    Ok(1.0 - s * (1.0 - s) * sum)
}

// ---- dense real-coefficient helpers for building the cleared polynomials --

fn rmul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai != 0.0 {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// p(u) → p(−u): flip the sign of odd coefficients.
fn rmirror(a: &[f64]) -> Vec<f64> {
    a.iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
        .collect()
}

fn radd_scaled(acc: &mut Vec<f64>, term: &[f64], scale: f64) {
    if acc.len() < term.len() {
        acc.resize(term.len(), 0.0);
    }
    for (i, &t) in term.iter().enumerate() {
        acc[i] += scale * t;
    }
}

/// Suffix products T_k(u) = ∏_{m=k+1..n−1} (c + m + g·u) for linear factors
/// with constant offset c and slope g, returned as T_0..T_{n−1}
/// (T_{n−1} = 1). Multiplying T_0 by the m = 0 factor gives the full product.
fn suffix_products(n: usize, c: f64, g: f64) -> Vec<Vec<f64>> {
    let mut t = vec![Vec::new(); n];
    t[n - 1] = vec![1.0];
    for k in (0..n - 1).rev() {
        t[k] = rmul(&t[k + 1], &[c + (k + 1) as f64, g]);
    }
    t
}

/// The cleared, exactly-symmetric polynomial of the chosen approximant in the
/// centered variable u = s − 1/2 (ascending real coefficients).
fn polynomial_in_u(spec: &ApproximantSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let coeffs = match spec.variant {
        Variant::LaguerreSeries => laguerre_polynomial_u(spec),
        Variant::Upsilon => upsilon_polynomial_u(spec),
        Variant::ContinuedFraction => cf_polynomial_u(spec),
    };
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Overflow(
            "approximant polynomial coefficients overflowed".into(),
        ));
    }
    Ok(symmetrize_even(coeffs))
}

/// The construction is symmetric term by term, so odd coefficients are pure
/// rounding residue (≲ 1e−15 of the even scale); zero them so downstream
/// root mirroring is exact, but refuse if they are unexpectedly large.
fn symmetrize_even(mut coeffs: Vec<f64>) -> Vec<f64> {
    let even_max = coeffs
        .iter()
        .step_by(2)
        .fold(0.0f64, |m, c| m.max(c.abs()));
    let odd_max = coeffs
        .iter()
        .skip(1)
        .step_by(2)
        .fold(0.0f64, |m, c| m.max(c.abs()));
    debug_assert!(
        odd_max <= 1e-9 * even_max,
        "approximant polynomial lost its s ↔ 1−s symmetry: odd/even = {:e}",
        odd_max / even_max
    );
    for c in coeffs.iter_mut().skip(1).step_by(2) {
        *c = 0.0;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    coeffs
}

/// Laguerre variant: with P(u) = ∏_{m=0..n−1}(Δ + m + 1/4 + u/2) clearing the
/// reciprocal binomials (s/2 = 1/4 + u/2),
///   poly = [P(u)P(−u) − (1/4 − u²) Σ_k a_k (k+1)! (P(−u)T_k(u) + P(u)T_k(−u))]
///          / (n!)²,  T_k = suffix product over m = k+1..n−1.
fn laguerre_polynomial_u(spec: &ApproximantSpec) -> Vec<f64> {
    let n = spec.n;
    let a = laguerre_weights(spec);
    let t = suffix_products(n, spec.delta + 0.25, 0.5);
    let p = rmul(&t[0], &[spec.delta + 0.25, 0.5]);
    let pm = rmirror(&p);
    let mut acc = rmul(&p, &pm);
    let s_one_minus_s = [0.25, 0.0, -1.0]; // s(1−s) = 1/4 − u²
    let mut factorial = 1.0f64; // (k+1)!
    for k in 0..n {
        factorial *= (k + 1) as f64;
        let sym = {
            let mut sym = rmul(&pm, &t[k]);
            radd_scaled(&mut sym, &rmul(&p, &rmirror(&t[k])), 1.0);
            sym
        };
        let term = rmul(&s_one_minus_s, &sym);
        radd_scaled(&mut acc, &term, -a[k] * factorial);
    }
    let mut n_fact = 1.0f64;
    for j in 2..=n {
        n_fact *= j as f64;
    }
    let scale = 1.0 / (n_fact * n_fact);
    acc.iter().map(|c| c * scale).collect()
}

/// Alternating-block variant: expanding each Γ(s/2, m²π/4) in the fixed-order
/// Laguerre series and clearing with F(u) = ∏_{j=0..k}(Δ + 1 + j − s/2) gives
///   poly = Σ_i b_i i! [S_i(u)F(−u) + S_i(−u)F(u)],
/// S_i = suffix product over j = i+1..k. Its roots approximate the zeros of
/// (2^s − 1)(1 − 2^{1−s}) ζ(s) Γ(s/2) π^{−s/2}: zeta zeros plus the
/// normalization lattice near {0, 1} ± 2πik/ln 2.
fn upsilon_polynomial_u(spec: &ApproximantSpec) -> Vec<f64> {
    let k = spec.n;
    let b = upsilon_weights(k, spec.delta);
    // Linear factors Δ + 1 + j − s/2 = (Δ + 3/4 + j) − u/2 for j = 0..k.
    let s = suffix_products(k + 1, spec.delta + 0.75, -0.5);
    let f = rmul(&s[0], &[spec.delta + 0.75, -0.5]);
    let fm = rmirror(&f);
    let mut acc = vec![0.0];
    let mut factorial = 1.0f64; // i!
    for i in 0..=k {
        if i > 0 {
            factorial *= i as f64;
        }
        let mut sym = rmul(&s[i], &fm);
        radd_scaled(&mut sym, &rmul(&rmirror(&s[i]), &f), 1.0);
        radd_scaled(&mut acc, &sym, b[i] * factorial);
    }
    acc
}

/// Continued-fraction variant (experimental): p/q odd convergents at level n
/// are polynomials in a = s/2 via the convergent recursion run symbolically;
/// substituting a = 1/4 + u/2, the approximant
///   1 − s(1−s) Σ_z e^{−z²π} [p(u)/q(u) + p(−u)/q(−u)]
/// is cleared by ∏_z q_z(u) q_z(−u).
fn cf_polynomial_u(spec: &ApproximantSpec) -> Vec<f64> {
    let k = spec.n;
    // Per lattice point: (p, q) as polynomials in u after substitution.
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    for z in 1..=spec.z_max {
        let zz = ((z * z) as f64) * PI;
        let (p_a, q_a) = symbolic_odd_convergent(k, zz);
        ps.push(substitute_quarter_half(&p_a));
        qs.push(substitute_quarter_half(&q_a));
    }
    let m = ps.len();
    let qms: Vec<Vec<f64>> = qs.iter().map(|q| rmirror(q)).collect();
    // D(u) = ∏ q_z(u) q_z(−u).
    let mut d = vec![1.0];
    for z in 0..m {
        d = rmul(&d, &rmul(&qs[z], &qms[z]));
    }
    let mut acc = d.clone();
    let s_one_minus_s = [0.25, 0.0, -1.0];
    for z in 0..m {
        let w = (-((z as f64 + 1.0) * (z as f64 + 1.0)) * PI).exp();
        // p_z(u)q_z(−u) + p_z(−u)q_z(u), then the other lattice points' D's.
        let mut sym = rmul(&ps[z], &qms[z]);
        radd_scaled(&mut sym, &rmul(&rmirror(&ps[z]), &qs[z]), 1.0);
        let mut rest = rmul(&s_one_minus_s, &sym);
        for other in 0..m {
            if other != z {
                rest = rmul(&rest, &rmul(&qs[other], &qms[other]));
            }
        }
        radd_scaled(&mut acc, &rest, -w);
    }
    acc
}

/// Run the convergent recursion with symbolic a (coefficient vectors in a),
/// returning (p_{2k+1}, q_{2k+1}) as polynomials in a for fixed z.
fn symbolic_odd_convergent(k: usize, z: f64) -> (Vec<f64>, Vec<f64>) {
    let mut p_prev = vec![0.0];
    let mut p_cur = vec![1.0];
    let mut q_prev = vec![1.0];
    let mut q_cur = vec![z];
    for level in 2..=(2 * k + 1) {
        let (a_lin, b_const): (Vec<f64>, f64) = if level % 2 == 0 {
            (vec![(level / 2) as f64, -1.0], 1.0) // a_level = level/2 − a
        } else {
            (vec![((level - 1) / 2) as f64], z) // a_level = (level−1)/2, b = z
        };
        let mut p_next = rmul(&a_lin, &p_prev);
        radd_scaled(&mut p_next, &p_cur, b_const);
        let mut q_next = rmul(&a_lin, &q_prev);
        radd_scaled(&mut q_next, &q_cur, b_const);
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    (p_cur, q_cur)
}

/// Compose a polynomial in a with a = 1/4 + u/2.
fn substitute_quarter_half(in_a: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0];
    for &c in in_a.iter().rev() {
        out = rmul(&out, &[0.25, 0.5]);
        out[0] += c;
    }
    out
}

/// The cleared approximant polynomial in u = s − 1/2, as a [`Polynomial`].
pub fn approximant_polynomial(spec: &ApproximantSpec) -> Result<Polynomial> {
    let coeffs = polynomial_in_u(spec)?;
    Ok(Polynomial::new(
        coeffs.into_iter().map(|c| Complex64::new(c, 0.0)).collect(),
    ))
}

/// How a root sits relative to the critical line and the approximant's
/// strip of validity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootClass {
    #[serde(rename = "on-critical-line")]
    OnCriticalLine,
    #[serde(rename = "off-line")]
    OffLine,
    #[serde(rename = "outside-strip")]
    OutsideStrip,
    #[serde(rename = "prefactor-zero")]
    PrefactorZero,
}

impl RootClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootClass::OnCriticalLine => "on-critical-line",
            RootClass::OffLine => "off-line",
            RootClass::OutsideStrip => "outside-strip",
            RootClass::PrefactorZero => "prefactor-zero",
        }
    }
}

/// One classified root in the s-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedRoot {
    pub re: f64,
    pub im: f64,
    pub class: RootClass,
}

/// All roots of one approximant polynomial, classified and sorted by
/// (Im, Re); `converged`/`sweeps` report the root-finder outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub tau: f64,
    pub converged: bool,
    pub sweeps: usize,
    pub roots: Vec<ClassifiedRoot>,
}

/// Classify a single s-plane point. Precedence: the τ-band around the
/// critical line wins, then the strip bounds (−2Δ−1, 2Δ], then (for the
/// alternating variant only) proximity to the normalization's zero lattice
/// {0, 1} ± 2πik/ln 2.
pub fn classify_point(s: Complex64, spec: &ApproximantSpec, tau: f64) -> RootClass {
    if (s.re - 0.5).abs() < tau {
        return RootClass::OnCriticalLine;
    }
    if s.re <= -2.0 * spec.delta - 1.0 || s.re > 2.0 * spec.delta {
        return RootClass::OutsideStrip;
    }
    if spec.variant == Variant::Upsilon {
        let step = 2.0 * PI / std::f64::consts::LN_2;
        let kf = (s.im.abs() / step).round();
        for dk in [-1.0f64, 0.0, 1.0] {
            let k = kf + dk;
            if k < 0.0 {
                continue;
            }
            let target_im = s.im.signum() * k * step;
            for base in [0.0, 1.0] {
                let d = (s - Complex64::new(base, target_im)).norm();
                if d < tau {
                    return RootClass::PrefactorZero;
                }
            }
        }
    }
    RootClass::OffLine
}

/// Classify raw s-plane roots into a sorted [`RootSet`].
pub fn classify_roots(
    roots: &[Complex64],
    spec: &ApproximantSpec,
    tau: f64,
    converged: bool,
    sweeps: usize,
) -> RootSet {
    let mut classified: Vec<ClassifiedRoot> = roots
        .iter()
        .map(|&s| ClassifiedRoot {
            re: s.re,
            im: s.im,
            class: classify_point(s, spec, tau),
        })
        .collect();
    classified.sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
    RootSet {
        tau,
        converged,
        sweeps,
        roots: classified,
    }
}

/// Build the approximant polynomial, solve it, and classify the roots.
///
/// The even polynomial is compressed to half degree in w = u² before root
/// finding; each w-root is then split into the mirror pair s = 1/2 ± √w.
/// The principal square root has non-negative real part, so the first
/// member's real part is ≥ 1/2 and the second is formed as 1 − re exactly
/// (that subtraction never rounds for operands ≥ 1/2): the s ↔ 1−s pairing
/// of the output is bitwise. Same seed, same bytes.
pub fn find_roots(spec: &ApproximantSpec, tau: f64, seed: u64) -> Result<RootSet> {
    let u_coeffs = polynomial_in_u(spec)?;
    let w_coeffs: Vec<Complex64> = u_coeffs
        .iter()
        .step_by(2)
        .map(|&c| Complex64::new(c, 0.0))
        .collect();
    let w_poly = Polynomial::new(w_coeffs);
    let rf = poly::find_roots(&w_poly, seed)?;
    let mut s_roots = Vec::with_capacity(2 * rf.roots.len());
    for &w in &rf.roots {
        let u = w.sqrt();
        let re_hi = 0.5 + u.re;
        let re_lo = 1.0 - re_hi;
        s_roots.push(Complex64::new(re_hi, u.im));
        s_roots.push(Complex64::new(re_lo, -u.im));
    }
    Ok(classify_roots(&s_roots, spec, tau, rf.converged, rf.sweeps))
}

/// Export formats for a [`RootSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
    Gnuplot,
}

/// Serialize a root set: CSV (`re,im,classification`), JSON (the full
/// structure, bit-exact round trip through [`import_rootset_json`]), or a
/// self-contained gnuplot script with inline data blocks.
pub fn export_rootset<W: Write>(rs: &RootSet, format: ExportFormat, mut out: W) -> Result<()> {
    match format {
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["re", "im", "classification"])
                .map_err(|e| Error::Io(e.to_string()))?;
            for r in &rs.roots {
                w.write_record([r.re.to_string(), r.im.to_string(), r.class.as_str().to_string()])
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
            w.flush().map_err(|e| Error::Io(e.to_string()))?;
        }
        ExportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rs).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n").map_err(|e| Error::Io(e.to_string()))?;
        }
        ExportFormat::Gnuplot => {
            writeln!(out, "# root set: tau = {}, {} roots", rs.tau, rs.roots.len())
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "set xlabel 'Re(s)'\nset ylabel 'Im(s)'\nset grid\nset key outside")
                .map_err(|e| Error::Io(e.to_string()))?;
            let classes = [
                (RootClass::OnCriticalLine, "on", 7),
                (RootClass::OffLine, "off", 5),
                (RootClass::OutsideStrip, "outside", 9),
                (RootClass::PrefactorZero, "prefactor", 11),
            ];
            let mut plots = Vec::new();
            for (class, tag, pt) in classes {
                let members: Vec<&ClassifiedRoot> =
                    rs.roots.iter().filter(|r| r.class == class).collect();
                if members.is_empty() {
                    continue;
                }
                writeln!(out, "${tag} << EOD").map_err(|e| Error::Io(e.to_string()))?;
                for r in members {
                    writeln!(out, "{} {}", r.re, r.im).map_err(|e| Error::Io(e.to_string()))?;
                }
                writeln!(out, "EOD").map_err(|e| Error::Io(e.to_string()))?;
                plots.push(format!(
                    "${tag} using 1:2 with points pt {pt} title '{}'",
                    class.as_str()
                ));
            }
            writeln!(out, "plot {}", plots.join(", \\\n     "))
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "pause -1 'press enter'").map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(())
}

/// Inverse of the JSON export; f64 fields survive bit-exactly.
pub fn import_rootset_json<R: std::io::Read>(input: R) -> Result<RootSet> {
    serde_json::from_reader(input).map_err(|e| Error::Io(e.to_string()))
}
