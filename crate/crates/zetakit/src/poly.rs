//! Dense complex polynomials and a simultaneous root finder
//! (Aberth–Ehrlich iteration seeded from the Newton polygon of the
//! coefficient moduli, finished with per-root Newton polish).
//!
//! The approximant polynomials this serves have coefficient moduli spanning
//! hundreds of orders of magnitude and roots from |z| ≈ 10 to |z| ≈ 10⁶, so
//! the evaluation path switches to the reversed polynomial outside the unit
//! disk and the initialization reads root moduli off the Newton polygon
//! instead of a single circle.

use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Relative step size below which the Aberth iteration counts as converged.
pub const ABERTH_STEP_TOL: f64 = 5e-14;
/// Sweep cap; past this the solver returns its state flagged unconverged.
pub const ABERTH_MAX_SWEEPS: usize = 500;

/// Complex polynomial in ascending coefficient order
/// (`coeffs[k]` multiplies z^k). Exact-zero leading coefficients are trimmed
/// on construction; tiny-but-nonzero leading coefficients are kept, since for
/// the approximant family they carry genuine far-out roots.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.norm()) == Some(0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::new(vec![Complex64::new(0.0, 0.0)]);
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * (k + 1) as f64)
                .collect(),
        )
    }

    /// Newton ratio p(z)/p'(z), robust against overflow: outside the unit
    /// disk it works with the reversed polynomial q(w) = wⁿ p(1/w) at
    /// w = 1/z, where p/p' = z q(w) / (n q(w) − w q'(w)).
    fn newton_ratio(&self, z: Complex64) -> Complex64 {
        let n = self.degree();
        if z.norm() <= 1.0 {
            let mut p = Complex64::new(0.0, 0.0);
            let mut dp = Complex64::new(0.0, 0.0);
            for &c in self.coeffs.iter().rev() {
                dp = dp * z + p;
                p = p * z + c;
            }
            scaled_div(p, dp)
        } else {
            let w = 1.0 / z;
            let mut q = Complex64::new(0.0, 0.0);
            let mut dq = Complex64::new(0.0, 0.0);
            for &c in self.coeffs.iter() {
                dq = dq * w + q;
                q = q * w + c;
            }
            z * scaled_div(q, n as f64 * q - w * dq)
        }
    }
}

/// num / den with both prescaled by 1/|den|. The naive complex division
/// squares |den|, which underflows once |den| drops below ~1e−154 — routine
/// for these polynomials, whose normalized values near far-out roots sit
/// around 1e−160 — and turns a perfectly finite quotient into NaN.
fn scaled_div(num: Complex64, den: Complex64) -> Complex64 {
    let m = den.norm();
    if m == 0.0 || !m.is_finite() {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    (num / m) / (den / m)
}

/// Root-finder output: every root (with multiplicity, as repeated entries),
/// whether the Aberth sweep limit was respected, and how many sweeps ran.
#[derive(Debug, Clone)]
pub struct RootFind {
    pub roots: Vec<Complex64>,
    pub converged: bool,
    pub sweeps: usize,
}

/// Initial guesses from the Newton polygon: the upper convex hull of
/// (k, ln|c_k|) splits the degree into annuli; each hull edge of horizontal
/// extent m contributes m starters on the circle of the edge's root-modulus
/// estimate, at staggered angles (golden-ratio offset per edge plus a small
/// seeded jitter so symmetric configurations cannot trap the iteration).
fn newton_polygon_starters(coeffs: &[Complex64], rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let pts: Vec<(f64, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(k, c)| (k as f64, c.norm().ln()))
        .collect();
    // Upper hull by monotone chain; pop while the turn is not clockwise.
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let golden = 2.0 * std::f64::consts::PI * 0.618_033_988_749_894_9;
    let mut starters = Vec::with_capacity(coeffs.len() - 1);
    for (edge_idx, pair) in hull.windows(2).enumerate() {
        let (x1, y1) = pair[0];
        let (x2, y2) = pair[1];
        let m = (x2 - x1).round() as usize;
        let r = ((y1 - y2) / (x2 - x1)).exp();
        for j in 0..m {
            let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / m as f64
                + golden * edge_idx as f64
                + rng.gen_range(-0.05..0.05);
            starters.push(Complex64::from_polar(r, theta));
        }
    }
    starters
}

/// All complex roots by simultaneous Aberth–Ehrlich iteration.
///
/// Exact zero roots (vanishing low-order coefficients) are split off first.
/// The remaining coefficients are normalized by their largest modulus; the
/// iteration stops when every correction satisfies |Δz| <= 5e−14 (1 + |z|),
/// and each root then receives a few Newton polish steps. Hitting the sweep
/// cap is not an error: the state is returned with `converged = false`.
/// Identical seeds give bitwise-identical output.
pub fn find_roots(p: &Polynomial, seed: u64) -> Result<RootFind> {
    if p.is_zero() {
        return Err(Error::Domain(
            "root finding on the zero polynomial is undefined".into(),
        ));
    }
    let mut coeffs = p.coeffs().to_vec();
    let mut roots = Vec::with_capacity(p.degree());
    // Split off exact zero roots.
    while coeffs.len() > 1 && coeffs[0].norm() == 0.0 {
        roots.push(Complex64::new(0.0, 0.0));
        coeffs.remove(0);
    }
    let max_mod = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    for c in coeffs.iter_mut() {
        *c /= max_mod;
    }
    // Normalization can underflow a leading coefficient whose modulus sits
    // more than ~308 decades below the peak; Polynomial::new drops it, which
    // silently discards the corresponding near-infinite root.
    let work = Polynomial::new(coeffs);
    let n = work.degree();
    if n == 0 {
        return Ok(RootFind {
            roots,
            converged: true,
            sweeps: 0,
        });
    }
    if n == 1 {
        roots.push(-work.coeffs()[0] / work.coeffs()[1]);
        return Ok(RootFind {
            roots,
            converged: true,
            sweeps: 0,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut zs = newton_polygon_starters(work.coeffs(), &mut rng);
    debug_assert_eq!(zs.len(), n);

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < ABERTH_MAX_SWEEPS {
        sweeps += 1;
        let mut max_step = 0.0f64;
        for i in 0..n {
            let ratio = work.newton_ratio(zs[i]);
            if !ratio.is_finite() {
                // Landed on a critical point: nudge and retry next sweep.
                let nudge = Complex64::from_polar(
                    1e-6 * (1.0 + zs[i].norm()),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                );
                zs[i] += nudge;
                max_step = f64::INFINITY;
                continue;
            }
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = zs[i] - zs[j];
                    if d.norm() > 0.0 {
                        repulsion += 1.0 / d;
                    }
                }
            }
            let denom = 1.0 - ratio * repulsion;
            let step = if denom.norm() > 0.0 { ratio / denom } else { ratio };
            zs[i] -= step;
            let rel = step.norm() / (1.0 + zs[i].norm());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step <= ABERTH_STEP_TOL {
            converged = true;
            break;
        }
    }

    // Newton polish, a few guarded steps per root.
    for z in zs.iter_mut() {
        for _ in 0..5 {
            let step = work.newton_ratio(*z);
            if !step.is_finite() || step.norm() > 0.1 * (1.0 + z.norm()) {
                break;
            }
            *z -= step;
            if step.norm() <= 1e-16 * (1.0 + z.norm()) {
                break;
            }
        }
    }

    roots.extend(zs);
    Ok(RootFind {
        roots,
        converged,
        sweeps,
    })
}
