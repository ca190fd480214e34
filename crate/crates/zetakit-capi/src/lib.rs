//! C ABI over the zetakit library. Every entry point is panic-safe
//! (unwinds are caught and reported as a status code), takes and returns
//! plain C structs, and writes results through out-pointers. Root sets are
//! handed out as opaque handles with an explicit free function.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use zetakit::approx::{self, ApproximantSpec, RootClass, RootSet, Variant};
use zetakit::{incgamma, kummer, laguerre, zeta, Complex64, Error};

/// Status of one call. Zero is success; the nonzero codes mirror the
/// library's error conditions, plus the two C-side failure modes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZkStatus {
    Ok = 0,
    /// Evaluation at a pole of the target function.
    Pole = 1,
    /// Input outside the validity region of the chosen representation.
    Domain = 2,
    /// The evaluation would be dominated by floating-point cancellation.
    Cancellation = 3,
    /// An iteration failed to meet its tolerance within the level budget.
    NoConvergence = 4,
    /// Requested degree above the supported cap.
    DegreeCap = 5,
    /// A denominator on the evaluation path vanished (or nearly so).
    NearZeroDenominator = 6,
    /// Result magnitude outside binary64 range.
    Overflow = 7,
    /// Input outside the validated range of an oracle-grade routine.
    Range = 8,
    /// File read/write failure.
    Io = 9,
    /// A required pointer argument was null.
    NullPointer = 100,
    /// The call panicked; the result slot is untouched.
    Panic = 101,
}

/// A complex number as two binary64 components.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZkComplex {
    pub re: f64,
    pub im: f64,
}

/// Opaque set of classified polynomial roots; obtain with
/// `zk_rootset_compute`, inspect with the accessor functions, release with
/// `zk_rootset_free`.
pub struct ZkRootSet(RootSet);

fn status_of(e: &Error) -> ZkStatus {
    match e {
        Error::Pole(_) => ZkStatus::Pole,
        Error::Domain(_) => ZkStatus::Domain,
        Error::Cancellation(_) => ZkStatus::Cancellation,
        Error::NoConvergence { .. } => ZkStatus::NoConvergence,
        Error::DegreeCap { .. } => ZkStatus::DegreeCap,
        Error::NearZeroDenominator(_) => ZkStatus::NearZeroDenominator,
        Error::Overflow(_) => ZkStatus::Overflow,
        Error::Range(_) => ZkStatus::Range,
        Error::Io(_) => ZkStatus::Io,
    }
}

fn cx(z: ZkComplex) -> Complex64 {
    Complex64::new(z.re, z.im)
}

/// Runs `f` under a panic guard and stores its value through `out`.
fn guarded_value(
    out: *mut ZkComplex,
    f: impl FnOnce() -> Result<Complex64, Error>,
) -> ZkStatus {
    if out.is_null() {
        return ZkStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            unsafe { *out = ZkComplex { re: v.re, im: v.im } };
            ZkStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => ZkStatus::Panic,
    }
}

/// Library version as a static NUL-terminated string; never freed.
#[no_mangle]
pub extern "C" fn zk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// ζ(s) through the incomplete-gamma series with `k_terms` lattice terms
/// (6 is the library default). Fails with `Pole` at s = 1.
#[no_mangle]
pub extern "C" fn zk_zeta(s: ZkComplex, k_terms: u32, out: *mut ZkComplex) -> ZkStatus {
    guarded_value(out, || {
        zeta::zeta_value(cx(s), zeta::ZetaMethod::Basic, k_terms)
    })
}

/// The completed form xi(s) = s(s−1) ζ(s) Γ(s/2) π^{−s/2}, entire in s,
/// symmetric under s ↔ 1−s.
#[no_mangle]
pub extern "C" fn zk_xi(s: ZkComplex, k_terms: u32, out: *mut ZkComplex) -> ZkStatus {
    guarded_value(out, || Ok(zeta::xi_basic(cx(s), k_terms)?.xi))
}

/// Upper incomplete gamma Γ(s, z) by the even continued fraction, stopped
/// at relative step `tol` (1e−14 is the library default).
#[no_mangle]
pub extern "C" fn zk_upper_gamma(
    s: ZkComplex,
    z: ZkComplex,
    tol: f64,
    out: *mut ZkComplex,
) -> ZkStatus {
    guarded_value(out, || Ok(incgamma::upper_gamma_cf(cx(s), cx(z), tol)?.value))
}

/// Lower incomplete gamma γ(s, z), complementary to `zk_upper_gamma`.
#[no_mangle]
pub extern "C" fn zk_lower_gamma(
    s: ZkComplex,
    z: ZkComplex,
    tol: f64,
    out: *mut ZkComplex,
) -> ZkStatus {
    guarded_value(out, || Ok(incgamma::lower_gamma(cx(s), cx(z), tol)?.value))
}

/// Generalized Laguerre polynomial L_i^{(α)}(z) by the stable three-term
/// recurrence; exact for every finite input.
#[no_mangle]
pub extern "C" fn zk_laguerre(
    i: usize,
    alpha: ZkComplex,
    z: ZkComplex,
    out: *mut ZkComplex,
) -> ZkStatus {
    guarded_value(out, || Ok(laguerre::recur(i, cx(alpha), cx(z))))
}

/// Kummer's confluent hypergeometric M(a, b, z) by its defining series.
#[no_mangle]
pub extern "C" fn zk_kummer_m(
    a: ZkComplex,
    b: ZkComplex,
    z: ZkComplex,
    tol: f64,
    out: *mut ZkComplex,
) -> ZkStatus {
    guarded_value(out, || Ok(kummer::m_series(cx(a), cx(b), cx(z), tol)?.value))
}

/// Tricomi's confluent hypergeometric U(a, b, z).
#[no_mangle]
pub extern "C" fn zk_kummer_u(
    a: ZkComplex,
    b: ZkComplex,
    z: ZkComplex,
    tol: f64,
    out: *mut ZkComplex,
) -> ZkStatus {
    guarded_value(out, || Ok(kummer::u(cx(a), cx(b), cx(z), tol)?.value))
}

/// Computes the classified roots of the degree-2n zeta approximant with
/// order shift `delta`, classification half-width `tau` around the critical
/// line (0.05 is the library default), and root-finder seed `seed`. On
/// success stores a handle that must be released with `zk_rootset_free`.
#[no_mangle]
pub extern "C" fn zk_rootset_compute(
    delta: f64,
    n: usize,
    tau: f64,
    seed: u64,
    out: *mut *mut ZkRootSet,
) -> ZkStatus {
    if out.is_null() {
        return ZkStatus::NullPointer;
    }
    let spec = ApproximantSpec {
        variant: Variant::LaguerreSeries,
        delta,
        n,
        z_max: approx::DEFAULT_Z_MAX,
    };
    match catch_unwind(AssertUnwindSafe(|| approx::find_roots(&spec, tau, seed))) {
        Ok(Ok(rs)) => {
            unsafe { *out = Box::into_raw(Box::new(ZkRootSet(rs))) };
            ZkStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => ZkStatus::Panic,
    }
}

/// Number of roots in the set; 0 for a null handle.
#[no_mangle]
pub extern "C" fn zk_rootset_count(rs: *const ZkRootSet) -> usize {
    if rs.is_null() {
        return 0;
    }
    unsafe { &*rs }.0.roots.len()
}

/// Fetches root `index` (sets sorted by imaginary then real part) and its
/// classification code: 0 on-critical-line, 1 off-line, 2 outside-strip,
/// 3 prefactor-zero. Fails with `Range` when `index` is out of bounds.
#[no_mangle]
pub extern "C" fn zk_rootset_get(
    rs: *const ZkRootSet,
    index: usize,
    root: *mut ZkComplex,
    class_code: *mut i32,
) -> ZkStatus {
    if rs.is_null() || root.is_null() || class_code.is_null() {
        return ZkStatus::NullPointer;
    }
    let set = &unsafe { &*rs }.0;
    let Some(r) = set.roots.get(index) else {
        return ZkStatus::Range;
    };
    unsafe {
        *root = ZkComplex { re: r.re, im: r.im };
        *class_code = match r.class {
            RootClass::OnCriticalLine => 0,
            RootClass::OffLine => 1,
            RootClass::OutsideStrip => 2,
            RootClass::PrefactorZero => 3,
        };
    }
    ZkStatus::Ok
}

/// Releases a root set; accepts null as a no-op.
#[no_mangle]
pub extern "C" fn zk_rootset_free(rs: *mut ZkRootSet) {
    if !rs.is_null() {
        drop(unsafe { Box::from_raw(rs) });
    }
}
