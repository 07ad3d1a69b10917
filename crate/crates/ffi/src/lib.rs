//! C ABI over `rsprocess`.
//!
//! Objects cross the boundary as opaque handles created by `rsp_*_new` or
//! sampler functions and released with the matching `rsp_*_free`. Every
//! fallible function returns an [`RspStatus`]; on failure a message for the
//! calling thread is available from [`rsp_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rsprocess::correspondences::{drs, DecoratedTableauPair, PointConfiguration};
use rsprocess::exactlaw::{fdd_continuous, fdd_discrete, poissonized_plancherel, FddQuery};
use rsprocess::partitions::{dim_standard, YoungDiagram};
use rsprocess::sampling::{sample_poisson_square, RngSpec};
use rsprocess::trajectories::{diagram_at, line_at};
use rsprocess::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RspStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    BufferTooSmall = 4,
    ParseError = 5,
    Internal = 6,
}

/// Opaque point configuration in `[0, θ]²`.
pub struct RspConfiguration(PointConfiguration);

/// Opaque pair of decorated tableaux.
pub struct RspPair(DecoratedTableauPair);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: RspStatus, msg: impl Into<String>) -> RspStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> RspStatus {
    let status = match e {
        Error::TimeOutOfRange { .. } => RspStatus::OutOfRange,
        Error::Parse(_) | Error::Config(_) => RspStatus::ParseError,
        _ => RspStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> RspStatus) -> RspStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(RspStatus::Internal, "internal panic"),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(RspStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

macro_rules! try_rsp {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return from_error(e),
        }
    };
}

unsafe fn diagram_from(rows: *const u32, len: usize) -> Result<YoungDiagram, Error> {
    let rows = if len == 0 { &[][..] } else { std::slice::from_raw_parts(rows, len) };
    YoungDiagram::new(rows.to_vec())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rsp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn rsp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a configuration from `n` points `(xs[i], ys[i])`.
///
/// # Safety
/// `xs` and `ys` must point to `n` readable doubles (may be null when `n == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_configuration_new(
    theta: f64,
    xs: *const f64,
    ys: *const f64,
    n: usize,
    out: *mut *mut RspConfiguration,
) -> RspStatus {
    guard(|| {
        non_null!(out);
        if n > 0 {
            non_null!(xs, ys);
        }
        let points = (0..n).map(|i| (*xs.add(i), *ys.add(i))).collect();
        let c = try_rsp!(PointConfiguration::new(theta, points));
        *out = Box::into_raw(Box::new(RspConfiguration(c)));
        RspStatus::Ok
    })
}

/// Rate-one Poisson process on `[0, θ]²` from the `(seed, stream)` generator.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_sample_poisson_square(
    theta: f64,
    seed: u64,
    stream: u64,
    out: *mut *mut RspConfiguration,
) -> RspStatus {
    guard(|| {
        non_null!(out);
        let c = try_rsp!(sample_poisson_square(theta, RngSpec::new(seed, stream)));
        *out = Box::into_raw(Box::new(RspConfiguration(c)));
        RspStatus::Ok
    })
}

/// # Safety
/// `config` must come from this library and not yet be freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rsp_configuration_free(config: *mut RspConfiguration) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// # Safety
/// `config` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_configuration_len(config: *const RspConfiguration, out: *mut usize) -> RspStatus {
    guard(|| {
        non_null!(config, out);
        *out = (*config).0.len();
        RspStatus::Ok
    })
}

/// Copies the points, sorted by x, into `xs` and `ys` (capacity `cap` each).
///
/// # Safety
/// `config` must be a live handle; `xs` and `ys` must have room for `cap` doubles.
#[no_mangle]
pub unsafe extern "C" fn rsp_configuration_points(
    config: *const RspConfiguration,
    xs: *mut f64,
    ys: *mut f64,
    cap: usize,
) -> RspStatus {
    guard(|| {
        non_null!(config);
        let pts = (*config).0.points();
        if pts.len() > cap {
            return fail(RspStatus::BufferTooSmall, format!("need room for {} points", pts.len()));
        }
        if !pts.is_empty() {
            non_null!(xs, ys);
        }
        for (i, &(x, y)) in pts.iter().enumerate() {
            *xs.add(i) = x;
            *ys.add(i) = y;
        }
        RspStatus::Ok
    })
}

/// Decorated RS correspondence.
///
/// # Safety
/// `config` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_drs(config: *const RspConfiguration, out: *mut *mut RspPair) -> RspStatus {
    guard(|| {
        non_null!(config, out);
        *out = Box::into_raw(Box::new(RspPair(drs(&(*config).0))));
        RspStatus::Ok
    })
}

/// # Safety
/// `pair` must come from this library and not yet be freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rsp_pair_free(pair: *mut RspPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Number of boxes of the common shape.
///
/// # Safety
/// `pair` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_pair_size(pair: *const RspPair, out: *mut usize) -> RspStatus {
    guard(|| {
        non_null!(pair, out);
        *out = (*pair).0.size();
        RspStatus::Ok
    })
}

/// Row lengths of `λ(t)`. The row count is stored in `out_len` even when
/// `cap` is too small, in which case nothing is copied.
///
/// # Safety
/// `pair` must be a live handle, `rows` must have room for `cap` values and
/// `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_pair_diagram_at(
    pair: *const RspPair,
    t: f64,
    rows: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> RspStatus {
    guard(|| {
        non_null!(pair, out_len);
        let d = try_rsp!(diagram_at(&(*pair).0, t));
        *out_len = d.num_rows();
        if d.num_rows() > cap {
            return fail(RspStatus::BufferTooSmall, format!("need room for {} rows", d.num_rows()));
        }
        if d.num_rows() > 0 {
            non_null!(rows);
            ptr::copy_nonoverlapping(d.rows().as_ptr(), rows, d.num_rows());
        }
        RspStatus::Ok
    })
}

/// Line value `λ_i(t) - i` for `i >= 1`.
///
/// # Safety
/// `pair` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_pair_line_at(pair: *const RspPair, i: usize, t: f64, out: *mut i64) -> RspStatus {
    guard(|| {
        non_null!(pair, out);
        *out = try_rsp!(line_at(&(*pair).0, i, t));
        RspStatus::Ok
    })
}

/// Evaluates a finite-dimensional query given as JSON
/// (`{"theta", "pins": [{"time", "diagram"}], "k"?}`). Writes the natural
/// log of the probability (`-inf` for zero) and the probability.
///
/// # Safety
/// `query_json` must be a NUL-terminated string; `out_ln` and `out_p` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_fdd(query_json: *const c_char, out_ln: *mut f64, out_p: *mut f64) -> RspStatus {
    guard(|| {
        non_null!(query_json, out_ln, out_p);
        let Ok(text) = CStr::from_ptr(query_json).to_str() else {
            return fail(RspStatus::ParseError, "query is not UTF-8");
        };
        let query: FddQuery = match serde_json::from_str(text) {
            Ok(q) => q,
            Err(e) => return fail(RspStatus::ParseError, e.to_string()),
        };
        let p = try_rsp!(match query.discrete_k() {
            Some(_) => fdd_discrete(&query),
            None => fdd_continuous(&query),
        });
        *out_ln = p.ln;
        *out_p = p.probability();
        RspStatus::Ok
    })
}

/// Natural log of the Poissonized Plancherel weight of the diagram `rows`.
///
/// # Safety
/// `rows` must point to `len` values (may be null when `len == 0`); `out_ln` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_poissonized_plancherel(
    rows: *const u32,
    len: usize,
    theta: f64,
    out_ln: *mut f64,
) -> RspStatus {
    guard(|| {
        non_null!(out_ln);
        if len > 0 {
            non_null!(rows);
        }
        let d = try_rsp!(diagram_from(rows, len));
        *out_ln = try_rsp!(poissonized_plancherel(&d, theta)).ln;
        RspStatus::Ok
    })
}

/// Number of standard tableaux of shape `rows` as a decimal string, released
/// with [`rsp_string_free`].
///
/// # Safety
/// `rows` must point to `len` values (may be null when `len == 0`); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rsp_dim_standard(rows: *const u32, len: usize, out: *mut *mut c_char) -> RspStatus {
    guard(|| {
        non_null!(out);
        if len > 0 {
            non_null!(rows);
        }
        let d = try_rsp!(diagram_from(rows, len));
        let s = CString::new(dim_standard(&d).to_string()).expect("digits");
        *out = s.into_raw();
        RspStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not yet be freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rsp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
