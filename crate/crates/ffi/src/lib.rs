//! C ABI over `latdim`.
//!
//! Lattices cross the boundary as opaque `LatdimLattice` handles created
//! from JSON and released with `latdim_lattice_free`. Every fallible call
//! returns a `LatdimStatus`; on anything but `LATDIM_OK` the message is
//! available from `latdim_last_error` on the same thread. Strings handed
//! out by the library are released with `latdim_string_free`. No call
//! unwinds across the boundary: panics become `LATDIM_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latdim::{constructions, dims, io, Lattice, LatticeError};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatdimStatus {
    LatdimOk = 0,
    LatdimNullPointer = 1,
    LatdimInvalidUtf8 = 2,
    /// Malformed JSON.
    LatdimParse = 3,
    /// Well-formed input that is not a bounded lattice, or similar.
    LatdimValidation = 4,
    LatdimSizeLimit = 5,
    LatdimInvalidArgument = 6,
    LatdimPanic = 7,
}

/// Which sum or product `latdim_product` builds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatdimOp {
    LatdimSum = 0,
    LatdimCartesian = 1,
    LatdimLex = 2,
    LatdimRect = 3,
}

/// Opaque handle to a validated, immutable lattice.
pub struct LatdimLattice {
    inner: Lattice,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &LatticeError) -> LatdimStatus {
    match e {
        LatticeError::Json(_) => LatdimStatus::LatdimParse,
        LatticeError::SizeLimit { .. } => LatdimStatus::LatdimSizeLimit,
        LatticeError::InvalidK(_) | LatticeError::IndexOutOfRange { .. } => {
            LatdimStatus::LatdimInvalidArgument
        }
        _ => LatdimStatus::LatdimValidation,
    }
}

struct Fail(LatdimStatus, String);

impl From<LatticeError> for Fail {
    fn from(e: LatticeError) -> Self {
        Fail(status_of(&e), format!("{}: {e}", e.kind()))
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LatdimStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            LatdimStatus::LatdimOk
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            LatdimStatus::LatdimPanic
        }
    }
}

fn null() -> Fail {
    Fail(LatdimStatus::LatdimNullPointer, "null pointer argument".to_string())
}

unsafe fn lattice<'a>(l: *const LatdimLattice) -> Result<&'a Lattice, Fail> {
    l.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(null)
}

fn handle(l: Lattice) -> *mut LatdimLattice {
    Box::into_raw(Box::new(LatdimLattice { inner: l }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON output has no nul bytes").into_raw()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn latdim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse and validate lattice JSON (`{"name", "elements", "covers"}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_from_json(
    json: *const c_char,
    out: *mut *mut LatdimLattice,
) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        if json.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Fail(LatdimStatus::LatdimInvalidUtf8, e.to_string()))?;
        *out = handle(io::parse_lattice(text)?);
        Ok(())
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `l` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_free(l: *mut LatdimLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_size(l: *const LatdimLattice, out: *mut usize) -> LatdimStatus {
    guard(|| {
        *out_ptr(out)? = lattice(l)?.len();
        Ok(())
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_ind_large(l: *const LatdimLattice, out: *mut i64) -> LatdimStatus {
    guard(|| {
        *out_ptr(out)? = dims::ind_large(lattice(l)?);
        Ok(())
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_ind_small(l: *const LatdimLattice, out: *mut i64) -> LatdimStatus {
    guard(|| {
        *out_ptr(out)? = dims::ind_small(lattice(l)?)?;
        Ok(())
    })
}

/// Covering dimension; −1 for the one-element lattice.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_dim_covering(l: *const LatdimLattice, out: *mut i64) -> LatdimStatus {
    guard(|| {
        *out_ptr(out)? = dims::dim_covering(lattice(l)?)?;
        Ok(())
    })
}

/// Krull dimension. `*present` is false when there are no prime filters,
/// and `*out` is then set to 0.
///
/// # Safety
/// `l` must be a live handle; `out` and `present` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_kdim(
    l: *const LatdimLattice,
    out: *mut usize,
    present: *mut bool,
) -> LatdimStatus {
    guard(|| {
        let (out, present) = (out_ptr(out)?, out_ptr(present)?);
        let k = dims::kdim(lattice(l)?);
        *present = k.is_some();
        *out = k.unwrap_or(0);
        Ok(())
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_height(l: *const LatdimLattice, out: *mut usize) -> LatdimStatus {
    guard(|| {
        *out_ptr(out)? = dims::height(lattice(l)?);
        Ok(())
    })
}

/// Full dimension report with witnesses, as JSON. Free with
/// `latdim_string_free`.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_report_json(l: *const LatdimLattice, out: *mut *mut c_char) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let r = dims::full_report(lattice(l)?)?;
        *out = c_string(serde_json::to_string_pretty(&r).expect("plain data serializes"));
        Ok(())
    })
}

/// The lattice in the same JSON form `latdim_lattice_from_json` reads.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_to_json(l: *const LatdimLattice, out: *mut *mut c_char) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = c_string(io::to_json(lattice(l)?));
        Ok(())
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latdim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sum or product of two lattices as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_product(
    a: *const LatdimLattice,
    b: *const LatdimLattice,
    op: LatdimOp,
    out: *mut *mut LatdimLattice,
) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let (a, b) = (lattice(a)?, lattice(b)?);
        let l = match op {
            LatdimOp::LatdimSum => constructions::linear_sum(a, b)?,
            LatdimOp::LatdimCartesian => constructions::cartesian_product(a, b)?,
            LatdimOp::LatdimLex => constructions::lex_product(a, b)?,
            LatdimOp::LatdimRect => constructions::rect_product(a, b)?,
        };
        *out = handle(l);
        Ok(())
    })
}

/// `l` with a new top element adjoined.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_add_top(l: *const LatdimLattice, out: *mut *mut LatdimLattice) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = handle(constructions::add_top(lattice(l)?)?);
        Ok(())
    })
}

/// The family member with `Ind = k`, `k >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_ind_k_family(k: usize, out: *mut *mut LatdimLattice) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = handle(constructions::ind_k_family(k)?);
        Ok(())
    })
}

/// The graft with `(ind, Ind) = (k - 1, k)`, `k >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_graft_m(k: usize, out: *mut *mut LatdimLattice) -> LatdimStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = handle(constructions::graft_m(k)?);
        Ok(())
    })
}
