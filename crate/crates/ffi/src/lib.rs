//! C ABI over `knotrho`.
//!
//! Seifert matrices cross the boundary as opaque `KnotrhoSeifert` handles.
//! Every function returns a `KnotrhoStatus`; on failure a message is
//! available from `knotrho_last_error` on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and released
//! with `knotrho_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use knotrho::independence::exhaustive_independence;
use knotrho::{jm_seifert, rho, signature_at, SeifertMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnotrhoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidMatrix = 2,
    InvalidArgument = 3,
    Precondition = 4,
    Internal = 5,
    Panic = 6,
}

/// Opaque Seifert matrix handle.
pub struct KnotrhoSeifert {
    inner: SeifertMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nuls removed"));
}

type FfiResult = Result<(), (KnotrhoStatus, String)>;

fn guard(f: impl FnOnce() -> FfiResult) -> KnotrhoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KnotrhoStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KnotrhoStatus::Panic
        }
    }
}

fn null(what: &str) -> (KnotrhoStatus, String) {
    (KnotrhoStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(p: *const KnotrhoSeifert, what: &str) -> Result<&'a SeifertMatrix, (KnotrhoStatus, String)> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn emit_handle(out: *mut *mut KnotrhoSeifert, s: SeifertMatrix) {
    *out = Box::into_raw(Box::new(KnotrhoSeifert { inner: s }));
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior nuls").into_raw();
}

/// The message for the last failing call on this thread. Valid until the
/// next failing call; never null.
#[no_mangle]
pub extern "C" fn knotrho_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a handle from `dim * dim` row-major entries. `dim = 0` (with any
/// `entries`) gives the unknot.
///
/// # Safety
/// `entries` must point to `dim * dim` readable values when `dim > 0`;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_seifert_new(
    entries: *const i64,
    dim: usize,
    out: *mut *mut KnotrhoSeifert,
) -> KnotrhoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let raw = if dim == 0 {
            Vec::new()
        } else {
            if entries.is_null() {
                return Err(null("entries"));
            }
            let len = dim
                .checked_mul(dim)
                .ok_or((KnotrhoStatus::InvalidArgument, "dimension overflows".to_owned()))?;
            let flat = std::slice::from_raw_parts(entries, len);
            flat.chunks(dim).map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect()
        };
        let s = SeifertMatrix::validate(raw).map_err(|e| (KnotrhoStatus::InvalidMatrix, e.to_string()))?;
        emit_handle(out, s);
        Ok(())
    })
}

/// The genus-one knot `J_m` with matrix `[[1, 0], [1, 2m]]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_seifert_jm(m: u64, out: *mut *mut KnotrhoSeifert) -> KnotrhoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let s = jm_seifert(m).map_err(|e| (KnotrhoStatus::InvalidArgument, e.to_string()))?;
        emit_handle(out, s);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn knotrho_seifert_free(s: *mut KnotrhoSeifert) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn knotrho_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_seifert_genus(s: *const KnotrhoSeifert, out: *mut usize) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        *out.as_mut().ok_or_else(|| null("out"))? = s.genus();
        Ok(())
    })
}

/// Canonical Alexander polynomial string, e.g. `2t^-1-3+2t`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_alexander(s: *const KnotrhoSeifert, out: *mut *mut c_char) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_string(out, s.alexander().to_string());
        Ok(())
    })
}

/// `|Delta(-1)|` as a decimal string (it may exceed 64 bits).
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_determinant(s: *const KnotrhoSeifert, out: *mut *mut c_char) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_string(out, s.determinant().to_string());
        Ok(())
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_arf(s: *const KnotrhoSeifert, out: *mut u8) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        *out.as_mut().ok_or_else(|| null("out"))? = s.arf();
        Ok(())
    })
}

/// Signature of `S + S^T`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_ordinary_signature(s: *const KnotrhoSeifert, out: *mut i64) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        *out.as_mut().ok_or_else(|| null("out"))? = s.ordinary_signature();
        Ok(())
    })
}

/// Levine-Tristram signature at `omega = x + i sqrt(1 - x^2)` with
/// `x = num / den` in `[-1, 1]`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_signature_at(
    s: *const KnotrhoSeifert,
    num: i64,
    den: i64,
    out: *mut i64,
) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if den == 0 {
            return Err((KnotrhoStatus::InvalidArgument, "zero denominator".into()));
        }
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        if x.abs() > BigRational::from_integer(BigInt::from(1)) {
            return Err((KnotrhoStatus::InvalidArgument, format!("abscissa {x} outside [-1, 1]")));
        }
        *out = signature_at(s, &x);
        Ok(())
    })
}

/// Integrated signature. `lo` and `hi` receive a floating-point enclosure
/// (rounded outward from an exact one of width at most `tol`); `symbolic`,
/// if not null, receives the closed form.
///
/// # Safety
/// `s` must be a live handle; `lo` and `hi` writable; `symbolic` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_rho(
    s: *const KnotrhoSeifert,
    tol: f64,
    lo: *mut f64,
    hi: *mut f64,
    symbolic: *mut *mut c_char,
) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        let lo = lo.as_mut().ok_or_else(|| null("lo"))?;
        let hi = hi.as_mut().ok_or_else(|| null("hi"))?;
        let tol = BigRational::from_float(tol)
            .filter(|t| t.is_positive())
            .ok_or((KnotrhoStatus::InvalidArgument, format!("tolerance {tol} must be positive and finite")))?;
        let r = rho(s, &tol).map_err(|e| (KnotrhoStatus::Internal, e.to_string()))?;
        (*lo, *hi) = r.enclosure().to_f64_pair();
        if !symbolic.is_null() {
            emit_string(symbolic, r.symbolic());
        }
        Ok(())
    })
}

/// Block sum, modelling connected sum.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_connected_sum(
    a: *const KnotrhoSeifert,
    b: *const KnotrhoSeifert,
    out: *mut *mut KnotrhoSeifert,
) -> KnotrhoStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        emit_handle(out, a.connected_sum(b));
        Ok(())
    })
}

/// Concordance inverse `-S^T`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_inverse(s: *const KnotrhoSeifert, out: *mut *mut KnotrhoSeifert) -> KnotrhoStatus {
    guard(|| {
        let s = handle(s, "s")?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_handle(out, s.inverse());
        Ok(())
    })
}

/// Number of nonzero exponent vectors with entries in `[-bound, bound]`
/// whose power product of the first `n` family units is real.
///
/// # Safety
/// `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn knotrho_independence(n: usize, bound: u32, violations: *mut usize) -> KnotrhoStatus {
    guard(|| {
        let out = violations.as_mut().ok_or_else(|| null("violations"))?;
        if n == 0 || n > 16 || bound == 0 {
            return Err((KnotrhoStatus::InvalidArgument, "need 1 <= n <= 16 and bound >= 1".into()));
        }
        let hits = exhaustive_independence(n, bound).map_err(|e| (KnotrhoStatus::Precondition, e.to_string()))?;
        *out = hits.len();
        Ok(())
    })
}
