//! C ABI over the affinesym core.
//!
//! Conventions: constructors write an owned handle through an out pointer
//! and return a status; every handle must be released with the matching
//! free function. Out parameters must be non-null. String and array
//! getters use a caller-supplied buffer and report the required size when
//! it is too small. No call panics across the boundary; internal panics are
//! converted to `AfsStatus::Internal`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use affinesym::cells;
use affinesym::error::Error;
use affinesym::extended::ExtendedAffinePermutation;
use affinesym::pattern;
use affinesym::perm::AffinePermutation;
use affinesym::word;

/// Opaque affine permutation handle.
pub struct AfsPerm {
    inner: AffinePermutation,
}

/// Opaque extended affine permutation handle.
pub struct AfsExt {
    inner: ExtendedAffinePermutation,
}

/// Call outcome. `Ok` is zero; everything else names the first violated
/// precondition.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AfsStatus {
    Ok = 0,
    NullPointer,
    InvalidUtf8,
    ParseError,
    RankTooSmall,
    IndexOutOfRange,
    RankMismatch,
    ResidueCollision,
    WindowSum,
    NotReduced,
    NotFullyCommutative,
    ClassCapExceeded,
    BudgetExceeded,
    InvalidTriple,
    BufferTooSmall,
    Internal,
}

impl From<&Error> for AfsStatus {
    fn from(err: &Error) -> AfsStatus {
        match err {
            Error::RankTooSmall(_) => AfsStatus::RankTooSmall,
            Error::IndexOutOfRange { .. } => AfsStatus::IndexOutOfRange,
            Error::RankMismatch { .. } => AfsStatus::RankMismatch,
            Error::ResidueCollision { .. } => AfsStatus::ResidueCollision,
            Error::WindowSum { .. } => AfsStatus::WindowSum,
            Error::Parse(_) | Error::InvalidPartition(_) => AfsStatus::ParseError,
            Error::NotReduced => AfsStatus::NotReduced,
            Error::NotFullyCommutative => AfsStatus::NotFullyCommutative,
            Error::ClassCapExceeded(_) => AfsStatus::ClassCapExceeded,
            Error::BudgetExceeded(_) => AfsStatus::BudgetExceeded,
            Error::InvalidTriple { .. } => AfsStatus::InvalidTriple,
        }
    }
}

fn guarded(f: impl FnOnce() -> AfsStatus) -> AfsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(AfsStatus::Internal)
}

unsafe fn emit_perm(out: *mut *mut AfsPerm, value: AffinePermutation) -> AfsStatus {
    if out.is_null() {
        return AfsStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(AfsPerm { inner: value }));
    AfsStatus::Ok
}

unsafe fn emit_ext(out: *mut *mut AfsExt, value: ExtendedAffinePermutation) -> AfsStatus {
    if out.is_null() {
        return AfsStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(AfsExt { inner: value }));
    AfsStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn afs_version() -> *const c_char {
    const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Creates the identity of rank `n` (n >= 3).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_identity(n: usize, out: *mut *mut AfsPerm) -> AfsStatus {
    guarded(|| match AffinePermutation::identity(n) {
        Ok(w) => emit_perm(out, w),
        Err(e) => AfsStatus::from(&e),
    })
}

/// Creates the generator s_i, 1 <= i <= n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_generator(
    n: usize,
    i: usize,
    out: *mut *mut AfsPerm,
) -> AfsStatus {
    guarded(|| match AffinePermutation::generator(n, i) {
        Ok(w) => emit_perm(out, w),
        Err(e) => AfsStatus::from(&e),
    })
}

/// Creates an element from a window of `len` entries.
///
/// # Safety
/// `values` must point to `len` readable entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_from_window(
    values: *const i64,
    len: usize,
    out: *mut *mut AfsPerm,
) -> AfsStatus {
    guarded(|| {
        if values.is_null() {
            return AfsStatus::NullPointer;
        }
        let window = std::slice::from_raw_parts(values, len).to_vec();
        match AffinePermutation::from_window(window) {
            Ok(w) => emit_perm(out, w),
            Err(e) => AfsStatus::from(&e),
        }
    })
}

/// Parses window notation such as `[2,1,3]`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_parse(text: *const c_char, out: *mut *mut AfsPerm) -> AfsStatus {
    guarded(|| {
        if text.is_null() {
            return AfsStatus::NullPointer;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return AfsStatus::InvalidUtf8;
        };
        match text.parse::<AffinePermutation>() {
            Ok(w) => emit_perm(out, w),
            Err(e) => AfsStatus::from(&e),
        }
    })
}

/// Copies a handle.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_clone(p: *const AfsPerm, out: *mut *mut AfsPerm) -> AfsStatus {
    guarded(|| match p.as_ref() {
        Some(p) => emit_perm(out, p.inner.clone()),
        None => AfsStatus::NullPointer,
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_free(p: *mut AfsPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_rank(p: *const AfsPerm, out: *mut usize) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.rank();
        AfsStatus::Ok
    })
}

/// Copies the window into `buf`, which must hold exactly `len` = rank
/// entries.
///
/// # Safety
/// `p` must be a live handle; `buf` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_window(
    p: *const AfsPerm,
    buf: *mut i64,
    len: usize,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), buf.is_null()) else {
            return AfsStatus::NullPointer;
        };
        if len < p.inner.rank() {
            return AfsStatus::BufferTooSmall;
        }
        let window = p.inner.window();
        std::ptr::copy_nonoverlapping(window.as_ptr(), buf, window.len());
        AfsStatus::Ok
    })
}

/// Image of `t` under the permutation.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_apply(p: *const AfsPerm, t: i64, out: *mut i64) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.apply(t);
        AfsStatus::Ok
    })
}

/// Product a * b (a applied after b). Ranks must match.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_compose(
    a: *const AfsPerm,
    b: *const AfsPerm,
    out: *mut *mut AfsPerm,
) -> AfsStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return AfsStatus::NullPointer;
        };
        if a.inner.rank() != b.inner.rank() {
            return AfsStatus::RankMismatch;
        }
        emit_perm(out, a.inner.compose(&b.inner))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_inverse(p: *const AfsPerm, out: *mut *mut AfsPerm) -> AfsStatus {
    guarded(|| match p.as_ref() {
        Some(p) => emit_perm(out, p.inner.inverse()),
        None => AfsStatus::NullPointer,
    })
}

/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_length(p: *const AfsPerm, out: *mut usize) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.length();
        AfsStatus::Ok
    })
}

/// # Safety
/// `a`, `b` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_equal(
    a: *const AfsPerm,
    b: *const AfsPerm,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(a), Some(b), false) = (a.as_ref(), b.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = a.inner == b.inner;
        AfsStatus::Ok
    })
}

/// True iff w(i) > w(i+1); i must lie in 1..=n.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_is_right_descent(
    p: *const AfsPerm,
    i: usize,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        if i < 1 || i > p.inner.rank() {
            return AfsStatus::IndexOutOfRange;
        }
        *out = p.inner.is_right_descent(i);
        AfsStatus::Ok
    })
}

/// Writes the canonical reduced word into `buf` (capacity `cap` letters)
/// and stores the letter count in `written`. Returns `BufferTooSmall`
/// leaving `written` at the required size when `cap` is insufficient.
///
/// # Safety
/// `p` and `written` must be valid; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_canonical_word(
    p: *const AfsPerm,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), written.is_null()) else {
            return AfsStatus::NullPointer;
        };
        let letters = p.inner.canonical_reduced_word();
        let letters = letters.letters();
        *written = letters.len();
        if cap < letters.len() {
            return AfsStatus::BufferTooSmall;
        }
        if !letters.is_empty() {
            if buf.is_null() {
                return AfsStatus::NullPointer;
            }
            std::ptr::copy_nonoverlapping(letters.as_ptr(), buf, letters.len());
        }
        AfsStatus::Ok
    })
}

/// Writes the window notation as a NUL-terminated string. `written`
/// receives the byte count including the terminator.
///
/// # Safety
/// `p` and `written` must be valid; `buf` must hold `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_format(
    p: *const AfsPerm,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), written.is_null()) else {
            return AfsStatus::NullPointer;
        };
        let text = p.inner.to_string();
        *written = text.len() + 1;
        if cap < text.len() + 1 {
            return AfsStatus::BufferTooSmall;
        }
        if buf.is_null() {
            return AfsStatus::NullPointer;
        }
        std::ptr::copy_nonoverlapping(text.as_ptr() as *const c_char, buf, text.len());
        *buf.add(text.len()) = 0;
        AfsStatus::Ok
    })
}

/// Full commutativity via the commutation class of the canonical word.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_is_fully_commutative(
    p: *const AfsPerm,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        match word::is_fully_commutative(&p.inner) {
            Ok(fc) => {
                *out = fc;
                AfsStatus::Ok
            }
            Err(e) => AfsStatus::from(&e),
        }
    })
}

/// 321-avoidance via the bounded scan.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_is_321_avoiding(
    p: *const AfsPerm,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = pattern::is_321_avoiding(&p.inner);
        AfsStatus::Ok
    })
}

/// Inversion pair criterion.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_pair_criterion(
    p: *const AfsPerm,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = pattern::pair_criterion_holds(&p.inner);
        AfsStatus::Ok
    })
}

/// Inversion-set root criterion.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_root_criterion(
    p: *const AfsPerm,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = affinesym::roots::root_criterion_holds(&p.inner);
        AfsStatus::Ok
    })
}

/// Least 321 instance, if any: `found` reports whether `a`, `b`, `c` were
/// written.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_find_321(
    p: *const AfsPerm,
    a: *mut i64,
    b: *mut i64,
    c: *mut i64,
    found: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), found.is_null()) else {
            return AfsStatus::NullPointer;
        };
        match pattern::find_321_instance(&p.inner) {
            Some((x, y, z)) => {
                if a.is_null() || b.is_null() || c.is_null() {
                    return AfsStatus::NullPointer;
                }
                *a = x;
                *b = y;
                *c = z;
                *found = true;
                AfsStatus::Ok
            }
            None => {
                *found = false;
                AfsStatus::Ok
            }
        }
    })
}

/// Writes the parts of the cell partition into `buf` and their count into
/// `written`; two-call protocol as for `afs_perm_canonical_word`.
///
/// # Safety
/// `p` and `written` must be valid; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn afs_perm_sigma(
    p: *const AfsPerm,
    buf: *mut u32,
    cap: usize,
    written: *mut usize,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), written.is_null()) else {
            return AfsStatus::NullPointer;
        };
        let sigma = cells::shi_partition(&p.inner);
        let parts = sigma.parts();
        *written = parts.len();
        if cap < parts.len() {
            return AfsStatus::BufferTooSmall;
        }
        if buf.is_null() {
            return AfsStatus::NullPointer;
        }
        std::ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
        AfsStatus::Ok
    })
}

/// The rotation rho of rank n, window [2, ..., n+1].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_rho(n: usize, out: *mut *mut AfsExt) -> AfsStatus {
    guarded(|| match ExtendedAffinePermutation::rho(n) {
        Ok(e) => emit_ext(out, e),
        Err(e) => AfsStatus::from(&e),
    })
}

/// Extended identity of rank n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_identity(n: usize, out: *mut *mut AfsExt) -> AfsStatus {
    guarded(|| match ExtendedAffinePermutation::identity(n) {
        Ok(e) => emit_ext(out, e),
        Err(e) => AfsStatus::from(&e),
    })
}

/// Extended element from a window; the shift is read off the window sum.
///
/// # Safety
/// `values` must point to `len` readable entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_from_window(
    values: *const i64,
    len: usize,
    out: *mut *mut AfsExt,
) -> AfsStatus {
    guarded(|| {
        if values.is_null() {
            return AfsStatus::NullPointer;
        }
        let window = std::slice::from_raw_parts(values, len).to_vec();
        match ExtendedAffinePermutation::from_window(window) {
            Ok(e) => emit_ext(out, e),
            Err(e) => AfsStatus::from(&e),
        }
    })
}

/// rho^shift * body.
///
/// # Safety
/// `body` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_from_parts(
    shift: i64,
    body: *const AfsPerm,
    out: *mut *mut AfsExt,
) -> AfsStatus {
    guarded(|| match body.as_ref() {
        Some(body) => emit_ext(out, ExtendedAffinePermutation::new(shift, body.inner.clone())),
        None => AfsStatus::NullPointer,
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_free(p: *mut AfsExt) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_shift(p: *const AfsExt, out: *mut i64) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.shift_power();
        AfsStatus::Ok
    })
}

/// Clones the body (the affine part) of the decomposition.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_body(p: *const AfsExt, out: *mut *mut AfsPerm) -> AfsStatus {
    guarded(|| match p.as_ref() {
        Some(p) => emit_perm(out, p.inner.body().clone()),
        None => AfsStatus::NullPointer,
    })
}

/// Copies the window into `buf` of `len` >= rank entries.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_window(p: *const AfsExt, buf: *mut i64, len: usize) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), buf.is_null()) else {
            return AfsStatus::NullPointer;
        };
        if len < p.inner.rank() {
            return AfsStatus::BufferTooSmall;
        }
        let window = p.inner.window();
        std::ptr::copy_nonoverlapping(window.as_ptr(), buf, window.len());
        AfsStatus::Ok
    })
}

/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_apply(p: *const AfsExt, t: i64, out: *mut i64) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.apply(t);
        AfsStatus::Ok
    })
}

/// Product a * b. Ranks must match.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_compose(
    a: *const AfsExt,
    b: *const AfsExt,
    out: *mut *mut AfsExt,
) -> AfsStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return AfsStatus::NullPointer;
        };
        if a.inner.rank() != b.inner.rank() {
            return AfsStatus::RankMismatch;
        }
        emit_ext(out, a.inner.compose(&b.inner))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_inverse(p: *const AfsExt, out: *mut *mut AfsExt) -> AfsStatus {
    guarded(|| match p.as_ref() {
        Some(p) => emit_ext(out, p.inner.inverse()),
        None => AfsStatus::NullPointer,
    })
}

/// Coxeter length of the body.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_length(p: *const AfsExt, out: *mut usize) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.length();
        AfsStatus::Ok
    })
}

/// # Safety
/// `a`, `b` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_equal(
    a: *const AfsExt,
    b: *const AfsExt,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(a), Some(b), false) = (a.as_ref(), b.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = a.inner == b.inner;
        AfsStatus::Ok
    })
}

/// 321-avoidance, delegated to the body.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_is_321_avoiding(
    p: *const AfsExt,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        *out = p.inner.is_321_avoiding();
        AfsStatus::Ok
    })
}

/// Full commutativity, delegated to the body.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn afs_ext_is_fully_commutative(
    p: *const AfsExt,
    out: *mut bool,
) -> AfsStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return AfsStatus::NullPointer;
        };
        match p.inner.is_fully_commutative() {
            Ok(fc) => {
                *out = fc;
                AfsStatus::Ok
            }
            Err(e) => AfsStatus::from(&e),
        }
    })
}
