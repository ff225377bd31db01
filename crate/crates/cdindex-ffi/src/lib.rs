//! C ABI for the cdindex library: opaque poset handles, status codes, and
//! rendered-text accessors.
//!
//! Strings returned through `*mut c_char` are owned by the caller and
//! released with [`cdx_string_free`]; poset handles with [`cdx_poset_free`].
//! Every fallible call returns a [`CdxStatus`]; detail text for the most
//! recent failure on the current thread is available from
//! [`cdx_last_error_message`].

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cdindex::flag::{ab_index, cd_index, CdIndexError};
use cdindex::io::{parse_poset_file, render_poset_file};
use cdindex::Poset;

/// Outcome of a C API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CdxStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A document failed to parse or validate.
    ParseError = 3,
    /// The computation itself reported an error.
    ComputeError = 4,
    /// The ab-index exists but has no expression in c and d.
    NotCdExpressible = 5,
}

/// Opaque handle to a quasi-graded poset.
pub struct CdxPoset {
    inner: Poset,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let clean = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(clean).expect("nul bytes were replaced");
    });
}

fn fail(status: CdxStatus, message: &str) -> CdxStatus {
    set_last_error(message);
    status
}

fn succeed() -> CdxStatus {
    set_last_error("");
    CdxStatus::Ok
}

fn export_string(text: String, out: &mut *mut c_char) -> CdxStatus {
    *out = CString::new(text)
        .expect("rendered text has no nul bytes")
        .into_raw();
    succeed()
}

/// Returns the error text of the most recent failing call on this thread,
/// or an empty string after a success. The pointer stays valid until the
/// next call into this library on the same thread; it is never null and
/// must not be freed.
#[no_mangle]
pub extern "C" fn cdx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a poset JSON document into a new handle stored in `*out`.
///
/// The document format is the same one the command-line tool reads:
/// `elements` with ids and ranks, `covers` or `relations`, optional
/// `bottom`/`top`, and `zeta` overrides with `"p/q"` values.
///
/// # Safety
/// `json` must point to a NUL-terminated byte string and `out` to a
/// writable pointer slot; both are only borrowed for the duration of the
/// call.
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_parse(
    json: *const c_char,
    out: *mut *mut CdxPoset,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    *out = ptr::null_mut();
    if json.is_null() {
        return fail(CdxStatus::NullArgument, "json pointer is null");
    }
    let text = match unsafe { CStr::from_ptr(json) }.to_str() {
        Ok(text) => text,
        Err(e) => return fail(CdxStatus::InvalidUtf8, &e.to_string()),
    };
    match catch_unwind(|| parse_poset_file(text)) {
        Ok(Ok(poset)) => {
            *out = Box::into_raw(Box::new(CdxPoset { inner: poset }));
            succeed()
        }
        Ok(Err(e)) => fail(CdxStatus::ParseError, &e.to_string()),
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Releases a poset handle. A null `poset` is a no-op.
///
/// # Safety
/// `poset` must be null or a handle obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_free(poset: *mut CdxPoset) {
    if !poset.is_null() {
        drop(unsafe { Box::from_raw(poset) });
    }
}

/// Stores the number of elements of the poset in `*out`.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot.
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_element_count(
    poset: *const CdxPoset,
    out: *mut usize,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    *out = handle.inner.len();
    succeed()
}

/// Stores the rank distance from the bottom to the top element in `*out`.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot.
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_rank_span(
    poset: *const CdxPoset,
    out: *mut i64,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match handle.inner.rank_span() {
        Ok(span) => {
            *out = span;
            succeed()
        }
        Err(e) => fail(CdxStatus::ComputeError, &e.to_string()),
    }
}

/// Stores `true` in `*out` when every interval of the poset satisfies the
/// Eulerian condition.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot.
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_is_eulerian(
    poset: *const CdxPoset,
    out: *mut bool,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match catch_unwind(AssertUnwindSafe(|| handle.inner.is_eulerian())) {
        Ok(flag) => {
            *out = flag;
            succeed()
        }
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Renders the ab-index of the poset into a newly allocated string stored
/// in `*out`.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot; release the string with [`cdx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_ab_index(
    poset: *const CdxPoset,
    out: *mut *mut c_char,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    *out = ptr::null_mut();
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match catch_unwind(AssertUnwindSafe(|| ab_index(&handle.inner))) {
        Ok(Ok(ab)) => export_string(ab.render(), out),
        Ok(Err(e)) => fail(CdxStatus::ComputeError, &e.to_string()),
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Renders the cd-index of the poset into a newly allocated string stored
/// in `*out`. Returns `NotCdExpressible` when the ab-index exists but has
/// no expression in c and d.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot; release the string with [`cdx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_cd_index(
    poset: *const CdxPoset,
    out: *mut *mut c_char,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    *out = ptr::null_mut();
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match catch_unwind(AssertUnwindSafe(|| cd_index(&handle.inner))) {
        Ok(Ok(cd)) => export_string(cd.render(), out),
        Ok(Err(e @ CdIndexError::NotCdExpressible(_))) => {
            fail(CdxStatus::NotCdExpressible, &e.to_string())
        }
        Ok(Err(e)) => fail(CdxStatus::ComputeError, &e.to_string()),
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Solves for the zeta values that make the poset Eulerian and stores the
/// completed poset as a new handle in `*out`.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot; release the new handle with [`cdx_poset_free`].
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_complete_eulerian(
    poset: *const CdxPoset,
    out: *mut *mut CdxPoset,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    *out = ptr::null_mut();
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match catch_unwind(AssertUnwindSafe(|| handle.inner.complete_eulerian())) {
        Ok(Ok(completed)) => {
            *out = Box::into_raw(Box::new(CdxPoset { inner: completed }));
            succeed()
        }
        Ok(Err(e)) => fail(CdxStatus::ComputeError, &e.to_string()),
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Renders the poset as a canonical JSON document, stored as a newly
/// allocated string in `*out`. The document re-ingests through
/// [`cdx_poset_parse`] to an identical poset.
///
/// # Safety
/// `poset` must be a live handle from this library and `out` a writable
/// slot; release the string with [`cdx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cdx_poset_to_json(
    poset: *const CdxPoset,
    out: *mut *mut c_char,
) -> CdxStatus {
    let Some(out) = (unsafe { out.as_mut() }) else {
        return fail(CdxStatus::NullArgument, "out pointer is null");
    };
    *out = ptr::null_mut();
    let Some(handle) = (unsafe { poset.as_ref() }) else {
        return fail(CdxStatus::NullArgument, "poset handle is null");
    };
    match catch_unwind(AssertUnwindSafe(|| render_poset_file(&handle.inner))) {
        Ok(text) => export_string(text, out),
        Err(_) => fail(CdxStatus::ComputeError, "internal panic"),
    }
}

/// Releases a string returned by this library. A null `text` is a no-op.
///
/// # Safety
/// `text` must be null or a string obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn cdx_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_messages_with_nul_bytes_are_sanitized() {
        set_last_error("broken\0id");
        let text = unsafe { CStr::from_ptr(cdx_last_error_message()) };
        assert_eq!(text.to_str().unwrap(), "broken id");
    }

    #[test]
    fn null_arguments_are_rejected() {
        let mut handle: *mut CdxPoset = ptr::null_mut();
        let status = unsafe { cdx_poset_parse(ptr::null(), &mut handle) };
        assert_eq!(status, CdxStatus::NullArgument);
        assert!(handle.is_null());

        let status = unsafe { cdx_poset_parse(ptr::null(), ptr::null_mut()) };
        assert_eq!(status, CdxStatus::NullArgument);

        let mut count = 0usize;
        let status = unsafe { cdx_poset_element_count(ptr::null(), &mut count) };
        assert_eq!(status, CdxStatus::NullArgument);

        unsafe { cdx_poset_free(ptr::null_mut()) };
        unsafe { cdx_string_free(ptr::null_mut()) };
    }
}
