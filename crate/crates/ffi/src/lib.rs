//! C ABI for the evenweave library.
//!
//! Systems are exposed as opaque handles created by `ew_build` and released
//! by `ew_free`. All functions are null-safe and report outcomes through
//! `EwStatus`; strings returned by `ew_render_text` are owned by the caller
//! and must be released with `ew_string_free`. The matching declarations
//! live in `include/evenweave.h`.

use std::ffi::{c_char, CString};
use std::ptr;

use evenweave::constructions::{build_unparalleled, check_certificate, CertOptions, Certificate};
use evenweave::io::SystemDocument;
use evenweave::system::LabeledSystem;
use evenweave::verifier::{
    check_decomposition, find_parallel_class, SearchBudget, SearchOutcome,
};

/// Status codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EwStatus {
    EwOk = 0,
    /// (v, t) violates the admissibility condition.
    EwNotAdmissible = 1,
    /// A required pointer argument was null.
    EwNullPointer = 2,
    /// A verification (decomposition or certificate) check failed.
    EwVerifyFailed = 3,
    /// The search budget was exhausted before a definite answer.
    EwBudgetExceeded = 4,
}

/// Opaque handle: a built system together with its certificate.
pub struct EwSystem {
    sys: LabeledSystem,
    cert: Certificate,
}

/// Builds an unparalleled CS(v, 2t). On success stores a fresh handle in
/// `*out` and returns `EwOk`; `*out` is untouched otherwise.
///
/// # Safety
/// `out`, when non-null, must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ew_build(v: u32, t: u32, out: *mut *mut EwSystem) -> EwStatus {
    if out.is_null() {
        return EwStatus::EwNullPointer;
    }
    match build_unparalleled(v, t) {
        Ok((sys, cert)) => {
            let handle = Box::new(EwSystem { sys, cert });
            unsafe { ptr::write(out, Box::into_raw(handle)) };
            EwStatus::EwOk
        }
        Err(_) => EwStatus::EwNotAdmissible,
    }
}

/// Releases a handle returned by `ew_build`. Null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer previously returned by `ew_build`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ew_free(handle: *mut EwSystem) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of cycles in the system, or 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`.
#[no_mangle]
pub unsafe extern "C" fn ew_cycle_count(handle: *const EwSystem) -> u64 {
    match unsafe { handle.as_ref() } {
        Some(h) => h.sys.cycle_count() as u64,
        None => 0,
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`.
#[no_mangle]
pub unsafe extern "C" fn ew_order(handle: *const EwSystem) -> u32 {
    match unsafe { handle.as_ref() } {
        Some(h) => h.sys.vertex_set.len() as u32,
        None => 0,
    }
}

/// Renders the system as its canonical text document. Returns a fresh
/// NUL-terminated string (release with `ew_string_free`) or null for a
/// null handle.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`.
#[no_mangle]
pub unsafe extern "C" fn ew_render_text(handle: *const EwSystem) -> *mut c_char {
    match unsafe { handle.as_ref() } {
        Some(h) => {
            let text = SystemDocument::from_system(&h.sys).render_text();
            CString::new(text).expect("rendering has no NUL bytes").into_raw()
        }
        None => ptr::null_mut(),
    }
}

/// Releases a string returned by `ew_render_text`. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously returned by `ew_render_text`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ew_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Re-checks the edge decomposition of the handle's system.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`.
#[no_mangle]
pub unsafe extern "C" fn ew_verify(handle: *const EwSystem) -> EwStatus {
    match unsafe { handle.as_ref() } {
        Some(h) => {
            if check_decomposition(&h.sys.system).pass {
                EwStatus::EwOk
            } else {
                EwStatus::EwVerifyFailed
            }
        }
        None => EwStatus::EwNullPointer,
    }
}

/// Re-validates the certificate produced alongside the system.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`.
#[no_mangle]
pub unsafe extern "C" fn ew_certify(handle: *const EwSystem) -> EwStatus {
    match unsafe { handle.as_ref() } {
        Some(h) => {
            let report = check_certificate(&h.cert, &h.sys, &CertOptions::default());
            if report.pass {
                EwStatus::EwOk
            } else {
                EwStatus::EwVerifyFailed
            }
        }
        None => EwStatus::EwNullPointer,
    }
}

/// Exhaustive parallel-class search with a node budget. On a definite
/// answer stores 1 (found) or 0 (none) in `*found` and returns `EwOk`.
///
/// # Safety
/// `handle` must be null or a live handle from `ew_build`; `found`, when
/// non-null, must point to writable memory for one `i32`.
#[no_mangle]
pub unsafe extern "C" fn ew_hunt(
    handle: *const EwSystem,
    max_nodes: u64,
    found: *mut i32,
) -> EwStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return EwStatus::EwNullPointer;
    };
    if found.is_null() {
        return EwStatus::EwNullPointer;
    }
    let budget = SearchBudget { max_nodes, max_time: None };
    match find_parallel_class(&h.sys.system, budget) {
        SearchOutcome::Found(_) => {
            unsafe { ptr::write(found, 1) };
            EwStatus::EwOk
        }
        SearchOutcome::NoneExhaustive { .. } => {
            unsafe { ptr::write(found, 0) };
            EwStatus::EwOk
        }
        SearchOutcome::BudgetExceeded { .. } => EwStatus::EwBudgetExceeded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    #[test]
    fn build_inspect_and_free() {
        let mut handle: *mut EwSystem = ptr::null_mut();
        unsafe {
            assert_eq!(ew_build(8, 2, &mut handle), EwStatus::EwOk);
            assert!(!handle.is_null());
            assert_eq!(ew_cycle_count(handle), 6);
            assert_eq!(ew_order(handle), 8);
            assert_eq!(ew_verify(handle), EwStatus::EwOk);
            assert_eq!(ew_certify(handle), EwStatus::EwOk);

            let mut found = -1;
            assert_eq!(ew_hunt(handle, 100_000_000, &mut found), EwStatus::EwOk);
            assert_eq!(found, 0);

            let text = ew_render_text(handle);
            assert!(!text.is_null());
            let s = CStr::from_ptr(text).to_str().unwrap();
            assert!(s.starts_with("evenweave/1\n"));
            ew_string_free(text);

            ew_free(handle);
        }
    }

    #[test]
    fn error_paths() {
        let mut handle: *mut EwSystem = ptr::null_mut();
        unsafe {
            assert_eq!(ew_build(10, 3, &mut handle), EwStatus::EwNotAdmissible);
            assert!(handle.is_null());
            assert_eq!(ew_build(8, 2, ptr::null_mut()), EwStatus::EwNullPointer);
            assert_eq!(ew_verify(ptr::null()), EwStatus::EwNullPointer);
            assert_eq!(ew_cycle_count(ptr::null()), 0);
            assert!(ew_render_text(ptr::null()).is_null());
            ew_free(ptr::null_mut());
            ew_string_free(ptr::null_mut());
        }
    }
}
