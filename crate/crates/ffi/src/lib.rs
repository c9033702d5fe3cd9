//! C ABI for the df0l analysis library.
//!
//! Systems are opaque handles created by [`df0l_system_parse`] and released
//! with [`df0l_system_free`]. Every fallible call returns a [`Df0lStatus`]
//! and writes its result through an out-pointer only on success. The message
//! of the last failure on the calling thread is available from
//! [`df0l_last_error_message`]. Strings returned by the library must be
//! released with [`df0l_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use df0l::circularity::{strong_threshold_with, weak_threshold, StrongOptions, ThresholdReport, ThresholdStatus};
use df0l::format::{parse_system, render_system};
use df0l::repetitiveness::{default_period_bound, detect_unbounded_repetitive};
use df0l::{report, Error, Interpreter, System};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Df0lStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed system text, unknown letter or other input error.
    Input = 3,
    /// An analysis precondition failed (erasing system, word outside the language, ...).
    Precondition = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Df0lThresholdKind {
    Found = 0,
    CutoffExceeded = 1,
    NotStronglyCircular = 2,
}

/// `value` is the threshold for `FOUND` and the last level for `CUTOFF_EXCEEDED`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Df0lThreshold {
    pub kind: Df0lThresholdKind,
    pub value: usize,
}

/// Opaque system handle.
pub struct Df0lSystem {
    system: System,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &Error) -> Df0lStatus {
    if err.is_input_error() {
        Df0lStatus::Input
    } else {
        Df0lStatus::Precondition
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Df0lStatus>) -> Df0lStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => Df0lStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            Df0lStatus::Panic
        }
    }
}

fn fail(err: Error) -> Df0lStatus {
    set_last_error(err.to_string());
    status_of(&err)
}

unsafe fn str_arg<'a>(text: *const c_char) -> Result<&'a str, Df0lStatus> {
    if text.is_null() {
        set_last_error("null string argument");
        return Err(Df0lStatus::NullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8");
        Df0lStatus::InvalidUtf8
    })
}

unsafe fn system_arg<'a>(handle: *const Df0lSystem) -> Result<&'a System, Df0lStatus> {
    handle.as_ref().map(|h| &h.system).ok_or_else(|| {
        set_last_error("null system handle");
        Df0lStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Df0lStatus> {
    if out.is_null() {
        set_last_error("null output pointer");
        return Err(Df0lStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

fn threshold_value(report: &ThresholdReport) -> Df0lThreshold {
    match report.status {
        ThresholdStatus::Found(d) => Df0lThreshold {
            kind: Df0lThresholdKind::Found,
            value: d,
        },
        ThresholdStatus::CutoffExceeded { last_level } => Df0lThreshold {
            kind: Df0lThresholdKind::CutoffExceeded,
            value: last_level,
        },
        ThresholdStatus::NotStronglyCircular => Df0lThreshold {
            kind: Df0lThresholdKind::NotStronglyCircular,
            value: 0,
        },
    }
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn df0l_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a system file's contents into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_parse(text: *const c_char, out: *mut *mut Df0lSystem) -> Df0lStatus {
    guard(|| {
        let text = str_arg(text)?;
        let system = parse_system(text).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(Df0lSystem { system })))
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `handle` must come from [`df0l_system_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_free(handle: *mut Df0lSystem) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of letters, or 0 for NULL.
///
/// # Safety
/// `handle` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_letter_count(handle: *const Df0lSystem) -> usize {
    handle.as_ref().map_or(0, |h| h.system.alphabet().len())
}

/// Whether the morphism is non-erasing.
///
/// # Safety
/// `handle` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_is_pdf0l(handle: *const Df0lSystem) -> bool {
    handle.as_ref().is_some_and(|h| h.system.is_pdf0l())
}

/// Renders the system in the file format. Free the result with [`df0l_string_free`].
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_render(handle: *const Df0lSystem, out: *mut *mut c_char) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?;
        write_out(out, into_c_string(render_system(system)))
    })
}

/// Builds the power system `S^k` as a new handle.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_system_power(
    handle: *const Df0lSystem,
    k: usize,
    out: *mut *mut Df0lSystem,
) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?.power(k).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(Df0lSystem { system })))
    })
}

/// Membership of a space-separated word in the language.
///
/// # Safety
/// `handle` must be a live handle, `word` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn df0l_contains(handle: *const Df0lSystem, word: *const c_char, out: *mut bool) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?;
        let u = system.parse_word(str_arg(word)?).map_err(fail)?;
        let member = df0l::language::contains(system, &u).map_err(fail)?;
        write_out(out, member)
    })
}

/// Weak circularity threshold search up to `cutoff`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_weak_threshold(
    handle: *const Df0lSystem,
    cutoff: usize,
    out: *mut Df0lThreshold,
) -> Df0lStatus {
    guard(|| {
        let report = weak_threshold(system_arg(handle)?, cutoff).map_err(fail)?;
        write_out(out, threshold_value(&report))
    })
}

/// Strong circularity threshold search up to `cutoff`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_strong_threshold(
    handle: *const Df0lSystem,
    cutoff: usize,
    skip_repetition_check: bool,
    out: *mut Df0lThreshold,
) -> Df0lStatus {
    guard(|| {
        let options = StrongOptions {
            skip_repetition_check,
            period_bound: None,
        };
        let report = strong_threshold_with(system_arg(handle)?, cutoff, options).map_err(fail)?;
        write_out(out, threshold_value(&report))
    })
}

/// Whether a certificate of unbounded repetitiveness exists within
/// `period_bound` (0 selects the default bound).
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_is_repetitive(
    handle: *const Df0lSystem,
    period_bound: usize,
    out: *mut bool,
) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?;
        let bound = if period_bound == 0 {
            default_period_bound(system)
        } else {
            period_bound
        };
        let verdict = detect_unbounded_repetitive(system, bound).map_err(fail)?;
        write_out(out, verdict.is_repetitive())
    })
}

/// Threshold search result as JSON (`strong` selects the mode). Free the
/// result with [`df0l_string_free`].
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn df0l_threshold_json(
    handle: *const Df0lSystem,
    strong: bool,
    cutoff: usize,
    out: *mut *mut c_char,
) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?;
        let found = if strong {
            strong_threshold_with(system, cutoff, StrongOptions::default())
        } else {
            weak_threshold(system, cutoff)
        }
        .map_err(fail)?;
        let json = report::threshold(system, &found).to_string();
        write_out(out, into_c_string(json))
    })
}

/// Minimal interpretations of a word as JSON. Free the result with [`df0l_string_free`].
///
/// # Safety
/// `handle` must be a live handle, `word` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn df0l_interpretations_json(
    handle: *const Df0lSystem,
    word: *const c_char,
    out: *mut *mut c_char,
) -> Df0lStatus {
    guard(|| {
        let system = system_arg(handle)?;
        let u = system.parse_word(str_arg(word)?).map_err(fail)?;
        let list = Interpreter::new(system)
            .and_then(|mut it| it.minimal_interpretations(&u))
            .map_err(fail)?;
        let json = serde_json::to_string(&report::interpretations(system, &u, &list)).expect("payload serializes");
        write_out(out, into_c_string(json))
    })
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `text` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn df0l_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
