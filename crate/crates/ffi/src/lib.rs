//! C ABI over `taut-core`.
//!
//! Every function returns a [`TautStatus`]. Objects are opaque handles
//! released with their `_free` function; strings returned through `char**`
//! out-parameters are released with [`taut_string_free`]. After a failing
//! call, [`taut_last_error_message`] and [`taut_last_error_code`] describe
//! the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use taut_core::foliation::{decide_horizontal, FoliationDecision};
use taut_core::group::GroupPresentation;
use taut_core::lo::{self, ObstructionReport, Sign};
use taut_core::seifert::{H1Order, SeifertInvariants};
use taut_core::torus_covers::{self, BranchedInvariants, TorusCoverQuery};
use taut_core::{Error, VerdictKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TautStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Unsupported = 5,
    Overflow = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TautVerdict {
    Excellent = 0,
    TotalLSpace = 1,
}

/// Result of the horizontal foliation decision. `horizontal` is 1, 0, or -1
/// when the criterion does not apply. Witness fields are meaningful only
/// when `has_witness` is nonzero.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TautDecision {
    pub horizontal: i32,
    pub condition: u8,
    pub has_witness: u8,
    pub reversed: u8,
    pub m: i64,
    pub a: i64,
    pub first: u32,
    pub second: u32,
}

pub struct TautSeifert(SeifertInvariants);

pub struct TautPresentation(GroupPresentation);

struct LastError {
    code: CString,
    message: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<LastError>> = const { RefCell::new(None) };
}

fn set_error(code: &str, message: &str) {
    let clean = |s: &str| CString::new(s.replace('\0', " ")).expect("no nul");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = Some(LastError {
            code: clean(code),
            message: clean(message),
        })
    });
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(TautStatus, String, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) | Error::Manifest { .. } => TautStatus::Parse,
            _ => TautStatus::Domain,
        };
        Failure(status, e.code().to_string(), e.to_string())
    }
}

fn fail(status: TautStatus, code: &str, message: impl Into<String>) -> Failure {
    Failure(status, code.to_string(), message.into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TautStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TautStatus::Ok,
        Ok(Err(Failure(status, code, message))) => {
            set_error(&code, &message);
            status
        }
        Err(_) => {
            set_error("ffi/panic", "internal panic");
            TautStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(TautStatus::NullPointer, "ffi/null-pointer", "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TautStatus::InvalidUtf8, "ffi/invalid-utf8", "string is not UTF-8"))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(TautStatus::NullPointer, "ffi/null-pointer", "null handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(TautStatus::NullPointer, "ffi/null-pointer", "null out-parameter"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(TautStatus::Domain, "ffi/interior-nul", "string contains NUL"))?;
    put(out, c.into_raw())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(TautStatus::NullPointer, "ffi/null-pointer", "null out-parameter"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

fn small(x: &BigInt) -> Result<i64, Failure> {
    x.to_i64()
        .ok_or_else(|| fail(TautStatus::Overflow, "ffi/overflow", format!("{x} does not fit in 64 bits")))
}

fn static_cstr(s: &'static [u8]) -> *const c_char {
    s.as_ptr().cast()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn taut_version() -> *const c_char {
    static_cstr(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes())
}

/// Message of the last failure on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn taut_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |l| l.message.as_ptr()))
}

/// Stable error code of the last failure on this thread, or null.
#[no_mangle]
pub extern "C" fn taut_last_error_code() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |l| l.code.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn taut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_parse(text: *const c_char, out: *mut *mut TautSeifert) -> TautStatus {
    guard(|| {
        let si: SeifertInvariants = read_str(text)?.parse()?;
        put_box(out, TautSeifert(si))
    })
}

/// # Safety
/// `si` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_free(si: *mut TautSeifert) {
    if !si.is_null() {
        drop(Box::from_raw(si));
    }
}

/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_normalize(si: *const TautSeifert, out: *mut *mut TautSeifert) -> TautStatus {
    guard(|| put_box(out, TautSeifert(deref(si)?.0.normalize())))
}

/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_reverse(si: *const TautSeifert, out: *mut *mut TautSeifert) -> TautStatus {
    guard(|| put_box(out, TautSeifert(deref(si)?.0.reverse_orientation())))
}

/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_to_string(si: *const TautSeifert, out: *mut *mut c_char) -> TautStatus {
    guard(|| put_string(out, deref(si)?.0.to_string()))
}

/// Number of exceptional fibers.
///
/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_fiber_count(si: *const TautSeifert, out: *mut usize) -> TautStatus {
    guard(|| put(out, deref(si)?.0.fiber_count()))
}

/// Euler number as text, e.g. `-1/30`.
///
/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_euler(si: *const TautSeifert, out: *mut *mut c_char) -> TautStatus {
    guard(|| put_string(out, deref(si)?.0.euler_number().to_string()))
}

/// Order of the first homology, or `infinite`.
///
/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_h1(si: *const TautSeifert, out: *mut *mut c_char) -> TautStatus {
    guard(|| {
        let s = match deref(si)?.0.h1_order() {
            H1Order::Finite(n) => n.to_string(),
            H1Order::Infinite => "infinite".to_string(),
        };
        put_string(out, s)
    })
}

/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_decide(si: *const TautSeifert, out: *mut TautDecision) -> TautStatus {
    guard(|| {
        let d = match decide_horizontal(&deref(si)?.0) {
            FoliationDecision::Horizontal { condition, witness } => {
                let mut d = TautDecision {
                    horizontal: 1,
                    condition,
                    ..Default::default()
                };
                if let Some(w) = witness {
                    d.has_witness = 1;
                    d.reversed = w.reversed as u8;
                    d.m = small(&w.m)?;
                    d.a = small(&w.a)?;
                    d.first = w.first as u32;
                    d.second = w.second as u32;
                }
                d
            }
            FoliationDecision::NoHorizontal => TautDecision::default(),
            FoliationDecision::Inapplicable(_) => TautDecision {
                horizontal: -1,
                ..Default::default()
            },
        };
        put(out, d)
    })
}

fn verdict(k: VerdictKind) -> TautVerdict {
    match k {
        VerdictKind::Excellent => TautVerdict::Excellent,
        VerdictKind::TotalLSpace => TautVerdict::TotalLSpace,
    }
}

/// # Safety
/// `si` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_seifert_excellence(si: *const TautSeifert, out: *mut TautVerdict) -> TautStatus {
    guard(|| put(out, verdict(taut_core::foliation::decide_excellence(&deref(si)?.0).kind())))
}

/// Verdict for the n-fold cyclic branched cover of T(p, q). `exception` is
/// set to 1..5 for the listed exceptions and 0 otherwise; it may be null.
///
/// # Safety
/// `out` must be writable; `exception` null or writable.
#[no_mangle]
pub unsafe extern "C" fn taut_classify(
    n: u64,
    p: u64,
    q: u64,
    out: *mut TautVerdict,
    exception: *mut u8,
) -> TautStatus {
    guard(|| {
        let c = torus_covers::classify_torus_cover(&TorusCoverQuery::new(n, p, q)?);
        if !exception.is_null() {
            let e = c.exception.map_or(0, |e| e as u8 + 1);
            exception.write(e);
        }
        put(out, verdict(c.verdict))
    })
}

/// Seifert invariants of the n-fold cyclic branched cover of T(p, q);
/// `Unsupported` when no formula applies.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn taut_torus_cover_invariants(
    n: u64,
    p: u64,
    q: u64,
    out: *mut *mut TautSeifert,
) -> TautStatus {
    guard(|| match torus_covers::branched_invariants(&TorusCoverQuery::new(n, p, q)?) {
        BranchedInvariants::Known { invariants, .. } => put_box(out, TautSeifert(invariants)),
        BranchedInvariants::Unsupported => Err(fail(
            TautStatus::Unsupported,
            "torus-covers/unsupported",
            format!("no invariants known for ({n}, {p}, {q})"),
        )),
    })
}

/// Parses `gens: a b; rel: a b a^-1`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_parse(
    text: *const c_char,
    out: *mut *mut TautPresentation,
) -> TautStatus {
    guard(|| {
        let p: GroupPresentation = read_str(text)?.parse()?;
        put_box(out, TautPresentation(p))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_pretzel(
    k: i64,
    l: i64,
    m: i64,
    out: *mut *mut TautPresentation,
) -> TautStatus {
    guard(|| put_box(out, TautPresentation(lo::present_pretzel_sigma3(k, l, m)?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_two_bridge(
    k: i64,
    l: i64,
    n: usize,
    out: *mut *mut TautPresentation,
) -> TautStatus {
    guard(|| put_box(out, TautPresentation(lo::present_two_bridge_cover(k, l, n)?)))
}

/// # Safety
/// `p` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_free(p: *mut TautPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_to_string(p: *const TautPresentation, out: *mut *mut c_char) -> TautStatus {
    guard(|| put_string(out, deref(p)?.0.to_string()))
}

/// Sign obstruction. `obstructed` receives 1 or 0; when `survivors` is not
/// null it receives the surviving assignments as `++--,+--+` (empty when
/// obstructed).
///
/// # Safety
/// `p` must be a live handle, `obstructed` writable, `survivors` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn taut_presentation_obstruction(
    p: *const TautPresentation,
    cap: usize,
    obstructed: *mut u8,
    survivors: *mut *mut c_char,
) -> TautStatus {
    guard(|| {
        let rep = lo::coarse_obstruction_with_cap(&deref(p)?.0, cap)?;
        if !survivors.is_null() {
            let s: Vec<String> = match &rep {
                ObstructionReport::Obstructed { .. } => Vec::new(),
                ObstructionReport::Survivors { assignments } => {
                    assignments.iter().map(|a| a.iter().map(Sign::symbol).collect()).collect()
                }
            };
            put_string(survivors, s.join(","))?;
        }
        put(obstructed, rep.is_obstructed() as u8)
    })
}

/// Runs one command line, given as a JSON array of arguments without the
/// program name, and returns the JSON document. `exit_code` receives the
/// exit status the command line would have produced.
///
/// # Safety
/// `args_json` must be a valid NUL-terminated string; `out` and
/// `exit_code` writable.
#[no_mangle]
pub unsafe extern "C" fn taut_run_json(
    args_json: *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> TautStatus {
    guard(|| {
        let args: Vec<String> = serde_json::from_str(read_str(args_json)?)
            .map_err(|e| fail(TautStatus::Parse, "ffi/arguments", format!("expected a JSON array of strings: {e}")))?;
        let res = taut_core::cli::run(std::iter::once("taut".to_string()).chain(args));
        put(exit_code, res.exit_code)?;
        put_string(out, res.document.to_string())
    })
}
