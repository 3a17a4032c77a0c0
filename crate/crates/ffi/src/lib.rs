//! C ABI over `localdim`.
//!
//! Objects are opaque heap handles released with their `_free` function.
//! Every fallible call returns an [`LdStatus`]; on failure the message is
//! available from [`ld_last_error_message`] on the same thread. Strings
//! returned through out-parameters are released with [`ld_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use localdim::constructions::height2_local_realizer;
use localdim::formats::{parse_poset, parse_realizer, write_poset, write_realizer};
use localdim::generators::{generate, Family};
use localdim::poset::Poset;
use localdim::realizer::{verify_local_realizer, LocalRealizer};
use localdim::solvers::{exact_dim, exact_ldim, SolveBudget, SolveError};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LdStatus {
    Ok = 0,
    /// A verification found a violation.
    Violation = 1,
    /// Input text failed to parse.
    Parse = 2,
    /// A solver budget or time limit was exceeded.
    Budget = 3,
    /// An argument was out of range or a construction precondition failed.
    InvalidArgument = 4,
    /// A required pointer was null or a string was not UTF-8.
    NullPointer = 5,
    /// The library panicked; this is a bug.
    Panic = 6,
}

/// Opaque poset handle.
pub struct LdPoset(Poset);

/// Opaque realizer handle (a family of partial linear extensions).
pub struct LdRealizer(LocalRealizer);

/// Solver limits. Zero fields take the solver's default.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LdBudget {
    pub max_size: usize,
    pub node_limit: u64,
    pub time_limit_ms: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(LdStatus, String);

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LdStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LdStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(LdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(LdStatus::NullPointer, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(LdStatus::InvalidArgument, "interior NUL".into()))?;
    put(out, c.into_raw(), "out")
}

fn solve_failure(e: SolveError) -> Failure {
    let status = match e {
        SolveError::EmptyPoset => LdStatus::InvalidArgument,
        _ => LdStatus::Budget,
    };
    Failure(status, e.to_string())
}

unsafe fn to_budget(b: *const LdBudget, base: SolveBudget) -> SolveBudget {
    let Some(b) = b.as_ref() else {
        return base;
    };
    SolveBudget {
        max_size: if b.max_size == 0 { base.max_size } else { b.max_size },
        node_limit: if b.node_limit == 0 { base.node_limit } else { b.node_limit },
        time_limit: if b.time_limit_ms == 0 {
            base.time_limit
        } else {
            Some(Duration::from_millis(b.time_limit_ms))
        },
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ld_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ld_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a poset from its text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_parse(text: *const c_char, out: *mut *mut LdPoset) -> LdStatus {
    guard(|| {
        let p = parse_poset(read_str(text, "text")?).map_err(|e| Failure(LdStatus::Parse, e.to_string()))?;
        put(out, Box::into_raw(Box::new(LdPoset(p))), "out")
    })
}

/// Generates a named family: `chain`, `antichain`, `standard` or `boolean`,
/// with parameter `n`.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_generate(family: *const c_char, n: usize, out: *mut *mut LdPoset) -> LdStatus {
    guard(|| {
        let fam = match read_str(family, "family")? {
            "chain" => Family::Chain(n),
            "antichain" => Family::Antichain(n),
            "standard" => Family::StandardExample(n),
            "boolean" => Family::BooleanLattice(n),
            other => return Err(Failure(LdStatus::InvalidArgument, format!("unknown family {other:?}"))),
        };
        let (p, _) = generate(fam).map_err(|e| Failure(LdStatus::InvalidArgument, e.to_string()))?;
        put(out, Box::into_raw(Box::new(LdPoset(p))), "out")
    })
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_len(p: *const LdPoset) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Writes the poset in its text format.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_to_text(p: *const LdPoset, out: *mut *mut c_char) -> LdStatus {
    guard(|| put_string(out, write_poset(&deref(p, "poset")?.0)))
}

/// # Safety
/// `p` must be null or a live handle, which is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_free(p: *mut LdPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Exact dimension. `budget` may be null; `witness` may be null, otherwise
/// it receives a realizer of linear extensions.
///
/// # Safety
/// Pointers must be null where allowed, live, or writable.
#[no_mangle]
pub unsafe extern "C" fn ld_exact_dim(
    p: *const LdPoset,
    budget: *const LdBudget,
    value: *mut usize,
    witness: *mut *mut LdRealizer,
) -> LdStatus {
    guard(|| {
        let p = &deref(p, "poset")?.0;
        let res = exact_dim(p, &to_budget(budget, SolveBudget::dim())).map_err(solve_failure)?;
        put(value, res.value, "value")?;
        if !witness.is_null() {
            let r = LocalRealizer::new(p.len(), res.witness)
                .map_err(|e| Failure(LdStatus::Panic, e.to_string()))?;
            witness.write(Box::into_raw(Box::new(LdRealizer(r))));
        }
        Ok(())
    })
}

/// Exact local dimension. `budget` and `witness` may be null.
///
/// # Safety
/// Pointers must be null where allowed, live, or writable.
#[no_mangle]
pub unsafe extern "C" fn ld_exact_ldim(
    p: *const LdPoset,
    budget: *const LdBudget,
    value: *mut usize,
    witness: *mut *mut LdRealizer,
) -> LdStatus {
    guard(|| {
        let p = &deref(p, "poset")?.0;
        let res = exact_ldim(p, &to_budget(budget, SolveBudget::ldim())).map_err(solve_failure)?;
        put(value, res.value, "value")?;
        if !witness.is_null() {
            witness.write(Box::into_raw(Box::new(LdRealizer(res.witness))));
        }
        Ok(())
    })
}

/// Parses a realizer over a ground set of `n` elements.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_realizer_parse(
    text: *const c_char,
    n: usize,
    out: *mut *mut LdRealizer,
) -> LdStatus {
    guard(|| {
        let r = parse_realizer(read_str(text, "text")?, n).map_err(|e| Failure(LdStatus::Parse, e.to_string()))?;
        put(out, Box::into_raw(Box::new(LdRealizer(r))), "out")
    })
}

/// Writes the realizer in its text format.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_realizer_to_text(r: *const LdRealizer, out: *mut *mut c_char) -> LdStatus {
    guard(|| put_string(out, write_realizer(&deref(r, "realizer")?.0)))
}

/// Largest element frequency, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ld_realizer_mu(r: *const LdRealizer) -> usize {
    r.as_ref().map_or(0, |r| r.0.mu())
}

/// # Safety
/// `r` must be null or a live handle, which is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ld_realizer_free(r: *mut LdRealizer) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Checks `r` as a local realizer of `p`. Returns `Ok` and writes the
/// maximum frequency to `mu` (which may be null), or `Violation` with the
/// reason in the last error message.
///
/// # Safety
/// `p` and `r` must be live handles; `mu` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ld_verify_local_realizer(
    p: *const LdPoset,
    r: *const LdRealizer,
    mu: *mut usize,
) -> LdStatus {
    guard(|| {
        let (p, r) = (&deref(p, "poset")?.0, &deref(r, "realizer")?.0);
        match verify_local_realizer(p, r) {
            Err(e) => Err(Failure(LdStatus::InvalidArgument, e.to_string())),
            Ok(Err(v)) => Err(Failure(LdStatus::Violation, v.to_string())),
            Ok(Ok(cert)) => {
                if !mu.is_null() {
                    mu.write(cert.mu);
                }
                Ok(())
            }
        }
    })
}

/// Local realizer of a poset of height at most two from a biclique
/// partition of its critical pairs.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ld_height2_local_realizer(p: *const LdPoset, out: *mut *mut LdRealizer) -> LdStatus {
    guard(|| {
        let r = height2_local_realizer(&deref(p, "poset")?.0)
            .map_err(|e| Failure(LdStatus::InvalidArgument, e.to_string()))?;
        put(out, Box::into_raw(Box::new(LdRealizer(r))), "out")
    })
}
