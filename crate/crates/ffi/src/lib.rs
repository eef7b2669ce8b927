//! C interface to the reasoner.
//!
//! A knowledge base is parsed once into an opaque `DalcKb` handle, which
//! answers rank, entailment and base queries until freed with
//! `dalc_kb_free`. Every fallible call returns a `DalcStatus`; on failure the
//! message is available from `dalc_last_error_message` on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and released with `dalc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use defeasible_alc::oracle::OracleConfig;
use defeasible_alc::report::{self, Engine, Limits, Method};
use defeasible_alc::{parse_concept, parse_kb, parse_query, Error, Rank};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DalcStatus {
    Ok = 0,
    /// A null pointer, invalid UTF-8 or an out-of-range method.
    InvalidArgument = 1,
    Parse = 2,
    InconsistentAbox = 3,
    ResourceLimit = 4,
    /// The KB or query is outside the oracle's fragment or bounds.
    OracleBounds = 5,
    Panic = 6,
    /// Unsupported query form, or an oracle that found no model.
    Failed = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DalcMethod {
    Classical = 0,
    Rc = 1,
    Mp = 2,
    Lex = 3,
    OracleRc = 4,
    OracleS = 5,
}

impl From<DalcMethod> for Method {
    fn from(m: DalcMethod) -> Self {
        match m {
            DalcMethod::Classical => Method::Classical,
            DalcMethod::Rc => Method::Rc,
            DalcMethod::Mp => Method::Mp,
            DalcMethod::Lex => Method::Lex,
            DalcMethod::OracleRc => Method::OracleRc,
            DalcMethod::OracleS => Method::OracleS,
        }
    }
}

/// Resource bounds; obtain defaults from `dalc_limits_default`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DalcLimits {
    pub max_nodes: usize,
    pub max_atoms: usize,
    pub max_domain: usize,
}

impl From<DalcLimits> for Limits {
    fn from(l: DalcLimits) -> Self {
        Limits {
            max_nodes: l.max_nodes,
            oracle: OracleConfig {
                max_atoms: l.max_atoms,
                max_domain: l.max_domain,
                ..OracleConfig::default()
            },
        }
    }
}

/// A parsed knowledge base with its ranking.
pub struct DalcKb {
    engine: Engine,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DalcStatus {
    match report::exit_code(e) {
        2 => DalcStatus::Parse,
        3 => DalcStatus::InconsistentAbox,
        4 => DalcStatus::ResourceLimit,
        5 => DalcStatus::OracleBounds,
        _ => DalcStatus::Failed,
    }
}

struct Failure(DalcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn invalid(msg: &str) -> Failure {
    Failure(DalcStatus::InvalidArgument, msg.to_owned())
}

/// Runs `body`, converting errors and panics into a status and recording
/// the message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DalcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            DalcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal error: {msg}"));
            DalcStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for the call.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

/// # Safety
/// `kb` is null or a live handle from `dalc_kb_parse`.
unsafe fn handle<'a>(kb: *const DalcKb) -> Result<&'a DalcKb, Failure> {
    kb.as_ref().ok_or_else(|| invalid("kb handle is null"))
}

fn method(raw: u32) -> Result<DalcMethod, Failure> {
    Ok(match raw {
        0 => DalcMethod::Classical,
        1 => DalcMethod::Rc,
        2 => DalcMethod::Mp,
        3 => DalcMethod::Lex,
        4 => DalcMethod::OracleRc,
        5 => DalcMethod::OracleS,
        _ => return Err(invalid(&format!("unknown method {raw}"))),
    })
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| invalid("result contains NUL"))?;
    // SAFETY: callers check `out` for null first.
    unsafe { *out = c.into_raw() };
    Ok(())
}

#[no_mangle]
pub extern "C" fn dalc_limits_default() -> DalcLimits {
    let l = Limits::default();
    DalcLimits {
        max_nodes: l.max_nodes,
        max_atoms: l.oracle.max_atoms,
        max_domain: l.oracle.max_domain,
    }
}

/// Parses `text`, checks ABox consistency and computes the ranking.
/// `limits` may be null for the defaults. On success `*out` receives a
/// handle to free with `dalc_kb_free`; on failure it is set to null.
///
/// # Safety
/// `text` must be a NUL-terminated string, `limits` null or valid, and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_kb_parse(
    text: *const c_char,
    limits: *const DalcLimits,
    out: *mut *mut DalcKb,
) -> DalcStatus {
    guard(|| {
        if out.is_null() {
            return Err(invalid("out is null"));
        }
        *out = ptr::null_mut();
        let source = unsafe { self::text(text, "text")? };
        let limits = unsafe { limits.as_ref() }
            .copied()
            .unwrap_or_else(|| dalc_limits_default());
        let engine = Engine::new(parse_kb(source)?, limits.into())?;
        *out = Box::into_raw(Box::new(DalcKb { engine }));
        Ok(())
    })
}

/// # Safety
/// `kb` is null or a handle from `dalc_kb_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dalc_kb_free(kb: *mut DalcKb) {
    if !kb.is_null() {
        drop(Box::from_raw(kb));
    }
}

/// Parses `text` and reports whether its ABox is consistent with the strict
/// axioms, without computing a ranking.
///
/// # Safety
/// `text` must be a NUL-terminated string and `consistent` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_check(text: *const c_char, consistent: *mut bool) -> DalcStatus {
    guard(|| {
        if consistent.is_null() {
            return Err(invalid("consistent is null"));
        }
        let kb = parse_kb(unsafe { self::text(text, "text")? })?;
        let result = report::check(&kb, &Limits::default())?;
        *consistent = result.abox_consistent == Some(true);
        Ok(())
    })
}

/// Rank of `concept`; `*rank` is -1 for the infinite rank.
///
/// # Safety
/// `kb` must be a live handle, `concept` a NUL-terminated string and `rank`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_concept_rank(
    kb: *const DalcKb,
    concept: *const c_char,
    rank: *mut i64,
) -> DalcStatus {
    guard(|| {
        if rank.is_null() {
            return Err(invalid("rank is null"));
        }
        let kb = unsafe { handle(kb)? };
        let c = parse_concept(unsafe { text(concept, "concept")? })?;
        let r = kb.engine.rank(&c)?.rank_lhs.expect("rank is set");
        *rank = match r {
            Rank::Finite(k) => i64::try_from(k).unwrap_or(i64::MAX),
            Rank::Infinite => -1,
        };
        Ok(())
    })
}

/// Decides `query` (`C <= D` or `T(C) <= D`) with `method`, a `DalcMethod`
/// value.
///
/// # Safety
/// `kb` must be a live handle, `query` a NUL-terminated string and
/// `entailed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_entails(
    kb: *const DalcKb,
    method: u32,
    query: *const c_char,
    entailed: *mut bool,
) -> DalcStatus {
    guard(|| {
        if entailed.is_null() {
            return Err(invalid("entailed is null"));
        }
        let kb = unsafe { handle(kb)? };
        let m = self::method(method)?;
        let q = parse_query(unsafe { text(query, "query")? })?;
        *entailed = kb
            .engine
            .entails(m.into(), &q)?
            .entailed
            .expect("verdict is set");
        Ok(())
    })
}

/// Like `dalc_entails`, but returns the full result (ranks, bases and
/// per-base verdicts) as a JSON object in `*json`.
///
/// # Safety
/// As `dalc_entails`; `json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_entails_json(
    kb: *const DalcKb,
    method: u32,
    query: *const c_char,
    json: *mut *mut c_char,
) -> DalcStatus {
    guard(|| {
        if json.is_null() {
            return Err(invalid("json is null"));
        }
        *json = ptr::null_mut();
        let kb = unsafe { handle(kb)? };
        let m = self::method(method)?;
        let q = parse_query(unsafe { text(query, "query")? })?;
        write_string(json, kb.engine.entails(m.into(), &q)?.to_json())
    })
}

/// The maximal bases for `concept` under `method` (`Mp` or `Lex`) as a JSON
/// object whose `bases` field is an array of arrays of printed inclusions.
///
/// # Safety
/// `kb` must be a live handle, `concept` a NUL-terminated string and `json`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dalc_bases_json(
    kb: *const DalcKb,
    method: u32,
    concept: *const c_char,
    json: *mut *mut c_char,
) -> DalcStatus {
    guard(|| {
        if json.is_null() {
            return Err(invalid("json is null"));
        }
        *json = ptr::null_mut();
        let kb = unsafe { handle(kb)? };
        let m = self::method(method)?;
        let c = parse_concept(unsafe { text(concept, "concept")? })?;
        write_string(json, kb.engine.bases(m.into(), &c)?.to_json())
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or the empty string.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn dalc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn dalc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
