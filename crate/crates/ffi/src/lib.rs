//! C ABI over `coxmatch`.
//!
//! Every fallible function returns a [`CoxStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can
//! be fetched with [`cox_last_error_message`]. Handles are opaque and must be
//! released with their `_free` function; strings returned by the library are
//! released with [`cox_string_free`]. Interval elements are addressed by
//! index, in rank-major lexicographic order.

use coxmatch::bruhat::Interval;
use coxmatch::coxeter::{CoxeterMatrix, CoxeterSystem, INFINITY};
use coxmatch::io::{hasse_dot, IntervalDocument, MatchingDocument};
use coxmatch::matchings::{enumerate_special, is_special_n_avoiding, Matching};
use coxmatch::systems::matchings_from_systems;
use coxmatch::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidMatrix = 4,
    CapExceeded = 5,
    NotInInterval = 6,
    NotAMatching = 7,
    IndexOutOfRange = 8,
    Internal = 9,
}

/// A Coxeter system.
pub struct CoxSystem(CoxeterSystem);

/// A lower Bruhat interval `[e, w]`.
pub struct CoxInterval(Interval);

/// Matchings of one interval, each an involution on its element indices.
pub struct CoxMatchingList(Vec<Matching>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CoxStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidMatrix(_) | Error::DuplicateName(_) => CoxStatus::InvalidMatrix,
            Error::ClassCapExceeded { .. } | Error::LengthCapExceeded { .. } | Error::SizeCapExceeded { .. } => {
                CoxStatus::CapExceeded
            }
            Error::NotInInterval => CoxStatus::NotInInterval,
            Error::NotAMatching(_) => CoxStatus::NotAMatching,
            Error::GeneratorOutOfRange { .. } => CoxStatus::IndexOutOfRange,
            Error::Parse(_) | Error::UnknownGenerator(_) => CoxStatus::Parse,
            Error::NotADescent(_) | Error::Precondition(_) => CoxStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn run(f: impl FnOnce() -> Outcome<()>) -> CoxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CoxStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CoxStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| Failure(CoxStatus::NullArgument, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(CoxStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CoxStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(CoxStatus::NullArgument, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c = CString::new(s).map_err(|_| Failure(CoxStatus::Internal, "string contains NUL".into()))?;
    write(out, c.into_raw())
}

fn check_index(iv: &Interval, i: usize) -> Outcome<()> {
    if i < iv.len() {
        Ok(())
    } else {
        Err(Failure(CoxStatus::IndexOutOfRange, format!("index {i} out of range for {} elements", iv.len())))
    }
}

/// Message of the last failure on this thread, or null. Free with
/// [`cox_string_free`].
#[no_mangle]
pub extern "C" fn cox_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| slot.borrow().clone().map_or(ptr::null_mut(), CString::into_raw))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `A{n}`, `B{n}` or `I2:{m}` (`I2:0` is the infinite dihedral group).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_system_named(name: *const c_char, out: *mut *mut CoxSystem) -> CoxStatus {
    run(|| {
        let sys = CoxeterSystem::named(text(name, "name")?)?;
        write(out, Box::into_raw(Box::new(CoxSystem(sys))))
    })
}

/// A system from a row-major `rank × rank` matrix; `0` stands for `∞`.
/// Generators are named `s1, …, sn`.
///
/// # Safety
/// `entries` must point to `rank * rank` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_system_from_matrix(
    entries: *const u32,
    rank: usize,
    out: *mut *mut CoxSystem,
) -> CoxStatus {
    run(|| {
        if entries.is_null() {
            return Err(Failure(CoxStatus::NullArgument, "entries is null".into()));
        }
        let n2 = rank
            .checked_mul(rank)
            .ok_or_else(|| Failure(CoxStatus::InvalidMatrix, format!("rank {rank} too large")))?;
        let flat = std::slice::from_raw_parts(entries, n2);
        let rows = flat
            .chunks(rank.max(1))
            .map(|r| r.iter().map(|&m| if m == 0 { INFINITY } else { m }).collect())
            .collect();
        let sys = CoxeterSystem::with_default_names(CoxeterMatrix::new(rows)?);
        write(out, Box::into_raw(Box::new(CoxSystem(sys))))
    })
}

/// # Safety
/// `sys` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_system_rank(sys: *const CoxSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.0.rank())
}

/// # Safety
/// `sys` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_system_free(sys: *mut CoxSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// `[e, w]` for `w` given as a word such as `"s1-s2-s1"` (`""` is the identity).
/// The interval keeps its own copy of the system.
///
/// # Safety
/// `sys` must be a live handle, `word` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_build(
    sys: *const CoxSystem,
    word: *const c_char,
    out: *mut *mut CoxInterval,
) -> CoxStatus {
    run(|| {
        let sys = &deref(sys, "system")?.0;
        let w = sys.canonicalize(&sys.parse_word(text(word, "word")?)?)?;
        let iv = Interval::build(sys, &w)?;
        write(out, Box::into_raw(Box::new(CoxInterval(iv))))
    })
}

/// Rebuilds an interval from its JSON document, validating elements and covers.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_from_json(json: *const c_char, out: *mut *mut CoxInterval) -> CoxStatus {
    run(|| {
        let iv = IntervalDocument::from_json(text(json, "json")?)?.to_interval()?;
        write(out, Box::into_raw(Box::new(CoxInterval(iv))))
    })
}

/// # Safety
/// `iv` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_free(iv: *mut CoxInterval) {
    if !iv.is_null() {
        drop(Box::from_raw(iv));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `iv` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_len(iv: *const CoxInterval) -> usize {
    iv.as_ref().map_or(0, |iv| iv.0.len())
}

/// Index of the top element `w`.
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_top(iv: *const CoxInterval, out: *mut usize) -> CoxStatus {
    run(|| write(out, deref(iv, "interval")?.0.top()))
}

/// Length of element `i`.
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_rank_of(iv: *const CoxInterval, i: usize, out: *mut usize) -> CoxStatus {
    run(|| {
        let iv = &deref(iv, "interval")?.0;
        check_index(iv, i)?;
        write(out, iv.rank(i))
    })
}

/// Bruhat comparison `i ≤ j`.
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_leq(iv: *const CoxInterval, i: usize, j: usize, out: *mut bool) -> CoxStatus {
    run(|| {
        let iv = &deref(iv, "interval")?.0;
        check_index(iv, i)?;
        check_index(iv, j)?;
        write(out, iv.leq(i, j))
    })
}

/// Canonical word of element `i`. Free with [`cox_string_free`].
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_element(iv: *const CoxInterval, i: usize, out: *mut *mut c_char) -> CoxStatus {
    run(|| {
        let iv = &deref(iv, "interval")?.0;
        check_index(iv, i)?;
        write_string(out, iv.system().format_word(iv.element(i).word()))
    })
}

/// Index of the element spelled by `word` (any word, reduced or not).
/// Fails with `COX_STATUS_NOT_IN_INTERVAL` if it is not below `w`.
///
/// # Safety
/// `iv` must be a live handle, `word` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_index_of(
    iv: *const CoxInterval,
    word: *const c_char,
    out: *mut usize,
) -> CoxStatus {
    run(|| {
        let iv = &deref(iv, "interval")?.0;
        let parsed = iv.system().parse_word(text(word, "word")?)?;
        let i = iv.index_of_word(&parsed)?.ok_or(Error::NotInInterval)?;
        write(out, i)
    })
}

/// JSON document of the interval. Free with [`cox_string_free`].
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_to_json(iv: *const CoxInterval, out: *mut *mut c_char) -> CoxStatus {
    run(|| write_string(out, IntervalDocument::from_interval(&deref(iv, "interval")?.0).to_json()))
}

/// Graphviz rendering of the Hasse diagram. Free with [`cox_string_free`].
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_interval_to_dot(iv: *const CoxInterval, out: *mut *mut c_char) -> CoxStatus {
    run(|| write_string(out, hasse_dot(&deref(iv, "interval")?.0)))
}

/// All special matchings, by exhaustive search.
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_special_matchings(iv: *const CoxInterval, out: *mut *mut CoxMatchingList) -> CoxStatus {
    run(|| {
        let list = enumerate_special(&deref(iv, "interval")?.0)?;
        write(out, Box::into_raw(Box::new(CoxMatchingList(list))))
    })
}

/// The distinct matchings induced by right and left systems.
///
/// # Safety
/// `iv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_system_matchings(iv: *const CoxInterval, out: *mut *mut CoxMatchingList) -> CoxStatus {
    run(|| {
        let list = matchings_from_systems(&deref(iv, "interval")?.0)?;
        write(out, Box::into_raw(Box::new(CoxMatchingList(list))))
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_matching_list_len(list: *const CoxMatchingList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Partner of element `u` under matching `k`.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_matching_list_partner(
    list: *const CoxMatchingList,
    k: usize,
    u: usize,
    out: *mut usize,
) -> CoxStatus {
    run(|| {
        let m = nth(deref(list, "matching list")?, k)?;
        if u >= m.len() {
            return Err(Failure(CoxStatus::IndexOutOfRange, format!("element {u} out of range")));
        }
        write(out, m.partner(u))
    })
}

/// Matching `k` as a JSON document of index pairs. Free with [`cox_string_free`].
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_matching_list_to_json(
    list: *const CoxMatchingList,
    k: usize,
    out: *mut *mut c_char,
) -> CoxStatus {
    run(|| {
        let m = nth(deref(list, "matching list")?, k)?;
        write_string(out, MatchingDocument::from_matching(m).to_json())
    })
}

/// # Safety
/// `list` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_matching_list_free(list: *mut CoxMatchingList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

fn nth(list: &CoxMatchingList, k: usize) -> Outcome<&Matching> {
    list.0
        .get(k)
        .ok_or_else(|| Failure(CoxStatus::IndexOutOfRange, format!("matching {k} out of range")))
}

/// Whether `pairing` (partner of each element, `len` = interval size) is a
/// special matching. Fails with `COX_STATUS_NOT_A_MATCHING` if it is not an
/// involution along Hasse edges.
///
/// # Safety
/// `iv` must be a live handle, `pairing` must point to `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cox_matching_is_special(
    iv: *const CoxInterval,
    pairing: *const usize,
    len: usize,
    out: *mut bool,
) -> CoxStatus {
    run(|| {
        let iv = &deref(iv, "interval")?.0;
        if pairing.is_null() {
            return Err(Failure(CoxStatus::NullArgument, "pairing is null".into()));
        }
        if len != iv.len() {
            return Err(Failure(CoxStatus::NotAMatching, format!("{len} entries for {} elements", iv.len())));
        }
        let pairing = std::slice::from_raw_parts(pairing, len).to_vec();
        let m = Matching::from_pairing(iv.hasse(), pairing)?;
        write(out, is_special_n_avoiding(iv.hasse(), &m))
    })
}
