//! C interface to `trt-core`.
//!
//! Graphs cross the boundary as opaque `TrtGraph` handles owned by the
//! caller and released with `trt_graph_free`. Every fallible call returns a
//! `TrtStatus`; on failure `trt_last_error_message` describes the error for
//! the calling thread. Strings returned through out-parameters are released
//! with `trt_string_free`. Families are passed as `TrtFamily` codes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use trt_core::constructions::extremal_witness;
use trt_core::containment::contains;
use trt_core::graph::{decode_graph6, encode_graph6};
use trt_core::ramsey::{ramsey_value, Bound};
use trt_core::trees::make_tree;
use trt_core::turan::ex_value;
use trt_core::{Error, Family, Graph, TreeSpec};

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrtStatus {
    Ok = 0,
    /// Null pointer, unknown family code, or a parameter out of range.
    InvalidArgument = 1,
    /// Malformed graph6 text.
    Parse = 2,
    /// A graph would exceed 128 vertices.
    OrderCap = 3,
    /// No closed form for this family.
    Unsupported = 4,
    /// Parameters outside the range a formula covers.
    OutsideDomain = 5,
    /// A self-check failed or a Rust panic was caught.
    Internal = 6,
}

/// Tree family codes accepted wherever a `uint32_t family` is taken.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrtFamily {
    Path = 0,
    Star = 1,
    Tprime = 2,
    Tstar = 3,
    T1 = 4,
    T2 = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrtBoundKind {
    Exact = 0,
    Range = 1,
    /// Only a lower bound, or nothing, is known.
    Unknown = 2,
}

/// A Ramsey number or the interval known to contain it. A missing end is 0.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrtRamsey {
    pub kind: TrtBoundKind,
    pub lower: u64,
    pub upper: u64,
}

/// Opaque simple graph on at most 128 vertices.
pub struct TrtGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TrtStatus {
    match e {
        Error::OrderCap { .. } => TrtStatus::OrderCap,
        Error::Graph6 { .. } => TrtStatus::Parse,
        Error::NotATree(_)
        | Error::BelowFamilyMinimum { .. }
        | Error::InvalidDegree(_)
        | Error::InvalidArgument(_) => TrtStatus::InvalidArgument,
        Error::UnsupportedFamily(_) => TrtStatus::Unsupported,
        Error::OutsideDomain(_) | Error::HypothesisViolated(_) | Error::Overflow(_) => {
            TrtStatus::OutsideDomain
        }
        Error::WitnessVerification(_) | Error::Inconsistent(_) | Error::BudgetExceeded(_) => {
            TrtStatus::Internal
        }
    }
}

/// Run `body`, recording any error or panic for `trt_last_error_message`.
fn guarded(body: impl FnOnce() -> Result<(), Error>) -> TrtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            TrtStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            TrtStatus::Internal
        }
    }
}

fn invalid(what: &str) -> Error {
    Error::InvalidArgument(what.to_string())
}

fn family_of(code: u32) -> Result<Family, Error> {
    Family::ALL.get(code as usize).copied().ok_or_else(|| invalid("unknown family code"))
}

unsafe fn graph_ref<'a>(g: *const TrtGraph) -> Result<&'a Graph, Error> {
    // SAFETY: the caller passes null or a live handle from this library.
    unsafe { g.as_ref() }.map(|h| &h.0).ok_or_else(|| invalid("null graph handle"))
}

/// Store `make()` through `out`; nothing is allocated when `out` is null.
unsafe fn write_out<T>(out: *mut T, make: impl FnOnce() -> T) -> Result<(), Error> {
    if out.is_null() {
        return Err(invalid("null output pointer"));
    }
    // SAFETY: non-null and, per the caller's contract, writable.
    unsafe { out.write(make()) };
    Ok(())
}

fn into_handle(g: Graph) -> *mut TrtGraph {
    Box::into_raw(Box::new(TrtGraph(g)))
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn trt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse one graph6 line (a trailing newline is allowed).
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn trt_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut TrtGraph,
) -> TrtStatus {
    guarded(|| {
        if text.is_null() {
            return Err(invalid("null graph6 text"));
        }
        // SAFETY: checked non-null; NUL termination is the caller's contract.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Error::Graph6 { offset: 0, reason: "not UTF-8".into() })?;
        let g = decode_graph6(s.trim_end_matches(['\n', '\r']))?;
        unsafe { write_out(out, || into_handle(g)) }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trt_graph_free(g: *mut TrtGraph) {
    if !g.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trt_graph_order(g: *const TrtGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::order)
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trt_graph_edge_count(g: *const TrtGraph) -> u64 {
    unsafe { graph_ref(g) }.map_or(0, Graph::edge_count)
}

/// Encode as graph6, without a newline. Free the result with
/// `trt_string_free`.
///
/// # Safety
/// `g` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_graph_to_graph6(
    g: *const TrtGraph,
    out: *mut *mut c_char,
) -> TrtStatus {
    guarded(|| {
        let g = unsafe { graph_ref(g) }?;
        let s = CString::new(encode_graph6(g))
            .map_err(|_| Error::Inconsistent("NUL in graph6".into()))?;
        unsafe { write_out(out, || s.into_raw()) }
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trt_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from `CString::into_raw` and is freed once.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Build the tree of `family` on `n` vertices.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_tree_make(
    family: u32,
    n: usize,
    out: *mut *mut TrtGraph,
) -> TrtStatus {
    guarded(|| {
        let t = make_tree(family_of(family)?, n)?;
        unsafe { write_out(out, || into_handle(t)) }
    })
}

/// Whether `host` has a subgraph isomorphic to the tree `tree`.
///
/// # Safety
/// Both handles must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_contains_tree(
    host: *const TrtGraph,
    tree: *const TrtGraph,
    out: *mut bool,
) -> TrtStatus {
    guarded(|| {
        let (h, t) = unsafe { (graph_ref(host)?, graph_ref(tree)?) };
        let found = contains(h, t)?;
        unsafe { write_out(out, || found) }
    })
}

/// Maximum edge count of a graph on `p` vertices with no copy of the tree.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_ex_value(family: u32, n: usize, p: u64, out: *mut u64) -> TrtStatus {
    guarded(|| {
        let value = ex_value(family_of(family)?, n, p)?.value;
        unsafe { write_out(out, || value) }
    })
}

/// The two-colour Ramsey number of a pair of trees, or the best known
/// interval.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_ramsey_value(
    left_family: u32,
    m: usize,
    right_family: u32,
    n: usize,
    out: *mut TrtRamsey,
) -> TrtStatus {
    guarded(|| {
        let left = TreeSpec::new(family_of(left_family)?, m)?;
        let right = TreeSpec::new(family_of(right_family)?, n)?;
        let r = match ramsey_value(left, right)?.bound {
            Bound::Exact { value } => {
                TrtRamsey { kind: TrtBoundKind::Exact, lower: value, upper: value }
            }
            Bound::Range { lo, hi } => {
                TrtRamsey { kind: TrtBoundKind::Range, lower: lo, upper: hi }
            }
            Bound::Unknown { lo } => {
                TrtRamsey { kind: TrtBoundKind::Unknown, lower: lo.unwrap_or(0), upper: 0 }
            }
        };
        unsafe { write_out(out, || r) }
    })
}

/// A verified tree-free graph on `p` vertices with the maximum edge count.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn trt_extremal_witness(
    family: u32,
    n: usize,
    p: u64,
    out: *mut *mut TrtGraph,
) -> TrtStatus {
    guarded(|| {
        let w = extremal_witness(family_of(family)?, n, p)?;
        unsafe { write_out(out, || into_handle(w.graph)) }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_codes_follow_the_core_order() {
        for (i, f) in Family::ALL.iter().enumerate() {
            assert_eq!(family_of(i as u32).unwrap(), *f);
        }
        assert_eq!(TrtFamily::T2 as u32, 5);
        assert!(family_of(6).is_err());
    }

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(status_of(&Error::OrderCap { order: 200, cap: 128 }), TrtStatus::OrderCap);
        assert_eq!(status_of(&Error::UnsupportedFamily(Family::Tstar)), TrtStatus::Unsupported);
        assert_eq!(status_of(&Error::OutsideDomain(String::new())), TrtStatus::OutsideDomain);
    }

    #[test]
    fn panics_become_internal() {
        assert_eq!(guarded(|| panic!("boom")), TrtStatus::Internal);
        assert!(!trt_last_error_message().is_null());
        assert_eq!(guarded(|| Ok(())), TrtStatus::Ok);
        assert!(trt_last_error_message().is_null());
    }
}
