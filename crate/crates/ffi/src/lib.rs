//! C interface to `derangement-lab`.
//!
//! Groups are opaque `DlGroup` handles created by the `dl_group_*`
//! constructors and released with `dl_group_free`. Every fallible call
//! returns a `DlStatus`; on failure `dl_last_error_message` describes the
//! cause. Strings returned through out-parameters are owned by the caller
//! and must be released with `dl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use derangement_lab::constructions::{
    build_cyclic_regular, build_example6, build_fourell, build_gq,
};
use derangement_lab::dgraph::{complete_multipartite_decomposition, DerangementGraph};
use derangement_lab::gf::FieldSpec;
use derangement_lab::perm::{GroupFile, PermGroup, Permutation};
use derangement_lab::solver::{analyze, intersection_density};
use derangement_lab::{Caps, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    Parse = 4,
    NotTransitive = 5,
    Internal = 6,
}

/// Opaque group handle.
pub struct DlGroup {
    group: PermGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DlStatus {
    match e {
        Error::OrderCapExceeded { .. }
        | Error::CapExceeded { .. }
        | Error::FieldTooLarge { .. } => DlStatus::CapExceeded,
        Error::Json(_) | Error::InvalidGroupFile(_) | Error::Io(_) => DlStatus::Parse,
        Error::NotTransitive => DlStatus::NotTransitive,
        Error::Internal(_) => DlStatus::Internal,
        _ => DlStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (DlStatus, String)>) -> DlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DlStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside derangement-lab");
            DlStatus::Internal
        }
    }
}

fn lift<T>(r: derangement_lab::Result<T>) -> Result<T, (DlStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DlStatus, String) {
    (DlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn store(
    out: *mut *mut DlGroup,
    group: derangement_lab::Result<PermGroup>,
) -> Result<(), (DlStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let group = lift(group)?;
    *out = Box::into_raw(Box::new(DlGroup { group }));
    Ok(())
}

unsafe fn handle<'a>(g: *const DlGroup) -> Result<&'a PermGroup, (DlStatus, String)> {
    g.as_ref().map(|h| &h.group).ok_or_else(|| null("group"))
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn dl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `G_q(A)` acting on the lines of the affine plane over GF(q).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_construct_gq(q: u64, out: *mut *mut DlGroup) -> DlStatus {
    guard(|| {
        store(
            out,
            FieldSpec::of_order(q).and_then(|s| build_gq(&s, Caps::default().max_order)),
        )
    })
}

/// The degree `4 ell` group; `ell` must be odd and at least 3.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_construct_fourell(ell: u32, out: *mut *mut DlGroup) -> DlStatus {
    guard(|| {
        store(
            out,
            build_fourell(ell as usize, Caps::default().max_order).map(|f| f.group),
        )
    })
}

/// The order 12 group of degree 6.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_construct_example6(out: *mut *mut DlGroup) -> DlStatus {
    guard(|| store(out, Ok(build_example6())))
}

/// Cyclic group of order `n` acting regularly.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_construct_cyclic(n: u32, out: *mut *mut DlGroup) -> DlStatus {
    guard(|| store(out, build_cyclic_regular(n as usize)))
}

/// Group from the text of a JSON group file.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dl_group_from_json(
    json: *const c_char,
    out: *mut *mut DlGroup,
) -> DlStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| (DlStatus::Parse, e.to_string()))?;
        let file: GroupFile =
            serde_json::from_str(text).map_err(|e| (DlStatus::Parse, e.to_string()))?;
        store(out, file.to_group(Caps::default().max_order))
    })
}

/// Group generated by `count` permutations of degree `degree`, given as
/// consecutive 1-based image lists in `images` (`count * degree` values).
///
/// # Safety
/// `images` must point to `count * degree` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dl_group_from_generators(
    degree: usize,
    images: *const u32,
    count: usize,
    out: *mut *mut DlGroup,
) -> DlStatus {
    guard(|| {
        if degree == 0 {
            return Err((DlStatus::InvalidArgument, "degree must be positive".into()));
        }
        let total = degree
            .checked_mul(count)
            .ok_or((DlStatus::InvalidArgument, "size overflow".to_string()))?;
        if images.is_null() && total > 0 {
            return Err(null("images"));
        }
        let flat = if total == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(images, total)
        };
        let mut gens = flat
            .chunks(degree)
            .map(Permutation::from_one_based)
            .collect::<derangement_lab::Result<Vec<_>>>();
        if let Ok(g) = &mut gens {
            if g.is_empty() {
                g.push(Permutation::identity(degree));
            }
        }
        store(
            out,
            gens.and_then(|g| PermGroup::generate(&g, "user", Caps::default().max_order)),
        )
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dl_group_free(g: *mut DlGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_order(g: *const DlGroup) -> u64 {
    g.as_ref().map_or(0, |h| h.group.order() as u64)
}

/// Degree of the action, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dl_group_degree(g: *const DlGroup) -> u64 {
    g.as_ref().map_or(0, |h| h.group.degree() as u64)
}

/// Full analysis report as JSON. Free the string with `dl_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_group_analyze_json(
    g: *const DlGroup,
    out: *mut *mut c_char,
) -> DlStatus {
    guard(|| {
        let group = handle(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let report = lift(analyze(group, &Caps::default()))?;
        let c = CString::new(report.to_json()).map_err(|e| (DlStatus::Internal, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Intersection density as a reduced fraction.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_group_intersection_density(
    g: *const DlGroup,
    num: *mut u64,
    den: *mut u64,
) -> DlStatus {
    guard(|| {
        let group = handle(g)?;
        if num.is_null() || den.is_null() {
            return Err(null("num/den"));
        }
        let d = lift(intersection_density(group, &Caps::default()))?;
        if !d.exact {
            return Err((
                DlStatus::CapExceeded,
                "solver cap exceeded; density is only a lower bound".into(),
            ));
        }
        *num = d.rho.num;
        *den = d.rho.den;
        Ok(())
    })
}

/// Whether the derangement graph is complete multipartite; when it is,
/// the part count and size are written (zero otherwise).
///
/// # Safety
/// `g` must be a live handle; the out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn dl_group_is_multipartite(
    g: *const DlGroup,
    is_multipartite: *mut bool,
    parts: *mut u64,
    part_size: *mut u64,
) -> DlStatus {
    guard(|| {
        let group = handle(g)?;
        if is_multipartite.is_null() || parts.is_null() || part_size.is_null() {
            return Err(null("out"));
        }
        let dg = lift(DerangementGraph::build(
            group,
            Caps::default().max_graph_order,
        ))?;
        let d = lift(complete_multipartite_decomposition(group, &dg))?;
        let m = d.multipartite();
        *is_multipartite = m.is_some();
        *parts = m.map_or(0, |m| m.part_count as u64);
        *part_size = m.map_or(0, |m| m.part_size as u64);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes_map() {
        assert_eq!(status_of(&Error::NotTransitive), DlStatus::NotTransitive);
        assert_eq!(
            status_of(&Error::CapExceeded { what: "x", cap: 1 }),
            DlStatus::CapExceeded
        );
        assert_eq!(status_of(&Error::NotPrime(4)), DlStatus::InvalidArgument);
    }
}
