//! C ABI over `arrcoh`.
//!
//! Objects are opaque handles created by `arrcoh_*_from_*` or computation
//! functions and released with the matching `*_free`. Every fallible call
//! returns an [`ArrcohStatus`]; on failure the message is available from
//! [`arrcoh_last_error_message`] on the same thread. Strings handed out by
//! the library must be released with [`arrcoh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use arrcoh::algebra::GradedAbelianGroup;
use arrcoh::complex::SimplicialComplex;
use arrcoh::constructions;
use arrcoh::error::Error;
use arrcoh::gm::{self, StratumMethod};
use arrcoh::io::{canonical_hash, parse_complex, Report};
use arrcoh::lattice::{Ambient, GeneratorSet};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrcohStatus {
    Ok = 0,
    /// A precondition of the operation does not hold.
    Domain = 1,
    /// Input could not be parsed or is inconsistent.
    Malformed = 2,
    NullPointer = 3,
    /// Internal consistency failure or a caught panic.
    Internal = 4,
}

/// Values accepted for `space` arguments.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrcohSpace {
    Diagonal = 0,
    Coordinate = 1,
}

/// Values accepted for `ambient` arguments.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrcohAmbient {
    Real = 0,
    Complex = 1,
}

/// An immutable simplicial complex.
pub struct ArrcohComplex {
    inner: SimplicialComplex,
}

/// An immutable graded abelian group `H^*`.
pub struct ArrcohGroup {
    inner: GradedAbelianGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn fail(status: ArrcohStatus, msg: &str) -> ArrcohStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> ArrcohStatus {
    let status = match e {
        Error::Domain(_) | Error::Unsupported(_) => ArrcohStatus::Domain,
        Error::Malformed(_) => ArrcohStatus::Malformed,
        Error::Integrity(_) => ArrcohStatus::Internal,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), ArrcohStatus>) -> ArrcohStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ArrcohStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(ArrcohStatus::Internal, "panic inside arrcoh"),
    }
}

unsafe fn complex_ref<'a>(k: *const ArrcohComplex) -> Result<&'a SimplicialComplex, ArrcohStatus> {
    // SAFETY: the caller passes a handle from arrcoh_complex_from_json or null
    unsafe { k.as_ref() }
        .map(|k| &k.inner)
        .ok_or_else(|| fail(ArrcohStatus::NullPointer, "complex handle is null"))
}

unsafe fn group_ref<'a>(g: *const ArrcohGroup) -> Result<&'a GradedAbelianGroup, ArrcohStatus> {
    // SAFETY: the caller passes a handle from arrcoh_cohomology or null
    unsafe { g.as_ref() }
        .map(|g| &g.inner)
        .ok_or_else(|| fail(ArrcohStatus::NullPointer, "group handle is null"))
}

fn check_out<T>(out: *mut T) -> Result<(), ArrcohStatus> {
    if out.is_null() {
        Err(fail(ArrcohStatus::NullPointer, "output pointer is null"))
    } else {
        Ok(())
    }
}

fn ambient(a: i32) -> Result<Ambient, ArrcohStatus> {
    match a {
        x if x == ArrcohAmbient::Real as i32 => Ok(Ambient::Real),
        x if x == ArrcohAmbient::Complex as i32 => Ok(Ambient::Complex),
        _ => Err(fail(ArrcohStatus::Domain, &format!("unknown ambient {a}"))),
    }
}

fn is_diagonal(space: i32) -> Result<bool, ArrcohStatus> {
    match space {
        x if x == ArrcohSpace::Diagonal as i32 => Ok(true),
        x if x == ArrcohSpace::Coordinate as i32 => Ok(false),
        _ => Err(fail(
            ArrcohStatus::Domain,
            &format!("unknown space {space}"),
        )),
    }
}

fn into_c_string(s: String) -> Result<*mut c_char, ArrcohStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(ArrcohStatus::Internal, "string contains a nul byte"))
}

fn compute_cohomology(
    k: &SimplicialComplex,
    space: i32,
    a: Ambient,
) -> Result<GradedAbelianGroup, ArrcohStatus> {
    let compute = if is_diagonal(space)? {
        gm::diagonal_cohomology
    } else {
        gm::coordinate_cohomology
    };
    compute(
        k,
        a,
        None,
        GeneratorSet::MissingFaces,
        StratumMethod::OpenInterval,
    )
    .map_err(from_error)
}

/// Parses a complex from JSON (`{"m": .., "facets": [..]}` or
/// `{"m": .., "missing_faces": [..]}`).
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_complex_from_json(
    json: *const c_char,
    out: *mut *mut ArrcohComplex,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        if json.is_null() {
            return Err(fail(ArrcohStatus::NullPointer, "json is null"));
        }
        // SAFETY: checked non-null, caller guarantees nul termination
        let text = unsafe { CStr::from_ptr(json) }
            .to_str()
            .map_err(|_| fail(ArrcohStatus::Malformed, "json is not UTF-8"))?;
        let k = parse_complex(text).map_err(from_error)?;
        // SAFETY: checked non-null
        unsafe { *out = Box::into_raw(Box::new(ArrcohComplex { inner: k })) };
        Ok(())
    })
}

/// Releases a complex. Null is ignored.
///
/// # Safety
/// `k` must come from [`arrcoh_complex_from_json`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_complex_free(k: *mut ArrcohComplex) {
    if !k.is_null() {
        // SAFETY: allocated by Box::into_raw in this crate
        drop(unsafe { Box::from_raw(k) });
    }
}

/// Number of vertices `m`.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_complex_vertex_count(
    k: *const ArrcohComplex,
    out: *mut usize,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        // SAFETY: checked non-null
        unsafe { *out = k.m() };
        Ok(())
    })
}

/// Whether every two missing faces share a vertex.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_complex_common_vertex(
    k: *const ArrcohComplex,
    out: *mut bool,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        // SAFETY: checked non-null
        unsafe { *out = k.common_vertex_predicate() };
        Ok(())
    })
}

/// The canonical `sha256:<hex>` hash of the complex. Free with
/// [`arrcoh_string_free`].
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_complex_hash(
    k: *const ArrcohComplex,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let s = into_c_string(canonical_hash(k))?;
        // SAFETY: checked non-null
        unsafe { *out = s };
        Ok(())
    })
}

/// Cohomology of the diagonal or coordinate complement, all degrees up to
/// the real ambient dimension.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_cohomology(
    k: *const ArrcohComplex,
    space: i32,
    ambient_kind: i32,
    out: *mut *mut ArrcohGroup,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let a = ambient(ambient_kind)?;
        let h = compute_cohomology(k, space, a)?;
        // SAFETY: checked non-null
        unsafe { *out = Box::into_raw(Box::new(ArrcohGroup { inner: h })) };
        Ok(())
    })
}

/// Releases a group. Null is ignored.
///
/// # Safety
/// `g` must come from [`arrcoh_cohomology`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_group_free(g: *mut ArrcohGroup) {
    if !g.is_null() {
        // SAFETY: allocated by Box::into_raw in this crate
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Highest nonzero degree, or `-1` for the zero group.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_group_max_degree(
    g: *const ArrcohGroup,
    out: *mut i64,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let g = unsafe { group_ref(g) }?;
        // SAFETY: checked non-null
        unsafe { *out = g.max_degree().unwrap_or(-1) };
        Ok(())
    })
}

/// Free rank in `degree`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_group_rank(
    g: *const ArrcohGroup,
    degree: i64,
    out: *mut usize,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let g = unsafe { group_ref(g) }?;
        // SAFETY: checked non-null
        unsafe { *out = g.rank(degree) };
        Ok(())
    })
}

/// Number of torsion coefficients in `degree`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_group_torsion_len(
    g: *const ArrcohGroup,
    degree: i64,
    out: *mut usize,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let g = unsafe { group_ref(g) }?;
        // SAFETY: checked non-null
        unsafe { *out = g.get(degree).torsion().len() };
        Ok(())
    })
}

/// Torsion coefficient `index` in `degree`, in increasing divisibility order.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_group_torsion_at(
    g: *const ArrcohGroup,
    degree: i64,
    index: usize,
    out: *mut u64,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let g = unsafe { group_ref(g) }?;
        let group = g.get(degree);
        let t = group
            .torsion()
            .get(index)
            .ok_or_else(|| fail(ArrcohStatus::Domain, "torsion index out of range"))?;
        let v = u64::try_from(t)
            .ok()
            .ok_or_else(|| fail(ArrcohStatus::Domain, "torsion coefficient exceeds 64 bits"))?;
        // SAFETY: checked non-null
        unsafe { *out = v };
        Ok(())
    })
}

fn report_json<T: Serialize>(
    command: &str,
    k: Option<&SimplicialComplex>,
    result: T,
    out: *mut *mut c_char,
) -> Result<(), ArrcohStatus> {
    let text = serde_json::to_string(&Report::new(command, k, result))
        .map_err(|e| fail(ArrcohStatus::Internal, &e.to_string()))?;
    let s = into_c_string(text)?;
    // SAFETY: callers check `out` first
    unsafe { *out = s };
    Ok(())
}

/// Cohomology as a JSON report with `space`, `ambient` and `cohomology`
/// fields in the command-line tool's envelope. Free with [`arrcoh_string_free`].
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_cohomology_json(
    k: *const ArrcohComplex,
    space: i32,
    ambient_kind: i32,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let a = ambient(ambient_kind)?;
        let diagonal = is_diagonal(space)?;
        let h = compute_cohomology(k, space, a)?;
        let result = serde_json::json!({
            "space": if diagonal { "diagonal" } else { "coordinate" },
            "ambient": a,
            "cohomology": h,
        });
        report_json("cohomology", Some(k), result, out)
    })
}

/// The wedge decomposition report as JSON.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_bbcg_json(
    k: *const ArrcohComplex,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let r = constructions::bbcg_summands(k).map_err(from_error)?;
        report_json("bbcg", Some(k), r, out)
    })
}

/// The suspension-relation report as JSON. Fails with `Domain` unless the
/// missing faces pairwise intersect.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_check_suspension_json(
    k: *const ArrcohComplex,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let r = constructions::suspension_relation_check(k).map_err(from_error)?;
        report_json("check-suspension", Some(k), r, out)
    })
}

/// The cone-extension report as JSON.
///
/// # Safety
/// `k` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_check_cone_json(
    k: *const ArrcohComplex,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let k = unsafe { complex_ref(k) }?;
        let r = constructions::cone_equivalence_check(k).map_err(from_error)?;
        report_json("check-cone", Some(k), r, out)
    })
}

/// The `k`-equal report as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_kequal_json(
    m: usize,
    k: usize,
    ambient_kind: i32,
    out: *mut *mut c_char,
) -> ArrcohStatus {
    guard(|| {
        check_out(out)?;
        let a = ambient(ambient_kind)?;
        let r = constructions::kequal_closed_form(m, k, a).map_err(from_error)?;
        report_json("kequal", None, r, out)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn arrcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this crate
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn arrcoh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
