//! C interface to the `parahoric` library.
//!
//! Every fallible function returns a [`ParahoricStatus`] and writes its
//! result through an out pointer. The message for the most recent failure on
//! the calling thread is available from [`parahoric_last_error`]. Strings
//! returned through out pointers are owned by the caller and must be released
//! with [`parahoric_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use parahoric::cli::datum::DatumFile;
use parahoric::cli::dot::qbg_dot;
use parahoric::cli::report::{AdmJson, ClassJson, ComponentReportJson, FiberJson, QbgJson, WtJson, ZGammaJson};
use parahoric::{CorootVec, Coweight, Error, RootDatum, SphericalSubset, TieBreak};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParahoricStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidSpec = 4,
    InvalidArgument = 5,
    NotDominant = 6,
    TooLarge = 7,
    Domain = 8,
    Internal = 9,
    Panic = 10,
}

/// Opaque handle to a root datum and its cached group data.
pub struct ParahoricDatum {
    inner: RootDatum,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(ParahoricStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidSpec(_) | Error::NonIntegralLattice(_) => ParahoricStatus::InvalidSpec,
            Error::NotDominant(_) => ParahoricStatus::NotDominant,
            Error::TooLarge(_) => ParahoricStatus::TooLarge,
            Error::NotSpherical(_) | Error::NotFinite(_) | Error::NotNested(..) | Error::Parse(_) => {
                ParahoricStatus::InvalidArgument
            }
            Error::CertificateFailed(_) | Error::RouteDisagreement { .. } => ParahoricStatus::Internal,
            _ => ParahoricStatus::Domain,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap());
    });
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ParahoricStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            ParahoricStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            ParahoricStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(ParahoricStatus::NullPointer, format!("{what} is null"))
}

unsafe fn datum<'a>(d: *const ParahoricDatum) -> Result<&'a RootDatum, Fail> {
    d.as_ref().map(|d| &d.inner).ok_or_else(|| null("datum"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(ParahoricStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(ParahoricStatus::Internal, "interior NUL".into()))?;
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

unsafe fn coweight(d: &RootDatum, p: *const i64, len: usize) -> Result<Coweight, Fail> {
    let v = slice(p, len, "mu")?;
    if v.len() != d.dim() {
        return Err(Fail(
            ParahoricStatus::InvalidArgument,
            format!("expected {} coweight coordinates, got {}", d.dim(), v.len()),
        ));
    }
    Ok(Coweight(v.to_vec()))
}

unsafe fn level(d: &RootDatum, p: *const usize, len: usize) -> Result<SphericalSubset, Fail> {
    Ok(d.spherical(slice(p, len, "level")?)?)
}

/// Builds a datum from the same JSON accepted by the command line, e.g.
/// `{"cartan":{"family":"C","rank":2},"lattice":"adjoint"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_datum_new(json: *const c_char, out: *mut *mut ParahoricDatum) -> ParahoricStatus {
    guard(|| {
        let file = DatumFile::parse(text(json, "json")?).map_err(|e| Fail(ParahoricStatus::InvalidJson, e))?;
        let spec = file.to_spec().map_err(|e| Fail(ParahoricStatus::InvalidSpec, e))?;
        let inner = RootDatum::new(spec)?;
        put(out, Box::into_raw(Box::new(ParahoricDatum { inner })))
    })
}

/// # Safety
/// `d` must come from [`parahoric_datum_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn parahoric_datum_free(d: *mut ParahoricDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_datum_rank(d: *const ParahoricDatum, out: *mut usize) -> ParahoricStatus {
    guard(|| put(out, datum(d)?.rank()))
}

/// Length of coweight vectors for this datum.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_datum_dim(d: *const ParahoricDatum, out: *mut usize) -> ParahoricStatus {
    guard(|| put(out, datum(d)?.dim()))
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_weyl_order(d: *const ParahoricDatum, out: *mut usize) -> ParahoricStatus {
    guard(|| put(out, datum(d)?.weyl_order()?))
}

/// # Safety
/// `mu` must point to `mu_len` integers.
#[no_mangle]
pub unsafe extern "C" fn parahoric_adm_size(
    d: *const ParahoricDatum,
    mu: *const i64,
    mu_len: usize,
    out: *mut usize,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let mu = coweight(d, mu, mu_len)?;
        put(out, d.admissible_set(&mu)?.len())
    })
}

/// `Adm(mu)` as JSON. With `at_level` set, lists the double-coset minimal
/// representatives for the level `k` instead.
///
/// # Safety
/// `mu` and `k` must point to `mu_len` and `k_len` entries.
#[no_mangle]
pub unsafe extern "C" fn parahoric_adm_json(
    d: *const ParahoricDatum,
    mu: *const i64,
    mu_len: usize,
    at_level: bool,
    k: *const usize,
    k_len: usize,
    out: *mut *mut c_char,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let mu = coweight(d, mu, mu_len)?;
        let k = if at_level { Some(level(d, k, k_len)?) } else { None };
        put_string(out, json(&AdmJson::new(d, &mu, k)?))
    })
}

/// # Safety
/// `mu` and `k` must point to `mu_len` and `k_len` entries.
#[no_mangle]
pub unsafe extern "C" fn parahoric_is_irreducible(
    d: *const ParahoricDatum,
    mu: *const i64,
    mu_len: usize,
    k: *const usize,
    k_len: usize,
    out: *mut bool,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let mu = coweight(d, mu, mu_len)?;
        let k = level(d, k, k_len)?;
        put(out, d.is_irreducible(&mu, k)?.irreducible)
    })
}

/// # Safety
/// `mu` and `k` must point to `mu_len` and `k_len` entries.
#[no_mangle]
pub unsafe extern "C" fn parahoric_components_json(
    d: *const ParahoricDatum,
    mu: *const i64,
    mu_len: usize,
    k: *const usize,
    k_len: usize,
    out: *mut *mut c_char,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let mu = coweight(d, mu, mu_len)?;
        let k = level(d, k, k_len)?;
        let r = d.component_reps(&mu, k)?;
        put_string(out, json(&ComponentReportJson::new(d, &r)))
    })
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_classify_json(d: *const ParahoricDatum, out: *mut *mut c_char) -> ParahoricStatus {
    guard(|| put_string(out, json(&ClassJson::all(datum(d)?)?)))
}

/// # Safety
/// `mu`, `k1` and `k2` must point to the given number of entries.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn parahoric_fibers_json(
    d: *const ParahoricDatum,
    mu: *const i64,
    mu_len: usize,
    k1: *const usize,
    k1_len: usize,
    k2: *const usize,
    k2_len: usize,
    out: *mut *mut c_char,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let mu = coweight(d, mu, mu_len)?;
        let k1 = level(d, k1, k1_len)?;
        let k2 = level(d, k2, k2_len)?;
        put_string(out, json(&FiberJson::all(d, &mu, k1, k2)?))
    })
}

/// # Safety
/// `gamma` must point to `gamma_len` integers.
#[no_mangle]
pub unsafe extern "C" fn parahoric_zgamma_json(
    d: *const ParahoricDatum,
    gamma: *const i64,
    gamma_len: usize,
    out: *mut *mut c_char,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let g = slice(gamma, gamma_len, "gamma")?;
        if g.len() != d.rank() {
            return Err(Fail(
                ParahoricStatus::InvalidArgument,
                format!("expected {} coroot coordinates, got {}", d.rank(), g.len()),
            ));
        }
        put_string(
            out,
            json(&ZGammaJson::new(d, &CorootVec(g.to_vec()), TieBreak::LexMin)?),
        )
    })
}

/// Shortest-path weight from `x` to `y`, both given as words like `"121"`
/// or `"e"`.
///
/// # Safety
/// `x` and `y` must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn parahoric_wt_json(
    d: *const ParahoricDatum,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> ParahoricStatus {
    guard(|| {
        let d = datum(d)?;
        let x = d.parse_word(text(x, "x")?)?;
        let y = d.parse_word(text(y, "y")?)?;
        put_string(out, json(&WtJson::new(d, &x, &y)?))
    })
}

/// Vertex and edge counts of the quantum Bruhat graph as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_qbg_json(d: *const ParahoricDatum, out: *mut *mut c_char) -> ParahoricStatus {
    guard(|| put_string(out, json(&QbgJson::new(datum(d)?)?)))
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn parahoric_qbg_dot(d: *const ParahoricDatum, out: *mut *mut c_char) -> ParahoricStatus {
    guard(|| put_string(out, qbg_dot(datum(d)?)?))
}

/// Message for the last failed call on this thread, or NULL after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn parahoric_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn parahoric_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn parahoric_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}
