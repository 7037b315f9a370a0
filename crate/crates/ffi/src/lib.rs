//! C interface to `harmap`.
//!
//! Maps are opaque `HarmapMap` handles created by the constructors below and
//! released with [`harmap_map_free`]. Every fallible call returns a
//! [`HarmapStatus`]; on failure [`harmap_last_error`] describes the problem.
//! Optional real parameters are passed as NaN when unset.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use harmap::oracle::{univalence_radius_search, OracleConfig};
use harmap::radii::{
    coefficient_bound, lemma_inequality_margin, BoundVariant, ClassParams, Lemma, Theorem,
};
use harmap::report::radii_for;
use harmap::{
    build_extremal, parse_map, write_map, Error, ExtremalKind, ExtremalSpec, GridSpec, HarmonicMap,
    PowerSeries,
};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmapStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Inadmissible = 3,
    MissingParam = 4,
    NotNormalized = 5,
    NoExtremal = 6,
    Amplification = 7,
    Parse = 8,
    Quadrature = 9,
    InvalidArgument = 10,
    Panic = 11,
}

impl From<&Error> for HarmapStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. } => HarmapStatus::Domain,
            Error::Inadmissible { .. } => HarmapStatus::Inadmissible,
            Error::MissingParam { .. } => HarmapStatus::MissingParam,
            Error::NotNormalized { .. } => HarmapStatus::NotNormalized,
            Error::NoExtremal(_) => HarmapStatus::NoExtremal,
            Error::Amplification { .. } => HarmapStatus::Amplification,
            Error::Parse { .. } => HarmapStatus::Parse,
            Error::Quadrature { .. } => HarmapStatus::Quadrature,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmapTheorem {
    Landau,
    ThmA,
    ThmC,
    ThmD,
    Thm1,
    Cor1,
    Thm3,
    Cor2,
    Thm6,
    Thm7,
    Thm11,
    Thm12,
    Thm0,
    Thm10,
}

impl From<HarmapTheorem> for Theorem {
    fn from(t: HarmapTheorem) -> Self {
        match t {
            HarmapTheorem::Landau => Theorem::Landau,
            HarmapTheorem::ThmA => Theorem::ThmA,
            HarmapTheorem::ThmC => Theorem::ThmC,
            HarmapTheorem::ThmD => Theorem::ThmD,
            HarmapTheorem::Thm1 => Theorem::Thm1,
            HarmapTheorem::Cor1 => Theorem::Cor1,
            HarmapTheorem::Thm3 => Theorem::Thm3,
            HarmapTheorem::Cor2 => Theorem::Cor2,
            HarmapTheorem::Thm6 => Theorem::Thm6,
            HarmapTheorem::Thm7 => Theorem::Thm7,
            HarmapTheorem::Thm11 => Theorem::Thm11,
            HarmapTheorem::Thm12 => Theorem::Thm12,
            HarmapTheorem::Thm0 => Theorem::Thm0,
            HarmapTheorem::Thm10 => Theorem::Thm10,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmapBound {
    Thm2,
    Cor5,
    Cor3,
    Cor4,
    Conjecture,
}

impl From<HarmapBound> for BoundVariant {
    fn from(b: HarmapBound) -> Self {
        match b {
            HarmapBound::Thm2 => BoundVariant::Thm2,
            HarmapBound::Cor5 => BoundVariant::Cor5,
            HarmapBound::Cor3 => BoundVariant::Cor3,
            HarmapBound::Cor4 => BoundVariant::Cor4,
            HarmapBound::Conjecture => BoundVariant::Conjecture,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmapLemma {
    G,
    H,
}

/// Class parameters; NaN marks an unset optional field.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmapParams {
    pub k: f64,
    pub kp: f64,
    pub lambda_big: f64,
    pub lambda_small: f64,
    pub m: f64,
}

fn optional(v: f64) -> Option<f64> {
    (!v.is_nan()).then_some(v)
}

impl From<&HarmapParams> for ClassParams {
    fn from(p: &HarmapParams) -> Self {
        ClassParams {
            k: p.k,
            kp: p.kp,
            lambda_big: optional(p.lambda_big),
            lambda_small: optional(p.lambda_small),
            m: optional(p.m),
        }
    }
}

/// Univalence radius and schlicht radius (NaN when the result gives none).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmapRadii {
    pub univalence_radius: f64,
    pub schlicht_radius: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmapDistortion {
    pub fz_abs: f64,
    pub fzbar_abs: f64,
    pub lambda_big: f64,
    pub lambda_small: f64,
    pub jacobian: f64,
}

/// Opaque handle to a harmonic map.
pub struct HarmapMap(HarmonicMap);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: HarmapStatus, msg: impl Into<String>) -> HarmapStatus {
    set_error(msg.into());
    status
}

/// Runs `body`, translating library errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), HarmapStatus>) -> HarmapStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HarmapStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(HarmapStatus::Panic, "internal panic"),
    }
}

fn lib<T>(r: harmap::Result<T>) -> Result<T, HarmapStatus> {
    r.map_err(|e| fail(HarmapStatus::from(&e), e.to_string()))
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), HarmapStatus> {
    if p.is_null() {
        Err(fail(HarmapStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

/// Message for the most recent failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn harmap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn store_map(f: HarmonicMap, out: *mut *mut HarmapMap) {
    *out = Box::into_raw(Box::new(HarmapMap(f)));
}

fn extremal(kind: ExtremalKind, degree: usize, out: *mut *mut HarmapMap) -> HarmapStatus {
    guard(|| {
        non_null(out, "out")?;
        let mut spec = ExtremalSpec::with_default_degree(kind);
        if degree > 0 {
            spec = spec.with_degree(degree);
        }
        let f = lib(build_extremal(&spec))?;
        // SAFETY: checked non-null above; caller provides a writable slot.
        unsafe { store_map(f, out) };
        Ok(())
    })
}

/// `f₀` for `|h| < M`. `degree = 0` selects the default truncation.
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_extremal_f0(
    m: f64,
    degree: usize,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    extremal(ExtremalKind::F0 { m }, degree, out)
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_extremal_f1(
    lambda_big: f64,
    degree: usize,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    extremal(ExtremalKind::F1 { lambda_big }, degree, out)
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_extremal_fn(
    lambda_big: f64,
    n: usize,
    degree: usize,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    extremal(ExtremalKind::Fn { lambda_big, n }, degree, out)
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_extremal_fn_conjecture(
    k: f64,
    lambda_big: f64,
    n: usize,
    degree: usize,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    extremal(ExtremalKind::FnConjecture { lambda_big, n, k }, degree, out)
}

/// Builds `h + conj(g)` from `len` coefficients per part (index = power of z).
///
/// # Safety
/// The four coefficient arrays must hold `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_from_coefficients(
    h_re: *const f64,
    h_im: *const f64,
    g_re: *const f64,
    g_im: *const f64,
    len: usize,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    guard(|| {
        for (p, name) in [
            (h_re, "h_re"),
            (h_im, "h_im"),
            (g_re, "g_re"),
            (g_im, "g_im"),
        ] {
            non_null(p, name)?;
        }
        non_null(out, "out")?;
        if len == 0 {
            return Err(fail(HarmapStatus::InvalidArgument, "len must be positive"));
        }
        let series = |re: *const f64, im: *const f64| {
            // SAFETY: caller guarantees `len` readable values.
            let (re, im) = unsafe {
                (
                    std::slice::from_raw_parts(re, len),
                    std::slice::from_raw_parts(im, len),
                )
            };
            PowerSeries::new(
                re.iter()
                    .zip(im)
                    .map(|(&a, &b)| Complex64::new(a, b))
                    .collect(),
            )
        };
        let (h, g) = (series(h_re, h_im), series(g_re, g_im));
        if !(h.is_finite() && g.is_finite()) {
            return Err(fail(
                HarmapStatus::InvalidArgument,
                "coefficients must be finite",
            ));
        }
        store_map(HarmonicMap::new(h, g, "ffi"), out);
        Ok(())
    })
}

/// Parses mapping-spec text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_parse(
    text: *const c_char,
    out: *mut *mut HarmapMap,
) -> HarmapStatus {
    guard(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(HarmapStatus::InvalidArgument, "text is not UTF-8"))?;
        let f = lib(parse_map(text, "ffi"))?;
        store_map(f, out);
        Ok(())
    })
}

/// Renders a map as mapping-spec text; release it with [`harmap_string_free`].
///
/// # Safety
/// `map` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_write(
    map: *const HarmapMap,
    out: *mut *mut c_char,
) -> HarmapStatus {
    guard(|| {
        non_null(map, "map")?;
        non_null(out, "out")?;
        let text = CString::new(write_map(&(*map).0)).expect("spec text has no NUL");
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn harmap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `map` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_free(map: *mut HarmapMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Truncation degree of the map, or 0 for NULL.
///
/// # Safety
/// `map` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_degree(map: *const HarmapMap) -> usize {
    map.as_ref().map_or(0, |m| m.0.degree())
}

/// Coefficient `n` of `h` (`analytic_part != 0`) or `g`.
///
/// # Safety
/// `map` must be a live handle; `re` and `im` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_coefficient(
    map: *const HarmapMap,
    analytic_part: i32,
    n: usize,
    re: *mut f64,
    im: *mut f64,
) -> HarmapStatus {
    guard(|| {
        non_null(map, "map")?;
        non_null(re, "re")?;
        non_null(im, "im")?;
        let f = &(*map).0;
        let c = if analytic_part != 0 {
            f.h.coeff(n)
        } else {
            f.g.coeff(n)
        };
        *re = c.re;
        *im = c.im;
        Ok(())
    })
}

/// `f(z)` for `|z| < 1`.
///
/// # Safety
/// `map` must be a live handle; `out_re` and `out_im` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_eval(
    map: *const HarmapMap,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HarmapStatus {
    guard(|| {
        non_null(map, "map")?;
        non_null(out_re, "out_re")?;
        non_null(out_im, "out_im")?;
        let w = lib((*map).0.eval(Complex64::new(re, im)))?;
        *out_re = w.re;
        *out_im = w.im;
        Ok(())
    })
}

/// # Safety
/// `map` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_map_distortion(
    map: *const HarmapMap,
    re: f64,
    im: f64,
    out: *mut HarmapDistortion,
) -> HarmapStatus {
    guard(|| {
        non_null(map, "map")?;
        non_null(out, "out")?;
        let s = lib((*map).0.distortion_at(Complex64::new(re, im)))?;
        *out = HarmapDistortion {
            fz_abs: s.fz_abs,
            fzbar_abs: s.fzbar_abs,
            lambda_big: s.lambda_big,
            lambda_small: s.lambda_small,
            jacobian: s.jacobian,
        };
        Ok(())
    })
}

/// Univalence bracket on a polar grid with default collision and bisection settings.
///
/// # Safety
/// `map` must be a live handle; `lo` and `hi` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_univalence_bracket(
    map: *const HarmapMap,
    radial_steps: usize,
    angular_steps: usize,
    max_radius: f64,
    lo: *mut f64,
    hi: *mut f64,
) -> HarmapStatus {
    guard(|| {
        non_null(map, "map")?;
        non_null(lo, "lo")?;
        non_null(hi, "hi")?;
        let cfg = OracleConfig {
            grid: lib(GridSpec::new(radial_steps, angular_steps, max_radius))?,
            ..OracleConfig::default()
        };
        let b = lib(univalence_radius_search(&(*map).0, &cfg))?;
        *lo = b.lo;
        *hi = b.hi;
        Ok(())
    })
}

/// # Safety
/// `params` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn harmap_radii(
    theorem: HarmapTheorem,
    params: *const HarmapParams,
    out: *mut HarmapRadii,
) -> HarmapStatus {
    guard(|| {
        non_null(params, "params")?;
        non_null(out, "out")?;
        let p = lib(radii_for(theorem.into(), &ClassParams::from(&*params)))?;
        *out = HarmapRadii {
            univalence_radius: p.univalence_radius,
            schlicht_radius: p.sigma(),
        };
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_coefficient_bound(
    variant: HarmapBound,
    k: f64,
    kp: f64,
    lambda_big: f64,
    n: usize,
    out: *mut f64,
) -> HarmapStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(coefficient_bound(variant.into(), k, kp, lambda_big, n))?;
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn harmap_lemma_margin(
    which: HarmapLemma,
    x: f64,
    out: *mut f64,
) -> HarmapStatus {
    guard(|| {
        non_null(out, "out")?;
        let lemma = match which {
            HarmapLemma::G => Lemma::G,
            HarmapLemma::H => Lemma::H,
        };
        *out = lib(lemma_inequality_margin(lemma, x))?;
        Ok(())
    })
}
