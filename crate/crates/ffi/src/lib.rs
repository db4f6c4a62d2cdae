//! C interface to `nodal-hodge`.
//!
//! Objects are opaque handles created by `nh_*_parse` or computation calls and
//! released with the matching `nh_*_free`. Every fallible call returns an
//! [`NhStatus`]; the message of the last failure on the calling thread is
//! available from [`nh_last_error_message`]. Strings returned to the caller are
//! released with [`nh_string_free`].

use nodal_hodge::groebner::{buchberger, ZeroDim, DEFAULT_PROBE_TRIALS};
use nodal_hodge::hodge::{self, EulerPolynomial};
use nodal_hodge::pencil::{self, Pencil, PicardFuchs, Point, UnipotencyClass};
use nodal_hodge::polyring::{MonomialOrder, Polynomial};
use nodal_hodge::scalars::{is_prime, Field, Fp, Rational};
use nodal_hodge::{cli, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NhStatus {
    Ok = 0,
    Domain = 1,
    DivisionByZero = 2,
    Parse = 3,
    Validation = 4,
    BoundViolation = 5,
    NotZeroDimensional = 6,
    NoOperatorFound = 7,
    Invariant = 8,
    Io = 9,
    NullPointer = 10,
    InvalidUtf8 = 11,
    Panic = 12,
    OutOfRange = 13,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> NhStatus {
    match e {
        Error::Domain(_) => NhStatus::Domain,
        Error::DivisionByZero => NhStatus::DivisionByZero,
        Error::Parse { .. } => NhStatus::Parse,
        Error::Validation(_) => NhStatus::Validation,
        Error::BoundViolation(_) => NhStatus::BoundViolation,
        Error::NotZeroDimensional => NhStatus::NotZeroDimensional,
        Error::NoOperatorFound { .. } => NhStatus::NoOperatorFound,
        Error::Invariant(_) => NhStatus::Invariant,
        Error::Io(_) => NhStatus::Io,
    }
}

struct Fail(NhStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            NhStatus::Ok
        }
        Ok(Err(Fail(s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            NhStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(NhStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(NhStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn get<'a, T>(h: *const T) -> Result<&'a T, Fail> {
    h.as_ref().ok_or_else(null)
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread; empty after a success. Owned by the library.
#[no_mangle]
pub extern "C" fn nh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A polynomial with rational coefficients.
pub struct NhPolynomial(Polynomial<Rational>);

/// A pencil `F - t*G`.
pub struct NhPencil(Pencil);

/// A Picard-Fuchs operator.
pub struct NhOperator(PicardFuchs);

/// An Euler polynomial.
pub struct NhEuler(EulerPolynomial);

/// Parse a polynomial over Q in the variables `x0 .. x{nvars-1}`.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_polynomial_parse(src: *const c_char, nvars: usize, out: *mut *mut NhPolynomial) -> NhStatus {
    guard(|| {
        let p = cli::parse_rational_polynomial(text(src)?, nvars)?;
        write(out, Box::into_raw(Box::new(NhPolynomial(p))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nh_polynomial_free(p: *mut NhPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text form.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_polynomial_to_string(p: *const NhPolynomial, out: *mut *mut c_char) -> NhStatus {
    guard(|| write(out, to_c(get(p)?.0.to_string())))
}

/// Substitute the last variable by minus the sum of the others.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_polynomial_restrict(p: *const NhPolynomial, out: *mut *mut NhPolynomial) -> NhStatus {
    guard(|| {
        let r = get(p)?.0.restrict_to_hyperplane()?;
        write(out, Box::into_raw(Box::new(NhPolynomial(r))))
    })
}

/// Degree of the singular scheme modulo `prime` and whether it is reduced.
/// A count of `UINT64_MAX` means the scheme is not zero-dimensional.
///
/// # Safety
/// `p` must be a live handle; `count` and `reduced` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn nh_polynomial_node_count(
    p: *const NhPolynomial,
    prime: u64,
    seed: u64,
    count: *mut u64,
    reduced: *mut bool,
) -> NhStatus {
    guard(|| {
        let f = &get(p)?.0;
        if count.is_null() || reduced.is_null() {
            return Err(null());
        }
        if !is_prime(prime) {
            return Err(Fail(NhStatus::Domain, format!("{prime} is not prime")));
        }
        let fp = f.map_coeffs(&prime, |c| Fp::from_rational(&prime, c))?;
        let gb = buchberger(&fp.partial_derivatives(), &MonomialOrder::grevlex(f.nvars()))?;
        match gb.zero_dim_degree()? {
            ZeroDim::Degree(d) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let r = d == 0 || gb.reducedness_probe(DEFAULT_PROBE_TRIALS, &mut rng)?;
                write(count, d)?;
                write(reduced, r)
            }
            ZeroDim::NotZeroDimensional => {
                write(count, u64::MAX)?;
                write(reduced, false)
            }
        }
    })
}

/// Primitive middle Hodge numbers.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct NhHodgeDiamond {
    pub h30: u64,
    pub h21: u64,
    pub h12: u64,
    pub h03: u64,
}

/// Hodge numbers of a smooth degree-`d` threefold hypersurface.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_smooth_hodge_numbers(d: u32, out: *mut NhHodgeDiamond) -> NhStatus {
    guard(|| {
        let h = hodge::smooth_hodge_numbers(d)?;
        write(out, NhHodgeDiamond { h30: h.h30, h21: h.h21, h12: h.h12, h03: h.h03 })
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_node_bound(d: u32, out: *mut u64) -> NhStatus {
    guard(|| write(out, hodge::node_bound(d)?))
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_pole_adjoint_threshold(n: i64, out: *mut i64) -> NhStatus {
    guard(|| write(out, hodge::pole_adjoint_threshold(n)?))
}

/// Evaluate an Euler-polynomial term program.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_euler_program(src: *const c_char, out: *mut *mut NhEuler) -> NhStatus {
    guard(|| {
        let e = cli::parse_euler_program(text(src)?)?;
        write(out, Box::into_raw(Box::new(NhEuler(e))))
    })
}

/// Euler polynomial of a threefold with `m` nodes, or of its resolution.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_euler_nodal(m: u64, a: u64, b: u64, resolution: bool, out: *mut *mut NhEuler) -> NhStatus {
    guard(|| {
        let e = if resolution { hodge::euler_resolution(m, a, b)? } else { hodge::euler_nodal_threefold(m, a, b)? };
        write(out, Box::into_raw(Box::new(NhEuler(e))))
    })
}

/// Coefficient of `x^p xb^q`.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_euler_coeff(e: *const NhEuler, p: u32, q: u32, out: *mut i64) -> NhStatus {
    guard(|| write(out, get(e)?.0.coeff(p, q)))
}

/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_euler_to_string(e: *const NhEuler, out: *mut *mut c_char) -> NhStatus {
    guard(|| write(out, to_c(get(e)?.0.to_string())))
}

/// # Safety
/// `e` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nh_euler_free(e: *mut NhEuler) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Weight-graded dimensions of H^3 of a nodal threefold.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct NhMhs {
    pub gr3_types: [u64; 4],
    pub h3_resolution: u64,
    pub w2_dim: u64,
    pub h3_total: u64,
    pub l_min: i64,
    pub l_max: i64,
    pub s_min: i64,
    pub s_max: i64,
}

/// MHS bookkeeping; `h2x = 0` selects the default assumption.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_mhs_dims(m: u64, a: u64, b: u64, h2x: u64, out: *mut NhMhs) -> NhStatus {
    guard(|| {
        let r = hodge::mhs_dims(m, a, b, (h2x > 0).then_some(h2x))?;
        write(
            out,
            NhMhs {
                gr3_types: r.gr3_types,
                h3_resolution: r.h3_resolution,
                w2_dim: r.w2_dim,
                h3_total: r.h3_total,
                l_min: r.l_range[0],
                l_max: r.l_range[1],
                s_min: r.s_range[0],
                s_max: r.s_range[1],
            },
        )
    })
}

/// Parse `F - t*G` in the variables `x0 .. x{nvars-1}` and the parameter `t`.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_pencil_parse(src: *const c_char, nvars: usize, out: *mut *mut NhPencil) -> NhStatus {
    guard(|| {
        let p = cli::parse_polynomial(text(src)?, nvars, true)?;
        write(out, Box::into_raw(Box::new(NhPencil(Pencil::from_fiber(&p)?))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nh_pencil_free(p: *mut NhPencil) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Picard-Fuchs operator of the holomorphic form; `max_order = 0` uses the default bound.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_picard_fuchs(
    p: *const NhPencil,
    max_order: usize,
    symmetric: bool,
    seed: u64,
    out: *mut *mut NhOperator,
) -> NhStatus {
    guard(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pf = pencil::picard_fuchs(&get(p)?.0, (max_order > 0).then_some(max_order), symmetric, &mut rng)?;
        write(out, Box::into_raw(Box::new(NhOperator(pf))))
    })
}

/// # Safety
/// `op` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_operator_order(op: *const NhOperator, out: *mut usize) -> NhStatus {
    guard(|| write(out, get(op)?.0.operator.order()))
}

/// Text of the coefficient of `(d/dt)^i`.
///
/// # Safety
/// `op` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nh_operator_coeff(op: *const NhOperator, i: usize, out: *mut *mut c_char) -> NhStatus {
    guard(|| {
        let c = get(op)?.0.operator.coeffs().get(i).ok_or_else(|| Fail(NhStatus::OutOfRange, format!("no coefficient {i}")))?;
        write(out, to_c(c.to_string()))
    })
}

/// Local monodromy class.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NhUnipotency {
    MaximalUnipotent = 0,
    Unipotent = 1,
    QuasiUnipotent = 2,
    NonLocalMonodromy = 3,
}

/// Exponents at `t = infinity` (`at_infinity`) or at the rational point `num/den`.
/// `index` receives the nilpotency index or its bound, 0 when not applicable.
///
/// # Safety
/// `op` must be a live handle; `class` and `index` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn nh_operator_unipotency(
    op: *const NhOperator,
    at_infinity: bool,
    num: i64,
    den: i64,
    class: *mut NhUnipotency,
    index: *mut usize,
) -> NhStatus {
    guard(|| {
        let o = &get(op)?.0.operator;
        let point = if at_infinity { Point::Infinity } else { Point::Finite(Rational::new(num, den)?) };
        let ind = pencil::indicial_exponents(o, &point);
        let (c, i) = match pencil::unipotency_class(&ind, o.order()) {
            UnipotencyClass::MaximalUnipotent { index } => (NhUnipotency::MaximalUnipotent, index),
            UnipotencyClass::Unipotent { index_bound } => (NhUnipotency::Unipotent, index_bound),
            UnipotencyClass::QuasiUnipotent => (NhUnipotency::QuasiUnipotent, 0),
            UnipotencyClass::NonLocalMonodromy => (NhUnipotency::NonLocalMonodromy, 0),
        };
        write(class, c)?;
        write(index, i)
    })
}

/// # Safety
/// `op` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nh_operator_free(op: *mut NhOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::DivisionByZero), NhStatus::DivisionByZero);
        assert_eq!(status_of(&Error::NoOperatorFound { max_order: 1, space_dim: 2 }), NhStatus::NoOperatorFound);
    }
}
