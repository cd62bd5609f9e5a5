//! C ABI over `krawtchouk`.
//!
//! Scalars cross the boundary as NUL-terminated strings (`"3"`, `"-2/5"`),
//! matrices as opaque `KrMatrix` handles. Every fallible function returns a
//! `KrStatus`; on failure the message is available from
//! `kr_last_error_message` on the same thread. Strings returned through out
//! parameters are owned by the caller and must be released with
//! `kr_string_free`; handles with their matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use krawtchouk::math::{format_scalar, parse_scalar};
use krawtchouk::operator::{expansion_coefficients, PolyCoeffs};
use krawtchouk::univariate::{kravchuk_matrix, KravchukBasis};
use krawtchouk::{coding, io, multivariate, DenseMatrix, Error, ExactScalar};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Dimension = 4,
    Invariant = 5,
    Resource = 6,
    Parse = 7,
    Internal = 8,
}

/// Univariate Kravchuk basis at a fixed level and probability.
pub struct KrBasis(KravchukBasis);

/// Dense matrix of exact rationals.
pub struct KrMatrix(DenseMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(KrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Domain(_) => KrStatus::Domain,
            Error::Dimension { .. } => KrStatus::Dimension,
            Error::InvariantViolation(_) | Error::Construction(_) => KrStatus::Invariant,
            Error::Resource(_) => KrStatus::Resource,
            Error::Parse { .. } => KrStatus::Parse,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> KrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            KrStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic in library".into());
            KrStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(KrStatus::NullPointer, format!("null pointer: {what}"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(KrStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn read_scalar(s: *const c_char, what: &str) -> Result<ExactScalar, Failure> {
    Ok(parse_scalar(read_str(s, what)?)?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|_| Failure(KrStatus::Internal, "interior NUL in output".into()))?;
    write_out(out, s.into_raw())
}

unsafe fn write_matrix(out: *mut *mut KrMatrix, m: DenseMatrix) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(KrMatrix(m))))
}

fn column(v: Vec<ExactScalar>) -> DenseMatrix {
    let n = v.len();
    DenseMatrix::new(n, 1, v).expect("column shape")
}

/// Message of the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn kr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the basis of level `level` for probability `p` (a rational string in (0, 1)).
///
/// # Safety
/// `p` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_new(level: usize, p: *const c_char, out: *mut *mut KrBasis) -> KrStatus {
    guard(|| {
        let p = read_scalar(p, "p")?;
        let basis = kravchuk_matrix(level, &p)?;
        write_out(out, Box::into_raw(Box::new(KrBasis(basis))))
    })
}

/// # Safety
/// `basis` must be NULL or a handle from `kr_basis_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_free(basis: *mut KrBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Which matrix of a basis to copy out.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrBasisPart {
    Phi = 0,
    Weights = 1,
    Norms = 2,
    Inverse = 3,
}

/// Copies one of the basis matrices into a new handle.
///
/// # Safety
/// `basis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_matrix(basis: *const KrBasis, part: KrBasisPart, out: *mut *mut KrMatrix) -> KrStatus {
    guard(|| {
        let b = &deref(basis, "basis")?.0;
        let m = match part {
            KrBasisPart::Phi => b.phi().clone(),
            KrBasisPart::Weights => b.b().clone(),
            KrBasisPart::Norms => b.gamma().clone(),
            KrBasisPart::Inverse => b.inverse(),
        };
        write_matrix(out, m)
    })
}

/// Writes det Φ as a string.
///
/// # Safety
/// `basis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_determinant(basis: *const KrBasis, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let b = &deref(basis, "basis")?.0;
        write_string(out, format_scalar(&b.determinant()))
    })
}

/// Checks orthogonality, the involution identity and agreement of the two
/// inverse formulas. `*holds` is set to whether all of them hold exactly.
///
/// # Safety
/// `basis` must be a live handle; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_verify(basis: *const KrBasis, holds: *mut bool) -> KrStatus {
    guard(|| {
        let b = &deref(basis, "basis")?.0;
        let ok = b.orthogonality_defect().is_zero() && b.involution_identity().holds();
        write_out(holds, ok)
    })
}

/// Direction of a basis transform.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrDirection {
    /// Φ · data
    Forward = 0,
    /// data · Φ
    Left = 1,
    /// Φ⁻¹ · data
    Inverse = 2,
}

/// Transforms every column of `data` (or every row, for `Left`).
///
/// # Safety
/// `basis` and `data` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_basis_transform(
    basis: *const KrBasis,
    direction: KrDirection,
    data: *const KrMatrix,
    out: *mut *mut KrMatrix,
) -> KrStatus {
    guard(|| {
        let b = &deref(basis, "basis")?.0;
        let data = &deref(data, "data")?.0;
        let m = match direction {
            KrDirection::Forward => b.phi().try_mul(data)?,
            KrDirection::Left => data.try_mul(b.phi())?,
            KrDirection::Inverse => b.inverse().try_mul(data)?,
        };
        write_matrix(out, m)
    })
}

/// Parses a matrix from its JSON form `{"rows":r,"cols":c,"entries":[[...]]}`.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_from_json(json: *const c_char, out: *mut *mut KrMatrix) -> KrStatus {
    guard(|| {
        let m = io::matrix_from_json_str(read_str(json, "json")?)?;
        write_matrix(out, m)
    })
}

/// Builds a `rows` × `cols` matrix from `rows * cols` row-major scalar strings.
///
/// # Safety
/// `entries` must point to `rows * cols` valid C strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_new(
    rows: usize,
    cols: usize,
    entries: *const *const c_char,
    out: *mut *mut KrMatrix,
) -> KrStatus {
    guard(|| {
        let count = rows
            .checked_mul(cols)
            .ok_or_else(|| Failure(KrStatus::InvalidArgument, "matrix size overflows".into()))?;
        if count > 0 && entries.is_null() {
            return Err(null("entries"));
        }
        let values = (0..count)
            .map(|k| read_scalar(*entries.add(k), &format!("entry {k}")))
            .collect::<Result<Vec<_>, _>>()?;
        write_matrix(out, DenseMatrix::new(rows, cols, values)?)
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_free(m: *mut KrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_rows(m: *const KrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_cols(m: *const KrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Writes entry (i, j) as a string.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_entry(m: *const KrMatrix, i: usize, j: usize, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let m = &deref(m, "matrix")?.0;
        if i >= m.rows() || j >= m.cols() {
            return Err(Failure(
                KrStatus::InvalidArgument,
                format!("index ({i}, {j}) outside {}x{} matrix", m.rows(), m.cols()),
            ));
        }
        write_string(out, format_scalar(m.get(i, j)))
    })
}

/// Writes the JSON form of `m` (sorted keys, byte-stable).
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_to_json(m: *const KrMatrix, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let m = &deref(m, "matrix")?.0;
        write_string(out, io::matrix_to_json(m).to_string())
    })
}

/// Matrix product `a · b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_mul(a: *const KrMatrix, b: *const KrMatrix, out: *mut *mut KrMatrix) -> KrStatus {
    guard(|| {
        let a = &deref(a, "a")?.0;
        let b = &deref(b, "b")?.0;
        write_matrix(out, a.try_mul(b)?)
    })
}

/// Sets `*equal` to whether `a` and `b` have the same shape and entries.
///
/// # Safety
/// `a` and `b` must be live handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_matrix_equal(a: *const KrMatrix, b: *const KrMatrix, equal: *mut bool) -> KrStatus {
    guard(|| {
        let a = &deref(a, "a")?.0;
        let b = &deref(b, "b")?.0;
        write_out(equal, a == b)
    })
}

/// Induced matrix of `a` on homogeneous polynomials of degree `level`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_sympower(a: *const KrMatrix, level: usize, out: *mut *mut KrMatrix) -> KrStatus {
    guard(|| {
        let a = &deref(a, "a")?.0;
        write_matrix(out, multivariate::induced_matrix(a, level)?.matrix)
    })
}

/// Multivariate Kravchuk matrix for base `a`, probabilities `probs[0..count]`
/// and level `level`.
///
/// # Safety
/// `a` must be a live handle; `probs` must point to `count` valid C strings;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_multivariate_phi(
    a: *const KrMatrix,
    probs: *const *const c_char,
    count: usize,
    level: usize,
    out: *mut *mut KrMatrix,
) -> KrStatus {
    guard(|| {
        let a = &deref(a, "a")?.0;
        if count > 0 && probs.is_null() {
            return Err(null("probs"));
        }
        let probs = (0..count)
            .map(|k| read_scalar(*probs.add(k), &format!("probability {k}")))
            .collect::<Result<Vec<_>, _>>()?;
        write_matrix(out, multivariate::build_multivariate(a, &probs, level)?.phi)
    })
}

/// Coding-theory Krawtchouk matrix K_i(j; level, s).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_coding_matrix(level: usize, s: u64, out: *mut *mut KrMatrix) -> KrStatus {
    guard(|| write_matrix(out, coding::coding_matrix(level, s)?.matrix().clone()))
}

/// Expansion coefficients of the polynomial with coefficients `poly`
/// (a row or column, constant term first) in the level-`level` basis at `p`.
/// The result is a column of length `level + 1`.
///
/// # Safety
/// `poly` must be a live handle; `p` a valid C string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_expansion_coefficients(
    poly: *const KrMatrix,
    level: usize,
    p: *const c_char,
    out: *mut *mut KrMatrix,
) -> KrStatus {
    guard(|| {
        let poly = &deref(poly, "poly")?.0;
        if poly.rows() > 1 && poly.cols() > 1 {
            return Err(Failure(KrStatus::Dimension, "poly must be a row or a column".into()));
        }
        let p = read_scalar(p, "p")?;
        let coeffs = PolyCoeffs(poly.to_rows().into_iter().flatten().collect());
        write_matrix(out, column(expansion_coefficients(&coeffs, level, &p)?))
    })
}
