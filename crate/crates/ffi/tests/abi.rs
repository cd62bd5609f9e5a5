use std::ffi::{c_char, CStr, CString};
use std::ptr;

use krawtchouk_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { kr_string_free(s) };
    out
}

fn last_error() -> String {
    let msg = kr_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }.to_str().unwrap().to_owned()
}

fn basis(level: usize, p: &str) -> *mut KrBasis {
    let p = CString::new(p).unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { kr_basis_new(level, p.as_ptr(), &mut b) }, KrStatus::Ok);
    b
}

fn entries(m: *const KrMatrix) -> Vec<Vec<String>> {
    let (r, c) = unsafe { (kr_matrix_rows(m), kr_matrix_cols(m)) };
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut s = ptr::null_mut();
                    assert_eq!(unsafe { kr_matrix_entry(m, i, j, &mut s) }, KrStatus::Ok);
                    take_string(s)
                })
                .collect()
        })
        .collect()
}

fn matrix(rows: usize, cols: usize, values: &[&str]) -> *mut KrMatrix {
    let owned: Vec<CString> = values.iter().map(|v| CString::new(*v).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|s| s.as_ptr()).collect();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_new(rows, cols, ptrs.as_ptr(), &mut m) }, KrStatus::Ok);
    m
}

#[test]
fn basis_matrices_at_level_two() {
    let b = basis(2, "1/2");
    let mut phi = ptr::null_mut();
    assert_eq!(unsafe { kr_basis_matrix(b, KrBasisPart::Phi, &mut phi) }, KrStatus::Ok);
    assert_eq!(
        entries(phi),
        vec![vec!["1", "1", "1"], vec!["2", "0", "-2"], vec!["1", "-1", "1"]]
    );

    let mut weights = ptr::null_mut();
    assert_eq!(unsafe { kr_basis_matrix(b, KrBasisPart::Weights, &mut weights) }, KrStatus::Ok);
    assert_eq!(entries(weights)[1][1], "1/2");

    let mut det = ptr::null_mut();
    assert_eq!(unsafe { kr_basis_determinant(b, &mut det) }, KrStatus::Ok);
    assert_eq!(take_string(det), "-8");

    let mut holds = false;
    assert_eq!(unsafe { kr_basis_verify(b, &mut holds) }, KrStatus::Ok);
    assert!(holds);
    assert!(kr_last_error_message().is_null());

    unsafe {
        kr_matrix_free(phi);
        kr_matrix_free(weights);
        kr_basis_free(b);
    }
}

#[test]
fn forward_then_inverse_is_identity() {
    let b = basis(3, "2/5");
    let data = matrix(4, 1, &["1", "-3/7", "0", "5"]);
    let (mut fwd, mut back) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(kr_basis_transform(b, KrDirection::Forward, data, &mut fwd), KrStatus::Ok);
        assert_eq!(kr_basis_transform(b, KrDirection::Inverse, fwd, &mut back), KrStatus::Ok);
        let mut equal = false;
        assert_eq!(kr_matrix_equal(back, data, &mut equal), KrStatus::Ok);
        assert!(equal);
        for m in [data, fwd, back] {
            kr_matrix_free(m);
        }
        kr_basis_free(b);
    }
}

#[test]
fn json_round_trip_is_byte_stable() {
    let m = matrix(2, 2, &["1/3", "0", "-4", "6/4"]);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_to_json(m, &mut json) }, KrStatus::Ok);
    let text = take_string(json);
    assert_eq!(text, r#"{"cols":2,"entries":[["1/3","0"],["-4","3/2"]],"rows":2}"#);

    let c = CString::new(text.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_from_json(c.as_ptr(), &mut back) }, KrStatus::Ok);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_to_json(back, &mut again) }, KrStatus::Ok);
    assert_eq!(take_string(again), text);
    unsafe {
        kr_matrix_free(m);
        kr_matrix_free(back);
    }
}

#[test]
fn sympower_and_multivariate() {
    let a = matrix(2, 2, &["1", "1", "1", "-1"]);
    let mut sym = ptr::null_mut();
    assert_eq!(unsafe { kr_sympower(a, 2, &mut sym) }, KrStatus::Ok);
    assert_eq!(
        entries(sym),
        vec![vec!["1", "2", "1"], vec!["1", "0", "-1"], vec!["1", "-2", "1"]]
    );

    let probs: Vec<CString> = ["1/2", "1/2"].iter().map(|p| CString::new(*p).unwrap()).collect();
    let ptrs: Vec<*const c_char> = probs.iter().map(|s| s.as_ptr()).collect();
    let mut phi = ptr::null_mut();
    assert_eq!(unsafe { kr_multivariate_phi(a, ptrs.as_ptr(), 2, 2, &mut phi) }, KrStatus::Ok);
    assert_eq!(unsafe { (kr_matrix_rows(phi), kr_matrix_cols(phi)) }, (3, 3));
    unsafe {
        kr_matrix_free(a);
        kr_matrix_free(sym);
        kr_matrix_free(phi);
    }
}

#[test]
fn coding_matrix_and_expansion() {
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { kr_coding_matrix(2, 3, &mut k) }, KrStatus::Ok);
    assert_eq!(entries(k), vec![vec!["1", "1", "1"], vec!["4", "1", "-2"], vec!["4", "-2", "1"]]);

    // f(x) = x at level 2, p = 1/2: x = 1·K_1, so f~ = (0, 1, 0)
    let f = matrix(1, 2, &["0", "1"]);
    let p = CString::new("1/2").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { kr_expansion_coefficients(f, 2, p.as_ptr(), &mut c) }, KrStatus::Ok);
    assert_eq!(entries(c), vec![vec!["0"], vec!["1"], vec!["0"]]);
    unsafe {
        kr_matrix_free(k);
        kr_matrix_free(f);
        kr_matrix_free(c);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut b = ptr::null_mut();
    let bad = CString::new("3/2").unwrap();
    assert_eq!(unsafe { kr_basis_new(2, bad.as_ptr(), &mut b) }, KrStatus::Domain);
    assert!(b.is_null());
    assert!(last_error().contains("domain"));

    let junk = CString::new("one half").unwrap();
    assert_eq!(unsafe { kr_basis_new(2, junk.as_ptr(), &mut b) }, KrStatus::Parse);
    assert_eq!(unsafe { kr_basis_new(2, ptr::null(), &mut b) }, KrStatus::NullPointer);

    let ok = CString::new("1/3").unwrap();
    assert_eq!(unsafe { kr_basis_new(2, ok.as_ptr(), ptr::null_mut()) }, KrStatus::NullPointer);

    let a = matrix(2, 3, &["1", "2", "3", "4", "5", "6"]);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_mul(a, a, &mut out) }, KrStatus::Dimension);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { kr_matrix_entry(a, 2, 0, &mut s) }, KrStatus::InvalidArgument);

    let bad_json = CString::new(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).unwrap();
    assert_eq!(unsafe { kr_matrix_from_json(bad_json.as_ptr(), &mut out) }, KrStatus::Parse);

    let diag_fail = matrix(2, 2, &["1", "2", "1", "1"]);
    let probs: Vec<CString> = ["1/2", "1/2"].iter().map(|p| CString::new(*p).unwrap()).collect();
    let ptrs: Vec<*const c_char> = probs.iter().map(|s| s.as_ptr()).collect();
    assert_eq!(
        unsafe { kr_multivariate_phi(diag_fail, ptrs.as_ptr(), 2, 1, &mut out) },
        KrStatus::Invariant
    );

    assert_eq!(unsafe { kr_coding_matrix(2, 1, &mut out) }, KrStatus::Domain);
    unsafe {
        kr_matrix_free(a);
        kr_matrix_free(diag_fail);
        kr_matrix_free(ptr::null_mut());
        kr_basis_free(ptr::null_mut());
        kr_string_free(ptr::null_mut());
    }
}
