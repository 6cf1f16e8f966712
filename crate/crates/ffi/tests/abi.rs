use std::ffi::{CStr, CString};
use std::ptr;

use latdim_ffi::*;

const DIAMOND: &str = r#"{"name": "d", "elements": ["0", "a", "b", "1"],
  "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}"#;

fn load(json: &str) -> *mut LatdimLattice {
    let c = CString::new(json).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { latdim_lattice_from_json(c.as_ptr(), &mut h) }, LatdimStatus::LatdimOk);
    h
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(latdim_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn dimensions_through_the_abi() {
    let h = load(DIAMOND);
    unsafe {
        let mut n = 0usize;
        assert_eq!(latdim_lattice_size(h, &mut n), LatdimStatus::LatdimOk);
        assert_eq!(n, 4);
        let (mut big, mut small, mut dim) = (9i64, 9i64, 9i64);
        assert_eq!(latdim_ind_large(h, &mut big), LatdimStatus::LatdimOk);
        assert_eq!(latdim_ind_small(h, &mut small), LatdimStatus::LatdimOk);
        assert_eq!(latdim_dim_covering(h, &mut dim), LatdimStatus::LatdimOk);
        assert_eq!((big, small, dim), (0, 0, 0));
        let (mut k, mut present) = (9usize, false);
        assert_eq!(latdim_kdim(h, &mut k, &mut present), LatdimStatus::LatdimOk);
        assert!(present);
        assert_eq!(k, 0);
        let mut height = 0usize;
        assert_eq!(latdim_height(h, &mut height), LatdimStatus::LatdimOk);
        assert_eq!(height, 2);
        latdim_lattice_free(h);
    }
}

#[test]
fn report_and_round_trip() {
    let h = load(DIAMOND);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(latdim_report_json(h, &mut s), LatdimStatus::LatdimOk);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["ind_large"], 0);
        latdim_string_free(s);

        let mut s = ptr::null_mut();
        assert_eq!(latdim_lattice_to_json(h, &mut s), LatdimStatus::LatdimOk);
        let back = load(CStr::from_ptr(s).to_str().unwrap());
        latdim_string_free(s);
        latdim_lattice_free(back);
        latdim_lattice_free(h);
    }
}

#[test]
fn products_and_families() {
    let chain = load(r#"{"name": "c", "elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]]}"#);
    let diamond = load(DIAMOND);
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(latdim_product(chain, chain, LatdimOp::LatdimRect, &mut r), LatdimStatus::LatdimOk);
        let mut v = 0i64;
        latdim_ind_large(r, &mut v);
        assert_eq!(v, 1);
        latdim_lattice_free(r);

        let mut s = ptr::null_mut();
        assert_eq!(latdim_product(chain, diamond, LatdimOp::LatdimSum, &mut s), LatdimStatus::LatdimOk);
        latdim_ind_large(s, &mut v);
        assert_eq!(v, 1);
        latdim_lattice_free(s);

        let mut g = ptr::null_mut();
        assert_eq!(latdim_graft_m(3, &mut g), LatdimStatus::LatdimOk);
        let (mut big, mut small) = (0i64, 0i64);
        latdim_ind_large(g, &mut big);
        latdim_ind_small(g, &mut small);
        assert_eq!((small, big), (2, 3));
        latdim_lattice_free(g);

        let mut f = ptr::null_mut();
        assert_eq!(latdim_ind_k_family(2, &mut f), LatdimStatus::LatdimOk);
        let mut t = ptr::null_mut();
        assert_eq!(latdim_add_top(f, &mut t), LatdimStatus::LatdimOk);
        latdim_ind_large(t, &mut big);
        assert_eq!(big, 0);
        latdim_lattice_free(t);
        latdim_lattice_free(f);
        latdim_lattice_free(chain);
        latdim_lattice_free(diamond);
    }
}

#[test]
fn errors_are_codes_not_unwinds() {
    unsafe {
        let mut h = ptr::null_mut();
        let bad = CString::new(r#"{"name": "x", "elements": ["a", "b"], "covers": []}"#).unwrap();
        assert_eq!(latdim_lattice_from_json(bad.as_ptr(), &mut h), LatdimStatus::LatdimValidation);
        assert!(h.is_null());
        assert!(last_error().starts_with("NotBounded"), "{}", last_error());

        let junk = CString::new("{").unwrap();
        assert_eq!(latdim_lattice_from_json(junk.as_ptr(), &mut h), LatdimStatus::LatdimParse);
        let invalid = [0xffu8, 0];
        assert_eq!(
            latdim_lattice_from_json(invalid.as_ptr().cast(), &mut h),
            LatdimStatus::LatdimInvalidUtf8
        );
        assert_eq!(latdim_lattice_from_json(ptr::null(), &mut h), LatdimStatus::LatdimNullPointer);

        let mut v = 0i64;
        assert_eq!(latdim_ind_large(ptr::null(), &mut v), LatdimStatus::LatdimNullPointer);
        assert_eq!(latdim_graft_m(1, &mut h), LatdimStatus::LatdimInvalidArgument);
        assert!(last_error().starts_with("InvalidK"));

        let d = load(DIAMOND);
        assert_eq!(latdim_ind_large(d, &mut v), LatdimStatus::LatdimOk);
        assert_eq!(last_error(), "");
        latdim_lattice_free(d);
        latdim_lattice_free(ptr::null_mut());
        latdim_string_free(ptr::null_mut());
    }
}

#[test]
fn size_limits_surface_as_codes() {
    // ind is capped at 64 elements
    let names: Vec<String> = (0..70).map(|i| format!("c{i}")).collect();
    let covers: Vec<[String; 2]> = names.windows(2).map(|w| [w[0].clone(), w[1].clone()]).collect();
    let json = serde_json::json!({"name": "long", "elements": names, "covers": covers}).to_string();
    let h = load(&json);
    unsafe {
        let mut v = 0i64;
        assert_eq!(latdim_ind_small(h, &mut v), LatdimStatus::LatdimSizeLimit);
        assert!(last_error().starts_with("SizeLimit"));
        assert_eq!(latdim_ind_large(h, &mut v), LatdimStatus::LatdimOk);
        assert_eq!(v, 0);
        latdim_lattice_free(h);
    }
}
