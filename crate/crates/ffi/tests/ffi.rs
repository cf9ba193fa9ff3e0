use std::ffi::{c_char, CStr, CString};
use std::ptr;

use parahoric_ffi::*;

struct Handle(*mut ParahoricDatum);

impl Handle {
    fn new(json: &str) -> Handle {
        let s = CString::new(json).unwrap();
        let mut d = ptr::null_mut();
        let st = unsafe { parahoric_datum_new(s.as_ptr(), &mut d) };
        assert_eq!(st, ParahoricStatus::Ok, "{}", last_error());
        Handle(d)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { parahoric_datum_free(self.0) }
    }
}

fn last_error() -> String {
    let p = parahoric_last_error();
    if p.is_null() {
        String::new()
    } else {
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }
}

fn take(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { parahoric_string_free(p) };
    s
}

fn json(v: &str) -> serde_json::Value {
    serde_json::from_str(v).unwrap()
}

const C2: &str = r#"{"cartan":{"family":"C","rank":2},"lattice":"adjoint"}"#;
const SP4: &str = r#"{"cartan":{"family":"C","rank":2},"lattice":{"basis":[[1,1],[0,1]]}}"#;

#[test]
fn sizes_and_orders() {
    let d = Handle::new(r#"{"cartan":{"family":"A","rank":1}}"#);
    let mut n = 0usize;
    unsafe {
        assert_eq!(parahoric_datum_rank(d.0, &mut n), ParahoricStatus::Ok);
        assert_eq!(n, 1);
        assert_eq!(parahoric_weyl_order(d.0, &mut n), ParahoricStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(parahoric_adm_size(d.0, [1i64].as_ptr(), 1, &mut n), ParahoricStatus::Ok);
        assert_eq!(n, 5);
    }
    assert!(parahoric_last_error().is_null());
}

#[test]
fn json_results() {
    let d = Handle::new(C2);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            parahoric_zgamma_json(d.0, [1i64, 2].as_ptr(), 2, &mut out),
            ParahoricStatus::Ok
        );
        assert_eq!(json(&take(out))["word"], "1212");
        assert_eq!(parahoric_classify_json(d.0, &mut out), ParahoricStatus::Ok);
        assert!(json(&take(out)).is_array());
        assert_eq!(parahoric_qbg_json(d.0, &mut out), ParahoricStatus::Ok);
        assert_eq!(json(&take(out))["vertices"], 8);
        assert_eq!(parahoric_qbg_dot(d.0, &mut out), ParahoricStatus::Ok);
        assert!(take(out).starts_with("digraph qbg {"));
        let x = CString::new("12").unwrap();
        let y = CString::new("e").unwrap();
        assert_eq!(
            parahoric_wt_json(d.0, x.as_ptr(), y.as_ptr(), &mut out),
            ParahoricStatus::Ok
        );
        assert_eq!(json(&take(out))["x"], "12");
    }
}

#[test]
fn levels() {
    let d = Handle::new(SP4);
    let mu = [1i64, 0];
    let k = [0usize, 2];
    let mut out = ptr::null_mut();
    let mut irr = true;
    unsafe {
        assert_eq!(
            parahoric_components_json(d.0, mu.as_ptr(), 2, k.as_ptr(), 2, &mut out),
            ParahoricStatus::Ok
        );
        assert_eq!(json(&take(out))["count"], 2);
        assert_eq!(
            parahoric_is_irreducible(d.0, mu.as_ptr(), 2, k.as_ptr(), 2, &mut irr),
            ParahoricStatus::Ok
        );
        assert!(!irr);
        assert_eq!(
            parahoric_adm_json(d.0, mu.as_ptr(), 2, true, k.as_ptr(), 2, &mut out),
            ParahoricStatus::Ok
        );
        assert_eq!(json(&take(out))["K"], serde_json::json!([0, 2]));
        assert_eq!(
            parahoric_adm_json(d.0, mu.as_ptr(), 2, false, ptr::null(), 0, &mut out),
            ParahoricStatus::Ok
        );
        assert_eq!(json(&take(out))["size"], 19);
        assert_eq!(
            parahoric_fibers_json(d.0, mu.as_ptr(), 2, ptr::null(), 0, k.as_ptr(), 1, &mut out),
            ParahoricStatus::Ok
        );
        assert!(!json(&take(out)).as_array().unwrap().is_empty());
    }
}

#[test]
fn error_codes() {
    let mut d = ptr::null_mut();
    let bad = CString::new("{").unwrap();
    assert_eq!(
        unsafe { parahoric_datum_new(bad.as_ptr(), &mut d) },
        ParahoricStatus::InvalidJson
    );
    assert!(!last_error().is_empty());
    let bad = CString::new(r#"{"cartan":{"family":"Q","rank":2}}"#).unwrap();
    assert_eq!(
        unsafe { parahoric_datum_new(bad.as_ptr(), &mut d) },
        ParahoricStatus::InvalidSpec
    );
    assert_eq!(
        unsafe { parahoric_datum_new(ptr::null(), &mut d) },
        ParahoricStatus::NullPointer
    );
    assert!(d.is_null());

    let h = Handle::new(C2);
    let mut n = 0usize;
    unsafe {
        assert_eq!(
            parahoric_adm_size(h.0, [-1i64, 0].as_ptr(), 2, &mut n),
            ParahoricStatus::NotDominant
        );
        assert!(last_error().contains("dominant"));
        assert_eq!(
            parahoric_adm_size(h.0, [1i64].as_ptr(), 1, &mut n),
            ParahoricStatus::InvalidArgument
        );
        assert_eq!(
            parahoric_adm_size(h.0, ptr::null(), 2, &mut n),
            ParahoricStatus::NullPointer
        );
        assert_eq!(
            parahoric_adm_size(ptr::null(), [1i64, 1].as_ptr(), 2, &mut n),
            ParahoricStatus::NullPointer
        );
        assert_eq!(
            parahoric_adm_size(h.0, [1i64, 1].as_ptr(), 2, ptr::null_mut()),
            ParahoricStatus::NullPointer
        );
        let mut irr = false;
        let all = [0usize, 1, 2];
        assert_eq!(
            parahoric_is_irreducible(h.0, [1i64, 1].as_ptr(), 2, all.as_ptr(), 3, &mut irr),
            ParahoricStatus::InvalidArgument
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            parahoric_fibers_json(
                h.0,
                [1i64, 1].as_ptr(),
                2,
                [1usize].as_ptr(),
                1,
                ptr::null(),
                0,
                &mut out
            ),
            ParahoricStatus::InvalidArgument
        );
        assert!(out.is_null());
        assert_eq!(
            parahoric_adm_size(h.0, [1i64, 1].as_ptr(), 2, &mut n),
            ParahoricStatus::Ok
        );
        assert!(parahoric_last_error().is_null());
    }
    let e8 = Handle::new(r#"{"cartan":{"family":"E","rank":8}}"#);
    assert_eq!(unsafe { parahoric_weyl_order(e8.0, &mut n) }, ParahoricStatus::TooLarge);
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/parahoric.h")).unwrap();
    for name in [
        "parahoric_datum_new",
        "parahoric_datum_free",
        "parahoric_adm_size",
        "parahoric_adm_json",
        "parahoric_components_json",
        "parahoric_classify_json",
        "parahoric_fibers_json",
        "parahoric_zgamma_json",
        "parahoric_wt_json",
        "parahoric_qbg_dot",
        "parahoric_last_error",
        "parahoric_string_free",
        "PARAHORIC_STATUS_NOT_DOMINANT",
    ] {
        assert!(header.contains(name), "{name}");
    }
    let v = unsafe { CStr::from_ptr(parahoric_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
