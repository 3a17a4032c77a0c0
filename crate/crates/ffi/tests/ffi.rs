use std::ffi::{CStr, CString};
use std::ptr;

use localdim_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ld_last_error_message()) }.to_string_lossy().into_owned()
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { ld_string_free(s) };
    out
}

fn generate(family: &str, n: usize) -> *mut LdPoset {
    let fam = CString::new(family).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ld_poset_generate(fam.as_ptr(), n, &mut p) }, LdStatus::Ok);
    p
}

#[test]
fn standard_example_round_trip() {
    let p = generate("standard", 3);
    assert_eq!(unsafe { ld_poset_len(p) }, 6);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { ld_poset_to_text(p, &mut text) }, LdStatus::Ok);
    let text = take(text);
    assert!(text.starts_with("poset 6\n"));

    let c = CString::new(text).unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { ld_poset_parse(c.as_ptr(), &mut q) }, LdStatus::Ok);
    assert_eq!(unsafe { ld_poset_len(q) }, 6);
    unsafe {
        ld_poset_free(p);
        ld_poset_free(q);
    }
}

#[test]
fn solvers_and_verification() {
    let p = generate("standard", 4);
    let mut value = 0;
    let mut witness = ptr::null_mut();
    let budget = LdBudget { max_size: 8, ..Default::default() };
    assert_eq!(unsafe { ld_exact_ldim(p, &budget, &mut value, &mut witness) }, LdStatus::Ok);
    assert_eq!(value, 3);
    assert_eq!(unsafe { ld_realizer_mu(witness) }, 3);
    let mut mu = 0;
    assert_eq!(unsafe { ld_verify_local_realizer(p, witness, &mut mu) }, LdStatus::Ok);
    assert_eq!(mu, 3);

    let mut dim_witness = ptr::null_mut();
    assert_eq!(unsafe { ld_exact_dim(p, ptr::null(), &mut value, &mut dim_witness) }, LdStatus::Ok);
    assert_eq!(value, 4);
    assert_eq!(unsafe { ld_verify_local_realizer(p, dim_witness, ptr::null_mut()) }, LdStatus::Ok);

    let mut h2 = ptr::null_mut();
    assert_eq!(unsafe { ld_height2_local_realizer(p, &mut h2) }, LdStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { ld_realizer_to_text(h2, &mut text) }, LdStatus::Ok);
    let text = take(text);
    let c = CString::new(text.lines().take(2).collect::<Vec<_>>().join("\n")).unwrap();
    let mut partial = ptr::null_mut();
    assert_eq!(unsafe { ld_realizer_parse(c.as_ptr(), 8, &mut partial) }, LdStatus::Ok);
    assert_eq!(unsafe { ld_verify_local_realizer(p, partial, ptr::null_mut()) }, LdStatus::Violation);
    assert!(last_error().contains("no ple has"), "{}", last_error());
    unsafe {
        ld_realizer_free(witness);
        ld_realizer_free(dim_witness);
        ld_realizer_free(h2);
        ld_realizer_free(partial);
        ld_poset_free(p);
    }
}

#[test]
fn error_codes() {
    let bad = CString::new("poset 2\n1 < 3\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ld_poset_parse(bad.as_ptr(), &mut p) }, LdStatus::Parse);
    assert!(last_error().contains("line 2"));
    assert!(p.is_null());

    assert_eq!(unsafe { ld_poset_parse(ptr::null(), &mut p) }, LdStatus::NullPointer);
    let fam = CString::new("wheel").unwrap();
    assert_eq!(unsafe { ld_poset_generate(fam.as_ptr(), 3, &mut p) }, LdStatus::InvalidArgument);

    let s6 = generate("standard", 6);
    let mut value = 0;
    assert_eq!(unsafe { ld_exact_dim(s6, ptr::null(), &mut value, ptr::null_mut()) }, LdStatus::Budget);
    let tight = LdBudget { max_size: 12, node_limit: 3, time_limit_ms: 0 };
    assert_eq!(unsafe { ld_exact_ldim(s6, &tight, &mut value, ptr::null_mut()) }, LdStatus::Budget);

    let chain = generate("chain", 3);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { ld_height2_local_realizer(chain, &mut r) }, LdStatus::InvalidArgument);
    assert_eq!(unsafe { ld_exact_ldim(ptr::null(), ptr::null(), &mut value, ptr::null_mut()) }, LdStatus::NullPointer);

    let ok = generate("chain", 1);
    assert_eq!(last_error(), "");
    unsafe {
        ld_poset_free(s6);
        ld_poset_free(chain);
        ld_poset_free(ok);
        ld_poset_free(ptr::null_mut());
        ld_string_free(ptr::null_mut());
    }
}
