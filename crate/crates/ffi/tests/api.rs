use coxmatch_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { cox_string_free(p) };
    s
}

fn last_error() -> String {
    take_string(cox_last_error_message())
}

fn system(name: &str) -> *mut CoxSystem {
    let name = CString::new(name).unwrap();
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { cox_system_named(name.as_ptr(), &mut sys) }, CoxStatus::Ok);
    sys
}

fn interval(sys: *const CoxSystem, word: &str) -> *mut CoxInterval {
    let word = CString::new(word).unwrap();
    let mut iv = ptr::null_mut();
    assert_eq!(unsafe { cox_interval_build(sys, word.as_ptr(), &mut iv) }, CoxStatus::Ok);
    iv
}

#[test]
fn b2_top_has_eight_special_matchings() {
    let sys = system("B2");
    let iv = interval(sys, "s1-s2-s1-s2");
    unsafe {
        assert_eq!(cox_interval_len(iv), 8);
        let mut special = ptr::null_mut();
        assert_eq!(cox_special_matchings(iv, &mut special), CoxStatus::Ok);
        let mut from_systems = ptr::null_mut();
        assert_eq!(cox_system_matchings(iv, &mut from_systems), CoxStatus::Ok);
        assert_eq!(cox_matching_list_len(special), 8);
        assert_eq!(cox_matching_list_len(from_systems), 8);

        let mut pairing = [0usize; 8];
        for (u, slot) in pairing.iter_mut().enumerate() {
            assert_eq!(cox_matching_list_partner(special, 3, u, slot), CoxStatus::Ok);
        }
        let mut ok = false;
        assert_eq!(cox_matching_is_special(iv, pairing.as_ptr(), 8, &mut ok), CoxStatus::Ok);
        assert!(ok);

        let mut out = 0;
        assert_eq!(cox_matching_list_partner(special, 8, 0, &mut out), CoxStatus::IndexOutOfRange);
        assert_eq!(cox_matching_list_partner(special, 0, 8, &mut out), CoxStatus::IndexOutOfRange);

        let mut json = ptr::null_mut();
        assert_eq!(cox_matching_list_to_json(special, 0, &mut json), CoxStatus::Ok);
        assert!(take_string(json).contains("pairs"));

        cox_matching_list_free(special);
        cox_matching_list_free(from_systems);
        cox_interval_free(iv);
        cox_system_free(sys);
    }
}

#[test]
fn interval_queries() {
    let sys = system("A3");
    let iv = interval(sys, "s1-s2-s3");
    unsafe {
        assert_eq!(cox_interval_len(iv), 8);
        let word = CString::new("s3-s1").unwrap();
        let mut i = 0;
        assert_eq!(cox_interval_index_of(iv, word.as_ptr(), &mut i), CoxStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(cox_interval_element(iv, i, &mut s), CoxStatus::Ok);
        assert_eq!(take_string(s), "s1-s3");
        let mut r = 0;
        assert_eq!(cox_interval_rank_of(iv, i, &mut r), CoxStatus::Ok);
        assert_eq!(r, 2);
        let (mut top, mut le) = (0, false);
        assert_eq!(cox_interval_top(iv, &mut top), CoxStatus::Ok);
        assert_eq!(cox_interval_leq(iv, i, top, &mut le), CoxStatus::Ok);
        assert!(le);
        assert_eq!(cox_interval_leq(iv, top, i, &mut le), CoxStatus::Ok);
        assert!(!le);

        let outside = CString::new("s2-s1").unwrap();
        assert_eq!(cox_interval_index_of(iv, outside.as_ptr(), &mut i), CoxStatus::NotInInterval);

        let mut dot = ptr::null_mut();
        assert_eq!(cox_interval_to_dot(iv, &mut dot), CoxStatus::Ok);
        assert!(take_string(dot).contains("rankdir=BT"));

        let mut json = ptr::null_mut();
        assert_eq!(cox_interval_to_json(iv, &mut json), CoxStatus::Ok);
        let json = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(cox_interval_from_json(json.as_ptr(), &mut back), CoxStatus::Ok);
        assert_eq!(cox_interval_len(back), 8);
        cox_interval_free(back);
        cox_interval_free(iv);
        cox_system_free(sys);
    }
}

#[test]
fn matrix_systems() {
    // I2(∞) as a 2×2 matrix with 0 for ∞
    let entries = [1u32, 0, 0, 1];
    let mut sys = ptr::null_mut();
    unsafe {
        assert_eq!(cox_system_from_matrix(entries.as_ptr(), 2, &mut sys), CoxStatus::Ok);
        let iv = interval(sys, "s1-s2-s1-s2-s1");
        assert_eq!(cox_interval_len(iv), 10);
        cox_interval_free(iv);
        cox_system_free(sys);

        let asymmetric = [1u32, 3, 2, 1];
        assert_eq!(cox_system_from_matrix(asymmetric.as_ptr(), 2, &mut sys), CoxStatus::InvalidMatrix);
        assert!(last_error().contains("asymmetric"));
    }
}

#[test]
fn error_codes() {
    let sys = system("A2");
    unsafe {
        let mut iv = ptr::null_mut();
        let bad = CString::new("s1-x").unwrap();
        assert_eq!(cox_interval_build(sys, bad.as_ptr(), &mut iv), CoxStatus::Parse);
        assert!(iv.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(cox_interval_build(ptr::null(), bad.as_ptr(), &mut iv), CoxStatus::NullArgument);
        assert_eq!(cox_interval_build(sys, ptr::null(), &mut iv), CoxStatus::NullArgument);
        let ok = CString::new("s1").unwrap();
        assert_eq!(cox_interval_build(sys, ok.as_ptr(), ptr::null_mut()), CoxStatus::NullArgument);

        let invalid = [0xffu8, 0];
        assert_eq!(cox_interval_build(sys, invalid.as_ptr().cast(), &mut iv), CoxStatus::InvalidUtf8);

        let iv = interval(sys, "s1-s2-s1");
        let mut out = false;
        let not_involution = [1usize, 1, 2, 3, 4, 5];
        assert_eq!(cox_matching_is_special(iv, not_involution.as_ptr(), 6, &mut out), CoxStatus::NotAMatching);
        assert_eq!(cox_matching_is_special(iv, not_involution.as_ptr(), 5, &mut out), CoxStatus::NotAMatching);
        let mut r = 0;
        assert_eq!(cox_interval_rank_of(iv, 6, &mut r), CoxStatus::IndexOutOfRange);

        let mut name = ptr::null_mut();
        let unknown = CString::new("E8").unwrap();
        assert_eq!(cox_system_named(unknown.as_ptr(), &mut name), CoxStatus::Parse);

        cox_interval_free(iv);
        cox_system_free(sys);
        cox_system_free(ptr::null_mut());
        cox_string_free(ptr::null_mut());
        assert_eq!(cox_interval_len(ptr::null()), 0);
    }
}

#[test]
fn c_program_links_against_the_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/coxmatch.h");
    assert!(header.exists(), "header not generated");
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libcoxmatch_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let dir = work_dir();
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

fn work_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
