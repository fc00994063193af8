//! Exercises the C surface from Rust: status codes, ownership, buffer
//! protocols, and null handling.

use std::ffi::CStr;
use std::os::raw::c_char;
use std::ptr;

use affinesym_capi::*;

fn make(window: &[i64]) -> *mut AfsPerm {
    let mut out = ptr::null_mut();
    let status = unsafe { afs_perm_from_window(window.as_ptr(), window.len(), &mut out) };
    assert_eq!(status, AfsStatus::Ok);
    assert!(!out.is_null());
    out
}

#[test]
fn version_is_a_c_string() {
    let v = afs_version();
    assert!(!v.is_null());
    let text = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
    assert!(!text.is_empty());
}

#[test]
fn construct_query_free() {
    unsafe {
        let w = make(&[3, 2, 1]);
        let mut rank = 0usize;
        assert_eq!(afs_perm_rank(w, &mut rank), AfsStatus::Ok);
        assert_eq!(rank, 3);
        let mut len = 0usize;
        assert_eq!(afs_perm_length(w, &mut len), AfsStatus::Ok);
        assert_eq!(len, 3);
        let mut image = 0i64;
        assert_eq!(afs_perm_apply(w, 4, &mut image), AfsStatus::Ok);
        assert_eq!(image, 6);
        let mut window = [0i64; 3];
        assert_eq!(afs_perm_window(w, window.as_mut_ptr(), 3), AfsStatus::Ok);
        assert_eq!(window, [3, 2, 1]);
        afs_perm_free(w);
    }
}

#[test]
fn constructors_validate() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(afs_perm_identity(2, &mut out), AfsStatus::RankTooSmall);
        assert_eq!(afs_perm_generator(3, 5, &mut out), AfsStatus::IndexOutOfRange);
        let collision = [1i64, 1, 2];
        assert_eq!(
            afs_perm_from_window(collision.as_ptr(), 3, &mut out),
            AfsStatus::ResidueCollision
        );
        let bad_sum = [2i64, 3, 4];
        assert_eq!(
            afs_perm_from_window(bad_sum.as_ptr(), 3, &mut out),
            AfsStatus::WindowSum
        );
    }
}

#[test]
fn parse_and_format_round_trip() {
    unsafe {
        let mut out = ptr::null_mut();
        let text = b"[0,2,4]\0";
        assert_eq!(
            afs_perm_parse(text.as_ptr() as *const c_char, &mut out),
            AfsStatus::Ok
        );
        let mut needed = 0usize;
        assert_eq!(
            afs_perm_format(out, ptr::null_mut(), 0, &mut needed),
            AfsStatus::BufferTooSmall
        );
        assert_eq!(needed, 8);
        let mut buf = [0 as c_char; 16];
        assert_eq!(
            afs_perm_format(out, buf.as_mut_ptr(), buf.len(), &mut needed),
            AfsStatus::Ok
        );
        let text = CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
        assert_eq!(text, "[0,2,4]");
        afs_perm_free(out);

        let garbage = b"oops\0";
        let mut out2 = ptr::null_mut();
        assert_eq!(
            afs_perm_parse(garbage.as_ptr() as *const c_char, &mut out2),
            AfsStatus::ParseError
        );
    }
}

#[test]
fn group_operations() {
    unsafe {
        let mut s1 = ptr::null_mut();
        let mut s2 = ptr::null_mut();
        assert_eq!(afs_perm_generator(3, 1, &mut s1), AfsStatus::Ok);
        assert_eq!(afs_perm_generator(3, 2, &mut s2), AfsStatus::Ok);
        let mut prod = ptr::null_mut();
        assert_eq!(afs_perm_compose(s1, s2, &mut prod), AfsStatus::Ok);
        let mut window = [0i64; 3];
        assert_eq!(afs_perm_window(prod, window.as_mut_ptr(), 3), AfsStatus::Ok);
        assert_eq!(window, [2, 3, 1]);

        let mut inv = ptr::null_mut();
        assert_eq!(afs_perm_inverse(prod, &mut inv), AfsStatus::Ok);
        let mut round = ptr::null_mut();
        assert_eq!(afs_perm_compose(prod, inv, &mut round), AfsStatus::Ok);
        let mut id = ptr::null_mut();
        assert_eq!(afs_perm_identity(3, &mut id), AfsStatus::Ok);
        let mut equal = false;
        assert_eq!(afs_perm_equal(round, id, &mut equal), AfsStatus::Ok);
        assert!(equal);

        let mut other = ptr::null_mut();
        assert_eq!(afs_perm_identity(4, &mut other), AfsStatus::Ok);
        let mut bad = ptr::null_mut();
        assert_eq!(afs_perm_compose(s1, other, &mut bad), AfsStatus::RankMismatch);

        for p in [s1, s2, prod, inv, round, id, other] {
            afs_perm_free(p);
        }
    }
}

#[test]
fn word_and_predicates() {
    unsafe {
        let w = make(&[3, 2, 1]);
        let mut needed = 0usize;
        assert_eq!(
            afs_perm_canonical_word(w, ptr::null_mut(), 0, &mut needed),
            AfsStatus::BufferTooSmall
        );
        assert_eq!(needed, 3);
        let mut letters = [0usize; 8];
        assert_eq!(
            afs_perm_canonical_word(w, letters.as_mut_ptr(), letters.len(), &mut needed),
            AfsStatus::Ok
        );
        assert_eq!(&letters[..needed], &[1, 2, 1]);

        let mut fc = true;
        assert_eq!(afs_perm_is_fully_commutative(w, &mut fc), AfsStatus::Ok);
        assert!(!fc);
        assert_eq!(afs_perm_is_321_avoiding(w, &mut fc), AfsStatus::Ok);
        assert!(!fc);
        assert_eq!(afs_perm_pair_criterion(w, &mut fc), AfsStatus::Ok);
        assert!(!fc);
        assert_eq!(afs_perm_root_criterion(w, &mut fc), AfsStatus::Ok);
        assert!(!fc);

        let (mut a, mut b, mut c) = (0i64, 0i64, 0i64);
        let mut found = false;
        assert_eq!(
            afs_perm_find_321(w, &mut a, &mut b, &mut c, &mut found),
            AfsStatus::Ok
        );
        assert!(found);
        assert_eq!((a, b, c), (1, 2, 3));

        let mut descent = false;
        assert_eq!(afs_perm_is_right_descent(w, 1, &mut descent), AfsStatus::Ok);
        assert!(descent);
        assert_eq!(
            afs_perm_is_right_descent(w, 9, &mut descent),
            AfsStatus::IndexOutOfRange
        );
        afs_perm_free(w);

        let id = make(&[1, 2, 3]);
        assert_eq!(afs_perm_canonical_word(id, ptr::null_mut(), 0, &mut needed), AfsStatus::Ok);
        assert_eq!(needed, 0);
        assert_eq!(afs_perm_find_321(id, &mut a, &mut b, &mut c, &mut found), AfsStatus::Ok);
        assert!(!found);
        afs_perm_free(id);
    }
}

#[test]
fn sigma_buffer_protocol() {
    unsafe {
        let w = make(&[2, 1, 3]);
        let mut needed = 0usize;
        assert_eq!(afs_perm_sigma(w, ptr::null_mut(), 0, &mut needed), AfsStatus::BufferTooSmall);
        assert_eq!(needed, 2);
        let mut parts = [0u32; 4];
        assert_eq!(afs_perm_sigma(w, parts.as_mut_ptr(), parts.len(), &mut needed), AfsStatus::Ok);
        assert_eq!(&parts[..needed], &[2, 1]);
        afs_perm_free(w);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(afs_perm_parse(ptr::null(), &mut out), AfsStatus::NullPointer);
        assert_eq!(afs_perm_from_window(ptr::null(), 3, &mut out), AfsStatus::NullPointer);
        let mut rank = 0usize;
        assert_eq!(afs_perm_rank(ptr::null(), &mut rank), AfsStatus::NullPointer);
        let w = make(&[1, 2, 3]);
        assert_eq!(afs_perm_rank(w, ptr::null_mut()), AfsStatus::NullPointer);
        assert_eq!(afs_perm_identity(3, ptr::null_mut()), AfsStatus::NullPointer);
        afs_perm_free(ptr::null_mut());
        afs_ext_free(ptr::null_mut());
        afs_perm_free(w);
    }
}

#[test]
fn extended_surface() {
    unsafe {
        let mut rho = ptr::null_mut();
        assert_eq!(afs_ext_rho(3, &mut rho), AfsStatus::Ok);
        let mut shift = 0i64;
        assert_eq!(afs_ext_shift(rho, &mut shift), AfsStatus::Ok);
        assert_eq!(shift, 1);
        let mut window = [0i64; 3];
        assert_eq!(afs_ext_window(rho, window.as_mut_ptr(), 3), AfsStatus::Ok);
        assert_eq!(window, [2, 3, 4]);

        let values = [5i64, 4, 3];
        let mut u = ptr::null_mut();
        assert_eq!(afs_ext_from_window(values.as_ptr(), 3, &mut u), AfsStatus::Ok);
        assert_eq!(afs_ext_shift(u, &mut shift), AfsStatus::Ok);
        assert_eq!(shift, 2);
        let mut body = ptr::null_mut();
        assert_eq!(afs_ext_body(u, &mut body), AfsStatus::Ok);
        let mut body_window = [0i64; 3];
        assert_eq!(afs_perm_window(body, body_window.as_mut_ptr(), 3), AfsStatus::Ok);
        assert_eq!(body_window, [3, 2, 1]);
        let mut len = 0usize;
        assert_eq!(afs_ext_length(u, &mut len), AfsStatus::Ok);
        assert_eq!(len, 3);
        let mut fc = true;
        assert_eq!(afs_ext_is_321_avoiding(u, &mut fc), AfsStatus::Ok);
        assert!(!fc);
        assert_eq!(afs_ext_is_fully_commutative(u, &mut fc), AfsStatus::Ok);
        assert!(!fc);

        // rho * rho^-1 is the identity.
        let mut rho_inv = ptr::null_mut();
        assert_eq!(afs_ext_inverse(rho, &mut rho_inv), AfsStatus::Ok);
        let mut prod = ptr::null_mut();
        assert_eq!(afs_ext_compose(rho, rho_inv, &mut prod), AfsStatus::Ok);
        let mut id = ptr::null_mut();
        assert_eq!(afs_ext_identity(3, &mut id), AfsStatus::Ok);
        let mut equal = false;
        assert_eq!(afs_ext_equal(prod, id, &mut equal), AfsStatus::Ok);
        assert!(equal);

        // Rebuild from parts.
        let mut rebuilt = ptr::null_mut();
        assert_eq!(afs_ext_from_parts(2, body, &mut rebuilt), AfsStatus::Ok);
        assert_eq!(afs_ext_equal(rebuilt, u, &mut equal), AfsStatus::Ok);
        assert!(equal);

        afs_perm_free(body);
        for e in [rho, rho_inv, u, prod, id, rebuilt] {
            afs_ext_free(e);
        }
    }
}
