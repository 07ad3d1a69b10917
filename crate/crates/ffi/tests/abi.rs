use std::ffi::{CStr, CString};
use std::ptr;

use rsprocess_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(rsp_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn configuration_round_trip_through_handles() {
    let xs = [0.1, 0.5, 0.8];
    let ys = [0.7, 0.2, 0.9];
    let mut cfg = ptr::null_mut();
    unsafe {
        assert_eq!(rsp_configuration_new(1.0, xs.as_ptr(), ys.as_ptr(), 3, &mut cfg), RspStatus::Ok);
        let mut n = 0;
        assert_eq!(rsp_configuration_len(cfg, &mut n), RspStatus::Ok);
        assert_eq!(n, 3);
        let (mut ox, mut oy) = ([0.0; 3], [0.0; 3]);
        assert_eq!(rsp_configuration_points(cfg, ox.as_mut_ptr(), oy.as_mut_ptr(), 3), RspStatus::Ok);
        assert_eq!(ox, xs);
        assert_eq!(oy, ys);
        assert_eq!(rsp_configuration_points(cfg, ox.as_mut_ptr(), oy.as_mut_ptr(), 2), RspStatus::BufferTooSmall);

        let mut pair = ptr::null_mut();
        assert_eq!(rsp_drs(cfg, &mut pair), RspStatus::Ok);
        let mut size = 0;
        assert_eq!(rsp_pair_size(pair, &mut size), RspStatus::Ok);
        assert_eq!(size, 3);
        let mut rows = [0u32; 4];
        let mut len = 0;
        assert_eq!(rsp_pair_diagram_at(pair, 0.0, rows.as_mut_ptr(), 4, &mut len), RspStatus::Ok);
        assert_eq!(&rows[..len], &[2, 1]);
        assert_eq!(rsp_pair_diagram_at(pair, 0.0, rows.as_mut_ptr(), 1, &mut len), RspStatus::BufferTooSmall);
        assert_eq!(len, 2);
        assert_eq!(rsp_pair_diagram_at(pair, 2.0, rows.as_mut_ptr(), 4, &mut len), RspStatus::OutOfRange);
        assert!(last_error().contains("outside"));
        let mut v = 0;
        assert_eq!(rsp_pair_line_at(pair, 1, 0.0, &mut v), RspStatus::Ok);
        assert_eq!(v, 1);
        rsp_pair_free(pair);
        rsp_configuration_free(cfg);
    }
}

#[test]
fn invalid_inputs_report_status() {
    let xs = [0.1, 0.1];
    let ys = [0.2, 0.3];
    let mut cfg = ptr::null_mut();
    unsafe {
        assert_eq!(rsp_configuration_new(1.0, xs.as_ptr(), ys.as_ptr(), 2, &mut cfg), RspStatus::InvalidArgument);
        assert!(last_error().contains("duplicate"));
        assert_eq!(rsp_configuration_new(1.0, ptr::null(), ptr::null(), 1, &mut cfg), RspStatus::NullPointer);
        assert_eq!(rsp_drs(ptr::null(), ptr::null_mut()), RspStatus::NullPointer);
        rsp_configuration_free(ptr::null_mut());
        rsp_pair_free(ptr::null_mut());
        rsp_string_free(ptr::null_mut());
    }
}

#[test]
fn sampling_is_seeded() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(rsp_sample_poisson_square(3.0, 7, 1, &mut a), RspStatus::Ok);
        assert_eq!(rsp_sample_poisson_square(3.0, 7, 1, &mut b), RspStatus::Ok);
        let (mut na, mut nb) = (0, 0);
        rsp_configuration_len(a, &mut na);
        rsp_configuration_len(b, &mut nb);
        assert_eq!(na, nb);
        let mut xa = vec![0.0; na];
        let mut ya = vec![0.0; na];
        let mut xb = vec![0.0; nb];
        let mut yb = vec![0.0; nb];
        rsp_configuration_points(a, xa.as_mut_ptr(), ya.as_mut_ptr(), na);
        rsp_configuration_points(b, xb.as_mut_ptr(), yb.as_mut_ptr(), nb);
        assert_eq!((xa, ya), (xb, yb));
        rsp_configuration_free(a);
        rsp_configuration_free(b);
        let mut c = ptr::null_mut();
        assert_eq!(rsp_sample_poisson_square(-1.0, 0, 0, &mut c), RspStatus::InvalidArgument);
    }
}

#[test]
fn probabilities_and_counts() {
    unsafe {
        let q = CString::new(r#"{"theta":1,"pins":[{"time":-0.5,"diagram":[1]},{"time":0,"diagram":[1]}]}"#).unwrap();
        let (mut ln, mut p) = (0.0, 0.0);
        assert_eq!(rsp_fdd(q.as_ptr(), &mut ln, &mut p), RspStatus::Ok);
        assert!((p - 0.5 * (-1f64).exp()).abs() < 1e-15);
        assert!((ln - p.ln()).abs() < 1e-12);
        let bad = CString::new("{not json").unwrap();
        assert_eq!(rsp_fdd(bad.as_ptr(), &mut ln, &mut p), RspStatus::ParseError);
        let missing_zero = CString::new(r#"{"theta":1,"pins":[{"time":0.5,"diagram":[]}]}"#).unwrap();
        assert_eq!(rsp_fdd(missing_zero.as_ptr(), &mut ln, &mut p), RspStatus::ParseError);

        let rows = [1u32];
        assert_eq!(rsp_poissonized_plancherel(rows.as_ptr(), 1, 1.0, &mut ln), RspStatus::Ok);
        assert!((ln + 1.0).abs() < 1e-15);
        assert_eq!(rsp_poissonized_plancherel(ptr::null(), 0, 1.0, &mut ln), RspStatus::Ok);
        assert!((ln + 1.0).abs() < 1e-15);

        let rows = [4u32, 3, 2, 1];
        let mut s = ptr::null_mut();
        assert_eq!(rsp_dim_standard(rows.as_ptr(), 4, &mut s), RspStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "768");
        rsp_string_free(s);
        let bad_rows = [1u32, 2];
        assert_eq!(rsp_dim_standard(bad_rows.as_ptr(), 2, &mut s), RspStatus::InvalidArgument);
        assert_eq!(CStr::from_ptr(rsp_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
