use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include").join("rsprocess.h")
}

#[test]
fn header_declares_the_exported_api() {
    let text = std::fs::read_to_string(header()).expect("generated header");
    for name in [
        "rsp_version",
        "rsp_last_error",
        "rsp_configuration_new",
        "rsp_sample_poisson_square",
        "rsp_configuration_free",
        "rsp_drs",
        "rsp_pair_diagram_at",
        "rsp_pair_line_at",
        "rsp_fdd",
        "rsp_dim_standard",
        "rsp_string_free",
        "RSP_STATUS_BUFFER_TOO_SMALL",
        "typedef struct RspPair RspPair",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(probe) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(probe.status.success());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"rsprocess.h\"\nint main(void) { RspPair *p = 0; rsp_pair_free(p); return RSP_STATUS_OK; }\n",
    )
    .unwrap();
    let inc = header().parent().unwrap().to_path_buf();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&inc)
        .arg(&src)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
