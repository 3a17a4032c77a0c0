//! Compiles a C program against the generated header and static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "localdim.h"

int main(void) {
    LdPoset *p = NULL;
    if (ld_poset_generate("standard", 5, &p) != LD_STATUS_OK) return 10;
    LdBudget budget = { 10, 0, 0 };
    size_t value = 0;
    LdRealizer *r = NULL;
    if (ld_exact_ldim(p, &budget, &value, &r) != LD_STATUS_OK) return 11;
    size_t mu = 0;
    if (ld_verify_local_realizer(p, r, &mu) != LD_STATUS_OK) return 12;
    LdPoset *bad = NULL;
    if (ld_poset_parse("poset 1\n1 < 2\n", &bad) != LD_STATUS_PARSE) return 13;
    if (strlen(ld_last_error_message()) == 0) return 14;
    printf("ldim %zu mu %zu\n", value, mu);
    ld_realizer_free(r);
    ld_poset_free(p);
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // The test binary lives in <target>/<profile>/deps.
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("liblocaldim_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c_abi");
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let exe = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler named `cc`");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ldim 3 mu 3\n");
}
