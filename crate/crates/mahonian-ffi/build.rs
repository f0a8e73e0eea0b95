//! Generates `include/mahonian.h` from the public items in `src/lib.rs`
//! using cbindgen, configured by `cbindgen.toml`.

use std::env;
use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let crate_dir =
        PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("cargo sets CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include").join("mahonian.h");
    cbindgen::generate(&crate_dir)
        .expect("cbindgen parses this crate")
        .write_to_file(header);
}
