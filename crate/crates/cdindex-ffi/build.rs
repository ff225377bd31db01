use std::path::Path;

fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("set by cargo");
    let header = Path::new(&crate_dir).join("include").join("cdindex.h");
    cbindgen::generate(&crate_dir)
        .expect("the C header generates from the public API")
        .write_to_file(header);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
