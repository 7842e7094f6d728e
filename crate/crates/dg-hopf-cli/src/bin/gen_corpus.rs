//! Regenerate the shipped corpus bundle files from the library's corpus
//! constructors. The `corpus_drift` integration test asserts the files in
//! the repository match this output byte for byte.

use dg_hopf_cli::bundle::serialize_bundle;
use dg_hopf_cli::corpus::corpus_docs;
use std::path::Path;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("bundles");
    std::fs::create_dir_all(&dir).expect("create bundles directory");
    for (name, doc) in corpus_docs() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serialize_bundle(&doc)).expect("write bundle file");
        println!("wrote {}", path.display());
    }
}
