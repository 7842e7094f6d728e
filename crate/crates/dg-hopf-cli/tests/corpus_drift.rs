//! The shipped bundle files are generated artifacts: they must stay
//! byte-identical to what [`dg_hopf_cli::corpus::corpus_docs`] produces from
//! the library's own structure maps. When this test fails, rerun
//! `cargo run -p dg-hopf-cli --bin gen-corpus` and commit the result.

use dg_hopf_cli::bundle::serialize_bundle;
use dg_hopf_cli::corpus::corpus_docs;

#[test]
fn shipped_bundles_match_generated_documents() {
    let docs = corpus_docs();
    assert_eq!(docs.len(), 3, "the corpus ships exactly three bundles");
    for (name, doc) in docs {
        let path = format!("{}/bundles/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let shipped = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("cannot read shipped bundle {path}: {e}"));
        assert_eq!(
            shipped,
            serialize_bundle(&doc),
            "bundle `{name}` drifted from the library; \
             regenerate with `cargo run -p dg-hopf-cli --bin gen-corpus`"
        );
    }
}
