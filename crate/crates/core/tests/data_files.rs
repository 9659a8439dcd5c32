//! The shipped `data/machines/*.tm` files are the stock builders written
//! out; set `TAPELAB_REGEN=1` to rewrite them after changing a builder.

use std::path::PathBuf;

use tapelab::machine::{parse_machine, write_machine};
use tapelab::machines::catalog;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/machines")
}

#[test]
fn machine_files_match_builders() {
    let regen = std::env::var_os("TAPELAB_REGEN").is_some();
    for (name, m) in catalog() {
        let path = dir().join(format!("{name}.tm"));
        let text = write_machine(&m);
        if regen {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name}.tm is out of date");
        assert_eq!(parse_machine(&on_disk).unwrap().canonicalize(), m.canonicalize(), "{name}.tm does not read back");
    }
}

#[test]
fn bundled_specs_load() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    for e in std::fs::read_dir(root.join("enumerators")).unwrap() {
        let p = e.unwrap().path();
        tapelab::enumerate::load_enumerator(&p).unwrap_or_else(|e| panic!("{e}"));
    }
    let chain: Vec<_> = tapelab::oracle::jump_oracles(1, 200).into_iter().skip(1).collect();
    for e in std::fs::read_dir(root.join("suites")).unwrap() {
        let p = e.unwrap().path();
        tapelab::relations::load_suite(&p, &chain).unwrap_or_else(|e| panic!("{e}"));
    }
}
