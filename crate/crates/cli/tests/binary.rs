//! The installed `polar` binary: exit codes and stdout.

use std::process::Command;

fn polar(args: &[&str]) -> (i32, serde_json::Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_polar")).args(args).output().expect("spawn polar");
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?} printed {text:?}: {e}"));
    (out.status.code().unwrap(), value)
}

#[test]
fn exit_codes() {
    let (code, v) = polar(&["jnp", "(Y^2-X^3)^2-X^5*Y"]);
    assert_eq!(code, 0);
    assert_eq!(v["faces"][1]["q"], serde_json::json!([13, 2]));

    let (code, v) = polar(&["jnp-newton", "(Y^2-X^3)^2-X^5*Y"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("degenerate"));

    let (code, v) = polar(&["milnor", "2*Y^2-X^3"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("not 1"));

    let (code, v) = polar(&["mu", "Y^2 + Z"]);
    assert_eq!(code, 2);
    assert_eq!(v["position"], 6);

    let (code, _) = polar(&["tree", "/nonexistent/roots.json"]);
    assert_eq!(code, 2);

    let broken = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/broken.json");
    let (code, _) = polar(&["family", broken]);
    assert_eq!(code, 2);

    let (code, v) = polar(&["zseq", "4", "0", "13"]);
    assert_eq!(code, 1);
    assert!(v["error"].is_string());

    let (code, _) = polar(&["zseq"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_cleanly() {
    let out = Command::new(env!("CARGO_BIN_EXE_polar")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["diagram", "mu", "milnor", "jnp", "jnp-newton", "irreducible", "zseq", "tree", "family"] {
        assert!(text.contains(sub), "help lacks {sub}");
    }
}
