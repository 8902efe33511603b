//! Writing a map to canonical JSON and running the CLI on it.

use isoindex::cli::{parse_map, run, write_map};
use isoindex::{RingSpec, SkewBilinearMap};

fn main() {
    let q = RingSpec::rationals();
    let phi = SkewBilinearMap::symplectic(&q, 3);
    let text = write_map(&phi);
    assert_eq!(parse_map(&text).unwrap(), phi);

    let path = std::env::temp_dir().join("isoindex_genus3.json");
    std::fs::write(&path, &text).unwrap();
    let mut out = Vec::new();
    let code = run(["isoindex", "map", path.to_str().unwrap()], &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit {code}");

    let mut out = Vec::new();
    let code = run(["isoindex", "eval", "--ring", "GF(3)", "--brute-check", "--json", "Sg(2) x S(1)"], &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit {code}");
    let _ = std::fs::remove_file(path);
}
