// Every example must run to completion. `cargo test` builds the examples
// next to this test binary, in `<target>/<profile>/examples`.

use std::path::PathBuf;
use std::process::Command;

fn example_binary(name: &str) -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|deps| deps.parent()).unwrap();
    profile_dir.join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str) {
    let bin = example_binary(name);
    assert!(bin.exists(), "{} not built; run through `cargo test`", bin.display());
    let out = Command::new(&bin).env_remove("ISOINDEX_BUDGET").output().unwrap();
    assert!(out.status.success(), "{name} failed:\n{}", String::from_utf8_lossy(&out.stderr));
    assert!(!out.stdout.is_empty(), "{name} printed nothing");
}

macro_rules! examples {
    ($($name:ident),*) => {
        $(
            #[test]
            fn $name() {
                run(stringify!($name));
            }
        )*
    };
}

examples!(
    exact_linear_algebra,
    skew_maps,
    rank_sets,
    scalar_extension,
    manifold_eval,
    bounds,
    realize,
    rank_set_realization,
    map_file
);
