use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn first_line(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .next()
        .unwrap_or_default()
        .to_string()
}

#[test]
fn documented_text_results() {
    assert_eq!(
        first_line(&["twist", "--on", "1/4", "--along", "1/2", "--sign", "+1"]),
        "inf"
    );
    assert_eq!(
        first_line(&["twist", "--on", "2/3", "--along", "2/3", "--sign", "-1"]),
        "2/3"
    );
    assert_eq!(
        first_line(&["twist", "--on", "-7/3", "--along", "-2/1", "--sign", "+1", "--count", "3"]),
        "inf"
    );
    assert_eq!(
        first_line(&["classify", "--slope", "-2/3", "--n", "-1", "--a", "-1/4"]),
        "-2/3: NotLocallyRealizable"
    );
    assert_eq!(
        first_line(&["classify", "--slope", "-3/2", "--n", "-1", "--a", "-1/4"]),
        "-3/2: LegendrianRealizable"
    );
    assert_eq!(
        first_line(&["classify", "--slope", "-5/11", "--n", "-1", "--a", "-1/4"]),
        "-5/11: Unknown"
    );
    assert_eq!(
        first_line(&["family", "status", "--n", "3", "--k1", "2", "--k2", "2"]),
        "UniversallyTight"
    );
    assert_eq!(
        first_line(&["family", "status", "--n", "3", "--k1", "2", "--k2", "2", "--capped"]),
        "Overtwisted"
    );
    assert_eq!(
        first_line(&[
            "braid",
            "components",
            "--word",
            "( s1 s2^-1 s3 ( s1 s2 )^-6 )^1"
        ]),
        "1"
    );
    assert_eq!(
        first_line(&["braid", "det", "--word", "s1^3", "--strands", "2"]),
        "3"
    );
    assert_eq!(
        first_line(&["braid", "components", "--word", "", "--strands", "4"]),
        "4"
    );
}

#[test]
fn reduce_text_ends_at_the_meridian() {
    let out = run(&["reduce", "--slope", "-7/3", "--n", "-1", "--a", "-1/4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("trace: -7/3 -> -5/2 -> -3/1 -> inf"),
        "{text}"
    );
    assert!(text.contains("verified: true"));
}

#[test]
fn exit_codes_and_stderr() {
    let out = run(&["reduce", "--slope", "-1/2", "--n", "-1", "--a", "-1/4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error (hypothesis):"));
    assert!(out.stdout.is_empty());

    let out = run(&["twist", "--on", "1/0/2", "--along", "1", "--sign", "+1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["twist", "--on", "1", "--along", "1", "--sign", "+2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "openbook",
        "homology",
        "--surface",
        "/nonexistent/surface.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["openbook", "homology", "--surface", "T", "--word", "a zz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn surface_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("twistcalc-surface-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("annulus.json");
    std::fs::write(
        &path,
        twistcalc::open_books::builtin_surface_json("annulus").unwrap(),
    )
    .unwrap();
    let from_file = run(&[
        "--json",
        "openbook",
        "homology",
        "--surface",
        path.to_str().unwrap(),
        "--word",
        "gamma^-7",
    ]);
    let builtin = run(&[
        "--json",
        "openbook",
        "homology",
        "--surface",
        "annulus",
        "--word",
        "gamma^-7",
    ]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, builtin.stdout);
    std::fs::remove_dir_all(&dir).ok();
}
