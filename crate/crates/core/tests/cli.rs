use std::path::PathBuf;
use std::process::{Command, Output};

use delzant::polyhedra::format::{read_lpoly, write_lpoly};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn delzant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delzant")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn pyramid_has_ten_points() {
    let o = delzant(&["polytope", "count", "--in", &data("pyramid.lpoly"), "-m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "10\n");
    let o = delzant(&["polytope", "count", "--in", &data("pyramid.lpoly"), "-m", "2", "--interior"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn induce_of_minus_rho_vanishes() {
    let o = delzant(&["weyl", "induce", "--type", "A1", "--mu", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn vergne_concludes_minus_chi_zero() {
    let o = delzant(&["verify", "vergne"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("conclusion: -chi_0"), "{out}");
    assert!(out.contains("vergne: pass"));
}

#[test]
fn desing_and_shift_output_reparses() {
    for sub in ["desing", "shift"] {
        let o = delzant(&["polytope", sub, "--in", &data("pyramid.lpoly")]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let p = read_lpoly(&text).expect("output parses");
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(write_lpoly(&p), body);
    }
}

#[test]
fn explicit_shift_is_applied() {
    let o = delzant(&["polytope", "shift", "--in", &data("pyramid.lpoly"), "--eta", "1/10,1/5,3/10,2/5,-1/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("label 0 0 1 ; -1/2"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "genus", "--seed", "5", "--count", "10"];
    let a = delzant(&args);
    let b = delzant(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "euler", "--type", "A2", "--lambda", "1/3,2/5", "--seed", "3"];
    assert_eq!(delzant(&args).stdout, delzant(&args).stdout);
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = std::env::temp_dir().join(format!("delzant-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.lpoly");
    std::fs::write(&bad, "dim 2\nlabel 1 0 ; 0\nlabel 1 x ; 0\n").unwrap();
    let o = delzant(&["polytope", "faces", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.lpoly") && err.contains("line 3"), "{err}");
    let o = delzant(&["polytope", "faces", "--in", dir.join("missing.lpoly").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.lpoly"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(delzant(&["weyl", "group", "--type", "E8"]).status.code(), Some(2));
    assert_eq!(delzant(&["polytope"]).status.code(), Some(2));
    assert_eq!(delzant(&["weyl", "wall", "--type", "A2", "--mu", "-1,0"]).status.code(), Some(2));
}

#[test]
fn glue_files() {
    for (delta, sub) in [("segment.lpoly", "segment_split.sub"), ("square.lpoly", "square_split.sub")] {
        let o = delzant(&["verify", "glue", "--delta", &data(delta), "--subdivision", &data(sub)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("glue: pass"));
    }
}

#[test]
fn every_subcommand_runs() {
    let pyramid = data("pyramid.lpoly");
    let triangle = data("weighted_triangle.lpoly");
    let square = data("square.lpoly");
    let split = data("square_split.sub");
    let runs: Vec<Vec<&str>> = vec![
        vec!["polytope", "faces", "--in", &triangle],
        vec!["polytope", "excess", "--in", &pyramid],
        vec!["polytope", "rr", "--in", &triangle, "-m", "-3"],
        vec!["polytope", "ehrhart", "--in", &triangle],
        vec!["polytope", "reciprocity", "--in", &pyramid, "--mmax", "4"],
        vec!["polytope", "brion", "--in", &square, "--z", "2/3,5/7"],
        vec!["polytope", "minimalize", "--in", &triangle],
        vec!["polytope", "orders", "--in", &triangle],
        vec!["weyl", "group", "--type", "G2"],
        vec!["weyl", "action", "--type", "B2", "--word", "1,2", "--mu", "1,-3"],
        vec!["weyl", "star", "--type", "A3", "--mu", "1,0,2"],
        vec!["weyl", "reflect", "--type", "A2", "--mu", "2,2"],
        vec!["weyl", "wall", "--type", "A3", "--mu", "0,2,0"],
        vec!["weyl", "principal", "--type", "A2", "--in", &triangle],
        vec!["verify", "dual-subdivision", "--type", "A2", "--lambda", "1/2,1/3"],
        vec!["verify", "clebsch-gordan"],
        vec!["verify", "quantum-dh", "--in", &triangle],
        vec!["verify", "euler", "--subdivision", &split],
    ];
    for args in runs {
        let o = delzant(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn brion_on_weighted_triangle_is_rejected() {
    // a vertex cone of index two
    let o = delzant(&["polytope", "brion", "--in", &data("weighted_triangle.lpoly"), "--z", "2/3,5/7"]);
    assert_eq!(o.status.code(), Some(2));
}
