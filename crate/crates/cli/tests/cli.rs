use std::path::Path;
use std::process::{Command, Output};

fn irregular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irregular")).args(args).output().expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn cubic_solve_then_verify_k4() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.g");
    let h = dir.path().join("k4.h");
    assert!(irregular(&["gen", "--family", "k4", "--out", p(&g)]).status.success());
    let o = irregular(&["solve", "--algo", "cubic", "--input", p(&g), "--output", p(&h)]);
    assert!(o.status.success(), "{o:?}");
    let o = irregular(&["verify", "--graph", p(&g), "--subgraph", p(&h), "--expect-state", "state0"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).ends_with("scale 4\n"));
}

#[test]
fn oracle_on_k33() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k33.g");
    assert!(irregular(&["gen", "--family", "kdd:3", "--out", p(&g)]).status.success());
    let o = irregular(&["oracle", "--input", p(&g)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("best 6\n"));
    let o = irregular(&["oracle", "--input", p(&g), "--predicate", "state0"]);
    assert!(stdout(&o).starts_with("found\n"));
}

#[test]
fn bad_subgraph_fails_norm_check() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    let h = dir.path().join("h");
    assert!(irregular(&["gen", "--family", "random:100:3:1", "--out", p(&g)]).status.success());
    // empty subgraph: every vertex has degree 0, |ã_0| = 3n
    std::fs::write(&h, "s 0\n\n").unwrap();
    let o = irregular(&["verify", "--graph", p(&g), "--subgraph", p(&h), "--expect-state", "norm:8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error verify"));
}

#[test]
fn general_output_passes_its_bound() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    let h = dir.path().join("h");
    assert!(irregular(&["gen", "--family", "random:60:4:3", "--out", p(&g)]).status.success());
    for init in ["empty", "full", "random:5"] {
        let o = irregular(&[
            "solve", "--algo", "general", "--input", p(&g), "--init", init, "--output", p(&h),
        ]);
        assert!(o.status.success(), "{o:?}");
        // 2d²(d+1) = 160
        let o = irregular(&["verify", "--graph", p(&g), "--subgraph", p(&h), "--expect-state", "norm:160"]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn cubic_rejects_other_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    let h = dir.path().join("h");
    assert!(irregular(&["gen", "--family", "cycle:6", "--out", p(&g)]).status.success());
    let o = irregular(&["solve", "--algo", "cubic", "--input", p(&g), "--output", p(&h)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error NotCubic"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    std::fs::write(&g, "p mgraph 2 1\ne 0 0\n").unwrap();
    let o = irregular(&["oracle", "--input", p(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr), "error Parse line 2: loop at vertex 0\n");
    assert_eq!(irregular(&["solve"]).status.code(), Some(2));
}

#[test]
fn strength_on_doubled_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("c3");
    let h = dir.path().join("h");
    assert!(irregular(&["gen", "--family", "cycle:3", "--out", p(&base)]).status.success());
    std::fs::write(&h, "s 3\n0 1 4\n").unwrap();
    let o = irregular(&["strength", "--base", p(&base), "--s", "2", "--subgraph", p(&h)]);
    assert!(o.status.success(), "{o:?}");
    assert_eq!(
        stdout(&o),
        "w 0 3\nw 1 1\nw 2 2\nwdeg 0 5\nwdeg 1 4\nwdeg 2 3\ndistinct yes\n"
    );
}

#[test]
fn bench_csv_is_deterministic_apart_from_time() {
    let run = || {
        let o = irregular(&["bench", "--algo", "cubic", "--sizes", "100,200", "--seeds", "2"]);
        assert!(o.status.success());
        stdout(&o)
            .lines()
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                format!("{},{}", f[0], f[2])
            })
            .collect::<Vec<_>>()
    };
    let a = run();
    assert_eq!(a.len(), 5);
    assert_eq!(a[0], "n,toggles");
    assert_eq!(a, run());
}

#[test]
fn gen_blow_up_and_copies() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    let o = irregular(&["gen", "--family", "cycle:4", "--copies", "2", "--out", p(&g)]);
    assert_eq!(stdout(&o), "n 8 m 8\n");
    let o = irregular(&["gen", "--family", "kdd:3", "--blow-up", "2", "--out", p(&g)]);
    assert_eq!(stdout(&o), "n 6 m 18\n");
    let text = std::fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("p mgraph 6 18\ne 0 3\ne 0 3\n"));
}
