use std::process::{Command, Output};

fn patcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patcount")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count_json_shape() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    std::fs::write(&f, "# nine points\n1 3 6\n5,4,8\n2 7 9\n").unwrap();
    let o = patcount(&["count", "--pattern", "1324", "--input", f.to_str().unwrap(), "--epsilon", "0.1", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["mode"], "approx");
    assert_eq!(v["epsilon"], 0.1);
    assert_eq!(v["n"], 9);
    let c = v["count"].as_f64().unwrap();
    assert!(c <= 32.0 && 32.0 <= 1.1 * c);
}

#[test]
fn exact_counts() {
    let id: Vec<String> = (1..=10).map(|i| i.to_string()).collect();
    let o = patcount(&["count", "--pattern", "12345", "--seq", &id.join(" "), "--exact", "--json"]);
    assert_eq!(json(&o)["count"], 252);
    let o = patcount(&["count", "--pattern", "21", "--seq", "2 1", "--exact"]);
    assert!(stdout(&o).starts_with("count: 1\n"));
    assert!(stdout(&o).contains("mode: exact"));
}

#[test]
fn output_is_deterministic() {
    let args = ["count", "--pattern", "24135", "--random", "60,7", "--json"];
    let a = patcount(&args);
    let b = patcount(&["--threads", "1", "count", "--pattern", "24135", "--random", "60,7", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_lists_positions() {
    let o = patcount(&["enumerate", "--pattern", "2413", "--seq", "2 4 1 3", "--t", "5"]);
    assert_eq!(stdout(&o), "1,2,3,4\n");
    let o = patcount(&["enumerate", "--pattern", "12", "--seq", "1 2 3 4", "--json"]);
    let v = json(&o);
    assert_eq!(v["copies"].as_array().unwrap().len(), 6);
    assert_eq!(v["emitted"], 6);
    let o = patcount(&["enumerate", "--pattern", "12", "--seq", "1 2 3 4", "--t", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        vec!["count"],
        vec!["count", "--pattern", "1324", "--seq", "1 1"],
        vec!["count", "--pattern", "1324", "--seq", "1 x 3"],
        vec!["count", "--pattern", "123456", "--seq", "1 2"],
        vec!["count", "--pattern", "12", "--seq", "1 2", "--epsilon", "1.5"],
        vec!["count", "--pattern", "12", "--random", "ten,1"],
        vec!["enumerate", "--pattern", "12", "--seq", "1 2", "--t", "many"],
        vec!["range12", "--rect", "1,2,3", "--seq", "1 2"],
    ] {
        let o = patcount(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn ties_can_be_broken_by_index() {
    let o = patcount(&["count", "--pattern", "12", "--seq", "5 5 5", "--break-ties", "index", "--exact"]);
    assert!(stdout(&o).starts_with("count: 3\n"));
}

#[test]
fn range_counts() {
    let o = patcount(&["range12", "--rect", "1,1,8,8", "--seq", "1 2 3 4 5 6 7 8", "--exact", "--json"]);
    assert_eq!(json(&o)["count"], 28);
    let o = patcount(&["range12", "--rect", "1,1,4,4", "--seq", "4 3 2 1", "--decreasing", "--exact", "--json"]);
    assert_eq!(json(&o)["count"], 6);
    let o = patcount(&["range12", "--rect", "2,1,3,4", "--seq", "4 3 2 1", "--exact", "--json"]);
    assert_eq!(json(&o)["count"], 0);
}

#[test]
fn recipes_generate_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.txt");
    let o = patcount(&["recipes", "generate", "--out", f.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.contains("1|3524, horizontal below2 ---> FACTOR 2413\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1920);
    let o = patcount(&["recipes", "check", "--file", f.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("ok: 1920 cases"));

    std::fs::write(&f, "12|345, horizontal below3 ---> 1, 2, 3, 4, 5\n").unwrap();
    let o = patcount(&["recipes", "check", "--file", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_quick_passes() {
    let o = patcount(&["selftest", "--quick"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("selftest passed\n"));
}

#[test]
fn bench_csv() {
    let o = patcount(&["bench", "--sizes", "2^6,2^7", "--pattern", "2413"]);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "pattern,n,epsilon,seed,seconds,estimate,time_ratio");
    assert!(rows[1].starts_with("2413,64,"));
    assert!(rows[2].starts_with("2413,128,"));
    let o = patcount(&["bench", "--suite", "accuracy", "--sizes", "30", "--pattern", "2413,13524"]);
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}
