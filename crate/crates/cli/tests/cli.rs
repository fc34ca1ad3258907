use std::f64::consts::PI;
use std::process::{Command, Output};

fn oscinfo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscinfo")).args(args).output().expect("spawn oscinfo")
}

fn stdout(args: &[&str]) -> String {
    let out = oscinfo(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

struct Csv {
    config: serde_json::Value,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
    trailer: Vec<(String, f64)>,
}

impl Csv {
    fn parse(text: &str) -> Self {
        let mut lines = text.lines();
        let config = lines.next().unwrap().strip_prefix("# config: ").expect("config line");
        let columns = lines.next().unwrap().split(',').map(String::from).collect();
        let (mut rows, mut trailer) = (Vec::new(), Vec::new());
        for line in lines {
            if let Some(rest) = line.strip_prefix("# ") {
                let (k, v) = rest.split_once(',').unwrap();
                trailer.push((k.to_string(), v.parse().unwrap()));
            } else {
                rows.push(line.split(',').map(|c| c.parse().unwrap()).collect());
            }
        }
        Self { config: serde_json::from_str(config).unwrap(), columns, rows, trailer }
    }

    fn column(&self, name: &str) -> Vec<f64> {
        let i = self.columns.iter().position(|c| c == name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[i]).collect()
    }

    fn trailer(&self, name: &str) -> f64 {
        self.trailer.iter().find(|(k, _)| k == name).unwrap().1
    }
}

fn run(args: &[&str]) -> Csv {
    Csv::parse(&stdout(args))
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["depth-sweep", "--sweep", "omega-c"][..],
        &["quench", "--grid", "0:5:51"],
        &["transport", "--protocol", "sudden,smooth"],
        &["sync-sweep"],
    ] {
        assert_eq!(oscinfo(args).stdout, oscinfo(args).stdout, "{args:?}");
    }
}

#[test]
fn uncoupled_reference_has_zero_depth() {
    let csv = run(&["depth-sweep", "--sweep", "g", "--grid", "0:0.001:2", "--omega1", "1.3", "--omega2", "1.3", "--omega-c", "0", "--omega-r", "1.3"]);
    assert_eq!(csv.column("depth")[0], 0.0);
    assert!(csv.column("field_limit_diag")[0].is_nan());
}

#[test]
fn depth_grows_with_small_coupling() {
    let csv = run(&["depth-sweep"]);
    assert_eq!(csv.columns, ["g", "depth", "weak_limit_diag", "field_limit_diag"]);
    assert_eq!(csv.rows.len(), 51);
    assert!(csv.column("depth").windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn depth_approaches_field_log() {
    let csv = run(&["depth-sweep", "--sweep", "omega-c", "--g", "0.5", "--grid", "50:200:4"]);
    for (d, est) in csv.column("depth").iter().zip(csv.column("field_limit_diag")) {
        assert!((d - est).abs() / d < 0.05);
    }
}

#[test]
fn no_op_quench_is_static() {
    let csv = run(&["quench", "--g", "0", "--omega-c", "0", "--omega-i1", "1.1", "--omega-f1", "1.1", "--omega-i2", "0.9", "--omega-f2", "0.9", "--grid", "0:5:26"]);
    for col in ["S_c", "I", "depth", "h1", "h2"] {
        let v = csv.column(col);
        assert!(v.iter().all(|x| (x - v[0]).abs() < 1e-9), "{col} varies");
    }
    assert!((csv.column("h1")[0] - 1.0).abs() < 1e-12);
}

#[test]
fn faster_field_raises_mean_mutual_information() {
    let mean_i = |wc: &str| run(&["quench", "--g", "1", "--omega-c", wc, "--grid", "0:20:401"]).trailer("mean_I");
    assert!(mean_i("3") > mean_i("1"));
}

#[test]
fn quench_trailer_matches_columns() {
    let csv = run(&["quench", "--grid", "0:4:81"]);
    let sc = csv.column("S_c");
    let trap: f64 = sc.windows(2).map(|w| 0.5 * (w[0] + w[1]) * 0.05).sum::<f64>() / 4.0;
    assert!((csv.trailer("mean_S_c") - trap).abs() < 1e-9);
}

#[test]
fn sudden_transport_peaks_at_eight() {
    let grid = format!("0:{}:401", 2.0 * PI);
    let csv = run(&["transport", "--protocol", "sudden", "--grid", &grid]);
    let q = csv.column("sudden_Q");
    let (k, peak) = q.iter().enumerate().fold((0, 0.0), |a, (i, &v)| if v > a.1 { (i, v) } else { a });
    assert!((peak - 8.0).abs() < 1e-9);
    assert!((csv.column("t")[k] - PI / 2.0).abs() < 1e-9 || (csv.column("t")[k] - 1.5 * PI).abs() < 1e-9);
}

#[test]
fn smooth_transport_peaks_lower() {
    let csv = run(&["transport"]);
    let max = |c: &str| csv.column(c).into_iter().fold(0.0, f64::max);
    assert!(max("smooth_Q") < max("sudden_Q"));
}

#[test]
fn first_transport_row_is_ground_state() {
    let csv = run(&["transport", "--protocol", "smooth,sudden", "--beta", "1", "--omega", "2"]);
    let theta = (-1f64).exp().atanh();
    for p in ["smooth", "sudden"] {
        assert_eq!(csv.column(&format!("{p}_F"))[0], 1.0);
        assert_eq!(csv.column(&format!("{p}_Q"))[0], 0.0);
        assert!((csv.column(&format!("{p}_C"))[0] - 2.0 * theta).abs() < 1e-10);
    }
}

#[test]
fn tabulated_protocol_reads_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ramp.dat");
    std::fs::write(&path, "# t d\n0 0\n1 0.5\n2 1\n").unwrap();
    let csv = run(&["transport", "--protocol", "tabulated", "--table", path.to_str().unwrap(), "--grid", "0:4:41"]);
    assert_eq!(csv.columns.len(), 6);
    assert_eq!(csv.column("tabulated_Q")[0], 0.0);
}

#[test]
fn flags_override_file_which_overrides_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    std::fs::write(&path, "[depth-sweep]\nomega1 = 2.0\nomega2 = 3.0\ngrid = \"0:0.1:3\"\n").unwrap();
    let csv = run(&["depth-sweep", "--config", path.to_str().unwrap(), "--omega1", "2.5"]);
    let p = &csv.config["params"];
    assert_eq!(csv.config["command"], "depth-sweep");
    assert_eq!(p["omega1"], 2.5);
    assert_eq!(p["omega2"], 3.0);
    assert_eq!(p["omega_r"], 1.0);
    assert_eq!(csv.rows.len(), 3);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = oscinfo(&["sync-sweep", "--output", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let csv = Csv::parse(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(csv.columns, ["detuning", "omega2", "S_c", "I"]);
}

#[test]
fn validation_failures_exit_nonzero_with_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad_cfg = dir.path().join("bad.toml");
    std::fs::write(&bad_cfg, "[quench]\nomega_c = 1.0\nomgea = 2\n").unwrap();
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["quench", "--omega-f2", "-1"], "omega_f2"),
        (vec!["depth-sweep", "--sweep", "omega-c", "--g", "9"], "inverted"),
        (vec!["transport", "--protocol", "warp"], "warp"),
        (vec!["transport", "--protocol", "tabulated"], "table"),
        (vec!["quench", "--grid", "1:2:3"], "start at 0"),
        (vec!["quench", "--config", bad_cfg.to_str().unwrap()], "bad.toml:3:"),
        (vec!["sync-sweep", "--config", "/nonexistent/oscinfo.toml"], "reading"),
    ];
    for (args, needle) in cases {
        let out = oscinfo(&args);
        assert!(!out.status.success(), "{args:?} succeeded");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(err.contains(needle), "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
    assert!(!oscinfo(&["depth-sweep", "--grid", "0:1:1"]).status.success());
}
