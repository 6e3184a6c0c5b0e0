use serde_json::Value;
use wfcomb::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("wfcomb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dual_reports_routes() {
    let v = json(&["dual", "--kind", "symp", "--lambda", "2,2"]);
    assert_eq!(v["dual"], "3,1,1");
    assert_eq!(v["sp"], "2,2");
    assert_eq!(v["checks"]["zeta_route"], true);
    assert_eq!(v["config"]["command"], "dual");
    assert_eq!(v["config"]["args"]["lambda"], "2,2");
}

#[test]
fn decompose_accepts_both_separators() {
    let a = json(&["decompose", "--lambda", "2,2", "--tau", "2=1"]);
    let b = json(&["decompose", "--lambda", "2,2", "--tau", "2:1"]);
    assert_eq!(a["lambda1"], b["lambda1"]);
    assert_eq!(a["lambda1"], "1,1");
    assert_eq!(a["lambda2"], "1,1");
}

#[test]
fn wavefront_certificate_passes() {
    let v = json(&["wavefront", "--lp", "2", "--lm", "2", "--em", "2=-1"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["dual"], "3,1,1");
    assert_eq!(v["form"], "an");
}

#[test]
fn springer_and_symbol() {
    let v = json(&["springer", "--kind", "symp", "--lambda", "2,2", "--eps", "2:-"]);
    assert_eq!(v["symbol"], "({1,0},{2})");
    let v = json(&["symbol", "--symbol", "2,0;1"]);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["members"].as_array().unwrap().len(), 3);
}

#[test]
fn induce_both_modes() {
    let v = json(&["induce", "--l1", "2", "--l2", "1,1"]);
    assert_eq!(v["induced"], "4");
    let v = json(&["induce", "--gl", "1", "--core", "2"]);
    assert_eq!(v["checks"]["commutes"], true);
}

#[test]
fn enumerate_csv_columns() {
    let (code, out, _) = call(&["enumerate", "--kind", "orth-odd", "--size", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("# config:"));
    assert_eq!(lines.next().unwrap(), "partition,length,special,sp,dual");
    assert_eq!(lines.count(), 4);
}

#[test]
fn text_format_echoes_config() {
    let (code, out, _) = call(&["partition", "--lambda", "3,1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# config: "));
    assert!(out.contains("transpose: 2,1,1"));
}

#[test]
fn domain_error_exits_one_with_json() {
    let (code, out, err) = call(&["dual", "--kind", "symp", "--lambda", "3"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["error"], "domain");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(call(&["dual", "--kind", "symp", "--lambda", "2", "--bogus"]).0, 1);
    assert_eq!(call(&["nonsense"]).0, 1);
    assert_eq!(call(&["dual", "--kind", "spin", "--lambda", "2"]).0, 1);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_passes_small() {
    let v = json(&["verify", "--suite", "duality,worked", "--max-n", "3", "--jobs", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_rejects_unknown_suite() {
    assert_eq!(call(&["verify", "--suite", "nope"]).0, 1);
}
