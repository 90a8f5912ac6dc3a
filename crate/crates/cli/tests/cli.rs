use std::io::Write;
use std::process::Command;

fn dimeq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dimeq")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap().trim_end().to_string(),
        String::from_utf8(out.stderr).unwrap().trim_end().to_string(),
    )
}

fn json_ok(args: &[&str]) -> String {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let (code, out, err) = dimeq(&all);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn orbit_dim() {
    assert_eq!(
        json_ok(&["orbit-dim", "Sp(4)", "2^2"]),
        r#"{"dim":6,"gk":3,"odd_parts":0}"#
    );
    assert_eq!(
        json_ok(&["orbit-dim", "GL(3)", "2 1"]),
        r#"{"dim":4,"gk":2,"odd_parts":1}"#
    );
    assert_eq!(
        json_ok(&["orbit-dim", "Res2:GL(3)", "3"]),
        r#"{"dim":12,"gk":6,"odd_parts":1}"#
    );
    let (code, out, err) = dimeq(&["orbit-dim", "Sp(4)", "3 1"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn filtration() {
    assert_eq!(
        json_ok(&["filtration", "Sp(4)", "2 1^2"]),
        r#"{"weights":[1,0],"dim_n1":3,"dim_n2":1,"histogram":{"0":1,"1":2,"2":1}}"#
    );
}

#[test]
fn orbit_list() {
    assert_eq!(
        json_ok(&["orbit-list", "Sp(4)"]),
        r#"[{"partition":"4","dim":8,"gk":4},{"partition":"2^2","dim":6,"gk":3},{"partition":"2 1^2","dim":4,"gk":2},{"partition":"1^4","dim":0,"gk":0}]"#
    );
    assert_eq!(
        json_ok(&["orbit-list", "Sp(4)", "--max-gk", "0"]),
        r#"[{"partition":"1^4","dim":0,"gk":0}]"#
    );
}

#[test]
fn levi_and_eisenstein() {
    assert_eq!(
        json_ok(&["levi-dim", "Sp(8)", "4"]),
        r#"{"group_dim":36,"levi_dim":16,"radical_dim":10}"#
    );
    assert_eq!(
        json_ok(&[
            "eisenstein-dim",
            "GSp(4)",
            "1",
            "--classical-factor",
            "--inducing-gk",
            "1"
        ]),
        r#"{"inducing_dim":1,"radical_dim":3,"dim":4}"#
    );
    assert_eq!(dimeq(&["levi-dim", "Sp(8)", "3"]).0, 2);
}

#[test]
fn search() {
    let out = json_ok(&[
        "search",
        "--dim6",
        "m=1,k=3,r=2",
        "--even-mult",
        "--even-parts",
        "--minimal-p",
    ]);
    assert_eq!(
        out,
        r#"{"group":"Sp(16)","target_gk":56,"solutions":["6^2 2^2"],"total_candidates":100}"#
    );
    let (code, table, _) = dimeq(&["search", "--dim6", "m=1,k=3,r=2"]);
    assert_eq!(code, 0);
    assert!(table.lines().any(|l| l == "6^2 2^2"));
    assert_eq!(
        json_ok(&["search", "--group", "Sp(4)", "--gk", "3"]),
        r#"{"group":"Sp(4)","target_gk":3,"solutions":["2^2"],"total_candidates":4}"#
    );
}

#[test]
fn theta() {
    assert_eq!(
        json_ok(&["predict-theta", "--n", "2", "--k", "2"]),
        r#"{"n":2,"k":2,"sigma_gk":2,"vanishing_predicted":false,"generic_compatible":true}"#
    );
}

#[test]
fn lemma_and_cfgk() {
    assert_eq!(
        json_ok(&["lemma71", "--m", "1", "--k", "3", "--r", "2"]),
        r#"{"m":1,"k":3,"r":2,"lhs":56,"rhs":56,"balanced":true}"#
    );
    assert_eq!(dimeq(&["lemma71", "--m", "1", "--k", "1", "--r", "2"]).0, 1);
    assert_eq!(
        json_ok(&["cfgk", "--n", "1", "--k", "2"]),
        r#"{"n":1,"k":2,"lhs":17,"rhs":17,"balanced":true,"weight_one_count":0}"#
    );
    assert_eq!(
        json_ok(&["cfgk", "--sweep", "3"]),
        r#"{"points":9,"passed":9,"failures":[]}"#
    );
}

#[test]
fn catalog() {
    assert_eq!(
        json_ok(&["catalog", "--id", "pgsp4-siegel-*"]),
        r#"[{"id":"pgsp4-siegel-classical","params":{},"lhs":10,"rhs":9,"balanced":false,"expected":false},{"id":"pgsp4-siegel-extended","params":{},"lhs":10,"rhs":10,"balanced":true,"expected":true}]"#
    );
    assert_eq!(dimeq(&["catalog", "--all"]).0, 0);
    assert_eq!(
        dimeq(&["catalog", "--id", "asai", "--range", "2..3"]).1.lines().count(),
        3
    );
    assert_eq!(dimeq(&["catalog", "--range", "5..2"]).0, 2);
    assert_eq!(dimeq(&["catalog", "--list"]).1.lines().count(), 22);
}

#[test]
fn check_spec_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"name":"siegel","lhs_groups":["PGSp(4)"],"mode":"classical","expected_balanced":true,
            "rhs_functionals":[{{"kind":"GKOfOrbit","args":{{"group":"GL(4)","partition":"4"}}}},
                               {{"kind":"EisensteinDim","args":{{"inducing_dim":0,"radical_dim":3}}}}]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, _) = dimeq(&["--format", "json", "check", "--spec", path]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        r#"{"name":"siegel","lhs":10,"rhs":9,"deficit":-1,"balanced":false}"#
    );
    assert_eq!(dimeq(&["check", "--spec", "/nonexistent.json"]).0, 2);
}
