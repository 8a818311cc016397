use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rbhopf")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn eval_examples() {
    let sl2 = fixture("sl2.cfg");
    assert_eq!(run(&["shuffle", "--cartan", &sl2, "[e1]", "[e1]"]).1, "(1+q^2)*[e1,e1]\n");
    assert_eq!(run(&["eval", "shuffle", "--instance", "uqplus-sl3", "[]", "[e2]"]).1, "[e2]\n");
    assert_eq!(run(&["eval", "project-right", "--instance", "uqplus-sl2", "[e1]#K1"]).1, "[e1]#1\n");
    assert_eq!(run(&["project", "--side", "left", "--instance", "uqplus-sl2", "[e1]#1"]).1, "q^-2*[e1]#K1^-1\n");
    assert_eq!(run(&["smash", "--instance", "hsmash-sweedler", "--eval", "1#x", "--eval", "g#1"]).1, "g#x - 2*g*x#1\n");
    assert_eq!(run(&["eval", "coproduct", "--instance", "sweedler", "g*x"]).1, "1⊗g*x + g*x⊗g\n");
    assert_eq!(
        run(&["bosonize-eval", "--cartan", &sl2, "[e1]#K1", "[e1]#1"]).1,
        "(q^2+q^4)*[e1,e1]#K1\n"
    );
    assert_eq!(
        run(&["bosonize-eval", "--cartan", &sl2, "--project", "right", "[e1]#K1^2"]).1,
        "[e1]#1\n"
    );
    assert_eq!(
        run(&["shuffle", "--cartan", &fixture("sl2-cyclo3.cfg"), "[e1]", "[e1]", "[e1]"]).1,
        "0\n"
    );
    assert_eq!(run(&["eval", "multiply", "--instance", "radford-z2", "K1", "K2", "--format", "lines"]).1, "result=K1*K2\n");
    assert_eq!(run(&["eval", "multiply", "--instance", "radford-z2", "--", "-K1", "K1^-1"]).1, "-1\n");
}

#[test]
fn suites_exit_zero_on_fixture_configs() {
    for cfg in ["sl2.cfg", "sl3.cfg", "sl2-cyclo3.cfg"] {
        for args in [
            &["rb-verify", "--side", "left", "--pairs", "20"][..],
            &["check-yd", "--samples", "20"],
            &["check-hopf-module", "--side", "right", "--samples", "20"],
        ] {
            let path = fixture(cfg);
            let mut a = args.to_vec();
            a.extend(["--cartan", &path]);
            let (code, out, err) = run(&a);
            assert_eq!(code, 0, "{cfg} {args:?}: {out}{err}");
        }
    }
    let (code, out, _) = run(&["serre-check", "--cartan", &fixture("sl3.cfg")]);
    assert_eq!(code, 0);
    assert!(out.contains("rank(1,2): 2\n"));
    assert!(out.contains("kernel-dim(1,2): 1\n"));
    assert!(out.contains("classical-limit(1,2): (8, -16, 8)\n"));
    let (code, out, _) = run(&["nichols-rank", "--cartan", &fixture("sl3.cfg"), "--content", "2,1", "--format", "lines"]);
    assert_eq!(code, 0);
    assert!(out.contains("rank=2\n"));
}

#[test]
fn failing_checks_exit_one() {
    let (code, out, _) = run(&["nichols-rank", "--instance", "uqplus-sl3", "--content", "2,1", "--expect", "3"]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = run(&["check-hopf", "--instance", "corrupted-antipode", "--format", "lines"]);
    assert_eq!(code, 1);
    assert!(out.contains("status=fail\n"));
    assert!(out.contains("witness.x=K1\n"));
    assert!(out.contains("witness.lhs=K1^2\n"));
}

#[test]
fn usage_errors_exit_two() {
    let sl2 = fixture("sl2.cfg");
    let bad = fixture("bad-cartan.cfg");
    let cases: Vec<Vec<&str>> = vec![
        vec!["rb-verify", "--instance", "no-such-instance"],
        vec!["rb-verify", "--instance", "radford-z2", "--side", "left"],
        vec!["check-yd", "--instance", "radford-z2"],
        vec!["rb-verify"],
        vec!["rb-verify", "--cartan", &bad],
        vec!["rb-verify", "--cartan", "/nonexistent.cfg"],
        vec!["rb-verify", "--instance", "uqplus-sl2", "--scalar", "cyclotomic:3"],
        vec!["rb-verify", "--cartan", &sl2, "--scalar", "bogus"],
        vec!["shuffle", "--cartan", &sl2, "[e3]"],
        vec!["eval", "frobnicate", "--instance", "uqplus-sl2", "[e1]"],
        vec!["rb-verify", "--instance", "hsmash-z", "--weight", "q^"],
        vec!["nichols-rank", "--instance", "uqplus-sl2", "--content", "1,1"],
        vec!["serre-check", "--instance", "uqplus-sl2"],
        vec!["no-such-command"],
    ];
    for args in cases {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}: {out}{err}");
    }
    let (_, _, err) = run(&["rb-verify", "--cartan", &bad]);
    assert!(err.contains("a12 = 0 ⇔ a21 = 0"), "{err}");
    let (_, _, err) = run(&["shuffle", "--cartan", &sl2, "[e3]"]);
    assert!(err.contains("letter out of range"), "{err}");
}

#[test]
fn resource_guard_refuses_large_contents() {
    let sl3 = fixture("sl3.cfg");
    let (code, _, err) = run(&["nichols-rank", "--cartan", &sl3, "--content", "7,6"]);
    assert_eq!(code, 2);
    assert!(err.contains("resource guard"), "{err}");
}

#[test]
fn reports_are_deterministic_and_echo_the_plan() {
    let args = ["rb-verify", "--instance", "hsmash-sweedler", "--side", "left", "--seed", "11", "--pairs", "30",
        "--max-degree", "3", "--format", "lines"];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    for line in ["seed=11\n", "samples=30\n", "max-degree=3\n", "side=left\n", "weight=-1\n", "checks=30\n"] {
        assert!(first.contains(line), "missing {line:?} in {first}");
    }
    let mut par = args.to_vec();
    par.push("--parallel");
    let (_, parallel, _) = run(&par);
    assert_eq!(first.replace("parallel=false", "parallel=true"), parallel);
}

#[test]
fn parallel_failure_matches_sequential() {
    let args = ["rb-verify", "--instance", "corrupted-projection", "--seed", "3"];
    let (code, seq, _) = run(&args);
    let mut par = args.to_vec();
    par.push("--parallel");
    let (pcode, parallel, _) = run(&par);
    assert_eq!((code, pcode), (1, 1));
    assert_eq!(seq.replace("parallel: false", "parallel: true"), parallel);
}

#[test]
fn scalar_override_applies_to_parametric_instances() {
    for scalar in ["rational", "rational:2", "cyclotomic:5"] {
        let (code, out, err) =
            run(&["rb-verify", "--instance", "hsmash-sweedler", "--side", "left", "--scalar", scalar, "--pairs", "20"]);
        assert_eq!(code, 0, "{scalar}: {out}{err}");
        assert!(out.contains(&format!("scalar: {scalar}\n")), "{out}");
    }
}
