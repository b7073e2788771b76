use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use simplexnet::report::parse_header;

fn run(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_simplexnet"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const SIX_SITE: &str = "n 6\nt 0 1 2\nt 1 3 4\nt 2 4 5\n";

#[test]
fn contract_then_entropy() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(
        dir.path(),
        "w.net",
        &format!("{SIX_SITE}s 3 W 0 1 1 0 1 0 0 0\na * W\n"),
    );
    let mut states = Vec::new();
    for method in ["diagonal", "pairwise"] {
        let out = dir.path().join(format!("{method}.csv"));
        run(&[
            "contract",
            "--network",
            &net,
            "--method",
            method,
            "--out",
            out.to_str().unwrap(),
        ]);
        let text = fs::read_to_string(&out).unwrap();
        assert!(parse_header(&text)
            .iter()
            .any(|(k, v)| k == "method" && v == method));
        states.push(
            text.lines()
                .filter(|l| !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join("\n"),
        );
    }
    // both routes agree on the written support
    let support = |s: &str| {
        s.lines()
            .map(|l| l.split(',').next().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(support(&states[0]), support(&states[1]));

    let csv = dir.path().join("diagonal.csv");
    let o = run(&[
        "entropy",
        "--state",
        csv.to_str().unwrap(),
        "--region",
        "0,1,2",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("# tool=simplexnet"));
    let value: f64 = text
        .lines()
        .last()
        .unwrap()
        .strip_prefix("entropy=")
        .unwrap()
        .parse()
        .unwrap();
    let spec = simplexnet::formats::parse_network(&fs::read_to_string(&net).unwrap())
        .unwrap()
        .to_spec()
        .unwrap();
    let state = simplexnet_core::network::contract_diagonal(&spec)
        .unwrap()
        .state;
    let region = simplexnet_core::Region::new(6, [0, 1, 2]).unwrap();
    let expected = simplexnet_core::spectral::entanglement_entropy(&state, &region).unwrap();
    assert!((value - expected).abs() < 1e-6, "{text}");
    assert_eq!(text.trim_end().rsplit('.').next().unwrap().len(), 6);
}

#[test]
fn eig_writes_ground_state() {
    let dir = tempfile::tempdir().unwrap();
    let lat = write(dir.path(), "t.lat", "n 3\nt 0 1 2\n");
    let out = dir.path().join("gs.csv");
    let o = run(&[
        "eig",
        "--lattice",
        &lat,
        "--J",
        "1.0",
        "--lambda",
        "1e-3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(stdout(&o).starts_with("energy=-1.00"));
    let text = fs::read_to_string(&out).unwrap();
    let state = simplexnet::formats::parse_state_csv(&text).unwrap();
    assert_eq!(state.n_qubits(), 3);
}

#[test]
fn ground_and_xcover_agree() {
    let dir = tempfile::tempdir().unwrap();
    let lat = write(dir.path(), "six.lat", SIX_SITE);
    let out = dir.path().join("m.txt");
    let o = run(&["ground", "--lattice", &lat, "--out", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("M=26 E0=-3 frustrated"));
    let m = fs::read_to_string(&out).unwrap();
    let body: Vec<&str> = m.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "M=26 E0=-3");
    assert_eq!(body.len(), 27);
    let parsed = simplexnet::formats::parse_manifold(&m).unwrap();
    assert_eq!(parsed.configurations.len(), 26);

    let ec = write(
        dir.path(),
        "six.ec",
        "p ec 6 3\nc 0 1 2\nc 1 3 4\nc 2 4 5\n",
    );
    let tn = stdout(&run(&["xcover", "--instance", &ec, "--method", "tn"]));
    let brute = stdout(&run(&["xcover", "--instance", &ec, "--method", "brute"]));
    let count = |s: &str| s.split_whitespace().next().unwrap().to_string();
    assert_eq!(count(&tn), count(&brute));
}

#[test]
fn experiment_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let t1 = dir.path().join("table1.csv");
    run(&[
        "table1",
        "--sides",
        "3",
        "--placement",
        "apex",
        "--out",
        t1.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&t1).unwrap();
    assert!(text.contains(simplexnet::commands::ENTROPY_CSV_HEADER));
    let ghz = text.lines().find(|l| l.starts_with("3,10,GHZ,3,")).unwrap();
    assert!(ghz.contains(",1.0000,1.0000,0.0000"), "{ghz}");

    let eq4 = dir.path().join("eq4.txt");
    run(&["eq4", "--out", eq4.to_str().unwrap()]);
    let text = fs::read_to_string(&eq4).unwrap();
    assert!(text.contains("classes=4") && text.contains("magnitudes_match=true"));

    let aniso = dir.path().join("aniso.txt");
    run(&["aniso", "--out", aniso.to_str().unwrap()]);
    let text = fs::read_to_string(&aniso).unwrap();
    assert!(text.contains("patterns=001 110") && text.contains("frustration=unfrustrated"));

    let w = stdout(&run(&["wannier", "--sides", "1,2"]));
    assert!(w.contains("2,6,26,0.7834"), "{w}");
}

#[test]
fn scan4_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        run(&[
            "scan4",
            "--grid",
            "3",
            "--seed",
            "5",
            "--restarts",
            "1",
            "--out",
            p.to_str().unwrap(),
        ]);
    }
    let (ta, tb) = (
        fs::read_to_string(&a).unwrap(),
        fs::read_to_string(&b).unwrap(),
    );
    assert_eq!(ta, tb);
    assert!(ta.contains(simplexnet::commands::SCAN_CSV_HEADER));
    assert!(parse_header(&ta)
        .iter()
        .any(|(k, v)| k == "grid" && v == "3"));
}

#[test]
fn bad_input_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let lat = write(dir.path(), "bad.lat", "n 3\nt 0 1 9\n");
    let out = Command::new(env!("CARGO_BIN_EXE_simplexnet"))
        .args(["ground", "--lattice", &lat])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}
