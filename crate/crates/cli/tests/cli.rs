// Copyright contributors to the sqct project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sqct::{choose_k, parse_decimal, Circuit};

fn sqct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqct"))
        .args(args)
        .env_remove("SQCT_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(p: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn pi_over_4_is_a_single_t() {
    let out = sqct(&["synth", "--phase", "pi/4", "--eps", "1e-3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "# sqct v1\n# qubits 3\n# ancillae 1 2\nT 0\n"
    );
}

#[test]
fn pi_over_8_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let (c, r) = (dir.path().join("c.txt"), dir.path().join("r.json"));
    let out = sqct(&[
        "synth",
        "--phase",
        "pi/8",
        "--eps",
        "0.1",
        "--seed",
        "7",
        "-o",
        path(&c),
        "--report",
        path(&r),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rep = report(&r);
    let keys: Vec<&str> = rep
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for k in [
        "phi",
        "octant",
        "k",
        "eps_target",
        "eps_bound",
        "eps_certified",
        "M",
        "quad",
        "gate_counts",
        "t_count",
        "total_gates",
        "two_level_count",
        "ancillae",
        "seed",
        "verify",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(rep["k"], 9);
    assert_eq!(rep["M"], "390");
    assert_eq!(rep["ancillae"], 2);
    assert_eq!(rep["verify"]["prep_exact"], true);
    assert_eq!(rep["verify"]["controlled_block_exact"], true);
    let counts = rep["gate_counts"].as_object().unwrap();
    let sum: u64 = counts.values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(sum, rep["total_gates"].as_u64().unwrap());
    assert_eq!(
        rep["t_count"].as_u64().unwrap(),
        counts["T"].as_u64().unwrap() + counts["TDG"].as_u64().unwrap()
    );
    // reals are decimal strings
    assert!(rep["eps_certified"].is_string() && rep["eps_bound"].is_string());

    let text = fs::read_to_string(&c).unwrap();
    let parsed = Circuit::parse(&text).unwrap();
    assert_eq!(parsed.emit(), text);
    assert_eq!(parsed.len() as u64, rep["total_gates"].as_u64().unwrap());
}

#[test]
fn decimal_phase_picks_minimal_k() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let out = sqct(&[
        "synth",
        "--phase",
        "0.3926990816987241",
        "--eps",
        "1e-6",
        "--report",
        path(&r),
    ]);
    assert_eq!(code(&out), 0);
    let rep = report(&r);
    let k = choose_k(&parse_decimal("1e-6").unwrap()).unwrap();
    assert_eq!(rep["k"].as_u64().unwrap(), k as u64);
    assert!((40..=44).contains(&k));
    assert_eq!(rep["verify"]["prep_exact"], true);
}

#[test]
fn verify_round_trip_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.txt");
    assert_eq!(
        code(&sqct(&[
            "synth",
            "--phase",
            "pi/8",
            "--eps",
            "1e-3",
            "-o",
            path(&c)
        ])),
        0
    );
    let ok = sqct(&["verify", "-c", path(&c), "--phase", "pi/8", "--eps", "1e-3"]);
    assert_eq!(code(&ok), 0);
    let rep: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(rep["certified"], true);

    let wrong = sqct(&["verify", "-c", path(&c), "--phase", "pi/3", "--eps", "1e-3"]);
    assert_eq!(code(&wrong), 1);

    let corrupt = dir.path().join("bad.txt");
    fs::write(
        &corrupt,
        fs::read_to_string(&c).unwrap().replacen("\nH ", "\nHX ", 1),
    )
    .unwrap();
    assert_eq!(
        code(&sqct(&[
            "verify",
            "-c",
            path(&corrupt),
            "--phase",
            "pi/8",
            "--eps",
            "1e-3"
        ])),
        2
    );

    let missing = dir.path().join("none.txt");
    assert_eq!(
        code(&sqct(&[
            "verify",
            "-c",
            path(&missing),
            "--phase",
            "pi/8",
            "--eps",
            "1e-3"
        ])),
        2
    );
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        code(&sqct(&["synth", "--phase", "pi/0", "--eps", "0.1"])),
        2
    );
    assert_eq!(code(&sqct(&["synth", "--phase", "abc", "--eps", "0.1"])), 2);
    assert_eq!(code(&sqct(&["synth", "--phase", "pi/8", "--eps", "0"])), 2);
    assert_eq!(
        code(&sqct(&["synth", "--phase", "pi/8", "--eps", "1.5"])),
        2
    );
    assert_eq!(code(&sqct(&["synth", "--phase", "pi/8"])), 2);
    assert_eq!(code(&sqct(&["nonsense"])), 2);
}

#[test]
fn negative_phase_is_accepted() {
    let out = sqct(&["synth", "--phase", "-pi/4", "--eps", "1e-2"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("TDG 0\n"));
}

#[test]
fn precision_override() {
    let run = |bits: &str| {
        Command::new(env!("CARGO_BIN_EXE_sqct"))
            .args(["synth", "--phase", "1.0", "--eps", "1e-4"])
            .env("SQCT_PRECISION_BITS", bits)
            .output()
            .unwrap()
    };
    let a = run("64");
    let b = run("256");
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&run("seven")), 2);
    assert_eq!(code(&run("8")), 2);
}

#[test]
fn synth_unitary_cases() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    };
    let h = write("h.txt", "0.7071067811865475244 0 0.7071067811865475244 0\n0.7071067811865475244 0 -0.7071067811865475244 0\n");
    let r = dir.path().join("h.json");
    let out = sqct(&[
        "synth-unitary",
        "--matrix",
        path(&h),
        "--eps",
        "1e-3",
        "--report",
        path(&r),
    ]);
    assert_eq!(code(&out), 0);
    let rep = report(&r);
    for a in ["alpha", "beta", "gamma", "delta"] {
        assert_eq!(rep["euler"][a], "pi/2");
    }
    assert_eq!(rep["blocks"].as_array().unwrap().len(), 3);

    let t = write(
        "t.txt",
        "1 0 0 0 0 0 0.70710678118654752440 0.70710678118654752440",
    );
    let out = sqct(&["synth-unitary", "--matrix", path(&t), "--eps", "1e-3"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("# ancillae 1 2\nT 0\n"));

    let id = write("i.txt", "1 0 0 0 0 0 1 0");
    let out = sqct(&["synth-unitary", "--matrix", path(&id), "--eps", "1e-3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "# sqct v1\n# qubits 3\n# ancillae 1 2\n"
    );

    let g = write("g.txt", "0.6 0 0 0.8 0 0.8 0.6 0");
    let r = dir.path().join("g.json");
    let out = sqct(&[
        "synth-unitary",
        "--matrix",
        path(&g),
        "--eps",
        "1e-3",
        "--exact-phase",
        "--report",
        path(&r),
    ]);
    assert_eq!(code(&out), 0);
    let rep = report(&r);
    assert_eq!(rep["exact_phase"], true);
    let total = parse_decimal(rep["total_certified"].as_str().unwrap()).unwrap();
    assert!(total <= parse_decimal("1e-3").unwrap());

    let bad = write("bad.txt", "1 0 0 0 0 0 1.2 0");
    assert_eq!(
        code(&sqct(&[
            "synth-unitary",
            "--matrix",
            path(&bad),
            "--eps",
            "1e-3"
        ])),
        2
    );
    let short = write("short.txt", "1 0 0");
    assert_eq!(
        code(&sqct(&[
            "synth-unitary",
            "--matrix",
            path(&short),
            "--eps",
            "1e-3"
        ])),
        2
    );
}

#[test]
fn bench_rows_and_determinism() {
    let run = || {
        let out = sqct(&[
            "bench",
            "--eps-list",
            "1e-2..1e-8",
            "--trials",
            "1",
            "--seed",
            "4",
        ]);
        assert_eq!(code(&out), 0);
        String::from_utf8(out.stdout).unwrap()
    };
    let (a, b) = (run(), run());
    let rows = |s: &str| -> Vec<Vec<String>> {
        s.lines()
            .skip(1)
            .map(|l| l.split(',').map(String::from).collect())
            .collect()
    };
    assert_eq!(
        a.lines().next(),
        Some("eps,k,total_gates,t_count,wall_time,quad_trials")
    );
    let (ra, rb) = (rows(&a), rows(&b));
    assert_eq!(ra.len(), 7);
    let mut last = 0u64;
    for (x, y) in ra.iter().zip(&rb) {
        // everything but wall time repeats
        assert_eq!((&x[..4], &x[5]), (&y[..4], &y[5]));
        let k = choose_k(&parse_decimal(&x[0]).unwrap()).unwrap();
        assert_eq!(x[1], k.to_string());
        let gates: u64 = x[2].parse().unwrap();
        assert!(gates >= last);
        last = gates;
    }
}

#[test]
fn four_squares_subcommand() {
    let out = sqct(&["four-squares", "390", "--seed", "2"]);
    assert_eq!(code(&out), 0);
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let v: Vec<i64> = ["a", "b", "c", "d"]
        .iter()
        .map(|k| rep[k].as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(v.iter().map(|x| x * x).sum::<i64>(), 390);
    assert_eq!(code(&sqct(&["four-squares", "x"])), 2);
}
