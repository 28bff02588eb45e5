// Copyright 2026 The ifpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TABLE1: &str = "5 4\n0 1 2\n0 1\n0 3\n0 2 3\n1 2 3\n4 1\n4 2\n4 3\n";
const TABLE2: &str = "0 2 4 5\n2 3 5\n0 2 4 5\n0 3 2 5\n0 4 2 5 3\n2 3 4 1\n";

fn ifpmine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ifpmine"))
        .args(args)
        .output()
        .expect("spawn ifpmine")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mine_mii_table1_text() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t1.fimi", TABLE1);
    for algo in ["ifp", "apriori", "oracle"] {
        let o = ifpmine(&[
            "mine-mii",
            "--input",
            s(&input),
            "--min-sup",
            "2",
            "--algo",
            algo,
        ]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert_eq!(
            stdout(&o),
            "5 (1)\n0 4 (0)\n1 3 (1)\n1 4 (1)\n2 4 (1)\n3 4 (1)\n0 1 2 (1)\n0 2 3 (1)\n",
            "{algo}"
        );
    }
}

#[test]
fn mine_mii_json_and_out_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t1.fimi", TABLE1);
    let out = dir.path().join("out.json");
    let o = ifpmine(&[
        "mine-mii",
        "--input",
        s(&input),
        "--min-sup",
        "20%",
        "--format",
        "json",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = fs::read_to_string(&out).unwrap();
    assert!(body.trim_start().starts_with('['));
    assert_eq!(body.matches("\"support\"").count(), 8);
}

#[test]
fn mine_mlms_table2() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t2.fimi", TABLE2);
    let o = ifpmine(&[
        "mine-mlms",
        "--input",
        s(&input),
        "--thresholds",
        "4,4,3,2,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 18);
    assert!(text.lines().any(|l| l == "0 2 3 4 5 (1)"));
    assert!(!text.lines().any(|l| l.split(' ').any(|t| t == "1")));
}

#[test]
fn jobs_do_not_change_output() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t1.fimi", TABLE1);
    let a = ifpmine(&[
        "mine-mii",
        "--input",
        s(&input),
        "--min-sup",
        "2",
        "--jobs",
        "1",
    ]);
    let b = ifpmine(&[
        "mine-mii",
        "--input",
        s(&input),
        "--min-sup",
        "2",
        "--jobs",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_agrees_on_table1() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t1.fimi", TABLE1);
    let o = ifpmine(&["check", "--input", s(&input), "--min-sup", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn bench_emits_csv() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "t1.fimi", TABLE1);
    let o = ifpmine(&[
        "bench",
        "--inputs",
        s(&input),
        "--algos",
        "ifp,apriori",
        "--thresholds",
        "1,2,3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(ifpmine::bench::CSV_HEADER));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 6);
    for r in rows {
        assert_eq!(r.split(',').count(), 6, "{r}");
    }
}

#[test]
fn gen_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.fimi");
    let args = [
        "gen",
        "--items",
        "6",
        "--transactions",
        "5",
        "--density",
        "0.4",
        "--seed",
        "2024",
    ];
    let a = ifpmine(&args);
    assert_eq!(stdout(&a), "5\n0 3 5\n0 3\n1 4\n1 2\n");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", s(&out)]);
    assert_eq!(ifpmine(&with_out).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), stdout(&a));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.fimi");
    let bad = write(&dir, "bad.fimi", "1 2\n3 x\n");
    let wide = write(
        &dir,
        "wide.fimi",
        &format!(
            "{}\n",
            (0..30).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        ),
    );
    let t1 = write(&dir, "t1.fimi", TABLE1);

    assert_eq!(
        ifpmine(&["mine-mii", "--input", s(&t1)]).status.code(),
        Some(2)
    );
    assert_eq!(
        ifpmine(&["mine-mii", "--input", s(&t1), "--min-sup", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ifpmine(&["mine-mii", "--input", s(&t1), "--min-sup", "-3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ifpmine(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        ifpmine(&["mine-mii", "--input", s(&missing), "--min-sup", "2"])
            .status
            .code(),
        Some(3)
    );
    let o = ifpmine(&["mine-mii", "--input", s(&bad), "--min-sup", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(
        ifpmine(&[
            "mine-mii",
            "--input",
            s(&wide),
            "--min-sup",
            "1",
            "--algo",
            "oracle"
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        ifpmine(&["check", "--input", s(&wide), "--min-sup", "1"])
            .status
            .code(),
        Some(4)
    );
}
