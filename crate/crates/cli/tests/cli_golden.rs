//! End-to-end goldens for the `wallkit` binary.
//!
//! The JSON lines frozen here are part of the compatibility contract:
//! scripted callers match them byte for byte, so any change to key order,
//! spacing, or number rendering is a breaking change. Structured outputs
//! that carry larger payloads (classification rows, wall reports) are
//! checked field by field through a JSON parser instead, with the values
//! pinned against the library-level goldens.

use std::path::PathBuf;
use std::process::{Command, Output};

const DELTA_PRIME: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1";
const SIGMA_PRIME: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,-1";
const H1: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0";
const H2: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1";
const ZERO16: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";

fn wallkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wallkit"))
        .args(args)
        .env_remove("WALLKIT_THREADS")
        .output()
        .expect("spawn wallkit")
}

fn stdout_line(args: &[&str]) -> String {
    let out = wallkit(args);
    assert!(
        out.status.success(),
        "wallkit {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn parse_json(text: &str) -> serde_json::Value {
    serde_json::from_str(text.trim_end()).expect("valid JSON output")
}

fn write_pic(tag: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("wallkit-golden-{tag}-{}.json", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn lambda_pic(tag: &str, basis: &[[i64; 16]]) -> PathBuf {
    let rows: Vec<String> = basis
        .iter()
        .map(|row| {
            let body: Vec<String> = row.iter().map(i64::to_string).collect();
            format!("[{}]", body.join(","))
        })
        .collect();
    write_pic(
        tag,
        &format!("{{\"ambient\":\"Lambda\",\"basis\":[{}]}}", rows.join(",")),
    )
}

const H1_ROW: [i64; 16] = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0];
const H2_ROW: [i64; 16] = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1];

#[test]
fn published_invariant_line_is_byte_exact() {
    let line = stdout_line(&["vec", "invariants", "--lattice", "Lambda", "--coords", DELTA_PRIME]);
    assert_eq!(line, "{\"q\":-4,\"div\":2}\n");
}

#[test]
fn wall_membership_lines_are_byte_exact() {
    let line = stdout_line(&["wall", "test", "--coords", H1]);
    assert_eq!(line, "{\"is_wall\":false}\n");
    let line = stdout_line(&["wall", "test", "--coords", DELTA_PRIME]);
    assert_eq!(line, "{\"is_wall\":true}\n");
}

#[test]
fn discriminant_orbit_line_is_byte_exact() {
    let line = stdout_line(&["disc", "--lattice", "E8m2", "--orbits"]);
    assert_eq!(line, "{\"orbit_sizes\":[1,120,135]}\n");
}

#[test]
fn disc_without_orbits_reports_the_group() {
    let v = parse_json(&stdout_line(&["disc", "--lattice", "E8m2"]));
    assert_eq!(v["order"], 256);
    assert_eq!(v["invariant_factors"].as_array().unwrap().len(), 8);
    assert!(v["invariant_factors"].as_array().unwrap().iter().all(|f| f == &serde_json::json!(2)));
}

#[test]
fn classification_of_h2_matches_the_library_golden() {
    let v = parse_json(&stdout_line(&["classify", "--lattice", "Lambda", "--coords", H2]));
    assert_eq!(v["case"], 4);
    assert_eq!(v["i"], 0);
    let rep: Vec<i64> = v["representative"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(rep, H1_ROW.to_vec());
    assert_eq!(v["invariants"]["q"], -2);
    assert_eq!(v["invariants"]["div"], 2);
    assert_eq!(v["invariants"]["e_bar_zero"], true);
    assert_eq!(v["invariants"]["qbar"], 0);
    assert_eq!(v["invariants"]["hat_div1"], false);
}

#[test]
fn classification_in_the_hat_lattice() {
    let delta_hat = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1";
    let v = parse_json(&stdout_line(&["classify", "--lattice", "LambdaHat1", "--coords", delta_hat]));
    assert_eq!(v["case"], 2);
    assert_eq!(v["i"], 0);
    let rep: Vec<i64> = v["representative"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    let mut expected = vec![0i64; 16];
    expected[14] = 1;
    expected[15] = 1;
    assert_eq!(rep, expected);
    assert_eq!(v["invariants"]["q"], -2);
    assert_eq!(v["invariants"]["div"], 2);
    assert_eq!(v["invariants"]["hat_div1"], serde_json::Value::Null);
}

#[test]
fn lattice_show_reports_the_frozen_model() {
    let v = parse_json(&stdout_line(&["lattice", "show", "--name", "Lambda"]));
    assert_eq!(v["name"], "Lambda");
    assert_eq!(v["rank"], 16);
    assert_eq!(v["det"], -256);
    assert_eq!(v["even"], true);
    let gram = v["gram"].as_array().unwrap();
    assert_eq!(gram.len(), 16);
    assert_eq!(gram[0].as_array().unwrap().len(), 16);
    assert_eq!(gram[0][1], 2);
    assert_eq!(gram[14][14], -2);
}

#[test]
fn class_show_round_trips_named_classes() {
    let v = parse_json(&stdout_line(&["class", "show", "--name", "delta_prime"]));
    assert_eq!(v["name"], "delta_prime");
    assert_eq!(v["ambient"], "Lambda");
    let coords: Vec<i64> = v["coords"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    let mut expected = vec![0i64; 16];
    expected[14] = 1;
    expected[15] = 1;
    assert_eq!(coords, expected);

    let v = parse_json(&stdout_line(&["class", "show", "--name", "l2_-1"]));
    assert_eq!(v["ambient"], "Lambda");
    assert_eq!(v["coords"][0], -1);
    assert_eq!(v["coords"][1], 1);
}

#[test]
fn walls_enum_reproduces_the_exceptional_plane() {
    let pic = lambda_pic("plane", &[H1_ROW, H2_ROW]);
    let v = parse_json(&stdout_line(&["walls", "enum", "--pic", pic.to_str().unwrap()]));
    std::fs::remove_file(&pic).ok();
    assert_eq!(v["ambient"], "Lambda");
    assert_eq!(v["complete"], true);
    let walls = v["walls"].as_array().unwrap();
    assert_eq!(walls.len(), 2);
    for w in walls {
        assert_eq!(w["q"], -4);
        assert_eq!(w["div"], 2);
        assert_eq!(w["case"], 2);
    }
    let coords: Vec<Vec<i64>> = walls
        .iter()
        .map(|w| {
            w["coords"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect()
        })
        .collect();
    let mut delta = vec![0i64; 16];
    delta[14] = 1;
    delta[15] = 1;
    let mut sigma = vec![0i64; 16];
    sigma[14] = 1;
    sigma[15] = -1;
    assert!(coords.contains(&delta));
    assert!(coords.contains(&sigma));
}

#[test]
fn kahler_side_is_reported_from_oriented_walls() {
    let pic = lambda_pic("kahler", &[H1_ROW, H2_ROW]);
    let pic_arg = pic.to_str().unwrap().to_string();
    // omega = 3(e+f) in the first U(2) block minus h1: norm 34, off both walls.
    let omega = "3,3,0,0,0,0,0,0,0,0,0,0,0,0,-1,0";
    let minus_omega = "-3,-3,0,0,0,0,0,0,0,0,0,0,0,0,1,0";

    let line = stdout_line(&["kahler", "test", "--pic", &pic_arg, "--omega", omega, "--alpha", omega]);
    assert_eq!(line, "{\"in_chamber\":true}\n");
    let line = stdout_line(&["kahler", "test", "--pic", &pic_arg, "--omega", omega, "--alpha", minus_omega]);
    assert_eq!(line, "{\"in_chamber\":false}\n");
    // A negative-norm class is never in the chamber.
    let line = stdout_line(&["kahler", "test", "--pic", &pic_arg, "--omega", omega, "--alpha", H1]);
    assert_eq!(line, "{\"in_chamber\":false}\n");

    // omega on a wall is ill-posed: precondition exit.
    let on_wall = wallkit(&["kahler", "test", "--pic", &pic_arg, "--omega", "1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0", "--alpha", omega]);
    assert_eq!(exit_code(&on_wall), 3);
    std::fs::remove_file(&pic).ok();
}

#[test]
fn eichler_normalize_emits_a_checkable_matrix() {
    // In LambdaHat3 = U^3 + (-2), map the first isotropic basis vector to its partner.
    let from = "1,0,0,0,0,0,0";
    let to = "0,1,0,0,0,0,0";
    let v = parse_json(&stdout_line(&["eichler", "normalize", "--lattice", "LambdaHat3", "--from", from, "--to", to]));
    assert_eq!(v["certified"], true);
    assert!(v["transvections"].as_u64().is_some());
    let matrix: Vec<Vec<i64>> = v["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect();
    assert_eq!(matrix.len(), 7);
    // Row convention: image coordinate k is the k-th row dotted with the input.
    let from_v = [1i64, 0, 0, 0, 0, 0, 0];
    let image: Vec<i64> = matrix
        .iter()
        .map(|row| row.iter().zip(from_v.iter()).map(|(a, b)| a * b).sum())
        .collect();
    assert_eq!(image, vec![0, 1, 0, 0, 0, 0, 0]);
}

#[test]
fn verify_runs_every_suite() {
    let line = stdout_line(&["verify", "--suite", "all"]);
    let v = parse_json(&line);
    assert_eq!(v["pass"], true);
    let suites: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        suites,
        vec!["generic", "one-curve", "two-curves", "elliptic", "involution"]
    );
    for s in v["suites"].as_array().unwrap() {
        assert_eq!(s["pass"], true, "suite {} failed", s["suite"]);
        assert!(!s["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn pretty_mode_renders_text() {
    let line = stdout_line(&["vec", "invariants", "--lattice", "Lambda", "--coords", DELTA_PRIME, "--pretty"]);
    assert_eq!(line, "q = -4\ndiv = 2\n");
    let line = stdout_line(&["verify", "--suite", "generic", "--pretty"]);
    assert!(line.contains("[PASS] generic"), "got: {line}");
    let line = stdout_line(&["lattice", "show", "--name", "U", "--pretty"]);
    assert!(line.contains("rank 2"), "got: {line}");
}

#[test]
fn exit_codes_follow_the_contract() {
    // Usage: malformed coordinate value.
    let out = wallkit(&["vec", "invariants", "--lattice", "Lambda", "--coords", "1,x"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"error\":\"usage\""));

    // Usage: unknown subcommand (reported by the argument parser).
    let out = wallkit(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);

    // Usage: invalid thread cap, even on an otherwise valid invocation.
    let out = Command::new(env!("CARGO_BIN_EXE_wallkit"))
        .args(["wall", "test", "--coords", H1])
        .env("WALLKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_wallkit"))
        .args(["wall", "test", "--coords", H1])
        .env("WALLKIT_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);

    // Preconditions: wrong rank, unknown names, zero and imprimitive vectors.
    let out = wallkit(&["vec", "invariants", "--lattice", "Lambda", "--coords", "1,2,3"]);
    assert_eq!(exit_code(&out), 3);
    let out = wallkit(&["vec", "invariants", "--lattice", "Nope", "--coords", "1"]);
    assert_eq!(exit_code(&out), 3);
    let out = wallkit(&["class", "show", "--name", "nope"]);
    assert_eq!(exit_code(&out), 3);
    let out = wallkit(&["wall", "test", "--coords", ZERO16]);
    assert_eq!(exit_code(&out), 3);
    let two_delta = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,2";
    let out = wallkit(&["classify", "--lattice", "Lambda", "--coords", two_delta]);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"error\":\"precondition\""));
    let out = wallkit(&["verify", "--suite", "nope"]);
    assert_eq!(exit_code(&out), 3);
    let out = wallkit(&["eichler", "normalize", "--lattice", "LambdaHat3", "--from", "1,0,0,0,0,0,0", "--to", "1,1,0,0,0,0,0"]);
    assert_eq!(exit_code(&out), 3);

    // Success with data still exits 0 even when the answer is "no".
    let out = wallkit(&["wall", "test", "--coords", SIGMA_PRIME]);
    assert_eq!(exit_code(&out), 0);
}
