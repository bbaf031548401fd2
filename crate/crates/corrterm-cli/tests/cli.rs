//! End-to-end tests of the `corrterm` binary: frozen outputs, the exit-code
//! contract (0 pass, 1 contradiction/failure, 2 invalid input), byte-level
//! determinism, and JSON round-trips.

use std::process::Command;

use serde::{Deserialize, Serialize};

fn corrterm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_corrterm"))
        .args(args)
        .output()
        .expect("binary should run");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct DRow {
    i: i64,
    d: String,
}

#[test]
fn lens_json_frozen() {
    let (code, stdout, _) = corrterm(&["lens", "--p", "3", "--q", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "[{\"i\":0,\"d\":\"1/6\"},{\"i\":1,\"d\":\"1/6\"},{\"i\":2,\"d\":\"-1/2\"}]\n"
    );
}

#[test]
fn lens_csv_frozen() {
    let (code, stdout, _) = corrterm(&["lens", "--p", "6", "--q", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "i,d\n0,5/4\n1,5/12\n2,-1/12\n3,-1/4\n4,-1/12\n5,5/12\n");
}

#[test]
fn lens_single_spinc() {
    let (code, stdout, _) =
        corrterm(&["lens", "--p", "2", "--q", "1", "--spinc", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[{\"i\":1,\"d\":\"-1/4\"}]\n");
}

#[test]
fn lens_output_is_deterministic() {
    let a = corrterm(&["lens", "--p", "97", "--q", "31", "--format", "json"]);
    let b = corrterm(&["lens", "--p", "97", "--q", "31", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn lens_json_roundtrips_byte_for_byte() {
    let (_, stdout, _) = corrterm(&["lens", "--p", "7", "--q", "3", "--format", "json"]);
    let rows: Vec<DRow> = serde_json::from_str(stdout.trim_end()).expect("parses");
    assert_eq!(serde_json::to_string(&rows).unwrap() + "\n", stdout);
}

#[test]
fn surgery_alex_and_vi_agree() {
    let via_alex = corrterm(&["surgery", "--p", "6", "--q", "1", "--alex", "1:1,0:-1", "--format", "csv"]);
    let via_vi = corrterm(&["surgery", "--p", "6", "--q", "1", "--vi", "1,0", "--format", "csv"]);
    assert_eq!(via_alex, via_vi);
    assert_eq!(via_alex.0, 0);
    assert_eq!(via_alex.1, "i,d\n0,-3/4\n1,5/12\n2,-1/12\n3,-1/4\n4,-1/12\n5,5/12\n");
}

#[test]
fn knot_selectors() {
    let (code, stdout, _) = corrterm(&["knot", "--alex", "1:1,0:-1", "--vi", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"v\":[1,0]}\n");

    let (code, stdout, _) =
        corrterm(&["knot", "--alex", "4:1,3:-1,1:1,0:-1", "--nu-plus", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"nu_plus\":4}\n");

    let (code, stdout, _) =
        corrterm(&["knot", "--alex", "4:1,3:-1,1:1,0:-1", "--thickness", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"thickness\":1}\n");

    // selectors are mutually exclusive
    let (code, _, _) = corrterm(&["knot", "--alex", "1:1,0:-1", "--vi", "--thickness"]);
    assert_eq!(code, 2);
}

#[test]
fn knot_full_summary_json() {
    let (code, stdout, _) = corrterm(&["knot", "--alex", "1:1,0:-1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"genus\":1,\"v\":[1,0],\"nu_plus\":1,\"thickness\":0,\
         \"staircase\":[{\"a\":1,\"m\":0,\"delta\":1},{\"a\":0,\"m\":-1,\"delta\":1},\
         {\"a\":-1,\"m\":-2,\"delta\":1}]}\n"
    );
}

#[test]
fn check_reducible_slice_contradiction() {
    let (code, stdout, _) =
        corrterm(&["check-reducible", "--p", "3", "--q", "2", "--slice", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(
        stdout,
        "{\"p\":3,\"q\":2,\"slope\":6,\"verdict\":\"contradiction\",\
         \"evidence\":[{\"type\":\"sum\",\"ell\":0,\"lhs\":0,\"rhs\":1,\"ok\":false}]}\n"
    );
}

#[test]
fn check_reducible_torus_passes() {
    // T(3,5) at slope 15 satisfies all five instances
    let (code, stdout, _) = corrterm(&[
        "check-reducible", "--p", "5", "--q", "3", "--alex", "4:1,3:-1,1:1,0:-1", "--format", "json",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("\"verdict\":\"pass\""));
    assert!(stdout.contains("{\"type\":\"sum\",\"ell\":0,\"lhs\":4,\"rhs\":4,\"ok\":true}"));
}

#[test]
fn slice_obstruct_forced_conclusion() {
    let (code, stdout, _) = corrterm(&["slice-obstruct", "--p", "5", "--q", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"p\":5,\"q\":1,\"slope\":5,\"verdict\":\"pass\",\
         \"evidence\":[{\"type\":\"forced\",\"lens_param\":1,\"summand_d\":\"0\"}]}\n"
    );

    let (code, _, _) = corrterm(&["slice-obstruct", "--p", "3", "--q", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn slopes_for_slice_genus_frozen() {
    let (code, stdout, _) = corrterm(&["slopes-for-slice-genus", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[{\"slope\":6,\"p\":3,\"q\":2},{\"slope\":10,\"p\":5,\"q\":2}]\n");

    let (code, stdout, _) = corrterm(&["slopes-for-slice-genus", "0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[]\n");
}

#[test]
fn lspace_obstruct_exit_codes() {
    // 2g-1 = 15, t = 3: thickness 1 < 2 is excluded, thickness 3 is not
    let (code, _, _) = corrterm(&["lspace-obstruct", "--g", "8", "--th", "1"]);
    assert_eq!(code, 1);
    let (code, stdout, _) = corrterm(&["lspace-obstruct", "--g", "8", "--th", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"excluded\":false"));
}

#[test]
fn gen_alex_and_reconstruct_frozen() {
    let (code, stdout, _) = corrterm(&["gen-alex", "--q", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"q\":3,\"p\":5,\"genus\":8,\"alex\":\"8:1,7:-1,4:1,3:-1,1:1,0:-1\",\
         \"poly\":\"t^8 - t^7 + t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4 - t^-7 + t^-8\"}\n"
    );

    let (code, stdout, _) = corrterm(&["reconstruct", "--q", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"q\":3,\"p\":5,\"genus\":8,\"v\":[3,2,2,2,1,1,1,1,0],\
         \"blocks\":[{\"value\":3,\"len\":1},{\"value\":2,\"len\":3},{\"value\":1,\"len\":4}]}\n"
    );

    let (code, _, _) = corrterm(&["gen-alex", "--q", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_torus_sweep_passes() {
    let (code, stdout, _) = corrterm(&["verify-torus", "--max", "60", "--format", "text"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("all match"));

    let (_, json, _) = corrterm(&["verify-torus", "--max", "60", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(json.trim_end()).unwrap();
    assert!(rows.iter().all(|r| r["ok"] == serde_json::Value::Bool(true)));
    assert_eq!(rows[0]["p"], 3);
    assert_eq!(rows[0]["q"], 2);
}

#[test]
fn cross_check_exit_codes() {
    // q = 3 is fully consistent
    let (code, _, _) = corrterm(&["cross-check", "--q-max", "3"]);
    assert_eq!(code, 0);
    // from q = 5 the thickness clause fails, so the sweep reports it
    let (code, stdout, _) = corrterm(&["cross-check", "--q-max", "5", "--format", "json"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"vi_match\":true"));
    assert!(stdout.contains("\"ok\":false"));
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(corrterm(&["lens", "--p", "4", "--q", "2"]).0, 2);
    assert_eq!(corrterm(&["lens", "--p", "0", "--q", "1"]).0, 2);
    assert_eq!(corrterm(&["knot", "--alex", "1:1"]).0, 2);
    assert_eq!(corrterm(&["knot", "--alex", "nonsense"]).0, 2);
    assert_eq!(corrterm(&["surgery", "--p", "5", "--q", "2"]).0, 2);
    assert_eq!(corrterm(&["surgery", "--p", "5", "--q", "2", "--vi", "0,1,0"]).0, 2);
    assert_eq!(corrterm(&["check-reducible", "--p", "2", "--q", "3", "--slice"]).0, 2);
    assert_eq!(corrterm(&["nonsense"]).0, 2);
}
