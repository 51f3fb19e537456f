use hcpairs::cli::run;
use hcpairs::hcpair::HCPair;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["hcpairs"];
    argv.extend_from_slice(args);
    run(argv)
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = cli(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn failing_check_is_named() {
    let (code, out, _) = cli(&["verify-family", "l", "--t", "0", "--char", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("verification failed: cubic"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&["bogus"]).0, 2);
    assert_eq!(cli(&["verify-family", "nope"]).0, 2);
    assert_eq!(cli(&["hom-dim", "--m", "1"]).0, 2);
    assert_eq!(cli(&["--char", "4", "hom-dim", "--m", "1", "--n", "3"]).0, 2);
    assert_eq!(cli(&["hom-dim", "--m", "1", "--n", "3", "--symmetry", "sym"]).0, 2);
    assert_eq!(cli(&["verify-family", "s", "--t", "1", "--char", "3"]).0, 2);
    assert_eq!(cli(&["centralizer", "--model", "gl(2|2)", "--alpha", "1,1"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn pair_json_round_trips() {
    let v = json(&["verify-family", "q2", "--a", "2", "--c", "-1/2", "--char", "7", "--emit-pair"]);
    let text = serde_json::to_string(&v["pair"]).unwrap();
    let p = HCPair::from_json(&text).unwrap();
    let back: Value = serde_json::from_str(&p.to_json().unwrap()).unwrap();
    assert_eq!(back, v["pair"]);
    let dir = std::env::temp_dir().join(format!("hcpairs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    std::fs::write(&path, &text).unwrap();
    let (code, out, err) = cli(&["verify-family", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("4 of 4"));
    let out_path = dir.join("hom.txt");
    let (code, out, _) = cli(&["hom-dim", "--m", "2", "--n", "4", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&out_path).unwrap(), out);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_outputs() {
    assert_eq!(json(&["hom-dim", "--m", "3", "--n", "3", "--symmetry", "sym"])["dimension"], 1);
    assert_eq!(json(&["hom-dim", "--m", "3", "--n", "3", "--simple", "--char", "3"])["dimension"], 0);
    assert_eq!(json(&["bracket-search", "--module", "L(3)", "--char", "5"])["dimension"], 0);
    let l = json(&["loewy", "--module", "V(3)", "--char", "3"]);
    assert_eq!(l["loewy_length"], 2);
    assert_eq!(l["socle_layers"], serde_json::json!([["1"], ["3"]]));
    let q = json(&["iso-check", "q2", "--a", "1", "--c", "2", "--a2", "2", "--c2", "1"]);
    assert_eq!(q["isomorphic"], true);
    assert_eq!(q["extra"]["alpha"], "1/2");
    let h = json(&["iso-check", "h", "--t", "3", "--t2", "-2"]);
    assert_eq!(h["isomorphic"], true);
    assert!(h["witness"].is_object());
    assert_eq!(json(&["iso-check", "s", "--t", "3", "--t2", "6", "--char", "3"])["isomorphic"], false);
    let c = json(&["centralizer", "--model", "sl(2|2)", "--alpha", "1,3"]);
    assert_eq!(c[0]["odd_roots"][0]["dim"], 2);
    assert_eq!(json(&["centralizer", "--model", "q(3)"]).as_array().unwrap().len(), 6);
}

mod props {
    use super::cli;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn exit_codes_are_deterministic(tag in prop::sample::select(vec!["h3s1", "s", "l", "k", "h", "z", "spo21"]), t in -3i64..4, p in prop::sample::select(vec![0u64, 3, 5, 7])) {
            let (ts, ps) = (t.to_string(), p.to_string());
            let args = ["verify-family", tag, "--t", &ts, "--s", "1", "--char", &ps];
            let first = cli(&args);
            prop_assert_eq!(&first, &cli(&args));
            prop_assert!([0, 1, 2].contains(&first.0));
        }

        #[test]
        fn hom_dim_matches_library(m in 0usize..6, n in 0usize..6, p in prop::sample::select(vec![0u64, 5, 7])) {
            let (ms, ns, ps) = (m.to_string(), n.to_string(), p.to_string());
            let (code, out, _) = cli(&["hom-dim", "--m", &ms, "--n", &ns, "--char", &ps]);
            prop_assert_eq!(code, 0);
            let (lo, hi) = (m.min(n), m.max(n));
            let expect = usize::from(hi - lo == 2 || (lo == hi && lo >= 1));
            prop_assert_eq!(out.trim().parse::<usize>().unwrap(), expect);
        }
    }
}
