mod common;

use common::{brownlab, brownlab_with_env, json};
use serde_json::json;

#[test]
fn analyze_s3_at_3() {
    let r = json(&["analyze", "sym:3", "--p", "3", "--no-timing"]);
    assert_eq!(r["schemaVersion"], 1);
    assert_eq!(r["groupOrder"], 6);
    assert_eq!(r["sylowOrder"], 3);
    assert_eq!(
        r["weakHomomorphisms"]["primeToP"]["invariantFactors"],
        json!([2])
    );
    assert_eq!(r["oracle"]["agree"], true);
    assert!(r.get("timing").is_none());
}

#[test]
fn analyze_a5_at_2() {
    let r = json(&["analyze", "alt:5", "--p", "2", "--variants", "--no-timing"]);
    assert_eq!(
        r["weakHomomorphisms"]["primeToP"]["invariantFactors"],
        json!([3])
    );
    assert_eq!(r["components"]["count"], 5);
    assert_eq!(
        r["components"]["stronglyPEmbedded"],
        json!([true, true, true, true, true])
    );
    assert_eq!(r["complex"]["reducedEuler"], 4);
    assert_eq!(r["complex"]["reducedEulerDivisibleBySylowOrder"], true);
    assert_eq!(
        r["complex"]["homology"]["reducedHomology"],
        json!([{"degree": 0, "freeRank": 4, "invariantFactors": []}])
    );
    assert_eq!(r["quotient"]["acyclic"], true);
    assert_eq!(r["variants"]["agree"], true);
    assert_eq!(
        r["posetSizes"],
        json!({"brown": 20, "quillen": 20, "bouc": 5})
    );
}

#[test]
fn analyze_prime_not_dividing_the_order() {
    let r = json(&["analyze", "sym:3", "--p", "5", "--no-timing"]);
    assert_eq!(r["pDividesOrder"], false);
    assert_eq!(r["posetSizes"]["brown"], 0);
    assert!(r["notes"][0]
        .as_str()
        .unwrap()
        .contains("p does not divide |G|"));
    assert_eq!(r["complex"]["fVector"], json!([]));
}

#[test]
fn analyze_embeds_exports_on_request() {
    let r = json(&[
        "analyze",
        "sym:3",
        "--p",
        "2",
        "--complex",
        "--quotient",
        "--no-timing",
    ]);
    assert_eq!(r["complexExport"]["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(r["quotientExport"]["vertices"].as_array().unwrap().len(), 1);
    let plain = json(&["analyze", "sym:3", "--p", "2", "--no-timing"]);
    assert!(plain.get("complexExport").is_none());
}

#[test]
fn analyze_writes_export_files() {
    let dir = std::env::temp_dir().join(format!("brownlab-export-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let out = brownlab(&[
        "analyze",
        "sym:3",
        "--p",
        "3",
        "--no-timing",
        "--export",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["complex.json", "quotient.json", "bundles.json"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["schemaVersion"], 1, "{name}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn weakhom_sign_table() {
    let r = json(&[
        "weakhom",
        "sym:3",
        "--p",
        "3",
        "--modulus",
        "2",
        "--list",
        "--oracle",
        "--no-timing",
    ]);
    let table = &r["generators"][0]["values"];
    for entry in table.as_array().unwrap() {
        let element = entry["element"].as_str().unwrap();
        let transposition = element.split_whitespace().count() == 2;
        assert_eq!(entry["exponent"], u64::from(transposition), "{element}");
    }
    assert_eq!(
        r["oracle"]["checks"],
        json!([{"modulus": 2, "mode": "exhaustive", "count": 2, "predicted": 2, "agree": true}])
    );
}

#[test]
fn weakhom_trivial_cases() {
    for (spec, p) in [("alt:4", "3"), ("q8", "2")] {
        let r = json(&["weakhom", spec, "--p", p, "--no-timing"]);
        for key in ["w", "torsion", "primeToP"] {
            assert_eq!(r[key]["invariantFactors"], json!([]), "{spec} {key}");
        }
        assert_eq!(r["generatorCount"], 0);
    }
}

#[test]
fn export_bundle_transitions() {
    let r = json(&["export", "bundle", "sym:3", "--p", "3", "--modulus", "2"]);
    assert_eq!(r["modulus"], 2);
    let bundle = &r["bundles"][0];
    assert_eq!(bundle["order"], 2);
    // Sylow 3-subgroup of S3 is normal, so every pair of translates meets.
    assert_eq!(bundle["transitions"].as_array().unwrap().len(), 36);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| brownlab(args).status.code();
    assert_eq!(code(&["analyze", "bogus:3", "--p", "2"]), Some(2));
    assert_eq!(code(&["analyze", "perm:3:(1 2 4)", "--p", "2"]), Some(2));
    assert_eq!(code(&["weakhom", "sym:3", "--p", "4"]), Some(2));
    assert_eq!(
        code(&["weakhom", "sym:3", "--p", "3", "--modulus", "0"]),
        Some(2)
    );
    assert_eq!(code(&["weakhom", "sym:8", "--p", "2"]), Some(3));
    let capped = brownlab_with_env(
        &["analyze", "sym:4", "--p", "2"],
        &[("BROWNLAB_MAX_ORDER", "10")],
    );
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    let garbage = brownlab_with_env(
        &["analyze", "sym:4", "--p", "2"],
        &[("BROWNLAB_MAX_ORDER", "many")],
    );
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "analyze",
            "alt:5",
            "--p",
            "3",
            "--variants",
            "--complex",
            "--no-timing",
        ][..],
        &[
            "weakhom",
            "dihedral:12",
            "--p",
            "2",
            "--list",
            "--oracle",
            "--no-timing",
        ][..],
        &["export", "complex", "sym:4", "--p", "2", "--quotient"][..],
    ] {
        assert_eq!(brownlab(args).stdout, brownlab(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_all_passes() {
    let out = brownlab(&["verify", "all"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("PASS topology/orbit-space-acyclic")));
    assert!(text.ends_with("19 of 19 properties passed\n"));
}
