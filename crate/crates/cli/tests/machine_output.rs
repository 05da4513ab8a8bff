mod common;

use std::path::Path;

use common::ok;
use num_bigint::BigUint;
use serde_json::Value;

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schema")
        .join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).expect("schema file");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&value).expect("schema compiles")
}

fn assert_valid(name: &str, args: &[&str]) -> Value {
    let instance: Value = serde_json::from_str(&ok(args)).expect("output is JSON");
    let validator = schema(name);
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    instance
}

#[test]
fn json_outputs_match_schemas() {
    let v = assert_valid(
        "count",
        &["count", "--p", "2", "--n", "400", "--format", "json"],
    );
    // exact even past 64 bits
    assert!(v["count"].to_string().len() > 80);

    let v = assert_valid(
        "words",
        &["words", "--p", "3", "--n", "4", "--format", "json"],
    );
    assert_eq!(v["words"].as_array().unwrap().len(), 7);
    assert_valid(
        "words",
        &["words", "--p", "12", "--n", "3", "--format", "json"],
    );
    assert_valid(
        "words",
        &["words", "--p", "3", "--n", "0", "--format", "json"],
    );

    assert_valid("stats", &["stats", "--p", "3", "--word", "32321"]);

    for kind in ["F", "G", "A", "S", "I", "D"] {
        let v = assert_valid(
            "series",
            &[
                "series", "--p", "3", "--kind", kind, "--order", "6", "--format", "json",
            ],
        );
        assert_eq!(v["kind"], kind);
    }

    for which in ["1", "2", "3", "4"] {
        assert_valid("tables", &["tables", "--which", which, "--format", "json"]);
    }
    assert_valid(
        "tables",
        &[
            "tables", "--which", "2", "--pmin", "1", "--pmax", "7", "--nmax", "30", "--format",
            "json",
        ],
    );

    let v = assert_valid(
        "verify",
        &["verify", "--p", "4", "--nmax", "5", "--format", "json"],
    );
    assert_eq!(v["passed"], true);
    let row5 = &v["rows"][4];
    assert_eq!(
        (
            row5["words"].as_u64(),
            row5["inner"].as_u64(),
            row5["sper"].as_u64(),
            row5["area"].as_u64()
        ),
        (Some(15), Some(124), Some(152), Some(261))
    );
}

#[test]
fn schemas_reject_malformed_documents() {
    let bad = serde_json::json!({ "p": 3, "n": 4, "count": "7" });
    assert!(!schema("count").is_valid(&bad));
    let bad = serde_json::json!({ "p": 3, "word": "321", "n": 3, "area": 6, "sper": 6, "inn": 1 });
    assert!(!schema("stats").is_valid(&bad));
}

#[test]
fn series_json_round_trips() {
    let text = ok(&[
        "series", "--p", "2", "--kind", "F", "--order", "5", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let s = pfib_core::TruncatedSeries::from_json(pfib_core::Var::X, 5, &v["terms"]).unwrap();
    assert_eq!(s.to_string(), v["text"].as_str().unwrap());
}

#[test]
fn csv_round_trips_through_a_parser() {
    for which in ["1", "2", "3", "4"] {
        let text = ok(&["tables", "--which", which, "--format", "csv"]);
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let headers = reader.headers().unwrap().clone();
        assert_eq!(
            headers.iter().collect::<Vec<_>>(),
            ["p", "n", "value", "published", "discrepancy"]
        );
        let json: Value =
            serde_json::from_str(&ok(&["tables", "--which", which, "--format", "json"])).unwrap();
        let cells = json["cells"].as_array().unwrap();
        let mut rows = 0;
        let mut rebuilt = String::from("p,n,value,published,discrepancy\n");
        for (record, cell) in reader.records().zip(cells) {
            let r = record.unwrap();
            let p: u8 = r[0].parse().unwrap();
            let n: usize = r[1].parse().unwrap();
            let value: BigUint = r[2].parse().unwrap();
            let published: Option<u64> = (!r[3].is_empty()).then(|| r[3].parse().unwrap());
            let discrepancy: bool = r[4].parse().unwrap();
            assert_eq!(cell["p"].as_u64(), Some(u64::from(p)));
            assert_eq!(cell["n"].as_u64(), Some(n as u64));
            assert_eq!(cell["value"].to_string(), value.to_string());
            assert_eq!(cell["published"].as_u64(), published);
            assert_eq!(cell["discrepancy"].as_bool(), Some(discrepancy));
            assert_eq!(discrepancy, which == "2" && (p, n) == (2, 9));
            let published = published.map(|v| v.to_string()).unwrap_or_default();
            rebuilt.push_str(&format!("{p},{n},{value},{published},{discrepancy}\n"));
            rows += 1;
        }
        assert_eq!(rows, 40);
        assert_eq!(rebuilt, text);
    }
}
