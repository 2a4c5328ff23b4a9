//! Strict JSON encoding of group specs.
//!
//! Schema (one object per spec, discriminated by `family`):
//!
//! ```json
//! {"family": "cyclic",          "m": 5}
//! {"family": "cyclic_product",  "moduli": [2, 4]}
//! {"family": "dihedral",        "m": 4}
//! {"family": "coxeter_a",       "rank": 3}
//! {"family": "coxeter_b",       "rank": 3}
//! {"family": "coxeter_d",       "rank": 4}
//! {"family": "coxeter_i2",      "m": 7}
//! {"family": "coxeter_product", "factors": [ ...specs... ]}
//! ```
//!
//! Unknown keys are rejected so typos fail fast.

use anyhow::{anyhow, bail, Context, Result};
use braidwalk_core::group::GroupSpec;
use serde_json::{json, Map, Value};

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let value: Value = serde_json::from_str(text).context("group spec is not valid JSON")?;
    spec_from_value(&value)
}

fn spec_from_value(value: &Value) -> Result<GroupSpec> {
    let obj = value
        .as_object()
        .ok_or_else(|| anyhow!("group spec must be a JSON object"))?;
    let family = obj
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("group spec needs a string \"family\" key"))?;
    match family {
        "cyclic" => {
            expect_keys(obj, &["family", "m"])?;
            Ok(GroupSpec::Cyclic { m: get_u64(obj, "m")? })
        }
        "cyclic_product" => {
            expect_keys(obj, &["family", "moduli"])?;
            let moduli = obj
                .get("moduli")
                .and_then(Value::as_array)
                .ok_or_else(|| anyhow!("\"moduli\" must be an array of integers"))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .ok_or_else(|| anyhow!("\"moduli\" entries must be positive integers"))
                })
                .collect::<Result<Vec<u64>>>()?;
            Ok(GroupSpec::CyclicProduct { moduli })
        }
        "dihedral" => {
            expect_keys(obj, &["family", "m"])?;
            Ok(GroupSpec::Dihedral { m: get_u64(obj, "m")? })
        }
        "coxeter_a" => {
            expect_keys(obj, &["family", "rank"])?;
            Ok(GroupSpec::CoxeterA { rank: get_u64(obj, "rank")? as u32 })
        }
        "coxeter_b" => {
            expect_keys(obj, &["family", "rank"])?;
            Ok(GroupSpec::CoxeterB { rank: get_u64(obj, "rank")? as u32 })
        }
        "coxeter_d" => {
            expect_keys(obj, &["family", "rank"])?;
            Ok(GroupSpec::CoxeterD { rank: get_u64(obj, "rank")? as u32 })
        }
        "coxeter_i2" => {
            expect_keys(obj, &["family", "m"])?;
            Ok(GroupSpec::CoxeterI2 { m: get_u64(obj, "m")? })
        }
        "coxeter_product" => {
            expect_keys(obj, &["family", "factors"])?;
            let factors = obj
                .get("factors")
                .and_then(Value::as_array)
                .ok_or_else(|| anyhow!("\"factors\" must be an array of group specs"))?
                .iter()
                .map(spec_from_value)
                .collect::<Result<Vec<GroupSpec>>>()?;
            Ok(GroupSpec::CoxeterProduct { factors })
        }
        other => bail!("unknown group family {other:?}"),
    }
}

fn expect_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            bail!("unknown key {key:?} in group spec (allowed: {allowed:?})");
        }
    }
    for key in allowed {
        if !obj.contains_key(*key) {
            bail!("missing key {key:?} in group spec");
        }
    }
    Ok(())
}

fn get_u64(obj: &Map<String, Value>, key: &str) -> Result<u64> {
    obj.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("key {key:?} must be a nonnegative integer"))
}

/// Inverse of [`parse_group_spec`], used to echo specs into JSON outputs.
pub fn spec_to_value(spec: &GroupSpec) -> Value {
    match spec {
        GroupSpec::Cyclic { m } => json!({"family": "cyclic", "m": m}),
        GroupSpec::CyclicProduct { moduli } => {
            json!({"family": "cyclic_product", "moduli": moduli})
        }
        GroupSpec::Dihedral { m } => json!({"family": "dihedral", "m": m}),
        GroupSpec::CoxeterA { rank } => json!({"family": "coxeter_a", "rank": rank}),
        GroupSpec::CoxeterB { rank } => json!({"family": "coxeter_b", "rank": rank}),
        GroupSpec::CoxeterD { rank } => json!({"family": "coxeter_d", "rank": rank}),
        GroupSpec::CoxeterI2 { m } => json!({"family": "coxeter_i2", "m": m}),
        GroupSpec::CoxeterProduct { factors } => {
            json!({
                "family": "coxeter_product",
                "factors": factors.iter().map(spec_to_value).collect::<Vec<Value>>()
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_family() {
        assert_eq!(
            parse_group_spec(r#"{"family":"cyclic","m":5}"#).unwrap(),
            GroupSpec::Cyclic { m: 5 }
        );
        assert_eq!(
            parse_group_spec(r#"{"family":"coxeter_a","rank":3}"#).unwrap(),
            GroupSpec::CoxeterA { rank: 3 }
        );
        assert_eq!(
            parse_group_spec(r#"{"family":"cyclic_product","moduli":[2,4]}"#).unwrap(),
            GroupSpec::CyclicProduct { moduli: vec![2, 4] }
        );
        let nested = r#"{"family":"coxeter_product","factors":[
            {"family":"coxeter_a","rank":1},{"family":"coxeter_i2","m":3}]}"#;
        assert_eq!(
            parse_group_spec(nested).unwrap(),
            GroupSpec::CoxeterProduct {
                factors: vec![GroupSpec::CoxeterA { rank: 1 }, GroupSpec::CoxeterI2 { m: 3 }]
            }
        );
    }

    #[test]
    fn unknown_and_missing_keys_rejected() {
        assert!(parse_group_spec(r#"{"family":"cyclic","m":5,"extra":1}"#).is_err());
        assert!(parse_group_spec(r#"{"family":"cyclic"}"#).is_err());
        assert!(parse_group_spec(r#"{"family":"coxeter_a","m":5}"#).is_err());
        assert!(parse_group_spec(r#"{"family":"nope","m":5}"#).is_err());
        assert!(parse_group_spec(r#"[1,2]"#).is_err());
    }

    #[test]
    fn round_trips_through_json() {
        let specs = [
            GroupSpec::Cyclic { m: 7 },
            GroupSpec::Dihedral { m: 4 },
            GroupSpec::CoxeterProduct {
                factors: vec![GroupSpec::CoxeterB { rank: 2 }, GroupSpec::CoxeterA { rank: 1 }],
            },
        ];
        for spec in specs {
            let text = spec_to_value(&spec).to_string();
            assert_eq!(parse_group_spec(&text).unwrap(), spec);
        }
    }
}
