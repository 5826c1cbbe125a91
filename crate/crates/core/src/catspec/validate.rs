use serde::Serialize;
use serde_json::{json, Value};

use super::poset::subobject_closure;
use super::{theta_of, CategorySpec};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub message: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn rules(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.rule.as_str()).collect()
    }
}

/// Checks the length-function axioms on the declared data. Violations are
/// returned as data, never as errors.
pub fn validate_spec(spec: &CategorySpec) -> ValidationReport {
    let mut out = Vec::new();
    let mut push = |rule: &str, message: String, witness: Value| {
        out.push(Violation {
            rule: rule.to_string(),
            message,
            witness,
        })
    };
    let n = spec.len();

    for (i, id) in spec.ids().iter().enumerate() {
        if spec.theta_at(i) == 0 {
            push(
                "theta-positive",
                format!("indecomposable `{id}` has length 0"),
                json!({"object": id, "theta": 0}),
            );
        }
        if spec.hom_at(i, i) == 0 {
            push(
                "hom-identity",
                format!("hom[{id}][{id}] = 0 but the identity is nonzero"),
                json!({"object": id, "hom": 0}),
            );
        }
    }

    // builder guarantees every summand is declared
    let th = |o| theta_of(spec, o).expect("declared summands");
    for conf in spec.conflations() {
        let (a, b, c) = (th(&conf.a), th(&conf.b), th(&conf.c));
        let broken = if conf.stable { b != a + c } else { b > a + c };
        if broken {
            let relation = if conf.stable { "≠" } else { ">" };
            push(
                "stability-arithmetic",
                format!(
                    "conflation {} → {} → {} (stable={}): {b} {relation} {a} + {c}",
                    conf.a, conf.b, conf.c, conf.stable
                ),
                json!({
                    "a": conf.a.to_string(), "b": conf.b.to_string(), "c": conf.c.to_string(),
                    "stable": conf.stable, "theta": [a, b, c],
                }),
            );
        }
    }

    for inf in spec.inflations() {
        let x = u64::from(spec.theta(&inf.sub).expect("declared"));
        let y = th(&inf.target);
        let is_identity = inf.target.as_indecomposable() == Some(&inf.sub);
        if x > y || (x == y && !is_identity) {
            push(
                "inflation-monotone",
                format!(
                    "inflation {} ↣ {}: theta {x} vs {y} (equality only for an isomorphism)",
                    inf.sub, inf.target
                ),
                json!({"sub": inf.sub, "target": inf.target.to_string(), "theta": [x, y]}),
            );
        }
    }

    let closure = subobject_closure(spec);
    for x in 0..n {
        for y in 0..n {
            if x == y || !closure.get(x, y) {
                continue;
            }
            let (idx, idy) = (spec.id_at(x), spec.id_at(y));
            if closure.get(y, x) {
                if x < y {
                    push(
                        "antisymmetry",
                        format!("`{idx}` ≤ `{idy}` and `{idy}` ≤ `{idx}` in the subobject closure"),
                        json!({"objects": [idx, idy]}),
                    );
                }
            } else if spec.theta_at(x) >= spec.theta_at(y) {
                push(
                    "subobject-monotone",
                    format!(
                        "`{idx}` < `{idy}` but theta {} >= {}",
                        spec.theta_at(x),
                        spec.theta_at(y)
                    ),
                    json!({"sub": idx, "sup": idy, "theta": [spec.theta_at(x), spec.theta_at(y)]}),
                );
            }
        }
    }

    ValidationReport::from_violations(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catspec::obj;

    #[test]
    fn stable_conflation_arithmetic() {
        let spec = CategorySpec::builder("bad")
            .indecomposable("S", 1)
            .conflation(obj(["S"]), obj(["S"]), obj(["S"]), true)
            .build()
            .unwrap();
        let report = validate_spec(&spec);
        assert!(!report.ok);
        assert_eq!(report.rules(), ["stability-arithmetic"]);
        assert!(report.violations[0].message.contains("1 ≠ 1 + 1"));
    }

    #[test]
    fn non_stable_conflations_are_subadditive() {
        let ok = CategorySpec::builder("ok")
            .indecomposable("S", 1)
            .conflation(obj(["S"]), obj(["S"]), obj(["S"]), false)
            .build()
            .unwrap();
        assert!(validate_spec(&ok).ok);
        let bad = CategorySpec::builder("bad")
            .indecomposable("S", 1)
            .conflation(obj(["S"]), obj(["S", "S", "S"]), obj(["S"]), false)
            .build()
            .unwrap();
        assert_eq!(validate_spec(&bad).rules(), ["stability-arithmetic"]);
    }

    #[test]
    fn antisymmetry_violation() {
        let spec = CategorySpec::builder("cycle")
            .indecomposable("S", 1)
            .indecomposable("T", 1)
            .inflation("S", obj(["T"]))
            .inflation("T", obj(["S"]))
            .build()
            .unwrap();
        let report = validate_spec(&spec);
        assert!(report.rules().contains(&"antisymmetry"));
        assert!(report.rules().contains(&"inflation-monotone"));
    }

    #[test]
    fn theta_and_identity_axioms() {
        let spec = CategorySpec::builder("z")
            .indecomposable("Z", 0)
            .hom("Z", "Z", 0)
            .build()
            .unwrap();
        assert_eq!(validate_spec(&spec).rules(), ["theta-positive", "hom-identity"]);
    }

    #[test]
    fn identity_inflation_is_allowed() {
        let spec = CategorySpec::builder("id")
            .indecomposable("S", 1)
            .inflation("S", obj(["S"]))
            .build()
            .unwrap();
        assert!(validate_spec(&spec).ok);
    }
}
