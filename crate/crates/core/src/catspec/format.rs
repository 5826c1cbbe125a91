//! The `.grcat.json` file format.
//!
//! ```json
//! {
//!   "name": "final-example",
//!   "description": "optional free text",
//!   "metadata": {"complete": true, "models_infinite": false, "theta_bound": 5},
//!   "indecomposables": [{"id": "S", "theta": 1}],
//!   "hom": [{"from": "S", "to": "S", "dim": 1}],
//!   "ext": [{"c": "S", "a": "S", "dim": 0}],
//!   "inflations": [{"sub": "S", "target": ["S"]}],
//!   "conflations": [{"a": ["S"], "b": ["S", "S"], "c": ["S"], "stable": true}]
//! }
//! ```
//!
//! Absent Hom pairs are 0 except the diagonal, which defaults to 1. The Ext
//! matrix is indexed `ext[c][a] = dim E(c, a)`; an absent `ext` key means the
//! instance carries no Ext data at all. Unknown keys are rejected.
//!
//! Rendering is canonical: fixed key order, one array element per line,
//! sorted Hom/Ext entries, sorted inflations and conflations.

use serde::{Deserialize, Serialize};

use super::{CategorySpec, IndecId, Inflation, Metadata, ObjectRef, SpecBuilder, SpecError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    name: String,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    metadata: RawMetadata,
    indecomposables: Vec<RawIndec>,
    #[serde(default)]
    hom: Vec<RawHom>,
    #[serde(default)]
    ext: Option<Vec<RawExt>>,
    #[serde(default)]
    inflations: Vec<RawInflation>,
    #[serde(default)]
    conflations: Vec<RawConflation>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawMetadata {
    #[serde(default)]
    complete: bool,
    #[serde(default)]
    models_infinite: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    theta_bound: Option<i64>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawIndec {
    id: String,
    theta: i64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawHom {
    from: String,
    to: String,
    dim: i64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawExt {
    c: String,
    a: String,
    dim: i64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawInflation {
    sub: String,
    target: Vec<String>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawConflation {
    a: Vec<String>,
    b: Vec<String>,
    c: Vec<String>,
    stable: bool,
}

fn to_u32(value: i64, context: impl Fn() -> String) -> Result<u32, SpecError> {
    if value < 0 {
        return Err(SpecError::NegativeDimension {
            context: context(),
            value,
        });
    }
    u32::try_from(value).map_err(|_| SpecError::OutOfRange {
        context: context(),
        value,
    })
}

fn to_object(ids: Vec<String>) -> Result<ObjectRef, SpecError> {
    ids.into_iter()
        .map(IndecId::new)
        .collect::<Result<Vec<_>, _>>()
        .map(|v| v.into_iter().collect())
}

/// Parses a `.grcat.json` document. Referential integrity and sign checks
/// happen here; the semantic axioms are checked by
/// [`validate_spec`](super::validate_spec).
pub fn parse_spec(text: &str) -> Result<CategorySpec, SpecError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| SpecError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let theta_bound = raw
        .metadata
        .theta_bound
        .map(|v| to_u32(v, || "metadata.theta_bound".into()))
        .transpose()?;
    let mut b = SpecBuilder::new(raw.name).metadata(Metadata {
        description: raw.description,
        complete: raw.metadata.complete,
        models_infinite: raw.metadata.models_infinite,
        theta_bound,
    });

    for ind in raw.indecomposables {
        let id = IndecId::new(ind.id)?;
        let theta = to_u32(ind.theta, || format!("theta of `{id}`"))?;
        b = b.indecomposable(id, theta);
    }
    for h in raw.hom {
        let dim = to_u32(h.dim, || format!("hom[{}][{}]", h.from, h.to))?;
        b = b.hom(IndecId::new(h.from)?, IndecId::new(h.to)?, dim);
    }
    if let Some(ext) = raw.ext {
        b = b.with_ext();
        for e in ext {
            let dim = to_u32(e.dim, || format!("ext[{}][{}]", e.c, e.a))?;
            b = b.ext(IndecId::new(e.c)?, IndecId::new(e.a)?, dim);
        }
    }
    for inf in raw.inflations {
        b = b.inflation(IndecId::new(inf.sub)?, to_object(inf.target)?);
    }
    for conf in raw.conflations {
        b = b.conflation(
            to_object(conf.a)?,
            to_object(conf.b)?,
            to_object(conf.c)?,
            conf.stable,
        );
    }
    b.build()
}

fn names(obj: &ObjectRef) -> Vec<String> {
    obj.summands().iter().map(|s| s.to_string()).collect()
}

fn push_array<T: Serialize>(out: &mut String, key: &str, items: &[T], last: bool) {
    out.push_str(&format!("  {}: [", serde_json::to_string(key).unwrap()));
    if items.is_empty() {
        out.push(']');
    } else {
        out.push('\n');
        for (i, item) in items.iter().enumerate() {
            out.push_str("    ");
            out.push_str(&serde_json::to_string(item).expect("plain data serializes"));
            if i + 1 < items.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]");
    }
    out.push_str(if last { "\n" } else { ",\n" });
}

/// Canonical JSON rendering; `parse_spec(&render_spec(s)) == s`.
pub fn render_spec(spec: &CategorySpec) -> String {
    let n = spec.len();
    let meta = spec.metadata();
    let mut out = String::from("{\n");
    out.push_str(&format!(
        "  \"name\": {},\n",
        serde_json::to_string(spec.name()).unwrap()
    ));
    if let Some(d) = &meta.description {
        out.push_str(&format!(
            "  \"description\": {},\n",
            serde_json::to_string(d).unwrap()
        ));
    }
    let raw_meta = RawMetadata {
        complete: meta.complete,
        models_infinite: meta.models_infinite,
        theta_bound: meta.theta_bound.map(i64::from),
    };
    out.push_str(&format!(
        "  \"metadata\": {},\n",
        serde_json::to_string(&raw_meta).unwrap()
    ));

    let indecs: Vec<RawIndec> = spec
        .ids()
        .iter()
        .map(|id| RawIndec {
            id: id.to_string(),
            theta: i64::from(spec.theta(id).unwrap()),
        })
        .collect();
    push_array(&mut out, "indecomposables", &indecs, false);

    let mut hom = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let d = spec.hom_at(i, j);
            if d != 0 || i == j {
                hom.push(RawHom {
                    from: spec.id_at(i).to_string(),
                    to: spec.id_at(j).to_string(),
                    dim: i64::from(d),
                });
            }
        }
    }
    push_array(&mut out, "hom", &hom, false);

    if spec.has_ext() {
        let mut ext = Vec::new();
        for c in 0..n {
            for a in 0..n {
                let d = spec.ext_at(c, a).unwrap();
                if d != 0 {
                    ext.push(RawExt {
                        c: spec.id_at(c).to_string(),
                        a: spec.id_at(a).to_string(),
                        dim: i64::from(d),
                    });
                }
            }
        }
        push_array(&mut out, "ext", &ext, false);
    }

    let inflations: Vec<RawInflation> = spec
        .inflations()
        .iter()
        .map(|Inflation { sub, target }| RawInflation {
            sub: sub.to_string(),
            target: names(target),
        })
        .collect();
    push_array(&mut out, "inflations", &inflations, false);

    let conflations: Vec<RawConflation> = spec
        .conflations()
        .iter()
        .map(|c| RawConflation {
            a: names(&c.a),
            b: names(&c.b),
            c: names(&c.c),
            stable: c.stable,
        })
        .collect();
    push_array(&mut out, "conflations", &conflations, true);
    out.push_str("}\n");
    out
}
