//! Data model for finite length-category instances.
//!
//! Objects are formal direct sums of indecomposables (Krull-Schmidt), so an
//! [`ObjectRef`] is just a sorted multiset of ids. Lengths are stored per
//! indecomposable only; the length of a composite object is always the sum
//! over its summands, which makes additivity on direct sums hold by
//! construction.

mod format;
mod poset;
mod validate;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use format::{parse_spec, render_spec};
pub(crate) use poset::subobject_closure;
pub use poset::{subobject_poset, PosetError, SubobjectPoset};
pub use validate::{validate_spec, ValidationReport, Violation};

/// Maximum number of conflations accepted in a single instance.
pub const MAX_CONFLATIONS: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("undeclared id `{id}` referenced in {context}")]
    UndeclaredId { id: String, context: String },
    #[error("negative value {value} in {context}")]
    NegativeDimension { context: String, value: i64 },
    #[error("value {value} out of range in {context}")]
    OutOfRange { context: String, value: i64 },
    #[error("duplicate entry for {0}")]
    DuplicateEntry(String),
    #[error("empty id")]
    EmptyId,
    #[error("{count} conflations exceed the limit of {limit}")]
    TooManyConflations { count: usize, limit: usize },
}

/// Identifier of an indecomposable object. Case-sensitive, nonempty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndecId(String);

impl IndecId {
    pub fn new(id: impl Into<String>) -> Result<Self, SpecError> {
        let id = id.into();
        if id.is_empty() {
            return Err(SpecError::EmptyId);
        }
        Ok(IndecId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for IndecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for IndecId {
    /// Panics on the empty string; use [`IndecId::new`] for untrusted input.
    fn from(s: &str) -> Self {
        IndecId::new(s).expect("indecomposable ids are nonempty")
    }
}

/// A finite direct sum of indecomposables, kept as a sorted multiset.
/// The empty multiset is the zero object.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectRef(Vec<IndecId>);

impl ObjectRef {
    pub fn zero() -> Self {
        ObjectRef(Vec::new())
    }

    pub fn single(id: IndecId) -> Self {
        ObjectRef(vec![id])
    }

    pub fn summands(&self) -> &[IndecId] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The summand if this object is indecomposable.
    pub fn as_indecomposable(&self) -> Option<&IndecId> {
        match self.0.as_slice() {
            [x] => Some(x),
            _ => None,
        }
    }

    pub fn contains(&self, id: &IndecId) -> bool {
        self.0.binary_search(id).is_ok()
    }

    pub fn multiplicity(&self, id: &IndecId) -> usize {
        self.0.iter().filter(|x| *x == id).count()
    }

    /// Distinct summands with their multiplicities, in sorted order.
    pub fn multiplicities(&self) -> Vec<(&IndecId, usize)> {
        let mut out: Vec<(&IndecId, usize)> = Vec::new();
        for id in &self.0 {
            match out.last_mut() {
                Some((last, n)) if *last == id => *n += 1,
                _ => out.push((id, 1)),
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &ObjectRef) -> ObjectRef {
        self.0.iter().chain(other.0.iter()).cloned().collect()
    }
}

impl Serialize for ObjectRef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl FromIterator<IndecId> for ObjectRef {
    fn from_iter<T: IntoIterator<Item = IndecId>>(iter: T) -> Self {
        let mut v: Vec<IndecId> = iter.into_iter().collect();
        v.sort();
        ObjectRef(v)
    }
}

impl fmt::Display for ObjectRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (id, n)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if n > 1 {
                write!(f, "{id}^{n}")?;
            } else {
                write!(f, "{id}")?;
            }
        }
        Ok(())
    }
}

/// Declared Θ-inflation from an indecomposable into an object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inflation {
    pub sub: IndecId,
    pub target: ObjectRef,
}

/// A conflation `a → b → c`; `stable` marks Θ-stable ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Conflation {
    pub a: ObjectRef,
    pub b: ObjectRef,
    pub c: ObjectRef,
    pub stable: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata {
    pub description: Option<String>,
    /// The conflation table realises every filtration of objects in the
    /// universe it mentions.
    pub complete: bool,
    /// The instance is a finite window of a category with infinitely many
    /// indecomposables.
    pub models_infinite: bool,
    /// Total-length bound under which the conflation table was enumerated.
    pub theta_bound: Option<u32>,
}

/// A finite instance: indecomposables, lengths, Hom/Ext dimensions,
/// inflations and conflations. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategorySpec {
    name: String,
    metadata: Metadata,
    ids: Vec<IndecId>,
    index: HashMap<IndecId, usize>,
    theta: Vec<u32>,
    // row-major, hom[from * n + to]
    hom: Vec<u32>,
    // row-major, ext[c * n + a] = dim E(c, a)
    ext: Option<Vec<u32>>,
    inflations: Vec<Inflation>,
    conflations: Vec<Conflation>,
}

impl CategorySpec {
    pub fn builder(name: impl Into<String>) -> SpecBuilder {
        SpecBuilder::new(name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn metadata(&self) -> &Metadata {
        &self.metadata
    }

    /// Indecomposables in declaration order.
    pub fn ids(&self) -> &[IndecId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn index_of(&self, id: &IndecId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id_at(&self, i: usize) -> &IndecId {
        &self.ids[i]
    }

    pub fn theta(&self, id: &IndecId) -> Option<u32> {
        self.index_of(id).map(|i| self.theta[i])
    }

    pub fn theta_at(&self, i: usize) -> u32 {
        self.theta[i]
    }

    pub fn thetas(&self) -> &[u32] {
        &self.theta
    }

    pub fn hom_at(&self, from: usize, to: usize) -> u32 {
        self.hom[from * self.ids.len() + to]
    }

    pub fn hom(&self, from: &IndecId, to: &IndecId) -> Option<u32> {
        Some(self.hom_at(self.index_of(from)?, self.index_of(to)?))
    }

    pub fn has_ext(&self) -> bool {
        self.ext.is_some()
    }

    /// `dim E(c, a)`, or `None` when the instance carries no Ext data.
    pub fn ext_at(&self, c: usize, a: usize) -> Option<u32> {
        self.ext.as_ref().map(|e| e[c * self.ids.len() + a])
    }

    pub fn ext(&self, c: &IndecId, a: &IndecId) -> Option<u32> {
        self.ext_at(self.index_of(c)?, self.index_of(a)?)
    }

    pub fn inflations(&self) -> &[Inflation] {
        &self.inflations
    }

    pub fn conflations(&self) -> &[Conflation] {
        &self.conflations
    }

    /// Rebuild with a different conflation table and inflation set, keeping
    /// everything else. Used to derive mutated or extended instances.
    pub fn to_builder(&self) -> SpecBuilder {
        let mut b = SpecBuilder::new(self.name.clone());
        b.metadata = self.metadata.clone();
        for (i, id) in self.ids.iter().enumerate() {
            b.indecs.push((id.clone(), self.theta[i]));
        }
        let n = self.ids.len();
        for i in 0..n {
            for j in 0..n {
                let d = self.hom_at(i, j);
                if d != u32::from(i == j) {
                    b.hom.push((self.ids[i].clone(), self.ids[j].clone(), d));
                }
            }
        }
        if let Some(ext) = &self.ext {
            b.ext = Some(Vec::new());
            for c in 0..n {
                for a in 0..n {
                    let d = ext[c * n + a];
                    if d != 0 {
                        b.ext
                            .as_mut()
                            .unwrap()
                            .push((self.ids[c].clone(), self.ids[a].clone(), d));
                    }
                }
            }
        }
        b.inflations = self.inflations.clone();
        b.conflations = self.conflations.clone();
        b
    }
}

/// Θ of an arbitrary object: the sum over its summands with multiplicity.
pub fn theta_of(spec: &CategorySpec, m: &ObjectRef) -> Result<u64, SpecError> {
    m.summands()
        .iter()
        .map(|id| {
            spec.theta(id)
                .map(u64::from)
                .ok_or_else(|| SpecError::UndeclaredId {
                    id: id.to_string(),
                    context: "object".into(),
                })
        })
        .sum()
}

/// Incremental constructor that enforces referential integrity.
#[derive(Debug, Clone, Default)]
pub struct SpecBuilder {
    name: String,
    metadata: Metadata,
    indecs: Vec<(IndecId, u32)>,
    hom: Vec<(IndecId, IndecId, u32)>,
    ext: Option<Vec<(IndecId, IndecId, u32)>>,
    inflations: Vec<Inflation>,
    conflations: Vec<Conflation>,
}

impl SpecBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        SpecBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn metadata(mut self, metadata: Metadata) -> Self {
        self.metadata = metadata;
        self
    }

    pub fn indecomposable(mut self, id: impl Into<IndecId>, theta: u32) -> Self {
        self.indecs.push((id.into(), theta));
        self
    }

    pub fn hom(mut self, from: impl Into<IndecId>, to: impl Into<IndecId>, dim: u32) -> Self {
        self.hom.push((from.into(), to.into(), dim));
        self
    }

    /// Declares `dim E(c, a)`. Calling this at least once (or
    /// [`SpecBuilder::with_ext`]) marks the instance as carrying Ext data.
    pub fn ext(mut self, c: impl Into<IndecId>, a: impl Into<IndecId>, dim: u32) -> Self {
        self.ext
            .get_or_insert_with(Vec::new)
            .push((c.into(), a.into(), dim));
        self
    }

    /// Marks the instance as carrying an (initially all-zero) Ext matrix.
    pub fn with_ext(mut self) -> Self {
        self.ext.get_or_insert_with(Vec::new);
        self
    }

    pub fn inflation(mut self, sub: impl Into<IndecId>, target: ObjectRef) -> Self {
        self.inflations.push(Inflation {
            sub: sub.into(),
            target,
        });
        self
    }

    pub fn conflation(mut self, a: ObjectRef, b: ObjectRef, c: ObjectRef, stable: bool) -> Self {
        self.conflations.push(Conflation { a, b, c, stable });
        self
    }

    pub fn clear_conflations(mut self) -> Self {
        self.conflations.clear();
        self
    }

    pub fn clear_inflations(mut self) -> Self {
        self.inflations.clear();
        self
    }

    pub fn retain_conflations(mut self, keep: impl FnMut(&Conflation) -> bool) -> Self {
        self.conflations.retain(keep);
        self
    }

    pub fn build(self) -> Result<CategorySpec, SpecError> {
        let n = self.indecs.len();
        let mut index = HashMap::with_capacity(n);
        let mut ids = Vec::with_capacity(n);
        let mut theta = Vec::with_capacity(n);
        for (i, (id, t)) in self.indecs.into_iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(SpecError::DuplicateId(id.to_string()));
            }
            ids.push(id);
            theta.push(t);
        }
        let lookup = |id: &IndecId, context: &str| {
            index.get(id).copied().ok_or_else(|| SpecError::UndeclaredId {
                id: id.to_string(),
                context: context.to_string(),
            })
        };

        let mut hom = vec![0u32; n * n];
        for i in 0..n {
            hom[i * n + i] = 1;
        }
        let mut seen = vec![false; n * n];
        for (from, to, dim) in &self.hom {
            let (i, j) = (lookup(from, "hom")?, lookup(to, "hom")?);
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(SpecError::DuplicateEntry(format!("hom[{from}][{to}]")));
            }
            hom[i * n + j] = *dim;
        }

        let ext = match &self.ext {
            None => None,
            Some(entries) => {
                let mut ext = vec![0u32; n * n];
                let mut seen = vec![false; n * n];
                for (c, a, dim) in entries {
                    let (i, j) = (lookup(c, "ext")?, lookup(a, "ext")?);
                    if std::mem::replace(&mut seen[i * n + j], true) {
                        return Err(SpecError::DuplicateEntry(format!("ext[{c}][{a}]")));
                    }
                    ext[i * n + j] = *dim;
                }
                Some(ext)
            }
        };

        for inf in &self.inflations {
            lookup(&inf.sub, "inflation")?;
            for y in inf.target.summands() {
                lookup(y, "inflation")?;
            }
        }
        if self.conflations.len() > MAX_CONFLATIONS {
            return Err(SpecError::TooManyConflations {
                count: self.conflations.len(),
                limit: MAX_CONFLATIONS,
            });
        }
        for conf in &self.conflations {
            for obj in [&conf.a, &conf.b, &conf.c] {
                for y in obj.summands() {
                    lookup(y, "conflation")?;
                }
            }
        }

        let mut inflations = self.inflations;
        inflations.sort();
        inflations.dedup();
        let mut conflations = self.conflations;
        conflations.sort();

        Ok(CategorySpec {
            name: self.name,
            metadata: self.metadata,
            ids,
            index,
            theta,
            hom,
            ext,
            inflations,
            conflations,
        })
    }
}

/// Convenience for building objects from string ids in tests and fixtures.
pub fn obj<I, S>(ids: I) -> ObjectRef
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    ids.into_iter().map(|s| IndecId::from(s.as_ref())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn object_ref_is_a_multiset() {
        assert_eq!(obj(["S3", "P2", "S3"]), obj(["S3", "S3", "P2"]));
        assert_ne!(obj(["S3"]), obj(["S3", "S3"]));
        assert_eq!(obj(["S3", "P2", "S3"]).multiplicity(&"S3".into()), 2);
        assert!(obj::<_, &str>([]).is_zero());
        assert_eq!(obj(["B", "A", "B"]).to_string(), "A + B^2");
    }

    #[test]
    fn theta_of_sums_with_multiplicity() {
        let spec = CategorySpec::builder("t")
            .indecomposable("S3", 1)
            .indecomposable("P2", 2)
            .build()
            .unwrap();
        assert_eq!(theta_of(&spec, &ObjectRef::zero()).unwrap(), 0);
        assert_eq!(theta_of(&spec, &obj(["S3", "S3", "P2"])).unwrap(), 4);
        assert!(matches!(
            theta_of(&spec, &obj(["Q"])),
            Err(SpecError::UndeclaredId { .. })
        ));
    }

    #[test]
    fn builder_rejects_duplicates_and_dangling_references() {
        let dup = CategorySpec::builder("d")
            .indecomposable("S", 1)
            .indecomposable("S", 1)
            .build();
        assert_eq!(dup, Err(SpecError::DuplicateId("S".into())));

        let dangling = CategorySpec::builder("d")
            .indecomposable("S", 1)
            .inflation("S", obj(["Q"]))
            .build();
        assert!(matches!(dangling, Err(SpecError::UndeclaredId { id, .. }) if id == "Q"));
    }

    #[test]
    fn hom_diagonal_defaults_to_one() {
        let spec = CategorySpec::builder("s").indecomposable("S", 1).build().unwrap();
        assert_eq!(spec.hom(&"S".into(), &"S".into()), Some(1));
        assert!(!spec.has_ext());
    }
}
