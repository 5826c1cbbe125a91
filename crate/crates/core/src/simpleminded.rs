//! The tower `Θ_1 ⊆ Θ_2 ⊆ … ⊆ Θ_∞` of Hom-orthogonal objects and the
//! semibrick / simple-minded-system tests.
//!
//! `Θ_1` holds the indecomposables of minimal length. For `n ≥ 2`,
//! `Θ_n = Θ_{n-1} ∪ Θ'_n` where `Θ'_n` collects the objects of length
//! exactly `n` with no nonzero Hom to or from `Θ_{n-1}`. Bricks are detected
//! by the proxy `dim End = 1`.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catspec::{CategorySpec, IndecId, ObjectRef};
use crate::filtration::{default_universe, filt_closure_with_guard};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimpleMindedError {
    #[error("the category has no indecomposables")]
    EmptyCategory,
}

/// Whether a set is a simple-minded system. `Unknown` when the conflation
/// table is not declared complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmsStatus {
    Yes,
    No,
    Unknown,
}

impl Serialize for SmsStatus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SmsStatus::Yes => s.serialize_bool(true),
            SmsStatus::No => s.serialize_bool(false),
            SmsStatus::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrickSet {
    pub members: BTreeSet<IndecId>,
    pub semibrick: bool,
    pub sms: SmsStatus,
}

/// Indecomposables of minimal length.
pub fn theta_one(spec: &CategorySpec) -> Result<BTreeSet<IndecId>, SimpleMindedError> {
    let min = spec
        .thetas()
        .iter()
        .copied()
        .min()
        .ok_or(SimpleMindedError::EmptyCategory)?;
    Ok(members_with_theta(spec, min))
}

/// `Θ_n`, with `Θ'_n` indexed by the literal length `n`. Empty on an empty
/// category.
pub fn theta_n(spec: &CategorySpec, n: u32) -> BTreeSet<IndecId> {
    let Ok(mut set) = theta_one(spec) else {
        return BTreeSet::new();
    };
    for k in 2..=n {
        let current: Vec<usize> = set.iter().filter_map(|id| spec.index_of(id)).collect();
        for (m, id) in spec.ids().iter().enumerate() {
            if spec.theta_at(m) != k || set.contains(id) {
                continue;
            }
            if current
                .iter()
                .all(|&s| spec.hom_at(s, m) == 0 && spec.hom_at(m, s) == 0)
            {
                set.insert(id.clone());
            }
        }
    }
    set
}

fn members_with_theta(spec: &CategorySpec, t: u32) -> BTreeSet<IndecId> {
    spec.ids()
        .iter()
        .enumerate()
        .filter(|&(i, _)| spec.theta_at(i) == t)
        .map(|(_, id)| id.clone())
        .collect()
}

/// Pairwise Hom-orthogonal with one-dimensional endomorphisms. Undeclared
/// ids make the answer `false`.
pub fn is_semibrick(spec: &CategorySpec, members: &BTreeSet<IndecId>) -> bool {
    let Some(idx) = members
        .iter()
        .map(|id| spec.index_of(id))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    idx.iter()
        .all(|&x| idx.iter().all(|&y| spec.hom_at(x, y) == u32::from(x == y)))
}

/// `Θ_∞`, computed by running the tower up to the maximal length.
pub fn theta_infinity(spec: &CategorySpec) -> BrickSet {
    let max = spec.thetas().iter().copied().max().unwrap_or(0);
    let members = theta_n(spec, max.max(1));
    let semibrick = is_semibrick(spec, &members);
    let sms = if !semibrick {
        SmsStatus::No
    } else if !spec.metadata().complete {
        SmsStatus::Unknown
    } else {
        let universe = default_universe(spec);
        let closure = filt_closure_with_guard(spec, &members, Some(&universe), usize::MAX)
            .expect("members are declared");
        let covered = spec
            .ids()
            .iter()
            .all(|id| closure.length(&ObjectRef::single(id.clone())).is_some());
        if covered {
            SmsStatus::Yes
        } else {
            SmsStatus::No
        }
    };
    BrickSet {
        members,
        semibrick,
        sms,
    }
}

/// `Θ_1 = Θ_∞`; every instance here is finite, so finiteness of `Θ_1`
/// holds automatically.
pub fn is_finite_type(spec: &CategorySpec) -> bool {
    match theta_one(spec) {
        Ok(one) => theta_infinity(spec).members == one,
        Err(_) => true,
    }
}
