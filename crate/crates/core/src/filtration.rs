//! Filtration closures `Filt(X)` and the `X`-length `l_X`.
//!
//! An object has an `X`-filtration of length `k` when it is reached from the
//! zero object by `k` conflations `a → b → c` whose cone `c` is a single
//! generator. Every step costs one, so the least fixed point is a
//! breadth-first search over the declared conflations. The trivial
//! conflations `0 → g → g` for generators `g` are implicit.
//!
//! The closure only ever sees a finite universe of objects. Anything outside
//! it is reported as not reachable, with a flag saying whether it was in the
//! universe to begin with.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::catspec::{CategorySpec, IndecId, ObjectRef};
use crate::report::{Check, Report, Status, Witness};

/// Default cap on the number of objects in a closure universe.
pub const UNIVERSE_GUARD: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltError {
    #[error("generator `{0}` is not a declared indecomposable")]
    UndeclaredGenerator(String),
    #[error("universe of {size} objects exceeds the guard of {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
}

/// Objects first reached in one round of the closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrontierStep {
    pub length: u32,
    pub reached: Vec<ObjectRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltResult {
    pub reachable: BTreeMap<ObjectRef, u32>,
    /// Diagnostic trace only.
    pub frontier_log: Vec<FrontierStep>,
}

impl FiltResult {
    pub fn length(&self, m: &ObjectRef) -> Option<u32> {
        self.reachable.get(m).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XLength {
    Length(u32),
    NotInFilt { in_universe: bool },
}

/// The zero object, every indecomposable, and every term of every declared
/// conflation.
pub fn default_universe(spec: &CategorySpec) -> BTreeSet<ObjectRef> {
    let mut u = BTreeSet::new();
    u.insert(ObjectRef::zero());
    u.extend(spec.ids().iter().cloned().map(ObjectRef::single));
    for conf in spec.conflations() {
        u.insert(conf.a.clone());
        u.insert(conf.b.clone());
        u.insert(conf.c.clone());
    }
    u
}

/// Least fixed point over `universe` (the default universe when `None`).
pub fn filt_closure(
    spec: &CategorySpec,
    gens: &BTreeSet<IndecId>,
    universe: Option<&BTreeSet<ObjectRef>>,
) -> Result<FiltResult, FiltError> {
    filt_closure_with_guard(spec, gens, universe, UNIVERSE_GUARD)
}

pub fn filt_closure_with_guard(
    spec: &CategorySpec,
    gens: &BTreeSet<IndecId>,
    universe: Option<&BTreeSet<ObjectRef>>,
    guard: usize,
) -> Result<FiltResult, FiltError> {
    for g in gens {
        if spec.index_of(g).is_none() {
            return Err(FiltError::UndeclaredGenerator(g.to_string()));
        }
    }
    let owned;
    let universe = match universe {
        Some(u) => u,
        None => {
            owned = default_universe(spec);
            &owned
        }
    };
    if universe.len() > guard {
        return Err(FiltError::UniverseTooLarge {
            size: universe.len(),
            limit: guard,
        });
    }

    let zero = ObjectRef::zero();
    let mut steps: HashMap<&ObjectRef, Vec<&ObjectRef>> = HashMap::new();
    let implicit: Vec<ObjectRef> = gens.iter().cloned().map(ObjectRef::single).collect();
    for g in &implicit {
        steps.entry(&zero).or_default().push(g);
    }
    for conf in spec.conflations() {
        let cone_is_generator = conf.c.as_indecomposable().is_some_and(|c| gens.contains(c));
        if cone_is_generator {
            steps.entry(&conf.a).or_default().push(&conf.b);
        }
    }

    let mut reachable = BTreeMap::new();
    reachable.insert(zero.clone(), 0u32);
    let mut frontier = vec![&zero];
    let mut frontier_log = Vec::new();
    let mut length = 0u32;
    while !frontier.is_empty() {
        length += 1;
        let mut next: Vec<&ObjectRef> = Vec::new();
        for a in frontier {
            for &b in steps.get(a).map(Vec::as_slice).unwrap_or(&[]) {
                if universe.contains(b) && !reachable.contains_key(b) {
                    reachable.insert(b.clone(), length);
                    next.push(b);
                }
            }
        }
        if !next.is_empty() {
            let mut reached: Vec<ObjectRef> = next.iter().map(|&o| o.clone()).collect();
            reached.sort();
            frontier_log.push(FrontierStep { length, reached });
        }
        frontier = next;
    }
    Ok(FiltResult {
        reachable,
        frontier_log,
    })
}

/// `l_X(m)` over the default universe extended by `m`.
pub fn x_length(spec: &CategorySpec, gens: &BTreeSet<IndecId>, m: &ObjectRef) -> Result<XLength, FiltError> {
    let mut universe = default_universe(spec);
    let in_universe = !universe.insert(m.clone());
    let closure = filt_closure(spec, gens, Some(&universe))?;
    Ok(match closure.length(m) {
        Some(k) => XLength::Length(k),
        None => XLength::NotInFilt { in_universe },
    })
}

/// Checks that `l_X` behaves as a length function on the reachable part of
/// the default universe. Unreached indecomposables are reported as
/// incompleteness of the table, never as a failure.
pub fn check_lx_is_length_function(
    spec: &CategorySpec,
    gens: &BTreeSet<IndecId>,
) -> Result<Report, FiltError> {
    let closure = filt_closure(spec, gens, None)?;
    let l = |m: &ObjectRef| closure.length(m);
    let mut checks = Vec::new();

    checks.push(Check::from_witnesses(
        "gens-semibrick",
        gens.len(),
        semibrick_witnesses(spec, gens),
    ));

    let zero_witnesses = closure
        .reachable
        .iter()
        .filter(|(m, &k)| m.is_zero() != (k == 0))
        .map(|(m, k)| Witness::new([m], format!("l_X = {k}")))
        .collect();
    checks.push(Check::from_witnesses(
        "lx-zero",
        closure.reachable.len(),
        zero_witnesses,
    ));

    let mut evaluated = 0;
    let mut sub = Vec::new();
    for conf in spec.conflations() {
        if let (Some(a), Some(b), Some(c)) = (l(&conf.a), l(&conf.b), l(&conf.c)) {
            evaluated += 1;
            if b > a + c {
                sub.push(Witness::new(
                    [&conf.a, &conf.b, &conf.c],
                    format!("l_X: {b} > {a} + {c}"),
                ));
            }
        }
    }
    checks.push(Check::from_witnesses("lx-subadditive", evaluated, sub));

    let mut evaluated = 0;
    let mut additive = Vec::new();
    for (m, &k) in &closure.reachable {
        if m.len() < 2 {
            continue;
        }
        let parts: Option<Vec<u32>> = m
            .summands()
            .iter()
            .map(|s| l(&ObjectRef::single(s.clone())))
            .collect();
        if let Some(parts) = parts {
            evaluated += 1;
            let sum: u32 = parts.iter().sum();
            if sum != k {
                additive.push(Witness::new([m], format!("l_X = {k} but summands sum to {sum}")));
            }
        }
    }
    checks.push(Check::from_witnesses("lx-additive", evaluated, additive));

    let unreached: Vec<&IndecId> = spec
        .ids()
        .iter()
        .filter(|id| l(&ObjectRef::single((*id).clone())).is_none())
        .collect();
    let coverage = if unreached.is_empty() {
        Check::from_witnesses("lx-coverage", spec.len(), Vec::new())
    } else {
        let mut note = format!(
            "{} indecomposables outside Filt(X) in this table",
            unreached.len()
        );
        if !spec.metadata().complete {
            note.push_str("; table not declared complete");
        }
        Check {
            id: "lx-coverage".into(),
            status: Status::Skipped,
            evaluated: spec.len(),
            note: Some(note),
            witnesses: unreached
                .iter()
                .map(|id| Witness::new([id], "not reached"))
                .collect(),
        }
    };
    checks.push(coverage);

    Ok(Report::new("lx-length-function", checks))
}

fn semibrick_witnesses(spec: &CategorySpec, gens: &BTreeSet<IndecId>) -> Vec<Witness> {
    let mut out = Vec::new();
    for x in gens {
        let Some(i) = spec.index_of(x) else {
            out.push(Witness::new([x], "undeclared"));
            continue;
        };
        for y in gens {
            let Some(j) = spec.index_of(y) else { continue };
            let d = spec.hom_at(i, j);
            if d != u32::from(i == j) {
                out.push(Witness::new([x, y], format!("hom = {d}")));
            }
        }
    }
    out
}
