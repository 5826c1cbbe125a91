//! Checker suites for the structural statements about Gabriel-Roiter
//! measures, and the Brauer-Thrall report.
//!
//! Every suite returns a [`Report`]; a failing check always carries the
//! offending objects and values. When the subobject relation is itself
//! inconsistent the measure-based suites report a single failing
//! `poset-consistency` check instead of measures.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::catspec::{
    subobject_closure, subobject_poset, CategorySpec, IndecId, ObjectRef, PosetError, SubobjectPoset,
};
use crate::chains::{table_from_poset, Chain, MeasureError, MeasureTable};
use crate::report::{Check, Report, Status, Witness};
use crate::simpleminded::{theta_infinity, theta_one};

pub const SUITES: [&str; 4] = ["gr-axioms", "main-property", "ext-bound", "small-lemmas"];

fn poset_failure(suite: &str, err: &PosetError) -> Report {
    let witness = match err {
        PosetError::Antisymmetry { x, y } => Witness::new([x, y], err.to_string()),
        PosetError::NonMonotone { sub, sup, .. } => Witness::new([sub, sup], err.to_string()),
    };
    Report::new(
        suite,
        vec![Check::from_witnesses("poset-consistency", 1, vec![witness])],
    )
}

fn measure_of<'a>(table: &'a MeasureTable, spec: &CategorySpec, i: usize) -> &'a Chain {
    table
        .measure(spec.id_at(i))
        .expect("table covers every indecomposable")
}

pub fn check_gr_axioms(spec: &CategorySpec) -> Report {
    match subobject_poset(spec) {
        Ok(poset) => {
            let table = table_from_poset(spec, &poset);
            check_gr_axioms_on(spec, &poset, &table)
        }
        Err(e) => poset_failure("gr-axioms", &e),
    }
}

/// GR1 to GR3 for an arbitrary assignment of measures, so that corrupted
/// tables can be fed in directly.
pub fn check_gr_axioms_on(spec: &CategorySpec, poset: &SubobjectPoset, table: &MeasureTable) -> Report {
    let n = spec.len();
    let m = |i| measure_of(table, spec, i);
    let id = |i| spec.id_at(i);

    let (mut gr1, mut gr1_n) = (Vec::new(), 0);
    let (mut gr2, mut gr2_n) = (Vec::new(), 0);
    let (mut gr3, mut gr3_n) = (Vec::new(), 0);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if poset.lt(x, y) {
                gr1_n += 1;
                if m(x) > m(y) {
                    gr1.push(Witness::new(
                        [id(x), id(y)],
                        format!("{} < {} but measure {} > {}", id(x), id(y), m(x), m(y)),
                    ));
                }
            }
            if x < y && m(x) == m(y) {
                gr2_n += 1;
                if spec.theta_at(x) != spec.theta_at(y) {
                    gr2.push(Witness::new(
                        [id(x), id(y)],
                        format!(
                            "equal measure {} but theta {} vs {}",
                            m(x),
                            spec.theta_at(x),
                            spec.theta_at(y)
                        ),
                    ));
                }
            }
            let hypothesis = spec.theta_at(x) >= spec.theta_at(y)
                && poset.proper_subobjects(x).iter().all(|&s| m(s) < m(y));
            if hypothesis {
                gr3_n += 1;
                if m(x) > m(y) {
                    gr3.push(Witness::new(
                        [id(x), id(y)],
                        format!(
                            "theta {} >= {} and all proper subobjects below {}, but measure {} > {}",
                            spec.theta_at(x),
                            spec.theta_at(y),
                            m(y),
                            m(x),
                            m(y)
                        ),
                    ));
                }
            }
        }
    }
    Report::new(
        "gr-axioms",
        vec![
            Check::from_witnesses("gr1", gr1_n, gr1),
            Check::from_witnesses("gr2", gr2_n, gr2),
            Check::from_witnesses("gr3", gr3_n, gr3),
        ],
    )
}

/// For each declared inflation `X ↣ ⊕ Y_i`: `Θ*(X) ≤ max Θ*(Y_i)`, and on
/// equality `X` itself is one of the summands attaining the maximum.
pub fn check_main_property(spec: &CategorySpec) -> Report {
    let poset = match subobject_poset(spec) {
        Ok(p) => p,
        Err(e) => return poset_failure("main-property", &e),
    };
    let table = table_from_poset(spec, &poset);
    let mut bound = Vec::new();
    let mut iso = Vec::new();
    let (mut n_bound, mut n_iso) = (0, 0);
    for inf in spec.inflations() {
        let Some(top) = inf
            .target
            .summands()
            .iter()
            .map(|y| table.measure(y).expect("declared"))
            .max()
        else {
            continue;
        };
        let mx = table.measure(&inf.sub).expect("declared");
        n_bound += 1;
        if mx > top {
            bound.push(Witness::new(
                [inf.sub.to_string(), inf.target.to_string()],
                format!("measure {mx} > max summand measure {top}"),
            ));
        } else if mx == top {
            n_iso += 1;
            let attained = inf
                .target
                .summands()
                .iter()
                .any(|y| *y == inf.sub && table.measure(y) == Some(top));
            if !attained {
                iso.push(Witness::new(
                    [inf.sub.to_string(), inf.target.to_string()],
                    format!(
                        "measure {mx} attained, but {} is not a summand of maximal measure",
                        inf.sub
                    ),
                ));
            }
        }
    }
    Report::new(
        "main-property",
        vec![
            Check::from_witnesses("main-bound", n_bound, bound),
            Check::from_witnesses("main-isomorphism", n_iso, iso),
        ],
    )
}

/// For each conflation `a → b → c` and each summand `X` of multiplicity `n`
/// in `a`: if `dim E(c, X) < n` then `X` is a summand of `b`.
pub fn check_ext_bound(spec: &CategorySpec) -> Report {
    if !spec.has_ext() {
        return Report::new(
            "ext-bound",
            vec![Check::skipped("ext-bound", "instance carries no ext matrix")],
        );
    }
    let mut evaluated = 0;
    let mut out = Vec::new();
    for conf in spec.conflations() {
        for (x, n) in conf.a.multiplicities() {
            let e: u64 = conf
                .c
                .summands()
                .iter()
                .map(|c| u64::from(spec.ext(c, x).expect("declared")))
                .sum();
            evaluated += 1;
            if e < n as u64 && !conf.b.contains(x) {
                out.push(Witness::new(
                    [
                        x.to_string(),
                        conf.a.to_string(),
                        conf.b.to_string(),
                        conf.c.to_string(),
                    ],
                    format!(
                        "dim E({}, {x}) = {e} < {n} but {x} is not a summand of {}",
                        conf.c, conf.b
                    ),
                ));
            }
        }
    }
    Report::new(
        "ext-bound",
        vec![Check::from_witnesses("ext-bound", evaluated, out)],
    )
}

/// (i) length-one objects have measure `{1}`; (ii) a nonzero map from `Θ_1`
/// forces measure above `{1}`; (iii) with `Θ_1 = Θ_∞` and a complete table,
/// the minimal measure is `{1}` and each object has a length-one sub and a
/// length-one quotient realised by stable conflations; (iv) length strictly
/// increases along the subobject relation. (i) to (iii) are skipped unless the
/// minimal length is 1.
pub fn check_small_lemmas(spec: &CategorySpec) -> Report {
    let mut checks = vec![theta_monotone(spec)];
    let min_theta = spec.thetas().iter().copied().min();
    if min_theta != Some(1) {
        let note = "minimal length is not 1";
        checks.push(Check::skipped("i-theta-one-measure", note));
        checks.push(Check::skipped("ii-simple-sub", note));
        checks.push(Check::skipped("iii-simple-filtration", note));
        return Report::new("small-lemmas", checks);
    }
    let poset = match subobject_poset(spec) {
        Ok(p) => p,
        Err(e) => {
            let failed = poset_failure("small-lemmas", &e).checks;
            return Report::new("small-lemmas", failed.into_iter().chain(checks).collect());
        }
    };
    let table = table_from_poset(spec, &poset);
    let one = Chain::singleton(1);
    let n = spec.len();
    let id = |i| spec.id_at(i);
    let m = |i| measure_of(&table, spec, i);
    let simples: Vec<usize> = (0..n).filter(|&i| spec.theta_at(i) == 1).collect();

    let w_i = simples
        .iter()
        .filter(|&&i| *m(i) != one)
        .map(|&i| Witness::new([id(i)], format!("theta 1 but measure {}", m(i))))
        .collect();
    checks.push(Check::from_witnesses("i-theta-one-measure", simples.len(), w_i));

    let mut n_ii = 0;
    let mut w_ii = Vec::new();
    for x in (0..n).filter(|&i| spec.theta_at(i) > 1) {
        if let Some(&s) = simples.iter().find(|&&s| spec.hom_at(s, x) != 0) {
            n_ii += 1;
            if *m(x) <= one {
                w_ii.push(Witness::new(
                    [id(x), id(s)],
                    format!("hom[{}][{}] != 0 but measure {} <= {one}", id(s), id(x), m(x)),
                ));
            }
        }
    }
    checks.push(Check::from_witnesses("ii-simple-sub", n_ii, w_ii));

    checks.push(simple_filtration(spec, &table, &simples));
    Report::new("small-lemmas", checks)
}

fn theta_monotone(spec: &CategorySpec) -> Check {
    let closure = subobject_closure(spec);
    let n = spec.len();
    let mut evaluated = 0;
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && closure.get(x, y) {
                evaluated += 1;
                if spec.theta_at(x) >= spec.theta_at(y) {
                    out.push(Witness::new(
                        [spec.id_at(x), spec.id_at(y)],
                        format!(
                            "{} < {} but theta {} >= {}",
                            spec.id_at(x),
                            spec.id_at(y),
                            spec.theta_at(x),
                            spec.theta_at(y)
                        ),
                    ));
                }
            }
        }
    }
    Check::from_witnesses("iv-theta-monotone", evaluated, out)
}

fn simple_filtration(spec: &CategorySpec, table: &MeasureTable, simples: &[usize]) -> Check {
    const ID: &str = "iii-simple-filtration";
    let one = theta_one(spec).unwrap_or_default();
    if theta_infinity(spec).members != one {
        return Check::skipped(ID, "Θ_1 differs from Θ_∞");
    }
    if !spec.metadata().complete {
        return Check::skipped(ID, "conflation table not declared complete");
    }
    let mut out = Vec::new();
    let min = table.gr_chain.first();
    if min != Some(&Chain::singleton(1)) {
        out.push(Witness::new(
            Vec::<String>::new(),
            format!(
                "minimal measure is {}",
                min.map_or("none".into(), |c| c.to_string())
            ),
        ));
    }
    let is_simple = |o: &ObjectRef| {
        o.as_indecomposable()
            .and_then(|x| spec.index_of(x))
            .is_some_and(|i| simples.contains(&i))
    };
    for (i, x) in spec.ids().iter().enumerate() {
        // 0 → M → M and M → M → 0 cover the length-one objects
        if spec.theta_at(i) == 1 {
            continue;
        }
        let middles = spec
            .conflations()
            .iter()
            .filter(|c| c.stable && c.b.as_indecomposable() == Some(x));
        let (mut sub, mut quot) = (false, false);
        for c in middles {
            sub |= is_simple(&c.a);
            quot |= is_simple(&c.c);
        }
        if !sub || !quot {
            let missing = match (sub, quot) {
                (false, false) => "no length-one sub or quotient",
                (false, true) => "no length-one sub",
                _ => "no length-one quotient",
            };
            out.push(Witness::new([x], format!("{missing} in any stable conflation")));
        }
    }
    Check::from_witnesses(ID, spec.len(), out)
}

/// Runs one named suite, or all of them for `"all"`.
pub fn run_suite(spec: &CategorySpec, suite: &str) -> Option<Vec<Report>> {
    let one = |s: &str| match s {
        "gr-axioms" => Some(check_gr_axioms(spec)),
        "main-property" => Some(check_main_property(spec)),
        "ext-bound" => Some(check_ext_bound(spec)),
        "small-lemmas" => Some(check_small_lemmas(spec)),
        _ => None,
    };
    if suite == "all" {
        SUITES.iter().map(|s| one(s)).collect()
    } else {
        one(suite).map(|r| vec![r])
    }
}

pub const BT_HEADER: &str = "Brauer-Thrall I holds trivially on any finite instance. \
The quantities below are reported, not tested; on windows of infinite-type \
categories the bounded-length signature is what can be observed.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub measure: Chain,
    pub theta: Vec<u32>,
    pub objects: BTreeSet<IndecId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerThrallReport {
    pub header: String,
    pub name: String,
    pub indecomposables: usize,
    pub max_theta: u32,
    pub gr_chain_length: usize,
    pub top_measure: Option<Chain>,
    pub gr_chain: Vec<Chain>,
    pub blocks: Vec<Block>,
    pub finite_type: bool,
    pub models_infinite: bool,
    /// More indecomposables than the length bound allows in a finite-type
    /// category of this size, on a window that models an infinite one.
    pub bounded_length_signature: bool,
    /// Informational only: block lengths need not increase along the chain,
    /// since `{1,3} < {1,2}`.
    pub block_thetas_nondecreasing: bool,
    pub checks: Report,
}

pub fn brauer_thrall_report(spec: &CategorySpec) -> Result<BrauerThrallReport, MeasureError> {
    let poset = subobject_poset(spec)?;
    let table = table_from_poset(spec, &poset);
    let blocks: Vec<Block> = table
        .blocks
        .iter()
        .map(|(c, objs)| {
            let mut theta: Vec<u32> = objs.iter().map(|o| spec.theta(o).expect("declared")).collect();
            theta.sort_unstable();
            theta.dedup();
            Block {
                measure: c.clone(),
                theta,
                objects: objs.clone(),
            }
        })
        .collect();

    let constant = blocks
        .iter()
        .filter(|b| b.theta.len() > 1)
        .map(|b| {
            Witness::new(
                &b.objects,
                format!("block {} has lengths {:?}", b.measure, b.theta),
            )
        })
        .collect();
    let mut checks = vec![Check::from_witnesses(
        "block-constant-theta",
        blocks.len(),
        constant,
    )];

    let finite_type = crate::simpleminded::is_finite_type(spec);
    let min_theta = spec.thetas().iter().copied().min();
    let first = match (finite_type, min_theta) {
        (true, Some(t)) => {
            let expected = Chain::singleton(t);
            let w = match table.gr_chain.first() {
                Some(c) if *c == expected => Vec::new(),
                other => vec![Witness::new(
                    Vec::<String>::new(),
                    format!(
                        "first measure {} differs from {expected}",
                        other.map_or("none".into(), |c| c.to_string())
                    ),
                )],
            };
            Check::from_witnesses("first-block", 1, w)
        }
        (false, _) => Check::skipped("first-block", "Θ_1 differs from Θ_∞"),
        (true, None) => Check::skipped("first-block", "empty category"),
    };
    checks.push(first);

    let max_theta = spec.thetas().iter().copied().max().unwrap_or(0);
    let models_infinite = spec.metadata().models_infinite;
    let block_maxima: Vec<u32> = blocks
        .iter()
        .map(|b| b.theta.iter().copied().max().unwrap_or(0))
        .collect();
    Ok(BrauerThrallReport {
        header: BT_HEADER.to_string(),
        name: spec.name().to_string(),
        indecomposables: spec.len(),
        max_theta,
        gr_chain_length: table.gr_chain.len(),
        top_measure: table.gr_chain.last().cloned(),
        gr_chain: table.gr_chain.clone(),
        blocks,
        finite_type,
        models_infinite,
        bounded_length_signature: models_infinite && (max_theta as usize) < spec.len(),
        block_thetas_nondecreasing: block_maxima.windows(2).all(|w| w[0] <= w[1]),
        checks: Report::new("brauer-thrall", checks),
    })
}

/// Status of a named check, for callers that only need the verdict.
pub fn status_of(report: &Report, id: &str) -> Option<Status> {
    report.check(id).map(|c| c.status)
}
