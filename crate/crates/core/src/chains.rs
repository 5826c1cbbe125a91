//! Finite chains of positive integers under the lexicographic order, and the
//! Gabriel-Roiter measure.
//!
//! For chains `x` and `y` (viewed as finite sets), `x ≤ y` iff
//! `min(y \ x) ≤ min(x \ y)`, where the minimum of the empty set is `+∞`.
//! Equivalently: the chain that owns the smallest element of the symmetric
//! difference is the larger one. This is a total order, and a superset
//! obtained by appending larger elements is always bigger.
//!
//! The measure of an indecomposable `M` is the largest length-image of a
//! chain of subobjects ending in `M`. Appending a common element above both
//! maxima preserves the order, so the maximum can be computed bottom-up over
//! the subobject poset:
//!
//! ```text
//! measure(M) = max({θ(M)} ∪ { measure(M') ∪ {θ(M)} : M' < M })
//! ```

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catspec::{subobject_poset, CategorySpec, IndecId, PosetError, SubobjectPoset};

/// Default cap on the size of the down-set enumerated by
/// [`gr_measure_bruteforce`].
pub const BRUTEFORCE_GUARD: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain elements must be positive and strictly increasing: {0:?}")]
    NotAChain(Vec<u32>),
    #[error("maximum of an empty set of chains")]
    EmptyInput,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasureError {
    #[error("undeclared indecomposable `{0}`")]
    UndeclaredId(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("down-set has {size} indecomposables, exhaustive enumeration is capped at {limit}")]
    GuardExceeded { size: usize, limit: usize },
    #[error("lengths along the chain through `{0}` are not strictly increasing")]
    NonMonotoneChain(String),
}

/// A finite strictly increasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Chain(Vec<u32>);

impl Chain {
    pub fn new(elems: Vec<u32>) -> Result<Self, ChainError> {
        let increasing = elems.windows(2).all(|w| w[0] < w[1]);
        if !increasing || elems.first() == Some(&0) {
            return Err(ChainError::NotAChain(elems));
        }
        Ok(Chain(elems))
    }

    /// The empty chain; only meaningful as a comparison sentinel.
    pub fn empty() -> Self {
        Chain(Vec::new())
    }

    pub fn singleton(x: u32) -> Self {
        assert!(x > 0, "chain elements are positive");
        Chain(vec![x])
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `self ∪ {t}` for `t` above every element.
    pub fn extended(&self, t: u32) -> Chain {
        assert!(
            self.max().is_none_or(|m| m < t),
            "extension must lie above the chain"
        );
        let mut v = self.0.clone();
        v.push(t);
        Chain(v)
    }

    /// `{1,2,3}` without spaces, as used in JSON output.
    pub fn compact(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl Ord for Chain {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.0, &other.0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                // smallest element of the symmetric difference lies in x
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        match (i < x.len(), j < y.len()) {
            (true, _) => Ordering::Greater,
            (_, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Table-mode rendering: `{1, 2, 3}`.
impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", inner.join(", "))
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.compact())
    }
}

/// `x ≤ y` evaluated literally as `min(y \ x) ≤ min(x \ y)` with
/// `min ∅ = +∞`.
pub fn chain_leq(x: &Chain, y: &Chain) -> bool {
    let min_diff = |a: &Chain, b: &Chain| a.0.iter().copied().find(|e| !b.contains(*e));
    match (min_diff(y, x), min_diff(x, y)) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(p), Some(q)) => p <= q,
    }
}

/// The largest chain of a nonempty collection.
pub fn chain_max<'a, I>(chains: I) -> Result<Chain, ChainError>
where
    I: IntoIterator<Item = &'a Chain>,
{
    chains.into_iter().max().cloned().ok_or(ChainError::EmptyInput)
}

/// Measures of all indecomposables, indexed like `spec.ids()`.
pub fn gr_measures(spec: &CategorySpec, poset: &SubobjectPoset) -> Vec<Chain> {
    let mut memo: Vec<Option<Chain>> = vec![None; spec.len()];
    for &m in poset.topological_order() {
        let t = spec.theta_at(m);
        let best = poset
            .proper_subobjects(m)
            .iter()
            .map(|&sub| memo[sub].as_ref().expect("subobjects come first").extended(t))
            .max()
            .unwrap_or_else(|| Chain(vec![t]));
        memo[m] = Some(best);
    }
    memo.into_iter()
        .map(|c| c.expect("every object visited"))
        .collect()
}

/// Gabriel-Roiter measure of one indecomposable.
pub fn gr_measure(spec: &CategorySpec, m: &IndecId) -> Result<Chain, MeasureError> {
    let i = spec
        .index_of(m)
        .ok_or_else(|| MeasureError::UndeclaredId(m.to_string()))?;
    let poset = subobject_poset(spec)?;
    Ok(gr_measures(spec, &poset).swap_remove(i))
}

/// Measure by enumerating every chain of the poset with maximum `m`.
pub fn gr_measure_bruteforce(spec: &CategorySpec, m: &IndecId) -> Result<Chain, MeasureError> {
    gr_measure_bruteforce_with_guard(spec, m, BRUTEFORCE_GUARD)
}

pub fn gr_measure_bruteforce_with_guard(
    spec: &CategorySpec,
    m: &IndecId,
    guard: usize,
) -> Result<Chain, MeasureError> {
    let top = spec
        .index_of(m)
        .ok_or_else(|| MeasureError::UndeclaredId(m.to_string()))?;
    let poset = subobject_poset(spec)?;
    let below: Vec<usize> = (0..spec.len())
        .filter(|&x| x != top && poset.leq(x, top))
        .collect();
    if below.len() + 1 > guard {
        return Err(MeasureError::GuardExceeded {
            size: below.len() + 1,
            limit: guard,
        });
    }

    let mut best: Option<Chain> = None;
    for mask in 0u64..(1u64 << below.len()) {
        let mut members: Vec<usize> = below
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        members.push(top);
        let totally_ordered = members.iter().enumerate().all(|(k, &a)| {
            members[k + 1..]
                .iter()
                .all(|&b| poset.leq(a, b) || poset.leq(b, a))
        });
        if !totally_ordered {
            continue;
        }
        let mut image: Vec<u32> = members.iter().map(|&x| spec.theta_at(x)).collect();
        image.sort_unstable();
        let chain = Chain::new(image).map_err(|_| MeasureError::NonMonotoneChain(m.to_string()))?;
        if best.as_ref().is_none_or(|b| chain > *b) {
            best = Some(chain);
        }
    }
    Ok(best.expect("the singleton chain is always present"))
}

/// All measures plus the Gabriel-Roiter chain `I_1 < I_2 < …` and its
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasureTable {
    pub measures: BTreeMap<IndecId, Chain>,
    pub gr_chain: Vec<Chain>,
    pub blocks: BTreeMap<Chain, BTreeSet<IndecId>>,
}

impl MeasureTable {
    /// Groups an arbitrary assignment of measures into chain and blocks.
    pub fn from_measures(measures: BTreeMap<IndecId, Chain>) -> Self {
        let mut blocks: BTreeMap<Chain, BTreeSet<IndecId>> = BTreeMap::new();
        for (id, c) in &measures {
            blocks.entry(c.clone()).or_default().insert(id.clone());
        }
        let gr_chain = blocks.keys().cloned().collect();
        MeasureTable {
            measures,
            gr_chain,
            blocks,
        }
    }

    pub fn measure(&self, id: &IndecId) -> Option<&Chain> {
        self.measures.get(id)
    }

    /// Position of `c` in the GR chain, 1-based.
    pub fn rank(&self, c: &Chain) -> Option<usize> {
        self.gr_chain.iter().position(|x| x == c).map(|p| p + 1)
    }
}

pub fn gr_table(spec: &CategorySpec) -> Result<MeasureTable, MeasureError> {
    let poset = subobject_poset(spec)?;
    Ok(table_from_poset(spec, &poset))
}

pub(crate) fn table_from_poset(spec: &CategorySpec, poset: &SubobjectPoset) -> MeasureTable {
    let measures = spec.ids().iter().cloned().zip(gr_measures(spec, poset)).collect();
    MeasureTable::from_measures(measures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catspec::obj;

    fn c(v: &[u32]) -> Chain {
        Chain::new(v.to_vec()).unwrap()
    }

    #[test]
    fn order_examples() {
        assert!(chain_leq(&c(&[1]), &c(&[1, 2])));
        assert!(chain_leq(&c(&[1, 3]), &c(&[1, 2])));
        assert!(!chain_leq(&c(&[1, 2]), &c(&[1, 3])));
        assert!(chain_leq(&c(&[2]), &c(&[1, 3])));
        assert!(c(&[1]) < c(&[1, 2]));
        assert!(c(&[1, 3]) < c(&[1, 2]));
        assert!(c(&[2]) < c(&[1, 3]));
    }

    #[test]
    fn empty_chain_is_the_bottom() {
        assert!(Chain::empty() < c(&[5]));
        assert!(chain_leq(&Chain::empty(), &c(&[5])));
        assert!(chain_leq(&Chain::empty(), &Chain::empty()));
    }

    #[test]
    fn max_examples() {
        assert_eq!(chain_max([&c(&[1])]).unwrap(), c(&[1]));
        assert_eq!(
            chain_max([&c(&[1]), &c(&[1, 2]), &c(&[1, 3])]).unwrap(),
            c(&[1, 2])
        );
        assert_eq!(chain_max([&c(&[1, 2, 3]), &c(&[1, 2])]).unwrap(), c(&[1, 2, 3]));
        assert_eq!(chain_max([&c(&[2]), &c(&[2])]).unwrap(), c(&[2]));
        assert_eq!(chain_max(std::iter::empty()), Err(ChainError::EmptyInput));
    }

    #[test]
    fn rejects_non_chains() {
        assert!(Chain::new(vec![2, 1]).is_err());
        assert!(Chain::new(vec![1, 1]).is_err());
        assert!(Chain::new(vec![0, 1]).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(c(&[1, 2, 3]).to_string(), "{1, 2, 3}");
        assert_eq!(c(&[1, 2, 3]).compact(), "{1,2,3}");
        assert_eq!(serde_json::to_string(&c(&[1])).unwrap(), "\"{1}\"");
    }

    #[test]
    fn measure_prefers_longer_chain_of_small_lengths() {
        // A(1) < B(3) < D(4) and C(2) < D: chain {1,3,4} vs {2,4}: {1,3,4} wins
        let spec = CategorySpec::builder("p")
            .indecomposable("A", 1)
            .indecomposable("C", 2)
            .indecomposable("B", 3)
            .indecomposable("D", 4)
            .inflation("A", obj(["B"]))
            .inflation("B", obj(["D"]))
            .inflation("C", obj(["D"]))
            .build()
            .unwrap();
        let d = IndecId::from("D");
        assert_eq!(gr_measure(&spec, &d).unwrap(), c(&[1, 3, 4]));
        assert_eq!(gr_measure_bruteforce(&spec, &d).unwrap(), c(&[1, 3, 4]));
    }

    #[test]
    fn singleton_category() {
        let spec = CategorySpec::builder("s").indecomposable("M", 4).build().unwrap();
        let m = IndecId::from("M");
        assert_eq!(gr_measure(&spec, &m).unwrap(), c(&[4]));
        assert_eq!(gr_measure_bruteforce(&spec, &m).unwrap(), c(&[4]));
    }

    #[test]
    fn orthogonal_simples_form_one_block() {
        let mut b = CategorySpec::builder("simples");
        for i in 0..5 {
            b = b.indecomposable(format!("S{i}").as_str(), 1);
        }
        let t = gr_table(&b.build().unwrap()).unwrap();
        assert_eq!(t.gr_chain, vec![c(&[1])]);
        assert_eq!(t.blocks[&c(&[1])].len(), 5);
    }

    #[test]
    fn bruteforce_guard() {
        let mut b = CategorySpec::builder("big");
        for i in 0..21 {
            b = b.indecomposable(format!("X{i}").as_str(), i + 1);
        }
        for i in 0..20 {
            b = b.inflation(format!("X{i}").as_str(), obj([format!("X{}", i + 1).as_str()]));
        }
        let spec = b.build().unwrap();
        assert!(matches!(
            gr_measure_bruteforce(&spec, &"X20".into()),
            Err(MeasureError::GuardExceeded { size: 21, limit: 20 })
        ));
        // small down-sets are fine in a large category
        assert_eq!(gr_measure_bruteforce(&spec, &"X1".into()).unwrap(), c(&[1, 2]));
    }

    #[test]
    fn undeclared_object() {
        let spec = CategorySpec::builder("s").indecomposable("M", 1).build().unwrap();
        assert!(matches!(
            gr_measure(&spec, &"Q".into()),
            Err(MeasureError::UndeclaredId(_))
        ));
    }
}
