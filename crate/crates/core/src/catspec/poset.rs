use thiserror::Error;

use super::{CategorySpec, IndecId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("subobject relation is not antisymmetric: `{x}` <= `{y}` and `{y}` <= `{x}`")]
    Antisymmetry { x: String, y: String },
    #[error("`{sub}` < `{sup}` but theta {theta_sub} >= {theta_sup}")]
    NonMonotone {
        sub: String,
        sup: String,
        theta_sub: u32,
        theta_sup: u32,
    },
}

/// Square boolean relation stored as bitset rows.
#[derive(Debug, Clone)]
pub(crate) struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Relation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn close_transitively(&mut self) {
        for k in 0..self.n {
            let row_k: Vec<u64> = self.bits[k * self.words..(k + 1) * self.words].to_vec();
            for i in 0..self.n {
                if self.get(i, k) {
                    let row_i = &mut self.bits[i * self.words..(i + 1) * self.words];
                    for (a, b) in row_i.iter_mut().zip(&row_k) {
                        *a |= *b;
                    }
                }
            }
        }
    }
}

/// Reflexive-transitive closure of the declared inflations between
/// indecomposables. Inflations into decomposable targets are ignored.
pub(crate) fn subobject_closure(spec: &CategorySpec) -> Relation {
    let n = spec.len();
    let mut rel = Relation::new(n);
    for i in 0..n {
        rel.set(i, i);
    }
    for inf in spec.inflations() {
        if let Some(target) = inf.target.as_indecomposable() {
            let (x, y) = (spec.index_of(&inf.sub), spec.index_of(target));
            if let (Some(x), Some(y)) = (x, y) {
                rel.set(x, y);
            }
        }
    }
    rel.close_transitively();
    rel
}

/// The poset `(ind A, ≤)` where `X ≤ Y` iff a Θ-inflation `X ↣ Y` exists.
#[derive(Debug, Clone)]
pub struct SubobjectPoset {
    leq: Relation,
    proper: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl SubobjectPoset {
    pub fn len(&self) -> usize {
        self.leq.n
    }

    pub fn is_empty(&self) -> bool {
        self.leq.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq.get(x, y)
    }

    /// Indices of the proper subobjects of `x`, ordered by length.
    pub fn proper_subobjects(&self, x: usize) -> &[usize] {
        &self.proper[x]
    }

    /// All indices ordered by length (ties by declaration order). Every
    /// proper subobject precedes the objects containing it.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn proper_subobject_ids<'a>(&self, spec: &'a CategorySpec, x: &IndecId) -> Option<Vec<&'a IndecId>> {
        let i = spec.index_of(x)?;
        Some(self.proper[i].iter().map(|&j| spec.id_at(j)).collect())
    }
}

/// Builds the subobject poset, rejecting closures that are not
/// antisymmetric or not strictly Θ-monotone.
pub fn subobject_poset(spec: &CategorySpec) -> Result<SubobjectPoset, PosetError> {
    let leq = subobject_closure(spec);
    let n = spec.len();
    for x in 0..n {
        for y in 0..n {
            if x == y || !leq.get(x, y) {
                continue;
            }
            if x < y && leq.get(y, x) {
                return Err(PosetError::Antisymmetry {
                    x: spec.id_at(x).to_string(),
                    y: spec.id_at(y).to_string(),
                });
            }
            if spec.theta_at(x) >= spec.theta_at(y) && !leq.get(y, x) {
                return Err(PosetError::NonMonotone {
                    sub: spec.id_at(x).to_string(),
                    sup: spec.id_at(y).to_string(),
                    theta_sub: spec.theta_at(x),
                    theta_sup: spec.theta_at(y),
                });
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (spec.theta_at(i), i));
    let proper = (0..n)
        .map(|y| {
            order
                .iter()
                .copied()
                .filter(|&x| x != y && leq.get(x, y))
                .collect()
        })
        .collect();
    Ok(SubobjectPoset { leq, proper, order })
}
