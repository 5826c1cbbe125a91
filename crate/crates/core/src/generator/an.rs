//! Module categories of `1 → 2 → … → n` over the two-element field.

use std::collections::BTreeSet;

use super::rep::{euler_form, ext_dim_bruteforce, has_injection, hom_dim, ExtCoordinates, MatrixRep};
use super::GeneratorError;
use crate::catspec::{CategorySpec, Conflation, IndecId, Metadata, ObjectRef};

/// Largest `n` accepted by [`generate_an`].
pub const AN_GUARD: usize = 6;

/// Cap on the total length of the end terms of enumerated conflations.
pub const AN_THETA_CAP: usize = 6;

/// Largest `n` for which Ext is cross-checked against brute force during
/// generation.
pub const AN_CROSS_CHECK: usize = 3;

/// An interval module `[a,b]`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalModule {
    pub a: usize,
    pub b: usize,
}

impl IntervalModule {
    pub fn theta(self) -> u32 {
        (self.b - self.a + 1) as u32
    }

    pub fn id(self) -> IndecId {
        IndecId::from(format!("[{},{}]", self.a, self.b).as_str())
    }

    pub fn rep(self, n: usize) -> MatrixRep {
        MatrixRep::interval(n, self.a, self.b)
    }
}

/// All intervals ordered by length, then by start.
pub fn intervals(n: usize) -> Vec<IntervalModule> {
    let mut v: Vec<IntervalModule> = (1..=n)
        .flat_map(|a| (a..=n).map(move |b| IntervalModule { a, b }))
        .collect();
    v.sort_by_key(|m| (m.theta(), m.a));
    v
}

/// Nonzero multisets of indices into `thetas` with total at most `bound`,
/// each sorted ascending.
pub(crate) fn multisets(thetas: &[u32], bound: u32) -> Vec<Vec<usize>> {
    fn go(thetas: &[u32], start: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..thetas.len() {
            if thetas[i] <= left {
                cur.push(i);
                out.push(cur.clone());
                go(thetas, i, left - thetas[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(thetas, 0, bound, &mut Vec::new(), &mut out);
    out
}

pub fn generate_an(n: usize) -> Result<CategorySpec, GeneratorError> {
    generate_an_with_guard(n, AN_GUARD)
}

/// `mod kA_n`: interval modules with composition length as Θ, Hom from the
/// commuting-square equations, Ext from the Euler form, and every short
/// exact sequence with total length at most `min(n + 2, max(n, 6))`. The bound is
/// at least `n`, so every indecomposable keeps all of its filtrations.
pub fn generate_an_with_guard(n: usize, guard: usize) -> Result<CategorySpec, GeneratorError> {
    if n == 0 || n > guard {
        return Err(GeneratorError::GuardExceeded {
            what: "n".into(),
            value: n,
            limit: guard,
        });
    }
    let bound = (n + 2).min(AN_THETA_CAP.max(n)) as u32;
    let mods = intervals(n);
    let reps: Vec<MatrixRep> = mods.iter().map(|m| m.rep(n)).collect();
    let ids: Vec<IndecId> = mods.iter().map(|m| m.id()).collect();
    let thetas: Vec<u32> = mods.iter().map(|m| m.theta()).collect();

    let mut b = CategorySpec::builder(format!("A{n}")).metadata(Metadata {
        description: Some(format!(
            "mod kA_{n} for the linear orientation 1 -> ... -> {n} over GF(2); \
             conflations: all short exact sequences of total length <= {bound}"
        )),
        complete: true,
        models_infinite: false,
        theta_bound: Some(bound),
    });
    for (id, &t) in ids.iter().zip(&thetas) {
        b = b.indecomposable(id.clone(), t);
    }
    b = b.with_ext();
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            let h = hom_dim(x, y);
            if h != usize::from(i == j) {
                b = b.hom(ids[i].clone(), ids[j].clone(), h as u32);
            }
            // ext[i][j] = dim Ext(X_i, X_j)
            let e = h as i64 - euler_form(x.dims(), y.dims());
            if n <= AN_CROSS_CHECK {
                let brute = ext_dim_bruteforce(x, y) as i64;
                if brute != e {
                    return Err(GeneratorError::CrossCheck(format!(
                        "Ext({}, {}): Euler form gives {e}, enumeration gives {brute}",
                        ids[i], ids[j]
                    )));
                }
            }
            if e != 0 {
                b = b.ext(ids[i].clone(), ids[j].clone(), e as u32);
            }
        }
    }

    let index_of = |m: (usize, usize)| {
        mods.iter()
            .position(|x| (x.a, x.b) == m)
            .expect("decomposition yields intervals")
    };
    let object = |idx: &[usize]| -> ObjectRef { idx.iter().map(|&i| ids[i].clone()).collect() };
    let sum = |idx: &[usize]| -> MatrixRep {
        idx.iter()
            .fold(MatrixRep::zero(n), |acc, &i| acc.direct_sum(&reps[i]))
    };

    let sets = multisets(&thetas, bound - 1);
    let weight = |s: &[usize]| -> u32 { s.iter().map(|&i| thetas[i]).sum() };
    let sums: Vec<MatrixRep> = sets.iter().map(|s| sum(s)).collect();
    let mut conflations: BTreeSet<Conflation> = BTreeSet::new();
    for (ai, a_set) in sets.iter().enumerate() {
        for (ci, c_set) in sets.iter().enumerate() {
            if weight(a_set) + weight(c_set) > bound {
                continue;
            }
            let coords = ExtCoordinates::new(&sums[ci], &sums[ai]);
            for x in coords.coset_representatives() {
                let mut middle: Vec<usize> =
                    coords.middle(&x).decompose().into_iter().map(index_of).collect();
                middle.sort_unstable();
                conflations.insert(Conflation {
                    a: object(a_set),
                    b: object(&middle),
                    c: object(c_set),
                    stable: true,
                });
            }
        }
    }
    for conf in conflations {
        b = b.conflation(conf.a, conf.b, conf.c, conf.stable);
    }

    // inflations into every target of length up to the bound
    let targets = multisets(&thetas, bound);
    for (x, xr) in reps.iter().enumerate() {
        for t in &targets {
            if weight(t) <= thetas[x] || (t.len() == 1 && t[0] == x) {
                continue;
            }
            if has_injection(xr, &sum(t)) {
                b = b.inflation(ids[x].clone(), object(t));
            }
        }
    }

    b.build().map_err(GeneratorError::Spec)
}
