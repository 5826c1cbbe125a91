#![allow(dead_code)]

use grcat_core::generator::{generate_an, Fixture};
use grcat_core::{obj, CategorySpec, IndecId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixtures() -> Vec<CategorySpec> {
    let mut out = vec![Fixture::FinalExample.build().unwrap()];
    for w in 1..=3 {
        out.push(Fixture::DbWindow(w).build().unwrap());
    }
    out
}

pub fn an_specs(max: usize) -> Vec<CategorySpec> {
    (1..=max).map(|n| generate_an(n).unwrap()).collect()
}

/// A valid spec with at most `max` indecomposables: lengths in 1..=5,
/// inflations only from shorter to longer objects, a sprinkling of
/// inflations into sums and split conflations.
pub fn random_spec(rng: &mut ChaCha8Rng, max: usize) -> CategorySpec {
    let n = rng.gen_range(1..=max);
    let thetas: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
    let id = |i: usize| format!("X{i}");
    let mut b = CategorySpec::builder("random");
    for (i, &t) in thetas.iter().enumerate() {
        b = b.indecomposable(id(i).as_str(), t);
    }
    let density: f64 = rng.gen_range(0.1..0.7);
    for x in 0..n {
        for y in 0..n {
            if thetas[x] < thetas[y] && rng.gen_bool(density) {
                b = b.inflation(id(x).as_str(), obj([id(y)]));
                b = b.hom(id(x).as_str(), id(y).as_str(), 1);
            }
        }
        if n > 1 && rng.gen_bool(0.3) {
            let (p, q) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if thetas[p] + thetas[q] > thetas[x] {
                b = b.inflation(id(x).as_str(), obj([id(p), id(q)]));
            }
        }
    }
    for _ in 0..rng.gen_range(0..4) {
        let (p, q) = (rng.gen_range(0..n), rng.gen_range(0..n));
        b = b.conflation(obj([id(p)]), obj([id(p), id(q)]), obj([id(q)]), true);
    }
    b.build().unwrap()
}

pub fn ids(names: &[&str]) -> std::collections::BTreeSet<IndecId> {
    names.iter().map(|&s| IndecId::from(s)).collect()
}
